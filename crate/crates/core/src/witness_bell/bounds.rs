use std::f64::consts::SQRT_2;

use serde::Serialize;

use crate::error::{Error, Result};

/// `(max(1, √2 C), √(1 + C²))`: the range of maximal CHSH values compatible
/// with concurrence `C`.
pub fn verstraete_wolf_bounds(c: f64) -> Result<(f64, f64)> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::OutOfRange {
            name: "concurrence",
            value: c,
            expected: "0 <= C <= 1",
        });
    }
    Ok(((SQRT_2 * c).max(1.0), (1.0 + c * c).sqrt()))
}

/// Mixing weights `λ` above which Gisin states violate CHSH.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GisinThresholds {
    /// Smallest `λ` with `max{(2λ−1)² + λ² s², 2λ² s²} > 1`, `s = sin 2θ`,
    /// clamped to 1.
    pub unfiltered: f64,
    /// `1 / (1 + s(√2 − 1))`, the threshold after local filtering.
    pub filtered: f64,
    /// Set when the unfiltered value was clamped, i.e. no `λ ≤ 1` violates.
    pub unfiltered_clamped: bool,
}

/// The first branch crosses 1 at `λ = 4/(4 + s²)`, the second at
/// `λ = 1/(√2 s)`. The side condition `λ ≤ 1/(2 − s)` sometimes attached to
/// the second branch is not imposed; both branches are evaluated exactly.
pub fn gisin_thresholds(theta: f64) -> Result<GisinThresholds> {
    let s = (2.0 * theta).sin();
    if !(theta > 0.0 && theta < std::f64::consts::FRAC_PI_2) || s.abs() < 1e-12 {
        return Err(Error::OutOfRange {
            name: "theta",
            value: theta,
            expected: "0 < theta < pi/2",
        });
    }
    let first = 4.0 / (4.0 + s * s);
    let second = 1.0 / (SQRT_2 * s);
    let raw = first.min(second);
    Ok(GisinThresholds {
        unfiltered: raw.min(1.0),
        filtered: 1.0 / (1.0 + s * (SQRT_2 - 1.0)),
        unfiltered_clamped: raw > 1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vw_examples() {
        assert_eq!(verstraete_wolf_bounds(0.0).unwrap(), (1.0, 1.0));
        let (lo, hi) = verstraete_wolf_bounds(1.0).unwrap();
        assert!((lo - SQRT_2).abs() < 1e-15 && (hi - SQRT_2).abs() < 1e-15);
        let (lo, hi) = verstraete_wolf_bounds(0.75).unwrap();
        assert!((lo - 1.0607).abs() < 5e-5 && (hi - 1.25).abs() < 1e-15);
        assert!(verstraete_wolf_bounds(1.5).is_err());
    }

    #[test]
    fn thresholds_at_035() {
        let g = gisin_thresholds(0.35).unwrap();
        assert!((g.unfiltered - 0.9062).abs() < 5e-4);
        assert!((g.filtered - 0.7894).abs() < 5e-4);
        assert!(!g.unfiltered_clamped);
    }

    #[test]
    fn filtered_threshold_at_quarter_pi() {
        let g = gisin_thresholds(std::f64::consts::FRAC_PI_4).unwrap();
        assert!((g.filtered - 1.0 / SQRT_2).abs() < 1e-15);
        assert!(gisin_thresholds(0.0).is_err());
    }
}
