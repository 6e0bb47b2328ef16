//! Parameter grids `START:STOP:STEP` with optional multiples of `pi`.

use std::f64::consts::PI;
use std::str::FromStr;

use crate::error::CliError;

/// Points `start, start + step, …` up to `stop` inclusive.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Grid {
    pub fn single(x: f64) -> Self {
        Self {
            start: x,
            stop: x,
            step: 1.0,
        }
    }

    pub fn points(&self) -> Vec<f64> {
        // the last point is snapped to `stop` when rounding leaves it a hair short
        let n = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=n)
            .map(|i| {
                let x = self.start + i as f64 * self.step;
                if (x - self.stop).abs() < 1e-9 * self.step {
                    self.stop
                } else {
                    x
                }
            })
            .collect()
    }
}

/// Parses `1.5`, `pi`, `pi/4`, `3pi/8`, `3*pi/8` or `-pi/2`.
pub fn parse_value(text: &str) -> Result<f64, CliError> {
    let t = text.trim();
    let bad = || CliError::Usage(format!("'{text}' is not a number or multiple of pi"));
    if let Ok(x) = t.parse::<f64>() {
        return if x.is_finite() { Ok(x) } else { Err(bad()) };
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let coef = match num.strip_suffix("pi").map(|c| c.trim_end_matches('*')) {
        Some("") => 1.0,
        Some("-") => -1.0,
        Some(c) => c.parse::<f64>().map_err(|_| bad())?,
        None => return Err(bad()),
    };
    let den = match den {
        Some(d) => d.parse::<f64>().map_err(|_| bad())?,
        None => 1.0,
    };
    if den == 0.0 {
        return Err(bad());
    }
    Ok(coef * PI / den)
}

impl FromStr for Grid {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [x] => Ok(Grid::single(parse_value(x)?)),
            [a, b, c] => {
                let grid = Grid {
                    start: parse_value(a)?,
                    stop: parse_value(b)?,
                    step: parse_value(c)?,
                };
                if grid.step <= 0.0 {
                    return Err(CliError::Usage(format!("grid '{s}': step must be positive")));
                }
                if grid.stop < grid.start {
                    return Err(CliError::Usage(format!("grid '{s}': stop is below start")));
                }
                Ok(grid)
            }
            _ => Err(CliError::Usage(format!(
                "grid '{s}' must be VALUE or START:STOP:STEP"
            ))),
        }
    }
}
