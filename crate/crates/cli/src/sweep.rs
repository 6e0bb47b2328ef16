//! Parameter sweeps over the named state families.

use rayon::prelude::*;

use factorlab_core::measures::{concurrence, kz_ball_member, mixedness, ppt_check, purity};
use factorlab_core::states::{bell_state, ghz_traced, gisin, rho_theta, werner, BellState, DensityMatrix};
use factorlab_core::transforms::{
    apply_filter, conjugate, ghz_entangler, gisin_filter, gisin_unitary_family, u_switch,
};
use factorlab_core::witness_bell::{
    ewi_eval, horodecki_bmax, optimal_witness, verstraete_wolf_bounds,
};
use factorlab_core::Error;

use crate::classify::ppt_label;
use crate::error::CliResult;
use crate::grid::Grid;
use crate::table::{Cell, Row};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    Theta,
    Lambda,
    Alpha,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::Theta => "theta",
            Param::Lambda => "lambda",
            Param::Alpha => "alpha",
        }
    }
}

pub struct Family {
    pub name: &'static str,
    /// Grid parameters with their default grids, in row order.
    pub params: &'static [(Param, &'static str)],
    pub outputs: &'static [&'static str],
    pub default_outputs: &'static [&'static str],
}

const GISIN_OUTPUTS: &[&str] = &[
    "C",
    "C_filtered",
    "C_unitary",
    "purity",
    "purity_filtered",
    "purity_unitary",
    "bmax",
    "bmax_filtered",
    "bmax_unitary",
    "vw_lower",
    "vw_upper",
];

pub const FAMILIES: &[Family] = &[
    Family {
        name: "rho_theta",
        params: &[(Param::Theta, "0:pi/2:pi/200")],
        outputs: &["C", "C_after_u_switch", "purity", "mixedness", "ppt", "bmax"],
        default_outputs: &["C", "C_after_u_switch"],
    },
    Family {
        name: "ghz_traced",
        params: &[(Param::Theta, "0:pi/2:pi/200")],
        outputs: &["C", "C_after_u12", "C_after_u_switch", "purity", "mixedness"],
        default_outputs: &["C_after_u12", "C_after_u_switch", "mixedness"],
    },
    Family {
        name: "werner",
        params: &[(Param::Alpha, "0:1:0.01")],
        outputs: &[
            "C",
            "ppt",
            "min_pt_eigenvalue",
            "bmax",
            "purity",
            "kz_member",
            "witness",
            "witness_after_u_switch",
        ],
        default_outputs: &["C", "ppt", "min_pt_eigenvalue", "bmax"],
    },
    Family {
        name: "gisin",
        params: &[(Param::Lambda, "0:1:0.01"), (Param::Theta, "0.35")],
        outputs: GISIN_OUTPUTS,
        default_outputs: &["C", "C_filtered", "bmax", "bmax_filtered"],
    },
    Family {
        name: "gisin_compare",
        params: &[(Param::Lambda, "0:1:0.01"), (Param::Theta, "0.35")],
        outputs: GISIN_OUTPUTS,
        default_outputs: &["C", "C_filtered", "C_unitary"],
    },
];

fn names(list: &[&str]) -> String {
    list.join(", ")
}

pub fn family(name: &str) -> CliResult<&'static Family> {
    FAMILIES.iter().find(|f| f.name == name).ok_or_else(|| {
        Error::UnknownName {
            kind: "sweep family",
            name: name.to_string(),
            valid: names(&FAMILIES.iter().map(|f| f.name).collect::<Vec<_>>()),
        }
        .into()
    })
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepSpec {
    pub family: String,
    pub theta: Option<Grid>,
    pub lambda: Option<Grid>,
    pub alpha: Option<Grid>,
    pub outputs: Option<Vec<String>>,
}

impl SweepSpec {
    fn grid(&self, p: Param) -> Option<&Grid> {
        match p {
            Param::Theta => self.theta.as_ref(),
            Param::Lambda => self.lambda.as_ref(),
            Param::Alpha => self.alpha.as_ref(),
        }
    }
}

/// Values of the family's parameters at one grid point, in `params` order.
type Point = Vec<(Param, f64)>;

fn value(point: &Point, p: Param) -> f64 {
    point
        .iter()
        .find(|(q, _)| *q == p)
        .map(|(_, x)| *x)
        .expect("family parameters are on every point")
}

fn state(family: &str, point: &Point) -> factorlab_core::Result<DensityMatrix> {
    match family {
        "rho_theta" => Ok(rho_theta(value(point, Param::Theta))),
        "ghz_traced" => Ok(ghz_traced(value(point, Param::Theta))),
        "werner" => werner(value(point, Param::Alpha)),
        _ => gisin(value(point, Param::Lambda), value(point, Param::Theta)),
    }
}

fn output(family: &str, point: &Point, name: &str) -> factorlab_core::Result<Cell> {
    let rho = state(family, point)?;
    let c = |r: &DensityMatrix| concurrence(r).map(Cell::Num);
    let filtered = || -> factorlab_core::Result<DensityMatrix> {
        apply_filter(&rho, &gisin_filter(value(point, Param::Theta))?)
    };
    let unitary = || gisin_unitary_family(value(point, Param::Lambda), value(point, Param::Theta));
    let singlet_witness = || optimal_witness(&werner(1.0 / 3.0)?, &bell_state(BellState::PsiMinus));
    match name {
        "C" => c(&rho),
        "C_after_u_switch" => c(&conjugate(&rho, &u_switch())?),
        "C_after_u12" => c(&conjugate(&rho, &ghz_entangler(value(point, Param::Theta)))?),
        "C_filtered" => c(&filtered()?),
        "C_unitary" => c(&unitary()?),
        "purity" => Ok(purity(&rho).into()),
        "purity_filtered" => Ok(purity(&filtered()?).into()),
        "purity_unitary" => Ok(purity(&unitary()?).into()),
        "mixedness" => Ok(mixedness(&rho).into()),
        "ppt" => Ok(ppt_label(ppt_check(&rho).classification).into()),
        "min_pt_eigenvalue" => Ok(ppt_check(&rho).min_pt_eigenvalue.into()),
        "kz_member" => Ok(kz_ball_member(&rho).into()),
        "bmax" => Ok(horodecki_bmax(&rho)?.into()),
        "bmax_filtered" => Ok(horodecki_bmax(&filtered()?)?.into()),
        "bmax_unitary" => Ok(horodecki_bmax(&unitary()?)?.into()),
        "vw_lower" => Ok(verstraete_wolf_bounds(concurrence(&rho)?)?.0.into()),
        "vw_upper" => Ok(verstraete_wolf_bounds(concurrence(&rho)?)?.1.into()),
        "witness" => Ok(ewi_eval(&rho, &singlet_witness()?)?.into()),
        "witness_after_u_switch" => {
            Ok(ewi_eval(&conjugate(&rho, &u_switch())?, &singlet_witness()?)?.into())
        }
        _ => unreachable!("outputs are validated against the family"),
    }
}

fn grid_points(family: &Family, spec: &SweepSpec) -> CliResult<Vec<Point>> {
    let mut points: Vec<Point> = vec![Vec::new()];
    for &(param, default) in family.params {
        let grid = match spec.grid(param) {
            Some(g) => g.clone(),
            None => default.parse::<Grid>()?,
        };
        points = points
            .into_iter()
            .flat_map(|p| {
                grid.points().into_iter().map(move |x| {
                    let mut q = p.clone();
                    q.push((param, x));
                    q
                })
            })
            .collect();
    }
    Ok(points)
}

/// Evaluates the sweep. Grid points run in parallel; rows come back in grid
/// order, and the first failing point in that order decides the error.
pub fn run(spec: &SweepSpec) -> CliResult<Vec<Row>> {
    let family = family(&spec.family)?;
    for p in [Param::Theta, Param::Lambda, Param::Alpha] {
        if spec.grid(p).is_some() && !family.params.iter().any(|(q, _)| *q == p) {
            return Err(crate::error::CliError::Usage(format!(
                "family '{}' has no parameter '{}'",
                family.name,
                p.name()
            )));
        }
    }
    let outputs: Vec<String> = match &spec.outputs {
        Some(list) if !list.is_empty() => list.clone(),
        _ => family.default_outputs.iter().map(|s| s.to_string()).collect(),
    };
    for o in &outputs {
        if !family.outputs.contains(&o.as_str()) {
            return Err(Error::UnknownName {
                kind: "output",
                name: o.clone(),
                valid: names(family.outputs),
            }
            .into());
        }
    }
    let points = grid_points(family, spec)?;
    let rows: Vec<factorlab_core::Result<Row>> = points
        .par_iter()
        .map(|point| {
            let mut row = Row::new();
            for (p, x) in point {
                row.push(p.name(), *x);
            }
            for o in &outputs {
                row.push(o.as_str(), output(family.name, point, o)?);
            }
            Ok(row)
        })
        .collect();
    rows.into_iter()
        .collect::<factorlab_core::Result<Vec<Row>>>()
        .map_err(Into::into)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(row: &Row, name: &str) -> f64 {
        match row.get(name) {
            Some(Cell::Num(x)) => *x,
            other => panic!("{name}: {other:?}"),
        }
    }

    #[test]
    fn rho_theta_defaults() {
        let rows = run(&SweepSpec {
            family: "rho_theta".into(),
            ..Default::default()
        })
        .unwrap();
        assert_eq!(rows.len(), 101);
        for r in &rows {
            let t = num(r, "theta");
            assert!((num(r, "C") - (2.0 * t).sin()).abs() < 1e-8);
            assert!((num(r, "C_after_u_switch") - (2.0 * t).cos().abs()).abs() < 1e-8);
        }
    }

    #[test]
    fn gisin_grid_is_lambda_major() {
        let rows = run(&SweepSpec {
            family: "gisin".into(),
            lambda: Some("0.5:1:0.25".parse().unwrap()),
            theta: Some("0.2:0.3:0.1".parse().unwrap()),
            ..Default::default()
        })
        .unwrap();
        let pairs: Vec<(f64, f64)> = rows.iter().map(|r| (num(r, "lambda"), num(r, "theta"))).collect();
        assert_eq!(pairs.len(), 6);
        assert_eq!(pairs[0], (0.5, 0.2));
        assert_eq!(pairs[1].0, 0.5);
        assert_eq!(pairs[2].0, 0.75);
    }

    #[test]
    fn unknown_names() {
        let bad_family = run(&SweepSpec {
            family: "nope".into(),
            ..Default::default()
        });
        assert!(matches!(bad_family, Err(crate::error::CliError::Core(Error::UnknownName { .. }))));
        let bad_output = run(&SweepSpec {
            family: "werner".into(),
            outputs: Some(vec!["C_filtered".into()]),
            ..Default::default()
        });
        assert!(matches!(bad_output, Err(crate::error::CliError::Core(Error::UnknownName { .. }))));
        let bad_param = run(&SweepSpec {
            family: "werner".into(),
            theta: Some(Grid::single(0.1)),
            ..Default::default()
        });
        assert!(bad_param.is_err());
    }
}
