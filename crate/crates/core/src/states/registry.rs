use super::{
    bell_state, ghz_traced, gisin, narnhofer, rho_theta, tracial, weyl_basis_state, werner,
    BellState, DensityMatrix,
};
use crate::error::{Error, Result};

/// Names accepted by [`named_state`], with their argument lists.
pub const STATE_FAMILIES: &[(&str, &str)] = &[
    ("werner", "ALPHA"),
    ("gisin", "LAMBDA THETA"),
    ("bell", "psi+|psi-|phi+|phi-"),
    ("ghz-traced", "THETA"),
    ("narnhofer", ""),
    ("tracial", "D | D1 D2"),
    ("weyl", "K L D"),
    ("rho-theta", "THETA"),
];

fn valid_names() -> String {
    STATE_FAMILIES
        .iter()
        .map(|(n, _)| *n)
        .collect::<Vec<_>>()
        .join(", ")
}

fn arity(name: &str, args: &[String], expected: usize) -> Result<()> {
    if args.len() != expected {
        return Err(Error::Parse(format!(
            "state '{name}' takes {expected} argument(s), got {}",
            args.len()
        )));
    }
    Ok(())
}

fn real(arg: &str) -> Result<f64> {
    arg.parse::<f64>()
        .map_err(|_| Error::Parse(format!("'{arg}' is not a number")))
}

fn count(arg: &str) -> Result<usize> {
    arg.parse::<usize>()
        .map_err(|_| Error::Parse(format!("'{arg}' is not a nonnegative integer")))
}

/// Builds a state from a family name and its textual arguments.
pub fn named_state(name: &str, args: &[String]) -> Result<DensityMatrix> {
    match name {
        "werner" => {
            arity(name, args, 1)?;
            werner(real(&args[0])?)
        }
        "gisin" => {
            arity(name, args, 2)?;
            gisin(real(&args[0])?, real(&args[1])?)
        }
        "bell" => {
            arity(name, args, 1)?;
            Ok(bell_state(args[0].parse::<BellState>()?))
        }
        "ghz-traced" => {
            arity(name, args, 1)?;
            Ok(ghz_traced(real(&args[0])?))
        }
        "narnhofer" => {
            arity(name, args, 0)?;
            Ok(narnhofer())
        }
        "tracial" => match args.len() {
            1 => {
                let dim = count(&args[0])?;
                let d = (dim as f64).sqrt().round() as usize;
                let split = if d * d == dim { (d, d) } else { (dim, 1) };
                tracial(split)
            }
            2 => tracial((count(&args[0])?, count(&args[1])?)),
            n => Err(Error::Parse(format!(
                "state 'tracial' takes 1 or 2 arguments, got {n}"
            ))),
        },
        "weyl" => {
            arity(name, args, 3)?;
            let (k, l, d) = (count(&args[0])?, count(&args[1])?, count(&args[2])?);
            DensityMatrix::from_pure(&weyl_basis_state(k, l, d)?, (d, d))
        }
        "rho-theta" => {
            arity(name, args, 1)?;
            Ok(rho_theta(real(&args[0])?))
        }
        _ => Err(Error::UnknownName {
            kind: "state family",
            name: name.to_string(),
            valid: valid_names(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn every_family_builds() {
        let cases: &[(&str, &[&str])] = &[
            ("werner", &["0.5"]),
            ("gisin", &["0.8", "0.35"]),
            ("bell", &["psi-"]),
            ("ghz-traced", &["0.7"]),
            ("narnhofer", &[]),
            ("tracial", &["4"]),
            ("tracial", &["2", "3"]),
            ("weyl", &["1", "2", "3"]),
            ("rho-theta", &["0.2"]),
        ];
        for (name, a) in cases {
            named_state(name, &args(a)).unwrap();
        }
        assert_eq!(named_state("tracial", &args(&["9"])).unwrap().split(), (3, 3));
    }

    #[test]
    fn unknown_names_list_the_alternatives() {
        match named_state("wernr", &[]) {
            Err(Error::UnknownName { valid, .. }) => assert!(valid.contains("werner")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            named_state("werner", &args(&["x"])),
            Err(Error::Parse(_))
        ));
    }
}
