use super::constructions::{
    constrained_entangle, pure_to_maxent, pure_to_product, separabilize, weylize,
    ConstrainedOutcome,
};
use super::switch::{
    narnhofer_unitary, u1_ghz, u2_ghz, u_switch, u_theta, u_tilde_theta, FactorizationSwitch,
};
use crate::error::{Error, Result};
use crate::states::DensityMatrix;

/// Names accepted by [`named_switch`], with their arguments. The last five
/// are built from the state they are applied to.
pub const SWITCH_NAMES: &[(&str, &str)] = &[
    ("u", ""),
    ("u-theta", "THETA"),
    ("u-tilde-theta", "THETA"),
    ("u1-ghz", ""),
    ("u2-ghz", ""),
    ("narnhofer", ""),
    ("separabilize", ""),
    ("weylize", ""),
    ("constrained-entangle", ""),
    ("pure-to-product", ""),
    ("pure-to-maxent", ""),
];

fn valid_names() -> String {
    SWITCH_NAMES
        .iter()
        .map(|(n, _)| *n)
        .collect::<Vec<_>>()
        .join(", ")
}

fn no_args(name: &str, args: &[String]) -> Result<()> {
    if !args.is_empty() {
        return Err(Error::Parse(format!("transform '{name}' takes no arguments")));
    }
    Ok(())
}

fn theta_arg(name: &str, args: &[String]) -> Result<f64> {
    match args {
        [a] => a
            .parse::<f64>()
            .map_err(|_| Error::Parse(format!("'{a}' is not a number"))),
        _ => Err(Error::Parse(format!("transform '{name}' takes one argument THETA"))),
    }
}

fn two_qubit(rho: &DensityMatrix, s: FactorizationSwitch) -> Result<FactorizationSwitch> {
    rho.expect_split((2, 2))?;
    Ok(s)
}

/// The pure vector behind a rank-1 state.
fn pure_vector(rho: &DensityMatrix) -> Result<Vec<num_complex::Complex64>> {
    let spec = rho.spectrum();
    if (spec.max() - 1.0).abs() > crate::DEFAULT_TOL {
        return Err(Error::Malformed(format!(
            "transform needs a pure state, largest eigenvalue is {}",
            spec.max()
        )));
    }
    Ok(spec.vectors[0].clone())
}

/// Resolves a switch by name for the given state.
pub fn named_switch(name: &str, args: &[String], rho: &DensityMatrix) -> Result<FactorizationSwitch> {
    match name {
        "u" => {
            no_args(name, args)?;
            two_qubit(rho, u_switch())
        }
        "u-theta" => two_qubit(rho, u_theta(theta_arg(name, args)?)),
        "u-tilde-theta" => two_qubit(rho, u_tilde_theta(theta_arg(name, args)?)),
        "u1-ghz" => {
            no_args(name, args)?;
            two_qubit(rho, u1_ghz())
        }
        "u2-ghz" => {
            no_args(name, args)?;
            two_qubit(rho, u2_ghz())
        }
        "narnhofer" => {
            no_args(name, args)?;
            two_qubit(rho, narnhofer_unitary())
        }
        "separabilize" => {
            no_args(name, args)?;
            separabilize(rho)
        }
        "weylize" => {
            no_args(name, args)?;
            weylize(rho)
        }
        "constrained-entangle" => {
            no_args(name, args)?;
            match constrained_entangle(rho)? {
                ConstrainedOutcome::Entangling { switch, .. } => Ok(switch),
                ConstrainedOutcome::NotApplicable {
                    largest_eigenvalue,
                    bound,
                } => Err(Error::OutOfRange {
                    name: "largest eigenvalue",
                    value: largest_eigenvalue,
                    expected: if bound > 0.0 { "> 3/d^2" } else { "" },
                }),
            }
        }
        "pure-to-product" => {
            no_args(name, args)?;
            pure_to_product(&pure_vector(rho)?, rho.split())
        }
        "pure-to-maxent" => {
            no_args(name, args)?;
            pure_to_maxent(&pure_vector(rho)?, rho.split())
        }
        _ => Err(Error::UnknownName {
            kind: "transform",
            name: name.to_string(),
            valid: valid_names(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_state, tracial, werner, BellState};

    #[test]
    fn all_names_resolve() {
        let singlet = bell_state(BellState::PsiMinus);
        for (name, arg) in SWITCH_NAMES {
            let args: Vec<String> = if arg.is_empty() { vec![] } else { vec!["0.3".into()] };
            named_switch(name, &args, &singlet).unwrap();
        }
    }

    #[test]
    fn failures_are_reported() {
        let t = tracial((2, 2)).unwrap();
        assert!(named_switch("constrained-entangle", &[], &t).is_err());
        assert!(named_switch("pure-to-product", &[], &werner(0.5).unwrap()).is_err());
        assert!(matches!(
            named_switch("swap", &[], &t),
            Err(Error::UnknownName { .. })
        ));
    }
}
