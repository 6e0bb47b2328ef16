//! Unitaries that change the factorization, the constructive switching
//! procedures, and local filtering for contrast.

mod constructions;
mod filter;
mod registry;
mod switch;

pub use constructions::{
    apply_on_first_pair, constrained_entangle, ghz_split_unitary, pure_to_maxent,
    pure_to_product, separabilize, weylize, ConstrainedOutcome,
};
pub use filter::{apply_filter, gisin_filter, gisin_unitary_family, LocalFilter};
pub use registry::{named_switch, SWITCH_NAMES};
pub use switch::{
    algebra_image, conjugate, ghz_entangler, narnhofer_unitary, u1_ghz, u2_ghz, u_switch, u_theta,
    u_tilde_theta, FactorizationSwitch, UNITARITY_TOL,
};
