//! Validated density matrices and the named state families.

mod bloch;
mod density;
mod families;
mod io;
mod registry;

pub use bloch::{from_bloch, to_bloch, BlochForm};
pub use density::DensityMatrix;
pub use families::{
    bell_state, check_maxent_projector, ghz_theta_vector, ghz_traced, gisin, narnhofer,
    product_state, product_vector, psi_theta, rho_theta, tracial, weyl_basis_state, werner,
    werner_generalized, BellState,
};
pub use io::{parse_state_json, state_to_json, StateFile};
pub use registry::{named_state, STATE_FAMILIES};
