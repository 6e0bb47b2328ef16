//! Entanglement witnesses and CHSH-type Bell analysis for two qubits.

mod bounds;
mod chsh;
mod witness;

pub use bounds::{gisin_thresholds, verstraete_wolf_bounds, GisinThresholds};
pub use chsh::{
    chsh_maximize, chsh_operator, chsh_value, correlation_matrix, horodecki_bmax, ChshOptimum,
    ChshSetting,
};
pub use witness::{ewi_eval, optimal_witness, witness_projector, Witness};
