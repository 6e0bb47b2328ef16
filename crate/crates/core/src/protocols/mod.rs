//! Teleportation and entanglement swapping, with maximally entangled vectors
//! read as isometries between equal-dimension factors.

mod isometry;
mod swap;
mod teleport;

pub use isometry::{
    isometry_of_maxent, maxent_from_isometry, weyl_operator, Isometry, ISOMETRY_TOL, MAXENT_TOL,
};
pub use swap::{swap, swap_all, SwapRun};
pub use teleport::{
    teleport, teleport_all, teleport_via, BellMeasurementOutcome, TeleportRun, PROTOCOL_TOL,
};
