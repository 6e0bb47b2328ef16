//! Entanglement and separability of density matrices relative to a chosen
//! factorization of the operator algebra.
//!
//! Basis convention throughout: computational ordering `|00⟩, |01⟩, |10⟩, |11⟩`
//! with `↑ ≡ 0` and `↓ ≡ 1`; in a composite index the second factor runs
//! fastest.

pub mod error;
pub mod linalg;
pub mod measures;
pub mod protocols;
pub mod random;
pub mod states;
pub mod transforms;
pub mod witness_bell;

pub use error::{Error, Result};

/// Default tolerance for every predicate that takes one.
pub const DEFAULT_TOL: f64 = 1e-9;
