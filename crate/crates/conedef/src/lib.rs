//! Rigorous interval numerics for effective hyperbolic Dehn filling and drilling.

pub mod constants;
pub mod gates;
pub mod error;
pub mod interval;
pub mod slopes;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use interval::{
    arith, bracket_root_monotone, prove_nonneg, Dec, Elem, Interval, IntervalBox, Monotonicity,
    Op, ProofResult, ProofStatus, ProveOptions, PI_IV,
};
pub use interval::elem;
