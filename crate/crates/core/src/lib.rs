//! Numerical certification of norm bounds for the backward shift
//! `B f = (f − f(0))/z` and the subtraction operator `𝓑 f = f − f(0)` on
//! Hardy, Bergman and harmonic function spaces of the unit disc.

pub mod bounds;
pub mod circlefn;
pub mod cli;
pub mod error;
pub mod operators;
pub mod rearrange;
pub mod seed;
pub mod spaces;
pub mod verify;

pub use circlefn::{BoundarySet, CircleFn, Sample, DEFAULT_GRID};
pub use error::{Error, Result};
