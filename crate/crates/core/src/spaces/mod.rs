//! Function spaces on the disc: Hardy, harmonic Hardy and weighted Bergman.

pub mod analytic;
pub mod bergman;
pub mod harmonic;
pub mod outer;
pub mod poisson;

pub use analytic::{hardy_norm, integral_mean, Analytic, IntegralMeanParams, TaylorFn};
pub use bergman::{bergman_norm, bergman_norm_harmonic, RadialWeight, DEFAULT_RADIAL_NODES};
pub use harmonic::{Atom, HarmonicFn};
pub use outer::{outer_function, OuterFn};
pub use poisson::{harmonic_measure_arc, harmonic_measure_arc_at, poisson_kernel, poisson_profile, poisson_samples};
