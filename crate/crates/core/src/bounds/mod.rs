//! Closed-form bounds, witness verifiers, the optimizers that reproduce the
//! headline constants, and certificates recording each check.

pub mod certificate;
pub mod closed_form;
pub mod concentration;
pub mod optimize;
pub mod transfer;
pub mod witness;

pub use certificate::{BoundCertificate, Relation};
pub use closed_form::{
    interpolation_bound, sharp_radial_integral, sharp_szr_constant, thm1_measure_lower_bound, thm1_objective,
    thm2_f0_upper_bound,
};
pub use optimize::{optimize_a1, optimize_h1_bshift, optimize_h1_szop, Argument, Optimum};
pub use transfer::{
    bergman_bshift_transfer_check, bergman_transfer_check, proven_upper_bound, A1_SZOP_BOUND, H1_BSHIFT_BOUND,
    H1_SZOP_BOUND,
};
pub use witness::{verify_a1_witness, verify_h1_bshift_witness, verify_h1_szop_witness};
