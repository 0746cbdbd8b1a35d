//! Verifiers for the witness parameters behind the headline constants.

use super::certificate::{BoundCertificate, Relation};
use super::closed_form::{a1_lhs, a1_rhs, thm1_objective, thm2_f0_upper_bound, thm2_in_stated_range};
use crate::error::{Error, Result};

/// Width of the band around equality inside which witnesses pass: the
/// published constants are rounded to six digits, which does not determine
/// the sign of a margin below this size.
pub const WITNESS_BAND: f64 = 1e-4;

/// `H¹` bound for `𝓑`: the argument is contradicted when
/// `α/β ≤ g(γ)` at `ε = α + β < 1/4`.
pub fn verify_h1_szop_witness(alpha: f64, beta: f64, gamma: f64) -> Result<BoundCertificate> {
    if !(alpha > 0.0 && beta > 0.0) {
        return Err(Error::OutOfRange {
            name: "alpha, beta",
            value: alpha.min(beta),
            range: "(0, ∞)",
        });
    }
    let eps = alpha + beta;
    let rhs = thm1_objective(eps, gamma)?;
    Ok(szop_certificate(alpha, beta, gamma, rhs))
}

pub(crate) fn szop_certificate(alpha: f64, beta: f64, gamma: f64, rhs: f64) -> BoundCertificate {
    BoundCertificate::new("h1-szop", alpha / beta, rhs, Relation::Le, WITNESS_BAND)
        .with_param("alpha", alpha)
        .with_param("beta", beta)
        .with_param("gamma", gamma)
        .with_param("eps", alpha + beta)
        .flag_boundary(WITNESS_BAND)
}

/// `H¹` bound for `B`: contradiction when `1 − α ≥ thm2(α + β, α/β)`.
pub fn verify_h1_bshift_witness(alpha: f64, beta: f64) -> Result<BoundCertificate> {
    if !(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0) {
        return Err(Error::OutOfRange {
            name: "alpha, beta",
            value: if alpha > 0.0 && alpha < 1.0 { beta } else { alpha },
            range: "(0, 1)",
        });
    }
    if alpha >= beta {
        return Err(Error::OutOfRange {
            name: "alpha/beta",
            value: alpha / beta,
            range: "(0, 1)",
        });
    }
    let (eps, delta) = (alpha + beta, alpha / beta);
    let rhs = thm2_f0_upper_bound(eps, delta)?;
    let mut c = BoundCertificate::new("h1-bshift", 1.0 - alpha, rhs, Relation::Ge, WITNESS_BAND)
        .with_param("alpha", alpha)
        .with_param("beta", beta)
        .with_param("eps", eps)
        .with_param("delta", delta)
        .flag_boundary(WITNESS_BAND);
    if !thm2_in_stated_range(eps, delta) {
        c = c.with_flag("outside-stated-range");
    }
    Ok(c)
}

/// `A¹` bound for `𝓑` with increasing weight: contradiction when
/// `lhs(α, β) > α/(2β)` (strict).
pub fn verify_a1_witness(alpha: f64, beta: f64) -> Result<BoundCertificate> {
    let lhs = a1_lhs(alpha, beta)?;
    let rhs = a1_rhs(alpha, beta)?;
    let mut c = BoundCertificate::strict("bergman-a1", lhs, rhs, Relation::Ge)
        .with_param("alpha", alpha)
        .with_param("beta", beta);
    if beta >= 0.5 {
        c = c.with_flag("outside-stated-range");
    }
    Ok(c)
}
