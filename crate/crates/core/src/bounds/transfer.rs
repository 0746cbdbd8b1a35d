//! Transfer of Hardy-space bounds to weighted Bergman spaces, and the table
//! of proven operator-norm upper bounds.

use super::certificate::{BoundCertificate, Relation};
use super::closed_form::{interpolation_bound, sharp_szr_constant};
use crate::error::{Error, Result};
use crate::operators::{multiply_by_z, ratio, Operator, Space, Subject, SubtractValue};
use crate::spaces::{bergman_norm, RadialWeight, TaylorFn};

/// `‖𝓑‖_{H¹} ≤ 1.952396`.
pub const H1_SZOP_BOUND: f64 = 1.952396;
/// `‖B‖_{H¹} ≤ 1.7047`.
pub const H1_BSHIFT_BOUND: f64 = 1.7047;
/// `‖𝓑‖_{A¹(μ)} ≤ 1.835` for increasing radial weights.
pub const A1_SZOP_BOUND: f64 = 1.835;

const SLACK: f64 = 1e-9;

/// Best proven `‖𝓑‖` on `H^p` (equal to `‖B‖` there for `p ≠ 1`).
fn hardy_szop_bound(p: f64) -> Result<f64> {
    if p == 1.0 {
        Ok(H1_SZOP_BOUND)
    } else {
        interpolation_bound(p)
    }
}

/// `‖𝓑f‖_{A^p(w)} ≤ K‖f‖_{A^p(w)}`, where `K` bounds `𝓑` on `H^p`.
pub fn bergman_transfer_check(f: &TaylorFn, p: f64, w: &RadialWeight, k: f64, grid: usize) -> Result<BoundCertificate> {
    let den = bergman_norm(f, p, w, grid)?;
    if den <= 0.0 {
        return Err(Error::ZeroNorm);
    }
    let num = bergman_norm(&f.subtract_value(), p, w, grid)?;
    Ok(BoundCertificate::new("bergman-transfer", num, k * den, Relation::Le, SLACK)
        .with_param("p", p)
        .with_param("K", k))
}

/// `‖Bf‖_{A¹(w)} ≤ 2K‖f‖_{A¹(w)}` for increasing `w`.
pub fn bergman_bshift_transfer_check(f: &TaylorFn, w: &RadialWeight, k: f64, grid: usize) -> Result<BoundCertificate> {
    if !w.is_monotone_increasing() {
        return Err(Error::Unsupported(format!("weight {} is not increasing", w.label())));
    }
    let den = bergman_norm(f, 1.0, w, grid)?;
    if den <= 0.0 {
        return Err(Error::ZeroNorm);
    }
    let r = ratio(Operator::BackwardShift, Subject::Analytic(f), &Space::Bergman { p: 1.0, weight: w.clone() }, grid)?;
    Ok(BoundCertificate::new("bergman-bshift-transfer", r * den, 2.0 * k * den, Relation::Le, SLACK)
        .with_param("p", 1.0)
        .with_param("K", k))
}

/// `‖zf‖_{A¹(w)} ≥ ½‖f‖_{A¹(w)}` for increasing `w`.
pub fn multiply_by_z_check(f: &TaylorFn, w: &RadialWeight, grid: usize) -> Result<BoundCertificate> {
    let lhs = bergman_norm(&multiply_by_z(f), 1.0, w, grid)?;
    let rhs = 0.5 * bergman_norm(f, 1.0, w, grid)?;
    Ok(BoundCertificate::new("multiply-by-z", lhs, rhs, Relation::Ge, SLACK))
}

/// Best proven upper bound on the norm of `op` on `space`, when one is
/// known.
pub fn proven_upper_bound(op: Operator, space: &Space) -> Option<f64> {
    match (op, space) {
        (Operator::BackwardShift, Space::Hardy(p)) if *p == 1.0 => Some(H1_BSHIFT_BOUND),
        (Operator::BackwardShift | Operator::Subtract, Space::Hardy(p)) => hardy_szop_bound(*p).ok(),
        (Operator::Subtract, Space::HarmonicH1) => Some(2.0),
        (Operator::SubtractAtRadius(r), Space::HarmonicH1) => sharp_szr_constant(r).ok(),
        (Operator::Subtract, Space::Bergman { p, weight }) if *p == 1.0 && weight.is_monotone_increasing() => {
            Some(A1_SZOP_BOUND)
        }
        (Operator::Subtract, Space::Bergman { p, .. }) => hardy_szop_bound(*p).ok(),
        (Operator::BackwardShift, Space::Bergman { p, weight }) if *p == 1.0 && weight.is_monotone_increasing() => {
            Some(2.0 * H1_SZOP_BOUND)
        }
        _ => None,
    }
}
