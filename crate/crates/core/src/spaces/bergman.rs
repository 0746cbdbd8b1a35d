//! Radial weights and weighted Bergman norms.

use std::fmt;
use std::sync::Arc;

use gauss_quad::GaussLegendre;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::spaces::analytic::Analytic;
use crate::spaces::harmonic::HarmonicFn;

pub const DEFAULT_RADIAL_NODES: usize = 512;

type WeightFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A radial weight `w(r)` on `[0, 1)` together with the radial quadrature
/// used to integrate against `2r w(r) dr`.
#[derive(Clone)]
pub struct RadialWeight {
    label: String,
    w: WeightFn,
    monotone_increasing: bool,
    /// `(r_i, 2 r_i w(r_i) q_i)` with Gauss–Legendre nodes on `(0, 1)`.
    nodes: Vec<(f64, f64)>,
    total_mass: f64,
}

impl fmt::Debug for RadialWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialWeight")
            .field("label", &self.label)
            .field("monotone_increasing", &self.monotone_increasing)
            .field("nodes", &self.nodes.len())
            .field("total_mass", &self.total_mass)
            .finish()
    }
}

impl RadialWeight {
    pub fn new(
        label: impl Into<String>,
        w: impl Fn(f64) -> f64 + Send + Sync + 'static,
        monotone_increasing: bool,
        radial_nodes: usize,
    ) -> Result<Self> {
        let rule = GaussLegendre::new(radial_nodes.max(2)).map_err(|_| Error::OutOfRange {
            name: "radial nodes",
            value: radial_nodes as f64,
            range: "[2, ∞)",
        })?;
        let mut nodes: Vec<(f64, f64)> = Vec::with_capacity(radial_nodes);
        for &(x, q) in rule.as_node_weight_pairs() {
            let r = 0.5 * (x + 1.0);
            let wr = w(r);
            if !(wr.is_finite() && wr >= 0.0) {
                return Err(Error::OutOfRange {
                    name: "w(r)",
                    value: wr,
                    range: "[0, ∞)",
                });
            }
            nodes.push((r, 2.0 * r * wr * 0.5 * q));
        }
        nodes.sort_by(|a, b| a.0.total_cmp(&b.0));
        let total_mass: f64 = nodes.iter().map(|n| n.1).sum();
        if !total_mass.is_finite() || total_mass <= 0.0 {
            return Err(Error::ZeroNorm);
        }
        Ok(Self {
            label: label.into(),
            w: Arc::new(w),
            monotone_increasing,
            nodes,
            total_mass,
        })
    }

    /// `w ≡ 1`: normalized area measure.
    pub fn uniform(radial_nodes: usize) -> Result<Self> {
        Self::new("1", |_| 1.0, true, radial_nodes)
    }

    /// `w(r) = r^k`, increasing for `k ≥ 0`.
    pub fn power(k: f64, radial_nodes: usize) -> Result<Self> {
        Self::new(format!("r^{k}"), move |r| r.powf(k), k >= 0.0, radial_nodes)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, r: f64) -> f64 {
        (self.w)(r)
    }

    pub fn is_monotone_increasing(&self) -> bool {
        self.monotone_increasing
    }

    /// `∫₀¹ 2r w(r) dr`.
    pub fn total_mass(&self) -> f64 {
        self.total_mass
    }

    pub fn nodes(&self) -> &[(f64, f64)] {
        &self.nodes
    }

    /// `∫₀¹ g(r) 2r w(r) dr`. Node evaluations run in parallel and are summed
    /// in node order, so the result does not depend on the thread count.
    pub fn integrate<F>(&self, g: F) -> Result<f64>
    where
        F: Fn(f64) -> Result<f64> + Sync,
    {
        let values: Vec<f64> = self
            .nodes
            .par_iter()
            .map(|&(r, q)| g(r).map(|v| v * q))
            .collect::<Result<_>>()?;
        Ok(values.iter().sum())
    }
}

fn check_finite_p(p: f64) -> Result<()> {
    if p.is_infinite() {
        return Err(Error::Unsupported("Bergman norm with p = ∞".into()));
    }
    if p.is_nan() || p <= 0.0 {
        return Err(Error::BadExponent(p));
    }
    Ok(())
}

/// `‖f‖_{A^p(w)} = (∫₀¹ M_p^p(r, f) 2r w(r) dr)^{1/p}`.
pub fn bergman_norm(f: &dyn Analytic, p: f64, w: &RadialWeight, n: usize) -> Result<f64> {
    check_finite_p(p)?;
    let s = w.integrate(|r| Ok(f.on_circle(r, n)?.lp_norm(p)?.powf(p)))?;
    Ok(s.powf(1.0 / p))
}

/// Harmonic counterpart of [`bergman_norm`], with means taken from the
/// Poisson extension.
pub fn bergman_norm_harmonic(u: &HarmonicFn, p: f64, w: &RadialWeight) -> Result<f64> {
    check_finite_p(p)?;
    let s = w.integrate(|r| Ok(u.poisson_extend(r)?.lp_norm(p)?.powf(p)))?;
    Ok(s.powf(1.0 / p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::analytic::TaylorFn;
    use num_complex::Complex64;

    #[test]
    fn closed_form_norms() {
        let w = RadialWeight::uniform(DEFAULT_RADIAL_NODES).unwrap();
        assert!((w.total_mass() - 1.0).abs() < 1e-13);
        let one = TaylorFn::constant(Complex64::new(1.0, 0.0));
        for p in [0.5, 1.0, 2.0, 3.0] {
            assert!((bergman_norm(&one, p, &w, 64).unwrap() - 1.0).abs() < 1e-12);
        }
        let z = TaylorFn::monomial(1);
        assert!((bergman_norm(&z, 2.0, &w, 64).unwrap() - 0.5f64.sqrt()).abs() < 1e-8);
        assert!((bergman_norm(&z, 1.0, &w, 64).unwrap() - 2.0 / 3.0).abs() < 1e-8);
    }

    #[test]
    fn weighted_mass() {
        // ∫ 2r · r² dr = 1/2
        let w = RadialWeight::power(2.0, 64).unwrap();
        assert!((w.total_mass() - 0.5).abs() < 1e-13);
        assert!(w.is_monotone_increasing());
        assert!(!RadialWeight::power(-0.5, 64).unwrap().is_monotone_increasing());
    }

    #[test]
    fn rejects_infinite_p_and_negative_weight() {
        let w = RadialWeight::uniform(16).unwrap();
        assert!(bergman_norm(&TaylorFn::monomial(1), f64::INFINITY, &w, 32).is_err());
        assert!(RadialWeight::new("neg", |r| r - 0.5, false, 16).is_err());
    }

    #[test]
    fn harmonic_constant_norm() {
        let w = RadialWeight::uniform(32).unwrap();
        let u = HarmonicFn::constant(64, -2.0).unwrap();
        assert!((bergman_norm_harmonic(&u, 1.0, &w).unwrap() - 2.0).abs() < 1e-12);
    }
}
