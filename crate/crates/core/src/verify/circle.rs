use rand::Rng;

use super::{random_real, sweep_summary, VerifySettings};
use crate::bounds::{BoundCertificate, Relation};
use crate::circlefn::BoundarySet;
use crate::error::Result;
use crate::seed::sweep;

/// `‖f∗g‖₁ ≤ ‖f‖₁‖g‖₁` and `mean(f∗g) = mean(f)·mean(g)`.
pub fn young_inequality(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "circlefn/young", 200, |rng| {
        let f = random_real(rng, 1024, -1.0, 1.0)?;
        let g = random_real(rng, 1024, -1.0, 1.0)?;
        let h = f.convolve(&g)?;
        let young = BoundCertificate::new(
            "young",
            h.lp_norm(1.0)?,
            f.lp_norm(1.0)? * g.lp_norm(1.0)?,
            Relation::Le,
            1e-12,
        );
        let mean = BoundCertificate::new("convolution-mean", h.mean(), f.mean() * g.mean(), Relation::Eq, 1e-12);
        Ok([young, mean])
    })?;
    Ok(sweep_summary(s, "young", certs.into_iter().flatten().collect()))
}

/// The decreasing rearrangement preserves every `L^p` norm.
pub fn rearrangement_norms(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "circlefn/rearrangement", 200, |rng| {
        let f = random_real(rng, 512, -2.0, 3.0)?;
        let star = f.decreasing_rearrangement();
        let p = [1.0, 2.0, 3.0, f64::INFINITY][rng.gen_range(0..4)];
        let sorted = star.samples().windows(2).all(|w| w[0] >= w[1]);
        let mut c = BoundCertificate::new("rearrangement-norm", star.lp_norm(p)?, f.lp_norm(p)?, Relation::Eq, 1e-12)
            .with_param("p", p);
        if !sorted {
            c.pass = false;
            c = c.with_flag("not-decreasing");
        }
        Ok(c)
    })?;
    Ok(sweep_summary(s, "rearrangement-norm", certs))
}

/// `∫_E f + ∫_{E^c} f = mean(f)` for random arcs `E`.
pub fn complement_split(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "circlefn/complement", 200, |rng| {
        let f = random_real(rng, 1024, -1.0, 1.0)?;
        let start = rng.gen_range(0.0..std::f64::consts::TAU);
        let e = BoundarySet::arc(1024, start, start + rng.gen_range(0.0..7.0));
        let split = f.integrate_over(&e)? + f.integrate_over(&e.complement())?;
        Ok(BoundCertificate::new("complement-split", split, f.mean(), Relation::Eq, 1e-12))
    })?;
    Ok(sweep_summary(s, "complement-split", certs))
}
