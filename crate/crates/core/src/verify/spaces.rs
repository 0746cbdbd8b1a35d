use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;

use super::{random_harmonic, random_poly, random_real, sweep_summary, VerifySettings, FINE_GRID};
use crate::bounds::{BoundCertificate, Relation};
use crate::error::Result;
use crate::seed::sweep;
use crate::spaces::{harmonic_measure_arc, integral_mean, poisson_kernel, IntegralMeanParams, OuterFn};

/// Harmonic measure of random arcs against midpoint quadrature of the
/// Poisson kernel on a fine grid.
pub fn harmonic_measure(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "spaces/harmonic-measure", 100, |rng| {
        let r = rng.gen_range(0.0..0.9);
        let gamma = rng.gen_range(0.0..TAU);
        let len = rng.gen_range(0.0..TAU);
        let h = len / FINE_GRID as f64;
        let quad = (0..FINE_GRID)
            .map(|k| poisson_kernel(r, gamma + (k as f64 + 0.5) * h))
            .sum::<Result<f64>>()?
            * h
            / TAU;
        let exact = harmonic_measure_arc(r, gamma, gamma + len)?;
        Ok(BoundCertificate::new("harmonic-measure", exact, quad, Relation::Eq, 1e-8)
            .with_param("r", r)
            .with_param("len", len))
    })?;
    Ok(sweep_summary(s, "harmonic-measure", certs))
}

/// `mean(u(r·)) = u(0)` for random harmonic functions.
pub fn mean_value(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "spaces/mean-value", 100, |rng| {
        let u = random_harmonic(rng, s.grid)?;
        let r = rng.gen_range(0.0..0.99);
        let m = u.poisson_extend(r)?.mean();
        Ok(BoundCertificate::new("mean-value", m, u.value_at_origin(), Relation::Eq, 1e-12).with_param("r", r))
    })?;
    Ok(sweep_summary(s, "mean-value", certs))
}

/// `M_p(r, f)` is non-decreasing in `r` for polynomials.
pub fn integral_mean_monotone(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "spaces/means", 100, |rng| {
        let f = random_poly(rng, 8)?;
        let p = [0.5, 1.0, 2.0, 4.0][rng.gen_range(0..4)];
        let means = (0..=10)
            .map(|k| integral_mean(&f, IntegralMeanParams::new(k as f64 / 10.0, p)?, 256))
            .collect::<Result<Vec<f64>>>()?;
        let worst = means.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        Ok(BoundCertificate::new("mean-monotone", worst, 0.0, Relation::Ge, 1e-12).with_param("p", p))
    })?;
    Ok(sweep_summary(s, "mean-monotone", certs))
}

/// `mean(log|F(r·)|) = log F(0)` for outer functions: `log|F|` is harmonic.
pub fn outer_log_mean(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "spaces/outer", 50, |rng| {
        let psi = random_real(rng, 1024, 0.05, 3.0)?;
        let outer = OuterFn::new(&psi)?;
        let r = rng.gen_range(0.0..0.9);
        let values = outer.circle_values(r)?;
        let log_mean = values.samples().iter().map(|v: &Complex64| v.norm().ln()).sum::<f64>() / 1024.0;
        Ok(BoundCertificate::new("outer-log-mean", log_mean, outer.value_at_origin().ln(), Relation::Eq, 1e-10)
            .with_param("r", r))
    })?;
    Ok(sweep_summary(s, "outer-log-mean", certs))
}
