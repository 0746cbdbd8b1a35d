use super::{random_poly, sweep_summary, VerifySettings, FINE_GRID};
use crate::bounds::concentration::{thm1_instance, thm2_instance};
use crate::bounds::transfer::multiply_by_z_check;
use crate::bounds::{
    bergman_bshift_transfer_check, bergman_transfer_check, interpolation_bound, optimize_a1, optimize_h1_bshift,
    optimize_h1_szop, sharp_radial_integral, sharp_szr_constant, thm1_measure_lower_bound, thm2_f0_upper_bound,
    verify_a1_witness, verify_h1_bshift_witness, verify_h1_szop_witness, BoundCertificate, Optimum, Relation,
    H1_SZOP_BOUND,
};
use crate::error::Result;
use crate::seed::{collect_valid, sweep};
use crate::spaces::{poisson_profile, RadialWeight};

/// `(1/2π)∫|P_r − 1| = 2 − (4/π) arccos r` on a fine grid.
pub fn sharp_constant_quadrature(s: &VerifySettings) -> Result<Vec<BoundCertificate>> {
    let mut out = Vec::new();
    for k in 1..=9 {
        let r = k as f64 / 10.0;
        let q = poisson_profile(FINE_GRID, r, 0.0)?.sub_constant(1.0).lp_norm(1.0)?;
        out.push(s.close("sharp-constant", q, sharp_szr_constant(r)?, 1e-6).with_param("r", r));
    }
    out.push(s.close("sharp-constant-half", sharp_szr_constant(0.5)?, 2.0 / 3.0, 1e-12));
    out.push(s.close("sharp-constant-zero", sharp_szr_constant(0.0)?, 0.0, 1e-12));
    Ok(out)
}

/// `∫₀¹ (2 − (4/π) arccos r)·2r dr = 1`.
pub fn corollary_integral(s: &VerifySettings) -> Result<BoundCertificate> {
    Ok(s.close("sharp-radial-integral", sharp_radial_integral(64)?, 1.0, 1e-8))
}

fn optimum_certificates(s: &VerifySettings, name: &str, o: &Optimum, paper: f64) -> Result<Vec<BoundCertificate>> {
    let inward = if o.passes_above { 1e-4 } else { -1e-4 };
    let inside = o.perturbed(inward)?;
    let outside = o.perturbed(-100.0 * inward)?;
    let mut out = vec![
        s.close(name, o.bound, paper, 5e-3)
            .with_param("alpha", o.alpha)
            .with_param("beta", o.beta),
        o.witness.clone(),
        BoundCertificate::new(format!("{name}-perturbed-inside"), inside.margin, -inside.tol(), Relation::Ge, 0.0)
            .with_param("d_alpha", inward),
        BoundCertificate::new(format!("{name}-perturbed-outside"), outside.pass as u8 as f64, 0.0, Relation::Eq, 0.0)
            .with_param("d_alpha", -100.0 * inward),
    ];
    if let Some(g) = o.gamma {
        out[0] = out[0].clone().with_param("gamma", g);
    }
    Ok(out)
}

/// The three optimizers, their witnesses, and the published witnesses.
pub fn headline_constants(s: &VerifySettings) -> Result<Vec<BoundCertificate>> {
    let mut out = Vec::new();
    out.extend(optimum_certificates(s, "h1-szop-bound", &optimize_h1_szop()?, 1.952396)?);
    out.extend(optimum_certificates(s, "h1-bshift-bound", &optimize_h1_bshift()?, 1.7047)?);
    out.extend(optimum_certificates(s, "bergman-a1-bound", &optimize_a1()?, 1.835)?);
    out.push(verify_h1_szop_witness(0.047604, 0.127079, 0.104634)?);
    out.push(verify_h1_bshift_witness(0.295302, 0.476286)?);
    out.push(verify_a1_witness(0.165, 0.506)?);
    Ok(out)
}

/// Outer-function realizations of both concentration theorems.
pub fn concentration(s: &VerifySettings) -> Result<Vec<BoundCertificate>> {
    let thm2 = collect_valid(s.seed, "bounds/thm2", 200, 20_000, |rng| thm2_instance(rng, 1024))?;
    let thm1 = collect_valid(s.seed, "bounds/thm1", 200, 20_000, |rng| thm1_instance(rng, 4096))?;
    Ok(vec![sweep_summary(s, "thm2-outer", thm2), sweep_summary(s, "thm1-outer", thm1)])
}

/// Hardy bounds transferred to weighted Bergman spaces, and the
/// `‖zf‖ ≥ ½‖f‖` lemma.
pub fn bergman_transfers(s: &VerifySettings) -> Result<Vec<BoundCertificate>> {
    let weights = [
        RadialWeight::uniform(s.radial_nodes)?,
        RadialWeight::power(2.0, s.radial_nodes)?,
        RadialWeight::power(4.0, s.radial_nodes)?,
    ];
    let grid = 256;
    let certs = sweep(s.seed, "bounds/bergman", 200, |rng| {
        let f = random_poly(rng, 8)?;
        let mut out = Vec::new();
        for w in &weights[..2] {
            for p in [1.0, 2.0, 4.0] {
                out.push(bergman_transfer_check(&f, p, w, interpolation_bound(p)?, grid)?);
            }
        }
        for w in &weights {
            out.push(multiply_by_z_check(&f, w, grid)?);
            out.push(bergman_bshift_transfer_check(&f, w, H1_SZOP_BOUND, grid)?);
        }
        Ok(out)
    })?;
    let certs: Vec<BoundCertificate> = certs.into_iter().flatten().collect();
    let pick = |name: &str| certs.iter().filter(|c| c.name == name).cloned().collect::<Vec<_>>();
    Ok(vec![
        sweep_summary(s, "bergman-transfer", pick("bergman-transfer")),
        sweep_summary(s, "multiply-by-z", pick("multiply-by-z")),
        sweep_summary(s, "bergman-bshift-transfer", pick("bergman-bshift-transfer")),
    ])
}

/// Grid properties of the two concentration bounds.
pub fn thm_bound_grids(s: &VerifySettings) -> Result<Vec<BoundCertificate>> {
    let mut thm1 = Vec::new();
    let mut prev: Option<f64> = None;
    for i in 1..=50 {
        let v = thm1_measure_lower_bound(0.25 * i as f64 / 51.0)?;
        thm1.push(BoundCertificate::strict("thm1-range", v * (1.0 - v), 0.0, Relation::Ge).with_param("value", v));
        if let Some(prev) = prev {
            thm1.push(BoundCertificate::new("thm1-monotone", v, prev, Relation::Le, 1e-12));
        }
        prev = Some(v);
    }
    let mut thm2 = Vec::new();
    for i in 1..=50 {
        for j in 1..=50 {
            let (e, d) = (0.5 * i as f64 / 51.0, 0.5 * j as f64 / 51.0);
            thm2.push(BoundCertificate::strict("thm2-below-one", 1.0, thm2_f0_upper_bound(e, d)?, Relation::Ge));
        }
    }
    Ok(vec![sweep_summary(s, "thm1-grid", thm1), sweep_summary(s, "thm2-grid", thm2)])
}
