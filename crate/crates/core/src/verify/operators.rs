use std::f64::consts::PI;

use super::{random_harmonic, random_poly, sweep_summary, VerifySettings, FINE_GRID};
use crate::bounds::{interpolation_bound, proven_upper_bound, sharp_szr_constant, BoundCertificate, Relation};
use crate::error::Result;
use crate::operators::{
    cutoff, ratio, search_lower_bound, sign_alternating_cutoff, ExtremalFamily, Mobius, Operator, SearchReport,
    SearchSettings, Space, Subject, SubtractValue,
};
use crate::spaces::HarmonicFn;
use crate::seed::{derive_seed, sweep};

/// Möbius search on `H^∞` and the closed form `1 + a`.
pub fn hinf_mobius(s: &VerifySettings) -> Result<Vec<BoundCertificate>> {
    let space = Space::Hardy(f64::INFINITY);
    let report = search_lower_bound(
        Operator::Subtract,
        &space,
        &ExtremalFamily::mobius(),
        SearchSettings::new(200, derive_seed(s.seed, "operators/mobius", 0)).with_grid(s.grid),
    )?;
    let mut out = vec![BoundCertificate::new("hinf-mobius-search", report.best_ratio, 1.99, Relation::Ge, 0.0)
        .with_param("a", report.best_params[0])
        .with_param("evaluations", report.evaluations as f64)];
    for a in [0.5, 0.9, 0.99] {
        let f = Mobius::new(a)?;
        let r = ratio(Operator::Subtract, Subject::Analytic(&f), &space, FINE_GRID)?;
        out.push(s.close("hinf-mobius-ratio", r, 1.0 + a, 1e-4).with_param("a", a));
    }
    Ok(out)
}

/// `f_n` attains `2 − 2/(πn)` and `g_n` attains 1 on `h¹`; the Poisson
/// kernel attains the sharp `𝓑_r` constant.
pub fn cutoff_family(s: &VerifySettings) -> Result<Vec<BoundCertificate>> {
    let mut out = Vec::new();
    for n in [2usize, 4, 16, 64] {
        let f = cutoff(n, s.grid)?;
        let r = ratio(Operator::Subtract, Subject::Harmonic(&f), &Space::HarmonicH1, s.grid)?;
        out.push(s.close("cutoff-ratio", r, 2.0 - 2.0 / (PI * n as f64), 1e-6).with_param("n", n as f64));
        let g = sign_alternating_cutoff(n, s.grid)?;
        let r = ratio(Operator::Subtract, Subject::Harmonic(&g), &Space::HarmonicH1, s.grid)?;
        out.push(s.close("sign-alternating-ratio", r, 1.0, 1e-9).with_param("n", n as f64));
    }
    let atom = HarmonicFn::atom(FINE_GRID, 1.0, 0.0)?;
    for r in [0.25, 0.5, 0.75] {
        let got = ratio(Operator::SubtractAtRadius(r), Subject::Harmonic(&atom), &Space::HarmonicH1, FINE_GRID)?;
        out.push(s.close("poisson-atom-sharp", got, sharp_szr_constant(r)?, 1e-6).with_param("r", r));
    }
    Ok(out)
}

/// `ratio(B, H^p) ≤ interpolation_bound(p)` on random polynomials, and
/// `≤ 1` exactly at `p = 2`.
pub fn interpolation_sweep(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "operators/interpolation", 500, |rng| {
        let f = random_poly(rng, 8)?;
        let mut out = Vec::new();
        for p in [1.0, 4.0 / 3.0, 2.0, 3.0, f64::INFINITY] {
            let r = ratio(Operator::BackwardShift, Subject::Analytic(&f), &Space::Hardy(p), 1024)?;
            out.push(
                BoundCertificate::new("interpolation", r, interpolation_bound(p)?, Relation::Le, 1e-6)
                    .with_param("p", p),
            );
            if p == 2.0 {
                out.push(BoundCertificate::new("h2-contraction", r, 1.0, Relation::Le, 1e-12));
            }
        }
        Ok(out)
    })?;
    Ok(sweep_summary(s, "interpolation", certs.into_iter().flatten().collect()))
}

/// `‖𝓑f‖ ≤ 2‖f‖` in Hardy spaces and `h¹`, and `𝓑∘𝓑 = 𝓑`.
pub fn szop_triangle(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "operators/triangle", 200, |rng| {
        let f = random_poly(rng, 8)?;
        let mut out = Vec::new();
        for p in [1.0, 2.0, f64::INFINITY] {
            let r = ratio(Operator::Subtract, Subject::Analytic(&f), &Space::Hardy(p), 1024)?;
            out.push(BoundCertificate::new("szop-triangle", r, 2.0, Relation::Le, 1e-9).with_param("p", p));
        }
        let twice = f.subtract_value().subtract_value();
        let diff = twice
            .coeffs()
            .iter()
            .zip(f.subtract_value().coeffs())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        out.push(BoundCertificate::new("szop-idempotent", diff, 0.0, Relation::Eq, 0.0));
        let u = random_harmonic(rng, 1024)?;
        if u.h1_norm() > 0.0 {
            let r = ratio(Operator::Subtract, Subject::Harmonic(&u), &Space::HarmonicH1, 1024)?;
            out.push(BoundCertificate::new("szop-triangle-h1", r, 2.0, Relation::Le, 1e-9));
        }
        Ok(out)
    })?;
    Ok(sweep_summary(s, "szop-triangle", certs.into_iter().flatten().collect()))
}

/// `M₁(r, u − u(0)) ≤ ‖u‖_{h¹}·(2 − (4/π) arccos r)` for random `u`.
pub fn h1_sharp_inequality(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "operators/h1-sharp", 200, |rng| {
        let u = random_harmonic(rng, FINE_GRID)?;
        let mut out = Vec::new();
        for r in [0.25, 0.5, 0.75] {
            let lhs = crate::operators::szop_r_apply(&u, r)?.lp_norm(1.0)?;
            let rhs = u.h1_norm() * sharp_szr_constant(r)?;
            out.push(BoundCertificate::new("h1-sharp", lhs, rhs, Relation::Le, 1e-6).with_param("r", r));
        }
        Ok(out)
    })?;
    Ok(sweep_summary(s, "h1-sharp", certs.into_iter().flatten().collect()))
}

/// `best ratio ≤ proven upper bound + 1e−6` for a fixed set of searches.
pub fn search_consistency(s: &VerifySettings) -> Result<Vec<BoundCertificate>> {
    let cases: Vec<(Operator, Space, ExtremalFamily, usize)> = vec![
        (Operator::Subtract, Space::Hardy(f64::INFINITY), ExtremalFamily::mobius(), 200),
        (Operator::Subtract, Space::HarmonicH1, ExtremalFamily::Cutoff { max_n: 64 }, 64),
        (Operator::BackwardShift, Space::Hardy(2.0), ExtremalFamily::poly(8), 500),
        (Operator::BackwardShift, Space::Hardy(1.0), ExtremalFamily::poly(4), 300),
        (Operator::Subtract, Space::Hardy(4.0), ExtremalFamily::Mobius { a_max: 0.999 }, 100),
        (Operator::SubtractAtRadius(0.5), Space::HarmonicH1, ExtremalFamily::poisson(), 100),
    ];
    cases
        .into_iter()
        .enumerate()
        .map(|(i, (op, space, family, budget))| {
            let settings = SearchSettings::new(budget, derive_seed(s.seed, "operators/search", i as u64)).with_grid(s.grid);
            let report = search_lower_bound(op, &space, &family, settings)?;
            search_certificate(&report, op, &space)
        })
        .collect()
}

/// `best ratio ≤ proven upper bound + 1e−6`.
pub fn search_certificate(report: &SearchReport, op: Operator, space: &Space) -> Result<BoundCertificate> {
    let bound = proven_upper_bound(op, space).unwrap_or(f64::INFINITY);
    let mut c = BoundCertificate::new("search-vs-bound", report.best_ratio, bound, Relation::Le, 1e-6)
        .with_param("evaluations", report.evaluations as f64);
    c = c.with_flag(format!("{} on {} ({})", report.operator, report.space, report.family));
    if bound.is_infinite() {
        c = c.with_flag("no-proven-bound");
    }
    Ok(c)
}

