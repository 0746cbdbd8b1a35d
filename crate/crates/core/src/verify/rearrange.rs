use rand::Rng;

use super::{random_real, sweep_summary, VerifySettings};
use crate::bounds::{BoundCertificate, Relation};
use crate::circlefn::CircleFn;
use crate::error::Result;
use crate::rearrange::{
    conv_rearrangement_check, half_mass_identity, pq_comparison_check, profile::HalfProfile,
    conv_rearrangement_matrix_check, DeficiencyMatrix,
};
use crate::seed::{collect_valid, sweep};

fn random_matrix(rng: &mut impl Rng) -> Result<DeficiencyMatrix> {
    let (m, n) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
    let rows = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-10.0..10.0)).collect()).collect();
    let bound = 10.0 * m as f64;
    DeficiencyMatrix::new(rows, rng.gen_range(-bound..bound))
}

/// `10^5` random admissible swaps never decrease the deficiency.
pub fn exchange_monotonicity(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "rearrange/exchange", 100_000, |rng| loop {
        let a = random_matrix(rng)?;
        let (m, n) = a.shape();
        let mut admissible = Vec::new();
        for i in 0..m {
            for j in 0..n {
                for k in 0..n {
                    if j != k && a.is_admissible(i, j, k)? {
                        admissible.push((i, j, k));
                    }
                }
            }
        }
        if admissible.is_empty() {
            continue;
        }
        let (i, j, k) = admissible[rng.gen_range(0..admissible.len())];
        let after = a.exchange_step(i, j, k)?.deficiency();
        return Ok(BoundCertificate::new("exchange", after, a.deficiency(), Relation::Ge, 1e-12));
    })?;
    Ok(sweep_summary(s, "exchange", certs))
}

/// Row sorting never decreases the deficiency.
pub fn sort_rows(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "rearrange/sort-rows", 10_000, |rng| {
        let a = random_matrix(rng)?;
        Ok(BoundCertificate::new(
            "sort-rows",
            a.sort_rows_descending().deficiency(),
            a.deficiency(),
            Relation::Ge,
            1e-12,
        ))
    })?;
    Ok(sweep_summary(s, "sort-rows", certs))
}

/// `10^3` nonnegative and `10^3` signed convolution instances at `N = 512`.
pub fn conv_rearrangement(s: &VerifySettings) -> Result<Vec<BoundCertificate>> {
    let nonneg = sweep(s.seed, "rearrange/conv-nonneg", 1000, |rng| {
        let top = rng.gen_range(0.1..10.0);
        let p = random_real(rng, 512, 0.0, top)?;
        let f = random_real(rng, 512, 0.0, 1.0)?;
        conv_rearrangement_check(&p, &f, true)
    })?;
    let signed = sweep(s.seed, "rearrange/conv-signed", 1000, |rng| {
        let top = rng.gen_range(0.1..10.0);
        let p = random_real(rng, 512, 0.0, top)?;
        let shift = rng.gen_range(-1.0..1.0);
        let f = random_real(rng, 512, -1.0 + shift, 1.0 + shift)?;
        conv_rearrangement_check(&p, &f, false)
    })?;
    Ok(vec![sweep_summary(s, "conv-nonneg", nonneg), sweep_summary(s, "conv-signed", signed)])
}

/// The matrix path reproduces both sides of the signed convolution check.
pub fn conv_matrix_path(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "rearrange/conv-matrix", 100, |rng| {
        let p = random_real(rng, 256, 0.0, 1.0)?;
        let f = random_real(rng, 256, -1.0, 1.0)?;
        let direct = conv_rearrangement_check(&p, &f, false)?;
        let matrix = conv_rearrangement_matrix_check(&p, &f)?;
        let gap = (direct.lhs - matrix.lhs).abs().max((direct.rhs - matrix.rhs).abs());
        let mut c = BoundCertificate::new("conv-matrix-agreement", gap, 0.0, Relation::Le, 1e-12);
        if direct.pass != matrix.pass {
            c.pass = false;
            c = c.with_flag("verdicts-differ");
        }
        Ok(c)
    })?;
    Ok(sweep_summary(s, "conv-matrix", certs))
}

/// Poisson profiles and random decreasing profiles.
pub fn pq_comparison(s: &VerifySettings) -> Result<Vec<BoundCertificate>> {
    let mut poisson = Vec::new();
    for r in [0.3, 0.5, 0.8] {
        let p = HalfProfile::poisson(r, 2048)?;
        for k in 0..=10 {
            let a = k as f64 / 10.0;
            let c = pq_comparison_check(&p, a, 1.0 - a)?;
            let mut c = c.with_param("r", r);
            if c.flags.iter().any(|f| f == "hypothesis-not-satisfied") {
                c.pass = false;
            }
            poisson.push(c);
        }
    }
    let random = collect_valid(s.seed, "rearrange/pq", 200, 20_000, |rng| {
        let cells = 2 * rng.gen_range(4..256);
        let spread = rng.gen_range(0.1..3.0);
        let values = (0..cells).map(|_| rng.gen_range(0.0..1.0f64).powf(spread)).collect();
        let p = HalfProfile::from_unsorted(values, std::f64::consts::PI)?;
        let a = rng.gen_range(0.0..1.0);
        let c = pq_comparison_check(&p, a, 1.0 - a)?;
        Ok((!c.flags.iter().any(|f| f == "hypothesis-not-satisfied")).then_some(c))
    })?;
    Ok(vec![sweep_summary(s, "pq-poisson", poisson), sweep_summary(s, "pq-random", random)])
}

/// The half-mass identity on 500 random functions.
pub fn half_mass(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "rearrange/half-mass", 500, |rng| {
        let top = rng.gen_range(-0.5..2.0);
        let f = random_real(rng, 1024, -1.0, top)?;
        let (l, r) = half_mass_identity(&f);
        Ok(BoundCertificate::new("half-mass", l, r, Relation::Eq, 1e-12))
    })?;
    Ok(sweep_summary(s, "half-mass", certs))
}

/// `a + b = 1` and `a − b = mean(f)` for unit-norm `f`.
pub fn signed_mass(s: &VerifySettings) -> Result<BoundCertificate> {
    let certs = sweep(s.seed, "rearrange/signed-mass", 500, |rng| {
        let f: CircleFn = random_real(rng, 512, -1.0, 1.0)?;
        let f = f.scale(1.0 / f.lp_norm(1.0)?);
        let (a, b) = f.signed_masses();
        let err = (a + b - 1.0).abs().max((a - b - f.mean()).abs());
        Ok(BoundCertificate::new("signed-mass", err, 0.0, Relation::Le, 1e-12))
    })?;
    Ok(sweep_summary(s, "signed-mass", certs))
}
