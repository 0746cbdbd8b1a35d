//! Property sweeps and reproduction checks for every module, reported as
//! certificates.
//!
//! Randomized sweeps draw each instance from
//! [`instance_rng`](crate::seed::instance_rng) with the root seed, so a run
//! is reproducible and independent of the worker count. Large sweeps are
//! summarized by one certificate recording the trial count, the number of
//! failures and the worst margin.

mod bounds;
mod circle;
mod operators;
mod rearrange;
mod spaces;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;

use crate::bounds::{BoundCertificate, Relation};
use crate::circlefn::{CircleFn, DEFAULT_GRID};
use crate::error::{Error, Result};
use crate::spaces::{Atom, HarmonicFn, TaylorFn, DEFAULT_RADIAL_NODES};

pub use bounds::{
    bergman_transfers, concentration, corollary_integral, headline_constants, sharp_constant_quadrature,
    thm_bound_grids,
};
pub use circle::{complement_split, rearrangement_norms, young_inequality};
pub use operators::{
    cutoff_family, h1_sharp_inequality, hinf_mobius, interpolation_sweep, search_certificate, search_consistency,
    szop_triangle,
};
pub use rearrange::{
    conv_matrix_path, conv_rearrangement, exchange_monotonicity, half_mass, pq_comparison, signed_mass, sort_rows,
};
pub use spaces::{harmonic_measure, integral_mean_monotone, mean_value, outer_log_mean};

/// Grid used by checks whose accuracy target needs a fine resolution.
pub const FINE_GRID: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq)]
pub struct VerifySettings {
    pub grid: usize,
    pub radial_nodes: usize,
    pub seed: u64,
    /// Per-check tolerance overrides, keyed by certificate name.
    pub tolerances: BTreeMap<String, f64>,
}

impl Default for VerifySettings {
    fn default() -> Self {
        Self {
            grid: DEFAULT_GRID,
            radial_nodes: DEFAULT_RADIAL_NODES,
            seed: 1,
            tolerances: BTreeMap::new(),
        }
    }
}

impl VerifySettings {
    pub fn tol(&self, key: &str, default: f64) -> f64 {
        self.tolerances.get(key).copied().unwrap_or(default)
    }

    /// Applies an override for `cert.name`, if one is set.
    pub(crate) fn adjust(&self, cert: BoundCertificate) -> BoundCertificate {
        match self.tolerances.get(&cert.name) {
            Some(&t) => cert.with_tol(t),
            None => cert,
        }
    }

    /// `lhs = rhs` within the tolerance for `name`.
    pub(crate) fn close(&self, name: &str, computed: f64, expected: f64, default_tol: f64) -> BoundCertificate {
        BoundCertificate::new(name, computed, expected, Relation::Eq, self.tol(name, default_tol))
    }
}

/// Applies tolerance overrides to each instance, then summarizes the sweep
/// as `sweep:<name>`.
pub(crate) fn sweep_summary(s: &VerifySettings, name: &str, certs: Vec<BoundCertificate>) -> BoundCertificate {
    let certs: Vec<BoundCertificate> = certs.into_iter().map(|c| s.adjust(c)).collect();
    summarize(&format!("sweep:{name}"), &certs)
}

/// Collapses a sweep into one certificate: `failures ≤ 0`.
pub(crate) fn summarize(name: &str, certs: &[BoundCertificate]) -> BoundCertificate {
    let failures = certs.iter().filter(|c| !c.pass).count();
    let worst = certs.iter().map(|c| c.margin).fold(f64::INFINITY, f64::min);
    let mut c = BoundCertificate::new(name, failures as f64, 0.0, Relation::Le, 0.0)
        .with_param("trials", certs.len() as f64)
        .with_param("worst_margin", if certs.is_empty() { 0.0 } else { worst });
    if certs.is_empty() {
        c.pass = false;
        c = c.with_flag("no-trials");
    }
    c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Circlefn,
    Spaces,
    Operators,
    Bounds,
    Rearrange,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "circlefn" => Suite::Circlefn,
            "spaces" => Suite::Spaces,
            "operators" => Suite::Operators,
            "bounds" => Suite::Bounds,
            "rearrange" => Suite::Rearrange,
            "all" => Suite::All,
            other => return Err(Error::Usage(format!("unknown suite '{other}'"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Circlefn => "circlefn",
            Suite::Spaces => "spaces",
            Suite::Operators => "operators",
            Suite::Bounds => "bounds",
            Suite::Rearrange => "rearrange",
            Suite::All => "all",
        })
    }
}

/// Runs every check of `suite`, in a fixed order.
pub fn run_suite(suite: Suite, s: &VerifySettings) -> Result<Vec<BoundCertificate>> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Circlefn {
        out.push(young_inequality(s)?);
        out.push(rearrangement_norms(s)?);
        out.push(complement_split(s)?);
    }
    if all || suite == Suite::Spaces {
        out.push(harmonic_measure(s)?);
        out.push(mean_value(s)?);
        out.push(integral_mean_monotone(s)?);
        out.push(outer_log_mean(s)?);
    }
    if all || suite == Suite::Operators {
        out.extend(hinf_mobius(s)?);
        out.extend(cutoff_family(s)?);
        out.push(interpolation_sweep(s)?);
        out.push(szop_triangle(s)?);
        out.push(h1_sharp_inequality(s)?);
        out.extend(search_consistency(s)?);
    }
    if all || suite == Suite::Bounds {
        out.extend(sharp_constant_quadrature(s)?);
        out.push(corollary_integral(s)?);
        out.extend(headline_constants(s)?);
        out.extend(concentration(s)?);
        out.extend(bergman_transfers(s)?);
        out.extend(thm_bound_grids(s)?);
    }
    if all || suite == Suite::Rearrange {
        out.push(exchange_monotonicity(s)?);
        out.push(sort_rows(s)?);
        out.extend(conv_rearrangement(s)?);
        out.push(conv_matrix_path(s)?);
        out.extend(pq_comparison(s)?);
        out.push(half_mass(s)?);
        out.push(signed_mass(s)?);
    }
    Ok(out.into_iter().map(|c| s.adjust(c)).collect())
}

pub(crate) fn random_real(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> Result<CircleFn> {
    CircleFn::new((0..n).map(|_| rng.gen_range(lo..hi)).collect())
}

/// Degree uniform in `1..=max_degree`, complex coefficients in the unit
/// square.
pub(crate) fn random_poly(rng: &mut impl Rng, max_degree: usize) -> Result<TaylorFn> {
    let degree = rng.gen_range(1..=max_degree);
    TaylorFn::new(
        (0..=degree)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect(),
    )
}

/// Uniform boundary noise plus up to three atoms.
pub(crate) fn random_harmonic(rng: &mut impl Rng, n: usize) -> Result<HarmonicFn> {
    let amplitude = rng.gen_range(0.0..2.0);
    let offset = rng.gen_range(-1.0..1.0);
    let boundary = CircleFn::new((0..n).map(|_| offset + amplitude * rng.gen_range(-1.0..1.0)).collect())?;
    let atoms = (0..rng.gen_range(0..=3))
        .map(|_| Atom {
            weight: rng.gen_range(-2.0..2.0),
            angle: rng.gen_range(0.0..std::f64::consts::TAU),
        })
        .collect();
    HarmonicFn::new(boundary, atoms)
}
