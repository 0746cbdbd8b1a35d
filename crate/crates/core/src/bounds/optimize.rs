//! Reproduction of the headline constants by search over the witness
//! parameters.
//!
//! For each `β` the certificate margin is scanned over a 200-point `α` grid
//! and the largest sign change is bisected to `α*(β)`; `α*` is then
//! maximized over a 200-point `β` grid with four rounds of ×10 local
//! refinement. The reported bound is `2 − α*`.

use rayon::prelude::*;
use serde::Serialize;

use super::certificate::BoundCertificate;
use super::closed_form::{a1_lhs, a1_rhs, thm1_maximizer, thm2_f0_upper_bound};
use super::witness::{szop_certificate, verify_a1_witness, verify_h1_bshift_witness};
use crate::error::Result;

const ALPHA_GRID: usize = 200;
const BETA_GRID: usize = 200;
const REFINE_ROUNDS: usize = 4;
const REFINE_POINTS: usize = 21;
const ROOT_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Argument {
    /// `𝓑` on `H¹` via the measure lower bound.
    #[serde(rename = "h1-szop")]
    H1Szop,
    /// `B` on `H¹` via the `|f(0)|` concentration bound.
    #[serde(rename = "h1-bshift")]
    H1Bshift,
    /// `𝓑` on `A¹(μ)` with increasing radial weight.
    #[serde(rename = "bergman-a1")]
    BergmanA1,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Optimum {
    pub argument: Argument,
    pub alpha: f64,
    pub beta: f64,
    /// Auxiliary level `γ`, for the `H¹` `𝓑` argument only.
    pub gamma: Option<f64>,
    pub bound: f64,
    /// Whether witnesses pass for `α` just above `α*` (rather than below).
    pub passes_above: bool,
    pub witness: BoundCertificate,
}

impl Argument {
    fn beta_range(self) -> (f64, f64) {
        match self {
            Argument::H1Szop => (0.0, 0.25),
            Argument::H1Bshift => (0.0, 0.5),
            Argument::BergmanA1 => (0.0, 1.0),
        }
    }

    fn alpha_range(self, beta: f64) -> (f64, f64) {
        match self {
            Argument::H1Szop => (0.0, 0.25 - beta),
            Argument::H1Bshift => (0.0, beta.min(1.0 - beta)),
            Argument::BergmanA1 => (0.0, 1.0 - beta),
        }
    }

    /// Signed certificate slack; positive means the contradiction holds.
    pub fn margin(self, alpha: f64, beta: f64) -> Result<f64> {
        match self {
            Argument::H1Szop => Ok(thm1_maximizer(alpha + beta)?.1 - alpha / beta),
            Argument::H1Bshift => Ok(1.0 - alpha - thm2_f0_upper_bound(alpha + beta, alpha / beta)?),
            Argument::BergmanA1 => Ok(a1_lhs(alpha, beta)? - a1_rhs(alpha, beta)?),
        }
    }

    /// Certificate at `(α, β)`, with `γ` re-optimized where it applies.
    pub fn certify(self, alpha: f64, beta: f64) -> Result<(BoundCertificate, Option<f64>)> {
        match self {
            Argument::H1Szop => {
                let (gamma, g) = thm1_maximizer(alpha + beta)?;
                Ok((szop_certificate(alpha, beta, gamma, g), Some(gamma)))
            }
            Argument::H1Bshift => Ok((verify_h1_bshift_witness(alpha, beta)?, None)),
            Argument::BergmanA1 => Ok((verify_a1_witness(alpha, beta)?, None)),
        }
    }

    fn margin_or_nan(self, alpha: f64, beta: f64) -> f64 {
        self.margin(alpha, beta).unwrap_or(f64::NAN)
    }

    /// Largest sign change of the margin in `α`, as `(root on the passing
    /// side, passes_above)`.
    fn alpha_star(self, beta: f64) -> Option<(f64, bool)> {
        let (lo, hi) = self.alpha_range(beta);
        let alpha_at = |i: usize| lo + (hi - lo) * i as f64 / (ALPHA_GRID + 1) as f64;
        let values: Vec<f64> = (1..=ALPHA_GRID).map(|i| self.margin_or_nan(alpha_at(i), beta)).collect();
        let i = (0..ALPHA_GRID - 1).rev().find(|&i| {
            let (a, b) = (values[i], values[i + 1]);
            a.is_finite() && b.is_finite() && (a > 0.0) != (b > 0.0)
        })?;
        let (mut a, mut b) = (alpha_at(i + 1), alpha_at(i + 2));
        let left_passes = values[i] > 0.0;
        while b - a > ROOT_TOL {
            let m = 0.5 * (a + b);
            if (self.margin_or_nan(m, beta) > 0.0) == left_passes {
                a = m;
            } else {
                b = m;
            }
        }
        Some(if left_passes { (a, false) } else { (b, true) })
    }

    fn best_over(self, betas: &[f64]) -> Option<(f64, f64, bool)> {
        let stars: Vec<Option<(f64, bool)>> = betas.par_iter().map(|&b| self.alpha_star(b)).collect();
        let mut best: Option<(f64, f64, bool)> = None;
        for (&beta, star) in betas.iter().zip(stars) {
            if let Some((alpha, above)) = star {
                if best.is_none_or(|(a, _, _)| alpha > a) {
                    best = Some((alpha, beta, above));
                }
            }
        }
        best
    }

    /// Nested search for `α*`; the bound is `2 − α*`.
    pub fn optimize(self) -> Result<Optimum> {
        let (blo, bhi) = self.beta_range();
        let mut step = (bhi - blo) / (BETA_GRID + 1) as f64;
        let grid: Vec<f64> = (1..=BETA_GRID).map(|i| blo + step * i as f64).collect();
        let mut best = self.best_over(&grid).ok_or_else(|| {
            crate::error::Error::NoSignChange(format!("{self:?}: no admissible witness on the β grid"))
        })?;
        for _ in 0..REFINE_ROUNDS {
            let centre = best.1;
            let fine = step / 10.0;
            let half = (REFINE_POINTS / 2) as f64;
            let local: Vec<f64> = (0..REFINE_POINTS)
                .map(|j| centre + (j as f64 - half) * fine)
                .filter(|&b| b > blo && b < bhi)
                .collect();
            if let Some(candidate) = self.best_over(&local) {
                if candidate.0 > best.0 {
                    best = candidate;
                }
            }
            step = fine;
        }
        let (alpha, beta, passes_above) = best;
        let (witness, gamma) = self.certify(alpha, beta)?;
        Ok(Optimum {
            argument: self,
            alpha,
            beta,
            gamma,
            bound: 2.0 - alpha,
            passes_above,
            witness,
        })
    }
}

impl Optimum {
    /// Certificate at `α* + dα` (same `β`).
    pub fn perturbed(&self, d_alpha: f64) -> Result<BoundCertificate> {
        self.argument.certify(self.alpha + d_alpha, self.beta).map(|(c, _)| c)
    }
}

pub fn optimize_h1_szop() -> Result<Optimum> {
    Argument::H1Szop.optimize()
}

pub fn optimize_h1_bshift() -> Result<Optimum> {
    Argument::H1Bshift.optimize()
}

pub fn optimize_a1() -> Result<Optimum> {
    Argument::BergmanA1.optimize()
}
