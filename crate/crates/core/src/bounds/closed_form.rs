//! Closed-form bound formulas.

use std::f64::consts::{FRAC_PI_2, PI};

use gauss_quad::GaussLegendre;

use crate::error::{Error, Result};

fn out_of_range(name: &'static str, value: f64, range: &'static str) -> Error {
    Error::OutOfRange { name, value, range }
}

/// `g(γ) = [ln(γ + ε) − ln(1 − 2ε)] / ln γ`, the measure lower bound for a
/// fixed auxiliary level `γ ∈ (0, 1)`.
pub fn thm1_objective(eps: f64, gamma: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < 0.25) {
        return Err(out_of_range("eps", eps, "(0, 1/4)"));
    }
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(out_of_range("gamma", gamma, "(0, 1)"));
    }
    Ok(objective(eps, gamma))
}

fn objective(eps: f64, gamma: f64) -> f64 {
    ((gamma + eps).ln() - (1.0 - 2.0 * eps).ln()) / gamma.ln()
}

const GAMMA_GRID: usize = 1024;
const GAMMA_LO: f64 = 1e-6;
const GAMMA_HI: f64 = 1.0 - 1e-6;
const GOLDEN_TOL: f64 = 1e-10;

/// Maximizer `(γ*, g(γ*))` of [`thm1_objective`]: a 1024-point log-spaced
/// scan of `[1e−6, 1 − 1e−6]` followed by golden-section refinement of the
/// best bracket.
pub fn thm1_maximizer(eps: f64) -> Result<(f64, f64)> {
    thm1_objective(eps, 0.5)?;
    let (lo, hi) = (GAMMA_LO.ln(), GAMMA_HI.ln());
    let gamma_at = |i: usize| (lo + (hi - lo) * i as f64 / (GAMMA_GRID - 1) as f64).exp();
    let mut best = 0;
    let mut best_val = f64::NEG_INFINITY;
    for i in 0..GAMMA_GRID {
        let v = objective(eps, gamma_at(i));
        if v > best_val {
            best_val = v;
            best = i;
        }
    }
    let a = gamma_at(best.saturating_sub(1));
    let b = gamma_at((best + 1).min(GAMMA_GRID - 1));
    let (g, v) = golden_max(|x| objective(eps, x), a, b, GOLDEN_TOL);
    Ok(if v >= best_val { (g, v) } else { (gamma_at(best), best_val) })
}

/// `max_{0<γ<1} g(γ)`: lower bound on `m(A)` when `∫_A Re f ≥ 1 − ε`.
pub fn thm1_measure_lower_bound(eps: f64) -> Result<f64> {
    thm1_maximizer(eps).map(|(_, v)| v)
}

/// Golden-section maximization of a unimodal `f` on `[a, b]`.
pub fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// `((1−ε)/δ)^δ · (ε/(1−δ))^{1−δ}`: upper bound on `|f(0)|` for a unit-norm
/// `H¹` function carrying mass `1 − ε` on a set of measure `δ`.
///
/// The formula is evaluated for all `ε, δ ∈ (0, 1)`; see
/// [`thm2_in_stated_range`] for the range in which the bound is proven.
pub fn thm2_f0_upper_bound(eps: f64, delta: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(out_of_range("eps", eps, "(0, 1)"));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(out_of_range("delta", delta, "(0, 1)"));
    }
    Ok(((1.0 - eps) / delta).powf(delta) * (eps / (1.0 - delta)).powf(1.0 - delta))
}

/// `0 < ε, δ < 1/2`.
pub fn thm2_in_stated_range(eps: f64, delta: f64) -> bool {
    eps > 0.0 && eps < 0.5 && delta > 0.0 && delta < 0.5
}

/// `atanh(s)/s − 1 = (1/(2s)) ln((1+s)/(1−s)) − 1`, with its series near 0.
fn atanh_ratio_minus_one(s: f64) -> f64 {
    if s < 1e-3 {
        let s2 = s * s;
        s2 / 3.0 + s2 * s2 / 5.0 + s2 * s2 * s2 / 7.0
    } else {
        s.atanh() / s - 1.0
    }
}

/// Left side of the weighted-Bergman contradiction:
/// `((1−α−β)/β) · ( (1/(2√β)) ln((1+√β)/(1−√β)) − 1 )`.
pub fn a1_lhs(alpha: f64, beta: f64) -> Result<f64> {
    check_a1(alpha, beta)?;
    Ok((1.0 - alpha - beta) / beta * atanh_ratio_minus_one(beta.sqrt()))
}

/// Right side `α/(2β)`.
pub fn a1_rhs(alpha: f64, beta: f64) -> Result<f64> {
    check_a1(alpha, beta)?;
    Ok(alpha / (2.0 * beta))
}

fn check_a1(alpha: f64, beta: f64) -> Result<()> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(out_of_range("beta", beta, "(0, 1)"));
    }
    if !(alpha > 0.0 && alpha + beta < 1.0) {
        return Err(out_of_range("alpha", alpha, "(0, 1 − beta)"));
    }
    Ok(())
}

/// Riesz–Thorin bound for `B` on `H^p`: `2^{(2−p)/p}` for `1 ≤ p ≤ 2`,
/// `2^{(p−2)/p}` for `p ≥ 2`, and `2` at `p = ∞`.
pub fn interpolation_bound(p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(out_of_range("p", p, "[1, ∞]"));
    }
    if p.is_infinite() {
        return Ok(2.0);
    }
    let exponent = if p <= 2.0 { (2.0 - p) / p } else { (p - 2.0) / p };
    Ok(2f64.powf(exponent))
}

/// Sharp norm of `u ↦ u(r·) − u(0)` on `h¹`: `2 − (4/π) arccos r`.
pub fn sharp_szr_constant(r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(out_of_range("r", r, "[0, 1]"));
    }
    Ok(2.0 - 4.0 / PI * r.acos())
}

/// `∫₀¹ (2 − (4/π) arccos r) · 2r dr`, computed after the substitution
/// `r = cos t` so the integrand is smooth; the exact value is 1.
pub fn sharp_radial_integral(nodes: usize) -> Result<f64> {
    let rule = GaussLegendre::new(nodes.max(2)).map_err(|_| out_of_range("nodes", nodes as f64, "[2, ∞)"))?;
    let half = FRAC_PI_2 / 2.0;
    Ok(rule
        .as_node_weight_pairs()
        .iter()
        .map(|&(x, q)| {
            let t = half * (x + 1.0);
            q * half * (2.0 - 4.0 * t / PI) * 2.0 * t.cos() * t.sin()
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm1_examples() {
        let (g, v) = thm1_maximizer(0.1).unwrap();
        assert!((v - 0.6133).abs() < 5e-4, "{v}");
        assert!((g - 0.16).abs() < 0.01, "{g}");
        // grid oracle with step 1e-5
        let oracle = (1..100_000)
            .map(|i| objective(0.1, i as f64 * 1e-5))
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(v >= oracle - 1e-9 && v - oracle < 1e-6, "{v} vs {oracle}");
        let w = thm1_objective(0.047604 + 0.127079, 0.104634).unwrap();
        assert!((w - 0.37461).abs() < 1e-5, "{w}");
        assert!(thm1_measure_lower_bound(1e-4).unwrap() > 0.98);
        assert!(thm1_measure_lower_bound(0.25).is_err());
        assert!(thm1_measure_lower_bound(0.0).is_err());
    }

    #[test]
    fn thm1_monotone_and_in_unit_interval() {
        let values: Vec<f64> = (1..=50)
            .map(|i| thm1_measure_lower_bound(0.25 * i as f64 / 51.0).unwrap())
            .collect();
        assert!(values.iter().all(|&v| v > 0.0 && v < 1.0));
        assert!(values.windows(2).all(|w| w[1] <= w[0] + 1e-12));
    }

    #[test]
    fn thm2_examples() {
        let v = thm2_f0_upper_bound(0.1, 0.1).unwrap();
        assert!((v - 9f64.powf(-0.8)).abs() < 1e-14);
        assert!((v - 0.17242).abs() < 1e-5);
        // δ → 1: the bound tends to 1 − ε (slowly, like (ε/(1−δ))^{1−δ} → 1)
        let near = thm2_f0_upper_bound(0.3, 0.999).unwrap();
        assert!((near - 0.70496).abs() < 1e-4, "{near}");
        let limit = thm2_f0_upper_bound(0.3, 1.0 - 1e-9).unwrap();
        assert!((limit - 0.7).abs() < 1e-6);
        let w = thm2_f0_upper_bound(0.295302 + 0.476286, 0.295302 / 0.476286).unwrap();
        assert!((w - (1.0 - 0.295302)).abs() < 1e-4, "{w}");
        assert!(thm2_f0_upper_bound(0.0, 0.1).is_err());
        assert!(thm2_f0_upper_bound(0.1, -1.0).is_err());
    }

    #[test]
    fn thm2_below_one_in_range() {
        for i in 1..=50 {
            for j in 1..=50 {
                let (e, d) = (0.5 * i as f64 / 51.0, 0.5 * j as f64 / 51.0);
                assert!(thm2_in_stated_range(e, d));
                assert!(thm2_f0_upper_bound(e, d).unwrap() < 1.0);
            }
        }
        assert!(!thm2_in_stated_range(0.77, 0.62));
    }

    #[test]
    fn a1_values() {
        let (l, r) = (a1_lhs(0.165, 0.506).unwrap(), a1_rhs(0.165, 0.506).unwrap());
        assert!((l - 0.163202).abs() < 2e-6, "{l}");
        assert!((r - 0.163043).abs() < 2e-6, "{r}");
        assert!(l > r);
        // series oracle for small β: lhs ≈ (1 − α − β)/3
        let small = a1_lhs(0.01, 1e-8).unwrap();
        assert!((small - (1.0 - 0.01 - 1e-8) / 3.0).abs() < 1e-7);
        assert!(a1_lhs(0.5, 0.5).is_err());
        assert!(a1_lhs(0.1, 1.0).is_err());
    }

    #[test]
    fn interpolation_examples() {
        assert_eq!(interpolation_bound(2.0).unwrap(), 1.0);
        assert_eq!(interpolation_bound(1.0).unwrap(), 2.0);
        assert!((interpolation_bound(4.0).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(interpolation_bound(f64::INFINITY).unwrap(), 2.0);
        assert!(interpolation_bound(0.5).is_err());
    }

    #[test]
    fn sharp_constant_examples() {
        assert!(sharp_szr_constant(0.0).unwrap().abs() < 1e-15);
        assert!((sharp_szr_constant(0.5).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(sharp_szr_constant(1.0).unwrap(), 2.0);
        assert!(sharp_szr_constant(1.5).is_err());
        assert!((sharp_radial_integral(64).unwrap() - 1.0).abs() < 1e-13);
    }
}
