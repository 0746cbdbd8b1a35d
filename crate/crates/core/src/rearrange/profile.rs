//! Decreasing step profiles on `[0, L]` and the comparison of `P` with its
//! tilted reflection `Q = a·P(x) − b·P(L − x)`.

use std::f64::consts::PI;

use super::{certificate_slack, TiltedRearrangement};
use crate::bounds::{BoundCertificate, Relation};
use crate::circlefn::CircleFn;
use crate::error::{Error, Result};
use crate::spaces::poisson_kernel;

/// Non-increasing, nonnegative step function with unit mean on `[0, L]`,
/// constant on `M` equal cells.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfProfile {
    values: Vec<f64>,
    length: f64,
}

impl HalfProfile {
    pub fn new(values: Vec<f64>, length: f64) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::MalformedProfile("need at least two cells".into()));
        }
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::MalformedProfile(format!("interval length {length}")));
        }
        if let Some(k) = values.iter().position(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err(Error::MalformedProfile(format!("cell {k} is {}", values[k])));
        }
        if let Some(k) = values.windows(2).position(|w| w[1] > w[0]) {
            return Err(Error::MalformedProfile(format!("increase at cell {}", k + 1)));
        }
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        if (mean - 1.0).abs() > 1e-9 {
            return Err(Error::MalformedProfile(format!("mean {mean}, expected 1")));
        }
        Ok(Self { values, length })
    }

    /// Any nonnegative samples, sorted and rescaled to unit mean.
    pub fn from_unsorted(mut values: Vec<f64>, length: f64) -> Result<Self> {
        values.sort_by(|a, b| b.total_cmp(a));
        let mean = values.iter().sum::<f64>() / values.len().max(1) as f64;
        if !(mean > 0.0) {
            return Err(Error::MalformedProfile("zero mass".into()));
        }
        Self::new(values.into_iter().map(|v| v / mean).collect(), length)
    }

    /// `P_r` on `[0, π]` sampled at `cells` midpoints, rescaled to unit mean.
    pub fn poisson(r: f64, cells: usize) -> Result<Self> {
        let h = PI / cells as f64;
        let samples = (0..cells)
            .map(|k| poisson_kernel(r, (k as f64 + 0.5) * h))
            .collect::<Result<Vec<_>>>()?;
        Self::from_unsorted(samples, PI)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn cells(&self) -> usize {
        self.values.len()
    }

    fn cell_width(&self) -> f64 {
        self.length / self.cells() as f64
    }

    /// Value of the cell containing `x` (clamped to `[0, L]`).
    pub fn eval(&self, x: f64) -> f64 {
        let k = (x / self.cell_width()).floor().max(0.0) as usize;
        self.values[k.min(self.cells() - 1)]
    }

    /// Exact `∫_0^x P`.
    pub fn cumulative(&self, x: f64) -> f64 {
        let x = x.clamp(0.0, self.length);
        let h = self.cell_width();
        let full = ((x / h).floor() as usize).min(self.cells());
        let head: f64 = self.values[..full].iter().sum::<f64>() * h;
        let rest = if full < self.cells() { (x - full as f64 * h) * self.values[full] } else { 0.0 };
        head + rest
    }

    /// Exact `∫_lo^hi P`.
    pub fn integral(&self, lo: f64, hi: f64) -> f64 {
        self.cumulative(hi) - self.cumulative(lo)
    }

    /// `Q_k = a·P_k − b·P_{M−1−k}` on the same cells.
    pub fn tilted(&self, a: f64, b: f64) -> Result<TiltedRearrangement> {
        TiltedRearrangement::new(CircleFn::new(self.values.clone())?, a, b)
    }
}

fn check_weights(a: f64, b: f64) -> Result<()> {
    if !(a >= 0.0 && b >= 0.0 && (a + b - 1.0).abs() <= 1e-12) {
        return Err(Error::OutOfRange {
            name: "a + b",
            value: a + b,
            range: "a, b ≥ 0 with a + b = 1",
        });
    }
    Ok(())
}

/// Root of the non-increasing map `c ↦ a·P(c) − b·P(L − c) − (a − b)` on
/// `[0, L]`, by bisection to `1e−12`.
pub fn find_c(p: &HalfProfile, a: f64, b: f64) -> Result<f64> {
    check_weights(a, b)?;
    let h = |c: f64| a * p.eval(c) - b * p.eval(p.length() - c) - (a - b);
    let (mut lo, mut hi) = (0.0, p.length());
    if h(lo) < 0.0 || h(hi) > 0.0 {
        return Err(Error::NoSignChange(format!("h(0) = {}, h(L) = {}", h(lo), h(hi))));
    }
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if h(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `‖P − 1‖₁ ≥ ‖Q − (a − b)‖₁`, asserted when
/// `(1/L)(∫_0^c P + ∫_{L−c}^L P) ≥ 2c/L`. When the hypothesis fails the
/// certificate passes vacuously and carries the flag
/// `hypothesis-not-satisfied`.
///
/// `c` is computed for the weights ordered so that `a ≥ b`: swapping them
/// replaces `Q` by `−Q(L − x)`, which has the same deviation norm.
pub fn pq_comparison_check(p: &HalfProfile, a: f64, b: f64) -> Result<BoundCertificate> {
    check_weights(a, b)?;
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    let c = find_c(p, hi, lo)?;
    let l = p.length();
    let raw_lhs = p.integral(0.0, c) + p.integral(l - c, l);
    let raw_rhs = 2.0 * c;
    let holds = raw_lhs / l >= raw_rhs / l - 1e-12;
    let n = p.cells() as f64;
    let lhs = p.values().iter().map(|v| (v - 1.0).abs()).sum::<f64>() / n;
    let q = p.tilted(a, b)?;
    let rhs = q.q().sub_constant(a - b).lp_norm(1.0)?;
    let mut cert = BoundCertificate::new("pq-comparison", lhs, rhs, Relation::Ge, certificate_slack())
        .with_param("a", a)
        .with_param("b", b)
        .with_param("c", c)
        .with_param("hypothesis_raw_lhs", raw_lhs)
        .with_param("hypothesis_raw_rhs", raw_rhs)
        .with_param("hypothesis_lhs", raw_lhs / l)
        .with_param("hypothesis_rhs", raw_rhs / l);
    if !holds {
        cert.pass = true;
        cert = cert.with_flag("hypothesis-not-satisfied");
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn find_c_examples() {
        let p = HalfProfile::poisson(0.5, 4096).unwrap();
        assert!((find_c(&p, 0.5, 0.5).unwrap() - FRAC_PI_2).abs() < 1e-9);
        let c = find_c(&p, 1.0, 0.0).unwrap();
        assert!(p.eval(c - 1e-9) >= 1.0 && p.eval(c + 1e-3) <= 1.0);
        // P(π/2) < 1, so the root moves left of π/2 exactly when a > b
        assert!(find_c(&p, 0.7, 0.3).unwrap() < FRAC_PI_2);
        assert!(find_c(&p, 0.3, 0.7).unwrap() > FRAC_PI_2);
        assert!(find_c(&p, 0.3, 0.3).is_err());
    }

    #[test]
    fn malformed_profiles() {
        assert!(HalfProfile::new(vec![1.0, 1.5, 0.5], PI).is_err());
        assert!(HalfProfile::new(vec![2.0, 2.0], PI).is_err());
        assert!(HalfProfile::new(vec![2.0, -0.0 - 1e-3], PI).is_err());
        assert!(HalfProfile::new(vec![1.5, 0.5], PI).is_ok());
    }

    #[test]
    fn step_integrals() {
        let p = HalfProfile::new(vec![1.5, 0.5], 2.0).unwrap();
        assert!((p.integral(0.0, 2.0) - 2.0).abs() < 1e-15);
        assert!((p.integral(0.5, 1.5) - (0.75 + 0.25)).abs() < 1e-15);
    }

    #[test]
    fn poisson_profiles_satisfy_hypothesis() {
        for r in [0.3, 0.5, 0.8] {
            let p = HalfProfile::poisson(r, 2048).unwrap();
            for a in [0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0] {
                let cert = pq_comparison_check(&p, a, 1.0 - a).unwrap();
                assert!(cert.flags.is_empty(), "r={r} a={a}: {cert:?}");
                assert!(cert.params["c"] <= FRAC_PI_2 + 1e-9);
                assert!(cert.pass, "{cert:?}");
            }
        }
    }

    #[test]
    fn symmetric_two_step_closed_form() {
        // P = (h1, h2), h1 + h2 = 2: ‖P − 1‖₁ = ‖Q‖₁ = (h1 − h2)/2, c = L/2
        let p = HalfProfile::new(vec![1.6, 0.4], PI).unwrap();
        let cert = pq_comparison_check(&p, 0.5, 0.5).unwrap();
        assert!((cert.lhs - 0.6).abs() < 1e-12 && (cert.rhs - 0.6).abs() < 1e-12);
        assert!((cert.params["c"] - FRAC_PI_2).abs() < 1e-11);
    }

    #[test]
    fn untilted_is_equality() {
        let p = HalfProfile::poisson(0.6, 512).unwrap();
        let cert = pq_comparison_check(&p, 1.0, 0.0).unwrap();
        assert!(cert.pass && (cert.lhs - cert.rhs).abs() < 1e-12);
    }
}
