//! Functions sampled on a uniform grid of the unit circle.
//!
//! A [`CircleFn`] holds `N` samples at the angles `θ_k = 2πk/N`. All
//! integrals use the normalized measure `dθ/2π`, so every sample carries
//! weight `1/N`. Convolution is the exact cyclic convolution of the sampled
//! step functions, which makes the rearrangement inequalities hold exactly
//! for the discrete objects up to floating-point roundoff.

use std::cell::RefCell;
use std::f64::consts::TAU;
use std::fmt::Debug;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

/// Default grid size for circle computations.
pub const DEFAULT_GRID: usize = 4096;

/// Scalar types that can live on the circle grid.
pub trait Sample:
    Copy
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<f64, Output = Self>
    + 'static
{
    const ZERO: Self;

    fn to_complex(self) -> Complex64;
    /// Projects a complex value back onto the sample type. For `f64` this
    /// drops the (roundoff-level) imaginary part produced by the FFT.
    fn from_complex(z: Complex64) -> Self;
    fn modulus(self) -> f64;
    fn finite(self) -> bool;
}

impl Sample for f64 {
    const ZERO: Self = 0.0;

    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
    fn from_complex(z: Complex64) -> Self {
        z.re
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn finite(self) -> bool {
        self.is_finite()
    }
}

impl Sample for Complex64 {
    const ZERO: Self = Complex64::new(0.0, 0.0);

    fn to_complex(self) -> Complex64 {
        self
    }
    fn from_complex(z: Complex64) -> Self {
        z
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Angle of grid point `k` on an `n`-point grid.
#[inline]
pub fn grid_angle(n: usize, k: usize) -> f64 {
    TAU * k as f64 / n as f64
}

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// Unnormalized forward DFT: `X_m = Σ_k x_k e^{-2πi km/N}`.
pub(crate) fn fft_forward(buf: &mut [Complex64]) {
    PLANNER.with(|p| p.borrow_mut().plan_fft_forward(buf.len()).process(buf));
}

/// Unnormalized inverse DFT: `x_k = Σ_m X_m e^{+2πi km/N}`.
pub(crate) fn fft_inverse(buf: &mut [Complex64]) {
    PLANNER.with(|p| p.borrow_mut().plan_fft_inverse(buf.len()).process(buf));
}

/// Samples of a real or complex function on the unit circle.
#[derive(Clone, Debug, PartialEq)]
pub struct CircleFn<T: Sample = f64> {
    samples: Vec<T>,
}

impl<T: Sample> CircleFn<T> {
    pub fn new(samples: Vec<T>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::GridTooSmall(samples.len()));
        }
        if let Some(i) = samples.iter().position(|s| !s.finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { samples })
    }

    /// Samples `f(θ_k)` on an `n`-point grid.
    pub fn from_fn(n: usize, f: impl Fn(f64) -> T) -> Result<Self> {
        Self::new((0..n).map(|k| f(grid_angle(n, k))).collect())
    }

    pub fn constant(n: usize, c: T) -> Result<Self> {
        Self::new(vec![c; n])
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[T] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<T> {
        self.samples
    }

    pub fn angle(&self, k: usize) -> f64 {
        grid_angle(self.len(), k)
    }

    /// `(1/N) Σ_k f(θ_k)`.
    pub fn mean(&self) -> T {
        let sum = self.samples.iter().fold(T::ZERO, |acc, &s| acc + s);
        sum * (1.0 / self.len() as f64)
    }

    /// `((1/N) Σ |f_k|^p)^{1/p}`, or `max |f_k|` for `p = ∞`.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        lp_norm_of(self.samples.iter().map(|s| s.modulus()), self.len(), p)
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|s| s.modulus()).fold(0.0, f64::max)
    }

    /// Normalized cyclic convolution
    /// `(f∗g)(θ_j) = (1/N) Σ_k f(θ_k) g(θ_{j−k})`.
    pub fn convolve(&self, other: &CircleFn<T>) -> Result<CircleFn<T>> {
        self.check_same_grid(other.len())?;
        let n = self.len();
        let mut a: Vec<Complex64> = self.samples.iter().map(|s| s.to_complex()).collect();
        let mut b: Vec<Complex64> = other.samples.iter().map(|s| s.to_complex()).collect();
        fft_forward(&mut a);
        fft_forward(&mut b);
        for (x, y) in a.iter_mut().zip(&b) {
            *x *= *y;
        }
        fft_inverse(&mut a);
        let scale = 1.0 / (n as f64 * n as f64);
        Ok(CircleFn {
            samples: a.into_iter().map(|z| T::from_complex(z * scale)).collect(),
        })
    }

    /// `(1/N) Σ_{k ∈ S} f_k`.
    pub fn integrate_over(&self, set: &BoundarySet) -> Result<T> {
        self.check_same_grid(set.len())?;
        let sum = self
            .samples
            .iter()
            .zip(&set.mask)
            .filter(|(_, &m)| m)
            .fold(T::ZERO, |acc, (&s, _)| acc + s);
        Ok(sum * (1.0 / self.len() as f64))
    }

    pub fn map<U: Sample>(&self, f: impl Fn(T) -> U) -> Result<CircleFn<U>> {
        CircleFn::new(self.samples.iter().map(|&s| f(s)).collect())
    }

    pub fn zip_with(&self, other: &CircleFn<T>, f: impl Fn(T, T) -> T) -> Result<CircleFn<T>> {
        self.check_same_grid(other.len())?;
        CircleFn::new(
            self.samples
                .iter()
                .zip(&other.samples)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }

    pub fn add(&self, other: &CircleFn<T>) -> Result<CircleFn<T>> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &CircleFn<T>) -> Result<CircleFn<T>> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: f64) -> CircleFn<T> {
        CircleFn {
            samples: self.samples.iter().map(|&s| s * c).collect(),
        }
    }

    pub fn sub_constant(&self, c: T) -> CircleFn<T> {
        CircleFn {
            samples: self.samples.iter().map(|&s| s - c).collect(),
        }
    }

    pub fn to_complex(&self) -> CircleFn<Complex64> {
        CircleFn {
            samples: self.samples.iter().map(|s| s.to_complex()).collect(),
        }
    }

    pub(crate) fn check_same_grid(&self, other: usize) -> Result<()> {
        if self.len() != other {
            return Err(Error::GridMismatch {
                left: self.len(),
                right: other,
            });
        }
        Ok(())
    }
}

impl CircleFn<f64> {
    /// Non-increasing rearrangement of the samples.
    pub fn decreasing_rearrangement(&self) -> CircleFn<f64> {
        let mut s = self.samples.clone();
        s.sort_by(|a, b| b.total_cmp(a));
        CircleFn { samples: s }
    }

    /// Index reversal `k ↦ N−1−k`, the grid form of `x ↦ 2π − x`.
    pub fn reflect(&self) -> CircleFn<f64> {
        let mut s = self.samples.clone();
        s.reverse();
        CircleFn { samples: s }
    }

    /// Positive and negative masses `(Σ f₊/N, Σ f₋/N)`.
    pub fn signed_masses(&self) -> (f64, f64) {
        let n = self.len() as f64;
        let pos: f64 = self.samples.iter().filter(|&&v| v > 0.0).sum();
        let neg: f64 = self.samples.iter().filter(|&&v| v < 0.0).map(|v| -v).sum();
        // an empty float sum is −0.0; normalize the sign
        (pos / n + 0.0, neg / n + 0.0)
    }

    pub fn min(&self) -> f64 {
        self.samples.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

pub(crate) fn lp_norm_of(moduli: impl Iterator<Item = f64>, n: usize, p: f64) -> Result<f64> {
    if p.is_nan() || p <= 0.0 {
        return Err(Error::BadExponent(p));
    }
    if p.is_infinite() {
        return Ok(moduli.fold(0.0, f64::max));
    }
    let n = n as f64;
    Ok(if p == 1.0 {
        moduli.sum::<f64>() / n
    } else if p == 2.0 {
        (moduli.map(|m| m * m).sum::<f64>() / n).sqrt()
    } else {
        (moduli.map(|m| m.powf(p)).sum::<f64>() / n).powf(1.0 / p)
    })
}

/// A subset of the grid, stored as a boolean mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySet {
    mask: Vec<bool>,
}

impl BoundarySet {
    pub fn from_mask(mask: Vec<bool>) -> Self {
        Self { mask }
    }

    pub fn full(n: usize) -> Self {
        Self { mask: vec![true; n] }
    }

    pub fn empty(n: usize) -> Self {
        Self { mask: vec![false; n] }
    }

    /// Grid points whose angle lies in the arc `[start, end)`, measured
    /// counter-clockwise and taken modulo 2π. An arc of length ≥ 2π is the
    /// whole circle.
    pub fn arc(n: usize, start: f64, end: f64) -> Self {
        let len = end - start;
        if len >= TAU {
            return Self::full(n);
        }
        if len <= 0.0 {
            return Self::empty(n);
        }
        let s = start.rem_euclid(TAU);
        let mask = (0..n)
            .map(|k| (grid_angle(n, k) - s).rem_euclid(TAU) < len)
            .collect();
        Self { mask }
    }

    /// `{k : pred(f_k)}`.
    pub fn level_set(f: &CircleFn<f64>, pred: impl Fn(f64) -> bool) -> Self {
        Self {
            mask: f.samples().iter().map(|&v| pred(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.mask.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.mask[k]
    }

    pub fn count(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    /// Normalized measure `#S / N`.
    pub fn measure(&self) -> f64 {
        self.count() as f64 / self.len() as f64
    }

    pub fn complement(&self) -> Self {
        Self {
            mask: self.mask.iter().map(|m| !m).collect(),
        }
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::poisson::poisson_kernel;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn poisson_samples(n: usize, r: f64) -> CircleFn {
        CircleFn::from_fn(n, |t| poisson_kernel(r, t).unwrap()).unwrap()
    }

    #[test]
    fn mean_examples() {
        let one = CircleFn::constant(16, 1.0).unwrap();
        assert_eq!(one.mean(), 1.0);
        let cos = CircleFn::from_fn(256, f64::cos).unwrap();
        assert!(cos.mean().abs() < 1e-12);
        let p = poisson_samples(4096, 0.5);
        assert!((p.mean() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn lp_norm_examples() {
        let c = CircleFn::constant(64, -2.5).unwrap();
        for p in [0.5, 1.0, 2.0, 3.7, f64::INFINITY] {
            assert!((c.lp_norm(p).unwrap() - 2.5).abs() < 1e-12);
        }
        let half = CircleFn::from_fn(128, |t| if t < PI { 1.0 } else { 0.0 }).unwrap();
        assert!((half.lp_norm(1.0).unwrap() - 0.5).abs() < 1e-15);
        let p = poisson_samples(1 << 16, 0.5).sub_constant(1.0);
        assert!((p.lp_norm(1.0).unwrap() - 2.0 / 3.0).abs() < 1e-5);
    }

    #[test]
    fn lp_norm_rejects_bad_exponent() {
        let c = CircleFn::constant(8, 1.0).unwrap();
        assert_eq!(c.lp_norm(0.0), Err(Error::BadExponent(0.0)));
        assert!(c.lp_norm(-1.0).is_err());
        assert!(c.lp_norm(f64::NAN).is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(CircleFn::new(vec![1.0]), Err(Error::GridTooSmall(1)));
        assert_eq!(CircleFn::new(vec![1.0, f64::NAN]), Err(Error::NonFinite(1)));
    }

    #[test]
    fn convolve_with_constant_gives_mean() {
        let f = CircleFn::from_fn(64, |t| (3.0 * t).sin() + 0.3 * t).unwrap();
        let one = CircleFn::constant(64, 1.0).unwrap();
        let g = f.convolve(&one).unwrap();
        for &v in g.samples() {
            assert!((v - f.mean()).abs() < 1e-12);
        }
    }

    #[test]
    fn convolve_poisson_semigroup() {
        let n = 4096;
        let p = poisson_samples(n, 0.5);
        let pp = p.convolve(&p).unwrap();
        for (k, &v) in pp.samples().iter().enumerate() {
            let exact = poisson_kernel(0.25, grid_angle(n, k)).unwrap();
            assert!((v - exact).abs() < 1e-6, "k={k}: {v} vs {exact}");
        }
    }

    #[test]
    fn convolve_matches_direct_sum() {
        let n = 128;
        let f = CircleFn::from_fn(n, |t| (t * 1.7).cos() + (2.0 * t).sin().powi(3)).unwrap();
        let g = CircleFn::from_fn(n, |t| (t - 1.0).abs()).unwrap();
        let fg = f.convolve(&g).unwrap();
        for j in 0..n {
            let direct: f64 = (0..n)
                .map(|k| f.samples()[k] * g.samples()[(j + n - k) % n])
                .sum::<f64>()
                / n as f64;
            assert!((fg.samples()[j] - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn convolve_grid_mismatch() {
        let a = CircleFn::constant(8, 1.0).unwrap();
        let b = CircleFn::constant(16, 1.0).unwrap();
        assert_eq!(
            a.convolve(&b),
            Err(Error::GridMismatch { left: 8, right: 16 })
        );
    }

    #[test]
    fn rearrangement_sorts() {
        let f = CircleFn::new(vec![3.0, 1.0, 2.0, 0.0]).unwrap();
        assert_eq!(f.decreasing_rearrangement().samples(), &[3.0, 2.0, 1.0, 0.0]);
    }

    #[test]
    fn rearranged_poisson_is_half_angle_profile() {
        let n = 1024;
        let r = 0.6;
        let h = TAU / n as f64;
        let star = poisson_samples(n, r).decreasing_rearrangement();
        for k in 0..n {
            let t = grid_angle(n, k);
            let hi = poisson_kernel(r, t / 2.0).unwrap();
            let lo = poisson_kernel(r, ((t + h) / 2.0).min(PI)).unwrap();
            let v = star.samples()[k];
            assert!(v <= hi + 1e-12 && v >= lo - 1e-12, "k={k}");
        }
    }

    #[test]
    fn integrate_over_examples() {
        let n = 256;
        let one = CircleFn::constant(n, 1.0).unwrap();
        let half = BoundarySet::arc(n, 0.0, PI);
        assert!((one.integrate_over(&half).unwrap() - 0.5).abs() < 1e-15);
        let f = CircleFn::from_fn(n, |t| t.sin() + 2.0).unwrap();
        let all = BoundarySet::full(n);
        assert!((f.integrate_over(&all).unwrap() - f.mean()).abs() < 1e-15);
    }

    #[test]
    fn arc_measure_and_wraparound() {
        let n = 64;
        let a = BoundarySet::arc(n, -PI / 2.0, PI / 2.0);
        assert_eq!(a.count(), 32);
        assert!(a.contains(0) && a.contains(63) && !a.contains(32));
        assert_eq!(BoundarySet::arc(n, 1.0, 1.0 + TAU).measure(), 1.0);
        assert_eq!(BoundarySet::arc(n, 1.0, 1.0).measure(), 0.0);
    }

    fn real_fn(n: usize) -> impl Strategy<Value = CircleFn> {
        prop::collection::vec(-10.0f64..10.0, n).prop_map(|v| CircleFn::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn young_and_mean_product((f, g) in (real_fn(64), real_fn(64))) {
            let fg = f.convolve(&g).unwrap();
            let lhs = fg.lp_norm(1.0).unwrap();
            let rhs = f.lp_norm(1.0).unwrap() * g.lp_norm(1.0).unwrap();
            prop_assert!(lhs <= rhs * (1.0 + 1e-12) + 1e-12);
            prop_assert!((fg.mean() - f.mean() * g.mean()).abs() < 1e-12 * (1.0 + rhs));
        }

        #[test]
        fn rearrangement_idempotent_and_equimeasurable(f in real_fn(97)) {
            let s = f.decreasing_rearrangement();
            prop_assert_eq!(s.decreasing_rearrangement(), s.clone());
            for p in [1.0, 2.0, f64::INFINITY] {
                let a = f.lp_norm(p).unwrap();
                let b = s.lp_norm(p).unwrap();
                prop_assert!((a - b).abs() <= 1e-12 * (1.0 + a));
            }
        }

        #[test]
        fn set_and_complement_split_mean(f in real_fn(50), mask in prop::collection::vec(any::<bool>(), 50)) {
            let s = BoundarySet::from_mask(mask);
            let total = f.integrate_over(&s).unwrap() + f.integrate_over(&s.complement()).unwrap();
            prop_assert!((total - f.mean()).abs() < 1e-12);
        }
    }
}
