//! Analytic functions on the disc: the [`Analytic`] trait and [`TaylorFn`].

use num_complex::Complex64;

use crate::circlefn::{fft_inverse, grid_angle, CircleFn};
use crate::error::{Error, Result};

/// An analytic function on the unit disc that can be evaluated on circles.
pub trait Analytic: Send + Sync {
    fn eval(&self, z: Complex64) -> Complex64;

    fn value_at_origin(&self) -> Complex64 {
        self.eval(Complex64::new(0.0, 0.0))
    }

    /// Samples of `f(r e^{iθ_k})` on an `n`-point grid. `r = 1` gives the
    /// boundary function for functions that extend continuously.
    fn on_circle(&self, r: f64, n: usize) -> Result<CircleFn<Complex64>> {
        CircleFn::from_fn(n, |t| self.eval(Complex64::from_polar(r, t)))
    }
}

/// Analytic polynomial `Σ a_k z^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorFn {
    coeffs: Vec<Complex64>,
}

impl TaylorFn {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Usage("Taylor coefficient vector is empty".into()));
        }
        if let Some(i) = coeffs.iter().position(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn constant(c: Complex64) -> Self {
        Self { coeffs: vec![c] }
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = Complex64::new(1.0, 0.0);
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Dilation `f_s(z) = f(sz)`: `a_k ↦ a_k s^k`.
    pub fn dilate(&self, s: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&s) {
            return Err(Error::OutOfRange {
                name: "s",
                value: s,
                range: "[0, 1)",
            });
        }
        let mut pow = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                let c = a * pow;
                pow *= s;
                c
            })
            .collect();
        Ok(Self { coeffs })
    }
}

impl Analytic for TaylorFn {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    fn value_at_origin(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Exact samples via one inverse FFT; coefficients beyond the grid are
    /// folded (aliased) onto their residue class mod `n`.
    fn on_circle(&self, r: f64, n: usize) -> Result<CircleFn<Complex64>> {
        if n < 2 {
            return Err(Error::GridTooSmall(n));
        }
        if n < 64 {
            return CircleFn::from_fn(n, |t| self.eval(Complex64::from_polar(r, t)));
        }
        let mut buf = vec![Complex64::new(0.0, 0.0); n];
        let mut pow = 1.0;
        for (k, &a) in self.coeffs.iter().enumerate() {
            buf[k % n] += a * pow;
            pow *= r;
        }
        fft_inverse(&mut buf);
        CircleFn::new(buf)
    }
}

/// Parameters of the integral mean `M_p(r, f)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegralMeanParams {
    pub r: f64,
    pub p: f64,
}

impl IntegralMeanParams {
    pub fn new(r: f64, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::OutOfRange {
                name: "r",
                value: r,
                range: "[0, 1]",
            });
        }
        if p.is_nan() || p <= 0.0 {
            return Err(Error::BadExponent(p));
        }
        Ok(Self { r, p })
    }
}

/// `M_p(r, f)` for an analytic function, sampled on an `n`-point grid.
pub fn integral_mean(f: &dyn Analytic, params: IntegralMeanParams, n: usize) -> Result<f64> {
    f.on_circle(params.r, n)?.lp_norm(params.p)
}

/// `‖f‖_{H^p}`: the boundary `L^p` norm. Means increase with `r`, so for
/// functions continuous up to the boundary the supremum is attained at `r = 1`.
pub fn hardy_norm(f: &dyn Analytic, p: f64, n: usize) -> Result<f64> {
    integral_mean(f, IntegralMeanParams::new(1.0, p)?, n)
}

/// Grid angles as complex unit vectors, used by operators that divide by z.
pub(crate) fn unit_grid(n: usize) -> impl Iterator<Item = Complex64> {
    (0..n).map(move |k| Complex64::from_polar(1.0, grid_angle(n, k)))
}
