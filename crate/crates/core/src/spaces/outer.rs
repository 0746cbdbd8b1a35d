//! Outer functions with prescribed boundary modulus.
//!
//! For a strictly positive boundary modulus `ψ` sampled on the grid, the
//! outer function is `F(z) = exp{(1/N) Σ_k (e^{iθ_k}+z)/(e^{iθ_k}−z) log ψ_k}`,
//! the discretized Herglotz integral of `log ψ`.

use num_complex::Complex64;

use crate::circlefn::{fft_forward, fft_inverse, grid_angle, CircleFn};
use crate::error::{Error, Result};
use crate::spaces::analytic::Analytic;

/// Outer function built from boundary samples of its modulus.
#[derive(Clone, Debug)]
pub struct OuterFn {
    log_psi: Vec<f64>,
    /// Fourier coefficients `ĉ_m = (1/N) Σ_k log ψ_k e^{-imθ_k}`.
    coeffs: Vec<Complex64>,
}

impl OuterFn {
    pub fn new(psi: &CircleFn) -> Result<Self> {
        if let Some((index, &value)) = psi.samples().iter().enumerate().find(|(_, &v)| v <= 0.0) {
            return Err(Error::NonPositiveModulus { index, value });
        }
        let log_psi: Vec<f64> = psi.samples().iter().map(|v| v.ln()).collect();
        let n = log_psi.len() as f64;
        let mut coeffs: Vec<Complex64> = log_psi.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        fft_forward(&mut coeffs);
        for c in &mut coeffs {
            *c /= n;
        }
        Ok(Self { log_psi, coeffs })
    }

    pub fn grid(&self) -> usize {
        self.log_psi.len()
    }

    /// Largest radius at which the discretized kernel is still resolved by
    /// the grid: `1 − 16/N`.
    pub fn max_radius(&self) -> f64 {
        1.0 - 16.0 / self.grid() as f64
    }

    /// `exp(mean(log ψ))`.
    pub fn value_at_origin(&self) -> f64 {
        self.coeffs[0].re.exp()
    }

    /// The Herglotz sum evaluated term by term. Points beyond
    /// [`max_radius`](Self::max_radius) are pulled radially onto it.
    pub fn eval_direct(&self, z: Complex64) -> Result<Complex64> {
        let z = self.clamp(z)?;
        let n = self.grid();
        let sum: Complex64 = self
            .log_psi
            .iter()
            .enumerate()
            .map(|(k, &l)| {
                let e = Complex64::from_polar(1.0, grid_angle(n, k));
                (e + z) / (e - z) * l
            })
            .sum();
        Ok((sum / n as f64).exp())
    }

    /// Samples of `F(r e^{iθ_j})` for all grid angles at once, using
    /// `H(z) = ĉ_0 + 2/(1−z^N) Σ_{m=1}^{N} ĉ_m z^m`, which equals the Herglotz
    /// sum exactly.
    pub fn circle_values(&self, r: f64) -> Result<CircleFn<Complex64>> {
        let r = self.clamp(Complex64::new(r, 0.0))?.re;
        let n = self.grid();
        let mut buf = vec![Complex64::new(0.0, 0.0); n];
        let mut pow = 1.0;
        for m in 1..n {
            pow *= r;
            buf[m] = self.coeffs[m] * pow;
        }
        buf[0] = self.coeffs[0] * pow * r;
        let scale = 2.0 / (1.0 - pow * r);
        fft_inverse(&mut buf);
        CircleFn::new(buf.into_iter().map(|s| (self.coeffs[0] + s * scale).exp()).collect())
    }

    /// Boundary values via the discrete analytic projection of `log ψ`
    /// (frequencies `0..N/2`, with the Nyquist term counted once). Their
    /// modulus is exactly `ψ`.
    pub fn boundary_values(&self) -> Result<CircleFn<Complex64>> {
        let n = self.grid();
        let mut buf = vec![Complex64::new(0.0, 0.0); n];
        buf[0] = self.coeffs[0];
        for m in 1..n.div_ceil(2) {
            buf[m] = self.coeffs[m] * 2.0;
        }
        if n.is_multiple_of(2) {
            buf[n / 2] = self.coeffs[n / 2];
        }
        fft_inverse(&mut buf);
        let vals = buf
            .into_iter()
            .zip(&self.log_psi)
            .map(|(h, &l)| Complex64::from_polar(l.exp(), h.im))
            .collect();
        CircleFn::new(vals)
    }

    fn clamp(&self, z: Complex64) -> Result<Complex64> {
        let r = z.norm();
        if r >= 1.0 {
            return Err(Error::OutOfRange {
                name: "|z|",
                value: r,
                range: "[0, 1)",
            });
        }
        let cap = self.max_radius().max(0.0);
        Ok(if r > cap { z * (cap / r) } else { z })
    }
}

impl Analytic for OuterFn {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.eval_direct(z).expect("evaluation point inside the disc")
    }

    fn value_at_origin(&self) -> Complex64 {
        Complex64::new(OuterFn::value_at_origin(self), 0.0)
    }
}

/// `F(z)` for the outer function with boundary modulus `ψ`.
pub fn outer_function(psi: &CircleFn, z: Complex64) -> Result<Complex64> {
    OuterFn::new(psi)?.eval_direct(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circlefn::BoundarySet;
    use std::f64::consts::PI;

    #[test]
    fn constant_modulus() {
        let psi = CircleFn::constant(64, 1.0).unwrap();
        let f = outer_function(&psi, Complex64::new(0.3, -0.4)).unwrap();
        assert!((f - 1.0).norm() < 1e-14);
    }

    #[test]
    fn two_valued_modulus_at_origin() {
        let n = 256;
        let a = BoundarySet::arc(n, 0.0, PI);
        let psi = CircleFn::from_fn(n, |t| if t < PI { 0.5 } else { 1.0 }).unwrap();
        assert_eq!(a.measure(), 0.5);
        let f0 = outer_function(&psi, Complex64::new(0.0, 0.0)).unwrap();
        assert!((f0.re - 0.5f64.sqrt()).abs() < 1e-14 && f0.im.abs() < 1e-14);
    }

    #[test]
    fn origin_value_is_geometric_mean() {
        let psi = CircleFn::from_fn(500, |t| 2.0 + (3.0 * t).sin() * 0.7 + (t * 0.5).cos()).unwrap();
        let f = OuterFn::new(&psi).unwrap();
        let geo = psi.map(f64::ln).unwrap().mean().exp();
        assert!((f.value_at_origin() - geo).abs() < 1e-14 * geo);
        assert!((f.eval_direct(Complex64::new(0.0, 0.0)).unwrap().re - geo).abs() < 1e-13);
    }

    #[test]
    fn rejects_nonpositive() {
        let psi = CircleFn::new(vec![1.0, 0.0, 2.0]).unwrap();
        assert_eq!(
            OuterFn::new(&psi).unwrap_err(),
            Error::NonPositiveModulus { index: 1, value: 0.0 }
        );
        let psi = CircleFn::constant(8, 1.0).unwrap();
        assert!(outer_function(&psi, Complex64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn circle_values_match_direct_sum() {
        let n = 256;
        let psi = CircleFn::from_fn(n, |t| 2.0 + t.cos() + 0.3 * (5.0 * t).sin()).unwrap();
        let f = OuterFn::new(&psi).unwrap();
        for r in [0.0, 0.5, 0.9, f.max_radius()] {
            let fast = f.circle_values(r).unwrap();
            for (k, v) in fast.samples().iter().enumerate() {
                let direct = f.eval_direct(Complex64::from_polar(r, grid_angle(n, k))).unwrap();
                assert!((v - direct).norm() < 1e-10 * direct.norm(), "r={r} k={k}");
            }
        }
    }

    fn radial_deviation(n: usize) -> f64 {
        let psi = CircleFn::from_fn(n, |t| 2.0 + t.cos()).unwrap();
        let f = OuterFn::new(&psi).unwrap();
        let vals = f.circle_values(f.max_radius()).unwrap();
        vals.samples()
            .iter()
            .zip(psi.samples())
            .map(|(v, p)| (v.norm() / p - 1.0).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn radial_limit_recovers_modulus() {
        let d1 = radial_deviation(4096);
        let d2 = radial_deviation(8192);
        assert!(d1 < 1e-2, "deviation {d1}");
        // first-order in 1 − r = 16/N: doubling N roughly halves the error
        let ratio = d1 / d2;
        assert!((1.6..2.4).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn boundary_modulus_is_psi() {
        let psi = CircleFn::from_fn(128, |t| 1.0 + 0.5 * (2.0 * t).cos()).unwrap();
        let b = OuterFn::new(&psi).unwrap().boundary_values().unwrap();
        for (v, p) in b.samples().iter().zip(psi.samples()) {
            assert!((v.norm() - p).abs() < 1e-13);
        }
    }
}
