//! Poisson kernel and harmonic measure of arcs.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::circlefn::{grid_angle, CircleFn};
use crate::error::{Error, Result};

/// `P_r(e^{it}) = (1−r²)/(1−2r cos t + r²)` for `0 ≤ r < 1`.
pub fn poisson_kernel(r: f64, t: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(kernel_unchecked(r, t))
}

#[inline]
pub(crate) fn kernel_unchecked(r: f64, t: f64) -> f64 {
    (1.0 - r * r) / (1.0 - 2.0 * r * t.cos() + r * r)
}

pub(crate) fn check_radius(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::OutOfRange {
            name: "r",
            value: r,
            range: "[0, 1)",
        });
    }
    Ok(())
}

/// Samples of `P_r` on an `n`-point grid.
pub fn poisson_samples(n: usize, r: f64) -> Result<CircleFn> {
    check_radius(r)?;
    CircleFn::from_fn(n, |t| kernel_unchecked(r, t))
}

/// Samples of `P_r(θ_k − angle)` rescaled to unit grid mean.
///
/// The sampled kernel has grid mean `(1+r^N)/(1−r^N)` when `angle` is a grid
/// angle; rescaling keeps the mean-value property exact on every grid, and
/// is a no-op in floating point once `r^N` underflows. As `r → 1` the
/// rescaled profile tends to the discrete point mass at `angle`.
pub fn poisson_profile(n: usize, r: f64, angle: f64) -> Result<CircleFn> {
    check_radius(r)?;
    let raw: Vec<f64> = (0..n)
        .map(|k| kernel_unchecked(r, grid_angle(n, k) - angle))
        .collect();
    let mean = raw.iter().sum::<f64>() / n as f64;
    CircleFn::new(raw.into_iter().map(|v| v / mean).collect())
}

/// Harmonic measure at the point `r` of the arc from angle `gamma` to
/// angle `delta` (counter-clockwise), computed from the angle `φ` that the
/// arc subtends at `r`: the value is `φ/π − (δ−γ)/2π`.
pub fn harmonic_measure_arc(r: f64, gamma: f64, delta: f64) -> Result<f64> {
    check_radius(r)?;
    harmonic_measure_arc_at(Complex64::new(r, 0.0), gamma, delta)
}

/// [`harmonic_measure_arc`] at an arbitrary interior point `z`.
pub fn harmonic_measure_arc_at(z: Complex64, gamma: f64, delta: f64) -> Result<f64> {
    if z.norm() >= 1.0 {
        return Err(Error::OutOfRange {
            name: "|z|",
            value: z.norm(),
            range: "[0, 1)",
        });
    }
    let len = delta - gamma;
    if !(len > 0.0 && len <= TAU) {
        return Err(Error::OutOfRange {
            name: "delta - gamma",
            value: len,
            range: "(0, 2π]",
        });
    }
    let phi = if len == TAU {
        TAU
    } else {
        let a = Complex64::from_polar(1.0, gamma) - z;
        let b = Complex64::from_polar(1.0, delta) - z;
        (b / a).arg().rem_euclid(TAU)
    };
    Ok(phi / PI - len / TAU)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn kernel_values() {
        assert_eq!(poisson_kernel(0.0, 1.234).unwrap(), 1.0);
        assert!((poisson_kernel(0.5, 0.0).unwrap() - 3.0).abs() < 1e-15);
        assert!(poisson_kernel(1.0, 0.0).is_err());
        assert!(poisson_kernel(-0.1, 0.0).is_err());
        for r in [0.0, 0.3, 0.6, 0.9] {
            let p = poisson_samples(4096, r).unwrap();
            assert!((p.mean() - 1.0).abs() < 1e-9);
            assert!(p.samples().iter().all(|&v| v > 0.0));
        }
    }

    #[test]
    fn arc_examples() {
        assert!((harmonic_measure_arc(0.4, 0.3, 0.3 + TAU).unwrap() - 1.0).abs() < 1e-15);
        assert!((harmonic_measure_arc(0.0, 0.0, PI / 2.0).unwrap() - 0.25).abs() < 1e-15);
        let c = 0.5f64.acos();
        assert!((harmonic_measure_arc(0.5, -c, c).unwrap() - 2.0 / 3.0).abs() < 1e-14);
        assert!(harmonic_measure_arc(0.5, 1.0, 0.5).is_err());
    }

    // Midpoint quadrature of the kernel over the arc; the kernel is smooth,
    // so the only error is the partial cells at the two ends, which are
    // integrated exactly by sub-sampling.
    fn arc_quadrature(r: f64, gamma: f64, delta: f64, n: usize) -> f64 {
        let h = (delta - gamma) / n as f64;
        (0..n)
            .map(|k| kernel_unchecked(r, gamma + (k as f64 + 0.5) * h))
            .sum::<f64>()
            * h
            / TAU
    }

    #[test]
    fn arc_formula_matches_quadrature() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for r in [0.3, 0.7] {
            for _ in 0..100 {
                let g: f64 = rng.gen_range(-PI..PI);
                let d = g + rng.gen_range(1e-3..TAU);
                let exact = harmonic_measure_arc(r, g, d).unwrap();
                let quad = arc_quadrature(r, g, d, 1 << 16);
                assert!((exact - quad).abs() < 1e-8, "r={r} [{g}, {d}]: {exact} vs {quad}");
            }
        }
    }
}
