//! Real harmonic functions given as Poisson integrals of boundary data plus
//! finitely many point masses.

use std::f64::consts::TAU;

use crate::circlefn::CircleFn;
use crate::error::{Error, Result};
use crate::spaces::analytic::IntegralMeanParams;
use crate::spaces::poisson::{check_radius, poisson_profile};

/// A point mass `weight · δ_angle` on the boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Atom {
    pub weight: f64,
    pub angle: f64,
}

/// Poisson integral of `boundary · dθ/2π + Σ atoms`.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicFn {
    boundary: CircleFn,
    atoms: Vec<Atom>,
}

impl HarmonicFn {
    pub fn new(boundary: CircleFn, atoms: Vec<Atom>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(atoms.len());
        for a in atoms {
            if !a.weight.is_finite() || !a.angle.is_finite() {
                return Err(Error::Usage(format!("non-finite atom {a:?}")));
            }
            normalized.push(Atom {
                weight: a.weight,
                angle: a.angle.rem_euclid(TAU),
            });
        }
        Ok(Self {
            boundary,
            atoms: normalized,
        })
    }

    pub fn from_boundary(boundary: CircleFn) -> Self {
        Self {
            boundary,
            atoms: Vec::new(),
        }
    }

    pub fn constant(n: usize, c: f64) -> Result<Self> {
        Ok(Self::from_boundary(CircleFn::constant(n, c)?))
    }

    /// The Poisson kernel `weight · P(z e^{-i angle})`: a single point mass.
    pub fn atom(n: usize, weight: f64, angle: f64) -> Result<Self> {
        Self::new(CircleFn::constant(n, 0.0)?, vec![Atom { weight, angle }])
    }

    pub fn boundary(&self) -> &CircleFn {
        &self.boundary
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn grid(&self) -> usize {
        self.boundary.len()
    }

    /// `u(0) = mean(boundary) + Σ weights`.
    pub fn value_at_origin(&self) -> f64 {
        self.boundary.mean() + self.atoms.iter().map(|a| a.weight).sum::<f64>()
    }

    /// Samples of `u(r e^{iθ_k})`: the boundary density convolved with the
    /// Poisson kernel plus one kernel profile per atom (see
    /// [`poisson_profile`] for the grid normalization).
    pub fn poisson_extend(&self, r: f64) -> Result<CircleFn> {
        check_radius(r)?;
        let n = self.grid();
        let kernel = poisson_profile(n, r, 0.0)?;
        let mut ext = kernel.convolve(&self.boundary)?.into_samples();
        for a in &self.atoms {
            let profile = poisson_profile(n, r, a.angle)?;
            for (v, p) in ext.iter_mut().zip(profile.samples()) {
                *v += a.weight * p;
            }
        }
        CircleFn::new(ext)
    }

    /// Total variation of the boundary measure: `‖boundary‖₁ + Σ|weights|`.
    pub fn h1_norm(&self) -> f64 {
        self.boundary.lp_norm(1.0).expect("p = 1 is valid")
            + self.atoms.iter().map(|a| a.weight.abs()).sum::<f64>()
    }

    /// `M_p(r, u)`. At `r = 1` only `p = 1` is defined when atoms are present
    /// (the total variation); without atoms the boundary `L^p` norm is used.
    pub fn integral_mean(&self, params: IntegralMeanParams) -> Result<f64> {
        if params.r < 1.0 {
            return self.poisson_extend(params.r)?.lp_norm(params.p);
        }
        if params.p == 1.0 {
            Ok(self.h1_norm())
        } else if self.atoms.is_empty() {
            self.boundary.lp_norm(params.p)
        } else {
            Err(Error::Unsupported(format!(
                "boundary L^{} mean of a harmonic function with point masses",
                params.p
            )))
        }
    }

    /// `u_s(z) = u(sz)`; point masses become smooth Poisson profiles.
    pub fn dilate(&self, s: f64) -> Result<Self> {
        Ok(Self::from_boundary(self.poisson_extend(s)?))
    }

    /// `u − c` (the constant is absorbed into the boundary density).
    pub fn sub_constant(&self, c: f64) -> Self {
        Self {
            boundary: self.boundary.sub_constant(c),
            atoms: self.atoms.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circlefn::grid_angle;
    use crate::spaces::poisson::poisson_kernel;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_harmonic(rng: &mut ChaCha8Rng, n: usize) -> HarmonicFn {
        let boundary = CircleFn::new((0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap();
        let atoms = (0..rng.gen_range(0..=3))
            .map(|_| Atom {
                weight: rng.gen_range(-2.0..2.0),
                angle: rng.gen_range(0.0..TAU),
            })
            .collect();
        HarmonicFn::new(boundary, atoms).unwrap()
    }

    #[test]
    fn extension_examples() {
        let c = HarmonicFn::constant(128, 2.5).unwrap();
        for &v in c.poisson_extend(0.7).unwrap().samples() {
            assert!((v - 2.5).abs() < 1e-12);
        }
        let p = HarmonicFn::atom(256, 1.0, 0.0).unwrap();
        let ext = p.poisson_extend(0.4).unwrap();
        for (k, &v) in ext.samples().iter().enumerate() {
            assert!((v - poisson_kernel(0.4, grid_angle(256, k)).unwrap()).abs() < 1e-13);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let u = random_harmonic(&mut rng, 256);
        for &v in u.poisson_extend(0.0).unwrap().samples() {
            assert!((v - u.value_at_origin()).abs() < 1e-12);
        }
    }

    #[test]
    fn extension_matches_direct_poisson_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 256;
        let u = random_harmonic(&mut rng, n);
        let r = 0.83;
        let ext = u.poisson_extend(r).unwrap();
        for j in 0..n {
            let t = grid_angle(n, j);
            let mut direct: f64 = (0..n)
                .map(|k| u.boundary().samples()[k] * poisson_kernel(r, t - grid_angle(n, k)).unwrap())
                .sum::<f64>()
                / n as f64;
            for a in u.atoms() {
                direct += a.weight * poisson_kernel(r, t - a.angle).unwrap();
            }
            assert!((ext.samples()[j] - direct).abs() < 1e-9);
        }
    }

    #[test]
    fn mean_value_and_monotone_means() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let u = random_harmonic(&mut rng, 512);
            let mut prev = 0.0;
            for r in [0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.97, 0.999] {
                let ext = u.poisson_extend(r).unwrap();
                assert!((ext.mean() - u.value_at_origin()).abs() < 1e-9);
                let m1 = ext.lp_norm(1.0).unwrap();
                assert!(m1 >= prev - 1e-10, "M1 decreased at r={r}");
                prev = m1;
            }
            assert!(prev <= u.h1_norm() + 1e-10);
        }
    }

    #[test]
    fn dilation_contracts_h1_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let u = random_harmonic(&mut rng, 512);
            let s = rng.gen_range(0.0..0.99);
            let us = u.dilate(s).unwrap();
            assert!(us.h1_norm() <= u.h1_norm() + 1e-10);
            assert!((us.value_at_origin() - u.value_at_origin()).abs() < 1e-10);
        }
        let u = random_harmonic(&mut rng, 64);
        let zero = u.dilate(0.0).unwrap();
        for &v in zero.boundary().samples() {
            assert!((v - u.value_at_origin()).abs() < 1e-12);
        }
    }

    #[test]
    fn boundary_mean_requires_p1_with_atoms() {
        let p = HarmonicFn::atom(64, 1.0, 0.0).unwrap();
        let at_one = |p_exp| IntegralMeanParams::new(1.0, p_exp).unwrap();
        assert_eq!(p.integral_mean(at_one(1.0)).unwrap(), 1.0);
        assert!(p.integral_mean(at_one(2.0)).is_err());
        assert!(p.poisson_extend(1.0).is_err());
    }
}
