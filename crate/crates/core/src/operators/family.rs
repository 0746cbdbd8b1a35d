//! Parametric function families used as candidate extremals.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::circlefn::CircleFn;
use crate::error::{Error, Result};
use crate::spaces::{poisson_profile, Analytic, HarmonicFn, TaylorFn};

pub const MAX_POLY_DEGREE: usize = 64;

/// Disc automorphism `f_a(z) = (a − z)/(1 − a z)`, `0 < a < 1`.
///
/// `|f_a| = 1` on the circle, `f_a(0) = a` and `f_a(1) = −1`, so
/// `‖f_a − f_a(0)‖_∞ = 1 + a`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mobius {
    a: f64,
}

impl Mobius {
    pub fn new(a: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&a) {
            return Err(Error::OutOfRange {
                name: "a",
                value: a,
                range: "[0, 1)",
            });
        }
        Ok(Self { a })
    }

    pub fn a(&self) -> f64 {
        self.a
    }
}

impl Analytic for Mobius {
    fn eval(&self, z: Complex64) -> Complex64 {
        (self.a - z) / (1.0 - self.a * z)
    }

    fn value_at_origin(&self) -> Complex64 {
        Complex64::new(self.a, 0.0)
    }
}

fn check_cutoff(n: usize, grid: usize, cells: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: 0.0,
            range: "[1, ∞)",
        });
    }
    if cells < 1.0 || cells + 3.0 > grid as f64 {
        return Err(Error::Unsupported(format!(
            "cutoff n={n} is not resolved by a {grid}-point grid"
        )));
    }
    Ok(())
}

/// Boundary data `πn · 1_{[−1/n, 1/n]}`: unit mass on an arc of normalized
/// measure `1/(πn)`.
///
/// The arc spans a non-integer number `L = N/(πn)` of grid cells. The
/// representation uses `⌊L⌋` cells at or above the level `πn` and splits
/// the fractional remainder `φ = L − ⌊L⌋` over the two neighbouring cells
/// (`φ/2` each), with the mass those cells lack added to the block ends.
/// This keeps `mean = 1`, `‖f‖₁ = 1` and `‖f − 1‖₁ = 2 − 2/(πn)` exact on
/// the grid.
pub fn cutoff(n: usize, grid: usize) -> Result<HarmonicFn> {
    let height = PI * n as f64;
    let cells = grid as f64 / height;
    check_cutoff(n, grid, cells)?;
    let whole = cells.floor() as usize;
    let frac = cells - whole as f64;
    let start = grid - whole / 2;
    let idx = |j: usize| (start + j) % grid;
    let mut v = vec![0.0; grid];
    for j in 0..whole {
        v[idx(j)] = height;
    }
    let extra = frac * (height - 1.0) / 2.0;
    v[idx(0)] += extra;
    v[idx(whole - 1)] += extra;
    v[(start + grid - 1) % grid] = frac / 2.0;
    v[idx(whole)] = frac / 2.0;
    Ok(HarmonicFn::from_boundary(CircleFn::new(v)?))
}

/// Boundary data `πn` on `[0, 1/n]` and `−πn` on `[−1/n, 0)`; mean zero,
/// unit `L¹` norm.
pub fn sign_alternating_cutoff(n: usize, grid: usize) -> Result<HarmonicFn> {
    let height = PI * n as f64;
    let cells = grid as f64 / (2.0 * height);
    check_cutoff(n, grid, 2.0 * cells)?;
    let whole = cells.floor() as usize;
    let frac = cells - whole as f64;
    let mut v = vec![0.0; grid];
    for j in 0..whole {
        v[j] = height;
        v[grid - 1 - j] = -height;
    }
    v[whole] = frac * height;
    v[grid - 1 - whole] = -frac * height;
    Ok(HarmonicFn::from_boundary(CircleFn::new(v)?))
}

/// Families searched by [`search_lower_bound`](super::search_lower_bound).
#[derive(Clone, Debug, PartialEq)]
pub enum ExtremalFamily {
    /// `a ∈ [0, a_max]`
    Mobius { a_max: f64 },
    /// `n ∈ {1, …, max_n}`
    Cutoff { max_n: usize },
    /// Poisson profile `P_ρ(θ)` as boundary data, `ρ ∈ [0, rho_max]`
    Poisson { rho_max: f64 },
    /// Real polynomials with coefficients in `[−bound, bound]`
    Poly { degree: usize, bound: f64 },
}

/// A family member, ready for [`ratio`](super::ratio).
pub enum Candidate {
    Analytic(Box<dyn Analytic>),
    Harmonic(HarmonicFn),
}

impl ExtremalFamily {
    pub fn mobius() -> Self {
        ExtremalFamily::Mobius { a_max: 0.999 }
    }

    pub fn poisson() -> Self {
        ExtremalFamily::Poisson { rho_max: 0.999 }
    }

    pub fn poly(degree: usize) -> Self {
        ExtremalFamily::Poly { degree, bound: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |name, value, range| Err(Error::OutOfRange { name, value, range });
        match *self {
            ExtremalFamily::Mobius { a_max } if !(0.0 < a_max && a_max < 1.0) => bad("a_max", a_max, "(0, 1)"),
            ExtremalFamily::Cutoff { max_n: 0 } => bad("max_n", 0.0, "[1, ∞)"),
            ExtremalFamily::Poisson { rho_max } if !(0.0..1.0).contains(&rho_max) => {
                bad("rho_max", rho_max, "[0, 1)")
            }
            ExtremalFamily::Poly { degree, .. } if degree > MAX_POLY_DEGREE => {
                bad("degree", degree as f64, "[0, 64]")
            }
            ExtremalFamily::Poly { bound, .. } if !(bound > 0.0 && bound.is_finite()) => {
                bad("bound", bound, "(0, ∞)")
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ExtremalFamily::Mobius { .. } => "mobius",
            ExtremalFamily::Cutoff { .. } => "cutoff",
            ExtremalFamily::Poisson { .. } => "poisson",
            ExtremalFamily::Poly { .. } => "poly",
        }
    }

    pub fn is_discrete(&self) -> bool {
        matches!(self, ExtremalFamily::Cutoff { .. })
    }

    /// Parameter box `[lo_i, hi_i]`.
    pub fn bounds(&self) -> Vec<(f64, f64)> {
        match *self {
            ExtremalFamily::Mobius { a_max } => vec![(0.0, a_max)],
            ExtremalFamily::Cutoff { max_n } => vec![(1.0, max_n as f64)],
            ExtremalFamily::Poisson { rho_max } => vec![(0.0, rho_max)],
            ExtremalFamily::Poly { degree, bound } => vec![(-bound, bound); degree + 1],
        }
    }

    pub fn instantiate(&self, params: &[f64], grid: usize) -> Result<Candidate> {
        match self {
            ExtremalFamily::Mobius { .. } => Ok(Candidate::Analytic(Box::new(Mobius::new(params[0])?))),
            ExtremalFamily::Cutoff { .. } => Ok(Candidate::Harmonic(cutoff(params[0].round() as usize, grid)?)),
            ExtremalFamily::Poisson { .. } => Ok(Candidate::Harmonic(HarmonicFn::from_boundary(
                poisson_profile(grid, params[0], 0.0)?,
            ))),
            ExtremalFamily::Poly { .. } => Ok(Candidate::Analytic(Box::new(TaylorFn::from_real(params)?))),
        }
    }
}

impl fmt::Display for ExtremalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremalFamily::Mobius { a_max } => write!(f, "mobius(a ≤ {a_max})"),
            ExtremalFamily::Cutoff { max_n } => write!(f, "cutoff(n ≤ {max_n})"),
            ExtremalFamily::Poisson { rho_max } => write!(f, "poisson(ρ ≤ {rho_max})"),
            ExtremalFamily::Poly { degree, bound } => write!(f, "poly(degree {degree}, |a_k| ≤ {bound})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let f = Mobius::new(0.3).unwrap();
        assert!((f.eval(Complex64::new(1.0, 0.0)) + 1.0).norm() < 1e-15);
        assert_eq!(f.value_at_origin(), Complex64::new(0.3, 0.0));
        let b = f.on_circle(1.0, 64).unwrap();
        assert!(b.samples().iter().all(|v| (v.norm() - 1.0).abs() < 1e-14));
        assert!(Mobius::new(1.0).is_err());
    }

    #[test]
    fn cutoff_support_integral() {
        use crate::circlefn::BoundarySet;
        let grid = 4096;
        let f = cutoff(4, grid).unwrap();
        let support = BoundarySet::level_set(f.boundary(), |v| v > 0.0);
        assert!((f.boundary().integrate_over(&support).unwrap() - 1.0).abs() < 1e-12);
        // subtracting f(0) = 1: (πn − 1) on the arc of measure 1/(πn)
        // f − f(0) over the block where f ≥ 1: the block carries
        // ⌊L⌋ + φ cells' worth of width, so the integral is 1 − 1/(πn).
        let above = BoundarySet::level_set(f.boundary(), |v| v >= 1.0);
        assert_eq!(support.count() - above.count(), 2);
        let got = f.boundary().sub_constant(1.0).integrate_over(&above).unwrap();
        assert!((got - (1.0 - 1.0 / (4.0 * PI))).abs() < 1e-12, "{got}");
        let dev = f.boundary().sub_constant(1.0).lp_norm(1.0).unwrap();
        assert!((dev - (2.0 - 2.0 / (4.0 * PI))).abs() < 1e-12, "{dev}");
    }

    #[test]
    fn sign_alternating_mass() {
        let f = sign_alternating_cutoff(3, 4096).unwrap();
        assert!(f.boundary().mean().abs() < 1e-12);
        assert!((f.boundary().lp_norm(1.0).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cutoff_rejects_unresolved() {
        assert!(cutoff(0, 4096).is_err());
        assert!(cutoff(2000, 4096).is_err());
        assert!(sign_alternating_cutoff(2000, 4096).is_err());
    }

    #[test]
    fn family_validation() {
        assert!(ExtremalFamily::Poly { degree: 65, bound: 1.0 }.validate().is_err());
        assert!(ExtremalFamily::Mobius { a_max: 1.0 }.validate().is_err());
        assert!(ExtremalFamily::Cutoff { max_n: 0 }.validate().is_err());
        assert!(ExtremalFamily::poly(64).validate().is_ok());
        assert_eq!(ExtremalFamily::poly(3).bounds().len(), 4);
    }
}
