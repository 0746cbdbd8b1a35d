//! The operators `B`, `𝓑`, `𝓑_r` and `S` (multiplication by `z`), and the
//! norm ratio `‖op f‖ / ‖f‖` they induce on each supported space.

pub mod family;
pub mod search;

use std::fmt;

use num_complex::Complex64;

use crate::circlefn::CircleFn;
use crate::error::{Error, Result};
use crate::spaces::analytic::unit_grid;
use crate::spaces::{bergman_norm, bergman_norm_harmonic, Analytic, HarmonicFn, RadialWeight, TaylorFn};

pub use family::{cutoff, sign_alternating_cutoff, ExtremalFamily, Mobius};
pub use search::{search_lower_bound, SearchReport, SearchSettings};

/// `f ↦ f − f(0)`.
pub trait SubtractValue {
    fn subtract_value(&self) -> Self;
}

impl SubtractValue for TaylorFn {
    fn subtract_value(&self) -> Self {
        let mut c = self.coeffs().to_vec();
        c[0] = Complex64::new(0.0, 0.0);
        TaylorFn::new(c).expect("finite coefficients")
    }
}

impl SubtractValue for HarmonicFn {
    fn subtract_value(&self) -> Self {
        self.sub_constant(self.value_at_origin())
    }
}

/// `B f = (f − f(0))/z`: drop `a_0` and shift the remaining coefficients down.
pub fn backward_shift(f: &TaylorFn) -> TaylorFn {
    let c = f.coeffs();
    if c.len() == 1 {
        return TaylorFn::constant(Complex64::new(0.0, 0.0));
    }
    TaylorFn::new(c[1..].to_vec()).expect("finite coefficients")
}

/// `S f = z f`.
pub fn multiply_by_z(f: &TaylorFn) -> TaylorFn {
    let mut c = Vec::with_capacity(f.coeffs().len() + 1);
    c.push(Complex64::new(0.0, 0.0));
    c.extend_from_slice(f.coeffs());
    TaylorFn::new(c).expect("finite coefficients")
}

/// `𝓑_r u = u(r e^{iθ}) − u(0)` as a function on the circle.
pub fn szop_r_apply(u: &HarmonicFn, r: f64) -> Result<CircleFn> {
    Ok(u.poisson_extend(r)?.sub_constant(u.value_at_origin()))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Operator {
    /// `B f = (f − f(0))/z`
    BackwardShift,
    /// `𝓑 f = f − f(0)`
    Subtract,
    /// `𝓑_r u = (u − u(0))` restricted to the circle of radius `r`
    SubtractAtRadius(f64),
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::BackwardShift => write!(f, "B"),
            Operator::Subtract => write!(f, "szop"),
            Operator::SubtractAtRadius(r) => write!(f, "szop_r(r={r})"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Space {
    /// `H^p`, `p ∈ (0, ∞]`.
    Hardy(f64),
    /// `A^p(w)` (analytic) or `a^p(w)` (harmonic), `p < ∞`.
    Bergman { p: f64, weight: RadialWeight },
    /// Real harmonic Hardy space `h¹`.
    HarmonicH1,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Hardy(p) if p.is_infinite() => write!(f, "H^inf"),
            Space::Hardy(p) => write!(f, "H^{p}"),
            Space::Bergman { p, weight } => write!(f, "A^{p}(w={})", weight.label()),
            Space::HarmonicH1 => write!(f, "h^1"),
        }
    }
}

/// Function handed to [`ratio`].
#[derive(Clone, Copy)]
pub enum Subject<'a> {
    Analytic(&'a dyn Analytic),
    Harmonic(&'a HarmonicFn),
}

/// `f − f(0)` or `(f − f(0))/z` as an analytic function.
struct Applied<'a> {
    f: &'a dyn Analytic,
    f0: Complex64,
    divide: bool,
}

impl Analytic for Applied<'_> {
    fn eval(&self, z: Complex64) -> Complex64 {
        if !self.divide {
            return self.f.eval(z) - self.f0;
        }
        if z.norm() < 1e-7 {
            let h = 1e-6;
            let d = (self.f.eval(Complex64::new(h, 0.0)) - self.f.eval(Complex64::new(-h, 0.0))) / (2.0 * h);
            return d;
        }
        (self.f.eval(z) - self.f0) / z
    }

    fn value_at_origin(&self) -> Complex64 {
        if self.divide {
            self.eval(Complex64::new(0.0, 0.0))
        } else {
            Complex64::new(0.0, 0.0)
        }
    }

    fn on_circle(&self, r: f64, n: usize) -> Result<CircleFn<Complex64>> {
        let base = self.f.on_circle(r, n)?;
        if !self.divide {
            return Ok(base.sub_constant(self.f0));
        }
        if r == 0.0 {
            return CircleFn::constant(n, self.eval(Complex64::new(0.0, 0.0)));
        }
        CircleFn::new(
            base.samples()
                .iter()
                .zip(unit_grid(n))
                .map(|(&v, e)| (v - self.f0) / (e * r))
                .collect(),
        )
    }
}

fn checked_ratio(num: f64, den: f64) -> Result<f64> {
    if den <= 0.0 || !den.is_finite() {
        return Err(Error::ZeroNorm);
    }
    Ok(num / den)
}

/// `‖op f‖ / ‖f‖` in the given space, with circle integrals on an
/// `n`-point grid (harmonic functions carry their own grid).
pub fn ratio(op: Operator, f: Subject<'_>, space: &Space, n: usize) -> Result<f64> {
    match (f, space, op) {
        (Subject::Analytic(f), Space::Hardy(p), Operator::BackwardShift | Operator::Subtract) => {
            let boundary = f.on_circle(1.0, n)?;
            let den = boundary.lp_norm(*p)?;
            let f0 = f.value_at_origin();
            let applied = boundary.sub_constant(f0);
            // |z| = 1 on the boundary grid, so B and 𝓑 share the same norm there.
            let num = match op {
                Operator::BackwardShift => CircleFn::new(
                    applied.samples().iter().zip(unit_grid(n)).map(|(v, e)| v / e).collect(),
                )?
                .lp_norm(*p)?,
                _ => applied.lp_norm(*p)?,
            };
            checked_ratio(num, den)
        }
        (Subject::Analytic(f), Space::Bergman { p, weight }, Operator::BackwardShift | Operator::Subtract) => {
            let applied = Applied {
                f,
                f0: f.value_at_origin(),
                divide: op == Operator::BackwardShift,
            };
            let den = bergman_norm(f, *p, weight, n)?;
            let num = bergman_norm(&applied, *p, weight, n)?;
            checked_ratio(num, den)
        }
        (Subject::Harmonic(u), Space::HarmonicH1, Operator::Subtract) => {
            checked_ratio(u.subtract_value().h1_norm(), u.h1_norm())
        }
        (Subject::Harmonic(u), Space::HarmonicH1, Operator::SubtractAtRadius(r)) => {
            checked_ratio(szop_r_apply(u, r)?.lp_norm(1.0)?, u.h1_norm())
        }
        (Subject::Harmonic(u), Space::Bergman { p, weight }, Operator::Subtract) => {
            let den = bergman_norm_harmonic(u, *p, weight)?;
            let num = bergman_norm_harmonic(&u.subtract_value(), *p, weight)?;
            checked_ratio(num, den)
        }
        (_, space, op) => Err(Error::Unsupported(format!("operator {op} on {space} for this function type"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::closed_form::sharp_szr_constant;
    use crate::spaces::hardy_norm;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> TaylorFn {
        TaylorFn::new(
            (0..=degree)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn subtract_value_examples() {
        let k = TaylorFn::constant(c(4.0));
        assert_eq!(k.subtract_value().coeffs(), &[c(0.0)]);
        let u = HarmonicFn::constant(64, 3.0).unwrap();
        assert!(u.subtract_value().h1_norm() < 1e-15);
        let f = TaylorFn::from_real(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(f.subtract_value().subtract_value(), f.subtract_value());
    }

    #[test]
    fn cutoff_norms() {
        let n = 4096;
        for m in [1usize, 2, 4, 16, 64] {
            let f = cutoff(m, n).unwrap();
            assert!((f.value_at_origin() - 1.0).abs() < 1e-12);
            assert!((f.h1_norm() - 1.0).abs() < 1e-12);
            let expect = 2.0 - 2.0 / (PI * m as f64);
            assert!((f.subtract_value().h1_norm() - expect).abs() < 1e-12, "n={m}");
        }
        let f4 = cutoff(4, n).unwrap();
        assert!((f4.subtract_value().h1_norm() - (2.0 - 1.0 / (2.0 * PI))).abs() < 1e-12);
    }

    #[test]
    fn sign_alternating_has_ratio_one() {
        for m in [1usize, 3, 10, 64] {
            let g = sign_alternating_cutoff(m, 4096).unwrap();
            assert!(g.value_at_origin().abs() < 1e-14);
            let r = ratio(Operator::Subtract, Subject::Harmonic(&g), &Space::HarmonicH1, 0).unwrap();
            assert!((r - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn backward_shift_examples() {
        assert_eq!(backward_shift(&TaylorFn::constant(c(1.0))).coeffs(), &[c(0.0)]);
        for k in 1..6 {
            assert_eq!(backward_shift(&TaylorFn::monomial(k)), TaylorFn::monomial(k - 1));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let f = random_poly(&mut rng, 6);
            for p in [1.0, 2.0, 3.0, f64::INFINITY] {
                let a = hardy_norm(&backward_shift(&f), p, 512).unwrap();
                let b = hardy_norm(&f.subtract_value(), p, 512).unwrap();
                assert!((a - b).abs() < 1e-12 * (1.0 + a));
            }
        }
    }

    #[test]
    fn multiply_by_z_examples() {
        assert_eq!(multiply_by_z(&TaylorFn::constant(c(1.0))), TaylorFn::monomial(1));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let w = RadialWeight::power(2.0, 64).unwrap();
        for _ in 0..20 {
            let f = random_poly(&mut rng, 5);
            let zf = multiply_by_z(&f);
            assert_eq!(zf.degree(), f.degree() + 1);
            for p in [1.0, 2.5] {
                let a = hardy_norm(&zf, p, 256).unwrap();
                let b = hardy_norm(&f, p, 256).unwrap();
                assert!((a - b).abs() < 1e-12 * b);
            }
            let a = bergman_norm(&zf, 1.0, &w, 256).unwrap();
            let b = bergman_norm(&f, 1.0, &w, 256).unwrap();
            assert!(a >= 0.5 * b);
        }
    }

    #[test]
    fn szop_r_examples() {
        let k = HarmonicFn::constant(64, 2.0).unwrap();
        assert!(szop_r_apply(&k, 0.5).unwrap().max_abs() < 1e-12);
        let p = HarmonicFn::atom(1 << 16, 1.0, 0.0).unwrap();
        let v = szop_r_apply(&p, 0.5).unwrap().lp_norm(1.0).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-6);
        assert!(szop_r_apply(&p, 0.0).unwrap().max_abs() < 1e-12);
        let r = ratio(Operator::SubtractAtRadius(0.5), Subject::Harmonic(&p), &Space::HarmonicH1, 0).unwrap();
        assert!((r - sharp_szr_constant(0.5).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn mobius_hinf_ratio() {
        let n = 1 << 16;
        for a in [0.5, 0.9, 0.99] {
            let f = Mobius::new(a).unwrap();
            let r = ratio(Operator::Subtract, Subject::Analytic(&f), &Space::Hardy(f64::INFINITY), n).unwrap();
            assert!((r - (1.0 + a)).abs() < 1e-4);
        }
    }

    #[test]
    fn h2_ratio_at_most_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let f = random_poly(&mut rng, 10);
            let r = ratio(Operator::BackwardShift, Subject::Analytic(&f), &Space::Hardy(2.0), 64).unwrap();
            assert!(r <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn subtract_at_most_doubles_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let w = RadialWeight::uniform(32).unwrap();
        for _ in 0..20 {
            let f = random_poly(&mut rng, 6);
            for space in [
                Space::Hardy(1.0),
                Space::Hardy(f64::INFINITY),
                Space::Bergman { p: 1.0, weight: w.clone() },
            ] {
                let r = ratio(Operator::Subtract, Subject::Analytic(&f), &space, 256).unwrap();
                assert!(r <= 2.0 + 1e-9);
            }
        }
    }

    #[test]
    fn zero_norm_and_unsupported() {
        let zero = TaylorFn::constant(c(0.0));
        assert_eq!(
            ratio(Operator::Subtract, Subject::Analytic(&zero), &Space::Hardy(1.0), 32),
            Err(Error::ZeroNorm)
        );
        let u = HarmonicFn::constant(32, 1.0).unwrap();
        assert!(matches!(
            ratio(Operator::BackwardShift, Subject::Harmonic(&u), &Space::HarmonicH1, 32),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn bergman_backward_shift_matches_coefficient_shift() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let w = RadialWeight::uniform(64).unwrap();
        let f = random_poly(&mut rng, 5);
        let via_ratio = ratio(
            Operator::BackwardShift,
            Subject::Analytic(&f),
            &Space::Bergman { p: 1.0, weight: w.clone() },
            256,
        )
        .unwrap();
        let direct = bergman_norm(&backward_shift(&f), 1.0, &w, 256).unwrap() / bergman_norm(&f, 1.0, &w, 256).unwrap();
        assert!((via_ratio - direct).abs() < 1e-10);
    }
}
