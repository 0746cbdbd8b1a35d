//! Rearrangement inequalities: the half-mass identity, column-deficiency
//! exchanges, the convolution bound by decreasing rearrangements, and the
//! comparison of a decreasing profile with its tilted reflection.

pub mod matrix;
pub mod profile;

pub use matrix::DeficiencyMatrix;
pub use profile::{find_c, pq_comparison_check, HalfProfile};

use crate::bounds::{BoundCertificate, Relation};
use crate::circlefn::CircleFn;
use crate::error::{Error, Result};

pub(crate) fn certificate_slack() -> f64 {
    1e-9
}

/// `(mean|f − μ|, 2·mean((f − μ)·1_{f > μ}))` with `μ = mean(f)`, in the
/// normalized grid measure. The two sides are computed independently.
pub fn half_mass_identity(f: &CircleFn) -> (f64, f64) {
    let mu = f.mean();
    let n = f.len() as f64;
    let lhs = f.samples().iter().map(|v| (v - mu).abs()).sum::<f64>() / n;
    let rhs = 2.0 * f.samples().iter().filter(|&&v| v > mu).map(|v| v - mu).sum::<f64>() / n;
    (lhs, rhs)
}

/// `Q = a·P* − b·P*(reflected)`, with `P*` the decreasing rearrangement and
/// reflection the index reversal `k ↦ N − 1 − k`.
#[derive(Clone, Debug, PartialEq)]
pub struct TiltedRearrangement {
    base: CircleFn,
    a: f64,
    b: f64,
}

impl TiltedRearrangement {
    /// `base` is rearranged internally; `a, b ≥ 0` with `a + b = 1`.
    pub fn new(base: CircleFn, a: f64, b: f64) -> Result<Self> {
        if !(a >= 0.0 && b >= 0.0 && (a + b - 1.0).abs() <= 1e-12) {
            return Err(Error::OutOfRange {
                name: "a + b",
                value: a + b,
                range: "a, b ≥ 0 with a + b = 1",
            });
        }
        Ok(Self {
            base: base.decreasing_rearrangement(),
            a,
            b,
        })
    }

    pub fn base(&self) -> &CircleFn {
        &self.base
    }

    pub fn weights(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn q(&self) -> CircleFn {
        let reflected = self.base.reflect();
        self.base
            .zip_with(&reflected, |p, r| self.a * p - self.b * r)
            .expect("same grid")
    }
}

fn check_kernel(p: &CircleFn) -> Result<()> {
    match p.samples().iter().position(|&v| v < 0.0) {
        Some(k) => Err(Error::NegativeKernel(k)),
        None => Ok(()),
    }
}

fn unit_norm(f: &CircleFn) -> Result<CircleFn> {
    let norm = f.lp_norm(1.0)?;
    if norm <= 0.0 {
        return Err(Error::ZeroNorm);
    }
    Ok(f.scale(1.0 / norm))
}

/// `‖P∗f − mean‖₁ ≤ ‖R − mean(R)‖₁` for `‖f‖₁ = 1` (rescaled internally).
///
/// With `nonneg` the comparison function is `R = P` (and `f ≥ 0` is
/// required); otherwise `R = Q = a·P* − b·P*(reflected)` with `a`, `b` the
/// positive and negative masses of `f`.
pub fn conv_rearrangement_check(p: &CircleFn, f: &CircleFn, nonneg: bool) -> Result<BoundCertificate> {
    check_kernel(p)?;
    let f = unit_norm(f)?;
    let conv = p.convolve(&f)?;
    let lhs = conv.sub_constant(conv.mean()).lp_norm(1.0)?;
    let (a, b) = f.signed_masses();
    let cert = if nonneg {
        if let Some(k) = f.samples().iter().position(|&v| v < 0.0) {
            return Err(Error::OutOfRange {
                name: "f",
                value: f.samples()[k],
                range: "[0, ∞)",
            });
        }
        let rhs = p.sub_constant(p.mean()).lp_norm(1.0)?;
        BoundCertificate::new("conv-rearrangement", lhs, rhs, Relation::Le, certificate_slack())
    } else {
        let q = TiltedRearrangement::new(p.clone(), a, b)?.q();
        let rhs = q.sub_constant(q.mean()).lp_norm(1.0)?;
        BoundCertificate::new("conv-rearrangement-signed", lhs, rhs, Relation::Le, certificate_slack())
    };
    Ok(cert.with_param("a", a).with_param("b", b))
}

/// The signed check through the deficiency matrix `a_ij = P_{j−i} f_i / N`:
/// column sums are `P∗f`, row sorting produces `Q`, and twice the
/// deficiency at `μ = mean(P∗f)` is the `L¹` deviation.
pub fn conv_rearrangement_matrix_check(p: &CircleFn, f: &CircleFn) -> Result<BoundCertificate> {
    check_kernel(p)?;
    let f = unit_norm(f)?;
    let n = p.len();
    f.check_same_grid(n)?;
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| p.samples()[(j + n - i) % n] * f.samples()[i] / n as f64).collect())
        .collect();
    let mu = f.mean() * p.mean();
    let a = DeficiencyMatrix::new(rows, mu)?;
    let scale = 2.0 / n as f64;
    let lhs = scale * a.deficiency();
    let rhs = scale * a.sort_rows_descending().deficiency();
    Ok(BoundCertificate::new("conv-rearrangement-matrix", lhs, rhs, Relation::Le, certificate_slack()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(rng: &mut ChaCha8Rng, n: usize, lo: f64) -> CircleFn {
        CircleFn::new((0..n).map(|_| rng.gen_range(lo..1.0)).collect()).unwrap()
    }

    #[test]
    fn half_mass_examples() {
        let (l, r) = half_mass_identity(&CircleFn::new(vec![1.0, -1.0]).unwrap());
        assert_eq!((l, r), (1.0, 1.0));
        assert_eq!(half_mass_identity(&CircleFn::constant(8, 3.0).unwrap()), (0.0, 0.0));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let (l, r) = half_mass_identity(&random(&mut rng, 1024, -1.0));
            assert!((l - r).abs() < 1e-12);
        }
    }

    #[test]
    fn tilted_mean() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = random(&mut rng, 64, 0.0);
        let p = p.scale(1.0 / p.mean());
        let t = TiltedRearrangement::new(p, 0.3, 0.7).unwrap();
        assert!((t.q().mean() - (0.3 - 0.7)).abs() < 1e-12);
        assert!(TiltedRearrangement::new(CircleFn::constant(4, 1.0).unwrap(), 0.3, 0.3).is_err());
    }

    #[test]
    fn spike_and_constant() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = random(&mut rng, 128, 0.0);
        let mut spike = vec![0.0; 128];
        spike[5] = 1.0;
        let c = conv_rearrangement_check(&p, &CircleFn::new(spike).unwrap(), true).unwrap();
        assert!(c.pass && c.margin.abs() < 1e-12);
        let c = conv_rearrangement_check(&p, &CircleFn::constant(128, 1.0).unwrap(), true).unwrap();
        assert!(c.pass && c.lhs.abs() < 1e-12);
        let neg = CircleFn::constant(128, -1.0).unwrap();
        assert!(conv_rearrangement_check(&neg, &p, true).is_err());
    }

    #[test]
    fn random_instances_and_matrix_path_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let p = random(&mut rng, 64, 0.0);
            let f = random(&mut rng, 64, -1.0);
            let direct = conv_rearrangement_check(&p, &f, false).unwrap();
            let matrix = conv_rearrangement_matrix_check(&p, &f).unwrap();
            assert!(direct.pass && matrix.pass);
            assert!((direct.lhs - matrix.lhs).abs() < 1e-12, "{direct:?} {matrix:?}");
            assert!((direct.rhs - matrix.rhs).abs() < 1e-12, "{direct:?} {matrix:?}");
            let (a, b) = (direct.params["a"], direct.params["b"]);
            assert!((a + b - 1.0).abs() < 1e-12);
            let unit = f.scale(1.0 / f.lp_norm(1.0).unwrap());
            assert!((a - b - unit.mean()).abs() < 1e-12);
        }
    }
}
