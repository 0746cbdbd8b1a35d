//! Column deficiency of a matrix and the entry exchanges that cannot
//! decrease it.

use crate::error::{Error, Result};

/// Matrix `A = (a_ij)` with threshold `μ`: column sums `C_j = Σ_i a_ij`,
/// column deficiencies `D_j = max(C_j − μ, 0)` and total `D = Σ_j D_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeficiencyMatrix {
    rows: Vec<Vec<f64>>,
    mu: f64,
}

impl DeficiencyMatrix {
    pub fn new(rows: Vec<Vec<f64>>, mu: f64) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || width == 0 {
            return Err(Error::Index("matrix must be non-empty".into()));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != width) {
            return Err(Error::Index(format!("row {i} has {} entries, expected {width}", rows[i].len())));
        }
        if let Some(i) = rows.iter().flatten().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        if !mu.is_finite() {
            return Err(Error::NonFinite(0));
        }
        Ok(Self { rows, mu })
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.rows[0].len())
    }

    pub fn column_sums(&self) -> Vec<f64> {
        let (_, n) = self.shape();
        (0..n).map(|j| self.rows.iter().map(|r| r[j]).sum()).collect()
    }

    pub fn column_deficiencies(&self) -> Vec<f64> {
        self.column_sums().into_iter().map(|c| (c - self.mu).max(0.0)).collect()
    }

    pub fn deficiency(&self) -> f64 {
        self.column_deficiencies().iter().sum()
    }

    /// Whether swapping `a_ij` and `a_ik` satisfies `D_j ≥ D_k` and
    /// `a_ij ≤ a_ik` (indices 0-based).
    pub fn is_admissible(&self, i: usize, j: usize, k: usize) -> Result<bool> {
        self.check_indices(i, j, k)?;
        let d = self.column_deficiencies();
        Ok(d[j] >= d[k] && self.rows[i][j] <= self.rows[i][k])
    }

    fn check_indices(&self, i: usize, j: usize, k: usize) -> Result<()> {
        let (m, n) = self.shape();
        if i >= m || j >= n || k >= n {
            return Err(Error::Index(format!("({i}, {j}, {k}) outside a {m}×{n} matrix")));
        }
        Ok(())
    }

    /// Swaps `a_ij` and `a_ik`; errors unless the swap is admissible.
    pub fn exchange_step(&self, i: usize, j: usize, k: usize) -> Result<Self> {
        self.check_indices(i, j, k)?;
        let d = self.column_deficiencies();
        let reason = if d[j] < d[k] {
            Some(format!("D_j = {} < D_k = {}", d[j], d[k]))
        } else if self.rows[i][j] > self.rows[i][k] {
            Some(format!("a_ij = {} > a_ik = {}", self.rows[i][j], self.rows[i][k]))
        } else {
            None
        };
        if let Some(reason) = reason {
            return Err(Error::ExchangeHypothesis { row: i, j, k, reason });
        }
        let mut out = self.clone();
        out.rows[i].swap(j, k);
        Ok(out)
    }

    /// Each row sorted into non-increasing order.
    pub fn sort_rows_descending(&self) -> Self {
        let mut out = self.clone();
        for r in &mut out.rows {
            r.sort_by(|a, b| b.total_cmp(a));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn example() -> DeficiencyMatrix {
        DeficiencyMatrix::new(vec![vec![0.0, 2.0], vec![1.0, 0.0]], 1.0).unwrap()
    }

    #[test]
    fn deficiency_examples() {
        let a = example();
        assert_eq!(a.column_sums(), vec![1.0, 2.0]);
        assert_eq!(a.deficiency(), 1.0);
        let big = DeficiencyMatrix::new(a.rows().to_vec(), 10.0).unwrap();
        assert_eq!(big.deficiency(), 0.0);
        let zero = DeficiencyMatrix::new(a.rows().to_vec(), 0.0).unwrap();
        assert_eq!(zero.deficiency(), 3.0);
    }

    #[test]
    fn exchange_example() {
        // 1-based (i, j, k) = (2, 2, 1)
        let b = example().exchange_step(1, 1, 0).unwrap();
        assert_eq!(b.rows(), &[vec![0.0, 2.0], vec![0.0, 1.0]]);
        assert_eq!(b.deficiency(), 2.0);
        let err = example().exchange_step(1, 0, 1).unwrap_err();
        assert!(matches!(err, Error::ExchangeHypothesis { row: 1, j: 0, k: 1, .. }));
        assert!(example().exchange_step(5, 0, 1).is_err());
    }

    #[test]
    fn equal_entries_swap() {
        let a = DeficiencyMatrix::new(vec![vec![1.0, 1.0]], 0.5).unwrap();
        assert_eq!(a.exchange_step(0, 0, 1).unwrap().deficiency(), a.deficiency());
    }

    #[test]
    fn sort_rows() {
        let a = DeficiencyMatrix::new(vec![vec![1.0, 3.0, 2.0]], 0.0).unwrap();
        assert_eq!(a.sort_rows_descending().rows(), &[vec![3.0, 2.0, 1.0]]);
        let s = a.sort_rows_descending();
        assert_eq!(s.sort_rows_descending(), s);
    }

    #[test]
    fn random_exchanges_never_decrease() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..2000 {
            let (m, n) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
            let rows = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-10.0..10.0)).collect()).collect();
            let a = DeficiencyMatrix::new(rows, rng.gen_range(-10.0 * m as f64..10.0 * m as f64)).unwrap();
            let d = a.deficiency();
            for i in 0..m {
                for j in 0..n {
                    for k in 0..n {
                        if a.is_admissible(i, j, k).unwrap() {
                            assert!(a.exchange_step(i, j, k).unwrap().deficiency() >= d - 1e-12);
                        }
                    }
                }
            }
            assert!(a.sort_rows_descending().deficiency() >= d - 1e-12);
        }
    }
}
