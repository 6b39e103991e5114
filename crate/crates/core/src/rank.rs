//! Corner-sum (rank) matrices.
//!
//! `r(i, j)` is the sum of the top-left `i × j` block of an ASM. The boundary
//! row and column `r(0, ·) = r(·, 0) = 0` are virtual: [`RankMatrix::get`]
//! answers them without storing them.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankMatrix {
    n: usize,
    values: Vec<u32>,
}

impl RankMatrix {
    /// Validates an `n × n` array against the corner-sum axioms.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare { rows: n, cols: bad.len() });
        }
        let values: Vec<u32> = rows.into_iter().flatten().collect();
        let m = RankMatrix { n, values };
        m.check()?;
        Ok(m)
    }

    pub(crate) fn from_values_unchecked(n: usize, values: Vec<u32>) -> Self {
        debug_assert_eq!(values.len(), n * n);
        RankMatrix { n, values }
    }

    /// Builds a rank matrix from a closure over 1-based coordinates and validates it.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut values = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                values.push(f(i, j));
            }
        }
        let m = RankMatrix { n, values };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let n = self.n;
        if self.get(n, n) as usize != n {
            return Err(Error::InvalidRankMatrix(format!(
                "r({n}, {n}) = {}, expected {n}",
                self.get(n, n)
            )));
        }
        for i in 1..=n {
            for j in 1..=n {
                let v = self.get(i, j) as i64;
                let up = v - self.get(i - 1, j) as i64;
                let left = v - self.get(i, j - 1) as i64;
                if !(0..=1).contains(&up) {
                    return Err(Error::InvalidRankMatrix(format!(
                        "r({i}, {j}) - r({}, {j}) = {up}",
                        i - 1
                    )));
                }
                if !(0..=1).contains(&left) {
                    return Err(Error::InvalidRankMatrix(format!(
                        "r({i}, {j}) - r({i}, {}) = {left}",
                        j - 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `r(i, j)` for `0 ≤ i, j ≤ n`, with the zero boundary.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 {
            0
        } else {
            self.values[(i - 1) * self.n + (j - 1)]
        }
    }

    /// Row-major values, without the boundary.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.values.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// `r(i, j) - r(i - 1, j)`: whether row `i` has a 1 among the first `j` partial column sums.
    pub fn row_step(&self, i: usize, j: usize) -> u32 {
        self.get(i, j) - self.get(i - 1, j)
    }

    /// Entrywise `≥`, the Bruhat `≤` read on rank matrices.
    pub fn dominates(&self, other: &RankMatrix) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a >= b)
    }

    pub(crate) fn entrywise_min(&self, other: &RankMatrix) -> RankMatrix {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| *a.min(b)).collect();
        RankMatrix::from_values_unchecked(self.n, values)
    }

    pub(crate) fn entrywise_max(&self, other: &RankMatrix) -> RankMatrix {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| *a.max(b)).collect();
        RankMatrix::from_values_unchecked(self.n, values)
    }

    /// The rank matrix of the identity, `min(i, j)`; the entrywise maximum.
    pub fn identity(n: usize) -> RankMatrix {
        let mut values = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                values.push(i.min(j) as u32);
            }
        }
        RankMatrix::from_values_unchecked(n, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_permutation_rank_matrix() {
        let r = RankMatrix::new(vec![
            vec![1, 1, 1, 1],
            vec![1, 1, 2, 2],
            vec![1, 1, 2, 3],
            vec![1, 2, 3, 4],
        ])
        .unwrap();
        assert_eq!(r.get(0, 3), 0);
        assert_eq!(r.get(3, 0), 0);
        assert_eq!(r.get(2, 3), 2);
    }

    #[test]
    fn rejects_bad_corner() {
        assert!(matches!(
            RankMatrix::new(vec![vec![1, 1], vec![1, 1]]),
            Err(Error::InvalidRankMatrix(_))
        ));
    }

    #[test]
    fn rejects_jump_of_two() {
        assert!(RankMatrix::new(vec![vec![0, 0], vec![0, 2]]).is_err());
    }

    #[test]
    fn rejects_decrease() {
        assert!(RankMatrix::new(vec![vec![1, 0], vec![1, 2]]).is_err());
    }

    #[test]
    fn identity_is_min() {
        let r = RankMatrix::identity(5);
        for i in 1..=5 {
            for j in 1..=5 {
                assert_eq!(r.get(i, j) as usize, i.min(j));
            }
        }
    }
}
