//! Alternating sign matrices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Line, Result};
use crate::permutation::Permutation;
use crate::rank::RankMatrix;

/// An `n × n` alternating sign matrix.
///
/// The corner-sum matrix is computed once at construction; every order and
/// lattice operation in this crate works on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AsmDoc", into = "AsmDoc")]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
    rank: RankMatrix,
}

#[derive(Serialize, Deserialize)]
struct AsmDoc {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<AsmDoc> for Asm {
    type Error = Error;

    fn try_from(doc: AsmDoc) -> Result<Self> {
        if doc.rows.len() != doc.n {
            return Err(Error::SizeMismatch { left: doc.n, right: doc.rows.len() });
        }
        Asm::new(doc.rows)
    }
}

impl From<Asm> for AsmDoc {
    fn from(a: Asm) -> Self {
        AsmDoc { n: a.n, rows: a.rows() }
    }
}

impl Asm {
    /// Validates a square integer array as an ASM.
    ///
    /// Partial sums along every row and column are checked before the totals,
    /// so an array whose only defect is a wrong total reports
    /// [`Error::TotalSumViolation`].
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare { rows: n, cols: bad.len() });
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if !(-1..=1).contains(&v) {
                    return Err(Error::EntryOutOfRange { row: i + 1, col: j + 1, value: v });
                }
                entries.push(v as i8);
            }
        }
        let row_major = |a: usize, b: usize| a * n + b;
        let col_major = |a: usize, b: usize| b * n + a;
        for (line, idx) in [(Line::Row, &row_major as &dyn Fn(usize, usize) -> usize), (Line::Column, &col_major)] {
            for a in 0..n {
                let mut sum = 0i64;
                for b in 0..n {
                    sum += entries[idx(a, b)] as i64;
                    if !(0..=1).contains(&sum) {
                        return Err(Error::PartialSumViolation { line, index: a + 1, position: b + 1, sum });
                    }
                }
            }
        }
        for (line, idx) in [(Line::Row, &row_major as &dyn Fn(usize, usize) -> usize), (Line::Column, &col_major)] {
            for a in 0..n {
                let sum: i64 = (0..n).map(|b| entries[idx(a, b)] as i64).sum();
                if sum != 1 {
                    return Err(Error::TotalSumViolation { line, index: a + 1, sum });
                }
            }
        }

        let rank = corner_sums(n, &entries);
        Ok(Asm { n, entries, rank })
    }

    pub fn identity(n: usize) -> Asm {
        Permutation::identity(n).to_asm()
    }

    /// Inverts the corner sum: `a(i,j) = c(i,j) - c(i-1,j) - c(i,j-1) + c(i-1,j-1)`.
    pub fn from_rank_matrix(rank: &RankMatrix) -> Asm {
        let n = rank.n();
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let v = rank.get(i, j) as i64 - rank.get(i - 1, j) as i64 - rank.get(i, j - 1) as i64
                    + rank.get(i - 1, j - 1) as i64;
                entries.push(v as i8);
            }
        }
        Asm { n, entries, rank: rank.clone() }
    }

    /// Used by constructors that already guarantee the ASM axioms.
    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<i8>) -> Asm {
        let rank = corner_sums(n, &entries);
        Asm { n, entries, rank }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `a(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect()
    }

    pub fn rank_matrix(&self) -> &RankMatrix {
        &self.rank
    }

    /// `r_A(i, j)` with the zero boundary.
    #[inline]
    pub fn rank(&self, i: usize, j: usize) -> u32 {
        self.rank.get(i, j)
    }

    /// Some(w) when this is the permutation matrix of `w`.
    pub fn as_permutation(&self) -> Option<Permutation> {
        if self.entries.iter().any(|&v| v < 0) {
            return None;
        }
        let word = (1..=self.n)
            .map(|i| (1..=self.n).find(|&j| self.entry(i, j) == 1))
            .collect::<Option<Vec<_>>>()?;
        Permutation::new(word).ok()
    }

    pub fn is_permutation(&self) -> bool {
        !self.entries.iter().any(|&v| v < 0)
    }

    pub fn transpose(&self) -> Asm {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.entries[(k % n) * n + k / n]).collect();
        Asm::from_entries_unchecked(n, entries)
    }
}

fn corner_sums(n: usize, entries: &[i8]) -> RankMatrix {
    let mut values = vec![0u32; n * n];
    for i in 0..n {
        let mut row = 0i64;
        for j in 0..n {
            row += entries[i * n + j] as i64;
            let above = if i > 0 { values[(i - 1) * n + j] as i64 } else { 0 };
            values[i * n + j] = (above + row) as u32;
        }
    }
    RankMatrix::from_values_unchecked(n, values)
}

impl std::fmt::Display for Asm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, row) in self.entries.chunks(self.n).enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}
