//! Monotone triangles and the bijection with ASMs.
//!
//! Row `i` of the triangle attached to an ASM lists the columns whose partial
//! column sum over the first `i` rows equals 1.

use serde::{Deserialize, Serialize};

use crate::asm::Asm;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TriangleDoc", into = "TriangleDoc")]
pub struct MonotoneTriangle {
    bound: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TriangleDoc {
    bound: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TriangleDoc> for MonotoneTriangle {
    type Error = Error;

    fn try_from(doc: TriangleDoc) -> Result<Self> {
        MonotoneTriangle::new(doc.rows, doc.bound)
    }
}

impl From<MonotoneTriangle> for TriangleDoc {
    fn from(t: MonotoneTriangle) -> Self {
        TriangleDoc { bound: t.bound, rows: t.rows }
    }
}

impl MonotoneTriangle {
    /// Row `i` (1-based) must have length `i`, be strictly increasing, lie in
    /// `[1, bound]` and interlace row `i - 1`.
    pub fn new(rows: Vec<Vec<usize>>, bound: usize) -> Result<Self> {
        for (k, row) in rows.iter().enumerate() {
            let i = k + 1;
            if row.len() != i {
                return Err(Error::InvariantViolation(format!(
                    "row {i} has length {}, expected {i}",
                    row.len()
                )));
            }
            if let Some(&v) = row.iter().find(|&&v| v == 0 || v > bound) {
                return Err(Error::InvariantViolation(format!("row {i}: entry {v} outside 1..={bound}")));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvariantViolation(format!("row {i} is not strictly increasing")));
            }
            if k > 0 && !interlaces(&rows[k - 1], row) {
                return Err(Error::InvariantViolation(format!("row {} does not interlace row {i}", i - 1)));
            }
        }
        Ok(MonotoneTriangle { bound, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>, bound: usize) -> Self {
        MonotoneTriangle { bound, rows }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Number of rows.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn from_asm(a: &Asm) -> MonotoneTriangle {
        let n = a.n();
        let mut col = vec![0i64; n];
        let mut rows = Vec::with_capacity(n);
        for i in 1..=n {
            for (j, c) in col.iter_mut().enumerate() {
                *c += a.entry(i, j + 1) as i64;
            }
            rows.push((1..=n).filter(|&j| col[j - 1] == 1).collect());
        }
        MonotoneTriangle { bound: n, rows }
    }

    /// Inverse of [`MonotoneTriangle::from_asm`]; needs `n` rows ending in `1, …, n`.
    pub fn to_asm(&self) -> Result<Asm> {
        let n = self.rows.len();
        let expected: Vec<usize> = (1..=n).collect();
        match self.rows.last() {
            Some(last) if *last == expected => {}
            Some(last) => return Err(Error::BadBottomRow { n, found: last.clone() }),
            None => return Err(Error::BadBottomRow { n: 0, found: Vec::new() }),
        }
        if self.bound < n {
            return Err(Error::InvariantViolation(format!("bound {} below size {n}", self.bound)));
        }
        Ok(triangle_rows_to_asm(n, &self.rows))
    }

    /// `[a, b, c] / …` rendering used for diagram labels.
    pub fn label(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" / ")
    }
}

/// `upper` (length k) interlaces `lower` (length k + 1).
pub(crate) fn interlaces(upper: &[usize], lower: &[usize]) -> bool {
    upper.len() + 1 == lower.len()
        && upper
            .iter()
            .enumerate()
            .all(|(j, &u)| lower[j] <= u && u <= lower[j + 1])
}

/// `a(i, j) = [j ∈ row i] - [j ∈ row i-1]`; rows must already be valid.
pub(crate) fn triangle_rows_to_asm(n: usize, rows: &[Vec<usize>]) -> Asm {
    let mut entries = vec![0i8; n * n];
    let mut prev: &[usize] = &[];
    for (i, row) in rows.iter().enumerate() {
        for &j in row {
            entries[i * n + j - 1] += 1;
        }
        for &j in prev {
            entries[i * n + j - 1] -= 1;
        }
        prev = row;
    }
    Asm::from_entries_unchecked(n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_triangle() {
        let a = Asm::new(vec![
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0],
            vec![1, 0, 0, -1, 1, 0],
            vec![0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 1, -1, 1],
            vec![0, 0, 0, 0, 1, 0],
        ])
        .unwrap();
        let t = MonotoneTriangle::from_asm(&a);
        let expected = vec![
            vec![2],
            vec![2, 4],
            vec![1, 2, 5],
            vec![1, 2, 3, 5],
            vec![1, 2, 3, 4, 6],
            vec![1, 2, 3, 4, 5, 6],
        ];
        assert_eq!(t.rows(), expected.as_slice());
        let t2 = MonotoneTriangle::new(expected, 6).unwrap();
        assert_eq!(t2.to_asm().unwrap(), a);
    }

    #[test]
    fn identity_triangle() {
        let t = MonotoneTriangle::from_asm(&Asm::identity(3));
        assert_eq!(t.rows(), &[vec![1], vec![1, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn bad_bottom_row() {
        let t = MonotoneTriangle::new(vec![vec![2], vec![2, 3]], 3).unwrap();
        assert!(matches!(t.to_asm(), Err(Error::BadBottomRow { .. })));
    }

    #[test]
    fn rejects_non_interlacing() {
        assert!(MonotoneTriangle::new(vec![vec![3], vec![1, 2]], 3).is_err());
        assert!(MonotoneTriangle::new(vec![vec![1], vec![2, 2]], 3).is_err());
        assert!(MonotoneTriangle::new(vec![vec![4]], 3).is_err());
    }

    #[test]
    fn json_shape() {
        let t = MonotoneTriangle::new(vec![vec![2], vec![1, 2]], 2).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"{"bound":2,"rows":[[2],[1,2]]}"#);
    }
}
