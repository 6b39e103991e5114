//! Exhaustive enumeration of `ASM(n)`.
//!
//! Matrices are produced by completing monotone triangles from the top row
//! downwards. Every strictly increasing row can be completed to the bottom row
//! `(1, …, n)`, so no candidate is ever discarded, and the depth-first order is
//! the lexicographic order of the triangle rows read top to bottom.

use crate::asm::Asm;
use crate::error::{Error, Result};
use crate::triangle::triangle_rows_to_asm;

/// Default cap on `n` for exhaustive enumeration (`|ASM(8)| = 10 850 216`).
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

/// Streams `ASM(n)` in canonical order.
pub fn enumerate_asms(n: usize) -> Result<AsmIter> {
    enumerate_asms_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_asms_with_cap(n: usize, cap: usize) -> Result<AsmIter> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if n > cap {
        return Err(Error::ResourceLimit { what: "n", requested: n, cap });
    }
    Ok(AsmIter::new(n))
}

/// `∏_{j=0}^{n-1} (3j+1)! / (n+j)!`, evaluated exactly.
pub fn asm_count_formula(n: usize) -> u128 {
    use num_bigint::BigUint;
    use num_traits::{One, ToPrimitive};
    let fact = |k: usize| -> BigUint { (1..=k).fold(BigUint::one(), |acc, x| acc * x) };
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 0..n {
        num *= fact(3 * j + 1);
        den *= fact(n + j);
    }
    (num / den).to_u128().expect("fits")
}

pub struct AsmIter {
    n: usize,
    rows: Vec<Vec<usize>>,
    done: bool,
}

impl AsmIter {
    fn new(n: usize) -> Self {
        let mut rows = Vec::with_capacity(n);
        rows.push(vec![1]);
        for k in 1..n {
            let next = first_interlacing(&rows[k - 1]);
            rows.push(next);
        }
        AsmIter { n, rows, done: false }
    }

    /// Moves to the lexicographically next triangle; false when exhausted.
    fn advance(&mut self) -> bool {
        let n = self.n;
        // the bottom row is forced, so start one above it
        for k in (0..n.saturating_sub(1)).rev() {
            let advanced = if k == 0 {
                if self.rows[0][0] < n {
                    self.rows[0][0] += 1;
                    true
                } else {
                    false
                }
            } else {
                let (above, here) = self.rows.split_at_mut(k);
                next_interlacing(&above[k - 1], &mut here[0], n)
            };
            if advanced {
                for m in k + 1..n {
                    self.rows[m] = first_interlacing(&self.rows[m - 1]);
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for AsmIter {
    type Item = Asm;

    fn next(&mut self) -> Option<Asm> {
        if self.done {
            return None;
        }
        let out = triangle_rows_to_asm(self.n, &self.rows);
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}

/// Lower bound for position `j` of a row interlacing `upper`, given the previous entry.
fn lower_limit(upper: &[usize], prev: Option<usize>, j: usize) -> usize {
    let from_upper = if j == 0 { 1 } else { upper[j - 1] };
    match prev {
        Some(p) => from_upper.max(p + 1),
        None => from_upper,
    }
}

/// Upper bound for position `j` of a row of length `upper.len() + 1`, leaving
/// room for the strictly larger entries to its right.
fn upper_limit(upper: &[usize], j: usize, n: usize) -> usize {
    let room = n - (upper.len() - j);
    if j < upper.len() {
        upper[j].min(room)
    } else {
        room
    }
}

/// Smallest row of length `upper.len() + 1` interlacing `upper`.
fn first_interlacing(upper: &[usize]) -> Vec<usize> {
    let mut row = Vec::with_capacity(upper.len() + 1);
    for j in 0..=upper.len() {
        let lo = lower_limit(upper, row.last().copied(), j);
        row.push(lo);
    }
    row
}

/// Lexicographic successor of `row` among rows interlacing `upper` with entries `≤ n`.
fn next_interlacing(upper: &[usize], row: &mut [usize], n: usize) -> bool {
    let len = row.len();
    for j in (0..len).rev() {
        if row[j] < upper_limit(upper, j, n) {
            row[j] += 1;
            for m in j + 1..len {
                row[m] = lower_limit(upper, Some(row[m - 1]), m);
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::MonotoneTriangle;

    #[test]
    fn counts_match_product_formula() {
        for (n, expected) in [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429), (6, 7436)] {
            assert_eq!(asm_count_formula(n), expected);
            assert_eq!(enumerate_asms(n).unwrap().count() as u128, expected, "n = {n}");
        }
    }

    #[test]
    fn canonical_order_is_strictly_increasing() {
        let tris: Vec<MonotoneTriangle> =
            enumerate_asms(5).unwrap().map(|a| MonotoneTriangle::from_asm(&a)).collect();
        assert!(tris.windows(2).all(|w| w[0].rows() < w[1].rows()));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_asms(9), Err(Error::ResourceLimit { .. })));
        assert!(enumerate_asms_with_cap(9, 9).is_ok());
        assert!(enumerate_asms(0).is_err());
    }

    #[test]
    fn first_is_identity_like() {
        let first = enumerate_asms(4).unwrap().next().unwrap();
        assert_eq!(MonotoneTriangle::from_asm(&first).rows()[0], vec![1]);
    }
}
