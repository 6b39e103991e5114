//! Counting monotone triangles by bottom row, and the tail families
//! `ASM^{ {t,…,n-1} }(n)`.
//!
//! Two independent routes to `α(k_1, …, k_m)`, the number of monotone
//! triangles with bottom row `(k_1, …, k_m)`:
//! * [`alpha_recursive`] sums over all interlacing rows above.
//! * [`alpha_operator`] evaluates `∏_{p<q} (id + E_{k_p} Δ_{k_q})` applied to
//!   `∏_{i<j} (k_j − k_i)/(j − i)`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::asm::Asm;
use crate::error::{Error, Result};
use crate::mask::ParabolicMask;
use crate::parabolic::first_descent;
use crate::poly::MultiPolynomial;
use crate::triangle::{triangle_rows_to_asm, MonotoneTriangle};

/// Largest bottom-row length accepted by the operator route.
pub const OPERATOR_CAP: usize = 6;
/// Largest `n` accepted by [`count_tail_family`].
pub const TAIL_N_CAP: usize = 24;

fn check_increasing(bottom: &[i64]) -> Result<()> {
    if bottom.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::ParameterOutOfRange(format!("bottom row {bottom:?} is not strictly increasing")));
    }
    Ok(())
}

/// Memoised count of monotone triangles by bottom row.
#[derive(Debug, Default)]
pub struct AlphaTable {
    memo: HashMap<Vec<i64>, BigUint>,
}

impl AlphaTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn alpha(&mut self, bottom: &[i64]) -> Result<BigUint> {
        check_increasing(bottom)?;
        Ok(self.alpha_unchecked(bottom))
    }

    fn alpha_unchecked(&mut self, bottom: &[i64]) -> BigUint {
        if bottom.len() <= 1 {
            return BigUint::one();
        }
        if let Some(v) = self.memo.get(bottom) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        let mut above = Vec::with_capacity(bottom.len() - 1);
        self.sum_above(bottom, &mut above, &mut total);
        self.memo.insert(bottom.to_vec(), total.clone());
        total
    }

    /// Extends `above` one entry at a time with `k_i ≤ l_i ≤ k_{i+1}` and `l` strictly increasing.
    fn sum_above(&mut self, bottom: &[i64], above: &mut Vec<i64>, total: &mut BigUint) {
        let i = above.len();
        if i == bottom.len() - 1 {
            let row = above.clone();
            *total += self.alpha_unchecked(&row);
            return;
        }
        let lo = match above.last() {
            Some(&prev) => bottom[i].max(prev + 1),
            None => bottom[i],
        };
        for l in lo..=bottom[i + 1] {
            above.push(l);
            self.sum_above(bottom, above, total);
            above.pop();
        }
    }
}

/// `α(bottom)` by summing over interlacing rows.
pub fn alpha_recursive(bottom: &[i64]) -> Result<BigUint> {
    AlphaTable::new().alpha(bottom)
}

/// `∏_{i<j} (k_j − k_i)/(j − i)` in `m` variables.
pub fn vandermonde_quotient(m: usize) -> MultiPolynomial {
    let mut p = MultiPolynomial::one(m);
    for i in 1..=m {
        for j in i + 1..=m {
            let kj = MultiPolynomial::variable(m, j).expect("index in range");
            let ki = MultiPolynomial::variable(m, i).expect("index in range");
            let factor = (&kj - &ki).scale(&BigRational::new(BigInt::one(), BigInt::from(j - i)));
            p = &p * &factor;
        }
    }
    p
}

/// The polynomial `α(k_1, …, k_m)` from the operator formula, with the
/// factors applied for `(p, q)` in lexicographic order.
pub fn alpha_polynomial(m: usize) -> Result<MultiPolynomial> {
    let pairs: Vec<(usize, usize)> = (1..=m).flat_map(|p| (p + 1..=m).map(move |q| (p, q))).collect();
    alpha_polynomial_ordered(m, &pairs)
}

/// As [`alpha_polynomial`], applying `id + E_{k_p} Δ_{k_q}` in the given order.
pub fn alpha_polynomial_ordered(m: usize, pairs: &[(usize, usize)]) -> Result<MultiPolynomial> {
    if m > OPERATOR_CAP {
        return Err(Error::ResourceLimit { what: "bottom row length", requested: m, cap: OPERATOR_CAP });
    }
    if m == 0 {
        return Ok(MultiPolynomial::one(0));
    }
    let mut p = vandermonde_quotient(m);
    for &(a, b) in pairs {
        p = &p + &p.difference(b)?.shift(a)?;
    }
    Ok(p)
}

fn rational_to_biguint(v: &BigRational) -> Result<BigUint> {
    if !v.is_integer() {
        return Err(Error::InvariantViolation(format!("count {v} is not an integer")));
    }
    v.to_integer()
        .to_biguint()
        .ok_or_else(|| Error::InvariantViolation(format!("count {v} is negative")))
}

/// `α(bottom)` through the operator formula.
pub fn alpha_operator(bottom: &[i64]) -> Result<BigUint> {
    check_increasing(bottom)?;
    let poly = alpha_polynomial(bottom.len())?;
    rational_to_biguint(&poly.evaluate_i64(bottom)?)
}

fn check_tail(a: &Asm, t: usize) -> Result<ParabolicMask> {
    let n = a.n();
    if t == 0 || t > n {
        return Err(Error::ParameterOutOfRange(format!("t = {t} must lie in 1..={n}")));
    }
    let mask = ParabolicMask::tail(n, t);
    if first_descent(a.rank_matrix(), &mask).is_some() {
        return Err(Error::NotInSublattice { mask: mask.members().to_vec() });
    }
    Ok(mask)
}

/// The first `t − 1` rows of the monotone triangle of `A ∈ ASM^{ {t,…,n-1} }(n)`.
pub fn truncate_to_partial_triangle(a: &Asm, t: usize) -> Result<MonotoneTriangle> {
    check_tail(a, t)?;
    let full = MonotoneTriangle::from_asm(a);
    Ok(MonotoneTriangle::from_rows_unchecked(full.rows()[..t - 1].to_vec(), a.n()))
}

/// Inverse of [`truncate_to_partial_triangle`]: the missing columns are added
/// one per row in increasing order until the bottom row is `(1, …, n)`.
pub fn extend_partial_triangle(tri: &MonotoneTriangle) -> Result<Asm> {
    let n = tri.bound();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if tri.size() >= n {
        return Err(Error::InvariantViolation(format!(
            "partial triangle has {} rows but must have fewer than {n}",
            tri.size()
        )));
    }
    let mut rows = tri.rows().to_vec();
    let mut last: Vec<usize> = rows.last().cloned().unwrap_or_default();
    let missing: Vec<usize> = (1..=n).filter(|c| !last.contains(c)).collect();
    for c in missing {
        last.push(c);
        last.sort_unstable();
        rows.push(last.clone());
    }
    Ok(triangle_rows_to_asm(n, &rows))
}

/// All strictly increasing sequences of length `len` in `1..=n`, lexicographically.
pub fn increasing_sequences(n: usize, len: usize) -> Vec<Vec<i64>> {
    fn go(n: i64, len: usize, start: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for k in start..=n {
            cur.push(k);
            go(n, len, k + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as i64, len, 1, &mut Vec::new(), &mut out);
    out
}

/// All monotone triangles with `rows` rows and entries at most `bound`.
pub fn partial_triangles(rows: usize, bound: usize) -> Vec<MonotoneTriangle> {
    fn go(bound: usize, rows: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<MonotoneTriangle>) {
        if cur.len() == rows {
            out.push(MonotoneTriangle::from_rows_unchecked(cur.clone(), bound));
            return;
        }
        let len = cur.len() + 1;
        for row in increasing_sequences(bound, len) {
            let row: Vec<usize> = row.into_iter().map(|x| x as usize).collect();
            if cur.last().is_none_or(|up| crate::triangle::interlaces(up, &row)) {
                cur.push(row);
                go(bound, rows, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(bound, rows, &mut Vec::new(), &mut out);
    out
}

/// `|ASM^{ {t,…,n-1} }(n)|` as `Σ α(k_1, …, k_{t-1})` over `1 ≤ k_1 < ⋯ < k_{t-1} ≤ n`.
pub fn count_tail_family(t: usize, n: usize) -> Result<BigUint> {
    count_tail_family_with(&mut AlphaTable::new(), t, n)
}

/// [`count_tail_family`] sharing a memo table across calls.
pub fn count_tail_family_with(table: &mut AlphaTable, t: usize, n: usize) -> Result<BigUint> {
    if t < 2 || t > n {
        return Err(Error::ParameterOutOfRange(format!("need 2 <= t <= n, got t = {t}, n = {n}")));
    }
    if n > TAIL_N_CAP {
        return Err(Error::ResourceLimit { what: "n", requested: n, cap: TAIL_N_CAP });
    }
    let mut total = BigUint::zero();
    for k in increasing_sequences(n, t - 1) {
        total += table.alpha(&k)?;
    }
    Ok(total)
}

/// Closed forms known for `t = 3` and `t = 4`.
pub fn tail_closed_form(t: usize, n: usize) -> Option<BigUint> {
    let n = BigInt::from(n);
    let v: BigInt = match t {
        3 => (&n - 1) * &n * (&n + 4) / 6,
        4 => (&n - 2) * (&n - 1) * &n * (&n + 1) * (&n * &n + 14 * &n + 54) / 360,
        _ => return None,
    };
    v.to_biguint()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub t: usize,
    pub n: usize,
    pub count: BigUint,
    pub closed_form: Option<BigUint>,
}

impl CountRow {
    /// True when there is no closed form to compare against.
    pub fn matches(&self) -> bool {
        self.closed_form.as_ref().is_none_or(|c| *c == self.count)
    }

    pub fn csv_line(&self) -> String {
        let cf = self.closed_form.as_ref().map(|c| c.to_string()).unwrap_or_default();
        format!("{},{},{},{},{}", self.t, self.n, self.count, cf, self.matches())
    }
}

pub const CSV_HEADER: &str = "t,n,count,closed_form,match";

/// One row per `(t, n)` with `2 ≤ t ≤ n ≤ max_n` and `t ≤ max_t`.
pub fn count_table(max_t: usize, max_n: usize) -> Result<Vec<CountRow>> {
    let mut table = AlphaTable::new();
    let mut out = Vec::new();
    for t in 2..=max_t {
        for n in t..=max_n {
            out.push(CountRow { t, n, count: count_tail_family_with(&mut table, t, n)?, closed_form: tail_closed_form(t, n) });
        }
    }
    Ok(out)
}

/// Iterated forward differences of the tail counts `n = t, t+1, …, t+samples-1`.
/// Returns the order of the first identically-zero difference sequence, or
/// `None` if none vanishes within the sample.
pub fn vanishing_difference_order(t: usize, samples: usize) -> Result<Option<usize>> {
    let mut table = AlphaTable::new();
    let mut seq: Vec<BigInt> = Vec::with_capacity(samples);
    for n in t..t + samples {
        seq.push(BigInt::from(count_tail_family_with(&mut table, t, n)?));
    }
    let mut order = 0;
    while !seq.is_empty() {
        if seq.iter().all(|x| x.is_zero()) {
            return Ok(Some(order));
        }
        seq = seq.windows(2).map(|w| &w[1] - &w[0]).collect();
        order += 1;
    }
    Ok(None)
}

/// The degree `t(t−1)/2` claimed for the tail counts.
pub fn expected_tail_degree(t: usize) -> usize {
    t * (t - 1) / 2
}
