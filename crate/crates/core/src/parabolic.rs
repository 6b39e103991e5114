//! Parabolic quotients `S_n^I` and the lattice `ASM^I(n)`.
//!
//! `ASM^I(n)` is the set of ASMs whose rank matrix never shows the vertical
//! pattern `(k, k, k+1)` at rows `(i-1, i, i+1)` with `i ∈ I`. Its join is
//! the join of `ASM(n)`; its meet takes the entrywise maximum on rows outside
//! `I` and then refills each run `[u, v]` of `I` from the two rows bounding it:
//!
//! ```text
//! r(i, j) = min(r(v+1, j), r(u-1, j) + (i - u + 1))      u ≤ i ≤ v
//! ```

use crate::asm::Asm;
use crate::bruhat::{self, bigrassmannian_p, bigrassmannian_q};
use crate::enumerate::{enumerate_asms, AsmIter};
use crate::error::{Error, Result};
use crate::mask::ParabolicMask;
use crate::permutation::Permutation;
use crate::rank::RankMatrix;

fn check_perm(w: &Permutation, mask: &ParabolicMask) -> Result<()> {
    mask.check_size(w.n())
}

/// `w(i) < w(i+1)` for every `i ∈ I`.
pub fn is_minimal_rep(w: &Permutation, mask: &ParabolicMask) -> Result<bool> {
    check_perm(w, mask)?;
    Ok(mask.members().iter().all(|&i| w.at(i) < w.at(i + 1)))
}

/// Splits `w = w^I ∘ w_I` with `w^I ∈ S_n^I` and `w_I` in the parabolic subgroup.
///
/// `w^I` sorts the values of `w` within each block of positions `u, …, v+1`
/// spanned by a run `[u, v]`; `w_I = (w^I)^{-1} ∘ w`.
pub fn parabolic_decompose(w: &Permutation, mask: &ParabolicMask) -> Result<(Permutation, Permutation)> {
    check_perm(w, mask)?;
    let mut word = w.word().to_vec();
    for &(u, v) in mask.runs() {
        word[u - 1..=v].sort_unstable();
    }
    let min_rep = Permutation::new(word)?;
    let rest = min_rep.inverse().compose(w)?;
    Ok((min_rep, rest))
}

/// Minimal representative `w^I`.
pub fn min_coset_rep(w: &Permutation, mask: &ParabolicMask) -> Result<Permutation> {
    Ok(parabolic_decompose(w, mask)?.0)
}

/// `S_n^I` in lexicographic order of one-line words.
pub fn parabolic_quotient(n: usize, mask: &ParabolicMask) -> Result<Vec<Permutation>> {
    mask.check_size(n)?;
    Ok(Permutation::all(n)
        .into_iter()
        .filter(|w| mask.members().iter().all(|&i| w.at(i) < w.at(i + 1)))
        .collect())
}

/// `w_0^I`, the maximum of `S_n^I`.
pub fn longest_min_coset_rep(n: usize, mask: &ParabolicMask) -> Result<Permutation> {
    min_coset_rep(&Permutation::longest(n), mask)
}

fn check_asm(a: &Asm, mask: &ParabolicMask) -> Result<()> {
    mask.check_size(a.n())
}

/// Membership in `ASM^I(n)` by scanning for the forbidden `(k, k, k+1)` pattern.
pub fn in_asm_i(a: &Asm, mask: &ParabolicMask) -> Result<bool> {
    check_asm(a, mask)?;
    Ok(first_descent(a.rank_matrix(), mask).is_none())
}

/// First `(i, j)` with `i ∈ I` and `(r(i-1,j), r(i,j), r(i+1,j)) = (k, k, k+1)`.
pub fn first_descent(r: &RankMatrix, mask: &ParabolicMask) -> Option<(usize, usize)> {
    let n = r.n();
    for &i in mask.members() {
        for j in 1..=n {
            if r.get(i - 1, j) == r.get(i, j) && r.get(i + 1, j) == r.get(i, j) + 1 {
                return Some((i, j));
            }
        }
    }
    None
}

/// Value the run formula assigns to row `i` inside the run `[u, v]`.
#[inline]
fn run_value(r_below: u32, r_above: u32, i: usize, u: usize) -> u32 {
    r_below.min(r_above + (i - u + 1) as u32)
}

/// Membership in `ASM^I(n)` through the run formula: every in-run row equals
/// the value recomputed from the rows `u-1` and `v+1` bounding its run.
pub fn in_asm_i_via_run_formula(a: &Asm, mask: &ParabolicMask) -> Result<bool> {
    check_asm(a, mask)?;
    let n = a.n();
    for &(u, v) in mask.runs() {
        for i in u..=v {
            for j in 1..=n {
                if a.rank(i, j) != run_value(a.rank(v + 1, j), a.rank(u - 1, j), i, u) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Overwrites every in-run row of `values` (row-major, `n × n`) from the rows bounding the run.
pub(crate) fn fill_runs(n: usize, values: &mut [u32], mask: &ParabolicMask) {
    let get = |values: &[u32], i: usize, j: usize| if i == 0 { 0 } else { values[(i - 1) * n + (j - 1)] };
    for &(u, v) in mask.runs() {
        for i in u..=v {
            for j in 1..=n {
                values[(i - 1) * n + (j - 1)] = run_value(get(values, v + 1, j), get(values, u - 1, j), i, u);
            }
        }
    }
}

/// `A ≤_I B`: `r_A(i, j) ≥ r_B(i, j)` for every row `i ∉ I`.
pub fn leq_i(a: &Asm, b: &Asm, mask: &ParabolicMask) -> Result<bool> {
    check_asm(a, mask)?;
    check_asm(b, mask)?;
    let n = a.n();
    Ok((1..=n)
        .filter(|i| !mask.contains(*i))
        .all(|i| (1..=n).all(|j| a.rank(i, j) >= b.rank(i, j))))
}

fn require_member(a: &Asm, mask: &ParabolicMask) -> Result<()> {
    if !in_asm_i(a, mask)? {
        return Err(Error::NotInSublattice { mask: mask.members().to_vec() });
    }
    Ok(())
}

/// Meet in `ASM^I(n)`.
pub fn meet_i(a: &Asm, b: &Asm, mask: &ParabolicMask) -> Result<Asm> {
    require_member(a, mask)?;
    require_member(b, mask)?;
    let n = a.n();
    let mut values: Vec<u32> = a
        .rank_matrix()
        .values()
        .iter()
        .zip(b.rank_matrix().values())
        .map(|(x, y)| *x.max(y))
        .collect();
    fill_runs(n, &mut values, mask);
    let r = RankMatrix::from_values_unchecked(n, values);
    debug_assert!(RankMatrix::new(r.rows()).is_ok());
    Ok(Asm::from_rank_matrix(&r))
}

/// Join in `ASM^I(n)`, which is the join of `ASM(n)`.
pub fn join_i(a: &Asm, b: &Asm, mask: &ParabolicMask) -> Result<Asm> {
    require_member(a, mask)?;
    require_member(b, mask)?;
    let j = bruhat::join(a, b)?;
    if !in_asm_i(&j, mask)? {
        return Err(Error::InvariantViolation(format!("join left ASM^I for I = {mask}")));
    }
    Ok(j)
}

/// Left fold of [`meet_i`]; `None` for an empty input.
pub fn meet_i_all<'a>(items: impl IntoIterator<Item = &'a Asm>, mask: &ParabolicMask) -> Result<Option<Asm>> {
    let mut it = items.into_iter();
    let Some(first) = it.next() else { return Ok(None) };
    require_member(first, mask)?;
    it.try_fold(first.clone(), |acc, x| meet_i(&acc, x, mask)).map(Some)
}

/// Left fold of [`join_i`]; `None` for an empty input.
pub fn join_i_all<'a>(items: impl IntoIterator<Item = &'a Asm>, mask: &ParabolicMask) -> Result<Option<Asm>> {
    let mut it = items.into_iter();
    let Some(first) = it.next() else { return Ok(None) };
    require_member(first, mask)?;
    it.try_fold(first.clone(), |acc, x| join_i(&acc, x, mask)).map(Some)
}

/// `ASM^I(n)` in the canonical enumeration order.
pub fn enumerate_asm_i(n: usize, mask: &ParabolicMask) -> Result<AsmIIter> {
    mask.check_size(n)?;
    Ok(AsmIIter { inner: enumerate_asms(n)?, mask: mask.clone() })
}

pub struct AsmIIter {
    inner: AsmIter,
    mask: ParabolicMask,
}

impl Iterator for AsmIIter {
    type Item = Asm;

    fn next(&mut self) -> Option<Asm> {
        let mask = &self.mask;
        self.inner.by_ref().find(|a| first_descent(a.rank_matrix(), mask).is_none())
    }
}

/// `[P[i, j, r_A(i,j)]^I for i, j in 1..=n]`, row-major in `(i, j)`.
pub fn canonical_p_decomposition(a: &Asm, mask: &ParabolicMask) -> Result<Vec<Permutation>> {
    decomposition(a, mask, bigrassmannian_p)
}

/// `[Q[i, j, r_A(i,j)]^I for i, j in 1..=n]`, row-major in `(i, j)`.
pub fn canonical_q_decomposition(a: &Asm, mask: &ParabolicMask) -> Result<Vec<Permutation>> {
    decomposition(a, mask, bigrassmannian_q)
}

fn decomposition(
    a: &Asm,
    mask: &ParabolicMask,
    family: fn(usize, usize, usize, usize) -> Result<Permutation>,
) -> Result<Vec<Permutation>> {
    require_member(a, mask)?;
    let n = a.n();
    let mut out = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let w = family(n, i, j, a.rank(i, j) as usize)?;
            out.push(min_coset_rep(&w, mask)?);
        }
    }
    Ok(out)
}

/// Rows outside `I` of `r_w` and `r_{w^I}` coincide.
pub fn rank_rows_invariant_under_quotient(w: &Permutation, mask: &ParabolicMask) -> Result<bool> {
    let rep = min_coset_rep(w, mask)?;
    let n = w.n();
    Ok((1..=n)
        .filter(|i| !mask.contains(*i))
        .all(|i| (1..=n).all(|j| w.rank(i, j) == rep.rank(i, j))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn mask(n: usize, m: &[usize]) -> ParabolicMask {
        ParabolicMask::new(n, m.to_vec()).unwrap()
    }

    fn mixed_left() -> Asm {
        Asm::new(vec![vec![0, 1, 0, 0], vec![1, -1, 1, 0], vec![0, 0, 0, 1], vec![0, 1, 0, 0]]).unwrap()
    }

    #[test]
    fn minimal_reps() {
        assert!(is_minimal_rep(&Permutation::identity(4), &mask(4, &[1, 2, 3])).unwrap());
        assert!(!is_minimal_rep(&p("1432"), &mask(4, &[2])).unwrap());
        assert_eq!(parabolic_quotient(4, &mask(4, &[2])).unwrap().len(), 12);
    }

    #[test]
    fn decompose_1432() {
        let (rep, rest) = parabolic_decompose(&p("1432"), &mask(4, &[2])).unwrap();
        assert_eq!(rep, p("1342"));
        assert_eq!(rest, Permutation::simple(4, 2).unwrap());
        assert_eq!(p("1432").length(), rep.length() + rest.length());
        assert_eq!(rep.compose(&rest).unwrap(), p("1432"));
    }

    #[test]
    fn longest_rep() {
        assert_eq!(longest_min_coset_rep(4, &mask(4, &[2])).unwrap(), p("4231"));
        assert_eq!(longest_min_coset_rep(4, &mask(4, &[])).unwrap(), p("4321"));
        assert!(longest_min_coset_rep(5, &ParabolicMask::full(5)).unwrap().is_identity());
    }

    #[test]
    fn membership_examples() {
        let m2 = mask(4, &[2]);
        assert!(in_asm_i(&mixed_left(), &m2).unwrap());
        let bad = bruhat::meet(&p("2341").to_asm(), &p("4123").to_asm()).unwrap();
        assert_eq!(
            bad.rank_matrix().rows(),
            vec![vec![0, 1, 1, 1], vec![1, 1, 2, 2], vec![1, 2, 2, 3], vec![1, 2, 3, 4]]
        );
        assert!(!in_asm_i(&bad, &m2).unwrap());
        assert_eq!(first_descent(bad.rank_matrix(), &m2), Some((2, 2)));
        assert!(!in_asm_i_via_run_formula(&bad, &m2).unwrap());
    }

    #[test]
    fn tail_example_run_formula() {
        let a = Asm::new(vec![
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 0, 1, -1, 1, 0],
            vec![1, 0, -1, 1, -1, 1],
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0],
        ])
        .unwrap();
        assert!(in_asm_i_via_run_formula(&a, &mask(6, &[4, 5])).unwrap());
        assert!(in_asm_i(&a, &mask(6, &[4, 5])).unwrap());
    }

    #[test]
    fn meet_i_examples() {
        let m2 = mask(4, &[2]);
        let x = p("2341").to_asm();
        assert_eq!(meet_i(&x, &p("4123").to_asm(), &m2).unwrap(), p("2143").to_asm());
        assert_eq!(meet_i(&x, &p("3142").to_asm(), &m2).unwrap(), mixed_left());
        assert_eq!(meet_i(&x, &x, &m2).unwrap(), x);
    }

    #[test]
    fn meet_i_rejects_non_members() {
        let m2 = mask(4, &[2]);
        let err = meet_i(&p("1432").to_asm(), &p("1234").to_asm(), &m2).unwrap_err();
        assert!(matches!(err, Error::NotInSublattice { .. }));
    }

    #[test]
    fn join_i_example() {
        let j = join_i(&p("1342").to_asm(), &p("2143").to_asm(), &mask(4, &[2])).unwrap();
        assert_eq!(j, mixed_left());
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_asm_i(4, &mask(4, &[2])).unwrap().count(), 14);
        assert_eq!(enumerate_asm_i(4, &mask(4, &[])).unwrap().count(), 42);
        let full: Vec<Asm> = enumerate_asm_i(4, &mask(4, &[1, 2, 3])).unwrap().collect();
        assert_eq!(full, vec![Asm::identity(4)]);
    }

    #[test]
    fn rank_rows_example() {
        assert!(rank_rows_invariant_under_quotient(&p("1432"), &mask(4, &[2])).unwrap());
    }

    #[test]
    fn decompositions_of_identity() {
        let id = Asm::identity(4);
        for m in ParabolicMask::all(4) {
            for w in canonical_p_decomposition(&id, &m).unwrap() {
                assert!(w.is_identity());
            }
        }
    }
}
