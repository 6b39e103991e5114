//! The operators `π_i` on `ASM(n)` and their compositions.
//!
//! `π_i(A)` is the Bruhat-minimum of the ASMs whose rank matrix agrees with
//! `r_A` off row `i`. A smaller ASM has a larger rank matrix, and row `i` is
//! squeezed between `r(i-1, ·)` and `r(i+1, ·)`, so the minimum replaces row
//! `i` by `j ↦ min(r(i-1, j) + 1, r(i+1, j))`. The brute-force fiber search in
//! [`fiber_minimum`] is kept alongside as the reference.

use std::collections::HashSet;

use crate::asm::Asm;
use crate::bruhat;
use crate::enumerate::enumerate_asms;
use crate::error::{Error, Result};
use crate::mask::ParabolicMask;
use crate::parabolic::{fill_runs, longest_min_coset_rep, parabolic_decompose};
use crate::permutation::Permutation;
use crate::rank::RankMatrix;

/// Cap on `n` for the image/lattice scans, which walk all of `ASM(n)`.
pub const PI_IMAGE_CAP: usize = 5;

fn check_index(a: &Asm, i: usize) -> Result<()> {
    if i == 0 || i >= a.n() {
        return Err(Error::IndexOutOfRange { index: i, max: a.n() - 1 });
    }
    Ok(())
}

pub fn pi_i(a: &Asm, i: usize) -> Result<Asm> {
    check_index(a, i)?;
    let n = a.n();
    let mut values = a.rank_matrix().values().to_vec();
    for j in 1..=n {
        values[(i - 1) * n + (j - 1)] = (a.rank(i - 1, j) + 1).min(a.rank(i + 1, j));
    }
    Ok(Asm::from_rank_matrix(&RankMatrix::from_values_unchecked(n, values)))
}

/// Applies `π_{word[0]}` first, then `π_{word[1]}`, and so on.
pub fn pi_word(a: &Asm, word: &[usize]) -> Result<Asm> {
    word.iter().try_fold(a.clone(), |acc, &i| pi_i(&acc, i))
}

/// `π_w = π_{i_1} ∘ ⋯ ∘ π_{i_ℓ}` for the reduced word `w = s_{i_1} ⋯ s_{i_ℓ}`,
/// so `π_{i_ℓ}` acts first.
pub fn pi_perm(a: &Asm, w: &Permutation) -> Result<Asm> {
    if a.n() != w.n() {
        return Err(Error::SizeMismatch { left: a.n(), right: w.n() });
    }
    let mut word = w.reduced_word();
    word.reverse();
    pi_word(a, &word)
}

/// Longest element of the parabolic subgroup generated by `I`: `w_0 = w_0^I · w_{0,I}`.
pub fn longest_parabolic_element(n: usize, mask: &ParabolicMask) -> Result<Permutation> {
    Ok(parabolic_decompose(&Permutation::longest(n), mask)?.1)
}

/// `π_I(A)`: rows outside `I` are kept and every run of `I` is refilled with
/// its largest admissible values.
pub fn pi_parabolic(a: &Asm, mask: &ParabolicMask) -> Result<Asm> {
    mask.check_size(a.n())?;
    let n = a.n();
    let mut values = a.rank_matrix().values().to_vec();
    fill_runs(n, &mut values, mask);
    Ok(Asm::from_rank_matrix(&RankMatrix::from_values_unchecked(n, values)))
}

/// `π_I` evaluated as `π_w` along a reduced word of the longest element of
/// the parabolic subgroup generated by `I`.
pub fn pi_parabolic_via_word(a: &Asm, mask: &ParabolicMask) -> Result<Asm> {
    mask.check_size(a.n())?;
    pi_perm(a, &longest_parabolic_element(a.n(), mask)?)
}

/// `π_{w_0^I}` for the maximal minimal coset representative `w_0^I`.
pub fn pi_longest_min_rep(a: &Asm, mask: &ParabolicMask) -> Result<Asm> {
    mask.check_size(a.n())?;
    pi_perm(a, &longest_min_coset_rep(a.n(), mask)?)
}

/// Brute force: the Bruhat-minimum of `{B ∈ universe : r_B(a, ·) = r_A(a, ·) for every row a with !free(a)}`.
///
/// `None` when the fiber has no minimum within `universe`.
pub fn fiber_minimum(a: &Asm, free: impl Fn(usize) -> bool, universe: &[Asm]) -> Option<Asm> {
    let n = a.n();
    let fixed: Vec<usize> = (1..=n).filter(|&r| !free(r)).collect();
    let fiber: Vec<&Asm> = universe
        .iter()
        .filter(|b| b.n() == n && fixed.iter().all(|&r| (1..=n).all(|j| b.rank(r, j) == a.rank(r, j))))
        .collect();
    fiber
        .iter()
        .find(|m| fiber.iter().all(|b| m.rank_matrix().dominates(b.rank_matrix())))
        .map(|m| (*m).clone())
}

/// `π_w(ASM(n))` for a word applied left to right, in canonical enumeration order
/// of first appearance.
pub fn pi_image(n: usize, word: &[usize]) -> Result<Vec<Asm>> {
    if n > PI_IMAGE_CAP {
        return Err(Error::ResourceLimit { what: "n", requested: n, cap: PI_IMAGE_CAP });
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in enumerate_asms(n)? {
        let b = pi_word(&a, word)?;
        if seen.insert(b.clone()) {
            out.push(b);
        }
    }
    Ok(out)
}

/// Outcome of checking that an image set is a lattice through pairwise joins and a minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeReport {
    Lattice { size: usize },
    NoMinimum { size: usize },
    JoinEscapes { left: Asm, right: Asm, join: Asm },
}

impl LatticeReport {
    pub fn is_lattice(&self) -> bool {
        matches!(self, LatticeReport::Lattice { .. })
    }
}

/// A finite subset of `ASM(n)` that contains a minimum and is closed under the
/// `ASM(n)` join is a lattice.
pub fn join_closed_lattice_report(set: &[Asm]) -> Result<LatticeReport> {
    let size = set.len();
    let members: HashSet<&Asm> = set.iter().collect();
    let has_min = set
        .iter()
        .any(|m| set.iter().all(|b| m.rank_matrix().dominates(b.rank_matrix())));
    if !has_min {
        return Ok(LatticeReport::NoMinimum { size });
    }
    for (k, a) in set.iter().enumerate() {
        for b in &set[k + 1..] {
            let j = bruhat::join(a, b)?;
            if !members.contains(&j) {
                return Ok(LatticeReport::JoinEscapes { left: a.clone(), right: b.clone(), join: j });
            }
        }
    }
    Ok(LatticeReport::Lattice { size })
}

/// Lattice check for `π_w(ASM(n))` where `w` is given by a word applied left to right.
pub fn pi_image_is_lattice(n: usize, word: &[usize]) -> Result<LatticeReport> {
    join_closed_lattice_report(&pi_image(n, word)?)
}
