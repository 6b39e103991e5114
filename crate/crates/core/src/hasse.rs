//! Finite posets built from sets of ASMs and permutations, and DOT export.

use std::fmt::Write as _;

use crate::asm::Asm;
use crate::bruhat::hasse_covers;
use crate::completion::FinitePoset;
use crate::error::Result;
use crate::mask::ParabolicMask;
use crate::parabolic::parabolic_quotient;
use crate::triangle::MonotoneTriangle;

/// One-line notation for permutation matrices, monotone-triangle rows otherwise.
pub fn asm_label(a: &Asm) -> String {
    match a.as_permutation() {
        Some(w) => w.to_string(),
        None => MonotoneTriangle::from_asm(a).label(),
    }
}

/// The Bruhat order restricted to `set`, labelled by [`asm_label`].
pub fn asm_poset(set: &[Asm]) -> Result<FinitePoset> {
    FinitePoset::new(set.iter().map(asm_label).collect(), |x, y| {
        set[x].rank_matrix().dominates(set[y].rank_matrix())
    })
}

/// `S_n^I` under the Bruhat order, elements in lexicographic order.
pub fn quotient_poset(n: usize, mask: &ParabolicMask) -> Result<FinitePoset> {
    let asms: Vec<Asm> = parabolic_quotient(n, mask)?.iter().map(|w| w.to_asm()).collect();
    asm_poset(&asms)
}

/// DOT digraph of the cover relation, edges from lower to upper.
pub fn hasse_dot(set: &[Asm], name: &str) -> Result<String> {
    let covers = hasse_covers(set)?;
    let mut out = String::new();
    writeln!(out, "digraph \"{name}\" {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (k, a) in set.iter().enumerate() {
        writeln!(out, "  n{k} [label=\"{}\"];", asm_label(a)).unwrap();
    }
    for (lo, hi) in covers {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::enumerate_asm_i;

    #[test]
    fn labels() {
        let a = Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(asm_label(&a), "2 / 1 3 / 1 2 3");
        assert_eq!(asm_label(&Asm::identity(3)), "123");
    }

    #[test]
    fn dot_for_full_mask_is_a_single_node() {
        let set: Vec<Asm> = enumerate_asm_i(3, &ParabolicMask::full(3)).unwrap().collect();
        let dot = hasse_dot(&set, "x").unwrap();
        assert!(dot.contains("n0 [label=\"123\"]"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn quotient_sizes() {
        let m = ParabolicMask::new(4, vec![2]).unwrap();
        assert_eq!(quotient_poset(4, &m).unwrap().len(), 12);
    }
}
