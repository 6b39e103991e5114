//! Bruhat order and lattice operations on `ASM(n)`, and the bigrassmannian
//! permutations `P[a,b,c]`, `Q[a,b,c]`.
//!
//! `A ≤ B` iff `r_A ≥ r_B` entrywise, so the join takes the entrywise minimum
//! of rank matrices and the meet the entrywise maximum.

use crate::asm::Asm;
use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Cap on `n` for brute-force irreducibility scans.
pub const IRREDUCIBILITY_CAP: usize = 5;

fn same_size(a: &Asm, b: &Asm) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch { left: a.n(), right: b.n() });
    }
    Ok(())
}

pub fn bruhat_leq(a: &Asm, b: &Asm) -> Result<bool> {
    same_size(a, b)?;
    Ok(a.rank_matrix().dominates(b.rank_matrix()))
}

pub fn join(a: &Asm, b: &Asm) -> Result<Asm> {
    same_size(a, b)?;
    Ok(Asm::from_rank_matrix(&a.rank_matrix().entrywise_min(b.rank_matrix())))
}

pub fn meet(a: &Asm, b: &Asm) -> Result<Asm> {
    same_size(a, b)?;
    Ok(Asm::from_rank_matrix(&a.rank_matrix().entrywise_max(b.rank_matrix())))
}

/// Left fold of [`join`]; `None` for an empty input.
pub fn join_all<'a>(items: impl IntoIterator<Item = &'a Asm>) -> Result<Option<Asm>> {
    let mut it = items.into_iter();
    let Some(first) = it.next() else { return Ok(None) };
    it.try_fold(first.clone(), |acc, x| join(&acc, x)).map(Some)
}

/// Left fold of [`meet`]; `None` for an empty input.
pub fn meet_all<'a>(items: impl IntoIterator<Item = &'a Asm>) -> Result<Option<Asm>> {
    let mut it = items.into_iter();
    let Some(first) = it.next() else { return Ok(None) };
    it.try_fold(first.clone(), |acc, x| meet(&acc, x)).map(Some)
}

/// Cover pairs `(lower, upper)` of the Bruhat order restricted to `set`,
/// as indices into `set`, sorted.
pub fn hasse_covers(set: &[Asm]) -> Result<Vec<(usize, usize)>> {
    if let Some(first) = set.first() {
        for a in set {
            same_size(first, a)?;
        }
    }
    let m = set.len();
    let mut lt = vec![false; m * m];
    for a in 0..m {
        for b in 0..m {
            lt[a * m + b] = a != b && set[a].rank_matrix().dominates(set[b].rank_matrix());
        }
    }
    Ok(transitive_reduction(m, &lt))
}

/// Transitive reduction of a strict order given as a row-major matrix.
pub(crate) fn transitive_reduction(m: usize, lt: &[bool]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if lt[a * m + b] && !(0..m).any(|c| lt[a * m + c] && lt[c * m + b]) {
                out.push((a, b));
            }
        }
    }
    out
}

fn check_pq_params(n: usize, a: usize, b: usize, c: usize) -> Result<()> {
    let ok = (1..=n).contains(&a)
        && (1..=n).contains(&b)
        && c <= a.min(b)
        && a + b <= n + c;
    if !ok {
        return Err(Error::ParameterOutOfRange(format!(
            "(a, b, c) = ({a}, {b}, {c}) needs a, b in 1..={n} and max(0, a+b-n) <= c <= min(a, b)"
        )));
    }
    Ok(())
}

/// The join-irreducible `P[a,b,c] ∈ S_n`:
/// `i` for `i ≤ c` or `i > a+b-c`, `b-c+i` for `c < i ≤ a`, `c-a+i` for `a < i ≤ a+b-c`.
pub fn bigrassmannian_p(n: usize, a: usize, b: usize, c: usize) -> Result<Permutation> {
    check_pq_params(n, a, b, c)?;
    let word = (1..=n)
        .map(|i| {
            if i <= c || i > a + b - c {
                i
            } else if i <= a {
                b - c + i
            } else {
                c + i - a
            }
        })
        .collect();
    Permutation::new(word)
}

/// The meet-irreducible `Q[a,b,c] ∈ S_n`:
/// `n+1-i` for `i ≤ a-c` or `i > n-b+c`, `a+b-c+1-i` for `a-c < i ≤ a`,
/// `n+c+1-i` for `a < i ≤ n-b+c`.
pub fn bigrassmannian_q(n: usize, a: usize, b: usize, c: usize) -> Result<Permutation> {
    check_pq_params(n, a, b, c)?;
    let word = (1..=n)
        .map(|i| {
            if i <= a - c || i > n + c - b {
                n + 1 - i
            } else if i <= a {
                a + b + 1 - c - i
            } else {
                n + c + 1 - i
            }
        })
        .collect();
    Permutation::new(word)
}

/// Every admissible `(a, b, c)` for size `n`.
pub fn pq_parameters(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            for c in (a + b).saturating_sub(n)..=a.min(b) {
                out.push((a, b, c));
            }
        }
    }
    out
}

/// `r_A(a, b)` with range checking.
pub fn rank_at(m: &Asm, a: usize, b: usize) -> Result<u32> {
    let n = m.n();
    for idx in [a, b] {
        if !(1..=n).contains(&idx) {
            return Err(Error::IndexOutOfRange { index: idx, max: n });
        }
    }
    Ok(m.rank(a, b))
}

/// With `c = r_M(a, b)`: `P[a,b,c] ≤ M ≤ Q[a,b,c]`.
pub fn sandwich_holds(m: &Asm, a: usize, b: usize) -> Result<bool> {
    let n = m.n();
    let c = rank_at(m, a, b)? as usize;
    let p = bigrassmannian_p(n, a, b, c)?.to_asm();
    let q = bigrassmannian_q(n, a, b, c)?.to_asm();
    Ok(bruhat_leq(&p, m)? && bruhat_leq(m, &q)?)
}

fn check_universe(a: &Asm, universe: &[Asm]) -> Result<()> {
    if a.n() > IRREDUCIBILITY_CAP {
        return Err(Error::ResourceLimit { what: "n", requested: a.n(), cap: IRREDUCIBILITY_CAP });
    }
    for u in universe {
        same_size(a, u)?;
    }
    if !universe.contains(a) {
        return Err(Error::InvariantViolation("element is not in the universe".into()));
    }
    Ok(())
}

/// Whether `a` differs from the join of everything strictly below it in `universe`.
///
/// The bottom is the join of the empty set and therefore reducible.
pub fn is_join_irreducible(a: &Asm, universe: &[Asm]) -> Result<bool> {
    check_universe(a, universe)?;
    let below: Vec<&Asm> = universe
        .iter()
        .filter(|x| *x != a && x.rank_matrix().dominates(a.rank_matrix()))
        .collect();
    Ok(match join_all(below)? {
        None => false,
        Some(j) => j != *a,
    })
}

/// Dual of [`is_join_irreducible`]; the top is reducible.
pub fn is_meet_irreducible(a: &Asm, universe: &[Asm]) -> Result<bool> {
    check_universe(a, universe)?;
    let above: Vec<&Asm> = universe
        .iter()
        .filter(|x| *x != a && a.rank_matrix().dominates(x.rank_matrix()))
        .collect();
    Ok(match meet_all(above)? {
        None => false,
        Some(m) => m != *a,
    })
}
