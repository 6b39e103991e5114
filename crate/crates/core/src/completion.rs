//! Finite posets, their Dedekind–MacNeille completion, lattice and density
//! checks, and order-isomorphism testing.
//!
//! The completion is computed as the family of cuts `A = A^{ul}`. Every cut
//! is an intersection of principal down-sets (the full carrier being the empty
//! intersection), so the family is generated by closing `{P}` under
//! intersection with each `↓x`.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the size of a poset handed to the completion or isomorphism routines.
pub const DEFAULT_POSET_CAP: usize = 5000;

/// Cap on the number of cuts generated by the completion.
pub const DEFAULT_CUT_CAP: usize = 1 << 20;

/// Fixed-width bit set over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn empty(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }
}

/// A finite poset on labelled elements `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    /// `down[x] = {y : y ≤ x}`
    down: Vec<BitSet>,
    /// `up[x] = {y : x ≤ y}`
    up: Vec<BitSet>,
}

impl FinitePoset {
    /// Builds a poset from a relation, validating reflexivity, antisymmetry
    /// and transitivity.
    pub fn new(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let m = labels.len();
        let mut down = vec![BitSet::empty(m); m];
        let mut up = vec![BitSet::empty(m); m];
        for x in 0..m {
            for y in 0..m {
                if leq(x, y) {
                    down[y].insert(x);
                    up[x].insert(y);
                }
            }
        }
        let p = FinitePoset { labels, down, up };
        p.validate()?;
        Ok(p)
    }

    /// Builds a poset from generating pairs `(a, b)` meaning `a ≤ b`; the
    /// reflexive-transitive closure is taken before checking antisymmetry.
    pub fn from_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let m = labels.len();
        let mut up = vec![BitSet::empty(m); m];
        for (x, set) in up.iter_mut().enumerate() {
            set.insert(x);
        }
        for &(a, b) in pairs {
            if a >= m || b >= m {
                return Err(Error::InvalidPoset(format!("pair ({a}, {b}) out of range for {m} elements")));
            }
            up[a].insert(b);
        }
        // Warshall on bit rows
        for k in 0..m {
            let row_k = up[k].clone();
            for set in up.iter_mut() {
                if set.contains(k) {
                    for (a, b) in set.words.iter_mut().zip(&row_k.words) {
                        *a |= b;
                    }
                }
            }
        }
        let mut down = vec![BitSet::empty(m); m];
        for (x, set) in up.iter().enumerate() {
            for y in set.iter() {
                down[y].insert(x);
            }
        }
        let p = FinitePoset { labels, down, up };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let m = self.len();
        for x in 0..m {
            if !self.leq(x, x) {
                return Err(Error::InvalidPoset(format!("{} is not ≤ itself", self.labels[x])));
            }
            for y in self.up[x].iter() {
                if y != x && self.leq(y, x) {
                    return Err(Error::InvalidPoset(format!(
                        "antisymmetry fails for {} and {}",
                        self.labels[x], self.labels[y]
                    )));
                }
                if !self.up[y].is_subset(&self.up[x]) {
                    return Err(Error::InvalidPoset(format!(
                        "transitivity fails through {} ≤ {}",
                        self.labels[x], self.labels[y]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    /// Common upper bounds of `set` (everything when `set` is empty).
    pub fn upper_bounds(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.len());
        for x in set.iter() {
            out.intersect_with(&self.up[x]);
        }
        out
    }

    /// Common lower bounds of `set` (everything when `set` is empty).
    pub fn lower_bounds(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.len());
        for x in set.iter() {
            out.intersect_with(&self.down[x]);
        }
        out
    }

    /// Least element of `set`, if any.
    pub fn minimum_of(&self, set: &BitSet) -> Option<usize> {
        set.iter().find(|&x| set.is_subset(&self.up[x]))
    }

    /// Greatest element of `set`, if any.
    pub fn maximum_of(&self, set: &BitSet) -> Option<usize> {
        set.iter().find(|&x| set.is_subset(&self.down[x]))
    }

    /// Least upper bound of `set`, if it exists.
    pub fn join_of(&self, set: &BitSet) -> Option<usize> {
        self.minimum_of(&self.upper_bounds(set))
    }

    /// Greatest lower bound of `set`, if it exists.
    pub fn meet_of(&self, set: &BitSet) -> Option<usize> {
        self.maximum_of(&self.lower_bounds(set))
    }

    pub fn singleton(&self, x: usize) -> BitSet {
        let mut s = BitSet::empty(self.len());
        s.insert(x);
        s
    }

    pub fn pair(&self, x: usize, y: usize) -> BitSet {
        let mut s = self.singleton(x);
        s.insert(y);
        s
    }

    /// Cover relations `(lower, upper)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let m = self.len();
        let mut out = Vec::new();
        for x in 0..m {
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                // x < z < y for some z?
                let between = self.up[x].intersection(&self.down[y]);
                if between.count() == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The induced subposet on `keep`, indexed in the order given.
    pub fn restrict(&self, keep: &[usize]) -> FinitePoset {
        let labels = keep.iter().map(|&k| self.labels[k].clone()).collect();
        FinitePoset::new(labels, |a, b| self.leq(keep[a], keep[b])).expect("restriction of a poset")
    }
}

/// Every pair has a join and a meet; the empty poset is not a lattice.
pub fn is_lattice(p: &FinitePoset) -> bool {
    let m = p.len();
    if m == 0 {
        return false;
    }
    for x in 0..m {
        for y in x + 1..m {
            let s = p.pair(x, y);
            if p.join_of(&s).is_none() || p.meet_of(&s).is_none() {
                return false;
            }
        }
    }
    true
}

/// First pair without a join or without a meet, for reporting.
pub fn lattice_violation(p: &FinitePoset) -> Option<(usize, usize)> {
    let m = p.len();
    for x in 0..m {
        for y in x + 1..m {
            let s = p.pair(x, y);
            if p.join_of(&s).is_none() || p.meet_of(&s).is_none() {
                return Some((x, y));
            }
        }
    }
    None
}

/// The completion lattice together with the embedding of the original poset.
#[derive(Debug, Clone)]
pub struct Completion {
    pub lattice: FinitePoset,
    /// `embed[x]` is the index in `lattice` of the cut `↓x`.
    pub embed: Vec<usize>,
    /// The cut behind each lattice element, as a subset of the original carrier.
    pub cuts: Vec<BitSet>,
}

pub fn dm_completion(p: &FinitePoset) -> Result<Completion> {
    dm_completion_with_caps(p, DEFAULT_POSET_CAP, DEFAULT_CUT_CAP)
}

pub fn dm_completion_with_caps(p: &FinitePoset, poset_cap: usize, cut_cap: usize) -> Result<Completion> {
    let m = p.len();
    if m > poset_cap {
        return Err(Error::ResourceLimit { what: "poset size", requested: m, cap: poset_cap });
    }
    let full = BitSet::full(m);
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut queue = vec![full.clone()];
    seen.insert(full);
    while let Some(s) = queue.pop() {
        for x in 0..m {
            let t = s.intersection(&p.down[x]);
            if !seen.contains(&t) {
                if seen.len() >= cut_cap {
                    return Err(Error::ResourceLimit { what: "cuts", requested: seen.len() + 1, cap: cut_cap });
                }
                seen.insert(t.clone());
                queue.push(t);
            }
        }
    }
    let mut cuts: Vec<BitSet> = seen.into_iter().collect();
    cuts.sort_by(|a, b| a.count().cmp(&b.count()).then_with(|| a.cmp(b)));

    let index: HashMap<&BitSet, usize> = cuts.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let embed: Vec<usize> = (0..m).map(|x| index[&p.down[x]]).collect();
    let mut labels: Vec<String> = cuts
        .iter()
        .map(|c| {
            let names: Vec<&str> = c.iter().map(|x| p.labels[x].as_str()).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    for (x, &k) in embed.iter().enumerate() {
        labels[k] = p.labels[x].clone();
    }
    let lattice = FinitePoset::new(labels, |a, b| cuts[a].is_subset(&cuts[b]))?;
    Ok(Completion { lattice, embed, cuts })
}

/// `A^{ul} = A` for a subset of the carrier of `p`.
pub fn is_cut(p: &FinitePoset, set: &BitSet) -> bool {
    p.lower_bounds(&p.upper_bounds(set)) == *set
}

fn require_lattice(l: &FinitePoset) -> Result<()> {
    if let Some((x, y)) = lattice_violation(l) {
        return Err(Error::NotALattice(format!(
            "{} and {} lack a join or a meet",
            l.labels()[x],
            l.labels()[y]
        )));
    }
    if l.is_empty() {
        return Err(Error::NotALattice("empty poset".into()));
    }
    Ok(())
}

/// Every `x` equals the join of the image elements below it.
pub fn is_join_dense(image: &[usize], l: &FinitePoset) -> Result<bool> {
    require_lattice(l)?;
    let mut img = BitSet::empty(l.len());
    for &y in image {
        img.insert(y);
    }
    Ok((0..l.len()).all(|x| l.join_of(&l.down[x].intersection(&img)) == Some(x)))
}

/// Every `x` equals the meet of the image elements above it.
pub fn is_meet_dense(image: &[usize], l: &FinitePoset) -> Result<bool> {
    require_lattice(l)?;
    let mut img = BitSet::empty(l.len());
    for &y in image {
        img.insert(y);
    }
    Ok((0..l.len()).all(|x| l.meet_of(&l.up[x].intersection(&img)) == Some(x)))
}

/// Per-element invariant used to prune the isomorphism search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Signature {
    down: usize,
    up: usize,
    lower_covers: usize,
    upper_covers: usize,
}

fn signatures(p: &FinitePoset) -> (Vec<Signature>, Vec<Vec<usize>>) {
    let m = p.len();
    let mut lower = vec![Vec::new(); m];
    let mut upper_count = vec![0; m];
    for (a, b) in p.covers() {
        lower[b].push(a);
        upper_count[a] += 1;
    }
    let sigs = (0..m)
        .map(|x| Signature {
            down: p.down[x].count(),
            up: p.up[x].count(),
            lower_covers: lower[x].len(),
            upper_covers: upper_count[x],
        })
        .collect();
    (sigs, lower)
}

/// An order isomorphism `p → q` as a vector `phi` with `phi[x] ∈ q`, if one exists.
///
/// Exact backtracking. Elements of `p` are placed in order of down-set size,
/// so every lower cover is mapped before the element itself and candidates
/// must have exactly the image of those covers as their own lower covers.
pub fn poset_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Result<Option<Vec<usize>>> {
    for s in [p.len(), q.len()] {
        if s > DEFAULT_POSET_CAP {
            return Err(Error::ResourceLimit { what: "poset size", requested: s, cap: DEFAULT_POSET_CAP });
        }
    }
    if p.len() != q.len() {
        return Ok(None);
    }
    let m = p.len();
    let (sig_p, lower_p) = signatures(p);
    let (sig_q, lower_q) = signatures(q);
    let mut hist_p: Vec<Signature> = sig_p.clone();
    let mut hist_q: Vec<Signature> = sig_q.clone();
    hist_p.sort();
    hist_q.sort();
    if hist_p != hist_q || p.covers().len() != q.covers().len() {
        return Ok(None);
    }

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&x| (sig_p[x].down, x));
    let lower_q_sets: Vec<BitSet> = lower_q
        .iter()
        .map(|v| {
            let mut s = BitSet::empty(m);
            for &y in v {
                s.insert(y);
            }
            s
        })
        .collect();

    let mut phi = vec![usize::MAX; m];
    let mut used = vec![false; m];
    let mut search = Search { p, q, sig_p: &sig_p, sig_q: &sig_q, lower_p: &lower_p, lower_q_sets: &lower_q_sets, order: &order };
    if search.extend(0, &mut phi, &mut used) {
        Ok(Some(phi))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    p: &'a FinitePoset,
    q: &'a FinitePoset,
    sig_p: &'a [Signature],
    sig_q: &'a [Signature],
    lower_p: &'a [Vec<usize>],
    lower_q_sets: &'a [BitSet],
    order: &'a [usize],
}

impl Search<'_> {
    fn extend(&mut self, depth: usize, phi: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let m = self.q.len();
        let mut image_covers = BitSet::empty(m);
        for &c in &self.lower_p[x] {
            image_covers.insert(phi[c]);
        }
        for y in 0..m {
            if used[y] || self.sig_q[y] != self.sig_p[x] || self.lower_q_sets[y] != image_covers {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&z| {
                self.p.leq(z, x) == self.q.leq(phi[z], y) && self.p.leq(x, z) == self.q.leq(y, phi[z])
            });
            if !consistent {
                continue;
            }
            phi[x] = y;
            used[y] = true;
            if self.extend(depth + 1, phi, used) {
                return true;
            }
            used[y] = false;
            phi[x] = usize::MAX;
        }
        false
    }
}

pub fn poset_isomorphic(p: &FinitePoset, q: &FinitePoset) -> Result<bool> {
    Ok(poset_isomorphism(p, q)?.is_some())
}

/// Checks that `phi` is a bijection preserving and reflecting order.
pub fn is_order_isomorphism(p: &FinitePoset, q: &FinitePoset, phi: &[usize]) -> bool {
    let m = p.len();
    if q.len() != m || phi.len() != m {
        return false;
    }
    let mut hit = vec![false; m];
    for &y in phi {
        if y >= m || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    (0..m).all(|a| (0..m).all(|b| p.leq(a, b) == q.leq(phi[a], phi[b])))
}

#[derive(Serialize, Deserialize)]
struct PosetDoc {
    elements: Vec<String>,
    leq_pairs: Vec<(usize, usize)>,
}

impl Serialize for FinitePoset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut leq_pairs = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if x != y {
                    leq_pairs.push((x, y));
                }
            }
        }
        PosetDoc { elements: self.labels.clone(), leq_pairs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinitePoset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = PosetDoc::deserialize(d)?;
        FinitePoset::from_pairs(doc.elements, &doc.leq_pairs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(k: usize) -> Vec<String> {
        (0..k).map(|i| format!("e{i}")).collect()
    }

    fn chain(k: usize) -> FinitePoset {
        FinitePoset::new(names(k), |a, b| a <= b).unwrap()
    }

    fn antichain(k: usize) -> FinitePoset {
        FinitePoset::new(names(k), |a, b| a == b).unwrap()
    }

    fn diamond() -> FinitePoset {
        FinitePoset::from_pairs(names(4), &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(FinitePoset::new(names(2), |_, _| true).is_err());
        assert!(FinitePoset::new(names(2), |a, b| a < b).is_err());
        assert!(FinitePoset::from_pairs(names(2), &[(0, 1), (1, 0)]).is_err());
        assert!(FinitePoset::from_pairs(names(2), &[(0, 5)]).is_err());
    }

    #[test]
    fn antichain_completes_to_diamond() {
        let c = dm_completion(&antichain(2)).unwrap();
        assert_eq!(c.lattice.len(), 4);
        assert!(poset_isomorphic(&c.lattice, &diamond()).unwrap());
    }

    #[test]
    fn chain_is_its_own_completion() {
        for k in 1..6 {
            let c = dm_completion(&chain(k)).unwrap();
            assert!(poset_isomorphic(&c.lattice, &chain(k)).unwrap());
        }
    }

    #[test]
    fn empty_poset_completes_to_point() {
        let empty = FinitePoset::new(Vec::new(), |_, _| false).unwrap();
        let c = dm_completion(&empty).unwrap();
        assert_eq!(c.lattice.len(), 1);
        assert!(!is_lattice(&empty));
    }

    #[test]
    fn lattice_checks() {
        assert!(!is_lattice(&antichain(2)));
        assert!(is_lattice(&diamond()));
        assert!(is_lattice(&chain(3)));
    }

    #[test]
    fn density() {
        let d = diamond();
        let all: Vec<usize> = (0..4).collect();
        assert!(is_join_dense(&all, &d).unwrap());
        assert!(is_meet_dense(&all, &d).unwrap());
        let two = chain(2);
        assert!(!is_join_dense(&[0], &two).unwrap());
        assert!(matches!(is_join_dense(&[0], &antichain(2)), Err(Error::NotALattice(_))));
    }

    #[test]
    fn diamond_is_not_a_chain() {
        assert!(!poset_isomorphic(&diamond(), &chain(4)).unwrap());
        let phi = poset_isomorphism(&diamond(), &diamond()).unwrap().unwrap();
        assert!(is_order_isomorphism(&diamond(), &diamond(), &phi));
    }

    #[test]
    fn cuts_are_closed() {
        let p = FinitePoset::from_pairs(names(4), &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let c = dm_completion(&p).unwrap();
        for cut in &c.cuts {
            assert!(is_cut(&p, cut));
        }
        assert!(is_lattice(&c.lattice));
        // the bowtie gains one element between its two levels, plus bottom and top
        assert_eq!(c.lattice.len(), 7);
    }

    #[test]
    fn json_round_trip() {
        let d = diamond();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"elements":["e0","e1","e2","e3"],"leq_pairs":[[0,1],[0,2],[0,3],[1,3],[2,3]]}"#);
        let back: FinitePoset = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
    }
}
