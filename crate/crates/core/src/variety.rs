//! ASM varieties at the level of explicit rational matrices.
//!
//! `Z ∈ X_A` iff `rk(Z_{[i],[j]}) ≤ r_A(i, j)` for every leading submatrix.
//! Ranks are exact: rows are cleared of denominators and reduced with
//! fraction-free (Bareiss) elimination over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::asm::Asm;
use crate::error::{Error, Result};
use crate::mask::ParabolicMask;
use crate::parabolic::{first_descent, meet_i_all};
use crate::permutation::Permutation;

/// Largest `n` for which [`meet_corresponds_to_union`] scans `S_n`.
pub const UNION_REPORT_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare { rows: n, cols: r.len() });
        }
        Ok(RationalMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        RationalMatrix { n, entries: vec![BigRational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_permutation(w: &Permutation) -> Self {
        let n = w.n();
        let mut m = Self::zero(n);
        for i in 1..=n {
            m.entries[(i - 1) * n + w.at(i) - 1] = BigRational::one();
        }
        m
    }

    /// Entries `p/q` with `p` drawn uniformly from `lo..=hi` and `q` from `1..=max_den`.
    pub fn random<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64, max_den: i64) -> Self {
        let entries = (0..n * n)
            .map(|_| {
                BigRational::new(BigInt::from(rng.gen_range(lo..=hi)), BigInt::from(rng.gen_range(1..=max_den)))
            })
            .collect();
        RationalMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based entry.
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    /// Rank of the top-left `i × j` block.
    pub fn leading_rank(&self, i: usize, j: usize) -> usize {
        let block: Vec<Vec<BigInt>> = (1..=i)
            .map(|r| {
                let row: Vec<&BigRational> = (1..=j).map(|c| self.get(r, c)).collect();
                let den = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| (*x * BigRational::from_integer(den.clone())).to_integer()).collect()
            })
            .collect();
        bareiss_rank(block)
    }
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[derive(Clone)]
enum EntryDoc {
    Int(i64),
    Text(String),
}

impl<'de> Deserialize<'de> for EntryDoc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => {
                n.as_i64().map(EntryDoc::Int).ok_or_else(|| de::Error::custom(format!("{n} is not an integer")))
            }
            serde_json::Value::String(s) => Ok(EntryDoc::Text(s)),
            other => Err(de::Error::custom(format!("expected an integer or \"p/q\", got {other}"))),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidRational(s.to_string());
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

#[derive(Deserialize)]
struct MatrixDoc {
    n: usize,
    entries: Vec<Vec<EntryDoc>>,
}

#[derive(Serialize)]
struct MatrixOut {
    n: usize,
    entries: Vec<Vec<serde_json::Value>>,
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Vec<serde_json::Value>> = self
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| match x.is_integer().then(|| i64::try_from(x.to_integer())) {
                        Some(Ok(v)) => serde_json::Value::from(v),
                        _ => serde_json::Value::from(x.to_string()),
                    })
                    .collect()
            })
            .collect();
        MatrixOut { n: self.n, entries }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = MatrixDoc::deserialize(d)?;
        let rows = doc
            .entries
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|e| match e {
                        EntryDoc::Int(v) => Ok(BigRational::from_integer(v.into())),
                        EntryDoc::Text(s) => parse_rational(&s),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        let m = RationalMatrix::new(rows).map_err(de::Error::custom)?;
        if m.n != doc.n {
            return Err(de::Error::custom(Error::SizeMismatch { left: doc.n, right: m.n }));
        }
        Ok(m)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows() {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn same_size(z: &RationalMatrix, a: &Asm) -> Result<()> {
    if z.n() != a.n() {
        return Err(Error::SizeMismatch { left: z.n(), right: a.n() });
    }
    Ok(())
}

fn rank_bounded(z: &RationalMatrix, a: &Asm, rows: impl Iterator<Item = usize>) -> bool {
    let n = a.n();
    rows.into_iter()
        .all(|i| (1..=n).all(|j| z.leading_rank(i, j) <= a.rank(i, j) as usize))
}

pub fn in_asm_variety(z: &RationalMatrix, a: &Asm) -> Result<bool> {
    same_size(z, a)?;
    Ok(rank_bounded(z, a, 1..=a.n()))
}

/// Tests only the rank conditions in rows outside `I`; `A` must lie in `ASM^I(n)`.
pub fn in_asm_variety_reduced(z: &RationalMatrix, a: &Asm, mask: &ParabolicMask) -> Result<bool> {
    same_size(z, a)?;
    mask.check_size(a.n())?;
    if first_descent(a.rank_matrix(), mask).is_some() {
        return Err(Error::NotInSublattice { mask: mask.members().to_vec() });
    }
    Ok(rank_bounded(z, a, (1..=a.n()).filter(|i| !mask.contains(*i))))
}

/// A permutation `w` with `r_w(·, b) = r_A(·, b)` and `A ≤ w`.
///
/// Rows where column `b`'s rank steps up are listed in decreasing order and
/// sent to `1, …, b`; the remaining rows, also decreasing, go to `b+1, …, n`.
pub fn column_witness(a: &Asm, b: usize) -> Result<Permutation> {
    let n = a.n();
    if !(1..=n).contains(&b) {
        return Err(Error::IndexOutOfRange { index: b, max: n });
    }
    let (ups, flats): (Vec<usize>, Vec<usize>) =
        (1..=n).rev().partition(|&i| a.rank(i, b) > a.rank(i - 1, b));
    let mut word = vec![0; n];
    for (k, &row) in ups.iter().chain(flats.iter()).enumerate() {
        word[row - 1] = k + 1;
    }
    Permutation::new(word)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionReport {
    pub meet: Asm,
    /// Every `w` above some `A_t` is above the meet.
    pub containment: bool,
    /// The reverse inclusion holds as well.
    pub equality: bool,
    /// A permutation above the meet but above none of the `A_t`.
    pub witness: Option<Permutation>,
}

/// Compares `{w ∈ S_n : meet_I(A_1, …, A_k) ≤ w}` with `⋃_t {w : A_t ≤ w}`.
pub fn meet_corresponds_to_union(list: &[Asm], mask: &ParabolicMask) -> Result<UnionReport> {
    let Some(first) = list.first() else {
        return Err(Error::ParameterOutOfRange("the list of ASMs is empty".into()));
    };
    let n = first.n();
    if n > UNION_REPORT_CAP {
        return Err(Error::ResourceLimit { what: "n", requested: n, cap: UNION_REPORT_CAP });
    }
    let meet = meet_i_all(list, mask)?.expect("list is non-empty");
    let mut containment = true;
    let mut witness = None;
    for w in Permutation::all(n) {
        let wa = w.to_asm();
        let above_meet = meet.rank_matrix().dominates(wa.rank_matrix());
        let above_some = list.iter().any(|a| a.rank_matrix().dominates(wa.rank_matrix()));
        if above_some && !above_meet {
            containment = false;
        }
        if above_meet && !above_some && witness.is_none() {
            witness = Some(w);
        }
    }
    Ok(UnionReport { meet, containment, equality: containment && witness.is_none(), witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruhat::bruhat_leq;
    use crate::enumerate::enumerate_asms;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(RationalMatrix::identity(3).leading_rank(3, 3), 3);
        assert_eq!(RationalMatrix::identity(3).leading_rank(2, 3), 2);
        assert_eq!(RationalMatrix::zero(3).leading_rank(3, 3), 0);
        let m = RationalMatrix::from_integers(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]).unwrap();
        assert_eq!(m.leading_rank(2, 3), 1);
        assert_eq!(m.leading_rank(3, 3), 2);
    }

    #[test]
    fn permutation_points_match_bruhat() {
        let asms: Vec<Asm> = enumerate_asms(3).unwrap().collect();
        for w in Permutation::all(3) {
            let z = RationalMatrix::from_permutation(&w);
            for a in &asms {
                assert_eq!(in_asm_variety(&z, a).unwrap(), bruhat_leq(a, &w.to_asm()).unwrap());
            }
        }
    }

    #[test]
    fn trivial_members() {
        let a = Asm::identity(3);
        assert!(in_asm_variety(&RationalMatrix::zero(3), &a).unwrap());
        assert!(in_asm_variety(&RationalMatrix::identity(3), &a).unwrap());
        assert!(in_asm_variety(&RationalMatrix::zero(2), &a).is_err());
    }

    #[test]
    fn witness_for_identity() {
        assert_eq!(column_witness(&Asm::identity(3), 2).unwrap(), p("213"));
        assert!(column_witness(&Asm::identity(3), 0).is_err());
    }

    #[test]
    fn union_report_example() {
        let m = ParabolicMask::new(4, vec![2]).unwrap();
        let r = meet_corresponds_to_union(&[p("2341").to_asm(), p("4123").to_asm()], &m).unwrap();
        assert_eq!(r.meet, p("2143").to_asm());
        assert!(r.containment);
        assert!(!r.equality);
        let r1 = meet_corresponds_to_union(&[p("2341").to_asm()], &m).unwrap();
        assert!(r1.equality);
    }

    #[test]
    fn json_mixed_entries() {
        let m: RationalMatrix = serde_json::from_str(r#"{"n":2,"entries":[[1,"1/2"],["-3",0]]}"#).unwrap();
        assert_eq!(m.get(1, 2), &BigRational::new(1.into(), 2.into()));
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"n":2,"entries":[[1,"1/2"],[-3,0]]}"#);
        assert!(serde_json::from_str::<RationalMatrix>(r#"{"n":1,"entries":[["1/0"]]}"#).is_err());
    }
}
