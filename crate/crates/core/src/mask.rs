//! Subsets `I ⊆ [n-1]` of simple reflections, split into consecutive runs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MaskDoc", into = "MaskDoc")]
pub struct ParabolicMask {
    n: usize,
    members: Vec<usize>,
    runs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct MaskDoc {
    n: usize,
    members: Vec<usize>,
}

impl TryFrom<MaskDoc> for ParabolicMask {
    type Error = Error;

    fn try_from(doc: MaskDoc) -> Result<Self> {
        ParabolicMask::new(doc.n, doc.members)
    }
}

impl From<ParabolicMask> for MaskDoc {
    fn from(m: ParabolicMask) -> Self {
        MaskDoc { n: m.n, members: m.members }
    }
}

impl ParabolicMask {
    /// Members may be given in any order; duplicates are rejected.
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidMask(format!("{} listed twice", w[0])));
        }
        if let Some(&bad) = members.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::InvalidMask(format!("{bad} is not in 1..={}", n - 1)));
        }
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &i in &members {
            match runs.last_mut() {
                Some((_, v)) if *v + 1 == i => *v = i,
                _ => runs.push((i, i)),
            }
        }
        Ok(ParabolicMask { n, members, runs })
    }

    pub fn empty(n: usize) -> Self {
        ParabolicMask { n, members: Vec::new(), runs: Vec::new() }
    }

    /// `I = [n-1]`.
    pub fn full(n: usize) -> Self {
        ParabolicMask::new(n, (1..n).collect()).expect("valid")
    }

    /// `I = {t, t+1, …, n-1}` (empty when `t ≥ n`).
    pub fn tail(n: usize, t: usize) -> Self {
        ParabolicMask::new(n, (t.max(1)..n).collect()).expect("valid")
    }

    /// Parses a comma-separated list of 1-based indices; the empty string is `∅`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ParabolicMask::empty(n));
        }
        let members = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidMask(e.to_string()))?;
        ParabolicMask::new(n, members)
    }

    /// All `2^(n-1)` masks, ordered by their bitmask value.
    pub fn all(n: usize) -> Vec<ParabolicMask> {
        let k = n.saturating_sub(1);
        (0u64..1 << k)
            .map(|bits| {
                let members = (1..n).filter(|i| bits >> (i - 1) & 1 == 1).collect();
                ParabolicMask::new(n, members).expect("valid")
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Maximal runs `(u_t, v_t)` of consecutive members.
    pub fn runs(&self) -> &[(usize, usize)] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &ParabolicMask) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub(crate) fn check_size(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::SizeMismatch { left: n, right: self.n });
        }
        Ok(())
    }
}

impl std::fmt::Display for ParabolicMask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
