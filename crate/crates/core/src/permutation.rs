//! Permutations in one-line notation.

use serde::{Deserialize, Serialize};

use crate::asm::Asm;
use crate::error::{Error, Result};

/// A permutation of `[n]` stored as its one-line word `w(1) … w(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PermutationDoc", into = "PermutationDoc")]
pub struct Permutation {
    word: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PermutationDoc {
    n: usize,
    word: Vec<usize>,
}

impl TryFrom<PermutationDoc> for Permutation {
    type Error = Error;

    fn try_from(doc: PermutationDoc) -> Result<Self> {
        if doc.word.len() != doc.n {
            return Err(Error::SizeMismatch { left: doc.n, right: doc.word.len() });
        }
        Permutation::new(doc.word)
    }
}

impl From<Permutation> for PermutationDoc {
    fn from(w: Permutation) -> Self {
        PermutationDoc { n: w.n(), word: w.word }
    }
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Permutation { word })
    }

    /// Parses compact one-line notation such as `"1342"` (sizes up to 9), or a
    /// comma-separated word such as `"1,3,4,2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidPermutation(e.to_string()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::InvalidPermutation(format!("cannot parse {s:?}")))?
        };
        Permutation::new(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n).collect() }
    }

    /// The longest element `w_0 = n … 2 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { word: (1..=n).rev().collect() }
    }

    /// The simple transposition `s_i = (i i+1)`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(i - 1, i);
        Ok(Permutation { word })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)`, 1-based.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        Ok(Permutation { word: other.word.iter().map(|&k| self.at(k)).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.n()];
        for (k, &v) in self.word.iter().enumerate() {
            word[v - 1] = k + 1;
        }
        Permutation { word }
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .sum()
    }

    /// `r_w(i, j) = |{k ≤ i : w(k) ≤ j}|`.
    pub fn rank(&self, i: usize, j: usize) -> u32 {
        self.word[..i].iter().filter(|&&v| v <= j).count() as u32
    }

    pub fn to_asm(&self) -> Asm {
        let n = self.n();
        let mut entries = vec![0i8; n * n];
        for (i, &v) in self.word.iter().enumerate() {
            entries[i * n + v - 1] = 1;
        }
        Asm::from_entries_unchecked(n, entries)
    }

    /// Right descents: positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    /// A reduced word `[i_1, …, i_ℓ]` with `w = s_{i_1} ⋯ s_{i_ℓ}`.
    ///
    /// Built by repeatedly stripping the leftmost right descent, so the output
    /// is deterministic.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.word.clone();
        let mut stripped = Vec::new();
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1]) {
            w.swap(i, i + 1);
            stripped.push(i + 1);
        }
        stripped.reverse();
        stripped
    }

    /// Every permutation of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { word: word.clone() });
            // next lexicographic permutation
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| word[k] < word[k + 1]) else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| word[l] > word[k]).unwrap();
            word.swap(k, l);
            word[k + 1..].reverse();
        }
        out
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}
