//! Six-vertex states with domain-wall boundary and their bijection with ASMs.
//!
//! Horizontal edges are indexed by `(row i ∈ 1..=n, slot j ∈ 0..=n)`, slot `j`
//! sitting between columns `j` and `j+1`. Vertical edges are indexed by
//! `(slot i ∈ 0..=n, column j ∈ 1..=n)`, slot `i` sitting between rows `i` and
//! `i+1`. Under the bijection a horizontal edge points right exactly when the
//! partial row sum to its left is 0, and a vertical edge points up exactly
//! when the partial column sum above it is 0.
//!
//! Vertex types: `1` has both horizontal arrows in and both vertical arrows
//! out, `-1` the reverse, and the four remaining ice configurations are `0`.

use serde::{Deserialize, Serialize};

use crate::asm::Asm;
use crate::error::{Error, Result};
use crate::mask::ParabolicMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Horizontal {
    #[serde(rename = "R")]
    Right,
    #[serde(rename = "L")]
    Left,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Vertical {
    #[serde(rename = "U")]
    Up,
    #[serde(rename = "D")]
    Down,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "StateDoc", into = "StateDoc")]
pub struct SixVertexState {
    n: usize,
    /// `n` rows of `n + 1` slots.
    h: Vec<Vec<Horizontal>>,
    /// `n + 1` slots of `n` columns.
    v: Vec<Vec<Vertical>>,
}

#[derive(Serialize, Deserialize)]
struct StateDoc {
    n: usize,
    h: Vec<Vec<Horizontal>>,
    v: Vec<Vec<Vertical>>,
}

impl TryFrom<StateDoc> for SixVertexState {
    type Error = Error;

    fn try_from(doc: StateDoc) -> Result<Self> {
        SixVertexState::new(doc.n, doc.h, doc.v)
    }
}

impl From<SixVertexState> for StateDoc {
    fn from(s: SixVertexState) -> Self {
        StateDoc { n: s.n, h: s.h, v: s.v }
    }
}

impl SixVertexState {
    /// Validates shapes, the domain-wall boundary and the ice rule.
    pub fn new(n: usize, h: Vec<Vec<Horizontal>>, v: Vec<Vec<Vertical>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if h.len() != n || h.iter().any(|r| r.len() != n + 1) {
            return Err(Error::InvariantViolation(format!("h must be {n} rows of {} slots", n + 1)));
        }
        if v.len() != n + 1 || v.iter().any(|r| r.len() != n) {
            return Err(Error::InvariantViolation(format!("v must be {} slots of {n} columns", n + 1)));
        }
        let s = SixVertexState { n, h, v };
        s.validate()?;
        Ok(s)
    }

    /// Domain-wall boundary and ice rule.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 1..=n {
            if self.h(i, 0) != Horizontal::Right || self.h(i, n) != Horizontal::Left {
                return Err(Error::InvariantViolation(format!("row {i}: side arrows must point inward")));
            }
        }
        for j in 1..=n {
            if self.v(0, j) != Vertical::Up || self.v(n, j) != Vertical::Down {
                return Err(Error::InvariantViolation(format!("column {j}: top and bottom arrows must point outward")));
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                let inward = [
                    self.h(i, j - 1) == Horizontal::Right,
                    self.h(i, j) == Horizontal::Left,
                    self.v(i - 1, j) == Vertical::Down,
                    self.v(i, j) == Vertical::Up,
                ]
                .iter()
                .filter(|&&b| b)
                .count();
                if inward != 2 {
                    return Err(Error::InvariantViolation(format!(
                        "ice rule fails at vertex ({i}, {j}): {inward} arrows in"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Horizontal edge in row `i` (1-based) at slot `j` (0..=n).
    pub fn h(&self, i: usize, j: usize) -> Horizontal {
        self.h[i - 1][j]
    }

    /// Vertical edge at slot `i` (0..=n) in column `j` (1-based).
    pub fn v(&self, i: usize, j: usize) -> Vertical {
        self.v[i][j - 1]
    }

    pub fn from_asm(a: &Asm) -> SixVertexState {
        let n = a.n();
        let mut h = Vec::with_capacity(n);
        for i in 1..=n {
            let mut sum = 0i64;
            let mut row = vec![Horizontal::Right];
            for j in 1..=n {
                sum += a.entry(i, j) as i64;
                row.push(if sum == 0 { Horizontal::Right } else { Horizontal::Left });
            }
            h.push(row);
        }
        let mut col = vec![0i64; n];
        let mut v = vec![vec![Vertical::Up; n]];
        for i in 1..=n {
            for (j, c) in col.iter_mut().enumerate() {
                *c += a.entry(i, j + 1) as i64;
            }
            v.push(col.iter().map(|&c| if c == 0 { Vertical::Up } else { Vertical::Down }).collect());
        }
        SixVertexState { n, h, v }
    }

    /// Reads the vertex types off the horizontal arrows.
    pub fn to_asm(&self) -> Result<Asm> {
        let n = self.n;
        let rows = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| match (self.h(i, j - 1), self.h(i, j)) {
                        (Horizontal::Right, Horizontal::Left) => 1,
                        (Horizontal::Left, Horizontal::Right) => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        let a = Asm::new(rows)?;
        if SixVertexState::from_asm(&a) != *self {
            return Err(Error::InvariantViolation("vertical arrows disagree with the horizontal ones".into()));
        }
        Ok(a)
    }

    /// Membership in `St_I(n)`: a right arrow in a row of `I` forces a right
    /// arrow in the same slot of the next row.
    pub fn in_st_i(&self, mask: &ParabolicMask) -> Result<bool> {
        mask.check_size(self.n)?;
        Ok(mask.members().iter().all(|&i| {
            (0..=self.n).all(|j| self.h(i, j) != Horizontal::Right || self.h(i + 1, j) == Horizontal::Right)
        }))
    }

    /// One string per horizontal line of the diagram, for eyeballing.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for i in 0..=self.n {
            let verts: String = (1..=self.n)
                .map(|j| match self.v(i, j) {
                    Vertical::Up => " ↑",
                    Vertical::Down => " ↓",
                })
                .collect();
            out.push_str(&verts);
            out.push('\n');
            if i < self.n {
                let horiz: String = (0..=self.n)
                    .map(|j| match self.h(i + 1, j) {
                        Horizontal::Right => "→",
                        Horizontal::Left => "←",
                    })
                    .collect::<Vec<_>>()
                    .join("•");
                out.push_str(&horiz);
                out.push('\n');
            }
        }
        out
    }
}
