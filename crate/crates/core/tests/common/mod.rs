//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls into the library: matrices are plain `Vec<Vec<i64>>`,
//! permutations are one-line `Vec<usize>`, and every order relation is
//! recomputed from explicit corner sums.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::Zero;

pub type Matrix = Vec<Vec<i64>>;

/// Every `n×n` alternating sign matrix, grown row by row from the 0/1 vector
/// of partial column sums.
pub fn all_asms(n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    let mut rows = Vec::new();
    grow(n, &vec![0; n], &mut rows, &mut out);
    out
}

fn grow(n: usize, sums: &[i64], rows: &mut Vec<Vec<i64>>, out: &mut Vec<Matrix>) {
    if rows.len() == n {
        out.push(rows.clone());
        return;
    }
    let target = rows.len() as i64 + 1;
    for bits in 0u32..1 << n {
        let next: Vec<i64> = (0..n).map(|j| i64::from(bits >> j & 1)).collect();
        if next.iter().sum::<i64>() != target {
            continue;
        }
        let row: Vec<i64> = next.iter().zip(sums).map(|(a, b)| a - b).collect();
        if !alternates(&row) {
            continue;
        }
        rows.push(row);
        grow(n, &next, rows, out);
        rows.pop();
    }
}

/// Nonzero entries read `+1, -1, +1, …, +1`.
fn alternates(row: &[i64]) -> bool {
    let nz: Vec<i64> = row.iter().copied().filter(|&x| x != 0).collect();
    !nz.is_empty() && nz.iter().enumerate().all(|(k, &x)| x == if k % 2 == 0 { 1 } else { -1 }) && nz.len() % 2 == 1
}

/// `(n+1)×(n+1)` corner sums with a zero row and column at index 0.
pub fn ranks(m: &Matrix) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut r = vec![vec![0; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            r[i][j] = (0..i).flat_map(|p| (0..j).map(move |q| (p, q))).map(|(p, q)| m[p][q]).sum();
        }
    }
    r
}

/// Bruhat order: `a ≤ b` iff every corner sum of `a` is at least that of `b`.
pub fn bruhat_le(a: &Matrix, b: &Matrix) -> bool {
    let (ra, rb) = (ranks(a), ranks(b));
    ra.iter().flatten().zip(rb.iter().flatten()).all(|(x, y)| x >= y)
}

/// No `(k, k, k+1)` pattern down any column at rows `i-1, i, i+1` with `i ∈ mask`.
pub fn in_parabolic(m: &Matrix, mask: &[usize]) -> bool {
    let n = m.len();
    let r = ranks(m);
    mask.iter().all(|&i| (1..=n).all(|j| !(r[i - 1][j] == r[i][j] && r[i + 1][j] == r[i][j] + 1)))
}

pub fn parabolic_set(n: usize, mask: &[usize]) -> Vec<Matrix> {
    all_asms(n).into_iter().filter(|m| in_parabolic(m, mask)).collect()
}

/// All subsets of `{1, …, n-1}`.
pub fn all_masks(n: usize) -> Vec<Vec<usize>> {
    let k = n.saturating_sub(1);
    (0u32..1 << k).map(|bits| (1..n).filter(|i| bits >> (i - 1) & 1 == 1).collect()).collect()
}

/// All permutations of `1..=n` in lexicographic order.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !cur.contains(&v) {
                cur.push(v);
                rec(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

pub fn perm_matrix(w: &[usize]) -> Matrix {
    let n = w.len();
    (0..n).map(|i| (0..n).map(|j| i64::from(w[i] == j + 1)).collect()).collect()
}

/// Minimal length representative of its coset `w W_I`: no descent at any `i ∈ mask`.
pub fn is_min_rep(w: &[usize], mask: &[usize]) -> bool {
    mask.iter().all(|&i| w[i - 1] < w[i])
}

pub fn quotient(n: usize, mask: &[usize]) -> Vec<Vec<usize>> {
    perms(n).into_iter().filter(|w| is_min_rep(w, mask)).collect()
}

/// Rows of the monotone triangle: row `i` lists the columns whose first `i`
/// entries sum to 1.
pub fn triangle_rows(m: &Matrix) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut sums = vec![0; n];
    let mut out = Vec::new();
    for row in m {
        for (s, x) in sums.iter_mut().zip(row) {
            *s += x;
        }
        out.push((0..n).filter(|&j| sums[j] == 1).map(|j| j + 1).collect());
    }
    out
}

/// Number of monotone triangles whose bottom row is `bottom`, by walking
/// every interlacing row above it.
pub fn count_monotone_triangles(bottom: &[i64]) -> u64 {
    if bottom.len() <= 1 {
        return 1;
    }
    let mut total = 0;
    let mut above = Vec::new();
    interlace(bottom, 0, &mut above, &mut total);
    total
}

fn interlace(below: &[i64], k: usize, above: &mut Vec<i64>, total: &mut u64) {
    if k + 1 == below.len() {
        *total += count_monotone_triangles(above);
        return;
    }
    for x in below[k]..=below[k + 1] {
        if above.last().is_some_and(|&p| x <= p) {
            continue;
        }
        above.push(x);
        interlace(below, k + 1, above, total);
        above.pop();
    }
}

/// Rank over ℚ by Gaussian elimination on the leading `i×j` block.
pub fn block_rank(z: &[Vec<BigRational>], i: usize, j: usize) -> usize {
    let mut a: Vec<Vec<BigRational>> = z[..i].iter().map(|r| r[..j].to_vec()).collect();
    let mut rank = 0;
    for col in 0..j {
        let Some(p) = (rank..i).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..i {
            if r != rank && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[rank][col];
                for c in col..j {
                    let d = &f * &a[rank][c];
                    a[r][c] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `Z ∈ X_A` iff every leading block has rank at most the matching corner sum.
pub fn in_variety(z: &[Vec<BigRational>], m: &Matrix) -> bool {
    let n = m.len();
    let r = ranks(m);
    (1..=n).all(|i| (1..=n).all(|j| block_rank(z, i, j) as i64 <= r[i][j]))
}

/// A finite set of matrices with their corner sums cached, for brute-force
/// bound searches.
pub struct Universe {
    pub items: Vec<Matrix>,
    flat: Vec<Vec<i64>>,
}

impl Universe {
    pub fn new(items: Vec<Matrix>) -> Self {
        let flat = items.iter().map(|m| ranks(m).concat()).collect();
        Universe { items, flat }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.items.iter().position(|x| x == m)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.flat[a].iter().zip(&self.flat[b]).all(|(x, y)| x >= y)
    }

    /// Greatest common lower bound of `items` inside the universe.
    pub fn glb(&self, items: &[usize]) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len()).filter(|&c| items.iter().all(|&x| self.le(c, x))).collect();
        lower.iter().copied().find(|&c| lower.iter().all(|&d| self.le(d, c)))
    }

    /// Least common upper bound of `items` inside the universe.
    pub fn lub(&self, items: &[usize]) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len()).filter(|&c| items.iter().all(|&x| self.le(x, c))).collect();
        upper.iter().copied().find(|&c| upper.iter().all(|&d| self.le(c, d)))
    }

    /// Every pair has a meet and a join.
    pub fn is_lattice(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).all(|b| self.glb(&[a, b]).is_some() && self.lub(&[a, b]).is_some()))
    }
}

/// Six-vertex arrows: `h[i][j]` is `true` (pointing right) when row `i+1`
/// sums to 0 over its first `j` entries; `v[i][j]` is `true` (pointing up)
/// when column `j+1` sums to 0 over its first `i` entries.
pub fn arrows(m: &Matrix) -> (Vec<Vec<bool>>, Vec<Vec<bool>>) {
    let n = m.len();
    let h = (0..n).map(|i| (0..=n).map(|j| m[i][..j].iter().sum::<i64>() == 0).collect()).collect();
    let v = (0..=n).map(|i| (0..n).map(|j| (0..i).map(|p| m[p][j]).sum::<i64>() == 0).collect()).collect();
    (h, v)
}
