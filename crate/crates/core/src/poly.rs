//! Multivariate polynomials over ℚ in the variables `k_1, …, k_m`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPolynomial {
    vars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl MultiPolynomial {
    pub fn zero(vars: usize) -> Self {
        MultiPolynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, BigRational::one())
    }

    /// The variable `k_index` (1-based).
    pub fn variable(vars: usize, index: usize) -> Result<Self> {
        let mut p = Self::zero(vars);
        let slot = p.slot(index)?;
        let mut e = vec![0; vars];
        e[slot] = 1;
        p.add_term(e, BigRational::one());
        Ok(p)
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, merging repeats.
    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (BigRational, Monomial)>) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            if e.len() != vars {
                return Err(Error::SizeMismatch { left: vars, right: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn slot(&self, index: usize) -> Result<usize> {
        if index == 0 || index > self.vars {
            return Err(Error::UnknownVariable(format!("k{index} (polynomial has {} variables)", self.vars)));
        }
        Ok(index - 1)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// `E_{k_index}`: substitutes `k_index + 1` for `k_index`.
    pub fn shift(&self, index: usize) -> Result<Self> {
        let slot = self.slot(index)?;
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            let d = e[slot];
            for k in 0..=d {
                let mut e2 = e.clone();
                e2[slot] = k;
                out.add_term(e2, c * BigRational::from_integer(binomial(d, k)));
            }
        }
        Ok(out)
    }

    /// `Δ_{k_index} = E_{k_index} − id`.
    pub fn difference(&self, index: usize) -> Result<Self> {
        Ok(&self.shift(index)? - self)
    }

    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigRational> {
        if point.len() != self.vars {
            return Err(Error::SizeMismatch { left: self.vars, right: point.len() });
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (x, &d) in point.iter().zip(e) {
                m *= BigRational::from_integer(num_traits::pow(x.clone(), d as usize));
            }
            acc += m;
        }
        Ok(acc)
    }

    pub fn evaluate_i64(&self, point: &[i64]) -> Result<BigRational> {
        let p: Vec<BigInt> = point.iter().map(|&x| BigInt::from(x)).collect();
        self.evaluate(&p)
    }
}

impl Add for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn add(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn neg(self) -> MultiPolynomial {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn sub(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &MultiPolynomial {
    type Output = MultiPolynomial;

    fn mul(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = MultiPolynomial::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(i, &d)| if d == 1 { format!("k{}", i + 1) } else { format!("k{}^{d}", i + 1) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn difference_of_linear() {
        let k1 = MultiPolynomial::variable(2, 1).unwrap();
        let k2 = MultiPolynomial::variable(2, 2).unwrap();
        let p = &k2 - &k1;
        assert_eq!(p.difference(2).unwrap(), MultiPolynomial::one(2));
    }

    #[test]
    fn shift_of_square() {
        let k1 = MultiPolynomial::variable(1, 1).unwrap();
        let sq = &k1 * &k1;
        let expected =
            MultiPolynomial::from_terms(1, [(q(1), vec![2]), (q(2), vec![1]), (q(1), vec![0])]).unwrap();
        assert_eq!(sq.shift(1).unwrap(), expected);
    }

    #[test]
    fn operator_on_vandermonde_pair() {
        let k1 = MultiPolynomial::variable(2, 1).unwrap();
        let k2 = MultiPolynomial::variable(2, 2).unwrap();
        let p = &k2 - &k1;
        let applied = &p + &p.difference(2).unwrap().shift(1).unwrap();
        assert_eq!(applied, &(&k2 - &k1) + &MultiPolynomial::one(2));
    }

    #[test]
    fn unknown_variable() {
        let p = MultiPolynomial::one(2);
        assert!(matches!(p.shift(3), Err(Error::UnknownVariable(_))));
        assert!(matches!(p.difference(0), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn cancellation_and_evaluation() {
        let k1 = MultiPolynomial::variable(2, 1).unwrap();
        assert!((&k1 - &k1).is_zero());
        let p = &(&k1 * &k1) + &MultiPolynomial::constant(2, q(3));
        assert_eq!(p.evaluate_i64(&[4, 9]).unwrap(), q(19));
        assert!(p.evaluate_i64(&[1]).is_err());
        assert_eq!(p.to_string(), "k1^2 + 3");
    }
}
