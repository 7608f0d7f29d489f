//! Noncommutative polynomials with integer coefficients.
//!
//! A [`Tensor`] is a finite linear combination of words over the letters
//! `X₁, …, X_n` (stored 0-based). It is the common carrier for truncated
//! Magnus expansions and for elements of the free Lie ring.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A monomial: the word `X_{w[0]} X_{w[1]} ⋯`.
pub type Monomial = Vec<u8>;

/// An integer combination of words in `n` letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Tensor {
    pub fn zero(n: usize) -> Self {
        Tensor {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, Vec::new(), BigInt::one())
    }

    /// The letter `X_{i+1}`.
    pub fn letter(n: usize, i: usize) -> Self {
        assert!(i < n, "letter out of range");
        Self::monomial(n, alloc::vec![i as u8], BigInt::one())
    }

    pub fn monomial(n: usize, word: Monomial, coeff: BigInt) -> Self {
        let mut t = Self::zero(n);
        t.add_term(word, coeff);
        t
    }

    /// The word `X_{w[0]+1} X_{w[1]+1} ⋯` with coefficient one.
    pub fn word(n: usize, w: &[usize]) -> Self {
        Self::monomial(n, w.iter().map(|&i| i as u8).collect(), BigInt::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, w: &[u8]) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Tensor {
        self.scale(&-BigInt::one())
    }

    pub fn scale(&self, k: &BigInt) -> Tensor {
        if k.is_zero() {
            return Tensor::zero(self.n);
        }
        Tensor {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Product, dropping every word longer than `max_deg` when given.
    pub fn mul_trunc(&self, other: &Tensor, max_deg: Option<usize>) -> Tensor {
        let mut out = Tensor::zero(self.n);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if max_deg.is_some_and(|d| u.len() + v.len() > d) {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }

    pub fn mul(&self, other: &Tensor) -> Tensor {
        self.mul_trunc(other, None)
    }

    /// Keeps the words of length at most `d`.
    pub fn truncate(&self, d: usize) -> Tensor {
        Tensor {
            n: self.n,
            terms: self.terms.iter().filter(|(w, _)| w.len() <= d).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// The component of degree `d`.
    pub fn homogeneous(&self, d: usize) -> Tensor {
        Tensor {
            n: self.n,
            terms: self.terms.iter().filter(|(w, _)| w.len() == d).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// Smallest degree carrying a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    /// `Some(d)` when every word has length `d`; zero counts as homogeneous of
    /// any degree and yields `None`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.min_degree()?;
        (self.max_degree() == Some(d)).then_some(d)
    }

    /// `ab − ba`.
    pub fn bracket(&self, other: &Tensor) -> Tensor {
        self.mul(other).sub(&other.mul(self))
    }
}

impl fmt::Display for Tensor {
    /// Terms in degree-then-lexicographic order, e.g. `X1X2 - X2X1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ws: Vec<_> = self.terms.iter().collect();
        ws.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(b.0)));
        for (k, (w, c)) in ws.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            for &l in w {
                write!(f, "X{}", l + 1)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Tensor::letter(2, 0);
        let b = Tensor::letter(2, 1);
        let c = a.bracket(&b);
        assert_eq!(alloc::format!("{c}"), "X1X2 - X2X1");
        assert!(a.bracket(&a).is_zero());
        assert!(c.add(&c.neg()).is_zero());
        let s = Tensor::one(2).add(&a);
        assert_eq!(s.mul_trunc(&s, Some(1)), Tensor::one(2).add(&a.scale(&BigInt::from(2))));
        assert_eq!(c.homogeneous_degree(), Some(2));
        assert_eq!(s.homogeneous_degree(), None);
    }
}
