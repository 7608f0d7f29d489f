//! Tangential derivations of the free Lie ring and their trace.
//!
//! Lie elements are kept as their expansions in the tensor algebra. A
//! tangential derivation of degree `k` sends each generator `Xᵢ` to
//! `[Xᵢ, lᵢ]` with `lᵢ` a Lie element of degree `k`. Its trace contracts the
//! leading `Xᵢ` of every word of `d(Xᵢ)`, sums over `i`, and reads the result
//! up to rotation. A nonzero trace shows that the derivation does not come
//! from an automorphism of the free group.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::tensor::{Monomial, Tensor};

/// An element of the tensor algebra on `n` letters.
pub type TensorElt = Tensor;

/// `ab − ba`.
pub fn lie_bracket(a: &Tensor, b: &Tensor) -> Tensor {
    a.bracket(b)
}

/// `[g₁, [g₂, …, [g_{k−1}, g_k]…]]`. A single element is returned as is.
pub fn right_nested_bracket(gens: &[Tensor]) -> Tensor {
    let (last, rest) = gens.split_last().expect("at least one element");
    rest.iter().rev().fold(last.clone(), |acc, g| g.bracket(&acc))
}

/// `[…[[g₁, g₂], g₃], …, g_k]`. A single element is returned as is.
pub fn left_normed_bracket(gens: &[Tensor]) -> Tensor {
    let (first, rest) = gens.split_first().expect("at least one element");
    rest.iter().fold(first.clone(), |acc, g| acc.bracket(g))
}

/// The Dynkin map, sending each word `a₁⋯a_k` to `[…[a₁, a₂], …, a_k]`.
pub fn dynkin(u: &Tensor) -> Tensor {
    let n = u.n();
    let mut out = Tensor::zero(n);
    for (w, c) in u.terms() {
        if w.is_empty() {
            continue;
        }
        let letters: Vec<Tensor> = w.iter().map(|&l| Tensor::letter(n, l as usize)).collect();
        out = out.add(&left_normed_bracket(&letters).scale(c));
    }
    out
}

/// Whether `u` lies in the free Lie ring: each homogeneous part `u_d` of
/// positive degree satisfies `δ(u_d) = d·u_d`, and there is no constant term.
pub fn is_lie(u: &Tensor) -> bool {
    if !u.coeff(&[]).is_zero() {
        return false;
    }
    let Some(top) = u.max_degree() else {
        return true;
    };
    (1..=top).all(|d| {
        let ud = u.homogeneous(d);
        dynkin(&ud) == ud.scale(&BigInt::from(d))
    })
}

/// A derivation `Xᵢ ↦ [Xᵢ, lᵢ]` with every `lᵢ` a Lie element of degree `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentialDerivation {
    n: usize,
    k: usize,
    ls: Vec<Tensor>,
}

impl TangentialDerivation {
    pub fn new(n: usize, k: usize, ls: Vec<Tensor>) -> Result<Self> {
        if ls.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: ls.len(),
            });
        }
        for l in &ls {
            if l.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: l.n(),
                });
            }
            if !l.is_zero() && l.homogeneous_degree() != Some(k) || !is_lie(l) {
                return Err(Error::NotLie);
            }
        }
        Ok(TangentialDerivation { n, k, ls })
    }

    pub fn zero(n: usize, k: usize) -> Self {
        TangentialDerivation {
            n,
            k,
            ls: alloc::vec![Tensor::zero(n); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn ls(&self) -> &[Tensor] {
        &self.ls
    }

    /// `d(Xᵢ) = [Xᵢ, lᵢ]`.
    pub fn image(&self, i: usize) -> Tensor {
        Tensor::letter(self.n, i).bracket(&self.ls[i])
    }

    pub fn add(&self, other: &TangentialDerivation) -> Result<TangentialDerivation> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::ShapeMismatch);
        }
        let ls = self.ls.iter().zip(&other.ls).map(|(a, b)| a.add(b)).collect();
        Ok(TangentialDerivation { ls, ..*self })
    }

    pub fn scale(&self, c: &BigInt) -> TangentialDerivation {
        TangentialDerivation {
            ls: self.ls.iter().map(|l| l.scale(c)).collect(),
            ..*self
        }
    }
}

impl fmt::Display for TangentialDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "X{} -> {}", i + 1, self.image(i))?;
        }
        Ok(())
    }
}

/// The least rotation of `w`.
pub fn canonical_rotation(w: &[u8]) -> Monomial {
    (0..w.len().max(1))
        .map(|r| {
            let mut v = w[r.min(w.len())..].to_vec();
            v.extend_from_slice(&w[..r.min(w.len())]);
            v
        })
        .min()
        .unwrap_or_default()
}

/// An integer combination of words of length `k` taken up to rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicWord {
    n: usize,
    k: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl CyclicWord {
    pub fn zero(n: usize, k: usize) -> Self {
        CyclicWord {
            n,
            k,
            terms: BTreeMap::new(),
        }
    }

    /// The class of `w` (letters 0-based) with coefficient `c`.
    pub fn from_word(n: usize, w: &[usize], c: BigInt) -> Self {
        let mut out = Self::zero(n, w.len());
        let w: Vec<u8> = w.iter().map(|&i| i as u8).collect();
        out.add_term(&w, c);
        out
    }

    /// Projects a homogeneous tensor of degree `k`.
    pub fn project(t: &Tensor, k: usize) -> Self {
        let mut out = Self::zero(t.n(), k);
        for (w, c) in t.terms() {
            debug_assert_eq!(w.len(), k);
            out.add_term(w, c.clone());
        }
        out
    }

    fn add_term(&mut self, w: &[u8], c: BigInt) {
        let key = canonical_rotation(w);
        let e = self.terms.entry(key.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// Necklaces with nonzero coefficient, keyed by least rotation.
    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    /// Coefficient of the class of `w`.
    pub fn coeff(&self, w: &[usize]) -> BigInt {
        let w: Vec<u8> = w.iter().map(|&i| i as u8).collect();
        self.terms.get(&canonical_rotation(&w)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &CyclicWord) -> CyclicWord {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w, c.clone());
        }
        out
    }
}

fn letter_name(l: u8, n: usize) -> alloc::string::String {
    if n <= 26 {
        alloc::format!("{}", (b'A' + l) as char)
    } else {
        alloc::format!("x{}", l + 1)
    }
}

impl fmt::Display for CyclicWord {
    /// Necklaces by least rotation, letters `A, B, …`: `[AB] - 2[AAB]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str("[")?;
            for &l in w {
                f.write_str(&letter_name(l, self.n))?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// Contract the leading `Xᵢ` of each word in `d(Xᵢ)`, sum over `i`, and
/// project to cyclic words of length `k`.
pub fn trace(d: &TangentialDerivation) -> CyclicWord {
    let mut out = CyclicWord::zero(d.n, d.k);
    for i in 0..d.n {
        for (w, c) in d.image(i).terms() {
            if w.first() == Some(&(i as u8)) {
                out.add_term(&w[1..], c.clone());
            }
        }
    }
    out
}

/// The derivation sending `Xᵢ` to `[Xᵢ, [X_{i₁}, [X_{i₂}, …, [X_{i_l}, Xᵢ]…]]]`
/// and every other generator to zero. Indices are 0-based and the `i_j` must
/// differ from `i`.
pub fn nested_derivation(n: usize, i: usize, idx: &[usize]) -> Result<TangentialDerivation> {
    if i >= n || idx.is_empty() || idx.iter().any(|&j| j >= n || j == i) {
        return Err(Error::InvalidParameters(alloc::format!(
            "need a nonempty index list in 0..{n} avoiding {i}"
        )));
    }
    let mut gens: Vec<Tensor> = idx.iter().map(|&j| Tensor::letter(n, j)).collect();
    gens.push(Tensor::letter(n, i));
    let mut ls = alloc::vec![Tensor::zero(n); n];
    ls[i] = right_nested_bracket(&gens);
    TangentialDerivation::new(n, idx.len() + 1, ls)
}

/// The trace of [`nested_derivation`]: `(−1)^{l+1} X_{i_l} ⋯ X_{i₁} Xᵢ`.
pub fn nested_derivation_trace(n: usize, i: usize, idx: &[usize]) -> CyclicWord {
    let mut w: Vec<usize> = idx.iter().rev().copied().collect();
    w.push(i);
    let sign = if idx.len() % 2 == 1 { 1 } else { -1 };
    CyclicWord::from_word(n, &w, BigInt::from(sign))
}

/// A tangential derivation of degree `c − 1` on `n` generators whose trace is
/// a single necklace with coefficient one. Such a derivation comes from a
/// basis-conjugating automorphism of the free `c`-nilpotent group, hence of
/// the free `c`-nilpotent quandle, that does not lift to the free group.
pub fn non_tame_witness(n: usize, c: usize) -> Result<(TangentialDerivation, CyclicWord)> {
    if n < 2 || c < 3 {
        return Err(Error::InvalidRange(alloc::format!(
            "non-tame automorphisms need n >= 2 and c >= 3, got n = {n}, c = {c}"
        )));
    }
    let l = c - 2;
    let idx: Vec<usize> = (1..=l).map(|j| 1 + (l - j) % (n - 1)).collect();
    let sign = if l % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let d = nested_derivation(n, 0, &idx)?.scale(&sign);
    let tr = trace(&d);
    Ok((d, tr))
}
