//! Free nilpotent groups `F_{n,c}` and free nilpotent quandles `Q_{n,c}`.
//!
//! A word in `F_n` is sent to the truncated power series obtained by
//! substituting `xᵢ ↦ 1 + Xᵢ` and `xᵢ⁻¹ ↦ 1 − Xᵢ + Xᵢ² − ⋯`, keeping words of
//! length at most `c`. Two words have the same expansion exactly when they
//! agree modulo `Γ_{c+1}(F_n)`, so equality in `F_{n,c}` is a comparison of
//! coefficients. The free `c`-nilpotent quandle is the union of the
//! conjugacy classes of the generators inside `F_{n,c}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::tensor::Tensor;
use crate::words::{Letter, Word};

/// Bounds on `(n, c)` beyond which expansions are refused, since a series
/// has up to `(n^{c+1} − 1)/(n − 1)` coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_generators: usize,
    pub max_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_generators: 4,
            max_degree: 6,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits {
            max_generators: usize::MAX,
            max_degree: usize::MAX,
        }
    }

    pub fn check(&self, n: usize, c: usize) -> Result<()> {
        if n > self.max_generators || c > self.max_degree || n > u8::MAX as usize + 1 {
            Err(Error::TooLarge { n, c })
        } else {
            Ok(())
        }
    }
}

/// A power series in `n` noncommuting variables, truncated above degree `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncPoly {
    c: usize,
    poly: Tensor,
}

impl TruncPoly {
    pub fn one(n: usize, c: usize) -> Self {
        TruncPoly {
            c,
            poly: Tensor::one(n),
        }
    }

    /// Wraps a polynomial, discarding terms above degree `c`.
    pub fn from_tensor(poly: Tensor, c: usize) -> Self {
        TruncPoly {
            c,
            poly: poly.truncate(c),
        }
    }

    pub fn n(&self) -> usize {
        self.poly.n()
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn poly(&self) -> &Tensor {
        &self.poly
    }

    /// Coefficient of `X_{w[0]+1} X_{w[1]+1} ⋯`.
    pub fn coeff(&self, w: &[usize]) -> BigInt {
        let w: Vec<u8> = w.iter().map(|&i| i as u8).collect();
        self.poly.coeff(&w)
    }

    pub fn is_one(&self) -> bool {
        self.poly == Tensor::one(self.n())
    }

    fn check_shape(&self, other: &TruncPoly) -> Result<()> {
        if self.n() == other.n() && self.c == other.c {
            Ok(())
        } else {
            Err(Error::ShapeMismatch)
        }
    }

    pub fn mul(&self, other: &TruncPoly) -> Result<TruncPoly> {
        self.check_shape(other)?;
        Ok(TruncPoly {
            c: self.c,
            poly: self.poly.mul_trunc(&other.poly, Some(self.c)),
        })
    }

    /// Inverse by the series `Σ (1 − a)^k`.
    pub fn inv(&self) -> Result<TruncPoly> {
        let n = self.n();
        if self.poly.coeff(&[]) != BigInt::one() {
            return Err(Error::NotUnit);
        }
        let u = Tensor::one(n).sub(&self.poly);
        let mut out = Tensor::one(n);
        let mut power = Tensor::one(n);
        for _ in 0..self.c {
            power = power.mul_trunc(&u, Some(self.c));
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Ok(TruncPoly { c: self.c, poly: out })
    }

    /// Least positive degree with a nonzero coefficient, or `c + 1` when
    /// there is none. A group element lies in `Γ_k` exactly when this is at
    /// least `k`.
    pub fn gamma_weight(&self) -> usize {
        self.poly
            .terms()
            .keys()
            .map(Vec::len)
            .filter(|&d| d > 0)
            .min()
            .unwrap_or(self.c + 1)
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

fn letter_series(n: usize, c: usize, l: Letter) -> TruncPoly {
    let x = Tensor::letter(n, l.gen);
    let mut poly = Tensor::one(n);
    if l.inverse {
        let mut power = Tensor::one(n);
        for k in 1..=c {
            power = power.mul(&x);
            poly = poly.add(&if k % 2 == 1 { power.neg() } else { power.clone() });
        }
    } else if c > 0 {
        poly = poly.add(&x);
    }
    TruncPoly { c, poly }
}

/// The expansion of `word` in `F_{n,c}`, refusing `(n, c)` outside the
/// default [`Limits`].
pub fn embed_word(word: &Word, n: usize, c: usize) -> Result<TruncPoly> {
    embed_word_with(word, n, c, Limits::default())
}

pub fn embed_word_with(word: &Word, n: usize, c: usize, limits: Limits) -> Result<TruncPoly> {
    limits.check(n, c)?;
    if let Some(l) = word.letters().iter().find(|l| l.gen >= n) {
        return Err(Error::GeneratorOutOfRange { gen: l.gen + 1, n });
    }
    let mut out = TruncPoly::one(n, c);
    for &l in word.letters() {
        out = out.mul(&letter_series(n, c, l))?;
    }
    Ok(out)
}

/// The element `w xᵢ w⁻¹` of the free `c`-nilpotent quandle on `n` generators.
#[derive(Debug, Clone)]
pub struct FreeNilpQuandleElt {
    gen: usize,
    conjugator: Word,
    conjugator_poly: TruncPoly,
    element_poly: TruncPoly,
}

impl FreeNilpQuandleElt {
    /// 0-based index of the generator this element is conjugate to.
    pub fn gen(&self) -> usize {
        self.gen
    }

    /// A word `w` with `self = w x_gen w⁻¹`.
    pub fn conjugator(&self) -> &Word {
        &self.conjugator
    }

    pub fn conjugator_poly(&self) -> &TruncPoly {
        &self.conjugator_poly
    }

    /// The expansion of `w x_gen w⁻¹`, which determines the element.
    pub fn element_poly(&self) -> &TruncPoly {
        &self.element_poly
    }

    /// The element as a group word.
    pub fn word(&self) -> Word {
        Word::gen(self.gen).conjugate_by(&self.conjugator)
    }
}

impl PartialEq for FreeNilpQuandleElt {
    fn eq(&self, other: &Self) -> bool {
        self.element_poly == other.element_poly
    }
}

impl Eq for FreeNilpQuandleElt {}

/// `w xᵢ w⁻¹` with `i` 0-based.
pub fn quandle_elt(w: &Word, i: usize, n: usize, c: usize) -> Result<FreeNilpQuandleElt> {
    quandle_elt_with(w, i, n, c, Limits::default())
}

pub fn quandle_elt_with(
    w: &Word,
    i: usize,
    n: usize,
    c: usize,
    limits: Limits,
) -> Result<FreeNilpQuandleElt> {
    if i >= n {
        return Err(Error::GeneratorOutOfRange { gen: i + 1, n });
    }
    let conjugator_poly = embed_word_with(w, n, c, limits)?;
    let x = embed_word_with(&Word::gen(i), n, c, limits)?;
    let element_poly = conjugator_poly.mul(&x)?.mul(&conjugator_poly.inv()?)?;
    Ok(FreeNilpQuandleElt {
        gen: i,
        conjugator: w.clone(),
        conjugator_poly,
        element_poly,
    })
}

/// `a ▷ b = a b a⁻¹`.
pub fn qd(a: &FreeNilpQuandleElt, b: &FreeNilpQuandleElt) -> Result<FreeNilpQuandleElt> {
    let ap = &a.element_poly;
    Ok(FreeNilpQuandleElt {
        gen: b.gen,
        conjugator: a.word().mul(&b.conjugator),
        conjugator_poly: ap.mul(&b.conjugator_poly)?,
        element_poly: ap.mul(&b.element_poly)?.mul(&ap.inv()?)?,
    })
}

pub fn eq(a: &FreeNilpQuandleElt, b: &FreeNilpQuandleElt) -> bool {
    a == b
}

/// All freely reduced words of length at most `radius` in `n` generators.
pub fn ball(n: usize, radius: usize) -> Vec<Word> {
    let mut out = alloc::vec![Word::empty()];
    let mut frontier = alloc::vec![Word::empty()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..n {
                for inverse in [false, true] {
                    let l = Letter::new(g, inverse);
                    if w.letters().last() == Some(&l.inv()) {
                        continue;
                    }
                    next.push(w.mul(&Word::from_letters([l])));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Outcome of comparing the free 2-nilpotent quandle on two generators with
/// the quandle on `ℤ ⊔ ℤ` where each orbit shifts the other by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q00Check {
    /// Sorted distinct coordinates met in the orbit of each generator.
    pub coordinates: [Vec<i64>; 2],
    pub holds: bool,
}

/// The coordinate of a conjugate of `x₁` is its `X₂X₁` coefficient, that of
/// a conjugate of `x₂` its `X₁X₂` coefficient.
fn q00_coordinate(e: &FreeNilpQuandleElt) -> i64 {
    let w = if e.gen == 0 { [1, 0] } else { [0, 1] };
    e.element_poly.coeff(&w).to_i64().expect("small coefficient")
}

/// Enumerates the conjugates `w xᵢ w⁻¹` in `F_{2,2}` for `w` of length at
/// most `depth`, and checks that in each orbit they correspond one to one
/// with the integers `−depth..=depth`, and that `a ▷ b` adds one to the
/// coordinate of `b` when `a` and `b` lie in different orbits and fixes it
/// otherwise.
pub fn free_2nilp_check(depth: usize) -> Q00Check {
    let words = ball(2, depth);
    let mut holds = true;
    let mut orbits: [BTreeMap<i64, FreeNilpQuandleElt>; 2] = [BTreeMap::new(), BTreeMap::new()];
    for (i, orbit) in orbits.iter_mut().enumerate() {
        let mut distinct: Vec<FreeNilpQuandleElt> = Vec::new();
        for w in &words {
            let e = quandle_elt(w, i, 2, 2).expect("within limits");
            if !distinct.contains(&e) {
                distinct.push(e);
            }
        }
        for e in distinct {
            let k = q00_coordinate(&e);
            if orbit.insert(k, e).is_some() {
                holds = false;
            }
        }
        let expected: Vec<i64> = (-(depth as i64)..=depth as i64).collect();
        if orbit.keys().copied().collect::<Vec<_>>() != expected {
            holds = false;
        }
    }
    for oa in &orbits {
        for a in oa.values() {
            for ob in &orbits {
                for (&kb, b) in ob {
                    let r = qd(a, b).expect("same shape");
                    let shift = i64::from(a.gen != b.gen);
                    if r.gen != b.gen || q00_coordinate(&r) != kb + shift {
                        holds = false;
                    }
                    if let Some(e) = orbits[b.gen].get(&(kb + shift)) {
                        holds &= *e == r;
                    }
                }
            }
        }
    }
    Q00Check {
        coordinates: [
            orbits[0].keys().copied().collect(),
            orbits[1].keys().copied().collect(),
        ],
        holds,
    }
}

pub fn check_free_2nilp_is_q00(depth: usize) -> bool {
    free_2nilp_check(depth).holds
}

impl FreeNilpQuandleElt {
    /// `true` when the degree-one part of the element is the single letter
    /// of its generator.
    pub fn has_generator_leading_term(&self) -> bool {
        let lin = self.element_poly.poly().homogeneous(1);
        lin == Tensor::letter(self.element_poly.n(), self.gen) || self.element_poly.c() == 0
    }
}

impl fmt::Display for FreeNilpQuandleElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}
