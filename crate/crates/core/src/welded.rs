//! Welded braids as basis-conjugating automorphisms of free groups, and
//! their action on colourings.
//!
//! An automorphism sends `xᵢ ↦ wᵢ x_{σ(i)} wᵢ⁻¹`. A tuple `(q₁, …, q_n)` of
//! elements of a quandle is a colouring, that is a morphism out of the free
//! quandle, and a braid `β` acts by precomposition:
//! `β · (q₁, …, q_n) = (wᵢ(q) · q_{σ(i)})ᵢ`, where a word acts through the
//! rows of its letters. This is a right action: `(a∘b)·q = b·(a·q)`.
//!
//! The pure welded braid group is generated by the `K_ij` (`xᵢ ↦ x_j xᵢ x_j⁻¹`).
//! A quandle is `c`-nilpotent exactly when `Γ_c` of that group acts trivially
//! on colourings by `n > c` elements.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::rack::FiniteRack;
use crate::words::{Letter, Word};

/// A named generator of the welded braid group, with 0-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BraidGen {
    /// `xᵢ ↦ x_j xᵢ x_j⁻¹`.
    K(usize, usize),
    /// Exchanges `xᵢ` and `x_{i+1}`.
    Tau(usize),
    /// `xᵢ ↦ xᵢ x_{i+1} xᵢ⁻¹`, `x_{i+1} ↦ xᵢ`.
    Sigma(usize),
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidLetter {
    pub gen: BraidGen,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn new(gen: BraidGen, inverse: bool) -> Self {
        BraidLetter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        BraidLetter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gen {
            BraidGen::K(i, j) if i < 9 && j < 9 => write!(f, "K{}{}", i + 1, j + 1)?,
            BraidGen::K(i, j) => write!(f, "K{},{}", i + 1, j + 1)?,
            BraidGen::Tau(i) => write!(f, "t{}", i + 1)?,
            BraidGen::Sigma(i) => write!(f, "s{}", i + 1)?,
        }
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

impl FromStr for BraidLetter {
    type Err = Error;

    /// `K12`, `K1,12`, `t1`, `s2`, each optionally followed by `^-1`.
    fn from_str(tok: &str) -> Result<Self> {
        let bad = || Error::InvalidParameters(alloc::format!("bad braid token {tok:?}"));
        let (body, inverse) = match tok.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (tok.strip_suffix("^1").unwrap_or(tok), false),
        };
        let index = |s: &str| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(bad()),
            }
        };
        let gen = if let Some(rest) = body.strip_prefix('K') {
            let (i, j) = match rest.split_once(',') {
                Some((i, j)) => (index(i)?, index(j)?),
                None if rest.len() == 2 && rest.is_ascii() => (index(&rest[..1])?, index(&rest[1..])?),
                None => return Err(bad()),
            };
            if i == j {
                return Err(bad());
            }
            BraidGen::K(i, j)
        } else if let Some(rest) = body.strip_prefix('t') {
            BraidGen::Tau(index(rest)?)
        } else if let Some(rest) = body.strip_prefix('s') {
            BraidGen::Sigma(index(rest)?)
        } else {
            return Err(bad());
        };
        Ok(BraidLetter { gen, inverse })
    }
}

/// The endomorphism `xᵢ ↦ wᵢ x_{σ(i)} wᵢ⁻¹` of the free group of rank `n`.
///
/// Values built from the named generators remember a generator word, which
/// is what [`BasisConjAuto::invert`] uses.
#[derive(Debug, Clone)]
pub struct BasisConjAuto {
    n: usize,
    sigma: Vec<usize>,
    ws: Vec<Word>,
    history: Option<Vec<BraidLetter>>,
}

impl PartialEq for BasisConjAuto {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.sigma == other.sigma && self.ws == other.ws
    }
}

impl Eq for BasisConjAuto {}

impl BasisConjAuto {
    pub fn identity(n: usize) -> Self {
        BasisConjAuto {
            n,
            sigma: (0..n).collect(),
            ws: alloc::vec![Word::empty(); n],
            history: Some(Vec::new()),
        }
    }

    /// Raw data, checked to define an endomorphism permuting the generators
    /// up to conjugacy.
    pub fn from_data(n: usize, sigma: Vec<usize>, ws: Vec<Word>) -> Result<Self> {
        if sigma.len() != n || ws.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: sigma.len().min(ws.len()),
            });
        }
        let images = ws
            .iter()
            .zip(&sigma)
            .map(|(w, &s)| {
                if s >= n {
                    Err(Error::GeneratorOutOfRange { gen: s + 1, n })
                } else {
                    Ok(Word::gen(s).conjugate_by(w))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(n, images)
    }

    /// Reads each image as a conjugate `w x_j w⁻¹` of a generator.
    pub fn from_images(n: usize, images: Vec<Word>) -> Result<Self> {
        if images.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: images.len(),
            });
        }
        let mut sigma = Vec::with_capacity(n);
        let mut ws = Vec::with_capacity(n);
        for u in &images {
            if let Some(l) = u.letters().iter().find(|l| l.gen >= n) {
                return Err(Error::GeneratorOutOfRange { gen: l.gen + 1, n });
            }
            let (w, j) = split_conjugate(u).ok_or_else(|| {
                Error::InvalidParameters(alloc::format!("{u} is not a conjugate of a generator"))
            })?;
            sigma.push(j);
            ws.push(w);
        }
        let mut seen = alloc::vec![false; n];
        for &s in &sigma {
            if core::mem::replace(&mut seen[s], true) {
                return Err(Error::NotAPermutation { degree: n });
            }
        }
        Ok(BasisConjAuto {
            n,
            sigma,
            ws,
            history: None,
        })
    }

    /// A named generator or its inverse.
    pub fn generator(n: usize, l: BraidLetter) -> Result<Self> {
        let check = |i: usize| {
            if i < n {
                Ok(())
            } else {
                Err(Error::GeneratorOutOfRange { gen: i + 1, n })
            }
        };
        let mut a = Self::identity(n);
        let x = Word::gen;
        match (l.gen, l.inverse) {
            (BraidGen::K(i, j), inv) => {
                check(i)?;
                check(j)?;
                if i == j {
                    return Err(Error::InvalidParameters("K needs two distinct indices".into()));
                }
                a.ws[i] = if inv { x(j).inverse() } else { x(j) };
            }
            (BraidGen::Tau(i), _) => {
                check(i + 1)?;
                a.sigma.swap(i, i + 1);
            }
            (BraidGen::Sigma(i), false) => {
                check(i + 1)?;
                a.sigma.swap(i, i + 1);
                a.ws[i] = x(i);
            }
            (BraidGen::Sigma(i), true) => {
                check(i + 1)?;
                a.sigma.swap(i, i + 1);
                a.ws[i + 1] = x(i + 1).inverse();
            }
        }
        a.history = Some(alloc::vec![l]);
        Ok(a)
    }

    /// `K_ij` with 0-based indices.
    pub fn k(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::generator(n, BraidLetter::new(BraidGen::K(i, j), false))
    }

    pub fn tau(n: usize, i: usize) -> Result<Self> {
        Self::generator(n, BraidLetter::new(BraidGen::Tau(i), false))
    }

    pub fn sigma_gen(n: usize, i: usize) -> Result<Self> {
        Self::generator(n, BraidLetter::new(BraidGen::Sigma(i), false))
    }

    /// All named generators `K_ij`, `τᵢ`, `σᵢ` on `n` strands.
    pub fn generators(n: usize) -> Vec<(BraidLetter, BasisConjAuto)> {
        let mut gens = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    gens.push(BraidGen::K(i, j));
                }
            }
        }
        for i in 0..n.saturating_sub(1) {
            gens.push(BraidGen::Tau(i));
            gens.push(BraidGen::Sigma(i));
        }
        gens.into_iter()
            .map(|g| {
                let l = BraidLetter::new(g, false);
                (l, Self::generator(n, l).expect("indices in range"))
            })
            .collect()
    }

    /// Product of generators, read left to right as a composite `g₁ ∘ g₂ ∘ ⋯`.
    pub fn from_letters(n: usize, letters: &[BraidLetter]) -> Result<Self> {
        let mut a = Self::identity(n);
        for &l in letters {
            a = a.compose(&Self::generator(n, l)?)?;
        }
        Ok(a)
    }

    /// Parses whitespace-separated generator tokens; `1` or an empty string
    /// is the identity.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .filter(|t| *t != "1")
            .map(str::parse)
            .collect::<Result<Vec<BraidLetter>>>()?;
        Self::from_letters(n, &letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn ws(&self) -> &[Word] {
        &self.ws
    }

    /// The generator word this value was built from, if any.
    pub fn history(&self) -> Option<&[BraidLetter]> {
        self.history.as_deref()
    }

    /// Image of `xᵢ`.
    pub fn image(&self, i: usize) -> Word {
        Word::gen(self.sigma[i]).conjugate_by(&self.ws[i])
    }

    pub fn images(&self) -> Vec<Word> {
        (0..self.n).map(|i| self.image(i)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &BasisConjAuto) -> Result<BasisConjAuto> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mine = self.images();
        let images = other.images().iter().map(|u| u.substitute(&mine)).collect();
        let mut out = Self::from_images(self.n, images)?;
        out.history = match (&self.history, &other.history) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Ok(out)
    }

    /// Inverse, available for values built from named generators.
    pub fn invert(&self) -> Result<BasisConjAuto> {
        let h = self.history.as_ref().ok_or(Error::NotInvertibleRepresentation)?;
        let letters: Vec<BraidLetter> = h.iter().rev().map(|l| l.inv()).collect();
        Self::from_letters(self.n, &letters)
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &BasisConjAuto, b: &BasisConjAuto) -> Result<BasisConjAuto> {
        a.compose(b)?.compose(&a.invert()?)?.compose(&b.invert()?)
    }

    /// `β · (q₁, …, q_n)`.
    pub fn act(&self, q: &FiniteRack, tuple: &[usize]) -> Result<Vec<usize>> {
        if tuple.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: tuple.len(),
            });
        }
        if let Some(&v) = tuple.iter().find(|&&v| v >= q.len()) {
            return Err(Error::InvalidParameters(alloc::format!(
                "colour {v} out of range for a rack of size {}",
                q.len()
            )));
        }
        Ok((0..self.n)
            .map(|i| eval_word(q, tuple, &self.ws[i], tuple[self.sigma[i]]))
            .collect())
    }
}

impl fmt::Display for BasisConjAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "x{} -> {}", i + 1, self.image(i))?;
        }
        Ok(())
    }
}

/// Splits a reduced word `w x_j w⁻¹` into `(w, j)`.
fn split_conjugate(u: &Word) -> Option<(Word, usize)> {
    let ls = u.letters();
    if ls.len().is_multiple_of(2) {
        return None;
    }
    let m = ls.len() / 2;
    let mid = ls[m];
    if mid.inverse {
        return None;
    }
    for t in 0..m {
        if ls[m + 1 + t] != ls[m - 1 - t].inv() {
            return None;
        }
    }
    Some((Word::from_letters(ls[..m].iter().copied()), mid.gen))
}

/// `w(q) · p`, each letter `x_j^{±1}` acting as `q_j ▷ −` or its inverse,
/// the rightmost letter first.
fn eval_word(q: &FiniteRack, tuple: &[usize], w: &Word, p: usize) -> usize {
    w.letters().iter().rev().fold(p, |p, l: &Letter| {
        if l.inverse {
            q.left_div(tuple[l.gen], p)
        } else {
            q.op(tuple[l.gen], p)
        }
    })
}

/// A rack together with a colouring of `n` strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    pub quandle: FiniteRack,
    pub tuple: Vec<usize>,
}

impl Colouring {
    pub fn new(quandle: FiniteRack, tuple: Vec<usize>) -> Result<Self> {
        if let Some(&v) = tuple.iter().find(|&&v| v >= quandle.len()) {
            return Err(Error::InvalidParameters(alloc::format!("colour {v} out of range")));
        }
        Ok(Colouring { quandle, tuple })
    }

    pub fn act(&self, beta: &BasisConjAuto) -> Result<Colouring> {
        Ok(Colouring {
            tuple: beta.act(&self.quandle, &self.tuple)?,
            quandle: self.quandle.clone(),
        })
    }
}

/// How [`gamma_c_acts_trivially`] chooses what to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every commutator pattern on every tuple.
    Exhaustive,
    /// Random patterns on random tuples.
    Sample,
}

/// A braid moving a colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionWitness {
    /// Generators `g₁, …, g_c` of the commutator `[g₁, [g₂, …, g_c]…]`.
    pub pattern: Vec<BraidLetter>,
    pub braid: BasisConjAuto,
    pub tuple: Vec<usize>,
    pub image: Vec<usize>,
}

/// Result of [`gamma_c_acts_trivially`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaReport {
    pub trivial: bool,
    pub witness: Option<ActionWitness>,
    pub patterns_checked: usize,
    pub tuples_checked: u64,
}

fn pure_generators(n: usize) -> Vec<BraidLetter> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(BraidLetter::new(BraidGen::K(i, j), false));
            }
        }
    }
    out
}

fn nested_braid(n: usize, pattern: &[BraidLetter]) -> Result<BasisConjAuto> {
    let (last, rest) = pattern.split_last().expect("nonempty pattern");
    let mut acc = BasisConjAuto::generator(n, *last)?;
    for &l in rest.iter().rev() {
        acc = BasisConjAuto::commutator(&BasisConjAuto::generator(n, l)?, &acc)?;
    }
    Ok(acc)
}

fn decode(mut idx: u64, base: usize, n: usize) -> Vec<usize> {
    let mut t = alloc::vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = (idx % base as u64) as usize;
        idx /= base as u64;
    }
    t
}

fn encode(t: &[usize], base: usize) -> u64 {
    t.iter().fold(0, |acc, &v| acc * base as u64 + v as u64)
}

/// Permutations of the colourings by a braid, in the composition order of
/// braids: `compose(p, q)` acts as `p` then `q`.
struct TupleAction {
    base: usize,
    n: usize,
}

impl TupleAction {
    fn of(&self, q: &FiniteRack, beta: &BasisConjAuto) -> Vec<u32> {
        let total = (self.base as u64).pow(self.n as u32);
        (0..total)
            .map(|k| {
                let t = decode(k, self.base, self.n);
                encode(&beta.act(q, &t).expect("valid tuple"), self.base) as u32
            })
            .collect()
    }

    /// Action of `a ∘ b`: first `a`, then `b`.
    fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().map(|&x| b[x as usize]).collect()
    }

    fn inverse(a: &[u32]) -> Vec<u32> {
        let mut out = alloc::vec![0; a.len()];
        for (x, &y) in a.iter().enumerate() {
            out[y as usize] = x as u32;
        }
        out
    }

    fn commutator(a: &[u32], b: &[u32]) -> Vec<u32> {
        let ab = Self::compose(a, b);
        let abai = Self::compose(&ab, &Self::inverse(a));
        Self::compose(&abai, &Self::inverse(b))
    }
}

/// Checks whether the commutators `[K₁, [K₂, …, K_c]…]` of the generators
/// `K_ij` act trivially on `Qⁿ`.
///
/// The kernel of the action is normal and `Γ_c` is the normal closure of
/// these commutators, so in exhaustive mode a `true` answer covers all of
/// `Γ_c`. There `budget` bounds both `|Q|ⁿ` and the number of patterns. In
/// sample mode, `budget` random pairs of a pattern over `K_ij^{±1}` and a
/// tuple are drawn from `rng`.
pub fn gamma_c_acts_trivially<R: RngCore + ?Sized>(
    q: &FiniteRack,
    n: usize,
    c: usize,
    mode: Mode,
    budget: u64,
    rng: &mut R,
) -> Result<GammaReport> {
    if c == 0 {
        return Err(Error::InvalidParameters("commutator weight must be positive".into()));
    }
    let gens = pure_generators(n);
    let mut report = GammaReport {
        trivial: true,
        witness: None,
        patterns_checked: 0,
        tuples_checked: 0,
    };
    if gens.is_empty() || q.is_empty() {
        return Ok(report);
    }
    match mode {
        Mode::Exhaustive => {
            let total = (q.len() as u64).checked_pow(n as u32);
            let patterns = (gens.len() as u64).checked_pow(c as u32);
            match (total, patterns) {
                (Some(t), Some(p)) if t <= budget && p <= budget && t <= u32::MAX as u64 => {}
                _ => return Err(Error::BudgetExceeded { budget }),
            }
            let ta = TupleAction { base: q.len(), n };
            let actions: Vec<Vec<u32>> = gens
                .iter()
                .map(|&l| ta.of(q, &BasisConjAuto::generator(n, l).expect("valid generator")))
                .collect();
            let mut pattern = alloc::vec![0usize; c];
            if let Some(p) = search(&actions, &mut pattern, c, None, &mut report) {
                let letters: Vec<BraidLetter> = p.iter().map(|&k| gens[k]).collect();
                report.witness = Some(witness_for(q, n, letters)?);
                report.trivial = false;
            }
        }
        Mode::Sample => {
            let pick = |rng: &mut R, m: usize| (rng.next_u64() % m as u64) as usize;
            for _ in 0..budget {
                let letters: Vec<BraidLetter> = (0..c)
                    .map(|_| {
                        let g = gens[pick(rng, gens.len())];
                        if rng.next_u32() & 1 == 1 { g.inv() } else { g }
                    })
                    .collect();
                let tuple: Vec<usize> = (0..n).map(|_| pick(rng, q.len())).collect();
                let braid = nested_braid(n, &letters)?;
                let image = braid.act(q, &tuple)?;
                report.patterns_checked += 1;
                report.tuples_checked += 1;
                if image != tuple {
                    report.trivial = false;
                    report.witness = Some(ActionWitness {
                        pattern: letters,
                        braid,
                        tuple,
                        image,
                    });
                    break;
                }
            }
        }
    }
    Ok(report)
}

/// Depth-first over patterns, building `[g_k, inner]` from the right. Returns
/// the first pattern whose commutator moves some tuple.
fn search(
    actions: &[Vec<u32>],
    pattern: &mut [usize],
    pos: usize,
    inner: Option<&[u32]>,
    report: &mut GammaReport,
) -> Option<Vec<usize>> {
    let k = pos - 1;
    for (g, act) in actions.iter().enumerate() {
        pattern[k] = g;
        let cur = match inner {
            None => act.clone(),
            Some(inner) => TupleAction::commutator(act, inner),
        };
        if k == 0 {
            report.patterns_checked += 1;
            report.tuples_checked += cur.len() as u64;
            if cur.iter().enumerate().any(|(x, &y)| x as u32 != y) {
                return Some(pattern.to_vec());
            }
        } else if let Some(p) = search(actions, pattern, k, Some(&cur), report) {
            return Some(p);
        }
    }
    None
}

fn witness_for(q: &FiniteRack, n: usize, pattern: Vec<BraidLetter>) -> Result<ActionWitness> {
    let braid = nested_braid(n, &pattern)?;
    let total = (q.len() as u64).pow(n as u32);
    for k in 0..total {
        let tuple = decode(k, q.len(), n);
        let image = braid.act(q, &tuple)?;
        if image != tuple {
            return Ok(ActionWitness {
                pattern,
                braid,
                tuple,
                image,
            });
        }
    }
    unreachable!("the tuple action and the word action agree")
}

/// The automorphism fixing every `xᵢ` except `x_{c+1} ↦ w x_{c+1} w⁻¹`, with
/// `w = [x₁, [x₂, …, [x_{c−1}, x_c]…]]`. It lies in `Γ_c` of the pure welded
/// braid group, and acts trivially on `Qⁿ` exactly when `Q` is
/// `c`-reductive.
pub fn reductivity_braid(n: usize, c: usize) -> Result<BasisConjAuto> {
    if c == 0 || n < c + 1 {
        return Err(Error::InvalidParameters(alloc::format!(
            "need 1 <= c < n, got n = {n}, c = {c}"
        )));
    }
    let xs: Vec<Word> = (0..c).map(Word::gen).collect();
    let mut ws = alloc::vec![Word::empty(); n];
    ws[c] = Word::right_nested_commutator(&xs);
    BasisConjAuto::from_data(n, (0..n).collect(), ws)
}

/// The first tuple moved by `beta`, scanning all of `Qⁿ`.
pub fn moved_tuple(beta: &BasisConjAuto, q: &FiniteRack, budget: u64) -> Result<Option<Vec<usize>>> {
    let n = beta.n();
    let total = (q.len() as u64).checked_pow(n as u32).filter(|&t| t <= budget);
    let total = total.ok_or(Error::BudgetExceeded { budget })?;
    for k in 0..total {
        let t = decode(k, q.len(), n);
        if beta.act(q, &t)? != t {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Text form of a generator word, e.g. `K12 s1^-1`.
pub fn format_letters(ls: &[BraidLetter]) -> String {
    let parts: Vec<String> = ls.iter().map(|l| alloc::format!("{l}")).collect();
    parts.join(" ")
}
