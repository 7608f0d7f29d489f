//! Words in a free group on generators `x₁, x₂, …`.
//!
//! Generators are stored 0-based; the text form is 1-based, as in
//! `"x1 x2^-1 x1"`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    /// 0-based generator index.
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// The word `x_{gen+1}`.
    pub fn gen(gen: usize) -> Self {
        Word {
            letters: alloc::vec![Letter::new(gen, false)],
        }
    }

    /// Freely reduces the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// From `(generator, exponent)` pairs with 0-based generators.
    pub fn from_powers(powers: &[(usize, i64)]) -> Self {
        Word::from_letters(powers.iter().flat_map(|&(g, e)| {
            core::iter::repeat_n(Letter::new(g, e < 0), e.unsigned_abs() as usize)
        }))
    }

    fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inv()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self · other`, reduced.
    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// `[w₁, [w₂, …, [w_{k−1}, w_k]…]]`; a single word is returned as is.
    pub fn right_nested_commutator(ws: &[Word]) -> Word {
        let mut it = ws.iter().rev();
        let mut acc = it.next().cloned().unwrap_or_default();
        for w in it {
            acc = Word::commutator(w, &acc);
        }
        acc
    }

    /// `a w a⁻¹`.
    pub fn conjugate_by(&self, a: &Word) -> Word {
        a.mul(self).mul(&a.inverse())
    }

    /// Replaces each generator `x_g` by `images[g]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut w = Word::empty();
        for &l in &self.letters {
            let img = &images[l.gen];
            if l.inverse {
                for &m in img.letters.iter().rev() {
                    w.push(m.inv());
                }
            } else {
                for &m in &img.letters {
                    w.push(m);
                }
            }
        }
        w
    }

    /// Exponent sum of each generator, over `n` generators.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut out = alloc::vec![0; n];
        for l in &self.letters {
            out[l.gen] += if l.inverse { -1 } else { 1 };
        }
        out
    }

    /// Largest generator index used, plus one.
    pub fn rank_needed(&self) -> usize {
        self.letters.iter().map(|l| l.gen + 1).max().unwrap_or(0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l.gen + 1)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Parses whitespace-separated tokens `xK`, `xK^-1` or `xK^e` (any integer
/// `e`); `1` alone denotes the empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let bad = |t: &str| Error::InvalidParameters(alloc::format!("bad word token {t:?}"));
        let mut powers = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let body = tok.strip_prefix('x').ok_or_else(|| bad(tok))?;
            let (gen, exp) = match body.split_once('^') {
                Some((g, e)) => (g, e.parse::<i64>().map_err(|_| bad(tok))?),
                None => (body, 1),
            };
            let gen: usize = gen.parse().map_err(|_| bad(tok))?;
            if gen == 0 {
                return Err(bad(tok));
            }
            powers.push((gen - 1, exp));
        }
        Ok(Word::from_powers(&powers))
    }
}

/// Text form of a list of words, one per line.
pub fn format_words(ws: &[Word]) -> String {
    let mut s = String::new();
    for w in ws {
        s.push_str(&alloc::format!("{w}\n"));
    }
    s
}
