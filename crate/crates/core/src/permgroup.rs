//! Finite permutation groups given by generators.
//!
//! Groups are closed by breadth-first search over generator products, which
//! is adequate for the groups met at desk scale (orders up to about 10⁶).
//! There is no Schreier–Sims machinery. Subgroups are generator lists with a
//! lazily filled element cache.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};

/// Default bound on the order of any group that gets enumerated.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// A bijection of `0..d`. Products follow function composition:
/// `(a * b)(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = alloc::vec![false; d];
        for &x in &images {
            if x >= d || seen[x] {
                return Err(Error::NotAPermutation { degree: d });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// The transposition of `a` and `b` on `0..degree`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut p = Permutation::identity(degree);
        p.images.swap(a, b);
        p
    }

    /// The cycle `c[0] → c[1] → … → c[0]` on `0..degree`.
    pub fn cycle(degree: usize, c: &[usize]) -> Self {
        let mut p = Permutation::identity(degree);
        for (k, &x) in c.iter().enumerate() {
            p.images[x] = c[(k + 1) % c.len()];
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ p ∘ self⁻¹`.
    pub fn conjugate(&self, p: &Permutation) -> Permutation {
        self.compose(p).compose(&self.inverse())
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b).compose(&a.inverse()).compose(&b.inverse())
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.images[x];
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// A subgroup of `Sym(0..degree)` given by generators.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: OnceBox<BTreeSet<Permutation>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            elements: OnceBox::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: OnceBox::new(),
        }
    }

    /// The full symmetric group on `0..degree`.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::transposition(degree, 0, 1));
            let c: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::cycle(degree, &c));
        }
        PermGroup {
            degree,
            generators: gens,
            elements: OnceBox::new(),
        }
    }

    fn with_elements(
        degree: usize,
        generators: Vec<Permutation>,
        elements: BTreeSet<Permutation>,
    ) -> Self {
        let cache = OnceBox::new();
        let _ = cache.set(alloc::boxed::Box::new(elements));
        PermGroup {
            degree,
            generators,
            elements: cache,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, closing over generator products. Fails once more than
    /// `cap` elements have been found.
    pub fn enumerate(&self, cap: usize) -> Result<&BTreeSet<Permutation>> {
        if let Some(e) = self.elements.get() {
            if e.len() > cap {
                return Err(Error::OrderCapExceeded { cap });
            }
            return Ok(e);
        }
        let mut set = BTreeSet::new();
        set.insert(Permutation::identity(self.degree));
        extend_closure(&mut set, &[], &self.generators, cap)?;
        Ok(self.elements.get_or_init(|| alloc::boxed::Box::new(set)))
    }

    pub fn elements(&self) -> Result<&BTreeSet<Permutation>> {
        self.enumerate(DEFAULT_ORDER_CAP)
    }

    pub fn order(&self, cap: usize) -> Result<usize> {
        Ok(self.enumerate(cap)?.len())
    }

    pub fn contains(&self, p: &Permutation, cap: usize) -> Result<bool> {
        if p.degree() != self.degree {
            return Ok(false);
        }
        Ok(self.enumerate(cap)?.contains(p))
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].compose(&g[j]) == g[j].compose(&g[i])))
    }

    /// Mutual containment of generators.
    pub fn same_subgroup(&self, other: &PermGroup, cap: usize) -> Result<bool> {
        Ok(is_subgroup(self, other, cap)? && is_subgroup(other, self, cap)?)
    }

    /// Whether every generator of `g` conjugates `self` into itself.
    pub fn is_normalized_by(&self, g: &PermGroup, cap: usize) -> Result<bool> {
        let elems = self.enumerate(cap)?;
        for s in &g.generators {
            for h in &self.generators {
                if !elems.contains(&s.conjugate(h)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Orbit of `x` under the group.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.degree];
        let mut out = alloc::vec![x];
        seen[x] = true;
        let mut k = 0;
        while k < out.len() {
            let y = out[k];
            k += 1;
            for g in &self.generators {
                let z = g.apply(y);
                if !seen[z] {
                    seen[z] = true;
                    out.push(z);
                }
            }
        }
        out
    }

    /// `[G, H]`, the normal closure in `⟨G ∪ H⟩` of the commutators of generators.
    pub fn commutator_subgroup(g: &PermGroup, h: &PermGroup, cap: usize) -> Result<PermGroup> {
        if g.degree != h.degree {
            return Err(Error::DegreeMismatch {
                left: g.degree,
                right: h.degree,
            });
        }
        let mut comms = Vec::new();
        for a in &g.generators {
            for b in &h.generators {
                let c = Permutation::commutator(a, b);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        let mut ambient = g.generators.clone();
        ambient.extend(h.generators.iter().cloned());
        normal_closure_of(g.degree, comms, &ambient, cap)
    }

    /// `Γ₁ = G`, `Γ_{i+1} = [G, Γ_i]`, up to the first trivial or repeated term.
    pub fn lower_central_series(&self, cap: usize) -> Result<Vec<PermGroup>> {
        let mut series = alloc::vec![self.clone()];
        let mut order = self.order(cap)?;
        while order > 1 {
            let next = PermGroup::commutator_subgroup(self, series.last().unwrap(), cap)?;
            let next_order = next.order(cap)?;
            if next_order == order {
                break;
            }
            order = next_order;
            series.push(next);
        }
        Ok(series)
    }

    /// Least `c` with `Γ_{c+1}` trivial, `None` if the series stalls.
    pub fn nilpotency_class(&self, cap: usize) -> Result<Option<usize>> {
        let series = self.lower_central_series(cap)?;
        if series.last().unwrap().order(cap)? == 1 {
            Ok(Some(series.len() - 1))
        } else {
            Ok(None)
        }
    }

    pub fn center(&self, cap: usize) -> Result<PermGroup> {
        let elems = self.enumerate(cap)?;
        let central: Vec<Permutation> = elems
            .iter()
            .filter(|z| {
                self.generators
                    .iter()
                    .all(|g| g.compose(z) == z.compose(g))
            })
            .cloned()
            .collect();
        Ok(from_elements(self.degree, central))
    }
}

/// Whether every generator of `h` lies in `g`.
pub fn is_subgroup(h: &PermGroup, g: &PermGroup, cap: usize) -> Result<bool> {
    if h.degree != g.degree {
        return Ok(false);
    }
    let elems = g.enumerate(cap)?;
    Ok(h.generators.iter().all(|x| elems.contains(x)))
}

/// Smallest subgroup containing `s` and normalized by `g`.
pub fn normal_closure(s: &[Permutation], g: &PermGroup, cap: usize) -> Result<PermGroup> {
    for p in s {
        if p.degree() != g.degree {
            return Err(Error::DegreeMismatch {
                left: g.degree,
                right: p.degree(),
            });
        }
    }
    normal_closure_of(g.degree, s.to_vec(), &g.generators, cap)
}

fn normal_closure_of(
    degree: usize,
    seeds: Vec<Permutation>,
    ambient: &[Permutation],
    cap: usize,
) -> Result<PermGroup> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut set = BTreeSet::new();
    set.insert(Permutation::identity(degree));
    let mut pending: Vec<Permutation> = seeds;
    while let Some(p) = pending.pop() {
        if set.contains(&p) {
            continue;
        }
        let old = gens.len();
        gens.push(p);
        extend_closure(&mut set, &gens[..old], &gens[old..], cap)?;
        let new_gen = &gens[old];
        for s in ambient {
            let c = s.conjugate(new_gen);
            if !set.contains(&c) {
                pending.push(c);
            }
        }
        // Conjugates of earlier generators were queued when they were added.
    }
    Ok(PermGroup::with_elements(degree, gens, set))
}

/// Grows `set`, already closed under `old_gens`, to the group generated by
/// `old_gens ∪ new_gens`.
fn extend_closure(
    set: &mut BTreeSet<Permutation>,
    old_gens: &[Permutation],
    new_gens: &[Permutation],
    cap: usize,
) -> Result<()> {
    let all: Vec<&Permutation> = old_gens.iter().chain(new_gens.iter()).collect();
    let mut queue: Vec<Permutation> = set.iter().cloned().collect();
    // Existing elements only need the new generators; fresh ones need all.
    let fresh_from = queue.len();
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k].clone();
        let gens: &[&Permutation] = if k < fresh_from {
            &all[old_gens.len()..]
        } else {
            &all
        };
        for g in gens {
            let y = x.compose(g);
            if !set.contains(&y) {
                if set.len() >= cap {
                    return Err(Error::OrderCapExceeded { cap });
                }
                set.insert(y.clone());
                queue.push(y);
            }
        }
        k += 1;
    }
    Ok(())
}

/// The group generated by `elems`, keeping a generator only when it enlarges
/// the group built so far.
pub(crate) fn from_elements(degree: usize, elems: Vec<Permutation>) -> PermGroup {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut set = BTreeSet::new();
    set.insert(Permutation::identity(degree));
    for p in elems {
        if set.contains(&p) {
            continue;
        }
        let old = gens.len();
        gens.push(p);
        extend_closure(&mut set, &gens[..old], &gens[old..], usize::MAX)
            .expect("closure of a subset of a finite group");
    }
    PermGroup::with_elements(degree, gens, set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::symmetric(3)
    }

    #[test]
    fn transposition_generates_order_two() {
        let g = PermGroup::new(2, alloc::vec![Permutation::transposition(2, 0, 1)]).unwrap();
        assert_eq!(g.order(10).unwrap(), 2);
    }

    #[test]
    fn klein_group_from_two_shifts() {
        let a = Permutation::new(alloc::vec![1, 0, 2, 3]).unwrap();
        let b = Permutation::new(alloc::vec![0, 1, 3, 2]).unwrap();
        let g = PermGroup::new(4, alloc::vec![a, b]).unwrap();
        assert_eq!(g.order(100).unwrap(), 4);
        assert_eq!(g.nilpotency_class(100).unwrap(), Some(1));
        let c = PermGroup::commutator_subgroup(&g, &g, 100).unwrap();
        assert_eq!(c.order(100).unwrap(), 1);
    }

    #[test]
    fn symmetric_group_series() {
        let g = s3();
        assert_eq!(g.order(100).unwrap(), 6);
        let d = PermGroup::commutator_subgroup(&g, &g, 100).unwrap();
        assert_eq!(d.order(100).unwrap(), 3);
        let series = g.lower_central_series(100).unwrap();
        assert_eq!(series.len(), 2);
        assert_eq!(g.nilpotency_class(100).unwrap(), None);
        assert_eq!(g.center(100).unwrap().order(100).unwrap(), 1);
        let nc = normal_closure(&[Permutation::transposition(3, 0, 1)], &g, 100).unwrap();
        assert_eq!(nc.order(100).unwrap(), 6);
    }

    #[test]
    fn trivial_group_has_class_zero() {
        assert_eq!(PermGroup::trivial(3).nilpotency_class(10).unwrap(), Some(0));
        let g = s3();
        let t = PermGroup::commutator_subgroup(&g, &PermGroup::trivial(3), 100).unwrap();
        assert_eq!(t.order(100).unwrap(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            PermGroup::symmetric(5).order(100),
            Err(Error::OrderCapExceeded { cap: 100 })
        );
        assert_eq!(PermGroup::symmetric(5).order(120).unwrap(), 120);
    }

    #[test]
    fn center_of_abelian_is_whole() {
        let c = Permutation::cycle(4, &[0, 1, 2, 3]);
        let g = PermGroup::new(4, alloc::vec![c]).unwrap();
        assert!(g.center(10).unwrap().same_subgroup(&g, 10).unwrap());
    }

    #[test]
    fn dihedral_group_of_order_eight_has_class_two() {
        let r = Permutation::cycle(4, &[0, 1, 2, 3]);
        let s = Permutation::new(alloc::vec![0, 3, 2, 1]).unwrap();
        let g = PermGroup::new(4, alloc::vec![r, s]).unwrap();
        assert_eq!(g.order(100).unwrap(), 8);
        assert_eq!(g.nilpotency_class(100).unwrap(), Some(2));
        assert_eq!(g.center(100).unwrap().order(100).unwrap(), 2);
    }

    #[test]
    fn display_uses_cycles() {
        let p = Permutation::cycle(4, &[1, 3, 2]);
        assert_eq!(alloc::format!("{p}"), "(1 3 2)");
        assert_eq!(alloc::format!("{}", Permutation::identity(2)), "()");
    }
}
