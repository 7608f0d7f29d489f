//! Finite racks and quandles as dense operation tables.
//!
//! Elements are the indices `0..n` and `x ▷ y` is `table[x][y]`. Racks are
//! first-class: operations that only make sense for quandles check the
//! idempotence flag and return [`Error::RequiresQuandle`] otherwise.

use alloc::vec::Vec;

use crate::cayley::CayleyGroup;
use crate::error::{Axiom, Error, Result};
use crate::permgroup::{PermGroup, Permutation};
use crate::union_find::UnionFind;

/// A validated rack on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteRack {
    n: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    is_quandle: bool,
}

impl FiniteRack {
    /// Checks shape, range, bijectivity of rows and self-distributivity, and
    /// idempotence when `require_quandle` is set.
    pub fn validate(table: Vec<Vec<usize>>, require_quandle: bool) -> Result<Self> {
        let n = table.len();
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(Error::TableShape {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value, n });
                }
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        Self::from_flat(n, flat, require_quandle)
    }

    fn from_flat(n: usize, table: Vec<usize>, require_quandle: bool) -> Result<Self> {
        let mut inverse = alloc::vec![usize::MAX; n * n];
        for x in 0..n {
            for y in 0..n {
                let z = table[x * n + y];
                let slot = &mut inverse[x * n + z];
                if *slot != usize::MAX {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::Bijectivity,
                        witness: (x, *slot, y),
                    });
                }
                *slot = y;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = table[x * n + y];
                for z in 0..n {
                    let lhs = table[x * n + table[y * n + z]];
                    let rhs = table[xy * n + table[x * n + z]];
                    if lhs != rhs {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::SelfDistributivity,
                            witness: (x, y, z),
                        });
                    }
                }
            }
        }
        let non_idempotent = (0..n).find(|&x| table[x * n + x] != x);
        if require_quandle {
            if let Some(witness) = non_idempotent {
                return Err(Error::NotAQuandle { witness });
            }
        }
        Ok(FiniteRack {
            n,
            table,
            inverse,
            is_quandle: non_idempotent.is_none(),
        })
    }

    /// Builds `x ▷ y = f(x, y)` and validates it as a rack.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let value = f(x, y);
                if value >= n {
                    return Err(Error::EntryOutOfRange {
                        row: x,
                        col: y,
                        value,
                        n,
                    });
                }
                table.push(value);
            }
        }
        Self::from_flat(n, table, false)
    }

    /// The trivial quandle `x ▷ y = y`.
    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_, y| y).expect("trivial quandle")
    }

    /// `Q_{m,n}` on `ℤ/m ⊔ ℤ/n` (elements `0..m` then `m..m+n`): an element
    /// shifts the other orbit by one and fixes its own.
    pub fn q_mn(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameters(
                "Q_{m,n} needs m, n ≥ 1 for a finite carrier".into(),
            ));
        }
        let orbit = |x: usize| usize::from(x >= m);
        let shift = |y: usize| if y < m { (y + 1) % m } else { m + (y - m + 1) % n };
        Self::from_fn(m + n, |x, y| if orbit(x) == orbit(y) { y } else { shift(y) })
    }

    /// `Q_{1,2}`: `a = 0` exchanges `b = 1` and `c = 2`, which act trivially.
    pub fn q_12() -> Self {
        Self::q_mn(1, 2).expect("Q_{1,2}")
    }

    /// A finite stand-in for `Q_{1,0}`, whose second orbit is `ℤ`: the orbit is
    /// cut down to `ℤ/k`, which gives `Q_{1,k}`. It is always a quandle, but it
    /// is not a quotient that `Q_{1,0}` determines canonically.
    pub fn q_10_truncated(k: usize) -> Result<Self> {
        Self::q_mn(1, k)
    }

    /// The conjugation quandle `g ▷ h = g h g⁻¹`.
    pub fn conj_quandle(g: &CayleyGroup) -> Self {
        Self::from_fn(g.order(), |a, b| g.conj(a, b)).expect("conjugation quandle")
    }

    /// The dihedral quandle `x ▷ y = 2x − y` on `ℤ/k`.
    pub fn dihedral(k: usize) -> Self {
        Self::from_fn(k, |x, y| (2 * x + k - y) % k).expect("dihedral quandle")
    }

    /// The one-generator rack `x ▷ y = y + 1` on `ℤ/k`.
    pub fn cyclic_rack(k: usize) -> Self {
        Self::from_fn(k, |_, y| (y + 1) % k).expect("cyclic rack")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_quandle(&self) -> bool {
        self.is_quandle
    }

    pub(crate) fn require_quandle(&self) -> Result<()> {
        if self.is_quandle {
            Ok(())
        } else {
            Err(Error::RequiresQuandle)
        }
    }

    /// `x ▷ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// The `y` with `x ▷ y = z`.
    #[inline]
    pub fn left_div(&self, x: usize, z: usize) -> usize {
        self.inverse[x * self.n + z]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| self.row(x).to_vec()).collect()
    }

    /// The left translation `x ▷ (−)`.
    pub fn row_perm(&self, x: usize) -> Permutation {
        Permutation::from_vec_unchecked(self.row(x).to_vec())
    }

    /// Row permutations, one per element (repeats kept).
    pub fn row_perms(&self) -> Vec<Permutation> {
        (0..self.n).map(|x| self.row_perm(x)).collect()
    }

    /// Orbits under the group generated by the rows.
    pub fn orbits(&self) -> Congruence {
        let mut uf = UnionFind::new(self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                uf.union(y, self.op(x, y));
            }
        }
        Congruence::from_ids(uf.class_ids())
    }

    /// The trivialisation: the trivial quandle on the orbit set.
    pub fn pi0(&self) -> FiniteRack {
        FiniteRack::trivial(self.orbits().num_classes())
    }

    /// The projection `Q ↠ π₀(Q)`.
    pub fn pi0_projection(&self) -> QuandleMorphism {
        let c = self.orbits();
        QuandleMorphism {
            map: c.class_of().to_vec(),
            source: self.clone(),
            target: FiniteRack::trivial(c.num_classes()),
        }
    }

    /// Whether `x ▷ y = y` for all `x, y`.
    pub fn is_trivial(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.op(x, y) == y))
    }

    /// The quotient by a congruence, elements numbered by class id.
    pub fn quotient(&self, c: &Congruence) -> FiniteRack {
        let k = c.num_classes();
        let mut rep = alloc::vec![usize::MAX; k];
        for x in 0..self.n {
            let id = c.class_of[x];
            if rep[id] == usize::MAX {
                rep[id] = x;
            }
        }
        Self::from_fn(k, |a, b| c.class_of[self.op(rep[a], rep[b])])
            .expect("quotient by a congruence is a rack")
    }

    /// The quotient by a congruence together with the projection.
    pub fn projection(&self, c: &Congruence) -> QuandleMorphism {
        QuandleMorphism {
            source: self.clone(),
            target: self.quotient(c),
            map: c.class_of.clone(),
        }
    }

    /// Quotient by the orbits of a subgroup `G ≤ Sym(Q)` normalized by `Inn(Q)`.
    pub fn quotient_by_subgroup(
        &self,
        g: &PermGroup,
        cap: usize,
    ) -> Result<(FiniteRack, Congruence)> {
        if g.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: g.degree(),
            });
        }
        let elems = g.enumerate(cap)?;
        let mut checked: Vec<Permutation> = Vec::new();
        for x in 0..self.n {
            let s = self.row_perm(x);
            if checked.contains(&s) {
                continue;
            }
            for (k, h) in g.generators().iter().enumerate() {
                if !elems.contains(&s.conjugate(h)) {
                    return Err(Error::NotNormalized {
                        inner: x,
                        generator: k,
                    });
                }
            }
            checked.push(s);
        }
        let mut uf = UnionFind::new(self.n);
        for h in g.generators() {
            for x in 0..self.n {
                uf.union(x, h.apply(x));
            }
        }
        let c = Congruence::from_ids(uf.class_ids());
        Ok((self.quotient(&c), c))
    }

    /// Smallest congruence identifying each given pair.
    pub fn congruence_closure(&self, pairs: &[(usize, usize)]) -> Congruence {
        let mut uf = UnionFind::new(self.n);
        let mut work: Vec<(usize, usize)> = pairs.to_vec();
        while let Some((a, b)) = work.pop() {
            if !uf.union(a, b) {
                continue;
            }
            // For a finite rack compatibility with ▷ forces compatibility with
            // the inverse operation, since each inverse row is a power of a row.
            for z in 0..self.n {
                work.push((self.op(a, z), self.op(b, z)));
                work.push((self.op(z, a), self.op(z, b)));
            }
        }
        Congruence::from_ids(uf.class_ids())
    }

    /// The universal reduced quotient `R(Q)`: identify `y ▷ x` with `x` for
    /// every `y` in the orbit of `x`.
    pub fn reduced_quotient(&self) -> Result<(FiniteRack, Congruence)> {
        self.require_quandle()?;
        let orbits = self.orbits();
        let mut pairs = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if orbits.same(x, y) && self.op(y, x) != x {
                    pairs.push((self.op(y, x), x));
                }
            }
        }
        let c = self.congruence_closure(&pairs);
        Ok((self.quotient(&c), c))
    }

    /// A pair `(y, x)` in one orbit with `y ▷ x ≠ x`, if any.
    pub fn reduced_witness(&self) -> Option<(usize, usize)> {
        let orbits = self.orbits();
        for x in 0..self.n {
            for y in 0..self.n {
                if orbits.same(x, y) && self.op(y, x) != x {
                    return Some((y, x));
                }
            }
        }
        None
    }

    /// Every orbit acts trivially on itself.
    pub fn is_reduced(&self) -> bool {
        self.reduced_witness().is_none()
    }

    /// Closure of `s` under `▷` and its inverse, sorted.
    pub fn subquandle_generated(&self, s: &[usize]) -> Vec<usize> {
        let mut member = alloc::vec![false; self.n];
        let mut list: Vec<usize> = Vec::new();
        for &x in s {
            if !member[x] {
                member[x] = true;
                list.push(x);
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            let snapshot = list.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    for z in [self.op(a, b), self.left_div(a, b)] {
                        if !member[z] {
                            member[z] = true;
                            list.push(z);
                            changed = true;
                        }
                    }
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// Whether `s` generates the whole rack.
    pub fn generates(&self, s: &[usize]) -> bool {
        self.subquandle_generated(s).len() == self.n
    }

    /// The sub-rack on a sorted set closed under `▷` and its inverse,
    /// renumbered in order.
    pub fn subrack(&self, elems: &[usize]) -> Result<FiniteRack> {
        let mut index = alloc::vec![usize::MAX; self.n];
        for (i, &x) in elems.iter().enumerate() {
            index[x] = i;
        }
        Self::from_fn(elems.len(), |a, b| {
            let z = index[self.op(elems[a], elems[b])];
            if z == usize::MAX {
                elems.len()
            } else {
                z
            }
        })
    }
}

/// A partition of `0..n` by class ids numbered `0..k` in order of first
/// appearance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
    num_classes: usize,
}

impl Congruence {
    /// Checks that `class_of` is compatible with the law of `rack`; ids are
    /// renumbered by first appearance.
    pub fn new(rack: &FiniteRack, class_of: Vec<usize>) -> Result<Self> {
        if class_of.len() != rack.len() {
            return Err(Error::DimensionMismatch {
                expected: rack.len(),
                got: class_of.len(),
            });
        }
        let c = Self::from_ids(renumber(&class_of));
        let n = rack.len();
        let mut rep = alloc::vec![usize::MAX; c.num_classes];
        for x in 0..n {
            if rep[c.class_of[x]] == usize::MAX {
                rep[c.class_of[x]] = x;
            }
        }
        // Comparing with class representatives covers all pairs by transitivity.
        for x in 0..n {
            let x0 = rep[c.class_of[x]];
            for y in 0..n {
                let y0 = rep[c.class_of[y]];
                if c.class_of[rack.op(x, y)] != c.class_of[rack.op(x0, y0)] {
                    return Err(Error::NotCongruence((x, x0, y, y0)));
                }
            }
        }
        Ok(c)
    }

    pub(crate) fn from_ids(class_of: Vec<usize>) -> Self {
        let num_classes = class_of.iter().map(|&c| c + 1).max().unwrap_or(0);
        Congruence {
            class_of,
            num_classes,
        }
    }

    /// The identity partition on `0..n`.
    pub fn identity(n: usize) -> Self {
        Self::from_ids((0..n).collect())
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn is_identity(&self) -> bool {
        self.num_classes == self.class_of.len()
    }

    /// Classes as sorted element lists, in id order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = alloc::vec![Vec::new(); self.num_classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes().iter().map(Vec::len).collect()
    }
}

fn renumber(ids: &[usize]) -> Vec<usize> {
    let mut map = alloc::collections::BTreeMap::new();
    ids.iter()
        .map(|&c| {
            let next = map.len();
            *map.entry(c).or_insert(next)
        })
        .collect()
}

/// A rack morphism given by its table of images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandleMorphism {
    source: FiniteRack,
    target: FiniteRack,
    map: Vec<usize>,
}

impl QuandleMorphism {
    pub fn new(source: FiniteRack, target: FiniteRack, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::DimensionMismatch {
                expected: source.len(),
                got: map.len(),
            });
        }
        if let Some(&value) = map.iter().find(|&&v| v >= target.len()) {
            return Err(Error::EntryOutOfRange {
                row: 0,
                col: 0,
                value,
                n: target.len(),
            });
        }
        for x in 0..source.len() {
            for y in 0..source.len() {
                if map[source.op(x, y)] != target.op(map[x], map[y]) {
                    return Err(Error::NotAMorphism(x, y));
                }
            }
        }
        Ok(QuandleMorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(q: &FiniteRack) -> Self {
        QuandleMorphism {
            source: q.clone(),
            target: q.clone(),
            map: (0..q.len()).collect(),
        }
    }

    /// The unique map to the one-point quandle.
    pub fn to_point(q: &FiniteRack) -> Self {
        QuandleMorphism {
            source: q.clone(),
            target: FiniteRack::trivial(1),
            map: alloc::vec![0; q.len()],
        }
    }

    pub fn source(&self) -> &FiniteRack {
        &self.source
    }

    pub fn target(&self) -> &FiniteRack {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &QuandleMorphism) -> Result<QuandleMorphism> {
        if self.target != next.source {
            return Err(Error::DimensionMismatch {
                expected: self.target.len(),
                got: next.source.len(),
            });
        }
        Ok(QuandleMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&x| next.map[x]).collect(),
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = alloc::vec![false; self.target.len()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Surjective, and elements in a common fiber have equal rows.
    pub fn is_covering(&self) -> bool {
        if !self.is_surjective() {
            return false;
        }
        let mut first = alloc::vec![usize::MAX; self.target.len()];
        for x in 0..self.source.len() {
            let f = &mut first[self.map[x]];
            if *f == usize::MAX {
                *f = x;
            } else if self.source.row(*f) != self.source.row(x) {
                return false;
            }
        }
        true
    }

    /// The map induced on orbit sets.
    pub fn pi0_map(&self) -> Vec<usize> {
        let (s, t) = (self.source.orbits(), self.target.orbits());
        let mut out = alloc::vec![0; s.num_classes()];
        for x in 0..self.source.len() {
            out[s.class_of[x]] = t.class_of[self.map[x]];
        }
        out
    }
}

/// All rack morphisms `a → b`, by backtracking with forced images.
pub fn all_morphisms(a: &FiniteRack, b: &FiniteRack) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut map = alloc::vec![usize::MAX; a.len()];
    search_maps(a, b, &mut map, false, &mut out, usize::MAX);
    out
}

/// An isomorphism `a → b`, if one exists.
pub fn find_isomorphism(a: &FiniteRack, b: &FiniteRack) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.is_quandle() != b.is_quandle() {
        return None;
    }
    if a.orbits().class_sizes_sorted() != b.orbits().class_sizes_sorted() {
        return None;
    }
    let mut out = Vec::new();
    let mut map = alloc::vec![usize::MAX; a.len()];
    search_maps(a, b, &mut map, true, &mut out, 1);
    out.pop()
}

impl Congruence {
    fn class_sizes_sorted(&self) -> Vec<usize> {
        let mut s = self.class_sizes();
        s.sort_unstable();
        s
    }
}

/// Extends `map` at the first unassigned point, propagating images of
/// products of assigned points.
fn search_maps(
    a: &FiniteRack,
    b: &FiniteRack,
    map: &mut Vec<usize>,
    injective: bool,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let Some(x) = map.iter().position(|&v| v == usize::MAX) else {
        out.push(map.clone());
        return;
    };
    for y in 0..b.len() {
        if injective && map.contains(&y) {
            continue;
        }
        let saved = map.clone();
        map[x] = y;
        if propagate(a, b, map, injective) {
            search_maps(a, b, map, injective, out, limit);
            if out.len() >= limit {
                return;
            }
        }
        *map = saved;
    }
}

fn propagate(a: &FiniteRack, b: &FiniteRack, map: &mut [usize], injective: bool) -> bool {
    let n = a.len();
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..n {
            if map[x] == usize::MAX {
                continue;
            }
            for y in 0..n {
                if map[y] == usize::MAX {
                    continue;
                }
                let want = b.op(map[x], map[y]);
                let z = a.op(x, y);
                if map[z] == usize::MAX {
                    if injective && map.contains(&want) {
                        return false;
                    }
                    map[z] = want;
                    changed = true;
                } else if map[z] != want {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_empty_are_quandles() {
        let t = FiniteRack::validate(alloc::vec![alloc::vec![0, 1, 2]; 3], true).unwrap();
        assert!(t.is_quandle() && t.is_trivial());
        let e = FiniteRack::validate(Vec::new(), true).unwrap();
        assert!(e.is_quandle() && e.is_empty());
        assert_eq!(FiniteRack::trivial(1).len(), 1);
    }

    #[test]
    fn q12_table() {
        let q = FiniteRack::validate(
            alloc::vec![alloc::vec![0, 2, 1], alloc::vec![0, 1, 2], alloc::vec![0, 1, 2]],
            true,
        )
        .unwrap();
        assert_eq!(q, FiniteRack::q_12());
        assert_eq!(q.orbits().classes(), alloc::vec![alloc::vec![0], alloc::vec![1, 2]]);
    }

    #[test]
    fn axiom_violations_have_witnesses() {
        let bad = FiniteRack::validate(alloc::vec![alloc::vec![0, 0], alloc::vec![0, 1]], false);
        assert!(matches!(
            bad,
            Err(Error::AxiomViolation {
                axiom: Axiom::Bijectivity,
                ..
            })
        ));
        // Rows are bijections but distributivity fails.
        let bad = FiniteRack::validate(
            alloc::vec![alloc::vec![0, 2, 1], alloc::vec![2, 1, 0], alloc::vec![0, 1, 2]],
            false,
        );
        assert!(matches!(
            bad,
            Err(Error::AxiomViolation {
                axiom: Axiom::SelfDistributivity,
                ..
            })
        ));
        let rack = FiniteRack::validate(alloc::vec![alloc::vec![1, 0], alloc::vec![1, 0]], false)
            .unwrap();
        assert!(!rack.is_quandle());
        assert_eq!(
            FiniteRack::validate(rack.rows(), true),
            Err(Error::NotAQuandle { witness: 0 })
        );
    }

    #[test]
    fn range_and_shape_errors() {
        assert!(matches!(
            FiniteRack::validate(alloc::vec![alloc::vec![0, 1], alloc::vec![0]], false),
            Err(Error::TableShape { row: 1, .. })
        ));
        assert!(matches!(
            FiniteRack::validate(alloc::vec![alloc::vec![0, 2], alloc::vec![0, 1]], false),
            Err(Error::EntryOutOfRange { value: 2, .. })
        ));
    }

    #[test]
    fn q23_orbits_and_pi0() {
        let q = FiniteRack::q_mn(2, 3).unwrap();
        assert_eq!(q.len(), 5);
        assert_eq!(
            q.orbits().classes(),
            alloc::vec![alloc::vec![0, 1], alloc::vec![2, 3, 4]]
        );
        assert_eq!(q.pi0(), FiniteRack::trivial(2));
        assert!(q.pi0_projection().is_covering());
        assert_eq!(FiniteRack::trivial(4).orbits().num_classes(), 4);
    }

    #[test]
    fn conj_s3_orbits_are_classes() {
        let q = FiniteRack::conj_quandle(&CayleyGroup::symmetric3());
        let mut sizes = q.orbits().class_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, alloc::vec![1, 2, 3]);
        assert!(q.is_quandle());
    }

    #[test]
    fn quotient_by_inner_group_is_pi0() {
        let q = FiniteRack::q_mn(2, 2).unwrap();
        let inn = PermGroup::new(4, q.row_perms()).unwrap();
        let (quot, _) = q.quotient_by_subgroup(&inn, 100).unwrap();
        assert_eq!(quot, FiniteRack::trivial(2));
        let (same, c) = q.quotient_by_subgroup(&PermGroup::trivial(4), 100).unwrap();
        assert_eq!(same, q);
        assert!(c.is_identity());
        let q46 = FiniteRack::q_mn(4, 6).unwrap();
        let inn = PermGroup::new(10, q46.row_perms()).unwrap();
        assert_eq!(q46.quotient_by_subgroup(&inn, 1000).unwrap().0, FiniteRack::trivial(2));
    }

    #[test]
    fn non_normalized_subgroup_is_rejected() {
        let q = FiniteRack::q_mn(1, 3).unwrap();
        let g = PermGroup::new(4, alloc::vec![Permutation::transposition(4, 1, 2)]).unwrap();
        assert!(matches!(
            q.quotient_by_subgroup(&g, 100),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn coverings() {
        let q = FiniteRack::trivial(2);
        assert!(QuandleMorphism::identity(&q).is_covering());
        assert!(QuandleMorphism::to_point(&q).is_covering());
        let emb =
            QuandleMorphism::new(FiniteRack::trivial(1), FiniteRack::trivial(2), alloc::vec![0])
                .unwrap();
        assert!(!emb.is_covering());
        let bad = QuandleMorphism::new(
            FiniteRack::q_12(),
            FiniteRack::q_12(),
            alloc::vec![1, 0, 2],
        );
        assert!(matches!(bad, Err(Error::NotAMorphism(..))));
    }

    #[test]
    fn reduced_quotients() {
        let q = FiniteRack::q_mn(2, 2).unwrap();
        assert!(q.is_reduced());
        assert!(q.reduced_quotient().unwrap().1.is_identity());
        assert!(FiniteRack::q_mn(2, 3).unwrap().is_reduced());
        let t = FiniteRack::trivial(3);
        assert!(t.reduced_quotient().unwrap().1.is_identity());

        let s3 = FiniteRack::conj_quandle(&CayleyGroup::symmetric3());
        assert!(!s3.is_reduced());
        let (y, x) = s3.reduced_witness().unwrap();
        assert_ne!(s3.op(y, x), x);
        let (r, c) = s3.reduced_quotient().unwrap();
        assert!(r.len() < 6);
        assert!(r.is_reduced());
        assert_eq!(r.reduced_quotient().unwrap().0, r);
        assert!(s3.projection(&c).is_surjective());
        assert!(matches!(
            FiniteRack::cyclic_rack(3).reduced_quotient(),
            Err(Error::RequiresQuandle)
        ));
    }

    #[test]
    fn generation() {
        let q = FiniteRack::q_mn(2, 3).unwrap();
        assert_eq!(q.subquandle_generated(&[0, 2]), alloc::vec![0, 1, 2, 3, 4]);
        assert!(!q.generates(&[0, 1]));
    }

    #[test]
    fn congruence_validation() {
        let q = FiniteRack::q_mn(2, 2).unwrap();
        assert!(Congruence::new(&q, alloc::vec![0, 0, 1, 1]).is_ok());
        assert!(matches!(
            Congruence::new(&q, alloc::vec![0, 1, 0, 1]),
            Err(Error::NotCongruence(_))
        ));
    }

    #[test]
    fn isomorphism_search() {
        let a = FiniteRack::q_mn(2, 3).unwrap();
        let b = FiniteRack::q_mn(3, 2).unwrap();
        let f = find_isomorphism(&a, &b).unwrap();
        assert!(QuandleMorphism::new(a.clone(), b.clone(), f).is_ok());
        assert!(find_isomorphism(&a, &FiniteRack::trivial(5)).is_none());
        assert!(find_isomorphism(&FiniteRack::dihedral(3), &FiniteRack::q_mn(1, 2).unwrap()).is_none());
    }

    #[test]
    fn morphism_enumeration_to_trivial() {
        let q = FiniteRack::q_mn(1, 2).unwrap();
        // Maps to a trivial quandle are exactly the maps constant on orbits.
        assert_eq!(all_morphisms(&q, &FiniteRack::trivial(3)).len(), 9);
    }
}
