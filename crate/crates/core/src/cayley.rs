//! Finite groups given by multiplication tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::permgroup::{PermGroup, Permutation};

/// A finite group on `0..order` with `table[a][b] = a·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl CayleyGroup {
    /// Checks shape, closure, identity, inverses and associativity.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {i} has {} entries", row.len())));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidGroup(format!("entry {v} in row {i} out of range")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(CayleyGroup {
            table,
            identity,
            inverses,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        CayleyGroup::new(table).expect("cyclic group table")
    }

    /// `a × b` with the pair `(x, y)` stored at `x·|b| + y`.
    pub fn direct_product(a: &CayleyGroup, b: &CayleyGroup) -> Self {
        let (na, nb) = (a.order(), b.order());
        let table = (0..na * nb)
            .map(|p| {
                (0..na * nb)
                    .map(|q| a.mul(p / nb, q / nb) * nb + b.mul(p % nb, q % nb))
                    .collect()
            })
            .collect();
        CayleyGroup::new(table).expect("product of groups")
    }

    /// The elements of a permutation group, indexed in sorted order (so the
    /// identity is element 0).
    pub fn from_perm_group(g: &PermGroup, cap: usize) -> Result<Self> {
        let elems: Vec<Permutation> = g.enumerate(cap)?.iter().cloned().collect();
        Ok(Self::from_permutations(&elems))
    }

    fn from_permutations(elems: &[Permutation]) -> Self {
        let index: BTreeMap<&Permutation, usize> =
            elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&a.compose(b)]).collect())
            .collect();
        CayleyGroup::new(table).expect("closed set of permutations")
    }

    /// `S₃` as permutations of three points.
    pub fn symmetric3() -> Self {
        Self::from_perm_group(&PermGroup::symmetric(3), 10).expect("S3")
    }

    /// The dihedral group of order `2k`, `k ≥ 3`, acting on a `k`-gon.
    pub fn dihedral(k: usize) -> Self {
        let r: Vec<usize> = (0..k).collect();
        let rot = Permutation::cycle(k, &r);
        let refl = Permutation::from_vec_unchecked((0..k).map(|i| (k - i) % k).collect());
        let g = PermGroup::new(k, alloc::vec![rot, refl]).expect("same degree");
        Self::from_perm_group(&g, 2 * k).expect("dihedral group")
    }

    /// The quaternion group `Q₈` in its regular representation.
    pub fn quaternion() -> Self {
        // Elements ±1, ±i, ±j, ±k encoded as (sign, unit) with 1,i,j,k = 0..3.
        let unit_mul = |a: usize, b: usize| -> (bool, usize) {
            match (a, b) {
                (0, x) | (x, 0) => (false, x),
                (x, y) if x == y => (true, 0),
                (1, 2) => (false, 3),
                (2, 3) => (false, 1),
                (3, 1) => (false, 2),
                (2, 1) => (true, 3),
                (3, 2) => (true, 1),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|p| {
                (0..8)
                    .map(|q| {
                        let (neg, u) = unit_mul(p % 4, q % 4);
                        let sign = (p / 4) ^ (q / 4) ^ usize::from(neg);
                        sign * 4 + u
                    })
                    .collect()
            })
            .collect();
        CayleyGroup::new(table).expect("quaternion table")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// `a b a⁻¹`.
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = alloc::vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut c: Vec<usize> = (0..n).map(|g| self.conj(g, x)).collect();
            c.sort_unstable();
            c.dedup();
            for &y in &c {
                class_of[y] = classes.len();
            }
            classes.push(c);
        }
        classes
    }

    /// Elements commuting with `x`.
    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .collect()
    }

    /// Whether `subset` is closed under products and inverses and non-empty.
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        if subset.is_empty() || subset.iter().any(|&x| x >= self.order()) {
            return false;
        }
        let mut member = alloc::vec![false; self.order()];
        for &x in subset {
            member[x] = true;
        }
        subset.iter().all(|&a| {
            member[self.inv(a)] && subset.iter().all(|&b| member[self.mul(a, b)])
        })
    }

    /// Left cosets `gH`, each sorted, ordered by least element.
    pub fn left_cosets(&self, h: &[usize]) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let mut c: Vec<usize> = h.iter().map(|&x| self.mul(g, x)).collect();
            c.sort_unstable();
            c.dedup();
            for &y in &c {
                seen[y] = true;
            }
            out.push(c);
        }
        out
    }
}

/// One group for each isomorphism class of order at most 8, with a short name.
pub fn small_groups() -> Vec<(&'static str, CayleyGroup)> {
    let z = CayleyGroup::cyclic;
    alloc::vec![
        ("Z1", z(1)),
        ("Z2", z(2)),
        ("Z3", z(3)),
        ("Z4", z(4)),
        ("Z2xZ2", CayleyGroup::direct_product(&z(2), &z(2))),
        ("Z5", z(5)),
        ("Z6", z(6)),
        ("S3", CayleyGroup::symmetric3()),
        ("Z7", z(7)),
        ("Z8", z(8)),
        ("Z2xZ4", CayleyGroup::direct_product(&z(2), &z(4))),
        (
            "Z2xZ2xZ2",
            CayleyGroup::direct_product(&CayleyGroup::direct_product(&z(2), &z(2)), &z(2))
        ),
        ("D4", CayleyGroup::dihedral(4)),
        ("Q8", CayleyGroup::quaternion()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_group() {
        assert!(CayleyGroup::new(alloc::vec![alloc::vec![0, 0], alloc::vec![0, 1]]).is_err());
        assert!(CayleyGroup::new(alloc::vec![alloc::vec![0, 1], alloc::vec![1, 2]]).is_err());
    }

    #[test]
    fn s3_classes() {
        let g = CayleyGroup::symmetric3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, alloc::vec![1, 2, 3]);
    }

    #[test]
    fn small_groups_are_distinct() {
        let gs = small_groups();
        assert_eq!(gs.len(), 14);
        let q8 = &gs[13].1;
        let d4 = &gs[12].1;
        // Q8 has a single involution, D4 has five.
        let inv = |g: &CayleyGroup| (0..8).filter(|&x| x != g.identity() && g.inv(x) == x).count();
        assert_eq!(inv(q8), 1);
        assert_eq!(inv(d4), 5);
        assert!(!q8.is_abelian() && !d4.is_abelian());
    }

    #[test]
    fn cosets_partition() {
        let g = CayleyGroup::symmetric3();
        let h = g.centralizer(1);
        assert!(g.is_subgroup(&h));
        let cs = g.left_cosets(&h);
        assert_eq!(cs.len() * h.len(), 6);
    }
}
