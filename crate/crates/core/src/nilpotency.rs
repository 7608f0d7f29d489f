//! Nilpotency of racks and quandles.
//!
//! A rack is `c`-nilpotent when `Inn(Q)` is nilpotent of class at most
//! `c − 1`. Two independent routes are provided: the group-level one through
//! the lower central series of `Inn(Q)`, and the identity-level one through
//! the reductivity identities
//!
//! ```text
//! ((q₁ ▷ q₂) ▷ …) ▷ q_{c+1} = ((q₂ ▷ q₃) ▷ …) ▷ q_{c+1},
//! ```
//!
//! which characterise `c`-nilpotent quandles. For racks the weak identities,
//! where `q₁` is replaced by an arbitrary `q₁′`, bound the class from below.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::permgroup::{PermGroup, Permutation};
use crate::rack::{Congruence, FiniteRack, QuandleMorphism};

/// The group generated by the left translations, one generator per distinct
/// non-identity row.
pub fn inn_group(q: &FiniteRack) -> PermGroup {
    let mut gens: Vec<Permutation> = Vec::new();
    for p in q.row_perms() {
        if !p.is_identity() && !gens.contains(&p) {
            gens.push(p);
        }
    }
    PermGroup::new(q.len(), gens).expect("rows have the rack's degree")
}

/// `Γ_c(Inn Q)` with `Γ₁ = Inn Q`.
pub fn gamma(q: &FiniteRack, c: usize, cap: usize) -> Result<PermGroup> {
    if c == 0 {
        return Err(Error::InvalidParameters("lower central series starts at 1".into()));
    }
    let inn = inn_group(q);
    let series = inn.lower_central_series(cap)?;
    Ok(series
        .get(c - 1)
        .cloned()
        .unwrap_or_else(|| series.last().unwrap().clone()))
}

/// Least `c` such that `Γ_c(Inn Q)` is trivial, that is the class of
/// `Inn(Q)` plus one; `None` when `Inn(Q)` is not nilpotent.
pub fn nilpotency_class(q: &FiniteRack, cap: usize) -> Result<Option<usize>> {
    Ok(inn_group(q).nilpotency_class(cap)?.map(|k| k + 1))
}

/// A `(c+1)`-tuple violating the `c`-reductivity identity, if any.
pub fn reductive_witness(q: &FiniteRack, c: usize) -> Option<Vec<usize>> {
    assert!(c >= 1, "reductivity is defined for c ≥ 1");
    let n = q.len();
    let mut tuple = Vec::with_capacity(c + 1);
    for q1 in 0..n {
        for q2 in 0..n {
            tuple.clear();
            tuple.extend([q1, q2]);
            if reductive_dfs(q, c + 1, q.op(q1, q2), q2, &mut tuple) {
                return Some(tuple);
            }
        }
    }
    None
}

/// Extends `tuple` looking for a leaf with `u ≠ v`; returns `true` when found.
fn reductive_dfs(q: &FiniteRack, len: usize, u: usize, v: usize, tuple: &mut Vec<usize>) -> bool {
    if u == v {
        return false;
    }
    if tuple.len() == len {
        return true;
    }
    for x in 0..q.len() {
        tuple.push(x);
        if reductive_dfs(q, len, q.op(u, x), q.op(v, x), tuple) {
            return true;
        }
        tuple.pop();
    }
    false
}

/// Whether all `(c+1)`-tuples satisfy the `c`-reductivity identity.
pub fn is_c_reductive(q: &FiniteRack, c: usize) -> bool {
    reductive_witness(q, c).is_none()
}

/// Least `c ≤ max_c` for which `q` is `c`-reductive.
pub fn reductive_class(q: &FiniteRack, max_c: usize) -> Option<usize> {
    (1..=max_c).find(|&c| is_c_reductive(q, c))
}

/// A pair of tuples `(x₁, x₂, …)` and `(x₁′, x₂, …)` with different iterated
/// products `((x₁ ▷ x₂) ▷ …) ▷ x_{c+1}`, if any.
pub fn weak_witness(r: &FiniteRack, c: usize) -> Option<(Vec<usize>, usize)> {
    assert!(c >= 1, "weak nilpotency is defined for c ≥ 1");
    let n = r.len();
    // For each tail, track which values the product takes as x₁ varies,
    // together with one x₁ realising each value.
    let mut tail = Vec::with_capacity(c);
    for x2 in 0..n {
        let mut values: Vec<(usize, usize)> = Vec::new();
        for x1 in 0..n {
            let v = r.op(x1, x2);
            if !values.iter().any(|&(w, _)| w == v) {
                values.push((v, x1));
            }
        }
        tail.clear();
        tail.push(x2);
        if let Some((a, b)) = weak_dfs(r, c, &values, &mut tail) {
            let mut t = alloc::vec![a];
            t.extend_from_slice(&tail);
            return Some((t, b));
        }
    }
    None
}

fn weak_dfs(
    r: &FiniteRack,
    c: usize,
    values: &[(usize, usize)],
    tail: &mut Vec<usize>,
) -> Option<(usize, usize)> {
    if values.len() <= 1 {
        return None;
    }
    if tail.len() == c {
        return Some((values[0].1, values[1].1));
    }
    for x in 0..r.len() {
        let mut next: Vec<(usize, usize)> = Vec::with_capacity(values.len());
        for &(v, src) in values {
            let w = r.op(v, x);
            if !next.iter().any(|&(u, _)| u == w) {
                next.push((w, src));
            }
        }
        tail.push(x);
        if let Some(found) = weak_dfs(r, c, &next, tail) {
            return Some(found);
        }
        tail.pop();
    }
    None
}

/// Whether `((x₁ ▷ x₂) ▷ …) ▷ x_{c+1}` does not depend on `x₁`.
pub fn is_weakly_c_nilpotent(r: &FiniteRack, c: usize) -> bool {
    weak_witness(r, c).is_none()
}

/// Least `c ≤ max_c` for which `r` is weakly `c`-nilpotent.
pub fn weak_class(r: &FiniteRack, max_c: usize) -> Option<usize> {
    (1..=max_c).find(|&c| is_weakly_c_nilpotent(r, c))
}

/// `Q/Γ_c`: the quotient by the orbits of `Γ_c(Inn Q)`. It is `c`-nilpotent,
/// and every morphism from `Q` to a `c`-nilpotent quandle factors through it.
pub fn universal_nilpotent_quotient(
    q: &FiniteRack,
    c: usize,
    cap: usize,
) -> Result<(FiniteRack, Congruence)> {
    let g = gamma(q, c, cap)?;
    q.quotient_by_subgroup(&g, cap)
}

/// The chain `Q ↠ Q/Γ_{c−1} ↠ … ↠ Q/Γ₁ = π₀(Q) ↠ *` for a quandle of
/// class `c`; each arrow is a covering.
pub fn covering_chain(q: &FiniteRack, cap: usize) -> Result<Vec<QuandleMorphism>> {
    let c = nilpotency_class(q, cap)?.ok_or(Error::NotNilpotent)?;
    // Congruences on Q from finest to coarsest, ending with the point.
    let mut levels: Vec<Congruence> = Vec::new();
    levels.push(Congruence::identity(q.len()));
    for k in (1..c).rev() {
        levels.push(universal_nilpotent_quotient(q, k, cap)?.1);
    }
    levels.push(Congruence::from_ids(alloc::vec![0; q.len()]));
    let mut arrows = Vec::with_capacity(c);
    for w in levels.windows(2) {
        let (fine, coarse) = (&w[0], &w[1]);
        let mut map = alloc::vec![0; fine.num_classes()];
        for x in 0..q.len() {
            map[fine.class_of()[x]] = coarse.class_of()[x];
        }
        let source = q.quotient(fine);
        let target = if coarse.num_classes() == 1 && q.is_empty() {
            FiniteRack::trivial(1)
        } else {
            q.quotient(coarse)
        };
        arrows.push(QuandleMorphism::new(source, target, map)?);
    }
    Ok(arrows)
}

/// Calls `f` on every subset of `0..n` with at most `max_size` elements, in
/// order of increasing size, stopping when it returns `false`.
fn for_each_subset(n: usize, max_size: usize, mut f: impl FnMut(&[usize]) -> bool) {
    fn rec(
        n: usize,
        start: usize,
        size: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for x in start..n {
            cur.push(x);
            let go = rec(n, x + 1, size, cur, f);
            cur.pop();
            if !go {
                return false;
            }
        }
        true
    }
    let mut cur = Vec::new();
    for size in 0..=max_size.min(n) {
        if !rec(n, 0, size, &mut cur, &mut f) {
            return;
        }
    }
}

/// A subset of at most `max_size` elements for which "generates `Q`" and
/// "meets every orbit" disagree, if any.
pub fn generation_counterexample(q: &FiniteRack, max_size: usize) -> Option<Vec<usize>> {
    let orbits = q.orbits();
    let k = orbits.num_classes();
    let mut found = None;
    for_each_subset(q.len(), max_size, |s| {
        let mut hit = alloc::vec![false; k];
        for &x in s {
            hit[orbits.class_of()[x]] = true;
        }
        if q.generates(s) != hit.iter().all(|&h| h) {
            found = Some(s.to_vec());
            return false;
        }
        true
    });
    found
}

/// Checks, over all subsets of size at most `|π₀(Q)| + 1`, that a subset
/// generates `Q` exactly when it meets every orbit.
pub fn check_generation_criterion(q: &FiniteRack) -> bool {
    let k = q.orbits().num_classes();
    generation_counterexample(q, k + 1).is_none()
}

/// The quotient by the orbits of the last term of the lower central series
/// of `Inn(Q)`. Every nilpotent quotient of `Q` factors through it.
pub fn residual_quotient(q: &FiniteRack, cap: usize) -> Result<(FiniteRack, Congruence)> {
    let series = inn_group(q).lower_central_series(cap)?;
    q.quotient_by_subgroup(series.last().unwrap(), cap)
}

/// Whether nilpotent quotients separate the points of `Q`.
pub fn residually_nilpotent(q: &FiniteRack, cap: usize) -> Result<bool> {
    Ok(residual_quotient(q, cap)?.1.is_identity())
}

/// Whether `f` is surjective on orbits; for a nilpotent target this is
/// equivalent to surjectivity.
pub fn surjectivity_criterion(f: &QuandleMorphism, cap: usize) -> Result<bool> {
    if nilpotency_class(f.target(), cap)?.is_none() {
        return Err(Error::TargetNotNilpotent);
    }
    let k = f.target().orbits().num_classes();
    let mut hit = alloc::vec![false; k];
    for o in f.pi0_map() {
        hit[o] = true;
    }
    Ok(hit.into_iter().all(|h| h))
}

/// Properties of `Γ_c(Inn Q)` acting on the fibers of `Q ↠ Q/Γ_c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtensionCheck {
    pub central: bool,
    pub preserves_fibers: bool,
    pub transitive_on_fibers: bool,
}

impl ExtensionCheck {
    pub fn holds(&self) -> bool {
        self.central && self.preserves_fibers && self.transitive_on_fibers
    }
}

/// Checks that `Q ↠ Q/Γ_c` is a `Γ_c(Inn Q)`-extension: `Γ_c` is central,
/// maps each fiber to itself and acts transitively on it. The fibers are
/// computed from the congruence generated by the rows, independently of the
/// group action.
pub fn check_extension(q: &FiniteRack, c: usize, cap: usize) -> Result<ExtensionCheck> {
    let g = gamma(q, c, cap)?;
    let rows = q.row_perms();
    let central = g
        .generators()
        .iter()
        .all(|h| rows.iter().all(|s| s.compose(h) == h.compose(s)));
    let (_, fibers) = universal_nilpotent_quotient(q, c, cap)?;
    let elems = g.enumerate(cap)?;
    let preserves_fibers = elems
        .iter()
        .all(|h| (0..q.len()).all(|x| fibers.same(x, h.apply(x))));
    let transitive_on_fibers = fibers.classes().iter().all(|class| {
        let x = class[0];
        let mut orbit: Vec<usize> = elems.iter().map(|h| h.apply(x)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit == *class
    });
    Ok(ExtensionCheck {
        central,
        preserves_fibers,
        transitive_on_fibers,
    })
}

/// Nilpotency invariants of a finite rack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotencyReport {
    pub size: usize,
    pub is_quandle: bool,
    pub orbit_sizes: Vec<usize>,
    pub inn_order: usize,
    pub inn_class: Option<usize>,
    /// `inn_class + 1`.
    pub quandle_class: Option<usize>,
    /// Least `c` satisfying the reductivity identities, searched up to the
    /// quandle class, or up to the analysis bound when there is none.
    pub reductive_class: Option<usize>,
    pub weak_class: Option<usize>,
    pub residually_nilpotent: bool,
    pub is_reduced: bool,
    /// Sizes of `Q, Q/Γ_{c−1}, …, π₀(Q), *` along the covering chain; empty
    /// when `Q` is not nilpotent.
    pub covering_chain_lengths: Vec<usize>,
}

/// Bounds for [`analyze`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub cap: usize,
    /// Largest `c` tried in the identity searches when `Inn(Q)` is not nilpotent.
    pub max_identity_class: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            cap: crate::permgroup::DEFAULT_ORDER_CAP,
            max_identity_class: 4,
        }
    }
}

pub fn analyze(q: &FiniteRack, opts: AnalyzeOptions) -> Result<NilpotencyReport> {
    let inn = inn_group(q);
    let inn_order = inn.order(opts.cap)?;
    let inn_class = inn.nilpotency_class(opts.cap)?;
    let quandle_class = inn_class.map(|k| k + 1);
    let bound = quandle_class.unwrap_or(opts.max_identity_class);
    let reductive_class = reductive_class(q, bound);
    let weak_class = weak_class(q, bound);
    let covering_chain_lengths = if quandle_class.is_some() {
        let chain = covering_chain(q, opts.cap)?;
        let mut sizes: Vec<usize> = chain.iter().map(|f| f.source().len()).collect();
        sizes.push(1);
        sizes
    } else {
        Vec::new()
    };
    Ok(NilpotencyReport {
        size: q.len(),
        is_quandle: q.is_quandle(),
        orbit_sizes: q.orbits().class_sizes(),
        inn_order,
        inn_class,
        quandle_class,
        reductive_class,
        weak_class,
        residually_nilpotent: residually_nilpotent(q, opts.cap)?,
        is_reduced: q.is_reduced(),
        covering_chain_lengths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::CayleyGroup;

    const CAP: usize = 10_000;

    fn s3() -> FiniteRack {
        FiniteRack::conj_quandle(&CayleyGroup::symmetric3())
    }

    #[test]
    fn inner_groups() {
        assert_eq!(inn_group(&FiniteRack::trivial(3)).order(CAP).unwrap(), 1);
        assert_eq!(inn_group(&FiniteRack::q_12()).order(CAP).unwrap(), 2);
        let g = inn_group(&FiniteRack::q_mn(2, 2).unwrap());
        assert_eq!(g.order(CAP).unwrap(), 4);
        assert!(g.is_abelian());
    }

    #[test]
    fn classes() {
        assert_eq!(nilpotency_class(&FiniteRack::trivial(3), CAP).unwrap(), Some(1));
        assert_eq!(nilpotency_class(&FiniteRack::q_mn(2, 3).unwrap(), CAP).unwrap(), Some(2));
        assert_eq!(nilpotency_class(&s3(), CAP).unwrap(), None);
    }

    #[test]
    fn reductivity() {
        assert!(is_c_reductive(&FiniteRack::trivial(2), 1));
        let q = FiniteRack::q_mn(2, 3).unwrap();
        assert!(is_c_reductive(&q, 2));
        let w = reductive_witness(&q, 1).unwrap();
        assert_ne!(q.op(w[0], w[1]), w[1]);
        for c in 1..=6 {
            assert!(!is_c_reductive(&s3(), c));
        }
    }

    #[test]
    fn weak_nilpotency() {
        let r = FiniteRack::cyclic_rack(4);
        assert!(is_weakly_c_nilpotent(&r, 1));
        assert!(!FiniteRack::trivial(4).is_empty() && !r.is_trivial());
        assert_eq!(nilpotency_class(&r, CAP).unwrap(), Some(2));
        assert!(is_weakly_c_nilpotent(&FiniteRack::trivial(3), 1));
        let q = FiniteRack::q_mn(2, 2).unwrap();
        let (t, alt) = weak_witness(&q, 1).unwrap();
        assert_ne!(q.op(t[0], t[1]), q.op(alt, t[1]));
    }

    #[test]
    fn universal_quotients() {
        let q = FiniteRack::q_mn(4, 6).unwrap();
        assert_eq!(universal_nilpotent_quotient(&q, 1, CAP).unwrap().0, FiniteRack::trivial(2));
        let (same, c) = universal_nilpotent_quotient(&q, 2, CAP).unwrap();
        assert!(c.is_identity());
        assert_eq!(same, q);
        let (quot, c) = universal_nilpotent_quotient(&s3(), 2, CAP).unwrap();
        // A3 merges the three transpositions and fixes the rest.
        assert_eq!(quot.len(), 4);
        assert_eq!(c.class_sizes().iter().filter(|&&s| s == 3).count(), 1);
    }

    #[test]
    fn chains() {
        let q = FiniteRack::q_mn(2, 3).unwrap();
        let chain = covering_chain(&q, CAP).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain[0].target(), &FiniteRack::trivial(2));
        assert!(chain.iter().all(QuandleMorphism::is_covering));
        assert_eq!(covering_chain(&FiniteRack::trivial(3), CAP).unwrap().len(), 1);
        assert!(matches!(covering_chain(&s3(), CAP), Err(Error::NotNilpotent)));
    }

    #[test]
    fn generation_criterion() {
        let q = FiniteRack::q_mn(2, 3).unwrap();
        assert!(q.generates(&[0, 2]));
        assert!(!q.generates(&[0, 1]));
        assert!(check_generation_criterion(&q));
        // In conj(S3) every transversal happens to generate.
        assert!(check_generation_criterion(&s3()));
        // The dihedral quandle of order 3 is connected but needs two generators.
        let r3 = FiniteRack::dihedral(3);
        assert_eq!(generation_counterexample(&r3, 2), Some(alloc::vec![0]));
    }

    #[test]
    fn residual_nilpotency() {
        assert!(residually_nilpotent(&FiniteRack::q_mn(2, 3).unwrap(), CAP).unwrap());
        assert!(residually_nilpotent(&FiniteRack::trivial(4), CAP).unwrap());
        assert!(!residually_nilpotent(&s3(), CAP).unwrap());
    }

    #[test]
    fn surjectivity() {
        let q = FiniteRack::q_mn(2, 3).unwrap();
        let orbit = FiniteRack::trivial(2);
        let inc = QuandleMorphism::new(orbit, q.clone(), alloc::vec![0, 1]).unwrap();
        assert!(!surjectivity_criterion(&inc, CAP).unwrap());
        assert!(surjectivity_criterion(&q.pi0_projection(), CAP).unwrap());
        let to_s3 = QuandleMorphism::new(FiniteRack::trivial(1), s3(), alloc::vec![0]).unwrap();
        assert_eq!(surjectivity_criterion(&to_s3, CAP), Err(Error::TargetNotNilpotent));
    }

    #[test]
    fn extension_property() {
        let q = FiniteRack::q_mn(2, 4).unwrap();
        assert!(check_extension(&q, 1, CAP).unwrap().holds());
    }

    #[test]
    fn report() {
        let r = analyze(&FiniteRack::q_mn(2, 3).unwrap(), AnalyzeOptions::default()).unwrap();
        assert_eq!(r.inn_order, 6);
        assert_eq!(r.quandle_class, Some(2));
        assert_eq!(r.reductive_class, Some(2));
        assert_eq!(r.weak_class, Some(2));
        assert_eq!(r.orbit_sizes, alloc::vec![2, 3]);
        assert_eq!(r.covering_chain_lengths, alloc::vec![5, 2, 1]);
        let r = analyze(&s3(), AnalyzeOptions::default()).unwrap();
        assert_eq!(r.quandle_class, None);
        assert_eq!(r.reductive_class, None);
        assert!(r.covering_chain_lengths.is_empty());
    }
}
