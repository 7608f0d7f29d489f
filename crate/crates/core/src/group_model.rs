//! Racks and quandles from groups, and presentations of enveloping groups.
//!
//! Given a group `G`, subgroups `Hᵢ` and elements `zᵢ`, the set `⊔ᵢ G/Hᵢ`
//! carries the law `xHᵢ ▷ yHⱼ = x zᵢ x⁻¹ y Hⱼ` as soon as each `Hᵢ` commutes
//! with `zᵢ` in its action on every `G/Hⱼ`. The result is a quandle when
//! moreover `zᵢ ∈ Hᵢ`, and a rack otherwise. Groups are given by Cayley
//! tables, so the action of `G` need not be faithful.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cayley::CayleyGroup;
use crate::error::{DataWitness, Error, Result};
use crate::lattice::{IntLattice, IntMatrix};
use crate::nilpotency::inn_group;
use crate::rack::FiniteRack;
use crate::words::{Letter, Word};

/// A group with a family of subgroups `Hᵢ` (as element lists) and elements `zᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupData {
    pub group: CayleyGroup,
    pub hs: Vec<Vec<usize>>,
    pub zs: Vec<usize>,
}

/// First violated condition, or `None` when `d` defines a quandle (or a rack
/// in `rack_mode`).
pub fn validate_data(d: &GroupData, rack_mode: bool) -> Option<DataWitness> {
    let g = &d.group;
    if d.hs.len() != d.zs.len() {
        return Some(DataWitness::LengthMismatch {
            subgroups: d.hs.len(),
            elements: d.zs.len(),
        });
    }
    let out_of_range = d.zs.iter().chain(d.hs.iter().flatten()).find(|&&x| x >= g.order());
    if let Some(&value) = out_of_range {
        return Some(DataWitness::ElementOutOfRange { value });
    }
    for (i, h) in d.hs.iter().enumerate() {
        if !g.is_subgroup(h) {
            return Some(DataWitness::NotSubgroup { index: i });
        }
    }
    let members: Vec<Vec<bool>> = d
        .hs
        .iter()
        .map(|h| {
            let mut m = alloc::vec![false; g.order()];
            for &x in h {
                m[x] = true;
            }
            m
        })
        .collect();
    for (i, h) in d.hs.iter().enumerate() {
        let z = d.zs[i];
        for &x in h {
            for (j, hj) in members.iter().enumerate() {
                for t in 0..g.order() {
                    // x z t Hⱼ = z x t Hⱼ  ⇔  (z x t)⁻¹ (x z t) ∈ Hⱼ
                    let a = g.mul(g.mul(x, z), t);
                    let b = g.mul(g.mul(z, x), t);
                    if !hj[g.mul(g.inv(b), a)] {
                        return Some(DataWitness::NonCommuting {
                            index: i,
                            h: x,
                            orbit: j,
                            t,
                        });
                    }
                }
            }
        }
        if !rack_mode && !members[i][z] {
            return Some(DataWitness::NotInSubgroup { index: i });
        }
    }
    None
}

/// A rack built from group data, with the coset behind each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRack {
    pub rack: FiniteRack,
    /// `(i, x)` for the element `x Hᵢ`, `x` the least element of its coset.
    pub cosets: Vec<(usize, usize)>,
}

/// The rack `⊔ᵢ G/Hᵢ` with `xHᵢ ▷ yHⱼ = x zᵢ x⁻¹ y Hⱼ`. Cosets are listed
/// index by index, each ordered by least element.
pub fn build(d: &GroupData, rack_mode: bool) -> Result<CosetRack> {
    if let Some(w) = validate_data(d, rack_mode) {
        return Err(Error::InvalidData(w));
    }
    let g = &d.group;
    let mut cosets = Vec::new();
    let mut index_of: Vec<Vec<usize>> = Vec::new();
    for (i, h) in d.hs.iter().enumerate() {
        let mut idx = alloc::vec![0; g.order()];
        for c in g.left_cosets(h) {
            for &y in &c {
                idx[y] = cosets.len();
            }
            cosets.push((i, c[0]));
        }
        index_of.push(idx);
    }
    let table = cosets
        .iter()
        .map(|&(i, x)| {
            let act = g.conj(x, d.zs[i]);
            cosets
                .iter()
                .map(|&(j, y)| index_of[j][g.mul(act, y)])
                .collect()
        })
        .collect();
    let rack = FiniteRack::validate(table, !rack_mode)?;
    Ok(CosetRack { rack, cosets })
}

/// The data `(Inn Q, Stab(qᵢ), qᵢ ▷ −)` for orbit representatives `qᵢ`,
/// chosen as least elements. Building it returns a quandle isomorphic to `Q`.
pub fn from_quandle(q: &FiniteRack, cap: usize) -> Result<GroupData> {
    q.require_quandle()?;
    let inn = inn_group(q);
    let group = CayleyGroup::from_perm_group(&inn, cap)?;
    let elems: Vec<_> = inn.enumerate(cap)?.iter().cloned().collect();
    let reps: Vec<usize> = q.orbits().classes().iter().map(|c| c[0]).collect();
    let hs = reps
        .iter()
        .map(|&r| (0..elems.len()).filter(|&k| elems[k].apply(r) == r).collect())
        .collect();
    let zs = reps
        .iter()
        .map(|&r| {
            let row = q.row_perm(r);
            elems.iter().position(|p| *p == row).expect("rows lie in Inn(Q)")
        })
        .collect();
    Ok(GroupData { group, hs, zs })
}

/// A presentation `⟨x₁, …, x_k | [h, x_s] = 1⟩` of an enveloping group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationData {
    /// Orbit representatives `q_s`, one generator `x_s` each.
    pub generators: Vec<usize>,
    pub relators: Vec<Word>,
}

impl PresentationData {
    /// Free rank and torsion of the abelianisation.
    pub fn abelianization(&self) -> (usize, Vec<BigInt>) {
        let k = self.generators.len();
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|w| w.exponent_sums(k)).collect();
        let m = IntMatrix::from_rows(k, &rows).expect("exponent vectors");
        IntLattice::from_matrix(&m).quotient_invariants()
    }
}

/// The presentation `G(Q) ≅ ⟨x_s | [H_s, x_s] = 1⟩`, where `x_s` runs over
/// orbit representatives and `H_s` is the stabilizer of `q_s` in the free
/// group acting through `x_t ↦ (q_t ▷ −)`. Each `H_s` has finite index, so
/// its Schreier generators along a breadth-first spanning tree of the orbit
/// generate it.
pub fn emit_presentation(q: &FiniteRack) -> Result<PresentationData> {
    q.require_quandle()?;
    let reps: Vec<usize> = q.orbits().classes().iter().map(|c| c[0]).collect();
    if !q.generates(&reps) {
        return Err(Error::NotGeneratedByTransversal);
    }
    let mut relators = Vec::new();
    let mut seen = BTreeSet::new();
    for (s, &root) in reps.iter().enumerate() {
        let xs = Word::gen(s);
        // tree[y] = u with u · q_s = y.
        let mut tree: Vec<Option<Word>> = alloc::vec![None; q.len()];
        tree[root] = Some(Word::empty());
        let mut queue = alloc::vec![root];
        let mut k = 0;
        while k < queue.len() {
            let y = queue[k];
            k += 1;
            let uy = tree[y].clone().unwrap();
            for (t, &qt) in reps.iter().enumerate() {
                let z = q.op(qt, y);
                let path = Word::from_letters([Letter::new(t, false)]).mul(&uy);
                match &tree[z] {
                    None => {
                        tree[z] = Some(path);
                        queue.push(z);
                    }
                    Some(uz) => {
                        let h = uz.inverse().mul(&path);
                        let r = Word::commutator(&h, &xs);
                        if !r.is_empty() && seen.insert(r.clone()) {
                            relators.push(r);
                        }
                    }
                }
            }
        }
    }
    Ok(PresentationData {
        generators: reps,
        relators,
    })
}
