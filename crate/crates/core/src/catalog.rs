//! Small quandles: exhaustive enumeration and named examples.

use alloc::string::String;
use alloc::vec::Vec;

use crate::cayley::small_groups;
use crate::rack::{find_isomorphism, FiniteRack};
use crate::two_nilpotent::{build_quandle, TwoNilpotentData};

/// Every quandle operation table on `0..n`, isomorphic copies included.
///
/// Rows are chosen one at a time among the permutations fixing their own
/// index, and self-distributivity is checked as soon as the three rows an
/// instance involves are known. Practical up to `n = 5`.
pub fn all_quandle_tables(n: usize) -> Vec<FiniteRack> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
    let perms = permutations(n);
    extend_rows(n, &perms, &mut rows, &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut cur, &mut out);
    out.sort();
    out
}

fn heap_permute(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, cur, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

fn extend_rows(n: usize, perms: &[Vec<usize>], rows: &mut Vec<Vec<usize>>, out: &mut Vec<FiniteRack>) {
    let x = rows.len();
    if x == n {
        out.push(FiniteRack::validate(rows.clone(), true).expect("checked while building"));
        return;
    }
    for p in perms.iter().filter(|p| p[x] == x) {
        rows.push(p.clone());
        if consistent(rows) {
            extend_rows(n, perms, rows, out);
        }
        rows.pop();
    }
}

/// Self-distributivity over all triples whose rows are already fixed.
fn consistent(rows: &[Vec<usize>]) -> bool {
    let k = rows.len();
    let last = k - 1;
    let n = rows[0].len();
    for a in 0..k {
        for b in 0..k {
            if a != last && b != last {
                continue;
            }
            let ab = rows[a][b];
            if ab >= k {
                continue;
            }
            for z in 0..n {
                if rows[a][rows[b][z]] != rows[ab][rows[a][z]] {
                    return false;
                }
            }
        }
    }
    // Triples (a, b) with older rows where a ▷ b is the new row.
    for a in 0..last {
        for b in 0..last {
            if rows[a][b] == last {
                for z in 0..n {
                    if rows[a][rows[b][z]] != rows[last][rows[a][z]] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// One representative of each isomorphism class among `qs`, in order.
pub fn dedup_isomorphic(qs: Vec<FiniteRack>) -> Vec<FiniteRack> {
    let mut reps: Vec<(Vec<usize>, FiniteRack)> = Vec::new();
    for q in qs {
        let key = invariant_key(&q);
        let dup = reps
            .iter()
            .any(|(k, r)| *k == key && find_isomorphism(r, &q).is_some());
        if !dup {
            reps.push((key, q));
        }
    }
    reps.into_iter().map(|(_, q)| q).collect()
}

fn invariant_key(q: &FiniteRack) -> Vec<usize> {
    let mut key = q.orbits().class_sizes();
    key.sort_unstable();
    let mut fixed: Vec<usize> = (0..q.len())
        .map(|x| (0..q.len()).filter(|&y| q.op(x, y) == y).count())
        .collect();
    fixed.sort_unstable();
    key.push(usize::MAX);
    key.extend(fixed);
    key
}

/// The quandles of size `n` up to isomorphism.
pub fn quandles_up_to_iso(n: usize) -> Vec<FiniteRack> {
    dedup_isomorphic(all_quandle_tables(n))
}

/// The three-orbit quandle `Q_{2,2} ⊔ {z}` where `z` shifts both orbits.
pub fn shifted_q22() -> FiniteRack {
    build_quandle(&TwoNilpotentData::q_kk_with_shift(2), 64)
        .expect("finite data")
        .rack
}

/// Named examples: trivial quandles, the `Q_{m,n}` with `m, n ≤ 4`, `Q_{1,2}`,
/// dihedral quandles, the conjugation quandles of all groups of order at most
/// eight and the shifted `Q_{2,2}`.
pub fn named_families() -> Vec<(String, FiniteRack)> {
    let mut out = Vec::new();
    for k in 1..=4 {
        out.push((alloc::format!("trivial({k})"), FiniteRack::trivial(k)));
    }
    for m in 1..=4 {
        for n in 1..=4 {
            out.push((alloc::format!("Q_{{{m},{n}}}"), FiniteRack::q_mn(m, n).expect("positive")));
        }
    }
    out.push(("Q_{1,2}".into(), FiniteRack::q_12()));
    for k in [3, 4, 5] {
        out.push((alloc::format!("dihedral({k})"), FiniteRack::dihedral(k)));
    }
    for (name, g) in small_groups() {
        out.push((alloc::format!("conj({name})"), FiniteRack::conj_quandle(&g)));
    }
    out.push(("shifted Q_{2,2}".into(), shifted_q22()));
    out
}

/// All quandles of size at most `max_size` up to isomorphism, named
/// `size{n}#{k}`, followed by the named families.
pub fn corpus(max_size: usize) -> Vec<(String, FiniteRack)> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        for (k, q) in quandles_up_to_iso(n).into_iter().enumerate() {
            out.push((alloc::format!("size{n}#{k}"), q));
        }
    }
    out.extend(named_families());
    out
}
