mod common;

use common::small_corpus;
use nilquandle::catalog::quandles_up_to_iso;
use nilquandle::cayley::small_groups;
use nilquandle::group_model::{build, emit_presentation, from_quandle, validate_data, GroupData};
use nilquandle::rack::find_isomorphism;
use nilquandle::{Error, FiniteRack, Permutation, DEFAULT_ORDER_CAP};
use proptest::prelude::*;

const CAP: usize = DEFAULT_ORDER_CAP;

fn quandles_up_to_six() -> Vec<(String, FiniteRack)> {
    let mut qs: Vec<(String, FiniteRack)> = small_corpus()
        .iter()
        .filter(|(_, q)| q.len() <= 6)
        .cloned()
        .collect();
    qs.extend(quandles_up_to_iso(6).into_iter().enumerate().map(|(k, q)| (format!("size6#{k}"), q)));
    qs
}

#[test]
fn inner_group_data_rebuilds_the_quandle() {
    for (name, q) in quandles_up_to_six() {
        let d = from_quandle(&q, CAP).unwrap();
        assert_eq!(validate_data(&d, false), None, "{name}");
        let built = build(&d, false).unwrap();
        assert!(find_isomorphism(&q, &built.rack).is_some(), "{name}");
    }
}

/// Evaluates a word in `Inn(Q)` with `x_s ↦ (q_s ▷ −)`.
fn eval_in_inn(q: &FiniteRack, gens: &[usize], w: &nilquandle::Word) -> Permutation {
    let mut p = Permutation::identity(q.len());
    for l in w.letters() {
        let row = q.row_perm(gens[l.gen]);
        let row = if l.inverse { row.inverse() } else { row };
        p = p.compose(&row);
    }
    p
}

#[test]
fn presentations_hold_in_the_inner_group() {
    for (name, q) in quandles_up_to_six() {
        let p = match emit_presentation(&q) {
            Ok(p) => p,
            Err(Error::NotGeneratedByTransversal) => continue,
            Err(e) => panic!("{name}: {e}"),
        };
        let orbits = q.orbits().num_classes();
        assert_eq!(p.generators.len(), orbits, "{name}");
        let (free, torsion) = p.abelianization();
        assert_eq!(free, orbits, "{name}");
        assert!(torsion.is_empty(), "{name}");
        for r in &p.relators {
            assert!(eval_in_inn(&q, &p.generators, r).is_identity(), "{name}: {r}");
        }
    }
}

fn arb_group_data() -> impl Strategy<Value = GroupData> {
    let groups = small_groups();
    (0..groups.len()).prop_flat_map(move |k| {
        let g = groups[k].1.clone();
        let order = g.order();
        prop::collection::vec((prop::collection::vec(0..order, 0..=2), 0..order), 1..=2).prop_map(
            move |layout| {
                // Each H is generated by a few random elements.
                let mut hs = Vec::new();
                let mut zs = Vec::new();
                for (gens, z) in layout {
                    let mut h = vec![g.identity()];
                    let mut k = 0;
                    while k < h.len() {
                        for &s in &gens {
                            let y = g.mul(h[k], s);
                            if !h.contains(&y) {
                                h.push(y);
                            }
                        }
                        k += 1;
                    }
                    h.sort_unstable();
                    hs.push(h);
                    zs.push(z);
                }
                GroupData { group: g.clone(), hs, zs }
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn valid_data_builds_valid_racks(d in arb_group_data()) {
        for rack_mode in [false, true] {
            match validate_data(&d, rack_mode) {
                None => {
                    let r = build(&d, rack_mode).unwrap();
                    prop_assert!(FiniteRack::validate(r.rack.rows(), !rack_mode).is_ok());
                    let expected: usize = d.hs.iter().map(|h| d.group.order() / h.len()).sum();
                    prop_assert_eq!(r.rack.len(), expected);
                }
                Some(w) => prop_assert_eq!(build(&d, rack_mode).unwrap_err(), Error::InvalidData(w)),
            }
        }
    }

    #[test]
    fn central_elements_always_give_racks(d in arb_group_data()) {
        // Central z commutes with everything, so the coset rack always exists.
        let g = &d.group;
        let centre: Vec<usize> = (0..g.order())
            .filter(|&z| (0..g.order()).all(|x| g.mul(x, z) == g.mul(z, x)))
            .collect();
        let zs = d.zs.iter().map(|&z| centre[z % centre.len()]).collect();
        let d = GroupData { zs, ..d };
        prop_assert_eq!(validate_data(&d, true), None);
    }
}
