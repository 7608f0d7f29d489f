mod common;

use common::small_corpus;
use nilquandle::nilpotency::{is_c_reductive, nilpotency_class};
use nilquandle::rack::find_isomorphism;
use nilquandle::two_nilpotent::{
    build_quandle, canonical_parameters, enveloping_extension, extract_data, from_parameters,
    isomorphic, LMParameters, OrbitParameters,
};
use nilquandle::{FiniteRack, IntLattice, TwoNilpotentData, DEFAULT_ORDER_CAP};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

const CAP: usize = DEFAULT_ORDER_CAP;

/// Two-nilpotent quandles with at most eight elements.
fn two_nilpotent_examples() -> Vec<(String, FiniteRack)> {
    let mut out: Vec<(String, FiniteRack)> = small_corpus()
        .iter()
        .filter(|(_, q)| nilpotency_class(q, CAP).unwrap().is_some_and(|c| c <= 2))
        .cloned()
        .collect();
    for m in 1..=7 {
        for n in 1..=8 - m {
            out.push((format!("Q_{{{m},{n}}}"), FiniteRack::q_mn(m, n).unwrap()));
        }
    }
    for k in 1..=3 {
        let q = build_quandle(&TwoNilpotentData::q_kk_with_shift(k), CAP).unwrap().rack;
        out.push((format!("shifted Q_{{{k},{k}}}"), q));
    }
    out.retain(|(_, q)| q.len() <= 8);
    out
}

#[test]
fn extract_then_build_is_the_identity() {
    for (name, q) in two_nilpotent_examples() {
        let d = extract_data(&q).unwrap();
        let built = build_quandle(&d, CAP).unwrap();
        assert!(find_isomorphism(&q, &built.rack).is_some(), "{name}");
        assert_eq!(extract_data(&built.rack).map(|e| isomorphic(&e, &d).is_some()), Ok(true), "{name}");
    }
}

#[test]
fn abelianization_has_one_generator_per_orbit() {
    for (name, q) in two_nilpotent_examples() {
        let d = extract_data(&q).unwrap();
        let e = enveloping_extension(&d);
        assert_eq!(e.free_rank, q.orbits().num_classes(), "{name}");
        // Finite orbits make the kernel finite.
        assert_eq!(e.kernel_rank, 0, "{name}");
    }
}

#[test]
fn torsion_table_for_q_mn() {
    for m in 1..=6u64 {
        for n in 1..=6u64 {
            let e = enveloping_extension(&TwoNilpotentData::q_mn(m, n));
            let g = m.gcd(&n);
            let expected: Vec<BigInt> = if g > 1 { vec![g.into()] } else { vec![] };
            assert_eq!(e.torsion, expected, "Q_{{{m},{n}}}");
        }
    }
}

#[test]
fn infinite_orbits_give_free_kernels() {
    let e = enveloping_extension(&TwoNilpotentData::q_mn(0, 0));
    assert_eq!((e.free_rank, e.kernel_rank), (2, 1));
    assert!(e.torsion.is_empty());
    assert!(build_quandle(&TwoNilpotentData::q_mn(0, 3), CAP).is_err());
}

fn arb_data() -> impl Strategy<Value = TwoNilpotentData> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=2), n)
            .prop_map(move |extra| {
                let hs = extra
                    .into_iter()
                    .enumerate()
                    .map(|(i, mut rows)| {
                        let mut e = vec![0i64; n];
                        e[i] = 1;
                        rows.push(e);
                        IntLattice::span(n, &rows).unwrap()
                    })
                    .collect();
                TwoNilpotentData::new(hs).unwrap()
            })
    })
}

fn finite_and_small(d: &TwoNilpotentData, bound: u32) -> bool {
    let sizes = d.orbit_sizes();
    sizes.iter().all(Option::is_some)
        && sizes.iter().map(|s| s.clone().unwrap()).sum::<BigInt>() <= BigInt::from(bound)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn built_quandles_are_two_reductive(d in arb_data()) {
        prop_assume!(finite_and_small(&d, 40));
        let b = build_quandle(&d, CAP).unwrap();
        prop_assert!(b.rack.is_quandle());
        prop_assert!(is_c_reductive(&b.rack, 2));
        prop_assert!(isomorphic(&extract_data(&b.rack).unwrap(), &d).is_some());
    }

    #[test]
    fn parameters_round_trip(d in arb_data()) {
        let p = canonical_parameters(&d);
        prop_assert!(p.validate().is_ok());
        let back = from_parameters(&p).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(canonical_parameters(&back), p);
    }

    #[test]
    fn valid_parameters_round_trip(raw in prop::collection::vec((0i64..=3, prop::collection::vec(0i64..=5, 2)), 3)) {
        // Three orbits: m_1, m_2 and m_{2,1} per orbit, normalised into range.
        let orbits = raw
            .into_iter()
            .map(|(m1, r)| {
                let m2 = r[0];
                let m21 = if m2 == 0 || m1 == 0 { 0 } else { r[1] % m1 };
                OrbitParameters {
                    m: vec![m1.into(), m2.into()],
                    m_kl: vec![vec![], vec![m21.into()]],
                }
            })
            .collect();
        let p = LMParameters { n: 3, orbits };
        prop_assert!(p.validate().is_ok());
        let d = from_parameters(&p).unwrap();
        prop_assert_eq!(canonical_parameters(&d), p);
    }

    #[test]
    fn relabelling_preserves_the_extension(d in arb_data(), swap in any::<bool>()) {
        let n = d.n();
        let mut sigma: Vec<usize> = (0..n).rev().collect();
        if swap && n > 1 {
            sigma = (0..n).map(|i| (i + 1) % n).collect();
        }
        let r = d.relabel(&sigma);
        prop_assert!(isomorphic(&d, &r).is_some());
        let (a, b) = (enveloping_extension(&d), enveloping_extension(&r));
        prop_assert_eq!((a.kernel_rank, a.torsion), (b.kernel_rank, b.torsion));
    }
}
