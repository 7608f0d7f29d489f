use nilquandle::lie_trace::{
    canonical_rotation, dynkin, is_lie, left_normed_bracket, nested_derivation,
    nested_derivation_trace, non_tame_witness, right_nested_bracket, trace, CyclicWord,
    TangentialDerivation,
};
use nilquandle::tensor::Tensor;
use nilquandle::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

const N: usize = 3;

fn letters(ws: &[usize]) -> Vec<Tensor> {
    ws.iter().map(|&i| Tensor::letter(N, i)).collect()
}

/// Integer combinations of brackets of letters, all of degree `k`.
fn arb_lie(k: usize) -> impl Strategy<Value = Tensor> {
    prop::collection::vec((prop::collection::vec(0..N, k), -3i64..=3, any::<bool>()), 1..=3).prop_map(
        |terms| {
            terms.into_iter().fold(Tensor::zero(N), |acc, (ws, c, right)| {
                let b = if right {
                    right_nested_bracket(&letters(&ws))
                } else {
                    left_normed_bracket(&letters(&ws))
                };
                acc.add(&b.scale(&BigInt::from(c)))
            })
        },
    )
}

fn arb_derivation(k: usize) -> impl Strategy<Value = TangentialDerivation> {
    prop::collection::vec(arb_lie(k), N).prop_map(move |ls| TangentialDerivation::new(N, k, ls).unwrap())
}

/// `Σᵢ cyc(lᵢ) − cyc(the words of lᵢ beginning with Xᵢ)`: expanding
/// `[Xᵢ, lᵢ] = Xᵢlᵢ − lᵢXᵢ` and contracting the leading `Xᵢ` by hand.
fn trace_by_expansion(d: &TangentialDerivation) -> CyclicWord {
    let k = d.degree();
    let mut out = CyclicWord::zero(N, k);
    for (i, l) in d.ls().iter().enumerate() {
        out = out.add(&CyclicWord::project(l, k));
        for (w, c) in l.terms() {
            if w.first() == Some(&(i as u8)) {
                let w: Vec<usize> = w.iter().map(|&x| x as usize).collect();
                out = out.add(&CyclicWord::from_word(N, &w, -c));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn brackets_pass_the_dynkin_test(k in 1usize..=5, seed in any::<u64>()) {
        let ws: Vec<usize> = (0..k).map(|j| (seed >> (2 * j)) as usize % N).collect();
        let r = right_nested_bracket(&letters(&ws));
        let l = left_normed_bracket(&letters(&ws));
        prop_assert!(is_lie(&r) && is_lie(&l));
        prop_assert_eq!(dynkin(&r), r.scale(&BigInt::from(k)));
    }

    #[test]
    fn combinations_of_brackets_are_lie(u in (1usize..=4).prop_flat_map(arb_lie)) {
        prop_assert!(is_lie(&u));
    }

    #[test]
    fn single_words_are_not_lie(ws in prop::collection::vec(0..N, 2..=5), c in 1i64..=4) {
        let t = Tensor::word(N, &ws).scale(&BigInt::from(c));
        prop_assert!(!is_lie(&t));
    }

    #[test]
    fn rotation_preserves_the_class(ws in prop::collection::vec(0..N, 1..=6), r in 0usize..6) {
        let r = r % ws.len();
        let mut rotated = ws[r..].to_vec();
        rotated.extend_from_slice(&ws[..r]);
        let a = CyclicWord::from_word(N, &ws, BigInt::from(1));
        let b = CyclicWord::from_word(N, &rotated, BigInt::from(1));
        prop_assert_eq!(&a, &b);
        let bytes: Vec<u8> = ws.iter().map(|&x| x as u8).collect();
        let canon = canonical_rotation(&bytes);
        prop_assert!(canon <= bytes);
        prop_assert_eq!(a.coeff(&rotated), BigInt::from(1));
    }

    #[test]
    fn trace_is_additive(d1 in arb_derivation(3), d2 in arb_derivation(3), s in -3i64..=3) {
        let sum = d1.add(&d2).unwrap();
        prop_assert_eq!(trace(&sum), trace(&d1).add(&trace(&d2)));
        let scaled = d1.scale(&BigInt::from(s));
        let mut expected = CyclicWord::zero(N, 3);
        for _ in 0..s.unsigned_abs() {
            expected = expected.add(&trace(&d1));
        }
        if s < 0 {
            let neg = expected.clone();
            expected = CyclicWord::zero(N, 3);
            for (w, c) in neg.terms() {
                let w: Vec<usize> = w.iter().map(|&x| x as usize).collect();
                expected = expected.add(&CyclicWord::from_word(N, &w, -c));
            }
        }
        prop_assert_eq!(trace(&scaled), expected);
    }

    #[test]
    fn trace_matches_expansion(d in (1usize..=4).prop_flat_map(arb_derivation)) {
        prop_assert_eq!(trace(&d), trace_by_expansion(&d));
    }
}

#[test]
fn nested_derivations_follow_the_closed_form() {
    for n in 2..=3 {
        for i in 0..n {
            let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            for l in 1..=3u32 {
                for code in 0..others.len().pow(l) {
                    let idx: Vec<usize> = (0..l)
                        .map(|p| others[code / others.len().pow(p) % others.len()])
                        .collect();
                    let d = nested_derivation(n, i, &idx).unwrap();
                    assert_eq!(trace(&d), nested_derivation_trace(n, i, &idx), "{n} {i} {idx:?}");
                }
            }
        }
    }
}

#[test]
fn worked_example() {
    let a = Tensor::letter(2, 0);
    let b = Tensor::letter(2, 1);
    let d = TangentialDerivation::new(2, 2, vec![b.bracket(&a), Tensor::zero(2)]).unwrap();
    assert_eq!(d.image(0).to_string(), "-X1X1X2 + 2X1X2X1 - X2X1X1");
    let t = trace(&d);
    assert_eq!(t.coeff(&[1, 0]), BigInt::from(1));
    assert_eq!(t.terms().len(), 1);
}

#[test]
fn non_tame_witnesses() {
    for n in 2..=4 {
        for c in 3..=5 {
            let (d, t) = non_tame_witness(n, c).unwrap();
            assert_eq!(d.degree(), c - 1);
            assert_eq!(trace(&d), t);
            assert_eq!(t.terms().len(), 1);
            assert_eq!(t.terms().values().next(), Some(&BigInt::from(1)));
        }
    }
    assert!(matches!(non_tame_witness(2, 2), Err(Error::InvalidRange(_))));
    assert!(matches!(non_tame_witness(1, 4), Err(Error::InvalidRange(_))));
}

#[test]
fn non_lie_images_are_rejected() {
    let x1x2 = Tensor::word(2, &[0, 1]);
    assert_eq!(TangentialDerivation::new(2, 2, vec![x1x2, Tensor::zero(2)]), Err(Error::NotLie));
}
