use nilquandle::lattice::{hnf, snf, wedge, wedge_image};
use nilquandle::{IntLattice, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn arb_rows(max_rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), 0..=max_rows)
}

fn arb_matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=4).prop_flat_map(|cols| (Just(cols), arb_rows(5, cols)))
}

fn combination(rows: &[Vec<i64>], coeffs: &[i64], cols: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); cols];
    for (r, c) in rows.iter().zip(coeffs) {
        for j in 0..cols {
            v[j] += BigInt::from(r[j] * c);
        }
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hnf_is_idempotent((cols, rows) in arb_matrix()) {
        let m = IntMatrix::from_rows(cols, &rows).unwrap();
        let h = hnf(&m);
        prop_assert_eq!(hnf(&h), h.clone());
        // Pivots are positive, entries above them reduced.
        let l = IntLattice::from_matrix(&m);
        for (r, &p) in l.pivots().iter().enumerate() {
            let pivot = &h.row(r)[p];
            prop_assert!(pivot.is_positive());
            for above in 0..r {
                let e = &h.row(above)[p];
                prop_assert!(!e.is_negative() && e < pivot);
            }
        }
    }

    #[test]
    fn smith_invariants_form_a_divisor_chain((cols, rows) in arb_matrix()) {
        let m = IntMatrix::from_rows(cols, &rows).unwrap();
        let s = snf(&m);
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert!(s.u.determinant().unwrap().abs().is_one());
        prop_assert!(s.v.determinant().unwrap().abs().is_one());
        for w in s.invariants.windows(2) {
            prop_assert!(w[0].is_positive());
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        let l = IntLattice::from_matrix(&m);
        prop_assert_eq!(s.invariants.len(), l.rank());
        if l.rank() == cols {
            let prod: BigInt = s.invariants.iter().product();
            prop_assert_eq!(Some(prod), l.index());
        }
    }

    #[test]
    fn membership_matches_reduction(
        (cols, rows) in arb_matrix(),
        coeffs in prop::collection::vec(-4i64..=4, 5),
        v in prop::collection::vec(-8i64..=8, 4),
    ) {
        let l = IntLattice::span(cols, &rows).unwrap();
        let inside = combination(&rows, &coeffs, cols);
        prop_assert!(l.member(&inside).unwrap());
        prop_assert!(l.reduce(&inside).unwrap().iter().all(Zero::is_zero));
        let v = big(&v[..cols]);
        let mut extended: Vec<Vec<BigInt>> = rows.iter().map(|r| big(r)).collect();
        extended.push(v.clone());
        let grown = IntLattice::span(cols, &extended).unwrap();
        prop_assert_eq!(l.member(&v).unwrap(), grown == l);
        // Reduction is constant on cosets.
        let shifted: Vec<BigInt> = v.iter().zip(&inside).map(|(a, b)| a + b).collect();
        prop_assert_eq!(l.reduce(&v).unwrap(), l.reduce(&shifted).unwrap());
    }

    #[test]
    fn coset_count_is_the_torsion_product(diag in prop::collection::vec(1i64..=4, 1..=3), mix in -3i64..=3) {
        let n = diag.len();
        let mut rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { diag[i] } else { 0 }).collect())
            .collect();
        // Shear the basis to hide the diagonal form.
        if n > 1 {
            let r0 = rows[0].clone();
            for (x, y) in rows[1].iter_mut().zip(&r0) {
                *x += mix * y;
            }
        }
        let l = IntLattice::span(n, &rows).unwrap();
        let (free, torsion) = l.quotient_invariants();
        prop_assert_eq!(free, 0);
        let prod: BigInt = torsion.iter().product();
        let cosets = l.cosets(1000).unwrap();
        prop_assert_eq!(BigInt::from(cosets.len()), prod);
        for c in &cosets {
            prop_assert_eq!(&l.reduce(c).unwrap(), c);
        }
    }

    #[test]
    fn wedge_image_ignores_the_generating_set(
        n in 2usize..=4,
        extra in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 4),
        unimodular in prop::collection::vec(-2i64..=2, 4),
    ) {
        // H_i = ⟨e_i, extra_i⟩, regenerated by e_i + k·extra_i, extra_i + e_i.
        let mut first = Vec::new();
        let mut second = Vec::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            let x: Vec<i64> = extra[i][..n].to_vec();
            let k = unimodular[i];
            let a: Vec<i64> = e.iter().zip(&x).map(|(p, q)| p + k * q).collect();
            let b: Vec<i64> = x.iter().zip(&a).map(|(p, q)| p + q).collect();
            first.push(IntLattice::span(n, &[e, x.clone()]).unwrap());
            second.push(IntLattice::span(n, &[b, a, x]).unwrap());
        }
        prop_assert_eq!(&first, &second);
        prop_assert_eq!(wedge_image(&first).unwrap(), wedge_image(&second).unwrap());
    }

    #[test]
    fn wedge_is_alternating(g in prop::collection::vec(-5i64..=5, 4), h in prop::collection::vec(-5i64..=5, 4)) {
        let (g, h) = (big(&g), big(&h));
        let gh = wedge(&g, &h);
        let hg: Vec<BigInt> = wedge(&h, &g).into_iter().map(|x| -x).collect();
        prop_assert_eq!(&gh, &hg);
        prop_assert!(wedge(&g, &g).iter().all(Zero::is_zero));
    }
}
