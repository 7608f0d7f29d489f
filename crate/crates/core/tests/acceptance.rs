//! Acceptance checks, one line per criterion. Exits nonzero if any fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nilquandle::catalog::corpus;
use nilquandle::cayley::CayleyGroup;
use nilquandle::lie_trace::{
    nested_derivation, nested_derivation_trace, non_tame_witness, trace, CyclicWord,
    TangentialDerivation,
};
use nilquandle::magnus::{check_free_2nilp_is_q00, embed_word};
use nilquandle::nilpotency::{
    covering_chain, generation_counterexample, check_generation_criterion, is_c_reductive,
    nilpotency_class,
};
use nilquandle::rack::find_isomorphism;
use nilquandle::tensor::Tensor;
use nilquandle::two_nilpotent::{
    build_quandle, enveloping_extension, extract_data, is_injective_2nilp,
};
use nilquandle::welded::{gamma_c_acts_trivially, Mode};
use nilquandle::words::{Letter, Word};
use nilquandle::{Error, FiniteRack, TwoNilpotentData};

const CAP: usize = 100_000;

type Outcome = Result<String, String>;

fn s3() -> FiniteRack {
    FiniteRack::conj_quandle(&CayleyGroup::symmetric3())
}

fn reductivity_matches_class() -> Outcome {
    let qs = corpus(4);
    let mut checks = 0;
    for (name, q) in &qs {
        let class = nilpotency_class(q, CAP).map_err(|e| format!("{name}: {e}"))?;
        for c in 1..=4 {
            let lhs = is_c_reductive(q, c);
            let rhs = class.is_some_and(|k| k <= c);
            if lhs != rhs {
                return Err(format!("{name}, c = {c}: reductive {lhs}, class {class:?}"));
            }
            checks += 1;
        }
    }
    Ok(format!("{} quandles, {checks} comparisons, no exceptions", qs.len()))
}

fn q_mn_torsion() -> Outcome {
    for m in 1..=6u64 {
        for n in 1..=6u64 {
            let e = enveloping_extension(&TwoNilpotentData::q_mn(m, n));
            let g = m.gcd(&n);
            let expected: Vec<BigInt> = if g > 1 { vec![BigInt::from(g)] } else { vec![] };
            if e.free_rank != 2 || e.kernel_rank != 0 || e.torsion != expected {
                return Err(format!(
                    "Q_{{{m},{n}}}: rank {}, kernel rank {}, torsion {:?}",
                    e.free_rank, e.kernel_rank, e.torsion
                ));
            }
        }
    }
    Ok("free rank 2 and torsion [gcd(m,n)] for 1 <= m,n <= 6".into())
}

fn q_mn_injectivity() -> Outcome {
    for m in 1..=5u64 {
        for n in 1..=5u64 {
            let inj = is_injective_2nilp(&TwoNilpotentData::q_mn(m, n), CAP).map_err(|e| e.to_string())?;
            if inj != (m == n) {
                return Err(format!("Q_{{{m},{n}}}: injective = {inj}"));
            }
        }
    }
    Ok("injective exactly on the diagonal for 1 <= m,n <= 5".into())
}

fn three_orbit_example() -> Outcome {
    let d = TwoNilpotentData::q_kk_with_shift(2);
    let e = enveloping_extension(&d);
    if e.free_rank != 3 || !e.is_abelian() {
        return Err(format!("three-orbit quandle: {:?} {:?}", e.kernel_rank, e.torsion));
    }
    let built = build_quandle(&d, CAP).map_err(|e| e.to_string())?;
    let elems: Vec<usize> = (0..built.rack.len()).filter(|&x| built.orbit_of[x] < 2).collect();
    let sub = built.rack.subrack(&elems).map_err(|e| e.to_string())?;
    if find_isomorphism(&sub, &FiniteRack::q_mn(2, 2).unwrap()).is_none() {
        return Err("two-orbit subquandle is not Q_{2,2}".into());
    }
    let sub_ext = enveloping_extension(&extract_data(&sub).map_err(|e| e.to_string())?);
    if sub_ext.torsion != vec![BigInt::from(2)] {
        return Err(format!("subquandle torsion {:?}", sub_ext.torsion));
    }
    Ok("G(Q) = Z^3 with no torsion; its Q_{2,2} has torsion [2]".into())
}

fn covering_chains() -> Outcome {
    let mut count = 0;
    for (name, q) in corpus(4) {
        if nilpotency_class(&q, CAP).unwrap().is_none() {
            continue;
        }
        let chain = covering_chain(&q, CAP).map_err(|e| format!("{name}: {e}"))?;
        if chain.iter().any(|f| !f.is_covering()) {
            return Err(format!("{name}: an arrow is not a covering"));
        }
        let mut total = chain[0].clone();
        for f in &chain[1..] {
            total = total.then(f).map_err(|e| format!("{name}: {e}"))?;
        }
        if total.source() != &q || total.target().len() != 1 || !total.is_surjective() {
            return Err(format!("{name}: chain does not compose to Q -> *"));
        }
        count += 1;
    }
    match covering_chain(&s3(), CAP) {
        Err(Error::NotNilpotent) => {}
        other => return Err(format!("conj(S3): expected NotNilpotent, got {other:?}")),
    }
    Ok(format!("{count} nilpotent quandles; conj(S3) rejected as not nilpotent"))
}

fn welded_action_matches_class() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checks = 0;
    for (name, q) in corpus(4).into_iter().filter(|(_, q)| q.len() <= 4) {
        let class = nilpotency_class(&q, CAP).unwrap();
        for c in 1..=3 {
            let r = gamma_c_acts_trivially(&q, c + 1, c, Mode::Exhaustive, 100_000, &mut rng)
                .map_err(|e| format!("{name}: {e}"))?;
            let expected = class.is_some_and(|k| k <= c);
            if r.trivial != expected {
                return Err(format!("{name}, c = {c}: trivial = {}, class {class:?}", r.trivial));
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} (quandle, c) pairs agree"))
}

fn trace_witness() -> Outcome {
    let a = Tensor::letter(2, 0);
    let b = Tensor::letter(2, 1);
    // A ↦ [[A,B],A] = [A, l_A] with l_A = [B,A]; B ↦ 0.
    let d = TangentialDerivation::new(2, 2, vec![b.bracket(&a), Tensor::zero(2)]).map_err(|e| e.to_string())?;
    if d.image(0) != a.bracket(&b).bracket(&a) {
        return Err("derivation image differs from [[A,B],A]".into());
    }
    let ba = CyclicWord::from_word(2, &[1, 0], BigInt::from(1));
    if trace(&d) != ba {
        return Err(format!("trace = {}", trace(&d)));
    }
    let mut tuples = 0;
    let mut odd_unsigned = true;
    for n in 2..=3 {
        for i in 0..n {
            let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            for l in 1..=3u32 {
                for code in 0..others.len().pow(l) {
                    let idx: Vec<usize> = (0..l as usize)
                        .map(|p| others[code / others.len().pow(p as u32) % others.len()])
                        .collect();
                    let d = nested_derivation(n, i, &idx).map_err(|e| e.to_string())?;
                    let tr = trace(&d);
                    if tr != nested_derivation_trace(n, i, &idx) {
                        return Err(format!("n = {n}, i = {i}, indices {idx:?}: trace {tr}"));
                    }
                    let mut w: Vec<usize> = idx.iter().rev().copied().collect();
                    w.push(i);
                    if l % 2 == 1 {
                        odd_unsigned &= tr == CyclicWord::from_word(n, &w, BigInt::from(1));
                    }
                    tuples += 1;
                }
            }
        }
    }
    if !odd_unsigned {
        return Err("closed form fails for odd l".into());
    }
    if !matches!(non_tame_witness(2, 2), Err(Error::InvalidRange(_))) {
        return Err("non_tame_witness(2,2) was not rejected".into());
    }
    Ok(format!(
        "Tr = [BA]; closed form (-1)^(l+1) x_il..x_i1 x_i on {tuples} index tuples \
         (unsigned form exact for odd l); c = 2 rejected"
    ))
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Word {
    let len = (rng.next_u32() as usize) % (max_len + 1);
    Word::from_letters((0..len).map(|_| {
        let r = rng.next_u32() as usize;
        Letter::new(r % n, (r / n) % 2 == 1)
    }))
}

fn magnus_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let u = random_word(&mut rng, 2, 8);
        let v = random_word(&mut rng, 2, 8);
        let eu = embed_word(&u, 2, 4).unwrap();
        let ev = embed_word(&v, 2, 4).unwrap();
        if embed_word(&u.mul(&v), 2, 4).unwrap() != eu.mul(&ev).unwrap() {
            return Err(format!("product fails for {u} and {v}"));
        }
        if embed_word(&u.inverse(), 2, 4).unwrap() != eu.inv().unwrap() {
            return Err(format!("inverse fails for {u}"));
        }
    }
    let x1 = Word::gen(0);
    let x2 = Word::gen(1);
    let c = Word::commutator(&x1, &Word::commutator(&x2, &x1));
    let weight = embed_word(&c, 2, 4).unwrap().gamma_weight();
    if weight != 3 {
        return Err(format!("gamma_weight([x1,[x2,x1]]) = {weight}"));
    }
    if !check_free_2nilp_is_q00(4) {
        return Err("free 2-nilpotent quandle differs from Q_{0,0} on the radius-4 ball".into());
    }
    Ok("1000 random pairs; weight of [x1,[x2,x1]] is 3; Q_{0,0} matches on radius 4".into())
}

fn generation_criterion() -> Outcome {
    let mut exhaustive = 0;
    let mut bounded = 0;
    for (name, q) in corpus(4) {
        if nilpotency_class(&q, CAP).unwrap().is_none() {
            continue;
        }
        if q.len() <= 5 {
            if let Some(s) = generation_counterexample(&q, q.len()) {
                return Err(format!("{name}: subset {s:?}"));
            }
            exhaustive += 1;
        } else {
            if !check_generation_criterion(&q) {
                return Err(format!("{name}: criterion fails"));
            }
            bounded += 1;
        }
    }
    Ok(format!("{exhaustive} quandles over all subsets, {bounded} larger ones over small subsets"))
}

fn reduced_quotients() -> Outcome {
    for (name, q) in corpus(4) {
        let (r, _) = q.reduced_quotient().map_err(|e| format!("{name}: {e}"))?;
        let (rr, cong) = r.reduced_quotient().map_err(|e| format!("{name}: {e}"))?;
        if !cong.is_identity() || rr != r || !r.is_reduced() {
            return Err(format!("{name}: R(R(Q)) != R(Q)"));
        }
    }
    for m in 1..=4 {
        for n in 1..=4 {
            if !FiniteRack::q_mn(m, n).unwrap().is_reduced() {
                return Err(format!("Q_{{{m},{n}}} is not reduced"));
            }
        }
    }
    let s3 = s3();
    let w = s3.reduced_witness();
    if s3.is_reduced() || w.is_none() {
        return Err("conj(S3) reported reduced".into());
    }
    Ok(format!("R idempotent on the corpus; Q_{{m,n}} reduced; conj(S3) not, witness {:?}", w.unwrap()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 10] = [
        ("reductivity <=> nilpotency", reductivity_matches_class, Duration::from_secs(60)),
        ("G(Q_{m,n}) torsion table", q_mn_torsion, Duration::from_secs(1)),
        ("injectivity in the Q_{m,n} family", q_mn_injectivity, Duration::from_secs(5)),
        ("three-orbit cross-check", three_orbit_example, Duration::from_secs(5)),
        ("covering chains", covering_chains, Duration::MAX),
        ("welded braid action", welded_action_matches_class, Duration::from_secs(120)),
        ("trace witness", trace_witness, Duration::MAX),
        ("Magnus soundness", magnus_soundness, Duration::MAX),
        ("generation criterion", generation_criterion, Duration::MAX),
        ("reduced quotient", reduced_quotients, Duration::MAX),
    ];
    let mut failures = 0;
    for (k, (title, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.2?}, limit {limit:?}")),
            Err(d) => ("FAIL", d),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("criterion {:>2} {status} {title}: {detail} ({elapsed:.2?})", k + 1);
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
