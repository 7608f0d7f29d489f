#![allow(dead_code)]

use std::sync::OnceLock;

use nilquandle::catalog::corpus;
use nilquandle::FiniteRack;

/// Quandles of size at most five plus the named families.
pub fn small_corpus() -> &'static [(String, FiniteRack)] {
    static C: OnceLock<Vec<(String, FiniteRack)>> = OnceLock::new();
    C.get_or_init(|| corpus(5))
}

/// `small_corpus` restricted to carriers of at most `n` elements.
pub fn up_to(n: usize) -> impl Iterator<Item = &'static (String, FiniteRack)> {
    small_corpus().iter().filter(move |(_, q)| q.len() <= n)
}

/// A few racks that are not quandles.
pub fn racks() -> Vec<(String, FiniteRack)> {
    let mut out: Vec<(String, FiniteRack)> = (1..=5)
        .map(|k| (format!("cyclic_rack({k})"), FiniteRack::cyclic_rack(k)))
        .collect();
    // x ▷ y = σ(y) for a fixed permutation σ.
    let sigma = [1, 0, 3, 4, 2];
    out.push(("perm rack".into(), FiniteRack::from_fn(5, |_, y| sigma[y]).unwrap()));
    out
}
