//! 2-nilpotent quandles as families of lattices.
//!
//! A 2-nilpotent quandle with orbits indexed by `0..n` is determined by
//! subgroups `H₀, …, H_{n−1}` of `ℤⁿ` with `eᵢ ∈ Hᵢ`: the quandle is
//! `⊔ᵢ ℤⁿ/Hᵢ` with `x ▷ y = y + eᵢ` for `x` in the `i`-th orbit. Two such
//! families give isomorphic quandles exactly when a permutation of the basis
//! carries one onto the other. The enveloping group is a central extension
//! of `ℤⁿ` by `Λ²(ℤⁿ) / Σᵢ eᵢ ∧ Hᵢ`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{unit, wedge, wedge_image, IntLattice, IntMatrix};
use crate::rack::FiniteRack;

/// Stabilizer lattices `Hᵢ ⊆ ℤⁿ`, one per orbit, with `eᵢ ∈ Hᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoNilpotentData {
    hs: Vec<IntLattice>,
}

impl TwoNilpotentData {
    pub fn new(hs: Vec<IntLattice>) -> Result<Self> {
        let n = hs.len();
        for (i, h) in hs.iter().enumerate() {
            if h.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: h.dim(),
                });
            }
            if !h.member(&unit(n, i))? {
                return Err(Error::MissingBasisVector { index: i });
            }
        }
        Ok(TwoNilpotentData { hs })
    }

    /// All `Hᵢ = ℤⁿ`: the trivial quandle on `n` points.
    pub fn trivial(n: usize) -> Self {
        TwoNilpotentData {
            hs: (0..n).map(|_| IntLattice::full(n)).collect(),
        }
    }

    /// `H₀ = ⟨e₀, m e₁⟩`, `H₁ = ⟨n e₀, e₁⟩`, the data of `Q_{m,n}`. Zero
    /// parameters give infinite orbits.
    pub fn q_mn(m: u64, n: u64) -> Self {
        let h0 = IntLattice::span(2, &[alloc::vec![1u64, 0], alloc::vec![0, m]]).unwrap();
        let h1 = IntLattice::span(2, &[alloc::vec![n, 0u64], alloc::vec![0, 1]]).unwrap();
        TwoNilpotentData { hs: alloc::vec![h0, h1] }
    }

    /// `H₀ = ⟨e₀, k e₁, e₁ − e₂⟩`, `H₁ = ⟨k e₀, e₁, e₀ − e₂⟩`, `H₂ = ℤ³`: the
    /// quandle `Q_{k,k} ⊔ {z}` where `z` shifts both orbits of `Q_{k,k}` and
    /// is fixed by everything.
    pub fn q_kk_with_shift(k: i64) -> Self {
        let h0 = IntLattice::span(
            3,
            &[alloc::vec![1i64, 0, 0], alloc::vec![0, k, 0], alloc::vec![0, 1, -1]],
        )
        .unwrap();
        let h1 = IntLattice::span(
            3,
            &[alloc::vec![k, 0i64, 0], alloc::vec![0, 1, 0], alloc::vec![1, 0, -1]],
        )
        .unwrap();
        TwoNilpotentData {
            hs: alloc::vec![h0, h1, IntLattice::full(3)],
        }
    }

    pub fn n(&self) -> usize {
        self.hs.len()
    }

    pub fn hs(&self) -> &[IntLattice] {
        &self.hs
    }

    /// Orbit sizes `[ℤⁿ : Hᵢ]`, `None` for infinite orbits.
    pub fn orbit_sizes(&self) -> Vec<Option<BigInt>> {
        self.hs.iter().map(IntLattice::index).collect()
    }

    /// The same data after relabelling orbit `i` as `σ(i)`.
    pub fn relabel(&self, sigma: &[usize]) -> TwoNilpotentData {
        let mut hs = alloc::vec![IntLattice::zero(0); self.n()];
        for (i, h) in self.hs.iter().enumerate() {
            hs[sigma[i]] = h.permute_coordinates(sigma);
        }
        TwoNilpotentData { hs }
    }
}

/// A quandle built from lattice data, with the coset behind each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltQuandle {
    pub rack: FiniteRack,
    /// Orbit index of each element.
    pub orbit_of: Vec<usize>,
    /// Canonical coset representative of each element.
    pub reps: Vec<Vec<BigInt>>,
}

/// `⊔ᵢ ℤⁿ/Hᵢ` with `x ▷ y = y + eᵢ` for `x` in orbit `i`. Elements are listed
/// orbit by orbit, each orbit in lexicographic order of representatives.
pub fn build_quandle(d: &TwoNilpotentData, cap: usize) -> Result<BuiltQuandle> {
    let n = d.n();
    let mut orbit_of = Vec::new();
    let mut reps = Vec::new();
    let mut offsets = Vec::with_capacity(n);
    for (i, h) in d.hs.iter().enumerate() {
        if h.rank() < n {
            return Err(Error::InfiniteOrbit { orbit: i });
        }
        let cs = h.cosets(cap)?;
        if reps.len() + cs.len() > cap {
            return Err(Error::CapExceeded { cap });
        }
        offsets.push(reps.len());
        orbit_of.extend(core::iter::repeat_n(i, cs.len()));
        reps.extend(cs);
    }
    let index_in_orbit = |j: usize, v: &[BigInt]| -> usize {
        // Representatives are enumerated in mixed radix over the pivots.
        let h = &d.hs[j];
        let mut idx = 0usize;
        for (k, x) in v.iter().enumerate() {
            let base = h.basis()[(k, k)].to_usize().unwrap();
            idx = idx * base + x.to_usize().unwrap();
        }
        idx
    };
    let total = reps.len();
    let mut table = alloc::vec![alloc::vec![0; total]; total];
    for x in 0..total {
        let i = orbit_of[x];
        for y in 0..total {
            let j = orbit_of[y];
            let mut v = reps[y].clone();
            v[i] += 1;
            let v = d.hs[j].reduce(&v)?;
            table[x][y] = offsets[j] + index_in_orbit(j, &v);
        }
    }
    let rack = FiniteRack::validate(table, true)?;
    Ok(BuiltQuandle {
        rack,
        orbit_of,
        reps,
    })
}

/// Recovers the lattice data of a 2-nilpotent quandle. Orbits are numbered
/// by least element and `Hᵢ` is the stabilizer of the least element of the
/// `i`-th orbit under `eⱼ ↦ (qⱼ ▷ −)`.
pub fn extract_data(q: &FiniteRack) -> Result<TwoNilpotentData> {
    Ok(extract_data_with_labels(q)?.0)
}

/// As [`extract_data`], also returning for each element a vector `v` with
/// `v · qᵢ` equal to that element, `qᵢ` the base point of its orbit.
pub fn extract_data_with_labels(q: &FiniteRack) -> Result<(TwoNilpotentData, Vec<Vec<BigInt>>)> {
    q.require_quandle()?;
    let size = q.len();
    for x in 0..size {
        for y in x + 1..size {
            if (0..size).any(|z| q.op(x, q.op(y, z)) != q.op(y, q.op(x, z))) {
                return Err(Error::NotTwoNilpotent(x, y));
            }
        }
    }
    let orbits = q.orbits();
    let classes = orbits.classes();
    let n = classes.len();
    let base: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let mut labels: Vec<Option<Vec<BigInt>>> = alloc::vec![None; size];
    let mut hs = Vec::with_capacity(n);
    for &root in &base {
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        labels[root] = Some(alloc::vec![BigInt::zero(); n]);
        let mut queue = alloc::vec![root];
        let mut k = 0;
        while k < queue.len() {
            let y = queue[k];
            k += 1;
            let ly = labels[y].clone().unwrap();
            for (j, &qj) in base.iter().enumerate() {
                let z = q.op(qj, y);
                let mut lz = ly.clone();
                lz[j] += 1;
                match &labels[z] {
                    None => {
                        labels[z] = Some(lz);
                        queue.push(z);
                    }
                    Some(old) => {
                        let diff: Vec<BigInt> = lz.iter().zip(old).map(|(a, b)| a - b).collect();
                        if diff.iter().any(|x| !x.is_zero()) {
                            gens.push(diff);
                        }
                    }
                }
            }
        }
        hs.push(IntLattice::span(n, &gens)?);
    }
    let labels = labels.into_iter().map(Option::unwrap).collect();
    Ok((TwoNilpotentData::new(hs)?, labels))
}

/// Canonical parameters of one orbit's lattice `Hᵢ`.
///
/// With `ēₖ = e_{i+k}` (indices mod `n`), the image of `Hᵢ` in `ℤⁿ/eᵢ` has
/// the basis `m_k ē_k + Σ_{l<k} m_{k,l} ē_l` over those `k` with `m_k ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitParameters {
    /// `m[k−1] = m_k` for `k = 1..n−1`.
    pub m: Vec<BigInt>,
    /// `m_kl[k−1][l−1] = m_{k,l}` for `1 ≤ l < k`.
    pub m_kl: Vec<Vec<BigInt>>,
}

/// Parameters of every orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LMParameters {
    pub n: usize,
    pub orbits: Vec<OrbitParameters>,
}

impl LMParameters {
    /// Checks `m_k ≥ 0`, `0 ≤ m_{k,l} < m_l` when `m_l ≠ 0`, and
    /// `m_{k,l} = 0` when `m_k = 0`.
    pub fn validate(&self) -> Result<()> {
        let bad = |s: &str| Err(Error::InvalidParameters(s.into()));
        if self.orbits.len() != self.n {
            return bad("one parameter set per orbit is required");
        }
        let k_max = self.n.saturating_sub(1);
        for p in &self.orbits {
            if p.m.len() != k_max || p.m_kl.len() != k_max {
                return bad("m_k must be given for k = 1..n-1");
            }
            for k in 1..=k_max {
                if p.m[k - 1].is_negative() {
                    return bad("m_k must be nonnegative");
                }
                if p.m_kl[k - 1].len() != k - 1 {
                    return bad("m_{k,l} must be given for l = 1..k-1");
                }
                for l in 1..k {
                    let v = &p.m_kl[k - 1][l - 1];
                    if p.m[k - 1].is_zero() && !v.is_zero() {
                        return bad("m_{k,l} must vanish when m_k = 0");
                    }
                    let ml = &p.m[l - 1];
                    if !ml.is_zero() && (v.is_negative() || v >= ml) {
                        return bad("m_{k,l} must lie in [0, m_l)");
                    }
                }
            }
        }
        Ok(())
    }
}

/// Column of `e_{i+k}` when `ℤⁿ/eᵢ` is written in the order
/// `e_{i+n−1}, …, e_{i+1}`, which turns the filtration into row echelon form.
fn param_col(n: usize, k: usize) -> usize {
    n - 1 - k
}

pub fn canonical_parameters(d: &TwoNilpotentData) -> LMParameters {
    let n = d.n();
    let k_max = n.saturating_sub(1);
    let orbits = d
        .hs
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let rows: Vec<Vec<BigInt>> = (0..h.rank())
                .map(|r| {
                    (0..k_max)
                        .map(|c| h.basis()[(r, (i + n - 1 - c) % n)].clone())
                        .collect()
                })
                .collect();
            let proj = IntLattice::span(k_max, &rows).expect("rows have n−1 entries");
            let mut m = alloc::vec![BigInt::zero(); k_max];
            let mut m_kl: Vec<Vec<BigInt>> =
                (1..=k_max).map(|k| alloc::vec![BigInt::zero(); k - 1]).collect();
            for (r, &p) in proj.pivots().iter().enumerate() {
                let k = n - 1 - p;
                m[k - 1] = proj.basis()[(r, p)].clone();
                for l in 1..k {
                    m_kl[k - 1][l - 1] = proj.basis()[(r, param_col(n, l))].clone();
                }
            }
            OrbitParameters { m, m_kl }
        })
        .collect();
    LMParameters { n, orbits }
}

pub fn from_parameters(p: &LMParameters) -> Result<TwoNilpotentData> {
    p.validate()?;
    let n = p.n;
    let hs = p
        .orbits
        .iter()
        .enumerate()
        .map(|(i, op)| {
            let mut rows = alloc::vec![unit(n, i)];
            for k in 1..n {
                if op.m[k - 1].is_zero() {
                    continue;
                }
                let mut v = alloc::vec![BigInt::zero(); n];
                v[(i + k) % n] = op.m[k - 1].clone();
                for l in 1..k {
                    v[(i + l) % n] = op.m_kl[k - 1][l - 1].clone();
                }
                rows.push(v);
            }
            IntLattice::span(n, &rows)
        })
        .collect::<Result<Vec<_>>>()?;
    TwoNilpotentData::new(hs)
}

/// A permutation `σ` of the orbits with `σ(Hᵢ) = K_{σ(i)}` for all `i`,
/// where `σ` acts on `ℤⁿ` by permuting the basis.
pub fn isomorphic(d1: &TwoNilpotentData, d2: &TwoNilpotentData) -> Option<Vec<usize>> {
    let n = d1.n();
    if d2.n() != n {
        return None;
    }
    let inv = |d: &TwoNilpotentData| -> Vec<(usize, Vec<BigInt>)> {
        d.hs.iter().map(IntLattice::quotient_invariants).collect()
    };
    let (a, b) = (inv(d1), inv(d2));
    let mut sigma = Vec::with_capacity(n);
    let mut used = alloc::vec![false; n];
    search_relabel(d1, d2, &a, &b, &mut sigma, &mut used)
}

fn search_relabel(
    d1: &TwoNilpotentData,
    d2: &TwoNilpotentData,
    a: &[(usize, Vec<BigInt>)],
    b: &[(usize, Vec<BigInt>)],
    sigma: &mut Vec<usize>,
    used: &mut [bool],
) -> Option<Vec<usize>> {
    let n = d1.n();
    if sigma.len() == n {
        let ok = (0..n).all(|i| d1.hs[i].permute_coordinates(sigma) == d2.hs[sigma[i]]);
        return ok.then(|| sigma.clone());
    }
    let i = sigma.len();
    for j in 0..n {
        if used[j] || a[i] != b[j] {
            continue;
        }
        used[j] = true;
        sigma.push(j);
        if let Some(s) = search_relabel(d1, d2, a, b, sigma, used) {
            return Some(s);
        }
        sigma.pop();
        used[j] = false;
    }
    None
}

/// The enveloping group as a central extension of `ℤⁿ` by
/// `K = Λ²(ℤⁿ) / Σᵢ eᵢ ∧ Hᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralExtensionData {
    /// Rank of the abelianisation `ℤⁿ`.
    pub free_rank: usize,
    /// Free rank of the kernel `K`; nonzero only when some orbit is infinite.
    pub kernel_rank: usize,
    /// Invariant factors greater than one of `K`, in divisibility order.
    pub torsion: Vec<BigInt>,
    /// `Σᵢ eᵢ ∧ Hᵢ` in the basis `eᵢ ∧ eⱼ`, `i < j`.
    pub relators: IntLattice,
}

impl CentralExtensionData {
    /// Whether the kernel vanishes, so that the enveloping group is `ℤⁿ`.
    pub fn is_abelian(&self) -> bool {
        self.kernel_rank == 0 && self.torsion.is_empty()
    }
}

pub fn enveloping_extension(d: &TwoNilpotentData) -> CentralExtensionData {
    let relators = wedge_image(&d.hs).expect("data lattices live in ℤⁿ");
    let (kernel_rank, torsion) = relators.quotient_invariants();
    CentralExtensionData {
        free_rank: d.n(),
        kernel_rank,
        torsion,
        relators,
    }
}

/// Whether `G(Q) = ℤⁿ`.
pub fn is_enveloping_abelian(d: &TwoNilpotentData) -> bool {
    enveloping_extension(d).is_abelian()
}

/// The rows `eᵢ ∧ h` for `h` running over the basis of each `Hᵢ`.
pub fn parameter_matrix(d: &TwoNilpotentData) -> IntMatrix {
    let n = d.n();
    let mut rows = Vec::new();
    for (i, h) in d.hs.iter().enumerate() {
        let e = unit(n, i);
        for r in 0..h.rank() {
            let w = wedge(&e, h.basis().row(r));
            if w.iter().any(|x| !x.is_zero()) {
                rows.push(w);
            }
        }
    }
    IntMatrix::from_rows(n * n.saturating_sub(1) / 2, &rows).expect("wedge coordinates")
}

/// The gcd of the maximal minors of [`parameter_matrix`]; it equals one
/// exactly when the enveloping group is abelian.
pub fn maximal_minor_gcd(d: &TwoNilpotentData) -> BigInt {
    let m = parameter_matrix(d);
    let size = m.ncols();
    if size == 0 {
        return BigInt::one();
    }
    if m.nrows() < size {
        return BigInt::zero();
    }
    let rows = m.to_rows();
    let mut g = BigInt::zero();
    let mut pick = Vec::with_capacity(size);
    minors(&rows, size, 0, &mut pick, &mut g);
    g
}

fn minors(rows: &[Vec<BigInt>], size: usize, start: usize, pick: &mut Vec<usize>, g: &mut BigInt) {
    if g.is_one() {
        return;
    }
    if pick.len() == size {
        let sub: Vec<Vec<BigInt>> = pick.iter().map(|&r| rows[r].clone()).collect();
        let det = IntMatrix::from_rows(size, &sub).unwrap().determinant().unwrap();
        *g = g.gcd(&det);
        return;
    }
    for r in start..rows.len() {
        if rows.len() - r < size - pick.len() {
            break;
        }
        pick.push(r);
        minors(rows, size, r + 1, pick, g);
        pick.pop();
    }
}

/// Whether `Q → G(Q)` is injective. Two elements `g Hᵢ`, `g′ Hᵢ` of the
/// `i`-th orbit have the same image exactly when `(g − g′) ∧ eᵢ` lies in
/// `Σⱼ eⱼ ∧ Hⱼ`, a condition on the coset of `g − g′` only; elements of
/// different orbits already differ in the abelianisation.
pub fn is_injective_2nilp(d: &TwoNilpotentData, cap: usize) -> Result<bool> {
    Ok(injectivity_witness(d, cap)?.is_none())
}

/// An orbit `i` and a representative `g ∉ Hᵢ` with `g ∧ eᵢ ∈ Σⱼ eⱼ ∧ Hⱼ`.
pub fn injectivity_witness(d: &TwoNilpotentData, cap: usize) -> Result<Option<(usize, Vec<BigInt>)>> {
    let n = d.n();
    let w = wedge_image(&d.hs)?;
    for (i, h) in d.hs.iter().enumerate() {
        if h.rank() < n {
            return Err(Error::InfiniteOrbit { orbit: i });
        }
    }
    for (i, h) in d.hs.iter().enumerate() {
        let e = unit(n, i);
        for g in h.cosets(cap)? {
            if g.iter().all(Zero::is_zero) {
                continue;
            }
            if w.member(&wedge(&g, &e))? {
                return Ok(Some((i, g)));
            }
        }
    }
    Ok(None)
}
