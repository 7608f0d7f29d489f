//! Exact integer linear algebra on subgroups of `ℤⁿ`.
//!
//! Matrices hold arbitrary-precision integers. Lattices are stored by the
//! rows of their Hermite normal form, with positive pivots and the entries
//! above each pivot reduced into `[0, pivot)`, so two lattices are equal
//! exactly when their bases are.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: alloc::vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix with `cols` columns from rows, checking their lengths.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(d: &[T]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone().into();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] -= q · row[src]`.
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] -= v;
        }
    }

    /// `col[dst] -= q · col[src]`.
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] -= v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -core::mem::take(v);
        }
    }

    /// Determinant of a square matrix by fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// Row Hermite normal form with zero rows removed.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    hnf_with_pivots(m).0
}

fn hnf_with_pivots(m: &IntMatrix) -> (IntMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..a.cols {
        if r == a.rows {
            break;
        }
        loop {
            let best = (r..a.rows)
                .filter(|&i| !a[(i, col)].is_zero())
                .min_by(|&i, &j| a[(i, col)].abs().cmp(&a[(j, col)].abs()));
            let Some(p) = best else { break };
            a.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..a.rows {
                if !a[(i, col)].is_zero() {
                    let q = a[(i, col)].div_floor(&a[(r, col)]);
                    a.sub_row(i, r, &q);
                    if !a[(i, col)].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[(r, col)].is_zero() {
            continue;
        }
        if a[(r, col)].is_negative() {
            a.negate_row(r);
        }
        for i in 0..r {
            let q = a[(i, col)].div_floor(&a[(r, col)]);
            a.sub_row(i, r, &q);
        }
        pivots.push(col);
        r += 1;
    }
    let cols = a.cols;
    a.data.truncate(r * cols);
    a.rows = r;
    (a, pivots)
}

/// Smith normal form `D = U · M · V` with unimodular `U`, `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// The nonzero diagonal entries `d₁ | d₂ | …`, all positive.
    pub invariants: Vec<BigInt>,
}

/// Smith normal form with transformation matrices.
pub fn snf(m: &IntMatrix) -> Smith {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let k = m.rows.min(m.cols);
    let mut t = 0;
    while t < k {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..d.rows {
            for j in t..d.cols {
                if !d[(i, j)].is_zero()
                    && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        let mut clean = true;
        for i in t + 1..d.rows {
            if !d[(i, t)].is_zero() {
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                d.sub_row(i, t, &q);
                u.sub_row(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
        }
        for j in t + 1..d.cols {
            if !d[(t, j)].is_zero() {
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                d.sub_col(j, t, &q);
                v.sub_col(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
        }
        if !clean {
            continue;
        }
        // The pivot must divide the rest of the block; fold in a bad row.
        let bad = (t + 1..d.rows)
            .find(|&i| (t + 1..d.cols).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
        if let Some(i) = bad {
            let minus_one = -BigInt::one();
            d.sub_row(t, i, &minus_one);
            u.sub_row(t, i, &minus_one);
            continue;
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let invariants = (0..t).map(|i| d[(i, i)].clone()).collect();
    Smith {
        d,
        u,
        v,
        invariants,
    }
}

/// A subgroup of `ℤⁿ` in Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntLattice {
    dim: usize,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl IntLattice {
    /// The lattice spanned by the rows of `gens`.
    pub fn from_matrix(gens: &IntMatrix) -> Self {
        let (basis, pivots) = hnf_with_pivots(gens);
        IntLattice {
            dim: gens.cols,
            basis,
            pivots,
        }
    }

    /// The lattice spanned by the given vectors in `ℤ^dim`.
    pub fn span<T: Into<BigInt> + Clone>(dim: usize, gens: &[Vec<T>]) -> Result<Self> {
        Ok(Self::from_matrix(&IntMatrix::from_rows(dim, gens)?))
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_matrix(&IntMatrix::zeros(0, dim))
    }

    pub fn full(dim: usize) -> Self {
        Self::from_matrix(&IntMatrix::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Column index of the pivot in each basis row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, v: &[BigInt]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            })
        }
    }

    /// The canonical representative of `v + L`: each pivot coordinate lands in
    /// `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.check_len(v)?;
        let mut v = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let q = v[p].div_floor(&self.basis[(r, p)]);
            if !q.is_zero() {
                for (j, x) in v.iter_mut().enumerate() {
                    *x -= &q * &self.basis[(r, j)];
                }
            }
        }
        Ok(v)
    }

    pub fn member(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Convenience membership test for machine integers.
    pub fn contains_i64(&self, v: &[i64]) -> Result<bool> {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.member(&v)
    }

    /// Whether `other ⊆ self`.
    pub fn contains_lattice(&self, other: &IntLattice) -> Result<bool> {
        for r in 0..other.rank() {
            if !self.member(other.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Free rank and torsion invariants (entries greater than one) of `ℤⁿ / L`.
    pub fn quotient_invariants(&self) -> (usize, Vec<BigInt>) {
        let s = snf(&self.basis);
        let torsion = s.invariants.into_iter().filter(|d| !d.is_one()).collect();
        (self.dim - self.rank(), torsion)
    }

    /// `[ℤⁿ : L]` when finite.
    pub fn index(&self) -> Option<BigInt> {
        if self.rank() < self.dim {
            return None;
        }
        Some(self.pivots.iter().enumerate().map(|(r, &p)| self.basis[(r, p)].clone()).product())
    }

    /// Canonical coset representatives, in lexicographic order.
    pub fn cosets(&self, cap: usize) -> Result<Vec<Vec<BigInt>>> {
        let index = self.index().ok_or(Error::InfiniteIndex {
            free_rank: self.dim - self.rank(),
        })?;
        if index > BigInt::from(cap) {
            return Err(Error::CapExceeded { cap });
        }
        // Full rank, so every column is a pivot column and row r pivots at r.
        let bounds: Vec<usize> = (0..self.dim)
            .map(|r| self.basis[(r, r)].to_usize().expect("bounded by cap"))
            .collect();
        let mut out = Vec::new();
        let mut cur = alloc::vec![0usize; self.dim];
        loop {
            out.push(cur.iter().map(|&x| BigInt::from(x)).collect());
            let mut k = self.dim;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                cur[k] += 1;
                if cur[k] < bounds[k] {
                    break;
                }
                cur[k] = 0;
            }
        }
    }

    /// `L + M`.
    pub fn sum(&self, other: &IntLattice) -> Result<IntLattice> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut rows = self.basis.to_rows();
        rows.extend(other.basis.to_rows());
        Self::span(self.dim, &rows)
    }

    /// The image under the coordinate permutation `e_i ↦ e_{σ(i)}`.
    pub fn permute_coordinates(&self, sigma: &[usize]) -> IntLattice {
        let mut m = IntMatrix::zeros(self.rank(), self.dim);
        for r in 0..self.rank() {
            for i in 0..self.dim {
                m[(r, sigma[i])] = self.basis[(r, i)].clone();
            }
        }
        Self::from_matrix(&m)
    }
}

impl fmt::Display for IntLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.dim, self.rank())?;
        if self.rank() > 0 {
            write!(f, "\n{}", self.basis)?;
        }
        Ok(())
    }
}

/// The unit vector `e_i` in `ℤⁿ`.
pub fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = alloc::vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

/// Position of `e_i ∧ e_j` (`i < j`) in the basis of `Λ²(ℤⁿ)`, ordered
/// lexicographically.
pub fn wedge_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Coordinates of `g ∧ h` in `Λ²(ℤⁿ)`.
pub fn wedge(g: &[BigInt], h: &[BigInt]) -> Vec<BigInt> {
    let n = g.len();
    let mut out = alloc::vec![BigInt::zero(); n * n.saturating_sub(1) / 2];
    for i in 0..n {
        for j in i + 1..n {
            out[wedge_index(n, i, j)] = &g[i] * &h[j] - &g[j] * &h[i];
        }
    }
    out
}

/// `Σᵢ eᵢ ∧ Hᵢ ⊆ Λ²(ℤⁿ)`, where `n = hs.len()`.
pub fn wedge_image(hs: &[IntLattice]) -> Result<IntLattice> {
    let n = hs.len();
    let mut rows = Vec::new();
    for (i, h) in hs.iter().enumerate() {
        if h.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: h.dim(),
            });
        }
        let e = unit(n, i);
        for r in 0..h.rank() {
            rows.push(wedge(&e, h.basis().row(r)));
        }
    }
    IntLattice::span(n * n.saturating_sub(1) / 2, &rows)
}
