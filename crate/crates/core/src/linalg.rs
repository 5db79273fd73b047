//! Exact sparse linear algebra over the rationals.
//!
//! Every vector is a sparse map from column index to a nonzero rational.
//! Column order doubles as elimination priority: the smallest column index
//! of a vector is its leading column.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Q;

/// Sparse vector; entries are never zero.
pub type SparseVec = BTreeMap<usize, Q>;

pub fn unit(col: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(col, Q::one());
    v
}

/// `acc += c * v`.
pub fn axpy(acc: &mut SparseVec, c: &Q, v: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (&k, x) in v {
        let prod = c * x;
        match acc.get_mut(&k) {
            Some(y) => {
                *y += prod;
                if y.is_zero() {
                    acc.remove(&k);
                }
            }
            None => {
                acc.insert(k, prod);
            }
        }
    }
}

pub fn scale(v: &SparseVec, c: &Q) -> SparseVec {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(&k, x)| (k, x * c)).collect()
}

pub fn shift_columns(v: &SparseVec, offset: usize) -> SparseVec {
    v.iter().map(|(&k, x)| (k + offset, x.clone())).collect()
}

/// Fully reduced row echelon basis of a subspace, built incrementally.
///
/// Rows are normalized (pivot entry 1) and every row vanishes on the pivot
/// columns of all other rows.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    rows: BTreeMap<usize, SparseVec>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(vs: I) -> Self {
        let mut s = Self::new();
        for v in vs {
            s.insert(v.clone());
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.rows.iter().map(|(&c, r)| (c, r))
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        // Rows vanish on each other's pivots, so one pass with the original
        // pivot coefficients suffices.
        let coeffs: Vec<(usize, Q)> = v
            .iter()
            .filter(|(k, _)| self.rows.contains_key(k))
            .map(|(&k, x)| (k, x.clone()))
            .collect();
        for (k, c) in coeffs {
            axpy(&mut out, &-c, &self.rows[&k]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns the new pivot column when `v` was independent.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let mut r = self.reduce(&v);
        let (&pivot, lead) = r.iter().next()?;
        let inv = lead.recip();
        r = scale(&r, &inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &-c, &r);
            }
        }
        self.rows.insert(pivot, r);
        Some(pivot)
    }
}

/// Basis of the kernel of the linear map whose `j`-th column is `columns[j]`.
///
/// The returned vectors live in the parameter space and are in reduced echelon
/// form there.
pub fn kernel(columns: &[SparseVec]) -> Vec<SparseVec> {
    let offset = columns
        .iter()
        .filter_map(|c| c.keys().next_back())
        .max()
        .map_or(0, |m| m + 1);
    let mut space = RowSpace::new();
    let mut ker = RowSpace::new();
    for (j, col) in columns.iter().enumerate() {
        let mut aug = col.clone();
        aug.insert(offset + j, Q::one());
        let red = space.reduce(&aug);
        match red.keys().next() {
            Some(&k) if k < offset => {
                space.insert(red);
            }
            _ => {
                let k: SparseVec = red.into_iter().map(|(c, x)| (c - offset, x)).collect();
                ker.insert(k);
            }
        }
    }
    ker.rows.into_values().collect()
}

/// Coordinates of vectors modulo a subspace `W` with respect to a fixed list
/// of representatives spanning a complement of `W` inside some space.
#[derive(Clone, Debug)]
pub struct Coordinatizer {
    space: RowSpace,
    offset: usize,
    reps: usize,
}

impl Coordinatizer {
    /// `width` must exceed every column index used by the vectors.
    pub fn new(width: usize, modulus: &[SparseVec], reps: &[SparseVec]) -> Self {
        let mut space = RowSpace::new();
        for w in modulus {
            space.insert(w.clone());
        }
        for (k, r) in reps.iter().enumerate() {
            let mut aug = r.clone();
            aug.insert(width + k, Q::one());
            space.insert(aug);
        }
        Self {
            space,
            offset: width,
            reps: reps.len(),
        }
    }

    pub fn dim(&self) -> usize {
        self.reps
    }

    /// Coordinates of `v` modulo the subspace, or `None` when `v` is outside
    /// the span of the subspace and the representatives.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        let red = self.space.reduce(v);
        if red.keys().next().is_some_and(|&k| k < self.offset) {
            return None;
        }
        Some(
            red.into_iter()
                .map(|(c, x)| (c - self.offset, -x))
                .collect(),
        )
    }
}

/// Picks, in order, the candidates that are independent modulo `base`.
pub fn complement(base: &[SparseVec], candidates: &[SparseVec]) -> Vec<usize> {
    let mut space = RowSpace::from_vectors(base);
    candidates
        .iter()
        .enumerate()
        .filter_map(|(i, c)| space.insert(c.clone()).map(|_| i))
        .collect()
}

/// Dense square matrix helpers used for small operator computations.
pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    let mut out = vec![vec![Q::zero(); m]; n];
    for i in 0..n {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

pub fn is_nilpotent(m: &[Vec<Q>]) -> bool {
    let n = m.len();
    if n == 0 {
        return true;
    }
    let mut p = m.to_vec();
    for _ in 1..n {
        p = mat_mul(&p, m);
    }
    p.iter().all(|row| row.iter().all(Zero::is_zero))
}
