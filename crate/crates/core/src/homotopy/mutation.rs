//! Minimal approximations, irreducible silting mutation and the silting test.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::FdAlgebra;
use crate::error::{Error, Result};
use crate::homotopy::complex::{AMatrix, ChainMap, Complex, ProjComplex};
use crate::homotopy::hom::{hom_dimension, hom_space, HomotopySpace};
use crate::linalg::{axpy, is_nilpotent, unit, RowSpace, SparseVec};
use crate::scalar::Q;

/// Radical of a local endomorphism ring, in coordinates of `space`
/// (which must be `Hom_K(X, X)`). Errors with `NotBasic` when the ring is not
/// local.
pub fn local_radical(
    alg: &FdAlgebra,
    space: &HomotopySpace,
    x: &Complex,
) -> Result<Vec<SparseVec>> {
    let n = space.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let one = space
        .coords_of_map(&x.identity(alg))
        .ok_or_else(|| Error::NotBasic("identity is not a chain map".into()))?;
    let maps: Vec<ChainMap> = (0..n).map(|i| space.rep_map(i)).collect();
    // Left multiplication operators as dense matrices, L[b][row][col].
    let ops: Vec<Vec<Vec<Q>>> = maps
        .iter()
        .map(|b| {
            let mut m = vec![vec![Q::zero(); n]; n];
            for (c, y) in maps.iter().enumerate() {
                let prod = space
                    .coords_of_map(&ChainMap::compose(alg, b, y))
                    .expect("composite of chain maps is a chain map");
                for (r, v) in prod {
                    m[r][c] = v;
                }
            }
            m
        })
        .collect();
    let nq = Q::from_integer(n.into());
    let mut rad = RowSpace::new();
    let mut rad_vecs = Vec::new();
    for (b, op) in ops.iter().enumerate() {
        let tr: Q = (0..n).map(|i| op[i][i].clone()).sum();
        let c = tr / &nq;
        let mut v = unit(b);
        axpy(&mut v, &-c, &one);
        if rad.insert(v.clone()).is_some() {
            rad_vecs.push(v);
        }
    }
    if rad.rank() != n - 1 {
        return Err(Error::NotBasic("endomorphism ring is not local".into()));
    }
    for v in &rad_vecs {
        let mut m = vec![vec![Q::zero(); n]; n];
        for (&b, x) in v {
            for (r, row) in ops[b].iter().enumerate() {
                for (c, y) in row.iter().enumerate() {
                    if !y.is_zero() {
                        m[r][c] += x * y;
                    }
                }
            }
        }
        if !is_nilpotent(&m) {
            return Err(Error::NotBasic("endomorphism ring is not local".into()));
        }
    }
    Ok(rad_vecs)
}

/// Components of a minimal approximation: `(index into M, map)`, in order.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub components: Vec<(usize, ChainMap)>,
}

impl Approximation {
    pub fn targets(&self) -> Vec<usize> {
        self.components.iter().map(|(j, _)| *j).collect()
    }
}

/// Radical morphisms `M_k -> M_j`: everything for `k != j`, the radical of
/// the local ring for `k == j`. Returned as chain maps.
fn radical_maps(alg: &FdAlgebra, m: &[Complex], k: usize, j: usize) -> Result<Vec<ChainMap>> {
    let h = hom_space(alg, &m[k], &m[j], 0);
    if k != j {
        return Ok((0..h.dim()).map(|i| h.rep_map(i)).collect());
    }
    Ok(local_radical(alg, &h, &m[k])?
        .iter()
        .map(|v| h.combination(v))
        .collect())
}

/// Minimal left `add(M)`-approximation of `X`: generators of `Hom(X, M)` as a
/// module over `End(M)` acting on targets.
pub fn minimal_left_approximation(
    alg: &FdAlgebra,
    x: &Complex,
    m: &[Complex],
) -> Result<Approximation> {
    let homs: Vec<HomotopySpace> = m.iter().map(|mj| hom_space(alg, x, mj, 0)).collect();
    let mut components = Vec::new();
    for (j, hj) in homs.iter().enumerate() {
        let mut sub = RowSpace::new();
        for (k, hk) in homs.iter().enumerate() {
            let rads = radical_maps(alg, m, k, j)?;
            for f in (0..hk.dim()).map(|i| hk.rep_map(i)) {
                for g in &rads {
                    let c = hj
                        .coords_of_map(&ChainMap::compose(alg, g, &f))
                        .expect("composite is a chain map");
                    sub.insert(c);
                }
            }
        }
        for i in 0..hj.dim() {
            if sub.insert(unit(i)).is_some() {
                components.push((j, hj.rep_map(i)));
            }
        }
    }
    Ok(Approximation { components })
}

/// Minimal right `add(M)`-approximation of `X`: generators of `Hom(M, X)` as
/// a module over `End(M)` acting on sources.
pub fn minimal_right_approximation(
    alg: &FdAlgebra,
    x: &Complex,
    m: &[Complex],
) -> Result<Approximation> {
    let homs: Vec<HomotopySpace> = m.iter().map(|mj| hom_space(alg, mj, x, 0)).collect();
    let mut components = Vec::new();
    for (j, hj) in homs.iter().enumerate() {
        let mut sub = RowSpace::new();
        for (k, hk) in homs.iter().enumerate() {
            let rads = radical_maps(alg, m, j, k)?;
            for h in (0..hk.dim()).map(|i| hk.rep_map(i)) {
                for g in &rads {
                    let c = hj
                        .coords_of_map(&ChainMap::compose(alg, &h, g))
                        .expect("composite is a chain map");
                    sub.insert(c);
                }
            }
        }
        for i in 0..hj.dim() {
            if sub.insert(unit(i)).is_some() {
                components.push((j, hj.rep_map(i)));
            }
        }
    }
    Ok(Approximation { components })
}

fn others(t: &ProjComplex, x: usize) -> Result<(Complex, Vec<Complex>)> {
    let xs = t.summand(x)?.clone();
    let m = t
        .summands()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != x)
        .map(|(_, s)| s.clone())
        .collect();
    Ok((xs, m))
}

fn degree_range(cs: &[&Complex]) -> (i32, i32) {
    let lo = cs.iter().filter_map(|c| c.min_degree()).min().unwrap_or(0);
    let hi = cs.iter().filter_map(|c| c.max_degree()).max().unwrap_or(0);
    (lo, hi)
}

fn replace(t: &ProjComplex, x: usize, c: Complex) -> Result<ProjComplex> {
    let mut s = t.summands().to_vec();
    s[x] = c;
    ProjComplex::new(Arc::clone(t.algebra()), s)
}

/// `μ_X(T)`: `X` replaced by the cone of its minimal left approximation.
pub fn mutate_left(t: &ProjComplex, x: usize) -> Result<ProjComplex> {
    let alg = t.algebra();
    let (xs, m) = others(t, x)?;
    let approx = minimal_left_approximation(alg, &xs, &m)?;
    let copies: Vec<&Complex> = approx.components.iter().map(|(j, _)| &m[*j]).collect();
    let y = Complex::direct_sum(&copies);
    let (lo, hi) = degree_range(&[&xs, &y]);
    let mut f = ChainMap::default();
    for k in lo..=hi {
        let (src, tgt) = (xs.term(k).len(), y.term(k).len());
        if src == 0 || tgt == 0 {
            continue;
        }
        let parts: Vec<AMatrix> = approx
            .components
            .iter()
            .map(|(j, g)| g.component(k, m[*j].term(k).len(), src))
            .collect();
        let refs: Vec<&AMatrix> = parts.iter().collect();
        f.maps.insert(k, AMatrix::vstack(&refs, src));
    }
    replace(t, x, Complex::cone(alg, &f, &xs, &y)?)
}

/// Right mutation: `X` replaced by `Cone(g)[-1]` for the minimal right
/// approximation `g: M' -> X`.
pub fn mutate_right(t: &ProjComplex, x: usize) -> Result<ProjComplex> {
    let alg = t.algebra();
    let (xs, m) = others(t, x)?;
    let approx = minimal_right_approximation(alg, &xs, &m)?;
    let copies: Vec<&Complex> = approx.components.iter().map(|(j, _)| &m[*j]).collect();
    let y = Complex::direct_sum(&copies);
    let (lo, hi) = degree_range(&[&xs, &y]);
    let mut g = ChainMap::default();
    for k in lo..=hi {
        let (src, tgt) = (y.term(k).len(), xs.term(k).len());
        if src == 0 || tgt == 0 {
            continue;
        }
        let parts: Vec<AMatrix> = approx
            .components
            .iter()
            .map(|(j, h)| h.component(k, tgt, m[*j].term(k).len()))
            .collect();
        let refs: Vec<&AMatrix> = parts.iter().collect();
        g.maps.insert(k, AMatrix::hstack(&refs, tgt));
    }
    replace(t, x, Complex::cone(alg, &g, &y, &xs)?.shift(-1))
}

/// Nonzero `Hom(T, T[i])` dimensions and the silting/tilting verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiltingReport {
    pub amplitude: i32,
    /// `(i, dim Hom(T, T[i]))` for every checked nonzero dimension, `i != 0`.
    pub nonzero: Vec<(i32, usize)>,
    pub silting: bool,
    pub tilting: bool,
}

/// Checks `Hom(T, T[i]) = 0` for `0 < i <= amplitude + 1`, and for negative
/// `i` down to `-(amplitude + 1)` for the tilting verdict.
pub fn silting_report(t: &ProjComplex) -> SiltingReport {
    let amp = t.amplitude();
    let mut nonzero = Vec::new();
    for i in (-(amp + 1)..=amp + 1).filter(|&i| i != 0) {
        let d = hom_dimension(t, t, i).expect("same algebra");
        if d > 0 {
            nonzero.push((i, d));
        }
    }
    let silting = nonzero.iter().all(|&(i, _)| i < 0);
    SiltingReport {
        amplitude: amp,
        tilting: nonzero.is_empty(),
        nonzero,
        silting,
    }
}

pub fn is_silting(t: &ProjComplex) -> bool {
    silting_report(t).silting
}
