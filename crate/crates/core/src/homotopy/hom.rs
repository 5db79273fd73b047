//! Morphism spaces in the homotopy category.
//!
//! A degree-`n` map `X -> Y[n]` is a vector of coordinates: one coordinate
//! per (degree, target position, source position, basis element of the
//! relevant corner `e_v A e_u`).

use std::collections::{BTreeMap, HashMap};

use num_traits::One;

use crate::algebra::{AlgebraElement, FdAlgebra};
use crate::error::{Error, Result};
use crate::homotopy::complex::{AMatrix, ChainMap, Complex, ProjComplex};
use crate::linalg::{complement, kernel, unit, Coordinatizer, RowSpace, SparseVec};
use crate::scalar::Q;

#[derive(Clone, Debug)]
struct Slot {
    degree: i32,
    row: usize,
    col: usize,
    /// Algebra basis indices spanning the corner.
    basis: Vec<usize>,
    offset: usize,
}

/// Coordinate system for degree-`shift` maps `X -> Y[shift]`.
#[derive(Clone, Debug)]
pub struct HomLayout {
    shift: i32,
    rows: BTreeMap<i32, usize>,
    cols: BTreeMap<i32, usize>,
    slots: Vec<Slot>,
    slot_of: HashMap<(i32, usize, usize), usize>,
    width: usize,
}

impl HomLayout {
    pub fn new(alg: &FdAlgebra, x: &Complex, y: &Complex, shift: i32) -> Self {
        let mut slots = Vec::new();
        let mut slot_of = HashMap::new();
        let mut rows = BTreeMap::new();
        let mut cols = BTreeMap::new();
        let mut width = 0;
        for (&k, src) in x.terms() {
            let tgt = y.term(k + shift);
            if tgt.is_empty() {
                continue;
            }
            rows.insert(k, tgt.len());
            cols.insert(k, src.len());
            for (r, &v) in tgt.iter().enumerate() {
                for (c, &u) in src.iter().enumerate() {
                    let basis = alg.block_basis(v, u);
                    if basis.is_empty() {
                        continue;
                    }
                    slot_of.insert((k, r, c), slots.len());
                    let n = basis.len();
                    slots.push(Slot {
                        degree: k,
                        row: r,
                        col: c,
                        basis,
                        offset: width,
                    });
                    width += n;
                }
            }
        }
        Self {
            shift,
            rows,
            cols,
            slots,
            slot_of,
            width,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn to_map(&self, v: &SparseVec) -> ChainMap {
        let mut maps: BTreeMap<i32, AMatrix> = self
            .rows
            .iter()
            .map(|(&k, &r)| (k, AMatrix::zero(r, self.cols[&k])))
            .collect();
        for s in &self.slots {
            let coords: SparseVec = (0..s.basis.len())
                .filter_map(|t| v.get(&(s.offset + t)).map(|x| (s.basis[t], x.clone())))
                .collect();
            if !coords.is_empty() {
                maps.get_mut(&s.degree)
                    .expect("slot degree has a matrix")
                    .set(s.row, s.col, AlgebraElement::from_coords(coords));
            }
        }
        ChainMap {
            shift: self.shift,
            maps,
        }
    }

    /// Coordinates of `f`; entries outside the layout must vanish.
    pub fn from_map(&self, f: &ChainMap) -> SparseVec {
        debug_assert_eq!(f.shift, self.shift);
        let mut out = SparseVec::new();
        for (&k, m) in &f.maps {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let x = m.get(r, c);
                    if x.is_zero() {
                        continue;
                    }
                    let s = &self.slots[self.slot_of[&(k, r, c)]];
                    for (&b, val) in x.coords() {
                        let t = s
                            .basis
                            .iter()
                            .position(|&y| y == b)
                            .expect("entry lies in its corner");
                        out.insert(s.offset + t, val.clone());
                    }
                }
            }
        }
        out
    }
}

/// `D(f) = d_Y f - (-1)^n f d_X` for `f: X -> Y[n]`, a map `X -> Y[n+1]`.
fn hom_differential(alg: &FdAlgebra, f: &ChainMap, x: &Complex, y: &Complex) -> ChainMap {
    let n = f.shift;
    let sign = if n.rem_euclid(2) == 0 {
        -Q::one()
    } else {
        Q::one()
    };
    let lo = x.min_degree().unwrap_or(0) - 1;
    let hi = x.max_degree().unwrap_or(0);
    let mut maps = BTreeMap::new();
    for k in lo..=hi {
        let (rows, cols) = (y.term(k + n + 1).len(), x.term(k).len());
        if rows == 0 || cols == 0 {
            continue;
        }
        let fk = f.component(k, y.term(k + n).len(), cols);
        let fk1 = f.component(k + 1, rows, x.term(k + 1).len());
        let a = y.diff_or_zero(k + n).mul(alg, &fk);
        let b = fk1.mul(alg, &x.diff_or_zero(k)).scale(&sign);
        maps.insert(k, a.add(&b));
    }
    ChainMap { shift: n + 1, maps }
}

/// `Hom_K(X, Y[shift])` with chosen coset representatives.
#[derive(Clone, Debug)]
pub struct HomotopySpace {
    pub layout: HomLayout,
    pub chain_basis: Vec<SparseVec>,
    pub null_basis: Vec<SparseVec>,
    pub reps: Vec<SparseVec>,
    coordinatizer: Coordinatizer,
}

impl HomotopySpace {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn chain_dim(&self) -> usize {
        self.chain_basis.len()
    }

    pub fn null_dim(&self) -> usize {
        self.null_basis.len()
    }

    /// Coordinates of a chain map modulo null-homotopic maps.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        self.coordinatizer.coords(v)
    }

    pub fn coords_of_map(&self, f: &ChainMap) -> Option<SparseVec> {
        self.coords(&self.layout.from_map(f))
    }

    pub fn rep_map(&self, i: usize) -> ChainMap {
        self.layout.to_map(&self.reps[i])
    }

    pub fn is_null(&self, v: &SparseVec) -> bool {
        RowSpace::from_vectors(&self.null_basis).contains(v)
    }

    /// Linear combination of representatives.
    pub fn combination(&self, coords: &SparseVec) -> ChainMap {
        let mut v = SparseVec::new();
        for (&i, x) in coords {
            crate::linalg::axpy(&mut v, x, &self.reps[i]);
        }
        self.layout.to_map(&v)
    }
}

/// `Hom_K(X, Y[shift])` for single complexes.
pub fn hom_space(alg: &FdAlgebra, x: &Complex, y: &Complex, shift: i32) -> HomotopySpace {
    let layout = HomLayout::new(alg, x, y, shift);
    let target = HomLayout::new(alg, x, y, shift + 1);
    let columns: Vec<SparseVec> = (0..layout.width())
        .map(|j| target.from_map(&hom_differential(alg, &layout.to_map(&unit(j)), x, y)))
        .collect();
    let chain_basis = kernel(&columns);
    let below = HomLayout::new(alg, x, y, shift - 1);
    let mut null = RowSpace::new();
    for j in 0..below.width() {
        null.insert(layout.from_map(&hom_differential(alg, &below.to_map(&unit(j)), x, y)));
    }
    let null_basis: Vec<SparseVec> = null.rows().map(|(_, r)| r.clone()).collect();
    let picked = complement(&null_basis, &chain_basis);
    let reps: Vec<SparseVec> = picked.iter().map(|&i| chain_basis[i].clone()).collect();
    let coordinatizer = Coordinatizer::new(layout.width(), &null_basis, &reps);
    HomotopySpace {
        layout,
        chain_basis,
        null_basis,
        reps,
        coordinatizer,
    }
}

/// `Hom_{K^b(proj A)}(X, Y[shift])` for direct sums, as one space on the
/// total complexes.
pub fn homotopy_hom(x: &ProjComplex, y: &ProjComplex, shift: i32) -> Result<HomotopySpace> {
    if !x.same_algebra(y) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(hom_space(x.algebra(), &x.total(), &y.total(), shift))
}

/// Total dimension of `Hom(X, Y[shift])` summed over summand pairs.
pub fn hom_dimension(x: &ProjComplex, y: &ProjComplex, shift: i32) -> Result<usize> {
    if !x.same_algebra(y) {
        return Err(Error::AlgebraMismatch);
    }
    let alg = x.algebra();
    Ok(x.summands()
        .iter()
        .flat_map(|s| {
            y.summands()
                .iter()
                .map(move |t| hom_space(alg, s, t, shift).dim())
        })
        .sum())
}
