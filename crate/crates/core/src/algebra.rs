//! Finite-dimensional algebras of bound quivers.
//!
//! Normal forms are computed block by block: all paths below the nilpotency
//! bound with fixed endpoints span a space, the truncated ideal is a subspace
//! of it, and the paths that are not leading terms of the reduced echelon
//! basis of that subspace form the monomial basis. Leading terms are the
//! shortest paths, ties broken towards the lexicographically largest arrow
//! sequence, so reduction only ever rewrites towards longer paths and the
//! radical filtration is the path-length filtration on normal forms.

use std::cmp::Reverse;
use std::collections::HashMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{axpy, kernel, scale, unit, RowSpace, SparseVec};
use crate::poly::QPoly;
use crate::presentation::BoundQuiverPresentation;
use crate::quiver::{Path, PathCombination, Quiver};
use crate::scalar::Q;

/// Upper limit on the number of paths below the bound.
const PATH_BUDGET: usize = 400_000;

/// Element of an algebra in coordinates over its monomial basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    coords: SparseVec,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coords(coords: SparseVec) -> Self {
        debug_assert!(coords.values().all(|x| !x.is_zero()));
        Self { coords }
    }

    pub fn basis(i: usize) -> Self {
        Self { coords: unit(i) }
    }

    pub fn coords(&self) -> &SparseVec {
        &self.coords
    }

    pub fn into_coords(self) -> SparseVec {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut c = self.coords.clone();
        axpy(&mut c, &Q::one(), &other.coords);
        Self { coords: c }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut c = self.coords.clone();
        axpy(&mut c, &-Q::one(), &other.coords);
        Self { coords: c }
    }

    pub fn scale(&self, x: &Q) -> Self {
        Self {
            coords: scale(&self.coords, x),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    pub fn add_scaled(&mut self, x: &Q, other: &Self) {
        axpy(&mut self.coords, x, &other.coords);
    }
}

#[derive(Clone, Debug)]
struct Block {
    col: HashMap<Path, usize>,
    ideal: RowSpace,
    /// Global basis index of each non-pivot column.
    basis_of_col: HashMap<usize, usize>,
}

#[derive(Clone, Debug)]
pub struct FdAlgebra {
    presentation: BoundQuiverPresentation,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    blocks: HashMap<(usize, usize), Block>,
    table: Vec<Vec<AlgebraElement>>,
}

/// Builds the algebra of an admissible presentation.
pub fn build_algebra(pres: &BoundQuiverPresentation) -> Result<FdAlgebra> {
    pres.field.ensure_supported()?;
    pres.validate()?;
    let q = &pres.quiver;
    let bound = pres.bound;
    let layers = q.paths_by_length(bound);
    let total: usize = layers.iter().map(Vec::len).sum();
    if total > PATH_BUDGET {
        return Err(Error::InconsistentRewriting(format!(
            "{total} paths below bound {bound} exceed the internal budget"
        )));
    }

    // Columns per block in elimination priority.
    let mut cols: HashMap<(usize, usize), Vec<Path>> = HashMap::new();
    for p in layers.iter().flatten() {
        cols.entry((p.source, p.target))
            .or_default()
            .push(p.clone());
    }
    let mut blocks: HashMap<(usize, usize), Block> = HashMap::new();
    for (key, mut paths) in cols {
        paths.sort_by(|a, b| (a.len(), Reverse(&a.arrows)).cmp(&(b.len(), Reverse(&b.arrows))));
        let col = paths
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        blocks.insert(
            key,
            Block {
                col,
                ideal: RowSpace::new(),
                basis_of_col: HashMap::new(),
            },
        );
    }

    // Paths ending / starting at each vertex, for two-sided multiples.
    let mut ending: Vec<Vec<&Path>> = vec![Vec::new(); q.vertex_count()];
    let mut starting: Vec<Vec<&Path>> = vec![Vec::new(); q.vertex_count()];
    for p in layers.iter().flatten() {
        ending[p.target].push(p);
        starting[p.source].push(p);
    }
    for r in &pres.relations {
        let Some((a, b)) = r.endpoints() else {
            continue;
        };
        let m = r.min_length().unwrap_or(0);
        if m >= bound {
            continue;
        }
        let room = bound - 1 - m;
        for u in ending[a].iter().filter(|u| u.len() <= room) {
            for v in starting[b].iter().filter(|v| u.len() + v.len() <= room) {
                let block = blocks
                    .get_mut(&(u.source, v.target))
                    .expect("block of a path");
                let mut vec = SparseVec::new();
                for (p, x) in r.terms() {
                    if u.len() + p.len() + v.len() >= bound {
                        continue;
                    }
                    let mut arrows = u.arrows.clone();
                    arrows.extend_from_slice(&p.arrows);
                    arrows.extend_from_slice(&v.arrows);
                    let path = Path {
                        source: u.source,
                        target: v.target,
                        arrows,
                    };
                    axpy(&mut vec, x, &unit(block.col[&path]));
                }
                block.ideal.insert(vec);
            }
        }
    }

    let mut basis: Vec<Path> = Vec::new();
    for block in blocks.values() {
        for (p, &c) in &block.col {
            if !block.ideal.is_pivot(c) {
                basis.push(p.clone());
            }
        }
    }
    basis.sort_by(|a, b| a.listing_key().cmp(&b.listing_key()));
    let index: HashMap<Path, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    for block in blocks.values_mut() {
        let assoc: Vec<(usize, usize)> = block
            .col
            .iter()
            .filter_map(|(p, &c)| index.get(p).map(|&i| (c, i)))
            .collect();
        block.basis_of_col.extend(assoc);
    }
    if (0..q.vertex_count()).any(|v| !index.contains_key(&q.trivial_path(v))) {
        return Err(Error::NonAdmissibleIdeal(
            "an idempotent lies in the ideal".into(),
        ));
    }

    let mut alg = FdAlgebra {
        presentation: pres.clone(),
        basis,
        index,
        blocks,
        table: Vec::new(),
    };
    let n = alg.basis.len();
    let mut table = vec![vec![AlgebraElement::zero(); n]; n];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            if let Some(p) = q.concat(&alg.basis[i], &alg.basis[j]) {
                *slot = alg.reduce_path(&p);
            }
        }
    }
    alg.table = table;
    Ok(alg)
}

/// Whether paths of length `bound` already vanish modulo the relations, so
/// that the bound adds nothing to the presentation.
pub fn bound_is_implied(pres: &BoundQuiverPresentation) -> Result<bool> {
    let a = build_algebra(pres)?;
    let mut wider = pres.clone();
    wider.bound += 1;
    Ok(build_algebra(&wider)?.dim() == a.dim())
}

impl FdAlgebra {
    pub fn presentation(&self) -> &BoundQuiverPresentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver().vertex_count()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Path degree of each basis element.
    pub fn grading(&self) -> Vec<u32> {
        self.basis
            .iter()
            .map(|p| self.quiver().path_degree(p))
            .collect()
    }

    /// Basis index of the idempotent `e_v`.
    pub fn idempotent_index(&self, v: usize) -> usize {
        self.index[&self.quiver().trivial_path(v)]
    }

    pub fn idempotent(&self, v: usize) -> AlgebraElement {
        AlgebraElement::basis(self.idempotent_index(v))
    }

    pub fn one(&self) -> AlgebraElement {
        let mut x = AlgebraElement::zero();
        for v in 0..self.vertex_count() {
            x = x.add(&self.idempotent(v));
        }
        x
    }

    /// Normal form of a single path.
    pub fn reduce_path(&self, p: &Path) -> AlgebraElement {
        if p.len() >= self.presentation.bound {
            return AlgebraElement::zero();
        }
        let block = &self.blocks[&(p.source, p.target)];
        let red = block.ideal.reduce(&unit(block.col[p]));
        AlgebraElement::from_coords(
            red.into_iter()
                .map(|(c, x)| (block.basis_of_col[&c], x))
                .collect(),
        )
    }

    pub fn reduce(&self, c: &PathCombination) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (p, x) in c.terms() {
            out.add_scaled(x, &self.reduce_path(p));
        }
        out
    }

    /// Image of an arrow-index word; the empty word at `v` is `e_v`.
    pub fn path_element(&self, arrows: &[usize]) -> AlgebraElement {
        match self.quiver().path(arrows) {
            Some(p) => self.reduce_path(&p),
            None => AlgebraElement::zero(),
        }
    }

    pub fn arrow_element(&self, a: usize) -> AlgebraElement {
        self.reduce_path(&self.quiver().arrow_path(a))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&i, a) in x.coords() {
            for (&j, b) in y.coords() {
                let t = &self.table[i][j];
                if !t.is_zero() {
                    out.add_scaled(&(a * b), t);
                }
            }
        }
        out
    }

    /// `e_u x e_v`.
    pub fn corner(&self, u: usize, x: &AlgebraElement, v: usize) -> AlgebraElement {
        AlgebraElement::from_coords(
            x.coords()
                .iter()
                .filter(|(&i, _)| self.basis[i].source == u && self.basis[i].target == v)
                .map(|(&i, c)| (i, c.clone()))
                .collect(),
        )
    }

    /// Basis indices spanning `e_u A e_v`, in listing order.
    pub fn block_basis(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].source == u && self.basis[i].target == v)
            .collect()
    }

    /// Basis of `Hom(P_i, P_j)`: left multiplication by elements of `e_j A e_i`.
    pub fn hom_projectives(&self, i: usize, j: usize) -> Vec<usize> {
        self.block_basis(j, i)
    }

    /// Entry `(i, j)` is `dim e_i A e_j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut c = vec![vec![0; n]; n];
        for p in &self.basis {
            c[p.source][p.target] += 1;
        }
        c
    }

    pub fn graded_cartan(&self) -> Result<Vec<Vec<QPoly>>> {
        if let Some(r) = self.presentation.inhomogeneous_relation() {
            return Err(Error::InhomogeneousRelations(r));
        }
        let n = self.vertex_count();
        let mut c = vec![vec![QPoly::zero(); n]; n];
        for p in &self.basis {
            c[p.source][p.target].add_monomial(self.quiver().path_degree(p) as usize);
        }
        Ok(c)
    }

    /// Radical layers of `P_i = e_i A`: entry `[k][v]` counts composition
    /// factors `S_v` in `rad^k P_i / rad^{k+1} P_i`.
    pub fn loewy_layers(&self, i: usize) -> Vec<Vec<usize>> {
        let mut layers: Vec<Vec<usize>> = Vec::new();
        for p in self.basis.iter().filter(|p| p.source == i) {
            while layers.len() <= p.len() {
                layers.push(vec![0; self.vertex_count()]);
            }
            layers[p.len()][p.target] += 1;
        }
        layers
    }

    pub fn loewy_sizes(&self, i: usize) -> Vec<usize> {
        self.loewy_layers(i)
            .iter()
            .map(|l| l.iter().sum())
            .collect()
    }

    /// Basis of the socle of `P_i`: elements of `e_i A` killed by every arrow.
    pub fn socle(&self, i: usize) -> Vec<AlgebraElement> {
        let rows = self.block_basis_from(i);
        let arrows: Vec<AlgebraElement> = (0..self.quiver().arrows().len())
            .map(|a| self.arrow_element(a))
            .collect();
        let n = self.dim();
        let columns: Vec<SparseVec> = rows
            .iter()
            .map(|&b| {
                let mut img = SparseVec::new();
                for (k, a) in arrows.iter().enumerate() {
                    let prod = self.mul(&AlgebraElement::basis(b), a);
                    for (&c, x) in prod.coords() {
                        img.insert(k * n + c, x.clone());
                    }
                }
                img
            })
            .collect();
        kernel(&columns)
            .into_iter()
            .map(|k| {
                AlgebraElement::from_coords(k.into_iter().map(|(j, x)| (rows[j], x)).collect())
            })
            .collect()
    }

    /// Basis indices of `e_i A`.
    pub fn block_basis_from(&self, i: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&k| self.basis[k].source == i)
            .collect()
    }

    /// Basis elements of positive length span the radical.
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&k| !self.basis[k].is_trivial())
            .collect()
    }

    pub fn element_to_combination(&self, x: &AlgebraElement) -> PathCombination {
        let mut c = PathCombination::zero();
        for (&i, a) in x.coords() {
            c.add_term(self.basis[i].clone(), a.clone());
        }
        c
    }

    pub fn fmt_element(&self, x: &AlgebraElement) -> String {
        self.quiver()
            .fmt_combination(&self.element_to_combination(x))
    }

    pub fn fmt_basis(&self, i: usize) -> String {
        self.quiver().fmt_path(&self.basis[i])
    }

    /// First basis triple violating associativity, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                let ab = &self.table[a][b];
                for c in 0..n {
                    let left = self.mul(ab, &AlgebraElement::basis(c));
                    let right = self.mul(&AlgebraElement::basis(a), &self.table[b][c]);
                    if left != right {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Deterministic text summary: the presentation followed by the basis and
    /// Cartan matrix.
    pub fn to_text(&self) -> String {
        let mut out = self.presentation.to_text();
        let _ = writeln!(out, "dimension {}", self.dim());
        for i in 0..self.dim() {
            let _ = writeln!(out, "basis {}", self.fmt_basis(i));
        }
        for row in self.cartan_matrix() {
            let r: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "cartan {}", r.join(" "));
        }
        out
    }

    /// Parses a summary, rebuilds the algebra and checks the recorded data.
    pub fn from_text(text: &str) -> Result<Self> {
        let pres_lines: Vec<&str> = text
            .lines()
            .filter(|l| {
                !["dimension", "basis", "cartan"]
                    .iter()
                    .any(|k| l.starts_with(k))
            })
            .collect();
        let alg = build_algebra(&BoundQuiverPresentation::from_text(&pres_lines.join("\n"))?)?;
        if alg.to_text() != text.trim_end().to_string() + "\n" {
            return Err(Error::Parse(
                "summary does not match the rebuilt algebra".into(),
            ));
        }
        Ok(alg)
    }
}

/// Whether `x` is a scalar multiple of a single basis element; returns it.
pub fn as_monomial(x: &AlgebraElement) -> Option<(usize, Q)> {
    let mut it = x.coords().iter();
    let (&i, c) = it.next()?;
    it.next().is_none().then(|| (i, c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(a: &FdAlgebra, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| a.fmt_basis(i)).collect()
    }

    #[test]
    fn a222_projective_basis() {
        let a = build_algebra(&fixtures::a222()).unwrap();
        assert_eq!(a.dim(), 12);
        assert_eq!(
            names(&a, &a.block_basis_from(0)),
            ["e_1", "alpha", "mu", "mu*nu", "mu*nu*mu", "mu*nu*mu*nu"]
        );
        assert_eq!(names(&a, &a.hom_projectives(0, 1)), ["nu", "nu*mu*nu"]);
        assert_eq!(a.cartan_matrix(), vec![vec![4, 2], vec![2, 4]]);
        assert_eq!(a.loewy_sizes(0), vec![1, 2, 1, 1, 1]);
    }

    #[test]
    fn relation_rewrites_towards_longer_paths() {
        let a = build_algebra(&fixtures::a222()).unwrap();
        let alpha = a.arrow_element(0);
        let sq = a.mul(&alpha, &alpha);
        assert_eq!(a.fmt_element(&sq), "mu*nu*mu*nu");
    }

    #[test]
    fn a221_dimensions() {
        let a = build_algebra(&fixtures::a221()).unwrap();
        assert_eq!(a.dim(), 11);
        assert_eq!(a.cartan_matrix(), vec![vec![4, 2], vec![2, 3]]);
        assert_eq!(a.loewy_sizes(1), vec![1, 1, 1, 1, 1]);
        assert_eq!(a.hom_projectives(0, 1).len(), 2);
    }

    #[test]
    fn point_and_semisimple() {
        let a = build_algebra(&fixtures::point()).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.loewy_sizes(0), vec![1]);
        let s = build_algebra(&fixtures::semisimple(3)).unwrap();
        assert_eq!(
            s.cartan_matrix(),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
    }

    #[test]
    fn idempotents_are_orthogonal_and_sum_to_one() {
        let a = build_algebra(&fixtures::wild()).unwrap();
        let one = a.one();
        for i in 0..a.dim() {
            let b = AlgebraElement::basis(i);
            assert_eq!(a.mul(&one, &b), b);
            assert_eq!(a.mul(&b, &one), b);
        }
        for u in 0..4 {
            for v in 0..4 {
                let p = a.mul(&a.idempotent(u), &a.idempotent(v));
                assert_eq!(p.is_zero(), u != v);
            }
        }
    }

    #[test]
    fn associativity_on_fixtures() {
        for p in [fixtures::a222(), fixtures::a212(), fixtures::kronecker()] {
            assert_eq!(build_algebra(&p).unwrap().associativity_failure(), None);
        }
    }

    #[test]
    fn opposite_transposes_cartan() {
        for p in [fixtures::a221(), fixtures::wild()] {
            let a = build_algebra(&p).unwrap();
            let b = build_algebra(&p.opposite()).unwrap();
            let c = a.cartan_matrix();
            let t: Vec<Vec<usize>> = (0..c.len())
                .map(|j| c.iter().map(|r| r[j]).collect())
                .collect();
            assert_eq!(b.cartan_matrix(), t);
        }
    }

    #[test]
    fn socles_are_simple() {
        let a = build_algebra(&fixtures::a222()).unwrap();
        for i in 0..2 {
            let soc = a.socle(i);
            assert_eq!(soc.len(), 1);
        }
    }

    #[test]
    fn summary_round_trip() {
        let a = build_algebra(&fixtures::a212()).unwrap();
        let text = a.to_text();
        let b = FdAlgebra::from_text(&text).unwrap();
        assert_eq!(b.to_text(), text);
    }

    #[test]
    fn graded_cartan_rejects_inhomogeneous() {
        let q = Quiver::from_spec(&["1"], &[("x", "1", "1", 1), ("y", "1", "1", 2)]).unwrap();
        let p = BoundQuiverPresentation::from_strs(q, &["x*x - y*y"], 4).unwrap();
        let a = build_algebra(&p).unwrap();
        assert!(matches!(
            a.graded_cartan(),
            Err(Error::InhomogeneousRelations(_))
        ));
    }

    #[test]
    fn brauer_bounds_are_implied() {
        for p in [
            fixtures::a222(),
            fixtures::a221(),
            fixtures::a212(),
            fixtures::kronecker(),
        ] {
            assert!(bound_is_implied(&p).unwrap());
        }
    }

    #[test]
    fn prime_fields_are_rejected_for_computation() {
        let mut p = fixtures::a212();
        p.field = crate::scalar::FieldSpec::prime(7).unwrap();
        assert!(matches!(build_algebra(&p), Err(Error::UnsupportedField(7))));
    }
}
