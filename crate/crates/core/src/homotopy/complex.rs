//! Bounded complexes of projective right modules.
//!
//! A morphism `P_u -> P_v` is left multiplication by an element of
//! `e_v A e_u`, so a map between sums of projectives is a matrix whose rows
//! index target summands and columns index source summands, and matrix
//! product is composition.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::One;

use crate::algebra::{AlgebraElement, FdAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Q;

/// Matrix of algebra elements, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AMatrix {
    rows: usize,
    cols: usize,
    data: Vec<AlgebraElement>,
}

impl AMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![AlgebraElement::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<AlgebraElement>>, cols: usize) -> Self {
        let r = rows.len();
        let data: Vec<AlgebraElement> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * cols, "ragged matrix");
        Self {
            rows: r,
            cols,
            data,
        }
    }

    pub fn identity(alg: &FdAlgebra, vertices: &[usize]) -> Self {
        let mut m = Self::zero(vertices.len(), vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            m.set(i, i, alg.idempotent(v));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &AlgebraElement {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: AlgebraElement) {
        self.data[r * self.cols + c] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(AlgebraElement::is_zero)
    }

    pub fn scale(&self, x: &Q) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e.scale(x)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// `self · other`, i.e. `self ∘ other` as maps.
    pub fn mul(&self, alg: &FdAlgebra, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let p = alg.mul(a, b);
                        out.data[i * other.cols + j].add_scaled(&Q::one(), &p);
                    }
                }
            }
        }
        out
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert!(a.rows == b.rows && c.rows == d.rows && a.cols == c.cols && b.cols == d.cols);
        let mut out = Self::zero(a.rows + c.rows, a.cols + b.cols);
        for (m, r0, c0) in [
            (a, 0, 0),
            (b, 0, a.cols),
            (c, a.rows, 0),
            (d, a.rows, a.cols),
        ] {
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out.set(r0 + i, c0 + j, m.get(i, j).clone());
                }
            }
        }
        out
    }

    /// Block diagonal sum.
    pub fn diag(parts: &[&Self]) -> Self {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zero(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            for i in 0..p.rows {
                for j in 0..p.cols {
                    out.set(r0 + i, c0 + j, p.get(i, j).clone());
                }
            }
            r0 += p.rows;
            c0 += p.cols;
        }
        out
    }

    /// Rows of each part stacked top to bottom.
    pub fn vstack(parts: &[&Self], cols: usize) -> Self {
        let rows: Vec<Vec<AlgebraElement>> = parts
            .iter()
            .flat_map(|p| {
                assert_eq!(p.cols, cols);
                (0..p.rows).map(move |i| (0..cols).map(|j| p.get(i, j).clone()).collect())
            })
            .collect();
        Self::from_rows(rows, cols)
    }

    /// Columns of each part side by side.
    pub fn hstack(parts: &[&Self], rows: usize) -> Self {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zero(rows, cols);
        let mut c0 = 0;
        for p in parts {
            assert_eq!(p.rows, rows);
            for i in 0..rows {
                for j in 0..p.cols {
                    out.set(i, c0 + j, p.get(i, j).clone());
                }
            }
            c0 += p.cols;
        }
        out
    }
}

/// Bounded complex of indecomposable projectives. `terms[k]` lists the
/// vertices of the summands in degree `k`; `diffs[k]` is `d^k: T^k -> T^{k+1}`
/// and is stored only when both terms are nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Complex {
    terms: BTreeMap<i32, Vec<usize>>,
    diffs: BTreeMap<i32, AMatrix>,
}

impl Complex {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn stalk(v: usize, degree: i32) -> Self {
        Self {
            terms: BTreeMap::from([(degree, vec![v])]),
            diffs: BTreeMap::new(),
        }
    }

    /// Validates shapes, corner membership of every entry, and `d∘d = 0`.
    pub fn new(
        alg: &FdAlgebra,
        terms: BTreeMap<i32, Vec<usize>>,
        diffs: BTreeMap<i32, AMatrix>,
    ) -> Result<Self> {
        let terms: BTreeMap<i32, Vec<usize>> =
            terms.into_iter().filter(|(_, t)| !t.is_empty()).collect();
        let mut c = Self {
            terms,
            diffs: BTreeMap::new(),
        };
        for (k, d) in diffs {
            if c.term(k).is_empty() || c.term(k + 1).is_empty() {
                if !d.is_zero() {
                    return Err(Error::InvalidComplex(format!(
                        "nonzero differential out of degree {k} between zero terms"
                    )));
                }
                continue;
            }
            c.diffs.insert(k, d);
        }
        c.check(alg)?;
        Ok(c)
    }

    pub fn check(&self, alg: &FdAlgebra) -> Result<()> {
        for t in self.terms.values() {
            if let Some(&v) = t.iter().find(|&&v| v >= alg.vertex_count()) {
                return Err(Error::InvalidComplex(format!("unknown vertex index {v}")));
            }
        }
        for (&k, d) in &self.diffs {
            let (src, tgt) = (self.term(k), self.term(k + 1));
            if d.rows() != tgt.len() || d.cols() != src.len() {
                return Err(Error::InvalidComplex(format!(
                    "differential {k} has the wrong shape"
                )));
            }
            for (r, &v) in tgt.iter().enumerate() {
                for (c, &u) in src.iter().enumerate() {
                    let x = d.get(r, c);
                    if &alg.corner(v, x, u) != x {
                        return Err(Error::InvalidComplex(format!(
                            "entry ({r},{c}) of d^{k} is not in e_{v} A e_{u}"
                        )));
                    }
                }
            }
        }
        for (&k, d) in &self.diffs {
            if let Some(next) = self.diffs.get(&(k + 1)) {
                if !next.mul(alg, d).is_zero() {
                    return Err(Error::InvalidComplex(format!(
                        "d^{} d^{k} is not zero",
                        k + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn term(&self, k: i32) -> &[usize] {
        self.terms.get(&k).map_or(&[], Vec::as_slice)
    }

    pub fn terms(&self) -> &BTreeMap<i32, Vec<usize>> {
        &self.terms
    }

    pub fn diff(&self, k: i32) -> Option<&AMatrix> {
        self.diffs.get(&k)
    }

    /// `d^k` as a matrix, zero when not stored.
    pub fn diff_or_zero(&self, k: i32) -> AMatrix {
        self.diffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| AMatrix::zero(self.term(k + 1).len(), self.term(k).len()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn rank(&self) -> usize {
        self.terms.values().map(Vec::len).sum()
    }

    /// `X[n]^k = X^{k+n}` with differential `(-1)^n d`.
    pub fn shift(&self, n: i32) -> Self {
        let sign = if n.rem_euclid(2) == 0 {
            Q::one()
        } else {
            -Q::one()
        };
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&k, t)| (k - n, t.clone()))
                .collect(),
            diffs: self
                .diffs
                .iter()
                .map(|(&k, d)| (k - n, d.scale(&sign)))
                .collect(),
        }
    }

    pub fn direct_sum(parts: &[&Complex]) -> Self {
        let mut terms: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for p in parts {
            for (&k, t) in &p.terms {
                terms.entry(k).or_default().extend_from_slice(t);
            }
        }
        let mut diffs = BTreeMap::new();
        for &k in terms.keys() {
            if !terms.contains_key(&(k + 1)) {
                continue;
            }
            let blocks: Vec<AMatrix> = parts.iter().map(|p| p.diff_or_zero(k)).collect();
            let refs: Vec<&AMatrix> = blocks.iter().collect();
            diffs.insert(k, AMatrix::diag(&refs));
        }
        Self { terms, diffs }
    }

    /// Mapping cone of `f: X -> Y`: `X^{k+1} ⊕ Y^k` with differential
    /// `[[-d_X, 0], [f, d_Y]]`.
    pub fn cone(alg: &FdAlgebra, f: &ChainMap, x: &Complex, y: &Complex) -> Result<Self> {
        if f.shift != 0 {
            return Err(Error::InvalidComplex(
                "cone of a map of nonzero degree".into(),
            ));
        }
        let mut terms: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        let degrees: Vec<i32> = x
            .terms
            .keys()
            .map(|k| k - 1)
            .chain(y.terms.keys().copied())
            .collect();
        for &k in &degrees {
            let mut t = x.term(k + 1).to_vec();
            t.extend_from_slice(y.term(k));
            terms.insert(k, t);
        }
        let mut diffs = BTreeMap::new();
        for &k in terms.keys() {
            let fk = f.component(k + 1, y.term(k + 1).len(), x.term(k + 1).len());
            let d = AMatrix::blocks(
                &x.diff_or_zero(k + 1).scale(&-Q::one()),
                &AMatrix::zero(x.term(k + 2).len(), y.term(k).len()),
                &fk,
                &y.diff_or_zero(k),
            );
            diffs.insert(k, d);
        }
        Self::new(alg, terms, diffs)
    }

    pub fn identity(&self, alg: &FdAlgebra) -> ChainMap {
        ChainMap {
            shift: 0,
            maps: self
                .terms
                .iter()
                .map(|(&k, t)| (k, AMatrix::identity(alg, t)))
                .collect(),
        }
    }

    /// Degree-indexed listing with nonzero differential entries.
    pub fn to_text(&self, alg: &FdAlgebra) -> String {
        let q = alg.quiver();
        let mut out = String::new();
        for (k, t) in &self.terms {
            let names: Vec<&str> = t.iter().map(|&v| q.vertices()[v].as_str()).collect();
            let _ = writeln!(out, "term {k}: {}", names.join(" "));
        }
        for (k, d) in &self.diffs {
            for r in 0..d.rows() {
                for c in 0..d.cols() {
                    let x = d.get(r, c);
                    if !x.is_zero() {
                        let _ = writeln!(out, "d {k} {r} {c}: {}", alg.fmt_element(x));
                    }
                }
            }
        }
        out
    }

    /// Inverse of [`Complex::to_text`] for a single complex.
    pub fn from_text(alg: &FdAlgebra, text: &str) -> Result<Self> {
        let q = alg.quiver();
        let mut terms: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        let mut entries: Vec<(i32, usize, usize, AlgebraElement)> = Vec::new();
        let bad = |l: &str| Error::Parse(format!("bad complex line `{l}`"));
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (head, body) = line.split_once(':').ok_or_else(|| bad(line))?;
            let h: Vec<&str> = head.split_whitespace().collect();
            match h.as_slice() {
                ["term", k] => {
                    let k: i32 = k.parse().map_err(|_| bad(line))?;
                    let vs = body
                        .split_whitespace()
                        .map(|v| {
                            q.vertex_index(v)
                                .ok_or_else(|| Error::UnknownName(v.to_string()))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    terms.insert(k, vs);
                }
                ["d", k, r, c] => {
                    let p = |s: &str| s.parse::<usize>().map_err(|_| bad(line));
                    let k: i32 = k.parse().map_err(|_| bad(line))?;
                    let x = alg.reduce(&q.parse_combination(body.trim())?);
                    entries.push((k, p(r)?, p(c)?, x));
                }
                _ => return Err(bad(line)),
            }
        }
        let mut diffs: BTreeMap<i32, AMatrix> = BTreeMap::new();
        for (k, r, c, x) in entries {
            let rows = terms.get(&(k + 1)).map_or(0, Vec::len);
            let cols = terms.get(&k).map_or(0, Vec::len);
            if r >= rows || c >= cols {
                return Err(Error::InvalidComplex(format!(
                    "entry ({r},{c}) of d^{k} out of range"
                )));
            }
            diffs
                .entry(k)
                .or_insert_with(|| AMatrix::zero(rows, cols))
                .set(r, c, x);
        }
        Self::new(alg, terms, diffs)
    }
}

/// Family of maps `f^k: X^k -> Y^{k+shift}`; absent degrees are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainMap {
    pub shift: i32,
    pub maps: BTreeMap<i32, AMatrix>,
}

impl ChainMap {
    pub fn component(&self, k: i32, rows: usize, cols: usize) -> AMatrix {
        self.maps
            .get(&k)
            .cloned()
            .unwrap_or_else(|| AMatrix::zero(rows, cols))
    }

    pub fn is_zero(&self) -> bool {
        self.maps.values().all(AMatrix::is_zero)
    }

    /// `g ∘ f` for `f: X -> Y[n]`, `g: Y -> Z[m]`.
    pub fn compose(alg: &FdAlgebra, g: &ChainMap, f: &ChainMap) -> ChainMap {
        let mut maps = BTreeMap::new();
        for (&k, fk) in &f.maps {
            if let Some(gk) = g.maps.get(&(k + f.shift)) {
                maps.insert(k, gk.mul(alg, fk));
            }
        }
        ChainMap {
            shift: f.shift + g.shift,
            maps,
        }
    }

    /// Whether `f` commutes with the differentials of `X` and `Y[shift]`.
    pub fn commutes(&self, alg: &FdAlgebra, x: &Complex, y: &Complex) -> bool {
        let n = self.shift;
        let sign = if n.rem_euclid(2) == 0 {
            Q::one()
        } else {
            -Q::one()
        };
        let lo = x.min_degree().unwrap_or(0) - 1;
        let hi = x.max_degree().unwrap_or(0) + 1;
        (lo..=hi).all(|k| {
            let fk = self.component(k, y.term(k + n).len(), x.term(k).len());
            let fk1 = self.component(k + 1, y.term(k + n + 1).len(), x.term(k + 1).len());
            let left = y.diff_or_zero(k + n).mul(alg, &fk).scale(&sign);
            let right = fk1.mul(alg, &x.diff_or_zero(k));
            left == right
        })
    }
}

/// Direct sum of indecomposable complexes over one algebra; the summand list
/// is the vertex set of the endomorphism algebra.
#[derive(Clone, Debug)]
pub struct ProjComplex {
    algebra: Arc<FdAlgebra>,
    summands: Vec<Complex>,
}

impl ProjComplex {
    pub fn new(algebra: Arc<FdAlgebra>, summands: Vec<Complex>) -> Result<Self> {
        for s in &summands {
            s.check(&algebra)?;
        }
        Ok(Self { algebra, summands })
    }

    pub fn algebra(&self) -> &Arc<FdAlgebra> {
        &self.algebra
    }

    pub fn summands(&self) -> &[Complex] {
        &self.summands
    }

    pub fn summand(&self, i: usize) -> Result<&Complex> {
        self.summands.get(i).ok_or(Error::NotASummand(i))
    }

    pub fn total(&self) -> Complex {
        let refs: Vec<&Complex> = self.summands.iter().collect();
        Complex::direct_sum(&refs)
    }

    /// `max - min` over nonzero degrees of all summands.
    pub fn amplitude(&self) -> i32 {
        let t = self.total();
        match (t.min_degree(), t.max_degree()) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        }
    }

    pub fn shift(&self, n: i32) -> Self {
        Self {
            algebra: Arc::clone(&self.algebra),
            summands: self.summands.iter().map(|s| s.shift(n)).collect(),
        }
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
            || self.algebra.presentation() == other.algebra.presentation()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("complex v1\n");
        for (i, s) in self.summands.iter().enumerate() {
            let _ = writeln!(out, "summand {}", i + 1);
            out.push_str(&s.to_text(&self.algebra));
        }
        out
    }

    pub fn from_text(algebra: Arc<FdAlgebra>, text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        if lines.next() != Some("complex v1") {
            return Err(Error::Parse("expected `complex v1` header".into()));
        }
        let mut blocks: Vec<String> = Vec::new();
        for l in lines {
            if l.starts_with("summand") {
                blocks.push(String::new());
            } else {
                let b = blocks
                    .last_mut()
                    .ok_or_else(|| Error::Parse("complex line before first summand".into()))?;
                b.push_str(l);
                b.push('\n');
            }
        }
        let summands = blocks
            .iter()
            .map(|b| Complex::from_text(&algebra, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, summands)
    }
}

/// The algebra as a complex concentrated in degree zero, one summand per vertex.
pub fn stalk(algebra: Arc<FdAlgebra>) -> ProjComplex {
    let summands = (0..algebra.vertex_count())
        .map(|v| Complex::stalk(v, 0))
        .collect();
    ProjComplex { algebra, summands }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::fixtures;

    #[test]
    fn shift_moves_terms_and_signs() {
        let a = build_algebra(&fixtures::a222()).unwrap();
        let nu = a.arrow_element(3);
        let c = Complex::new(
            &a,
            BTreeMap::from([(-1, vec![0]), (0, vec![1])]),
            BTreeMap::from([(-1, AMatrix::from_rows(vec![vec![nu.clone()]], 1))]),
        )
        .unwrap();
        let s = c.shift(1);
        assert_eq!(s.term(-2), &[0]);
        assert_eq!(s.diff(-2).unwrap().get(0, 0), &nu.neg());
        assert_eq!(s.shift(-1), c);
    }

    #[test]
    fn rejects_nonzero_square() {
        let a = build_algebra(&fixtures::kronecker()).unwrap();
        let x = a.arrow_element(0);
        let y = a.arrow_element(1);
        let r = Complex::new(
            &a,
            BTreeMap::from([(0, vec![0]), (1, vec![0]), (2, vec![0])]),
            BTreeMap::from([
                (0, AMatrix::from_rows(vec![vec![x]], 1)),
                (1, AMatrix::from_rows(vec![vec![y]], 1)),
            ]),
        );
        assert!(matches!(r, Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn rejects_entry_outside_corner() {
        let a = build_algebra(&fixtures::a222()).unwrap();
        let mu = a.arrow_element(2);
        let r = Complex::new(
            &a,
            BTreeMap::from([(0, vec![0]), (1, vec![1])]),
            BTreeMap::from([(0, AMatrix::from_rows(vec![vec![mu]], 1))]),
        );
        assert!(r.is_err());
    }

    #[test]
    fn text_round_trip() {
        let a = Arc::new(build_algebra(&fixtures::a222()).unwrap());
        let nu = a.arrow_element(3);
        let c = Complex::new(
            &a,
            BTreeMap::from([(-1, vec![0]), (0, vec![1])]),
            BTreeMap::from([(-1, AMatrix::from_rows(vec![vec![nu]], 1))]),
        )
        .unwrap();
        let t = ProjComplex::new(Arc::clone(&a), vec![c, Complex::stalk(1, 0)]).unwrap();
        let back = ProjComplex::from_text(Arc::clone(&a), &t.to_text()).unwrap();
        assert_eq!(back.summands(), t.summands());
    }
}
