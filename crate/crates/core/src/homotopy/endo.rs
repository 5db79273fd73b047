//! Endomorphism algebras of complexes and extraction of quiver presentations.
//!
//! `e_i E e_j = Hom(T_j, T_i)` and `x·y = x∘y`, so the endomorphism algebra of
//! the stalk complex of `A` is `A` itself and an arrow `i -> j` of the
//! Gabriel quiver is an irreducible map `T_j -> T_i`.

use std::cmp::Reverse;
use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::{build_algebra, FdAlgebra};
use crate::error::{Error, Result};
use crate::homotopy::complex::{ChainMap, ProjComplex};
use crate::homotopy::hom::{hom_space, HomotopySpace};
use crate::linalg::{axpy, complement, is_nilpotent, kernel, scale, unit, RowSpace, SparseVec};
use crate::presentation::BoundQuiverPresentation;
use crate::quiver::{Arrow, Path, PathCombination, Quiver};
use crate::scalar::Q;

/// Basic algebra given by structure constants on a basis adapted to the
/// vertex idempotents.
#[derive(Clone, Debug)]
pub struct StructAlgebra {
    vertices: usize,
    /// `(i, j)` for a basis element of `e_i E e_j`.
    block: Vec<(usize, usize)>,
    table: Vec<Vec<SparseVec>>,
    idempotents: Vec<SparseVec>,
}

impl StructAlgebra {
    pub fn from_fd(a: &FdAlgebra) -> Self {
        let n = a.dim();
        Self {
            vertices: a.vertex_count(),
            block: a.basis().iter().map(|p| (p.source, p.target)).collect(),
            table: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| a.basis_product(i, j).coords().clone())
                        .collect()
                })
                .collect(),
            idempotents: (0..a.vertex_count())
                .map(|v| unit(a.idempotent_index(v)))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.block.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, a) in x {
            for (&j, b) in y {
                let t = &self.table[i][j];
                if !t.is_empty() {
                    axpy(&mut out, &(a * b), t);
                }
            }
        }
        out
    }

    pub fn block_basis(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&k| self.block[k] == (i, j))
            .collect()
    }

    pub fn idempotent(&self, i: usize) -> &SparseVec {
        &self.idempotents[i]
    }

    /// Entry `(i, j)` is `dim e_i E e_j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let mut c = vec![vec![0; self.vertices]; self.vertices];
        for &(i, j) in &self.block {
            c[i][j] += 1;
        }
        c
    }

    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let l = self.mul(&self.table[a][b], &unit(c));
                    let r = self.mul(&unit(a), &self.table[b][c]);
                    if l != r {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

/// Hom spaces between all summand pairs, indexed `[target][source]`.
struct SummandHoms {
    spaces: Vec<Vec<HomotopySpace>>,
    offset: Vec<Vec<usize>>,
}

fn summand_homs(t: &ProjComplex) -> SummandHoms {
    let alg = t.algebra();
    let s = t.summands();
    let n = s.len();
    let mut spaces = Vec::with_capacity(n);
    let mut offset = vec![vec![0; n]; n];
    let mut at = 0;
    for (i, ti) in s.iter().enumerate() {
        let mut row = Vec::with_capacity(n);
        for (j, tj) in s.iter().enumerate() {
            let h = hom_space(alg, tj, ti, 0);
            offset[i][j] = at;
            at += h.dim();
            row.push(h);
        }
        spaces.push(row);
    }
    SummandHoms { spaces, offset }
}

/// `End_K(T)` by structure constants over the chosen coset representatives.
pub fn end_structure(t: &ProjComplex) -> StructAlgebra {
    let alg = t.algebra();
    let n = t.summands().len();
    let homs = summand_homs(t);
    let mut block = Vec::new();
    let mut reps: Vec<ChainMap> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let h = &homs.spaces[i][j];
            for r in 0..h.dim() {
                block.push((i, j));
                reps.push(h.rep_map(r));
            }
        }
    }
    let dim = block.len();
    let mut table = vec![vec![SparseVec::new(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            let ((i, j), (j2, k)) = (block[a], block[b]);
            if j != j2 {
                continue;
            }
            let comp = ChainMap::compose(alg, &reps[a], &reps[b]);
            let c = homs.spaces[i][k]
                .coords_of_map(&comp)
                .expect("composite of chain maps is a chain map");
            table[a][b] = c
                .into_iter()
                .map(|(x, v)| (homs.offset[i][k] + x, v))
                .collect();
        }
    }
    let idempotents = (0..n)
        .map(|i| {
            let id = t.summands()[i].identity(alg);
            let c = homs.spaces[i][i]
                .coords_of_map(&id)
                .expect("identity is a chain map");
            c.into_iter()
                .map(|(x, v)| (homs.offset[i][i] + x, v))
                .collect()
        })
        .collect();
    StructAlgebra {
        vertices: n,
        block,
        table,
        idempotents,
    }
}

/// Whether composing with null-homotopic maps on either side stays
/// null-homotopic, over all summand triples.
pub fn composition_well_defined(t: &ProjComplex) -> bool {
    let alg = t.algebra();
    let homs = summand_homs(t);
    let n = t.summands().len();
    for i in 0..n {
        for j in 0..n {
            let hij = &homs.spaces[i][j];
            let nulls: Vec<ChainMap> = hij
                .null_basis
                .iter()
                .map(|v| hij.layout.to_map(v))
                .collect();
            for k in 0..n {
                let hjk = &homs.spaces[j][k];
                let hik = &homs.spaces[i][k];
                for z in &nulls {
                    for f in (0..hjk.dim()).map(|r| hjk.rep_map(r)) {
                        let c = ChainMap::compose(alg, z, &f);
                        if !hik.is_null(&hik.layout.from_map(&c)) {
                            return false;
                        }
                    }
                }
                let hki = &homs.spaces[k][i];
                let hkj = &homs.spaces[k][j];
                for z in &nulls {
                    for g in (0..hki.dim()).map(|r| hki.rep_map(r)) {
                        let c = ChainMap::compose(alg, &g, z);
                        if !hkj.is_null(&hkj.layout.from_map(&c)) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Gabriel quiver, arrow lifts and relations of a basic algebra.
#[derive(Clone, Debug)]
pub struct ExtractedPresentation {
    pub presentation: BoundQuiverPresentation,
    /// Coordinates of each arrow's chosen preimage.
    pub arrow_lifts: Vec<SparseVec>,
}

impl ExtractedPresentation {
    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }
}

/// Radical of the local ring `e_i E e_i`, or `NotBasic`.
fn local_block_radical(e: &StructAlgebra, i: usize) -> Result<Vec<SparseVec>> {
    let b = e.block_basis(i, i);
    let n = b.len();
    let pos: HashMap<usize, usize> = b.iter().enumerate().map(|(k, &x)| (x, k)).collect();
    let op = |x: &SparseVec| -> Vec<Vec<Q>> {
        let mut m = vec![vec![Q::zero(); n]; n];
        for (c, &y) in b.iter().enumerate() {
            for (k, v) in e.mul(x, &unit(y)) {
                m[pos[&k]][c] = v;
            }
        }
        m
    };
    let nq = Q::from_integer(n.into());
    let mut rad = RowSpace::new();
    let mut out = Vec::new();
    for &x in &b {
        let m = op(&unit(x));
        let tr: Q = (0..n).map(|k| m[k][k].clone()).sum();
        let mut v = unit(x);
        axpy(&mut v, &-(tr / &nq), e.idempotent(i));
        if rad.insert(v.clone()).is_some() {
            out.push(v);
        }
    }
    if n == 0 || rad.rank() + 1 != n || !out.iter().all(|v| is_nilpotent(&op(v))) {
        return Err(Error::NotBasic(format!(
            "e_{} E e_{} is not local",
            i + 1,
            i + 1
        )));
    }
    Ok(out)
}

fn arrow_id(i: usize, j: usize, k: usize) -> String {
    if k == 0 {
        format!("x{}_{}", i + 1, j + 1)
    } else {
        format!("x{}_{}_{}", i + 1, j + 1, k + 1)
    }
}

/// Gabriel quiver from `rad/rad²`, relations from the kernel of path
/// evaluation. Vertices are named `1..n`.
pub fn extract_presentation(e: &StructAlgebra) -> Result<ExtractedPresentation> {
    let n = e.vertex_count();
    let mut rad: Vec<Vec<Vec<SparseVec>>> = vec![vec![Vec::new(); n]; n];
    for (i, row) in rad.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = if i == j {
                local_block_radical(e, i)?
            } else {
                e.block_basis(i, j).into_iter().map(unit).collect()
            };
        }
    }
    for i in 0..n {
        let ri = RowSpace::from_vectors(&rad[i][i]);
        for j in (0..n).filter(|&j| j != i) {
            for x in &rad[i][j] {
                for y in &rad[j][i] {
                    if !ri.contains(&e.mul(x, y)) {
                        return Err(Error::NotBasic(format!(
                            "summands {} and {} are isomorphic",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
    }
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut lifts: Vec<SparseVec> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut sq: Vec<SparseVec> = Vec::new();
            for k in 0..n {
                for x in &rad[i][k] {
                    for y in &rad[k][j] {
                        sq.push(e.mul(x, y));
                    }
                }
            }
            for (k, c) in complement(&sq, &rad[i][j]).into_iter().enumerate() {
                arrows.push(Arrow {
                    id: arrow_id(i, j, k),
                    source: i,
                    target: j,
                    degree: 1,
                });
                lifts.push(rad[i][j][c].clone());
            }
        }
    }
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let quiver = Quiver::new(names, arrows)?;

    // Evaluate paths layer by layer until every path vanishes.
    let mut values: Vec<(Path, SparseVec)> = (0..n)
        .map(|v| (quiver.trivial_path(v), e.idempotent(v).clone()))
        .collect();
    let mut layer: Vec<usize> = (0..n).collect();
    let mut bound = 1;
    loop {
        let mut next = Vec::new();
        for &p in &layer {
            for (a, ar) in quiver.arrows().iter().enumerate() {
                if ar.source != values[p].0.target {
                    continue;
                }
                let path = quiver
                    .concat(&values[p].0, &quiver.arrow_path(a))
                    .expect("composable");
                let val = e.mul(&values[p].1, &lifts[a]);
                next.push(values.len());
                values.push((path, val));
            }
        }
        if next.iter().all(|&k| values[k].1.is_empty()) {
            values.truncate(values.len() - next.len());
            break;
        }
        bound += 1;
        if bound > e.dim() + 1 {
            return Err(Error::NotBasic("radical is not nilpotent".into()));
        }
        layer = next;
    }
    let span = RowSpace::from_vectors(values.iter().map(|(_, v)| v));
    if span.rank() != e.dim() {
        return Err(Error::NotBasic("arrows do not generate the algebra".into()));
    }

    // Kernel rows in reduced echelon form; the pivot is the leading path.
    let mut rows: Vec<(Path, PathCombination)> = Vec::new();
    for s in 0..n {
        for t in 0..n {
            let mut block: Vec<&(Path, SparseVec)> = values
                .iter()
                .filter(|(p, _)| p.source == s && p.target == t)
                .collect();
            block.sort_by(|a, b| {
                (a.0.len(), Reverse(&a.0.arrows)).cmp(&(b.0.len(), Reverse(&b.0.arrows)))
            });
            let cols: Vec<SparseVec> = block.iter().map(|(_, v)| v.clone()).collect();
            for k in kernel(&cols) {
                let lead = block[*k.keys().next().expect("nonzero kernel vector")]
                    .0
                    .clone();
                let mut r = PathCombination::zero();
                for (&c, x) in &k {
                    r.add_term(block[c].0.clone(), x.clone());
                }
                rows.push((lead, r));
            }
        }
    }
    let relations: Vec<PathCombination> = rows
        .iter()
        .filter(|(lead, _)| {
            !rows
                .iter()
                .any(|(l, _)| l != lead && lead.contains_subpath(l))
        })
        .map(|(_, r)| r.clone())
        .collect();
    let presentation = BoundQuiverPresentation::new(quiver, relations, bound)?;
    Ok(ExtractedPresentation {
        presentation,
        arrow_lifts: lifts,
    })
}

/// Endomorphism algebra of `T` in the homotopy category with its extracted
/// presentation and the algebra rebuilt from it.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub structure: StructAlgebra,
    pub extracted: ExtractedPresentation,
    pub algebra: FdAlgebra,
}

pub fn end_algebra(t: &ProjComplex) -> Result<EndAlgebra> {
    let structure = end_structure(t);
    let extracted = extract_presentation(&structure)?;
    let algebra = build_algebra(&extracted.presentation)?;
    if algebra.dim() != structure.dim() || algebra.cartan_matrix() != structure.cartan_matrix() {
        return Err(Error::NotBasic(
            "extracted presentation does not rebuild the endomorphism algebra".into(),
        ));
    }
    Ok(EndAlgebra {
        structure,
        extracted,
        algebra,
    })
}

/// Scales a vector so its leading coefficient is one.
pub fn normalize(v: &SparseVec) -> SparseVec {
    match v.values().next() {
        Some(c) => scale(v, &c.recip()),
        None => SparseVec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::homotopy::complex::stalk;
    use crate::homotopy::mutation::mutate_left;
    use std::sync::Arc;

    #[test]
    fn extraction_recovers_fixture_shapes() {
        for p in [
            fixtures::a222(),
            fixtures::a221(),
            fixtures::a212(),
            fixtures::kronecker(),
            fixtures::wild(),
        ] {
            let a = build_algebra(&p).unwrap();
            let x = extract_presentation(&StructAlgebra::from_fd(&a)).unwrap();
            assert_eq!(
                x.quiver().arrow_count_matrix(),
                p.quiver.arrow_count_matrix()
            );
            let b = build_algebra(&x.presentation).unwrap();
            assert_eq!(b.cartan_matrix(), a.cartan_matrix());
        }
    }

    #[test]
    fn stalk_endomorphisms_are_the_algebra() {
        let a = Arc::new(build_algebra(&fixtures::a222()).unwrap());
        let e = end_algebra(&stalk(Arc::clone(&a))).unwrap();
        assert_eq!(e.structure.dim(), 12);
        assert_eq!(e.structure.cartan_matrix(), a.cartan_matrix());
    }

    #[test]
    fn mutation_of_a222_is_twelve_dimensional() {
        let a = Arc::new(build_algebra(&fixtures::a222()).unwrap());
        let mu = mutate_left(&stalk(a), 0).unwrap();
        let e = end_algebra(&mu).unwrap();
        assert_eq!(e.structure.dim(), 12);
        assert_eq!(e.structure.cartan_matrix(), vec![vec![4, 2], vec![2, 4]]);
        assert_eq!(e.structure.associativity_failure(), None);
        assert!(composition_well_defined(&mu));
    }

    #[test]
    fn decomposable_summand_is_not_basic() {
        let a = Arc::new(build_algebra(&fixtures::a212()).unwrap());
        let t = stalk(Arc::clone(&a));
        let dup =
            ProjComplex::new(a, vec![t.summands()[0].clone(), t.summands()[0].clone()]).unwrap();
        assert!(matches!(end_algebra(&dup), Err(Error::NotBasic(_))));
    }
}
