//! The four-vertex wild block algebra: graded dimensions, the mutations at
//! the first two projectives and the structure of the mutated algebras.
//!
//! The reference data is stated for left modules. Left projectives of an
//! algebra are right projectives of its opposite, so mutations run on the
//! opposite presentation; the endomorphism algebra `E` computed there is the
//! opposite of the reported algebra `B = E^op`, whose quiver is the
//! transpose of the quiver of `E` and whose left projectives `B e_i` are the
//! right projectives `e_i E`.

use std::sync::Arc;

use crate::algebra::{build_algebra, FdAlgebra};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::homotopy::{
    end_algebra, minimal_left_approximation, mutate_left, stalk, EndAlgebra, ProjComplex,
};
use crate::poly::QPoly;
use crate::quiver::Quiver;
use crate::report::Check;

#[derive(Clone, Debug)]
pub struct WildFixture {
    pub algebra: Arc<FdAlgebra>,
}

pub fn build_wild_fixture() -> Result<WildFixture> {
    Ok(WildFixture {
        algebra: Arc::new(build_algebra(&fixtures::wild())?),
    })
}

/// `dim_q e_i A e_j`, row `i`, column `j`.
pub fn expected_graded_dims() -> Vec<Vec<QPoly>> {
    let table = [
        ["1+q^2+q^4", "q+q^3", "q^2", "0"],
        ["q+q^3", "1+2q^2+q^4", "q+q^3", "q^2"],
        ["q^2", "q+q^3", "1+2q^2+q^4", "q+q^3"],
        ["0", "q^2", "q+q^3", "1+q^2+q^4"],
    ];
    table
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| s.parse().expect("literal polynomial"))
                .collect()
        })
        .collect()
}

pub fn verify_graded_dims(f: &WildFixture) -> Result<Vec<Check>> {
    let got = f.algebra.graded_cartan()?;
    let want = expected_graded_dims();
    let mut out = vec![Check::new("wild.dim", 30, f.algebra.dim())];
    for i in 0..4 {
        for j in 0..4 {
            out.push(Check::new(
                format!("wild.graded.e{}Ae{}", i + 1, j + 1),
                &want[i][j],
                &got[i][j],
            ));
        }
    }
    Ok(out)
}

/// First pair `(i, j)`, `i < j`, zero-based, with different arrow counts
/// `i -> j` and `j -> i`. A cellular algebra's anti-involution fixes the
/// simples, so its arrow counts are symmetric.
pub fn cellularity_obstruction(q: &Quiver) -> Option<(usize, usize)> {
    let m = q.arrow_count_matrix();
    let n = m.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| m[i][j] != m[j][i])
}

/// Mutation of the stalk complex of the opposite algebra at one vertex.
#[derive(Clone, Debug)]
pub struct WildMutation {
    pub vertex: usize,
    pub complex: ProjComplex,
    pub end: EndAlgebra,
    /// Summands hit by the minimal left approximation.
    pub approximation_targets: Vec<usize>,
}

impl WildMutation {
    /// Gabriel quiver of `B = E^op`.
    pub fn quiver(&self) -> Quiver {
        self.end.extracted.quiver().opposite()
    }
}

pub fn wild_mutation(vertex: usize) -> Result<WildMutation> {
    let op = Arc::new(build_algebra(&fixtures::wild().opposite())?);
    let t = stalk(Arc::clone(&op));
    let rest: Vec<_> = t
        .summands()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != vertex)
        .map(|(i, s)| (i, s.clone()))
        .collect();
    let m: Vec<_> = rest.iter().map(|(_, s)| s.clone()).collect();
    let approx = minimal_left_approximation(&op, t.summand(vertex)?, &m)?;
    let approximation_targets = approx.targets().iter().map(|&j| rest[j].0).collect();
    let complex = mutate_left(&t, vertex)?;
    let end = end_algebra(&complex)?;
    Ok(WildMutation {
        vertex,
        complex,
        end,
        approximation_targets,
    })
}

/// Structure of one projective `B e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveLayers {
    pub vertex: usize,
    pub top: usize,
    pub socle: usize,
    /// `layers[k][v]`: multiplicity of `S_v` in the `k`-th radical layer.
    pub layers: Vec<Vec<usize>>,
}

impl ProjectiveLayers {
    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.iter().sum()).collect()
    }
}

/// Layer reports of the projectives of `B` from the rebuilt `E`.
pub fn projective_report(e: &FdAlgebra) -> Result<Vec<ProjectiveLayers>> {
    if e.vertex_count() != 4 {
        return Err(Error::WrongAlgebra(format!(
            "{} vertices, expected 4",
            e.vertex_count()
        )));
    }
    Ok((0..4)
        .map(|i| {
            let layers = e.loewy_layers(i);
            ProjectiveLayers {
                vertex: i,
                top: layers.first().map_or(0, |l| l.iter().sum()),
                socle: e.socle(i).len(),
                layers,
            }
        })
        .collect())
}

/// Composition factors (one-based vertices) of each radical layer of each
/// projective of `B` after mutation at `vertex` (zero-based, 0 or 1).
pub fn expected_layers(vertex: usize) -> Option<Vec<Vec<Vec<usize>>>> {
    let v: Vec<Vec<Vec<usize>>> = match vertex {
        0 => vec![
            vec![vec![1], vec![2], vec![1, 3], vec![2, 4], vec![1]],
            vec![vec![2], vec![1, 3], vec![2, 2, 4], vec![1, 3], vec![2]],
            vec![vec![3], vec![2, 4], vec![1, 3, 3], vec![2, 4], vec![3]],
            vec![vec![4], vec![1, 3], vec![2, 4], vec![3], vec![4]],
        ],
        1 => vec![
            vec![vec![1], vec![2], vec![1, 3], vec![2], vec![1]],
            vec![
                vec![2],
                vec![1, 3],
                vec![2, 2, 2, 4],
                vec![1, 3, 3],
                vec![2],
            ],
            vec![vec![3], vec![2, 2, 4], vec![1, 3, 3], vec![2, 4], vec![3]],
            vec![vec![4], vec![3], vec![2, 4], vec![3], vec![4]],
        ],
        _ => return None,
    };
    Some(v)
}

/// Arrow counts of the quiver of `B` after mutation at `vertex`.
pub fn expected_quiver(vertex: usize) -> Option<Vec<Vec<usize>>> {
    match vertex {
        0 => Some(vec![
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 0],
        ]),
        1 => Some(vec![
            vec![0, 1, 0, 0],
            vec![1, 0, 2, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 0],
        ]),
        _ => None,
    }
}

/// Expected obstruction pair and approximation targets, zero-based.
pub fn expected_obstruction(vertex: usize) -> Option<((usize, usize), Vec<usize>)> {
    match vertex {
        0 => Some(((0, 3), vec![1])),
        1 => Some(((1, 2), vec![0, 2])),
        _ => None,
    }
}

fn factors(layer: &[usize]) -> Vec<usize> {
    layer
        .iter()
        .enumerate()
        .flat_map(|(v, &n)| std::iter::repeat_n(v + 1, n))
        .collect()
}

fn fmt_layers(layers: &[Vec<usize>]) -> String {
    let parts: Vec<String> = layers
        .iter()
        .map(|l| l.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
        .collect();
    format!("[{}]", parts.join("|"))
}

fn fmt_pair(p: Option<(usize, usize)>) -> String {
    p.map_or("none".into(), |(i, j)| format!("({},{})", i + 1, j + 1))
}

fn fmt_counts(m: &[Vec<usize>]) -> String {
    m.iter()
        .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn verify_mutation(vertex: usize) -> Result<Vec<Check>> {
    let (Some(layers), Some(quiver), Some((pair, targets))) = (
        expected_layers(vertex),
        expected_quiver(vertex),
        expected_obstruction(vertex),
    ) else {
        return Err(Error::Usage(format!(
            "no reference data for vertex {}",
            vertex + 1
        )));
    };
    let tag = format!("wild.mu{}", vertex + 1);
    let m = wild_mutation(vertex)?;
    let q = m.quiver();
    let mut out = vec![
        Check::new(
            format!("{tag}.approximation"),
            fmt_layers(&[targets.iter().map(|t| t + 1).collect()]),
            fmt_layers(&[m.approximation_targets.iter().map(|t| t + 1).collect()]),
        ),
        Check::new(
            format!("{tag}.dim"),
            layers.iter().flatten().map(Vec::len).sum::<usize>(),
            m.end.algebra.dim(),
        ),
        Check::new(format!("{tag}.arrows"), 7, q.arrows().len()),
        Check::new(
            format!("{tag}.quiver"),
            fmt_counts(&quiver),
            fmt_counts(&q.arrow_count_matrix()),
        ),
        Check::new(
            format!("{tag}.obstruction"),
            fmt_pair(Some(pair)),
            fmt_pair(cellularity_obstruction(&q)),
        ),
    ];
    for r in projective_report(&m.end.algebra)? {
        let p = format!("{tag}.P{}", r.vertex + 1);
        let got: Vec<Vec<usize>> = r.layers.iter().map(|l| factors(l)).collect();
        out.push(Check::new(
            format!("{p}.layers"),
            fmt_layers(&layers[r.vertex]),
            fmt_layers(&got),
        ));
        out.push(Check::new(format!("{p}.top"), 1, r.top));
        out.push(Check::new(format!("{p}.socle"), 1, r.socle));
    }
    Ok(out)
}

/// Every check: graded dimensions and both mutations.
pub fn verify_all() -> Result<Vec<Check>> {
    let f = build_wild_fixture()?;
    let mut out = verify_graded_dims(&f)?;
    out.push(Check::new(
        "wild.obstruction.stalk",
        "none",
        fmt_pair(cellularity_obstruction(f.algebra.quiver())),
    ));
    for v in [0, 1] {
        out.extend(verify_mutation(v)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_dimensions() {
        let f = build_wild_fixture().unwrap();
        assert_eq!(f.algebra.dim(), 30);
        let c = f.algebra.cartan_matrix();
        assert_eq!((c[2][0], c[3][0]), (1, 0));
        assert!(verify_graded_dims(&f).unwrap().iter().all(|c| c.pass));
    }

    #[test]
    fn obstruction_on_symmetric_quivers() {
        let a = build_algebra(&fixtures::a222()).unwrap();
        assert_eq!(cellularity_obstruction(a.quiver()), None);
        let q = Quiver::from_spec(
            &["1", "2", "3"],
            &[("a", "1", "3", 1), ("b", "2", "3", 1), ("c", "3", "2", 1)],
        )
        .unwrap();
        assert_eq!(cellularity_obstruction(&q), Some((0, 2)));
    }
}
