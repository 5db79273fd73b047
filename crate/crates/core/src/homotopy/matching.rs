//! Isomorphism certificates between bound quiver presentations.
//!
//! A witness is a vertex bijection, an arrow bijection over it and a
//! rescaling of each arrow by a fourth root of unity. Images of relations
//! have Gaussian rational coefficients; both the real and imaginary parts
//! must lie in the other ideal, in both directions.

use std::fmt;

use crate::algebra::{build_algebra, FdAlgebra};
use crate::error::Result;
use crate::presentation::BoundQuiverPresentation;
use crate::quiver::{Path, PathCombination, Quiver};

/// Search budget on candidate witnesses.
const MAX_CANDIDATES: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchWitness {
    /// Vertex of the second presentation for each vertex of the first.
    pub vertex_map: Vec<usize>,
    /// Arrow of the second presentation for each arrow of the first.
    pub arrow_map: Vec<usize>,
    /// Arrow `a` is sent to `i^{scalars[a]}` times its image.
    pub scalars: Vec<u8>,
}

impl MatchWitness {
    pub fn uses_only_signs(&self) -> bool {
        self.scalars.iter().all(|s| s % 2 == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(i, &j)| i == j)
            && self.arrow_map.iter().enumerate().all(|(i, &j)| i == j)
            && self.scalars.iter().all(|&s| s == 0)
    }

    /// Arrows sent to a non-trivial multiple of their image.
    pub fn rescaled(&self) -> Vec<usize> {
        (0..self.scalars.len())
            .filter(|&a| self.scalars[a] != 0)
            .collect()
    }
}

fn unit_name(e: u8) -> &'static str {
    ["1", "i", "-1", "-i"][(e % 4) as usize]
}

#[derive(Clone, Debug)]
pub struct MatchResult {
    pub matched: bool,
    pub witness: Option<MatchWitness>,
    pub reason: String,
}

impl fmt::Display for MatchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.matched, self.reason)
    }
}

/// Renders a witness with arrow and vertex names.
pub fn describe_witness(
    p: &BoundQuiverPresentation,
    q: &BoundQuiverPresentation,
    w: &MatchWitness,
) -> String {
    let (pq, qq) = (&p.quiver, &q.quiver);
    let vs: Vec<String> = w
        .vertex_map
        .iter()
        .enumerate()
        .map(|(i, &j)| format!("{}->{}", pq.vertices()[i], qq.vertices()[j]))
        .collect();
    let arrows: Vec<String> = w
        .arrow_map
        .iter()
        .enumerate()
        .map(|(a, &b)| {
            let s = w.scalars[a];
            if s == 0 {
                format!("{}->{}", pq.arrow(a).id, qq.arrow(b).id)
            } else {
                format!("{}->{}*{}", pq.arrow(a).id, unit_name(s), qq.arrow(b).id)
            }
        })
        .collect();
    format!("vertices {}; arrows {}", vs.join(" "), arrows.join(" "))
}

/// `(real, imaginary)` parts of the image of `r`.
fn image(r: &PathCombination, tq: &Quiver, m: &Assignment) -> (PathCombination, PathCombination) {
    let mut re = PathCombination::zero();
    let mut im = PathCombination::zero();
    for (p, c) in r.terms() {
        let arrows: Vec<usize> = p.arrows.iter().map(|&a| m.arrows[a]).collect();
        let path = if arrows.is_empty() {
            tq.trivial_path(m.vertices[p.source])
        } else {
            tq.path(&arrows).expect("arrow map respects endpoints")
        };
        let e: u32 = p.arrows.iter().map(|&a| u32::from(m.scalars[a])).sum();
        match e % 4 {
            0 => re.add_term(path, c.clone()),
            1 => im.add_term(path, c.clone()),
            2 => re.add_term(path, -c.clone()),
            _ => im.add_term(path, -c.clone()),
        }
    }
    (re, im)
}

struct Assignment<'a> {
    vertices: &'a [usize],
    arrows: &'a [usize],
    scalars: &'a [u8],
}

fn relations_map_into(p: &BoundQuiverPresentation, target: &FdAlgebra, m: &Assignment) -> bool {
    let tq = target.quiver();
    p.relations.iter().all(|r| {
        let (re, im) = image(r, tq, m);
        target.reduce(&re).is_zero() && target.reduce(&im).is_zero()
    })
}

fn max_length(a: &FdAlgebra) -> usize {
    a.basis().iter().map(Path::len).max().unwrap_or(0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All arrow bijections over the vertex map `sigma`.
fn arrow_bijections(
    p: &BoundQuiverPresentation,
    q: &BoundQuiverPresentation,
    sigma: &[usize],
) -> Vec<Vec<usize>> {
    let pa = p.quiver.arrows();
    let qa = q.quiver.arrows();
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for (a, ar) in pa.iter().enumerate() {
        let key = (sigma[ar.source], sigma[ar.target]);
        match groups.iter_mut().find(|(src, _)| {
            let b = &pa[src[0]];
            (sigma[b.source], sigma[b.target]) == key
        }) {
            Some(g) => g.0.push(a),
            None => {
                let tgt: Vec<usize> = (0..qa.len())
                    .filter(|&b| (qa[b].source, qa[b].target) == key)
                    .collect();
                groups.push((vec![a], tgt));
            }
        }
    }
    let mut out: Vec<Vec<usize>> = vec![vec![usize::MAX; pa.len()]];
    for (src, tgt) in groups {
        let mut next = Vec::new();
        for perm in permutations(tgt.len()) {
            for partial in &out {
                let mut m = partial.clone();
                for (k, &a) in src.iter().enumerate() {
                    m[a] = tgt[perm[k]];
                }
                next.push(m);
            }
        }
        out = next;
    }
    out
}

/// Scalar vectors: signs first, then vectors involving `±i`.
fn scalar_vectors(m: usize) -> impl Iterator<Item = Vec<u8>> {
    let signs = (0..1usize << m).map(move |bits| {
        (0..m)
            .map(|a| if bits >> a & 1 == 1 { 2 } else { 0 })
            .collect::<Vec<u8>>()
    });
    let rest = (0..4usize.pow(m as u32))
        .map(move |mut code| {
            (0..m)
                .map(|_| {
                    let d = (code % 4) as u8;
                    code /= 4;
                    d
                })
                .collect::<Vec<u8>>()
        })
        .filter(|v| v.iter().any(|s| s % 2 == 1));
    signs.chain(rest)
}

/// Searches for a witness that the two presentations define isomorphic
/// algebras.
pub fn presentation_match(
    p: &BoundQuiverPresentation,
    q: &BoundQuiverPresentation,
) -> Result<MatchResult> {
    let no = |reason: &str| {
        Ok(MatchResult {
            matched: false,
            witness: None,
            reason: reason.to_string(),
        })
    };
    let n = p.quiver.vertex_count();
    if n != q.quiver.vertex_count() {
        return no("vertex counts differ");
    }
    if p.quiver.arrows().len() != q.quiver.arrows().len() {
        return no("arrow counts differ");
    }
    let ap = build_algebra(p)?;
    let aq = build_algebra(q)?;
    if ap.dim() != aq.dim() {
        return no("dimensions differ");
    }
    let (cp, cq) = (ap.cartan_matrix(), aq.cartan_matrix());
    let (mp, mq) = (p.quiver.arrow_count_matrix(), q.quiver.arrow_count_matrix());
    let sigmas: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|s| {
            (0..n).all(|i| (0..n).all(|j| cp[i][j] == cq[s[i]][s[j]] && mp[i][j] == mq[s[i]][s[j]]))
        })
        .collect();
    if sigmas.is_empty() {
        return no("Cartan matrices or arrow counts differ under every vertex bijection");
    }
    if max_length(&aq) >= p.bound || max_length(&ap) >= q.bound {
        return no("nilpotency bounds are incompatible");
    }
    let m = p.quiver.arrows().len();
    let mut budget = MAX_CANDIDATES;
    for pass_signs_only in [true, false] {
        for sigma in &sigmas {
            for amap in arrow_bijections(p, q, sigma) {
                let mut inv_sigma = vec![0; n];
                for (i, &j) in sigma.iter().enumerate() {
                    inv_sigma[j] = i;
                }
                let mut inverse = vec![0; m];
                for (a, &b) in amap.iter().enumerate() {
                    inverse[b] = a;
                }
                let candidates: Box<dyn Iterator<Item = Vec<u8>>> = if pass_signs_only {
                    Box::new(scalar_vectors(m).take(1 << m))
                } else {
                    Box::new(scalar_vectors(m).skip(1 << m))
                };
                for sc in candidates {
                    if budget == 0 {
                        return no("search budget exhausted without a witness");
                    }
                    budget -= 1;
                    let fwd = Assignment {
                        vertices: sigma,
                        arrows: &amap,
                        scalars: &sc,
                    };
                    if !relations_map_into(p, &aq, &fwd) {
                        continue;
                    }
                    let inv_sc: Vec<u8> = (0..m).map(|b| (4 - sc[inverse[b]]) % 4).collect();
                    let back = Assignment {
                        vertices: &inv_sigma,
                        arrows: &inverse,
                        scalars: &inv_sc,
                    };
                    if !relations_map_into(q, &ap, &back) {
                        continue;
                    }
                    let w = MatchWitness {
                        vertex_map: sigma.clone(),
                        arrow_map: amap,
                        scalars: sc,
                    };
                    let reason = describe_witness(p, q, &w);
                    return Ok(MatchResult {
                        matched: true,
                        witness: Some(w),
                        reason,
                    });
                }
            }
        }
    }
    no("no witness among vertex and arrow bijections with fourth-root rescalings")
}
