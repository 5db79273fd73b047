//! Brauer graphs, their algebras and the tilting-discreteness criterion.
//!
//! Text format:
//!
//! ```text
//! v u1 mult=2
//! v u2 mult=2
//! e E1 a@u1 b@u2
//! cyc u2: b c
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::One;

use crate::error::{Error, Result};
use crate::presentation::BoundQuiverPresentation;
use crate::quiver::{valid_ident, Arrow, PathCombination, Quiver};
use crate::scalar::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerVertex {
    pub id: String,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfEdge {
    pub id: String,
    pub vertex: usize,
    pub edge: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerEdge {
    pub id: String,
    pub halves: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerGraph {
    vertices: Vec<BrauerVertex>,
    edges: Vec<BrauerEdge>,
    halves: Vec<HalfEdge>,
    /// Half-edge indices at each vertex in cyclic order.
    cyclic: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCatalogueEntry {
    pub name: String,
    pub graph: BrauerGraph,
}

/// Outcome of the discreteness test with the cycles that decide it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discreteness {
    pub discrete: bool,
    /// Edge ids of each witnessing cycle, in declaration order.
    pub cycles: Vec<Vec<String>>,
    pub reason: String,
}

impl std::fmt::Display for Discreteness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.discrete, self.reason)
    }
}

impl BrauerGraph {
    /// `vertices`: `(id, multiplicity)`; `edges`: `(id, (half, vertex), (half, vertex))`;
    /// `orders`: `(vertex, half-edge ids in cyclic order)` for every vertex of
    /// valency above one.
    pub fn new(
        vertices: &[(&str, u32)],
        edges: &[(&str, (&str, &str), (&str, &str))],
        orders: &[(&str, &[&str])],
    ) -> Result<Self> {
        let vs: Vec<BrauerVertex> = vertices
            .iter()
            .map(|&(id, mult)| BrauerVertex {
                id: id.into(),
                mult,
            })
            .collect();
        let vidx = |id: &str| {
            vs.iter()
                .position(|v| v.id == id)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex `{id}`")))
        };
        let mut halves = Vec::new();
        let mut es = Vec::new();
        for (k, &(id, (h1, v1), (h2, v2))) in edges.iter().enumerate() {
            for (h, v) in [(h1, v1), (h2, v2)] {
                halves.push(HalfEdge {
                    id: h.into(),
                    vertex: vidx(v)?,
                    edge: k,
                });
            }
            es.push(BrauerEdge {
                id: id.into(),
                halves: [2 * k, 2 * k + 1],
            });
        }
        let mut cyclic: Vec<Vec<usize>> = (0..vs.len())
            .map(|v| {
                (0..halves.len())
                    .filter(|&h| halves[h].vertex == v)
                    .collect()
            })
            .collect();
        for &(v, order) in orders {
            let vi = vidx(v)?;
            let mut hs = Vec::new();
            for h in order {
                let hi = halves
                    .iter()
                    .position(|x| x.id == *h)
                    .ok_or_else(|| Error::InvalidGraph(format!("unknown half-edge `{h}`")))?;
                hs.push(hi);
            }
            cyclic[vi] = hs;
        }
        let g = Self {
            vertices: vs,
            edges: es,
            halves,
            cyclic,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        if self.edges.is_empty() {
            return Err(Error::InvalidGraph("a Brauer graph needs an edge".into()));
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if v.mult == 0 {
                return Err(Error::InvalidGraph(format!(
                    "vertex `{}` has multiplicity 0",
                    v.id
                )));
            }
            if self.vertices[..i].iter().any(|w| w.id == v.id) {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{}`", v.id)));
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if self.edges[..i].iter().any(|f| f.id == e.id) || !valid_ident(&e.id) {
                return Err(Error::InvalidGraph(format!(
                    "bad or duplicate edge id `{}`",
                    e.id
                )));
            }
        }
        for (i, h) in self.halves.iter().enumerate() {
            if self.halves[..i].iter().any(|g| g.id == h.id) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate half-edge `{}`",
                    h.id
                )));
            }
        }
        for (v, cyc) in self.cyclic.iter().enumerate() {
            let at: BTreeSet<usize> = (0..self.halves.len())
                .filter(|&h| self.halves[h].vertex == v)
                .collect();
            let listed: BTreeSet<usize> = cyc.iter().copied().collect();
            if listed.len() != cyc.len() || listed != at {
                return Err(Error::InvalidGraph(format!(
                    "cyclic order at `{}` must list each of its half-edges once",
                    self.vertices[v].id
                )));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[BrauerVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[BrauerEdge] {
        &self.edges
    }

    pub fn valency(&self, v: usize) -> usize {
        self.cyclic[v].len()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let [a, b] = self.edges[e].halves;
        (self.halves[a].vertex, self.halves[b].vertex)
    }

    /// `m(u)·val(u) + m(v)·val(v)`.
    pub fn edge_dimension(&self, e: usize) -> usize {
        let (u, v) = self.endpoints(e);
        let w = |x: usize| self.vertices[x].mult as usize * self.valency(x);
        w(u) + w(v)
    }

    /// Vertices whose cycle produces no arrows. A valency-one vertex of
    /// multiplicity one is truncated, except that an edge keeps its first
    /// endpoint when both ends would be truncated.
    fn truncated(&self) -> Vec<bool> {
        let mut t: Vec<bool> = (0..self.vertices.len())
            .map(|v| self.valency(v) == 1 && self.vertices[v].mult == 1)
            .collect();
        for e in 0..self.edges.len() {
            let (u, v) = self.endpoints(e);
            if t[u] && t[v] {
                t[u] = false;
            }
        }
        t
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "v {} mult={}", v.id, v.mult);
        }
        for e in &self.edges {
            let [a, b] = e.halves;
            let h = |i: usize| {
                format!(
                    "{}@{}",
                    self.halves[i].id, self.vertices[self.halves[i].vertex].id
                )
            };
            let _ = writeln!(out, "e {} {} {}", e.id, h(a), h(b));
        }
        for (v, cyc) in self.cyclic.iter().enumerate() {
            let ids: Vec<&str> = cyc.iter().map(|&h| self.halves[h].id.as_str()).collect();
            let _ = writeln!(out, "cyc {}: {}", self.vertices[v].id, ids.join(" "));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut vertices: Vec<(String, u32)> = Vec::new();
        let mut edges: Vec<(String, (String, String), (String, String))> = Vec::new();
        let mut orders: Vec<(String, Vec<String>)> = Vec::new();
        let bad = |l: &str| Error::Parse(format!("bad graph line `{l}`"));
        for line in text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
        {
            let f: Vec<&str> = line.split_whitespace().collect();
            match f[0] {
                "v" => {
                    let mult = match f.get(2) {
                        Some(m) => m
                            .strip_prefix("mult=")
                            .and_then(|m| m.parse().ok())
                            .ok_or_else(|| bad(line))?,
                        None => 1,
                    };
                    vertices.push((f.get(1).ok_or_else(|| bad(line))?.to_string(), mult));
                }
                "e" => {
                    if f.len() != 4 {
                        return Err(bad(line));
                    }
                    let half = |s: &str| {
                        s.split_once('@')
                            .map(|(h, v)| (h.to_string(), v.to_string()))
                            .ok_or_else(|| bad(line))
                    };
                    edges.push((f[1].into(), half(f[2])?, half(f[3])?));
                }
                "cyc" => {
                    let (v, hs) = line[3..].split_once(':').ok_or_else(|| bad(line))?;
                    orders.push((
                        v.trim().to_string(),
                        hs.split_whitespace().map(str::to_string).collect(),
                    ));
                }
                _ => return Err(bad(line)),
            }
        }
        let vr: Vec<(&str, u32)> = vertices.iter().map(|(a, m)| (a.as_str(), *m)).collect();
        let er: Vec<(&str, (&str, &str), (&str, &str))> = edges
            .iter()
            .map(|(e, (h1, v1), (h2, v2))| {
                (
                    e.as_str(),
                    (h1.as_str(), v1.as_str()),
                    (h2.as_str(), v2.as_str()),
                )
            })
            .collect();
        let hs: Vec<Vec<&str>> = orders
            .iter()
            .map(|(_, h)| h.iter().map(String::as_str).collect())
            .collect();
        let or: Vec<(&str, &[&str])> = orders
            .iter()
            .zip(&hs)
            .map(|((v, _), h)| (v.as_str(), h.as_slice()))
            .collect();
        Self::new(&vr, &er, &or)
    }
}

fn arrow_name(vertex: &str, pos: usize) -> String {
    let name = format!("{vertex}_{pos}");
    if valid_ident(&name) {
        name
    } else {
        format!("v{name}")
    }
}

/// Presentation of the Brauer graph algebra. Quiver vertices are the edges
/// of `g`; the arrow `<vertex>_<k>` leaves the edge of the `k`-th half-edge in
/// the cyclic order at that vertex.
pub fn graph_to_presentation(g: &BrauerGraph) -> Result<BoundQuiverPresentation> {
    let truncated = g.truncated();
    let mut arrows: Vec<Arrow> = Vec::new();
    // Per half-edge: index of the arrow leaving it.
    let mut out_arrow: Vec<Option<usize>> = vec![None; g.halves.len()];
    // Per arrow: (vertex, position).
    let mut place: Vec<(usize, usize)> = Vec::new();
    for (v, cyc) in g.cyclic.iter().enumerate() {
        if truncated[v] {
            continue;
        }
        let c = cyc.len();
        for k in 0..c {
            let (h, next) = (cyc[k], cyc[(k + 1) % c]);
            out_arrow[h] = Some(arrows.len());
            place.push((v, k));
            arrows.push(Arrow {
                id: arrow_name(&g.vertices[v].id, k + 1),
                source: g.halves[h].edge,
                target: g.halves[next].edge,
                degree: 1,
            });
        }
    }
    let quiver = Quiver::new(g.edges.iter().map(|e| e.id.clone()).collect(), arrows)?;
    let path = |a: &[usize]| quiver.path(a).expect("cycle words compose");
    // The cycle at `v` read from half-edge `h`, as arrow indices.
    let cycle_word = |h: usize| -> Vec<usize> {
        let v = g.halves[h].vertex;
        let cyc = &g.cyclic[v];
        let start = cyc
            .iter()
            .position(|&x| x == h)
            .expect("half-edge at its vertex");
        (0..cyc.len())
            .map(|i| out_arrow[cyc[(start + i) % cyc.len()]].expect("arrow of untruncated vertex"))
            .collect()
    };
    let power = |h: usize| -> Vec<usize> {
        let m = g.vertices[g.halves[h].vertex].mult as usize;
        cycle_word(h).repeat(m)
    };

    let mut relations: Vec<PathCombination> = Vec::new();
    for a in 0..quiver.arrows().len() {
        for b in 0..quiver.arrows().len() {
            if quiver.arrow(a).target != quiver.arrow(b).source {
                continue;
            }
            let (va, ka) = place[a];
            let (vb, kb) = place[b];
            if !(va == vb && kb == (ka + 1) % g.valency(va)) {
                relations.push(PathCombination::from_path(path(&[a, b])));
            }
        }
    }
    for e in &g.edges {
        let [h1, h2] = e.halves;
        let (t1, t2) = (
            truncated[g.halves[h1].vertex],
            truncated[g.halves[h2].vertex],
        );
        if !t1 && !t2 {
            let mut r = PathCombination::from_path(path(&power(h1)));
            r.add_term(path(&power(h2)), -Q::one());
            relations.push(r);
        }
        for (h, t) in [(h1, t1), (h2, t2)] {
            if !t {
                let mut w = power(h);
                w.push(w[0]);
                relations.push(PathCombination::from_path(path(&w)));
            }
        }
    }
    relations.retain(|r| !r.is_zero());
    let bound = (0..g.edges.len())
        .map(|e| g.edge_dimension(e))
        .max()
        .unwrap_or(1)
        + 1;
    BoundQuiverPresentation::new(quiver, relations, bound)
}

/// Tilting discreteness: no cycle of even length and at most one of odd
/// length in the underlying multigraph.
pub fn is_tilting_discrete(g: &BrauerGraph) -> Discreteness {
    let n = g.vertices.len();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut tree_edge = vec![false; g.edges.len()];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for e in 0..g.edges.len() {
                let (u, v) = g.endpoints(e);
                let y = if u == x {
                    v
                } else if v == x {
                    u
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    tree_edge[e] = true;
                    parent[y] = Some((x, e));
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for e in (0..g.edges.len()).filter(|&e| !tree_edge[e]) {
        let (mut u, mut v) = g.endpoints(e);
        let mut cyc = vec![e];
        while u != v {
            if depth[u] < depth[v] {
                std::mem::swap(&mut u, &mut v);
            }
            let (p, pe) = parent[u].expect("non-root has a parent");
            cyc.push(pe);
            u = p;
        }
        cyc.sort_unstable();
        cycles.push(cyc);
    }
    let names = |c: &Vec<usize>| c.iter().map(|&e| g.edges[e].id.clone()).collect::<Vec<_>>();
    let fmt = |c: &Vec<usize>| format!("({})", names(c).join(","));
    let even: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() % 2 == 0).collect();
    let (discrete, witness, reason) = if let Some(c) = even.first() {
        (false, vec![names(c)], format!("even cycle {}", fmt(c)))
    } else if cycles.len() > 1 {
        let all: Vec<String> = cycles.iter().map(fmt).collect();
        (
            false,
            cycles.iter().map(names).collect(),
            format!("{} odd cycles {}", cycles.len(), all.join(" ")),
        )
    } else if let Some(c) = cycles.first() {
        (true, vec![names(c)], format!("one odd cycle {}", fmt(c)))
    } else {
        (true, Vec::new(), "no cycles".to_string())
    };
    Discreteness {
        discrete,
        cycles: witness,
        reason,
    }
}

fn line3(mults: [u32; 3]) -> BrauerGraph {
    BrauerGraph::new(
        &[("u1", mults[0]), ("u2", mults[1]), ("u3", mults[2])],
        &[
            ("E1", ("a", "u1"), ("b", "u2")),
            ("E2", ("c", "u2"), ("d", "u3")),
        ],
        &[("u2", &["b", "c"])],
    )
    .expect("line graph")
}

/// Straight line with `n` edges and all multiplicities one.
pub fn brauer_line(n: usize) -> Result<BrauerGraph> {
    if n == 0 {
        return Err(Error::InvalidGraph(
            "a Brauer line needs at least one edge".into(),
        ));
    }
    let vids: Vec<String> = (0..=n).map(|i| format!("v{i}")).collect();
    let eids: Vec<String> = (1..=n).map(|i| format!("E{i}")).collect();
    let hs: Vec<(String, String)> = (1..=n)
        .map(|i| (format!("l{i}"), format!("r{i}")))
        .collect();
    let vr: Vec<(&str, u32)> = vids.iter().map(|v| (v.as_str(), 1)).collect();
    let er: Vec<(&str, (&str, &str), (&str, &str))> = (0..n)
        .map(|i| {
            (
                eids[i].as_str(),
                (hs[i].0.as_str(), vids[i].as_str()),
                (hs[i].1.as_str(), vids[i + 1].as_str()),
            )
        })
        .collect();
    let inner: Vec<[&str; 2]> = (1..n)
        .map(|i| [hs[i - 1].1.as_str(), hs[i].0.as_str()])
        .collect();
    let or: Vec<(&str, &[&str])> = (1..n)
        .map(|i| (vids[i].as_str(), &inner[i - 1][..]))
        .collect();
    BrauerGraph::new(&vr, &er, &or)
}

/// One loop at a vertex of multiplicity one.
pub fn kronecker_graph() -> BrauerGraph {
    BrauerGraph::new(
        &[("u", 1)],
        &[("E", ("a", "u"), ("b", "u"))],
        &[("u", &["a", "b"])],
    )
    .expect("loop graph")
}

/// Two vertices joined by two edges.
pub fn double_edge() -> BrauerGraph {
    BrauerGraph::new(
        &[("u", 1), ("v", 1)],
        &[
            ("e1", ("a", "u"), ("b", "v")),
            ("e2", ("c", "u"), ("d", "v")),
        ],
        &[("u", &["a", "c"]), ("v", &["b", "d"])],
    )
    .expect("double edge")
}

/// A triangle with a loop at one corner: two odd cycles.
pub fn triangle_with_loop() -> BrauerGraph {
    BrauerGraph::new(
        &[("x", 1), ("y", 1), ("z", 1)],
        &[
            ("e1", ("a", "x"), ("b", "y")),
            ("e2", ("c", "y"), ("d", "z")),
            ("e3", ("f", "z"), ("g", "x")),
            ("e4", ("h", "x"), ("i", "x")),
        ],
        &[
            ("x", &["a", "g", "h", "i"]),
            ("y", &["b", "c"]),
            ("z", &["d", "f"]),
        ],
    )
    .expect("triangle with loop")
}

pub fn catalogue(name: &str) -> Result<GraphCatalogueEntry> {
    let graph = match name {
        "A(2,2,2)" => line3([2, 2, 2]),
        "A(2,2,1)" => line3([2, 2, 1]),
        "A(2,1,2)" => line3([2, 1, 2]),
        "kronecker" => kronecker_graph(),
        _ => {
            let n = name
                .strip_prefix("brauer-line(")
                .and_then(|s| s.strip_suffix(')'))
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| Error::UnknownName(name.to_string()))?;
            brauer_line(n)?
        }
    };
    Ok(GraphCatalogueEntry {
        name: name.to_string(),
        graph,
    })
}

/// The four tame representatives.
pub const TAME_NAMES: [&str; 4] = ["A(2,2,2)", "A(2,2,1)", "A(2,1,2)", "kronecker"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;

    fn alg(name: &str) -> crate::algebra::FdAlgebra {
        build_algebra(&graph_to_presentation(&catalogue(name).unwrap().graph).unwrap()).unwrap()
    }

    #[test]
    fn kronecker_algebra() {
        let p = graph_to_presentation(&kronecker_graph()).unwrap();
        let a = build_algebra(&p).unwrap();
        assert_eq!(a.dim(), 4);
        let x = a.arrow_element(0);
        let y = a.arrow_element(1);
        assert!(a.mul(&x, &x).is_zero());
        assert!(a.mul(&y, &y).is_zero());
        assert_eq!(a.mul(&x, &y), a.mul(&y, &x));
        assert!(!a.mul(&x, &y).is_zero());
    }

    #[test]
    fn line_one_is_dual_numbers() {
        let a = alg("brauer-line(1)");
        assert_eq!(a.dim(), 2);
        assert_eq!(a.quiver().arrows().len(), 1);
    }

    #[test]
    fn edge_dimension_formula() {
        for name in TAME_NAMES {
            let g = catalogue(name).unwrap().graph;
            let a = build_algebra(&graph_to_presentation(&g).unwrap()).unwrap();
            let c = a.cartan_matrix();
            for e in 0..g.edges().len() {
                assert_eq!(
                    c[e].iter().sum::<usize>(),
                    g.edge_dimension(e),
                    "{name} edge {e}"
                );
            }
        }
    }

    #[test]
    fn catalogue_cartans() {
        assert_eq!(
            alg("A(2,2,2)").cartan_matrix(),
            vec![vec![4, 2], vec![2, 4]]
        );
        assert_eq!(
            alg("A(2,2,1)").cartan_matrix(),
            vec![vec![4, 2], vec![2, 3]]
        );
        assert_eq!(
            alg("A(2,1,2)").cartan_matrix(),
            vec![vec![3, 1], vec![1, 3]]
        );
    }

    #[test]
    fn socles_one_dimensional_and_cartan_symmetric() {
        for name in TAME_NAMES
            .iter()
            .map(|s| s.to_string())
            .chain((1..=4).map(|n| format!("brauer-line({n})")))
        {
            let a = alg(&name);
            let c = a.cartan_matrix();
            for i in 0..c.len() {
                assert_eq!(a.socle(i).len(), 1, "{name} P{i}");
                for j in 0..c.len() {
                    assert_eq!(c[i][j], c[j][i]);
                }
            }
        }
    }

    #[test]
    fn discreteness() {
        for name in TAME_NAMES {
            assert!(is_tilting_discrete(&catalogue(name).unwrap().graph).discrete);
        }
        let d = is_tilting_discrete(&double_edge());
        assert!(!d.discrete);
        assert_eq!(d.to_string(), "false: even cycle (e1,e2)");
        let t = is_tilting_discrete(&triangle_with_loop());
        assert!(!t.discrete);
        assert_eq!(t.cycles.len(), 2);
    }

    #[test]
    fn text_round_trip() {
        let g = catalogue("A(2,1,2)").unwrap().graph;
        let back = BrauerGraph::from_text(&g.to_text()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(catalogue("A(3,3,3)"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn rejects_bad_cyclic_order() {
        let r = BrauerGraph::new(
            &[("u", 1), ("v", 1)],
            &[("E", ("a", "u"), ("b", "v"))],
            &[("u", &["a", "b"])],
        );
        assert!(matches!(r, Err(Error::InvalidGraph(_))));
    }
}
