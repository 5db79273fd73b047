//! Finite quivers, paths and linear combinations of paths.
//!
//! Paths are written left to right in traversal order: `mu*nu` first follows
//! `mu`, then `nu`. For a bound quiver algebra this makes `e_i A e_j` the span
//! of paths from `i` to `j`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{fmt_q, parse_q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

pub(crate) fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphanumeric() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '.')
        && !s.starts_with("e_")
        && s.parse::<f64>().is_err()
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let q = Self { vertices, arrows };
        q.validate()?;
        Ok(q)
    }

    /// Builds a quiver from string ids, `(id, source, target, degree)`.
    pub fn from_spec(vertices: &[&str], arrows: &[(&str, &str, &str, u32)]) -> Result<Self> {
        let vs: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
        let find = |v: &str| {
            vs.iter()
                .position(|w| w == v)
                .ok_or_else(|| Error::InvalidQuiver(format!("undeclared vertex `{v}`")))
        };
        let mut arr = Vec::with_capacity(arrows.len());
        for &(id, s, t, d) in arrows {
            arr.push(Arrow {
                id: id.to_string(),
                source: find(s)?,
                target: find(t)?,
                degree: d,
            });
        }
        Self::new(vs, arr)
    }

    fn validate(&self) -> Result<()> {
        for (i, v) in self.vertices.iter().enumerate() {
            if v.is_empty() || v.contains(char::is_whitespace) {
                return Err(Error::InvalidQuiver(format!("bad vertex id `{v}`")));
            }
            if self.vertices[..i].contains(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if !valid_ident(&a.id) {
                return Err(Error::InvalidQuiver(format!("bad arrow id `{}`", a.id)));
            }
            if self.arrows[..i].iter().any(|b| b.id == a.id) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow `{}`", a.id)));
            }
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(Error::InvalidQuiver(format!(
                    "arrow `{}` has an undeclared endpoint",
                    a.id
                )));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Number of arrows from `i` to `j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.source == i && a.target == j)
            .count()
    }

    pub fn arrow_count_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    id: a.id.clone(),
                    source: a.target,
                    target: a.source,
                    degree: a.degree,
                })
                .collect(),
        }
    }

    pub fn trivial_path(&self, v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        let ar = &self.arrows[a];
        Path {
            source: ar.source,
            target: ar.target,
            arrows: vec![a],
        }
    }

    /// Path from arrow indices; `None` if not composable or empty.
    pub fn path(&self, arrows: &[usize]) -> Option<Path> {
        let first = self.arrows.get(*arrows.first()?)?;
        let mut cur = first.target;
        for &a in &arrows[1..] {
            let ar = self.arrows.get(a)?;
            if ar.source != cur {
                return None;
            }
            cur = ar.target;
        }
        Some(Path {
            source: first.source,
            target: cur,
            arrows: arrows.to_vec(),
        })
    }

    pub fn concat(&self, p: &Path, q: &Path) -> Option<Path> {
        if p.target != q.source {
            return None;
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        Some(Path {
            source: p.source,
            target: q.target,
            arrows,
        })
    }

    pub fn path_degree(&self, p: &Path) -> u32 {
        p.arrows.iter().map(|&a| self.arrows[a].degree).sum()
    }

    /// All paths of length `< bound`, trivial paths included, grouped by
    /// length: `result[k]` holds the paths of length `k`.
    pub fn paths_by_length(&self, bound: usize) -> Vec<Vec<Path>> {
        let mut layers: Vec<Vec<Path>> = Vec::new();
        if bound == 0 {
            return layers;
        }
        layers.push(
            (0..self.vertex_count())
                .map(|v| self.trivial_path(v))
                .collect(),
        );
        for k in 1..bound {
            let mut next = Vec::new();
            if k == 1 {
                for a in 0..self.arrows.len() {
                    next.push(self.arrow_path(a));
                }
            } else {
                for p in &layers[k - 1] {
                    for (a, ar) in self.arrows.iter().enumerate() {
                        if ar.source == p.target {
                            let mut arrows = p.arrows.clone();
                            arrows.push(a);
                            next.push(Path {
                                source: p.source,
                                target: ar.target,
                                arrows,
                            });
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layers.push(next);
        }
        layers
    }

    pub fn fmt_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.source])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].id.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    pub fn parse_path(&self, s: &str) -> Result<Path> {
        let s = s.trim();
        if let Some(v) = s.strip_prefix("e_") {
            let v = self
                .vertex_index(v)
                .ok_or_else(|| Error::Parse(format!("unknown vertex in `{s}`")))?;
            return Ok(self.trivial_path(v));
        }
        let ids: Result<Vec<usize>> = s
            .split('*')
            .map(|t| {
                self.arrow_index(t.trim())
                    .ok_or_else(|| Error::Parse(format!("unknown arrow `{}`", t.trim())))
            })
            .collect();
        self.path(&ids?)
            .ok_or_else(|| Error::Parse(format!("path `{s}` is not composable")))
    }

    pub fn fmt_combination(&self, c: &PathCombination) -> String {
        if c.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, x)) in c.sorted_terms().into_iter().enumerate() {
            let neg = *x < Q::zero();
            let mag = if neg { -x.clone() } else { x.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&fmt_q(&mag));
                out.push('*');
            }
            out.push_str(&self.fmt_path(p));
        }
        out
    }

    /// Parses `2*alpha*mu - 1/2*nu + e_1`, optionally `lhs = rhs`.
    pub fn parse_combination(&self, s: &str) -> Result<PathCombination> {
        if let Some((l, r)) = s.split_once('=') {
            let mut lhs = self.parse_combination(l)?;
            lhs.add_scaled(&self.parse_combination(r)?, &-Q::one());
            return Ok(lhs);
        }
        let mut out = PathCombination::zero();
        let mut term = String::new();
        let mut sign = Q::one();
        let flush = |term: &str, sign: &Q, out: &mut PathCombination| -> Result<()> {
            let t = term.trim();
            if t.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            if t == "0" {
                return Ok(());
            }
            let mut coeff = sign.clone();
            let mut arrows: Vec<&str> = Vec::new();
            let mut trivial: Option<Path> = None;
            for f in t.split('*').map(str::trim) {
                if f.starts_with(|c: char| c.is_ascii_digit()) && parse_q(f).is_ok() {
                    coeff *= parse_q(f)?;
                } else if f.starts_with("e_") {
                    trivial = Some(self.parse_path(f)?);
                } else {
                    arrows.push(f);
                }
            }
            let path = if arrows.is_empty() {
                trivial.ok_or_else(|| Error::Parse(format!("term `{t}` has no path")))?
            } else {
                self.parse_path(&arrows.join("*"))?
            };
            out.add_term(path, coeff);
            Ok(())
        };
        for ch in s.chars() {
            match ch {
                '+' | '-' => {
                    if !term.trim().is_empty() {
                        flush(&term, &sign, &mut out)?;
                        sign = Q::one();
                    }
                    term.clear();
                    if ch == '-' {
                        sign = -sign;
                    }
                }
                _ => term.push(ch),
            }
        }
        flush(&term, &sign, &mut out)?;
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Listing order: shorter first, then lexicographic on arrow indices.
    pub fn listing_key(&self) -> (usize, &[usize], usize) {
        (self.arrows.len(), &self.arrows, self.source)
    }

    /// Whether `other` occurs as a contiguous subpath.
    pub fn contains_subpath(&self, other: &Path) -> bool {
        if other.is_trivial() || other.len() > self.len() {
            return false;
        }
        self.arrows
            .windows(other.len())
            .any(|w| w == other.arrows.as_slice())
    }
}

/// Finite linear combination of paths with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PathCombination {
    terms: BTreeMap<Path, Q>,
}

impl PathCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        let mut c = Self::zero();
        c.add_term(p, Q::one());
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in listing order.
    pub fn sorted_terms(&self) -> Vec<(&Path, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.listing_key().cmp(&b.0.listing_key()));
        v
    }

    pub fn add_term(&mut self, p: Path, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, x| !x.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &PathCombination, c: &Q) {
        for (p, x) in &other.terms {
            self.add_term(p.clone(), x * c);
        }
    }

    /// Common `(source, target)` of all terms, if any.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let st = (first.source, first.target);
        it.all(|p| (p.source, p.target) == st).then_some(st)
    }

    pub fn min_length(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).min()
    }

    pub fn map_paths(&self, mut f: impl FnMut(&Path) -> (Path, Q)) -> PathCombination {
        let mut out = Self::zero();
        for (p, x) in &self.terms {
            let (np, c) = f(p);
            out.add_term(np, x * c);
        }
        out
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}:{:?}", self.source, self.target, self.arrows)
    }
}
