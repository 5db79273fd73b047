//! Bound quiver presentations and their text format.
//!
//! ```text
//! presentation v1
//! field Q
//! vertex 1
//! arrow alpha 1 1 1
//! relation alpha*alpha - mu*nu*mu*nu
//! bound 7
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::quiver::{Path, PathCombination, Quiver};
use crate::scalar::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiverPresentation {
    pub field: FieldSpec,
    pub quiver: Quiver,
    pub relations: Vec<PathCombination>,
    /// Every path of length at least `bound` vanishes.
    pub bound: usize,
}

impl BoundQuiverPresentation {
    pub fn new(quiver: Quiver, relations: Vec<PathCombination>, bound: usize) -> Result<Self> {
        let p = Self {
            field: FieldSpec::RATIONAL,
            quiver,
            relations,
            bound,
        };
        p.validate()?;
        Ok(p)
    }

    /// Parses each relation string against `quiver`.
    pub fn from_strs(quiver: Quiver, relations: &[&str], bound: usize) -> Result<Self> {
        let rels = relations
            .iter()
            .map(|r| quiver.parse_combination(r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(quiver, rels, bound)
    }

    /// Structural checks; returns warnings for conditions that are allowed
    /// but unusual.
    pub fn validate(&self) -> Result<Vec<String>> {
        if self.bound < 2 && self.quiver.arrows().iter().count() > 0 {
            return Err(Error::NonAdmissibleIdeal(format!(
                "bound {} would kill arrows",
                self.bound
            )));
        }
        if self.bound == 0 {
            return Err(Error::NonAdmissibleIdeal("bound must be positive".into()));
        }
        let mut warnings = Vec::new();
        for r in &self.relations {
            if r.is_zero() {
                continue;
            }
            if r.endpoints().is_none() {
                return Err(Error::NonAdmissibleIdeal(format!(
                    "relation `{}` mixes paths with different endpoints",
                    self.quiver.fmt_combination(r)
                )));
            }
            if r.min_length().unwrap_or(0) < 2 {
                return Err(Error::NonAdmissibleIdeal(format!(
                    "relation `{}` has a term of length < 2",
                    self.quiver.fmt_combination(r)
                )));
            }
        }
        let degrees: Vec<u32> = self.quiver.arrows().iter().map(|a| a.degree).collect();
        if degrees.windows(2).all(|w| w[0] == w[1]) {
            for r in &self.relations {
                let lens: Vec<usize> = r.terms().map(|(p, _)| p.len()).collect();
                if lens.windows(2).any(|w| w[0] != w[1]) {
                    warnings.push(format!(
                        "relation `{}` is not homogeneous in path length",
                        self.quiver.fmt_combination(r)
                    ));
                }
            }
        }
        Ok(warnings)
    }

    /// Whether every relation is homogeneous for the arrow degrees.
    pub fn inhomogeneous_relation(&self) -> Option<String> {
        self.relations.iter().find_map(|r| {
            let degs: Vec<u32> = r.terms().map(|(p, _)| self.quiver.path_degree(p)).collect();
            degs.windows(2)
                .any(|w| w[0] != w[1])
                .then(|| self.quiver.fmt_combination(r))
        })
    }

    /// Presentation of the opposite algebra: arrows and relation paths reversed.
    pub fn opposite(&self) -> Self {
        let quiver = self.quiver.opposite();
        let relations = self
            .relations
            .iter()
            .map(|r| {
                r.map_paths(|p| {
                    let mut arrows = p.arrows.clone();
                    arrows.reverse();
                    (
                        Path {
                            source: p.target,
                            target: p.source,
                            arrows,
                        },
                        num_traits::One::one(),
                    )
                })
            })
            .collect();
        Self {
            field: self.field,
            quiver,
            relations,
            bound: self.bound,
        }
    }

    pub fn to_text(&self) -> String {
        let q = &self.quiver;
        let mut out = String::from("presentation v1\n");
        let _ = writeln!(out, "field {}", self.field);
        for v in q.vertices() {
            let _ = writeln!(out, "vertex {v}");
        }
        for a in q.arrows() {
            let _ = writeln!(
                out,
                "arrow {} {} {} {}",
                a.id,
                q.vertices()[a.source],
                q.vertices()[a.target],
                a.degree
            );
        }
        for r in &self.relations {
            let _ = writeln!(out, "relation {}", q.fmt_combination(r));
        }
        let _ = writeln!(out, "bound {}", self.bound);
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        match lines.next() {
            Some("presentation v1") => {}
            other => {
                return Err(Error::Parse(format!(
                    "expected `presentation v1` header, found {other:?}"
                )))
            }
        }
        let mut field = FieldSpec::RATIONAL;
        let mut vertices: Vec<String> = Vec::new();
        let mut arrows: Vec<(String, String, String, u32)> = Vec::new();
        let mut rel_src: Vec<String> = Vec::new();
        let mut bound = None;
        for line in lines {
            let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "field" => field = rest.parse()?,
                "vertex" => vertices.push(rest.to_string()),
                "arrow" => {
                    let f: Vec<&str> = rest.split_whitespace().collect();
                    if f.len() != 3 && f.len() != 4 {
                        return Err(Error::Parse(format!("bad arrow line `{line}`")));
                    }
                    let deg = match f.get(3) {
                        Some(d) => d
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad degree in `{line}`")))?,
                        None => 1,
                    };
                    arrows.push((f[0].into(), f[1].into(), f[2].into(), deg));
                }
                "relation" => rel_src.push(rest.to_string()),
                "bound" => {
                    bound = Some(
                        rest.parse()
                            .map_err(|_| Error::Parse(format!("bad bound `{rest}`")))?,
                    )
                }
                _ => return Err(Error::Parse(format!("unknown line `{line}`"))),
            }
        }
        let vrefs: Vec<&str> = vertices.iter().map(String::as_str).collect();
        let arefs: Vec<(&str, &str, &str, u32)> = arrows
            .iter()
            .map(|(a, s, t, d)| (a.as_str(), s.as_str(), t.as_str(), *d))
            .collect();
        let quiver = Quiver::from_spec(&vrefs, &arefs)?;
        let rels: Vec<&str> = rel_src.iter().map(String::as_str).collect();
        let bound = bound.ok_or_else(|| Error::Parse("missing `bound` line".into()))?;
        let mut p = Self::from_strs(quiver, &rels, bound)?;
        p.field = field;
        Ok(p)
    }
}
