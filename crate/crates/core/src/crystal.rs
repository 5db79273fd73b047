//! Bipartitions as nodes of the level-two Fock space crystal with charges
//! `(0, e/2)`.
//!
//! Operator strings are written leftmost-last: `f0^3 f1^2 f0` applies `f0`
//! first.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    parts: [Vec<usize>; 2],
}

impl Bipartition {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(first: Vec<usize>, second: Vec<usize>) -> Result<Self> {
        for p in [&first, &second] {
            if p.contains(&0) {
                return Err(Error::InvalidPartition(format!("{p:?} has a zero part")));
            }
            if p.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidPartition(format!(
                    "{p:?} is not weakly decreasing"
                )));
            }
        }
        Ok(Self {
            parts: [first, second],
        })
    }

    pub fn component(&self, d: usize) -> &[usize] {
        &self.parts[d]
    }

    pub fn size(&self) -> usize {
        self.parts.iter().flatten().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// All nodes as `(component, row, column)`, zero-based.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..2).flat_map(move |d| {
            self.parts[d]
                .iter()
                .enumerate()
                .flat_map(move |(r, &len)| (0..len).map(move |c| (d, r, c)))
        })
    }

    fn add_node(&self, d: usize, r: usize) -> Self {
        let mut out = self.clone();
        if r == out.parts[d].len() {
            out.parts[d].push(1);
        } else {
            out.parts[d][r] += 1;
        }
        out
    }

    fn remove_node(&self, d: usize, r: usize) -> Self {
        let mut out = self.clone();
        out.parts[d][r] -= 1;
        if out.parts[d][r] == 0 {
            out.parts[d].pop();
        }
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |p: &[usize]| p.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "[{}|{}]", join(&self.parts[0]), join(&self.parts[1]))
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bipartition `{s}` must look like [a,b|c,d]")))?;
        let (a, b) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("bipartition `{s}` needs one `|`")))?;
        let part = |t: &str| -> Result<Vec<usize>> {
            t.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| {
                    x.parse()
                        .map_err(|_| Error::Parse(format!("bad part `{x}`")))
                })
                .collect()
        };
        Self::new(part(a)?, part(b)?)
    }
}

/// All partitions of `n`, parts weakly decreasing.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn bipartitions(n: usize) -> Vec<Bipartition> {
    (0..=n)
        .flat_map(|a| {
            let firsts = partitions(a);
            let seconds = partitions(n - a);
            firsts.into_iter().flat_map(move |p| {
                seconds.clone().into_iter().map(move |q| Bipartition {
                    parts: [p.clone(), q],
                })
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrystalContext {
    e: usize,
}

impl CrystalContext {
    pub fn new(e: usize) -> Result<Self> {
        if e < 2 || e % 2 == 1 {
            return Err(Error::InvalidContext(format!(
                "e = {e} must be even and at least 2"
            )));
        }
        Ok(Self { e })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn charges(&self) -> [usize; 2] {
        [0, self.e / 2]
    }

    pub fn residue(&self, d: usize, r: usize, c: usize) -> usize {
        (self.charges()[d] + c + self.e * (r / self.e + 1) - r) % self.e
    }

    fn check(&self, i: usize) -> Result<()> {
        if i >= self.e {
            return Err(Error::InvalidContext(format!(
                "residue {i} out of range for e = {}",
                self.e
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Addable,
    Removable,
}

/// One letter of a signature word; positions are zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignatureLetter {
    pub kind: NodeKind,
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for SignatureLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            NodeKind::Addable => 'A',
            NodeKind::Removable => 'R',
        };
        write!(
            f,
            "{k}({},{},{})",
            self.component + 1,
            self.row + 1,
            self.col + 1
        )
    }
}

/// Addable and removable `i`-nodes, component 1 top to bottom, then
/// component 2.
pub fn signature_word(
    lambda: &Bipartition,
    i: usize,
    ctx: &CrystalContext,
) -> Vec<SignatureLetter> {
    let mut out = Vec::new();
    for d in 0..2 {
        let p = &lambda.parts[d];
        for r in 0..=p.len() {
            let len = p.get(r).copied().unwrap_or(0);
            let removable = r < p.len() && p.get(r + 1).copied().unwrap_or(0) < len;
            if removable && ctx.residue(d, r, len - 1) == i {
                out.push(SignatureLetter {
                    kind: NodeKind::Removable,
                    component: d,
                    row: r,
                    col: len - 1,
                });
            }
            let addable = r == 0 || p[r - 1] > len;
            if addable && ctx.residue(d, r, len) == i {
                out.push(SignatureLetter {
                    kind: NodeKind::Addable,
                    component: d,
                    row: r,
                    col: len,
                });
            }
        }
    }
    out
}

/// Letters left after deleting adjacent `R A` pairs until none remain;
/// always of the form `A..A R..R`.
pub fn reduced_signature(word: &[SignatureLetter]) -> Vec<SignatureLetter> {
    let mut stack: Vec<SignatureLetter> = Vec::new();
    for &l in word {
        if l.kind == NodeKind::Addable
            && stack.last().is_some_and(|t| t.kind == NodeKind::Removable)
        {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    stack
}

pub fn f_tilde(lambda: &Bipartition, i: usize, ctx: &CrystalContext) -> Option<Bipartition> {
    let red = reduced_signature(&signature_word(lambda, i, ctx));
    red.iter()
        .rev()
        .find(|l| l.kind == NodeKind::Addable)
        .map(|l| lambda.add_node(l.component, l.row))
}

pub fn e_tilde(lambda: &Bipartition, i: usize, ctx: &CrystalContext) -> Option<Bipartition> {
    let red = reduced_signature(&signature_word(lambda, i, ctx));
    red.iter()
        .find(|l| l.kind == NodeKind::Removable)
        .map(|l| lambda.remove_node(l.component, l.row))
}

/// `f_i` applied until undefined, with the number of steps.
pub fn f_tilde_max(lambda: &Bipartition, i: usize, ctx: &CrystalContext) -> (Bipartition, usize) {
    let mut cur = lambda.clone();
    let mut n = 0;
    while let Some(next) = f_tilde(&cur, i, ctx) {
        cur = next;
        n += 1;
    }
    (cur, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exponent {
    Times(usize),
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OpStep {
    pub residue: usize,
    pub exponent: Exponent,
}

/// A word in the `f_i`; `steps[0]` is applied last.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorString {
    pub steps: Vec<OpStep>,
}

impl OperatorString {
    pub fn from_residues(residues: &[usize]) -> Self {
        Self {
            steps: residues
                .iter()
                .map(|&residue| OpStep {
                    residue,
                    exponent: Exponent::Times(1),
                })
                .collect(),
        }
    }

    pub fn push(&mut self, residue: usize, exponent: Exponent) {
        self.steps.push(OpStep { residue, exponent });
    }

    pub fn concat(mut self, other: &OperatorString) -> Self {
        self.steps.extend_from_slice(&other.steps);
        self
    }

    /// Residue sequence, leftmost first; `None` if a `max` exponent occurs.
    pub fn residues(&self) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        for s in &self.steps {
            match s.exponent {
                Exponent::Times(n) => out.extend(std::iter::repeat_n(s.residue, n)),
                Exponent::Max => return None,
            }
        }
        Some(out)
    }

    pub fn apply(&self, start: &Bipartition, ctx: &CrystalContext) -> Result<Bipartition> {
        let mut cur = start.clone();
        for s in self.steps.iter().rev() {
            ctx.check(s.residue)?;
            match s.exponent {
                Exponent::Times(n) => {
                    for _ in 0..n {
                        cur = f_tilde(&cur, s.residue, ctx).ok_or_else(|| {
                            Error::UndefinedOperator(format!("f{} on {cur} in `{self}`", s.residue))
                        })?;
                    }
                }
                Exponent::Max => cur = f_tilde_max(&cur, s.residue, ctx).0,
            }
        }
        Ok(cur)
    }
}

impl fmt::Display for OperatorString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "1");
        }
        let words: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s.exponent {
                Exponent::Times(1) => format!("f{}", s.residue),
                Exponent::Times(n) => format!("f{}^{n}", s.residue),
                Exponent::Max => format!("f{}^max", s.residue),
            })
            .collect();
        write!(f, "{}", words.join(" "))
    }
}

impl FromStr for OperatorString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = OperatorString::default();
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(out);
        }
        for w in s.split_whitespace() {
            let body = w
                .strip_prefix('f')
                .ok_or_else(|| Error::Parse(format!("operator `{w}` must start with f")))?;
            let (r, e) = match body.split_once('^') {
                Some((r, e)) => (r, Some(e)),
                None => (body, None),
            };
            let residue = r
                .parse()
                .map_err(|_| Error::Parse(format!("bad residue in `{w}`")))?;
            let exponent = match e {
                None => Exponent::Times(1),
                Some("max") => Exponent::Max,
                Some(n) => Exponent::Times(
                    n.parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{w}`")))?,
                ),
            };
            out.push(residue, exponent);
        }
        Ok(out)
    }
}

/// Residues `i_1..i_n` with `lambda = f_{i_1} .. f_{i_n} 0`, found by
/// removing the leftmost good node of the smallest removable residue.
pub fn kleshchev_string(lambda: &Bipartition, ctx: &CrystalContext) -> Option<Vec<usize>> {
    let mut cur = lambda.clone();
    let mut out = Vec::new();
    while !cur.is_empty() {
        let (i, next) = (0..ctx.e()).find_map(|i| e_tilde(&cur, i, ctx).map(|n| (i, n)))?;
        out.push(i);
        cur = next;
    }
    Some(out)
}

pub fn is_kleshchev(lambda: &Bipartition, ctx: &CrystalContext) -> bool {
    kleshchev_string(lambda, ctx).is_some()
}

/// Twist by the residue shift `i -> i + e/2` on a defining string.
pub fn h_involution(lambda: &Bipartition, ctx: &CrystalContext) -> Result<Bipartition> {
    let word = kleshchev_string(lambda, ctx).ok_or(Error::NotKleshchev)?;
    let shifted: Vec<usize> = word.iter().map(|&i| (i + ctx.e() / 2) % ctx.e()).collect();
    OperatorString::from_residues(&shifted).apply(&Bipartition::empty(), ctx)
}

pub fn splits_on_restriction(lambda: &Bipartition, ctx: &CrystalContext) -> Result<bool> {
    Ok(h_involution(lambda, ctx)? == *lambda)
}

/// Weight data; `roots[i]` is the coefficient of `alpha_i` and `delta` the
/// coefficient of the null root on top of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub fundamental: Vec<i64>,
    pub roots: Vec<i64>,
    pub delta: i64,
}

impl WeightVector {
    pub fn from_roots(ctx: &CrystalContext, roots: Vec<i64>, delta: i64) -> Self {
        let mut fundamental = vec![0; ctx.e()];
        for c in ctx.charges() {
            fundamental[c] += 1;
        }
        Self {
            fundamental,
            roots,
            delta,
        }
    }

    /// Root coefficients with the null root expanded.
    pub fn root_totals(&self) -> Vec<i64> {
        self.roots.iter().map(|c| c + self.delta).collect()
    }

    pub fn same_roots(&self, other: &WeightVector) -> bool {
        self.root_totals() == other.root_totals()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self
            .roots
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, c)| format!("{c}a{i}"))
            .collect();
        if self.delta != 0 {
            terms.push(format!("{}d", self.delta));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join("+"))
    }
}

/// `beta` with `Lambda - beta` the block weight: one `alpha` per node.
pub fn block_beta(lambda: &Bipartition, ctx: &CrystalContext) -> WeightVector {
    let mut roots = vec![0i64; ctx.e()];
    for (d, r, c) in lambda.nodes() {
        roots[ctx.residue(d, r, c)] += 1;
    }
    WeightVector::from_roots(ctx, roots, 0)
}

/// Parses `s0 s1 s0`, `s0s1s0` or `1`, leftmost applied last.
pub fn parse_reflection_word(s: &str) -> Result<Vec<usize>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "1" || compact == "id" {
        return Ok(Vec::new());
    }
    compact
        .split('s')
        .skip(1)
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad reflection in `{s}`")))
        })
        .collect::<Result<Vec<usize>>>()
        .and_then(|w| {
            if compact.starts_with('s') {
                Ok(w)
            } else {
                Err(Error::Parse(format!("word `{s}` must be a product of s_i")))
            }
        })
}

/// `Lambda - w Lambda` in simple roots, by direct reflection action.
pub fn weyl_orbit_weight(word: &[usize], ctx: &CrystalContext) -> Result<WeightVector> {
    let e = ctx.e();
    if word.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NonAlternatingWord(format!("{word:?}")));
    }
    if let Some(&i) = word.iter().find(|&&i| i >= e) {
        return Err(Error::NonAlternatingWord(format!(
            "s{i} does not exist for e = {e}"
        )));
    }
    let cartan = |i: usize, j: usize| -> i64 {
        if i == j {
            2
        } else if e == 2 {
            -2
        } else if (i + 1) % e == j || (j + 1) % e == i {
            -1
        } else {
            0
        }
    };
    let base = WeightVector::from_roots(ctx, vec![0; e], 0);
    let mut c = vec![0i64; e];
    for &i in word.iter().rev() {
        let pairing = base.fundamental[i] - (0..e).map(|j| cartan(i, j) * c[j]).sum::<i64>();
        c[i] += pairing;
    }
    Ok(WeightVector::from_roots(ctx, c, 0))
}

/// `(s_a s_b)^n`, optionally followed by `s_a`.
pub fn alternating_word(first: usize, second: usize, pairs: usize, tail: bool) -> Vec<usize> {
    let mut w: Vec<usize> = (0..pairs).flat_map(|_| [first, second]).collect();
    if tail {
        w.push(first);
    }
    w
}

/// Block cases of the type D tame classification at `e = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TameCase {
    I,
    II,
    III,
    IV,
}

pub const TAME_CASES: [TameCase; 4] = [TameCase::I, TameCase::II, TameCase::III, TameCase::IV];

impl fmt::Display for TameCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TameCase::I => "i",
            TameCase::II => "ii",
            TameCase::III => "iii",
            TameCase::IV => "iv",
        };
        write!(f, "{s}")
    }
}

impl FromStr for TameCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" | "1" => Ok(TameCase::I),
            "ii" | "2" => Ok(TameCase::II),
            "iii" | "3" => Ok(TameCase::III),
            "iv" | "4" => Ok(TameCase::IV),
            _ => Err(Error::Parse(format!("unknown case `{s}`"))),
        }
    }
}

/// Layers `f_{r}^{top} f_{r+1}^{top-2} ..` with `count` factors.
fn layers(top_residue: usize, top: usize, count: usize, max: bool) -> OperatorString {
    let mut out = OperatorString::default();
    for j in 0..count {
        let exponent = if max {
            Exponent::Max
        } else {
            Exponent::Times(top - 2 * j)
        };
        out.push((top_residue + j) % 2, exponent);
    }
    out
}

fn word(s: &str) -> OperatorString {
    s.parse().expect("literal operator string")
}

/// A labelled operator string.
#[derive(Clone, Debug)]
pub struct LabelledString {
    pub label: &'static str,
    pub string: OperatorString,
}

/// Strings displayed for `lambda_1` and `lambda_2` of a case, with explicit
/// exponents and with `max` layers.
#[derive(Clone, Debug)]
pub struct CaseStrings {
    pub lambda1: Vec<LabelledString>,
    pub lambda2: Vec<LabelledString>,
}

pub fn case_strings(case: TameCase, k: usize) -> CaseStrings {
    let both = |tag: (&'static str, &'static str),
                prefix: &str,
                r: usize,
                top: usize,
                count: usize,
                seed: &str| {
        [(tag.0, false), (tag.1, true)]
            .into_iter()
            .map(|(label, max)| LabelledString {
                label,
                string: word(prefix)
                    .concat(&layers(r, top, count, max))
                    .concat(&word(seed)),
            })
            .collect::<Vec<_>>()
    };
    let main = ("explicit", "max");
    let alt = ("alternative explicit", "alternative max");
    match case {
        TameCase::I => CaseStrings {
            lambda1: both(main, "", 0, 4 * k + 3, 2 * k + 1, "f1^2 f0"),
            lambda2: both(main, "", 0, 4 * k + 3, 2 * k + 1, "f1 f0 f1"),
        },
        TameCase::II => CaseStrings {
            lambda1: [
                both(main, "", 1, 4 * k + 3, 2 * k + 1, "f0 f1 f0"),
                both(alt, "f1 f0", 1, 4 * k + 3, 2 * k + 2, ""),
            ]
            .concat(),
            lambda2: both(main, "", 1, 4 * k + 3, 2 * k + 1, "f0^2 f1"),
        },
        TameCase::III => CaseStrings {
            lambda1: both(main, "", 1, 4 * k + 1, 2 * k, "f1^2 f0"),
            lambda2: both(main, "", 1, 4 * k + 1, 2 * k, "f1 f0 f1"),
        },
        TameCase::IV => CaseStrings {
            lambda1: [
                both(main, "f0 f1", 0, 4 * k + 1, 2 * k + 1, ""),
                both(alt, "", 0, 4 * k + 1, 2 * k, "f0 f1 f0"),
            ]
            .concat(),
            lambda2: both(main, "", 0, 4 * k + 1, 2 * k, "f0^2 f1"),
        },
    }
}

/// `(n, n-1, .., 1)`, empty for `n <= 0`.
pub fn staircase(n: i64) -> Vec<usize> {
    (1..=n.max(0) as usize).rev().collect()
}

fn with_ones(mut p: Vec<usize>, ones: usize) -> Vec<usize> {
    p.extend(std::iter::repeat_n(1, ones));
    p
}

/// Displayed `(lambda_1, lambda_2)` of a case.
pub fn case_bipartitions(case: TameCase, k: usize) -> (Bipartition, Bipartition) {
    let k = k as i64;
    let b = |p: Vec<usize>, q: Vec<usize>| Bipartition::new(p, q).expect("staircase shapes");
    let st = staircase;
    match case {
        TameCase::I => (
            b(with_ones(st(2 * k + 1), 2), st(2 * k + 2)),
            b(st(2 * k + 1), with_ones(st(2 * k + 2), 2)),
        ),
        TameCase::II => (
            b(st(2 * k + 2), with_ones(st(2 * k + 1), 2)),
            b(st(2 * k), st(2 * k + 3)),
        ),
        TameCase::III => (
            b(with_ones(st(2 * k), 2), st(2 * k + 1)),
            b(st(2 * k), with_ones(st(2 * k + 1), 2)),
        ),
        TameCase::IV => (
            b(st(2 * k + 1), with_ones(st(2 * k), 2)),
            b(st(2 * k - 1), st(2 * k + 2)),
        ),
    }
}

/// Displayed `h(lambda_1)` and `h(lambda_2)` of the first case.
pub fn case_one_h_display(k: usize) -> (Bipartition, Bipartition) {
    let k = k as i64;
    (
        Bipartition::new(staircase(2 * k), staircase(2 * k + 3)).expect("staircase shapes"),
        Bipartition::new(staircase(2 * k + 2), with_ones(staircase(2 * k + 1), 1))
            .expect("staircase shapes"),
    )
}

/// Reflection word whose orbit weight, plus one `delta`, is the block of a
/// case.
pub fn case_orbit_word(case: TameCase, k: usize) -> Vec<usize> {
    match case {
        TameCase::I => alternating_word(0, 1, k + 1, false),
        TameCase::II => alternating_word(1, 0, k + 1, false),
        TameCase::III => alternating_word(1, 0, k, true),
        TameCase::IV => alternating_word(0, 1, k, true),
    }
}

pub fn case_beta(case: TameCase, k: usize) -> Result<WeightVector> {
    let ctx = CrystalContext::new(2)?;
    let mut w = weyl_orbit_weight(&case_orbit_word(case, k), &ctx)?;
    w.delta = 1;
    Ok(w)
}

/// Bipartitions of one size grouped by block.
pub fn blocks_of_size(n: usize, ctx: &CrystalContext) -> BTreeMap<Vec<i64>, Vec<Bipartition>> {
    let mut out: BTreeMap<Vec<i64>, Vec<Bipartition>> = BTreeMap::new();
    for b in bipartitions(n) {
        out.entry(block_beta(&b, ctx).root_totals())
            .or_default()
            .push(b);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn signature_examples() {
        let c = CrystalContext::new(2).unwrap();
        let w = signature_word(&Bipartition::empty(), 0, &c);
        assert_eq!(w.len(), 1);
        assert_eq!(
            (w[0].kind, w[0].component, w[0].row, w[0].col),
            (NodeKind::Addable, 0, 0, 0)
        );
        let w = signature_word(&bp("[1|]"), 1, &c);
        let pos: Vec<_> = w
            .iter()
            .map(|l| (l.kind, l.component, l.row, l.col))
            .collect();
        assert_eq!(
            pos,
            vec![
                (NodeKind::Addable, 0, 0, 1),
                (NodeKind::Addable, 0, 1, 0),
                (NodeKind::Addable, 1, 0, 0)
            ]
        );
        let kinds: Vec<_> = signature_word(&bp("[1,1|2,1]"), 0, &c)
            .iter()
            .map(|l| l.kind)
            .collect();
        assert_eq!(
            kinds,
            vec![NodeKind::Addable, NodeKind::Removable, NodeKind::Removable]
        );
    }

    #[test]
    fn strings_and_h() {
        let c = CrystalContext::new(2).unwrap();
        let l1 = word("f0^3 f1^2 f0")
            .apply(&Bipartition::empty(), &c)
            .unwrap();
        assert_eq!(l1, bp("[1,1,1|2,1]"));
        assert_eq!(h_involution(&l1, &c).unwrap(), bp("[|3,2,1]"));
        assert_eq!(
            h_involution(&h_involution(&l1, &c).unwrap(), &c).unwrap(),
            l1
        );
        assert_eq!(
            word("f0 f1 f0").apply(&Bipartition::empty(), &c).unwrap(),
            bp("[1|1,1]")
        );
        assert_eq!(
            word("f1 f0 f1").apply(&Bipartition::empty(), &c).unwrap(),
            bp("[|1,1,1]")
        );
        assert_eq!(
            h_involution(&Bipartition::empty(), &c).unwrap(),
            Bipartition::empty()
        );
        assert!(!splits_on_restriction(&l1, &c).unwrap());
    }

    #[test]
    fn non_kleshchev_is_detected() {
        let c = CrystalContext::new(2).unwrap();
        let n2: Vec<Bipartition> = bipartitions(2)
            .into_iter()
            .filter(|b| is_kleshchev(b, &c))
            .collect();
        let mut generated: Vec<Bipartition> = [0, 1]
            .iter()
            .flat_map(|&i| {
                [0, 1].iter().filter_map(move |&j| {
                    f_tilde(&Bipartition::empty(), j, &c).and_then(|b| f_tilde(&b, i, &c))
                })
            })
            .collect();
        generated.sort();
        generated.dedup();
        let mut n2s = n2.clone();
        n2s.sort();
        assert_eq!(n2s, generated);
        assert!(!is_kleshchev(&bp("[1,1|]"), &c));
        assert_eq!(h_involution(&bp("[1,1|]"), &c), Err(Error::NotKleshchev));
    }

    #[test]
    fn beta_and_orbits() {
        let c = CrystalContext::new(2).unwrap();
        assert_eq!(block_beta(&bp("[1,1,1|2,1]"), &c).roots, vec![4, 2]);
        assert_eq!(block_beta(&bp("[1|2,1,1,1]"), &c).roots, vec![4, 2]);
        assert_eq!(weyl_orbit_weight(&[0, 1], &c).unwrap().roots, vec![3, 1]);
        assert_eq!(weyl_orbit_weight(&[], &c).unwrap().roots, vec![0, 0]);
        assert_eq!(weyl_orbit_weight(&[1, 0, 1], &c).unwrap().roots, vec![3, 6]);
        assert_eq!(weyl_orbit_weight(&[0, 1, 0], &c).unwrap().roots, vec![6, 3]);
        assert!(matches!(
            weyl_orbit_weight(&[0, 0], &c),
            Err(Error::NonAlternatingWord(_))
        ));
        assert_eq!(parse_reflection_word("s0 s1s0").unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn parse_round_trips() {
        for s in ["[|]", "[3,1|2,2,1]", "[1|]"] {
            assert_eq!(bp(s).to_string(), s);
        }
        assert!("[1,2|]".parse::<Bipartition>().is_err());
        let w = word("f0^max f1^2 f0");
        assert_eq!(w.to_string(), "f0^max f1^2 f0");
        assert_eq!(w.residues(), None);
        assert_eq!(
            CrystalContext::new(3),
            Err(Error::InvalidContext(
                "e = 3 must be even and at least 2".into()
            ))
        );
    }

    #[test]
    fn residues_wrap_for_deep_rows() {
        let c = CrystalContext::new(4).unwrap();
        assert_eq!(c.residue(0, 9, 0), 3);
        assert_eq!(c.residue(1, 0, 0), 2);
    }
}
