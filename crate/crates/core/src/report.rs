//! Named checks of every explicit computation, grouped by topic.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{build_algebra, FdAlgebra};
use crate::brauer::{self, graph_to_presentation, is_tilting_discrete, BrauerGraph, TAME_NAMES};
use crate::crystal::{
    alternating_word, block_beta, case_bipartitions, case_strings, h_involution, weyl_orbit_weight,
    Bipartition, CrystalContext, TameCase, TAME_CASES,
};
use crate::decomp::{
    brauer_line_decomposition, format_matrix, solve_decomposition, tame_cartan_data, IntMatrix,
};
use crate::error::Result;
use crate::fixtures;
use crate::homotopy::{
    end_algebra, mutate_left, mutate_right, presentation_match, silting_report, stalk, ProjComplex,
};
use crate::wild;

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub got: String,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        expected: impl fmt::Display,
        got: impl fmt::Display,
    ) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        Self {
            name: name.into(),
            pass: expected == got,
            expected,
            got,
        }
    }

    /// Tab-separated `name verdict expected got`.
    pub fn machine_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.name,
            self.verdict(),
            self.expected,
            self.got
        )
    }

    pub fn verdict(&self) -> &'static str {
        if self.pass {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK {} {} expected={} got={}",
            self.name,
            self.verdict(),
            self.expected,
            self.got
        )
    }
}

/// A titled group of checks.
#[derive(Clone, Debug)]
pub struct Section {
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl Section {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Left mutations with the presentation their endomorphism algebra must
/// match: `(algebra, summand, target)`.
pub const MUTATIONS: [(&str, usize, &str); 5] = [
    ("A(2,2,2)", 0, "A(2,2,2)"),
    ("A(2,2,1)", 0, "A(2,1,2)"),
    ("A(2,2,1)", 1, "A(2,2,1)"),
    ("A(2,1,2)", 0, "A(2,2,1)"),
    ("A(2,1,2)", 1, "A(2,2,1)"),
];

/// Tame decomposition matrices as displayed.
pub fn displayed_decomposition(name: &str) -> Option<IntMatrix> {
    let rows: &[[i64; 2]] = match name {
        "A(2,1,2)" => &[[1, 0], [1, 0], [1, 1], [0, 1], [0, 1]],
        "A(2,2,1)" => &[[1, 0], [1, 0], [1, 1], [1, 1], [0, 1]],
        "A(2,2,2)" => &[[1, 0], [1, 0], [1, 1], [1, 1], [0, 1], [0, 1]],
        _ => return None,
    };
    Some(rows.iter().map(|r| r.to_vec()).collect())
}

/// Closed formulas for `Lambda - w Lambda` at `e = 2` as displayed, with
/// their words.
pub fn displayed_orbit_formulas(k: usize) -> [(Vec<usize>, [i64; 2]); 4] {
    let k1 = k as i64;
    [
        (
            alternating_word(0, 1, k + 1, false),
            [(k1 + 1) * (2 * k1 + 3), (k1 + 1) * (2 * k1 + 1)],
        ),
        (
            alternating_word(1, 0, k + 1, false),
            [(k1 + 1) * (2 * k1 + 1), (k1 + 1) * (2 * k1 + 3)],
        ),
        (
            alternating_word(0, 1, k, true),
            [k1 * (2 * k1 + 1), (k1 + 1) * (2 * k1 + 1)],
        ),
        (
            alternating_word(1, 0, k, true),
            [(k1 + 1) * (2 * k1 + 1), k1 * (2 * k1 + 1)],
        ),
    ]
}

/// Displayed `beta` of a case, root coefficients with the null root added.
pub fn displayed_beta(case: TameCase, k: usize) -> [i64; 2] {
    let k = k as i64;
    let (a0, a1) = match case {
        TameCase::I => ((k + 1) * (2 * k + 3), (k + 1) * (2 * k + 1)),
        TameCase::II => ((k + 1) * (2 * k + 1), (k + 1) * (2 * k + 3)),
        TameCase::III => (k * (2 * k + 1), (k + 1) * (2 * k + 1)),
        TameCase::IV => ((k + 1) * (2 * k + 1), k * (2 * k + 1)),
    };
    [a0 + 1, a1 + 1]
}

fn fmt_word(w: &[usize]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|i| format!("s{i}")).collect()
}

fn fmt_cartan(c: &[Vec<usize>]) -> String {
    c.iter()
        .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

fn fixture(name: &str) -> Result<Arc<FdAlgebra>> {
    let p = fixtures::by_name(name).ok_or_else(|| crate::Error::UnknownName(name.into()))?;
    Ok(Arc::new(build_algebra(&p)?))
}

fn guarded(title: &'static str, f: impl FnOnce() -> Result<Vec<Check>>) -> Section {
    let checks = f().unwrap_or_else(|e| vec![Check::new(format!("{title}.error"), "ok", e)]);
    Section { title, checks }
}

fn silting_checks(prefix: &str, t: &ProjComplex) -> Check {
    let r = silting_report(t);
    let got = match (r.silting, r.tilting) {
        (true, true) => "tilting".to_string(),
        (true, false) => format!("silting only {:?}", r.nonzero),
        _ => format!("not silting {:?}", r.nonzero),
    };
    Check::new(format!("{prefix}.tilting"), "tilting", got)
}

fn silting_section() -> Result<Vec<Check>> {
    let alg = Arc::new(build_algebra(&graph_to_presentation(
        &brauer::kronecker_graph(),
    )?)?);
    let mut out = vec![Check::new("kronecker.dim", 4, alg.dim())];
    let (x, y) = (alg.arrow_element(0), alg.arrow_element(1));
    let xy = alg.mul(&x, &y);
    let rels = [
        alg.mul(&x, &x).is_zero(),
        alg.mul(&y, &y).is_zero(),
        xy == alg.mul(&y, &x) && !xy.is_zero(),
    ];
    out.push(Check::new(
        "kronecker.relations",
        "X^2=0 Y^2=0 XY=YX!=0",
        if rels.iter().all(|&b| b) {
            "X^2=0 Y^2=0 XY=YX!=0".to_string()
        } else {
            format!("{rels:?}")
        },
    ));
    let t = stalk(Arc::clone(&alg));
    let left = mutate_left(&t, 0)?;
    let right = mutate_right(&t, 0)?;
    let describe = |c: &crate::homotopy::Complex, n: i32| {
        if *c == t.summands()[0].shift(n) {
            format!("stalk[{n}]")
        } else {
            "other".into()
        }
    };
    out.push(Check::new(
        "kronecker.mutate_left",
        "stalk[1]",
        describe(&left.summands()[0], 1),
    ));
    out.push(Check::new(
        "kronecker.mutate_right",
        "stalk[-1]",
        describe(&right.summands()[0], -1),
    ));
    out.push(silting_checks("kronecker.mutate_left", &left));
    for (name, v, _) in MUTATIONS {
        let t = stalk(fixture(name)?);
        out.push(silting_checks(
            &format!("{name}.mu{}", v + 1),
            &mutate_left(&t, v)?,
        ));
    }
    Ok(out)
}

fn discreteness_section() -> Result<Vec<Check>> {
    let mut graphs: Vec<(String, BrauerGraph, bool)> = Vec::new();
    for name in TAME_NAMES {
        graphs.push((name.to_string(), brauer::catalogue(name)?.graph, true));
    }
    for n in 1..=6 {
        graphs.push((format!("brauer-line({n})"), brauer::brauer_line(n)?, true));
    }
    graphs.push(("double-edge".into(), brauer::double_edge(), false));
    graphs.push((
        "triangle-with-loop".into(),
        brauer::triangle_with_loop(),
        false,
    ));
    Ok(graphs
        .into_iter()
        .map(|(name, g, want)| {
            Check::new(
                format!("discrete.{name}"),
                want,
                is_tilting_discrete(&g).discrete,
            )
        })
        .collect())
}

fn endomorphism_section() -> Result<Vec<Check>> {
    let a = fixture("A(2,2,2)")?;
    let q = a.quiver();
    let names = |idx: Vec<usize>| {
        let mut v: Vec<String> = idx.iter().map(|&i| q.fmt_path(a.basis_path(i))).collect();
        v.sort();
        v.join(",")
    };
    let mut out = vec![
        Check::new("A(2,2,2).dim", 12, a.dim()),
        Check::new(
            "A(2,2,2).P1",
            "alpha,e_1,mu,mu*nu,mu*nu*mu,mu*nu*mu*nu",
            names(a.block_basis_from(0)),
        ),
        Check::new(
            "A(2,2,2).Hom(P1,P2)",
            "nu,nu*mu*nu",
            names(a.hom_projectives(0, 1)),
        ),
    ];
    for (name, v, target) in MUTATIONS {
        let t = stalk(fixture(name)?);
        let e = end_algebra(&mutate_left(&t, v)?)?;
        let goal = fixture(target)?;
        let tag = format!("{name}.mu{}", v + 1);
        let m = presentation_match(&e.extracted.presentation, goal.presentation())?;
        // Cartan entries relabelled along the witness's vertex bijection.
        let c = e.algebra.cartan_matrix();
        let mut relabelled = c.clone();
        if let Some(w) = &m.witness {
            for (i, row) in c.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    relabelled[w.vertex_map[i]][w.vertex_map[j]] = x;
                }
            }
        }
        out.push(Check::new(
            format!("{tag}.dim"),
            goal.dim(),
            e.algebra.dim(),
        ));
        out.push(Check::new(
            format!("{tag}.cartan"),
            fmt_cartan(&goal.cartan_matrix()),
            fmt_cartan(&relabelled),
        ));
        out.push(Check::new(
            format!("{tag}.match"),
            format!("{target}: true"),
            format!("{target}: {}", m.matched),
        ));
        if name == target && name == "A(2,2,2)" {
            let rescaled = m.witness.as_ref().map_or("none".into(), |w| {
                w.rescaled()
                    .iter()
                    .map(|&x| goal.quiver().arrow(w.arrow_map[x]).id.clone())
                    .collect::<Vec<_>>()
                    .join(",")
            });
            out.push(Check::new(format!("{tag}.rescaled"), "alpha", rescaled));
        }
    }
    Ok(out)
}

fn undefined_or(r: Result<Bipartition>) -> String {
    r.map_or_else(|_| "undefined".into(), |b| b.to_string())
}

fn crystal_section() -> Result<Vec<Check>> {
    let ctx = CrystalContext::new(2)?;
    let mut out = Vec::new();
    for case in TAME_CASES {
        for k in 0..=1 {
            let tag = format!("case{case}.k{k}");
            let (l1, l2) = case_bipartitions(case, k);
            let strings = case_strings(case, k);
            for (which, lam, list) in [("l1", &l1, &strings.lambda1), ("l2", &l2, &strings.lambda2)]
            {
                for s in list {
                    let label = s.label.replace(' ', "_");
                    let got = undefined_or(s.string.apply(&Bipartition::empty(), &ctx));
                    out.push(Check::new(format!("{tag}.{which}.{label}"), lam, got));
                }
                let h = h_involution(lam, &ctx);
                let got = match &h {
                    Ok(h) if h != lam => "h!=id".to_string(),
                    Ok(_) => "h=id".to_string(),
                    Err(e) => e.to_string(),
                };
                out.push(Check::new(format!("{tag}.{which}.h"), "h!=id", got));
            }
            let want = displayed_beta(case, k);
            for (which, lam) in [("l1", &l1), ("l2", &l2)] {
                let got = block_beta(lam, &ctx).root_totals();
                out.push(Check::new(
                    format!("{tag}.{which}.beta"),
                    format!("{want:?}"),
                    format!("{got:?}"),
                ));
            }
        }
    }
    Ok(out)
}

fn orbit_section() -> Result<Vec<Check>> {
    let ctx = CrystalContext::new(2)?;
    let mut out = Vec::new();
    for f in 0..4 {
        let mut bad = Vec::new();
        for k in 0..=10 {
            let (word, want) = displayed_orbit_formulas(k)[f].clone();
            let got = weyl_orbit_weight(&word, &ctx)?.roots;
            if got != want {
                bad.push(format!(
                    "k={k} {} gives {got:?} not {want:?}",
                    fmt_word(&word)
                ));
            }
        }
        let got = if bad.is_empty() {
            "k<=10 ok".to_string()
        } else {
            format!("{} failures, first {}", bad.len(), bad[0])
        };
        out.push(Check::new(
            format!("orbit.formula{}", f + 1),
            "k<=10 ok",
            got,
        ));
    }
    Ok(out)
}

fn decomposition_section() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, c, rows) in tame_cartan_data() {
        let a = fixture(name)?;
        let from_graph = build_algebra(&graph_to_presentation(&brauer::catalogue(name)?.graph)?)?;
        let want: Vec<Vec<usize>> = c
            .iter()
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect();
        out.push(Check::new(
            format!("cartan.{name}"),
            fmt_cartan(&want),
            fmt_cartan(&a.cartan_matrix()),
        ));
        out.push(Check::new(
            format!("cartan.{name}.graph"),
            fmt_cartan(&want),
            fmt_cartan(&from_graph.cartan_matrix()),
        ));
        let sols = solve_decomposition(&c, rows, None)?;
        let mut display = displayed_decomposition(name).unwrap_or_default();
        display.sort_by(|a, b| b.cmp(a));
        let got: Vec<String> = sols
            .iter()
            .map(|s| format_matrix(s.rows()).replace('\n', ";"))
            .collect();
        out.push(Check::new(
            format!("decomp.{name}"),
            format_matrix(&display).replace('\n', ";"),
            got.join(" or "),
        ));
    }
    for n in 1..=6 {
        let d = brauer_line_decomposition(n);
        let cartan =
            build_algebra(&graph_to_presentation(&brauer::brauer_line(n)?)?)?.cartan_matrix();
        let gram: Vec<Vec<usize>> = d
            .gram()
            .iter()
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect();
        out.push(Check::new(
            format!("decomp.brauer-line({n})"),
            fmt_cartan(&cartan),
            fmt_cartan(&gram),
        ));
    }
    Ok(out)
}

/// Every check, in topic order; a failing or erroring group never stops
/// the later ones.
pub fn reproduce_paper() -> Vec<Section> {
    vec![
        guarded("silting", silting_section),
        guarded("discreteness", discreteness_section),
        guarded("endomorphism algebras", endomorphism_section),
        guarded("crystal strings", crystal_section),
        guarded("orbit formulas", orbit_section),
        guarded("cartan and decomposition", decomposition_section),
        guarded("wild block", wild::verify_all),
    ]
}
