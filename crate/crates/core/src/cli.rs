//! Batch command line: one invocation, one report, one exit code.

use std::fmt::Write as _;
use std::fs;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{build_algebra, FdAlgebra};
use crate::brauer::{self, graph_to_presentation, is_tilting_discrete, BrauerGraph};
use crate::crystal::{
    block_beta, e_tilde, f_tilde, h_involution, is_kleshchev, kleshchev_string,
    parse_reflection_word, reduced_signature, signature_word, splits_on_restriction,
    weyl_orbit_weight, Bipartition, CrystalContext, Exponent, OperatorString,
};
use crate::decomp::{brauer_line_decomposition, parse_matrix, solve_decomposition};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::homotopy::{
    describe_witness, end_algebra, minimal_left_approximation, minimal_right_approximation,
    mutate_left, mutate_right, presentation_match, silting_report, stalk, ProjComplex,
};
use crate::presentation::BoundQuiverPresentation;
use crate::report::{reproduce_paper, Check};
use crate::wild::{self, cellularity_obstruction};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exit code and the text to print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub report: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "silt",
    version,
    about = "Exact bound quiver algebras, Brauer graphs and tilting mutation"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Basis, Cartan matrices and radical layers.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Brauer graph algebras and tilting discreteness.
    #[command(subcommand)]
    Brauer(BrauerCmd),
    /// Irreducible mutation of a complex at one summand.
    #[command(subcommand)]
    Mutate(MutateCmd),
    /// Endomorphism algebra of a complex in the homotopy category.
    Endalg(EndalgArgs),
    /// Isomorphism test between two presentations.
    Match(MatchArgs),
    /// Crystal operators on bipartitions.
    #[command(subcommand)]
    Crystal(CrystalCmd),
    /// Decomposition matrices with `D^T D = C`.
    #[command(subcommand)]
    Decomp(DecompCmd),
    /// The four-vertex wild block.
    #[command(subcommand)]
    Wild(WildCmd),
    /// Every check, grouped by topic.
    ReproducePaper,
}

/// Where an algebra comes from; exactly one flag.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Hand-written presentation: A(2,2,2), A(2,2,1), A(2,1,2), kronecker, wild, point.
    #[arg(long)]
    fixture: Option<String>,
    /// File in the `presentation v1` format.
    #[arg(long)]
    file: Option<String>,
    /// Brauer graph file; its algebra is used.
    #[arg(long)]
    graph: Option<String>,
    /// Brauer graph catalogue name; its algebra is used.
    #[arg(long)]
    catalogue: Option<String>,
}

#[derive(Debug, Subcommand)]
enum AlgebraCmd {
    /// Normal-form basis and dimension.
    Build {
        #[command(flatten)]
        source: Source,
        /// Also list a basis of `Hom(P_FROM, P_TO)`.
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
        hom: Option<Vec<String>>,
    },
    /// Cartan matrix, graded with `--graded`.
    Cartan {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        graded: bool,
    },
    /// Radical layers of one projective, or of all.
    Loewy {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        vertex: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum BrauerCmd {
    /// Presentation of the Brauer graph algebra.
    Build {
        #[command(flatten)]
        graph: GraphSource,
    },
    /// Tilting-discreteness verdict with its cycle witness.
    Discrete {
        #[command(flatten)]
        graph: GraphSource,
    },
    /// A catalogue graph, or the list of names.
    Catalogue { name: Option<String> },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    #[arg(long)]
    graph: Option<String>,
    #[arg(long)]
    name: Option<String>,
}

#[derive(Debug, Args)]
struct ComplexArgs {
    #[command(flatten)]
    source: Source,
    /// File in the `complex v1` format; defaults to the stalk complex.
    #[arg(long)]
    complex: Option<String>,
}

#[derive(Debug, Subcommand)]
enum MutateCmd {
    Left(MutateArgs),
    Right(MutateArgs),
}

#[derive(Debug, Args)]
struct MutateArgs {
    #[command(flatten)]
    input: ComplexArgs,
    /// One-based summand index.
    #[arg(long)]
    summand: usize,
}

#[derive(Debug, Args)]
struct EndalgArgs {
    #[command(flatten)]
    input: ComplexArgs,
    /// Left-mutate at these one-based summands first, in order.
    #[arg(long = "left")]
    left: Vec<usize>,
    /// Compare the result with a fixture presentation.
    #[arg(long = "match")]
    match_with: Option<String>,
}

#[derive(Debug, Args)]
struct MatchArgs {
    /// Fixture name or `presentation v1` file.
    left: String,
    right: String,
}

#[derive(Debug, Args)]
struct CrystalCommon {
    #[arg(long, default_value_t = 2)]
    e: usize,
    /// `[a,b|c,d]`; defaults to the empty bipartition.
    #[arg(long, default_value = "[|]")]
    lambda: String,
}

#[derive(Debug, Subcommand)]
enum CrystalCmd {
    /// `f_i`, or a whole operator string with `--string`.
    Ftilde {
        #[command(flatten)]
        common: CrystalCommon,
        #[arg(long, conflicts_with = "string", required_unless_present = "string")]
        i: Option<usize>,
        /// `f0^3 f1^max f0`, rightmost applied first.
        #[arg(long)]
        string: Option<String>,
    },
    /// `e_i`
    Etilde {
        #[command(flatten)]
        common: CrystalCommon,
        #[arg(long)]
        i: usize,
    },
    /// The involution `h` and the splitting verdict.
    H {
        #[command(flatten)]
        common: CrystalCommon,
    },
    /// `beta` with `Lambda - beta` the block weight.
    Block {
        #[command(flatten)]
        common: CrystalCommon,
    },
    /// `Lambda - w Lambda` for a reflection word.
    Orbit {
        #[arg(long, default_value_t = 2)]
        e: usize,
        #[arg(long)]
        word: String,
    },
}

#[derive(Debug, Subcommand)]
enum DecompCmd {
    /// All solutions up to row permutation.
    Solve {
        /// `a b;c d`.
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// The bidiagonal matrix of a Brauer line.
    Line {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
enum WildCmd {
    Verify,
}

/// Subcommands with the library operations each one reaches.
pub const COMMAND_TABLE: &[(&str, &[&str])] = &[
    ("algebra build", &["build_algebra", "hom_projectives"]),
    ("algebra cartan", &["cartan_matrix", "graded_cartan"]),
    ("algebra loewy", &["loewy_layers"]),
    ("brauer build", &["graph_to_presentation"]),
    ("brauer discrete", &["is_tilting_discrete"]),
    ("brauer catalogue", &["catalogue"]),
    (
        "mutate left",
        &[
            "stalk",
            "minimal_left_approximation",
            "mutate_left",
            "is_silting",
            "homotopy_hom",
        ],
    ),
    (
        "mutate right",
        &["stalk", "mutate_right", "is_silting", "homotopy_hom"],
    ),
    (
        "endalg",
        &[
            "end_algebra",
            "presentation_match",
            "loewy_layers",
            "cellularity_obstruction",
        ],
    ),
    ("match", &["presentation_match"]),
    ("crystal ftilde", &["signature_word", "f_tilde"]),
    ("crystal etilde", &["signature_word", "e_tilde"]),
    (
        "crystal h",
        &["h_involution", "is_kleshchev", "splits_on_restriction"],
    ),
    ("crystal block", &["block_beta", "is_kleshchev"]),
    ("crystal orbit", &["weyl_orbit_weight"]),
    ("decomp solve", &["solve_decomposition"]),
    ("decomp line", &["brauer_line_decomposition"]),
    (
        "wild verify",
        &[
            "build_wild_fixture",
            "verify_graded_dims",
            "cellularity_obstruction",
            "projective_report",
        ],
    ),
    ("reproduce-paper", &["run"]),
];

/// Key-value report in either format.
struct Report {
    format: Format,
    out: String,
}

impl Report {
    fn new(format: Format) -> Self {
        Self {
            format,
            out: String::new(),
        }
    }

    fn field(&mut self, key: &str, value: impl std::fmt::Display) {
        let value = value.to_string();
        match self.format {
            Format::Text if value.contains('\n') => {
                let _ = writeln!(self.out, "{key}:");
                for l in value.lines() {
                    let _ = writeln!(self.out, "  {l}");
                }
            }
            Format::Text => {
                let _ = writeln!(self.out, "{key}: {value}");
            }
            Format::Machine => {
                let flat: Vec<&str> = value.lines().collect();
                let _ = writeln!(self.out, "{key}\t{}", flat.join(";"));
            }
        }
    }

    fn check(&mut self, c: &Check) {
        let line = match self.format {
            Format::Text => c.to_string(),
            Format::Machine => c.machine_line(),
        };
        let _ = writeln!(self.out, "{line}");
    }

    fn raw(&mut self, line: &str) {
        let _ = writeln!(self.out, "{line}");
    }

    fn finish(self, code: i32) -> CommandResult {
        CommandResult {
            code,
            report: self.out,
        }
    }
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
}

fn fixture(name: &str) -> Result<BoundQuiverPresentation> {
    fixtures::by_name(name).ok_or_else(|| Error::UnknownName(name.into()))
}

fn load_graph(path: Option<&str>, name: Option<&str>) -> Result<BrauerGraph> {
    match (path, name) {
        (Some(p), _) => BrauerGraph::from_text(&read(p)?),
        (_, Some(n)) => Ok(brauer::catalogue(n)?.graph),
        _ => Err(Error::Usage(
            "a graph file or catalogue name is required".into(),
        )),
    }
}

fn load_presentation(s: &Source) -> Result<BoundQuiverPresentation> {
    if let Some(n) = &s.fixture {
        fixture(n)
    } else if let Some(p) = &s.file {
        BoundQuiverPresentation::from_text(&read(p)?)
    } else {
        graph_to_presentation(&load_graph(s.graph.as_deref(), s.catalogue.as_deref())?)
    }
}

fn load_algebra(s: &Source) -> Result<Arc<FdAlgebra>> {
    Ok(Arc::new(build_algebra(&load_presentation(s)?)?))
}

/// Fixture name, else a `presentation v1` file.
fn named_or_file(s: &str) -> Result<BoundQuiverPresentation> {
    match fixtures::by_name(s) {
        Some(p) => Ok(p),
        None => BoundQuiverPresentation::from_text(&read(s)?),
    }
}

fn load_complex(a: &ComplexArgs) -> Result<ProjComplex> {
    let alg = load_algebra(&a.source)?;
    match &a.complex {
        Some(p) => ProjComplex::from_text(alg, &read(p)?),
        None => Ok(stalk(alg)),
    }
}

fn summand_index(t: &ProjComplex, one_based: usize) -> Result<usize> {
    if one_based == 0 || one_based > t.summands().len() {
        return Err(Error::NotASummand(one_based));
    }
    Ok(one_based - 1)
}

fn vertex(alg: &FdAlgebra, id: &str) -> Result<usize> {
    alg.quiver()
        .vertex_index(id)
        .ok_or_else(|| Error::UnknownName(id.into()))
}

fn matrix_text<T: std::fmt::Display>(m: &[Vec<T>]) -> String {
    m.iter()
        .map(|r| r.iter().map(T::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn layers_text(alg: &FdAlgebra, i: usize) -> String {
    alg.loewy_layers(i)
        .iter()
        .map(|l| l.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn algebra(cmd: &AlgebraCmd, r: &mut Report) -> Result<i32> {
    match cmd {
        AlgebraCmd::Build { source, hom } => {
            let a = load_algebra(source)?;
            let q = a.quiver();
            r.field("dim", a.dim());
            let basis: Vec<String> = a.basis().iter().map(|p| q.fmt_path(p)).collect();
            r.field("basis", basis.join("\n"));
            if let Some(h) = hom {
                let (i, j) = (vertex(&a, &h[0])?, vertex(&a, &h[1])?);
                let b: Vec<String> = a
                    .hom_projectives(i, j)
                    .iter()
                    .map(|&k| q.fmt_path(a.basis_path(k)))
                    .collect();
                r.field(&format!("hom(P{},P{})", h[0], h[1]), b.join(" "));
            }
        }
        AlgebraCmd::Cartan { source, graded } => {
            let a = load_algebra(source)?;
            if *graded {
                r.field("graded_cartan", matrix_text(&a.graded_cartan()?));
            } else {
                r.field("cartan", matrix_text(&a.cartan_matrix()));
            }
        }
        AlgebraCmd::Loewy { source, vertex: v } => {
            let a = load_algebra(source)?;
            let vs = match v {
                Some(id) => vec![vertex(&a, id)?],
                None => (0..a.vertex_count()).collect(),
            };
            for i in vs {
                r.field(
                    &format!("P{}", a.quiver().vertices()[i]),
                    layers_text(&a, i),
                );
            }
        }
    }
    Ok(EXIT_OK)
}

fn brauer_cmd(cmd: &BrauerCmd, r: &mut Report) -> Result<i32> {
    match cmd {
        BrauerCmd::Build { graph } => {
            let g = load_graph(graph.graph.as_deref(), graph.name.as_deref())?;
            r.field("presentation", graph_to_presentation(&g)?.to_text());
        }
        BrauerCmd::Discrete { graph } => {
            let g = load_graph(graph.graph.as_deref(), graph.name.as_deref())?;
            r.raw(&is_tilting_discrete(&g).to_string());
        }
        BrauerCmd::Catalogue { name: Some(n) } => {
            r.field("graph", brauer::catalogue(n)?.graph.to_text())
        }
        BrauerCmd::Catalogue { name: None } => {
            for n in brauer::TAME_NAMES {
                r.raw(n);
            }
            r.raw("brauer-line(n)");
        }
    }
    Ok(EXIT_OK)
}

fn silting_fields(t: &ProjComplex, r: &mut Report) {
    let s = silting_report(t);
    let nonzero: Vec<String> = s
        .nonzero
        .iter()
        .map(|(i, d)| format!("Hom(T,T[{i}])={d}"))
        .collect();
    r.field("silting", s.silting);
    r.field("tilting", s.tilting);
    if !nonzero.is_empty() {
        r.field("nonzero", nonzero.join(" "));
    }
}

fn mutate(cmd: &MutateCmd, r: &mut Report) -> Result<i32> {
    let (args, left) = match cmd {
        MutateCmd::Left(a) => (a, true),
        MutateCmd::Right(a) => (a, false),
    };
    let t = load_complex(&args.input)?;
    let x = summand_index(&t, args.summand)?;
    let others: Vec<_> = (0..t.summands().len())
        .filter(|&j| j != x)
        .map(|j| t.summands()[j].clone())
        .collect();
    let alg = t.algebra();
    let approx = if left {
        minimal_left_approximation(alg, &t.summands()[x], &others)?
    } else {
        minimal_right_approximation(alg, &t.summands()[x], &others)?
    };
    let others_index: Vec<usize> = (0..t.summands().len()).filter(|&j| j != x).collect();
    let targets: Vec<String> = approx
        .targets()
        .iter()
        .map(|&j| format!("T{}", others_index[j] + 1))
        .collect();
    let mu = if left {
        mutate_left(&t, x)?
    } else {
        mutate_right(&t, x)?
    };
    r.field(
        "approximation",
        if targets.is_empty() {
            "0".into()
        } else {
            targets.join(" ")
        },
    );
    r.field("complex", mu.to_text());
    silting_fields(&mu, r);
    Ok(EXIT_OK)
}

fn endalg(args: &EndalgArgs, r: &mut Report) -> Result<i32> {
    let mut t = load_complex(&args.input)?;
    for &s in &args.left {
        let x = summand_index(&t, s)?;
        t = mutate_left(&t, x)?;
    }
    let e = end_algebra(&t)?;
    let b = &e.algebra;
    r.field("dim", b.dim());
    r.field("cartan", matrix_text(&b.cartan_matrix()));
    r.field("presentation", e.extracted.presentation.to_text());
    for i in 0..b.vertex_count() {
        r.field(&format!("P{}", b.quiver().vertices()[i]), layers_text(b, i));
    }
    let obstruction = cellularity_obstruction(b.quiver()).map_or("none".into(), |(i, j)| {
        let v = b.quiver().vertices();
        format!("({},{})", v[i], v[j])
    });
    r.field("obstruction", obstruction);
    if let Some(name) = &args.match_with {
        let goal = named_or_file(name)?;
        let m = presentation_match(&e.extracted.presentation, &goal)?;
        r.field("match", &m);
        return Ok(if m.matched {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        });
    }
    Ok(EXIT_OK)
}

fn matching(args: &MatchArgs, r: &mut Report) -> Result<i32> {
    let (p, q) = (named_or_file(&args.left)?, named_or_file(&args.right)?);
    let m = presentation_match(&p, &q)?;
    r.field("match", m.matched);
    match &m.witness {
        Some(w) => r.field("witness", describe_witness(&p, &q, w)),
        None => r.field("reason", &m.reason),
    }
    Ok(EXIT_OK)
}

fn signature_text(lambda: &Bipartition, i: usize, ctx: &CrystalContext) -> String {
    let w = signature_word(lambda, i, ctx);
    let red = reduced_signature(&w);
    let fmt = |v: &[crate::crystal::SignatureLetter]| {
        if v.is_empty() {
            "-".to_string()
        } else {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        }
    };
    format!("{} / reduced {}", fmt(&w), fmt(&red))
}

/// Residue word with runs written as powers.
fn grouped(residues: &[usize]) -> OperatorString {
    let mut out = OperatorString::default();
    let mut k = 0;
    while k < residues.len() {
        let run = residues[k..]
            .iter()
            .take_while(|&&x| x == residues[k])
            .count();
        out.push(residues[k], Exponent::Times(run));
        k += run;
    }
    out
}

fn or_undefined(b: Option<Bipartition>) -> String {
    b.map_or("undefined".into(), |b| b.to_string())
}

fn crystal(cmd: &CrystalCmd, r: &mut Report) -> Result<i32> {
    let setup = |c: &CrystalCommon| -> Result<(CrystalContext, Bipartition)> {
        Ok((CrystalContext::new(c.e)?, c.lambda.parse()?))
    };
    match cmd {
        CrystalCmd::Ftilde { common, i, string } => {
            let (ctx, lambda) = setup(common)?;
            if let Some(s) = string {
                let op: OperatorString = s.parse()?;
                let got = op
                    .apply(&lambda, &ctx)
                    .map_or_else(|_| "undefined".into(), |b| b.to_string());
                r.field("result", got);
            } else if let Some(i) = *i {
                r.field("signature", signature_text(&lambda, i, &ctx));
                r.field("result", or_undefined(f_tilde(&lambda, i, &ctx)));
            }
        }
        CrystalCmd::Etilde { common, i } => {
            let (ctx, lambda) = setup(common)?;
            r.field("signature", signature_text(&lambda, *i, &ctx));
            r.field("result", or_undefined(e_tilde(&lambda, *i, &ctx)));
        }
        CrystalCmd::H { common } => {
            let (ctx, lambda) = setup(common)?;
            let string = kleshchev_string(&lambda, &ctx).ok_or(Error::NotKleshchev)?;
            let h = h_involution(&lambda, &ctx)?;
            r.field("string", grouped(&string));
            r.field("h", &h);
            r.field("splits", splits_on_restriction(&lambda, &ctx)?);
        }
        CrystalCmd::Block { common } => {
            let (ctx, lambda) = setup(common)?;
            r.field("beta", block_beta(&lambda, &ctx));
            r.field("kleshchev", is_kleshchev(&lambda, &ctx));
        }
        CrystalCmd::Orbit { e, word } => {
            let ctx = CrystalContext::new(*e)?;
            r.field(
                "weight",
                weyl_orbit_weight(&parse_reflection_word(word)?, &ctx)?,
            );
        }
    }
    Ok(EXIT_OK)
}

fn decomp(cmd: &DecompCmd, r: &mut Report) -> Result<i32> {
    match cmd {
        DecompCmd::Solve {
            cartan,
            rows,
            bound,
        } => {
            let c = parse_matrix(cartan)?;
            match solve_decomposition(&c, *rows, *bound) {
                Ok(sols) => {
                    r.raw(&format!("solutions={}", sols.len()));
                    for (k, s) in sols.iter().enumerate() {
                        r.field(&format!("D{}", k + 1), s);
                    }
                }
                Err(Error::NoSolution) => {
                    r.raw("solutions=0");
                    return Ok(EXIT_CHECK_FAILED);
                }
                Err(e) => return Err(e),
            }
        }
        DecompCmd::Line { n } => {
            let d = brauer_line_decomposition(*n);
            r.field("D", &d);
            r.field("gram", matrix_text(&d.gram()));
        }
    }
    Ok(EXIT_OK)
}

fn checks_exit(checks: &[Check]) -> i32 {
    if checks.iter().all(|c| c.pass) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn dispatch(cli: &Cli, r: &mut Report) -> Result<i32> {
    match &cli.command {
        Command::Algebra(c) => algebra(c, r),
        Command::Brauer(c) => brauer_cmd(c, r),
        Command::Mutate(c) => mutate(c, r),
        Command::Endalg(a) => endalg(a, r),
        Command::Match(a) => matching(a, r),
        Command::Crystal(c) => crystal(c, r),
        Command::Decomp(c) => decomp(c, r),
        Command::Wild(WildCmd::Verify) => {
            let checks = wild::verify_all()?;
            for c in &checks {
                r.check(c);
            }
            Ok(checks_exit(&checks))
        }
        Command::ReproducePaper => {
            let sections = reproduce_paper();
            let mut all = Vec::new();
            for s in &sections {
                if cli.format == Format::Text {
                    r.raw(&format!("# {}", s.title));
                }
                for c in &s.checks {
                    r.check(c);
                }
                all.extend(s.checks.iter().cloned());
            }
            let failed = all.iter().filter(|c| !c.pass).count();
            r.raw(&format!("SUMMARY {} checks, {failed} failed", all.len()));
            Ok(checks_exit(&all))
        }
    }
}

/// Parses and runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return CommandResult {
                code,
                report: e.render().to_string(),
            };
        }
    };
    let mut r = Report::new(cli.format);
    match dispatch(&cli, &mut r) {
        Ok(code) => r.finish(code),
        Err(e) => CommandResult {
            code: EXIT_USAGE,
            report: format!("error: {e}\n"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parser_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn unknown_command_is_usage_error() {
        let r = run(["silt", "frobnicate"]);
        assert_eq!(r.code, EXIT_USAGE);
        assert!(r.report.contains("Usage"));
        assert_eq!(run(["silt", "algebra", "cartan"]).code, EXIT_USAGE);
    }

    #[test]
    fn input_errors_exit_two() {
        let r = run(["silt", "algebra", "cartan", "--fixture", "nope"]);
        assert_eq!(r.code, EXIT_USAGE);
        assert_eq!(r.report, "error: unknown catalogue name `nope`\n");
    }
}
