//! Argument parsing and command dispatch for the `wrdom` binary.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;
use wrdom_core::construct::{
    clique_cover_secure_set, complement_secure_set, product_secure_set, product_wrdf_lift, product_wrdf_two_rows,
    tree_secure_set, tree_wrdf_two_thirds, two_dominating_as_secure,
};
use wrdom_core::family::{conjecture_scan, PrismFamily};
use wrdom_core::guard::{defense_moves, is_df, is_k_dominating, is_rdf, is_secure_dominating, is_wrdf, undefended};
use wrdom_core::{
    nordhaus_gaddum, Certificate, Construction, ConstructionError, Graph, GuardFunction, Invariant, ParseError,
    SolveError, Solver, SolverLimits, VertexSet,
};

use crate::audit::{audit_corpus, AuditOptions, Target};
use crate::report::{
    bounds_text, witness_text, CertificateRecord, ConjectureRecord, NgReport, SolveRecord, SolveReport,
};
use crate::{edgelist, graph6, spec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Input(_) => EXIT_INPUT,
            CliError::Usage(_) | CliError::Solve(_) | CliError::Construction(_) => EXIT_USAGE,
        }
    }
}

fn object_error(what: &str, e: ParseError) -> CliError {
    CliError::Input(format!("{what}: {e}"))
}

#[derive(Debug, Parser)]
#[command(
    name = "wrdom",
    version,
    about = "Exact weak Roman and secure domination: solvers, constructions and bound audits",
    after_long_help = concat!(
        "Graphs are read as graph6 lines from --graph6 (or stdin), from an edge list, or from a family spec.\n",
        "Exit codes: 0 success, 1 usage error, 2 bound violation found by audit, 3 input or parse failure.\n"
    )
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest order any exact solver accepts; larger graphs are refused or skipped.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub limit_n: Option<u64>,
    /// Worker threads for audit.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    /// Seed for random family specs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Exactly one graph source; stdin graph6 when none is given.
#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct Input {
    /// graph6 file, one graph per line; `-` reads stdin.
    #[arg(long, value_name = "FILE")]
    pub graph6: Option<String>,
    /// Edge-list file: a `n <order>` line, then `u v` per edge.
    #[arg(long, value_name = "FILE")]
    pub edges: Option<String>,
    /// Family spec, e.g. `prod:complete:3,star:5`.
    #[arg(long, value_name = "SPEC", long_help = spec_help())]
    pub spec: Option<String>,
}

fn spec_help() -> String {
    format!("Family spec.\n\n{}", spec::GRAMMAR)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the graphs of a family spec as graph6 lines.
    #[command(after_long_help = spec::GRAMMAR)]
    Gen {
        /// Family spec.
        spec: String,
    },
    /// Exact invariants with witnesses.
    Solve {
        #[command(flatten)]
        input: Input,
        /// Comma-separated invariant ids: gamma, gamma_<k>, gamma_R, gamma_r, gamma_s,
        /// matching, rho, theta, chi, tau.
        #[arg(long, value_delimiter = ',', default_value = "gamma,gamma_R,gamma_r,gamma_s")]
        invariants: Vec<String>,
    },
    /// Check a vertex set or guard function against a protection class.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        class: Class,
        /// A vertex set `0,3` (df, secure, k-dom) or guard function `2,0,1,0` (rdf, wrdf).
        #[arg(long, allow_hyphen_values = true)]
        object: String,
        /// `k` for k-dom.
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Run a named construction and print its certificate.
    Construct {
        #[command(flatten)]
        input: Input,
        /// One of: two-thirds, tree-secure, complement-secure, clique-cover-secure,
        /// product-lift, product-secure, product-two-rows, two-dominating.
        #[arg(long)]
        algorithm: String,
        /// Guard function: on the input graph for product-lift, on the second factor for
        /// product-two-rows. Defaults to an optimal one from the exact solver.
        #[arg(long)]
        function: Option<String>,
        /// Second factor: a family spec, or `@FILE` (edge list if it ends in `.edges`, else graph6).
        #[arg(long, value_name = "SPEC|@FILE")]
        with: Option<String>,
    },
    /// Evaluate every registered bound on each input graph.
    Audit {
        #[command(flatten)]
        input: Input,
        /// Audit `G □ H` for each input `G` against the product bounds.
        #[arg(long, value_name = "SPEC|@FILE")]
        with: Option<String>,
    },
    /// Weak Roman and secure domination of each graph next to its complement.
    Ng {
        #[command(flatten)]
        input: Input,
    },
    /// Exact secure domination of prisms next to the conjectured value.
    Conjecture {
        #[arg(long, value_enum, default_value_t = Prism::Path)]
        family: Prism,
        #[arg(long, default_value_t = 8)]
        t_max: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Df,
    Rdf,
    Wrdf,
    Secure,
    KDom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Prism {
    /// `P_t □ K_2`.
    Path,
    /// `C_t □ K_2`.
    Cycle,
}

struct Ctx<'a> {
    global: &'a Global,
    solver: Solver,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit<T: Serialize>(&mut self, json: &T, text: impl FnOnce() -> String) -> Result<(), CliError> {
        let body = match self.global.format {
            Format::Json => serde_json::to_string_pretty(json).expect("reports serialize") + "\n",
            Format::Text => text(),
        };
        self.out.write_all(body.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
    }

    fn warn(&mut self, msg: &str) {
        let _ = writeln!(self.err, "warning: {msg}");
    }

    fn read_file(&mut self, path: &str) -> Result<String, CliError> {
        let io_err = |source| CliError::Io { path: path.to_string(), source };
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(io_err)?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(io_err)
        }
    }

    fn graph6_lines(text: &str, source: &str) -> Result<Vec<Graph>, CliError> {
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| graph6::parse(l.trim()).map_err(|e| CliError::Input(format!("{source} line {}: {e}", i + 1))))
            .collect()
    }

    fn graphs(&mut self, input: &Input) -> Result<Vec<Graph>, CliError> {
        if let Some(path) = &input.edges {
            let text = self.read_file(path)?;
            return Ok(vec![edgelist::parse(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))?]);
        }
        if let Some(s) = &input.spec {
            return spec::evaluate(s, self.global.seed).map_err(|e| CliError::Input(e.to_string()));
        }
        let path = input.graph6.as_deref().unwrap_or("-");
        let text = self.read_file(path)?;
        Self::graph6_lines(&text, if path == "-" { "<stdin>" } else { path })
    }

    fn single(&mut self, input: &Input) -> Result<Graph, CliError> {
        let mut gs = self.graphs(input)?;
        match gs.len() {
            1 => Ok(gs.pop().expect("one graph")),
            n => Err(CliError::Usage(format!("this command takes exactly one graph, the input has {n}"))),
        }
    }

    fn second_factor(&mut self, with: &str) -> Result<Graph, CliError> {
        let gs = match with.strip_prefix('@') {
            Some(path) => {
                let text = self.read_file(path)?;
                if Path::new(path).extension().is_some_and(|e| e == "edges") {
                    vec![edgelist::parse(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))?]
                } else {
                    Self::graph6_lines(&text, path)?
                }
            }
            None => spec::evaluate(with, self.global.seed).map_err(|e| CliError::Input(e.to_string()))?,
        };
        match &gs[..] {
            [h] => Ok(h.clone()),
            _ => Err(CliError::Usage(format!("--with must denote one graph, got {}", gs.len()))),
        }
    }
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn main_with<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(&cli, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let limits = match cli.global.limit_n {
        Some(n) => SolverLimits::default().capped(n as usize),
        None => SolverLimits::default(),
    };
    let mut ctx = Ctx { global: &cli.global, solver: Solver::new(limits), stdin, out, err };
    match &cli.command {
        Command::Gen { spec: s } => gen(&mut ctx, s),
        Command::Solve { input, invariants } => solve(&mut ctx, input, invariants),
        Command::Verify { input, class, object, k } => verify(&mut ctx, input, *class, object, *k),
        Command::Construct { input, algorithm, function, with } => {
            construct(&mut ctx, input, algorithm, function.as_deref(), with.as_deref())
        }
        Command::Audit { input, with } => audit(&mut ctx, input, with.as_deref()),
        Command::Ng { input } => ng(&mut ctx, input),
        Command::Conjecture { family, t_max } => conjecture(&mut ctx, *family, *t_max),
    }
}

#[derive(Serialize)]
struct GenRecord {
    graph6: String,
    order: usize,
    edges: Vec<(usize, usize)>,
}

fn gen(ctx: &mut Ctx, s: &str) -> Result<i32, CliError> {
    let gs = spec::evaluate(s, ctx.global.seed).map_err(|e| CliError::Input(e.to_string()))?;
    let records: Vec<GenRecord> = gs
        .iter()
        .map(|g| GenRecord { graph6: graph6::write(g), order: g.order(), edges: g.edges().collect() })
        .collect();
    ctx.emit(&records, || records.iter().map(|r| format!("{}\n", r.graph6)).collect())?;
    Ok(EXIT_OK)
}

fn solve(ctx: &mut Ctx, input: &Input, ids: &[String]) -> Result<i32, CliError> {
    let invariants: Vec<Invariant> = ids
        .iter()
        .map(|id| Invariant::from_id(id.trim()).ok_or_else(|| CliError::Usage(format!("unknown invariant `{id}`"))))
        .collect::<Result<_, _>>()?;
    let graphs = ctx.graphs(input)?;
    let mut reports = Vec::with_capacity(graphs.len());
    for g in &graphs {
        let mut report = SolveReport { graph6: graph6::write(g), results: Vec::new(), errors: BTreeMap::new() };
        for &inv in &invariants {
            match ctx.solver.solve(g, inv) {
                Ok(r) => report.results.push(SolveRecord::from(&r)),
                Err(e) => {
                    ctx.warn(&format!("{}: {}: {e}", report.graph6, inv.id()));
                    report.errors.insert(inv.id(), e.to_string());
                }
            }
        }
        reports.push(report);
    }
    ctx.emit(&reports, || {
        let mut s = String::new();
        for r in &reports {
            s.push_str(&format!("graph {}\n", r.graph6));
            for x in &r.results {
                s.push_str(&format!(
                    "  {} = {}  witness {}  nodes {}\n",
                    x.invariant_id, x.value, x.witness, x.nodes_explored
                ));
            }
            for (id, e) in &r.errors {
                s.push_str(&format!("  {id}: {e}\n"));
            }
        }
        s
    })?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct DefenseRecord {
    defender: usize,
    valid: bool,
}

#[derive(Serialize)]
struct VerifyRecord {
    graph6: String,
    class: String,
    object: String,
    valid: bool,
    failing_vertex: Option<usize>,
    /// Guarded neighbours of the failing vertex when it was defended but no slide was safe.
    defense_moves: Vec<DefenseRecord>,
}

/// The first vertex that breaks the class, and the defence moves tried there.
fn first_failure(g: &Graph, f: &GuardFunction, ok: impl Fn(usize) -> bool) -> (Option<usize>, Vec<DefenseRecord>) {
    if let Some(v) = undefended(g, f).first() {
        return (Some(v), Vec::new());
    }
    match (0..g.order()).find(|&v| !ok(v)) {
        None => (None, Vec::new()),
        Some(v) => {
            let moves = defense_moves(g, f, v).unwrap_or_default();
            (Some(v), moves.iter().map(|m| DefenseRecord { defender: m.defender, valid: m.valid }).collect())
        }
    }
}

fn verify(ctx: &mut Ctx, input: &Input, class: Class, object: &str, k: usize) -> Result<i32, CliError> {
    let g = ctx.single(input)?;
    let n = g.order();
    let set = || VertexSet::parse(object, n).map_err(|e| object_error("--object", e));
    let function = || GuardFunction::parse(object, n).map_err(|e| object_error("--object", e));
    let safe =
        |f: &GuardFunction, v: usize| f.get(v) != 0 || defense_moves(&g, f, v).is_ok_and(|m| m.iter().any(|m| m.valid));
    let (valid, failing, moves) = match class {
        Class::Df => {
            let s = set()?;
            let f = GuardFunction::from_set(s);
            (is_df(&g, s), undefended(&g, &f).first(), Vec::new())
        }
        Class::KDom => {
            if k == 0 {
                return Err(CliError::Usage("--k must be at least 1".into()));
            }
            let s = set()?;
            let short = (0..n).find(|&v| !s.contains(v) && (g.neighbors(v) & s).len() < k);
            (is_k_dominating(&g, s, k), short, Vec::new())
        }
        Class::Rdf => {
            let f = function()?;
            let bad = (0..n).find(|&v| f.get(v) == 0 && (g.neighbors(v) & f.v2()).is_empty());
            (is_rdf(&g, &f), bad, Vec::new())
        }
        Class::Wrdf => {
            let f = function()?;
            let (v, m) = first_failure(&g, &f, |v| safe(&f, v));
            (is_wrdf(&g, &f), v, m)
        }
        Class::Secure => {
            let s = set()?;
            let f = GuardFunction::from_set(s);
            let (v, m) = first_failure(&g, &f, |v| safe(&f, v));
            (is_secure_dominating(&g, s), v, m)
        }
    };
    let class_id = class.to_possible_value().expect("no skipped variants").get_name().to_string();
    let rec = VerifyRecord {
        graph6: graph6::write(&g),
        class: class_id,
        object: object.to_string(),
        valid,
        failing_vertex: failing,
        defense_moves: moves,
    };
    ctx.emit(&rec, || {
        let mut s = format!("{} {}: {}\n", rec.class, rec.object, rec.valid);
        if let Some(v) = rec.failing_vertex {
            s.push_str(&format!("  first failing vertex {v}\n"));
            for m in &rec.defense_moves {
                let verdict = if m.valid { "safe" } else { "leaves a vertex undefended" };
                s.push_str(&format!("  move {} -> {v}: {verdict}\n", m.defender));
            }
        }
        s
    })?;
    Ok(EXIT_OK)
}

fn construct(
    ctx: &mut Ctx,
    input: &Input,
    algorithm: &str,
    function: Option<&str>,
    with: Option<&str>,
) -> Result<i32, CliError> {
    let c = Construction::from_id(algorithm).ok_or_else(|| {
        let ids: Vec<&str> = Construction::ALL.iter().map(|c| c.id()).collect();
        CliError::Usage(format!("unknown algorithm `{algorithm}`; expected one of {}", ids.join(", ")))
    })?;
    let g = ctx.single(input)?;
    let solver = ctx.solver;
    let mut factor = || match with {
        Some(w) => ctx.second_factor(w),
        None => Err(CliError::Usage(format!("{algorithm} needs --with"))),
    };
    let parse_fn = |text: &str, n| GuardFunction::parse(text, n).map_err(|e| object_error("--function", e));
    let cert: Certificate = match c {
        Construction::TwoThirds => tree_wrdf_two_thirds(&g, None)?,
        Construction::TreeSecure => tree_secure_set(&g, None)?,
        Construction::ComplementSecure => complement_secure_set(&g, &solver)?,
        Construction::CliqueCoverSecure => clique_cover_secure_set(&g, &solver)?,
        Construction::TwoDominating => two_dominating_as_secure(&g, &solver)?,
        Construction::ProductSecure => product_secure_set(&g, &factor()?, &solver)?,
        Construction::ProductLift => {
            let h = factor()?;
            let f = match function {
                Some(text) => parse_fn(text, g.order())?,
                None => match solver.gamma_weak_roman(&g)?.witness {
                    wrdom_core::Witness::Function(f) => f,
                    other => unreachable!("weak Roman solver returned {}", witness_text(&other)),
                },
            };
            product_wrdf_lift(&g, &f, &h)?
        }
        Construction::ProductTwoRows => {
            let h = factor()?;
            let hf = match function {
                Some(text) => parse_fn(text, h.order())?,
                None => solver.weak_roman_with_twos(&h)?.ok_or(ConstructionError::Inapplicable(
                    "no minimum weak Roman function of the second factor places a double guard",
                ))?,
            };
            product_wrdf_two_rows(&g, &h, &hf, &solver)?
        }
    };
    let rec = CertificateRecord::from(&cert);
    ctx.emit(&rec, || {
        format!(
            "{}: object {} size {} claimed bound {} valid {}{}\n",
            rec.theorem_id,
            rec.object,
            cert.object.size(),
            rec.claimed_bound,
            rec.valid,
            if rec.trusted_input { " (input optimality not checked)" } else { "" }
        )
    })?;
    Ok(EXIT_OK)
}

fn audit(ctx: &mut Ctx, input: &Input, with: Option<&str>) -> Result<i32, CliError> {
    let graphs = ctx.graphs(input)?;
    let target = match with {
        Some(w) => Target::ProductWith(ctx.second_factor(w)?),
        None => Target::Single,
    };
    let opts = AuditOptions {
        solver: ctx.solver,
        limit_n: ctx.solver.limits.search,
        workers: ctx.global.workers as usize,
        target,
    };
    let result = audit_corpus(&graphs, &opts).map_err(|e| CliError::Usage(format!("worker pool: {e}")))?;
    let skipped: Vec<String> =
        result.skipped().map(|r| format!("{}: {}", r.graph6, r.skipped.as_deref().unwrap_or(""))).collect();
    for s in &skipped {
        ctx.warn(&format!("skipped {s}"));
    }
    let violations = result.violation_count();
    ctx.emit(&result.reports, || result.reports.iter().map(|r| r.text()).collect())?;
    let _ = writeln!(
        ctx.err,
        "audited {} graphs: {} violations, {} skipped, complete={}",
        result.reports.len(),
        violations,
        skipped.len(),
        result.complete()
    );
    Ok(if violations > 0 { EXIT_VIOLATION } else { EXIT_OK })
}

fn ng(ctx: &mut Ctx, input: &Input) -> Result<i32, CliError> {
    let graphs = ctx.graphs(input)?;
    let reports: Vec<NgReport> = graphs
        .iter()
        .map(|g| nordhaus_gaddum(g, &ctx.solver).map(|r| NgReport::new(g, &r)))
        .collect::<Result<_, _>>()?;
    let violations = reports.iter().flat_map(|r| &r.bounds).filter(|b| b.applicable && b.holds == Some(false)).count();
    ctx.emit(&reports, || {
        let mut s = String::new();
        for r in &reports {
            s.push_str(&format!(
                "graph {} n={}\n  gamma_r={} complement {}  sum {} product {}\n  gamma_s={} complement {}  sum {} product {}\n",
                r.graph6,
                r.order,
                r.gamma_r,
                r.gamma_r_complement,
                r.weak_roman_sum,
                r.weak_roman_product,
                r.gamma_s,
                r.gamma_s_complement,
                r.secure_sum,
                r.secure_product
            ));
            if let Some(side) = &r.refined_side {
                s.push_str(&format!("  refined hypotheses met by: {side}\n"));
            }
            s.push_str(&bounds_text(&r.bounds));
        }
        s
    })?;
    Ok(if violations > 0 { EXIT_VIOLATION } else { EXIT_OK })
}

#[derive(Serialize)]
struct ConjectureReport {
    conjectures: Vec<ConjectureRecord>,
}

fn conjecture(ctx: &mut Ctx, family: Prism, t_max: usize) -> Result<i32, CliError> {
    let (pf, name) = match family {
        Prism::Path => (PrismFamily::Path, "path-prism"),
        Prism::Cycle => (PrismFamily::Cycle, "cycle-prism"),
    };
    let rows = conjecture_scan(pf, t_max, &ctx.solver)?;
    let report = ConjectureReport { conjectures: rows.iter().map(|r| ConjectureRecord::new(name, r)).collect() };
    ctx.emit(&report, || {
        let mut s = format!("{name}\n   t  exact  conjectured  match\n");
        for r in &report.conjectures {
            s.push_str(&format!("{:>4}  {:>5}  {:>11}  {}\n", r.t, r.exact, r.conjectured, r.matches));
        }
        s
    })?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code =
            main_with(std::iter::once("wrdom").chain(args.iter().copied()), &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_and_solve_round_trip() {
        let (code, out, _) = run_args(&["gen", "path:4"], "");
        assert_eq!((code, out.as_str()), (0, "Ch\n"));
        let (code, out, _) = run_args(&["--format", "json", "solve", "--invariants", "gamma_r"], "Ch\n");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[0]["results"][0]["value"], 2);
    }

    #[test]
    fn verify_reports_first_failure() {
        let (code, out, _) =
            run_args(&["--format", "json", "verify", "--spec", "path:3", "--class", "wrdf", "--object", "0,1,0"], "");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!((v["valid"].as_bool(), v["failing_vertex"].as_u64()), (Some(false), Some(0)));
        assert_eq!(v["defense_moves"][0]["defender"], 1);
        assert_eq!(v["defense_moves"][0]["valid"], false);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["--help"], "").0, EXIT_OK);
        assert_eq!(run_args(&["bogus"], "").0, EXIT_USAGE);
        assert_eq!(run_args(&["solve", "--invariants", "nope"], "Ch\n").0, EXIT_USAGE);
        assert_eq!(run_args(&["solve"], "Cx!\n").0, EXIT_INPUT);
        assert_eq!(run_args(&["gen", "pth:3"], "").0, EXIT_INPUT);
        assert_eq!(run_args(&["solve", "--edges", "/nonexistent/file.edges"], "").0, EXIT_INPUT);
        assert_eq!(run_args(&["solve", "--spec", "path:3", "--edges", "x"], "").0, EXIT_USAGE);
    }
}
