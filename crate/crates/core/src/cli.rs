//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 invalid or
//! infeasible input, 4 `--verify` mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::error::Error as SolveError;
use crate::gather::{find_optimal_gathering_point, find_optimal_gathering_point_with, uniform_slope_gathering_point};
use crate::gen::{generate, generate_intervals, generate_squares, GenOptions, Kind};
use crate::instance::{parse_instance, Instance, InstanceError};
use crate::interval::{shifted_in_place, Collection};
use crate::kclique::solve_kclique;
use crate::lp::{solve_property, to_lp_format, ConnectivityOffset, Property, PropertySpec, DEFAULT_EPS};
use crate::oracle::{
    check_property, grid_search_lp, oracle_gathering, oracle_kclique_full, oracle_kclique_windows, oracle_squares_grid,
    GraphProperty, GridOptions, FULL_KCLIQUE_CAP, GRID_SEARCH_CAP,
};
use crate::select::PivotRule;
use crate::squares::{find_optimal_gathering_point_l1, UnitSquare};

/// Largest inputs `--verify` re-checks with the quadratic or cubic oracles.
const VERIFY_GATHER_CAP: usize = 20_000;
const VERIFY_SQUARES_CAP: usize = 200;
const VERIFY_KCLIQUE_CAP: usize = 5_000;
const LP_FEAS_TOL: f64 = 1e-7;

#[derive(Debug, Parser)]
#[command(name = "interval-shift", version, about = "Minimum-displacement shifting of intervals and unit squares")]
struct Cli {
    /// Re-check results against a brute-force oracle (within size caps).
    #[arg(long, global = true)]
    verify: bool,
    /// Print diagnostics to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    /// Write the output document here instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PivotArg {
    MedianOfMedians,
    Random,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PropertyArg {
    Edgeless,
    Acyclic,
    NoKclique,
    Kconnected,
}

impl From<PropertyArg> for Property {
    fn from(p: PropertyArg) -> Self {
        match p {
            PropertyArg::Edgeless => Property::Edgeless,
            PropertyArg::Acyclic => Property::Acyclic,
            PropertyArg::NoKclique => Property::NoKClique,
            PropertyArg::Kconnected => Property::KConnected,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckArg {
    Complete,
    Edgeless,
    Acyclic,
    HasKclique,
    NoKclique,
    Kconnected,
}

impl From<CheckArg> for GraphProperty {
    fn from(p: CheckArg) -> Self {
        match p {
            CheckArg::Complete => GraphProperty::Complete,
            CheckArg::Edgeless => GraphProperty::Edgeless,
            CheckArg::Acyclic => GraphProperty::Acyclic,
            CheckArg::HasKclique => GraphProperty::HasKClique,
            CheckArg::NoKclique => GraphProperty::NoKClique,
            CheckArg::Kconnected => GraphProperty::KConnected,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Intervals,
    Squares,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Gather,
    GatherUniform,
    Squares,
    Kclique,
    Lp,
    Smoke,
}

#[derive(Debug, clap::Args)]
struct LpArgs {
    property: PropertyArg,
    file: PathBuf,
    #[arg(short, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = DEFAULT_EPS)]
    eps: f64,
    /// Use the k + 1 index offset for k-connectivity.
    #[arg(long)]
    paper_literal: bool,
}

impl LpArgs {
    fn spec(&self) -> PropertySpec {
        let offset = if self.paper_literal { ConnectivityOffset::PaperLiteral } else { ConnectivityOffset::Validated };
        PropertySpec::new(self.property.into()).with_k(self.k).with_eps(self.eps).with_offset(offset)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cheapest common point for all intervals (complete graph).
    Gather {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "median-of-medians")]
        pivot: PivotArg,
        #[arg(long, env = "INTERVAL_SHIFT_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Cheapest common point for unit squares under L1 displacement.
    Squares { file: PathBuf },
    /// Cheapest way to make k equal unit intervals share a point.
    Kclique {
        #[arg(short)]
        k: usize,
        file: PathBuf,
    },
    /// Solve a graph-property linear program.
    Lp {
        #[command(flatten)]
        args: LpArgs,
        /// Also write the program in CPLEX LP format.
        #[arg(long, value_name = "PATH")]
        dump_lp: Option<PathBuf>,
    },
    /// Brute-force references and property checks.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Generate a random instance file.
    Gen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, env = "INTERVAL_SHIFT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10.0)]
        span: f64,
        #[arg(long, default_value_t = 0.5)]
        grid: f64,
        #[arg(long, value_enum, default_value = "intervals")]
        kind: KindArg,
        #[arg(long, default_value_t = 1)]
        max_weight: u32,
        #[arg(long, default_value_t = 1.0)]
        max_length: f64,
    },
    /// Time solvers on generated instances; writes CSV.
    Bench {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[arg(long, env = "INTERVAL_SHIFT_SEED", default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Evaluate the cost at every endpoint.
    Gather { file: PathBuf },
    /// Enumerate windows (or, with --full, all k-subsets).
    Kclique {
        #[arg(short)]
        k: usize,
        file: PathBuf,
        #[arg(long)]
        full: bool,
    },
    /// Exhaustive shift-grid search for a property (n <= 4).
    Grid {
        #[command(flatten)]
        args: LpArgs,
        #[arg(long, default_value_t = 5.0)]
        bound: f64,
        #[arg(long, default_value_t = 0.0625)]
        step: f64,
        #[arg(long, default_value_t = 2)]
        refinements: usize,
    },
    /// Check a property of the instance's intersection graph.
    Check {
        property: CheckArg,
        file: PathBuf,
        #[arg(short, default_value_t = 2)]
        k: usize,
        /// Gaps up to this size count as contact.
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Instance(InstanceError::Io { .. }) | CliError::Write { .. } => 1,
            CliError::Instance(_) | CliError::Solve(_) => 3,
        }
    }
}

/// What a command produced: the text to emit and an optional verification
/// failure.
struct Outcome {
    text: String,
    mismatch: Option<String>,
}

impl Outcome {
    fn document(doc: Value) -> Self {
        let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
        text.push('\n');
        Self { text, mismatch: None }
    }
}

struct Ctx<'a> {
    verify: bool,
    verbose: bool,
    log: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn note(&mut self, msg: impl AsRef<str>) {
        if self.verbose {
            let _ = writeln!(self.log, "{}", msg.as_ref());
        }
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * (1.0 + b.abs())
}

fn intervals(path: &Path) -> Result<Collection, CliError> {
    match parse_instance(path)? {
        Instance::Intervals(c) => Ok(c),
        Instance::Squares(_) => Err(CliError::Usage(format!("{}: expected an intervals instance", path.display()))),
    }
}

fn squares(path: &Path) -> Result<Vec<UnitSquare>, CliError> {
    match parse_instance(path)? {
        Instance::Squares(s) => Ok(s),
        Instance::Intervals(_) => Err(CliError::Usage(format!("{}: expected a squares instance", path.display()))),
    }
}

/// Records a verification verdict in `doc`; returns the mismatch, if any.
fn record(doc: &mut Value, verdict: Option<Result<String, String>>, ctx: &mut Ctx) -> Option<String> {
    match verdict {
        None => {
            doc["verified"] = Value::Null;
            ctx.note("verify: skipped (input above oracle cap)");
            None
        }
        Some(Ok(detail)) => {
            doc["verified"] = json!(true);
            ctx.note(format!("verify: ok ({detail})"));
            None
        }
        Some(Err(why)) => {
            doc["verified"] = json!(false);
            ctx.note(format!("verify: MISMATCH ({why})"));
            Some(why)
        }
    }
}

fn cmd_gather(file: &Path, pivot: PivotArg, seed: u64, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let c = intervals(file)?;
    let rule = match pivot {
        PivotArg::MedianOfMedians => PivotRule::MedianOfMedians,
        PivotArg::Random => PivotRule::Random { seed },
    };
    let start = Instant::now();
    let r = find_optimal_gathering_point_with(&c, rule)?;
    let ms = elapsed_ms(start);
    ctx.note(format!("gather: n = {}, {ms:.3} ms", c.len()));
    let mut doc = json!({
        "command": "gather",
        "property": "complete",
        "cost": r.cost,
        "point": r.point_lo,
        "points": [r.point_lo, r.point_hi],
        "shifts": r.shifts.displacements,
        "mode": {"pivot": pivot.to_possible_value().expect("not skipped").get_name()},
        "wall_time_ms": ms,
    });
    let mut mismatch = None;
    if ctx.verify {
        let verdict = (c.len() <= VERIFY_GATHER_CAP).then(|| {
            let (_, cost) = oracle_gathering(&c)?;
            Ok::<_, SolveError>(if close(r.cost, cost) {
                Ok(format!("oracle cost {cost}"))
            } else {
                Err(format!("solver cost {} but oracle cost {cost}", r.cost))
            })
        });
        mismatch = record(&mut doc, verdict.transpose()?, ctx);
    }
    Ok(Outcome { mismatch, ..Outcome::document(doc) })
}

fn cmd_squares(file: &Path, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let s = squares(file)?;
    let start = Instant::now();
    let r = find_optimal_gathering_point_l1(&s)?;
    let ms = elapsed_ms(start);
    ctx.note(format!("squares: n = {}, {ms:.3} ms", s.len()));
    let mut doc = json!({
        "command": "squares",
        "property": "complete",
        "cost": r.cost,
        "point": [r.point.0, r.point.1],
        "x_range": [r.x_range.0, r.x_range.1],
        "y_range": [r.y_range.0, r.y_range.1],
        "shifts": r.shifts.iter().map(|&(dx, dy)| [dx, dy]).collect::<Vec<_>>(),
        "wall_time_ms": ms,
    });
    let mut mismatch = None;
    if ctx.verify {
        let verdict = (s.len() <= VERIFY_SQUARES_CAP).then(|| {
            let (_, cost) = oracle_squares_grid(&s)?;
            Ok::<_, SolveError>(if close(r.cost, cost) {
                Ok(format!("oracle cost {cost}"))
            } else {
                Err(format!("solver cost {} but oracle cost {cost}", r.cost))
            })
        });
        mismatch = record(&mut doc, verdict.transpose()?, ctx);
    }
    Ok(Outcome { mismatch, ..Outcome::document(doc) })
}

fn cmd_kclique(file: &Path, k: usize, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let c = intervals(file)?;
    let start = Instant::now();
    let r = solve_kclique(&c, k)?;
    let ms = elapsed_ms(start);
    ctx.note(format!("kclique: n = {}, k = {k}, {ms:.3} ms", c.len()));
    let mut doc = json!({
        "command": "kclique",
        "property": "k-clique",
        "k": k,
        "cost": r.cost,
        "point": r.point,
        "window": r.window_start,
        "members": r.members,
        "shifts": r.shifts.displacements,
        "wall_time_ms": ms,
    });
    let mut mismatch = None;
    if ctx.verify {
        let verdict = (c.len() <= VERIFY_KCLIQUE_CAP).then(|| {
            let w = oracle_kclique_windows(&c, k)?;
            if !close(r.cost, w.cost) {
                return Ok(Err(format!("solver cost {} but window oracle cost {}", r.cost, w.cost)));
            }
            if c.len() <= FULL_KCLIQUE_CAP {
                let full = oracle_kclique_full(&c, k)?;
                if !close(r.cost, full) {
                    return Ok(Err(format!("solver cost {} but subset oracle cost {full}", r.cost)));
                }
            }
            Ok::<_, SolveError>(Ok(format!("oracle cost {}", w.cost)))
        });
        mismatch = record(&mut doc, verdict.transpose()?, ctx);
    }
    Ok(Outcome { mismatch, ..Outcome::document(doc) })
}

fn lp_mode(args: &LpArgs) -> Value {
    json!({"paper_literal": args.paper_literal})
}

fn cmd_lp(args: &LpArgs, dump: Option<&Path>, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let c = intervals(&args.file)?;
    let spec = args.spec();
    let start = Instant::now();
    let sol = solve_property(&c, &spec)?;
    let ms = elapsed_ms(start);
    ctx.note(format!(
        "lp {}: n = {}, {} rows, {ms:.3} ms",
        spec.property.name(),
        c.len(),
        sol.program.constraints.len()
    ));
    if let Some(path) = dump {
        std::fs::write(path, to_lp_format(&sol.program))
            .map_err(|source| CliError::Write { path: path.display().to_string(), source })?;
    }
    let mut doc = json!({
        "command": "lp",
        "property": spec.property.name(),
        "cost": sol.objective,
        "cost_without_eps": sol.cost_without_eps,
        "epsilon": spec.eps,
        "shifts": sol.shifts.displacements,
        "mode": lp_mode(args),
        "wall_time_ms": ms,
    });
    if matches!(spec.property, Property::NoKClique | Property::KConnected) {
        doc["k"] = json!(spec.k);
    }
    let mut mismatch = None;
    if ctx.verify {
        let violation = sol.program.max_violation(&sol.sorted_shifts);
        let shifted = shifted_in_place(&c, &sol.shifts.displacements)?;
        let report = check_property(&shifted, spec.property.into(), spec.k, spec.eps / 2.0);
        let verdict = if violation > LP_FEAS_TOL {
            Err(format!("constraint violation {violation}"))
        } else if !report.holds {
            Err(format!("shifted instance fails the property: {:?}", report.witness))
        } else if c.len() <= GRID_SEARCH_CAP {
            let grid = grid_search_lp(&c, &spec, GridOptions::default())?;
            if grid.cost < sol.objective - 1e-3 {
                Err(format!("grid search found cost {} below {}", grid.cost, sol.objective))
            } else {
                Ok(format!("feasible, property holds, grid cost {}", grid.cost))
            }
        } else {
            Ok("feasible, property holds".to_string())
        };
        mismatch = record(&mut doc, Some(verdict), ctx);
    }
    Ok(Outcome { mismatch, ..Outcome::document(doc) })
}

fn cmd_oracle(which: &OracleCommand, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let doc = match which {
        OracleCommand::Gather { file } => {
            let c = intervals(file)?;
            let (point, cost) = oracle_gathering(&c)?;
            json!({"command": "oracle gather", "property": "complete", "cost": cost, "point": point})
        }
        OracleCommand::Kclique { k, file, full } => {
            let c = intervals(file)?;
            if *full {
                let cost = oracle_kclique_full(&c, *k)?;
                json!({"command": "oracle kclique", "property": "k-clique", "k": k, "cost": cost, "mode": {"full": true}})
            } else {
                let w = oracle_kclique_windows(&c, *k)?;
                json!({
                    "command": "oracle kclique", "property": "k-clique", "k": k,
                    "cost": w.cost, "point": w.point, "window": w.window_start, "mode": {"full": false},
                })
            }
        }
        OracleCommand::Grid { args, bound, step, refinements } => {
            let c = intervals(&args.file)?;
            if !(*step > 0.0 && *bound > 0.0) {
                return Err(CliError::Usage("--step and --bound must be positive".into()));
            }
            let spec = args.spec();
            let r = grid_search_lp(&c, &spec, GridOptions { bound: *bound, step: *step, refinements: *refinements })?;
            json!({
                "command": "oracle grid", "property": spec.property.name(), "k": spec.k, "cost": r.cost,
                "shifts": r.displacements, "epsilon": spec.eps, "mode": lp_mode(args),
            })
        }
        OracleCommand::Check { property, file, k, tol } => {
            let c = intervals(file)?;
            let report = check_property(&c, (*property).into(), *k, *tol);
            json!({"command": "oracle check", "k": k, "tolerance": tol, "report": report})
        }
    };
    let mut doc = doc;
    doc["wall_time_ms"] = json!(elapsed_ms(start));
    ctx.note("oracle: done");
    Ok(Outcome::document(doc))
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(n: u64, seed: u64, span: f64, grid: f64, kind: KindArg, max_weight: u32, max_length: f64) -> Result<Outcome, CliError> {
    let kind = match kind {
        KindArg::Intervals => Kind::Intervals,
        KindArg::Squares => Kind::Squares,
    };
    let options = GenOptions::new(n as usize, seed)
        .span(span)
        .grid(grid)
        .kind(kind)
        .max_weight(max_weight)
        .max_length(max_length);
    let file = generate(&options).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Outcome { text: file.emit(), mismatch: None })
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

fn cmd_bench(suite: Suite, runs: usize, seed: u64, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    if runs == 0 {
        return Err(CliError::Usage("--runs must be at least 1".into()));
    }
    let mut out = String::from("algorithm,n,k,seed,wall_time_ms,cost\n");
    let mut row = |ctx: &mut Ctx, algorithm: &str, n: usize, k: Option<usize>, times: Vec<f64>, cost: f64| {
        for t in &times {
            let k = k.map(|k| k.to_string()).unwrap_or_default();
            out.push_str(&format!("{algorithm},{n},{k},{seed},{t:.3},{cost}\n"));
        }
        ctx.note(format!("{algorithm} n = {n}: median {:.3} ms", median(times)));
    };
    let time = |f: &mut dyn FnMut() -> Result<f64, SolveError>| -> Result<(Vec<f64>, f64), SolveError> {
        let mut times = Vec::with_capacity(runs);
        let mut cost = f64::NAN;
        for _ in 0..runs {
            let start = Instant::now();
            cost = f()?;
            times.push(elapsed_ms(start));
        }
        Ok((times, cost))
    };
    let sizes: &[usize] = match suite {
        Suite::Gather | Suite::GatherUniform => &[250_000, 500_000, 1_000_000],
        Suite::Squares => &[100_000, 200_000, 400_000],
        Suite::Kclique => &[25_000, 50_000, 100_000],
        Suite::Lp => &[10, 20, 40],
        Suite::Smoke => &[200],
    };
    for &n in sizes {
        let span = (n as f64 / 4.0).max(5.0);
        if matches!(suite, Suite::Gather | Suite::Smoke) {
            let c = generate_intervals(&GenOptions::new(n, seed).span(span).max_weight(10).max_length(3.0))?;
            let (t, cost) = time(&mut || Ok(find_optimal_gathering_point(&c)?.cost))?;
            row(ctx, "gather", n, None, t, cost);
        }
        if matches!(suite, Suite::GatherUniform | Suite::Smoke) {
            let c = generate_intervals(&GenOptions::new(n, seed).span(span))?;
            let (t, cost) = time(&mut || Ok(uniform_slope_gathering_point(&c)?.cost))?;
            row(ctx, "gather-uniform", n, None, t, cost);
        }
        if matches!(suite, Suite::Squares | Suite::Smoke) {
            let s = generate_squares(&GenOptions::new(n, seed).span(span.sqrt()).kind(Kind::Squares))?;
            let (t, cost) = time(&mut || Ok(find_optimal_gathering_point_l1(&s)?.cost))?;
            row(ctx, "squares", n, None, t, cost);
        }
        if matches!(suite, Suite::Kclique | Suite::Smoke) {
            let c = generate_intervals(&GenOptions::new(n, seed).span(span))?;
            let k = n / 10;
            let (t, cost) = time(&mut || Ok(solve_kclique(&c, k)?.cost))?;
            row(ctx, "kclique", n, Some(k), t, cost);
        }
        if matches!(suite, Suite::Lp | Suite::Smoke) {
            let n = n.min(40);
            let c = generate_intervals(&GenOptions::new(n, seed).span(n as f64 / 4.0))?;
            let spec = PropertySpec::new(Property::Edgeless);
            let (t, cost) = time(&mut || Ok(solve_property(&c, &spec)?.objective))?;
            row(ctx, "lp-edgeless", n, None, t, cost);
        }
    }
    Ok(Outcome { text: out, mismatch: None })
}

fn dispatch(cli: &Cli, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Gather { file, pivot, seed } => cmd_gather(file, *pivot, *seed, ctx),
        Command::Squares { file } => cmd_squares(file, ctx),
        Command::Kclique { k, file } => cmd_kclique(file, *k, ctx),
        Command::Lp { args, dump_lp } => cmd_lp(args, dump_lp.as_deref(), ctx),
        Command::Oracle { which } => cmd_oracle(which, ctx),
        Command::Gen { n, seed, span, grid, kind, max_weight, max_length } => {
            cmd_gen(*n, *seed, *span, *grid, *kind, *max_weight, *max_length)
        }
        Command::Bench { suite, runs, seed } => cmd_bench(*suite, *runs, *seed, ctx),
    }
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code. Documents go to `out` (or `--output`), diagnostics to
/// `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx { verify: cli.verify, verbose: cli.verbose, log: err };
    let outcome = match dispatch(&cli, &mut ctx) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(ctx.log, "error: {e}");
            return e.exit_code();
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.text)
            .map_err(|source| CliError::Write { path: path.display().to_string(), source }),
        None => out.write_all(outcome.text.as_bytes()).map_err(|source| CliError::Write { path: "stdout".into(), source }),
    };
    if let Err(e) = written {
        let _ = writeln!(ctx.log, "error: {e}");
        return e.exit_code();
    }
    match outcome.mismatch {
        Some(why) => {
            let _ = writeln!(ctx.log, "verification failed: {why}");
            4
        }
        None => 0,
    }
}
