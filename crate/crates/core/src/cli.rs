//! The `brt` command line. [`run`] parses arguments, dispatches, validates and
//! writes the report; the binary only forwards `std::env::args` to it.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::adversary::{self, ApproximationSchedule};
use crate::bench::{self, BenchInstance, Strategy};
use crate::coloring::{Color, PairColoring};
use crate::error::{Error, Result};
use crate::extractor;
use crate::felsner::{self, ChainLibrary};
use crate::format;
use crate::generate;
use crate::mirsky;
use crate::oracle::{self, OracleConfig};
use crate::partition::{validate_partition, ColorPartition, PartitionMode, Subject};
use crate::pipelines;
use crate::poset::{poset_from_coloring, PosetView};
use crate::report::{InputDigest, RunReport};
use crate::stability::stability_profile;

#[derive(Debug, Parser)]
#[command(name = "brt", version, about = "Bounded Ramsey toolkit: partitions, extraction, adversaries, oracles")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write the JSON report here (for `gen`: the generated instance).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for generators (ChaCha8).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Record wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Largest universe the clique-based oracles accept.
    #[arg(long, global = true)]
    oracle_limit: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate an instance.
    Gen(GenArgs),
    /// On-line chain partition of a coloring transitive for 0.
    Felsner {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Write the step trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Antichain partition of a poset (`.pos`) or of the color-`c` order of a coloring.
    Mirsky {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MirskyMode::Weak)]
        mode: MirskyMode,
        #[arg(long, default_value_t = 1)]
        color: Color,
    },
    /// Extract a 0-homogeneous set given no 1-homogeneous set of size `bound`.
    Extract {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        bound: usize,
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    #[command(subcommand)]
    Adversary(AdversaryCmd),
    #[command(subcommand)]
    Pipeline(PipelineCmd),
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Validate a partition, a set or a hypothesis against an instance.
    Check(CheckArgs),
    /// Compare on-line chain partitions with the width.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MirskyMode {
    Weak,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Random,
    Pigeonhole,
    Blocks,
    PosetRandom,
    UpGrowing,
    HeightBounded,
    Streams,
    Schedule,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 16)]
    n: usize,
    /// Edge, relation or membership probability.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Classes (pigeonhole), height bound (height-bounded) or components (schedule).
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Block width (blocks) or width bound (up-growing).
    #[arg(long, default_value_t = 2)]
    w: usize,
    #[arg(long)]
    balanced: bool,
    /// Number of streams.
    #[arg(long, default_value_t = 2)]
    streams: usize,
    #[arg(long, default_value_t = 64)]
    horizon: usize,
    /// Largest schedule value.
    #[arg(long, default_value_t = 4)]
    max_value: usize,
}

#[derive(Debug, Subcommand)]
enum AdversaryCmd {
    /// Single-block construction f_n^b.
    Fnb {
        #[arg(long)]
        streams: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        b: usize,
        /// Defaults to the stream horizon.
        #[arg(long)]
        horizon: Option<usize>,
    },
    /// Composite coloring driven by a schedule.
    Composite {
        #[arg(long)]
        streams: PathBuf,
        #[arg(long)]
        schedule: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum PipelineCmd {
    /// Greedy subsequence, Felsner, largest class.
    Em {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Felsner (color 0) or weak Mirsky (color 1) on a coloring transitive for that color.
    Hem {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        color: Color,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCmd {
    Homog {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        color: Color,
    },
    Width {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        color: Color,
    },
    Height {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        color: Color,
    },
    Cover {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        color: Color,
    },
    Ramsey {
        #[arg(long, default_value_t = 2)]
        colors: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    Transitive {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long)]
    input: PathBuf,
    /// Partition JSON to validate.
    #[arg(long)]
    partition: Option<PathBuf>,
    #[arg(long, default_value = "zero-homog")]
    mode: PartitionMode,
    /// Comma-separated set to test for homogeneity.
    #[arg(long, value_delimiter = ',')]
    set: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    color: Color,
    /// Check that no 1-homogeneous set of this size exists.
    #[arg(long = "no-1-homog")]
    no_one_homog: Option<usize>,
    /// Check transitivity for this color.
    #[arg(long)]
    transitive: Option<Color>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "felsner,first-fit")]
    strategy: Vec<Strategy>,
    /// Promised bound: instances have no 1-homogeneous set of size k.
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Generated up-growing instances of width k-1.
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 100)]
    n: usize,
    #[arg(long, default_value_t = 0.05)]
    p: f64,
    /// Extra instance files (colorings).
    #[arg(long)]
    input: Vec<PathBuf>,
    /// Also write the table as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

struct Ctx {
    cfg: OracleConfig,
    seed: u64,
    timing: bool,
}

struct Outcome {
    report: RunReport,
    /// Text written instead of the report when `gen` has no `--out`.
    artifact: Option<String>,
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<i32> {
    let mut cfg = OracleConfig::default();
    if let Some(limit) = cli.oracle_limit {
        cfg.exhaustive_limit = limit;
    }
    let ctx = Ctx { cfg, seed: cli.seed.unwrap_or(0), timing: cli.timing };
    let start = Instant::now();
    let mut outcome = dispatch(&cli.command, &ctx, cli.out.as_deref())?;
    if cli.timing {
        outcome.report.timing.recorded = true;
        outcome.report.timing.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    let report = &outcome.report;
    let is_gen = matches!(cli.command, Command::Gen(_));
    if let (Some(path), false) = (&cli.out, is_gen) {
        write_file(path, &report.to_json())?;
    }
    let io = |e: std::io::Error| Error::input(format!("writing output: {e}"));
    match (&outcome.artifact, cli.format) {
        (Some(text), OutputFormat::Text) => write!(stdout, "{text}").map_err(io)?,
        (_, OutputFormat::Json) => writeln!(stdout, "{}", report.to_json()).map_err(io)?,
        (None, OutputFormat::Text) => write!(stdout, "{}", report.to_text()).map_err(io)?,
    }
    Ok(if report.validation.passed { 0 } else { 1 })
}

fn dispatch(command: &Command, ctx: &Ctx, out: Option<&Path>) -> Result<Outcome> {
    let report = match command {
        Command::Gen(args) => return gen(args, ctx, out),
        Command::Felsner { input, k, trace } => felsner_cmd(input, *k, trace.as_deref(), ctx)?,
        Command::Mirsky { input, mode, color } => mirsky_cmd(input, *mode, *color, ctx)?,
        Command::Extract { input, bound, stats } => extract_cmd(input, *bound, stats.as_deref())?,
        Command::Adversary(AdversaryCmd::Fnb { streams, n, b, horizon }) => fnb_cmd(streams, *n, *b, *horizon, ctx)?,
        Command::Adversary(AdversaryCmd::Composite { streams, schedule }) => composite_cmd(streams, schedule, ctx)?,
        Command::Pipeline(PipelineCmd::Em { input, k }) => pipeline_cmd("pipeline em", input, *k, None)?,
        Command::Pipeline(PipelineCmd::Hem { input, k, color }) => pipeline_cmd("pipeline hem", input, *k, Some(*color))?,
        Command::Oracle(cmd) => oracle_cmd(cmd, ctx)?,
        Command::Check(args) => check_cmd(args, ctx)?,
        Command::Bench(args) => bench_cmd(args, ctx)?,
    };
    Ok(Outcome { report, artifact: None })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::input(format!("cannot write {}: {e}", path.display())))
}

fn file_name(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned())
}

fn read_input(path: &Path, report: &mut RunReport) -> Result<String> {
    let bytes = std::fs::read(path).map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    report.meta.inputs.push(InputDigest::of(&file_name(path), &bytes));
    String::from_utf8(bytes).map_err(|_| Error::input(format!("{} is not UTF-8", path.display())))
}

fn is_poset_file(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "pos")
}

fn read_coloring(path: &Path, report: &mut RunReport) -> Result<PairColoring> {
    format::parse_coloring(&read_input(path, report)?)
}

/// A poset file as is, or the color-`c` order of a coloring.
fn read_order(path: &Path, color: Color, report: &mut RunReport) -> Result<PosetView> {
    let text = read_input(path, report)?;
    if is_poset_file(path) {
        format::parse_poset(&text)
    } else {
        poset_from_coloring(&format::parse_coloring(&text)?, color)
    }
}

fn homog_detail(f: &PairColoring, set: &[usize], c: Color) -> (bool, String) {
    match f.homogeneity_violation(set, c) {
        None => (true, format!("{} elements, all pairs colored {c}", set.len())),
        Some((x, y)) => (false, format!("pair ({x}, {y}) has color {}", f.color(x, y))),
    }
}

/// Turn a failed hypothesis or transitivity precondition into a failing
/// report with a checked witness; other errors pass through.
fn record_failure(report: &mut RunReport, f: &PairColoring, err: Error) -> Result<()> {
    match err {
        Error::HypothesisViolated { witness } => {
            let (ok, detail) = homog_detail(f, &witness, 1);
            report.result = json!({ "error": "hypothesis_violated", "witness": witness });
            report.validation.check("witness is 1-homogeneous", ok, detail);
            report.validation.check("hypothesis", false, format!("1-homogeneous set of size {}", witness.len()));
            Ok(())
        }
        Error::NotTransitive { color, x, y, z } => {
            let ok = f.color(x, y) == color && f.color(y, z) == color && f.color(x, z) != color;
            report.result = json!({ "error": "not_transitive", "color": color, "witness": [x, y, z] });
            report.validation.check("witness triple breaks transitivity", ok, format!("({x}, {y}, {z})"));
            report.validation.check("transitivity", false, format!("not transitive for color {color}"));
            Ok(())
        }
        other => Err(other),
    }
}

fn gen(args: &GenArgs, ctx: &Ctx, out: Option<&Path>) -> Result<Outcome> {
    let mut report = RunReport::new("gen");
    report.meta.seed = Some(ctx.seed);
    let kind = args.kind.to_possible_value().expect("named").get_name().to_string();
    let seed = ctx.seed;
    let (text, params) = match args.kind {
        GenKind::Random => {
            let f = generate::random_coloring(args.n, args.p, seed)?;
            (format::write_coloring(&f), json!({ "n": args.n, "p": args.p }))
        }
        GenKind::Pigeonhole => {
            let f = generate::pigeonhole(args.n, args.k, args.balanced, seed)?;
            if args.n <= ctx.cfg.exhaustive_limit {
                let m = oracle::max_homog(&f, 1, &ctx.cfg)?;
                report.validation.check("max 1-homogeneous size <= k", m.size <= args.k, format!("{}", m.size));
            }
            (format::write_coloring(&f), json!({ "n": args.n, "k": args.k, "balanced": args.balanced }))
        }
        GenKind::Blocks => {
            let f = generate::blocks(args.n, args.w)?;
            (format::write_coloring(&f), json!({ "n": args.n, "w": args.w }))
        }
        GenKind::PosetRandom => {
            let p = generate::random_poset(args.n, args.p, seed)?;
            (format::write_poset(&p), json!({ "n": args.n, "p": args.p }))
        }
        GenKind::UpGrowing => {
            let f = generate::up_growing(args.n, args.w, args.p, seed)?;
            report.validation.check("transitive for 0", f.is_transitive(0), "");
            (format::write_coloring(&f), json!({ "n": args.n, "w": args.w, "p": args.p }))
        }
        GenKind::HeightBounded => {
            let f = generate::height_bounded(args.n, args.k, args.p, seed)?;
            report.validation.check("transitive for 1", f.is_transitive(1), "");
            (format::write_coloring(&f), json!({ "n": args.n, "height": args.k, "p": args.p }))
        }
        GenKind::Streams => {
            let w = generate::stream_family(args.streams, args.horizon, args.p, seed)?;
            (format::write_streams(&w), json!({ "streams": args.streams, "horizon": args.horizon, "density": args.p }))
        }
        GenKind::Schedule => {
            let g = generate::schedule(args.k, args.horizon, args.max_value, args.p, seed)?;
            (
                format::write_schedule(&g),
                json!({ "k": args.k, "horizon": args.horizon, "max_value": args.max_value, "rate": args.p }),
            )
        }
    };
    let reparsed = match args.kind {
        GenKind::PosetRandom => format::parse_poset(&text).map(|p| format::write_poset(&p)),
        GenKind::Streams => format::parse_streams(&text).map(|w| format::write_streams(&w)),
        GenKind::Schedule => format::parse_schedule(&text).map(|g| format::write_schedule(&g)),
        _ => format::parse_coloring(&text).map(|f| format::write_coloring(&f)),
    };
    report.validation.check("instance re-reads identically", reparsed.as_deref() == Ok(text.as_str()), "");
    report.params = json!({ "kind": kind, "args": params });
    report.result = json!({
        "lines": text.lines().count(),
        "sha256": InputDigest::of("instance", text.as_bytes()).sha256,
    });
    let artifact = match out {
        Some(path) => {
            write_file(path, &text)?;
            None
        }
        None => Some(text),
    };
    Ok(Outcome { report, artifact })
}

fn felsner_cmd(input: &Path, k: usize, trace: Option<&Path>, ctx: &Ctx) -> Result<RunReport> {
    let mut report = RunReport::new("felsner");
    let f = read_coloring(input, &mut report)?;
    report.params = json!({ "input": file_name(input), "k": k });
    let run = match felsner::run(&f, k) {
        Ok(run) => run,
        Err(e) => {
            record_failure(&mut report, &f, e)?;
            return Ok(report);
        }
    };
    if let Some(path) = trace {
        write_file(path, &serde_json::to_string_pretty(&run.trace).expect("trace serializes"))?;
    }
    let g = &run.partition;
    let v = validate_partition(Subject::Coloring(&f), g, PartitionMode::ZeroHomog)?;
    report.validation.check("classes are 0-homogeneous", v.is_valid(), format!("{:?}", v.violations));
    report.validation.check(
        "classes used <= k(k+1)/2",
        g.used_classes() <= felsner::color_bound(k),
        format!("{} <= {}", g.used_classes(), felsner::color_bound(k)),
    );
    let replayed = ChainLibrary::replay(k, &run.trace).is_ok_and(|lib| lib == run.library);
    report.validation.check("trace replays to the final library", replayed, "");
    if f.universe_size() <= ctx.cfg.exhaustive_limit {
        let m = oracle::max_homog(&f, 1, &ctx.cfg)?;
        report.validation.check("oracle: max 1-homogeneous < k", m.size < k, format!("{}", m.size));
    }
    report.result = json!({
        "partition": g,
        "classes_used": g.used_classes(),
        "levels": run.library.snapshot(),
    });
    Ok(report)
}

fn mirsky_cmd(input: &Path, mode: MirskyMode, color: Color, ctx: &Ctx) -> Result<RunReport> {
    let mut report = RunReport::new("mirsky");
    report.params = json!({
        "input": file_name(input),
        "mode": if mode == MirskyMode::Weak { "weak" } else { "exact" },
        "color": color,
    });
    let p = read_order(input, color, &mut report)?;
    let g = match mode {
        MirskyMode::Weak => mirsky::run_weak(&p),
        MirskyMode::Exact => mirsky::run_exact(&p)?,
    };
    let v = validate_partition(Subject::Poset(&p), &g, PartitionMode::Antichain)?;
    report.validation.check("classes are antichains", v.is_valid(), format!("{:?}", v.violations));
    let height = if p.universe_size() <= ctx.cfg.exhaustive_limit {
        let h = oracle::height(&p, &ctx.cfg)?;
        report.validation.check("oracle height witness is a chain", is_chain(&p, &h.witness), "");
        Some(h.size)
    } else {
        None
    };
    if let Some(h) = height {
        let (name, ok) = match mode {
            MirskyMode::Weak => ("classes used <= height^2", g.used_classes() <= h * h),
            MirskyMode::Exact => ("classes used == height", g.used_classes() == h),
        };
        report.validation.check(name, ok, format!("used {}, height {h}", g.used_classes()));
    }
    report.result = json!({ "partition": g, "classes_used": g.used_classes(), "height": height });
    Ok(report)
}

fn is_chain(p: &PosetView, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| p.comparable(a, b)))
}

fn extract_cmd(input: &Path, bound: usize, stats: Option<&Path>) -> Result<RunReport> {
    let mut report = RunReport::new("extract");
    let f = read_coloring(input, &mut report)?;
    report.params = json!({ "input": file_name(input), "bound": bound });
    let ex = match extractor::solve_brt(&f, bound) {
        Ok(ex) => ex,
        Err(e) => {
            record_failure(&mut report, &f, e)?;
            return Ok(report);
        }
    };
    if let Some(path) = stats {
        write_file(path, &serde_json::to_string_pretty(&ex.stats).expect("stats serialize"))?;
    }
    let (ok, detail) = homog_detail(&f, &ex.set, 0);
    report.validation.check("set is 0-homogeneous", ok, detail);
    report.validation.check(
        "size >= guaranteed",
        ex.set.len() >= ex.stats.guaranteed_size,
        format!("{} >= {}", ex.set.len(), ex.stats.guaranteed_size),
    );
    report.result = json!({ "set": ex.set, "size": ex.set.len(), "stats": ex.stats });
    Ok(report)
}

/// Sparse 1-graphs from the adversary are cheap for the clique oracle at any
/// horizon the tool handles, so the limit is raised to the horizon.
fn adversary_cfg(ctx: &Ctx, horizon: usize) -> OracleConfig {
    OracleConfig { exhaustive_limit: ctx.cfg.exhaustive_limit.max(horizon), ..ctx.cfg }
}

fn verdicts_json(report: &adversary::DiagonalizationReport) -> Value {
    serde_json::to_value(&report.streams).expect("verdicts serialize")
}

fn fnb_cmd(streams: &Path, n: usize, b: usize, horizon: Option<usize>, ctx: &Ctx) -> Result<RunReport> {
    let mut report = RunReport::new("adversary fnb");
    let w = format::parse_streams(&read_input(streams, &mut report)?)?;
    let horizon = horizon.unwrap_or(w.horizon());
    report.params = json!({ "streams": file_name(streams), "n": n, "b": b, "horizon": horizon });
    let run = adversary::build_fnb(&w, n, b, horizon)?;
    let f = run.coloring();
    let cfg = adversary_cfg(ctx, horizon);
    let m = oracle::max_homog(&f, 1, &cfg)?;
    report.validation.check("oracle: no 1-homogeneous set of size 3", m.size <= 2, format!("max {}", m.size));
    let max_trash = run.records.iter().map(|r| r.trash_size).max().unwrap_or(0);
    report.validation.check("trash <= n^2", max_trash <= n * n, format!("{max_trash}"));
    let low = f.one_edges().into_iter().find(|&(x, _)| x < b);
    report.validation.check("f(x, y) = 0 for x < b", low.is_none(), format!("{low:?}"));
    let profile = stability_profile(&f);
    report.validation.check("flips <= 2n", profile.max_flips() <= 2 * n, format!("{}", profile.max_flips()));
    let diag = adversary::check_fnb(&run, &w);
    report.validation.check("diagonalization witnesses verify", diag.failures().is_empty(), format!("{} caught", diag.caught()));
    report.result = json!({
        "one_edges": f.one_edges(),
        "flush_stages": run.flush_stages(),
        "activation_stage": run.activation_stage,
        "final_state": run.final_state,
        "limit_zero_set": profile.limit_zero_set,
        "streams": verdicts_json(&diag),
    });
    Ok(report)
}

/// Size of 1-homogeneous set a composite of `k` components cannot contain,
/// from `R(3,3) = 6`; larger `k` is out of reach of the certifier.
fn composite_homog_bound(k: usize) -> Option<usize> {
    match k {
        0 => Some(2),
        1 => Some(3),
        2 => Some(6),
        _ => None,
    }
}

fn composite_cmd(streams: &Path, schedule: &Path, ctx: &Ctx) -> Result<RunReport> {
    let mut report = RunReport::new("adversary composite");
    let w = format::parse_streams(&read_input(streams, &mut report)?)?;
    let g: ApproximationSchedule = format::parse_schedule(&read_input(schedule, &mut report)?)?;
    report.params = json!({ "streams": file_name(streams), "schedule": file_name(schedule) });
    let c = adversary::build_composite(&w, &g)?;
    let cfg = adversary_cfg(ctx, g.horizon());
    for (i, fi) in c.components.iter().enumerate() {
        let m = oracle::max_homog(fi, 1, &cfg)?;
        report.validation.check(&format!("component {i}: no 1-homogeneous set of size 3"), m.size <= 2, format!("max {}", m.size));
    }
    let m = oracle::max_homog(&c.coloring, 1, &cfg)?;
    if let Some(l) = composite_homog_bound(g.k()) {
        report.validation.check(&format!("no 1-homogeneous set of size {l}"), m.size < l, format!("max {}", m.size));
    }
    let diag = adversary::check_composite(&c, &g, &w);
    report.validation.check("diagonalization witnesses verify", diag.failures().is_empty(), format!("{} caught", diag.caught()));
    let profile = stability_profile(&c.coloring);
    report.result = json!({
        "one_edges": c.coloring.one_edges(),
        "max_1_homogeneous": m,
        "machines": c.machines.keys().collect::<Vec<_>>(),
        "max_flips": profile.max_flips(),
        "limit_zero_set": profile.limit_zero_set,
        "streams": verdicts_json(&diag),
    });
    Ok(report)
}

fn pipeline_cmd(name: &str, input: &Path, k: usize, color: Option<Color>) -> Result<RunReport> {
    let mut report = RunReport::new(name);
    let f = read_coloring(input, &mut report)?;
    report.params = match color {
        Some(c) => json!({ "input": file_name(input), "k": k, "color": c }),
        None => json!({ "input": file_name(input), "k": k }),
    };
    let out = match color {
        None => pipelines::pipeline_em(&f, k),
        Some(c) => pipelines::pipeline_hem(&f, k, c),
    };
    let out = match out {
        Ok(out) => out,
        Err(e) => {
            record_failure(&mut report, &f, e)?;
            return Ok(report);
        }
    };
    let (ok, detail) = homog_detail(&f, &out.set, 0);
    report.validation.check("set is 0-homogeneous", ok, detail);
    report.validation.check(
        "size >= guaranteed",
        out.set.len() >= out.guaranteed_size,
        format!("{} >= {}", out.set.len(), out.guaranteed_size),
    );
    report.result = serde_json::to_value(&out).expect("output serializes");
    Ok(report)
}

fn oracle_cmd(cmd: &OracleCmd, ctx: &Ctx) -> Result<RunReport> {
    let cfg = &ctx.cfg;
    let mut report;
    match cmd {
        OracleCmd::Homog { input, color } => {
            report = RunReport::new("oracle homog");
            report.params = json!({ "input": file_name(input), "color": color });
            let f = read_coloring(input, &mut report)?;
            let m = oracle::max_homog(&f, *color, cfg)?;
            let (ok, detail) = homog_detail(&f, &m.witness, *color);
            report.validation.check("witness is homogeneous", ok, detail);
            report.result = json!(m);
        }
        OracleCmd::Width { input, color } | OracleCmd::Height { input, color } | OracleCmd::Cover { input, color } => {
            let which = match cmd {
                OracleCmd::Width { .. } => "width",
                OracleCmd::Height { .. } => "height",
                _ => "cover",
            };
            report = RunReport::new(&format!("oracle {which}"));
            report.params = json!({ "input": file_name(input), "color": color });
            let p = read_order(input, *color, &mut report)?;
            match which {
                "width" => {
                    let m = oracle::width(&p, cfg)?;
                    let ok = m.witness.iter().enumerate().all(|(i, &a)| m.witness[i + 1..].iter().all(|&b| !p.comparable(a, b)));
                    report.validation.check("witness is an antichain", ok, "");
                    report.result = json!(m);
                }
                "height" => {
                    let m = oracle::height(&p, cfg)?;
                    report.validation.check("witness is a chain", is_chain(&p, &m.witness), "");
                    report.result = json!(m);
                }
                _ => {
                    let g: ColorPartition = oracle::min_chain_cover(&p, cfg)?;
                    let v = validate_partition(Subject::Poset(&p), &g, PartitionMode::Chain)?;
                    report.validation.check("classes are chains", v.is_valid(), format!("{:?}", v.violations));
                    report.result = json!({ "partition": g, "chains": g.used_classes() });
                }
            }
        }
        OracleCmd::Ramsey { colors, m, n } => {
            report = RunReport::new("oracle ramsey");
            report.params = json!({ "colors": colors, "m": m, "n": n });
            let cert = oracle::ramsey_certify(*colors, *m, *n, cfg)?;
            report.validation.check(
                "counterexample present iff the statement fails",
                cert.holds == cert.counterexample.is_none(),
                "",
            );
            report.result = json!({
                "holds": cert.holds,
                "colorings_checked": cert.colorings_checked.to_string(),
                "counterexample": cert.counterexample,
            });
        }
        OracleCmd::Transitive { input } => {
            report = RunReport::new("oracle transitive");
            report.params = json!({ "input": file_name(input) });
            let f = read_coloring(input, &mut report)?;
            let m = oracle::max_transitive_subseq(&f, cfg)?;
            let h = f.reindex(&m.witness)?;
            report.validation.check("witness is transitive for both colors", h.is_transitive(0) && h.is_transitive(1), "");
            report.result = json!(m);
        }
    }
    Ok(report)
}

fn check_cmd(args: &CheckArgs, ctx: &Ctx) -> Result<RunReport> {
    let mut report = RunReport::new("check");
    let text = read_input(&args.input, &mut report)?;
    let (coloring, poset) = if is_poset_file(&args.input) {
        (None, Some(format::parse_poset(&text)?))
    } else {
        (Some(format::parse_coloring(&text)?), None)
    };
    let subject = match (&coloring, &poset) {
        (Some(f), _) => Subject::Coloring(f),
        (_, Some(p)) => Subject::Poset(p),
        _ => unreachable!(),
    };
    report.params = json!({
        "input": file_name(&args.input),
        "partition": args.partition.as_deref().map(file_name),
        "mode": args.mode,
        "set": args.set,
        "color": args.color,
        "no_1_homog": args.no_one_homog,
        "transitive": args.transitive,
    });
    let mut result = serde_json::Map::new();
    let mut any = false;
    if let Some(path) = &args.partition {
        any = true;
        let g = format::parse_partition(&read_input(path, &mut report)?)?;
        let v = validate_partition(subject, &g, args.mode)?;
        report.validation.check("partition", v.is_valid(), format!("{} classes used", g.used_classes()));
        result.insert("violations".into(), json!(v.violations));
    }
    let need_coloring = || coloring.as_ref().ok_or_else(|| Error::input("this check needs a coloring input"));
    if let Some(set) = &args.set {
        any = true;
        let f = need_coloring()?;
        f.is_homogeneous(set, args.color)?;
        let (ok, detail) = homog_detail(f, set, args.color);
        report.validation.check(&format!("set is {}-homogeneous", args.color), ok, detail);
    }
    if let Some(l) = args.no_one_homog {
        any = true;
        if l <= 1 {
            return Err(Error::input("--no-1-homog needs a size of at least 2"));
        }
        let f = need_coloring()?;
        let m = oracle::max_homog(f, 1, &ctx.cfg)?;
        report.validation.check(&format!("no 1-homogeneous set of size {l}"), m.size < l, format!("max {}", m.size));
        result.insert("max_1_homogeneous".into(), json!(m));
    }
    if let Some(c) = args.transitive {
        any = true;
        let f = need_coloring()?;
        let w = f.transitivity_witness(c);
        report.validation.check(&format!("transitive for {c}"), w.is_none(), format!("{w:?}"));
    }
    if !any {
        return Err(Error::input("nothing to check: give --partition, --set, --no-1-homog or --transitive"));
    }
    report.result = Value::Object(result);
    Ok(report)
}

fn bench_cmd(args: &BenchArgs, ctx: &Ctx) -> Result<RunReport> {
    let mut report = RunReport::new("bench");
    report.meta.seed = Some(ctx.seed);
    if args.k < 2 {
        return Err(Error::input("bench needs k >= 2"));
    }
    let mut instances = Vec::new();
    for i in 0..args.count {
        let seed = ctx.seed.wrapping_add(i as u64);
        instances.push(BenchInstance {
            name: format!("up-growing-{i}"),
            coloring: generate::up_growing(args.n, args.k - 1, args.p, seed)?,
            k: args.k,
        });
    }
    for path in &args.input {
        let f = read_coloring(path, &mut report)?;
        instances.push(BenchInstance { name: file_name(path), coloring: f, k: args.k });
    }
    report.params = json!({
        "strategy": args.strategy,
        "k": args.k,
        "count": args.count,
        "n": args.n,
        "p": args.p,
        "input": args.input.iter().map(|p| file_name(p)).collect::<Vec<_>>(),
    });
    let table = bench::bench(&args.strategy, &instances, &ctx.cfg, ctx.timing);
    let bound = felsner::color_bound(args.k);
    let worst = table.rows.iter().filter(|r| r.strategy == Strategy::Felsner).filter_map(|r| r.colors).max().unwrap_or(0);
    report.validation.check("Felsner colors <= k(k+1)/2", worst <= bound, format!("{worst} <= {bound}"));
    if let Some(path) = &args.csv {
        write_file(path, &table.to_csv())?;
    }
    report.result = json!(table);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("brt").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["nonsense"]).0, 2);
        assert_eq!(run_str(&["felsner"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn gen_to_stdout_is_the_instance() {
        let (code, out, _) = run_str(&["gen", "blocks", "--n", "6", "--w", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "6\n0 1 1\n2 3 1\n4 5 1\n");
    }

    #[test]
    fn ramsey_report() {
        let (code, out, _) = run_str(&["oracle", "ramsey", "--m", "3", "--n", "6", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["holds"], json!(true));
        let (code, out, _) = run_str(&["oracle", "ramsey", "--m", "3", "--n", "5", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["holds"], json!(false));
    }

    #[test]
    fn missing_file_is_input_error() {
        let (code, _, err) = run_str(&["extract", "--input", "/nonexistent/x.col", "--bound", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn resource_limit_exit_3() {
        let (code, _, _) = run_str(&["oracle", "ramsey", "--colors", "2", "--m", "4", "--n", "18"]);
        assert_eq!(code, 3);
    }
}
