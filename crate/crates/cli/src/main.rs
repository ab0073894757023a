//! Command-line front end for the hamstar toolkit.
//!
//! Every subcommand reads graphs as graph6 — inline, from a file, or from
//! standard input — and writes structured results to standard output, one
//! JSON document per input graph (or a single document for a sweep).
//! Exit codes are the machine contract: 0 means every examined graph
//! behaved as the statements promise, 1 means a counterexample was found,
//! and 2 means the invocation or its input could not be processed.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use hamstar_core::{
    check_main_theorem, equality_family, extract_star, graph6_lines, parse_graph6,
    sharpness_family, sweep, sweep_connected_up_to, to_graph6, Error, Extraction, Graph,
    SweepMode, SweepOptions, SweepReport, Verdict,
};

/// Schema tag stamped on every JSON document this binary emits.
const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "hamstar",
    version,
    about = "Certify the degree-sum dichotomy: hamiltonian path or induced star"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check graphs against the path-or-star statement
    Check(CheckArgs),
    /// Replay the constructive extraction, emitting the full witness trace
    Extract(CheckArgs),
    /// Apply one check to a whole family of graphs and summarize verdicts
    Sweep(SweepArgs),
    /// Emit a boundary-family graph H ∨ K̄_{t−1} as graph6
    GenFamily(GenFamilyArgs),
    /// Translate between graph6 lines and explicit edge lists
    Codec(CodecArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["graph", "input"])))]
struct CheckArgs {
    /// Star size parameter; the degree-sum threshold is ((t-3)/(t-2))·n
    #[arg(long, value_name = "T")]
    t: usize,
    /// One inline graph6 line
    #[arg(long, value_name = "GRAPH6")]
    graph: Option<String>,
    /// File of graph6 lines, `-` for standard input
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Require sigma_2 strictly above the threshold (the default)
    #[arg(long, overrides_with = "no_strict")]
    strict: bool,
    /// Relax the threshold to non-strict
    #[arg(long)]
    no_strict: bool,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

impl CheckArgs {
    fn strict(&self) -> bool {
        !self.no_strict
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["n_max", "input"])))]
struct SweepArgs {
    /// Star size parameter; ignored by the lemma and classical modes
    #[arg(long, value_name = "T")]
    t: usize,
    /// Sweep every connected graph on 1..=N vertices from the enumerator
    #[arg(long, value_name = "N")]
    n_max: Option<usize>,
    /// File of graph6 lines, `-` for standard input
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Which statement to check on every graph
    #[arg(long, value_enum, default_value_t = ModeArg::Main)]
    mode: ModeArg,
    /// Require sigma_2 strictly above the threshold (the default)
    #[arg(long, overrides_with = "no_strict")]
    strict: bool,
    /// Relax the threshold to non-strict
    #[arg(long)]
    no_strict: bool,
    /// Worker threads; 0 uses the default pool
    #[arg(long, env = "HAMSTAR_JOBS", default_value_t = 0, value_name = "K")]
    jobs: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct GenFamilyArgs {
    /// Star size parameter; the family lives on n = 2t−4 vertices
    #[arg(long, value_name = "T")]
    t: usize,
    /// graph6 of the hub graph H on t−3 vertices; defaults to the edgeless H
    #[arg(long, value_name = "GRAPH6")]
    h_graph: Option<String>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["encode", "decode"])))]
struct CodecArgs {
    /// Read edge-list JSON lines, write graph6 lines
    #[arg(long)]
    encode: bool,
    /// Read graph6 lines, write edge-list JSON lines
    #[arg(long)]
    decode: bool,
    /// Input path, `-` for standard input
    #[arg(long, value_name = "PATH", default_value = "-")]
    input: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Main,
    Equality,
    Lemma1,
    Lemma2,
    Classical,
}

impl From<ModeArg> for SweepMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Main => SweepMode::Main,
            ModeArg::Equality => SweepMode::Equality,
            ModeArg::Lemma1 => SweepMode::Lemma1,
            ModeArg::Lemma2 => SweepMode::Lemma2,
            ModeArg::Classical => SweepMode::Classical,
        }
    }
}

// ============================================================================
// Output records
// ============================================================================

/// One line of `check` output: either a verdict or a regime note, never
/// both.
#[derive(serde::Serialize)]
struct CheckRecord<'a> {
    schema: u32,
    t: usize,
    strict: bool,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<&'a Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    regime: Option<&'a str>,
}

/// One line of `extract` output, mirroring `CheckRecord` with the full
/// trace-bearing payload.
#[derive(serde::Serialize)]
struct ExtractRecord<'a> {
    schema: u32,
    t: usize,
    strict: bool,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    extraction: Option<&'a Extraction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    regime: Option<&'a str>,
}

#[derive(serde::Serialize)]
struct SweepRecord<'a> {
    schema: u32,
    strict: bool,
    #[serde(flatten)]
    report: &'a SweepReport,
}

/// The codec's explicit graph form: vertex count plus sorted edge list.
#[derive(serde::Serialize, serde::Deserialize)]
struct GraphRecord {
    #[serde(default = "default_schema")]
    schema: u32,
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn default_schema() -> u32 {
    SCHEMA
}

// ============================================================================
// Dispatch
// ============================================================================

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether the run was counterexample-free; error strings become
/// exit code 2.
fn run(cli: Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Check(args) => cmd_check(args, false),
        Command::Extract(args) => cmd_check(args, true),
        Command::Sweep(args) => cmd_sweep(args),
        Command::GenFamily(args) => cmd_gen_family(args),
        Command::Codec(args) => cmd_codec(args),
    }
}

fn open_input(path: &Path) -> Result<Box<dyn BufRead>, String> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufReader::new(std::io::stdin())))
    } else {
        let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Ok(Box::new(BufReader::new(file)))
    }
}

fn graph_source(
    graph: &Option<String>,
    input: &Option<PathBuf>,
) -> Result<Box<dyn Iterator<Item = hamstar_core::Result<Graph>>>, String> {
    match (graph, input) {
        (Some(line), _) => Ok(Box::new(std::iter::once(parse_graph6(line)))),
        (None, Some(path)) => Ok(Box::new(graph6_lines(open_input(path)?))),
        (None, None) => unreachable!("clap enforces one source"),
    }
}

fn emit(line: &str) -> Result<(), String> {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").map_err(|e| e.to_string())
}

fn cmd_check(args: &CheckArgs, trace: bool) -> Result<bool, String> {
    let (t, strict) = (args.t, args.strict());
    let mut clean = true;
    for item in graph_source(&args.graph, &args.input)? {
        let g = item.map_err(|e| e.to_string())?;
        let graph6 = to_graph6(&g);
        if trace {
            match extract_star(&g, t, strict) {
                Ok(extraction) => {
                    clean &= !matches!(extraction, Extraction::Counterexample { .. });
                    emit(&render_extract(args, graph6, Some(&extraction), None)?)?;
                }
                Err(Error::Regime(msg)) => {
                    emit(&render_extract(args, graph6, None, Some(&msg))?)?;
                }
                Err(e) => return Err(e.to_string()),
            }
        } else {
            match check_main_theorem(&g, t, strict) {
                Ok(verdict) => {
                    clean &= !matches!(verdict, Verdict::Counterexample { .. });
                    emit(&render_check(args, graph6, Some(&verdict), None)?)?;
                }
                Err(Error::Regime(msg)) => {
                    emit(&render_check(args, graph6, None, Some(&msg))?)?;
                }
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(clean)
}

fn render_check(
    args: &CheckArgs,
    graph6: String,
    verdict: Option<&Verdict>,
    regime: Option<&str>,
) -> Result<String, String> {
    match args.format {
        Format::Json => serde_json::to_string(&CheckRecord {
            schema: SCHEMA,
            t: args.t,
            strict: args.strict(),
            graph6,
            verdict,
            regime,
        })
        .map_err(|e| e.to_string()),
        Format::Text => Ok(match (verdict, regime) {
            (Some(v), _) => format!("{graph6}: {}", verdict_text(v)),
            (None, Some(msg)) => format!("{graph6}: out of regime: {msg}"),
            (None, None) => unreachable!("one of verdict or regime is always present"),
        }),
    }
}

fn render_extract(
    args: &CheckArgs,
    graph6: String,
    extraction: Option<&Extraction>,
    regime: Option<&str>,
) -> Result<String, String> {
    match args.format {
        Format::Json => serde_json::to_string(&ExtractRecord {
            schema: SCHEMA,
            t: args.t,
            strict: args.strict(),
            graph6,
            extraction,
            regime,
        })
        .map_err(|e| e.to_string()),
        Format::Text => Ok(match (extraction, regime) {
            (Some(e), _) => format!("{graph6}: {}", extraction_text(e)),
            (None, Some(msg)) => format!("{graph6}: out of regime: {msg}"),
            (None, None) => unreachable!("one of extraction or regime is always present"),
        }),
    }
}

fn join_spaced(vs: &[usize]) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn join_comma(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::HypothesisNotMet => "hypothesis not met".to_string(),
        Verdict::HamPath { path } => {
            format!("hamiltonian path {}", join_spaced(path.vertices()))
        }
        Verdict::Star { witness } => format!(
            "star center={} leaves={}",
            witness.center,
            join_comma(witness.leaves.iter())
        ),
        Verdict::Counterexample { failed_step, .. } => {
            format!("COUNTEREXAMPLE: {failed_step}")
        }
    }
}

fn extraction_text(e: &Extraction) -> String {
    match e {
        Extraction::HypothesisNotMet => "hypothesis not met".to_string(),
        Extraction::HamPath { path } => {
            format!("hamiltonian path {}", join_spaced(path.vertices()))
        }
        Extraction::Star { trace } => format!(
            "star center={} leaves={} via cycle={} u={} v={} I={{{}}} l={} j=[{}]",
            trace.witness.center,
            join_comma(trace.witness.leaves.iter()),
            join_spaced(trace.cycle.vertices()),
            trace.u,
            trace.v,
            join_comma(trace.i_set.iter()),
            trace.center_l,
            join_comma(trace.j_indices.iter().copied()),
        ),
        Extraction::Counterexample { failed_step, .. } => {
            format!("COUNTEREXAMPLE: {failed_step}")
        }
    }
}

fn cmd_sweep(args: &SweepArgs) -> Result<bool, String> {
    let opts = SweepOptions {
        t: args.t,
        mode: args.mode.into(),
        strict: !args.no_strict,
        jobs: args.jobs,
    };
    let report = match args.n_max {
        Some(n_max) => sweep_connected_up_to(n_max, &opts),
        None => {
            let path = args.input.as_ref().expect("clap enforces one source");
            sweep(graph6_lines(open_input(path)?), &opts)
        }
    }
    .map_err(|e| e.to_string())?;
    match args.format {
        Format::Json => {
            let record = SweepRecord {
                schema: SCHEMA,
                strict: opts.strict,
                report: &report,
            };
            emit(&serde_json::to_string(&record).map_err(|e| e.to_string())?)?;
        }
        Format::Text => {
            let h = &report.histogram;
            emit(&format!(
                "mode={} t={} strict={} n=[{},{}] examined={}",
                report.mode, report.t, opts.strict, report.n_range.0, report.n_range.1,
                report.examined
            ))?;
            emit(&format!(
                "hypothesis_not_met={} ham_path={} star={} regime_skipped={} passed={}",
                h.hypothesis_not_met, h.ham_path, h.star, h.regime_skipped, h.passed
            ))?;
            emit(&format!("counterexamples={}", report.counterexamples.len()))?;
            for ce in &report.counterexamples {
                emit(&format!("COUNTEREXAMPLE {}: {}", ce.graph6, ce.failed_step))?;
            }
            emit(&format!("seconds={:.3}", report.seconds))?;
        }
    }
    Ok(report.counterexamples.is_empty())
}

fn cmd_gen_family(args: &GenFamilyArgs) -> Result<bool, String> {
    let g = match &args.h_graph {
        Some(h_line) => {
            let h = parse_graph6(h_line).map_err(|e| e.to_string())?;
            equality_family(&h, args.t).map_err(|e| e.to_string())?
        }
        None => sharpness_family(args.t).map_err(|e| e.to_string())?,
    };
    emit(&to_graph6(&g))?;
    Ok(true)
}

fn cmd_codec(args: &CodecArgs) -> Result<bool, String> {
    let reader = open_input(&args.input)?;
    if args.decode {
        for item in graph6_lines(reader) {
            let g = item.map_err(|e| e.to_string())?;
            let record = GraphRecord {
                schema: SCHEMA,
                n: g.n(),
                edges: g.edges(),
            };
            emit(&serde_json::to_string(&record).map_err(|e| e.to_string())?)?;
        }
    } else {
        for (index, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| e.to_string())?;
            if line.trim().is_empty() {
                continue;
            }
            let record: GraphRecord = serde_json::from_str(&line)
                .map_err(|e| format!("line {}: {e}", index + 1))?;
            let g = Graph::from_edges(record.n, &record.edges)
                .map_err(|e| format!("line {}: {e}", index + 1))?;
            emit(&to_graph6(&g))?;
        }
    }
    Ok(true)
}
