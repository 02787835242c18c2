//! The `cutsparsify` command line.
//!
//! Exit codes: 0 on success or a passing verdict, 2 on a failing verdict,
//! 1 on usage, input or domain errors.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::edgelist::{format_edge_list, format_stream, read_edge_list, read_stream};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::{check_ek_bound, eval_exhaustive, eval_mincut, eval_sampled, EvalReport};
use crate::mincut::min_cut;
use crate::offline::{format_decisions, sparsify_with_strengths};
use crate::stream::{resolve_rho, run_stream, space_report, space_report_from, SparsifyConfig};
use crate::streamkit::{generate, Family, Order, StreamSpec};
use crate::strength::{strength, strength_brute, StrengthMode};
use crate::weight::{parse_rational, Rational, Weight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VERDICT_FAIL: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cutsparsify", version, about = "One-pass cut sparsification of edge streams")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated edge stream.
    Generate(GenerateArgs),
    /// Sparsify a unit-weight edge list, streamed in file order or offline.
    Sparsify(SparsifyArgs),
    /// Compare a sparsifier H against its source graph G.
    Eval(EvalArgs),
    /// Exact minimum cut, optionally recovered through a sparsifier.
    Mincut(MincutArgs),
    /// Edge strengths as `edge_id strength` lines.
    Strength(StrengthArgs),
}

fn ratio_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Gnp,
    Complete,
    Path,
    Barbell,
    PlantedCut,
    LowerboundBipartite,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    /// Vertex count (gnp, complete, path, lowerbound-bipartite).
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for gnp.
    #[arg(long, value_parser = ratio_arg)]
    p: Option<Rational>,
    /// Clique size for barbell.
    #[arg(long)]
    block: Option<usize>,
    #[arg(long)]
    left: Option<usize>,
    #[arg(long)]
    right: Option<usize>,
    /// Number of crossing edges for planted-cut.
    #[arg(long)]
    planted: Option<usize>,
    /// Intra-block edge probability for planted-cut.
    #[arg(long, value_parser = ratio_arg, default_value = "1")]
    p_in: Rational,
    /// Ladder ratio for lowerbound-bipartite.
    #[arg(long, value_parser = ratio_arg, default_value = "1/2")]
    epsilon: Rational,
    /// Explicit left degrees for lowerbound-bipartite, comma separated.
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = Order::AsGenerated)]
    order: Order,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SparsifyArgs {
    /// Sample with strengths computed on the whole input graph.
    #[arg(long, conflicts_with = "stream")]
    offline: bool,
    /// One pass in file order (the default).
    #[arg(long)]
    stream: bool,
    #[arg(long, value_parser = ratio_arg)]
    epsilon: Rational,
    #[arg(long, value_parser = ratio_arg, default_value = "1")]
    d: Rational,
    /// Stream length bound used in rho; defaults to n².
    #[arg(long)]
    m_max: Option<u64>,
    #[arg(long, value_parser = ratio_arg)]
    rho_override: Option<Rational>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = StrengthMode::Exact)]
    strength_mode: StrengthMode,
    /// Use f64 weights instead of exact rationals.
    #[arg(long)]
    float: bool,
    /// Write `edge_id c_e p_e kept` lines here.
    #[arg(long)]
    decisions: Option<PathBuf>,
    /// Write the JSON space report here.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Input edge list; standard input when absent or `-`.
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    g: PathBuf,
    h: PathBuf,
    #[arg(long, conflicts_with = "sampled")]
    exhaustive: bool,
    /// Probe singletons, the minimum cut of G and N random cuts.
    #[arg(long, value_name = "N")]
    sampled: Option<usize>,
    #[arg(long, value_parser = ratio_arg)]
    epsilon: Rational,
    /// Seed for the random cuts of --sampled.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the JSON report instead of a summary.
    #[arg(long)]
    json: bool,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Include wall time in the report.
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    float: bool,
}

#[derive(Debug, Args)]
struct MincutArgs {
    graph: PathBuf,
    /// Price the minimum cut of this sparsifier in the graph.
    #[arg(long)]
    sparsifier: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    float: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrengthRoute {
    Exact,
    Certificate,
    Brute,
}

#[derive(Debug, Args)]
struct StrengthArgs {
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = StrengthRoute::Exact)]
    mode: StrengthRoute,
    #[arg(long)]
    float: bool,
}

/// Parses `args` (including the program name) and runs the command,
/// returning the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Generate(a) => cmd_generate(a),
        Command::Sparsify(a) if a.float => cmd_sparsify::<f64>(a),
        Command::Sparsify(a) => cmd_sparsify::<Rational>(a),
        Command::Eval(a) if a.float => cmd_eval::<f64>(a),
        Command::Eval(a) => cmd_eval::<Rational>(a),
        Command::Mincut(a) if a.float => cmd_mincut::<f64>(a),
        Command::Mincut(a) => cmd_mincut::<Rational>(a),
        Command::Strength(a) if a.float => cmd_strength::<f64>(a),
        Command::Strength(a) => cmd_strength::<Rational>(a),
    }
}

fn open_input(path: Option<&Path>) -> Result<Box<dyn BufRead>> {
    match path {
        None => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) if p == Path::new("-") => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) => {
            let f = File::open(p).map_err(|e| io_context(p, e))?;
            Ok(Box::new(BufReader::new(f)))
        }
    }
}

fn io_context(path: &Path, e: io::Error) -> Error {
    Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io_context(p, e)),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn json_text(v: &serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn load_graph<W: Weight>(path: &Path) -> Result<Graph<W>> {
    let parsed = read_edge_list::<W, _>(open_input(Some(path))?)?;
    if parsed.self_loops > 0 {
        log::warn!("{}: skipped {} self-loops", path.display(), parsed.self_loops);
    }
    Ok(parsed.graph)
}

fn required<T>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    value.ok_or_else(|| Error::Domain(format!("--{flag} is required for --family {family}")))
}

fn cmd_generate(a: GenerateArgs) -> Result<i32> {
    let family = match a.family {
        FamilyKind::Gnp => Family::Gnp {
            n: required(a.n, "n", "gnp")?,
            p: required(a.p, "p", "gnp")?,
        },
        FamilyKind::Complete => Family::Complete {
            n: required(a.n, "n", "complete")?,
        },
        FamilyKind::Path => Family::Path {
            n: required(a.n, "n", "path")?,
        },
        FamilyKind::Barbell => Family::Barbell {
            block: required(a.block, "block", "barbell")?,
        },
        FamilyKind::PlantedCut => Family::PlantedCut {
            left: required(a.left, "left", "planted-cut")?,
            right: required(a.right, "right", "planted-cut")?,
            planted: required(a.planted, "planted", "planted-cut")?,
            p_in: a.p_in,
        },
        FamilyKind::LowerboundBipartite => Family::LowerboundBipartite {
            n: required(a.n, "n", "lowerbound-bipartite")?,
            epsilon: a.epsilon,
            degrees: a.degrees,
        },
    };
    let spec = StreamSpec::new(family, a.order, a.seed);
    let stream = generate(&spec)?;
    write_output(a.output.as_deref(), &format_stream(spec.n(), &stream))?;
    Ok(EXIT_OK)
}

fn sparsify_config(a: &SparsifyArgs, n: usize) -> SparsifyConfig {
    let mut cfg = SparsifyConfig::new(n, a.epsilon.clone())
        .with_d(a.d.clone())
        .with_seed(a.seed)
        .with_strength_mode(a.strength_mode);
    if let Some(m) = a.m_max {
        cfg = cfg.with_m_max(m);
    }
    if let Some(r) = &a.rho_override {
        cfg = cfg.with_rho_override(r.clone());
    }
    cfg
}

fn cmd_sparsify<W: Weight>(a: SparsifyArgs) -> Result<i32> {
    let (n, pairs, loops) = read_stream(open_input(a.input.as_deref())?)?;
    let cfg = sparsify_config(&a, n);
    let (h, decisions, report) = if a.offline {
        let rho = resolve_rho(&cfg)?;
        let mut g: Graph<W> = Graph::new(n);
        for &(u, v) in &pairs {
            g.add_edge(u, v, W::one())?;
        }
        let strengths = strength(&g, cfg.strength_mode);
        let (h, decisions) = sparsify_with_strengths(&g, &strengths, &W::from_ratio(&rho), cfg.seed)?;
        let report = space_report_from(&h, &rho, &decisions).to_json();
        (h, decisions, report)
    } else {
        let state = run_stream::<W>(&cfg, &pairs)?;
        for w in state.warnings() {
            log::warn!("{w}");
        }
        let mut report = space_report(&state).to_json();
        report["ek_weight_bound"] = serde_json::to_value(check_ek_bound(&state))?;
        let decisions = state.decisions().to_vec();
        (state.into_graph(), decisions, report)
    };
    if loops > 0 {
        log::warn!("skipped {loops} self-loops");
    }
    if let Some(p) = &a.decisions {
        write_output(Some(p), &format_decisions(&decisions))?;
    }
    if let Some(p) = &a.report {
        write_output(Some(p), &json_text(&report)?)?;
    }
    write_output(a.output.as_deref(), &format_edge_list(&h))?;
    Ok(EXIT_OK)
}

fn cmd_eval<W: Weight>(a: EvalArgs) -> Result<i32> {
    let start = Instant::now();
    let g = load_graph::<W>(&a.g)?;
    let h = load_graph::<W>(&a.h)?;
    let mut report: EvalReport<W> = match a.sampled {
        Some(trials) => {
            if trials == 0 {
                return Err(Error::domain("--sampled needs at least one trial"));
            }
            eval_sampled(&g, &h, &a.epsilon, trials, a.seed)?
        }
        None => eval_exhaustive(&g, &h, &a.epsilon)?,
    };
    if a.timing {
        report = report.with_runtime_ms(start.elapsed().as_millis() as u64);
    }
    let json = json_text(&report.to_json())?;
    if let Some(p) = &a.report {
        write_output(Some(p), &json)?;
    }
    if a.json {
        write_output(None, &json)?;
    } else {
        let text = format!(
            "mode: {}\nprobed cuts: {}\nmax relative error: {} ({})\nmin cut G: {}\nmin cut H: {}\nhandshake: {}\nverdict: {}\n",
            report.mode.label(),
            report.probed_cuts,
            report.max_relative_error.to_f64(),
            report.max_relative_error,
            report.min_cut_g,
            report.min_cut_h,
            if report.checks.handshake { "pass" } else { "fail" },
            report.verdict(),
        );
        write_output(None, &text)?;
    }
    Ok(if report.pass() { EXIT_OK } else { EXIT_VERDICT_FAIL })
}

fn cmd_mincut<W: Weight>(a: MincutArgs) -> Result<i32> {
    let g = load_graph::<W>(&a.graph)?;
    let text = match &a.sparsifier {
        Some(hp) => {
            let h = load_graph::<W>(hp)?;
            let r = eval_mincut(&g, &h)?;
            if a.json {
                json_text(&r.to_json())?
            } else {
                format!(
                    "exact: {}\nvia sparsifier: {}\nratio: {}\nside: {}\n",
                    r.exact, r.via_sparsifier, r.ratio, r.cut
                )
            }
        }
        None => {
            let (cut, value) = min_cut(&g)?;
            if a.json {
                json_text(&serde_json::json!({
                    "schema": 1,
                    "value": value.to_string(),
                    "cut": cut.side(),
                }))?
            } else {
                format!("value: {value}\nside: {cut}\n")
            }
        }
    };
    write_output(None, &text)?;
    Ok(EXIT_OK)
}

fn cmd_strength<W: Weight>(a: StrengthArgs) -> Result<i32> {
    let g = load_graph::<W>(&a.graph)?;
    let map = match a.mode {
        StrengthRoute::Exact => strength(&g, StrengthMode::Exact),
        StrengthRoute::Certificate => strength(&g, StrengthMode::Certificate),
        StrengthRoute::Brute => strength_brute(&g)?,
    };
    write_output(None, &map.to_lines())?;
    Ok(EXIT_OK)
}
