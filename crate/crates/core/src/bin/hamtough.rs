use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hamtough::harness::{
    analyze_with, complete, complete_multipartite, cycle_graph, enumerate_labeled_graphs,
    path_graph, petersen, random_graph, search_lines, star, wheel, AnalyzeOptions, EvalOptions,
    HypothesisPreset, OutputFormat, Prefilter, PresetId, SearchOptions, SearchSummary,
};
use hamtough::replay::{replay, ReplayOutcome};
use hamtough::{parse_edge_list, parse_graph6, write_graph6, Error, Graph, Limits, Rational};

/// Exact toughness, cycle and forbidden-subgraph analysis of small graphs.
///
/// Every flag can also be set through an environment variable named
/// `HAMTOUGH_<FLAG>` (upper case, dashes as underscores).
#[derive(Parser, Debug)]
#[command(name = "hamtough", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a JSON invariant report for every input graph.
    Analyze(AnalyzeArgs),
    /// Check a graph6 stream against a theorem preset.
    Verify(VerifyArgs),
    /// Replay the longest-cycle proof claims on one graph.
    Replay(ReplayArgs),
    /// Check generated graphs (exhaustive or random) against a preset.
    Search(SearchArgs),
    /// Print graph6 lines for a named graph family.
    Gen(GenArgs),
}

#[derive(Args, Debug, Clone)]
struct LimitArgs {
    /// Per-graph wall-clock budget in seconds; overruns become undecided.
    #[arg(long, env = "HAMTOUGH_TIME_LIMIT_PER_GRAPH")]
    time_limit_per_graph: Option<f64>,
    /// Largest order for which toughness is computed by full cut enumeration.
    #[arg(long, env = "HAMTOUGH_MAX_N_EXHAUSTIVE", default_value_t = 24)]
    max_n_exhaustive: usize,
    /// Allow pruned toughness search above --max-n-exhaustive.
    #[arg(long, env = "HAMTOUGH_BRANCH_AND_BOUND")]
    branch_and_bound: bool,
    /// Include witness sets and cycles in the output.
    #[arg(long, env = "HAMTOUGH_WITNESSES")]
    witnesses: bool,
}

impl LimitArgs {
    fn time_limit(&self) -> Result<Option<Duration>, Error> {
        self.time_limit_per_graph
            .map(|s| {
                Duration::try_from_secs_f64(s)
                    .map_err(|e| Error::InvalidParameter(format!("--time-limit-per-graph: {e}")))
            })
            .transpose()
    }

    /// Limits with the static knobs set; the deadline is applied per graph.
    fn base_limits(&self) -> Limits {
        Limits {
            toughness_max_n: self.max_n_exhaustive,
            toughness_branch_and_bound: self.branch_and_bound,
            ..Limits::default()
        }
    }

    fn per_graph_limits(&self) -> Result<Limits, Error> {
        let base = self.base_limits();
        Ok(match self.time_limit()? {
            Some(t) => base.with_time_limit(t),
            None => base,
        })
    }
}

#[derive(Args, Debug, Clone)]
struct PresetArgs {
    /// THM_MAIN1, THM_MAIN3, PROBLEM_OTA_SANKA, THM_A_OTA_SANKA,
    /// THM_B_HU_WANG_SHEN, THM_C_BIGALKE_JUNG or PROBLEM_4_2.
    #[arg(long, env = "HAMTOUGH_PRESET")]
    preset: PresetId,
    #[arg(long, env = "HAMTOUGH_K")]
    k: Option<usize>,
    /// jsonl or csv.
    #[arg(long, env = "HAMTOUGH_FORMAT", default_value = "jsonl")]
    format: OutputFormat,
    /// Worker threads; 0 picks the number of CPUs.
    #[arg(long, env = "HAMTOUGH_WORKERS", default_value_t = 0)]
    workers: usize,
    /// Exit 1 when any input line fails to parse or evaluate.
    #[arg(long, env = "HAMTOUGH_STRICT")]
    strict: bool,
    /// Add `wall_time_us` to each verdict (makes output non-reproducible).
    #[arg(long, env = "HAMTOUGH_TIMING")]
    timing: bool,
    #[command(flatten)]
    limits: LimitArgs,
}

impl PresetArgs {
    fn preset(&self) -> Result<HypothesisPreset, Error> {
        HypothesisPreset::new(self.preset, self.k)
    }

    fn options(&self) -> Result<SearchOptions, Error> {
        Ok(SearchOptions {
            eval: EvalOptions {
                limits: self.limits.base_limits(),
                time_limit: self.limits.time_limit()?,
                witnesses: self.limits.witnesses,
                timing: self.timing,
            },
            workers: self.workers,
            ..SearchOptions::default()
        })
    }
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// graph6 lines or an edge list; standard input when omitted.
    input: Option<PathBuf>,
    /// Report (P2 ∪ kP1)-freeness for k = 1..=K.
    #[arg(long, env = "HAMTOUGH_FREENESS_K_MAX", default_value_t = 5)]
    freeness_k_max: usize,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// graph6 lines; standard input when omitted.
    input: Option<PathBuf>,
    #[command(flatten)]
    preset: PresetArgs,
}

#[derive(Args, Debug)]
struct ReplayArgs {
    /// graph6 lines or an edge list; standard input when omitted.
    input: Option<PathBuf>,
    #[arg(long, env = "HAMTOUGH_K")]
    k: usize,
    /// Emit JSON instead of text.
    #[arg(long, env = "HAMTOUGH_JSON")]
    json: bool,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Every labeled graph on N vertices (N <= 7).
    #[arg(
        long,
        env = "HAMTOUGH_EXHAUSTIVE",
        value_name = "N",
        conflicts_with = "random"
    )]
    exhaustive: Option<usize>,
    /// Also enumerate every smaller order, starting from 1.
    #[arg(long, env = "HAMTOUGH_ALL_SMALLER", requires = "exhaustive")]
    all_smaller: bool,
    /// Skip enumerated graphs with minimum degree below D.
    #[arg(long, env = "HAMTOUGH_MIN_DEGREE", value_name = "D")]
    min_degree: Option<usize>,
    /// Skip enumerated graphs that are disconnected.
    #[arg(long, env = "HAMTOUGH_CONNECTED")]
    connected: bool,
    /// COUNT random G(n, p) graphs.
    #[arg(long, env = "HAMTOUGH_RANDOM", value_name = "COUNT")]
    random: Option<u64>,
    #[arg(long, env = "HAMTOUGH_N_MIN", default_value_t = 8)]
    n_min: usize,
    #[arg(long, env = "HAMTOUGH_N_MAX", default_value_t = 14)]
    n_max: usize,
    /// Edge probability, e.g. 1/2 or 0.7; repeat to cycle through several.
    #[arg(long = "p", env = "HAMTOUGH_P", value_delimiter = ',', default_values = ["1/2"])]
    p: Vec<Rational>,
    #[arg(long, env = "HAMTOUGH_SEED", default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    preset: PresetArgs,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// petersen | complete N | cycle N | path N | star LEAVES |
    /// multipartite A B ... | wheel RIM | gnp N P
    family: String,
    params: Vec<String>,
    #[arg(long, env = "HAMTOUGH_SEED", default_value_t = 0)]
    seed: u64,
    /// Number of graphs for gnp; graph i uses seed + i.
    #[arg(long, env = "HAMTOUGH_COUNT", default_value_t = 1)]
    count: u64,
}

fn open_input(path: &Option<PathBuf>) -> io::Result<Box<dyn BufRead>> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(BufReader::new(io::stdin().lock())),
    })
}

/// Reads every graph from the input. An input whose first data line
/// contains whitespace is a single edge list; otherwise each data line is
/// graph6.
fn read_graphs(path: &Option<PathBuf>) -> Result<Vec<Result<Graph, Error>>, Error> {
    let mut text = String::new();
    open_input(path)
        .and_then(|mut r| r.read_to_string(&mut text))
        .map_err(|e| Error::InvalidParameter(format!("read error: {e}")))?;
    let mut data = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    match data.peek() {
        Some(first) if first.contains(char::is_whitespace) => Ok(vec![parse_edge_list(&text)]),
        _ => Ok(data.map(parse_graph6).collect()),
    }
}

fn run_analyze(a: &AnalyzeArgs) -> Result<ExitCode, Error> {
    let mut out = io::stdout().lock();
    let mut failed = false;
    for g in read_graphs(&a.input)? {
        let report = g.and_then(|g| {
            let opts = AnalyzeOptions {
                limits: a.limits.per_graph_limits()?,
                freeness_k_max: a.freeness_k_max,
                witnesses: a.limits.witnesses,
            };
            analyze_with(&g, &opts)
        });
        match report {
            Ok(r) => {
                serde_json::to_writer(&mut out, &r).map_err(write_err)?;
                writeln!(out).map_err(write_err)?;
            }
            Err(e) => {
                eprintln!("hamtough: {e}");
                failed = true;
            }
        }
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run_replay(a: &ReplayArgs) -> Result<ExitCode, Error> {
    let mut out = io::stdout().lock();
    let mut failed = false;
    for g in read_graphs(&a.input)? {
        let report = match g.and_then(|g| replay(&g, a.k, &a.limits.per_graph_limits()?)) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("hamtough: {e}");
                failed = true;
                continue;
            }
        };
        if matches!(report.outcome, ReplayOutcome::Acyclic) {
            eprintln!("hamtough: {}: acyclic; no longest cycle", report.graph6);
            failed = true;
            continue;
        }
        if a.json {
            serde_json::to_writer(&mut out, &report).map_err(write_err)?;
            writeln!(out).map_err(write_err)?;
        } else {
            write!(out, "{}", report.render_text()).map_err(write_err)?;
        }
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn exit_for(summary: &SearchSummary, strict: bool) -> ExitCode {
    if summary.counterexamples > 0 {
        ExitCode::from(2)
    } else if strict && summary.errors > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_verify(a: &VerifyArgs) -> Result<ExitCode, Error> {
    let preset = a.preset.preset()?;
    let opts = a.preset.options()?;
    let input = open_input(&a.input).map_err(|e| Error::InvalidParameter(format!("{e}")))?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    let summary = search_lines(input.lines(), preset, &opts, a.preset.format, &mut out)?;
    out.flush().map_err(write_err)?;
    Ok(exit_for(&summary, a.preset.strict))
}

fn run_search(a: &SearchArgs) -> Result<ExitCode, Error> {
    let preset = a.preset.preset()?;
    let opts = a.preset.options()?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    let summary = if let Some(n) = a.exhaustive {
        let filter = Prefilter {
            min_degree: a.min_degree,
            connected: a.connected,
        };
        let first = if a.all_smaller { 1 } else { n };
        let mut sources = Vec::new();
        for m in first..=n {
            sources.push(enumerate_labeled_graphs(m, filter)?);
        }
        let lines = sources.into_iter().flatten().map(|g| Ok(write_graph6(&g)));
        search_lines(lines, preset, &opts, a.preset.format, &mut out)?
    } else if let Some(count) = a.random {
        if a.n_min > a.n_max || a.p.is_empty() {
            return Err(Error::InvalidParameter(
                "need n_min <= n_max and at least one --p".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        let (lo, hi, ps) = (a.n_min, a.n_max, a.p.clone());
        let lines = (0..count).map(move |i| {
            let n = rng.gen_range(lo..=hi);
            let sub = rng.gen::<u64>();
            let p = ps[(i % ps.len() as u64) as usize];
            random_graph(n, p, sub)
                .map(|g| write_graph6(&g))
                .map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e))
        });
        search_lines(lines, preset, &opts, a.preset.format, &mut out)?
    } else {
        let input = io::stdin().lock();
        search_lines(input.lines(), preset, &opts, a.preset.format, &mut out)?
    };
    out.flush().map_err(write_err)?;
    Ok(exit_for(&summary, a.preset.strict))
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, name: &str) -> Result<T, Error> {
    let raw = params
        .get(i)
        .ok_or_else(|| Error::InvalidParameter(format!("missing parameter {name}")))?;
    raw.parse()
        .map_err(|_| Error::InvalidParameter(format!("bad {name}: {raw:?}")))
}

fn run_gen(a: &GenArgs) -> Result<ExitCode, Error> {
    let p = &a.params;
    let graphs: Vec<Graph> = match a.family.to_ascii_lowercase().as_str() {
        "petersen" => vec![petersen()],
        "complete" => vec![complete(param(p, 0, "n")?)?],
        "cycle" => vec![cycle_graph(param(p, 0, "n")?)?],
        "path" => vec![path_graph(param(p, 0, "n")?)?],
        "star" => vec![star(param(p, 0, "leaves")?)?],
        "wheel" => vec![wheel(param(p, 0, "rim")?)?],
        "multipartite" => {
            let parts = (0..p.len())
                .map(|i| param(p, i, "part size"))
                .collect::<Result<Vec<usize>, _>>()?;
            vec![complete_multipartite(&parts)?]
        }
        "gnp" => {
            let n: usize = param(p, 0, "n")?;
            let prob: Rational = param(p, 1, "p")?;
            (0..a.count)
                .map(|i| random_graph(n, prob, a.seed.wrapping_add(i)))
                .collect::<Result<_, _>>()?
        }
        other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
    };
    let mut out = io::stdout().lock();
    for g in graphs {
        writeln!(out, "{}", write_graph6(&g)).map_err(write_err)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn write_err(e: impl std::fmt::Display) -> Error {
    Error::InvalidParameter(format!("write error: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(a) => run_analyze(a),
        Command::Verify(a) => run_verify(a),
        Command::Replay(a) => run_replay(a),
        Command::Search(a) => run_search(a),
        Command::Gen(a) => run_gen(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("hamtough: {e}");
            ExitCode::from(1)
        }
    }
}
