//! `factorlab`: constructions, spectral radii, parity-factor decisions and
//! batch verification from the command line.
//!
//! stdout carries only machine-readable output (graph6, JSON lines, JSON
//! summaries); diagnostics go to stderr. Exit codes: 0 success, 1 a suite or
//! cross-check failed, 2 bad usage or bad input.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use factorlab::constructions::{book_family, g_na, h_nab, odd_1b, LabeledConstruction, Sidecar};
use factorlab::factor::{decide_by_criterion, decide_by_search, Limits, ParityParams};
use factorlab::graph::{Graph, VertexSet};
use factorlab::graph6;
use factorlab::harness::{read_corpus, run_suite, Suite, SuiteConfig, SurveyTarget};
use factorlab::spectral::{quotient, quotient_rho, spectral_radius, PowerOptions};
use factorlab::Execution;

#[derive(Parser, Debug)]
#[command(
    name = "factorlab",
    version,
    about = "Parity factors and spectral radii of small graphs"
)]
struct Cli {
    /// Log verbosity on stderr (repeat for more).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a labelled extremal graph; prints graph6 then a JSON block sidecar.
    Construct(ConstructArgs),
    /// Spectral radius of each input graph, one JSON object per line.
    Rho(RhoArgs),
    /// Decide parity [a,b]-factor existence for each input graph.
    CheckParityFactor(CheckArgs),
    /// Run a verification suite and write its CSV report.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    GNa,
    HNab,
    #[value(name = "odd-1b")]
    Odd1b,
    Book,
}

#[derive(clap::Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Also write the sidecar JSON to this file.
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct InputArgs {
    /// graph6 input file; stdin when absent.
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct RhoArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Residual tolerance for power iteration.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 1_000_000)]
    max_iter: usize,
    /// Equitable partition (a sidecar file or a JSON array of vertex lists);
    /// the radius then comes from the quotient matrix.
    #[arg(long)]
    quotient: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Criterion,
    Search,
    Both,
}

#[derive(clap::Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
    /// Lift the soft size limits.
    #[arg(long)]
    force: bool,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    /// oracle, lemma2.1 ... lemma2.8, eq1 or survey.
    #[arg(long)]
    suite: String,
    /// CSV report path.
    #[arg(long)]
    out: PathBuf,
    /// graph6 corpus for the oracle suite; all connected graphs up to
    /// --max-n otherwise.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, env = "FACTORLAB_SEED", default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    samples: Option<usize>,
    /// Worker threads; 1 runs sequentially, 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Survey order.
    #[arg(long, default_value_t = 12)]
    n: usize,
    /// Survey lower degree.
    #[arg(long, default_value_t = 2)]
    a: usize,
    /// Survey upper degree.
    #[arg(long, default_value_t = 4)]
    b: usize,
}

/// Errors that map to exit code 2.
#[derive(Debug)]
struct InputError(anyhow::Error);

enum Outcome {
    Success,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(cli.command) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        // a closed downstream pipe (e.g. `| head`) is not an error
        Err(InputError(e)) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<io::Error>()
            .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
    })
}

fn run(command: Command) -> Result<Outcome, InputError> {
    let result = match command {
        Command::Construct(args) => construct(args),
        Command::Rho(args) => rho(args),
        Command::CheckParityFactor(args) => check(args),
        Command::Verify(args) => verify(args),
    };
    result.map_err(InputError)
}

fn read_graphs(input: &InputArgs) -> anyhow::Result<Vec<Graph>> {
    let reader: Box<dyn BufRead> = match &input.input {
        Some(path) => Box::new(BufReader::new(
            File::open(path).with_context(|| format!("opening {}", path.display()))?,
        )),
        None => Box::new(BufReader::new(io::stdin())),
    };
    let graphs: Vec<Graph> = graph6::read_all(reader)?
        .into_iter()
        .map(|(_, g)| g)
        .collect();
    if graphs.is_empty() {
        bail!("no graphs in input");
    }
    Ok(graphs)
}

fn need(value: Option<usize>, flag: &str, family: &str) -> anyhow::Result<usize> {
    value.ok_or_else(|| anyhow!("{family} needs --{flag}"))
}

fn construct(args: ConstructArgs) -> anyhow::Result<Outcome> {
    let n = args.n;
    let c: LabeledConstruction = match args.family {
        Family::GNa => g_na(n, need(args.a, "a", "g-na")?)?,
        Family::HNab => h_nab(n, need(args.a, "a", "h-nab")?, need(args.b, "b", "h-nab")?)?,
        Family::Odd1b => odd_1b(n, need(args.b, "b", "odd-1b")?)?,
        Family::Book => book_family(n, need(args.s, "s", "book")?, need(args.b, "b", "book")?)?,
    };
    let sidecar = serde_json::to_string(&c.sidecar())?;
    if let Some(path) = &args.sidecar {
        std::fs::write(path, format!("{sidecar}\n"))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let mut out = io::stdout().lock();
    writeln!(out, "{}", graph6::encode(&c.graph))?;
    writeln!(out, "{sidecar}")?;
    eprintln!(
        "{}: n = {}, m = {}",
        c.family,
        c.graph.order(),
        c.graph.size()
    );
    Ok(Outcome::Success)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PartitionFile {
    Sidecar(Sidecar),
    Lists(Vec<Vec<usize>>),
}

fn read_partition(path: &Path, n: usize) -> anyhow::Result<Vec<VertexSet>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let lists = match serde_json::from_str::<PartitionFile>(&text).with_context(|| {
        format!(
            "{}: expected a sidecar object or an array of vertex lists",
            path.display()
        )
    })? {
        PartitionFile::Sidecar(s) => s.blocks.into_iter().map(|b| b.vertices).collect(),
        PartitionFile::Lists(l) => l,
    };
    lists
        .into_iter()
        .map(|l| VertexSet::from_vertices(n, l).map_err(Into::into))
        .collect()
}

fn rho(args: RhoArgs) -> anyhow::Result<Outcome> {
    let graphs = read_graphs(&args.input)?;
    let opts = PowerOptions {
        tol: args.tol,
        max_iter: args.max_iter,
    };
    let mut out = io::stdout().lock();
    for g in &graphs {
        let line = match &args.quotient {
            Some(path) => {
                let parts = read_partition(path, g.order())?;
                let q = quotient(g, &parts)?;
                json!({ "rho": quotient_rho(&q)?, "iterations": 0, "residual": 0.0, "method": "quotient" })
            }
            None => {
                let r = spectral_radius(g, opts)?;
                json!({ "rho": r.rho, "iterations": r.iterations, "residual": r.residual, "method": "power" })
            }
        };
        writeln!(out, "{line}")?;
    }
    Ok(Outcome::Success)
}

fn check(args: CheckArgs) -> anyhow::Result<Outcome> {
    let graphs = read_graphs(&args.input)?;
    let params = ParityParams::new(args.a, args.b)?;
    let limits = Limits {
        force: args.force,
        quiet: false,
    };
    let mut out = io::stdout().lock();
    let mut disagreements = 0;
    for g in &graphs {
        let criterion = match args.method {
            Method::Search => None,
            _ => Some(decide_by_criterion(
                g,
                &params,
                limits,
                Execution::Sequential,
            )?),
        };
        let search = match args.method {
            Method::Criterion => None,
            _ => Some(decide_by_search(g, params.bounds(), true, limits)?),
        };
        let has_factor = criterion
            .as_ref()
            .map(|c| c.has_factor())
            .or(search.as_ref().map(|s| s.has_factor()))
            .expect("at least one method ran");
        let agree = match (&criterion, &search) {
            (Some(c), Some(s)) => Some(c.has_factor() == s.has_factor()),
            _ => None,
        };
        if agree == Some(false) {
            disagreements += 1;
        }
        let line = json!({
            "graph6": graph6::encode(g),
            "n": g.order(),
            "m": g.size(),
            "a": args.a,
            "b": args.b,
            "has_factor": has_factor,
            "criterion": criterion,
            "search": search,
            "agree": agree,
        });
        writeln!(out, "{line}")?;
    }
    if disagreements > 0 {
        eprintln!("{disagreements} graph(s) where the two deciders disagree");
        return Ok(Outcome::Failed);
    }
    Ok(Outcome::Success)
}

fn verify(args: VerifyArgs) -> anyhow::Result<Outcome> {
    let suite: Suite = args.suite.parse()?;
    let corpus = match &args.corpus {
        Some(path) => {
            let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
            Some(read_corpus(BufReader::new(f))?)
        }
        None => None,
    };
    let cfg = SuiteConfig {
        seed: args.seed,
        samples: args.samples,
        corpus,
        max_n: args.max_n,
        survey: SurveyTarget {
            n: args.n,
            a: args.a,
            b: args.b,
        },
        exec: Execution::for_jobs(args.jobs),
    };
    let outcome = run_suite(suite, &cfg)?;
    let file =
        File::create(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    outcome.table.write_csv(BufWriter::new(file))?;
    let summary = outcome.table.summary();
    let line = match &outcome.survey {
        Some(s) => json!({ "table": summary, "survey": s }),
        None => json!({ "table": summary }),
    };
    println!("{line}");
    eprintln!(
        "{suite}: {} rows, {} failed, {} errors -> {}",
        summary.rows,
        summary.failed,
        summary.errors,
        args.out.display()
    );
    if let Some(s) = &outcome.survey {
        eprintln!("survey status: {}", s.status);
    }
    Ok(if outcome.passed() {
        Outcome::Success
    } else {
        Outcome::Failed
    })
}
