use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use copnum::enumerate::{generate, GenSpec};
use copnum::graph::{parse_edge_list, parse_graph6};
use copnum::solver::{cop_number_counted, trace_game, RobberPolicy, SolveError};
use copnum::structure::{is_petersen_by_property, lower_bound, prune_c_at_most_2, PruneVerdict};
use copnum::survey::{
    run_survey, verify_m3, Fault, Mode, SurveyConfig, SurveyError, SurveyOutcome, VerifyConfig,
};
use copnum::Graph;

#[derive(Parser)]
#[command(name = "copnum", version, about = "Cop numbers of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the cop number of one graph.
    Solve(SolveArgs),
    /// Survey every connected class of one order.
    Survey(SurveyArgs),
    /// Check that order 10 is the least order needing three cops.
    #[command(name = "verify-m3")]
    VerifyM3(VerifyArgs),
    /// Print the connected classes of one order in graph6.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
#[group(id = "input", required = true, multiple = false)]
struct GraphInput {
    #[arg(long, group = "input")]
    graph6: Option<String>,
    /// Edge-list file: `n m` header, then one `u v` pair per line.
    #[arg(long, group = "input")]
    edges: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long = "max-k", default_value_t = 4)]
    max_k: usize,
    /// Print a game transcript with the winning number of cops.
    #[arg(long)]
    trace: bool,
    /// Print the structural facts behind the bound and prune verdict.
    #[arg(long)]
    lemmas: bool,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Args)]
struct Jobs {
    /// Worker threads [default: available cores]
    #[arg(long, env = "COPNUM_JOBS")]
    jobs: Option<usize>,
}

impl Jobs {
    fn get(&self) -> usize {
        self.jobs.unwrap_or_else(default_jobs)
    }
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "full")]
    mode: Mode,
    #[command(flatten)]
    jobs: Jobs,
    /// JSONL report, one record per class.
    #[arg(long)]
    out: Option<PathBuf>,
    /// CSV summary.
    #[arg(long)]
    summary: Option<PathBuf>,
    /// Checkpoint file; an existing one is resumed.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    threshold: usize,
    #[arg(long = "max-k", default_value_t = 4)]
    max_k: usize,
    /// Read graph6 classes from this file instead of generating them.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Audit sample size.
    #[arg(long, default_value_t = 10_000)]
    sample: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Leave out timing fields so reports compare byte for byte.
    #[arg(long)]
    stable_output: bool,
    #[arg(long, hide = true)]
    stop_after: Option<u64>,
    #[arg(long, hide = true)]
    inject_fault: Option<Fault>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "pruned")]
    mode: Mode,
    #[command(flatten)]
    jobs: Jobs,
    #[arg(long, hide = true, default_value_t = 10)]
    max_n: usize,
    #[arg(long, hide = true)]
    inject_fault: Option<Fault>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    max_degree: Option<usize>,
    /// Output file [default: standard output]
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failures that map to a specific exit status.
enum Failure {
    Usage(anyhow::Error),
    Verdict(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn read_graph(input: &GraphInput) -> Result<Graph> {
    match (&input.graph6, &input.edges) {
        (Some(s), _) => parse_graph6(s.trim()).with_context(|| format!("bad graph6 {s:?}")),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
            parse_edge_list(&text).with_context(|| path.display().to_string())
        }
        (None, None) => unreachable!("clap requires one input"),
    }
}

fn solve(args: SolveArgs) -> Result<(), Failure> {
    let g = read_graph(&args.input)?;
    let out = &mut io::stdout().lock();
    let lb = lower_bound(&g).context("lower bound")?;
    let verdict = prune_c_at_most_2(&g).context("prune check")?;
    let c = match cop_number_counted(&g, args.max_k) {
        Ok(c) => c,
        Err(SolveError::ExceedsKMax { k_max }) => {
            return Err(Failure::Verdict(format!("cop_number > {k_max}")));
        }
        Err(e) => return Err(anyhow::Error::new(e).into()),
    };
    let write = |out: &mut dyn Write, s: String| writeln!(out, "{s}").context("stdout");
    write(out, format!("graph6 = {g}"))?;
    write(out, format!("cop_number = {}", c.value))?;
    write(out, format!("lower_bound = {} ({})", lb.value, lb.reason))?;
    match &verdict {
        PruneVerdict::ProvedAtMost2(cert) => write(out, format!("prune = at most 2, {cert}"))?,
        PruneVerdict::Unknown => write(out, "prune = unknown".into())?,
    }
    if args.lemmas {
        let girth = g
            .girth()
            .finite()
            .map_or("inf".to_string(), |x| x.to_string());
        write(
            out,
            format!(
                "n = {}, min_degree = {}, max_degree = {}, girth = {girth}",
                g.n(),
                g.min_degree(),
                g.max_degree()
            ),
        )?;
        let d = g.dismantling_order().context("dismantling")?;
        write(out, format!("dismantleable = {}", d.is_dismantleable()))?;
        write(
            out,
            format!("petersen_by_property = {}", is_petersen_by_property(&g)),
        )?;
        if let Some(cert) = verdict.certificate() {
            write(out, format!("certificate re-checks = {}", cert.holds(&g)))?;
        }
        write(out, format!("states_explored = {}", c.states))?;
    }
    if args.trace {
        let t = trace_game(&g, c.value, RobberPolicy::Greedy).context("trace")?;
        write(out, format!("transcript with {} cops:", c.value))?;
        write!(out, "{t}").context("stdout")?;
    }
    Ok(())
}

fn install_stop() -> Arc<AtomicBool> {
    let stop = Arc::new(AtomicBool::new(false));
    let flag = stop.clone();
    // a second signal while stopping kills the process
    let _ = ctrlc::set_handler(move || {
        if flag.swap(true, Ordering::SeqCst) {
            std::process::exit(130);
        }
        eprintln!("interrupt: finishing the current batch and writing a checkpoint");
    });
    stop
}

fn survey_failure(e: SurveyError) -> Failure {
    match e.exit_code() {
        2 => Failure::Verdict(e.to_string()),
        _ => Failure::Usage(e.into()),
    }
}

fn survey(args: SurveyArgs) -> Result<(), Failure> {
    let cfg = SurveyConfig {
        jobs: args.jobs.get(),
        k_max: args.max_k,
        threshold: args.threshold,
        sample: args.sample,
        seed: args.seed,
        stable_output: args.stable_output,
        input: args.input,
        report: args.out,
        summary: args.summary,
        checkpoint: args.checkpoint,
        stop_after: args.stop_after,
        fault: args.inject_fault,
        ..SurveyConfig::new(args.n, args.mode)
    };
    let stop = install_stop();
    match run_survey(&cfg, &stop).map_err(survey_failure)? {
        SurveyOutcome::Complete(summary) => {
            println!("{summary}");
            if summary.has_contradictions() {
                return Err(Failure::Verdict("soundness contradiction found".into()));
            }
            Ok(())
        }
        SurveyOutcome::Interrupted { classes } => {
            let resume = match &cfg.checkpoint {
                Some(p) => format!("; rerun with --checkpoint {} to resume", p.display()),
                None => String::new(),
            };
            Err(Failure::Usage(anyhow::anyhow!(
                "interrupted after {classes} classes{resume}"
            )))
        }
    }
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let cfg = VerifyConfig {
        max_n: args.max_n,
        fault: args.inject_fault,
        ..VerifyConfig::new(args.mode, args.jobs.get())
    };
    if cfg.max_n == 0 || cfg.max_n > 10 {
        return Err(anyhow::anyhow!("--max-n must be in 1..=10").into());
    }
    let stop = install_stop();
    let report = verify_m3(&cfg, &stop).map_err(survey_failure)?;
    println!("{report}");
    match report.failure {
        None => Ok(()),
        Some(f) => Err(Failure::Verdict(format!(
            "verification failed at n = {}: {} {}",
            f.n,
            f.message,
            f.graph6.unwrap_or_default()
        ))),
    }
}

fn enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    let spec = GenSpec::connected(args.n).with_degrees(
        args.min_degree.unwrap_or(0),
        args.max_degree.unwrap_or(args.n.saturating_sub(1)),
    );
    let classes = generate(spec).context("invalid enumeration spec")?;
    let sink: Box<dyn Write> = match &args.out {
        Some(p) => Box::new(File::create(p).with_context(|| p.display().to_string())?),
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    let mut count = 0u64;
    for g in classes {
        writeln!(out, "{g}").context("write")?;
        count += 1;
    }
    out.flush().context("write")?;
    eprintln!("{count} graphs");
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Solve(a) => solve(a),
        Command::Survey(a) => survey(a),
        Command::VerifyM3(a) => verify(a),
        Command::Enumerate(a) => enumerate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Verdict(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
