//! Exhaustive surveys of connected graphs of one order.
//!
//! One producer thread reads graphs from the generator (or a graph6 file) in
//! numbered batches, `jobs` workers classify them, and the calling thread
//! writes records back in input order. Checkpoints are taken only at batch
//! boundaries, so a resumed run continues exactly where the report ends.

mod checkpoint;
mod record;
mod summary;
mod verify;

use std::collections::{BTreeMap, BinaryHeap};
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, BufWriter, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use crossbeam_channel::{bounded, unbounded, Receiver, Sender};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{read_graph6_stream, EnumError, GenSpec, Generator, Graph6Stream, OnError};
use crate::graph::{parse_graph6, Graph, MAX_ORDER};
use crate::solver::{SolveError, MAX_COPS};
use crate::structure::{prune_c_at_most_2, PruneVerdict};

use checkpoint::{Checkpoint, Fingerprint, Sampled, CHECKPOINT_VERSION};
use record::{cop_number_with_fault, process, Outcome};

pub use record::SurveyRecord;
pub use summary::{AuditReport, SurveySummary, Totals};
pub use verify::{verify_m3, VerifyConfig, VerifyFailure, VerifyReport, QUOTED_CUBIC_COUNT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Solve every class.
    Full,
    /// Solve only classes no filter settles.
    Pruned,
    /// As `Pruned`, then re-solve a seeded sample of the filtered classes.
    Audit,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Full => "full",
            Mode::Pruned => "pruned",
            Mode::Audit => "audit",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(Mode::Full),
            "pruned" => Ok(Mode::Pruned),
            "audit" => Ok(Mode::Audit),
            _ => Err(format!(
                "unknown mode {s:?}; expected full, pruned or audit"
            )),
        }
    }
}

/// Deliberate solver corruption, used to check that failures are caught.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Report cop number 3 for every cycle.
    CyclesNeedThreeCops,
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cycles-need-three-cops" => Ok(Fault::CyclesNeedThreeCops),
            _ => Err(format!("unknown fault {s:?}")),
        }
    }
}

#[derive(Debug, Error)]
pub enum SurveyError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("input line {line}: {message}")]
    Input { line: u64, message: String },
    #[error("checkpoint {path}: {message}")]
    Checkpoint { path: PathBuf, message: String },
    #[error("{graph6}: {source}")]
    Solve { graph6: String, source: SolveError },
    #[error(transparent)]
    Enumerate(#[from] EnumError),
    #[error("interrupted before completion")]
    Interrupted,
}

impl SurveyError {
    /// 2 when a graph needs more cops than allowed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            SurveyError::Solve {
                source: SolveError::ExceedsKMax { .. },
                ..
            } => 2,
            _ => 1,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> SurveyError + '_ {
    move |source| SurveyError::Io {
        path: path.to_path_buf(),
        source,
    }
}

#[derive(Debug, Clone)]
pub struct SurveyConfig {
    pub n: usize,
    pub mode: Mode,
    pub jobs: usize,
    pub k_max: usize,
    pub threshold: usize,
    /// Audit sample size.
    pub sample: usize,
    pub seed: u64,
    /// Omit the timing field so reports are byte-identical across runs.
    pub stable_output: bool,
    /// Read graph6 lines from this file instead of generating.
    pub input: Option<PathBuf>,
    pub report: Option<PathBuf>,
    pub summary: Option<PathBuf>,
    pub checkpoint: Option<PathBuf>,
    pub checkpoint_every: u64,
    pub checkpoint_interval: Duration,
    pub batch_size: usize,
    /// Behave as if interrupted once this many classes were written by this
    /// invocation (rounded up to a batch).
    pub stop_after: Option<u64>,
    pub fault: Option<Fault>,
}

impl SurveyConfig {
    pub fn new(n: usize, mode: Mode) -> SurveyConfig {
        SurveyConfig {
            n,
            mode,
            jobs: 1,
            k_max: MAX_COPS,
            threshold: 3,
            sample: 10_000,
            seed: 0,
            stable_output: false,
            input: None,
            report: None,
            summary: None,
            checkpoint: None,
            checkpoint_every: 10_000,
            checkpoint_interval: Duration::from_secs(5),
            batch_size: 256,
            stop_after: None,
            fault: None,
        }
    }

    fn validate(&self) -> Result<(), SurveyError> {
        let bad = |m: String| Err(SurveyError::Config(m));
        if self.n == 0 || self.n > MAX_ORDER {
            return bad(format!("order {} outside 1..={MAX_ORDER}", self.n));
        }
        if self.jobs == 0 {
            return bad("jobs must be at least 1".into());
        }
        if self.k_max == 0 || self.k_max > MAX_COPS {
            return bad(format!("max k {} outside 1..={MAX_COPS}", self.k_max));
        }
        if self.batch_size == 0 {
            return bad("batch size must be at least 1".into());
        }
        Ok(())
    }

    fn source_name(&self) -> String {
        match &self.input {
            Some(p) => p.display().to_string(),
            None => "generator".to_string(),
        }
    }

    fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            n: self.n,
            mode: self.mode,
            k_max: self.k_max,
            threshold: self.threshold,
            seed: self.seed,
            sample: self.sample,
            source: self.source_name(),
            stable_output: self.stable_output,
            fault: self.fault,
        }
    }
}

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)] // one value per run
pub enum SurveyOutcome {
    Complete(SurveySummary),
    /// Stopped early; the checkpoint (if configured) holds the resume point.
    Interrupted {
        classes: u64,
    },
}

enum Source {
    Generated(Generator),
    File {
        stream: Graph6Stream<BufReader<File>>,
        skipped_lines: u64,
    },
}

impl Source {
    fn open(cfg: &SurveyConfig, position: Option<&str>) -> Result<Source, SurveyError> {
        match &cfg.input {
            None => {
                let spec = GenSpec::connected(cfg.n);
                let g = match position {
                    Some(token) => Generator::resume(spec, token)?,
                    None => Generator::new(spec)?,
                };
                Ok(Source::Generated(g))
            }
            Some(path) => {
                let file = File::open(path).map_err(io_err(path))?;
                let mut reader = BufReader::new(file);
                let skip = match position {
                    None => 0,
                    Some(p) => p
                        .strip_prefix("lines:")
                        .and_then(|s| s.parse::<u64>().ok())
                        .ok_or_else(|| SurveyError::Checkpoint {
                            path: path.clone(),
                            message: format!("bad input position {p:?}"),
                        })?,
                };
                let mut line = String::new();
                for _ in 0..skip {
                    line.clear();
                    reader.read_line(&mut line).map_err(io_err(path))?;
                }
                Ok(Source::File {
                    stream: read_graph6_stream(reader, OnError::FailFast),
                    skipped_lines: skip,
                })
            }
        }
    }

    fn next(&mut self, n: usize) -> Option<Result<Graph, SurveyError>> {
        match self {
            Source::Generated(g) => g.next().map(Ok),
            Source::File {
                stream,
                skipped_lines,
            } => {
                let item = stream.next()?;
                let line = *skipped_lines + stream.lines_read();
                Some(match item {
                    Err(e) => Err(SurveyError::Input {
                        line,
                        message: e.to_string(),
                    }),
                    Ok(g) if g.n() != n => Err(SurveyError::Input {
                        line,
                        message: format!("graph has order {}, expected {n}", g.n()),
                    }),
                    Ok(g) if !g.is_connected() => Err(SurveyError::Input {
                        line,
                        message: "graph is not connected".into(),
                    }),
                    Ok(g) => Ok(g),
                })
            }
        }
    }

    fn position(&self) -> String {
        match self {
            Source::Generated(g) => g.token(),
            Source::File {
                stream,
                skipped_lines,
            } => format!("lines:{}", skipped_lines + stream.lines_read()),
        }
    }

    fn canonical(&self) -> bool {
        matches!(self, Source::Generated(_))
    }
}

struct Batch {
    index: u64,
    graphs: Vec<Graph>,
    position: String,
}

enum Msg {
    Done {
        index: u64,
        outcomes: Vec<Outcome>,
        position: String,
    },
    Exhausted {
        batches: u64,
    },
    Failed(SurveyError),
}

fn produce(
    mut source: Source,
    n: usize,
    batch_size: usize,
    work: Sender<Batch>,
    results: Sender<Msg>,
    halt: &AtomicBool,
) {
    let mut index = 0;
    while !halt.load(Ordering::Relaxed) {
        let mut graphs = Vec::with_capacity(batch_size);
        while graphs.len() < batch_size {
            match source.next(n) {
                None => break,
                Some(Ok(g)) => graphs.push(g),
                Some(Err(e)) => {
                    let _ = results.send(Msg::Failed(e));
                    return;
                }
            }
        }
        if graphs.is_empty() {
            let _ = results.send(Msg::Exhausted { batches: index });
            return;
        }
        let batch = Batch {
            index,
            graphs,
            position: source.position(),
        };
        if work.send(batch).is_err() {
            return;
        }
        index += 1;
    }
}

fn work(cfg: &SurveyConfig, canonical: bool, batches: Receiver<Batch>, results: Sender<Msg>) {
    for batch in batches {
        let mut outcomes = Vec::with_capacity(batch.graphs.len());
        for g in &batch.graphs {
            match process(
                g,
                canonical,
                cfg.mode,
                cfg.k_max,
                cfg.fault,
                !cfg.stable_output,
            ) {
                Ok(o) => outcomes.push(o),
                Err(source) => {
                    let _ = results.send(Msg::Failed(SurveyError::Solve {
                        graph6: g.to_string(),
                        source,
                    }));
                    return;
                }
            }
        }
        let msg = Msg::Done {
            index: batch.index,
            outcomes,
            position: batch.position,
        };
        if results.send(msg).is_err() {
            return;
        }
    }
}

/// Writer-side state: everything a checkpoint captures.
struct Progress {
    totals: Totals,
    sample: BinaryHeap<Sampled>,
    next_seq: u64,
    report_bytes: u64,
    position: String,
    seconds_before: f64,
}

struct Writer<'a> {
    cfg: &'a SurveyConfig,
    report: Option<BufWriter<File>>,
    progress: Progress,
    rng: ChaCha8Rng,
    line: Vec<u8>,
}

impl Writer<'_> {
    fn sample_key(&mut self, seq: u64) -> u64 {
        self.rng.set_word_pos(u128::from(seq) * 2);
        self.rng.next_u64()
    }

    fn accept(&mut self, outcomes: Vec<Outcome>) -> Result<(), SurveyError> {
        for o in outcomes {
            let seq = self.progress.next_seq;
            self.progress.next_seq += 1;
            if let Some(report) = self.report.as_mut() {
                self.line.clear();
                serde_json::to_writer(&mut self.line, &o.record).expect("records serialize");
                self.line.push(b'\n');
                let path = self.cfg.report.as_deref().expect("report path");
                report.write_all(&self.line).map_err(io_err(path))?;
                self.progress.report_bytes += self.line.len() as u64;
            }
            let t = &mut self.progress.totals;
            t.classes += 1;
            t.states_explored += o.record.states_explored;
            if o.bound_violation {
                t.bound_violations.push(o.record.graph6.clone());
            }
            if let Some(c) = o.record.cop_number {
                *t.by_cop_number.entry(c).or_default() += 1;
                if c >= self.cfg.threshold {
                    t.at_threshold.push(o.record.graph6.clone());
                }
            }
            if let Some(rule) = o.record.pruned_by {
                *t.by_rule.entry(rule).or_default() += 1;
                if self.cfg.mode == Mode::Audit && self.cfg.sample > 0 {
                    let key = self.sample_key(seq);
                    let full = self.progress.sample.len() >= self.cfg.sample;
                    if !full || self.progress.sample.peek().is_some_and(|top| key < top.key) {
                        if full {
                            self.progress.sample.pop();
                        }
                        self.progress.sample.push(Sampled {
                            key,
                            seq,
                            graph6: o.record.graph6,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<(), SurveyError> {
        if let Some(report) = self.report.as_mut() {
            let path = self.cfg.report.as_deref().expect("report path");
            report.flush().map_err(io_err(path))?;
            report.get_ref().sync_data().map_err(io_err(path))?;
        }
        Ok(())
    }

    fn checkpoint(&mut self, started: Instant) -> Result<(), SurveyError> {
        let Some(path) = self.cfg.checkpoint.as_deref() else {
            return Ok(());
        };
        self.flush()?;
        let p = &self.progress;
        let mut sample: Vec<Sampled> = p.sample.iter().cloned().collect();
        sample.sort();
        let c = Checkpoint {
            version: CHECKPOINT_VERSION,
            fingerprint: self.cfg.fingerprint(),
            report_bytes: p.report_bytes,
            position: p.position.clone(),
            next_seq: p.next_seq,
            totals: p.totals.clone(),
            sample,
            seconds: p.seconds_before + started.elapsed().as_secs_f64(),
        };
        c.store(path).map_err(io_err(path))
    }
}

fn open_report(
    cfg: &SurveyConfig,
    resume_bytes: Option<u64>,
) -> Result<Option<BufWriter<File>>, SurveyError> {
    let Some(path) = cfg.report.as_deref() else {
        return Ok(None);
    };
    let mut file = match resume_bytes {
        None => File::create(path).map_err(io_err(path))?,
        Some(bytes) => {
            let mut f = OpenOptions::new()
                .read(true)
                .write(true)
                .open(path)
                .map_err(io_err(path))?;
            let len = f.metadata().map_err(io_err(path))?.len();
            if len < bytes {
                return Err(SurveyError::Checkpoint {
                    path: path.to_path_buf(),
                    message: format!("report has {len} bytes, checkpoint expects {bytes}"),
                });
            }
            f.set_len(bytes).map_err(io_err(path))?;
            f.seek(SeekFrom::End(0)).map_err(io_err(path))?;
            f
        }
    };
    file.flush().map_err(io_err(path))?;
    Ok(Some(BufWriter::with_capacity(1 << 16, file)))
}

/// Runs (or resumes) a survey. `stop` requests an orderly early exit: the
/// current batch is finished and a checkpoint written.
pub fn run_survey(cfg: &SurveyConfig, stop: &AtomicBool) -> Result<SurveyOutcome, SurveyError> {
    cfg.validate()?;
    let started = Instant::now();
    let resumed = match cfg.checkpoint.as_deref() {
        Some(path) => {
            let loaded = Checkpoint::load(path).map_err(|e| SurveyError::Checkpoint {
                path: path.to_path_buf(),
                message: e.to_string(),
            })?;
            if let Some(c) = &loaded {
                if c.version != CHECKPOINT_VERSION || c.fingerprint != cfg.fingerprint() {
                    return Err(SurveyError::Checkpoint {
                        path: path.to_path_buf(),
                        message: "written by a run with different settings".into(),
                    });
                }
            }
            loaded
        }
        None => None,
    };
    let source = Source::open(cfg, resumed.as_ref().map(|c| c.position.as_str()))?;
    let canonical = source.canonical();
    let report = open_report(cfg, resumed.as_ref().map(|c| c.report_bytes))?;
    let progress = match resumed {
        Some(c) => Progress {
            totals: c.totals,
            sample: c.sample.into_iter().collect(),
            next_seq: c.next_seq,
            report_bytes: c.report_bytes,
            position: c.position,
            seconds_before: c.seconds,
        },
        None => Progress {
            totals: Totals::default(),
            sample: BinaryHeap::new(),
            next_seq: 0,
            report_bytes: 0,
            position: source.position(),
            seconds_before: 0.0,
        },
    };
    let mut writer = Writer {
        cfg,
        report,
        progress,
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        line: Vec::new(),
    };
    let halt = AtomicBool::new(false);
    let (work_tx, work_rx) = bounded::<Batch>(cfg.jobs * 2);
    let (res_tx, res_rx) = unbounded::<Msg>();

    let finished: Result<bool, SurveyError> = std::thread::scope(|scope| {
        {
            let res_tx = res_tx.clone();
            let halt = &halt;
            scope.spawn(move || produce(source, cfg.n, cfg.batch_size, work_tx, res_tx, halt));
        }
        for _ in 0..cfg.jobs {
            let rx = work_rx.clone();
            let tx = res_tx.clone();
            scope.spawn(move || work(cfg, canonical, rx, tx));
        }
        drop(work_rx);
        drop(res_tx);

        let result = drive(&mut writer, &res_rx, stop, started);
        // let the producer and workers wind down, discarding their output
        halt.store(true, Ordering::Relaxed);
        for _ in res_rx.iter() {}
        result
    });
    let complete = finished?;
    if !complete {
        writer.checkpoint(started)?;
        writer.flush()?;
        return Ok(SurveyOutcome::Interrupted {
            classes: writer.progress.totals.classes,
        });
    }
    writer.flush()?;

    let audit = (cfg.mode == Mode::Audit)
        .then(|| run_audit(cfg, writer.progress.sample.clone().into_vec()));
    let audit = audit.transpose()?;
    let summary = SurveySummary {
        n: cfg.n,
        mode: cfg.mode,
        threshold: cfg.threshold,
        k_max: cfg.k_max,
        source: cfg.source_name(),
        totals: writer.progress.totals,
        audit,
        seconds: writer.progress.seconds_before + started.elapsed().as_secs_f64(),
    };
    if let Some(path) = cfg.summary.as_deref() {
        let f = File::create(path).map_err(io_err(path))?;
        summary
            .write_csv(f)
            .map_err(|e| io_err(path)(io::Error::other(e)))?;
    }
    if let Some(path) = cfg.checkpoint.as_deref() {
        match std::fs::remove_file(path) {
            Err(e) if e.kind() != io::ErrorKind::NotFound => return Err(io_err(path)(e)),
            _ => {}
        }
    }
    Ok(SurveyOutcome::Complete(summary))
}

/// Consumes results in batch order. Returns whether the source was exhausted.
fn drive(
    writer: &mut Writer<'_>,
    results: &Receiver<Msg>,
    stop: &AtomicBool,
    started: Instant,
) -> Result<bool, SurveyError> {
    let cfg = writer.cfg;
    let mut pending: BTreeMap<u64, (Vec<Outcome>, String)> = BTreeMap::new();
    let mut next_index = 0u64;
    let mut total_batches: Option<u64> = None;
    let mut written_here = 0u64;
    let mut since_checkpoint = 0u64;
    let mut last_checkpoint = Instant::now();
    loop {
        if total_batches == Some(next_index) {
            return Ok(true);
        }
        let Ok(msg) = results.recv() else {
            return Ok(false);
        };
        match msg {
            Msg::Failed(e) => return Err(e),
            Msg::Exhausted { batches } => total_batches = Some(batches),
            Msg::Done {
                index,
                outcomes,
                position,
            } => {
                pending.insert(index, (outcomes, position));
            }
        }
        while let Some((outcomes, position)) = pending.remove(&next_index) {
            next_index += 1;
            let count = outcomes.len() as u64;
            writer.accept(outcomes)?;
            writer.progress.position = position;
            written_here += count;
            since_checkpoint += count;
            let stopping = stop.load(Ordering::Relaxed)
                || cfg.stop_after.is_some_and(|limit| written_here >= limit);
            if stopping && total_batches != Some(next_index) {
                return Ok(false);
            }
            if since_checkpoint >= cfg.checkpoint_every
                || last_checkpoint.elapsed() >= cfg.checkpoint_interval
            {
                writer.checkpoint(started)?;
                since_checkpoint = 0;
                last_checkpoint = Instant::now();
            }
        }
    }
}

fn run_audit(cfg: &SurveyConfig, mut sample: Vec<Sampled>) -> Result<AuditReport, SurveyError> {
    sample.sort_by_key(|s| s.seq);
    let mut report = AuditReport {
        seed: cfg.seed,
        requested: cfg.sample,
        ..AuditReport::default()
    };
    for s in sample {
        let g = parse_graph6(&s.graph6).map_err(|e| SurveyError::Input {
            line: s.seq + 1,
            message: e.to_string(),
        })?;
        let certified = matches!(
            prune_c_at_most_2(&g),
            Ok(PruneVerdict::ProvedAtMost2(ref c)) if c.holds(&g)
        );
        let value = match cop_number_with_fault(&g, cfg.k_max, cfg.fault) {
            Ok((c, _)) => Some(c),
            Err(SolveError::ExceedsKMax { .. }) => None,
            Err(source) => {
                return Err(SurveyError::Solve {
                    graph6: s.graph6,
                    source,
                })
            }
        };
        report.solved += 1;
        if let Some(c) = value {
            *report.by_cop_number.entry(c).or_default() += 1;
        }
        if !certified || value.is_none_or(|c| c > 2) {
            report.contradictions.push(s.graph6);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiet(n: usize, mode: Mode) -> SurveyConfig {
        SurveyConfig {
            stable_output: true,
            ..SurveyConfig::new(n, mode)
        }
    }

    fn complete(cfg: &SurveyConfig) -> SurveySummary {
        match run_survey(cfg, &AtomicBool::new(false)).unwrap() {
            SurveyOutcome::Complete(s) => s,
            SurveyOutcome::Interrupted { .. } => panic!("interrupted"),
        }
    }

    #[test]
    fn small_full_survey() {
        let s = complete(&quiet(5, Mode::Full));
        assert_eq!(s.totals.classes, 21);
        assert_eq!(s.c3plus(), 0);
        assert!(s.is_balanced());
        assert_eq!(s.totals.pruned(), 0);
        let c4 = complete(&quiet(4, Mode::Full));
        assert_eq!(c4.totals.by_cop_number.get(&2), Some(&1));
    }

    #[test]
    fn pruned_and_audit_agree_with_full() {
        for n in 1..=7 {
            let full = complete(&quiet(n, Mode::Full));
            let pruned = complete(&quiet(n, Mode::Pruned));
            let audit = complete(&SurveyConfig {
                sample: 50,
                seed: 3,
                ..quiet(n, Mode::Audit)
            });
            assert_eq!(full.totals.classes, pruned.totals.classes);
            assert_eq!(full.totals.at_threshold, pruned.totals.at_threshold);
            let a = audit.audit.unwrap();
            assert!(a.contradictions.is_empty());
            assert_eq!(a.solved as u64, audit.totals.pruned().min(50));
        }
    }

    #[test]
    fn job_count_does_not_change_output() {
        let dir = tempfile::tempdir().unwrap();
        let mut reports = Vec::new();
        for jobs in [1, 3] {
            let path = dir.path().join(format!("r{jobs}.jsonl"));
            let cfg = SurveyConfig {
                jobs,
                batch_size: 7,
                report: Some(path.clone()),
                ..quiet(6, Mode::Pruned)
            };
            complete(&cfg);
            reports.push(std::fs::read(path).unwrap());
        }
        assert_eq!(reports[0], reports[1]);
        assert_eq!(reports[0].iter().filter(|&&b| b == b'\n').count(), 112);
    }

    #[test]
    fn config_errors() {
        let mut cfg = quiet(0, Mode::Full);
        assert!(matches!(
            run_survey(&cfg, &AtomicBool::new(false)),
            Err(SurveyError::Config(_))
        ));
        cfg.n = 4;
        cfg.jobs = 0;
        assert!(run_survey(&cfg, &AtomicBool::new(false)).is_err());
    }

    #[test]
    fn mode_and_fault_parse() {
        assert_eq!("audit".parse::<Mode>(), Ok(Mode::Audit));
        assert!("fast".parse::<Mode>().is_err());
        assert_eq!(
            "cycles-need-three-cops".parse::<Fault>(),
            Ok(Fault::CyclesNeedThreeCops)
        );
    }
}
