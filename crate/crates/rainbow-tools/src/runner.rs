//! Parallel, checkpointable driver for the extremal search.
//!
//! Graphs within one edge-count tier are scanned by worker threads over
//! contiguous chunks; workers share nothing but a cancellation flag raised
//! on the first event. Chunk results are reduced in tier order, so the
//! reported witness is the canonically first feasible graph and every
//! output is byte-identical regardless of the worker count.
//!
//! The checkpoint is a plain line-oriented log of proven-infeasible
//! prefixes: one `batch` line per completed batch, one `tier` line per
//! exhausted tier. Resuming skips exactly what the log covers.

use crate::formats::{read_graph6_stream, FormatError};
use rainbow_core::extremal::{
    classify_graph, ExtremalError, ExtremalResult, FilterReason, GraphSource, GraphVerdict,
    TierTally,
};
use rainbow_core::solver::{SolverConfig, SolverError};
use rainbow_core::{EdgeColoring, Graph};
use std::collections::BTreeMap;
use std::fmt;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

/// Driver limits and persistence knobs.
#[derive(Clone, Debug)]
pub struct RunnerConfig {
    pub workers: usize,
    pub solver: SolverConfig,
    /// Line-oriented progress log; enables resuming interrupted runs.
    pub checkpoint: Option<PathBuf>,
    /// Graphs per checkpoint batch.
    pub batch_size: usize,
    /// Stop (resumably) after this many batches in this run.
    pub batch_limit: Option<u64>,
}

impl Default for RunnerConfig {
    fn default() -> Self {
        RunnerConfig {
            workers: 1,
            solver: SolverConfig::default(),
            checkpoint: None,
            batch_size: 256,
            batch_limit: None,
        }
    }
}

#[derive(Debug)]
pub enum RunnerError {
    Extremal(ExtremalError),
    Io(std::io::Error),
    /// The checkpoint belongs to a different run configuration.
    CheckpointMismatch {
        message: String,
    },
    /// Batch limit reached; progress is persisted in the checkpoint.
    Interrupted {
        batches_done: u64,
    },
}

impl fmt::Display for RunnerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunnerError::Extremal(e) => write!(f, "{e}"),
            RunnerError::Io(e) => write!(f, "io: {e}"),
            RunnerError::CheckpointMismatch { message } => {
                write!(f, "checkpoint mismatch: {message}")
            }
            RunnerError::Interrupted { batches_done } => {
                write!(f, "stopped at the batch limit after {batches_done} batches; resume with the same checkpoint")
            }
        }
    }
}

impl std::error::Error for RunnerError {}

impl From<ExtremalError> for RunnerError {
    fn from(e: ExtremalError) -> Self {
        RunnerError::Extremal(e)
    }
}

impl From<std::io::Error> for RunnerError {
    fn from(e: std::io::Error) -> Self {
        RunnerError::Io(e)
    }
}

/// Graph6-file-backed source for orders beyond the internal generator.
///
/// Each tier re-scans the file and keeps the graphs with exactly `m` edges,
/// in file order, so memory stays flat for large files. Lines must decode
/// to connected graphs of the declared order; duplicates are the file
/// producer's concern.
pub struct Graph6FileSource {
    path: PathBuf,
    n: usize,
}

impl Graph6FileSource {
    pub fn new(path: PathBuf, n: usize) -> Self {
        Graph6FileSource { path, n }
    }
}

impl GraphSource for Graph6FileSource {
    fn order(&self) -> usize {
        self.n
    }

    fn describe(&self) -> String {
        format!("file:{}", self.path.display())
    }

    fn tier(&mut self, m: usize) -> Result<Vec<Graph>, ExtremalError> {
        let stream =
            read_graph6_stream(&self.path).map_err(|e| ExtremalError::Source(e.to_string()))?;
        let mut out = Vec::new();
        for item in stream {
            let g = item.map_err(|e: FormatError| ExtremalError::Source(e.to_string()))?;
            if g.n() != self.n {
                return Err(ExtremalError::Source(format!(
                    "graph of order {} in a stream declared as order {}",
                    g.n(),
                    self.n
                )));
            }
            if !g.is_connected() {
                return Err(ExtremalError::Source(
                    "disconnected graph in stream".to_string(),
                ));
            }
            if g.edge_count() == m {
                out.push(g);
            }
        }
        Ok(out)
    }
}

enum Event {
    Feasible(EdgeColoring),
    Budget(u64),
}

#[derive(Default)]
struct Counts {
    filtered_diameter: u64,
    filtered_bridges: u64,
    filtered_degree: u64,
    searched: u64,
}

impl Counts {
    fn record(&mut self, verdict: &GraphVerdict) {
        match verdict {
            GraphVerdict::Filtered(FilterReason::Diameter) => self.filtered_diameter += 1,
            GraphVerdict::Filtered(FilterReason::Bridges) => self.filtered_bridges += 1,
            GraphVerdict::Filtered(FilterReason::MaxDegree) => self.filtered_degree += 1,
            GraphVerdict::Infeasible => self.searched += 1,
            GraphVerdict::Feasible(_) => unreachable!("events are handled separately"),
        }
    }

    fn add_into(&self, tally: &mut TierTally) {
        tally.filtered_diameter += self.filtered_diameter;
        tally.filtered_bridges += self.filtered_bridges;
        tally.filtered_degree += self.filtered_degree;
        tally.searched += self.searched;
    }
}

struct ChunkScan {
    counts: Counts,
    /// First event in this chunk: (index within chunk, event).
    event: Option<(usize, Event)>,
}

/// Scans one batch across `workers` chunks; the reduce walks chunks in
/// order, so the outcome is identical to a sequential scan.
fn scan_batch(
    graphs: &[Graph],
    d: usize,
    solver: &SolverConfig,
    workers: usize,
) -> (Counts, Option<(usize, Event)>) {
    let workers = workers.max(1).min(graphs.len().max(1));
    let chunk_len = graphs.len().div_ceil(workers);
    // Lowest chunk id that produced an event; later chunks may stop early.
    let first_event_chunk = AtomicUsize::new(usize::MAX);
    let chunks: Vec<(usize, &[Graph])> = graphs.chunks(chunk_len).enumerate().collect();
    let scans: Vec<ChunkScan> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|(chunk_id, chunk)| {
                let flag = &first_event_chunk;
                scope.spawn(move || {
                    let mut scan = ChunkScan {
                        counts: Counts::default(),
                        event: None,
                    };
                    for (i, g) in chunk.iter().enumerate() {
                        if flag.load(Ordering::Relaxed) < chunk_id {
                            break; // an earlier chunk already decided the batch
                        }
                        match classify_graph(g, d, solver) {
                            Ok(GraphVerdict::Feasible(col)) => {
                                scan.event = Some((i, Event::Feasible(col)));
                                flag.fetch_min(chunk_id, Ordering::Relaxed);
                                break;
                            }
                            Ok(verdict) => scan.counts.record(&verdict),
                            Err(SolverError::BudgetExceeded { assignments }) => {
                                scan.event = Some((i, Event::Budget(assignments)));
                                flag.fetch_min(chunk_id, Ordering::Relaxed);
                                break;
                            }
                            Err(e) => {
                                // Sources hand over connected graphs and d is
                                // validated upfront, so other solver errors
                                // cannot occur; treat as a budget-style stop.
                                unreachable!("unexpected solver error: {e}");
                            }
                        }
                    }
                    scan
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });

    let mut counts = Counts::default();
    for (chunk_id, scan) in scans.into_iter().enumerate() {
        let base = chunk_id * chunk_len;
        counts.filtered_diameter += scan.counts.filtered_diameter;
        counts.filtered_bridges += scan.counts.filtered_bridges;
        counts.filtered_degree += scan.counts.filtered_degree;
        counts.searched += scan.counts.searched;
        if let Some((local, event)) = scan.event {
            return (counts, Some((base + local, event)));
        }
    }
    (counts, None)
}

#[derive(Debug, Default)]
struct ResumeState {
    /// Exhausted tiers: m -> restored tally.
    tiers_done: BTreeMap<usize, TierTally>,
    /// Open tier: m -> per-batch restored counts.
    open_tier: Option<(usize, Vec<BatchLine>)>,
}

#[derive(Debug, Clone)]
struct BatchLine {
    m: usize,
    index: usize,
    count: u64,
    counts: [u64; 4],
}

fn kv(token: &str, key: &str) -> Option<u64> {
    token.strip_prefix(key)?.strip_prefix('=')?.parse().ok()
}

fn parse_checkpoint(text: &str, meta_line: &str) -> Result<ResumeState, RunnerError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        None => return Ok(ResumeState::default()),
        Some(header) if header.trim() == "rainbow-tnd-checkpoint v1" => {}
        Some(other) => {
            return Err(RunnerError::CheckpointMismatch {
                message: format!("unrecognized header {other:?}"),
            });
        }
    }
    match lines.next() {
        None => return Ok(ResumeState::default()),
        Some(meta) if meta.trim() == meta_line => {}
        Some(meta) => {
            return Err(RunnerError::CheckpointMismatch {
                message: format!("meta line {meta:?} does not match this run ({meta_line:?})"),
            });
        }
    }
    let mut state = ResumeState::default();
    let mut open: Vec<BatchLine> = Vec::new();
    for line in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let bad = || RunnerError::CheckpointMismatch {
            message: format!("bad line {line:?}"),
        };
        match tokens.first().copied() {
            Some("batch") if tokens.len() == 8 => {
                let batch = BatchLine {
                    m: kv(tokens[1], "m").ok_or_else(bad)? as usize,
                    index: kv(tokens[2], "index").ok_or_else(bad)? as usize,
                    count: kv(tokens[3], "count").ok_or_else(bad)?,
                    counts: [
                        kv(tokens[4], "fdiam").ok_or_else(bad)?,
                        kv(tokens[5], "fbridges").ok_or_else(bad)?,
                        kv(tokens[6], "fdeg").ok_or_else(bad)?,
                        kv(tokens[7], "searched").ok_or_else(bad)?,
                    ],
                };
                if let Some(prev) = open.last() {
                    if prev.m != batch.m || batch.index != prev.index + 1 {
                        return Err(bad());
                    }
                } else if batch.index != 0 {
                    return Err(bad());
                }
                open.push(batch);
            }
            Some("tier") if tokens.len() == 3 => {
                let m = kv(tokens[1], "m").ok_or_else(bad)? as usize;
                let classes = kv(tokens[2], "classes").ok_or_else(bad)?;
                let mut tally = TierTally {
                    m,
                    classes,
                    ..TierTally::default()
                };
                for batch in open.drain(..) {
                    if batch.m != m {
                        return Err(bad());
                    }
                    tally.filtered_diameter += batch.counts[0];
                    tally.filtered_bridges += batch.counts[1];
                    tally.filtered_degree += batch.counts[2];
                    tally.searched += batch.counts[3];
                }
                state.tiers_done.insert(m, tally);
            }
            _ => return Err(bad()),
        }
    }
    if let Some(first) = open.first() {
        let m = first.m;
        if open.iter().any(|b| b.m != m) {
            return Err(RunnerError::CheckpointMismatch {
                message: "open batches span multiple tiers".into(),
            });
        }
        state.open_tier = Some((m, open));
    }
    Ok(state)
}

struct CheckpointWriter {
    file: std::fs::File,
}

impl CheckpointWriter {
    fn open(path: &Path, header_needed: bool, meta_line: &str) -> Result<Self, RunnerError> {
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        if header_needed {
            writeln!(file, "rainbow-tnd-checkpoint v1")?;
            writeln!(file, "{meta_line}")?;
        }
        file.flush()?;
        Ok(CheckpointWriter { file })
    }

    fn batch(&mut self, m: usize, index: usize, count: u64, c: &Counts) -> Result<(), RunnerError> {
        writeln!(
            self.file,
            "batch m={m} index={index} count={count} fdiam={} fbridges={} fdeg={} searched={}",
            c.filtered_diameter, c.filtered_bridges, c.filtered_degree, c.searched
        )?;
        self.file.flush()?;
        Ok(())
    }

    fn tier(&mut self, m: usize, classes: u64) -> Result<(), RunnerError> {
        writeln!(self.file, "tier m={m} classes={classes}")?;
        self.file.flush()?;
        Ok(())
    }
}

/// Computes `t(n,d)` with worker-parallel tiers and optional checkpointing.
///
/// The result is identical to [`rainbow_core::extremal::compute_tnd`] on the
/// same source, whatever the worker count or interruption pattern.
pub fn compute_tnd_parallel(
    n: usize,
    d: usize,
    source: &mut dyn GraphSource,
    cfg: &RunnerConfig,
) -> Result<ExtremalResult, RunnerError> {
    if n < 2 || d < 1 || d > n - 1 {
        return Err(ExtremalError::BadParams { n, d }.into());
    }
    let meta_line = format!(
        "meta n={n} d={d} batch={} source={}",
        cfg.batch_size,
        source.describe()
    );
    let mut resume = ResumeState::default();
    let mut writer = match &cfg.checkpoint {
        Some(path) => {
            let existing = match std::fs::read_to_string(path) {
                Ok(text) => text,
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => String::new(),
                Err(e) => return Err(e.into()),
            };
            resume = parse_checkpoint(&existing, &meta_line)?;
            let header_needed = existing.trim().is_empty();
            Some(CheckpointWriter::open(path, header_needed, &meta_line)?)
        }
        None => None,
    };

    let mut tallies: Vec<TierTally> = Vec::new();
    let mut batches_done: u64 = 0;
    for m in (n - 1)..=(n * (n - 1) / 2) {
        if let Some(tally) = resume.tiers_done.get(&m) {
            tallies.push(tally.clone());
            continue;
        }
        let graphs = source.tier(m)?;
        let mut tally = TierTally {
            m,
            classes: graphs.len() as u64,
            ..TierTally::default()
        };
        let mut start_batch = 0usize;
        if let Some((open_m, batches)) = &resume.open_tier {
            if *open_m == m {
                for batch in batches {
                    let lo = batch.index * cfg.batch_size;
                    let hi = (lo + cfg.batch_size).min(graphs.len());
                    if lo >= graphs.len() || batch.count != (hi - lo) as u64 {
                        return Err(RunnerError::CheckpointMismatch {
                            message: format!(
                                "batch {} of tier m={m} does not match the source",
                                batch.index
                            ),
                        });
                    }
                    tally.filtered_diameter += batch.counts[0];
                    tally.filtered_bridges += batch.counts[1];
                    tally.filtered_degree += batch.counts[2];
                    tally.searched += batch.counts[3];
                }
                start_batch = batches.len();
            }
        }
        let total_batches = graphs.len().div_ceil(cfg.batch_size);
        for batch_idx in start_batch..total_batches {
            if let Some(limit) = cfg.batch_limit {
                if batches_done >= limit {
                    return Err(RunnerError::Interrupted { batches_done });
                }
            }
            let lo = batch_idx * cfg.batch_size;
            let hi = (lo + cfg.batch_size).min(graphs.len());
            let (counts, event) = scan_batch(&graphs[lo..hi], d, &cfg.solver, cfg.workers);
            batches_done += 1;
            counts.add_into(&mut tally);
            match event {
                Some((local, Event::Feasible(col))) => {
                    let index = lo + local;
                    tally.searched += 1;
                    tally.feasible_index = Some(index);
                    let graphs_tested: u64 =
                        tallies.iter().map(|t| t.classes).sum::<u64>() + index as u64 + 1;
                    tallies.push(tally);
                    return Ok(ExtremalResult {
                        n,
                        d,
                        t_value: m,
                        witness_graph: graphs[index].clone(),
                        witness_coloring: col,
                        graphs_tested,
                        tallies,
                    });
                }
                Some((_, Event::Budget(assignments))) => {
                    tallies.push(tally);
                    return Err(ExtremalError::BudgetExceeded {
                        assignments,
                        tallies,
                    }
                    .into());
                }
                None => {
                    if let Some(w) = writer.as_mut() {
                        w.batch(m, batch_idx, (hi - lo) as u64, &counts)?;
                    }
                }
            }
        }
        if let Some(w) = writer.as_mut() {
            w.tier(m, graphs.len() as u64)?;
        }
        tallies.push(tally);
    }
    Err(ExtremalError::SourceExhausted { n, d }.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rainbow_core::enumerate::ConnectedClasses;
    use rainbow_core::extremal::{compute_tnd, InternalSource};
    use rainbow_core::graph6;

    fn sequential(n: usize, d: usize) -> ExtremalResult {
        let mut classes = ConnectedClasses::new();
        let mut source = InternalSource::new(n, &mut classes);
        compute_tnd(n, d, &mut source, &SolverConfig::default()).unwrap()
    }

    fn results_match(a: &ExtremalResult, b: &ExtremalResult) {
        assert_eq!(a.t_value, b.t_value);
        assert_eq!(
            graph6::encode(&a.witness_graph),
            graph6::encode(&b.witness_graph)
        );
        assert_eq!(a.witness_coloring, b.witness_coloring);
        assert_eq!(a.tallies, b.tallies);
        assert_eq!(a.graphs_tested, b.graphs_tested);
    }

    #[test]
    fn parallel_matches_sequential_for_any_worker_count() {
        let want = sequential(7, 4);
        for workers in [1, 2, 3, 8] {
            let mut classes = ConnectedClasses::new();
            let mut source = InternalSource::new(7, &mut classes);
            let cfg = RunnerConfig {
                workers,
                batch_size: 5,
                ..RunnerConfig::default()
            };
            let got = compute_tnd_parallel(7, 4, &mut source, &cfg).unwrap();
            results_match(&want, &got);
        }
    }

    #[test]
    fn interrupted_run_resumes_to_the_same_result() {
        let want = sequential(6, 2);
        let dir = tempfile::tempdir().unwrap();
        let ckpt = dir.path().join("t62.log");
        let mut classes = ConnectedClasses::new();

        let mut interrupted = 0;
        loop {
            let mut source = InternalSource::new(6, &mut classes);
            let cfg = RunnerConfig {
                workers: 2,
                batch_size: 4,
                checkpoint: Some(ckpt.clone()),
                batch_limit: Some(2),
                ..RunnerConfig::default()
            };
            match compute_tnd_parallel(6, 2, &mut source, &cfg) {
                Ok(got) => {
                    results_match(&want, &got);
                    break;
                }
                Err(RunnerError::Interrupted { .. }) => {
                    interrupted += 1;
                    assert!(interrupted < 100, "no progress across resumes");
                }
                Err(other) => panic!("unexpected error: {other}"),
            }
        }
        assert!(interrupted > 0, "batch limit never triggered");
        let log = std::fs::read_to_string(&ckpt).unwrap();
        assert!(log.starts_with("rainbow-tnd-checkpoint v1"));
        assert!(log.contains("tier m=5"));
    }

    #[test]
    fn checkpoint_meta_mismatch_is_detected() {
        let dir = tempfile::tempdir().unwrap();
        let ckpt = dir.path().join("t.log");
        std::fs::write(
            &ckpt,
            "rainbow-tnd-checkpoint v1\nmeta n=6 d=3 batch=256 source=internal:n=6\n",
        )
        .unwrap();
        let mut classes = ConnectedClasses::new();
        let mut source = InternalSource::new(6, &mut classes);
        let cfg = RunnerConfig {
            checkpoint: Some(ckpt),
            ..RunnerConfig::default()
        };
        let err = compute_tnd_parallel(6, 2, &mut source, &cfg).unwrap_err();
        assert!(
            matches!(err, RunnerError::CheckpointMismatch { .. }),
            "{err}"
        );
    }

    #[test]
    fn file_source_matches_internal() {
        let mut classes = ConnectedClasses::new();
        let graphs = classes.classes(6).unwrap().to_vec();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("n6.g6");
        let mut text = String::new();
        for g in &graphs {
            text.push_str(&graph6::encode(g));
            text.push('\n');
        }
        std::fs::write(&path, text).unwrap();

        let want = sequential(6, 3);
        let mut source = Graph6FileSource::new(path, 6);
        let got = compute_tnd_parallel(6, 3, &mut source, &RunnerConfig::default()).unwrap();
        results_match(&want, &got);
    }

    #[test]
    fn file_source_rejects_wrong_order() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.g6");
        std::fs::write(&path, "D?{\n").unwrap();
        let mut source = Graph6FileSource::new(path, 6);
        let err = compute_tnd_parallel(6, 3, &mut source, &RunnerConfig::default()).unwrap_err();
        assert!(
            matches!(err, RunnerError::Extremal(ExtremalError::Source(_))),
            "{err}"
        );
    }
}
