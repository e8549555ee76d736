//! Exact `t(n,d)` by edge-count-ascending exhaustive search.
//!
//! Tiers are scanned in ascending edge count; within a tier, classes are
//! tested in canonical order. A graph is skipped outright when a sound
//! lower bound already rules it out (diameter, bridge count, or the
//! max-degree floor at `d = 2`); otherwise the solver decides `rc <= d`
//! directly — full `rc` is never needed. The first feasible graph fixes
//! `t(n,d)`, and exhaustion of every earlier tier backs the minimality
//! claim.

use crate::bounds::two_rainbow_min_max_degree;
use crate::coloring::EdgeColoring;
use crate::enumerate::{ConnectedClasses, EnumerateError};
use crate::graph::Graph;
use crate::solver::{is_k_rainbow_connectable, SolverConfig, SolverError};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Why a graph was skipped without running the coloring search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterReason {
    /// Diameter exceeds `d` (rc >= diameter).
    Diameter,
    /// More than `d` bridges (rc >= bridge count).
    Bridges,
    /// At `d = 2`: maximum degree below `ceil(sqrt(n-1))`.
    MaxDegree,
}

/// Outcome of testing one graph for `rc <= d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphVerdict {
    Filtered(FilterReason),
    Feasible(EdgeColoring),
    Infeasible,
}

/// Per-edge-count scan statistics.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TierTally {
    pub m: usize,
    pub classes: u64,
    pub filtered_diameter: u64,
    pub filtered_bridges: u64,
    pub filtered_degree: u64,
    /// Classes that reached the coloring search.
    pub searched: u64,
    /// Index (in tier order) of the first feasible class, if any.
    pub feasible_index: Option<usize>,
}

impl TierTally {
    pub fn record(&mut self, verdict: &GraphVerdict, index: usize) {
        match verdict {
            GraphVerdict::Filtered(FilterReason::Diameter) => self.filtered_diameter += 1,
            GraphVerdict::Filtered(FilterReason::Bridges) => self.filtered_bridges += 1,
            GraphVerdict::Filtered(FilterReason::MaxDegree) => self.filtered_degree += 1,
            GraphVerdict::Infeasible => self.searched += 1,
            GraphVerdict::Feasible(_) => {
                self.searched += 1;
                self.feasible_index = Some(index);
            }
        }
    }
}

/// Exact extremal value with the canonically-first witness.
#[derive(Clone, Debug)]
pub struct ExtremalResult {
    pub n: usize,
    pub d: usize,
    /// Minimum edges over order-`n` graphs with `rc <= d`.
    pub t_value: usize,
    pub witness_graph: Graph,
    pub witness_coloring: EdgeColoring,
    /// Classes examined across all tiers, filtered ones included.
    pub graphs_tested: u64,
    pub tallies: Vec<TierTally>,
}

/// Errors from the extremal search.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtremalError {
    BadParams {
        n: usize,
        d: usize,
    },
    /// Solver budget ran out; partial tallies are preserved.
    BudgetExceeded {
        assignments: u64,
        tallies: Vec<TierTally>,
    },
    /// Every tier exhausted with no feasible graph (possible only with an
    /// incomplete external source).
    SourceExhausted {
        n: usize,
        d: usize,
    },
    Enumerate(EnumerateError),
    Solver(SolverError),
    /// External source failure, reported by the std driver.
    Source(String),
}

impl fmt::Display for ExtremalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremalError::BadParams { n, d } => {
                write!(f, "need 2 <= n and 1 <= d <= n-1; got n = {n}, d = {d}")
            }
            ExtremalError::BudgetExceeded { assignments, .. } => {
                write!(
                    f,
                    "search budget exhausted after {assignments} assignments (inconclusive)"
                )
            }
            ExtremalError::SourceExhausted { n, d } => {
                write!(
                    f,
                    "source exhausted without a feasible graph for n = {n}, d = {d}"
                )
            }
            ExtremalError::Enumerate(e) => write!(f, "{e}"),
            ExtremalError::Solver(e) => write!(f, "{e}"),
            ExtremalError::Source(msg) => write!(f, "source error: {msg}"),
        }
    }
}

impl core::error::Error for ExtremalError {}

impl From<EnumerateError> for ExtremalError {
    fn from(e: EnumerateError) -> Self {
        ExtremalError::Enumerate(e)
    }
}

/// Supplies the isomorphism classes to test, grouped by edge count.
///
/// Implementations must yield each class once, in a deterministic order,
/// containing only connected graphs of the declared order.
pub trait GraphSource {
    fn order(&self) -> usize;
    /// Short description for logs and checkpoints.
    fn describe(&self) -> String;
    fn tier(&mut self, m: usize) -> Result<Vec<Graph>, ExtremalError>;
}

/// Internal generator-backed source.
pub struct InternalSource<'a> {
    n: usize,
    classes: &'a mut ConnectedClasses,
}

impl<'a> InternalSource<'a> {
    pub fn new(n: usize, classes: &'a mut ConnectedClasses) -> Self {
        InternalSource { n, classes }
    }
}

impl GraphSource for InternalSource<'_> {
    fn order(&self) -> usize {
        self.n
    }

    fn describe(&self) -> String {
        format!("internal:n={}", self.n)
    }

    fn tier(&mut self, m: usize) -> Result<Vec<Graph>, ExtremalError> {
        Ok(self.classes.tier(self.n, m)?)
    }
}

/// Tests one connected graph for `rc <= d`: sound pre-filters first, then
/// the exhaustive coloring search.
pub fn classify_graph(
    g: &Graph,
    d: usize,
    cfg: &SolverConfig,
) -> Result<GraphVerdict, SolverError> {
    let diam = g.diameter().map_err(|_| SolverError::Disconnected)?;
    if diam > d {
        return Ok(GraphVerdict::Filtered(FilterReason::Diameter));
    }
    if g.bridges().len() > d {
        return Ok(GraphVerdict::Filtered(FilterReason::Bridges));
    }
    if d == 2 && g.n() >= 2 {
        let floor = two_rainbow_min_max_degree(g.n()).expect("n >= 2");
        if (g.max_degree() as u64) < floor {
            return Ok(GraphVerdict::Filtered(FilterReason::MaxDegree));
        }
    }
    let (found, _) = is_k_rainbow_connectable(g, d, cfg)?;
    Ok(match found {
        Some(col) => GraphVerdict::Feasible(col),
        None => GraphVerdict::Infeasible,
    })
}

/// Computes `t(n,d)` exactly from a graph source.
pub fn compute_tnd(
    n: usize,
    d: usize,
    source: &mut dyn GraphSource,
    cfg: &SolverConfig,
) -> Result<ExtremalResult, ExtremalError> {
    if n < 2 || d < 1 || d > n - 1 {
        return Err(ExtremalError::BadParams { n, d });
    }
    debug_assert_eq!(source.order(), n);
    let mut tallies: Vec<TierTally> = Vec::new();
    let mut graphs_tested: u64 = 0;
    for m in (n - 1)..=(n * (n - 1) / 2) {
        let graphs = source.tier(m)?;
        let mut tally = TierTally {
            m,
            classes: graphs.len() as u64,
            ..TierTally::default()
        };
        for (index, g) in graphs.iter().enumerate() {
            graphs_tested += 1;
            let verdict = match classify_graph(g, d, cfg) {
                Ok(v) => v,
                Err(SolverError::BudgetExceeded { assignments }) => {
                    tallies.push(tally);
                    return Err(ExtremalError::BudgetExceeded {
                        assignments,
                        tallies,
                    });
                }
                Err(e) => return Err(ExtremalError::Solver(e)),
            };
            tally.record(&verdict, index);
            if let GraphVerdict::Feasible(col) = verdict {
                tallies.push(tally);
                return Ok(ExtremalResult {
                    n,
                    d,
                    t_value: m,
                    witness_graph: g.clone(),
                    witness_coloring: col,
                    graphs_tested,
                    tallies,
                });
            }
        }
        tallies.push(tally);
    }
    Err(ExtremalError::SourceExhausted { n, d })
}

/// One cell of a `t(n,d)` table.
#[derive(Clone, Debug)]
pub struct TableCell {
    pub n: usize,
    pub d: usize,
    pub t: Option<usize>,
    pub error: Option<String>,
    pub sandwich: Option<crate::bounds::SandwichOutcome>,
    /// `max(n-1, decomposition lower)` when the sandwich range applies.
    pub lower: Option<u64>,
    pub upper: Option<u64>,
    pub tallies: Vec<TierTally>,
}

/// Computes a table of `t(n,d)` cells over inclusive ranges. Per-cell
/// failures become error markers; the table is still emitted.
pub fn tnd_table(
    n_range: (usize, usize),
    d_range: (usize, usize),
    classes: &mut ConnectedClasses,
    cfg: &SolverConfig,
) -> Vec<TableCell> {
    let mut cells = Vec::new();
    for n in n_range.0..=n_range.1 {
        for d in d_range.0..=d_range.1.min(n.saturating_sub(1)) {
            let mut source = InternalSource::new(n, classes);
            let cell = match compute_tnd(n, d, &mut source, cfg) {
                Ok(res) => {
                    let sandwich = crate::bounds::sandwich_check(n, d, res.t_value as u64).ok();
                    let lower = crate::bounds::decomposition_lower(n, d)
                        .ok()
                        .map(|v| v.max((n - 1) as u64));
                    let upper = crate::bounds::construction_upper(n, d).ok();
                    TableCell {
                        n,
                        d,
                        t: Some(res.t_value),
                        error: None,
                        sandwich,
                        lower,
                        upper,
                        tallies: res.tallies,
                    }
                }
                Err(e) => TableCell {
                    n,
                    d,
                    t: None,
                    error: Some(format!("{e}")),
                    sandwich: None,
                    lower: None,
                    upper: None,
                    tallies: Vec::new(),
                },
            };
            cells.push(cell);
        }
    }
    cells
}
