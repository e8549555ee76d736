//! Exact rainbow connection number via backtracking over edge colorings.
//!
//! Color-permutation symmetry is broken canonically: edges are assigned in a
//! fixed order (bridges first, then BFS edge order from vertex 0) and the
//! next edge may only use colors up to one past the maximum used so far.
//! Bridges are pre-colored with pairwise distinct colors, which any rainbow
//! connected coloring must do anyway. After each assignment, vertex pairs
//! incident to the touched edge are tested for a "possibly rainbow" path —
//! a path whose fully-colored edges are pairwise distinct and whose total
//! length fits in the palette; if none remains, the branch is cut.

use crate::coloring::EdgeColoring;
use crate::graph::Graph;
use crate::verify::rainbow_path_indexed;
use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Widest palette the search can represent (color sets are `u32` masks).
pub const MAX_SOLVER_COLORS: usize = 32;

/// Search limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of edge-color assignments before the search gives up
    /// with an explicit inconclusive error.
    pub budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: 100_000_000,
        }
    }
}

/// Search effort counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Edge-color assignments explored.
    pub assignments: u64,
    /// Complete colorings that reached the full connectivity check.
    pub colorings_tested: u64,
    /// Wall time, filled in by std callers; 0 when untimed.
    pub elapsed_micros: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: SearchStats) {
        self.assignments += other.assignments;
        self.colorings_tested += other.colorings_tested;
    }
}

/// Errors from the solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolverError {
    Disconnected,
    /// Lower bounds need at least two vertices.
    GraphTooSmall,
    KOutOfRange {
        k: usize,
    },
    KMaxTooSmall {
        k_max: usize,
        lower_bound: usize,
    },
    /// The assignment budget ran out: explicitly inconclusive, never a
    /// wrong answer.
    BudgetExceeded {
        assignments: u64,
    },
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::Disconnected => write!(f, "graph is not connected"),
            SolverError::GraphTooSmall => write!(f, "need at least two vertices"),
            SolverError::KOutOfRange { k } => {
                write!(f, "color count {k} outside 1..={MAX_SOLVER_COLORS}")
            }
            SolverError::KMaxTooSmall { k_max, lower_bound } => {
                write!(f, "k_max {k_max} is below the lower bound {lower_bound}")
            }
            SolverError::BudgetExceeded { assignments } => {
                write!(
                    f,
                    "search budget exhausted after {assignments} assignments (inconclusive)"
                )
            }
        }
    }
}

impl core::error::Error for SolverError {}

/// Exact result with witness and effort counters.
#[derive(Clone, Debug)]
pub struct RcResult {
    pub rc: usize,
    pub witness: EdgeColoring,
    pub stats: SearchStats,
    /// Color counts proved infeasible on the way up (the exhaustion record
    /// backing minimality).
    pub infeasible_below: Vec<usize>,
}

/// `max(diameter, bridge count)` — never exceeds the true rc.
pub fn rc_lower_bound(g: &Graph) -> Result<usize, SolverError> {
    if g.n() < 2 {
        return Err(SolverError::GraphTooSmall);
    }
    let diam = g.diameter().map_err(|_| SolverError::Disconnected)?;
    Ok(diam.max(g.bridges().len()))
}

/// Searches for a rainbow connected coloring with at most `k` colors.
///
/// `Ok(Some(..))` carries a witness; `Ok(None)` is a definitive absence
/// (the search is exhaustive up to color-permutation symmetry). Budget
/// exhaustion is an explicit error, never a silent wrong answer.
pub fn is_k_rainbow_connectable(
    g: &Graph,
    k: usize,
    cfg: &SolverConfig,
) -> Result<(Option<EdgeColoring>, SearchStats), SolverError> {
    if k == 0 || k > MAX_SOLVER_COLORS {
        return Err(SolverError::KOutOfRange { k });
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let mut stats = SearchStats::default();
    if g.n() == 1 {
        return Ok((
            Some(EdgeColoring::new(k, []).expect("empty coloring")),
            stats,
        ));
    }
    // rc >= diameter and rc >= bridge count; below either, skip the search.
    let diam = g.diameter().expect("connected");
    let bridges = g.bridges();
    if k < diam || k < bridges.len() {
        return Ok((None, stats));
    }

    let mut search = Search::new(g, k, &bridges, cfg.budget);
    let found = search.run()?;
    stats.absorb(search.stats);
    match found {
        Some(colors) => {
            let coloring =
                EdgeColoring::new(k, g.edges().iter().copied().zip(colors.iter().copied()))
                    .expect("search emits colors in 1..=k");
            Ok((Some(coloring), stats))
        }
        None => Ok((None, stats)),
    }
}

/// Computes `rc(g)` exactly: tries `k` upward from the lower bound and
/// returns the first feasible color count with its witness.
pub fn rc_exact(g: &Graph, k_max: usize, cfg: &SolverConfig) -> Result<RcResult, SolverError> {
    let lb = rc_lower_bound(g)?;
    if k_max < lb {
        return Err(SolverError::KMaxTooSmall {
            k_max,
            lower_bound: lb,
        });
    }
    let mut stats = SearchStats::default();
    let mut infeasible_below = Vec::new();
    for k in lb..=k_max {
        let (found, s) = is_k_rainbow_connectable(g, k, cfg)?;
        stats.absorb(s);
        match found {
            Some(witness) => {
                return Ok(RcResult {
                    rc: k,
                    witness,
                    stats,
                    infeasible_below,
                });
            }
            None => infeasible_below.push(k),
        }
    }
    Err(SolverError::KMaxTooSmall {
        k_max,
        lower_bound: k_max + 1,
    })
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    budget: u64,
    stats: SearchStats,
    /// Color per edge index; 0 = unassigned.
    colors: Vec<usize>,
    /// Edge indices in assignment order: bridges first, then BFS order.
    order: Vec<usize>,
    fixed: usize,
    // Scratch for the pair feasibility BFS, reused across calls.
    visited: Vec<Vec<(u32, u8)>>,
    queue: VecDeque<(u8, u32, u8)>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, bridges: &[(usize, usize)], budget: u64) -> Self {
        let m = g.edge_count();
        // BFS edge order from vertex 0: edges appear when their first
        // endpoint is dequeued, neighbors scanned in ascending order.
        let mut order: Vec<usize> = Vec::with_capacity(m);
        let mut seen_edge = vec![false; m];
        let mut seen_vertex = vec![false; g.n()];
        let mut queue = VecDeque::new();
        seen_vertex[0] = true;
        queue.push_back(0);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                let e = g.edge_index(u, v).expect("neighbor edge");
                if !seen_edge[e] {
                    seen_edge[e] = true;
                    order.push(e);
                }
                if !seen_vertex[v] {
                    seen_vertex[v] = true;
                    queue.push_back(v);
                }
            }
        }
        debug_assert_eq!(order.len(), m);
        // Stable-partition bridges to the front.
        let is_bridge: Vec<bool> = {
            let mut flags = vec![false; m];
            for &(u, v) in bridges {
                flags[g.edge_index(u, v).expect("bridge edge")] = true;
            }
            flags
        };
        let mut fronted: Vec<usize> = order.iter().copied().filter(|&e| is_bridge[e]).collect();
        fronted.extend(order.iter().copied().filter(|&e| !is_bridge[e]));

        // Bridges get forced pairwise-distinct colors 1..=b.
        let mut colors = vec![0usize; m];
        for (i, &e) in fronted.iter().take(bridges.len()).enumerate() {
            colors[e] = i + 1;
        }
        Search {
            g,
            k,
            budget,
            stats: SearchStats::default(),
            colors,
            order: fronted,
            fixed: bridges.len(),
            visited: vec![Vec::new(); g.n()],
            queue: VecDeque::new(),
        }
    }

    fn run(&mut self) -> Result<Option<Vec<usize>>, SolverError> {
        // The forced bridge colors must themselves survive the pair check.
        if self.fixed > 0 {
            for pos in 0..self.fixed {
                let (u, v) = self.g.edges()[self.order[pos]];
                if !self.pairs_still_open(u, v) {
                    return Ok(None);
                }
            }
        }
        let max_used = self.fixed;
        if self.dfs(self.fixed, max_used)? {
            Ok(Some(self.colors.clone()))
        } else {
            Ok(None)
        }
    }

    fn dfs(&mut self, pos: usize, max_used: usize) -> Result<bool, SolverError> {
        if pos == self.order.len() {
            self.stats.colorings_tested += 1;
            return Ok(self.all_pairs_rainbow());
        }
        let e = self.order[pos];
        let (u, v) = self.g.edges()[e];
        // Canonical rule: at most one color past the maximum used so far.
        let limit = self.k.min(max_used + 1);
        for c in 1..=limit {
            self.stats.assignments += 1;
            if self.stats.assignments > self.budget {
                return Err(SolverError::BudgetExceeded {
                    assignments: self.stats.assignments,
                });
            }
            self.colors[e] = c;
            if self.pairs_still_open(u, v) && self.dfs(pos + 1, max_used.max(c))? {
                return Ok(true);
            }
            self.colors[e] = 0;
        }
        Ok(false)
    }

    /// Checks every pair incident to `u` or `v` still admits a possibly
    /// rainbow path under the partial coloring.
    fn pairs_still_open(&mut self, u: usize, v: usize) -> bool {
        for x in 0..self.g.n() {
            if x != u && !self.pair_possibly_rainbow(u, x) {
                return false;
            }
            if x != v && x != u && !self.pair_possibly_rainbow(v, x) {
                return false;
            }
        }
        true
    }

    /// BFS over `(vertex, colored-color-set, path-length)` states. Uncolored
    /// edges extend the length without claiming a color; a path is viable if
    /// its colored edges are distinct and its length fits in `k`.
    fn pair_possibly_rainbow(&mut self, s: usize, t: usize) -> bool {
        for lists in &mut self.visited {
            lists.clear();
        }
        self.queue.clear();
        self.visited[s].push((0, 0));
        self.queue.push_back((s as u8, 0, 0));
        while let Some((v, mask, len)) = self.queue.pop_front() {
            let v = v as usize;
            for w in self.g.neighbors(v) {
                let e = self.g.edge_index(v, w).expect("neighbor edge");
                let c = self.colors[e];
                let new_mask = if c == 0 {
                    mask
                } else {
                    let bit = 1u32 << (c - 1);
                    if mask & bit != 0 {
                        continue;
                    }
                    mask | bit
                };
                let new_len = len + 1;
                if new_len as usize > self.k {
                    continue;
                }
                if w == t {
                    return true;
                }
                if self.visited[w]
                    .iter()
                    .any(|&(m, l)| m & !new_mask == 0 && l <= new_len)
                {
                    continue;
                }
                self.visited[w].retain(|&(m, l)| new_mask & !m != 0 || l < new_len);
                self.visited[w].push((new_mask, new_len));
                self.queue.push_back((w as u8, new_mask, new_len));
            }
        }
        false
    }

    fn all_pairs_rainbow(&self) -> bool {
        for s in 0..self.g.n() {
            for t in s + 1..self.g.n() {
                if rainbow_path_indexed(self.g, &self.colors, s, t).is_none() {
                    return false;
                }
            }
        }
        true
    }
}
