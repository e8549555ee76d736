//! Named graphs with known rainbow connected colorings.
//!
//! The central construction glues `q` cycles of length `d` at a single hub
//! vertex and attaches pendant edges there, meeting the minimum edge count
//! achievable for `rc <= d` from above: `n - 2 + ceil(n / (d-1))` edges on
//! `n` vertices. Each cycle is colored `1..=d` around, so hub-incident cycle
//! edges carry `1` and `d`; pendants reuse middle colors.

use crate::coloring::EdgeColoring;
use crate::graph::{Graph, GraphError};
use crate::verify::{is_rainbow_connected, ConnectivityCheck};
use alloc::vec::Vec;
use core::fmt;

/// Errors from graph construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructError {
    /// The bouquet needs `3 <= d < ceil(n/2)`.
    DOutOfRange {
        n: usize,
        d: usize,
    },
    /// Named graph below its minimum order.
    OrderTooSmall {
        kind: NamedKind,
        n: usize,
        min: usize,
    },
    /// Cycle edge list has the wrong length.
    WrongCycleLength {
        expected: usize,
        got: usize,
    },
    /// Cycle edge list is not a closed walk.
    NotAClosedWalk,
    /// No pendant color assignment verified (not expected to occur).
    NoPendantAssignment {
        n: usize,
        d: usize,
    },
    Graph(GraphError),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::DOutOfRange { n, d } => {
                write!(f, "need 3 <= d < ceil(n/2); got n = {n}, d = {d}")
            }
            ConstructError::OrderTooSmall { kind, n, min } => {
                write!(f, "{kind:?} graph needs at least {min} vertices; got {n}")
            }
            ConstructError::WrongCycleLength { expected, got } => {
                write!(f, "cycle edge list has {got} edges; expected {expected}")
            }
            ConstructError::NotAClosedWalk => write!(f, "edge list is not a closed walk"),
            ConstructError::NoPendantAssignment { n, d } => {
                write!(
                    f,
                    "no pendant color assignment verified for n = {n}, d = {d}"
                )
            }
            ConstructError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ConstructError {}

impl From<GraphError> for ConstructError {
    fn from(e: GraphError) -> Self {
        ConstructError::Graph(e)
    }
}

/// Shape parameters of a cycle bouquet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BouquetPlan {
    pub n: usize,
    pub d: usize,
    /// Number of cycles glued at the hub: `ceil(n / (d-1)) - 1`.
    pub q: usize,
    /// Pendant leaves at the hub.
    pub pendant_count: usize,
    pub hub: usize,
}

/// Builds the cycle bouquet of order `n` for target bound `d`, with its
/// `d`-color rainbow connected coloring.
///
/// Writing `n = q(d-1) + r` with `0 < r <= d-1`, the graph is `q` cycles of
/// length `d` sharing a hub plus `r - 1` pendant leaves at the hub: exactly
/// `n` vertices and `n - 2 + ceil(n / (d-1))` edges. (Attaching `r` leaves,
/// as the count `r` might suggest, would overshoot the order by one and
/// break the edge count; `r - 1` makes both exact.)
pub fn build_cycle_bouquet(
    n: usize,
    d: usize,
) -> Result<(Graph, EdgeColoring, BouquetPlan), ConstructError> {
    if d < 3 || d >= n.div_ceil(2) {
        return Err(ConstructError::DOutOfRange { n, d });
    }
    let q = n.div_ceil(d - 1) - 1;
    let r = n - q * (d - 1);
    debug_assert!((1..d).contains(&r));
    let pendant_count = r - 1;
    let plan = BouquetPlan {
        n,
        d,
        q,
        pendant_count,
        hub: 0,
    };

    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(q * d + pendant_count);
    let mut colors: Vec<usize> = Vec::with_capacity(q * d + pendant_count);
    for i in 0..q {
        let base = 1 + i * (d - 1);
        // Walk hub -> base -> base+1 -> ... -> hub; ascending ids fix the
        // orientation.
        let mut walk: Vec<(usize, usize)> = Vec::with_capacity(d);
        walk.push((plan.hub, base));
        for j in 0..d - 2 {
            walk.push((base + j, base + j + 1));
        }
        walk.push((base + d - 2, plan.hub));
        let cycle_colors = two_arc_cycle_colors(&walk, d)?;
        pairs.extend(walk);
        colors.extend(cycle_colors);
    }
    let pendant_base = 1 + q * (d - 1);
    for j in 0..pendant_count {
        pairs.push((plan.hub, pendant_base + j));
        colors.push(2 + j); // distinct already-used colors, ascending from 2
    }

    let graph = Graph::from_edge_list(n, &pairs)?;
    debug_assert_eq!(graph.n(), n);
    debug_assert_eq!(graph.edge_count(), n - 2 + n.div_ceil(d - 1));

    let coloring = EdgeColoring::new(d, pairs.iter().copied().zip(colors.iter().copied()))
        .expect("colors lie in 1..=d");
    if verifies(&graph, &coloring) {
        return Ok((graph, coloring, plan));
    }
    // Fallback: exhaust pendant color assignments over the used palette.
    let mut assignment = alloc::vec![1usize; pendant_count];
    loop {
        let mut alt = colors.clone();
        let base_idx = q * d;
        alt[base_idx..base_idx + pendant_count].copy_from_slice(&assignment);
        let candidate = EdgeColoring::new(d, pairs.iter().copied().zip(alt.iter().copied()))
            .expect("colors lie in 1..=d");
        if verifies(&graph, &candidate) {
            return Ok((graph, candidate, plan));
        }
        // Odometer over {1..=d}^pendant_count.
        let mut pos = 0;
        loop {
            if pos == pendant_count {
                return Err(ConstructError::NoPendantAssignment { n, d });
            }
            if assignment[pos] < d {
                assignment[pos] += 1;
                break;
            }
            assignment[pos] = 1;
            pos += 1;
        }
    }
}

fn verifies(g: &Graph, col: &EdgeColoring) -> bool {
    matches!(
        is_rainbow_connected(g, col),
        Ok(ConnectivityCheck::RainbowConnected(_))
    )
}

/// Colors a hub cycle of length `d`: walking one way from the hub the edges
/// get `1, 2, ..., ceil(d/2)`, walking the other way `d, d-1, ...`, so the
/// two arcs meet mid-cycle and all `d` colors appear exactly once.
///
/// `cycle_edges` must be a closed walk of `d` oriented edges starting and
/// ending at the hub; the returned colors align with it (which works out to
/// color `i + 1` for the `i`-th walk edge).
pub fn two_arc_cycle_colors(
    cycle_edges: &[(usize, usize)],
    d: usize,
) -> Result<Vec<usize>, ConstructError> {
    if cycle_edges.len() != d {
        return Err(ConstructError::WrongCycleLength {
            expected: d,
            got: cycle_edges.len(),
        });
    }
    for w in cycle_edges.windows(2) {
        if w[0].1 != w[1].0 {
            return Err(ConstructError::NotAClosedWalk);
        }
    }
    if cycle_edges[0].0 != cycle_edges[d - 1].1 {
        return Err(ConstructError::NotAClosedWalk);
    }
    Ok((1..=d).collect())
}

/// Families with standard rainbow connected colorings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedKind {
    Path,
    Cycle,
    Complete,
    Star,
}

/// Builds a named graph with a standard rainbow connected coloring: paths
/// and stars color every edge distinctly, complete graphs use one color,
/// cycles use the two-arc scheme with `d = n`.
pub fn build_named(kind: NamedKind, n: usize) -> Result<(Graph, EdgeColoring), ConstructError> {
    let min = match kind {
        NamedKind::Cycle => 3,
        _ => 1,
    };
    if n < min {
        return Err(ConstructError::OrderTooSmall { kind, n, min });
    }
    let (pairs, colors, k): (Vec<(usize, usize)>, Vec<usize>, usize) = match kind {
        NamedKind::Path => {
            let pairs: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            let colors: Vec<_> = (1..n).collect();
            (pairs, colors, n.saturating_sub(1))
        }
        NamedKind::Cycle => {
            let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let colors = two_arc_cycle_colors(&pairs, n)?;
            (pairs, colors, n)
        }
        NamedKind::Complete => {
            let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
            for u in 0..n {
                for v in u + 1..n {
                    pairs.push((u, v));
                }
            }
            let colors = alloc::vec![1usize; pairs.len()];
            (pairs, colors, 1)
        }
        NamedKind::Star => {
            let pairs: Vec<_> = (1..n).map(|v| (0, v)).collect();
            let colors: Vec<_> = (1..n).collect();
            (pairs, colors, n.saturating_sub(1))
        }
    };
    let graph = Graph::from_edge_list(n, &pairs)?;
    let k = k.max(1);
    let coloring = EdgeColoring::new(k, pairs.into_iter().zip(colors))
        .expect("standard colorings are in range");
    Ok((graph, coloring))
}
