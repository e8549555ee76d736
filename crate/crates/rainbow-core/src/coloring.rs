//! Edge colorings: total maps from edges to colors `1..=k`.

use crate::graph::Graph;
use alloc::vec::Vec;
use core::fmt;

/// Errors from coloring construction and validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringError {
    LoopEdge {
        v: usize,
    },
    DuplicateEdge {
        edge: (usize, usize),
    },
    /// Color outside `1..=k`.
    ColorOutOfRange {
        edge: (usize, usize),
        color: usize,
        k: usize,
    },
    /// The coloring mentions an edge the graph does not have.
    UnknownEdge {
        edge: (usize, usize),
    },
    /// The coloring is missing an edge of the graph.
    MissingEdge {
        edge: (usize, usize),
    },
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::LoopEdge { v } => write!(f, "loop edge at vertex {v}"),
            ColoringError::DuplicateEdge { edge } => {
                write!(f, "edge ({}, {}) colored twice", edge.0, edge.1)
            }
            ColoringError::ColorOutOfRange { edge, color, k } => write!(
                f,
                "color {color} on edge ({}, {}) outside 1..={k}",
                edge.0, edge.1
            ),
            ColoringError::UnknownEdge { edge } => {
                write!(f, "edge ({}, {}) is not in the graph", edge.0, edge.1)
            }
            ColoringError::MissingEdge { edge } => {
                write!(f, "graph edge ({}, {}) has no color", edge.0, edge.1)
            }
        }
    }
}

impl core::error::Error for ColoringError {}

/// A total edge coloring with colors `1..=k`. Unused colors are permitted.
///
/// Assignments are keyed by normalized `(u, v)` pairs with `u < v`, kept
/// sorted, so lookups are binary searches and iteration order is stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    k: usize,
    assign: Vec<((usize, usize), usize)>,
}

impl EdgeColoring {
    /// Builds a coloring from `(edge, color)` pairs. Edges are normalized to
    /// `u < v`; duplicates, loops, and colors outside `1..=k` are rejected.
    pub fn new(
        k: usize,
        pairs: impl IntoIterator<Item = ((usize, usize), usize)>,
    ) -> Result<EdgeColoring, ColoringError> {
        let mut assign: Vec<((usize, usize), usize)> = Vec::new();
        for ((u, v), c) in pairs {
            if u == v {
                return Err(ColoringError::LoopEdge { v: u });
            }
            let edge = (u.min(v), u.max(v));
            if c == 0 || c > k {
                return Err(ColoringError::ColorOutOfRange { edge, color: c, k });
            }
            assign.push((edge, c));
        }
        assign.sort_unstable();
        for w in assign.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(ColoringError::DuplicateEdge { edge: w[0].0 });
            }
        }
        Ok(EdgeColoring { k, assign })
    }

    /// Declared color count.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of colored edges.
    pub fn len(&self) -> usize {
        self.assign.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assign.is_empty()
    }

    /// Color of edge `{u, v}`, if assigned.
    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.assign
            .binary_search_by_key(&key, |&(e, _)| e)
            .ok()
            .map(|i| self.assign[i].1)
    }

    /// Iterates `((u, v), color)` with `u < v`, ascending by edge.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.assign.iter().copied()
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut colors: Vec<usize> = self.assign.iter().map(|&(_, c)| c).collect();
        colors.sort_unstable();
        colors.dedup();
        colors.len()
    }

    /// Checks the coloring is total on `g`: every graph edge colored, no
    /// extra edges.
    pub fn check_total_on(&self, g: &Graph) -> Result<(), ColoringError> {
        for &(edge, _) in &self.assign {
            if !g.has_edge(edge.0, edge.1) {
                return Err(ColoringError::UnknownEdge { edge });
            }
        }
        if self.assign.len() != g.edge_count() {
            for &edge in g.edges() {
                if self.color_of(edge.0, edge.1).is_none() {
                    return Err(ColoringError::MissingEdge { edge });
                }
            }
        }
        Ok(())
    }

    /// Colors indexed by `g`'s edge order; errors unless total on `g`.
    pub fn indexed_for(&self, g: &Graph) -> Result<Vec<usize>, ColoringError> {
        self.check_total_on(g)?;
        Ok(g.edges()
            .iter()
            .map(|&(u, v)| self.color_of(u, v).expect("totality checked"))
            .collect())
    }
}
