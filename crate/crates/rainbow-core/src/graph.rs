//! Simple undirected graphs on up to 32 vertices.
//!
//! Adjacency is stored as one `u32` bitmask per vertex, so adjacency tests
//! are constant time and neighborhood iteration is a bit scan. Graphs are
//! immutable after construction and safe to share across threads.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Hard cap on the vertex count; adjacency rows are single `u32` bitmasks.
pub const MAX_VERTICES: usize = 32;

/// Errors from graph construction and structural queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// Requested order is zero.
    ZeroVertices,
    /// Requested order exceeds [`MAX_VERTICES`].
    TooManyVertices { n: usize },
    /// An edge joins a vertex to itself.
    LoopEdge { v: usize },
    /// An edge endpoint is not in `0..n`.
    VertexOutOfRange { v: usize, n: usize },
    /// The operation requires a connected graph.
    Disconnected,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::ZeroVertices => write!(f, "graph must have at least one vertex"),
            GraphError::TooManyVertices { n } => {
                write!(f, "order {n} exceeds the cap of {MAX_VERTICES} vertices")
            }
            GraphError::LoopEdge { v } => write!(f, "loop edge at vertex {v}"),
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for order {n}")
            }
            GraphError::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) are merged; loops and out-of-range endpoints are errors.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![0u32; n];
        for &(u, v) in pairs {
            if u == v {
                return Err(GraphError::LoopEdge { v: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_adjacency(n, adj))
    }

    /// Builds a graph directly from adjacency bitmasks. The caller guarantees
    /// symmetry and a zero diagonal; this is the internal fast path.
    pub(crate) fn from_adjacency(n: usize, adj: Vec<u32>) -> Graph {
        debug_assert!((1..=MAX_VERTICES).contains(&n) && adj.len() == n);
        debug_assert!((0..n).all(|v| adj[v] & (1 << v) == 0));
        debug_assert!((0..n).all(|v| adj[v] >> n == 0));
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            let mut higher = row >> (u + 1) << (u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                edges.push((u, v));
                higher &= higher - 1;
            }
        }
        Graph { n, adj, edges }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Constant-time adjacency test.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors_mask(&self, v: usize) -> u32 {
        self.adj[v]
    }

    /// Iterates the neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Maximum vertex degree.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Position of edge `{u, v}` in [`Graph::edges`] order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// BFS distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut frontier: u32 = 1 << s;
        let mut seen: u32 = frontier;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next: u32 = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= !seen;
            seen |= next;
            let mut m = next;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                dist[v] = d;
            }
            frontier = next;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        let mut seen: u32 = 1;
        loop {
            let mut next = seen;
            let mut m = seen;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                next |= self.adj[v];
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Maximum over vertex pairs of the shortest-path length; 0 for a single
    /// vertex. Errors on disconnected input.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut best = 0;
        for s in 0..self.n {
            for &d in &self.bfs_distances(s) {
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// Cut edges, in sorted order. One-pass DFS low-link.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let mut ord = vec![usize::MAX; self.n];
        let mut low = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        let mut counter = 0;
        for start in 0..self.n {
            if ord[start] == usize::MAX {
                self.bridge_dfs(
                    start,
                    usize::MAX,
                    &mut counter,
                    &mut ord,
                    &mut low,
                    &mut out,
                );
            }
        }
        out.sort_unstable();
        out
    }

    fn bridge_dfs(
        &self,
        v: usize,
        parent: usize,
        counter: &mut usize,
        ord: &mut [usize],
        low: &mut [usize],
        out: &mut Vec<(usize, usize)>,
    ) {
        ord[v] = *counter;
        low[v] = *counter;
        *counter += 1;
        for w in self.neighbors(v) {
            if ord[w] == usize::MAX {
                self.bridge_dfs(w, v, counter, ord, low, out);
                low[v] = low[v].min(low[w]);
                if low[w] > ord[v] {
                    out.push((v.min(w), v.max(w)));
                }
            } else if w != parent {
                // Simple graph: at most one edge to the parent, so skipping
                // it by vertex id is exact.
                low[v] = low[v].min(ord[w]);
            }
        }
    }

    /// Deletes all bridges and reports the resulting components with their
    /// structural classification. Errors on disconnected input.
    pub fn bridge_decomposition(&self) -> Result<BridgeDecomposition, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let bridges = self.bridges();
        let mut pruned = self.adj.clone();
        for &(u, v) in &bridges {
            pruned[u] &= !(1 << v);
            pruned[v] &= !(1 << u);
        }
        let mut assigned: u32 = 0;
        let mut components = Vec::new();
        for s in 0..self.n {
            if assigned & (1 << s) != 0 {
                continue;
            }
            let mut comp: u32 = 1 << s;
            loop {
                let mut next = comp;
                let mut m = comp;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    next |= pruned[v];
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            assigned |= comp;
            components.push(self.component_info(comp));
        }
        Ok(BridgeDecomposition {
            bridges,
            components,
        })
    }

    fn component_info(&self, mask: u32) -> BridgeComponent {
        let vertices: Vec<usize> = BitIter(mask).collect();
        let sub = self.induced(&vertices);
        let order = vertices.len();
        let diameter = sub.diameter().unwrap_or(0);
        let complete = sub.edge_count() == order * (order - 1) / 2;
        let bridgeless = sub.bridges().is_empty();
        BridgeComponent {
            vertices,
            diameter,
            edge_count: sub.edge_count(),
            complete,
            bridgeless,
        }
    }

    /// Subgraph induced on `vertices`, relabeled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u32; k];
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                if pos[w] != usize::MAX {
                    adj[i] |= 1 << pos[w];
                }
            }
        }
        Graph::from_adjacency(k, adj)
    }

    /// Extends the graph by one new vertex adjacent to the set in `mask`.
    pub(crate) fn with_extra_vertex(&self, mask: u32) -> Graph {
        debug_assert!(self.n < MAX_VERTICES && mask >> self.n == 0);
        let mut adj = self.adj.clone();
        adj.push(mask);
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            adj[v] |= 1 << self.n;
        }
        Graph::from_adjacency(self.n + 1, adj)
    }

    /// Relabels vertices: new vertex `i` is old vertex `perm[i]`.
    pub(crate) fn relabeled(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut old_to_new = [0usize; MAX_VERTICES];
        for (new, &old) in perm.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut adj = vec![0u32; self.n];
        for (new, &old) in perm.iter().enumerate() {
            for w in self.neighbors(old) {
                adj[new] |= 1 << old_to_new[w];
            }
        }
        Graph::from_adjacency(self.n, adj)
    }

    /// Graph with edge `{u, v}` removed; panics if the edge is absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        assert!(self.has_edge(u, v), "edge ({u}, {v}) not present");
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Graph::from_adjacency(self.n, adj)
    }
}

struct BitIter(u32);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// One component of the graph after bridge deletion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeComponent {
    /// Vertex ids (in the original graph), ascending.
    pub vertices: Vec<usize>,
    /// Diameter of the induced subgraph (0 for a single vertex).
    pub diameter: usize,
    /// Edge count of the induced subgraph.
    pub edge_count: usize,
    /// Whether the induced subgraph is complete.
    pub complete: bool,
    /// Whether the induced subgraph has no bridges of its own.
    pub bridgeless: bool,
}

impl BridgeComponent {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.vertices.len() == 1
    }
}

/// Bridges of a connected graph together with the components left after
/// deleting them. The components partition the vertex set, and every
/// non-trivial component is internally bridgeless.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeDecomposition {
    pub bridges: Vec<(usize, usize)>,
    pub components: Vec<BridgeComponent>,
}

impl BridgeDecomposition {
    pub fn bridge_count(&self) -> usize {
        self.bridges.len()
    }

    pub fn trivial_count(&self) -> usize {
        self.components.iter().filter(|c| c.is_trivial()).count()
    }
}
