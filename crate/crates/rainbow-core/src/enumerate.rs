//! Isomorph-free enumeration of connected graphs, and canonical forms.
//!
//! Canonical labeling runs equitable partition refinement seeded by the
//! degree partition, then backtracks over individualizations of the first
//! non-singleton cell; the smallest adjacency bitstring over the visited
//! labelings is canonical. Twin vertices (equal neighborhoods outside the
//! pair) are automorphic, so only one per twin class is branched on.
//!
//! Connected classes are generated level by level: every connected graph on
//! `n + 1` vertices arises from a connected graph on `n` vertices by adding
//! one vertex with a nonempty neighbor set (delete a non-cut vertex to see
//! this), so extending every class by every nonempty subset and keeping one
//! graph per canonical label is exhaustive and duplicate-free.

use crate::graph::{Graph, MAX_VERTICES};
use crate::graph6;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Cap for the internal generator; larger orders must come from files.
pub const MAX_INTERNAL_ORDER: usize = 9;

/// Cap for canonical labeling.
pub const MAX_CANONICAL_ORDER: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    OrderZero,
    /// Order beyond the internal generator cap.
    OrderOverGeneratorCap {
        n: usize,
    },
    /// Order beyond the canonical-labeling cap.
    OrderOverCanonicalCap {
        n: usize,
    },
    /// Edge window violates `n - 1 <= m_min <= m_max <= C(n, 2)`.
    BadEdgeWindow {
        n: usize,
        m_min: usize,
        m_max: usize,
    },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::OrderZero => write!(f, "order must be at least 1"),
            EnumerateError::OrderOverGeneratorCap { n } => write!(
                f,
                "order {n} exceeds the internal generator cap {MAX_INTERNAL_ORDER}; use a graph6 file"
            ),
            EnumerateError::OrderOverCanonicalCap { n } => {
                write!(f, "order {n} exceeds the canonical labeling cap {MAX_CANONICAL_ORDER}")
            }
            EnumerateError::BadEdgeWindow { n, m_min, m_max } => write!(
                f,
                "edge window [{m_min}, {m_max}] invalid for connected graphs of order {n}"
            ),
        }
    }
}

impl core::error::Error for EnumerateError {}

/// A request for connected graph classes of one order within an edge window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub n: usize,
    pub m_min: usize,
    pub m_max: usize,
}

impl EnumerationQuery {
    /// Full edge range for order `n`.
    pub fn full(n: usize) -> Self {
        EnumerationQuery {
            n,
            m_min: n.saturating_sub(1),
            m_max: n * n.saturating_sub(1) / 2,
        }
    }

    pub fn validate(&self) -> Result<(), EnumerateError> {
        if self.n == 0 {
            return Err(EnumerateError::OrderZero);
        }
        let max = self.n * (self.n - 1) / 2;
        if self.m_min < self.n - 1 || self.m_min > self.m_max || self.m_max > max {
            return Err(EnumerateError::BadEdgeWindow {
                n: self.n,
                m_min: self.m_min,
                m_max: self.m_max,
            });
        }
        Ok(())
    }
}

/// Canonically relabeled copy of `g`.
pub fn canonical_representative(g: &Graph) -> Result<Graph, EnumerateError> {
    if g.n() > MAX_CANONICAL_ORDER {
        return Err(EnumerateError::OrderOverCanonicalCap { n: g.n() });
    }
    let perm = canonical_labeling(g);
    Ok(g.relabeled(&perm))
}

/// Canonical label: the graph6 line of the canonical representative.
/// Equal labels iff isomorphic; stable across runs.
pub fn canonical_form(g: &Graph) -> Result<String, EnumerateError> {
    Ok(graph6::encode(&canonical_representative(g)?))
}

/// Lazily grown cache of connected isomorphism classes by order.
///
/// `classes(n)` is sorted by `(edge count, canonical label)`; every entry is
/// its own canonical representative.
pub struct ConnectedClasses {
    levels: Vec<Vec<Graph>>,
}

impl Default for ConnectedClasses {
    fn default() -> Self {
        Self::new()
    }
}

impl ConnectedClasses {
    pub fn new() -> Self {
        let k1 = Graph::from_edge_list(1, &[]).expect("K1");
        ConnectedClasses {
            levels: vec![vec![k1]],
        }
    }

    /// All connected classes of order `n`, canonical and sorted.
    pub fn classes(&mut self, n: usize) -> Result<&[Graph], EnumerateError> {
        if n == 0 {
            return Err(EnumerateError::OrderZero);
        }
        if n > MAX_INTERNAL_ORDER {
            return Err(EnumerateError::OrderOverGeneratorCap { n });
        }
        while self.levels.len() < n {
            self.grow();
        }
        Ok(&self.levels[n - 1])
    }

    /// Classes of order `n` with exactly `m` edges, ascending label order.
    pub fn tier(&mut self, n: usize, m: usize) -> Result<Vec<Graph>, EnumerateError> {
        Ok(self
            .classes(n)?
            .iter()
            .filter(|g| g.edge_count() == m)
            .cloned()
            .collect())
    }

    fn grow(&mut self) {
        let level = self.levels.last().expect("seeded with K1");
        let n = self.levels.len();
        let mut next: BTreeMap<(usize, String), Graph> = BTreeMap::new();
        for g in level {
            for mask in 1u32..(1 << n) {
                let ext = g.with_extra_vertex(mask);
                let rep = canonical_representative(&ext).expect("within canonical cap");
                let key = (rep.edge_count(), graph6::encode(&rep));
                next.entry(key).or_insert(rep);
            }
        }
        self.levels.push(next.into_values().collect());
    }
}

/// Connected classes of order `q.n` whose edge counts fall in the window.
pub fn enumerate_connected(
    q: &EnumerationQuery,
    classes: &mut ConnectedClasses,
) -> Result<Vec<Graph>, EnumerateError> {
    q.validate()?;
    Ok(classes
        .classes(q.n)?
        .iter()
        .filter(|g| (q.m_min..=q.m_max).contains(&g.edge_count()))
        .cloned()
        .collect())
}

/// Canonical labeling as a permutation: new vertex `i` is old `perm[i]`.
fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 1 {
        return vec![0];
    }
    // Degree-partition seeding, ascending.
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_degree.entry(g.degree(v)).or_default().push(v);
    }
    let mut cells: Vec<Vec<usize>> = by_degree.into_values().collect();
    refine(g, &mut cells);
    let mut canon = Canon {
        g,
        best_key: Vec::new(),
        best_perm: Vec::new(),
    };
    canon.search(&cells);
    canon.best_perm
}

struct Canon<'a> {
    g: &'a Graph,
    best_key: Vec<u8>,
    best_perm: Vec<usize>,
}

impl<'a> Canon<'a> {
    fn search(&mut self, cells: &[Vec<usize>]) {
        match cells.iter().position(|c| c.len() > 1) {
            None => {
                let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
                let key = adjacency_key(self.g, &perm);
                if self.best_perm.is_empty() || key < self.best_key {
                    self.best_key = key;
                    self.best_perm = perm;
                }
            }
            Some(idx) => {
                // Twins within the target cell are automorphic; branch once
                // per twin class.
                let cell = &cells[idx];
                let mut reps: Vec<usize> = Vec::with_capacity(cell.len());
                'candidates: for &v in cell {
                    for &r in &reps {
                        if twins(self.g, r, v) {
                            continue 'candidates;
                        }
                    }
                    reps.push(v);
                }
                for &v in &reps {
                    let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
                    for (i, c) in cells.iter().enumerate() {
                        if i == idx {
                            next.push(vec![v]);
                            next.push(c.iter().copied().filter(|&x| x != v).collect());
                        } else {
                            next.push(c.clone());
                        }
                    }
                    refine(self.g, &mut next);
                    self.search(&next);
                }
            }
        }
    }
}

/// Swapping `u` and `v` is an automorphism iff their neighborhoods agree
/// outside the pair.
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let outside = !(1u32 << u) & !(1u32 << v);
    g.neighbors_mask(u) & outside == g.neighbors_mask(v) & outside
}

/// Equitable refinement: split cells by neighbor counts into every cell
/// until stable. Cell order is structure-derived, so isomorphic graphs
/// refine to corresponding partitions.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.n();
    debug_assert!(n <= MAX_CANONICAL_ORDER);
    loop {
        let mut cell_of = [0usize; MAX_VERTICES];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            // Signature: neighbor count per cell, packed in nibbles
            // (counts stay below 16 because n <= 16).
            let mut keyed: Vec<(u64, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig: u64 = 0;
                    for w in g.neighbors(v) {
                        sig += 1 << (4 * cell_of[w]);
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        // A split strictly increases the cell count.
        let changed = next.len() != cells.len();
        *cells = next;
        if !changed {
            return;
        }
    }
}

/// Adjacency upper triangle under `perm`, packed into bytes (column by
/// column, big-endian within each byte).
fn adjacency_key(g: &Graph, perm: &[usize]) -> Vec<u8> {
    let n = perm.len();
    let mut out = Vec::with_capacity((n * (n - 1) / 2).div_ceil(8));
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(perm[i], perm[j]));
            nbits += 1;
            if nbits == 8 {
                out.push(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(acc << (8 - nbits));
    }
    out
}
