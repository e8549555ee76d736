//! Rainbow-connectivity verification and certificates.
//!
//! The path search explores `(vertex, used-color-set)` states with dominance
//! pruning: a state is expanded only if no previously visited state at the
//! same vertex used a subset of its colors. Worst case stays `n * 2^k`, hence
//! the hard color guard.

use crate::coloring::{ColoringError, EdgeColoring};
use crate::graph::Graph;
use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;
use core::fmt;

/// Hard guard on the color count for the state search.
pub const MAX_COLORS: usize = 24;

/// Errors from the verifier operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyError {
    TooManyColors { k: usize },
    VertexOutOfRange { v: usize, n: usize },
    Disconnected,
    Coloring(ColoringError),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::TooManyColors { k } => {
                write!(f, "{k} colors exceed the search guard of {MAX_COLORS}")
            }
            VerifyError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for order {n}")
            }
            VerifyError::Disconnected => write!(f, "graph is not connected"),
            VerifyError::Coloring(e) => write!(f, "coloring: {e}"),
        }
    }
}

impl core::error::Error for VerifyError {}

impl From<ColoringError> for VerifyError {
    fn from(e: ColoringError) -> Self {
        VerifyError::Coloring(e)
    }
}

/// Per-pair rainbow paths proving a coloring rainbow connected.
///
/// Paths are vertex sequences keyed by the unordered pair `(s, t)`, `s < t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowCertificate {
    paths: BTreeMap<(usize, usize), Vec<usize>>,
}

impl RainbowCertificate {
    pub fn new(paths: BTreeMap<(usize, usize), Vec<usize>>) -> Self {
        RainbowCertificate { paths }
    }

    pub fn path_for(&self, s: usize, t: usize) -> Option<&[usize]> {
        self.paths.get(&(s.min(t), s.max(t))).map(|p| p.as_slice())
    }

    pub fn pair_count(&self) -> usize {
        self.paths.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<usize>)> {
        self.paths.iter()
    }
}

/// Outcome of a full rainbow-connectivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectivityCheck {
    RainbowConnected(RainbowCertificate),
    /// Lexicographically first pair with no rainbow path.
    Obstructed {
        pair: (usize, usize),
    },
}

impl ConnectivityCheck {
    pub fn is_connected(&self) -> bool {
        matches!(self, ConnectivityCheck::RainbowConnected(_))
    }
}

/// Reason a certificate fails re-validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateFault {
    MissingPair {
        pair: (usize, usize),
    },
    WrongEndpoints {
        pair: (usize, usize),
    },
    NotAnEdge {
        pair: (usize, usize),
        step: (usize, usize),
    },
    UncoloredEdge {
        pair: (usize, usize),
        step: (usize, usize),
    },
    RepeatedColor {
        pair: (usize, usize),
        color: usize,
    },
}

impl fmt::Display for CertificateFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateFault::MissingPair { pair } => {
                write!(f, "no path recorded for pair ({}, {})", pair.0, pair.1)
            }
            CertificateFault::WrongEndpoints { pair } => {
                write!(
                    f,
                    "path for pair ({}, {}) has wrong endpoints",
                    pair.0, pair.1
                )
            }
            CertificateFault::NotAnEdge { pair, step } => write!(
                f,
                "path for pair ({}, {}) uses missing edge ({}, {})",
                pair.0, pair.1, step.0, step.1
            ),
            CertificateFault::UncoloredEdge { pair, step } => write!(
                f,
                "path for pair ({}, {}) uses uncolored edge ({}, {})",
                pair.0, pair.1, step.0, step.1
            ),
            CertificateFault::RepeatedColor { pair, color } => write!(
                f,
                "path for pair ({}, {}) repeats color {color}",
                pair.0, pair.1
            ),
        }
    }
}

/// Searches for a rainbow path from `s` to `t` under `col`.
///
/// Returns a vertex sequence whose consecutive edges all exist and carry
/// pairwise distinct colors, or `None` when no rainbow path exists.
pub fn exists_rainbow_path(
    g: &Graph,
    col: &EdgeColoring,
    s: usize,
    t: usize,
) -> Result<Option<Vec<usize>>, VerifyError> {
    if col.k() > MAX_COLORS {
        return Err(VerifyError::TooManyColors { k: col.k() });
    }
    for v in [s, t] {
        if v >= g.n() {
            return Err(VerifyError::VertexOutOfRange { v, n: g.n() });
        }
    }
    let colors = col.indexed_for(g)?;
    Ok(rainbow_path_indexed(g, &colors, s, t))
}

/// Path search on pre-indexed colors (colors[i] matches `g.edges()[i]`).
pub(crate) fn rainbow_path_indexed(
    g: &Graph,
    colors: &[usize],
    s: usize,
    t: usize,
) -> Option<Vec<usize>> {
    if s == t {
        return Some(alloc::vec![s]);
    }
    // States: (vertex, set of used colors). Parents let us rebuild the walk.
    struct Node {
        vertex: usize,
        mask: u32,
        parent: usize,
    }
    fn rebuild_path(nodes: &[Node], mut id: usize) -> Vec<usize> {
        let mut walk = Vec::new();
        while id != usize::MAX {
            walk.push(nodes[id].vertex);
            id = nodes[id].parent;
        }
        walk.reverse();
        simplify_walk(walk)
    }
    let mut nodes: Vec<Node> = Vec::new();
    let mut visited: Vec<Vec<u32>> = alloc::vec![Vec::new(); g.n()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    nodes.push(Node {
        vertex: s,
        mask: 0,
        parent: usize::MAX,
    });
    visited[s].push(0);
    queue.push_back(0);
    while let Some(id) = queue.pop_front() {
        let (v, mask) = (nodes[id].vertex, nodes[id].mask);
        for w in g.neighbors(v) {
            let e = g.edge_index(v, w).expect("neighbor edge");
            let bit = 1u32 << (colors[e] - 1);
            if mask & bit != 0 {
                continue;
            }
            let new_mask = mask | bit;
            if w == t {
                nodes.push(Node {
                    vertex: w,
                    mask: new_mask,
                    parent: id,
                });
                return Some(rebuild_path(&nodes, nodes.len() - 1));
            }
            if visited[w].iter().any(|&m| m & !new_mask == 0) {
                continue; // dominated: a subset of these colors already reached w
            }
            visited[w].retain(|&m| new_mask & !m != 0); // drop dominated supersets
            visited[w].push(new_mask);
            nodes.push(Node {
                vertex: w,
                mask: new_mask,
                parent: id,
            });
            queue.push_back(nodes.len() - 1);
        }
    }
    None
}

/// Cuts cycles out of a walk, keeping the first occurrence of each vertex.
/// Edge colors on a walk are pairwise distinct, so any sub-walk stays
/// rainbow; the result is a simple path with the same endpoints.
fn simplify_walk(walk: Vec<usize>) -> Vec<usize> {
    let mut path: Vec<usize> = Vec::with_capacity(walk.len());
    for v in walk {
        if let Some(pos) = path.iter().position(|&x| x == v) {
            path.truncate(pos);
        }
        path.push(v);
    }
    path
}

/// Checks whether `col` makes `g` rainbow connected.
///
/// Returns a certificate covering every unordered pair, or the
/// lexicographically first pair with no rainbow path.
pub fn is_rainbow_connected(
    g: &Graph,
    col: &EdgeColoring,
) -> Result<ConnectivityCheck, VerifyError> {
    if col.k() > MAX_COLORS {
        return Err(VerifyError::TooManyColors { k: col.k() });
    }
    if !g.is_connected() {
        return Err(VerifyError::Disconnected);
    }
    let colors = col.indexed_for(g)?;
    let mut paths = BTreeMap::new();
    for s in 0..g.n() {
        for t in s + 1..g.n() {
            match rainbow_path_indexed(g, &colors, s, t) {
                Some(p) => {
                    paths.insert((s, t), p);
                }
                None => return Ok(ConnectivityCheck::Obstructed { pair: (s, t) }),
            }
        }
    }
    Ok(ConnectivityCheck::RainbowConnected(
        RainbowCertificate::new(paths),
    ))
}

/// Independently re-validates a certificate: every pair present, every path
/// a real edge sequence with the right endpoints, and colors pairwise
/// distinct along each path.
pub fn check_certificate(
    g: &Graph,
    col: &EdgeColoring,
    cert: &RainbowCertificate,
) -> Result<(), CertificateFault> {
    for s in 0..g.n() {
        for t in s + 1..g.n() {
            let pair = (s, t);
            let path = cert
                .path_for(s, t)
                .ok_or(CertificateFault::MissingPair { pair })?;
            if path.first() != Some(&s) || path.last() != Some(&t) {
                // Either orientation of the stored path is acceptable.
                if path.first() != Some(&t) || path.last() != Some(&s) {
                    return Err(CertificateFault::WrongEndpoints { pair });
                }
            }
            let mut used: Vec<usize> = Vec::with_capacity(path.len());
            for w in path.windows(2) {
                let step = (w[0], w[1]);
                if !g.has_edge(step.0, step.1) {
                    return Err(CertificateFault::NotAnEdge { pair, step });
                }
                let c = col
                    .color_of(step.0, step.1)
                    .ok_or(CertificateFault::UncoloredEdge { pair, step })?;
                if used.contains(&c) {
                    return Err(CertificateFault::RepeatedColor { pair, color: c });
                }
                used.push(c);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn repeated_color_blocks_path() {
        let col = EdgeColoring::new(1, [((0, 1), 1), ((1, 2), 1)]).unwrap();
        assert_eq!(exists_rainbow_path(&p3(), &col, 0, 2).unwrap(), None);
    }

    #[test]
    fn distinct_colors_give_path() {
        let col = EdgeColoring::new(2, [((0, 1), 1), ((1, 2), 2)]).unwrap();
        let path = exists_rainbow_path(&p3(), &col, 0, 2).unwrap().unwrap();
        assert_eq!(path, vec![0, 1, 2]);
    }

    #[test]
    fn color_guard() {
        let col = EdgeColoring::new(25, [((0, 1), 1), ((1, 2), 2)]).unwrap();
        assert_eq!(
            exists_rainbow_path(&p3(), &col, 0, 2),
            Err(VerifyError::TooManyColors { k: 25 })
        );
    }

    #[test]
    fn complete_graph_single_color_connects() {
        let g =
            Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let col = EdgeColoring::new(1, g.edges().iter().map(|&e| (e, 1))).unwrap();
        let check = is_rainbow_connected(&g, &col).unwrap();
        let ConnectivityCheck::RainbowConnected(cert) = check else {
            panic!("expected certificate");
        };
        assert_eq!(cert.pair_count(), 6);
        assert!(check_certificate(&g, &col, &cert).is_ok());
    }

    #[test]
    fn p4_with_121_fails_at_endpoints() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let col = EdgeColoring::new(2, [((0, 1), 1), ((1, 2), 2), ((2, 3), 1)]).unwrap();
        assert_eq!(
            is_rainbow_connected(&g, &col).unwrap(),
            ConnectivityCheck::Obstructed { pair: (0, 3) }
        );
    }

    #[test]
    fn certificate_faults_detected() {
        let g = p3();
        let col = EdgeColoring::new(2, [((0, 1), 1), ((1, 2), 2)]).unwrap();
        let ConnectivityCheck::RainbowConnected(cert) = is_rainbow_connected(&g, &col).unwrap()
        else {
            panic!("expected certificate");
        };

        // Drop a pair.
        let mut paths: BTreeMap<(usize, usize), Vec<usize>> =
            cert.iter().map(|(&k, v)| (k, v.clone())).collect();
        paths.remove(&(0, 2));
        let broken = RainbowCertificate::new(paths.clone());
        assert_eq!(
            check_certificate(&g, &col, &broken),
            Err(CertificateFault::MissingPair { pair: (0, 2) })
        );

        // Replace a path with one using a non-edge.
        paths.insert((0, 2), alloc::vec![0, 2]);
        let broken = RainbowCertificate::new(paths);
        assert_eq!(
            check_certificate(&g, &col, &broken),
            Err(CertificateFault::NotAnEdge {
                pair: (0, 2),
                step: (0, 2)
            })
        );
    }

    #[test]
    fn disconnected_input_is_error() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let col = EdgeColoring::new(2, [((0, 1), 1), ((2, 3), 2)]).unwrap();
        assert_eq!(
            is_rainbow_connected(&g, &col),
            Err(VerifyError::Disconnected)
        );
    }
}
