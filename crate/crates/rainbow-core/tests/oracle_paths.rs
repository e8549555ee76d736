//! Verifier against an exhaustive simple-path oracle.

use rainbow_core::enumerate::ConnectedClasses;
use rainbow_core::verify::{
    check_certificate, exists_rainbow_path, is_rainbow_connected, ConnectivityCheck,
};
use rainbow_core::{EdgeColoring, Graph};

/// All simple paths from `s` to `t`, by DFS.
fn all_simple_paths(g: &Graph, s: usize, t: usize) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, t: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let v = *path.last().unwrap();
        if v == t {
            out.push(path.clone());
            return;
        }
        for w in g.neighbors(v) {
            if !path.contains(&w) {
                path.push(w);
                extend(g, t, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g, t, &mut vec![s], &mut out);
    out
}

fn path_is_rainbow(col: &EdgeColoring, path: &[usize]) -> bool {
    let mut used = Vec::new();
    for w in path.windows(2) {
        let c = col.color_of(w[0], w[1]).expect("edges exist");
        if used.contains(&c) {
            return false;
        }
        used.push(c);
    }
    true
}

fn oracle_pair_connected(g: &Graph, col: &EdgeColoring, s: usize, t: usize) -> bool {
    all_simple_paths(g, s, t)
        .iter()
        .any(|p| path_is_rainbow(col, p))
}

fn oracle_first_failure(g: &Graph, col: &EdgeColoring) -> Option<(usize, usize)> {
    for s in 0..g.n() {
        for t in s + 1..g.n() {
            if !oracle_pair_connected(g, col, s, t) {
                return Some((s, t));
            }
        }
    }
    None
}

/// Every coloring of `g` with colors `1..=k`, in odometer order.
fn all_colorings(g: &Graph, k: usize) -> Vec<EdgeColoring> {
    let m = g.edge_count();
    let mut out = Vec::new();
    let mut digits = vec![1usize; m];
    loop {
        out.push(
            EdgeColoring::new(k, g.edges().iter().copied().zip(digits.iter().copied())).unwrap(),
        );
        let mut pos = 0;
        loop {
            if pos == m {
                return out;
            }
            if digits[pos] < k {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 1;
            pos += 1;
        }
    }
}

#[test]
fn c5_pairs_match_oracle_for_cyclic_coloring() {
    let pairs: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let g = Graph::from_edge_list(5, &pairs).unwrap();
    // 1, 2, 3, 1, 2 around the cycle.
    let col = EdgeColoring::new(3, pairs.iter().copied().zip([1usize, 2, 3, 1, 2])).unwrap();
    for s in 0..5 {
        for t in s + 1..5 {
            let got = exists_rainbow_path(&g, &col, s, t).unwrap();
            let want = oracle_pair_connected(&g, &col, s, t);
            assert_eq!(got.is_some(), want, "pair ({s}, {t})");
            if let Some(path) = got {
                assert_eq!(path.first(), Some(&s));
                assert_eq!(path.last(), Some(&t));
                assert!(path_is_rainbow(&col, &path));
                let mut sorted = path.clone();
                sorted.sort_unstable();
                sorted.dedup();
                assert_eq!(sorted.len(), path.len(), "path must be simple");
            }
        }
    }
}

/// Exhaustive agreement sweep: every graph with n <= 5, every coloring with
/// k <= 2, plus every k = 3 coloring of graphs with at most 5 edges.
#[test]
fn verifier_matches_oracle_exhaustively_on_small_graphs() {
    let mut classes = ConnectedClasses::new();
    let mut checked = 0u64;
    for n in 2..=5 {
        for g in classes.classes(n).unwrap() {
            for k in 1..=3usize {
                if k == 3 && g.edge_count() > 5 {
                    continue;
                }
                for col in all_colorings(g, k) {
                    let want = oracle_first_failure(g, &col);
                    match is_rainbow_connected(g, &col).unwrap() {
                        ConnectivityCheck::RainbowConnected(cert) => {
                            assert_eq!(want, None, "graph {g:?}");
                            check_certificate(g, &col, &cert).unwrap();
                        }
                        ConnectivityCheck::Obstructed { pair } => {
                            assert_eq!(Some(pair), want, "graph {g:?}");
                        }
                    }
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 5_000, "sweep too small: {checked}");
}

/// Recoloring one edge with a fresh, previously unused color can only help:
/// checked on minimal witnesses, where every color is load-bearing.
#[test]
fn fresh_recolor_preserves_rainbow_connectivity() {
    use rainbow_core::solver::{rc_exact, SolverConfig};
    let cfg = SolverConfig::default();
    let mut classes = ConnectedClasses::new();
    for g in classes.classes(5).unwrap() {
        let witness = rc_exact(g, 4, &cfg).unwrap().witness;
        let fresh = witness.k() + 1;
        for &edge in g.edges() {
            let recolored = EdgeColoring::new(
                fresh,
                witness
                    .iter()
                    .map(|(e, c)| (e, if e == edge { fresh } else { c })),
            )
            .unwrap();
            assert!(
                is_rainbow_connected(g, &recolored).unwrap().is_connected(),
                "recoloring {edge:?} broke {g:?}"
            );
        }
    }
}
