//! Bridge detection against a deletion-based brute-force oracle.

use rainbow_core::enumerate::ConnectedClasses;
use rainbow_core::Graph;

/// Number of connected components, counted by repeated BFS.
fn component_count(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut components = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    components
}

/// Oracle: an edge is a bridge iff deleting it increases the component count.
fn bridges_by_deletion(g: &Graph) -> Vec<(usize, usize)> {
    let edges = g.edges();
    let base = component_count(g.n(), edges);
    let mut out = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        let mut rest: Vec<(usize, usize)> = edges.to_vec();
        rest.remove(i);
        if component_count(g.n(), &rest) > base {
            out.push(e);
        }
    }
    out
}

#[test]
fn bridges_match_deletion_oracle_up_to_n7() {
    let mut classes = ConnectedClasses::new();
    for n in 1..=7 {
        for g in classes.classes(n).unwrap() {
            assert_eq!(g.bridges(), bridges_by_deletion(g), "graph {g:?}");
        }
    }
}

#[test]
fn nontrivial_components_after_bridge_deletion_are_bridgeless() {
    let mut classes = ConnectedClasses::new();
    for n in 1..=7 {
        for g in classes.classes(n).unwrap() {
            let dec = g.bridge_decomposition().unwrap();
            let mut covered = 0;
            for comp in &dec.components {
                covered += comp.order();
                if !comp.is_trivial() {
                    assert!(comp.bridgeless, "component of {g:?} has an internal bridge");
                    // The trichotomy: complete of order >= 3, or diameter >= 2.
                    assert!(
                        (comp.complete && comp.order() >= 3) || comp.diameter >= 2,
                        "component of {g:?} breaks the trichotomy"
                    );
                }
            }
            assert_eq!(covered, g.n(), "components must partition the vertices");
            for &(u, v) in &dec.bridges {
                let cu = dec.components.iter().position(|c| c.vertices.contains(&u));
                let cv = dec.components.iter().position(|c| c.vertices.contains(&v));
                assert_ne!(cu, cv, "bridge ({u}, {v}) must join distinct components");
            }
        }
    }
}

#[test]
fn path_diameters_match_definition() {
    for n in 2..=8 {
        let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edge_list(n, &pairs).unwrap();
        assert_eq!(g.diameter().unwrap(), n - 1);
    }
}
