//! Property tests for representation-level invariants.

use proptest::prelude::*;
use rainbow_core::{graph6, Graph};

/// Random simple graph: order plus a bit per vertex pair.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12)
        .prop_flat_map(|n| {
            let max_edges = n * (n - 1) / 2;
            (Just(n), prop::collection::vec(any::<bool>(), max_edges))
        })
        .prop_map(|(n, bits)| {
            let mut pairs = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        pairs.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &pairs).unwrap()
        })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let line = graph6::encode(&g);
        prop_assert!(line.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&line).unwrap(), g);
    }

    #[test]
    fn edge_list_order_and_duplicates_are_immaterial(g in arb_graph()) {
        // Feed the edges back reversed, doubled, and flipped.
        let mut noisy: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (v, u)).collect();
        noisy.extend(g.edges().iter().copied());
        noisy.reverse();
        let rebuilt = Graph::from_edge_list(g.n(), &noisy).unwrap();
        prop_assert_eq!(rebuilt, g);
    }

    #[test]
    fn bfs_distances_are_symmetric(g in arb_graph()) {
        for s in 0..g.n() {
            let from_s = g.bfs_distances(s);
            for (t, &d) in from_s.iter().enumerate() {
                prop_assert_eq!(d, g.bfs_distances(t)[s]);
            }
        }
    }
}
