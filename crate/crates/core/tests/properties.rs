use proptest::prelude::*;

use itline::io::{decode_graph6, encode_graph6};
use itline::triangular::{triangle_count_total, triangle_counts, triangularity};
use itline::{line_graph, MultiGraph};

/// Simple graphs on 1..=9 vertices from an edge bitmask over all pairs.
fn simple_graph() -> impl Strategy<Value = MultiGraph> {
    (1usize..=9).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e);
            MultiGraph::new(n, edges).unwrap()
        })
    })
}

fn with_edges() -> impl Strategy<Value = MultiGraph> {
    simple_graph().prop_filter("needs an edge", |g| g.edge_count() > 0)
}

fn shuffled(g: MultiGraph) -> impl Strategy<Value = (MultiGraph, Vec<usize>)> {
    let n = g.vertex_count();
    (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

fn sorted_edges(g: &MultiGraph) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = g.edge_list().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    e.sort_unstable();
    e
}

proptest! {
    #[test]
    fn graph6_round_trip(g in simple_graph()) {
        let text = encode_graph6(&g).unwrap();
        let back = decode_graph6(&text).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(sorted_edges(&back), sorted_edges(&g));
    }

    #[test]
    fn line_graph_counts(g in with_edges()) {
        let l = line_graph(&g).unwrap().graph;
        let expected: usize = g.vertices().map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2).sum();
        prop_assert_eq!(l.vertex_count(), g.edge_count());
        prop_assert_eq!(l.edge_count(), expected);
        prop_assert!(l.is_simple());
    }

    #[test]
    fn invariants_survive_relabeling((g, perm) in with_edges().prop_flat_map(shuffled)) {
        let h = g.permute_vertices(&perm).unwrap();
        prop_assert_eq!(h.degree_sequence(), g.degree_sequence());
        prop_assert_eq!(triangle_count_total(&h), triangle_count_total(&g));
        prop_assert_eq!(triangularity(&h), triangularity(&g));
        prop_assert_eq!(h.is_connected(), g.is_connected());
        let (lg, lh) = (line_graph(&g).unwrap().graph, line_graph(&h).unwrap().graph);
        prop_assert_eq!(lh.degree_sequence(), lg.degree_sequence());
        prop_assert_eq!(triangle_count_total(&lh), triangle_count_total(&lg));
    }

    #[test]
    fn edge_triangles_sum_to_three_per_triangle(g in simple_graph()) {
        let per_edge: u64 = triangle_counts(&g).iter().map(|&c| u64::from(c)).sum();
        prop_assert_eq!(per_edge, 3 * triangle_count_total(&g));
    }

    #[test]
    fn line_edges_see_the_shared_star(g in with_edges()) {
        let l = line_graph(&g).unwrap().graph;
        let counts = triangle_counts(&l);
        for (i, &(a, b)) in l.edge_list().iter().enumerate() {
            let (ea, eb) = (g.ends(a), g.ends(b));
            let shared = if ea.0 == eb.0 || ea.0 == eb.1 { ea.0 } else { ea.1 };
            prop_assert!(counts[i] as usize >= g.degree(shared) - 2);
        }
    }

    #[test]
    fn subdivision_counts(g in with_edges(), pick in any::<u64>()) {
        let xs: Vec<usize> = g.edges().filter(|e| pick >> (e % 64) & 1 == 1).collect();
        let h = g.subdivide(&xs).unwrap();
        prop_assert_eq!(h.vertex_count(), g.vertex_count() + xs.len());
        prop_assert_eq!(h.edge_count(), g.edge_count() + xs.len());
        for v in g.vertices() {
            prop_assert_eq!(h.degree(v), g.degree(v));
        }
        for v in g.vertex_count()..h.vertex_count() {
            prop_assert_eq!(h.degree(v), 2);
        }
    }
}
