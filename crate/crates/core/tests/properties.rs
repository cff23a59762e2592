//! Randomized invariants: round trips, relabeling symmetry, certificate
//! soundness, and agreement between the optimized searches and the
//! definition-level sweeps in `common`.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rvdkit_core::blocks::block_decomposition;
use rvdkit_core::coloring::VertexColoring;
use rvdkit_core::enumerate::canonical_key;
use rvdkit_core::graph::Graph;
use rvdkit_core::graph6;
use rvdkit_core::rainbow::{find_rainbow_cut, verify_coloring};
use rvdkit_core::solver::{rvd_exact, rvd_exact_flat};

use common::{naive_pair_has_cut, naive_valid};

/// Random connected graph: a random spanning tree (vertex i hangs off a
/// random earlier vertex) plus arbitrary extra edges from a bitmask.
fn connected_graph(n_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    n_range.prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
            any::<u64>(),
        )
            .prop_map(|(n, parents, mask)| {
                let mut edges = BTreeSet::new();
                for i in 1..n {
                    edges.insert((parents[i - 1].index(i), i));
                }
                let mut bit = 0;
                for i in 1..n {
                    for j in 0..i {
                        if mask >> bit & 1 == 1 {
                            edges.insert((j, i));
                        }
                        bit += 1;
                    }
                }
                Graph::from_edges(n, edges).expect("edges are in range")
            })
    })
}

/// The graph together with an arbitrary coloring from palette {1, …, n}.
fn colored_graph(
    n_range: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (Graph, VertexColoring)> {
    connected_graph(n_range).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), prop::collection::vec(1..=n, n))
            .prop_map(|(g, colors)| {
                let c = VertexColoring::new(colors).expect("colors are positive");
                (g, c)
            })
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v]));
    Graph::from_edges(g.n(), edges).expect("permutation preserves range")
}

/// Deterministic Fisher–Yates driven by a splitmix-style step of `seed`.
fn shuffle(items: &mut [usize], seed: u64) {
    let mut state = seed | 1;
    for i in (1..items.len()).rev() {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        items.swap(i, (state >> 33) as usize % (i + 1));
    }
}

proptest! {
    #[test]
    fn verifier_agrees_with_definition_sweep((g, c) in colored_graph(2..=6)) {
        let fast = verify_coloring(&g, &c).expect("verify").is_valid();
        prop_assert_eq!(fast, naive_valid(&g, &c));
    }

    #[test]
    fn verification_is_invariant_under_color_renaming(
        (g, c) in colored_graph(2..=6),
        seed in any::<u64>(),
    ) {
        let mut names: Vec<usize> = (1..=6).collect();
        shuffle(&mut names, seed);
        let renamed: Vec<usize> = c.colors().iter().map(|&x| names[x - 1]).collect();
        let renamed = VertexColoring::new(renamed).expect("names are positive");
        let before = verify_coloring(&g, &c).expect("verify").is_valid();
        let after = verify_coloring(&g, &renamed).expect("verify").is_valid();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn found_cuts_are_sound_and_search_is_complete((g, c) in colored_graph(2..=6)) {
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                let found = find_rainbow_cut(&g, &c, x, y).expect("search");
                if let Some(cert) = &found {
                    prop_assert!(cert.check(&g, &c), "bad certificate for ({}, {})", x, y);
                    prop_assert_eq!((cert.x, cert.y), (x, y));
                }
                prop_assert_eq!(found.is_some(), naive_pair_has_cut(&g, &c, x, y));
            }
        }
    }

    #[test]
    fn solver_witness_uses_exactly_the_reported_palette(g in connected_graph(2..=6)) {
        let got = rvd_exact(&g).expect("solver");
        prop_assert!(verify_coloring(&g, &got.witness).expect("verify").is_valid());
        prop_assert_eq!(got.witness.palette_size(), got.value);
        prop_assert!(got.value >= 1 && got.value <= g.n());
        let flat = rvd_exact_flat(&g).expect("flat solver");
        prop_assert_eq!(flat.value, got.value);
    }

    #[test]
    fn graph6_round_trips(g in connected_graph(1..=9)) {
        let text = graph6::encode(&g).expect("encode");
        let back = graph6::decode(&text).expect("decode");
        prop_assert_eq!(back, g);
    }

    #[test]
    fn edge_list_round_trips(g in connected_graph(2..=9)) {
        let back = Graph::parse_edge_list(&g.to_edge_list()).expect("parse");
        prop_assert_eq!(back, g);
    }

    #[test]
    fn coloring_text_round_trips(colors in prop::collection::vec(1usize..=9, 1..=9)) {
        let c = VertexColoring::new(colors).expect("colors are positive");
        let back = VertexColoring::parse(&c.to_text()).expect("parse");
        prop_assert_eq!(back.colors(), c.colors());
    }

    #[test]
    fn canonical_key_is_relabeling_invariant(
        g in connected_graph(2..=6),
        seed in any::<u64>(),
    ) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        shuffle(&mut perm, seed);
        let relabeled = relabel(&g, &perm);
        prop_assert_eq!(
            canonical_key(&g).expect("key"),
            canonical_key(&relabeled).expect("key")
        );
    }

    #[test]
    fn blocks_partition_the_edges(g in connected_graph(2..=8)) {
        let dec = block_decomposition(&g).expect("decomposition");

        // Each edge lies in exactly one block; block edge counts add to m.
        let mut covered = 0;
        for (u, v) in g.edges() {
            let homes = dec
                .blocks
                .iter()
                .filter(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok())
                .count();
            prop_assert_eq!(homes, 1, "edge ({}, {})", u, v);
        }
        for idx in 0..dec.blocks.len() {
            covered += dec.block_subgraph(&g, idx).expect("induced").graph.m();
        }
        prop_assert_eq!(covered, g.m());

        // Cut vertices are exactly the vertices shared by several blocks.
        for v in g.vertices() {
            let homes = dec.blocks.iter().filter(|b| b.binary_search(&v).is_ok()).count();
            prop_assert!(homes >= 1, "vertex {} missing from every block", v);
            prop_assert_eq!(homes >= 2, dec.is_cut_vertex(v), "vertex {}", v);
        }

        // A block of three or more vertices is 2-connected: it has no cut
        // vertices of its own and decomposes into a single block.
        for idx in 0..dec.blocks.len() {
            let sub = dec.block_subgraph(&g, idx).expect("induced").graph;
            if sub.n() >= 3 {
                let inner = block_decomposition(&sub).expect("decomposition");
                prop_assert!(inner.cut_vertices.is_empty());
                prop_assert_eq!(inner.blocks.len(), 1);
            }
        }
    }
}
