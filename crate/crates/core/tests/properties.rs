//! Property tests for the bit-level edge rule and the invariants every
//! explicit generator must respect.

use std::sync::OnceLock;

use proptest::prelude::*;

use crossed_cubes::automorphism::generator_set;
use crossed_cubes::bitaddress::{bit, prefix_equal};
use crossed_cubes::orbits::signature;
use crossed_cubes::p4::has_p4;
use crossed_cubes::topology::{build_cq, is_edge_cq, neighbor_cq, CubeGraph};

fn dim_and_pair() -> impl Strategy<Value = (usize, u32, u32)> {
    (2usize..=10).prop_flat_map(|n| {
        let size = 1u32 << n;
        (Just(n), 0..size, 0..size)
    })
}

fn dim_vertex_axis() -> impl Strategy<Value = (usize, u32, usize)> {
    (2usize..=10).prop_flat_map(|n| (Just(n), 0..1u32 << n, 0..n))
}

fn cq6() -> &'static CubeGraph {
    static GRAPH: OnceLock<CubeGraph> = OnceLock::new();
    GRAPH.get_or_init(|| build_cq(6).unwrap())
}

proptest! {
    #[test]
    fn edge_rule_is_symmetric((n, u, v) in dim_and_pair()) {
        prop_assert_eq!(is_edge_cq(u, v, n), is_edge_cq(v, u, n));
    }

    #[test]
    fn edge_witness_is_highest_differing_bit((n, u, v) in dim_and_pair()) {
        if is_edge_cq(u, v, n) {
            let x = (31 - (u ^ v).leading_zeros()) as usize;
            prop_assert!(prefix_equal(u, v, x, n));
            prop_assert_ne!(bit(u, x), bit(v, x));
            if x % 2 == 1 {
                prop_assert_eq!(bit(u, x - 1), bit(v, x - 1));
            }
        }
    }

    #[test]
    fn neighbor_map_properties((n, u, k) in dim_vertex_axis()) {
        let v = neighbor_cq(u, k, n);
        prop_assert!(is_edge_cq(u, v, n));
        prop_assert_eq!(neighbor_cq(v, k, n), u);
        prop_assert_ne!(bit(u, k), bit(v, k));
        prop_assert!(prefix_equal(u, v, k, n));
        if k % 2 == 1 {
            prop_assert_eq!(bit(u, k - 1), bit(v, k - 1));
        }
    }

    #[test]
    fn neighbors_are_distinct_across_dimensions((n, u) in (2usize..=10).prop_flat_map(|n| (Just(n), 0..1u32 << n))) {
        let mut nbrs: Vec<u32> = (0..n).map(|k| neighbor_cq(u, k, n)).collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        prop_assert_eq!(nbrs.len(), n);
    }

    #[test]
    fn signature_has_formula_width((n, u) in (3usize..=28).prop_flat_map(|n| (Just(n), 0..1u32 << n))) {
        prop_assert_eq!(signature(u, n).len(), n.div_ceil(2) - 2);
    }

    #[test]
    fn generators_preserve_signature((n, u) in (5usize..=10).prop_flat_map(|n| (Just(n), 0..1u32 << n))) {
        for m in generator_set(n).unwrap().maps() {
            prop_assert_eq!(signature(m.apply(u), n), signature(u, n));
        }
    }

    #[test]
    fn generators_preserve_address_parity((n, u) in (5usize..=10).prop_flat_map(|n| (Just(n), 0..1u32 << n))) {
        for m in generator_set(n).unwrap().maps() {
            prop_assert_eq!(bit(m.apply(u), 0), bit(u, 0));
        }
    }

    #[test]
    fn p4_reachability_is_symmetric((x, y) in (0u32..64, 0u32..64)) {
        if x != y {
            let g = cq6();
            prop_assert_eq!(has_p4(g, x, y), has_p4(g, y, x));
        }
    }
}
