//! Cube graph construction: crossed cubes and ordinary hypercubes.
//!
//! The crossed cube on 2^n vertices joins `u` and `v` exactly when, at the
//! highest differing bit `x`: bit `x-1` agrees when `x` is odd, and every
//! complete 2-bit block below is pair-related. The ordinary hypercube
//! (single-bit flips) serves as a vertex-transitive baseline.

use std::fmt::Write as _;

use crate::bitaddress::{
    bit, flip, prefix_equal, suffix_pair_related, PairCode, Vertex, MAX_BUILD_DIM,
};
use crate::error::{Error, Result};

/// Which edge rule a cube graph was built with.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CubeKind {
    Crossed,
    Hypercube,
}

impl CubeKind {
    pub fn name(self) -> &'static str {
        match self {
            CubeKind::Crossed => "crossed",
            CubeKind::Hypercube => "hypercube",
        }
    }
}

/// An immutable undirected simple graph on vertices `0..vertex_count`,
/// stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an edge list. Reversed duplicates are merged;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            assert!(u != v, "self-loop at {u}");
            assert!(
                (u as usize) < vertex_count && (v as usize) < vertex_count,
                "edge ({u}, {v}) out of range"
            );
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    fn from_adjacency(adj: Vec<Vec<Vertex>>) -> Graph {
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Graph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            let u = u as Vertex;
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }
}

/// A materialized n-dimensional cube: 2^n vertices, degree n everywhere.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeGraph {
    n: usize,
    kind: CubeKind,
    graph: Graph,
}

impl CubeGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> CubeKind {
        self.kind
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Sorted open neighborhood of `v`; always has length n.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.graph.neighbors(v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.graph.has_edge(u, v)
    }

    /// Edge-list text: a `# kind=<kind> n=<n>` header, then one `u v` line
    /// per edge in decimal with `u < v`, ascending.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# kind={} n={}\n", self.kind.name(), self.n);
        for (u, v) in self.graph.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// DOT text for the same edge set, node IDs decimal.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        let _ = writeln!(out, "  // kind={} n={}", self.kind.name(), self.n);
        for (u, v) in self.graph.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

fn check_build_dim(n: usize) -> Result<()> {
    if !(1..=MAX_BUILD_DIM).contains(&n) {
        return Err(Error::Dimension {
            n,
            min: 1,
            max: MAX_BUILD_DIM,
        });
    }
    Ok(())
}

/// The crossed-cube edge test. Symmetric in `u` and `v`.
///
/// The witness dimension, when it exists, is forced to be the highest
/// differing bit: the prefix above it must agree and the bit itself must
/// differ.
pub fn is_edge_cq(u: Vertex, v: Vertex, n: usize) -> bool {
    assert!(
        n >= 1 && (u >> n) == 0 && (v >> n) == 0,
        "vertices out of range for n={n}"
    );
    if u == v {
        return false;
    }
    let x = (31 - (u ^ v).leading_zeros()) as usize;
    debug_assert!(x < n && prefix_equal(u, v, x, n) && bit(u, x) != bit(v, x));
    if x % 2 == 1 && bit(u, x - 1) != bit(v, x - 1) {
        return false;
    }
    suffix_pair_related(u, v, x)
}

/// The unique vertex adjacent to `u` along dimension `k`: bit `k` negated,
/// bit `k-1` kept when `k` is odd, prefix kept, and every complete 2-bit
/// block below replaced by its pair partner. Self-inverse in `k`.
pub fn neighbor_cq(u: Vertex, k: usize, n: usize) -> Vertex {
    assert!(k < n, "dimension {k} out of range for n={n}");
    assert!((u >> n) == 0, "vertex {u} out of range for n={n}");
    let mut v = flip(u, k);
    for i in 0..k / 2 {
        let partner = PairCode::block_of(u, i).partner().value() as Vertex;
        v = (v & !(0b11 << (2 * i))) | (partner << (2 * i));
    }
    v
}

/// Materializes the n-dimensional crossed cube, `1 <= n <= 20`.
///
/// Edges come from the per-dimension neighbor map, which is linear in the
/// output size; the all-pairs edge rule is kept as a test oracle.
pub fn build_cq(n: usize) -> Result<CubeGraph> {
    check_build_dim(n)?;
    let size = 1usize << n;
    let mut adj = Vec::with_capacity(size);
    for u in 0..size as Vertex {
        let mut nbrs: Vec<Vertex> = (0..n).map(|k| neighbor_cq(u, k, n)).collect();
        nbrs.sort_unstable();
        debug_assert!(
            nbrs.windows(2).all(|w| w[0] < w[1]),
            "duplicate neighbor of {u}"
        );
        adj.push(nbrs);
    }
    Ok(CubeGraph {
        n,
        kind: CubeKind::Crossed,
        graph: Graph::from_adjacency(adj),
    })
}

/// Materializes the ordinary hypercube: edges are single-bit flips.
pub fn build_hypercube(n: usize) -> Result<CubeGraph> {
    check_build_dim(n)?;
    let size = 1usize << n;
    let mut adj = Vec::with_capacity(size);
    for u in 0..size as Vertex {
        let mut nbrs: Vec<Vertex> = (0..n).map(|k| flip(u, k)).collect();
        nbrs.sort_unstable();
        adj.push(nbrs);
    }
    Ok(CubeGraph {
        n,
        kind: CubeKind::Hypercube,
        graph: Graph::from_adjacency(adj),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct transcription of the edge rule as an existential over the
    /// witness dimension; deliberately avoids the highest-bit shortcut and
    /// the neighbor map so it can serve as an independent oracle.
    fn edge_oracle(u: Vertex, v: Vertex, n: usize) -> bool {
        (0..n).any(|x| {
            bit(v, x) == 1 - bit(u, x)
                && (x % 2 == 0 || bit(v, x - 1) == bit(u, x - 1))
                && (x + 1..n).all(|i| bit(u, i) == bit(v, i))
                && (0..x / 2)
                    .all(|i| PairCode::block_of(u, i).pair_related(PairCode::block_of(v, i)))
        })
    }

    #[test]
    fn edge_rule_known_pairs() {
        assert!(is_edge_cq(0b0011, 0b0101, 4));
        assert!(!is_edge_cq(0b0101, 0b0101, 4));
        assert!(is_edge_cq(1, 7, 7));
    }

    #[test]
    fn edge_rule_agrees_with_oracle_up_to_n6() {
        for n in 1..=6 {
            let size = 1u32 << n;
            for u in 0..size {
                for v in 0..size {
                    assert_eq!(
                        is_edge_cq(u, v, n),
                        edge_oracle(u, v, n),
                        "u={u} v={v} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn built_edges_equal_all_pairs_rule() {
        for n in 1..=6 {
            let g = build_cq(n).unwrap();
            let size = 1u32 << n;
            let by_rule: Vec<(Vertex, Vertex)> = (0..size)
                .flat_map(|u| (u + 1..size).map(move |v| (u, v)))
                .filter(|&(u, v)| is_edge_cq(u, v, n))
                .collect();
            assert_eq!(g.graph().edges().collect::<Vec<_>>(), by_rule, "n={n}");
        }
    }

    #[test]
    fn edge_rule_is_symmetric() {
        for n in [3, 5, 7] {
            let size = 1u32 << n;
            for u in 0..size {
                for v in 0..size {
                    assert_eq!(is_edge_cq(u, v, n), is_edge_cq(v, u, n));
                }
            }
        }
    }

    #[test]
    fn cq3_edge_set() {
        let g = build_cq(3).unwrap();
        let expect = [
            (0, 1),
            (0, 2),
            (0, 4),
            (1, 3),
            (1, 7),
            (2, 3),
            (2, 6),
            (3, 5),
            (4, 5),
            (4, 6),
            (5, 7),
            (6, 7),
        ];
        assert_eq!(g.graph().edges().collect::<Vec<_>>(), expect);
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn cq4_counts() {
        let g = build_cq(4).unwrap();
        assert_eq!(g.vertex_count(), 16);
        assert_eq!(g.edge_count(), 32);
    }

    #[test]
    fn cq7_neighborhoods() {
        let g = build_cq(7).unwrap();
        assert_eq!(g.neighbors(1), &[0, 3, 7, 11, 19, 35, 67]);
        assert_eq!(g.neighbors(4), &[0, 5, 6, 12, 28, 44, 76]);
    }

    #[test]
    fn kth_neighbor_examples() {
        assert_eq!(neighbor_cq(1, 2, 7), 7);
        assert_eq!(neighbor_cq(1, 6, 7), 67);
        assert_eq!(neighbor_cq(0, 3, 4), 0b1000);
        for k in 0..5 {
            assert_eq!(
                neighbor_cq(0, k, 5),
                1 << k,
                "all blocks of 0 are self-paired"
            );
        }
    }

    #[test]
    fn kth_neighbor_is_self_inverse_and_adjacent() {
        for n in 1..=8 {
            for u in 0..(1u32 << n) {
                for k in 0..n {
                    let v = neighbor_cq(u, k, n);
                    assert!(is_edge_cq(u, v, n));
                    assert_eq!(neighbor_cq(v, k, n), u);
                    assert_ne!(bit(u, k), bit(v, k));
                    assert!(prefix_equal(u, v, k, n));
                    if k % 2 == 1 {
                        assert_eq!(bit(u, k - 1), bit(v, k - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn cubes_are_regular() {
        for n in 1..=8 {
            let g = build_cq(n).unwrap();
            assert_eq!(g.vertex_count(), 1 << n);
            assert_eq!(g.edge_count(), n << (n - 1));
            for v in 0..g.vertex_count() as Vertex {
                assert_eq!(g.neighbors(v).len(), n);
            }
        }
    }

    #[test]
    fn blocked_block_pairs_never_appear_on_edges() {
        // A shared 01 block at position k forbids adjacency along any
        // dimension >= 2k; a 01 against a 10 block forbids adjacency
        // entirely.
        for n in 1..=8 {
            let g = build_cq(n).unwrap();
            for (u, v) in g.graph().edges() {
                let x = (31 - (u ^ v).leading_zeros()) as usize;
                for k in 0..n.div_ceil(2) {
                    let bu = PairCode::block_of(u, k).value();
                    let bv = PairCode::block_of(v, k).value();
                    if 2 * k <= x {
                        assert!(!(bu == 0b01 && bv == 0b01), "edge ({u},{v}) x={x} k={k}");
                    }
                    assert!(!(bu == 0b01 && bv == 0b10), "edge ({u},{v}) k={k}");
                    assert!(!(bu == 0b10 && bv == 0b01), "edge ({u},{v}) k={k}");
                }
            }
        }
    }

    #[test]
    fn hypercube_basics() {
        let q3 = build_hypercube(3).unwrap();
        assert_eq!(q3.neighbors(0), &[1, 2, 4]);
        let q2 = build_hypercube(2).unwrap();
        assert_eq!(q2.vertex_count(), 4);
        assert_eq!(q2.edge_count(), 4);
        let q4 = build_hypercube(4).unwrap();
        assert_eq!(q4.vertex_count(), 16);
        assert_eq!(q4.edge_count(), 32);
    }

    #[test]
    fn dimension_caps() {
        assert!(matches!(build_cq(0), Err(Error::Dimension { .. })));
        assert!(matches!(build_cq(21), Err(Error::Dimension { .. })));
        assert!(matches!(build_hypercube(30), Err(Error::Dimension { .. })));
    }

    #[test]
    fn graph_from_edges_normalizes() {
        let g = Graph::from_edges(3, &[(1, 0), (0, 1), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn edge_list_format() {
        let g = build_cq(2).unwrap();
        assert_eq!(g.to_edge_list(), "# kind=crossed n=2\n0 1\n0 2\n1 3\n2 3\n");
    }

    #[test]
    fn dot_format() {
        let g = build_hypercube(2).unwrap();
        assert_eq!(
            g.to_dot(),
            "graph {\n  // kind=hypercube n=2\n  0 -- 1;\n  0 -- 2;\n  1 -- 3;\n  2 -- 3;\n}\n"
        );
    }
}
