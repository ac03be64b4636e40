//! P4-reachability graphs of vertex neighborhoods and the K4 parity
//! classifier.
//!
//! Two vertices of a subset are joined in the derived graph when the host
//! contains a simple path on exactly four vertices between them. The
//! interior vertices are unrestricted — they may lie inside the subset or
//! be the neighborhood's own center. In a crossed cube of dimension at
//! least 5, the derived graph of `N(v)` contains a K4 exactly when `v` is
//! even, which makes K4 presence a structural (address-free) parity test.

use std::fmt::Write as _;

use crate::bitaddress::{flip, is_even, Vertex, MAX_BUILD_DIM};
use crate::error::{Error, Result};
use crate::topology::{CubeGraph, CubeKind};

/// Structural parity verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

/// Derived graph on a vertex subset whose edges mark P4-reachability in the
/// host cube.
#[derive(Clone, Debug)]
pub struct P4Graph {
    host_kind: CubeKind,
    host_n: usize,
    center: Option<Vertex>,
    vertices: Vec<Vertex>,
    adj: Vec<Vec<bool>>,
}

impl P4Graph {
    /// Subset vertices, sorted, labeled as in the host.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Center vertex when the subset is an open neighborhood.
    pub fn center(&self) -> Option<Vertex> {
        self.center
    }

    pub fn has_edge(&self, x: Vertex, y: Vertex) -> bool {
        match (self.index_of(x), self.index_of(y)) {
            (Some(i), Some(j)) => i != j && self.adj[i][j],
            _ => false,
        }
    }

    /// Edges with host labels, `(x, y)` with `x < y`, ascending.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                if self.adj[i][j] {
                    out.push((self.vertices[i], self.vertices[j]));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    fn index_of(&self, x: Vertex) -> Option<usize> {
        self.vertices.binary_search(&x).ok()
    }

    fn header(&self) -> String {
        let center = match self.center {
            Some(c) => c.to_string(),
            None => "-".to_string(),
        };
        format!(
            "p4 host={} n={} center={} vertices={} edges={} k4={}",
            self.host_kind.name(),
            self.host_n,
            center,
            self.vertex_count(),
            self.edge_count(),
            if contains_k4(self) { "yes" } else { "no" },
        )
    }

    /// Edge-list text in the cube format, with a header noting the host
    /// graph, the subset center, and the K4 verdict.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# {}\n", self.header());
        for (x, y) in self.edges() {
            let _ = writeln!(out, "{x} {y}");
        }
        out
    }

    /// DOT text, node IDs decimal; isolated subset vertices are listed so
    /// the vertex set survives the round trip.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        let _ = writeln!(out, "  // {}", self.header());
        let edges = self.edges();
        for (i, &x) in self.vertices.iter().enumerate() {
            if self.adj[i].iter().all(|&e| !e) {
                let _ = writeln!(out, "  {x};");
            }
        }
        for (x, y) in edges {
            let _ = writeln!(out, "  {x} -- {y};");
        }
        out.push_str("}\n");
        out
    }
}

/// True iff the host contains a simple 4-vertex path from `x` to `y`:
/// distinct interior vertices `a, b` with `xa`, `ab`, `by` all edges and
/// `{x, a, b, y}` pairwise distinct. Symmetric in `x` and `y`.
pub fn has_p4(g: &CubeGraph, x: Vertex, y: Vertex) -> bool {
    assert_ne!(x, y, "path endpoints must differ");
    g.neighbors(x).iter().any(|&a| {
        a != y
            && g.neighbors(y)
                .iter()
                .any(|&b| b != x && b != a && g.has_edge(a, b))
    })
}

/// Derived P4 graph over an arbitrary subset of the host's vertices.
pub fn p4_graph(g: &CubeGraph, subset: &[Vertex]) -> P4Graph {
    let mut vertices: Vec<Vertex> = subset.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    for &v in &vertices {
        assert!((v as usize) < g.vertex_count(), "vertex {v} out of range");
    }
    let count = vertices.len();
    let mut adj = vec![vec![false; count]; count];
    for i in 0..count {
        for j in i + 1..count {
            if has_p4(g, vertices[i], vertices[j]) {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    P4Graph {
        host_kind: g.kind(),
        host_n: g.n(),
        center: None,
        vertices,
        adj,
    }
}

/// Derived P4 graph of the open neighborhood of `v`.
pub fn neighborhood_p4(g: &CubeGraph, v: Vertex) -> P4Graph {
    let mut h = p4_graph(g, g.neighbors(v));
    h.center = Some(v);
    h
}

/// True iff some four subset vertices are pairwise P4-reachable. Brute
/// force over 4-subsets; neighborhoods have only `n` vertices.
pub fn contains_k4(h: &P4Graph) -> bool {
    let count = h.vertices.len();
    for a in 0..count {
        for b in a + 1..count {
            if !h.adj[a][b] {
                continue;
            }
            for c in b + 1..count {
                if !h.adj[a][c] || !h.adj[b][c] {
                    continue;
                }
                for d in c + 1..count {
                    if h.adj[a][d] && h.adj[b][d] && h.adj[c][d] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// The four neighbors of an even vertex obtained by flipping bits 0..=3.
/// With the low bit clear every suffix block is self-paired, so these are
/// plain flips, and the six pairs among them are all P4-reachable — the
/// quadruple witnesses the K4.
pub fn k4_witness_even(g: &CubeGraph, u: Vertex) -> Result<[Vertex; 4]> {
    require_classifier_domain(g)?;
    assert!((u as usize) < g.vertex_count(), "vertex {u} out of range");
    if !is_even(u) {
        return Err(Error::OddVertex { v: u });
    }
    let quad = [flip(u, 0), flip(u, 1), flip(u, 2), flip(u, 3)];
    debug_assert!(quad.iter().all(|&w| g.has_edge(u, w)));
    for i in 0..4 {
        for j in i + 1..4 {
            if !has_p4(g, quad[i], quad[j]) {
                return Err(Error::WitnessNotConnected {
                    center: u,
                    a: quad[i],
                    b: quad[j],
                });
            }
        }
    }
    Ok(quad)
}

/// Structural parity: even iff the neighborhood's P4 graph contains a K4.
/// Uses no address bits, so it is invariant under any automorphism.
pub fn parity_classifier(g: &CubeGraph, v: Vertex) -> Result<Parity> {
    require_classifier_domain(g)?;
    assert!((v as usize) < g.vertex_count(), "vertex {v} out of range");
    if contains_k4(&neighborhood_p4(g, v)) {
        Ok(Parity::Even)
    } else {
        Ok(Parity::Odd)
    }
}

/// Classifier output for every vertex as a 2-coloring, usable as an
/// invariant seed for the exact orbit solver.
pub fn parity_coloring(g: &CubeGraph) -> Result<Vec<u32>> {
    (0..g.vertex_count() as Vertex)
        .map(|v| {
            Ok(match parity_classifier(g, v)? {
                Parity::Even => 0,
                Parity::Odd => 1,
            })
        })
        .collect()
}

fn require_classifier_domain(g: &CubeGraph) -> Result<()> {
    if g.kind() != CubeKind::Crossed {
        return Err(Error::NotCrossed);
    }
    if g.n() < 5 {
        return Err(Error::Dimension {
            n: g.n(),
            min: 5,
            max: MAX_BUILD_DIM,
        });
    }
    Ok(())
}
