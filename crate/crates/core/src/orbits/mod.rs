//! Vertex-orbit partitions, computed three independent ways.
//!
//! * [`closure_orbits`] — connected components of the explicit generator
//!   family's action. Refines the true orbit partition, so its block count
//!   is an upper-bound certificate.
//! * [`exact_orbits`] — orbits of the full automorphism group, found by
//!   equitable-partition refinement plus individualization-refinement
//!   backtracking. Works on any small graph.
//! * [`signature_partition`] — grouping by the even-bit signature that
//!   every crossed-cube automorphism preserves; the closed-form answer.
//!
//! [`naive_orbits`] brute-forces all vertex permutations and exists purely
//! as an oracle for tiny fixtures.

mod refine;
mod search;
mod union_find;

use std::fmt;
use std::fmt::Write as _;

use itertools::Itertools;

use crate::automorphism::{permutation_preserves_edges, GeneratorSet};
use crate::bitaddress::{bit, Vertex, MAX_DIM};
use crate::error::{Error, Result};
use crate::orbits::refine::{refine_one, refine_pair};
use crate::orbits::search::Search;
use crate::orbits::union_find::UnionFind;
use crate::p4::parity_coloring;
use crate::topology::{CubeGraph, Graph};

/// Default vertex cap for the exact solver.
pub const DEFAULT_EXACT_CAP: usize = 128;

/// Vertex cap for the factorial-time oracle.
pub const NAIVE_CAP: usize = 8;

/// A disjoint cover of `0..vertex_count` into blocks. Blocks are sorted
/// internally and ordered by their smallest member, so equal partitions are
/// structurally equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitPartition {
    vertex_count: usize,
    blocks: Vec<Vec<Vertex>>,
}

impl OrbitPartition {
    fn from_blocks(vertex_count: usize, mut blocks: Vec<Vec<Vertex>>) -> OrbitPartition {
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_by_key(|block| block[0]);
        debug_assert!(
            {
                let mut all: Vec<Vertex> = blocks.iter().flatten().copied().collect();
                all.sort_unstable();
                all == (0..vertex_count as Vertex).collect::<Vec<_>>()
            },
            "blocks must partition the vertex set"
        );
        OrbitPartition {
            vertex_count,
            blocks,
        }
    }

    fn from_union_find(mut uf: UnionFind, vertex_count: usize) -> OrbitPartition {
        OrbitPartition::from_blocks(vertex_count, uf.blocks())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    /// Smallest member of each block, ascending.
    pub fn representatives(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.blocks.iter().map(|block| block[0])
    }
}

/// The even-bit tuple `(u_0, u_2, ..., u_{2(k-1)})` with
/// `k = ceil(n/2) - 2`; empty for `n <= 4`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Signature(Vec<u8>);

impl Signature {
    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Signature {
    /// Bits concatenated lowest-index first; `-` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for &b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

fn signature_width(n: usize) -> usize {
    (n.div_ceil(2)).saturating_sub(2)
}

/// The automorphism-invariant signature of a vertex.
pub fn signature(u: Vertex, n: usize) -> Signature {
    assert!((3..=MAX_DIM).contains(&n), "dimension {n} out of range");
    Signature(
        (0..signature_width(n))
            .map(|i| bit(u, 2 * i) as u8)
            .collect(),
    )
}

/// `2^(ceil(n/2) - 2)`, the closed-form orbit count for `n >= 3`.
pub fn orbit_count_formula(n: usize) -> Result<u64> {
    if !(3..=MAX_DIM).contains(&n) {
        return Err(Error::Dimension {
            n,
            min: 3,
            max: MAX_DIM,
        });
    }
    Ok(1 << signature_width(n))
}

/// Partition of `0..2^n` by equal signature: `2^(ceil(n/2)-2)` blocks of
/// `2^(floor(n/2)+2)` vertices each.
pub fn signature_partition(n: usize) -> Result<OrbitPartition> {
    if !(3..=MAX_DIM).contains(&n) {
        return Err(Error::Dimension {
            n,
            min: 3,
            max: MAX_DIM,
        });
    }
    let width = signature_width(n);
    let mut blocks = vec![Vec::new(); 1 << width];
    for u in 0..1u32 << n {
        let mut key = 0usize;
        for i in 0..width {
            key |= (bit(u, 2 * i) as usize) << i;
        }
        blocks[key].push(u);
    }
    Ok(OrbitPartition::from_blocks(1 << n, blocks))
}

/// Orbit partition of the subgroup generated by the explicit family:
/// connected components of `u -- m(u)` over all generators `m`.
pub fn closure_orbits(gens: &GeneratorSet) -> OrbitPartition {
    let size = 1usize << gens.n();
    let mut uf = UnionFind::new(size);
    for m in gens.maps() {
        for u in 0..size as Vertex {
            uf.union(u, m.apply(u));
        }
    }
    OrbitPartition::from_union_find(uf, size)
}

/// Exact orbit computation output: the partition plus every automorphism
/// the search discovered while merging classes (witnesses, not the whole
/// group).
#[derive(Clone, Debug)]
pub struct ExactOrbits {
    pub partition: OrbitPartition,
    pub automorphisms: Vec<Vec<Vertex>>,
}

/// Orbits of the full automorphism group under the default cap.
pub fn exact_orbits(g: &Graph) -> Result<OrbitPartition> {
    Ok(exact_orbits_detailed(g, DEFAULT_EXACT_CAP, None)?.partition)
}

/// Exact orbits with an explicit vertex cap and an optional seed coloring.
///
/// A seed must be respected by every automorphism of the graph: each vertex
/// maps to a vertex of its own seed color (the structural parity classifier
/// has this property by construction). Any valid seed yields the identical
/// partition; seeding only prunes the candidate pairing.
pub fn exact_orbits_detailed(g: &Graph, cap: usize, seed: Option<&[u32]>) -> Result<ExactOrbits> {
    let size = g.vertex_count();
    if size > cap {
        return Err(Error::SolverCap {
            vertices: size,
            cap,
        });
    }
    if size == 0 {
        return Ok(ExactOrbits {
            partition: OrbitPartition::from_blocks(0, Vec::new()),
            automorphisms: Vec::new(),
        });
    }
    let mut base = match seed {
        Some(colors) => {
            assert_eq!(colors.len(), size, "seed length mismatch");
            colors.to_vec()
        }
        None => vec![0; size],
    };
    let search = Search::new(g);
    refine_one(search.adjacency(), &mut base);
    let fresh = 1 + *base.iter().max().expect("nonempty");

    let mut uf = UnionFind::new(size);
    let mut automorphisms = Vec::new();
    for u in 0..size as Vertex {
        if uf.find(u) != u {
            continue;
        }
        for v in u + 1..size as Vertex {
            if base[v as usize] != base[u as usize] || uf.find(v) == u {
                continue;
            }
            let mut a = base.clone();
            let mut b = base.clone();
            a[u as usize] = fresh;
            b[v as usize] = fresh;
            if !refine_pair(search.adjacency(), &mut a, &mut b) {
                continue;
            }
            if let Some(perm) = search.find(&a, &b) {
                for w in 0..size as Vertex {
                    uf.union(w, perm[w as usize]);
                }
                automorphisms.push(perm);
            }
        }
    }
    Ok(ExactOrbits {
        partition: OrbitPartition::from_union_find(uf, size),
        automorphisms,
    })
}

/// Exact orbits of a crossed cube with the search seeded by the structural
/// parity classifier. Must agree with the unseeded run; it only prunes the
/// candidate pairing.
pub fn exact_orbits_parity_seeded(g: &CubeGraph, cap: usize) -> Result<ExactOrbits> {
    let seed = parity_coloring(g)?;
    exact_orbits_detailed(g.graph(), cap, Some(&seed))
}

/// Orbit oracle: tries every vertex permutation. Factorial time, capped at
/// 8 vertices.
pub fn naive_orbits(g: &Graph) -> Result<OrbitPartition> {
    let size = g.vertex_count();
    if size > NAIVE_CAP {
        return Err(Error::SolverCap {
            vertices: size,
            cap: NAIVE_CAP,
        });
    }
    let mut uf = UnionFind::new(size);
    for perm in (0..size as Vertex).permutations(size) {
        if permutation_preserves_edges(g, &perm) {
            for w in 0..size as Vertex {
                uf.union(w, perm[w as usize]);
            }
        }
    }
    Ok(OrbitPartition::from_union_find(uf, size))
}

/// How an orbit partition was computed, for reports.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrbitMethod {
    Closure,
    Exact,
    Signature,
    Naive,
}

impl OrbitMethod {
    pub fn name(self) -> &'static str {
        match self {
            OrbitMethod::Closure => "closure",
            OrbitMethod::Exact => "exact",
            OrbitMethod::Signature => "signature",
            OrbitMethod::Naive => "naive",
        }
    }
}

/// Orbit report text. Field order is fixed: `n`, `method`, `orbit_count`,
/// then one `block size=<s> rep=<r> sig=<bits|->` line per block in
/// representative order.
pub fn render_report(n: usize, method: OrbitMethod, partition: &OrbitPartition) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n={n}");
    let _ = writeln!(out, "method={}", method.name());
    let _ = writeln!(out, "orbit_count={}", partition.block_count());
    for block in partition.blocks() {
        let rep = block[0];
        let _ = writeln!(
            out,
            "block size={} rep={} sig={}",
            block.len(),
            rep,
            signature(rep, n)
        );
    }
    out
}
