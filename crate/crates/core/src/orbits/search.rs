//! Individualization-refinement search for automorphisms between two
//! colored copies of one graph.
//!
//! The search keeps two colorings of the same graph — source and target —
//! refined in lockstep. While some cell is non-singleton it individualizes
//! the smallest source vertex of the first such cell against each target
//! candidate in ascending order. A discrete pair of colorings proposes the
//! color-matching permutation, which is accepted only if it preserves edges.

use crate::bitaddress::Vertex;
use crate::orbits::refine::refine_pair;
use crate::topology::Graph;

pub(crate) struct Search<'g> {
    graph: &'g Graph,
    adj: Vec<Vec<Vertex>>,
}

impl<'g> Search<'g> {
    pub fn new(graph: &'g Graph) -> Search<'g> {
        let size = graph.vertex_count() as Vertex;
        let adj = (0..size).map(|v| graph.neighbors(v).to_vec()).collect();
        Search { graph, adj }
    }

    /// First automorphism consistent with the two colorings, if any.
    /// `a` and `b` must already be refined and compatible.
    pub fn find(&self, a: &[u32], b: &[u32]) -> Option<Vec<Vertex>> {
        let size = self.adj.len();
        let colors = 1 + *a.iter().max().expect("nonempty") as usize;
        if colors == size {
            return self.read_discrete(a, b);
        }

        let cell = first_wide_color(a);
        let source = a.iter().position(|&c| c == cell).expect("cell member") as Vertex;
        let fresh = colors as u32;
        for cand in 0..size as Vertex {
            if b[cand as usize] != cell {
                continue;
            }
            let mut next_a = a.to_vec();
            let mut next_b = b.to_vec();
            next_a[source as usize] = fresh;
            next_b[cand as usize] = fresh;
            if !refine_pair(&self.adj, &mut next_a, &mut next_b) {
                continue;
            }
            if let Some(found) = self.find(&next_a, &next_b) {
                return Some(found);
            }
        }
        None
    }

    /// Both colorings discrete: pair vertices by color and verify.
    fn read_discrete(&self, a: &[u32], b: &[u32]) -> Option<Vec<Vertex>> {
        let size = self.adj.len();
        let mut target_of_color = vec![0 as Vertex; size];
        for (v, &c) in b.iter().enumerate() {
            target_of_color[c as usize] = v as Vertex;
        }
        let perm: Vec<Vertex> = a.iter().map(|&c| target_of_color[c as usize]).collect();
        let ok = self
            .graph
            .edges()
            .all(|(u, v)| self.graph.has_edge(perm[u as usize], perm[v as usize]));
        ok.then_some(perm)
    }

    pub fn adjacency(&self) -> &[Vec<Vertex>] {
        &self.adj
    }
}

/// Smallest color id whose cell holds more than one vertex.
fn first_wide_color(colors: &[u32]) -> u32 {
    let mut counts = vec![0u32; colors.len()];
    for &c in colors {
        counts[c as usize] += 1;
    }
    counts
        .iter()
        .position(|&c| c > 1)
        .expect("a non-discrete coloring has a wide cell") as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::refine::refine_one;
    use crate::topology::Graph;

    fn mapping(g: &Graph, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        let search = Search::new(g);
        let mut base = vec![0u32; g.vertex_count()];
        refine_one(search.adjacency(), &mut base);
        if base[u as usize] != base[v as usize] {
            return None;
        }
        let fresh = 1 + *base.iter().max().unwrap();
        let mut a = base.clone();
        let mut b = base;
        a[u as usize] = fresh;
        b[v as usize] = fresh;
        if !refine_pair(search.adjacency(), &mut a, &mut b) {
            return None;
        }
        search.find(&a, &b)
    }

    #[test]
    fn path_symmetry() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let found = mapping(&g, 0, 2).expect("reflection exists");
        assert_eq!(found, vec![2, 1, 0]);
        assert!(mapping(&g, 0, 1).is_none());
    }

    #[test]
    fn square_rotations() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        for v in 1..4 {
            let found = mapping(&g, 0, v).expect("4-cycle is vertex-transitive");
            assert_eq!(found[0], v);
        }
    }

    #[test]
    fn asymmetric_pair_rejected() {
        // Triangle with a pendant: 3 attaches only to 0.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]);
        assert!(mapping(&g, 0, 1).is_none());
        assert!(mapping(&g, 1, 2).is_some());
    }
}
