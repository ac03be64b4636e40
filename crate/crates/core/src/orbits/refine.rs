//! Color refinement run in lockstep over two colorings of one graph.
//!
//! Each round replaces a vertex color by the rank of its signature — own
//! color plus the sorted multiset of neighbor colors — ranked over the
//! union of both sides' signatures. The two sides therefore keep comparable
//! color ids round by round, and a mismatch in the per-signature counts
//! proves that no color-preserving automorphism can map one side onto the
//! other.

use crate::bitaddress::Vertex;

type ColorSig = (u32, Vec<u32>);

fn signatures(adj: &[Vec<Vertex>], colors: &[u32]) -> Vec<ColorSig> {
    adj.iter()
        .enumerate()
        .map(|(v, nbrs)| {
            let mut around: Vec<u32> = nbrs.iter().map(|&w| colors[w as usize]).collect();
            around.sort_unstable();
            (colors[v], around)
        })
        .collect()
}

fn color_count(colors: &[u32]) -> usize {
    colors.iter().max().map_or(0, |&c| c as usize + 1)
}

/// Refines `a` and `b` to the joint stable partition. Returns false as soon
/// as the signature histograms diverge; in that case the colorings are left
/// mid-refinement and must be discarded.
pub(crate) fn refine_pair(adj: &[Vec<Vertex>], a: &mut [u32], b: &mut [u32]) -> bool {
    let mut known = color_count(a).max(color_count(b));
    loop {
        let sig_a = signatures(adj, a);
        let sig_b = signatures(adj, b);

        let mut ranked: Vec<&ColorSig> = sig_a.iter().chain(sig_b.iter()).collect();
        ranked.sort_unstable();
        ranked.dedup();

        let rank_of = |sig: &ColorSig| ranked.binary_search(&sig).expect("own signature");
        let mut count_a = vec![0u32; ranked.len()];
        let mut count_b = vec![0u32; ranked.len()];
        for (v, sig) in sig_a.iter().enumerate() {
            let r = rank_of(sig);
            count_a[r] += 1;
            a[v] = r as u32;
        }
        for (v, sig) in sig_b.iter().enumerate() {
            let r = rank_of(sig);
            count_b[r] += 1;
            b[v] = r as u32;
        }
        if count_a != count_b {
            return false;
        }
        if ranked.len() == known {
            return true;
        }
        known = ranked.len();
    }
}

/// Refines a single coloring to its stable partition.
pub(crate) fn refine_one(adj: &[Vec<Vertex>], colors: &mut [u32]) {
    let mut mirror = colors.to_vec();
    let compatible = refine_pair(adj, colors, &mut mirror);
    debug_assert!(compatible, "a coloring is always compatible with itself");
}
