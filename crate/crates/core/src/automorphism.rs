//! Explicit automorphism families of the crossed cube, verification of
//! arbitrary vertex maps, even-flip counterexamples, and the two-dimension
//! reduction of an automorphism.
//!
//! The families: every odd-index bit flip, the even flip among the top two
//! indices, and a conditional map that flips one low index of the top window
//! always and its neighbor index depending on the two leading bits. Together
//! these generate enough of the automorphism group to pin the orbit count
//! from above.

use std::fmt::Write as _;

use crate::bitaddress::{bit, flip, Vertex, MAX_DIM};
use crate::error::{Error, Result};
use crate::topology::{neighbor_cq, CubeGraph, Graph};

/// A total map on the vertex set of an n-cube, materialized as an image
/// table. Construction checks bijectivity, so a held value is always a
/// permutation of `0..2^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexMap {
    n: usize,
    label: String,
    image: Vec<Vertex>,
}

impl VertexMap {
    pub fn identity(n: usize) -> VertexMap {
        assert!((1..=MAX_DIM).contains(&n));
        VertexMap {
            n,
            label: "id".into(),
            image: (0..1 << n).collect(),
        }
    }

    /// Wraps an image table, rejecting anything that is not a bijection
    /// on `0..2^n`.
    pub fn from_image(n: usize, label: &str, image: Vec<Vertex>) -> Result<VertexMap> {
        assert!((1..=MAX_DIM).contains(&n));
        let size = 1usize << n;
        let mut seen = vec![false; size];
        let valid = image.len() == size
            && image.iter().all(|&v| {
                let v = v as usize;
                v < size && !std::mem::replace(&mut seen[v], true)
            });
        if !valid {
            return Err(Error::NotBijective {
                label: label.to_string(),
            });
        }
        Ok(VertexMap {
            n,
            label: label.to_string(),
            image,
        })
    }

    pub fn from_fn(n: usize, label: &str, f: impl Fn(Vertex) -> Vertex) -> Result<VertexMap> {
        let image = (0..1u32 << n).map(f).collect();
        VertexMap::from_image(n, label, image)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn image(&self) -> &[Vertex] {
        &self.image
    }

    pub fn apply(&self, u: Vertex) -> Vertex {
        self.image[u as usize]
    }

    /// True iff applying the map twice is the identity.
    pub fn is_involution(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(u, &v)| self.image[v as usize] == u as Vertex)
    }

    pub fn is_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(u, &v)| u as Vertex == v)
    }

    /// Text form: a `# map n=<n> label=<label>` header, then one `u phi(u)`
    /// line per vertex in decimal, sorted by `u`.
    pub fn to_text(&self) -> String {
        let mut out = format!("# map n={} label={}\n", self.n, self.label);
        for (u, &v) in self.image.iter().enumerate() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the text form produced by [`VertexMap::to_text`].
    pub fn from_text(text: &str) -> Result<VertexMap> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?;
        let rest = header
            .strip_prefix("# map n=")
            .ok_or_else(|| Error::Parse(format!("bad header: {header}")))?;
        let (n_str, label) = rest
            .split_once(" label=")
            .ok_or_else(|| Error::Parse(format!("bad header: {header}")))?;
        let n: usize = n_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad n: {n_str}")))?;
        if !(1..=MAX_DIM).contains(&n) {
            return Err(Error::Dimension {
                n,
                min: 1,
                max: MAX_DIM,
            });
        }
        let mut image = vec![0; 1 << n];
        let mut defined = vec![false; 1 << n];
        for line in lines {
            let (u, v) = line
                .split_once(' ')
                .ok_or_else(|| Error::Parse(format!("bad line: {line}")))?;
            let u: usize = u
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex: {u}")))?;
            let v: Vertex = v
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex: {v}")))?;
            if u >= image.len() {
                return Err(Error::Parse(format!("vertex {u} out of range")));
            }
            if std::mem::replace(&mut defined[u], true) {
                return Err(Error::Parse(format!("vertex {u} listed twice")));
            }
            image[u] = v;
        }
        if let Some(missing) = defined.iter().position(|&d| !d) {
            return Err(Error::Parse(format!("vertex {missing} has no image")));
        }
        VertexMap::from_image(n, label, image)
    }
}

/// The explicit generator family for one dimension.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    n: usize,
    maps: Vec<VertexMap>,
}

impl GeneratorSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn maps(&self) -> &[VertexMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

/// The single-bit flip `u -> f_k(u)`, admitted only for the indices where
/// it preserves edges: odd `k`, or `k` in `{n-2, n-1}`.
pub fn gen_flip(k: usize, n: usize) -> Result<VertexMap> {
    if !(2..=MAX_DIM).contains(&n) {
        return Err(Error::Dimension {
            n,
            min: 2,
            max: MAX_DIM,
        });
    }
    if k >= n || (k.is_multiple_of(2) && k != n - 1 && k != n - 2) {
        return Err(Error::FlipFamily { k, n });
    }
    VertexMap::from_fn(n, &format!("f{k}"), |u| flip(u, k))
}

/// The conditional map for odd `n >= 3`: flip bit `n-3`, and bit `n-2` as
/// well when the leading bit is set. An involution.
pub fn gen_conditional_odd_n(n: usize) -> Result<VertexMap> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::Parity { n, expected: "odd" });
    }
    if n > MAX_DIM {
        return Err(Error::Dimension {
            n,
            min: 3,
            max: MAX_DIM,
        });
    }
    VertexMap::from_fn(n, "cond", |u| {
        if bit(u, n - 1) == 0 {
            flip(u, n - 3)
        } else {
            flip(flip(u, n - 2), n - 3)
        }
    })
}

/// The conditional map for even `n >= 4`: flip bit `n-4`, and bit `n-3` as
/// well when the two leading bits differ. An involution.
///
/// The branch condition `u_{n-1} != u_{n-2}` is the unique one (together
/// with its complement) under which this shape is a bijection at all: the
/// two branches must map the top window onto disjoint halves, which forces
/// the condition to be constant on each low-2-bit coset of the window.
pub fn gen_conditional_even_n(n: usize) -> Result<VertexMap> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::Parity {
            n,
            expected: "even",
        });
    }
    if n > MAX_DIM {
        return Err(Error::Dimension {
            n,
            min: 4,
            max: MAX_DIM,
        });
    }
    VertexMap::from_fn(n, "cond", |u| {
        if bit(u, n - 1) != bit(u, n - 2) {
            flip(flip(u, n - 3), n - 4)
        } else {
            flip(u, n - 4)
        }
    })
}

/// All explicit generators for dimension `n >= 3`: the odd flips in
/// ascending order, the even flip among `{f_{n-1}, f_{n-2}}`, then the
/// conditional map. Exactly `n/2 + 2` maps.
pub fn generator_set(n: usize) -> Result<GeneratorSet> {
    if !(3..=MAX_DIM).contains(&n) {
        return Err(Error::Dimension {
            n,
            min: 3,
            max: MAX_DIM,
        });
    }
    let mut maps = Vec::with_capacity(n / 2 + 2);
    for k in (1..n).step_by(2) {
        maps.push(gen_flip(k, n)?);
    }
    let even_k = if (n - 1).is_multiple_of(2) {
        n - 1
    } else {
        n - 2
    };
    maps.push(gen_flip(even_k, n)?);
    maps.push(if n % 2 == 1 {
        gen_conditional_odd_n(n)?
    } else {
        gen_conditional_even_n(n)?
    });
    debug_assert_eq!(maps.len(), n / 2 + 2);
    Ok(GeneratorSet { n, maps })
}

/// True iff the permutation maps every edge of `g` to an edge.
///
/// For a permutation of a finite graph the forward direction suffices: the
/// image of the edge set has the same cardinality, so it equals the edge
/// set and non-edges map to non-edges as well.
pub fn permutation_preserves_edges(g: &Graph, perm: &[Vertex]) -> bool {
    assert_eq!(perm.len(), g.vertex_count());
    g.edges()
        .all(|(u, v)| g.has_edge(perm[u as usize], perm[v as usize]))
}

/// True iff `m` is an automorphism of `g`. Bijectivity is a construction
/// invariant of [`VertexMap`], so only edge preservation is tested.
pub fn is_automorphism(g: &CubeGraph, m: &VertexMap) -> bool {
    assert_eq!(g.n(), m.n(), "dimension mismatch");
    permutation_preserves_edges(g.graph(), m.image())
}

/// Finds the first edge of `g` (in ascending order) whose image under the
/// even flip `f_k` is a non-edge. Such an edge exists for every even `k`
/// outside `{n-2, n-1}` once `n >= 5`.
pub fn counterexample_even_flip(g: &CubeGraph, k: usize) -> Result<(Vertex, Vertex)> {
    let n = g.n();
    if n < 5 {
        return Err(Error::Dimension {
            n,
            min: 5,
            max: MAX_DIM,
        });
    }
    if k >= n || k % 2 == 1 || k == n - 1 || k == n - 2 {
        return Err(Error::FlipIsAutomorphism { k, n });
    }
    for (u, v) in g.graph().edges() {
        if !g.has_edge(flip(u, k), flip(v, k)) {
            return Ok((u, v));
        }
    }
    Err(Error::NoCounterexample { k, n })
}

/// True iff `m` commutes with the 0th- and 1st-neighbor maps: the image of
/// the kth neighbor of `u` is the kth neighbor of the image, for k in {0,1}.
pub fn preserves_low_neighbors(g: &CubeGraph, m: &VertexMap) -> bool {
    assert_eq!(g.n(), m.n(), "dimension mismatch");
    let n = g.n();
    (0..1u32 << n)
        .all(|u| (0..2).all(|k| m.apply(neighbor_cq(u, k, n)) == neighbor_cq(m.apply(u), k, n)))
}

/// Drops the two low dimensions of an automorphism of an (n+2)-cube:
/// `v -> floor(m(4v) / 4)`. For an automorphism of the larger crossed cube
/// the result is again a bijection (and an automorphism of the smaller one);
/// a non-bijective result is reported as an error.
pub fn reduce(m: &VertexMap) -> Result<VertexMap> {
    if m.n() < 7 {
        return Err(Error::Dimension {
            n: m.n(),
            min: 7,
            max: MAX_DIM,
        });
    }
    let small = m.n() - 2;
    let image = (0..1u32 << small).map(|v| m.apply(v << 2) >> 2).collect();
    VertexMap::from_image(small, &format!("reduced-{}", m.label()), image)
}
