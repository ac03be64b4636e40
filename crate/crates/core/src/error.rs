use crate::bitaddress::Vertex;

/// Errors reported by graph construction, generator construction, and the
/// orbit solvers.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension n={n} outside supported range {min}..={max}")]
    Dimension { n: usize, min: usize, max: usize },

    #[error("f_{k} is not in the flip families for n={n}: k must be odd or in {{n-2, n-1}}")]
    FlipFamily { k: usize, n: usize },

    #[error("f_{k} is edge-preserving for n={n}; no counterexample exists")]
    FlipIsAutomorphism { k: usize, n: usize },

    #[error("no counterexample edge found for f_{k} on n={n}")]
    NoCounterexample { k: usize, n: usize },

    #[error("conditional generator requires an {expected} dimension, got n={n}")]
    Parity { n: usize, expected: &'static str },

    #[error("map '{label}' is not a bijection")]
    NotBijective { label: String },

    #[error("graph has {vertices} vertices, over the solver cap of {cap}")]
    SolverCap { vertices: usize, cap: usize },

    #[error("operation requires a crossed cube, got a hypercube")]
    NotCrossed,

    #[error("vertex {v} is odd; an even vertex is required")]
    OddVertex { v: Vertex },

    #[error("witness pair ({a}, {b}) around vertex {center} is not joined by a 4-vertex path")]
    WitnessNotConnected {
        center: Vertex,
        a: Vertex,
        b: Vertex,
    },

    #[error("map text: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
