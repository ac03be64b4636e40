//! Crossed-cube topologies, their automorphisms, and vertex-orbit analysis.
//!
//! The crossed cube twists the ordinary hypercube's edge rule through a
//! fixed involution on 2-bit address blocks, which destroys vertex
//! transitivity once the dimension passes four. This crate materializes the
//! graphs, constructs the explicit automorphism families, and computes the
//! vertex-orbit partition by three independent routes — generator closure,
//! an exact individualization-refinement solver, and the even-bit signature
//! — all of which agree with the closed-form count `2^(ceil(n/2) - 2)`.
//!
//! ```
//! use crossed_cubes::automorphism::generator_set;
//! use crossed_cubes::orbits::{closure_orbits, exact_orbits, orbit_count_formula};
//! use crossed_cubes::topology::build_cq;
//!
//! let cube = build_cq(5).unwrap();
//! let exact = exact_orbits(cube.graph()).unwrap();
//! let closure = closure_orbits(&generator_set(5).unwrap());
//! assert_eq!(exact, closure);
//! assert_eq!(exact.block_count() as u64, orbit_count_formula(5).unwrap());
//! ```

pub mod automorphism;
pub mod bitaddress;
mod error;
pub mod orbits;
pub mod p4;
pub mod topology;

pub use error::{Error, Result};
