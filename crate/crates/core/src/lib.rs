//! Density operators from weighted graphs and the separability criteria that
//! act on them.
//!
//! A graph on `2^n` vertices defines a quantum state through its normalised
//! Laplacian. This crate builds those states for both weight fields (real and
//! complex), evaluates a catalog of separability criteria across a chosen
//! qubit bipartition (block-decomposition feasibility, commuting blocks,
//! edge/neighbourhood structure, partial-gate invariance, equivalence
//! relations, a spectral test), expands feasibility certificates into explicit
//! convex product decompositions, and provides an independent PPT/Schmidt
//! oracle to audit every verdict.
//!
//! The crate is `no_std` (with `alloc`); all operations are pure functions
//! over immutable values. IO, file formats beyond the plain text graph
//! format, and the CLI live in the companion `gsep-cli` crate.

#![cfg_attr(not(test), no_std)]
// dense-matrix kernels read better with explicit indices
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod criteria;
pub mod cut;
pub mod density;
pub mod eig;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod matrix;
pub mod oracle;
pub mod tol;

pub use cut::{BlockGrid, Cut, Side, VertexCoord};
pub use density::DensityMatrix;
pub use graph::{Field, WeightedGraph};
pub use matrix::{CMatrix, HermitianMatrix};
pub use tol::Tolerances;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex<f64>;
