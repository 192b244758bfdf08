//! Symbolic computation in graph W*-probability spaces.
//!
//! Words in creation and annihilation operators over a directed multigraph
//! are reduced to normal form, the diagonal conditional expectation is
//! evaluated exactly, and amalgamated moments and cumulants are obtained by
//! Möbius inversion over noncrossing partitions. A truncated Fock-space
//! representation in [`fock`] serves as an independent numerical check.

pub mod compress;
pub mod error;
pub mod fock;
pub mod freeprob;
pub mod graph;
pub mod io;
pub mod ncpart;
pub mod opcalc;
pub mod scalar;

pub use error::{Error, Result};
pub use graph::{Graph, GraphSpec, VertexId, Word};
pub use ncpart::NoncrossingPartition;
pub use opcalc::{
    DiagonalElement, GeneralElement, Letter, Mode, Monomial, NormalForm, RandomVariable,
};
pub use scalar::Scalar;
