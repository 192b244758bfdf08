//! The generator-word calculus: letters, normal forms, lattice paths and
//! the diagonal conditional expectation.

mod element;
mod lattice;
mod reduce;

pub use element::{multiply, DiagonalElement, GeneralElement, Operand, RandomVariable};
pub use lattice::{lattice_path, star_axis_property, LatticePath};
pub use reduce::{reduce, Letter, Mode, Monomial, NormalForm};
