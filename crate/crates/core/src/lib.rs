//! Exact computations with finite-dimensional bound quiver algebras and
//! their modules: syzygies, torsion layers, dimension bounds and
//! bracket-membership searches.

pub mod algebra;
pub mod bounds;
pub mod bracket;
pub mod corpus;
pub mod error;
pub mod field;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod rep;
pub mod syzygy;
pub mod torsion;

#[cfg(test)]
pub(crate) mod testing;

pub use algebra::{BoundQuiverAlgebra, PathWord, Quiver, Relation};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use linalg::Matrix;
pub use rep::{Morphism, Representation, Submodule};
