//! Exact computations in the module category of a finite-dimensional algebra:
//! radical powers, degrees of morphisms, Auslander-Reiten data, and checkers
//! for the known relations between degrees, kernels and compositions of
//! irreducible morphisms.
//!
//! Conventions used throughout:
//! - vectors are rows and matrices act on the right (`x -> x * A`);
//! - modules are right modules, given by one action matrix per basis element
//!   of the algebra;
//! - `compose(g, f)` applies `g` first, so its matrix is `g * f`.

pub mod error;
pub mod field;
pub mod linalg;
pub mod algebra;
pub mod module;
pub mod catalogue;
pub mod radical;
pub mod ar;
pub mod fleet;
pub mod degrees;
pub mod poly;

pub use error::{Error, Result};
pub use field::{Field, FieldKind, FieldSpec, Scalar};
pub use linalg::{ExactMatrix, QuotientSpace, Rref, Solver, SubspaceBasis};
pub use algebra::Algebra;
pub use catalogue::Catalogue;
pub use module::{HomSpace, Module, Morphism};
pub use radical::{Level, RadicalTable, DEFAULT_CAP};
