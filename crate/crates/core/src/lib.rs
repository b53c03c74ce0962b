//! Exact computations with finite-dimensional Leibniz algebras.
//!
//! Algebras are given by structure constants over the rationals or a finite
//! field. The crate computes series, radicals, Fitting and Cartan
//! decompositions, decides whether every nilpotent subalgebra is abelian,
//! and classifies cyclic Leibniz algebras by their companion polynomial.

pub mod a_algebra;
pub mod algebra;
pub mod cyclic;
pub mod decomp;
pub mod error;
pub mod field;
pub mod io;
pub mod report;
pub mod series;

pub use algebra::{LeibnizAlgebra, Side, SubHandle, Violation};
pub use error::{Error, Result};
pub use field::{AnyField, Field, FieldDescriptor, Gf, Matrix, Poly, Rationals, Subspace};
