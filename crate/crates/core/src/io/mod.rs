//! Algebra files, named fixtures and the generated corpus.

pub mod corpus;
pub mod fixtures;
pub mod format;

pub use format::{parse_algebra, serialize_algebra, AlgebraFile, AnyAlgebra, FORMAT_VERSION};


