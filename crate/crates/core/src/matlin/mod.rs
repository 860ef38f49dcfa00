//! Dense linear algebra over finite fields.

mod algebra;
pub mod io;
mod matrix;
mod order;
mod poly;
mod smith;
mod subspace;

pub use algebra::{
    absolutely_irreducible, centralizer, common_fixed_space, common_fixed_space_transposed, enveloping_algebra_dim,
    hom_space, spin,
};
pub use matrix::Matrix;
pub use order::{element_order, projective_order, ElementOrder, DEFAULT_ORDER_CAP};
pub use poly::Polynomial;
pub use smith::{charpoly, minpoly, similarity_invariants, smith_diagonal};
pub use subspace::Subspace;

pub(crate) use subspace::unit;

use thiserror::Error;

use crate::ff::FieldError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimensions do not match")]
    SizeMismatch,
    #[error("matrices over different fields")]
    FieldMismatch,
    #[error("entry out of range for the field")]
    EntryRange,
    #[error("matrix is singular")]
    Singular,
    #[error("empty generator list")]
    Empty,
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[cfg(test)]
mod tests;
