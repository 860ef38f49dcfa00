//! Exact arithmetic in GF(p^a).
//!
//! A [`Field`] owns its arithmetic tables and is shared through [`Fq`]
//! (an `Arc`). Bulk code (matrices, polynomials) stores raw `u32` encodings
//! and calls the field's raw methods; [`FieldElement`] is the value type for
//! everything else and refuses to mix elements of different fields.

mod element;
mod field;
mod primepoly;

pub use element::FieldElement;
pub use field::{Embedding, Field, FieldDescriptor, FieldSpec, Fq};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus is reducible")]
    ReducibleModulus,
    #[error("modulus must be monic")]
    NotMonic,
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("coefficient out of range for characteristic {0}")]
    CoefficientRange(u64),
    #[error("field {p}^{degree} is too large")]
    TooLarge { p: u64, degree: u32 },
    #[error("cannot parse field or element from {0:?}")]
    Syntax(String),
    #[error("element is zero")]
    ZeroElement,
    #[error("operation needs characteristic 2")]
    WrongCharacteristic,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("source field does not embed in target")]
    NotSubfield,
    #[error("no primitive {n}-th root of unity exists in characteristic {p}")]
    NoRootOfUnity { n: u64, p: u64 },
}

#[cfg(test)]
mod tests;
