//! Exact computer algebra for 0-dimensional subschemes of projective space.
//!
//! The crate builds a scheme from per-point primary components or from a raw
//! homogeneous ideal, and computes its Hilbert function, Kähler and Noether
//! differents, conductor, separators and structural classification
//! (Cayley–Bacharach, Gorenstein, complete intersection).

pub mod different;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod scheme;
pub mod structure;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use field::{Field, Scalar, DEFAULT_PRIME};
pub use poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Ring, RingKind};
