//! Monomials, polynomials, the text grammar and Jacobian minors.

pub mod jacobian;
pub mod monomial;
pub mod parse;
pub mod polynomial;

pub use jacobian::{combinations, determinant, jacobian_minors};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::{ArithOp, Polynomial, Ring, RingKind};
