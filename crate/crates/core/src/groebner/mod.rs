//! Gröbner bases and ideal arithmetic.

mod buchberger;
pub mod ideal;
pub mod quotient;

pub use ideal::{IdealHandle, IdealOp};
pub use quotient::QuotientBasis;
