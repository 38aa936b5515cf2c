//! Exact coefficient arithmetic: arbitrary-precision rationals, Laurent
//! polynomials in one named variable, their fraction field, and dense exact
//! matrices over that field.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so everything here is freely shareable across threads.

mod laurent;
mod matrix;
mod numeric;
mod parse;
mod ratfun;

pub use laurent::LaurentPolynomial;
pub use matrix::ExactMatrix;
pub use numeric::RatMatrix;
pub use parse::parse_rational_function;
pub use ratfun::RationalFunction;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

/// The variable a polynomial or rational function is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(Var, Var),
    #[error("pole at evaluation point {0}")]
    PoleAtPoint(String),
    #[error("zero substituted into a negative exponent")]
    ZeroNegativeExponent,
    #[error("matrix shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("parse error: {0}")]
    Parse(String),
}

pub(crate) fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn big_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
