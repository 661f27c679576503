//! Sparse multivariate polynomials over the rationals.

mod gcd;
mod monomial;
mod parse;
mod polynomial;
mod ring;
mod transform;
mod weights;

pub use gcd::multivariate_gcd;
pub use monomial::Monomial;
pub use parse::{parse_poly, parse_rational};
pub use polynomial::Polynomial;
pub use ring::{Ring, TermOrder};
pub use transform::{cone, dehomogenize, homogenize};
pub use weights::{euler_residual, weighted_weights, WeightClass, WeightVector};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("invalid variable name {0:?}")]
    InvalidVariableName(String),
    #[error("duplicate variable {0:?}")]
    DuplicateVariable(String),
    #[error("block size {block} out of range for {arity} variables")]
    BlockOutOfRange { block: usize, arity: usize },
    #[error("a ring needs at least one variable")]
    EmptyRing,
    #[error("variable {0:?} already exists in the ring")]
    VariableCollision(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("negative exponents are not polynomial")]
    NegativeExponent,
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("variable index {0} out of range")]
    IndexOutOfRange(usize),
}
