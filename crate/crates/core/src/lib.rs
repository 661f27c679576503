pub mod corpus;
pub mod cramer;
pub mod divisor;
pub mod error;
pub mod families;
pub mod groebner;
pub mod linalg;
pub mod modsyz;
pub mod poly;
pub mod typecheck;
mod verdict;

pub use error::{Error, Result};
pub use groebner::Ideal;
pub use poly::{parse_poly, Monomial, PolyError, Polynomial, Rational, Ring, TermOrder};
pub use verdict::Verdict;
