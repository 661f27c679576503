//! Gröbner bases of ideals and the ideal operations built on them.

pub(crate) mod engine;
mod ideal;

pub use engine::GroebnerError;
pub use ideal::{Ideal, SaturationData, TrackedBasis};
