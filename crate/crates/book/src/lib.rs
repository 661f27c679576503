//! The chapters of `book/` as modules, so `cargo test` runs every snippet in them.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}
#[doc = include_str!("../../../book/src/ideals.md")]
pub mod ideals {}
#[doc = include_str!("../../../book/src/resolutions.md")]
pub mod resolutions {}
#[doc = include_str!("../../../book/src/freeness.md")]
pub mod freeness {}
#[doc = include_str!("../../../book/src/linear_type.md")]
pub mod linear_type {}
#[doc = include_str!("../../../book/src/cramer.md")]
pub mod cramer {}
#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../book/src/corpus.md")]
pub mod corpus {}
