//! Runs the guide's Rust snippets as doctests, one module per chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/linalg.md")]
pub mod linalg {}
#[doc = include_str!("../../../book/src/quivers.md")]
pub mod quivers {}
#[doc = include_str!("../../../book/src/homological.md")]
pub mod homological {}
#[doc = include_str!("../../../book/src/ar.md")]
pub mod ar {}
#[doc = include_str!("../../../book/src/tilting.md")]
pub mod tilting {}
#[doc = include_str!("../../../book/src/bb.md")]
pub mod bb {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
