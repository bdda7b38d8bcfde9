//! Runs the guide snippets as doctests.

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/registry.md")]
pub mod registry {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/recommender.md")]
pub mod recommender {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/stabilizers.md")]
pub mod stabilizers {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/benchdata.md")]
pub mod benchdata {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
