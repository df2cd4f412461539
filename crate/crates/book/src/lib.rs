//! The chapters of the guide in `book/src`, compiled so that every Rust
//! listing runs as a doc-test against the current library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/scalars.md")]
pub mod scalars {}

#[doc = include_str!("../../../book/src/qcombo.md")]
pub mod qcombo {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}

#[doc = include_str!("../../../book/src/dualization.md")]
pub mod dualization {}

#[doc = include_str!("../../../book/src/coanalysis.md")]
pub mod coanalysis {}

#[doc = include_str!("../../../book/src/fusion.md")]
pub mod fusion {}

#[doc = include_str!("../../../book/src/bounds.md")]
pub mod bounds {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
