//! The guide chapters, compiled as doc-tests.
//!
//! mdbook renders `book/` for reading; this crate includes the same
//! chapters as module documentation so `cargo test` runs every code
//! snippet in them. One module per chapter keeps failures traceable to
//! their source file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/script.md")]
pub mod script {}

#[doc = include_str!("../../../book/src/sandhi.md")]
pub mod sandhi {}

#[doc = include_str!("../../../book/src/nouns.md")]
pub mod nouns {}

#[doc = include_str!("../../../book/src/verbs.md")]
pub mod verbs {}

#[doc = include_str!("../../../book/src/clitics-and-agreement.md")]
pub mod clitics_and_agreement {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
