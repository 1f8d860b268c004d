//! The guide under `book/`, compiled so that every Rust listing in it runs
//! as a doc-test. One module per chapter keeps failures traceable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/moments.md")]
pub mod moments {}
#[doc = include_str!("../../../book/src/schur.md")]
pub mod schur {}
#[doc = include_str!("../../../book/src/fractions.md")]
pub mod fractions {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
