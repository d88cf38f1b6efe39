//! Compiles every chapter of the guide in `book/src` as rustdoc, so `cargo test --doc`
//! runs the Rust snippets. One module per chapter keeps failures traceable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/rings.md")]
pub mod rings {}
#[doc = include_str!("../../../book/src/extensions.md")]
pub mod extensions {}
#[doc = include_str!("../../../book/src/fullness.md")]
pub mod fullness {}
#[doc = include_str!("../../../book/src/nu.md")]
pub mod nu {}
#[doc = include_str!("../../../book/src/diagonal.md")]
pub mod diagonal {}
#[doc = include_str!("../../../book/src/classification.md")]
pub mod classification {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
