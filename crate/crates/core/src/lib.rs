//! Punctured binary linear codes built from functions on GF(2^m).
//!
//! The crate constructs the codes `{(Tr(a f(x) + b x))_{x in D} : a, b}` for
//! a position set `D`, enumerates their weight distributions exactly, derives
//! dual parameters with the MacWilliams transform and checks closed-form
//! predictions for several families against the enumeration.

pub mod analysis;
pub mod boolfunc;
pub mod codegen;
pub mod error;
pub mod gf2m;
pub mod manifest;

pub use error::{Error, Result};
