//! Exact arithmetic for degenerate central factorial numbers.
//!
//! Layers, bottom up:
//!
//! - [`arith`]: big rationals, dense polynomials over any [`arith::Ring`],
//!   with `ℚ[λ]` and `(ℚ[λ])[x]` as the working rings.
//! - [`series`]: truncated power series with powers, composition and reversion.
//! - [`classical`]: Stirling numbers of the first kind, central factorial
//!   numbers of both kinds and the central difference operator.
//! - [`degenerate`]: the λ-families from their generating functions, plus
//!   independent formulas for the same quantities.
//! - [`triangle`]: materialized tables with CSV/JSON export.
//! - [`verify`]: identity checks comparing two routes exactly.
//! - [`cli`]: the `degenfact` command.
//!
//! λ is either an indeterminate or a fixed rational; see
//! [`degenerate::LambdaMode`]. No floating point is used anywhere.

// Index loops follow the summation bounds of the formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod classical;
pub mod cli;
pub mod degenerate;
pub mod error;
mod mutation;
pub mod series;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
