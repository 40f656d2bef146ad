//! Analysis of simple voting games with checkable certificates.
//!
//! The crate decides whether a simple game is weighted or roughly weighted
//! and, in every case, produces evidence that can be re-verified
//! independently of the solver:
//!
//! - weighted games get rational and bounded integer quota/weight
//!   representations;
//! - non-weighted games get a trading transform (paired winning/losing
//!   coalition sequences with balanced player counts);
//! - games that are not even roughly weighted get a potent certificate (a
//!   trading transform containing the grand and the empty coalition).
//!
//! All arithmetic is exact; the solvers never touch floating point.

pub mod bounds;
pub mod enumeration;
pub mod error;
pub mod game;
pub mod integer_repr;
pub mod json;
pub mod linalg;
pub mod rough;
pub mod rounding;
pub mod weightedness;

pub use error::{Error, ErrorKind, Result};
pub use game::{Coalition, SimpleGame, TradingTransform};
