//! Curves, trace expansions and lamination valuations on a closed orientable
//! surface of genus `g >= 2`.
//!
//! The entry point is [`Surface`]. Words use the syntax `a1 b1 A1 B1`
//! (uppercase for inverses); curve classes are unoriented free homotopy
//! classes with a canonical representative word.

mod cache;
pub mod error;
pub mod geometry;
pub mod mcg;
pub mod suites;
pub mod surface;
pub mod trace;
pub mod valuation;

pub use error::{Error, Result};
pub use surface::{make_surface, CurveClass, GroupWord, HomologyVector, Letter, Representation, Ring, Surface};
