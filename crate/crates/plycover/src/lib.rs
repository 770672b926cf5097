//! Ply cover solver for planar point sets and axis-parallel unit squares.
//!
//! Given points `P` and unit squares `U`, a ply cover is a subset of `U`
//! covering `P`; its ply is the maximum number of selected squares sharing
//! a common point. The library computes covers whose ply is within an
//! additive constant per grid cell (and a constant factor globally) of the
//! optimum, plus an exact brute-force oracle for small universes.
//!
//! All coordinates are exact rationals; every geometric predicate is
//! error-free, so degenerate inputs are detected rather than mis-resolved.

pub mod assembler;
pub mod cell_solver;
mod error;
pub mod geom;
pub mod oracle;

pub use error::{Error, Result};
pub use geom::{Coord, Cover, Point, Rect, UnitSquare};
