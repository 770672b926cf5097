//! Exact geometric primitives: rational coordinates, points, unit squares,
//! rectangles, covers, depth (ply) computation, general-position validation
//! and the arrangement-face reduction of point sets.

mod coord;
mod faces;
mod gp;
mod ply;
mod types;

pub use coord::{Coord, ParseCoordError};
pub use faces::face_representatives;
pub use gp::{check_general_position, GeneralPositionReport, GpViolation};
pub use ply::{depth_at, ply_of, ply_via_cliques};
pub use types::{sq_contains, sq_intersect, Cover, Point, Rect, UnitSquare};

use std::cmp::Ordering;

/// Builds a [`Cover`] from a square selection, recomputing ply and witness.
pub fn cover_of(squares: &[UnitSquare]) -> Cover {
    let (ply, witness) = ply_of(squares);
    Cover {
        square_ids: squares.iter().map(|s| s.id).collect(),
        ply,
        witness,
    }
}

/// Deterministic preference order on covers: lower ply, then fewer squares,
/// then lexicographically smallest id sequence.
pub fn cover_cmp(a: &Cover, b: &Cover) -> Ordering {
    a.ply
        .cmp(&b.ply)
        .then_with(|| a.square_ids.len().cmp(&b.square_ids.len()))
        .then_with(|| a.square_ids.iter().cmp(b.square_ids.iter()))
}
