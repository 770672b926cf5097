use std::collections::BTreeMap;
use std::fmt;

use super::{Coord, Point, UnitSquare};
use crate::error::{Error, Result};

/// Axis of a violated line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::X => write!(f, "x"),
            Axis::Y => write!(f, "y"),
        }
    }
}

/// One general-position violation with the offending coordinate value and
/// the ids involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GpViolation {
    /// Two or more distinct squares have an edge on the same axis-parallel
    /// line.
    SharedSquareLine {
        axis: Axis,
        value: Coord,
        square_ids: Vec<i64>,
    },
    /// A point lies exactly on a square's edge-supporting line.
    PointOnEdgeLine {
        axis: Axis,
        value: Coord,
        point_id: usize,
        square_ids: Vec<i64>,
    },
}

impl fmt::Display for GpViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GpViolation::SharedSquareLine {
                axis,
                value,
                square_ids,
            } => write!(
                f,
                "squares {square_ids:?} share the edge line {axis}={value}"
            ),
            GpViolation::PointOnEdgeLine {
                axis,
                value,
                point_id,
                square_ids,
            } => write!(
                f,
                "point {point_id} lies on edge line {axis}={value} of squares {square_ids:?}"
            ),
        }
    }
}

/// Collection of all detected violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralPositionReport {
    pub violations: Vec<GpViolation>,
}

impl fmt::Display for GeneralPositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.violations {
            if !first {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Validates the strengthened general-position requirements:
///
/// (a) no two distinct squares share an edge-supporting vertical or
///     horizontal line (all values in `{ax, ax+1}` are pairwise distinct
///     across squares, likewise for y), and
/// (b) no point lies exactly on any square's edge line.
///
/// Violating instances are rejected rather than perturbed, since a
/// perturbation could change coverage.
pub fn check_general_position(squares: &[UnitSquare], points: &[Point]) -> Result<()> {
    let mut violations = Vec::new();
    for axis in [Axis::X, Axis::Y] {
        let mut lines: BTreeMap<Coord, Vec<i64>> = BTreeMap::new();
        for s in squares {
            let (lo, hi) = match axis {
                Axis::X => (s.ax.clone(), s.x_hi()),
                Axis::Y => (s.ay.clone(), s.y_hi()),
            };
            lines.entry(lo).or_default().push(s.id);
            lines.entry(hi).or_default().push(s.id);
        }
        for (value, ids) in &lines {
            let mut distinct = ids.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() >= 2 {
                violations.push(GpViolation::SharedSquareLine {
                    axis,
                    value: value.clone(),
                    square_ids: distinct,
                });
            }
        }
        for p in points {
            let v = match axis {
                Axis::X => &p.x,
                Axis::Y => &p.y,
            };
            if let Some(ids) = lines.get(v) {
                let mut distinct = ids.clone();
                distinct.sort_unstable();
                distinct.dedup();
                violations.push(GpViolation::PointOnEdgeLine {
                    axis,
                    value: v.clone(),
                    point_id: p.id,
                    square_ids: distinct,
                });
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::GeneralPosition(GeneralPositionReport { violations }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_instance_passes() {
        let u = [
            UnitSquare::new(0, Coord::zero(), Coord::zero()),
            UnitSquare::new(1, Coord::frac(1, 3), Coord::frac(1, 3)),
        ];
        let p = [Point::new(0, Coord::half(), Coord::half())];
        assert!(check_general_position(&u, &p).is_ok());
    }

    #[test]
    fn shared_line_is_reported() {
        // Right edge of the first square lies on the left edge of the second.
        let u = [
            UnitSquare::new(0, Coord::zero(), Coord::zero()),
            UnitSquare::new(1, Coord::one(), Coord::zero()),
        ];
        let err = check_general_position(&u, &[]).unwrap_err();
        let Error::GeneralPosition(report) = err else {
            panic!("wrong error kind");
        };
        assert!(report.violations.iter().any(|v| matches!(
            v,
            GpViolation::SharedSquareLine { axis: Axis::X, value, square_ids }
                if *value == Coord::one() && square_ids == &vec![0, 1]
        )));
    }

    #[test]
    fn point_on_edge_line_is_reported() {
        let u = [UnitSquare::new(0, Coord::zero(), Coord::zero())];
        let p = [Point::new(0, Coord::one(), Coord::half())];
        let err = check_general_position(&u, &p).unwrap_err();
        let Error::GeneralPosition(report) = err else {
            panic!("wrong error kind");
        };
        assert!(report.violations.iter().any(|v| matches!(
            v,
            GpViolation::PointOnEdgeLine { axis: Axis::X, value, point_id: 0, .. }
                if *value == Coord::one()
        )));
    }
}
