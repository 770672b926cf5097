use std::collections::BTreeSet;
use std::fmt;

use super::Coord;

/// A labelled input point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point {
    pub id: usize,
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(id: usize, x: Coord, y: Coord) -> Self {
        Point { id, x, y }
    }
}

/// Closed axis-parallel unit square `[ax, ax+1] x [ay, ay+1]`.
///
/// Dummy squares (used to bound dynamic-programming regions) carry negative
/// ids and never appear in emitted covers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnitSquare {
    pub id: i64,
    pub ax: Coord,
    pub ay: Coord,
    pub dummy: bool,
}

impl UnitSquare {
    pub fn new(id: i64, ax: Coord, ay: Coord) -> Self {
        UnitSquare {
            id,
            ax,
            ay,
            dummy: false,
        }
    }

    pub fn new_dummy(id: i64, ax: Coord, ay: Coord) -> Self {
        UnitSquare {
            id,
            ax,
            ay,
            dummy: true,
        }
    }

    pub fn x_hi(&self) -> Coord {
        &self.ax + Coord::one()
    }

    pub fn y_hi(&self) -> Coord {
        &self.ay + Coord::one()
    }

    pub fn contains_xy(&self, x: &Coord, y: &Coord) -> bool {
        *x >= self.ax && *x <= self.x_hi() && *y >= self.ay && *y <= self.y_hi()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.contains_xy(&p.x, &p.y)
    }

    pub fn intersect(&self, other: &UnitSquare) -> Option<Rect> {
        let x_lo = self.ax.clone().max(other.ax.clone());
        let x_hi = self.x_hi().min(other.x_hi());
        let y_lo = self.ay.clone().max(other.ay.clone());
        let y_hi = self.y_hi().min(other.y_hi());
        if x_lo <= x_hi && y_lo <= y_hi {
            Some(Rect {
                x_lo,
                x_hi,
                y_lo,
                y_hi,
            })
        } else {
            None
        }
    }

    pub fn as_rect(&self) -> Rect {
        Rect {
            x_lo: self.ax.clone(),
            x_hi: self.x_hi(),
            y_lo: self.ay.clone(),
            y_hi: self.y_hi(),
        }
    }
}

/// Closed axis-parallel rectangle, possibly degenerate (zero width/height).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rect {
    pub x_lo: Coord,
    pub x_hi: Coord,
    pub y_lo: Coord,
    pub y_hi: Coord,
}

impl Rect {
    pub fn new(x_lo: Coord, x_hi: Coord, y_lo: Coord, y_hi: Coord) -> Self {
        debug_assert!(x_lo <= x_hi && y_lo <= y_hi);
        Rect {
            x_lo,
            x_hi,
            y_lo,
            y_hi,
        }
    }

    pub fn contains_xy(&self, x: &Coord, y: &Coord) -> bool {
        *x >= self.x_lo && *x <= self.x_hi && *y >= self.y_lo && *y <= self.y_hi
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.contains_xy(&p.x, &p.y)
    }

    /// Strict interior containment.
    pub fn contains_strict(&self, p: &Point) -> bool {
        p.x > self.x_lo && p.x < self.x_hi && p.y > self.y_lo && p.y < self.y_hi
    }

    pub fn intersects(&self, other: &Rect) -> bool {
        self.x_lo <= other.x_hi
            && other.x_lo <= self.x_hi
            && self.y_lo <= other.y_hi
            && other.y_lo <= self.y_hi
    }
}

/// Closed containment test for a square and a point.
pub fn sq_contains(s: &UnitSquare, p: &Point) -> bool {
    s.contains(p)
}

/// Closed intersection of two unit squares; touching edges count.
pub fn sq_intersect(a: &UnitSquare, b: &UnitSquare) -> Option<Rect> {
    a.intersect(b)
}

/// A selection of squares together with its exact ply and a witness point
/// of maximum depth (absent only for the empty selection).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cover {
    pub square_ids: BTreeSet<i64>,
    pub ply: usize,
    pub witness: Option<(Coord, Coord)>,
}

impl Cover {
    pub fn empty() -> Self {
        Cover {
            square_ids: BTreeSet::new(),
            ply: 0,
            witness: None,
        }
    }

    pub fn len(&self) -> usize {
        self.square_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.square_ids.is_empty()
    }
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ply {} cover {:?}", self.ply, self.square_ids)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(id: i64, ax: (i64, i64), ay: (i64, i64)) -> UnitSquare {
        UnitSquare::new(id, Coord::frac(ax.0, ax.1), Coord::frac(ay.0, ay.1))
    }

    #[test]
    fn containment_is_closed() {
        let s = sq(0, (0, 1), (0, 1));
        let inside = Point::new(0, Coord::half(), Coord::half());
        let corner = Point::new(1, Coord::one(), Coord::one());
        let outside = Point::new(2, Coord::frac(3, 2), Coord::half());
        assert!(sq_contains(&s, &inside));
        assert!(sq_contains(&s, &corner));
        assert!(!sq_contains(&s, &outside));
    }

    #[test]
    fn intersection_overlap_and_disjoint() {
        let a = sq(0, (0, 1), (0, 1));
        let b = sq(1, (1, 2), (1, 2));
        let r = sq_intersect(&a, &b).unwrap();
        assert_eq!(r.x_lo, Coord::half());
        assert_eq!(r.x_hi, Coord::one());
        assert_eq!(r.y_lo, Coord::half());
        assert_eq!(r.y_hi, Coord::one());

        let far = sq(2, (2, 1), (0, 1));
        assert!(sq_intersect(&a, &far).is_none());
    }

    #[test]
    fn touching_edges_count_as_intersecting() {
        let a = sq(0, (0, 1), (0, 1));
        let b = sq(1, (1, 1), (0, 1));
        let r = sq_intersect(&a, &b).unwrap();
        assert_eq!(r.x_lo, Coord::one());
        assert_eq!(r.x_hi, Coord::one());
        assert_eq!(r.y_lo, Coord::zero());
        assert_eq!(r.y_hi, Coord::one());
    }
}
