use std::collections::BTreeMap;

use super::{Point, UnitSquare};

/// Reduces a point set to one representative per non-empty arrangement face.
///
/// Two points are equivalent iff they are contained in exactly the same
/// subset of squares; the representative of each class is the point with
/// the smallest id. Covering the representatives with a subset of the
/// squares is equivalent to covering the full set, so the minimum ply cover
/// number is preserved.
pub fn face_representatives(points: &[Point], squares: &[UnitSquare]) -> Vec<Point> {
    let mut classes: BTreeMap<Vec<i64>, &Point> = BTreeMap::new();
    for p in points {
        let mut signature: Vec<i64> = squares
            .iter()
            .filter(|s| s.contains(p))
            .map(|s| s.id)
            .collect();
        signature.sort_unstable();
        classes
            .entry(signature)
            .and_modify(|rep| {
                if p.id < rep.id {
                    *rep = p;
                }
            })
            .or_insert(p);
    }
    let mut reps: Vec<Point> = classes.into_values().cloned().collect();
    reps.sort_by_key(|p| p.id);
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Coord;

    fn pt(id: usize, x: (i64, i64), y: (i64, i64)) -> Point {
        Point::new(id, Coord::frac(x.0, x.1), Coord::frac(y.0, y.1))
    }

    #[test]
    fn same_face_collapses_to_smallest_id() {
        let u = [UnitSquare::new(0, Coord::zero(), Coord::zero())];
        let p = [pt(0, (1, 4), (1, 4)), pt(1, (1, 3), (1, 3))];
        let reps = face_representatives(&p, &u);
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].id, 0);
    }

    #[test]
    fn distinct_faces_are_both_kept() {
        let u = [
            UnitSquare::new(0, Coord::zero(), Coord::zero()),
            UnitSquare::new(1, Coord::frac(3, 2), Coord::zero()),
        ];
        let p = [pt(0, (1, 4), (1, 4)), pt(1, (7, 4), (1, 4))];
        let reps = face_representatives(&p, &u);
        assert_eq!(reps.len(), 2);
    }

    #[test]
    fn idempotent() {
        let u = [
            UnitSquare::new(0, Coord::zero(), Coord::zero()),
            UnitSquare::new(1, Coord::frac(1, 3), Coord::frac(1, 5)),
        ];
        let p = [
            pt(0, (1, 4), (1, 4)),
            pt(1, (1, 2), (1, 2)),
            pt(2, (2, 5), (2, 5)),
            pt(3, (9, 10), (9, 10)),
        ];
        let once = face_representatives(&p, &u);
        let twice = face_representatives(&once, &u);
        assert_eq!(once, twice);
    }
}
