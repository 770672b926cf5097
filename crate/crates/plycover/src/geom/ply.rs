use super::{Coord, UnitSquare};

/// Maximum depth of the arrangement of the given closed squares, with a
/// witness point attaining it.
///
/// Plane sweep over vertical square edges: the depth profile only changes at
/// left edges, and within one column the 1-D problem is interval stabbing on
/// the active y-intervals. The deepest face of a set of axis-parallel boxes
/// has its bottom-left corner at (max of lefts, max of bottoms) of the
/// participating squares, so candidate witnesses are (left edge, bottom
/// edge) pairs; the returned witness is the lexicographically smallest such
/// corner of any deepest face.
pub fn ply_of(squares: &[UnitSquare]) -> (usize, Option<(Coord, Coord)>) {
    if squares.is_empty() {
        return (0, None);
    }
    let mut xs: Vec<&Coord> = squares.iter().map(|s| &s.ax).collect();
    xs.sort();
    xs.dedup();

    let mut best: usize = 0;
    let mut witness: Option<(Coord, Coord)> = None;
    for x in xs {
        // Closed squares: active iff ax <= x <= ax + 1.
        let active: Vec<&UnitSquare> = squares
            .iter()
            .filter(|s| s.ax <= *x && *x <= s.x_hi())
            .collect();
        if active.len() <= best {
            continue;
        }
        // 1-D stabbing sweep on y. Opens sort before closes at equal
        // coordinates so closed intervals touching at a point both count.
        let mut events: Vec<(&Coord, bool, Coord)> = Vec::with_capacity(2 * active.len());
        let mut tops: Vec<Coord> = Vec::with_capacity(active.len());
        for s in &active {
            tops.push(s.y_hi());
        }
        for (s, top) in active.iter().zip(tops.iter()) {
            events.push((&s.ay, false, s.ay.clone()));
            events.push((top, true, s.ay.clone()));
        }
        events.sort_by(|a, b| a.0.cmp(b.0).then_with(|| a.1.cmp(&b.1)));
        let mut depth = 0usize;
        let mut col_best = 0usize;
        let mut col_y: Option<Coord> = None;
        for (coord, is_close, _) in events {
            if is_close {
                depth -= 1;
            } else {
                depth += 1;
                if depth > col_best {
                    col_best = depth;
                    col_y = Some(coord.clone());
                }
            }
        }
        if col_best > best {
            best = col_best;
            witness = Some((x.clone(), col_y.expect("nonempty column")));
        }
    }
    (best, witness)
}

/// Number of squares containing the given point.
pub fn depth_at(squares: &[UnitSquare], x: &Coord, y: &Coord) -> usize {
    squares.iter().filter(|s| s.contains_xy(x, y)).count()
}

/// Maximum depth computed independently as a maximum clique of the pairwise
/// intersection graph. Axis-parallel boxes have Helly number 2: a family of
/// boxes has a common point iff every pair intersects, so the maximum clique
/// size equals the maximum arrangement depth.
pub fn ply_via_cliques(squares: &[UnitSquare]) -> usize {
    let n = squares.len();
    assert!(n <= 128, "clique cross-check is capped at 128 squares");
    if n == 0 {
        return 0;
    }
    let mut adj = vec![0u128; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if squares[i].intersect(&squares[j]).is_some() {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    let mut best = 1usize;
    let all: u128 = if n == 128 { !0 } else { (1 << n) - 1 };
    max_clique(&adj, all, 0, &mut best);
    best
}

fn max_clique(adj: &[u128], candidates: u128, size: usize, best: &mut usize) {
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    if candidates == 0 {
        if size > *best {
            *best = size;
        }
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        if size + rest.count_ones() as usize <= *best {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        max_clique(adj, rest & adj[v], size + 1, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(id: i64, ax: (i64, i64), ay: (i64, i64)) -> UnitSquare {
        UnitSquare::new(id, Coord::frac(ax.0, ax.1), Coord::frac(ay.0, ay.1))
    }

    #[test]
    fn empty_set_has_ply_zero() {
        assert_eq!(ply_of(&[]), (0, None));
        assert_eq!(ply_via_cliques(&[]), 0);
    }

    #[test]
    fn disjoint_squares_have_ply_one() {
        let s = [sq(0, (0, 1), (0, 1)), sq(1, (2, 1), (2, 1))];
        let (k, w) = ply_of(&s);
        assert_eq!(k, 1);
        let (wx, wy) = w.unwrap();
        assert_eq!(depth_at(&s, &wx, &wy), 1);
        assert_eq!(ply_via_cliques(&s), 1);
    }

    #[test]
    fn nested_overlap_reaches_three() {
        let s = [
            sq(0, (0, 1), (0, 1)),
            sq(1, (1, 2), (1, 2)),
            sq(2, (9, 10), (9, 10)),
        ];
        let (k, w) = ply_of(&s);
        assert_eq!(k, 3);
        // All three contain [9/10, 1]^2; the witness is the deepest face's
        // bottom-left corner.
        let (wx, wy) = w.unwrap();
        assert_eq!(wx, Coord::frac(9, 10));
        assert_eq!(wy, Coord::frac(9, 10));
        assert_eq!(depth_at(&s, &wx, &wy), 3);
        assert_eq!(ply_via_cliques(&s), 3);
    }

    #[test]
    fn witness_is_lexicographically_smallest_deep_corner() {
        // Two separate ply-2 faces; the leftmost one wins.
        let s = [
            sq(0, (0, 1), (0, 1)),
            sq(1, (1, 2), (0, 1)),
            sq(2, (3, 1), (0, 1)),
            sq(3, (7, 2), (0, 1)),
        ];
        let (k, w) = ply_of(&s);
        assert_eq!(k, 2);
        assert_eq!(w.unwrap().0, Coord::half());
    }
}
