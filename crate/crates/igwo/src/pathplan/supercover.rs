//! Exact supercover traversal: enumerate every grid cell a closed
//! segment geometrically touches, including edge and corner grazes.
//!
//! Cell `(c, r)` occupies the closed unit square `[c, c+1] x [r, r+1]`.
//! The segment is swept column by column; within each column slab the
//! parameter interval is clipped and the touched row range derived from
//! the clipped y-extent. An endpoint landing exactly on a gridline
//! extends the range to the neighbouring column or row, which is what
//! makes corner grazes count.

/// Cells touched by the closed segment `p0 -> p1`, in grid units.
/// Coordinates may lie outside any particular grid; callers intersect
/// with their own occupancy data. Each touched cell appears exactly once.
///
/// Endpoints are canonically ordered first, so both directions of the
/// same segment enumerate the same cells even when a crossing lands
/// within rounding distance of a gridline.
pub fn segment_cells(p0: (f64, f64), p1: (f64, f64)) -> Vec<(i64, i64)> {
    let (p0, p1) = if (p1.0, p1.1) < (p0.0, p0.1) {
        (p1, p0)
    } else {
        (p0, p1)
    };
    let (x0, y0) = p0;
    let (x1, y1) = p1;
    debug_assert!(x0.is_finite() && y0.is_finite() && x1.is_finite() && y1.is_finite());

    let dx = x1 - x0;
    let dy = y1 - y0;
    let (xmin, xmax) = (x0, x1);

    let mut cells = Vec::new();
    let col_lo = lowest_touched(xmin);
    let col_hi = xmax.floor() as i64;

    for col in col_lo..=col_hi {
        let Some((t0, t1)) = clip_to_slab(x0, dx, col as f64, (col + 1) as f64) else {
            continue;
        };
        let ya = y0 + t0 * dy;
        let yb = y0 + t1 * dy;
        let (ymin, ymax) = if ya <= yb { (ya, yb) } else { (yb, ya) };
        let row_lo = lowest_touched(ymin);
        let row_hi = ymax.floor() as i64;
        for row in row_lo..=row_hi {
            cells.push((col, row));
        }
    }
    cells
}

/// Index of the lowest cell touched at coordinate `v`: the containing
/// cell, or additionally the one below when `v` sits exactly on a
/// gridline (closed squares share their boundary).
fn lowest_touched(v: f64) -> i64 {
    let f = v.floor();
    if v == f {
        f as i64 - 1
    } else {
        f as i64
    }
}

/// Clip the segment parameter range `[0, 1]` to the closed slab
/// `lo <= x(t) <= hi`. Returns `None` when the segment misses the slab.
fn clip_to_slab(x0: f64, dx: f64, lo: f64, hi: f64) -> Option<(f64, f64)> {
    if dx == 0.0 {
        return (x0 >= lo && x0 <= hi).then_some((0.0, 1.0));
    }
    let ta = (lo - x0) / dx;
    let tb = (hi - x0) / dx;
    let (near, far) = if ta <= tb { (ta, tb) } else { (tb, ta) };
    let t0 = near.max(0.0);
    let t1 = far.min(1.0);
    (t0 <= t1).then_some((t0, t1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn cells(p0: (f64, f64), p1: (f64, f64)) -> BTreeSet<(i64, i64)> {
        let listed = segment_cells(p0, p1);
        let set: BTreeSet<_> = listed.iter().copied().collect();
        assert_eq!(set.len(), listed.len(), "duplicate cells emitted");
        set
    }

    #[test]
    fn horizontal_segment_through_one_row() {
        let got = cells((9.5, 10.5), (11.5, 10.5));
        let want: BTreeSet<_> = [(9, 10), (10, 10), (11, 10)].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn point_segment_inside_a_cell() {
        assert_eq!(
            cells((3.25, 7.75), (3.25, 7.75)),
            [(3, 7)].into_iter().collect()
        );
    }

    #[test]
    fn point_on_a_corner_touches_all_four_cells() {
        let want: BTreeSet<_> = [(4, 6), (4, 7), (5, 6), (5, 7)].into_iter().collect();
        assert_eq!(cells((5.0, 7.0), (5.0, 7.0)), want);
    }

    #[test]
    fn segment_along_a_gridline_touches_both_rows() {
        let got = cells((0.5, 2.0), (2.5, 2.0));
        let want: BTreeSet<_> = [(0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (2, 2)]
            .into_iter()
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn diagonal_through_lattice_corner_touches_all_adjacent_cells() {
        // 45-degree segment through the corner (1, 1).
        let got = cells((0.5, 0.5), (1.5, 1.5));
        let want: BTreeSet<_> = [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn vertical_segment() {
        let got = cells((2.5, 0.25), (2.5, 2.75));
        let want: BTreeSet<_> = [(2, 0), (2, 1), (2, 2)].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn shallow_slope_crosses_rows_once() {
        let got = cells((0.25, 0.9), (3.75, 1.1));
        // Crosses y = 1 once between x = 0.25 and 3.75.
        assert!(got.contains(&(0, 0)));
        assert!(got.contains(&(3, 1)));
        for &(c, r) in &got {
            assert!((0..=3).contains(&c));
            assert!((0..=1).contains(&r));
        }
    }

    #[test]
    fn direction_does_not_matter() {
        let a = cells((0.3, 0.4), (7.9, 5.2));
        let b = cells((7.9, 5.2), (0.3, 0.4));
        assert_eq!(a, b);
    }
}
