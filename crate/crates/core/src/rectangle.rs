//! Rectangles on the grid torus between generators.
//!
//! A rectangle from `x` to `y` has its lower-left and upper-right corners at
//! points of `x` and its lower-right and upper-left corners at points of `y`;
//! `x` and `y` agree away from the two corner columns. Given `x` and an
//! ordered pair of columns `(i, j)` there is exactly one such rectangle: it
//! runs rightward from column `i` to column `j` and upward from row `x[i]`
//! to row `x[j]`, both measured around the torus.

use serde::{Deserialize, Serialize};

use crate::generators::Generator;
use crate::grid::GridDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rectangle {
    pub from: Generator,
    pub to: Generator,
    /// Lattice point `(column, row)` of the lower-left corner.
    pub lower_left: (usize, usize),
    /// Lattice point of the upper-right corner.
    pub upper_right: (usize, usize),
    /// `o_count[c]` is 1 when the O marking of column `c` lies inside.
    pub o_count: Vec<u8>,
    pub x_count: Vec<u8>,
    pub empty: bool,
}

impl Rectangle {
    pub fn size(&self) -> usize {
        self.from.size()
    }

    /// Number of unit squares spanned horizontally.
    pub fn width(&self) -> usize {
        let n = self.size();
        (self.upper_right.0 + n - self.lower_left.0) % n
    }

    pub fn height(&self) -> usize {
        let n = self.size();
        (self.upper_right.1 + n - self.lower_left.1) % n
    }

    /// Whether the unit square with lower-left lattice point `(c, r)` lies in
    /// the rectangle.
    pub fn contains_square(&self, column: usize, row: usize) -> bool {
        let n = self.size();
        (column + n - self.lower_left.0) % n < self.width()
            && (row + n - self.lower_left.1) % n < self.height()
    }

    /// Whether the lattice point `(c, r)` lies in the open interior.
    pub fn interior_contains(&self, column: usize, row: usize) -> bool {
        let n = self.size();
        let dc = (column + n - self.lower_left.0) % n;
        let dr = (row + n - self.lower_left.1) % n;
        0 < dc && dc < self.width() && 0 < dr && dr < self.height()
    }

    pub fn o_total(&self) -> usize {
        self.o_count.iter().map(|&v| v as usize).sum()
    }

    pub fn x_total(&self) -> usize {
        self.x_count.iter().map(|&v| v as usize).sum()
    }

    /// Empty and free of markings of both kinds.
    pub fn is_marking_free(&self) -> bool {
        self.o_total() == 0 && self.x_total() == 0
    }
}

/// The rectangle from `x` with lower-left corner in column `i` and upper-right
/// corner in column `j`.
pub fn rectangle_at(grid: &GridDiagram, x: &Generator, i: usize, j: usize) -> Rectangle {
    let n = grid.size();
    assert!(i < n && j < n && i != j, "rectangle needs two distinct columns");
    let to = x.with_swapped(i, j);
    let lower_left = (i, x.row(i));
    let upper_right = (j, x.row(j));
    let mut r = Rectangle {
        from: x.clone(),
        to,
        lower_left,
        upper_right,
        o_count: vec![0; n],
        x_count: vec![0; n],
        empty: true,
    };
    for c in 0..n {
        r.o_count[c] = r.contains_square(c, grid.o_rows()[c]) as u8;
        r.x_count[c] = r.contains_square(c, grid.x_rows()[c]) as u8;
    }
    r.empty = (0..n).all(|c| !r.interior_contains(c, x.row(c)));
    r
}

/// All rectangles (empty or not) from `x` to `y`; at most two.
pub fn rectangles_between(grid: &GridDiagram, x: &Generator, y: &Generator) -> Vec<Rectangle> {
    let diff = x.differing_columns(y);
    if diff.len() != 2 {
        return Vec::new();
    }
    let (a, b) = (diff[0], diff[1]);
    if x.row(a) != y.row(b) || x.row(b) != y.row(a) {
        return Vec::new();
    }
    vec![rectangle_at(grid, x, a, b), rectangle_at(grid, x, b, a)]
}

pub fn empty_rectangles(grid: &GridDiagram, x: &Generator, y: &Generator) -> Vec<Rectangle> {
    rectangles_between(grid, x, y)
        .into_iter()
        .filter(|r| r.empty)
        .collect()
}

/// All `n(n-1)` rectangles out of `x`.
pub fn rectangles_from<'a>(
    grid: &'a GridDiagram,
    x: &'a Generator,
) -> impl Iterator<Item = Rectangle> + 'a {
    let n = grid.size();
    (0..n).flat_map(move |i| {
        (0..n)
            .filter(move |&j| j != i)
            .map(move |j| rectangle_at(grid, x, i, j))
    })
}

/// Scans the empty rectangles out of `points` that contain no X marking,
/// calling `f(i, j)` with the corner columns. With `allow_o` false the
/// rectangles must avoid O markings too.
///
/// Runs in `O(n^2)`: for a fixed left column the minimum row offset of
/// obstructions seen so far bounds the admissible heights.
pub(crate) fn scan_empty(
    o_rows: &[usize],
    x_rows: &[usize],
    points: &[u8],
    allow_o: bool,
    mut f: impl FnMut(usize, usize),
) {
    let n = points.len();
    for i in 0..n {
        let base = points[i] as usize;
        let offset = |row: usize| (row + n - base) % n;
        // smallest offset of a point strictly inside the column range
        let mut min_point = n;
        // smallest offset of an obstructing marking in columns i..j-1
        let mut min_mark = n;
        for w in 1..n {
            let prev = (i + w - 1) % n;
            min_mark = min_mark.min(offset(x_rows[prev]));
            if !allow_o {
                min_mark = min_mark.min(offset(o_rows[prev]));
            }
            if w >= 2 {
                min_point = min_point.min(offset(points[prev] as usize));
            }
            if min_mark == 0 {
                break;
            }
            let j = (i + w) % n;
            let h = offset(points[j] as usize);
            if h <= min_point && h <= min_mark {
                f(i, j);
            }
        }
    }
}
