//! Maslov and Alexander gradings of generators.
//!
//! For finite planar point sets let `I(A, B)` count pairs `(a, b)` with `a`
//! strictly south-west of `b`, and `J(A, B) = (I(A, B) + I(B, A)) / 2`,
//! extended bilinearly. With generator points on the integer lattice and
//! markings at the centres of their squares,
//!
//! ```text
//! M(x) = J(x, x) - 2 J(x, O) + J(O, O) + 1
//! A(x) = J(x - (X + O)/2, X - O) - (n - 1)/2
//! ```
//!
//! evaluated in the fundamental domain `[0, n) x [0, n)`.

use serde::{Deserialize, Serialize};

use crate::generators::Generator;
use crate::grid::GridDiagram;
use crate::halfint::HalfInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bigrading {
    pub maslov: i64,
    pub alexander: HalfInt,
}

/// Precomputed per-grid tables giving the gradings in `O(n^2)` per generator
/// (`O(n)` for the marking terms).
#[derive(Debug, Clone)]
pub struct Grader {
    n: usize,
    /// `o_pairs[c * n + r]` = number of O markings south-west or north-east of
    /// the lattice point `(c, r)` in the sense of `I`.
    o_pairs: Vec<i64>,
    x_pairs: Vec<i64>,
    /// `I(O, O) + 1`
    maslov_const: i64,
    /// `-(I(X, X) - I(O, O)) - (n - 1)`, the constant part of `2A`.
    alexander_const2: i64,
}

fn marking_pairs(n: usize, rows: &[usize]) -> Vec<i64> {
    let mut table = vec![0i64; n * n];
    for c in 0..n {
        for r in 0..n {
            // point (c, r) SW of marking (d+1/2, m+1/2) iff c <= d && r <= m;
            // marking SW of point iff d < c && m < r
            let count = rows
                .iter()
                .enumerate()
                .filter(|&(d, &m)| (c <= d && r <= m) || (d < c && m < r))
                .count();
            table[c * n + r] = count as i64;
        }
    }
    table
}

fn self_pairs(rows: &[usize]) -> i64 {
    let mut count = 0;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if rows[i] < rows[j] {
                count += 1;
            }
        }
    }
    count
}

fn self_pairs_u8(points: &[u8]) -> i64 {
    let mut count = 0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            count += (points[i] < points[j]) as i64;
        }
    }
    count
}

impl Grader {
    pub fn new(grid: &GridDiagram) -> Self {
        let n = grid.size();
        let i_oo = self_pairs(grid.o_rows());
        let i_xx = self_pairs(grid.x_rows());
        Grader {
            n,
            o_pairs: marking_pairs(n, grid.o_rows()),
            x_pairs: marking_pairs(n, grid.x_rows()),
            maslov_const: i_oo + 1,
            alexander_const2: -(i_xx - i_oo) - (n as i64 - 1),
        }
    }

    fn marking_sum(&self, table: &[i64], points: &[u8]) -> i64 {
        points
            .iter()
            .enumerate()
            .map(|(c, &r)| table[c * self.n + r as usize])
            .sum()
    }

    pub fn maslov(&self, points: &[u8]) -> i64 {
        self_pairs_u8(points) - self.marking_sum(&self.o_pairs, points) + self.maslov_const
    }

    pub fn alexander(&self, points: &[u8]) -> HalfInt {
        HalfInt::from_doubled(
            self.marking_sum(&self.x_pairs, points) - self.marking_sum(&self.o_pairs, points)
                + self.alexander_const2,
        )
    }

    pub fn bigrading(&self, points: &[u8]) -> Bigrading {
        Bigrading {
            maslov: self.maslov(points),
            alexander: self.alexander(points),
        }
    }
}

pub fn maslov(grid: &GridDiagram, x: &Generator) -> i64 {
    Grader::new(grid).maslov(x.points())
}

pub fn alexander(grid: &GridDiagram, x: &Generator) -> HalfInt {
    Grader::new(grid).alexander(x.points())
}

pub fn bigrading(grid: &GridDiagram, x: &Generator) -> Bigrading {
    Grader::new(grid).bigrading(x.points())
}
