//! Domains of Whitney disks on the grid torus and their Maslov index.
//!
//! A domain is a 2-chain of the `n^2` unit squares. Its Maslov index is
//! `e(D) + N(D)`, where every unit square has Euler measure zero and `N`
//! sums, over the points of both generators, the average multiplicity of
//! the four squares meeting at the point.

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::generators::Generator;
use crate::rectangle::Rectangle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDomain {
    n: usize,
    /// Multiplicity of the square with lower-left lattice point `(c, r)` at
    /// index `c * n + r`.
    multiplicities: Vec<i64>,
    from: Generator,
    to: Generator,
}

impl GridDomain {
    /// Validates that the boundary of `multiplicities` connects `from` to `to`
    /// along both the horizontal and the vertical circles.
    pub fn new(multiplicities: Vec<i64>, from: Generator, to: Generator) -> Result<Self> {
        let n = from.size();
        if to.size() != n || multiplicities.len() != n * n {
            return Err(Error::InvalidDomain(format!(
                "sizes disagree: {} and {} points, {} multiplicities",
                from.size(),
                to.size(),
                multiplicities.len()
            )));
        }
        let d = GridDomain {
            n,
            multiplicities,
            from,
            to,
        };
        d.check_boundary()?;
        Ok(d)
    }

    /// The zero domain from `x` to itself.
    pub fn constant(x: Generator) -> Self {
        let n = x.size();
        GridDomain {
            n,
            multiplicities: vec![0; n * n],
            from: x.clone(),
            to: x,
        }
    }

    pub fn from_rectangle(rect: &Rectangle) -> Self {
        let n = rect.size();
        let mut multiplicities = vec![0; n * n];
        for c in 0..n {
            for r in 0..n {
                if rect.contains_square(c, r) {
                    multiplicities[c * n + r] = 1;
                }
            }
        }
        GridDomain {
            n,
            multiplicities,
            from: rect.from.clone(),
            to: rect.to.clone(),
        }
    }

    /// Juxtaposition of a domain from `x` to `y` with one from `y` to `z`.
    pub fn concat(&self, next: &GridDomain) -> Result<GridDomain> {
        if self.to != next.from {
            return Err(Error::InvalidDomain(format!(
                "cannot follow a domain ending at {} with one starting at {}",
                self.to, next.from
            )));
        }
        let multiplicities = self
            .multiplicities
            .iter()
            .zip(&next.multiplicities)
            .map(|(a, b)| a + b)
            .collect();
        GridDomain::new(multiplicities, self.from.clone(), next.to.clone())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn from(&self) -> &Generator {
        &self.from
    }

    pub fn to(&self) -> &Generator {
        &self.to
    }

    /// Multiplicity of the square with lower-left corner `(c, r)`, toroidally.
    pub fn multiplicity(&self, column: isize, row: isize) -> i64 {
        let n = self.n as isize;
        let c = column.rem_euclid(n) as usize;
        let r = row.rem_euclid(n) as usize;
        self.multiplicities[c * self.n + r]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.multiplicities.iter().all(|&m| m >= 0)
    }

    fn check_boundary(&self) -> Result<()> {
        let n = self.n as isize;
        let indicator = |g: &Generator, c: isize, r: isize| g.contains(c as usize, r as usize) as i64;
        for r in 0..n {
            // coefficient of the rightward edge from (c, r) to (c+1, r)
            let edge = |c: isize| self.multiplicity(c, r) - self.multiplicity(c, r - 1);
            for c in 0..n {
                let boundary = edge(c - 1) - edge(c);
                let expected = indicator(&self.to, c, r) - indicator(&self.from, c, r);
                if boundary != expected {
                    return Err(Error::InvalidDomain(format!(
                        "horizontal boundary at ({c}, {r}) is {boundary}, expected {expected}"
                    )));
                }
            }
        }
        for c in 0..n {
            // coefficient of the upward edge from (c, r) to (c, r+1)
            let edge = |r: isize| self.multiplicity(c - 1, r) - self.multiplicity(c, r);
            for r in 0..n {
                let boundary = edge(r - 1) - edge(r);
                let expected = indicator(&self.from, c, r) - indicator(&self.to, c, r);
                if boundary != expected {
                    return Err(Error::InvalidDomain(format!(
                        "vertical boundary at ({c}, {r}) is {boundary}, expected {expected}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Always zero on the grid torus.
pub fn euler_measure(d: &GridDomain) -> Rational64 {
    // a unit square is a disk with four convex right-angled corners
    let square_measure = Rational64::from_integer(1) - Rational64::new(4, 4);
    d.multiplicities
        .iter()
        .map(|&m| square_measure * m)
        .sum()
}

/// Average multiplicity of the four squares meeting at the lattice point `q`.
pub fn vertex_multiplicity(d: &GridDomain, q: (usize, usize)) -> Result<Rational64> {
    let (c, r) = q;
    if !(d.from.contains(c, r) || d.to.contains(c, r)) {
        return Err(Error::PointNotCorner(c, r));
    }
    Ok(quadrant_average(d, c, r))
}

fn quadrant_average(d: &GridDomain, c: usize, r: usize) -> Rational64 {
    let (c, r) = (c as isize, r as isize);
    let sum = d.multiplicity(c - 1, r - 1)
        + d.multiplicity(c, r - 1)
        + d.multiplicity(c - 1, r)
        + d.multiplicity(c, r);
    Rational64::new(sum, 4)
}

/// Sum of vertex multiplicities over the `2n` points of both generators,
/// counted with multiplicity when the generators share a point.
pub fn total_vertex_multiplicity(d: &GridDomain) -> Rational64 {
    let mut total = Rational64::new(0, 1);
    for g in [&d.from, &d.to] {
        for c in 0..d.n {
            total += quadrant_average(d, c, g.row(c));
        }
    }
    total
}

pub fn maslov_index(d: &GridDomain) -> Rational64 {
    euler_measure(d) + total_vertex_multiplicity(d)
}
