//! Grid diagrams and the link they present.
//!
//! Columns are indexed left to right and rows bottom to top, both from 0.
//! The marking in column `c` and row `r` sits at the centre of the unit
//! square `[c, c+1] x [r, r+1]`. Vertical segments run from O to X,
//! horizontal segments from X to O, and verticals pass over horizontals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGrid", into = "RawGrid")]
pub struct GridDiagram {
    o_rows: Vec<usize>,
    x_rows: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawGrid {
    n: usize,
    o: Vec<i64>,
    x: Vec<i64>,
}

impl TryFrom<RawGrid> for GridDiagram {
    type Error = Error;
    fn try_from(raw: RawGrid) -> Result<Self> {
        GridDiagram::new(raw.n, &raw.o, &raw.x)
    }
}

impl From<GridDiagram> for RawGrid {
    fn from(g: GridDiagram) -> Self {
        RawGrid {
            n: g.size(),
            o: g.o_rows.iter().map(|&r| r as i64).collect(),
            x: g.x_rows.iter().map(|&r| r as i64).collect(),
        }
    }
}

fn check_permutation(field: &'static str, n: usize, rows: &[i64]) -> Result<Vec<usize>> {
    if rows.len() != n {
        return Err(Error::LengthMismatch {
            field,
            expected: n,
            found: rows.len(),
        });
    }
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for (column, &row) in rows.iter().enumerate() {
        if row < 0 || row as u64 >= n as u64 || seen[row as usize] {
            return Err(Error::NotAPermutation { field, column, row });
        }
        seen[row as usize] = true;
        out.push(row as usize);
    }
    Ok(out)
}

impl GridDiagram {
    /// Validates and builds a diagram. `o_rows[c]` and `x_rows[c]` are the rows
    /// of the O and X markings in column `c`.
    pub fn new(n: usize, o_rows: &[i64], x_rows: &[i64]) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall(n));
        }
        let o_rows = check_permutation("O", n, o_rows)?;
        let x_rows = check_permutation("X", n, x_rows)?;
        if let Some(column) = (0..n).find(|&c| o_rows[c] == x_rows[c]) {
            return Err(Error::SharedCell {
                column,
                row: o_rows[column],
            });
        }
        Ok(GridDiagram { o_rows, x_rows })
    }

    /// Same as [`GridDiagram::new`] with the size taken from the slices.
    pub fn from_rows(o_rows: &[usize], x_rows: &[usize]) -> Result<Self> {
        let o: Vec<i64> = o_rows.iter().map(|&r| r as i64).collect();
        let x: Vec<i64> = x_rows.iter().map(|&r| r as i64).collect();
        GridDiagram::new(o.len(), &o, &x)
    }

    pub fn size(&self) -> usize {
        self.o_rows.len()
    }

    pub fn o_rows(&self) -> &[usize] {
        &self.o_rows
    }

    pub fn x_rows(&self) -> &[usize] {
        &self.x_rows
    }

    /// Column of the O marking in each row.
    pub fn o_columns(&self) -> Vec<usize> {
        invert(&self.o_rows)
    }

    /// Column of the X marking in each row.
    pub fn x_columns(&self) -> Vec<usize> {
        invert(&self.x_rows)
    }

    /// The permutation `c -> x_rows^-1(o_rows[c])`: from column `c`, follow the
    /// vertical segment to its O, then that row's horizontal segment to the X
    /// at the next column of the same component.
    pub fn successor_columns(&self) -> Vec<usize> {
        let x_cols = self.x_columns();
        self.o_rows.iter().map(|&r| x_cols[r]).collect()
    }
}

pub(crate) fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkSummary {
    pub component_count: usize,
    pub crossing_count: usize,
    pub component_of_column: Vec<usize>,
}

pub fn link_summary(grid: &GridDiagram) -> LinkSummary {
    let n = grid.size();
    let succ = grid.successor_columns();
    let mut component_of_column = vec![usize::MAX; n];
    let mut component_count = 0;
    for start in 0..n {
        if component_of_column[start] != usize::MAX {
            continue;
        }
        let mut c = start;
        while component_of_column[c] == usize::MAX {
            component_of_column[c] = component_count;
            c = succ[c];
        }
        component_count += 1;
    }

    let o_cols = grid.o_columns();
    let x_cols = grid.x_columns();
    let strictly_between = |v: usize, a: usize, b: usize| a.min(b) < v && v < a.max(b);
    let mut crossing_count = 0;
    for c in 0..n {
        for r in 0..n {
            if strictly_between(r, grid.o_rows[c], grid.x_rows[c])
                && strictly_between(c, o_cols[r], x_cols[r])
            {
                crossing_count += 1;
            }
        }
    }

    LinkSummary {
        component_count,
        crossing_count,
        component_of_column,
    }
}
