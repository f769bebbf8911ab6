//! Grid moves that preserve the presented link: cyclic translation,
//! commutation of non-interleaved adjacent columns or rows, and one
//! stabilization pattern together with its inverse.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GridMove {
    /// Every row moves up by one; the top row wraps to the bottom.
    CyclicRow,
    /// Every column moves right by one; the last column wraps to the first.
    CyclicColumn,
    /// Swap columns `column` and `column + 1`.
    CommuteColumns { column: usize },
    /// Swap rows `row` and `row + 1`.
    CommuteRows { row: usize },
    /// Replace the X in `column` (row `r`) by the 2x2 block with X at
    /// `(column, r+1)`, O at `(column+1, r+1)` and X at `(column+1, r)`,
    /// inserting a new column after `column` and a new row after `r`.
    Stabilize { column: usize },
    /// Inverse of [`GridMove::Stabilize`] at the same column.
    Destabilize { column: usize },
}

impl fmt::Display for GridMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GridMove::CyclicRow => write!(f, "cyclic_row"),
            GridMove::CyclicColumn => write!(f, "cyclic_column"),
            GridMove::CommuteColumns { column } => write!(f, "commute_columns:{column}"),
            GridMove::CommuteRows { row } => write!(f, "commute_rows:{row}"),
            GridMove::Stabilize { column } => write!(f, "stabilize:{column}"),
            GridMove::Destabilize { column } => write!(f, "destabilize:{column}"),
        }
    }
}

impl FromStr for GridMove {
    type Err = Error;

    /// Parses the `kind[:index]` form produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, arg) = match s.split_once(':') {
            Some((k, a)) => (k.trim(), Some(a.trim())),
            None => (s, None),
        };
        let index = |arg: Option<&str>| -> Result<usize> {
            let a = arg.ok_or_else(|| Error::IllegalMove(format!("{kind} needs an index")))?;
            a.parse()
                .map_err(|_| Error::IllegalMove(format!("bad index {a:?} for {kind}")))
        };
        let no_arg = |m: GridMove| -> Result<GridMove> {
            match arg {
                None => Ok(m),
                Some(_) => Err(Error::IllegalMove(format!("{kind} takes no index"))),
            }
        };
        match kind.replace('-', "_").as_str() {
            "cyclic_row" => no_arg(GridMove::CyclicRow),
            "cyclic_column" => no_arg(GridMove::CyclicColumn),
            "commute_columns" => Ok(GridMove::CommuteColumns { column: index(arg)? }),
            "commute_rows" => Ok(GridMove::CommuteRows { row: index(arg)? }),
            "stabilize" => Ok(GridMove::Stabilize { column: index(arg)? }),
            "destabilize" => Ok(GridMove::Destabilize { column: index(arg)? }),
            _ => Err(Error::IllegalMove(format!("unknown move {kind:?}"))),
        }
    }
}

/// Closed intervals that neither are disjoint nor strictly nested.
fn interleaved(a: (usize, usize), b: (usize, usize)) -> bool {
    let span = |(p, q): (usize, usize)| (p.min(q), p.max(q));
    let (a0, a1) = span(a);
    let (b0, b1) = span(b);
    let disjoint = a1 < b0 || b1 < a0;
    let nested = (a0 < b0 && b1 < a1) || (b0 < a0 && a1 < b1);
    !(disjoint || nested)
}

fn rebuild(o: Vec<usize>, x: Vec<usize>) -> Result<GridDiagram> {
    GridDiagram::from_rows(&o, &x)
}

pub fn apply_move(grid: &GridDiagram, m: GridMove) -> Result<GridDiagram> {
    let n = grid.size();
    let o = grid.o_rows();
    let x = grid.x_rows();
    match m {
        GridMove::CyclicRow => rebuild(
            o.iter().map(|&r| (r + 1) % n).collect(),
            x.iter().map(|&r| (r + 1) % n).collect(),
        ),
        GridMove::CyclicColumn => {
            let shift = |v: &[usize]| (0..n).map(|c| v[(c + n - 1) % n]).collect();
            rebuild(shift(o), shift(x))
        }
        GridMove::CommuteColumns { column } => {
            if column + 1 >= n {
                return Err(Error::IllegalMove(format!(
                    "no column pair ({column}, {}) in a size-{n} grid",
                    column + 1
                )));
            }
            let next = column + 1;
            if interleaved((o[column], x[column]), (o[next], x[next])) {
                return Err(Error::IllegalMove(format!(
                    "columns {column} and {next} are interleaved"
                )));
            }
            let (mut o, mut x) = (o.to_vec(), x.to_vec());
            o.swap(column, next);
            x.swap(column, next);
            rebuild(o, x)
        }
        GridMove::CommuteRows { row } => {
            if row + 1 >= n {
                return Err(Error::IllegalMove(format!(
                    "no row pair ({row}, {}) in a size-{n} grid",
                    row + 1
                )));
            }
            let next = row + 1;
            let o_cols = grid.o_columns();
            let x_cols = grid.x_columns();
            if interleaved((o_cols[row], x_cols[row]), (o_cols[next], x_cols[next])) {
                return Err(Error::IllegalMove(format!(
                    "rows {row} and {next} are interleaved"
                )));
            }
            let swap = |r: usize| match r {
                r if r == row => next,
                r if r == next => row,
                r => r,
            };
            rebuild(
                o.iter().map(|&r| swap(r)).collect(),
                x.iter().map(|&r| swap(r)).collect(),
            )
        }
        GridMove::Stabilize { column } => {
            if column >= n {
                return Err(Error::IllegalMove(format!(
                    "column {column} out of range for size {n}"
                )));
            }
            let r = x[column];
            let lift = |v: usize| if v > r { v + 1 } else { v };
            let mut new_o = Vec::with_capacity(n + 1);
            let mut new_x = Vec::with_capacity(n + 1);
            for c in 0..n {
                new_o.push(lift(o[c]));
                new_x.push(if c == column { r + 1 } else { lift(x[c]) });
                if c == column {
                    new_o.push(r + 1);
                    new_x.push(r);
                }
            }
            rebuild(new_o, new_x)
        }
        GridMove::Destabilize { column } => {
            if column + 1 >= n {
                return Err(Error::IllegalMove(format!(
                    "column {column} has no right neighbour in a size-{n} grid"
                )));
            }
            if n <= 2 {
                return Err(Error::IllegalMove(
                    "cannot destabilize a size-2 grid".to_string(),
                ));
            }
            let next = column + 1;
            let r = x[next];
            if r + 1 >= n || x[column] != r + 1 || o[next] != r + 1 {
                return Err(Error::IllegalMove(format!(
                    "no destabilization pattern at column {column}"
                )));
            }
            let lower = |v: usize| if v > r + 1 { v - 1 } else { v };
            let mut new_o = Vec::with_capacity(n - 1);
            let mut new_x = Vec::with_capacity(n - 1);
            for c in (0..n).filter(|&c| c != next) {
                new_o.push(lower(o[c]));
                new_x.push(if c == column { r } else { lower(x[c]) });
            }
            rebuild(new_o, new_x)
        }
    }
}

/// Every move that [`apply_move`] accepts on `grid`, in a fixed order.
pub fn legal_moves(grid: &GridDiagram) -> Vec<GridMove> {
    let n = grid.size();
    let mut candidates = vec![GridMove::CyclicRow, GridMove::CyclicColumn];
    for i in 0..n {
        candidates.push(GridMove::CommuteColumns { column: i });
        candidates.push(GridMove::CommuteRows { row: i });
        candidates.push(GridMove::Stabilize { column: i });
        candidates.push(GridMove::Destabilize { column: i });
    }
    candidates
        .into_iter()
        .filter(|&m| apply_move(grid, m).is_ok())
        .collect()
}
