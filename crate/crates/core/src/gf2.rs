//! Linear algebra over the two-element field.
//!
//! Matrices are stored column-wise as sorted row-index lists; an entry is
//! present iff it equals 1. Their public form is the list of `(row, column)`
//! triplets of nonzero entries.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<u32>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        SparseMatrix {
            rows: k,
            cols: k,
            columns: (0..k as u32).map(|i| vec![i]).collect(),
        }
    }

    /// Builds a matrix from `(row, column)` entries; repeated entries cancel
    /// in pairs.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut columns = vec![Vec::new(); cols];
        for (r, c) in entries {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            columns[c].push(r as u32);
        }
        for col in &mut columns {
            reduce_mod2(col);
        }
        SparseMatrix {
            rows,
            cols,
            columns,
        }
    }

    /// Builds a matrix from per-column row lists, reducing each mod 2.
    pub fn from_columns(rows: usize, mut columns: Vec<Vec<u32>>) -> Self {
        for col in &mut columns {
            debug_assert!(col.iter().all(|&r| (r as usize) < rows));
            reduce_mod2(col);
        }
        SparseMatrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[u32] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.columns[c].binary_search(&(r as u32)).is_ok()
    }

    /// Nonzero entries as `(row, column)`, column-major.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&r| (r as usize, c)))
    }

    /// `self * rhs` over GF(2).
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc: Vec<u32> = Vec::new();
                for &k in col {
                    acc.extend_from_slice(&self.columns[k as usize]);
                }
                reduce_mod2(&mut acc);
                acc
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            columns,
        }
    }

    pub fn to_dense_rows(&self) -> Vec<BitRow> {
        let mut rows = vec![BitRow::zeros(self.cols); self.rows];
        for (r, c) in self.triplets() {
            rows[r].set(c);
        }
        rows
    }
}

/// Sorts and removes entries that occur an even number of times.
fn reduce_mod2(v: &mut Vec<u32>) {
    v.sort_unstable();
    let mut out = 0;
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            v[out] = v[i];
            out += 1;
        }
        i = j;
    }
    v.truncate(out);
}

/// A dense row of bits packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

/// Rank by Gaussian elimination on bit-packed rows, pivoting on columns in
/// input order.
pub fn rank_dense(mut rows: Vec<BitRow>, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(c)) else {
            continue;
        };
        rows.swap(rank, p);
        let (done, rest) = rows.split_at_mut(rank + 1);
        let pivot = &done[rank];
        for row in rest.iter_mut().filter(|row| row.get(c)) {
            row.xor_assign(pivot);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// XOR of two sorted, duplicate-free index lists.
fn symmetric_difference(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

/// Rank by the standard column reduction: repeatedly clear the lowest entry
/// of each column against earlier columns with the same lowest row.
pub fn rank_sparse(m: &SparseMatrix) -> usize {
    let mut reduced: Vec<Vec<u32>> = Vec::with_capacity(m.cols);
    let mut pivot_of_row: HashMap<u32, usize> = HashMap::new();
    let mut scratch = Vec::new();
    for col in &m.columns {
        let mut cur = col.clone();
        while let Some(&low) = cur.last() {
            match pivot_of_row.get(&low) {
                Some(&k) => {
                    symmetric_difference(&cur, &reduced[k], &mut scratch);
                    std::mem::swap(&mut cur, &mut scratch);
                }
                None => break,
            }
        }
        if let Some(&low) = cur.last() {
            pivot_of_row.insert(low, reduced.len());
        }
        reduced.push(cur);
    }
    pivot_of_row.len()
}

/// Above this many dense bits the sparse reduction is used instead.
const DENSE_LIMIT_BITS: usize = 1 << 22;

pub fn gf2_rank(m: &SparseMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 || m.is_zero() {
        return 0;
    }
    if m.rows.saturating_mul(m.cols) <= DENSE_LIMIT_BITS {
        rank_dense(m.to_dense_rows(), m.cols)
    } else {
        rank_sparse(m)
    }
}
