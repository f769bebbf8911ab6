//! Generators of the grid complexes: permutations `points[c] = row`,
//! enumerated lexicographically and ranked by their lexicographic index.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

/// Largest grid size whose generator count fits the `u64` ranking.
pub const MAX_RANKED_SIZE: usize = 20;

/// One intersection point on each vertical circle: the point on vertical
/// circle `c` sits at lattice position `(c, points[c])`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Generator(Vec<u8>);

impl Generator {
    /// Returns `None` unless `points` is a permutation of `0..points.len()`.
    pub fn new(points: Vec<u8>) -> Option<Self> {
        let n = points.len();
        let mut seen = vec![false; n];
        for &p in &points {
            let p = p as usize;
            if p >= n || seen[p] {
                return None;
            }
            seen[p] = true;
        }
        Some(Generator(points))
    }

    pub fn identity(n: usize) -> Self {
        Generator((0..n as u8).collect())
    }

    pub fn points(&self) -> &[u8] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn row(&self, column: usize) -> usize {
        self.0[column] as usize
    }

    pub fn column_of_row(&self, row: usize) -> usize {
        self.0.iter().position(|&r| r as usize == row).unwrap()
    }

    /// Whether the lattice point `(column, row)` is a point of this generator.
    pub fn contains(&self, column: usize, row: usize) -> bool {
        self.0.get(column).is_some_and(|&r| r as usize == row)
    }

    /// Columns where `self` and `other` disagree.
    pub fn differing_columns(&self, other: &Generator) -> Vec<usize> {
        (0..self.size()).filter(|&c| self.0[c] != other.0[c]).collect()
    }

    pub fn with_swapped(&self, a: usize, b: usize) -> Generator {
        let mut p = self.0.clone();
        p.swap(a, b);
        Generator(p)
    }

    pub fn into_points(self) -> Vec<u8> {
        self.0
    }

    pub(crate) fn from_points_unchecked(points: Vec<u8>) -> Self {
        Generator(points)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lexicographic index of a permutation among all permutations of its length.
pub fn rank(points: &[u8]) -> u64 {
    let n = points.len();
    let mut used: u32 = 0;
    let mut r = 0u64;
    for (i, &p) in points.iter().enumerate() {
        let smaller_unused = (p as u32 - (used & ((1u32 << p) - 1)).count_ones()) as u64;
        r += smaller_unused * factorial(n - 1 - i);
        used |= 1 << p;
    }
    r
}

/// Inverse of [`rank`].
pub fn unrank(n: usize, mut index: u64, out: &mut Vec<u8>) {
    out.clear();
    let mut remaining: Vec<u8> = (0..n as u8).collect();
    for i in 0..n {
        let f = factorial(n - 1 - i);
        let k = (index / f) as usize;
        index %= f;
        out.push(remaining.remove(k));
    }
}

/// Advances to the next permutation in lexicographic order; returns `false`
/// (leaving `p` untouched) at the last one.
pub fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All `n!` generators of a size-`n` grid, in lexicographic order.
pub struct Generators {
    current: Vec<u8>,
    remaining: u64,
}

impl Generators {
    pub fn new(n: usize) -> Self {
        Self::in_range(n, 0..factorial(n))
    }

    /// Generators whose lexicographic index lies in `range`.
    pub fn in_range(n: usize, range: Range<u64>) -> Self {
        let mut current = Vec::with_capacity(n);
        unrank(n, range.start.min(factorial(n).saturating_sub(1)), &mut current);
        Generators {
            current,
            remaining: range.end.saturating_sub(range.start),
        }
    }

    /// Calls `f` on each permutation in the range without allocating.
    pub fn for_each_points(mut self, mut f: impl FnMut(&[u8])) {
        while self.remaining > 0 {
            f(&self.current);
            self.remaining -= 1;
            if self.remaining > 0 {
                next_permutation(&mut self.current);
            }
        }
    }
}

impl Iterator for Generators {
    type Item = Generator;

    fn next(&mut self) -> Option<Generator> {
        if self.remaining == 0 {
            return None;
        }
        let out = Generator(self.current.clone());
        self.remaining -= 1;
        if self.remaining > 0 {
            next_permutation(&mut self.current);
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}

pub fn generators(n: usize) -> Generators {
    Generators::new(n)
}

/// Splits `0..n!` into contiguous ranges of roughly `chunk` indices, for
/// parallel enumeration with an order-preserving merge.
pub fn index_chunks(n: usize, chunk: u64) -> Vec<Range<u64>> {
    let total = factorial(n);
    let chunk = chunk.max(1);
    (0..total.div_ceil(chunk))
        .map(|i| i * chunk..((i + 1) * chunk).min(total))
        .collect()
}
