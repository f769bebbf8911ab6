//! The grid chain complexes.
//!
//! `C~(G)` counts empty rectangles with no markings at all; its differential
//! drops the Maslov grading by one and preserves the Alexander grading, so
//! it splits into one strand per Alexander grading and one block per
//! bigrading. `C^-(G)` counts empty rectangles avoiding X markings and
//! records the O markings they cover as a monomial in `U_1..U_n`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::generators::{factorial, index_chunks, rank, unrank, Generator, Generators};
use crate::gf2::SparseMatrix;
use crate::grading::{Bigrading, Grader};
use crate::grid::GridDiagram;
use crate::halfint::HalfInt;
use crate::rectangle::scan_empty;

/// Generators are graded in chunks of this many indices per task.
const CHUNK: u64 = 1 << 14;

/// Above this size generators are streamed per Alexander grading instead of
/// being bucketed in a single pass.
pub const MATERIALIZE_LIMIT: usize = 9;

/// The part of `C~(G)` in one Alexander grading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strand {
    pub alexander: HalfInt,
    /// Basis of each Maslov grading, as sorted lexicographic generator indices.
    pub blocks: BTreeMap<i64, Vec<u64>>,
    /// `differentials[m]` maps block `m` (columns) to block `m - 1` (rows).
    /// Only present when both blocks are nonempty.
    pub differentials: BTreeMap<i64, SparseMatrix>,
}

impl Strand {
    pub fn dimension(&self, maslov: i64) -> usize {
        self.blocks.get(&maslov).map_or(0, Vec::len)
    }

    pub fn total_dimension(&self) -> usize {
        self.blocks.values().map(Vec::len).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TildeComplex {
    pub size: usize,
    pub strands: BTreeMap<HalfInt, Strand>,
}

impl TildeComplex {
    pub fn generator_count(&self) -> usize {
        self.strands.values().map(Strand::total_dimension).sum()
    }

    /// Boundary matrix from bigrading `(m, s)` to `(m - 1, s)`.
    pub fn differential(&self, bigrading: Bigrading) -> Option<&SparseMatrix> {
        self.strands
            .get(&bigrading.alexander)?
            .differentials
            .get(&bigrading.maslov)
    }
}

/// Bigrading of each generator, in lexicographic order.
pub fn all_bigradings(grid: &GridDiagram) -> Vec<Bigrading> {
    let n = grid.size();
    let grader = Grader::new(grid);
    index_chunks(n, CHUNK)
        .into_par_iter()
        .flat_map_iter(|range| {
            let mut out = Vec::with_capacity((range.end - range.start) as usize);
            Generators::in_range(n, range).for_each_points(|p| out.push(grader.bigrading(p)));
            out
        })
        .collect()
}

/// Number of generators in each Alexander grading.
pub fn alexander_histogram(grid: &GridDiagram) -> BTreeMap<HalfInt, u64> {
    let n = grid.size();
    let grader = Grader::new(grid);
    index_chunks(n, CHUNK)
        .into_par_iter()
        .map(|range| {
            let mut hist = BTreeMap::new();
            Generators::in_range(n, range).for_each_points(|p| {
                *hist.entry(grader.alexander(p)).or_insert(0u64) += 1;
            });
            hist
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

/// `(index, maslov)` of every generator in Alexander grading `s`, by index.
fn bucket_members(grid: &GridDiagram, grader: &Grader, s: HalfInt) -> Vec<(u64, i64)> {
    let n = grid.size();
    index_chunks(n, CHUNK)
        .into_par_iter()
        .flat_map_iter(|range| {
            let start = range.start;
            let mut out = Vec::new();
            let mut idx = start;
            Generators::in_range(n, range).for_each_points(|p| {
                if grader.alexander(p) == s {
                    out.push((idx, grader.maslov(p)));
                }
                idx += 1;
            });
            out
        })
        .collect()
}

/// Builds one strand from its members, sorted by generator index.
fn build_strand(grid: &GridDiagram, s: HalfInt, members: &[(u64, i64)]) -> Strand {
    let n = grid.size();
    let mut blocks: BTreeMap<i64, Vec<u64>> = BTreeMap::new();
    let mut local = Vec::with_capacity(members.len());
    for &(idx, m) in members {
        let block = blocks.entry(m).or_default();
        local.push(block.len() as u32);
        block.push(idx);
    }

    let (o_rows, x_rows) = (grid.o_rows(), grid.x_rows());
    // targets of each member, as member positions
    let targets: Vec<Vec<u32>> = members
        .par_iter()
        .map_init(
            || (Vec::with_capacity(n), Vec::with_capacity(n)),
            |(points, swapped), &(idx, m)| {
                unrank(n, idx, points);
                let mut out = Vec::new();
                scan_empty(o_rows, x_rows, points, false, |i, j| {
                    swapped.clone_from(points);
                    swapped.swap(i, j);
                    let target = rank(swapped);
                    let pos = members
                        .binary_search_by_key(&target, |&(k, _)| k)
                        .expect("marking-free rectangle changed the Alexander grading");
                    debug_assert_eq!(members[pos].1, m - 1);
                    out.push(local[pos]);
                });
                out
            },
        )
        .collect();

    let mut columns: BTreeMap<i64, Vec<Vec<u32>>> = BTreeMap::new();
    for (k, &(_, m)) in members.iter().enumerate() {
        if blocks.contains_key(&(m - 1)) {
            columns.entry(m).or_default().push(targets[k].clone());
        }
    }
    let differentials = columns
        .into_iter()
        .map(|(m, cols)| (m, SparseMatrix::from_columns(blocks[&(m - 1)].len(), cols)))
        .collect();

    Strand {
        alexander: s,
        blocks,
        differentials,
    }
}

/// Builds the strand of `C~(G)` in Alexander grading `s` by a streaming pass
/// over all generators.
pub fn tilde_strand(grid: &GridDiagram, s: HalfInt) -> Strand {
    let grader = Grader::new(grid);
    build_strand(grid, s, &bucket_members(grid, &grader, s))
}

/// Calls `f` with each strand of `C~(G)` in increasing Alexander grading.
/// Small grids are bucketed in one pass; larger ones re-enumerate the
/// generators once per Alexander grading so that only one strand is held.
pub fn for_each_tilde_strand(grid: &GridDiagram, mut f: impl FnMut(Strand)) {
    if grid.size() <= MATERIALIZE_LIMIT {
        let mut buckets: BTreeMap<HalfInt, Vec<(u64, i64)>> = BTreeMap::new();
        for (idx, b) in all_bigradings(grid).into_iter().enumerate() {
            buckets
                .entry(b.alexander)
                .or_default()
                .push((idx as u64, b.maslov));
        }
        for (s, members) in buckets {
            f(build_strand(grid, s, &members));
        }
    } else {
        for &s in alexander_histogram(grid).keys() {
            f(tilde_strand(grid, s));
        }
    }
}

/// The whole of `C~(G)` with its per-bigrading boundary matrices.
pub fn tilde_differential(grid: &GridDiagram) -> TildeComplex {
    let mut strands = BTreeMap::new();
    for_each_tilde_strand(grid, |strand| {
        strands.insert(strand.alexander, strand);
    });
    TildeComplex {
        size: grid.size(),
        strands,
    }
}

/// One term `U_1^{a_1} ... U_n^{a_n} * to` of the differential of `from`
/// in `C^-(G)`. The variable `U_c` belongs to the O marking in column `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinusTerm {
    pub from: Generator,
    pub to: Generator,
    pub exponents: Vec<u8>,
}

impl MinusTerm {
    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&a| a as usize).sum()
    }
}

/// Terms of the `C^-(G)` differential of one generator: `(to, exponents)`.
pub fn minus_terms_from(grid: &GridDiagram, from: &[u8]) -> Vec<(Vec<u8>, Vec<u8>)> {
    let n = grid.size();
    let (o_rows, x_rows) = (grid.o_rows(), grid.x_rows());
    let mut out = Vec::new();
    scan_empty(o_rows, x_rows, from, true, |i, j| {
        let base = from[i] as usize;
        let height = (from[j] as usize + n - base) % n;
        let width = (j + n - i) % n;
        let mut exps = vec![0u8; n];
        for k in 0..width {
            let c = (i + k) % n;
            if (o_rows[c] + n - base) % n < height {
                exps[c] = 1;
            }
        }
        let mut to = from.to_vec();
        to.swap(i, j);
        out.push((to, exps));
    });
    out
}

/// All terms of the `C^-(G)` differential, grouped by source generator in
/// lexicographic order.
pub fn minus_differential(grid: &GridDiagram) -> Vec<MinusTerm> {
    let n = grid.size();
    index_chunks(n, CHUNK)
        .into_par_iter()
        .flat_map_iter(|range| {
            let mut out = Vec::new();
            Generators::in_range(n, range).for_each_points(|p| {
                for (to, exponents) in minus_terms_from(grid, p) {
                    out.push(MinusTerm {
                        from: Generator::from_points_unchecked(p.to_vec()),
                        to: Generator::from_points_unchecked(to),
                        exponents,
                    });
                }
            });
            out
        })
        .collect()
}

/// Expected total number of generators, for sanity checks.
pub fn generator_total(grid: &GridDiagram) -> u64 {
    factorial(grid.size())
}
