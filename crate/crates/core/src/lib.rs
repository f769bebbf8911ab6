//! Combinatorial knot Floer homology from grid diagrams.
//!
//! A grid diagram of size `n` presents a link; its generators are the `n!`
//! permutations and its differentials count empty rectangles on the grid
//! torus. From the homology of the fully collapsed complex `C~(G)` this crate
//! recovers the bigraded knot Floer homology and with it the Seifert genus,
//! unknot detection, fiberedness and the Alexander polynomial.

pub mod complex;
pub mod domain;
pub mod error;
pub mod format;
pub mod generators;
pub mod gf2;
pub mod grading;
pub mod grid;
pub mod halfint;
pub mod homology;
pub mod invariants;
pub mod laurent;
pub mod moves;
pub mod random;
pub mod record;
pub mod rectangle;
pub mod verify;

pub use complex::{minus_differential, tilde_differential, MinusTerm, Strand, TildeComplex};
pub use domain::GridDomain;
pub use error::{Error, Result};
pub use format::{parse_batch, parse_grid, serialize_batch, serialize_grid};
pub use generators::{generators, Generator};
pub use gf2::{gf2_rank, SparseMatrix};
pub use grading::{alexander, bigrading, maslov, Bigrading};
pub use grid::{link_summary, GridDiagram, LinkSummary};
pub use halfint::HalfInt;
pub use homology::{homology_ranks, peel_v, BigradedRanks, PoincarePolynomial};
pub use invariants::{
    alexander_polynomial, genus, hfk_hat, is_fibered, is_unknot, knot_report, KnotReport,
};
pub use laurent::LaurentPolynomial;
pub use moves::{apply_move, legal_moves, GridMove};
pub use rectangle::{empty_rectangles, rectangles_between, Rectangle};
