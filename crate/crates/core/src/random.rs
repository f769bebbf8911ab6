//! Seeded random grid diagrams.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grid::{link_summary, GridDiagram};
use crate::moves::{apply_move, legal_moves, GridMove};

/// A uniformly random valid diagram of size `n >= 2`: a uniform pair of
/// permutations conditioned on never sharing a cell.
pub fn random_grid<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GridDiagram {
    assert!(n >= 2, "grid diagrams need n >= 2");
    let mut o: Vec<usize> = (0..n).collect();
    let mut x: Vec<usize> = (0..n).collect();
    loop {
        o.shuffle(rng);
        x.shuffle(rng);
        if (0..n).all(|c| o[c] != x[c]) {
            return GridDiagram::from_rows(&o, &x).expect("validated above");
        }
    }
}

/// A random diagram presenting a knot (one component).
pub fn random_knot_grid<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GridDiagram {
    loop {
        let g = random_grid(rng, n);
        if link_summary(&g).component_count == 1 {
            return g;
        }
    }
}

pub fn random_grid_seeded(seed: u64, n: usize) -> GridDiagram {
    random_grid(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

pub fn random_knot_grid_seeded(seed: u64, n: usize) -> GridDiagram {
    random_knot_grid(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

/// Picks a uniformly random legal move, optionally excluding stabilizations.
pub fn random_move<R: Rng + ?Sized>(
    rng: &mut R,
    grid: &GridDiagram,
    allow_stabilize: bool,
) -> Option<GridMove> {
    let moves: Vec<GridMove> = legal_moves(grid)
        .into_iter()
        .filter(|m| allow_stabilize || !matches!(m, GridMove::Stabilize { .. }))
        .collect();
    moves.choose(rng).copied()
}

/// The 2x2 unknot stabilized up to size `n`, at varying columns.
pub fn stabilized_unknot(n: usize) -> GridDiagram {
    let mut g = GridDiagram::new(2, &[0, 1], &[1, 0]).expect("valid");
    while g.size() < n {
        let column = g.size() / 2;
        g = apply_move(&g, GridMove::Stabilize { column }).expect("stabilization is always legal");
    }
    g
}
