//! Knot invariants read off the hat group.
//!
//! - the Seifert genus is the top Alexander grading with nonzero rank;
//! - the unknot is the only knot whose Poincaré polynomial is `1`;
//! - a knot is fibered iff the top Alexander grading has total rank one
//!   (a statement over the integers; the mod 2 reading used here would only
//!   differ in the presence of 2-torsion);
//! - `P(-1, q)` is the Alexander polynomial.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{link_summary, GridDiagram};
use crate::homology::{homology_ranks, peel_v, BigradedRanks, PoincarePolynomial};
use crate::laurent::LaurentPolynomial;

/// The hat group: `H_*(C~(G))` with its `n - l` copies of `V` divided out.
pub fn hfk_hat(grid: &GridDiagram) -> Result<BigradedRanks> {
    hfk_hat_from_tilde(grid, &homology_ranks(grid))
}

/// Peels `n - l` factors of `V` from already computed tilde homology.
pub fn hfk_hat_from_tilde(grid: &GridDiagram, tilde: &BigradedRanks) -> Result<BigradedRanks> {
    let components = link_summary(grid).component_count;
    Ok(peel_v(&tilde.poincare(), grid.size() - components)?.ranks())
}

fn require_knot(grid: &GridDiagram) -> Result<()> {
    match link_summary(grid).component_count {
        1 => Ok(()),
        l => Err(Error::NotAKnot(l)),
    }
}

fn genus_of(hat: &BigradedRanks) -> u64 {
    hat.max_alexander()
        .and_then(|s| s.to_int())
        .map_or(0, |s| s.max(0) as u64)
}

fn is_fibered_from(hat: &BigradedRanks) -> bool {
    let g = genus_of(hat) as i64;
    hat.by_alexander()
        .get(&crate::halfint::HalfInt::from_int(g))
        .copied()
        == Some(1)
}

/// `sum (-1)^m rank(m, s) q^s`, centred and signed to be positive at `q = 1`.
fn alexander_from(hat: &BigradedRanks) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero();
    for (m, s, k) in hat.entries() {
        let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
        // knots only have integral Alexander gradings
        let e = s.to_int().unwrap_or_else(|| s.doubled().div_euclid(2));
        p.add_term(e, sign * k as i64);
    }
    p.symmetrized()
}

pub fn genus(grid: &GridDiagram) -> Result<u64> {
    require_knot(grid)?;
    Ok(genus_of(&hfk_hat(grid)?))
}

/// True iff the tilde homology has total rank `2^(n-1)`.
pub fn is_unknot(grid: &GridDiagram) -> Result<bool> {
    require_knot(grid)?;
    let total = homology_ranks(grid).total();
    Ok(total == 1u64 << (grid.size() - 1))
}

pub fn is_fibered(grid: &GridDiagram) -> Result<bool> {
    require_knot(grid)?;
    Ok(is_fibered_from(&hfk_hat(grid)?))
}

pub fn alexander_polynomial(grid: &GridDiagram) -> Result<LaurentPolynomial> {
    require_knot(grid)?;
    Ok(alexander_from(&hfk_hat(grid)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotReport {
    pub n: usize,
    pub components: usize,
    /// Total rank of the tilde homology.
    pub total_rank: u64,
    pub poincare: PoincarePolynomial,
    pub genus: u64,
    pub is_unknot: bool,
    /// Mod 2 reading of the fiberedness criterion.
    pub is_fibered: bool,
    pub alexander: LaurentPolynomial,
}

/// Every invariant from a single homology computation.
pub fn knot_report(grid: &GridDiagram) -> Result<KnotReport> {
    require_knot(grid)?;
    let tilde = homology_ranks(grid);
    let hat = hfk_hat_from_tilde(grid, &tilde)?;
    let poincare = hat.poincare();
    Ok(KnotReport {
        n: grid.size(),
        components: 1,
        total_rank: tilde.total(),
        genus: genus_of(&hat),
        is_unknot: poincare.is_one(),
        is_fibered: is_fibered_from(&hat),
        alexander: alexander_from(&hat),
        poincare,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot2() {
        let g = GridDiagram::new(2, &[0, 1], &[1, 0]).unwrap();
        let r = knot_report(&g).unwrap();
        assert!(r.is_unknot && r.is_fibered);
        assert_eq!(r.genus, 0);
        assert_eq!(r.total_rank, 2);
        assert_eq!(r.alexander, LaurentPolynomial::one());
        assert!(is_unknot(&g).unwrap());
    }

    #[test]
    fn links_are_rejected() {
        let g = GridDiagram::new(4, &[0, 1, 2, 3], &[1, 0, 3, 2]).unwrap();
        assert_eq!(genus(&g), Err(Error::NotAKnot(2)));
        assert_eq!(is_unknot(&g), Err(Error::NotAKnot(2)));
        assert!(hfk_hat(&g).is_ok());
    }
}
