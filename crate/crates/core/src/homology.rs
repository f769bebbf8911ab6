//! Bigraded homology of `C~(G)` and recovery of the hat groups.
//!
//! `H_*(C~(G))` is the hat group tensored with `n - l` copies of a
//! two-dimensional space `V` supported in bigradings `(0, 0)` and `(-1, -1)`.
//! On Poincaré polynomials each copy of `V` is the factor `1 + t^-1 q^-1`,
//! which [`peel_v`] divides out exactly.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{for_each_tilde_strand, Strand, TildeComplex};
use crate::error::{Error, Result};
use crate::gf2::gf2_rank;
use crate::grid::GridDiagram;
use crate::halfint::HalfInt;

/// Nonzero ranks over GF(2), keyed by `(maslov, alexander)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BigradedRanks {
    ranks: BTreeMap<(i64, HalfInt), u64>,
}

impl BigradedRanks {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (i64, HalfInt, u64)>) -> Self {
        let mut r = Self::new();
        for (m, s, k) in entries {
            r.add(m, s, k);
        }
        r
    }

    pub fn add(&mut self, maslov: i64, alexander: HalfInt, rank: u64) {
        if rank > 0 {
            *self.ranks.entry((maslov, alexander)).or_insert(0) += rank;
        }
    }

    pub fn get(&self, maslov: i64, alexander: HalfInt) -> u64 {
        self.ranks.get(&(maslov, alexander)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.ranks.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// `(maslov, alexander, rank)` in increasing bigrading order.
    pub fn entries(&self) -> impl Iterator<Item = (i64, HalfInt, u64)> + '_ {
        self.ranks.iter().map(|(&(m, s), &k)| (m, s, k))
    }

    /// Total rank in each Alexander grading.
    pub fn by_alexander(&self) -> BTreeMap<HalfInt, u64> {
        let mut out = BTreeMap::new();
        for (_, s, k) in self.entries() {
            *out.entry(s).or_insert(0) += k;
        }
        out
    }

    pub fn max_alexander(&self) -> Option<HalfInt> {
        self.ranks.keys().map(|&(_, s)| s).max()
    }

    pub fn poincare(&self) -> PoincarePolynomial {
        PoincarePolynomial {
            coefficients: self.ranks.clone(),
        }
    }

    /// Same ranks with every bigrading moved by `(dm, ds)`.
    pub fn shifted(&self, dm: i64, ds: HalfInt) -> Self {
        BigradedRanks {
            ranks: self
                .ranks
                .iter()
                .map(|(&(m, s), &k)| ((m + dm, s + ds), k))
                .collect(),
        }
    }
}

impl fmt::Display for BigradedRanks {
    /// One `m s rank` line per nonzero bigrading.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, s, k) in self.entries() {
            writeln!(f, "{m} {s} {k}")?;
        }
        Ok(())
    }
}

/// `sum t^m q^s * rank(m, s)` with nonnegative coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PoincarePolynomial {
    coefficients: BTreeMap<(i64, HalfInt), u64>,
}

impl PoincarePolynomial {
    pub fn one() -> Self {
        BigradedRanks::from_entries([(0, HalfInt::ZERO, 1)]).poincare()
    }

    /// `(1 + t^-1 q^-1)^k`
    pub fn v_power(k: usize) -> Self {
        let mut coefficients = BTreeMap::new();
        let mut binom: u64 = 1;
        for j in 0..=k {
            coefficients.insert((-(j as i64), HalfInt::from_int(-(j as i64))), binom);
            binom = binom * (k - j) as u64 / (j as u64 + 1);
        }
        PoincarePolynomial { coefficients }
    }

    pub fn coefficient(&self, maslov: i64, alexander: HalfInt) -> u64 {
        self.coefficients
            .get(&(maslov, alexander))
            .copied()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, HalfInt, u64)> + '_ {
        self.coefficients.iter().map(|(&(m, s), &c)| (m, s, c))
    }

    pub fn ranks(&self) -> BigradedRanks {
        BigradedRanks {
            ranks: self.coefficients.clone(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn mul(&self, other: &PoincarePolynomial) -> PoincarePolynomial {
        let mut out: BTreeMap<(i64, HalfInt), u64> = BTreeMap::new();
        for (m1, s1, c1) in self.terms() {
            for (m2, s2, c2) in other.terms() {
                *out.entry((m1 + m2, s1 + s2)).or_insert(0) += c1 * c2;
            }
        }
        PoincarePolynomial { coefficients: out }
    }

    /// Exact division by `1 + t^-1 q^-1`, or `None` if it does not divide
    /// with a nonnegative quotient.
    fn divide_by_v(&self) -> Option<PoincarePolynomial> {
        // Along each diagonal {(m - j, s - j)} the factor is 1 + z with z
        // lowering m; divide from the top: Q_m = P_m - Q_{m+1}.
        let mut diagonals: BTreeMap<HalfInt, BTreeMap<i64, i128>> = BTreeMap::new();
        for (m, s, c) in self.terms() {
            diagonals
                .entry(HalfInt::from_int(m) - s)
                .or_default()
                .insert(m, c as i128);
        }
        let mut out = BTreeMap::new();
        for (diff, terms) in diagonals {
            let lo = *terms.keys().next().unwrap();
            let hi = *terms.keys().next_back().unwrap();
            if lo == hi {
                return None;
            }
            let p = |m: i64| terms.get(&m).copied().unwrap_or(0);
            let mut above: i128 = 0;
            for m in (lo + 1..=hi).rev() {
                let q = p(m) - above;
                if q < 0 {
                    return None;
                }
                if q > 0 {
                    out.insert((m, HalfInt::from_int(m) - diff), q as u64);
                }
                above = q;
            }
            if p(lo) != above {
                return None;
            }
        }
        Some(PoincarePolynomial { coefficients: out })
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, s, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "t^{m}q^{s}")?;
        }
        Ok(())
    }
}

/// Divides out `k` factors of `1 + t^-1 q^-1`.
pub fn peel_v(p: &PoincarePolynomial, k: usize) -> Result<PoincarePolynomial> {
    let mut cur = p.clone();
    for peeled in 0..k {
        cur = cur.divide_by_v().ok_or(Error::NotDivisible {
            peeled,
            requested: k,
        })?;
    }
    Ok(cur)
}

/// Homology ranks of one strand, keyed by Maslov grading.
pub fn strand_homology(strand: &Strand) -> BTreeMap<i64, u64> {
    let ranks: BTreeMap<i64, usize> = strand
        .differentials
        .par_iter()
        .map(|(&m, d)| (m, gf2_rank(d)))
        .collect();
    let rank_of = |m: i64| ranks.get(&m).copied().unwrap_or(0);
    strand
        .blocks
        .iter()
        .map(|(&m, basis)| (m, (basis.len() - rank_of(m) - rank_of(m + 1)) as u64))
        .filter(|&(_, h)| h > 0)
        .collect()
}

pub fn complex_homology(complex: &TildeComplex) -> BigradedRanks {
    let mut out = BigradedRanks::new();
    for (&s, strand) in &complex.strands {
        for (m, h) in strand_homology(strand) {
            out.add(m, s, h);
        }
    }
    out
}

/// Bigraded ranks of `H_*(C~(G))`, strand by strand.
pub fn homology_ranks(grid: &GridDiagram) -> BigradedRanks {
    let mut out = BigradedRanks::new();
    for_each_tilde_strand(grid, |strand| {
        for (m, h) in strand_homology(&strand) {
            out.add(m, strand.alexander, h);
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: i64) -> HalfInt {
        HalfInt::from_int(v)
    }

    #[test]
    fn peel_exact_powers() {
        assert!(peel_v(&PoincarePolynomial::v_power(2), 2).unwrap().is_one());
        assert!(peel_v(&PoincarePolynomial::one(), 0).unwrap().is_one());
        let p = BigradedRanks::from_entries([(2, h(1), 1), (1, h(0), 1), (0, h(-1), 1)]).poincare();
        assert_eq!(peel_v(&p.mul(&PoincarePolynomial::v_power(4)), 4).unwrap(), p);
    }

    #[test]
    fn peel_rejects_non_multiples() {
        assert_eq!(
            peel_v(&PoincarePolynomial::one(), 1),
            Err(Error::NotDivisible {
                peeled: 0,
                requested: 1
            })
        );
        // 1 + 2u is not a multiple of 1 + u
        let p = BigradedRanks::from_entries([(0, h(0), 1), (-1, h(-1), 2)]).poincare();
        assert!(peel_v(&p, 1).is_err());
        // 1 - u^2 = (1 + u)(1 - u) has a negative quotient
        let p = BigradedRanks::from_entries([(0, h(0), 1), (-2, h(-2), 1)]).poincare();
        assert!(peel_v(&p, 1).is_err());
    }

    #[test]
    fn unknot2_homology() {
        let g = GridDiagram::new(2, &[0, 1], &[1, 0]).unwrap();
        let r = homology_ranks(&g);
        assert_eq!(
            r,
            BigradedRanks::from_entries([(0, h(0), 1), (-1, h(-1), 1)])
        );
        assert!(peel_v(&r.poincare(), 1).unwrap().is_one());
    }
}
