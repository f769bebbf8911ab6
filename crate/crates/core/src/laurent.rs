use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Laurent polynomial in one variable `q` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LaurentPolynomial {
    /// exponent -> nonzero coefficient
    terms: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coefficient: i64, exponent: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coefficient);
        p
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `coefficients[k]` is the coefficient of `q^(lowest + k)`.
    pub fn from_coefficients(lowest: i64, coefficients: &[i64]) -> Self {
        Self::from_terms(
            coefficients
                .iter()
                .enumerate()
                .map(|(k, &c)| (lowest + k as i64, c)),
        )
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let e = self.terms.entry(exponent).or_insert(0);
        *e += coefficient;
        if *e == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: i64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Largest absolute exponent; the degree of a symmetric polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|e| e.abs()).max().unwrap_or(0)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self.terms.iter().all(|(&e, &c)| self.coefficient(-e) == c)
    }

    /// Multiplies by a unit `±q^k` so that the exponents are centred on zero
    /// and the value at `q = 1` is nonnegative. When the exponent span is odd
    /// the lower half wins.
    pub fn symmetrized(&self) -> Self {
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Self::zero();
        };
        let shift = -(lo + hi).div_euclid(2);
        let p = self.shift(shift);
        let sign = match p.eval_at_one() {
            v if v < 0 => -1,
            0 if p.terms.values().next_back().is_some_and(|&c| c < 0) => -1,
            _ => 1,
        };
        if sign < 0 {
            -p
        } else {
            p
        }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> Self {
        LaurentPolynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Highest power first, e.g. `q - 1 + q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, &c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            match (e, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}")?,
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}
