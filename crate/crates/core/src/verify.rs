//! Self-checks on a single grid: `d^2 = 0` for both complexes, the grading
//! laws for every differential term, the index formula against emptiness of
//! rectangles, and divisibility of the tilde homology by the `V` factors.

use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{minus_terms_from, TildeComplex};
use crate::domain::{maslov_index, GridDomain};
use crate::generators::{index_chunks, rank, Generator, Generators};
use crate::grading::Grader;
use crate::grid::{link_summary, GridDiagram};
use crate::homology::{complex_homology, peel_v};
use crate::rectangle::rectangles_from;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn merge(mut self, other: CheckResult) -> CheckResult {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: ok ({} checked)", self.name, self.checked)
        } else {
            write!(
                f,
                "{}: FAILED ({} of {} checked; first: {})",
                self.name,
                self.failures,
                self.checked,
                self.first_failure.as_deref().unwrap_or("?")
            )
        }
    }
}

/// Chunked parallel fold over all generators with an ordered merge.
fn over_generators(
    grid: &GridDiagram,
    name: &str,
    check: impl Fn(&[u8], &mut CheckResult) + Sync,
) -> CheckResult {
    index_chunks(grid.size(), 1 << 10)
        .into_par_iter()
        .map(|range| {
            let mut res = CheckResult::new(name);
            Generators::in_range(grid.size(), range).for_each_points(|p| check(p, &mut res));
            res
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(CheckResult::new(name), CheckResult::merge)
}

/// Composes consecutive boundary matrices in every strand.
pub fn check_tilde_d_squared(complex: &TildeComplex) -> CheckResult {
    let mut res = CheckResult::new("d2_tilde");
    for (s, strand) in &complex.strands {
        for (&m, d) in &strand.differentials {
            if let Some(next) = strand.differentials.get(&(m - 1)) {
                res.record(next.mul(d).is_zero(), || {
                    format!("d(m={})∘d(m={m}) != 0 at alexander {s}", m - 1)
                });
            }
        }
    }
    res
}

/// Expands `d(d(x))` over `Z/2[U_1..U_n]` for every generator.
pub fn check_minus_d_squared(grid: &GridDiagram) -> CheckResult {
    over_generators(grid, "d2_minus", |x, res| {
        let mut counts: HashMap<(u64, u64), u32> = HashMap::new();
        let monomial = |e: &[u8]| e.iter().enumerate().fold(0u64, |acc, (i, &a)| acc + ((a as u64) << (4 * i)));
        for (y, e1) in minus_terms_from(grid, x) {
            for (z, e2) in minus_terms_from(grid, &y) {
                *counts.entry((rank(&z), monomial(&e1) + monomial(&e2))).or_insert(0) += 1;
            }
        }
        let odd = counts.values().filter(|&&c| c % 2 == 1).count();
        res.record(odd == 0, || {
            format!("d^2 {} has {odd} surviving terms", Generator::new(x.to_vec()).unwrap())
        });
    })
}

/// `M(x) - M(y) = 1 - 2 sum O_i` and `A(x) - A(y) = -sum O_i` for every
/// term of the `C^-` differential (which includes every `C~` term).
pub fn check_grading_laws(grid: &GridDiagram) -> CheckResult {
    let grader = Grader::new(grid);
    over_generators(grid, "grading_laws", |x, res| {
        let bx = grader.bigrading(x);
        for (y, exps) in minus_terms_from(grid, x) {
            let by = grader.bigrading(&y);
            let o: i64 = exps.iter().map(|&a| a as i64).sum();
            let ok = bx.maslov - by.maslov == 1 - 2 * o
                && bx.alexander.doubled() - by.alexander.doubled() == -2 * o;
            res.record(ok, || {
                format!(
                    "term {:?} -> {:?} with {o} O markings: ({}, {}) -> ({}, {})",
                    x, y, bx.maslov, bx.alexander, by.maslov, by.alexander
                )
            });
        }
    })
}

/// For every rectangle out of every generator: the index `e + N` equals 1
/// exactly when the rectangle is empty, and equals `M(x) - M(y) + 2 sum O_i`.
pub fn check_index_formula(grid: &GridDiagram) -> CheckResult {
    let grader = Grader::new(grid);
    let one = Rational64::from_integer(1);
    over_generators(grid, "index_formula", |x, res| {
        let x = Generator::new(x.to_vec()).unwrap();
        let mx = grader.maslov(x.points());
        for r in rectangles_from(grid, &x) {
            let mu = maslov_index(&GridDomain::from_rectangle(&r));
            let expected = mx - grader.maslov(r.to.points()) + 2 * r.o_total() as i64;
            let ok = (mu == one) == r.empty && mu == Rational64::from_integer(expected);
            res.record(ok, || {
                format!(
                    "rectangle {:?}->{:?} from {x}: index {mu}, empty {}, grading predicts {expected}",
                    r.lower_left, r.upper_right, r.empty
                )
            });
        }
    })
}

/// `H_*(C~)` must be divisible by `(1 + t^-1 q^-1)^(n - l)`.
pub fn check_v_divisibility(grid: &GridDiagram, complex: &TildeComplex) -> CheckResult {
    let mut res = CheckResult::new("v_divisibility");
    let k = grid.size() - link_summary(grid).component_count;
    let homology = complex_homology(complex);
    let outcome = peel_v(&homology.poincare(), k);
    res.record(outcome.is_ok(), || format!("{}", outcome.unwrap_err()));
    res
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

pub fn verify_grid(grid: &GridDiagram) -> VerifyReport {
    let complex = crate::complex::tilde_differential(grid);
    VerifyReport {
        checks: vec![
            check_tilde_d_squared(&complex),
            check_minus_d_squared(grid),
            check_grading_laws(grid),
            check_index_formula(grid),
            check_v_divisibility(grid, &complex),
        ],
    }
}
