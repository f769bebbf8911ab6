//! Line-delimited machine-readable output.
//!
//! Each line is one JSON object whose `record` field names its kind. `grid`
//! is the 0-based position of the input grid in its file. Half-integral
//! Alexander gradings are written as JSON numbers (`-0.5`).
//!
//! ```text
//! {"record":"rank","grid":0,"complex":"tilde","m":0,"s":0,"rank":1}
//! {"record":"genus","grid":0,"value":1}
//! ```

use serde::{Deserialize, Serialize};

use crate::grid::{GridDiagram, LinkSummary};
use crate::halfint::HalfInt;
use crate::homology::BigradedRanks;
use crate::invariants::KnotReport;
use crate::laurent::LaurentPolynomial;
use crate::verify::CheckResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexKind {
    /// `H_*(C~(G))`
    Tilde,
    /// the hat group after peeling
    Hat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case", deny_unknown_fields)]
pub enum Record {
    Valid {
        grid: usize,
        n: usize,
    },
    Info {
        grid: usize,
        n: usize,
        components: usize,
        crossings: usize,
        component_of_column: Vec<usize>,
    },
    Rank {
        grid: usize,
        complex: ComplexKind,
        m: i64,
        s: HalfInt,
        rank: u64,
    },
    Unknot {
        grid: usize,
        value: bool,
    },
    Genus {
        grid: usize,
        value: u64,
    },
    Fibered {
        grid: usize,
        value: bool,
    },
    Alexander {
        grid: usize,
        /// `[exponent, coefficient]`, increasing exponent
        coefficients: Vec<(i64, i64)>,
    },
    Report {
        grid: usize,
        n: usize,
        components: usize,
        total_rank: u64,
        genus: u64,
        is_unknot: bool,
        is_fibered: bool,
        alexander: Vec<(i64, i64)>,
        /// `[m, s, rank]` of the hat group
        poincare: Vec<(i64, HalfInt, u64)>,
    },
    Check {
        grid: usize,
        name: String,
        checked: u64,
        failures: u64,
    },
    Grid {
        grid: usize,
        n: usize,
        o: Vec<usize>,
        x: Vec<usize>,
    },
    Error {
        grid: usize,
        message: String,
    },
}

impl Record {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn info(grid: usize, n: usize, s: &LinkSummary) -> Record {
        Record::Info {
            grid,
            n,
            components: s.component_count,
            crossings: s.crossing_count,
            component_of_column: s.component_of_column.clone(),
        }
    }

    pub fn ranks(grid: usize, complex: ComplexKind, ranks: &BigradedRanks) -> Vec<Record> {
        ranks
            .entries()
            .map(|(m, s, rank)| Record::Rank {
                grid,
                complex,
                m,
                s,
                rank,
            })
            .collect()
    }

    pub fn alexander(grid: usize, p: &LaurentPolynomial) -> Record {
        Record::Alexander {
            grid,
            coefficients: p.terms().collect(),
        }
    }

    pub fn report(grid: usize, r: &KnotReport) -> Record {
        Record::Report {
            grid,
            n: r.n,
            components: r.components,
            total_rank: r.total_rank,
            genus: r.genus,
            is_unknot: r.is_unknot,
            is_fibered: r.is_fibered,
            alexander: r.alexander.terms().collect(),
            poincare: r.poincare.terms().collect(),
        }
    }

    pub fn check(grid: usize, c: &CheckResult) -> Record {
        Record::Check {
            grid,
            name: c.name.clone(),
            checked: c.checked,
            failures: c.failures,
        }
    }

    pub fn grid(grid: usize, g: &GridDiagram) -> Record {
        Record::Grid {
            grid,
            n: g.size(),
            o: g.o_rows().to_vec(),
            x: g.x_rows().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("record line {line}: {message}")]
pub struct RecordParseError {
    pub line: usize,
    pub message: String,
}

/// Parses a record stream, skipping blank lines.
pub fn parse_records(text: &str) -> Result<Vec<Record>, RecordParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| RecordParseError {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}
