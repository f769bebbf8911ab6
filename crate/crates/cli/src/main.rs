//! `gridfloer`: knot Floer homology of grid diagrams from the command line.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use gridfloer::generators::factorial;
use gridfloer::random::{random_grid_seeded, random_knot_grid_seeded};
use gridfloer::record::{ComplexKind, Record};
use gridfloer::verify::verify_grid;
use gridfloer::{
    alexander_polynomial, apply_move, genus, hfk_hat, homology_ranks, is_fibered, is_unknot,
    knot_report, link_summary, parse_batch, serialize_grid, Error, GridDiagram, GridMove,
};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "gridfloer", version, about = "Knot Floer homology from grid diagrams")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads (0 picks one per core). Output does not depend on it.
    #[arg(long, short = 'j', global = true, default_value_t = 0)]
    jobs: usize,

    /// Refuse grids larger than this for anything that builds the complex.
    #[arg(long, global = true, default_value_t = 10)]
    max_n: usize,

    /// Print per-grid timings to stderr.
    #[arg(long, short, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Args)]
struct Input {
    /// Grid file, possibly holding several grids separated by blank lines;
    /// `-` reads stdin.
    #[arg(required_unless_present = "grid")]
    input: Option<PathBuf>,

    /// Inline grid with `;` for line breaks, e.g. `n=2;O=0,1;X=1,0`.
    #[arg(long, conflicts_with = "input")]
    grid: Option<String>,
}

#[derive(Subcommand)]
enum Verb {
    /// Check the diagram is well formed.
    Validate(Input),
    /// Size, components and crossings.
    Info(Input),
    /// Bigraded ranks of the fully collapsed complex.
    Homology(Input),
    /// Bigraded ranks of the hat group.
    Hfk(Input),
    Unknot(Input),
    Genus(Input),
    /// Rank one in the top Alexander grading (read mod 2).
    Fibered(Input),
    Alexander(Input),
    /// Internal consistency checks on the complex.
    Verify(Input),
    /// Every knot invariant from one homology computation.
    Report(Input),
    /// Apply a move such as `commute_columns:2` or `stabilize:0`.
    Move {
        #[arg(value_name = "MOVE")]
        grid_move: GridMove,
        #[command(flatten)]
        input: Input,
    },
    /// Emit random valid grids.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Only one-component diagrams.
        #[arg(long)]
        knot: bool,
    },
}

impl Verb {
    fn input(&self) -> Option<&Input> {
        match self {
            Verb::Validate(i)
            | Verb::Info(i)
            | Verb::Homology(i)
            | Verb::Hfk(i)
            | Verb::Unknot(i)
            | Verb::Genus(i)
            | Verb::Fibered(i)
            | Verb::Alexander(i)
            | Verb::Verify(i)
            | Verb::Report(i) => Some(i),
            Verb::Move { input, .. } => Some(input),
            Verb::Random { .. } => None,
        }
    }

    fn builds_complex(&self) -> bool {
        !matches!(
            self,
            Verb::Validate(_) | Verb::Info(_) | Verb::Move { .. } | Verb::Random { .. }
        )
    }
}

/// What went wrong with one grid, and how seriously.
struct Failure {
    message: String,
    internal: bool,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            internal: e.is_internal(),
            message: e.to_string(),
        }
    }
}

struct Output {
    text: String,
    records: Vec<Record>,
}

impl Output {
    fn line(text: String, record: Record) -> Self {
        Output {
            text: text + "\n",
            records: vec![record],
        }
    }
}

fn read_input(input: &Input) -> anyhow::Result<String> {
    if let Some(inline) = &input.grid {
        return Ok(inline.replace(';', "\n"));
    }
    let path = input.input.as_ref().expect("clap requires one of the two");
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn ranks_table(ranks: &gridfloer::BigradedRanks) -> String {
    let mut s = String::from("m s rank\n");
    s.push_str(&ranks.to_string());
    let _ = writeln!(s, "total: {}", ranks.total());
    s
}

fn run_one(verb: &Verb, index: usize, grid: &GridDiagram, max_n: usize) -> Result<Output, Failure> {
    let n = grid.size();
    if verb.builds_complex() && n > max_n {
        return Err(Failure {
            message: format!(
                "grid size {n} exceeds --max-n {max_n}: the complex has {n}! = {} generators and the cost grows factorially; pass --max-n {n} to proceed",
                factorial(n)
            ),
            internal: false,
        });
    }
    let out = match verb {
        Verb::Validate(_) => Output::line(format!("valid: n={n}"), Record::Valid { grid: index, n }),
        Verb::Info(_) => {
            let s = link_summary(grid);
            let cols: Vec<String> = s.component_of_column.iter().map(usize::to_string).collect();
            Output {
                text: format!(
                    "size: {n}\ncomponents: {}\ncrossings: {}\ncomponent_of_column: {}\n",
                    s.component_count,
                    s.crossing_count,
                    cols.join(",")
                ),
                records: vec![Record::info(index, n, &s)],
            }
        }
        Verb::Homology(_) => {
            let r = homology_ranks(grid);
            Output {
                text: ranks_table(&r),
                records: Record::ranks(index, ComplexKind::Tilde, &r),
            }
        }
        Verb::Hfk(_) => {
            let r = hfk_hat(grid)?;
            Output {
                text: format!("{}poincare: {}\n", ranks_table(&r), r.poincare()),
                records: Record::ranks(index, ComplexKind::Hat, &r),
            }
        }
        Verb::Unknot(_) => {
            let value = is_unknot(grid)?;
            Output::line(format!("unknot: {value}"), Record::Unknot { grid: index, value })
        }
        Verb::Genus(_) => {
            let value = genus(grid)?;
            Output::line(format!("genus: {value}"), Record::Genus { grid: index, value })
        }
        Verb::Fibered(_) => {
            let value = is_fibered(grid)?;
            Output::line(format!("fibered: {value}"), Record::Fibered { grid: index, value })
        }
        Verb::Alexander(_) => {
            let p = alexander_polynomial(grid)?;
            Output::line(format!("alexander: {p}"), Record::alexander(index, &p))
        }
        Verb::Verify(_) => {
            let report = verify_grid(grid);
            if let Some(bad) = report.checks.iter().find(|c| !c.passed()) {
                return Err(Failure {
                    message: bad.to_string(),
                    internal: true,
                });
            }
            Output {
                text: report.checks.iter().map(|c| format!("{c}\n")).collect(),
                records: report.checks.iter().map(|c| Record::check(index, c)).collect(),
            }
        }
        Verb::Report(_) => {
            let r = knot_report(grid)?;
            Output {
                text: format!(
                    "size: {}\ncomponents: {}\ntotal_rank: {}\ngenus: {}\nunknot: {}\nfibered: {}\nalexander: {}\npoincare: {}\n",
                    r.n, r.components, r.total_rank, r.genus, r.is_unknot, r.is_fibered, r.alexander, r.poincare
                ),
                records: vec![Record::report(index, &r)],
            }
        }
        Verb::Move { grid_move, .. } => {
            let g = apply_move(grid, *grid_move)?;
            Output {
                text: serialize_grid(&g),
                records: vec![Record::grid(index, &g)],
            }
        }
        Verb::Random { .. } => unreachable!("random has no input"),
    };
    Ok(out)
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();

    if let Verb::Random { n, seed, count, knot } = cli.verb {
        if n < 2 {
            eprintln!("error: {}", Error::TooSmall(n));
            return Ok(ExitCode::from(1));
        }
        for i in 0..count {
            let s = seed.wrapping_add(i as u64);
            let g = if knot {
                random_knot_grid_seeded(s, n)
            } else {
                random_grid_seeded(s, n)
            };
            match cli.format {
                Format::Text => {
                    if i > 0 {
                        writeln!(out)?;
                    }
                    write!(out, "{}", serialize_grid(&g))?;
                }
                Format::Records => writeln!(out, "{}", Record::grid(i, &g).to_line())?,
            }
        }
        return Ok(ExitCode::SUCCESS);
    }

    let input = cli.verb.input().expect("every other verb reads grids");
    let text = match read_input(input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e:#}");
            return Ok(ExitCode::from(1));
        }
    };
    let parsed = parse_batch(&text);
    if parsed.is_empty() {
        eprintln!("error: no grid found in input");
        return Ok(ExitCode::from(1));
    }

    let results: Vec<(Result<Output, Failure>, f64)> = parsed
        .into_par_iter()
        .enumerate()
        .map(|(i, g)| {
            let start = Instant::now();
            let r = g
                .map_err(Failure::from)
                .and_then(|g| run_one(&cli.verb, i, &g, cli.max_n));
            (r, start.elapsed().as_secs_f64())
        })
        .collect();

    let batch = results.len() > 1;
    let mut status = 0u8;
    for (i, (result, secs)) in results.into_iter().enumerate() {
        if cli.verbose > 0 {
            eprintln!("grid {i}: {secs:.3}s");
        }
        if batch && cli.format == Format::Text {
            if i > 0 {
                writeln!(out)?;
            }
            writeln!(out, "[grid {i}]")?;
        }
        match result {
            Ok(o) => match cli.format {
                Format::Text => write!(out, "{}", o.text)?,
                Format::Records => {
                    for r in o.records {
                        writeln!(out, "{}", r.to_line())?;
                    }
                }
            },
            Err(f) => {
                status = status.max(if f.internal { 2 } else { 1 });
                if batch {
                    eprintln!("error: grid {i}: {}", f.message);
                } else {
                    eprintln!("error: {}", f.message);
                }
                if cli.format == Format::Records {
                    let r = Record::Error {
                        grid: i,
                        message: f.message,
                    };
                    writeln!(out, "{}", r.to_line())?;
                }
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::from(status))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
