//! Command-line front end for `wallgraph`.
//!
//! Every subcommand renders to a string so the binary only has to print it
//! and pick an exit code: 0 on success, 1 when a cross-check fails, 2 on
//! bad input.

pub mod checks;
pub mod report;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use wallgraph::{census_with_jobs, char_poly_with_jobs, eliminate, graph_of, ArrangementSpace, CensusTable};

use crate::report::{CensusReport, ChiReport, GraphDump, RankDump, WallDump};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Engine(wallgraph::Error),
}

impl From<wallgraph::Error> for CliError {
    fn from(e: wallgraph::Error) -> Self {
        CliError::Engine(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "wallgraph", version, about = "Central subarrangements, characteristic polynomials and region counts of J_n")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the walls of J_n in canonical order.
    Walls {
        #[arg(long)]
        n: usize,
    },
    /// Print the 3-colored graph of a subarrangement.
    Graph {
        /// Hex bitset over the canonical wall order.
        #[arg(long)]
        bits: String,
        #[arg(long)]
        n: usize,
    },
    /// Exact ranks and consistency of a subarrangement's matrix.
    Rank {
        #[arg(long)]
        bits: String,
        #[arg(long)]
        n: usize,
    },
    /// Characteristic polynomial, region counts and integer factors.
    Chi {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Central subarrangement counts by (size, rank) and (eps, nu).
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Cross-check chi against F_q point counts.
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma-separated primes; defaults to 5,7,11,13,17,19 (plus 3 when n = 6).
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Recompute the n = 2 and n = 3 results and compare with golden values.
    Reproduce {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
}

/// What the binary prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types always serialize");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Walls { n } => walls(n, format),
        Command::Graph { ref bits, n } => {
            let space = ArrangementSpace::new(n)?;
            let graph = graph_of(&space.from_hex(bits)?)?;
            Ok(Outcome::ok(json(&GraphDump::from(&graph))))
        }
        Command::Rank { ref bits, n } => rank(bits, n, format),
        Command::Chi { n, jobs } => chi(n, jobs as usize, format),
        Command::Census { n, jobs } => census(n, jobs as usize, format),
        Command::Verify { n, ref primes, jobs } => {
            let primes = primes.clone().unwrap_or_else(|| wallgraph::finite_field::default_primes(n));
            let report = checks::verify(n, &primes, jobs as usize)?;
            Ok(render_run(&report, format))
        }
        Command::Reproduce { jobs } => Ok(render_run(&checks::reproduce(jobs as usize)?, format)),
    }
}

fn render_run(report: &checks::RunReport, format: Format) -> Outcome {
    let stdout = match format {
        Format::Text => report.render_text(),
        Format::Json => json(report),
        Format::Csv => report.render_csv(),
    };
    Outcome { stdout, code: report.exit_code() }
}

fn walls(n: usize, format: Format) -> Result<Outcome, CliError> {
    let space = ArrangementSpace::new(n)?;
    let dumps: Vec<WallDump> = space.walls().iter().map(|&w| w.into()).collect();
    let out = match format {
        Format::Json => json(&dumps),
        Format::Text | Format::Csv => {
            let sep = if format == Format::Csv { "," } else { " " };
            let mut out = if format == Format::Csv { String::from("type,a,b\n") } else { String::new() };
            for d in &dumps {
                let _ = writeln!(out, "{}", d.fields().join(sep));
            }
            out
        }
    };
    Ok(Outcome::ok(out))
}

fn rank(bits: &str, n: usize, format: Format) -> Result<Outcome, CliError> {
    let space = ArrangementSpace::new(n)?;
    let sub = space.from_hex(bits)?;
    let dump = RankDump::from(&eliminate(&sub.associated_matrix::<i64>()));
    let witness = dump.witness.as_ref().map(|w| format!("({})", w.join(", "))).unwrap_or_else(|| "none".into());
    let out = match format {
        Format::Json => json(&dump),
        Format::Text => format!(
            "subarrangement = {sub}\nrank_A = {}\nrank_Ab = {}\nconsistent = {}\nwitness = {witness}\n",
            dump.rank_a, dump.rank_ab, dump.consistent
        ),
        Format::Csv => format!(
            "rank_A,rank_Ab,consistent,witness\n{},{},{},{}\n",
            dump.rank_a,
            dump.rank_ab,
            dump.consistent,
            dump.witness.as_ref().map(|w| w.join(" ")).unwrap_or_default()
        ),
    };
    Ok(Outcome::ok(out))
}

fn chi(n: usize, jobs: usize, format: Format) -> Result<Outcome, CliError> {
    let space = ArrangementSpace::new(n)?;
    let chi = char_poly_with_jobs(&space, jobs)?;
    let table = census_with_jobs(&space, jobs)?;
    let report = ChiReport::new(&chi, &table);
    let factors = chi.factor_report();
    let out = match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "n = {n}");
            let _ = writeln!(out, "chi(t) = {chi}");
            let _ = writeln!(out, "coefficients (ascending) = {}", join(&report.chi, " "));
            let _ = writeln!(out, "regions = {}", report.regions);
            let _ = writeln!(out, "bounded = {}", report.bounded);
            let _ = writeln!(out, "factors = {factors}");
            let _ = writeln!(out, "linear factors only = {}", factors.linear_only);
            out
        }
        Format::Csv => {
            let mut out = String::from("field,value\n");
            let _ = writeln!(out, "n,{n}");
            for (k, c) in report.chi.iter().enumerate() {
                let _ = writeln!(out, "c{k},{c}");
            }
            let _ = writeln!(out, "regions,{}", report.regions);
            let _ = writeln!(out, "bounded,{}", report.bounded);
            let _ = writeln!(out, "factors,{factors}");
            let _ = writeln!(out, "linear_factors_only,{}", factors.linear_only);
            out
        }
    };
    Ok(Outcome::ok(out))
}

fn census(n: usize, jobs: usize, format: Format) -> Result<Outcome, CliError> {
    let table = census_with_jobs(&ArrangementSpace::new(n)?, jobs)?;
    let out = match format {
        Format::Json => json(&CensusReport::new(&table)),
        Format::Text => census_text(&table),
        Format::Csv => {
            let mut out = String::from("table,a,b,count\n");
            for ((s, r), c) in table.by_size_rank() {
                let _ = writeln!(out, "size_rank,{s},{r},{c}");
            }
            for ((e, v), c) in table.by_eps_nu() {
                let _ = writeln!(out, "eps_nu,{e},{v},{c}");
            }
            out
        }
    };
    Ok(Outcome::ok(out))
}

/// Rank-by-size grid followed by the `r_{eps,nu}` list.
fn census_text(table: &CensusTable) -> String {
    let by = table.by_size_rank();
    let max_size = by.keys().map(|k| k.0).max().unwrap_or(0);
    let mut out = String::new();
    let _ = writeln!(out, "n = {}, central subarrangements = {}", table.n, table.total());
    let _ = write!(out, "rank\\size");
    for s in 0..=max_size {
        let _ = write!(out, "\t{s}");
    }
    out.push('\n');
    for r in 0..=table.n {
        let _ = write!(out, "{r}");
        for s in 0..=max_size {
            let _ = write!(out, "\t{}", by.get(&(s, r)).copied().unwrap_or(0));
        }
        out.push('\n');
    }
    let _ = writeln!(out, "eps\tnu\tr");
    for ((e, v), c) in table.by_eps_nu() {
        let _ = writeln!(out, "{e}\t{v}\t{c}");
    }
    out
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}
