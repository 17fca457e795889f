//! Command-line front end.
//!
//! Exit status: 0 for YES (or success), 1 for NO, 2 for usage and input
//! errors.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::cop::{cop_order, verify_cop};
use crate::error::{Error, Result};
use crate::graph::parse_graph;
use crate::interval::interval_deletion;
use crate::matrix::{delete_rows, parse_matrix};
use crate::oracle;
use crate::solver::{convex_bipartite_deletion, cos_r, parse_bipartite, parse_report};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cosr",
    version,
    about = "Row deletion to the consecutive ones property"
)]
pub struct Cli {
    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Budgeted {
    /// Input file, or '-' for standard input.
    pub input: String,
    /// Deletion budget.
    #[arg(long = "d", short = 'd')]
    pub d: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test a matrix for the consecutive ones property.
    CheckCop { input: String },
    /// Delete at most d rows to reach the consecutive ones property.
    Solve {
        #[command(flatten)]
        args: Budgeted,
        /// Append '# key: value' statistics lines.
        #[arg(long)]
        stats: bool,
    },
    /// Delete at most d vertices of a graph to reach an interval graph.
    IntervalDeletion {
        #[command(flatten)]
        args: Budgeted,
    },
    /// Delete at most d row-side vertices to reach a convex bipartite graph.
    ConvexBipartite {
        #[command(flatten)]
        args: Budgeted,
        #[arg(long)]
        stats: bool,
    },
    /// Re-check a solve report against its matrix.
    Verify { matrix: String, report: String },
    /// Brute-force counterparts of the solvers.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Write a seeded random matrix.
    Gen {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        density: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    CheckCop {
        input: String,
    },
    Solve {
        #[command(flatten)]
        args: Budgeted,
    },
    IntervalDeletion {
        #[command(flatten)]
        args: Budgeted,
    },
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit status. `stdin` backs the '-' input path.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_YES,
                _ => EXIT_ERROR,
            };
            let target: &mut dyn Write = if status == EXIT_YES { stdout } else { stderr };
            let _ = write!(target, "{}", e.render());
            return status;
        }
    };
    let mut input = Input { stdin, used: false };
    match execute(&cli.command, &mut input) {
        Ok((status, text)) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &text),
                None => stdout.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => status,
                Err(e) => {
                    let _ = writeln!(stderr, "error: cannot write output: {e}");
                    EXIT_ERROR
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Input<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        if path == "-" {
            if self.used {
                return Err(Error::Domain("standard input can be read only once".into()));
            }
            self.used = true;
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| Error::Domain(format!("cannot read standard input: {e}")))?;
            Ok(text)
        } else {
            fs::read_to_string(path).map_err(|e| Error::Domain(format!("cannot read {path}: {e}")))
        }
    }
}

fn verdict(yes: bool) -> i32 {
    if yes {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn execute(command: &Command, input: &mut Input<'_>) -> Result<(i32, String)> {
    match command {
        Command::CheckCop { input: path } => {
            let m = parse_matrix(&input.read(path)?)?;
            Ok(match cop_order(&m) {
                Some(order) => (EXIT_YES, format!("YES\n{order}\n")),
                None => (EXIT_NO, "NO\n".into()),
            })
        }
        Command::Solve { args, stats } => {
            let m = parse_matrix(&input.read(&args.input)?)?;
            let report = cos_r(&m, args.d.into())?;
            let mut text = report.to_text();
            if *stats {
                text.push_str(&report.stats_text());
            }
            Ok((verdict(report.is_yes()), text))
        }
        Command::IntervalDeletion { args } => {
            let g = parse_graph(&input.read(&args.input)?)?;
            Ok(match interval_deletion(&g, args.d.into()) {
                Some(v) => (EXIT_YES, format!("YES\n{v}\n")),
                None => (EXIT_NO, "NO\n".into()),
            })
        }
        Command::ConvexBipartite { args, stats } => {
            let b = parse_bipartite(&input.read(&args.input)?)?;
            let report = convex_bipartite_deletion(&b, args.d.into())?;
            let mut text = report.to_text();
            if *stats {
                text.push_str(&report.stats_text());
            }
            Ok((verdict(report.is_yes()), text))
        }
        Command::Verify { matrix, report } => {
            let m = parse_matrix(&input.read(matrix)?)?;
            let parsed = parse_report(&input.read(report)?, m.col_count())?;
            let Some((rows, order)) = parsed else {
                return Ok((EXIT_NO, "NO report: nothing to verify\n".into()));
            };
            let rest = delete_rows(&m, &rows)?;
            Ok(if verify_cop(&rest, &order)? {
                (EXIT_YES, "OK\n".into())
            } else {
                (EXIT_NO, "FAIL\n".into())
            })
        }
        Command::Oracle(cmd) => execute_oracle(cmd, input),
        Command::Gen {
            rows,
            cols,
            density,
            seed,
        } => {
            let m = oracle::random_instance(*seed, *rows, *cols, *density)?;
            Ok((EXIT_YES, m.to_text()))
        }
    }
}

fn execute_oracle(command: &OracleCommand, input: &mut Input<'_>) -> Result<(i32, String)> {
    match command {
        OracleCommand::CheckCop { input: path } => {
            let m = parse_matrix(&input.read(path)?)?;
            Ok(match oracle::brute_cop(&m)? {
                Some(order) => (EXIT_YES, format!("YES\n{order}\n")),
                None => (EXIT_NO, "NO\n".into()),
            })
        }
        OracleCommand::Solve { args } => {
            let m = parse_matrix(&input.read(&args.input)?)?;
            Ok(match oracle::brute_cosr(&m, args.d.into())? {
                Some(rows) => {
                    let rest = delete_rows(&m, &rows)?;
                    let order = oracle::brute_cop(&rest)?.ok_or_else(|| {
                        Error::Contract("oracle solution does not yield COP".into())
                    })?;
                    (EXIT_YES, format!("YES\n{rows}\n{order}\n"))
                }
                None => (EXIT_NO, "NO\n".into()),
            })
        }
        OracleCommand::IntervalDeletion { args } => {
            let g = parse_graph(&input.read(&args.input)?)?;
            Ok(match oracle::brute_interval_deletion(&g, args.d.into())? {
                Some(v) => (EXIT_YES, format!("YES\n{v}\n")),
                None => (EXIT_NO, "NO\n".into()),
            })
        }
    }
}
