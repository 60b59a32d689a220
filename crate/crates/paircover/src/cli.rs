//! Command-line front end. The binary is a thin wrapper around
//! [`run`], which returns the process exit code:
//!
//! - 0: success
//! - 1: bad arguments or unreadable input
//! - 2: no construction applies to the requested shape
//! - 3: verification failure
//! - 4: exact search hit its limit without a proof

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::cover::{verify, Assignment};
use crate::error::Error;
use crate::{bounds, constructions, designs, format, oracle, specialty};

#[derive(Parser)]
#[command(
    name = "paircover",
    about = "Referee panels that cover every pair of proposals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Full,
    Half,
    Thirds,
    Quarters,
    General,
    Greedy,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum AssignFormat {
    Json,
    Csv,
    Table,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bounds on the number of referees for an instance
    Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Construct an assignment covering all pairs
    Assign {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = AssignFormat::Json)]
        format: AssignFormat,
    },
    /// Verify an assignment document
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Exact minimum referee count by branch and bound
    Oracle {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Largest panel size the search may consider
        #[arg(long, default_value_t = 64)]
        limit: u32,
        /// Stop after this many search nodes
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Stop after this many milliseconds
        #[arg(long)]
        timeout_ms: Option<u64>,
    },
    /// Dump an orthogonal tuple system
    Systems {
        #[arg(long)]
        arity: u32,
    },
    /// The capacity-class reference table
    Table1 {
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// The panel-size table: upper(lower) referee counts
    Table12 {
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Bound curves for all capacities at a fixed n, as CSV
    Curve {
        #[arg(long)]
        n: u32,
    },
    /// Specialty-constrained assignment plus its profile
    Specialty {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
        /// Two areas of n/2 proposals instead of n/k areas of k
        #[arg(long)]
        two_areas: bool,
    },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::UnsupportedShape(_) => 2,
        _ => 1,
    }
}

/// Parses `argv` and runs one command, returning the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

fn build_assignment(n: u32, k: u32, method: MethodArg) -> Result<Assignment, Error> {
    let shape_error = |need: &str| {
        Error::UnsupportedShape(format!("method needs {need}, got n = {n}, k = {k}"))
    };
    let mut assignment = match method {
        MethodArg::Auto => constructions::assign_auto(n, k)?,
        MethodArg::Full => {
            if k < n {
                return Err(shape_error("k >= n"));
            }
            constructions::assign_full(n)?
        }
        MethodArg::Half => {
            if n.is_multiple_of(2) && k == n / 2 {
                constructions::assign_half_even(n)?
            } else if n % 2 == 1 && (k == n / 2 || k == n / 2 + 1) {
                constructions::assign_half_odd(n)?
            } else {
                return Err(shape_error("k = n/2"));
            }
        }
        MethodArg::Thirds => {
            if n != 3 * k {
                return Err(shape_error("n = 3k"));
            }
            constructions::assign_thirds(n)?
        }
        MethodArg::Quarters => {
            if n != 4 * k {
                return Err(shape_error("n = 4k"));
            }
            constructions::assign_quarters(n)?
        }
        MethodArg::General => constructions::assign_general(n, k)?,
        MethodArg::Greedy => constructions::assign_greedy(n, k)?,
    };
    assignment.instance.k = k;
    Ok(assignment)
}

fn dispatch(command: Command) -> Result<i32, Error> {
    match command {
        Command::Bounds { n, k, format } => {
            let report = bounds::lower_bound_strengthened(n, k)?;
            match format {
                TextFormat::Text => print!("{}", format::bounds_text(&report)),
                TextFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&report)?)
                }
            }
            Ok(0)
        }
        Command::Assign {
            n,
            k,
            method,
            format,
        } => {
            let assignment = build_assignment(n, k, method)?;
            let report = verify(&assignment)?;
            if !report.is_complete() {
                eprintln!(
                    "self-check failed: {} of {} pairs uncovered",
                    report.uncovered.len(),
                    report.total_pairs
                );
                return Ok(3);
            }
            match format {
                AssignFormat::Json => print!("{}", format::assignment_json(&assignment)),
                AssignFormat::Csv => print!("{}", format::assignment_csv(&assignment)),
                AssignFormat::Table => print!("{}", format::render_grid(&assignment)),
            }
            Ok(0)
        }
        Command::Verify { file, format } => {
            let text = std::fs::read_to_string(&file)?;
            let assignment: Assignment = serde_json::from_str(&text)?;
            let report = verify(&assignment)?;
            match format {
                TextFormat::Text => print!("{}", format::report_text(&report)),
                TextFormat::Json => print!("{}", format::report_json(&report)),
            }
            Ok(if report.is_complete() { 0 } else { 3 })
        }
        Command::Oracle {
            n,
            k,
            limit,
            max_nodes,
            timeout_ms,
        } => {
            let limits = oracle::SearchLimits {
                max_nodes,
                max_time: timeout_ms.map(std::time::Duration::from_millis),
            };
            let result = oracle::min_cover_with_limits(n, k, limit, limits)?;
            if let Some(witness) = &result.witness {
                print!("{}", format::assignment_json(witness));
            }
            let minimum = result
                .minimum
                .map_or_else(|| "none".to_string(), |m| m.to_string());
            println!("minimum={} exhausted={}", minimum, result.exhausted);
            eprintln!("nodes explored: {}", result.nodes_explored);
            Ok(if result.exhausted { 0 } else { 4 })
        }
        Command::Systems { arity } => {
            let system = match arity {
                3 => designs::triple_system(),
                4 => designs::quadruple_system(),
                other => {
                    return Err(Error::InvalidInstance(format!(
                        "tuple systems exist for arity 3 and 4, got {other}"
                    )))
                }
            };
            println!("{}", serde_json::to_string_pretty(&system)?);
            Ok(0)
        }
        Command::Table1 { format } => {
            let rows = bounds::table1();
            match format {
                TableFormat::Text => print!("{}", format::class_table_text(&rows)),
                TableFormat::Csv => print!("{}", format::class_table_csv(&rows)),
            }
            Ok(0)
        }
        Command::Table12 { format } => {
            let cells = bounds::table12()?;
            match format {
                TableFormat::Text => print!("{}", format::panel_table_text(&cells)),
                TableFormat::Csv => print!("{}", format::panel_table_csv(&cells)),
            }
            Ok(0)
        }
        Command::Curve { n } => {
            let points = bounds::bounds_curve(n)?;
            print!("{}", format::curve_csv(&points));
            Ok(0)
        }
        Command::Specialty { n, k, two_areas } => {
            let (assignment, profile) = if two_areas {
                if let Some(k) = k {
                    if k != n / 2 {
                        return Err(Error::UnsupportedShape(format!(
                            "two-area panels use k = n/2 = {}, got k = {k}",
                            n / 2
                        )));
                    }
                }
                specialty::assign_two_specialties(n)?
            } else {
                let k = k.ok_or_else(|| {
                    Error::InvalidInstance("--k is required without --two-areas".to_string())
                })?;
                specialty::assign_block_specialties(n, k)?
            };
            let report = verify(&assignment)?;
            if !report.is_complete() {
                eprintln!("self-check failed: specialty assignment incomplete");
                return Ok(3);
            }
            let value = serde_json::json!({
                "assignment": assignment,
                "profile": profile,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
            Ok(0)
        }
    }
}
