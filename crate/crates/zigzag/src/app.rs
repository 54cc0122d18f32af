//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 failed verification.

use std::ffi::OsString;
use std::io::{self, BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use zigzag_core::boustrophedon::{boustrophedon_transform, build_triangle};
use zigzag_core::joyce::{self, DEFAULT_ENUMERATION_CAP};
use zigzag_core::sequences::{secant_numbers, tangent_numbers, zigzag_numbers};
use zigzag_core::taylor::{format_decimal, sec_polynomial, tan_polynomial};
use zigzag_core::tremolo::{perm_to_tree, tree_to_perm, AnchoredTremolo};
use zigzag_core::Natural;

use crate::format::{write_sequence, write_triangle, OutputFormat};
use crate::input::{parse_permutation, parse_rational, read_integer_lines};
use crate::verify;

/// Significant digits in the decimal rendering of `taylor --eval`.
const EVAL_DIGITS: usize = 15;

#[derive(Debug, Parser)]
#[command(
    name = "zigzag",
    version,
    about = "Tangent, secant and zigzag numbers, Joyce trees and tremolo permutations"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the first terms of a sequence.
    Seq {
        kind: SequenceKind,
        /// Number of terms, starting at index 0.
        #[arg(short = 'n', long = "count", value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print the boustrophedon triangle, one row per line.
    Triangle {
        #[arg(short = 'n', long = "rows", value_parser = clap::value_parser!(u64).range(1..))]
        rows: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Boustrophedon transform of the integers on standard input (one per line).
    Transform,
    /// Count or list Joyce trees with n nodes.
    Trees {
        action: TreeAction,
        #[arg(short = 'n', value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Largest n accepted by `enumerate`.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Map a Joyce tree to its tremolo permutation or back.
    Bijection {
        direction: Direction,
        /// A tree such as "(0 1 (2 4 3))" or a permutation such as "1 3 2 6 4 5 0".
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        payload: Vec<String>,
    },
    /// Print the Taylor polynomial of tan or sec, or evaluate it.
    Taylor {
        function: Function,
        #[arg(long)]
        order: u64,
        /// Evaluate exactly at this point (integer, p/q or decimal).
        #[arg(long = "eval", allow_hyphen_values = true)]
        eval_at: Option<String>,
    },
    /// Run every cross-method check and report pass/fail per check.
    Verify {
        #[arg(long, default_value_t = verify::MAX_N_CAP)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Terms used by the sequence, triangle and series checks.
        #[arg(long, default_value_t = 100)]
        terms: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SequenceKind {
    Tangent,
    Secant,
    Zigzag,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TreeAction {
    Enumerate,
    Count,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Direction {
    ToPerm,
    ToTree,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Function {
    Tan,
    Sec,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{failed} verification check(s) failed")]
    Verification { failed: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Input(_) => 2,
            CliError::Verification { .. } => 3,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_stdout = !e.use_stderr();
            let sink: &mut dyn Write = if to_stdout { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return if to_stdout { 0 } else { 1 };
        }
    };
    let result = execute(cli.command, stdin, stdout, stderr).and_then(|()| Ok(stdout.flush()?));
    match result {
        Ok(()) => 0,
        Err(e) => {
            if !matches!(e, CliError::Verification { .. }) {
                let _ = writeln!(stderr, "zigzag: {e}");
            }
            e.exit_code()
        }
    }
}

fn execute(
    command: Command,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    match command {
        Command::Seq {
            kind,
            count,
            format,
        } => {
            let count = count as usize;
            let terms: Vec<Natural> = match kind {
                SequenceKind::Tangent => tangent_numbers(count).into(),
                SequenceKind::Secant => secant_numbers(count).into(),
                SequenceKind::Zigzag => zigzag_numbers(count).into(),
            };
            write_sequence(stdout, &terms, format)?;
        }
        Command::Triangle { rows, format } => {
            let triangle = build_triangle(rows as usize);
            write_triangle(stdout, triangle.rows(), format)?;
        }
        Command::Transform => {
            let input = read_integer_lines(stdin).map_err(|e| CliError::Input(e.to_string()))?;
            let output =
                boustrophedon_transform(&input).map_err(|e| CliError::Input(e.to_string()))?;
            for term in output {
                writeln!(stdout, "{term}")?;
            }
        }
        Command::Trees { action, n, cap } => {
            let n = n as usize;
            match action {
                TreeAction::Count => writeln!(stdout, "{}", joyce::count(n))?,
                TreeAction::Enumerate => {
                    let trees =
                        joyce::enumerate(n, cap).map_err(|e| CliError::Usage(e.to_string()))?;
                    for tree in trees {
                        writeln!(stdout, "{tree}")?;
                    }
                }
            }
        }
        Command::Bijection { direction, payload } => {
            let text = payload.join(" ");
            match direction {
                Direction::ToPerm => {
                    let tree = joyce::parse(&text)
                        .map_err(|e| CliError::Input(format!("invalid tree {text:?}: {e}")))?;
                    writeln!(stdout, "{}", tree_to_perm(&tree))?;
                }
                Direction::ToTree => {
                    let invalid = |e: &dyn std::fmt::Display| {
                        CliError::Input(format!("invalid permutation {text:?}: {e}"))
                    };
                    let values = parse_permutation(&text).map_err(|e| invalid(&e))?;
                    let perm = AnchoredTremolo::new(values).map_err(|e| invalid(&e))?;
                    let tree = perm_to_tree(&perm).map_err(|e| invalid(&e))?;
                    writeln!(stdout, "{tree}")?;
                }
            }
        }
        Command::Taylor {
            function,
            order,
            eval_at,
        } => {
            let point = eval_at
                .as_deref()
                .map(parse_rational)
                .transpose()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let order = taylor_order(function, order, stderr)?;
            let polynomial = match function {
                Function::Tan => tan_polynomial(order),
                Function::Sec => sec_polynomial(order),
            };
            match point {
                None => writeln!(stdout, "{polynomial}")?,
                Some(x) => {
                    let value = polynomial.eval_exact(&x);
                    writeln!(stdout, "{value}")?;
                    if !value.is_integer() {
                        writeln!(stdout, "{}", format_decimal(&value, EVAL_DIGITS))?;
                    }
                }
            }
        }
        Command::Verify {
            max_n,
            seed,
            terms,
            inject_fault,
        } => {
            if !(1..=verify::MAX_N_CAP).contains(&max_n) {
                return Err(CliError::Usage(format!(
                    "--max-n must be between 1 and {}",
                    verify::MAX_N_CAP
                )));
            }
            let checks = verify::run(&verify::Config {
                max_n,
                seed,
                terms,
                inject_fault,
            });
            for c in &checks {
                writeln!(stdout, "{c}")?;
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(
                stdout,
                "{} of {} checks passed",
                checks.len() - failed,
                checks.len()
            )?;
            if failed > 0 {
                stdout.flush()?;
                return Err(CliError::Verification { failed });
            }
        }
    }
    Ok(())
}

/// tan has only odd-order terms and sec only even ones; a mismatched order
/// is rounded down with a warning.
fn taylor_order(function: Function, order: u64, stderr: &mut dyn Write) -> Result<usize, CliError> {
    let wanted_parity = match function {
        Function::Tan => 1,
        Function::Sec => 0,
    };
    if order % 2 == wanted_parity {
        return Ok(order as usize);
    }
    if order == 0 {
        return Err(CliError::Usage(
            "the tan polynomial needs an odd order of at least 1".into(),
        ));
    }
    writeln!(
        stderr,
        "zigzag: warning: rounding order {order} down to {}",
        order - 1
    )?;
    Ok(order as usize - 1)
}
