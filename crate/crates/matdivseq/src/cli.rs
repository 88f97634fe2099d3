//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use matdivseq_core::linalg::jacobian_power_map;
use matdivseq_core::{Column, SequenceContext};

use crate::input::{parse_matrix, MatrixDocument};
use crate::par;
use crate::render::{self, Format, TableRow};

/// Success.
pub const EXIT_OK: i32 = 0;
/// A verification check failed.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Bad input: unreadable file, malformed document, invalid arguments.
pub const EXIT_INPUT: i32 = 2;

/// Determinant divisibility sequences of matrix power maps.
#[derive(Debug, Parser)]
#[command(name = "matdivseq", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the sequence table for n = 1..n-max.
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Attach prime factorizations.
        #[arg(long)]
        factor: bool,
        #[arg(long, value_enum, default_value_t = ColumnArg::Reduced)]
        column: ColumnArg,
    },
    /// Check the closed form against det J_n and the divisibility property.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Restrict divisibility checks to one column (default: both).
        #[arg(long, value_enum)]
        column: Option<ColumnArg>,
    },
    /// Print the characteristic polynomial coefficients.
    Charpoly {
        #[command(flatten)]
        common: Common,
    },
    /// Print the Jacobian J_n of X -> X^n and its determinant.
    Jacobian {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Matrix document (JSON or plain text); `-` reads stdin.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ColumnArg {
    Reduced,
    Jacobian,
}

impl From<ColumnArg> for Column {
    fn from(c: ColumnArg) -> Self {
        match c {
            ColumnArg::Reduced => Column::Reduced,
            ColumnArg::Jacobian => Column::Jacobian,
        }
    }
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_INPUT }
    }
}

fn load(path: &PathBuf) -> Result<MatrixDocument, Outcome> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Outcome::input_error(format_args!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Outcome::input_error(format_args!("{}: {e}", path.display())))
}

/// Sequence table for a parsed document.
pub fn run_table(doc: &MatrixDocument, n_max: u64, format: Format, factor: bool, column: Column) -> Outcome {
    let ctx = SequenceContext::new(doc.matrix.clone());
    let entries = match par::generate(&ctx, n_max, factor.then_some(column)) {
        Ok(e) => e,
        Err(e) => return Outcome::input_error(e),
    };
    let rows: Vec<TableRow<'_>> = entries
        .iter()
        .map(|entry| TableRow { entry, factorization: par::factorization(entry) })
        .collect();
    Outcome::ok(render::table(doc, &rows, column, format, factor))
}

/// Closed-form and divisibility verification.
pub fn run_verify(doc: &MatrixDocument, n_max: u64, format: Format, column: Option<Column>) -> Outcome {
    let ctx = SequenceContext::new(doc.matrix.clone());
    let report = (|| {
        let mut report = ctx.verify_closed_form(n_max)?;
        let entries = par::generate(&ctx, n_max, None)?;
        let columns = match column {
            Some(c) => vec![c],
            None => vec![Column::Jacobian, Column::Reduced],
        };
        for c in columns {
            report.merge(matdivseq_core::sequence::verify_divisibility(&entries, c));
        }
        Ok::<_, matdivseq_core::Error>(report)
    })();
    match report {
        Ok(r) => {
            let code = if r.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            Outcome { stdout: render::report(&r, format), stderr: String::new(), code }
        }
        Err(e) => Outcome::input_error(e),
    }
}

/// Characteristic polynomial.
pub fn run_charpoly(doc: &MatrixDocument, format: Format) -> Outcome {
    Outcome::ok(render::charpoly(&matdivseq_core::poly::char_poly(&doc.matrix), format))
}

/// Jacobian of the power map and its determinant.
pub fn run_jacobian(doc: &MatrixDocument, n: u64, format: Format) -> Outcome {
    match jacobian_power_map(&doc.matrix, n) {
        Ok(j) => {
            let det = j.det();
            Outcome::ok(render::jacobian(&j, n, &det, format))
        }
        Err(e) => Outcome::input_error(e),
    }
}

/// Runs a parsed command line.
pub fn run(cli: Cli) -> Outcome {
    let common = match &cli.command {
        Command::Table { common, .. }
        | Command::Verify { common, .. }
        | Command::Charpoly { common }
        | Command::Jacobian { common, .. } => common,
    };
    let doc = match load(&common.input) {
        Ok(doc) => doc,
        Err(o) => return o,
    };
    let format = common.format;
    match cli.command {
        Command::Table { n_max, factor, column, .. } => run_table(&doc, n_max, format, factor, column.into()),
        Command::Verify { n_max, column, .. } => run_verify(&doc, n_max, format, column.map(Column::from)),
        Command::Charpoly { .. } => run_charpoly(&doc, format),
        Command::Jacobian { n, .. } => run_jacobian(&doc, n, format),
    }
}
