//! Output formats for sequences and triangles, and a reader for b-files.

use std::fmt::Display;
use std::io::{self, Write};

use clap::ValueEnum;
use thiserror::Error;
use zigzag_core::Natural;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    /// Space-separated terms, one line per sequence or triangle row.
    #[default]
    Plain,
    /// A JSON array (or array of arrays) of decimal strings.
    Json,
    /// OEIS b-file: "n a(n)" per line, 0-based n.
    Bfile,
}

fn to_strings<T: Display>(terms: &[T]) -> Vec<String> {
    terms.iter().map(ToString::to_string).collect()
}

pub fn write_sequence<T: Display>(
    out: &mut dyn Write,
    terms: &[T],
    format: OutputFormat,
) -> io::Result<()> {
    match format {
        OutputFormat::Plain => writeln!(out, "{}", to_strings(terms).join(" ")),
        OutputFormat::Json => writeln!(out, "{}", serde_json::Value::from(to_strings(terms))),
        OutputFormat::Bfile => write_bfile(out, terms.iter()),
    }
}

/// Rows in storage order. The b-file form numbers the flattened entries.
pub fn write_triangle<'a, R>(out: &mut dyn Write, rows: R, format: OutputFormat) -> io::Result<()>
where
    R: IntoIterator<Item = &'a [Natural]>,
{
    match format {
        OutputFormat::Plain => {
            for row in rows {
                writeln!(out, "{}", to_strings(row).join(" "))?;
            }
            Ok(())
        }
        OutputFormat::Json => {
            let nested: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|row| serde_json::Value::from(to_strings(row)))
                .collect();
            writeln!(out, "{}", serde_json::Value::from(nested))
        }
        OutputFormat::Bfile => write_bfile(out, rows.into_iter().flatten()),
    }
}

fn write_bfile<T: Display>(out: &mut dyn Write, terms: impl Iterator<Item = T>) -> io::Result<()> {
    for (n, term) in terms.enumerate() {
        writeln!(out, "{n} {term}")?;
    }
    Ok(())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BfileError {
    #[error("line {line}: expected \"n a(n)\"")]
    Malformed { line: usize },
    #[error("line {line}: expected index {expected}")]
    OutOfOrder { line: usize, expected: usize },
}

/// Reads a b-file with indices `0, 1, 2, ...`. Blank lines and `#` comments
/// are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<Natural>, BfileError> {
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (index, value) = trimmed
            .split_once(' ')
            .ok_or(BfileError::Malformed { line })?;
        let index: usize = index.parse().map_err(|_| BfileError::Malformed { line })?;
        if index != terms.len() {
            return Err(BfileError::OutOfOrder {
                line,
                expected: terms.len(),
            });
        }
        terms.push(value.parse().map_err(|_| BfileError::Malformed { line })?);
    }
    Ok(terms)
}
