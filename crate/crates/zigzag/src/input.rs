//! Parsers for command-line payloads and standard input.

use std::io::BufRead;

use num_bigint::BigInt;
use thiserror::Error;
use zigzag_core::{Integer, Rational};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: {text:?} is not a decimal integer")]
    NotAnInteger { line: usize, text: String },
    #[error("no integers on input")]
    Empty,
    #[error("{token:?} is not a nonnegative integer")]
    BadPermutationToken { token: String },
    #[error("failed to read input: {0}")]
    Io(#[from] std::io::Error),
}

/// One decimal integer per line; blank lines are ignored.
pub fn read_integer_lines(reader: &mut dyn BufRead) -> Result<Vec<Integer>, InputError> {
    let mut terms = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_text = line?;
        let text = line_text.trim();
        if text.is_empty() {
            continue;
        }
        let value = text
            .parse::<BigInt>()
            .map_err(|_| InputError::NotAnInteger {
                line: i + 1,
                text: text.to_string(),
            })?;
        terms.push(value);
    }
    if terms.is_empty() {
        return Err(InputError::Empty);
    }
    Ok(terms)
}

/// Space-separated nonnegative integers, as in `1 3 2 6 4 5 0`.
pub fn parse_permutation(text: &str) -> Result<Vec<u32>, InputError> {
    text.split_whitespace()
        .map(|token| {
            token
                .parse::<u32>()
                .map_err(|_| InputError::BadPermutationToken {
                    token: token.to_string(),
                })
        })
        .collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{0:?} is not a rational number (expected an integer, p/q or a decimal like 0.25)")]
pub struct RationalError(pub String);

/// Accepts `7`, `-3/4` or `0.125`.
pub fn parse_rational(text: &str) -> Result<Rational, RationalError> {
    let err = || RationalError(text.to_string());
    let trimmed = text.trim();
    if let Some((p, q)) = trimmed.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q == BigInt::from(0) {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = trimmed.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = whole.trim_start_matches(['-', '+']);
        let ok = |s: &str| s.chars().all(|c| c.is_ascii_digit());
        if !ok(digits) || !ok(frac) || (digits.is_empty() && frac.is_empty()) {
            return Err(err());
        }
        let numer: BigInt = format!("{digits}{frac}").parse().map_err(|_| err())?;
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let value = Rational::new(numer, denom);
        return Ok(if negative { -value } else { value });
    }
    trimmed
        .parse::<BigInt>()
        .map(Rational::from_integer)
        .map_err(|_| err())
}
