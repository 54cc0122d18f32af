//! Factorials, binomial coefficients and rows of Pascal's triangle.
//!
//! Indexing is 0-based: row `n` of Pascal's triangle holds `C(n, 0)..=C(n, n)`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::Natural;

/// `n!` as an exact natural number. `factorial(0) == 1`.
pub fn factorial(n: u32) -> Natural {
    (2..=n).fold(Natural::one(), |acc, k| acc * k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomialRangeError {
    pub n: u32,
    pub r: u32,
}

impl fmt::Display for BinomialRangeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "binomial C({}, {}) requested with r > n", self.n, self.r)
    }
}

/// `C(n, r)`. Out-of-range `r > n` is an error rather than zero.
pub fn binomial(n: u32, r: u32) -> Result<Natural, BinomialRangeError> {
    if r > n {
        return Err(BinomialRangeError { n, r });
    }
    let r = r.min(n - r);
    // Each partial product C(n - r + i, i) is an integer, so the division is exact.
    let mut acc = Natural::one();
    for i in 1..=r {
        acc = acc * (n - r + i) / i;
    }
    Ok(acc)
}

/// One row of Pascal's triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalRow {
    n: u32,
    entries: Vec<Natural>,
}

impl PascalRow {
    pub fn first() -> Self {
        PascalRow {
            n: 0,
            entries: alloc::vec![Natural::one()],
        }
    }

    /// The following row, built with the additive rule.
    pub fn next(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len() + 1);
        entries.push(Natural::one());
        for pair in self.entries.windows(2) {
            entries.push(&pair[0] + &pair[1]);
        }
        entries.push(Natural::one());
        PascalRow {
            n: self.n + 1,
            entries,
        }
    }

    pub fn index(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> &[Natural] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Natural> {
        self.entries
    }

    pub fn sum(&self) -> Natural {
        self.entries.iter().fold(Natural::zero(), |acc, e| acc + e)
    }
}

impl core::ops::Index<usize> for PascalRow {
    type Output = Natural;

    fn index(&self, r: usize) -> &Natural {
        &self.entries[r]
    }
}

/// Row `n` of Pascal's triangle, computed by repeated addition from row 0.
pub fn pascal_row(n: u32) -> PascalRow {
    let mut row = PascalRow::first();
    for _ in 0..n {
        row = row.next();
    }
    row
}

/// Iterator over the rows of Pascal's triangle starting at row 0.
pub fn pascal_rows() -> impl Iterator<Item = PascalRow> {
    core::iter::successors(Some(PascalRow::first()), |row| Some(row.next()))
}
