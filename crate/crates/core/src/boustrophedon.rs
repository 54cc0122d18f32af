//! The boustrophedon (Entringer) triangle and the boustrophedon transform.
//!
//! Rows and entries are 1-based: `B(n, m)` with `1 <= m <= n`. Row 1 is
//! `[1]`. Even rows are filled right to left from `B(2k, 2k) = 0` using
//! `B(2k, m) = B(2k, m+1) + B(2k-1, m)`; odd rows are filled left to right
//! from `B(2k+1, 1) = 0` using `B(2k+1, m) = B(2k+1, m-1) + B(2k, m-1)`.
//! Every row is stored left to right regardless of its fill direction.
//!
//! The entry where a row finishes filling (left end of even rows, right end
//! of odd rows) runs through the zigzag numbers: tangent numbers on the left
//! edge, secant numbers on the right.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index};

use num_traits::{One, Zero};

use crate::{Integer, Natural};

/// Builds row `n` (1-based, `n >= 2`) from row `n - 1` starting the fill with `seed`.
fn next_row<T>(prev: &[T], seed: T, n: usize) -> Vec<T>
where
    T: Clone,
    for<'a> &'a T: Add<&'a T, Output = T>,
{
    debug_assert_eq!(prev.len() + 1, n);
    let mut row = Vec::with_capacity(n);
    if n.is_multiple_of(2) {
        // Built reversed (right end first), then flipped into storage order.
        row.push(seed);
        for i in (0..n - 1).rev() {
            let next = row.last().unwrap() + &prev[i];
            row.push(next);
        }
        row.reverse();
    } else {
        row.push(seed);
        for i in 1..n {
            let next = &row[i - 1] + &prev[i - 1];
            row.push(next);
        }
    }
    row
}

fn finishing_entry<T>(row: &[T]) -> &T {
    if row.len().is_multiple_of(2) {
        &row[0]
    } else {
        &row[row.len() - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeError {
    /// 1-based row whose length is not equal to its index.
    pub row: usize,
    pub len: usize,
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {} has {} entries, expected {}",
            self.row, self.len, self.row
        )
    }
}

/// A triangular array where row `n` holds exactly `n` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<Natural>>,
}

impl Triangle {
    pub fn from_rows(rows: Vec<Vec<Natural>>) -> Result<Self, ShapeError> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(ShapeError {
                    row: i + 1,
                    len: row.len(),
                });
            }
        }
        Ok(Triangle { rows })
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Row `n`, 1-based.
    pub fn row(&self, n: usize) -> Option<&[Natural]> {
        n.checked_sub(1)
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Natural]> {
        self.rows.iter().map(Vec::as_slice)
    }

    pub fn into_rows(self) -> Vec<Vec<Natural>> {
        self.rows
    }

    /// `B(n, m)`, 1-based.
    pub fn get(&self, n: usize, m: usize) -> Option<&Natural> {
        self.row(n)?.get(m.checked_sub(1)?)
    }
}

impl Index<(usize, usize)> for Triangle {
    type Output = Natural;

    fn index(&self, (n, m): (usize, usize)) -> &Natural {
        self.get(n, m)
            .unwrap_or_else(|| panic!("B({n}, {m}) is outside the triangle"))
    }
}

/// The standard triangle with `row_count` rows.
pub fn build_triangle(row_count: usize) -> Triangle {
    let mut rows: Vec<Vec<Natural>> = Vec::with_capacity(row_count);
    if row_count >= 1 {
        rows.push(alloc::vec![Natural::one()]);
    }
    for n in 2..=row_count {
        let row = next_row(&rows[n - 2], Natural::zero(), n);
        rows.push(row);
    }
    Triangle { rows }
}

/// `[B(2,1), B(4,1), B(6,1), ...]`, i.e. `t(1), t(3), t(5), ...`.
pub fn tangent_edge(t: &Triangle) -> Vec<Natural> {
    t.rows
        .iter()
        .skip(1)
        .step_by(2)
        .map(|r| r[0].clone())
        .collect()
}

/// `[B(1,1), B(3,3), B(5,5), ...]`, i.e. `s(0), s(2), s(4), ...`.
pub fn secant_edge(t: &Triangle) -> Vec<Natural> {
    t.rows
        .iter()
        .step_by(2)
        .map(|r| r[r.len() - 1].clone())
        .collect()
}

/// The finishing entry of every row: `Z(0), Z(1), ..., Z(rows - 1)`.
pub fn finishing_edge(t: &Triangle) -> Vec<Natural> {
    t.rows.iter().map(|r| finishing_entry(r).clone()).collect()
}

/// Positions `(n, m)` where the summation identities fail.
///
/// For even `n`, `B(n, m)` must equal the sum of `B(n-1, j)` for `j >= m`;
/// for odd `n >= 3`, the sum of `B(n-1, j)` for `j < m`.
pub fn verify_summation_identities(t: &Triangle) -> Vec<(usize, usize)> {
    let mut violations = Vec::new();
    for n in 2..=t.row_count() {
        let above = &t.rows[n - 2];
        let row = &t.rows[n - 1];
        // prefix[j] = B(n-1, 1) + ... + B(n-1, j)
        let mut prefix = Vec::with_capacity(above.len() + 1);
        prefix.push(Natural::zero());
        for e in above {
            let next = prefix.last().unwrap() + e;
            prefix.push(next);
        }
        let total = &prefix[above.len()];
        for m in 1..=n {
            let expected = if n % 2 == 0 {
                if m <= above.len() {
                    total - &prefix[m - 1]
                } else {
                    Natural::zero()
                }
            } else {
                prefix[m - 1].clone()
            };
            if row[m - 1] != expected {
                violations.push((n, m));
            }
        }
    }
    violations
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmptySequenceError;

impl fmt::Display for EmptySequenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("the boustrophedon transform needs at least one term")
    }
}

/// The boustrophedon transform of `a`.
///
/// Row `n` of a triangle is seeded with `a(n-1)` instead of zero and filled
/// by the usual rules; `b(n-1)` is the entry where row `n` finishes. Only two
/// rows are held at a time. With `a = 1, 0, 0, ...` this yields the zigzag
/// numbers; in general `b(n) = sum_k C(n, k) a(k) Z(n-k)`.
pub fn boustrophedon_transform(a: &[Integer]) -> Result<Vec<Integer>, EmptySequenceError> {
    let (first, rest) = a.split_first().ok_or(EmptySequenceError)?;
    let mut out = Vec::with_capacity(a.len());
    let mut row = alloc::vec![first.clone()];
    out.push(first.clone());
    for (i, seed) in rest.iter().enumerate() {
        row = next_row(&row, seed.clone(), i + 2);
        out.push(finishing_entry(&row).clone());
    }
    Ok(out)
}
