//! Independent oracles shared by the integration tests. Nothing here calls
//! into the code path it is used to check.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `tan x` from Lambert's continued fraction
/// `x / (1 - x^2 / (3 - x^2 / (5 - ...)))` truncated after `depth` levels,
/// evaluated in exact rational arithmetic.
pub fn tan_lambert(x: &BigRational, depth: u32) -> BigRational {
    let x2 = x * x;
    let mut tail = BigRational::from_integer(BigInt::from(2 * depth + 1));
    for k in (0..depth).rev() {
        tail = BigRational::from_integer(BigInt::from(2 * k + 1)) - &x2 / tail;
    }
    x / tail
}

/// Reference `tan x`, accurate far beyond 1e-40 for `|x| <= 3/2`.
pub fn tan_reference(x: &BigRational) -> BigRational {
    tan_lambert(x, 60)
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Visits every permutation of `items` by recursive swapping.
pub fn for_each_permutation(items: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Sign pattern check written out directly: `descending_first` selects
/// `a0 > a1 < a2 > ...`, otherwise `a0 < a1 > a2 < ...`.
pub fn alternates(values: &[u32], descending_first: bool) -> bool {
    values.windows(2).enumerate().all(|(i, w)| {
        let should_descend = (i % 2 == 0) == descending_first;
        if should_descend {
            w[0] > w[1]
        } else {
            w[0] < w[1]
        }
    })
}

/// Number of permutations of `1..=n` with `a1 > a2 < a3 > ...`.
pub fn brute_force_alternating(n: u32) -> u64 {
    let mut items: Vec<u32> = (1..=n).collect();
    let mut count = 0;
    for_each_permutation(&mut items, 0, &mut |p| {
        if alternates(p, true) {
            count += 1;
        }
    });
    count
}

/// Number of permutations of `0..=n+1` starting with 1, ending with 0 and
/// alternating up-down from the start.
pub fn brute_force_anchored(n: u32) -> u64 {
    let mut middle: Vec<u32> = (2..=n + 1).collect();
    let mut count = 0;
    for_each_permutation(&mut middle, 0, &mut |m| {
        let mut word = Vec::with_capacity(m.len() + 2);
        word.push(1);
        word.extend_from_slice(m);
        word.push(0);
        if alternates(&word, false) {
            count += 1;
        }
    });
    count
}

/// Binomial coefficients `C(n, k)` for `n < size`, by Pascal's rule in `BigInt`.
pub fn binomial_table(size: usize) -> Vec<Vec<BigInt>> {
    let mut table: Vec<Vec<BigInt>> = Vec::with_capacity(size);
    for n in 0..size {
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &table[n - 1][k - 1] + &table[n - 1][k];
        }
        table.push(row);
    }
    table
}

/// `sum_k C(n, k) a(k) z(n-k)` for every `n`.
pub fn binomial_convolution(a: &[BigInt], z: &[BigInt]) -> Vec<BigInt> {
    let table = binomial_table(a.len());
    (0..a.len())
        .map(|n| {
            (0..=n).fold(BigInt::zero(), |acc, k| {
                acc + &table[n][k] * &a[k] * &z[n - k]
            })
        })
        .collect()
}

/// Tangent numbers J(1), J(3), ..., J(29) as printed in the source table.
pub const PUBLISHED_TANGENT: [(usize, &str); 15] = [
    (1, "1"),
    (3, "2"),
    (5, "16"),
    (7, "272"),
    (9, "7936"),
    (11, "353792"),
    (13, "22368256"),
    (15, "1903757312"),
    (17, "209865342976"),
    (19, "29088885112832"),
    (21, "4951498053124096"),
    (23, "1015423886506852352"),
    (25, "246921480190207983616"),
    (27, "70251601603943959887872"),
    (29, "23119184187809597841473536"),
];
