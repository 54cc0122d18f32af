//! Tangent, secant and zigzag numbers.
//!
//! All sequences are requested by term count: `tangent_numbers(8)` returns
//! `t(0)..=t(7)`. A count of zero yields an empty sequence.

use alloc::vec::Vec;
use core::ops::Index;

use num_traits::{One, Zero};

use crate::boustrophedon;
use crate::combinatorics::PascalRow;
use crate::Natural;

macro_rules! sequence_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Default)]
        pub struct $name(Vec<Natural>);

        impl $name {
            pub fn terms(&self) -> &[Natural] {
                &self.0
            }

            pub fn into_terms(self) -> Vec<Natural> {
                self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn get(&self, n: usize) -> Option<&Natural> {
                self.0.get(n)
            }
        }

        impl Index<usize> for $name {
            type Output = Natural;

            fn index(&self, n: usize) -> &Natural {
                &self.0[n]
            }
        }

        impl From<$name> for Vec<Natural> {
            fn from(seq: $name) -> Vec<Natural> {
                seq.0
            }
        }
    };
}

sequence_type!(
    /// `t(n)`: coefficient of `x^n / n!` in `tan x`, equal to the number of
    /// Joyce trees with `n` nodes.
    TangentSequence
);
sequence_type!(
    /// `s(n)`: coefficient of `x^n / n!` in `sec x`.
    SecantSequence
);
sequence_type!(
    /// `s(n)` at even `n`, `t(n)` at odd `n`: the coefficients of `sec x + tan x`.
    ZigzagSequence
);

impl TangentSequence {
    /// Wraps an arbitrary term list without checking it.
    pub fn from_terms_unchecked(terms: Vec<Natural>) -> Self {
        TangentSequence(terms)
    }

    /// The odd-index terms `t(1), t(3), t(5), ...`.
    pub fn odd_terms(&self) -> impl Iterator<Item = &Natural> {
        self.0.iter().skip(1).step_by(2)
    }
}

/// Tangent numbers by the binomial convolution recurrence.
///
/// `t(0) = 0` and `t(1) = 1` are fixed; for `n >= 1`,
/// `t(n+1) = sum_{m=0}^{n} C(n, m) t(m) t(n-m)`. Even-index factors vanish,
/// so only odd `m` with odd `n - m` contribute, and the symmetric pairs
/// `m`, `n - m` are folded together.
pub fn tangent_numbers(count: usize) -> TangentSequence {
    let mut terms: Vec<Natural> = Vec::with_capacity(count);
    if count >= 1 {
        terms.push(Natural::zero());
    }
    if count >= 2 {
        terms.push(Natural::one());
    }
    let mut row = PascalRow::first();
    for n in 1..count.saturating_sub(1) {
        row = row.next();
        terms.push(convolution_step(n, row.entries(), &terms));
    }
    TangentSequence(terms)
}

fn convolution_step(n: usize, binomials: &[Natural], t: &[Natural]) -> Natural {
    let mut paired = Natural::zero();
    let mut middle = Natural::zero();
    if n.is_multiple_of(2) {
        for m in (1..=n / 2).step_by(2) {
            let term = &binomials[m] * &t[m] * &t[n - m];
            if 2 * m == n {
                middle = term;
            } else {
                paired += term;
            }
        }
    }
    (paired << 1u32) + middle
}

/// `Q_n`, the polynomial with `d^n/dx^n tan x = Q_n(tan x)`.
///
/// `coeffs[k]` is the coefficient of `u^k`. `Q_0(u) = u` and
/// `Q_{n+1}(u) = Q_n'(u) (1 + u^2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativePolynomial {
    order: u32,
    coeffs: Vec<Natural>,
}

impl DerivativePolynomial {
    pub fn identity() -> Self {
        DerivativePolynomial {
            order: 0,
            coeffs: alloc::vec![Natural::zero(), Natural::one()],
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Natural] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    /// `Q_n(0)`, the `n`-th derivative of `tan` at zero.
    pub fn constant_term(&self) -> &Natural {
        &self.coeffs[0]
    }

    pub fn eval(&self, u: &Natural) -> Natural {
        self.coeffs
            .iter()
            .rev()
            .fold(Natural::zero(), |acc, c| acc * u + c)
    }

    /// `Q_{n+1}`: the coefficient of `u^j` is `(j+1) a(j+1) + (j-1) a(j-1)`.
    pub fn next(&self) -> Self {
        let a = &self.coeffs;
        let len = a.len() + 1;
        let coeffs = (0..len)
            .map(|j| {
                let mut c = Natural::zero();
                if let Some(hi) = a.get(j + 1) {
                    c += hi * (j as u64 + 1);
                }
                if j >= 2 {
                    if let Some(lo) = a.get(j - 1) {
                        c += lo * (j as u64 - 1);
                    }
                }
                c
            })
            .collect();
        DerivativePolynomial {
            order: self.order + 1,
            coeffs,
        }
    }
}

pub fn derivative_polynomial(n: u32) -> DerivativePolynomial {
    let mut q = DerivativePolynomial::identity();
    for _ in 0..n {
        q = q.next();
    }
    q
}

/// `Q_0, Q_1, Q_2, ...`
pub fn derivative_polynomials() -> impl Iterator<Item = DerivativePolynomial> {
    core::iter::successors(Some(DerivativePolynomial::identity()), |q| Some(q.next()))
}

/// Tangent numbers as `t(n) = Q_n(0)`.
pub fn tangent_numbers_via_derivatives(count: usize) -> TangentSequence {
    TangentSequence(
        derivative_polynomials()
            .take(count)
            .map(|q| q.coeffs[0].clone())
            .collect(),
    )
}

/// Secant numbers read off the right edge of the boustrophedon triangle.
pub fn secant_numbers(count: usize) -> SecantSequence {
    if count == 0 {
        return SecantSequence::default();
    }
    let triangle = boustrophedon::build_triangle(count);
    let edge = boustrophedon::secant_edge(&triangle);
    let terms = (0..count)
        .map(|n| {
            if n % 2 == 0 {
                edge[n / 2].clone()
            } else {
                Natural::zero()
            }
        })
        .collect();
    SecantSequence(terms)
}

/// Secant numbers at even indices interleaved with tangent numbers at odd ones.
pub fn zigzag_numbers(count: usize) -> ZigzagSequence {
    let secant = secant_numbers(count);
    let tangent = tangent_numbers(count);
    ZigzagSequence(
        secant
            .into_terms()
            .into_iter()
            .zip(tangent.into_terms())
            .enumerate()
            .map(|(n, (s, t))| if n % 2 == 0 { s } else { t })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    fn nats(values: &[u64]) -> Vec<Natural> {
        values.iter().copied().map(Natural::from).collect()
    }

    #[test]
    fn first_tangent_numbers() {
        assert_eq!(
            tangent_numbers(8).into_terms(),
            nats(&[0, 1, 0, 2, 0, 16, 0, 272])
        );
        let t = tangent_numbers(30);
        assert_eq!(t[2], Natural::zero());
        assert_eq!(t[9], Natural::from(7936u32));
        assert_eq!(
            t[29],
            "23119184187809597841473536".parse::<Natural>().unwrap()
        );
    }

    #[test]
    fn small_counts() {
        assert!(tangent_numbers(0).is_empty());
        assert_eq!(tangent_numbers(1).into_terms(), nats(&[0]));
        assert_eq!(tangent_numbers(2).into_terms(), nats(&[0, 1]));
        assert_eq!(tangent_numbers_via_derivatives(1).into_terms(), nats(&[0]));
        assert!(secant_numbers(0).is_empty());
        assert_eq!(secant_numbers(1).into_terms(), nats(&[1]));
        assert_eq!(zigzag_numbers(1).into_terms(), nats(&[1]));
    }

    /// Symbolic oracle: a polynomial as a sparse map, differentiated and
    /// multiplied by `1 + u^2` with general-purpose routines.
    fn oracle_next(p: &BTreeMap<usize, u64>) -> BTreeMap<usize, u64> {
        let derivative: BTreeMap<usize, u64> = p
            .iter()
            .filter(|(&k, _)| k > 0)
            .map(|(&k, &c)| (k - 1, c * k as u64))
            .collect();
        let factor: BTreeMap<usize, u64> = [(0, 1), (2, 1)].into_iter().collect();
        let mut product = BTreeMap::new();
        for (&i, &a) in &derivative {
            for (&j, &b) in &factor {
                *product.entry(i + j).or_insert(0) += a * b;
            }
        }
        product.retain(|_, c| *c != 0);
        product
    }

    #[test]
    fn derivative_polynomials_match_symbolic_oracle() {
        assert_eq!(derivative_polynomial(0).coeffs(), nats(&[0, 1]).as_slice());
        assert_eq!(
            derivative_polynomial(1).coeffs(),
            nats(&[1, 0, 1]).as_slice()
        );
        assert_eq!(
            derivative_polynomial(3).coeffs(),
            nats(&[2, 0, 8, 0, 6]).as_slice()
        );

        let mut oracle: BTreeMap<usize, u64> = [(1, 1)].into_iter().collect();
        for q in derivative_polynomials().take(12) {
            let dense: Vec<Natural> = (0..q.coeffs().len())
                .map(|k| Natural::from(*oracle.get(&k).unwrap_or(&0)))
                .collect();
            assert_eq!(q.coeffs(), dense.as_slice(), "Q_{}", q.order());
            oracle = oracle_next(&oracle);
        }
    }

    #[test]
    fn derivative_polynomial_shape() {
        for q in derivative_polynomials().take(33) {
            let n = q.order() as usize;
            assert_eq!(q.degree(), n + 1);
            for (k, c) in q.coeffs().iter().enumerate() {
                if k % 2 != (n + 1) % 2 {
                    assert!(c.is_zero(), "Q_{n} has nonzero u^{k}");
                }
            }
        }
    }

    #[test]
    fn derivative_values_at_zero() {
        let t = tangent_numbers_via_derivatives(8);
        assert_eq!(t.into_terms(), nats(&[0, 1, 0, 2, 0, 16, 0, 272]));
    }

    #[test]
    fn recurrence_matches_derivatives() {
        assert_eq!(tangent_numbers(65), tangent_numbers_via_derivatives(65));
    }

    #[test]
    fn secant_and_zigzag() {
        assert_eq!(secant_numbers(5).into_terms(), nats(&[1, 0, 1, 0, 5]));
        let s = secant_numbers(9);
        assert_eq!(s[6], Natural::from(61u32));
        assert_eq!(s[8], Natural::from(1385u32));
        let z = zigzag_numbers(8);
        assert_eq!(z.terms()[..7], nats(&[1, 1, 1, 2, 5, 16, 61])[..]);
        assert_eq!(z[7], Natural::from(272u32));
        assert_eq!(z[0], Natural::one());
    }

    #[test]
    fn parity_and_growth() {
        let t = tangent_numbers(120);
        let s = secant_numbers(120);
        for n in 0..120 {
            if n % 2 == 0 {
                assert!(t[n].is_zero());
            } else {
                assert!(s[n].is_zero());
            }
        }
        let odd: Vec<&Natural> = t.odd_terms().collect();
        for w in odd.windows(2).skip(1) {
            assert!(w[0] < w[1]);
        }
        assert!(zigzag_numbers(120).terms().iter().all(|z| !z.is_zero()));
    }
}
