//! Exact tangent, secant and zigzag numbers together with the combinatorial
//! objects they count.
//!
//! The tangent numbers `t(n)` (the Taylor coefficients of `tan x` in the form
//! `sum t(n) x^n / n!`) are computed three independent ways:
//!
//! - the binomial convolution recurrence `t(n+1) = sum C(n, m) t(m) t(n-m)`
//!   ([`sequences::tangent_numbers`], [`taylor::solve_tan_ode`]),
//! - the derivative polynomials `d^n/dx^n tan x = Q_n(tan x)`
//!   ([`sequences::tangent_numbers_via_derivatives`]),
//! - the left edge of the boustrophedon (Entringer) triangle
//!   ([`boustrophedon::tangent_edge`]).
//!
//! They count Joyce trees ([`joyce`]), binary trees whose nodes occupy
//! pairwise distinct, contiguous levels, and equivalently tremolo
//! (alternating) permutations of `0..=n+1` that start with `1` and end with
//! `0` ([`tremolo`]). Both directions of the tree/permutation bijection are
//! provided.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod boustrophedon;
pub mod combinatorics;
pub mod joyce;
pub mod sequences;
pub mod taylor;
pub mod tremolo;

/// Arbitrary-precision nonnegative integer.
pub type Natural = num_bigint::BigUint;
/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
/// Exact rational over [`Integer`].
pub type Rational = num_rational::BigRational;

pub use boustrophedon::{boustrophedon_transform, build_triangle, Triangle};
pub use combinatorics::{binomial, factorial, pascal_row, PascalRow};
pub use joyce::{JoyceTree, Node};
pub use sequences::{
    secant_numbers, tangent_numbers, tangent_numbers_via_derivatives, zigzag_numbers,
    SecantSequence, TangentSequence, ZigzagSequence,
};
pub use taylor::{EgfSeries, TaylorPolynomial};
pub use tremolo::AnchoredTremolo;
