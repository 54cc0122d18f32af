//! Exponential generating function arithmetic and exact Taylor polynomials.
//!
//! An [`EgfSeries`] stores integers `c(0)..=c(N)` standing for the truncated
//! series `sum c(n) x^n / n!`. Products are binomial convolutions, and the
//! derivative is a shift, so the whole argument that `tan` solves
//! `y' = 1 + y^2` stays in integer arithmetic. Rationals only appear when a
//! series is turned into a [`TaylorPolynomial`].

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{factorial, pascal_rows};
use crate::sequences::{secant_numbers, tangent_numbers};
use crate::{Integer, Natural, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesError {
    /// A series needs at least one coefficient.
    Empty,
    /// The derivative of an order-0 series has no coefficients left.
    ZeroOrder,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::Empty => f.write_str("a series needs at least one coefficient"),
            SeriesError::ZeroOrder => f.write_str("cannot differentiate a series of order 0"),
        }
    }
}

/// Truncated `sum c(n) x^n / n!` through order `N = coeffs.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<Integer>,
}

impl EgfSeries {
    pub fn new(coeffs: Vec<Integer>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(EgfSeries { coeffs })
    }

    pub fn from_naturals(terms: &[Natural]) -> Result<Self, SeriesError> {
        Self::new(terms.iter().cloned().map(Integer::from).collect())
    }

    pub fn from_i64s(terms: &[i64]) -> Result<Self, SeriesError> {
        Self::new(terms.iter().copied().map(Integer::from).collect())
    }

    /// `1 + 0 x + ...` through `order`.
    pub fn unit(order: usize) -> Self {
        let mut coeffs = alloc::vec![Integer::zero(); order + 1];
        coeffs[0] = Integer::one();
        EgfSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        EgfSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl Add for &EgfSeries {
    type Output = EgfSeries;

    fn add(self, rhs: &EgfSeries) -> EgfSeries {
        EgfSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &EgfSeries {
    type Output = EgfSeries;

    fn sub(self, rhs: &EgfSeries) -> EgfSeries {
        EgfSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// `d/dx`: `c'(n) = c(n+1)`, one order lower.
pub fn series_derivative(a: &EgfSeries) -> Result<EgfSeries, SeriesError> {
    if a.order() == 0 {
        return Err(SeriesError::ZeroOrder);
    }
    Ok(EgfSeries {
        coeffs: a.coeffs[1..].to_vec(),
    })
}

/// Product truncated at the smaller order: `c(n) = sum_m C(n, m) a(m) b(n-m)`.
pub fn series_product(a: &EgfSeries, b: &EgfSeries) -> EgfSeries {
    let order = a.order().min(b.order());
    let coeffs = pascal_rows()
        .take(order + 1)
        .enumerate()
        .map(|(n, row)| {
            row.entries()
                .iter()
                .enumerate()
                .filter(|(m, _)| !a.coeffs[*m].is_zero() && !b.coeffs[n - m].is_zero())
                .fold(Integer::zero(), |acc, (m, c)| {
                    acc + Integer::from(c.clone()) * &a.coeffs[m] * &b.coeffs[n - m]
                })
        })
        .collect();
    EgfSeries { coeffs }
}

/// Solves `y' = 1 + y^2`, `y(0) = 0` coefficient by coefficient through `order`.
///
/// Equating the `x^0` coefficients gives `t(1) = 1 + t(0)^2`; for `n >= 1`,
/// `t(n+1)` is the `x^n` coefficient of `y^2`, which only involves
/// `t(0)..=t(n)`.
pub fn solve_tan_ode(order: usize) -> EgfSeries {
    let mut t: Vec<Integer> = alloc::vec![Integer::zero()];
    for (n, row) in pascal_rows().take(order).enumerate() {
        let mut square = Integer::zero();
        for (m, c) in row.entries().iter().enumerate() {
            if !t[m].is_zero() && !t[n - m].is_zero() {
                square += Integer::from(c.clone()) * &t[m] * &t[n - m];
            }
        }
        if n == 0 {
            square += Integer::one();
        }
        t.push(square);
    }
    EgfSeries { coeffs: t }
}

/// A polynomial with exact rational coefficients `r(0)..=r(N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaylorPolynomial {
    terms: Vec<Rational>,
}

/// A point to evaluate at, or the value obtained.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Float(f64),
}

impl TaylorPolynomial {
    pub fn new(terms: Vec<Rational>) -> Self {
        TaylorPolynomial { terms }
    }

    /// `r(n) = c(n) / n!`.
    pub fn from_egf(series: &EgfSeries) -> Self {
        let mut n_factorial = Integer::one();
        let terms = series
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    n_factorial *= n;
                }
                Rational::new(c.clone(), n_factorial.clone())
            })
            .collect();
        TaylorPolynomial { terms }
    }

    /// The integers `r(n) n!`, or `None` if some product is not integral.
    pub fn to_egf(&self) -> Option<EgfSeries> {
        let coeffs = self
            .terms
            .iter()
            .enumerate()
            .map(|(n, r)| {
                let scaled = r * Rational::from_integer(factorial(n as u32).into());
                scaled.is_integer().then(|| scaled.to_integer())
            })
            .collect::<Option<Vec<_>>>()?;
        EgfSeries::new(coeffs).ok()
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn order(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// Horner's rule in exact arithmetic.
    pub fn eval_exact(&self, x: &Rational) -> Rational {
        self.terms
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, r| acc * x + r)
    }

    /// Horner's rule in `f64`. Each coefficient is first rounded to the
    /// nearest double, then every multiply and add rounds again, so the
    /// result can differ from the correctly rounded exact value by a few ulps.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .rev()
            .fold(0.0, |acc, r| acc * x + r.to_f64().unwrap_or(f64::NAN))
    }

    pub fn evaluate(&self, x: &Scalar) -> Scalar {
        match x {
            Scalar::Exact(x) => Scalar::Exact(self.eval_exact(x)),
            Scalar::Float(x) => Scalar::Float(self.eval_f64(*x)),
        }
    }
}

/// Terms print as `c/d x^n`, zero terms are dropped and a unit coefficient
/// is left implicit: `x + 1/3 x^3 + 2/15 x^5`.
impl fmt::Display for TaylorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, r) in self.terms.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = r.abs().is_one();
            match (n, unit) {
                (0, _) => write!(f, "{r}")?,
                (_, true) if r.is_negative() => f.write_str("-")?,
                (_, true) => {}
                (_, false) => write!(f, "{r} ")?,
            }
            match n {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Taylor polynomial of `tan x` through `order`: `r(n) = t(n) / n!`.
pub fn tan_polynomial(order: usize) -> TaylorPolynomial {
    let t = tangent_numbers(order + 1);
    TaylorPolynomial::from_egf(&EgfSeries::from_naturals(t.terms()).expect("nonempty"))
}

/// Taylor polynomial of `sec x` through `order`: `r(n) = s(n) / n!`.
pub fn sec_polynomial(order: usize) -> TaylorPolynomial {
    let s = secant_numbers(order + 1);
    TaylorPolynomial::from_egf(&EgfSeries::from_naturals(s.terms()).expect("nonempty"))
}

/// Renders `value` with `digits` significant digits, rounding half away
/// from zero, in the style of C's `%.{digits}g`.
pub fn format_decimal(value: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if value.is_zero() {
        return String::from("0");
    }
    let magnitude = value.abs();
    let ten = Integer::from(10u32);
    let pow10 = |e: i64| -> Rational {
        let p = num_traits::pow(ten.clone(), e.unsigned_abs() as usize);
        if e >= 0 {
            Rational::from_integer(p)
        } else {
            Rational::new(Integer::one(), p)
        }
    };
    // Decimal exponent: 10^e <= |value| < 10^(e+1).
    let mut e =
        magnitude.numer().to_string().len() as i64 - magnitude.denom().to_string().len() as i64;
    while magnitude < pow10(e) {
        e -= 1;
    }
    while magnitude >= pow10(e + 1) {
        e += 1;
    }
    let scaled = magnitude * pow10(digits as i64 - 1 - e);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let mut mantissa = if r * 2 >= *scaled.denom() { q + 1 } else { q };
    if mantissa == num_traits::pow(ten.clone(), digits) {
        mantissa /= &ten;
        e += 1;
    }
    let text = mantissa.to_string();

    let mut out = String::new();
    if value.is_negative() {
        out.push('-');
    }
    let strip = |s: &str| -> String { String::from(s.trim_end_matches('0')) };
    if e < -4 || e >= digits as i64 {
        out.push_str(&text[..1]);
        let rest = strip(&text[1..]);
        if !rest.is_empty() {
            out.push('.');
            out.push_str(&rest);
        }
        let _ = write!(
            out,
            "e{}{:02}",
            if e < 0 { '-' } else { '+' },
            e.unsigned_abs()
        );
    } else if e >= 0 {
        let split = e as usize + 1;
        out.push_str(&text[..split]);
        let frac = strip(&text[split..]);
        if !frac.is_empty() {
            out.push('.');
            out.push_str(&frac);
        }
    } else {
        out.push_str("0.");
        for _ in 0..(-e - 1) {
            out.push('0');
        }
        out.push_str(&strip(&text));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(values: &[i64]) -> EgfSeries {
        EgfSeries::from_i64s(values).unwrap()
    }

    fn ratio(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn derivative_shifts() {
        assert_eq!(
            series_derivative(&series(&[0, 1, 0, 2, 0, 16])).unwrap(),
            series(&[1, 0, 2, 0, 16])
        );
        assert_eq!(
            series_derivative(&series(&[7])),
            Err(SeriesError::ZeroOrder)
        );
        assert_eq!(series_derivative(&series(&[7, 0])).unwrap(), series(&[0]));
        assert_eq!(series_derivative(&series(&[0, 1])).unwrap(), series(&[1]));
        assert_eq!(EgfSeries::new(Vec::new()), Err(SeriesError::Empty));
    }

    #[test]
    fn products() {
        let tan = series(&[0, 1, 0, 2, 0, 16, 0, 272]);
        assert_eq!(
            series_product(&tan, &tan).truncate(6),
            series(&[0, 0, 2, 0, 16, 0, 272])
        );
        assert_eq!(series_product(&tan, &EgfSeries::unit(7)), tan);
        assert_eq!(series_product(&tan, &EgfSeries::unit(3)), tan.truncate(3));
        let sec = series(&[1, 0, 1, 0, 5, 0, 61]);
        let cos = series(&[1, 0, -1, 0, 1, 0, -1]);
        assert_eq!(series_product(&sec, &cos), EgfSeries::unit(6));
    }

    #[test]
    fn ode_solution() {
        assert_eq!(solve_tan_ode(7), series(&[0, 1, 0, 2, 0, 16, 0, 272]));
        assert_eq!(solve_tan_ode(1), series(&[0, 1]));
        assert_eq!(solve_tan_ode(9).coeffs()[9], Integer::from(7936));
        assert_eq!(solve_tan_ode(0), series(&[0]));
    }

    #[test]
    fn ode_residual_vanishes() {
        for order in 1..=40 {
            let y = solve_tan_ode(order);
            let lhs = series_derivative(&y).unwrap();
            let rhs = &EgfSeries::unit(order) + &series_product(&y, &y);
            assert!((&lhs - &rhs).is_zero(), "order {order}");
        }
    }

    #[test]
    fn pythagorean_identity() {
        let n = 40;
        let sec = EgfSeries::from_naturals(secant_numbers(n + 1).terms()).unwrap();
        let tan = EgfSeries::from_naturals(tangent_numbers(n + 1).terms()).unwrap();
        assert_eq!(
            series_product(&sec, &sec),
            &EgfSeries::unit(n) + &series_product(&tan, &tan)
        );
    }

    #[test]
    fn tan_coefficients() {
        let p = tan_polynomial(7);
        let expected = [
            ratio(0, 1),
            ratio(1, 1),
            ratio(0, 1),
            ratio(1, 3),
            ratio(0, 1),
            ratio(2, 15),
            ratio(0, 1),
            ratio(17, 315),
        ];
        assert_eq!(p.terms(), &expected);
        assert_eq!(tan_polynomial(1).to_string(), "x");
        assert_eq!(tan_polynomial(9).terms()[9], ratio(62, 2835));
        assert_eq!(p.to_string(), "x + 1/3 x^3 + 2/15 x^5 + 17/315 x^7");
    }

    #[test]
    fn sec_coefficients() {
        assert_eq!(sec_polynomial(0).to_string(), "1");
        assert_eq!(sec_polynomial(4).to_string(), "1 + 1/2 x^2 + 5/24 x^4");
        assert_eq!(sec_polynomial(6).terms()[6], ratio(61, 720));
    }

    #[test]
    fn egf_round_trip_is_exact() {
        for p in [tan_polynomial(25), sec_polynomial(24)] {
            let back = p.to_egf().unwrap();
            assert_eq!(TaylorPolynomial::from_egf(&back), p);
        }
        assert!(TaylorPolynomial::new(alloc::vec![ratio(0, 1), ratio(1, 2)])
            .to_egf()
            .is_none());
    }

    #[test]
    fn display_signs() {
        let p = TaylorPolynomial::new(alloc::vec![
            ratio(-2, 1),
            ratio(-1, 1),
            ratio(0, 1),
            ratio(-1, 6)
        ]);
        assert_eq!(p.to_string(), "-2 + -x + -1/6 x^3");
        assert_eq!(
            TaylorPolynomial::new(alloc::vec![ratio(0, 1)]).to_string(),
            "0"
        );
    }

    #[test]
    fn evaluation() {
        assert_eq!(tan_polynomial(7).eval_exact(&ratio(0, 1)), ratio(0, 1));
        assert_eq!(sec_polynomial(4).eval_exact(&ratio(0, 1)), ratio(1, 1));
        let p = tan_polynomial(3);
        // 1/2 + (1/3)(1/8)
        assert_eq!(p.eval_exact(&ratio(1, 2)), ratio(13, 24));
        assert_eq!(
            p.evaluate(&Scalar::Exact(ratio(1, 2))),
            Scalar::Exact(ratio(13, 24))
        );
        let long = tan_polynomial(21);
        for x in [0.1, 0.5, 1.0, 1.5] {
            let exact = Rational::from_float(x).unwrap();
            for q in [&p, &long] {
                let rounded = q.eval_exact(&exact).to_f64().unwrap();
                assert!((q.eval_f64(x) - rounded).abs() < 1e-12);
                assert_eq!(q.evaluate(&Scalar::Float(x)), Scalar::Float(q.eval_f64(x)));
            }
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(format_decimal(&ratio(0, 1), 15), "0");
        assert_eq!(format_decimal(&ratio(1, 2), 15), "0.5");
        assert_eq!(format_decimal(&ratio(1, 3), 15), "0.333333333333333");
        assert_eq!(format_decimal(&ratio(2, 3), 15), "0.666666666666667");
        assert_eq!(format_decimal(&ratio(-13, 24), 15), "-0.541666666666667");
        assert_eq!(format_decimal(&ratio(1, 100000), 15), "1e-05");
        assert_eq!(format_decimal(&ratio(1, 10000), 15), "0.0001");
        assert_eq!(format_decimal(&ratio(123, 1), 15), "123");
        assert_eq!(format_decimal(&ratio(9999999999999999, 1), 15), "1e+16");
        assert_eq!(format_decimal(&ratio(10, 1), 3), "10");
        assert_eq!(format_decimal(&ratio(999, 1), 2), "1e+03");
        assert_eq!(format_decimal(&ratio(19, 2), 1), "1e+01");
    }
}
