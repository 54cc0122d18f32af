//! Cross-method verification: every independent route to the same numbers
//! is run side by side and compared exactly.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zigzag_core::boustrophedon::{
    boustrophedon_transform, build_triangle, tangent_edge, verify_summation_identities,
};
use zigzag_core::joyce::{self, DEFAULT_ENUMERATION_CAP};
use zigzag_core::sequences::{
    secant_numbers, tangent_numbers, tangent_numbers_via_derivatives, zigzag_numbers,
    TangentSequence,
};
use zigzag_core::taylor::{series_derivative, series_product, solve_tan_ode, EgfSeries};
use zigzag_core::tremolo::{
    enumerate_anchored, enumerate_tremolo, leaf_position_check, perm_to_tree, tree_to_perm,
    DEFAULT_BRUTE_FORCE_CAP,
};
use zigzag_core::{binomial, Natural};

/// Largest `max_n` accepted: the brute-force permutation checks are exhaustive.
pub const MAX_N_CAP: usize = DEFAULT_BRUTE_FORCE_CAP;

#[derive(Debug, Clone)]
pub struct Config {
    /// Size bound for the enumeration and brute-force checks.
    pub max_n: usize,
    /// Seed for the random transform inputs.
    pub seed: u64,
    /// Term count for the sequence, triangle and series checks.
    pub terms: usize,
    /// Corrupts the largest odd tangent number at or below `max_n` before the
    /// checks run. Used to exercise the failure path.
    pub inject_fault: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_n: MAX_N_CAP,
            seed: 0,
            terms: 100,
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

fn check(name: &'static str, failure: Option<String>, ok: String) -> Check {
    match failure {
        None => Check {
            name,
            passed: true,
            detail: ok,
        },
        Some(detail) => Check {
            name,
            passed: false,
            detail,
        },
    }
}

fn first_difference(a: &[Natural], b: &[Natural]) -> Option<String> {
    if a.len() != b.len() {
        return Some(format!("lengths differ ({} vs {})", a.len(), b.len()));
    }
    a.iter()
        .zip(b)
        .position(|(x, y)| x != y)
        .map(|n| format!("first difference at index {n}: {} vs {}", a[n], b[n]))
}

/// Runs every check in a fixed order.
pub fn run(config: &Config) -> Vec<Check> {
    let max_n = config.max_n;
    let terms = config.terms.max(max_n + 1).max(2);

    let mut table = tangent_numbers(terms).into_terms();
    if config.inject_fault {
        let victim = if max_n % 2 == 1 {
            max_n
        } else {
            max_n.saturating_sub(1).max(1)
        };
        table[victim] += 1u32;
    }
    let table = TangentSequence::from_terms_unchecked(table);

    let mut checks = Vec::new();

    let derivatives = tangent_numbers_via_derivatives(terms);
    checks.push(check(
        "recurrence = derivative polynomials",
        first_difference(table.terms(), derivatives.terms()),
        format!("{terms} terms"),
    ));

    let edge = tangent_edge(&build_triangle(terms));
    let odd: Vec<Natural> = table.odd_terms().take(edge.len()).cloned().collect();
    checks.push(check(
        "recurrence = triangle left edge",
        first_difference(&odd, &edge),
        format!("{} odd terms", edge.len()),
    ));

    let ode: Vec<Natural> = solve_tan_ode(terms - 1)
        .into_coeffs()
        .into_iter()
        .map(|c| c.to_biguint().unwrap_or_default())
        .collect();
    checks.push(check(
        "recurrence = ODE coefficients",
        first_difference(table.terms(), &ode),
        format!("{terms} terms"),
    ));

    let failure = (1..=max_n).find_map(|n| {
        let brute = enumerate_anchored(n, MAX_N_CAP).ok()?.count();
        (Natural::from(brute) != table[n])
            .then(|| format!("n = {n}: {brute} permutations vs J = {}", table[n]))
    });
    checks.push(check(
        "brute-force anchored counts",
        failure,
        format!("n = 1..={max_n}"),
    ));

    let odd_sizes: Vec<usize> = (1..=max_n).step_by(2).collect();
    let failure = odd_sizes.iter().find_map(|&n| {
        let trees = joyce::enumerate(n, DEFAULT_ENUMERATION_CAP).ok()?.count();
        (Natural::from(trees) != table[n])
            .then(|| format!("n = {n}: {trees} trees vs J = {}", table[n]))
    });
    checks.push(check(
        "tree enumeration counts",
        failure,
        format!("odd n <= {max_n}"),
    ));

    let mut round_trips = 0usize;
    let failure = odd_sizes.iter().find_map(|&n| {
        let mut images = BTreeSet::new();
        for tree in joyce::enumerate(n, DEFAULT_ENUMERATION_CAP).ok()? {
            let perm = tree_to_perm(&tree);
            if perm_to_tree(&perm).as_ref() != Ok(&tree) {
                return Some(format!("{tree} does not round-trip"));
            }
            if !leaf_position_check(&tree) {
                return Some(format!("{tree} has a non-leaf at an even position"));
            }
            images.insert(perm);
            round_trips += 1;
        }
        let brute: BTreeSet<_> = enumerate_anchored(n, MAX_N_CAP).ok()?.collect();
        (images != brute).then(|| format!("n = {n}: image differs from brute force"))
    });
    checks.push(check(
        "bijection round trip",
        failure,
        format!("{round_trips} trees"),
    ));

    let triangle = build_triangle(terms);
    let violations = verify_summation_identities(&triangle);
    checks.push(check(
        "triangle summation identities",
        (!violations.is_empty())
            .then(|| format!("violations at {:?}", &violations[..violations.len().min(5)])),
        format!("{terms} rows"),
    ));

    let zigzag = zigzag_numbers(max_n + 1);
    let failure = (0..=max_n).find_map(|len| {
        let down_up = enumerate_tremolo(len, MAX_N_CAP)
            .ok()?
            .filter(|p| p.len() < 2 || p[0] > p[1])
            .count();
        (Natural::from(down_up) != zigzag[len]).then(|| {
            format!(
                "length {len}: {down_up} down-up permutations vs Z = {}",
                zigzag[len]
            )
        })
    });
    checks.push(check(
        "zigzag brute-force counts",
        failure,
        format!("lengths 0..={max_n}"),
    ));

    checks.push(transform_check(config.seed));

    let y = solve_tan_ode(terms - 1);
    let failure = if terms >= 2 {
        let lhs = series_derivative(&y).expect("order >= 1");
        let rhs = &EgfSeries::unit(terms - 2) + &series_product(&y, &y);
        (!(&lhs - &rhs).is_zero()).then(|| "y' - 1 - y^2 has nonzero coefficients".to_string())
    } else {
        None
    };
    checks.push(check(
        "tan ODE residual",
        failure,
        format!("through order {}", terms.saturating_sub(2)),
    ));

    let sec = EgfSeries::from_naturals(secant_numbers(terms).terms()).expect("nonempty");
    let tan = EgfSeries::from_naturals(table.terms()).expect("nonempty");
    let identity =
        series_product(&sec, &sec) == &EgfSeries::unit(terms - 1) + &series_product(&tan, &tan);
    checks.push(check(
        "sec^2 = 1 + tan^2",
        (!identity).then(|| "coefficients differ".to_string()),
        format!("through order {}", terms - 1),
    ));

    checks
}

fn transform_check(seed: u64) -> Check {
    const CASES: usize = 100;
    const MAX_LEN: usize = 20;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z: Vec<BigInt> = zigzag_numbers(MAX_LEN)
        .into_terms()
        .into_iter()
        .map(BigInt::from)
        .collect();
    let failure = (0..CASES).find_map(|case| {
        let len = rng.gen_range(1..=MAX_LEN);
        let a: Vec<BigInt> = (0..len)
            .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
            .collect();
        let transformed = boustrophedon_transform(&a).expect("nonempty");
        let convolved: Vec<BigInt> = (0..len)
            .map(|n| {
                (0..=n).fold(BigInt::zero(), |acc, k| {
                    let c = BigInt::from(binomial(n as u32, k as u32).expect("k <= n"));
                    acc + c * &a[k] * &z[n - k]
                })
            })
            .collect();
        (transformed != convolved).then(|| format!("case {case} differs"))
    });
    check(
        "boustrophedon transform = zigzag convolution",
        failure,
        format!("{CASES} random sequences, seed {seed}"),
    )
}
