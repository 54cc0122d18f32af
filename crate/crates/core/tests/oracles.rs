mod support;

use num_traits::{Signed, ToPrimitive};
use support::{brute_force_alternating, brute_force_anchored, ratio, tan_lambert, tan_reference};
use zigzag_core::joyce;
use zigzag_core::sequences::secant_numbers;
use zigzag_core::tremolo::{enumerate_anchored, DEFAULT_BRUTE_FORCE_CAP};
use zigzag_core::Natural;

#[test]
fn lambert_reference_has_converged() {
    let tol =
        num_rational::BigRational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 40));
    for (n, d) in [(1, 10), (1, 2), (1, 1), (3, 2)] {
        let x = ratio(n, d);
        let a = tan_lambert(&x, 50);
        let b = tan_lambert(&x, 60);
        assert!((&a - &b).abs() < tol, "x = {n}/{d}");
        let float = (n as f64 / d as f64).tan();
        assert!((b.to_f64().unwrap() - float).abs() < 1e-14);
    }
    assert!(
        (tan_reference(&ratio(1, 2)).to_f64().unwrap() - 0.546_302_489_843_790_5).abs() < 1e-15
    );
}

#[test]
fn anchored_brute_force_matches_counts() {
    for n in 1..=8u32 {
        let expected = brute_force_anchored(n);
        let enumerated = enumerate_anchored(n as usize, DEFAULT_BRUTE_FORCE_CAP)
            .unwrap()
            .count() as u64;
        assert_eq!(enumerated, expected, "n = {n}");
        assert_eq!(Natural::from(expected), joyce::count(n as usize), "n = {n}");
    }
    let counts: Vec<u64> = (1..=7).map(brute_force_anchored).collect();
    assert_eq!(counts, [1, 0, 2, 0, 16, 0, 272]);
}

#[test]
fn secant_numbers_count_alternating_permutations() {
    let s = secant_numbers(9);
    for n in (0..=8).step_by(2) {
        assert_eq!(
            s[n as usize],
            Natural::from(brute_force_alternating(n)),
            "n = {n}"
        );
    }
    assert_eq!(brute_force_alternating(8), 1385);
}
