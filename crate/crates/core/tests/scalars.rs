mod common;

use common::{nonzero_quaternion, quaternion, rational, wide_rational};
use ncx_core::scalars::conjugate_by;
use ncx_core::{DivisionRing, Quaternion, Rational};
use num_rational::BigRational;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rationals_commute(a in rational(), b in rational()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn wide_rationals_match_bigrational(a in wide_rational(), b in wide_rational()) {
        let (x, y) = (a.to_big(), b.to_big());
        prop_assert_eq!(a.mul(&b).to_big(), &x * &y);
        prop_assert_eq!(a.add(&b).to_big(), &x + &y);
        prop_assert_eq!(a.sub(&b).to_big(), &x - &y);
        if !b.is_zero() {
            prop_assert_eq!(a.div_right(&b).unwrap().to_big(), &x / &y);
        }
    }
}

proptest! {
    #[test]
    fn rational_text_round_trip(a in wide_rational()) {
        let back: Rational = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rational_inverse(a in rational()) {
        match a.inv() {
            Ok(inv) => prop_assert!(a.mul(&inv).is_one()),
            Err(_) => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn quaternion_inverse_is_two_sided(q in nonzero_quaternion()) {
        let inv = q.inv().unwrap();
        prop_assert!(q.mul(&inv).is_one());
        prop_assert!(inv.mul(&q).is_one());
    }

    #[test]
    fn quaternion_product_is_associative(a in quaternion(), b in quaternion(), c in quaternion()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn norm_is_multiplicative(a in quaternion(), b in quaternion()) {
        prop_assert_eq!(a.mul(&b).norm(), a.norm().mul(&b.norm()));
    }

    #[test]
    fn conjugate_reverses_products(a in quaternion(), b in quaternion()) {
        prop_assert_eq!(a.mul(&b).conj(), b.conj().mul(&a.conj()));
    }

    #[test]
    fn conjugation_is_a_homomorphism(mu in nonzero_quaternion(), a in quaternion(), b in quaternion()) {
        let ab = conjugate_by(&mu, &a.mul(&b)).unwrap();
        let split = conjugate_by(&mu, &a).unwrap().mul(&conjugate_by(&mu, &b).unwrap());
        prop_assert_eq!(ab, split);
        let c = conjugate_by(&mu, &a).unwrap();
        prop_assert_eq!(c.trace(), a.trace());
        prop_assert_eq!(c.norm(), a.norm());
    }

    #[test]
    fn commutator_vanishes_only_for_commuting_pairs(a in quaternion(), b in quaternion()) {
        // ab = ba exactly when the imaginary parts are parallel
        let [_, b1, c1, d1] = a.coefficients().map(|c| c.to_big());
        let [_, b2, c2, d2] = b.coefficients().map(|c| c.to_big());
        let cross = [&c1 * &d2 - &d1 * &c2, &d1 * &b2 - &b1 * &d2, &b1 * &c2 - &c1 * &b2];
        let parallel = cross.iter().all(|x| *x == BigRational::from_integer(0.into()));
        prop_assert_eq!(a.mul(&b) == b.mul(&a), parallel);
    }

    #[test]
    fn wide_quaternion_product_matches_coefficient_formula(
        a in [wide_rational(), wide_rational(), wide_rational(), wide_rational()],
        b in [wide_rational(), wide_rational(), wide_rational(), wide_rational()],
    ) {
        let (p, q) = (Quaternion::from_coefficients(a.clone()), Quaternion::from_coefficients(b.clone()));
        let [a1, b1, c1, d1] = a.map(|c| c.to_big());
        let [a2, b2, c2, d2] = b.map(|c| c.to_big());
        let expected = [
            &a1 * &a2 - &b1 * &b2 - &c1 * &c2 - &d1 * &d2,
            &a1 * &b2 + &b1 * &a2 + &c1 * &d2 - &d1 * &c2,
            &a1 * &c2 - &b1 * &d2 + &c1 * &a2 + &d1 * &b2,
            &a1 * &d2 + &b1 * &c2 - &c1 * &b2 + &d1 * &a2,
        ];
        prop_assert_eq!(p.mul(&q).coefficients().map(|c| c.to_big()), expected);
    }
}

#[test]
fn quaternions_do_not_commute() {
    let (i, j) = (Quaternion::i(), Quaternion::j());
    assert_eq!(i.mul(&j), Quaternion::k());
    assert_eq!(j.mul(&i), Quaternion::k().neg());
}

#[test]
fn zero_has_no_inverse() {
    assert!(Quaternion::zero().inv().is_err());
    assert!(Rational::zero().inv().is_err());
}
