#![allow(dead_code)]

use ncx_core::{Mat2, Mat2xN, Quaternion, Rational, Vec2};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

/// Rationals whose parts overflow 128-bit arithmetic once multiplied.
pub fn wide_rational() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1i64..=i64::MAX, 1u32..4).prop_map(|(n, d, p)| {
        let r = Rational::new(n, d).unwrap();
        (1..p).fold(r.clone(), |acc, _| &acc * &r)
    })
}

pub fn quaternion() -> impl Strategy<Value = Quaternion> {
    [rational(), rational(), rational(), rational()].prop_map(Quaternion::from_coefficients)
}

pub fn nonzero_quaternion() -> impl Strategy<Value = Quaternion> {
    quaternion().prop_filter("nonzero", |q| !ncx_core::DivisionRing::is_zero(q))
}

pub fn vec2() -> impl Strategy<Value = Vec2<Quaternion>> {
    (quaternion(), quaternion()).prop_map(|(a, b)| Vec2::new(a, b))
}

pub fn mat2() -> impl Strategy<Value = Mat2<Quaternion>> {
    [quaternion(), quaternion(), quaternion(), quaternion()].prop_map(|[a, b, c, d]| Mat2::new(a, b, c, d))
}

pub fn mat2x4() -> impl Strategy<Value = Mat2xN<Quaternion>> {
    proptest::collection::vec(vec2(), 4).prop_map(|cols| Mat2xN::new(cols).unwrap())
}
