//! Machine-readable output. Rationals are `[numerator, denominator]` integer
//! pairs and quaternions are four of them; nothing is ever a float.

use std::str::FromStr;

use ncx_core::crossratio::FourTuple;
use ncx_core::{Error, Mat2, Mat2xN, Quaternion, Rational, Vec2};
use serde_json::{json, Number, Value};

fn integer(digits: String) -> Value {
    Value::Number(Number::from_str(&digits).expect("integer literal"))
}

pub fn rational(r: &Rational) -> Value {
    json!([integer(r.numer().to_string()), integer(r.denom().to_string())])
}

pub fn quat(q: &Quaternion) -> Value {
    Value::Array(q.coefficients().into_iter().map(rational).collect())
}

pub fn vec2(v: &Vec2<Quaternion>) -> Value {
    json!([quat(&v.x1), quat(&v.x2)])
}

pub fn mat2(m: &Mat2<Quaternion>) -> Value {
    json!([[quat(&m.a11), quat(&m.a12)], [quat(&m.a21), quat(&m.a22)]])
}

/// Row-major: `[[row 1 entries], [row 2 entries]]`.
pub fn matrix(m: &Mat2xN<Quaternion>) -> Value {
    let row = |r: usize| Value::Array(m.columns().iter().map(|c| quat(c.get(r))).collect());
    json!([row(0), row(1)])
}

pub fn tuple(t: &FourTuple<Quaternion>) -> Value {
    matrix(&t.to_matrix())
}

pub fn status(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "fails"
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ZeroInverse => "zero_inverse",
        Error::ZeroDenominator => "zero_denominator",
        Error::Singular(_) => "singular",
        Error::Undefined(_) => "undefined",
        Error::DegenerateCoordinates(_) => "degenerate_coordinates",
        Error::DegenerateEntry(_) => "degenerate_entry",
        Error::Degenerate(_) => "degenerate",
        Error::DegenerateConfiguration(_) => "degenerate_configuration",
        Error::NotConjugate(_) => "not_conjugate",
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::IndexOutOfRange { .. } => "index_out_of_range",
        Error::InvalidLiteral(_) => "invalid_literal",
        Error::InvalidIndex(_) => "invalid_index",
        Error::ResampleExhausted { .. } => "resample_exhausted",
        Error::WitnessInvalid(_) => "witness_invalid",
    }
}

/// `{"error": kind, "message": ..., "operation"?, "factor"?, "box"?}`.
pub fn error(e: &Error) -> Value {
    let mut obj = json!({
        "error": error_kind(e),
        "message": e.to_string(),
    });
    if let Error::Undefined(b) | Error::DegenerateEntry(b) = e {
        obj["operation"] = json!(b.operation);
        if !b.factor.is_empty() {
            obj["factor"] = json!(b.factor);
        }
        if let Some(p) = b.position {
            obj["box"] = json!([p.row(), p.col()]);
        }
    }
    obj
}
