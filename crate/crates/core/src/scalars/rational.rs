use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use super::DivisionRing;
use crate::error::{Error, Result};

/// Arbitrary-precision fraction kept in lowest terms with a positive
/// denominator, so equality is structural.
///
/// Values whose numerator and denominator fit in an `i128` are stored
/// inline and use checked machine arithmetic; anything that overflows is
/// promoted to a `BigRational`, and results small enough are demoted back.
#[derive(Clone)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    // numerator is never i128::MIN, so negation and reciprocal cannot overflow
    Small(Ratio<i128>),
    Big(BigRational),
}

fn small(r: Ratio<i128>) -> Rational {
    if *r.numer() == i128::MIN {
        Rational(Repr::Big(BigRational::new(
            BigInt::from(*r.numer()),
            BigInt::from(*r.denom()),
        )))
    } else {
        Rational(Repr::Small(r))
    }
}

fn demote(r: BigRational) -> Rational {
    match (r.numer().to_i128(), r.denom().to_i128()) {
        (Some(n), Some(d)) if n != i128::MIN => Rational(Repr::Small(Ratio::new_raw(n, d))),
        _ => Rational(Repr::Big(r)),
    }
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_bigints(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        // BigRational::new reduces and normalizes the sign onto the numerator.
        Ok(demote(BigRational::new(num, den)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        demote(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.numer()),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.denom()),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_integer(),
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_negative(),
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn abs(&self) -> Self {
        match &self.0 {
            Repr::Small(r) => Rational(Repr::Small(r.abs())),
            Repr::Big(r) => Rational(Repr::Big(r.abs())),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn from_big(value: BigRational) -> Self {
        demote(value)
    }

    /// Numerator and denominator of an inline value.
    pub(crate) fn small_parts(&self) -> Option<(i128, i128)> {
        match &self.0 {
            Repr::Small(r) => Some((*r.numer(), *r.denom())),
            Repr::Big(_) => None,
        }
    }

    /// `n / d` for `d > 0`, reduced.
    pub(crate) fn from_small_parts(n: i128, d: i128) -> Self {
        small(Ratio::new(n, d))
    }

    fn binop(
        &self,
        rhs: &Self,
        checked: fn(&Ratio<i128>, &Ratio<i128>) -> Option<Ratio<i128>>,
        big: fn(&BigRational, &BigRational) -> BigRational,
    ) -> Self {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(r) = checked(a, b) {
                return small(r);
            }
        }
        demote(big(&self.to_big(), &rhs.to_big()))
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        // the representation is canonical
        self.0 == other.0
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(r) => {
                r.numer().hash(state);
                r.denom().hash(state);
            }
            Repr::Big(r) => {
                r.numer().hash(state);
                r.denom().hash(state);
            }
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl DivisionRing for Rational {
    const COMMUTATIVE: bool = true;

    fn zero() -> Self {
        Rational(Repr::Small(Ratio::zero()))
    }

    fn one() -> Self {
        Rational(Repr::Small(Ratio::one()))
    }

    fn from_integer(n: i64) -> Self {
        Rational::integer(n)
    }

    fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(r) => r.is_zero(),
        }
    }

    fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_one(),
            Repr::Big(_) => false,
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b| a.checked_add(b), |a, b| a + b)
    }

    fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small(r) => Rational(Repr::Small(-r)),
            Repr::Big(r) => demote(-r),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b| a.checked_mul(b), |a, b| a * b)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b| a.checked_sub(b), |a, b| a - b)
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match &self.0 {
            Repr::Small(r) => Rational(Repr::Small(r.recip())),
            Repr::Big(r) => demote(r.recip()),
        })
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::integer(n)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q` with an optional leading `-`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLiteral(format!("not a rational: {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        Rational::from_bigints(num, den)
    }
}

/// `p/q`, or `p` when the denominator is 1.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $ty:ty) => {
        impl $tr<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                DivisionRing::$method(self, rhs)
            }
        }
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                DivisionRing::$method(&self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(Add, add, Rational);
forward_binop!(Sub, sub, Rational);
forward_binop!(Mul, mul, Rational);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        DivisionRing::neg(&self)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        DivisionRing::neg(self)
    }
}
