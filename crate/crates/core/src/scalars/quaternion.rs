use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use super::rational::forward_binop;
use super::{DivisionRing, Rational};
use crate::error::{Error, Result};

/// `a + b·i + c·j + d·k` with rational coefficients.
///
/// Multiplication follows Hamilton's relations `i² = j² = k² = ijk = −1`
/// and does not commute.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn real(a: Rational) -> Self {
        Quaternion::new(a, Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// Integer coefficients, for tests and literals.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quaternion::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn coefficients(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn from_coefficients([a, b, c, d]: [Rational; 4]) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    /// `a² + b² + c² + d²`; multiplicative, zero only at zero.
    pub fn norm(&self) -> Rational {
        self.coefficients()
            .into_iter()
            .fold(Rational::zero(), |acc, x| &acc + &(x * x))
    }

    /// Twice the real part, a conjugacy invariant alongside the norm.
    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Quaternion::new(&self.a * s, &self.b * s, &self.c * s, &self.d * s)
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Integer coefficients over a common positive denominator, when
    /// everything fits in an `i128`.
    fn integral(&self) -> Option<([i128; 4], i128)> {
        let mut parts = [(0, 1); 4];
        for (slot, x) in parts.iter_mut().zip(self.coefficients()) {
            *slot = x.small_parts()?;
        }
        let mut den: i128 = 1;
        for &(_, d) in &parts {
            den = (den / den.gcd(&d)).checked_mul(d)?;
        }
        let mut nums = [0; 4];
        for (n, &(p, d)) in nums.iter_mut().zip(&parts) {
            *n = p.checked_mul(den / d)?;
        }
        Some((nums, den))
    }

    /// Hamilton product over common denominators; `None` on overflow.
    fn mul_integral(&self, rhs: &Self) -> Option<Self> {
        let ([a1, b1, c1, d1], den1) = self.integral()?;
        let ([a2, b2, c2, d2], den2) = rhs.integral()?;
        let den = den1.checked_mul(den2)?;
        let sum = |terms: [(i128, i128, bool); 4]| {
            terms.iter().try_fold(0i128, |acc, &(x, y, negate)| {
                let p = x.checked_mul(y)?;
                if negate {
                    acc.checked_sub(p)
                } else {
                    acc.checked_add(p)
                }
            })
        };
        let a = sum([(a1, a2, false), (b1, b2, true), (c1, c2, true), (d1, d2, true)])?;
        let b = sum([(a1, b2, false), (b1, a2, false), (c1, d2, false), (d1, c2, true)])?;
        let c = sum([(a1, c2, false), (b1, d2, true), (c1, a2, false), (d1, b2, false)])?;
        let d = sum([(a1, d2, false), (b1, c2, false), (c1, b2, true), (d1, a2, false)])?;
        Some(Quaternion::new(
            Rational::from_small_parts(a, den),
            Rational::from_small_parts(b, den),
            Rational::from_small_parts(c, den),
            Rational::from_small_parts(d, den),
        ))
    }

    fn mul_exact(&self, rhs: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        Quaternion::new(
            &(&(a1 * a2) - &(b1 * b2)) - &(&(c1 * c2) + &(d1 * d2)),
            &(&(a1 * b2) + &(b1 * a2)) + &(&(c1 * d2) - &(d1 * c2)),
            &(&(a1 * c2) - &(b1 * d2)) + &(&(c1 * a2) + &(d1 * b2)),
            &(&(a1 * d2) + &(b1 * c2)) - &(&(c1 * b2) - &(d1 * a2)),
        )
    }
}

impl DivisionRing for Quaternion {
    const COMMUTATIVE: bool = false;

    fn zero() -> Self {
        Quaternion::from_ints(0, 0, 0, 0)
    }

    fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    fn from_integer(n: i64) -> Self {
        Quaternion::from_ints(n, 0, 0, 0)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.is_real()
    }

    fn add(&self, rhs: &Self) -> Self {
        Quaternion::new(&self.a + &rhs.a, &self.b + &rhs.b, &self.c + &rhs.c, &self.d + &rhs.d)
    }

    fn neg(&self) -> Self {
        Quaternion::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Quaternion::new(&self.a - &rhs.a, &self.b - &rhs.b, &self.c - &rhs.c, &self.d - &rhs.d)
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.mul_integral(rhs).unwrap_or_else(|| self.mul_exact(rhs))
    }

    /// Conjugate over norm.
    fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let r = n.inv()?;
        Ok(self.conj().scale(&r))
    }
}

impl From<Rational> for Quaternion {
    fn from(a: Rational) -> Self {
        Quaternion::real(a)
    }
}

impl From<i64> for Quaternion {
    fn from(n: i64) -> Self {
        Quaternion::from_integer(n)
    }
}

/// Canonical rendering `a + b i + c j + d k`; zero terms are dropped, the
/// sign of a non-leading coefficient becomes the joining operator, and the
/// zero element renders as `0`.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let units = ["", " i", " j", " k"];
        let mut first = true;
        for (coef, unit) in self.coefficients().into_iter().zip(units) {
            if coef.is_zero() {
                continue;
            }
            if first {
                write!(f, "{coef}{unit}")?;
                first = false;
            } else if coef.is_negative() {
                write!(f, " - {}{unit}", coef.abs())?;
            } else {
                write!(f, " + {coef}{unit}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quaternion({self})")
    }
}

forward_binop!(Add, add, Quaternion);
forward_binop!(Sub, sub, Quaternion);
forward_binop!(Mul, mul, Quaternion);

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        DivisionRing::neg(&self)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        DivisionRing::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> Quaternion {
        Quaternion::from_ints(a, b, c, d)
    }

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let minus_one = q(-1, 0, 0, 0);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, minus_one);
        assert_eq!(&j * &j, minus_one);
        assert_eq!(&k * &k, minus_one);
        assert_eq!(&(&i * &j) * &k, minus_one);
        assert_eq!(&j * &i, -&k);
    }

    #[test]
    fn fast_product_agrees_with_coefficientwise() {
        let r = |n: i64, d: i64| Rational::new(n, d).unwrap();
        let xs = [
            Quaternion::new(r(1, 2), r(-3, 7), r(5, 6), r(0, 1)),
            Quaternion::new(r(-9, 4), r(2, 3), r(1, 5), r(7, 9)),
            Quaternion::new(r(i64::MAX, 3), r(1, i64::MAX), r(-1, 2), r(3, 1)),
            q(0, 0, 0, 0),
        ];
        for x in &xs {
            for y in &xs {
                assert_eq!(DivisionRing::mul(x, y), x.mul_exact(y));
            }
        }
        let huge = Quaternion::new(Rational::integer(i128::MAX), r(1, 1), r(0, 1), r(0, 1));
        assert!(huge.mul_integral(&huge).is_none());
        assert_eq!(DivisionRing::mul(&huge, &huge), huge.mul_exact(&huge));
    }

    #[test]
    fn identity_multiplication() {
        let x = q(3, -1, 4, 1);
        assert_eq!(&Quaternion::one() * &x, x);
        assert_eq!(&x * &Quaternion::one(), x);
    }

    #[test]
    fn worked_product() {
        // (1 − i)(1 + j) = 1 + j − i − ij = 1 − i + j − k
        assert_eq!(&q(1, -1, 0, 0) * &q(1, 0, 1, 0), q(1, -1, 1, -1));
    }

    #[test]
    fn inverses() {
        assert_eq!(Quaternion::i().inv().unwrap(), q(0, -1, 0, 0));
        let half = Rational::new(1, 2).unwrap();
        let expected = Quaternion::new(half.clone(), -&half, 0.into(), 0.into());
        let got = q(1, 1, 0, 0).inv().unwrap();
        assert_eq!(got, expected);
        assert_eq!(&got * &q(1, 1, 0, 0), Quaternion::one());
        assert_eq!(Quaternion::zero().inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn rendering() {
        let x = Quaternion::new(Rational::new(1, 2).unwrap(), 3.into(), 0.into(), (-1).into());
        assert_eq!(x.to_string(), "1/2 + 3 i - 1 k");
        assert_eq!(Quaternion::zero().to_string(), "0");
        assert_eq!(q(0, -1, 0, 0).to_string(), "-1 i");
        assert_eq!(q(0, 0, 2, -5).to_string(), "2 j - 5 k");
    }
}
