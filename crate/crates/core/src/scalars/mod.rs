//! Exact scalars: the division-ring contract and its two instances.
//!
//! [`Rational`] is the commutative instance, [`Quaternion`] (rational
//! coefficients, Hamilton product) the noncommutative one. Everything above
//! this module is generic over [`DivisionRing`] and compares values with
//! exact structural equality.

mod quaternion;
mod rational;

use std::fmt;

pub use quaternion::Quaternion;
pub use rational::Rational;

use crate::error::Result;

/// Operations every scalar instance provides.
///
/// Arithmetic takes references and returns fresh values; nothing is mutated
/// in place. `inv` is partial: inverting zero is an [`Error::ZeroInverse`],
/// never a value.
///
/// [`Error::ZeroInverse`]: crate::Error::ZeroInverse
pub trait DivisionRing: Clone + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Whether multiplication commutes for every pair of elements.
    const COMMUTATIVE: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_integer(n: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// `self · rhs⁻¹`
    fn div_right(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// `lhs⁻¹ · self`
    fn div_left(&self, lhs: &Self) -> Result<Self> {
        Ok(lhs.inv()?.mul(self))
    }
}

/// `mu · x · mu⁻¹`.
pub fn conjugate_by<T: DivisionRing>(mu: &T, x: &T) -> Result<T> {
    let mu_inv = mu.inv()?;
    Ok(mu.mul(x).mul(&mu_inv))
}

/// Product of a sequence, left to right.
pub fn product<'a, T: DivisionRing>(factors: impl IntoIterator<Item = &'a T>) -> T {
    factors.into_iter().fold(T::one(), |acc, f| acc.mul(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_by_one_is_identity() {
        let x = Quaternion::new(1.into(), 2.into(), (-3).into(), Rational::new(1, 2).unwrap());
        assert_eq!(conjugate_by(&Quaternion::one(), &x).unwrap(), x);
    }

    #[test]
    fn conjugation_collapses_for_rationals() {
        let mu = Rational::new(-7, 3).unwrap();
        let x = Rational::new(5, 11).unwrap();
        assert_eq!(conjugate_by(&mu, &x).unwrap(), x);
    }

    #[test]
    fn conjugating_i_by_j() {
        // j·i = −k, then −k·(−j) = k·j = −i
        let got = conjugate_by(&Quaternion::j(), &Quaternion::i()).unwrap();
        assert_eq!(got, Quaternion::i().neg());
    }

    #[test]
    fn conjugation_by_zero_is_an_error() {
        assert!(conjugate_by(&Quaternion::zero(), &Quaternion::i()).is_err());
    }
}
