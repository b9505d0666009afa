//! Classical commutative oracles: Plücker coordinates, the three-term
//! Plücker relation, and the classical cross-ratio.
//!
//! These work directly on `num_rational::BigRational` rather than through
//! [`DivisionRing`](crate::DivisionRing), so they share no arithmetic path
//! with the quasideterminant code they are used to check.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Mat2xN, Vec2};
use crate::scalars::Rational;

fn minor(u: &Vec2<Rational>, v: &Vec2<Rational>) -> BigRational {
    u.x1.to_big() * v.x2.to_big() - v.x1.to_big() * u.x2.to_big()
}

/// `p_{ik}(A) = a_{1i}·a_{2k} − a_{1k}·a_{2i}`.
pub fn plucker(a: &Mat2xN<Rational>, i: usize, k: usize) -> Result<Rational> {
    Ok(Rational::from_big(minor(a.column(i)?, a.column(k)?)))
}

/// `p_{jk} / p_{ik}`, the commutative value of `q^k_{ij}`.
pub fn plucker_ratio(a: &Mat2xN<Rational>, i: usize, j: usize, k: usize) -> Result<Rational> {
    let den = minor(a.column(i)?, a.column(k)?);
    if den.is_zero() {
        return Err(Error::DegenerateConfiguration(format!("p_{{{}{}}} = 0", i + 1, k + 1)));
    }
    Ok(Rational::from_big(minor(a.column(j)?, a.column(k)?) / den))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerIdentityReport {
    pub indices: [usize; 4],
    /// `p_{ij}p_{kℓ} − p_{ik}p_{jℓ} + p_{iℓ}p_{jk}`
    pub value: Rational,
}

impl PluckerIdentityReport {
    pub fn holds(&self) -> bool {
        self.value.to_big().is_zero()
    }
}

pub fn plucker_identity_check(
    a: &Mat2xN<Rational>,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<PluckerIdentityReport> {
    let p = |u: usize, v: usize| -> Result<BigRational> { Ok(minor(a.column(u)?, a.column(v)?)) };
    let value = p(i, j)? * p(k, l)? - p(i, k)? * p(j, l)? + p(i, l)? * p(j, k)?;
    Ok(PluckerIdentityReport {
        indices: [i, j, k, l],
        value: Rational::from_big(value),
    })
}

/// `(p_{jk}·p_{iℓ} + p_{kℓ}·p_{ij}) / (p_{ik}·p_{jℓ})`, the commutative
/// reading of `q^k_{ij}q^ℓ_{ji} + q^k_{iℓ}q^j_{ℓi}`; equal to 1.
pub fn plucker_sum_ratio(a: &Mat2xN<Rational>, i: usize, j: usize, k: usize, l: usize) -> Result<Rational> {
    let p = |u: usize, v: usize| -> Result<BigRational> { Ok(minor(a.column(u)?, a.column(v)?)) };
    let den = p(i, k)? * p(j, l)?;
    if den.is_zero() {
        return Err(Error::DegenerateConfiguration("p_ik p_jl = 0".into()));
    }
    Ok(Rational::from_big((p(j, k)? * p(i, l)? + p(k, l)? * p(i, j)?) / den))
}

/// `(p_{ty}/p_{zy})·(p_{zx}/p_{tx})`.
///
/// For affine points `(u, 1)` this is
/// `(u_t − u_y)(u_z − u_x) / ((u_z − u_y)(u_t − u_x))`.
pub fn classical_cross_ratio(
    x: &Vec2<Rational>,
    y: &Vec2<Rational>,
    z: &Vec2<Rational>,
    t: &Vec2<Rational>,
) -> Result<Rational> {
    let p_zy = minor(z, y);
    let p_tx = minor(t, x);
    if p_zy.is_zero() || p_tx.is_zero() {
        return Err(Error::DegenerateConfiguration("p_zy or p_tx vanishes".into()));
    }
    Ok(Rational::from_big(minor(t, y) / p_zy * minor(z, x) / p_tx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::DivisionRing;

    fn rat_matrix(row1: &[i64], row2: &[i64]) -> Mat2xN<Rational> {
        Mat2xN::from_rows(
            row1.iter().map(|&v| v.into()).collect(),
            row2.iter().map(|&v| v.into()).collect(),
        )
        .unwrap()
    }

    fn rv(a: i64, b: i64) -> Vec2<Rational> {
        Vec2::new(a.into(), b.into())
    }

    #[test]
    fn minors() {
        let a = rat_matrix(&[1, 2, 5], &[3, 4, 6]);
        assert_eq!(plucker(&a, 0, 1).unwrap(), Rational::from(-2));
        assert_eq!(plucker(&a, 0, 2).unwrap(), Rational::from(-9));
        assert_eq!(plucker(&a, 1, 2).unwrap(), Rational::from(-8));
        assert!(plucker(&a, 1, 1).unwrap().is_zero());
        assert_eq!(plucker(&a, 2, 0).unwrap(), Rational::from(9));
        assert!(plucker(&a, 0, 3).is_err());
        let id = rat_matrix(&[1, 0], &[0, 1]);
        assert!(plucker(&id, 0, 1).unwrap().is_one());
    }

    #[test]
    fn three_term_identity() {
        let a = rat_matrix(&[1, -2, 5, 7], &[3, 4, 6, -1]);
        assert!(plucker_identity_check(&a, 0, 1, 2, 3).unwrap().holds());
        let repeated = rat_matrix(&[1, 1, 5, 7], &[3, 3, 6, -1]);
        assert!(plucker_identity_check(&repeated, 0, 1, 2, 3).unwrap().holds());
        assert!(plucker_sum_ratio(&a, 0, 1, 2, 3).unwrap().is_one());
    }

    #[test]
    fn classical_values() {
        let k = classical_cross_ratio(&rv(0, 1), &rv(1, 1), &rv(2, 1), &rv(3, 1)).unwrap();
        assert_eq!(k, Rational::new(4, 3).unwrap());
        let coincident = classical_cross_ratio(&rv(0, 1), &rv(1, 1), &rv(2, 1), &rv(2, 1)).unwrap();
        assert!(coincident.is_one());
        for n in [-4, 2, 9] {
            let k = classical_cross_ratio(&rv(1, 0), &rv(0, 1), &rv(1, 1), &rv(n, 1)).unwrap();
            assert_eq!(k, Rational::from(n));
        }
        assert!(classical_cross_ratio(&rv(0, 1), &rv(2, 1), &rv(2, 1), &rv(3, 1)).is_err());
    }
}
