//! Orbits of four-tuples under `GL2 × (F^×)^4` and the conjugacy criterion.
//!
//! The group acts on a tuple by `v ↦ g·v` on the left and `v ↦ v·λ⁻¹`
//! column-wise on the right. Two tuples with κ ∉ {0, 1} share an orbit
//! exactly when their cross-ratios are conjugate; [`orbit_witness`] turns a
//! conjugator μ into explicit group elements.

use super::{cross_ratio, nonzero_entries, reduced_block, FourTuple};
use crate::error::{Error, Result};
use crate::linalg::{rational_kernel, Mat2, Mat4Q};
use crate::scalars::{conjugate_by, DivisionRing, Quaternion, Rational};

/// Group element mapping a second tuple onto a first:
/// `first_c = g · second_c · λ_c⁻¹` for each column `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitWitness<S> {
    pub g: Mat2<S>,
    pub lambdas: [S; 4],
    pub mu: S,
}

impl<S: DivisionRing> OrbitWitness<S> {
    /// The image of `second` under this group element.
    pub fn apply(&self, second: &FourTuple<S>) -> Result<FourTuple<S>> {
        let inv: Vec<S> = self.lambdas.iter().map(|l| l.inv()).collect::<Result<_>>()?;
        let inv: [S; 4] = inv.try_into().expect("four lambdas");
        Ok(second.act(&self.g, &inv))
    }

    /// Checks both witness invariants by substitution.
    pub fn verify(&self, first: &FourTuple<S>, second: &FourTuple<S>) -> Result<()> {
        if !self.g.is_invertible() {
            return Err(Error::WitnessInvalid("g is not invertible".into()));
        }
        if &self.apply(second)? != first {
            return Err(Error::WitnessInvalid("g and lambdas do not map the tuples".into()));
        }
        let k1 = cross_ratio(first)?;
        let k2 = cross_ratio(second)?;
        if k1 != conjugate_by(&self.mu, &k2)? {
            return Err(Error::WitnessInvalid("kappa(first) != mu kappa(second) mu^-1".into()));
        }
        Ok(())
    }
}

fn kappa_outside_0_1<S: DivisionRing>(tuple: &FourTuple<S>, which: &str) -> Result<S> {
    let k = cross_ratio(tuple)?;
    if k.is_zero() || k.is_one() {
        return Err(Error::Degenerate(format!("kappa({which}) = {k}")));
    }
    Ok(k)
}

/// Builds the group element carrying `second` onto `first`, given μ with
/// `κ(first) = μ·κ(second)·μ⁻¹`.
///
/// Both tuples are reduced by the inverse of their `(z, t)` matrix to
/// `A = [a | e1 e2]` and `B = [b | e1 e2]`; then with λ3 = μ,
/// `λ1 = a11⁻¹·μ·b11`, `λ2 = a12⁻¹·μ·b12`, `λ4 = a21·λ1·b21⁻¹` we get
/// `A = diag(λ3, λ4)·B·diag(λ)⁻¹`, and `g = g_first·diag(λ3, λ4)·g_second⁻¹`.
/// The result is verified by substitution before it is returned.
pub fn orbit_witness<S: DivisionRing>(first: &FourTuple<S>, second: &FourTuple<S>, mu: &S) -> Result<OrbitWitness<S>> {
    if mu.is_zero() {
        return Err(Error::ZeroInverse);
    }
    let k1 = kappa_outside_0_1(first, "first")?;
    let k2 = kappa_outside_0_1(second, "second")?;
    if k1 != conjugate_by(mu, &k2)? {
        return Err(Error::NotConjugate(format!("{k1} != mu ({k2}) mu^-1 for mu = {mu}")));
    }
    let degenerate = |e: Error| match e {
        Error::Singular(s) => Error::Degenerate(s),
        other => other,
    };
    let (_, a) = reduced_block(first).map_err(degenerate)?;
    let (second_inv, b) = reduced_block(second).map_err(degenerate)?;
    nonzero_entries(&a, "orbit_witness")?;
    nonzero_entries(&b, "orbit_witness")?;

    let l3 = mu.clone();
    let l1 = a.a11.inv()?.mul(mu).mul(&b.a11);
    let l2 = a.a12.inv()?.mul(mu).mul(&b.a12);
    let l4 = a.a21.mul(&l1).div_right(&b.a21)?;

    let g = first
        .zt_matrix()
        .mul(&Mat2::diag(l3.clone(), l4.clone()))
        .mul(&second_inv);
    let witness = OrbitWitness {
        g,
        lambdas: [l1, l2, l3, l4],
        mu: mu.clone(),
    };
    witness.verify(first, second)?;
    Ok(witness)
}

/// A nonzero μ with `μ·q = p·μ`, if one exists.
///
/// Solves the ℚ-linear system `μ·q − p·μ = 0` on the coefficients of μ with
/// [`rational_kernel`]; the kernel's first free coordinate is set to 1.
pub fn find_conjugator(p: &Quaternion, q: &Quaternion) -> Option<Quaternion> {
    let basis = [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()];
    let images: Vec<Quaternion> = basis.iter().map(|e| e.mul(q).sub(&p.mul(e))).collect();
    let m: Mat4Q = std::array::from_fn(|row| std::array::from_fn(|col| images[col].coefficients()[row].clone()));
    let v = rational_kernel(&m)?;
    let mu = Quaternion::from_coefficients(v);
    debug_assert!(!mu.is_zero());
    Some(mu)
}

/// Scalar instances that can decide conjugacy.
pub trait ConjugatorSearch: DivisionRing {
    /// A nonzero μ with `μ·q = p·μ`, if one exists.
    fn find_conjugator(p: &Self, q: &Self) -> Option<Self>;

    /// Quantities preserved by conjugation; differing values rule it out.
    fn class_invariants(&self) -> Vec<Rational>;
}

impl ConjugatorSearch for Quaternion {
    fn find_conjugator(p: &Self, q: &Self) -> Option<Self> {
        find_conjugator(p, q)
    }

    fn class_invariants(&self) -> Vec<Rational> {
        vec![self.trace(), self.norm()]
    }
}

/// Rational conjugacy is equality.
impl ConjugatorSearch for Rational {
    fn find_conjugator(p: &Self, q: &Self) -> Option<Self> {
        (p == q).then(Rational::one)
    }

    fn class_invariants(&self) -> Vec<Rational> {
        vec![self.clone()]
    }
}
