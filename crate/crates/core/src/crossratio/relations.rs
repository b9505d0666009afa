//! Identities relating cross-ratios of related tuples: the cocycle and flip
//! laws, telescoping chains, conjugation under permutations, and the table
//! of all 24 orderings.

use std::collections::BTreeMap;
use std::fmt;

use super::{cross_ratio, FourTuple, LABELS, T, X, Y, Z};
use crate::error::{Error, Result};
use crate::linalg::Vec2;
use crate::qplucker::q;
use crate::scalars::{product, DivisionRing};

/// One evaluated equation `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck<S> {
    pub name: String,
    pub lhs: S,
    pub rhs: S,
}

impl<S: DivisionRing> IdentityCheck<S> {
    pub fn new(name: impl Into<String>, lhs: S, rhs: S) -> Self {
        IdentityCheck {
            name: name.into(),
            lhs,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report<S> {
    pub checks: Vec<IdentityCheck<S>>,
}

impl<S: DivisionRing> Report<S> {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck<S>> {
        self.checks.iter().filter(|c| !c.holds())
    }
}

fn kappa_of<S: DivisionRing>(vs: [&Vec2<S>; 4]) -> Result<S> {
    cross_ratio(&FourTuple::from_array(vs.map(Clone::clone)))
}

/// `κ(x,y,z,t) = κ(w,y,z,t)·κ(x,w,z,t)` and `κ(x,y,z,t) = 1 − κ(t,y,z,x)`.
pub fn cocycle_checks<S: DivisionRing>(
    x: &Vec2<S>,
    y: &Vec2<S>,
    z: &Vec2<S>,
    t: &Vec2<S>,
    w: &Vec2<S>,
) -> Result<Report<S>> {
    let kappa = kappa_of([x, y, z, t])?;
    let via_w = kappa_of([w, y, z, t])?.mul(&kappa_of([x, w, z, t])?);
    let flipped = S::one().sub(&kappa_of([t, y, z, x])?);
    Ok(Report {
        checks: vec![
            IdentityCheck::new("k(x,y,z,t) = k(w,y,z,t) k(x,w,z,t)", kappa.clone(), via_w),
            IdentityCheck::new("k(x,y,z,t) = 1 - k(t,y,z,x)", kappa, flipped),
        ],
    })
}

/// `κ(x_{n−1},x_n,z,t)·κ(x_{n−2},x_{n−1},z,t)⋯κ(x_1,x_2,z,t) = κ(x_1,x_n,z,t)`.
pub fn chain_product<S: DivisionRing>(points: &[Vec2<S>], z: &Vec2<S>, t: &Vec2<S>) -> Result<Report<S>> {
    let n = points.len();
    if n < 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: n });
    }
    // leftmost factor pairs the last two points
    let factors = points
        .windows(2)
        .rev()
        .map(|w| kappa_of([&w[0], &w[1], z, t]))
        .collect::<Result<Vec<_>>>()?;
    let lhs = product(&factors);
    let rhs = kappa_of([&points[0], &points[n - 1], z, t])?;
    Ok(Report {
        checks: vec![IdentityCheck::new(
            format!("chain of {} points telescopes", n),
            lhs,
            rhs,
        )],
    })
}

/// The conjugation laws between κ and the cross-ratios of
/// `(y,x,t,z)`, `(z,t,x,y)`, `(t,z,y,x)`, plus `κ⁻¹ = κ(y,x,z,t)`.
///
/// Each of the first three is checked with both of its conjugating
/// quasi-Plücker coordinates. Tuples with dependent `z, t` are rejected up
/// front as degenerate.
pub fn permutation_relations<S: DivisionRing>(tuple: &FourTuple<S>) -> Result<Report<S>> {
    tuple.check_zt_independent()?;
    let m = tuple.to_matrix();
    let kappa = cross_ratio(tuple)?;
    let perm = |p: &str| -> Result<S> { cross_ratio(&tuple.permuted(p.parse()?)) };
    // q^k_{ij} · κ · q^k_{ji}
    let conj = |k: usize, i: usize, j: usize| -> Result<S> { Ok(q(&m, k, i, j)?.mul(&kappa).mul(&q(&m, k, j, i)?)) };
    let name = |k: usize, i: usize, j: usize, target: &str| {
        format!(
            "q^{k}_{{{i}{j}}} k q^{k}_{{{j}{i}}} = k({target})",
            k = LABELS[k],
            i = LABELS[i],
            j = LABELS[j],
        )
    };

    let yxtz = perm("yxtz")?;
    let ztxy = perm("ztxy")?;
    let tzyx = perm("tzyx")?;
    let yxzt = perm("yxzt")?;
    let mut checks = Vec::with_capacity(7);
    for (k, i, j, target, value) in [
        (X, T, Z, "y,x,t,z", &yxtz),
        (Y, T, Z, "y,x,t,z", &yxtz),
        (Y, X, Z, "z,t,x,y", &ztxy),
        (T, X, Z, "z,t,x,y", &ztxy),
        (X, Y, Z, "t,z,y,x", &tzyx),
        (T, Y, Z, "t,z,y,x", &tzyx),
    ] {
        checks.push(IdentityCheck::new(name(k, i, j, target), conj(k, i, j)?, value.clone()));
    }
    checks.push(IdentityCheck::new("k^-1 = k(y,x,z,t)", kappa.inv()?, yxzt));
    Ok(Report { checks })
}

/// An ordering of `(x, y, z, t)`: entry `n` is the index of the vector
/// placed in position `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(pub [u8; 4]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([0, 1, 2, 3]);

    /// All 24 orderings in lexicographic order.
    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(24);
        for code in 0..256u32 {
            let p: [u8; 4] = std::array::from_fn(|n| ((code >> (6 - 2 * n)) & 3) as u8);
            let distinct = (0..4).all(|a| (a + 1..4).all(|b| p[a] != p[b]));
            if distinct {
                out.push(Permutation(p));
            }
        }
        out
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    /// Four distinct letters from `xyzt`, e.g. `"yxzt"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLiteral(format!("not a permutation of xyzt: {s:?}"));
        let idx: Vec<u8> = s
            .chars()
            .map(|c| LABELS.iter().position(|l| l.starts_with(c)).map(|p| p as u8))
            .collect::<Option<_>>()
            .ok_or_else(bad)?;
        let p: [u8; 4] = idx.try_into().map_err(|_| bad())?;
        let mut seen = [false; 4];
        for &i in &p {
            if std::mem::replace(&mut seen[i as usize], true) {
                return Err(bad());
            }
        }
        Ok(Permutation(p))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0.map(|i| LABELS[i as usize]);
        write!(f, "({a},{b},{c},{d})")
    }
}

/// κ of every reordering of the tuple; undefined entries keep their blame.
pub fn all_24<S: DivisionRing>(tuple: &FourTuple<S>) -> BTreeMap<Permutation, Result<S>> {
    Permutation::all()
        .into_iter()
        .map(|p| (p, cross_ratio(&tuple.permuted(p))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Quaternion, Rational};

    fn rv(a: i64, b: i64) -> Vec2<Rational> {
        Vec2::new(a.into(), b.into())
    }

    #[test]
    fn permutations_enumerate() {
        let all = Permutation::all();
        assert_eq!(all.len(), 24);
        assert_eq!(all[0], Permutation::IDENTITY);
        assert_eq!("yxzt".parse::<Permutation>().unwrap(), Permutation([1, 0, 2, 3]));
        assert!("xxzt".parse::<Permutation>().is_err());
        assert!("xyz".parse::<Permutation>().is_err());
        assert_eq!(Permutation([3, 2, 1, 0]).to_string(), "(t,z,y,x)");
    }

    #[test]
    fn cocycle_on_affine_points() {
        let r = cocycle_checks(&rv(0, 1), &rv(1, 1), &rv(2, 1), &rv(3, 1), &rv(5, 1)).unwrap();
        assert!(r.all_hold(), "{r:?}");
    }

    #[test]
    fn cocycle_with_w_equal_x() {
        let x = Vec2::new(Quaternion::from_ints(1, 1, 0, 0), Quaternion::j());
        let y = Vec2::new(Quaternion::k(), Quaternion::from_ints(2, 0, 1, 0));
        let z = Vec2::new(Quaternion::one(), Quaternion::from_ints(0, 1, 1, 1));
        let t = Vec2::new(Quaternion::from_ints(1, 0, 0, 3), Quaternion::i());
        let r = cocycle_checks(&x, &y, &z, &t, &x).unwrap();
        assert!(r.all_hold());
        assert!(kappa_of([&x, &x, &z, &t]).unwrap().is_one());
    }

    #[test]
    fn chain_base_cases() {
        let z = rv(2, 1);
        let t = rv(3, 1);
        let r = chain_product(&[rv(0, 1), rv(1, 1)], &z, &t).unwrap();
        assert!(r.all_hold());
        let same = vec![rv(7, 1); 4];
        let r = chain_product(&same, &z, &t).unwrap();
        assert!(r.checks[0].lhs.is_one() && r.all_hold());
        assert!(chain_product(&[rv(0, 1)], &z, &t).is_err());
    }

    #[test]
    fn commutative_permutations_collapse() {
        let tuple = FourTuple::from_array([0, 1, 2, 3].map(|u| rv(u, 1)));
        let r = permutation_relations(&tuple).unwrap();
        assert!(r.all_hold());
        let k = cross_ratio(&tuple).unwrap();
        for p in ["yxtz", "ztxy", "tzyx"] {
            assert_eq!(cross_ratio(&tuple.permuted(p.parse().unwrap())).unwrap(), k);
        }
        assert_eq!(
            cross_ratio(&tuple.permuted("yxzt".parse().unwrap())).unwrap(),
            k.inv().unwrap()
        );
    }

    #[test]
    fn degenerate_zt_rejected() {
        let z = rv(2, 1);
        let tuple = FourTuple::new(rv(0, 1), rv(1, 1), z.clone(), z.scale_right(&Rational::from(3)));
        assert!(matches!(permutation_relations(&tuple), Err(Error::Degenerate(_))));
    }

    #[test]
    fn classical_six_values() {
        let tuple = FourTuple::from_array([0, 1, 2, 3].map(|u| rv(u, 1)));
        let table = all_24(&tuple);
        assert_eq!(table.len(), 24);
        let k = table[&Permutation::IDENTITY].clone().unwrap();
        assert_eq!(k, cross_ratio(&tuple).unwrap());
        let distinct: std::collections::BTreeSet<Rational> = table.values().map(|v| v.clone().unwrap()).collect();
        assert_eq!(distinct.len(), 6);
    }
}
