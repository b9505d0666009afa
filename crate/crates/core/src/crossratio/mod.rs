//! Noncommutative cross-ratios of four vectors in F².
//!
//! `κ(x, y, z, t) = q^y_{zt} · q^x_{tz}`, computed on the 2×4 matrix whose
//! columns are `x, y, z, t`. Equivalently κ is the scalar solving
//!
//! ```text
//! t = x·α + y·β
//! z = x·α·γ + y·β·γ·κ
//! ```
//!
//! which [`cross_ratio_via_system`] solves directly.

mod orbit;
mod relations;

use std::fmt;

pub use orbit::{find_conjugator, orbit_witness, ConjugatorSearch, OrbitWitness};
pub use relations::{all_24, chain_product, cocycle_checks, permutation_relations, IdentityCheck, Permutation, Report};

use crate::error::{Blame, Error, Result};
use crate::linalg::{Mat2, Mat2xN, Vec2};
use crate::qplucker::q;
use crate::quasidet::{quasidet, BoxPosition};
use crate::scalars::DivisionRing;

pub const LABELS: [&str; 4] = ["x", "y", "z", "t"];

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const T: usize = 3;

/// Four ordered vectors `(x, y, z, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourTuple<S> {
    pub x: Vec2<S>,
    pub y: Vec2<S>,
    pub z: Vec2<S>,
    pub t: Vec2<S>,
}

impl<S: DivisionRing> FourTuple<S> {
    pub fn new(x: Vec2<S>, y: Vec2<S>, z: Vec2<S>, t: Vec2<S>) -> Self {
        FourTuple { x, y, z, t }
    }

    pub fn from_array([x, y, z, t]: [Vec2<S>; 4]) -> Self {
        FourTuple { x, y, z, t }
    }

    pub fn from_matrix(m: &Mat2xN<S>) -> Result<Self> {
        match m.columns() {
            [x, y, z, t] => Ok(FourTuple::new(x.clone(), y.clone(), z.clone(), t.clone())),
            cols => Err(Error::DimensionMismatch {
                expected: 4,
                found: cols.len(),
            }),
        }
    }

    pub fn vectors(&self) -> [&Vec2<S>; 4] {
        [&self.x, &self.y, &self.z, &self.t]
    }

    /// The 2×4 matrix with columns labeled `x, y, z, t`.
    pub fn to_matrix(&self) -> Mat2xN<S> {
        Mat2xN::new(self.vectors().map(Clone::clone).to_vec())
            .and_then(|m| m.with_labels(LABELS))
            .expect("four columns")
    }

    /// `(v[p0], v[p1], v[p2], v[p3])` where `v = (x, y, z, t)`.
    pub fn permuted(&self, p: Permutation) -> Self {
        let v = self.vectors();
        FourTuple::from_array(p.0.map(|i| v[i as usize].clone()))
    }

    /// `(g·x·λ1, g·y·λ2, g·z·λ3, g·t·λ4)`.
    pub fn act(&self, g: &Mat2<S>, lambdas: &[S; 4]) -> Self {
        let v = self.vectors();
        FourTuple::from_array(std::array::from_fn(|n| g.apply(v[n]).scale_right(&lambdas[n])))
    }

    /// The 2×2 matrix with columns `z, t`.
    pub fn zt_matrix(&self) -> Mat2<S> {
        Mat2::from_columns(self.z.clone(), self.t.clone())
    }

    /// Fails with [`Error::Degenerate`] when `z` and `t` are right-dependent,
    /// which pins κ to 0 or 1 (or leaves it undefined).
    pub fn check_zt_independent(&self) -> Result<Mat2<S>> {
        self.zt_matrix()
            .inverse()
            .map_err(|_| Error::Degenerate("z and t are dependent (t = z·α), so κ is 0 or 1".into()))
    }
}

/// Rendered as the 2×4 matrix `[x1, y1, z1, t1; x2, y2, z2, t2]`.
impl<S: DivisionRing> fmt::Display for FourTuple<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_matrix())
    }
}

fn reattribute(e: Error, factor: &str) -> Error {
    match e {
        Error::Undefined(b) => Error::Undefined(b.within("cross_ratio", factor)),
        other => other,
    }
}

/// `κ(x, y, z, t) = q^y_{zt} · q^x_{tz}`.
pub fn cross_ratio<S: DivisionRing>(tuple: &FourTuple<S>) -> Result<S> {
    let m = tuple.to_matrix();
    let first = q(&m, Y, Z, T).map_err(|e| reattribute(e, "q^y_{zt}"))?;
    let second = q(&m, X, T, Z).map_err(|e| reattribute(e, "q^x_{tz}"))?;
    Ok(first.mul(&second))
}

/// The unknowns of the defining system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossRatioSolution<S> {
    pub alpha: S,
    pub beta: S,
    pub gamma: S,
    pub kappa: S,
}

impl<S: DivisionRing> CrossRatioSolution<S> {
    /// Substitutes back: `t = x·α + y·β` and `z = x·α·γ + y·β·γ·κ`.
    pub fn satisfies(&self, tuple: &FourTuple<S>) -> bool {
        let ag = self.alpha.mul(&self.gamma);
        let bgk = self.beta.mul(&self.gamma).mul(&self.kappa);
        let t = tuple.x.scale_right(&self.alpha).add(&tuple.y.scale_right(&self.beta));
        let z = tuple.x.scale_right(&ag).add(&tuple.y.scale_right(&bgk));
        t == tuple.t && z == tuple.z
    }
}

/// `|u, v|` boxed at the top of the second column, `u` and `v` given by label.
fn boxed_top<S: DivisionRing>(m: &Mat2xN<S>, left: usize, right: usize, what: &str) -> Result<S> {
    let blame = || {
        Error::Undefined(
            Blame::new(
                "cross_ratio_via_system",
                format!("{what}: |{} {}|", LABELS[left], LABELS[right]),
            )
            .at(BoxPosition::R1C2),
        )
    };
    quasidet(&m.pair(left, right)?, BoxPosition::R1C2).map_err(|_| blame())
}

fn left_divide<S: DivisionRing>(num: &S, den: &S, what: &str) -> Result<S> {
    num.div_left(den).map_err(|_| {
        Error::Undefined(Blame::new(
            "cross_ratio_via_system",
            format!("{what} has a zero left factor"),
        ))
    })
}

/// Solves the defining system for `(α, β, γ, κ)`.
///
/// Needs all eight coordinates nonzero. `α, β` come from the `t`-system and
/// `αγ, βγκ` from the `z`-system, each as a ratio of quasideterminants
/// boxed in the first row; `γ` and `κ` are then peeled off by left division.
pub fn cross_ratio_via_system<S: DivisionRing>(tuple: &FourTuple<S>) -> Result<CrossRatioSolution<S>> {
    for (v, name) in tuple.vectors().iter().zip(LABELS) {
        for (row, c) in [&v.x1, &v.x2].into_iter().enumerate() {
            if c.is_zero() {
                return Err(Error::DegenerateCoordinates(format!("{name}{} = 0", row + 1)));
            }
        }
    }
    let m = tuple.to_matrix();
    let yx = boxed_top(&m, Y, X, "alpha")?;
    let alpha = left_divide(&boxed_top(&m, Y, T, "alpha")?, &yx, "alpha")?;
    let xy = boxed_top(&m, X, Y, "beta")?;
    let beta = left_divide(&boxed_top(&m, X, T, "beta")?, &xy, "beta")?;
    let alpha_gamma = left_divide(&boxed_top(&m, Y, Z, "alpha gamma")?, &yx, "alpha gamma")?;
    let beta_gamma_kappa = left_divide(&boxed_top(&m, X, Z, "beta gamma kappa")?, &xy, "beta gamma kappa")?;
    let gamma = left_divide(&alpha_gamma, &alpha, "gamma")?;
    let kappa = left_divide(&beta_gamma_kappa, &beta.mul(&gamma), "kappa")?;
    Ok(CrossRatioSolution {
        alpha,
        beta,
        gamma,
        kappa,
    })
}

/// `g⁻¹·(x y)` where `g` has columns `z, t`.
pub(crate) fn reduced_block<S: DivisionRing>(tuple: &FourTuple<S>) -> Result<(Mat2<S>, Mat2<S>)> {
    let g_inv = tuple
        .zt_matrix()
        .inverse()
        .map_err(|_| Error::Singular("z and t are dependent".into()))?;
    let block = g_inv.mul(&Mat2::from_columns(tuple.x.clone(), tuple.y.clone()));
    Ok((g_inv, block))
}

pub(crate) fn nonzero_entries<S: DivisionRing>(block: &Mat2<S>, operation: &'static str) -> Result<()> {
    for pos in BoxPosition::ALL {
        if block.entry(pos.row() - 1, pos.col() - 1).is_zero() {
            return Err(Error::DegenerateEntry(
                Blame::new(operation, "reduced matrix entry is zero").at(pos),
            ));
        }
    }
    Ok(())
}

/// κ read off the matrix reduced so that `z, t` become the standard basis:
/// `a12·a22⁻¹·a21·a11⁻¹`.
pub fn normalized_kappa<S: DivisionRing>(tuple: &FourTuple<S>) -> Result<S> {
    let (_, a) = reduced_block(tuple)?;
    nonzero_entries(&a, "normalized_kappa")?;
    a.a12.div_right(&a.a22)?.mul(&a.a21).div_right(&a.a11)
}
