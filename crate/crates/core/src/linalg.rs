//! Vectors in F², 2×2 and 2×n matrices over a division ring, and a small
//! rational kernel solver.
//!
//! Scalars act on vectors from the right (`x·λ`) and matrices from the left
//! (`g·x`). All row operations in elimination multiply from the left, so the
//! inverse is correct without commutativity.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{DivisionRing, Rational};

/// Column vector `(x1, x2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vec2<T> {
    pub x1: T,
    pub x2: T,
}

impl<T: DivisionRing> Vec2<T> {
    pub fn new(x1: T, x2: T) -> Self {
        Vec2 { x1, x2 }
    }

    pub fn zero() -> Self {
        Vec2::new(T::zero(), T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x1.is_zero() && self.x2.is_zero()
    }

    pub fn get(&self, row: usize) -> &T {
        match row {
            0 => &self.x1,
            _ => &self.x2,
        }
    }

    /// Right scalar action `x·λ`.
    pub fn scale_right(&self, lambda: &T) -> Self {
        Vec2::new(self.x1.mul(lambda), self.x2.mul(lambda))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Vec2::new(self.x1.add(&rhs.x1), self.x2.add(&rhs.x2))
    }

    /// Whether `self = other·α` for some α (including α = 0).
    ///
    /// A zero vector is dependent on everything.
    pub fn right_dependent(&self, other: &Self) -> bool {
        !Mat2::from_columns(other.clone(), self.clone()).is_invertible()
    }
}

impl<T: fmt::Display> fmt::Display for Vec2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.x1, self.x2)
    }
}

/// 2×2 matrix `[[a11, a12], [a21, a22]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2<T> {
    pub a11: T,
    pub a12: T,
    pub a21: T,
    pub a22: T,
}

impl<T: DivisionRing> Mat2<T> {
    pub fn new(a11: T, a12: T, a21: T, a22: T) -> Self {
        Mat2 { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        Mat2::diag(T::one(), T::one())
    }

    pub fn diag(d1: T, d2: T) -> Self {
        Mat2::new(d1, T::zero(), T::zero(), d2)
    }

    pub fn from_columns(c1: Vec2<T>, c2: Vec2<T>) -> Self {
        Mat2::new(c1.x1, c2.x1, c1.x2, c2.x2)
    }

    pub fn column(&self, col: usize) -> Vec2<T> {
        match col {
            0 => Vec2::new(self.a11.clone(), self.a21.clone()),
            _ => Vec2::new(self.a12.clone(), self.a22.clone()),
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> &T {
        match (row, col) {
            (0, 0) => &self.a11,
            (0, _) => &self.a12,
            (_, 0) => &self.a21,
            _ => &self.a22,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2::new(
            self.a11.mul(&rhs.a11).add(&self.a12.mul(&rhs.a21)),
            self.a11.mul(&rhs.a12).add(&self.a12.mul(&rhs.a22)),
            self.a21.mul(&rhs.a11).add(&self.a22.mul(&rhs.a21)),
            self.a21.mul(&rhs.a12).add(&self.a22.mul(&rhs.a22)),
        )
    }

    pub fn apply(&self, v: &Vec2<T>) -> Vec2<T> {
        Vec2::new(
            self.a11.mul(&v.x1).add(&self.a12.mul(&v.x2)),
            self.a21.mul(&v.x1).add(&self.a22.mul(&v.x2)),
        )
    }

    /// Invertibility without forming the inverse: with a nonzero pivot
    /// `a11` the Schur complement `a22 − a21·a11⁻¹·a12` must be nonzero,
    /// otherwise both off-diagonal entries must be.
    pub fn is_invertible(&self) -> bool {
        match self.a11.inv() {
            Ok(p) => !self.a22.sub(&self.a21.mul(&p).mul(&self.a12)).is_zero(),
            Err(_) => !self.a12.is_zero() && !self.a21.is_zero(),
        }
    }

    /// Two-sided inverse by Gauss–Jordan elimination on `[g | I]`.
    ///
    /// Returns [`Error::Singular`] when no pivot is available, i.e. the
    /// columns are right-dependent.
    pub fn inverse(&self) -> Result<Self> {
        // rows[r] = [g_r1, g_r2 | e_r1, e_r2]
        let mut rows = [
            [self.a11.clone(), self.a12.clone(), T::one(), T::zero()],
            [self.a21.clone(), self.a22.clone(), T::zero(), T::one()],
        ];
        for col in 0..2 {
            let pivot_row = (col..2)
                .find(|&r| !rows[r][col].is_zero())
                .ok_or_else(|| Error::Singular(format!("no pivot in column {}", col + 1)))?;
            rows.swap(col, pivot_row);
            let p_inv = rows[col][col].inv()?;
            rows[col] = rows[col].clone().map(|x| p_inv.mul(&x));
            let other = 1 - col;
            let factor = rows[other][col].clone();
            if !factor.is_zero() {
                let pivot = rows[col].clone();
                for (x, p) in rows[other].iter_mut().zip(pivot.iter()) {
                    *x = x.sub(&factor.mul(p));
                }
            }
        }
        let [r1, r2] = rows;
        let [_, _, b11, b12] = r1;
        let [_, _, b21, b22] = r2;
        Ok(Mat2::new(b11, b12, b21, b22))
    }
}

impl<T: fmt::Display> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}; {}, {}]", self.a11, self.a12, self.a21, self.a22)
    }
}

/// A 2×n matrix stored by columns, optionally with column labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2xN<T> {
    cols: Vec<Vec2<T>>,
    labels: Option<Vec<String>>,
}

impl<T: DivisionRing> Mat2xN<T> {
    pub fn new(cols: Vec<Vec2<T>>) -> Result<Self> {
        if cols.len() < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: cols.len(),
            });
        }
        Ok(Mat2xN { cols, labels: None })
    }

    /// From two rows of equal length.
    pub fn from_rows(row1: Vec<T>, row2: Vec<T>) -> Result<Self> {
        if row1.len() != row2.len() {
            return Err(Error::DimensionMismatch {
                expected: row1.len(),
                found: row2.len(),
            });
        }
        Mat2xN::new(row1.into_iter().zip(row2).map(|(a, b)| Vec2::new(a, b)).collect())
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.cols.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols.len(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[Vec2<T>] {
        &self.cols
    }

    pub fn column(&self, i: usize) -> Result<&Vec2<T>> {
        self.cols.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.cols.len(),
        })
    }

    /// Entry `a_{r,i}`, zero-based.
    pub fn entry(&self, row: usize, col: usize) -> Result<&T> {
        Ok(self.column(col)?.get(row))
    }

    /// Label of column `i`, falling back to its one-based position.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => (i + 1).to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// The 2×2 submatrix with columns `(i, k)` in that order.
    pub fn pair(&self, i: usize, k: usize) -> Result<Mat2<T>> {
        Ok(Mat2::from_columns(self.column(i)?.clone(), self.column(k)?.clone()))
    }

    /// `g·A`.
    pub fn left_mul(&self, g: &Mat2<T>) -> Self {
        Mat2xN {
            cols: self.cols.iter().map(|c| g.apply(c)).collect(),
            labels: self.labels.clone(),
        }
    }

    /// `A·diag(λ_1, …, λ_n)`: column i is right-multiplied by λ_i.
    pub fn col_scale(&self, lambdas: &[T]) -> Result<Self> {
        if lambdas.len() != self.cols.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols.len(),
                found: lambdas.len(),
            });
        }
        Ok(Mat2xN {
            cols: self.cols.iter().zip(lambdas).map(|(c, l)| c.scale_right(l)).collect(),
            labels: self.labels.clone(),
        })
    }
}

/// `[a11, …, a1n; a21, …, a2n]`, the same grammar the CLI parses.
impl<T: fmt::Display> fmt::Display for Mat2xN<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (row, sep) in [(0, "; "), (1, "]")] {
            for (n, c) in self.cols.iter().enumerate() {
                if n > 0 {
                    write!(f, ", ")?;
                }
                let v = if row == 0 { &c.x1 } else { &c.x2 };
                write!(f, "{v}")?;
            }
            write!(f, "{sep}")?;
        }
        Ok(())
    }
}

pub type Mat4Q = [[Rational; 4]; 4];

/// A nonzero vector `v` with `M·v = 0`, or `None` when `M` has full rank.
///
/// Only defined over the rationals. The matrix is brought to reduced row
/// echelon form; the first free column (in column order) is set to 1, all
/// other free columns to 0, and the pivot variables are read off.
pub fn rational_kernel(m: &Mat4Q) -> Option<[Rational; 4]> {
    let mut a = m.clone();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..4 {
        let Some(p) = (row..4).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].inv().expect("pivot is nonzero");
        a[row] = a[row].clone().map(|x| x.mul(&inv));
        for r in 0..4 {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[row].clone();
                for (x, p) in a[r].iter_mut().zip(pivot_row.iter()) {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    let free = (0..4).find(|c| pivots.iter().all(|&(_, pc)| pc != *c))?;
    let mut v: [Rational; 4] = std::array::from_fn(|_| Rational::zero());
    v[free] = Rational::one();
    for &(r, c) in &pivots {
        v[c] = a[r][free].neg();
    }
    Some(v)
}

pub fn mat4_apply(m: &Mat4Q, v: &[Rational; 4]) -> [Rational; 4] {
    std::array::from_fn(|r| (0..4).fold(Rational::zero(), |acc, c| acc.add(&m[r][c].mul(&v[c]))))
}
