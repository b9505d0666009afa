//! Quasi-Plücker coordinates `q^k_{ij}(A)` of a 2×n matrix.
//!
//! With columns `a_k, a_i` forming a 2×2 block, `q^k_{ij}` is
//! `|a_k a_i|⁻¹ · |a_k a_j|` where both quasideterminants box the entry of
//! the second column in the same row. Boxing in row 1 and in row 2 gives two
//! expressions for the same value; row 1 is evaluated first and row 2 is the
//! fallback when row 1 is undefined.

use std::fmt;

use crate::error::{Blame, Error, Result};
use crate::linalg::Mat2xN;
use crate::quasidet::{quasidet, BoxPosition};
use crate::scalars::DivisionRing;

/// Column indices `(i, j, k)` of `q^k_{ij}`, zero-based, with `i ≠ k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QPIndex {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl QPIndex {
    pub fn new(i: usize, j: usize, k: usize) -> Result<Self> {
        if i == k {
            return Err(Error::InvalidIndex(format!("q^k_ij requires i != k (got i = k = {i})")));
        }
        Ok(QPIndex { i, j, k })
    }

    /// Every index triple over `n` columns with `i ≠ k`.
    pub fn all(n: usize) -> impl Iterator<Item = QPIndex> {
        (0..n).flat_map(move |k| {
            (0..n)
                .filter(move |&i| i != k)
                .flat_map(move |i| (0..n).map(move |j| QPIndex { i, j, k }))
        })
    }

    /// `q^k_{ij}` rendered with the matrix's column labels.
    pub fn describe<T: DivisionRing>(&self, a: &Mat2xN<T>) -> String {
        format!("q^{}_{{{}{}}}", a.label(self.k), a.label(self.i), a.label(self.j))
    }

    fn check_range(&self, n: usize) -> Result<()> {
        for index in [self.i, self.j, self.k] {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, len: n });
            }
        }
        Ok(())
    }
}

impl fmt::Display for QPIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{}_{{{}{}}}", self.k + 1, self.i + 1, self.j + 1)
    }
}

/// Which row the boxed entries sit in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxRow {
    First,
    Second,
}

impl BoxRow {
    fn position(self) -> BoxPosition {
        match self {
            BoxRow::First => BoxPosition::R1C2,
            BoxRow::Second => BoxPosition::R2C2,
        }
    }
}

/// One of the two equal expressions for `q^k_{ij}`.
pub fn qp_boxed<T: DivisionRing>(a: &Mat2xN<T>, idx: QPIndex, row: BoxRow) -> Result<T> {
    idx.check_range(a.ncols())?;
    if idx.i == idx.k {
        return Err(Error::InvalidIndex("i = k".into()));
    }
    let pos = row.position();
    let name = idx.describe(a);
    let blame = |side: &str, e: Error| match e {
        Error::Undefined(b) => Error::Undefined(b.within("qplucker", &format!("{name} {side}"))),
        other => other,
    };
    let left = quasidet(&a.pair(idx.k, idx.i)?, pos).map_err(|e| blame("left factor", e))?;
    let right = quasidet(&a.pair(idx.k, idx.j)?, pos).map_err(|e| blame("right factor", e))?;
    let left_inv = left
        .inv()
        .map_err(|_| Error::Undefined(Blame::new("qplucker", format!("{name} left factor is zero")).at(pos)))?;
    Ok(left_inv.mul(&right))
}

/// `q^k_{ij}(A)`: row-1 boxes, falling back to row-2 boxes.
pub fn qp<T: DivisionRing>(a: &Mat2xN<T>, idx: QPIndex) -> Result<T> {
    match qp_boxed(a, idx, BoxRow::First) {
        Ok(v) => Ok(v),
        Err(Error::Undefined(first)) => match qp_boxed(a, idx, BoxRow::Second) {
            Ok(v) => Ok(v),
            Err(Error::Undefined(_)) => Err(Error::Undefined(first)),
            Err(e) => Err(e),
        },
        Err(e) => Err(e),
    }
}

/// `q^k_{ij}(A)` with the superscript first, mirroring the notation.
pub fn q<T: DivisionRing>(a: &Mat2xN<T>, k: usize, i: usize, j: usize) -> Result<T> {
    qp(a, QPIndex::new(i, j, k)?)
}

/// Every `q^k_{ij}` of a matrix at once.
///
/// For each superscript `k` the pivot `a_{1k}·a_{2k}⁻¹` is formed once and
/// the row combination `w_m = a_{1m} − a_{1k}·a_{2k}⁻¹·a_{2m}` is shared by
/// all `q^k_{ij} = w_i⁻¹·w_j`; when `a_{2k} = 0` the rows swap roles, as in
/// [`qp`]. Entries that [`qp`] reports as undefined are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPTable<T> {
    n: usize,
    values: Vec<Option<T>>,
}

impl<T: DivisionRing> QPTable<T> {
    pub fn new(a: &Mat2xN<T>) -> Self {
        let n = a.ncols();
        let cols = a.columns();
        let mut values = vec![None; n * n * n];
        for k in 0..n {
            let (top, bottom) = if !cols[k].x2.is_zero() { (0, 1) } else { (1, 0) };
            let Ok(pivot_inv) = cols[k].get(bottom).inv() else {
                continue;
            };
            let c = cols[k].get(top).mul(&pivot_inv);
            let w: Vec<T> = cols.iter().map(|v| v.get(top).sub(&c.mul(v.get(bottom)))).collect();
            for i in (0..n).filter(|&i| i != k) {
                let Ok(wi_inv) = w[i].inv() else {
                    continue;
                };
                for j in 0..n {
                    values[(k * n + i) * n + j] = Some(wi_inv.mul(&w[j]));
                }
            }
        }
        QPTable { n, values }
    }

    pub fn ncols(&self) -> usize {
        self.n
    }

    /// `q^k_{ij}`, superscript first.
    pub fn get(&self, k: usize, i: usize, j: usize) -> Option<&T> {
        if i >= self.n || j >= self.n || k >= self.n {
            return None;
        }
        self.values[(k * self.n + i) * self.n + j].as_ref()
    }

    pub fn all_defined(&self) -> bool {
        QPIndex::all(self.n).all(|idx| self.get(idx.k, idx.i, idx.j).is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport<T> {
    pub row1: T,
    pub row2: T,
}

impl<T: DivisionRing> PairReport<T> {
    pub fn agree(&self) -> bool {
        self.row1 == self.row2
    }
}

/// Evaluates both expressions; fails if either is undefined.
pub fn qp_pair_check<T: DivisionRing>(a: &Mat2xN<T>, idx: QPIndex) -> Result<PairReport<T>> {
    Ok(PairReport {
        row1: qp_boxed(a, idx, BoxRow::First)?,
        row2: qp_boxed(a, idx, BoxRow::Second)?,
    })
}
