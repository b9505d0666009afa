//! The four quasideterminants of a 2×2 matrix.
//!
//! For `[[a11, a12], [a21, a22]]` the quasideterminant boxed at `(r, c)` is
//! the boxed entry minus (same row, other column) · (opposite corner)⁻¹ ·
//! (other row, same column). It is defined exactly when the opposite corner
//! is nonzero. Each position is written out on its own.

use crate::error::{Blame, Error, Result};
use crate::linalg::Mat2;
use crate::scalars::DivisionRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoxPosition {
    R1C1,
    R1C2,
    R2C1,
    R2C2,
}

impl BoxPosition {
    pub const ALL: [BoxPosition; 4] = [
        BoxPosition::R1C1,
        BoxPosition::R1C2,
        BoxPosition::R2C1,
        BoxPosition::R2C2,
    ];

    /// One-based row and column.
    pub fn new(row: usize, col: usize) -> Result<Self> {
        match (row, col) {
            (1, 1) => Ok(BoxPosition::R1C1),
            (1, 2) => Ok(BoxPosition::R1C2),
            (2, 1) => Ok(BoxPosition::R2C1),
            (2, 2) => Ok(BoxPosition::R2C2),
            _ => Err(Error::InvalidIndex(format!(
                "box position ({row},{col}) is not in a 2x2 matrix"
            ))),
        }
    }

    pub fn row(self) -> usize {
        match self {
            BoxPosition::R1C1 | BoxPosition::R1C2 => 1,
            _ => 2,
        }
    }

    pub fn col(self) -> usize {
        match self {
            BoxPosition::R1C1 | BoxPosition::R2C1 => 1,
            _ => 2,
        }
    }
}

fn undefined(pos: BoxPosition) -> Error {
    Error::Undefined(Blame::new("quasidet", "").at(pos))
}

pub fn quasidet<T: DivisionRing>(m: &Mat2<T>, pos: BoxPosition) -> Result<T> {
    let Mat2 { a11, a12, a21, a22 } = m;
    match pos {
        BoxPosition::R1C1 => {
            let inv = a22.inv().map_err(|_| undefined(pos))?;
            Ok(a11.sub(&a12.mul(&inv).mul(a21)))
        }
        BoxPosition::R1C2 => {
            let inv = a21.inv().map_err(|_| undefined(pos))?;
            Ok(a12.sub(&a11.mul(&inv).mul(a22)))
        }
        BoxPosition::R2C1 => {
            let inv = a12.inv().map_err(|_| undefined(pos))?;
            Ok(a21.sub(&a22.mul(&inv).mul(a11)))
        }
        BoxPosition::R2C2 => {
            let inv = a11.inv().map_err(|_| undefined(pos))?;
            Ok(a22.sub(&a21.mul(&inv).mul(a12)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Quaternion, Rational};

    fn rm(a: i64, b: i64, c: i64, d: i64) -> Mat2<Rational> {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    #[test]
    fn identity_box_11() {
        assert_eq!(quasidet(&rm(1, 0, 0, 1), BoxPosition::R1C1).unwrap(), Rational::one());
    }

    #[test]
    fn rational_box_12() {
        // 2 − 1·3⁻¹·4
        assert_eq!(
            quasidet(&rm(1, 2, 3, 4), BoxPosition::R1C2).unwrap(),
            Rational::new(2, 3).unwrap()
        );
    }

    #[test]
    fn dependent_quaternion_columns() {
        // i − j·1⁻¹·k = i − i
        let m = Mat2::new(Quaternion::i(), Quaternion::j(), Quaternion::k(), Quaternion::one());
        assert!(quasidet(&m, BoxPosition::R1C1).unwrap().is_zero());
        // the other three positions are defined and vanish too
        for pos in [BoxPosition::R1C2, BoxPosition::R2C1, BoxPosition::R2C2] {
            assert!(quasidet(&m, pos).unwrap().is_zero(), "{pos:?}");
        }
    }

    #[test]
    fn undefined_reports_position() {
        let m = rm(1, 2, 3, 0);
        match quasidet(&m, BoxPosition::R1C1) {
            Err(Error::Undefined(b)) => assert_eq!(b.position, Some(BoxPosition::R1C1)),
            other => panic!("expected Undefined, got {other:?}"),
        }
        // the opposite box inverts a11 and is fine
        assert!(quasidet(&m, BoxPosition::R2C2).is_ok());
    }

    #[test]
    fn position_bounds() {
        assert!(BoxPosition::new(3, 1).is_err());
        for p in BoxPosition::ALL {
            assert_eq!(BoxPosition::new(p.row(), p.col()).unwrap(), p);
        }
    }
}
