mod common;

use common::{mat2, mat2x4, rational};
use ncx_core::qplucker::QPTable;
use ncx_core::{qp, quasidet, BoxPosition, DivisionRing, Mat2, Mat2xN, QPIndex, Rational, Vec2};
use proptest::prelude::*;

proptest! {
    #[test]
    fn commutative_quasideterminant_is_determinant_over_cofactor(
        e in proptest::array::uniform4(rational()),
    ) {
        let [a11, a12, a21, a22] = e.clone();
        let m = Mat2::new(a11.clone(), a12.clone(), a21.clone(), a22.clone());
        let det = a11.mul(&a22).sub(&a12.mul(&a21));
        for pos in BoxPosition::ALL {
            let opposite = m.entry(2 - pos.row(), 2 - pos.col());
            let sign = if (pos.row() + pos.col()) % 2 == 0 { Rational::one() } else { Rational::one().neg() };
            match quasidet(&m, pos) {
                Ok(v) => prop_assert_eq!(v, sign.mul(&det).div_right(opposite).unwrap()),
                Err(_) => prop_assert!(opposite.is_zero()),
            }
        }
    }

    #[test]
    fn quasideterminant_inverts_inverse_entry(m in mat2()) {
        // |A|_{rc} = ((A⁻¹)_{cr})⁻¹ whenever both sides exist
        if let Ok(inv) = m.inverse() {
            for pos in BoxPosition::ALL {
                let entry = inv.entry(pos.col() - 1, pos.row() - 1);
                if let Ok(v) = quasidet(&m, pos) {
                    prop_assert_eq!(v.mul(entry), DivisionRing::one());
                }
            }
        }
    }

    #[test]
    fn shared_table_matches_single_coordinates(a in mat2x4()) {
        let table = QPTable::new(&a);
        for idx in QPIndex::all(4) {
            prop_assert_eq!(table.get(idx.k, idx.i, idx.j).cloned(), qp(&a, idx).ok());
        }
    }

    #[test]
    fn commutative_coordinates_are_minor_ratios(cols in proptest::array::uniform4((rational(), rational()))) {
        let a = Mat2xN::new(cols.iter().cloned().map(|(x, y)| Vec2::new(x, y)).collect()).unwrap();
        let p = |u: usize, v: usize| cols[u].0.mul(&cols[v].1).sub(&cols[v].0.mul(&cols[u].1));
        for idx in QPIndex::all(4) {
            match qp(&a, idx) {
                Ok(v) => prop_assert_eq!(v, p(idx.j, idx.k).div_right(&p(idx.i, idx.k)).unwrap()),
                Err(_) => prop_assert!(p(idx.i, idx.k).is_zero()),
            }
        }
    }
}

#[test]
fn worked_coordinate() {
    let r = |n: i64| Rational::from(n);
    let a = Mat2xN::from_rows(vec![r(1), r(0), r(1), r(3)], vec![r(0), r(1), r(1), r(1)]).unwrap();
    // columns x, y, z, t; q^y_{zt}
    assert_eq!(qp(&a, QPIndex::new(2, 3, 1).unwrap()).unwrap(), r(3));
}
