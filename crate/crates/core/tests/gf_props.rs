use std::sync::Arc;

use hallalg::coeff::CycloSqrt;
use hallalg::gf::{additive_character, enumerate, gl_order, FieldElem, FieldSpec, Gf, Mat};
use proptest::prelude::*;

const ORDERS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

#[test]
fn character_is_additive_exhaustively() {
    for q in ORDERS {
        let spec = Arc::new(FieldSpec::from_order(q).unwrap());
        let all = enumerate(&spec).unwrap();
        for x in &all {
            let px = additive_character(x).unwrap();
            for y in &all {
                let lhs = additive_character(&x.add(y).unwrap()).unwrap();
                let rhs = px.try_mul(&additive_character(y).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "q = {q}, x = {x}, y = {y}");
            }
        }
    }
}

#[test]
fn tables_agree_with_polynomial_arithmetic() {
    for q in ORDERS {
        let gf = Gf::new(q).unwrap();
        let spec = gf.spec().clone();
        for a in 0..q as u8 {
            let x = FieldElem::from_code(spec.clone(), a as u64);
            for b in 0..q as u8 {
                let y = FieldElem::from_code(spec.clone(), b as u64);
                assert_eq!(gf.add(a, b) as u64, x.add(&y).unwrap().code());
                assert_eq!(gf.mul(a, b) as u64, x.mul(&y).unwrap().code());
            }
        }
    }
}

#[test]
fn frobenius_fixes_the_field() {
    for q in ORDERS {
        let spec = Arc::new(FieldSpec::from_order(q).unwrap());
        for x in enumerate(&spec).unwrap() {
            assert_eq!(x.pow(q), x);
        }
    }
}

fn mat(q: u64, rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(0..q as u8, rows * cols).prop_map(move |d| Mat::from_vec(rows, cols, d))
}

fn field_and_mats() -> impl Strategy<Value = (u64, Mat, Mat, Mat)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(|q| (Just(q), mat(q, 3, 2), mat(q, 2, 4), mat(q, 4, 3)))
}

proptest! {
    #[test]
    fn matrix_product_associates((q, a, b, c) in field_and_mats()) {
        let gf = Gf::new(q).unwrap();
        prop_assert_eq!(a.mul(&gf, &b).mul(&gf, &c), a.mul(&gf, &b.mul(&gf, &c)));
    }

    #[test]
    fn rank_nullity((q, a, b, _) in field_and_mats()) {
        let gf = Gf::new(q).unwrap();
        let ab = a.mul(&gf, &b);
        prop_assert_eq!(ab.rank(&gf) + ab.kernel(&gf).rows(), ab.cols());
        prop_assert!(ab.rank(&gf) <= a.rank(&gf).min(b.rank(&gf)));
        prop_assert_eq!(ab.transpose().rank(&gf), ab.rank(&gf));
    }

    #[test]
    fn kernel_vectors_vanish((q, _, b, _) in field_and_mats()) {
        let gf = Gf::new(q).unwrap();
        let k = b.kernel(&gf);
        for r in 0..k.rows() {
            prop_assert!(b.apply(&gf, k.row(r)).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn inverse_is_two_sided(q in prop::sample::select(ORDERS.to_vec()), d in prop::collection::vec(0u8..9, 9)) {
        let gf = Gf::new(q).unwrap();
        let m = Mat::from_vec(3, 3, d.into_iter().map(|x| x % q as u8).collect());
        match m.inverse(&gf) {
            Some(inv) => {
                prop_assert_eq!(m.mul(&gf, &inv), Mat::identity(3));
                prop_assert_eq!(inv.mul(&gf, &m), Mat::identity(3));
            }
            None => prop_assert!(m.rank(&gf) < 3),
        }
    }

    #[test]
    fn trace_of_sum(q in prop::sample::select(ORDERS.to_vec()), a in prop::collection::vec(0u8..9, 4), b in prop::collection::vec(0u8..9, 4)) {
        let gf = Gf::new(q).unwrap();
        let red = |v: Vec<u8>| Mat::from_vec(2, 2, v.into_iter().map(|x| x % q as u8).collect());
        let (a, b) = (red(a), red(b));
        prop_assert_eq!(a.add(&gf, &b).trace(&gf), gf.add(a.trace(&gf), b.trace(&gf)));
        prop_assert_eq!(a.mul(&gf, &b).trace(&gf), b.mul(&gf, &a).trace(&gf));
    }
}

#[test]
fn gl2_count_matches_enumeration() {
    for q in [2u64, 3, 4] {
        let gf = Gf::new(q).unwrap();
        let mut n = 0u128;
        for code in 0..q.pow(4) {
            let d = (0..4).map(|i| ((code / q.pow(i)) % q) as u8).collect();
            if Mat::from_vec(2, 2, d).is_invertible(&gf) {
                n += 1;
            }
        }
        assert_eq!(n, gl_order(2, q));
    }
}

#[test]
fn character_sum_over_field_vanishes() {
    for q in ORDERS {
        let spec = Arc::new(FieldSpec::from_order(q).unwrap());
        let vals: Vec<CycloSqrt> = enumerate(&spec).unwrap().iter().map(|x| additive_character(x).unwrap()).collect();
        assert!(CycloSqrt::sum(&vals).unwrap().is_zero());
    }
}
