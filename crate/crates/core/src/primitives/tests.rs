use super::*;
use crate::coeff::SqrtExt;
use crate::hallcore::{green_form, is_primitive, one_d, HallElement, Subcategory};
use crate::repengine::kronecker::ClosedPoint;
use crate::repengine::{BruteEngine, DimVector, NilCyclicEngine, Quiver, RepEngine as _};

type C = SqrtExt;

#[test]
fn p_jordan_small() {
    let e = NilCyclicEngine::new(1, 2).unwrap();
    let p1 = p_jordan(&e, 1).unwrap();
    assert_eq!(p1, HallElement::basis(&e, e.parse_class("S1[1]").unwrap()));
    let p2 = p_jordan(&e, 2).unwrap();
    assert_eq!(p2.coeff(&e.parse_class("S1[2]").unwrap()), C::one());
    assert_eq!(p2.coeff(&e.parse_class("2*S1[1]").unwrap()), C::from_int(-1));
    assert!(is_primitive(&e, &p2, &Subcategory::All).unwrap());
    let sym = p_jordan_symbolic(2).unwrap();
    assert_eq!(sym[1].1.to_string(), "-q + 1");
}

#[test]
fn c1_on_c2() {
    for q in [2i64, 3] {
        let e = NilCyclicEngine::new(2, q as u64).unwrap();
        let c1 = c_central(&e, 1).unwrap();
        let s = C::v_pow(q as u64, -4) * C::from_int(q - 1);
        assert_eq!(c1.coeff(&e.parse_class("S1[2]").unwrap()), s);
        assert_eq!(c1.coeff(&e.parse_class("S2[2]").unwrap()), s);
        assert_eq!(c1.coeff(&e.parse_class("S1[1]+S2[1]").unwrap()), s * C::from_int(1 - q));
        assert_eq!(x_element(&e, 1).unwrap(), c1);
    }
}

#[test]
fn x2_is_primitive() {
    let e = NilCyclicEngine::new(2, 2).unwrap();
    assert!(is_primitive(&e, &x_element(&e, 2).unwrap(), &Subcategory::All).unwrap());
}

#[test]
fn p1_r2_pairing_is_one_at_q2() {
    let e = NilCyclicEngine::new(2, 2).unwrap();
    let p = p_cyclic(&e, 1).unwrap();
    let one = one_d(&e, &DimVector::delta(2, 1)).unwrap();
    assert_eq!(green_form(&e, &p, &one).unwrap(), C::one());
}

#[test]
fn key_pairing_examples() {
    assert!(verify_key_pairing(2, 1, 2).unwrap().passed());
    let r = verify_key_pairing(1, 2, 2).unwrap();
    assert!(r.passed());
    assert_eq!(r.lhs, "1/3");
    assert!(verify_key_pairing(3, 1, 2).unwrap().passed());
}

#[test]
fn tube_elements() {
    let e = BruteEngine::new(Quiver::kronecker(), 2).unwrap();
    let x = ClosedPoint::zero();
    let p1 = p_tube(&e, &x, 1).unwrap();
    assert_eq!(p1.terms().len(), 1);
    let p2 = p_tube(&e, &x, 2).unwrap();
    assert_eq!(p2.terms().values().filter(|c| **c == C::from_int(-1)).count(), 1);
    assert!(is_primitive(&e, &p2, &Subcategory::Tube(x.clone())).unwrap());
    // {p_1(x), 1^reg} = 1/(q-1)
    let reg = crate::hallcore::one_reg::<C>(&e, 1).unwrap();
    assert_eq!(green_form(&e, &p1, &reg).unwrap(), C::one());
    let pk = kron_pk2(&e, 1).unwrap();
    assert!(is_primitive(&e, &pk, &Subcategory::All).unwrap());
    assert!(kron_pairing_check(1, 3).unwrap().passed());
}

#[test]
fn identities_reports() {
    assert!(verify_xi_identity(2).unwrap().passed());
    assert!(verify_hua_identities(3).unwrap().passed());
    let r = verify_xi_identity(1).unwrap();
    assert_eq!(r.lhs, r.rhs);
}

#[test]
fn kronecker_checks_at_delta() {
    let r = theorem1_check(1, 2).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.lhs.starts_with("dim P=2, dim R=3"));
    let r = theorem2_basis(1, 3, &ClosedPoint::zero()).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.lhs.starts_with("3 differences"));
}

#[test]
fn spec_family_parsing() {
    let spec = PrimitiveSpec { family: Family::parse("kron_pk2").unwrap(), r: 1, n: 1, point: None, q0: 3 };
    assert!(primitive_check(&spec).unwrap().passed());
    let bad = PrimitiveSpec { family: Family::CyclicCn, r: 1, n: 1, point: None, q0: 2 };
    assert!(bad.build().is_err());
    assert!(Family::parse("nope").is_err());
}

#[test]
fn a_lambda_small() {
    assert!(a_lambda_check(2, 3).unwrap().passed());
}
