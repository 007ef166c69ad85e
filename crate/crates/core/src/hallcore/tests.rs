use super::*;
use crate::coeff::rational::ratio;
use crate::coeff::{Coeff, SqrtExt};
use crate::repengine::kronecker::is_regular;
use crate::repengine::{BruteEngine, ClassKey, DimVector, Multisegment, NilCyclicEngine, Quiver, RepEngine};

type C = SqrtExt;

fn seg(e: &NilCyclicEngine, s: &str) -> HallElement<C> {
    HallElement::basis(e, e.parse_class(s).unwrap())
}

fn key(e: &NilCyclicEngine, s: &str) -> ClassKey {
    e.parse_class(s).unwrap()
}

#[test]
fn product_of_simples_on_c2() {
    let e = NilCyclicEngine::new(2, 2).unwrap();
    let p = multiply(&e, &seg(&e, "S1[1]"), &seg(&e, "S2[1]")).unwrap();
    let vinv = SqrtExt::v_pow(2, -1);
    let expected = HallElement::from_terms(&e, [(key(&e, "S1[1]+S2[1]"), vinv.clone()), (key(&e, "S1[2]"), vinv)]);
    assert_eq!(p, expected);
}

#[test]
fn unit_and_square_of_simple() {
    for q in [2u64, 3] {
        let e = NilCyclicEngine::new(1, q).unwrap();
        let s = seg(&e, "S1[1]");
        assert_eq!(multiply(&e, &s, &HallElement::unit(&e)).unwrap(), s);
        let sq = multiply(&e, &s, &s).unwrap();
        assert_eq!(sq.coeff(&key(&e, "2*S1[1]")), C::from_int(q as i64 + 1));
        assert_eq!(sq.coeff(&key(&e, "S1[2]")), C::one());
        assert_eq!(sq.terms().len(), 2);
    }
}

#[test]
fn coproduct_examples() {
    let e = NilCyclicEngine::new(1, 2).unwrap();
    let d = comultiply(&e, &seg(&e, "S1[2]")).unwrap();
    let (s, z, s2) = (key(&e, "S1[1]"), key(&e, "0"), key(&e, "S1[2]"));
    assert_eq!(d.coeff(&s, &s), C::rational(ratio(1, 2)));
    assert_eq!(d.coeff(&s2, &z), C::one());
    assert_eq!(d.coeff(&z, &s2), C::one());
    assert_eq!(d.terms().len(), 3);

    let z = HallElement::<C>::unit(&e);
    assert_eq!(comultiply(&e, &z).unwrap(), TensorElement::tensor(&z, &z).unwrap());

    let e = NilCyclicEngine::new(2, 3).unwrap();
    let d = comultiply(&e, &seg(&e, "S1[1]+S2[1]")).unwrap();
    let vinv = SqrtExt::v_pow(3, -1);
    assert_eq!(d.coeff(&key(&e, "S1[1]"), &key(&e, "S2[1]")), vinv);
    assert_eq!(d.coeff(&key(&e, "S2[1]"), &key(&e, "S1[1]")), vinv);
}

#[test]
fn green_form_and_units() {
    let e = NilCyclicEngine::new(2, 2).unwrap();
    let m = seg(&e, "S1[1]+S2[1]");
    assert_eq!(green_form(&e, &m, &m).unwrap(), C::rational(ratio(1, 1)));
    assert!(green_form(&e, &m, &seg(&e, "S1[2]")).unwrap().is_zero());
    let one: HallElement<C> = one_d(&e, &DimVector(vec![1, 1])).unwrap();
    assert_eq!(one.terms().len(), 3);
    assert_eq!(one_d::<C>(&e, &DimVector(vec![0, 0])).unwrap(), HallElement::unit(&e));

    let k = BruteEngine::new(Quiver::kronecker(), 2).unwrap();
    let reg: HallElement<C> = one_reg(&k, 1).unwrap();
    assert_eq!(reg.terms().len(), 3);
    // a regular simple of degree one has a_E = q - 1
    let ex = HallElement::basis(&k, reg.terms().keys().next().unwrap().clone());
    assert_eq!(green_form(&k, &ex, &reg).unwrap(), C::one());
}

#[test]
fn primitivity_examples() {
    for q in [2i64, 3] {
        let e = NilCyclicEngine::new(1, q as u64).unwrap();
        let p2 = seg(&e, "S1[2]").add(&seg(&e, "2*S1[1]").scale(&C::from_int(1 - q))).unwrap();
        assert!(is_primitive(&e, &p2, &Subcategory::All).unwrap());
        assert!(is_primitive(&e, &seg(&e, "S1[1]"), &Subcategory::All).unwrap());
    }
    let e = NilCyclicEngine::new(2, 2).unwrap();
    assert!(!is_primitive(&e, &seg(&e, "S1[1]+S2[1]"), &Subcategory::All).unwrap());
    let mixed = seg(&e, "S1[1]").add(&seg(&e, "S1[2]")).unwrap();
    assert!(is_primitive(&e, &mixed, &Subcategory::All).is_err());
}

#[test]
fn primitive_subspace_dimensions() {
    let k = BruteEngine::new(Quiver::kronecker(), 2).unwrap();
    let delta = DimVector(vec![1, 1]);
    assert_eq!(primitive_subspace::<C>(&k, &delta, &Subcategory::All).unwrap().len(), 2);
    assert_eq!(primitive_subspace::<C>(&k, &DimVector(vec![1, 0]), &Subcategory::All).unwrap().len(), 1);

    let e = NilCyclicEngine::new(2, 2).unwrap();
    let p = primitive_subspace::<C>(&e, &delta, &Subcategory::All).unwrap();
    assert_eq!(p.len(), 1);
    // spanned by [S1[2]] + [S2[2]] - (q-1)[S1+S2]
    let x = &p[0];
    let a = x.coeff(&key(&e, "S1[2]"));
    assert_eq!(x.coeff(&key(&e, "S2[2]")), a);
    assert_eq!(x.coeff(&key(&e, "S1[1]+S2[1]")), a.neg_ref());
}

#[test]
fn kronecker_primitives_live_on_regulars() {
    for (q, n) in [(2u64, 1u32), (3, 1), (2, 2)] {
        let k = BruteEngine::new(Quiver::kronecker(), q).unwrap();
        for x in primitive_subspace::<C>(&k, &DimVector(vec![n, n]), &Subcategory::All).unwrap() {
            for c in x.terms().keys() {
                assert!(is_regular(&k, c).unwrap());
            }
            // {p, 1_d} = 0 for full primitives
            let one = one_d::<C>(&k, &DimVector(vec![n, n])).unwrap();
            assert!(green_form(&k, &x, &one).unwrap().is_zero());
        }
    }
}

#[test]
fn restricted_coproduct_is_filtered_full_coproduct() {
    let k = BruteEngine::new(Quiver::kronecker(), 2).unwrap();
    for c in k.classes(&DimVector(vec![2, 2])).unwrap().iter() {
        if !is_regular(&k, c).unwrap() {
            continue;
        }
        let x = HallElement::<C>::basis(&k, c.clone());
        let full = comultiply(&k, &x).unwrap();
        let restricted = comultiply_in(&k, &x, &Subcategory::Regular).unwrap();
        let mut filtered = TensorElement::zero(&k);
        for ((a, b), v) in full.terms() {
            if is_regular(&k, a).unwrap() && is_regular(&k, b).unwrap() {
                filtered.add_term(a.clone(), b.clone(), v);
            }
        }
        assert_eq!(restricted, filtered);
    }
}

#[test]
fn restriction_commutes_with_products() {
    // regulars are extension closed, so products of regulars stay regular
    let k = BruteEngine::new(Quiver::kronecker(), 2).unwrap();
    let regs: Vec<_> = crate::repengine::kronecker::regular_classes(&k, 1).unwrap();
    for a in &regs {
        for b in &regs {
            let p = multiply(&k, &HallElement::<C>::basis(&k, a.clone()), &HallElement::basis(&k, b.clone())).unwrap();
            assert!(p.terms().keys().all(|c| is_regular(&k, c).unwrap()));
        }
    }
}

#[test]
fn small_bialgebra_checks() {
    let e = NilCyclicEngine::new(1, 2).unwrap();
    assert!(adjointness_check(&e, 3).unwrap().passed());
    let e = NilCyclicEngine::new(2, 2).unwrap();
    assert!(adjointness_check(&e, 4).unwrap().passed());
    assert!(associativity_check(&e, 3).unwrap().passed());
    assert!(coassociativity_check(&e, 3).unwrap().passed());
}

#[test]
fn engine_mismatch_is_an_error() {
    let a = NilCyclicEngine::new(1, 2).unwrap();
    let b = NilCyclicEngine::new(1, 3).unwrap();
    let x = HallElement::<C>::basis(&a, ClassKey::Seg(Multisegment::segment(1, 0, 1)));
    assert!(multiply(&b, &x, &x).is_err());
}

#[test]
fn json_rendering() {
    let e = NilCyclicEngine::new(2, 2).unwrap();
    let x = seg(&e, "S1[2]").add(&seg(&e, "S1[1]+S2[1]").scale(&C::from_int(-1))).unwrap();
    let j = x.to_json(&e).to_string();
    assert_eq!(j, r#"{"grade":[1,1],"terms":[{"class":"S1[1]+S2[1]","coeff":"-1"},{"class":"S1[2]","coeff":"1"}]}"#);
}
