use super::*;
use crate::coeff::{CycloSqrt, SqrtExt};
use crate::repengine::{DimVector, RepEngine};

#[test]
fn zero_function_maps_to_zero() {
    let phi = Fourier::new(ReversalSpec::a2(), 2, Character::Psi).unwrap();
    let f = InvariantFunction::zero(phi.source(), DimVector(vec![1, 1]));
    assert!(phi.transform(&f).unwrap().element().is_zero());
}

#[test]
fn reversal_names() {
    assert_eq!(ReversalSpec::a2().target().name(), "A2op");
    assert_eq!(ReversalSpec::kronecker_to_c2().target().name(), "C2");
    assert_eq!(ReversalSpec::kronecker_to_c2().inverse().target().name(), "K2");
    assert!(ReversalSpec::new(crate::repengine::Quiver::a2(), vec![3]).is_err());
}

#[test]
fn simples_are_fixed() {
    let phi = Fourier::new(ReversalSpec::kronecker_to_c2(), 3, Character::Psi).unwrap();
    for d in [vec![1, 0], vec![0, 1]] {
        let d = DimVector(d);
        let k = phi.source().classes(&d).unwrap()[0].clone();
        let img = phi.transform(&InvariantFunction::indicator(phi.source(), k).unwrap()).unwrap();
        let t = phi.target().classes(&d).unwrap()[0].clone();
        assert_eq!(img.value(&t), CycloSqrt::one());
    }
}

#[test]
fn gl_sums() {
    assert_eq!(gl_character_sum(1, 3).unwrap(), CycloSqrt::scalar(SqrtExt::from_int(-1)));
    assert_eq!(gl_character_sum(2, 2).unwrap(), CycloSqrt::scalar(SqrtExt::from_int(2)));
    assert_eq!(gl_character_sum(2, 3).unwrap(), CycloSqrt::scalar(SqrtExt::from_int(3)));
    assert!(gl_character_sum(3, 3).is_err());
    for (n, q) in [(1, 2), (1, 4), (3, 2)] {
        assert!(gl_character_sum_check(n, q).unwrap().passed());
    }
}

#[test]
fn a2_examples() {
    for q in [2, 3] {
        let r = a2_image_check(q).unwrap();
        assert!(r.passed(), "{r}");
        for n in 1..=2 {
            let r = np1_check(n, q).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
    for n in 1..=3 {
        assert!(divided_power_check(n, 2).unwrap().passed());
    }
}

#[test]
fn homomorphism_small() {
    let d = |v: &[u32]| DimVector(v.to_vec());
    let r = check_homomorphism(&ReversalSpec::a2(), 2, &[(d(&[1, 0]), d(&[0, 1])), (d(&[0, 0]), d(&[1, 1]))]).unwrap();
    assert!(r.passed(), "{r}");
    let r = check_homomorphism(&ReversalSpec::kronecker_to_c2(), 2, &[(d(&[1, 0]), d(&[0, 1]))]).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn m1_m2_route_and_primitivity() {
    for q in [2, 3] {
        let r = verify_lemma62_route(1, q).unwrap();
        assert!(r.passed(), "{r}");
    }
    assert!(phi_pk2_primitive_check(1, 2).unwrap().passed());
}

#[test]
fn round_trip_signs() {
    let r = plancherel_check(&ReversalSpec::a2(), 3, &DimVector(vec![1, 1])).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn json_shape() {
    let phi = Fourier::new(ReversalSpec::a2(), 3, Character::Psi).unwrap();
    let k = phi.source().classes(&DimVector(vec![1, 1])).unwrap()[1].clone();
    let img = phi.transform(&InvariantFunction::indicator(phi.source(), k).unwrap()).unwrap();
    let j = img.to_json(phi.target().as_ref());
    assert_eq!(j["grade"], serde_json::json!([1, 1]));
    assert!(j["terms"][0]["coeff"]["a"].is_array());
}
