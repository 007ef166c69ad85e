use std::sync::OnceLock;

use hallalg::coeff::{CycloSqrt, SqrtExt};
use hallalg::fourier::{Character, Fourier, InvariantFunction, ReversalSpec};
use hallalg::hallcore::HallElement;
use hallalg::repengine::{DimVector, RepEngine};
use proptest::prelude::*;

struct Pair {
    forward: Fourier,
    back: Fourier,
}

fn pair(spec: ReversalSpec, q: u64) -> Pair {
    let forward = Fourier::new(spec.clone(), q, Character::Psi).unwrap();
    let back = Fourier::with_engines(spec.inverse(), forward.target().clone(), forward.source().clone(), Character::Conjugate)
        .unwrap();
    Pair { forward, back }
}

fn kronecker() -> &'static Pair {
    static P: OnceLock<Pair> = OnceLock::new();
    P.get_or_init(|| pair(ReversalSpec::kronecker_to_c2(), 2))
}

fn a2() -> &'static Pair {
    static P: OnceLock<Pair> = OnceLock::new();
    P.get_or_init(|| pair(ReversalSpec::a2(), 3))
}

fn int(n: i64) -> CycloSqrt {
    CycloSqrt::scalar(SqrtExt::from_int(n))
}

fn function(f: &Fourier, d: &DimVector, coeffs: &[i64]) -> InvariantFunction {
    let e = f.source().as_ref();
    let classes = e.classes(d).unwrap();
    let terms = classes.iter().zip(coeffs.iter().cycle()).map(|(k, &c)| (k.clone(), int(c)));
    InvariantFunction::new(e, d.clone(), HallElement::from_terms(e, terms)).unwrap()
}

fn case() -> impl Strategy<Value = (bool, DimVector, Vec<i64>, Vec<i64>, i64, i64)> {
    (any::<bool>(), 0u32..=2, 0u32..=2).prop_flat_map(|(k2, a, b)| {
        let v = prop::collection::vec(-3i64..=3, 1..6);
        (Just(k2), Just(DimVector(vec![a, b])), v.clone(), v, -4i64..=4, -4i64..=4)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transform_is_linear((k2, d, u, w, a, b) in case()) {
        let p = if k2 { kronecker() } else { a2() };
        let (f, g) = (function(&p.forward, &d, &u), function(&p.forward, &d, &w));
        let combo = f.element().scale(&int(a)).add(&g.element().scale(&int(b))).unwrap();
        let combo = InvariantFunction::new(p.forward.source(), d.clone(), combo).unwrap();
        let lhs = p.forward.transform(&combo).unwrap();
        let (tf, tg) = (p.forward.transform(&f).unwrap(), p.forward.transform(&g).unwrap());
        let rhs = tf.element().scale(&int(a)).add(&tg.element().scale(&int(b))).unwrap();
        prop_assert_eq!(lhs.element(), &rhs);
    }

    // The output is a function on target orbits of the same grade.
    #[test]
    fn transform_lands_in_target_grade((k2, d, u, _w, _a, _b) in case()) {
        let p = if k2 { kronecker() } else { a2() };
        let out = p.forward.transform(&function(&p.forward, &d, &u)).unwrap();
        prop_assert_eq!(out.grade(), &d);
        let dst = p.forward.target();
        for k in out.element().terms().keys() {
            prop_assert_eq!(dst.grade(k).unwrap(), d.clone());
        }
    }

    #[test]
    fn inverse_recovers_up_to_sign((k2, d, u, _w, _a, _b) in case()) {
        let p = if k2 { kronecker() } else { a2() };
        let f = function(&p.forward, &d, &u);
        let twice = p.back.transform(&p.forward.transform(&f).unwrap()).unwrap();
        for k in p.forward.source().classes(&d).unwrap().iter() {
            let (x, y) = (f.value(k), twice.value(k));
            prop_assert!(y == x || y == x.neg(), "{} vs {}", y, x);
        }
    }
}
