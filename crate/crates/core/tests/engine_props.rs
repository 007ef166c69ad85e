use std::sync::{Arc, OnceLock};

use hallalg::coeff::SqrtExt;
use hallalg::gf::{Gf, Mat};
use hallalg::hallcore::{multiply, HallElement};
use hallalg::repengine::{hall_number, hom_dim_points, BruteEngine, ClassKey, DimVector, Multisegment, NilCyclicEngine, Quiver, RepEngine, RepPoint};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_mat(rng: &mut ChaCha8Rng, gf: &Gf, rows: usize, cols: usize) -> Mat {
    Mat::from_vec(rows, cols, (0..rows * cols).map(|_| rng.gen_range(0..gf.q() as u8)).collect())
}

/// Random element of `G_V` and its inverse.
fn random_group_element(rng: &mut ChaCha8Rng, gf: &Gf, d: &DimVector) -> (Vec<Mat>, Vec<Mat>) {
    d.0.iter()
        .map(|&k| loop {
            let m = random_mat(rng, gf, k as usize, k as usize);
            if let Some(inv) = m.inverse(gf) {
                break (m, inv);
            }
        })
        .unzip()
}

fn random_point(rng: &mut ChaCha8Rng, quiver: &Quiver, gf: &Gf, d: &DimVector) -> RepPoint {
    let mats = quiver.arrows().iter().map(|&(t, h)| random_mat(rng, gf, d.0[h] as usize, d.0[t] as usize)).collect();
    RepPoint::new(quiver, d.clone(), mats).unwrap()
}

fn multisegment(r: usize, max_len: u32) -> impl Strategy<Value = Multisegment> {
    prop::collection::vec((0..r, 1..=max_len), 0..3).prop_map(move |segs| {
        let mut m = Multisegment::zero(r);
        for (i, l) in segs {
            m.add(i, l, 1);
        }
        m
    })
}

fn kronecker(q: u64) -> &'static BruteEngine {
    static K2: OnceLock<BruteEngine> = OnceLock::new();
    static K3: OnceLock<BruteEngine> = OnceLock::new();
    let cell = if q == 2 { &K2 } else { &K3 };
    cell.get_or_init(|| BruteEngine::new(Quiver::kronecker(), q).unwrap())
}

fn nilcyclic(r: usize) -> Arc<NilCyclicEngine> {
    Arc::new(NilCyclicEngine::new(r, 2).unwrap())
}

fn pick(e: &dyn RepEngine, d: &DimVector, i: usize) -> ClassKey {
    let cs = e.classes(d).unwrap();
    cs[i % cs.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn segment_type_is_orbit_invariant(q in prop::sample::select(vec![2u64, 3]), m in (1usize..=3).prop_flat_map(|r| multisegment(r, 3)), seed: u64) {
        let e = NilCyclicEngine::new(m.r(), q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = e.point_of(&m);
        let (g, gi) = random_group_element(&mut rng, e.gf(), x.dims());
        let y = x.act(e.quiver(), e.gf(), &g, &gi);
        prop_assert_eq!(e.multisegment_of(&y).unwrap(), m);
    }

    #[test]
    fn brute_class_is_orbit_invariant(q in prop::sample::select(vec![2u64, 3]), a in 0u32..=2, b in 0u32..=2, seed: u64) {
        let e = kronecker(q);
        let d = DimVector(vec![a, b]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_point(&mut rng, e.quiver(), e.gf(), &d);
        let (g, gi) = random_group_element(&mut rng, e.gf(), &d);
        let y = x.act(e.quiver(), e.gf(), &g, &gi);
        prop_assert_eq!(e.identify(&x).unwrap(), e.identify(&y).unwrap());
        prop_assert!(e.same_orbit(&x, &y).unwrap());
    }

    #[test]
    fn hom_rule_matches_linear_algebra(m in multisegment(3, 3), n in multisegment(3, 3)) {
        let e = NilCyclicEngine::new(3, 2).unwrap();
        let (x, y) = (e.point_of(&m), e.point_of(&n));
        prop_assert_eq!(m.hom_dim(&n) as usize, hom_dim_points(e.quiver(), e.gf(), &x, &y));
    }

    // Counting two-step filtrations L > X1 > X2 with factors M, N, P in either order.
    #[test]
    fn hall_numbers_associate(dm in 0usize..4, dn in 0usize..4, dp in 0usize..4, i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let e: &dyn RepEngine = kronecker(2);
        let grades = [DimVector(vec![1, 0]), DimVector(vec![0, 1]), DimVector(vec![1, 1]), DimVector(vec![0, 0])];
        let (gm, gn, gp) = (&grades[dm], &grades[dn], &grades[dp]);
        let (m, n, p) = (pick(e, gm, i), pick(e, gn, j), pick(e, gp, k));
        let gl = &(gm + gn) + gp;
        for l in e.classes(&gl).unwrap().iter() {
            let mut left = 0u64;
            for x in e.classes(&(gm + gn)).unwrap().iter() {
                left += hall_number(e, x, &m, &n).unwrap() * hall_number(e, l, x, &p).unwrap();
            }
            let mut right = 0u64;
            for y in e.classes(&(gn + gp)).unwrap().iter() {
                right += hall_number(e, l, &m, y).unwrap() * hall_number(e, y, &n, &p).unwrap();
            }
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn products_respect_grading(m in multisegment(2, 2), n in multisegment(2, 2)) {
        let e = nilcyclic(2);
        let x = HallElement::<SqrtExt>::basis(e.as_ref(), ClassKey::Seg(m.clone()));
        let y = HallElement::<SqrtExt>::basis(e.as_ref(), ClassKey::Seg(n.clone()));
        let xy = multiply(e.as_ref(), &x, &y).unwrap();
        prop_assert!(!xy.is_zero());
        let want = &m.grade() + &n.grade();
        for c in xy.terms().keys() {
            prop_assert_eq!(e.grade(c).unwrap(), want.clone());
        }
    }

    #[test]
    fn orbit_sizes_are_group_quotients(q in prop::sample::select(vec![2u64, 3]), a in 0u32..=2, b in 0u32..=2) {
        let e = kronecker(q);
        let d = DimVector(vec![a, b]);
        let total: u128 = e.classes(&d).unwrap().iter().map(|c| e.group_order(&d) / e.aut_order(c).unwrap()).sum();
        prop_assert_eq!(total, (q as u128).pow(2 * a * b));
    }
}
