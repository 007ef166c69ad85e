//! Krull-Schmidt decomposition through endomorphisms.
//!
//! An endomorphism `phi` that is neither nilpotent nor invertible splits a
//! representation as `im phi^N + ker phi^N` (Fitting). If none exists the
//! endomorphism ring is local and the representation is indecomposable.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::gf::{Gf, Mat, Subspace};

use super::engine::{ClassKey, Decomposition, RepEngine};
use super::point::{hom_space, RepPoint};

/// Exhaustive search over `End` when it has at most this many elements.
pub const EXHAUSTIVE_END_LIMIT: u64 = 1 << 16;
/// Random samples drawn from larger endomorphism rings.
pub const END_SAMPLES: usize = 8192;

type Endo = Vec<Mat>;

fn combine(gf: &Gf, basis: &[Endo], coeffs: &[u8]) -> Endo {
    let mut out: Endo = basis[0].iter().map(|m| Mat::zero(m.rows(), m.cols())).collect();
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            for (o, m) in out.iter_mut().zip(b) {
                *o = o.add(gf, &m.scale(gf, c));
            }
        }
    }
    out
}

fn is_splitting(gf: &Gf, phi: &Endo) -> bool {
    let nil = phi.iter().all(|m| m.is_nilpotent(gf));
    let inv = phi.iter().all(|m| m.is_invertible(gf));
    !nil && !inv
}

fn find_splitting(gf: &Gf, basis: &[Endo], seed: u64) -> Option<Endo> {
    let q = gf.q() as u64;
    let k = basis.len();
    let total = q.checked_pow(k as u32).filter(|&t| t <= EXHAUSTIVE_END_LIMIT);
    if let Some(total) = total {
        for mut code in 1..total {
            let coeffs: Vec<u8> = (0..k)
                .map(|_| {
                    let c = (code % q) as u8;
                    code /= q;
                    c
                })
                .collect();
            let phi = combine(gf, basis, &coeffs);
            if is_splitting(gf, &phi) {
                return Some(phi);
            }
        }
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // basis elements first: idempotent-like ones are common in practice
    for b in basis {
        if is_splitting(gf, b) {
            return Some(b.clone());
        }
    }
    (0..END_SAMPLES).find_map(|_| {
        let coeffs: Vec<u8> = (0..k).map(|_| rng.gen_range(0..q) as u8).collect();
        let phi = combine(gf, basis, &coeffs);
        is_splitting(gf, &phi).then_some(phi)
    })
}

/// `(im phi^N, ker phi^N)` as subspace families.
fn fitting(gf: &Gf, x: &RepPoint, phi: &Endo) -> (Vec<Subspace>, Vec<Subspace>) {
    let n = x.dims().total();
    let powered: Vec<Mat> = phi.iter().map(|m| m.pow(gf, n)).collect();
    let im = powered.iter().map(|m| Subspace::from_rref(m.image(gf), gf)).collect();
    let ker = powered.iter().map(|m| Subspace::from_rref(m.kernel(gf), gf)).collect();
    (im, ker)
}

fn stable_seed(s: &str) -> u64 {
    s.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

pub fn decompose_generic<E: RepEngine + ?Sized>(e: &E, c: &ClassKey) -> Result<Decomposition> {
    let x = e.representative(c)?;
    if x.dims().is_zero() {
        return Ok(Vec::new());
    }
    let (quiver, gf) = (e.quiver(), e.gf());
    let basis = hom_space(quiver, gf, &x, &x);
    let Some(phi) = find_splitting(gf, &basis, stable_seed(&e.render(c))) else {
        return Ok(vec![(c.clone(), 1)]);
    };
    let (im, ker) = fitting(gf, &x, &phi);
    let mut parts: BTreeMap<ClassKey, u32> = BTreeMap::new();
    for family in [im, ker] {
        let sub = x.sub_point(quiver, gf, &family).expect("Fitting summands are subrepresentations");
        let key = e.identify(&sub)?;
        for (k, m) in e.decompose(&key)?.iter() {
            *parts.entry(k.clone()).or_insert(0) += m;
        }
    }
    Ok(parts.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repengine::{BruteEngine, DimVector, Quiver};

    #[test]
    fn kronecker_indecomposables_in_delta() {
        // at (1,1) over F_2: three regular simples and one decomposable
        let e = BruteEngine::new(Quiver::kronecker(), 2).unwrap();
        let d = DimVector(vec![1, 1]);
        let n = e
            .classes(&d)
            .unwrap()
            .iter()
            .filter(|c| crate::repengine::is_indecomposable(&e, c).unwrap())
            .count();
        assert_eq!(n, 3);
    }

    #[test]
    fn summands_add_up() {
        let e = BruteEngine::new(Quiver::a2(), 3).unwrap();
        let d = DimVector(vec![2, 2]);
        for c in e.classes(&d).unwrap().iter() {
            let parts = e.decompose(c).unwrap();
            let mut sum = DimVector::zero(2);
            for (k, m) in parts.iter() {
                for _ in 0..*m {
                    sum = &sum + &e.grade(k).unwrap();
                }
                assert!(crate::repengine::is_indecomposable(&e, k).unwrap());
            }
            assert_eq!(sum, d);
        }
    }
}
