//! Homomorphism, character-sum and evaluation checks for the transform.

use crate::coeff::{quantum_factorial, CycloSqrt, Rational, SqrtExt};
use crate::error::{Error, Result};
use crate::gf::{Gf, Mat};
use crate::hallcore::{is_primitive, multiply, HallElement, Subcategory};
use crate::partitions::identities::xi_at;
use crate::primitives::kron_pk2;
use crate::report::{Check, VerificationReport};
use crate::repengine::{BruteEngine, ClassKey, DimVector, Quiver, RepEngine, RepPoint};

use super::transform::{lift, Character, Fourier, InvariantFunction, ReversalSpec};

type C = CycloSqrt;

fn v_pow(q: u64, k: i64) -> C {
    C::scalar(SqrtExt::v_pow(q, k))
}

fn int(n: i64) -> C {
    C::scalar(SqrtExt::from_int(n))
}

fn class_of(e: &BruteEngine, d: &[u32], mats: Vec<Mat>) -> Result<ClassKey> {
    e.identify(&RepPoint::new(e.quiver(), DimVector(d.to_vec()), mats)?)
}

/// `n x n` identity or zero blocks for two-vertex quivers.
fn block(n: usize, identity: bool) -> Mat {
    if identity {
        Mat::identity(n)
    } else {
        Mat::zero(n, n)
    }
}

/// `sum_{X in GL_n(F_q)} psi(tr X)`, by enumeration.
pub fn gl_character_sum(n: u32, q: u64) -> Result<C> {
    if n == 0 || n > 3 || q > 4 || (n == 3 && q > 2) {
        return Err(Error::CapExceeded(format!("GL_{n}(F_{q}) is outside the enumerable range")));
    }
    let gf = Gf::new(q)?;
    let n = n as usize;
    let entries = (n * n) as u32;
    let mut counts = vec![0i64; gf.p() as usize];
    for code in 0..q.pow(entries) {
        let mut rest = code;
        let data = (0..entries)
            .map(|_| {
                let d = (rest % q) as u8;
                rest /= q;
                d
            })
            .collect();
        let x = Mat::from_vec(n, n, data);
        if x.is_invertible(&gf) {
            counts[gf.trace(x.trace(&gf)) as usize] += 1;
        }
    }
    let mut acc = C::zero();
    for (t, &c) in counts.iter().enumerate() {
        acc = acc.try_add(&C::zeta_pow(gf.p(), t as i64)?.scale(&SqrtExt::from_int(c)))?;
    }
    Ok(acc)
}

/// The character sum against `(-1)^n q^(n(n-1)/2)`.
pub fn gl_character_sum_check(n: u32, q: u64) -> Result<VerificationReport> {
    Check::new("gl_character_sum").param("n", n).param("q", q).run(|| {
        let sum = gl_character_sum(n, q)?;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let expected = int(sign * (q as i64).pow(n * (n - 1) / 2));
        Ok((sum == expected, sum.to_string(), expected.to_string()))
    })
}

/// `Phi(f * g) = Phi(f) * Phi(g)` for all basis pairs at the given grades.
pub fn check_homomorphism(
    spec: &ReversalSpec,
    q0: u64,
    pairs: &[(DimVector, DimVector)],
) -> Result<VerificationReport> {
    let grades: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}x{b}")).collect();
    Check::new("fourier_homomorphism")
        .param("source", spec.source().name())
        .param("target", spec.target().name())
        .param("q", q0)
        .param("grades", grades.join(" "))
        .run(|| {
            let phi = Fourier::new(spec.clone(), q0, Character::Psi)?;
            let (src, dst) = (phi.source().as_ref(), phi.target().as_ref());
            let (mut tested, mut failed) = (0usize, Vec::new());
            for (d1, d2) in pairs {
                let (a, b) = (src.classes(d1)?, src.classes(d2)?);
                let images_a: Vec<_> = a.iter().map(|k| phi.apply(&HallElement::basis(src, k.clone()))).collect::<Result<_>>()?;
                let images_b: Vec<_> = b.iter().map(|k| phi.apply(&HallElement::basis(src, k.clone()))).collect::<Result<_>>()?;
                for (f, pf) in a.iter().zip(&images_a) {
                    for (g, pg) in b.iter().zip(&images_b) {
                        let fg = multiply(src, &HallElement::basis(src, f.clone()), &HallElement::basis(src, g.clone()))?;
                        let lhs = phi.apply(&fg)?;
                        let rhs = multiply(dst, pf, pg)?;
                        tested += 1;
                        if lhs != rhs {
                            failed.push(format!("{}*{}", src.render(f), src.render(g)));
                        }
                    }
                }
            }
            Ok((failed.is_empty(), format!("{tested} pairs, {} mismatches", failed.len()), failed.join(" ")))
        })
}

/// All ordered pairs of grades `<= bound` (componentwise).
pub fn grade_pairs_below(bound: &DimVector) -> Vec<(DimVector, DimVector)> {
    let below = bound.below();
    let mut out = Vec::new();
    for a in &below {
        for b in &below {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

/// `Phi([P_1]) = -v^-1 [P_2'] + (v - v^-1)[S_1' + S_2']` on `A_2`, also
/// reached through `v[S_1'][S_2'] - [S_2'][S_1']`.
pub fn a2_image_check(q0: u64) -> Result<VerificationReport> {
    Check::new("fourier_a2_image").param("q", q0).run(|| {
        let phi = Fourier::new(ReversalSpec::a2(), q0, Character::Psi)?;
        let (src, dst) = (phi.source().as_ref(), phi.target().as_ref());
        let p1 = class_of(src, &[1, 1], vec![block(1, true)])?;
        let image = phi.apply(&HallElement::basis(src, p1))?;
        let p2 = class_of(dst, &[1, 1], vec![block(1, true)])?;
        let split = class_of(dst, &[1, 1], vec![block(1, false)])?;
        let v = SqrtExt::v_pow(q0, 1);
        let expected = HallElement::from_terms(
            dst,
            [(p2, v_pow(q0, -1).neg()), (split, C::scalar(&v - &SqrtExt::v_pow(q0, -1)))],
        );
        let s1 = HallElement::basis(dst, class_of(dst, &[1, 0], vec![Mat::zero(1, 0)])?);
        let s2 = HallElement::basis(dst, class_of(dst, &[0, 1], vec![Mat::zero(0, 1)])?);
        let via_product = multiply(dst, &s1, &s2)?.scale(&C::scalar(v)).sub(&multiply(dst, &s2, &s1)?)?;
        let ok = image == expected && via_product == expected;
        Ok((ok, image.render(dst), expected.render(dst)))
    })
}

/// `(Phi([nP_1]))([nP_2']) = (-1)^n v^-n`, together with its character-sum
/// form `q^(-n^2/2) sum_{GL_n} psi(tr X)`.
pub fn np1_check(n: u32, q0: u64) -> Result<VerificationReport> {
    Check::new("fourier_np1").param("n", n).param("q", q0).run(|| {
        let phi = Fourier::new(ReversalSpec::a2(), q0, Character::Psi)?;
        let (src, dst) = (phi.source().as_ref(), phi.target().as_ref());
        let k = n as usize;
        let d = [n, n];
        let np1 = class_of(src, &d, vec![block(k, true)])?;
        let np2 = class_of(dst, &d, vec![block(k, true)])?;
        let f = phi.transform(&InvariantFunction::indicator(src, np1)?)?;
        let value = f.value(&np2);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let expected = v_pow(q0, -(n as i64)).scale(&SqrtExt::from_int(sign));
        let mut ok = value == expected;
        if let Ok(sum) = gl_character_sum(n, q0) {
            ok &= sum.scale(&SqrtExt::v_pow(q0, -((n * n) as i64))) == expected;
        }
        Ok((ok, value.to_string(), expected.to_string()))
    })
}

/// `[nP_1] = v^(-n(n-1)) / [n]! [P_1]^n` in the Hall algebra of `A_2`.
pub fn divided_power_check(n: u32, q0: u64) -> Result<VerificationReport> {
    Check::new("divided_power").param("n", n).param("q", q0).run(|| {
        let e = BruteEngine::new(Quiver::a2(), q0)?;
        let p1 = HallElement::<SqrtExt>::basis(&e, class_of(&e, &[1, 1], vec![block(1, true)])?);
        let mut power = HallElement::unit(&e);
        for _ in 0..n {
            power = multiply(&e, &power, &p1)?;
        }
        let factorial = quantum_factorial(n).eval_v(q0)?;
        let scale = SqrtExt::v_pow(q0, -((n * (n - 1)) as i64)) * factorial.inv()?;
        let lhs = power.scale(&scale);
        let k = n as usize;
        let rhs = HallElement::basis(&e, class_of(&e, &[n, n], vec![block(k, true)])?);
        Ok((lhs == rhs, lhs.render(&e), rhs.render(&e)))
    })
}

/// The two evaluations of `Phi(p_n^{K_2})` at `M_1 = nS_1[2]` and
/// `M_2 = nS_2[2]` in the full Hall algebra of `C_2`.
pub fn verify_lemma62_route(n: u32, q0: u64) -> Result<VerificationReport> {
    Check::new("m1_m2_route").param("n", n).param("q", q0).run(|| {
        if n == 0 || n > 2 {
            return Err(Error::CapExceeded(format!("n = {n} is outside 1..=2")));
        }
        let phi = Fourier::new(ReversalSpec::kronecker_to_c2(), q0, Character::Psi)?;
        let (src, dst) = (phi.source().as_ref(), phi.target().as_ref());
        let p = lift(src, &kron_pk2(src, n)?);
        let image = phi.apply(&p)?;
        let k = n as usize;
        let d = [n, n];
        let m1 = class_of(dst, &d, vec![block(k, true), block(k, false)])?;
        let m2 = class_of(dst, &d, vec![block(k, false), block(k, true)])?;
        let (at1, at2) = (image.coeff(&m1), image.coeff(&m2));

        let q = Rational::from_integer(q0.into());
        let qn = q.pow(n as i32);
        let gl: Rational = (0..n).map(|i| &qn - q.pow(i as i32)).product();
        let tail: Rational = (1..n).map(|i| &qn - q.pow(i as i32)).product();
        let (xi, _) = xi_at(n, q0)?;
        let norm = SqrtExt::v_pow(q0, -((n * n) as i64));
        let formula1 = C::scalar(&norm * &SqrtExt::rational(gl * xi));
        let formula2 = C::scalar(&norm * &SqrtExt::rational(tail));
        let ok = at1 == formula1 && at2 == formula2 && at1 == at2;
        Ok((ok, format!("M1: {at1}, M2: {at2}"), format!("M1: {formula1}, M2: {formula2}")))
    })
}

/// `Phi(p_n^{K_2})` is primitive in the full Hall algebra of `C_2`.
pub fn phi_pk2_primitive_check(n: u32, q0: u64) -> Result<VerificationReport> {
    Check::new("fourier_pk2_primitive").param("n", n).param("q", q0).run(|| {
        let phi = Fourier::new(ReversalSpec::kronecker_to_c2(), q0, Character::Psi)?;
        let (src, dst) = (phi.source().as_ref(), phi.target().as_ref());
        let image = phi.apply(&lift(src, &kron_pk2(src, n)?))?;
        let ok = !image.is_zero() && is_primitive(dst, &image, &Subcategory::All)?;
        Ok((ok, image.render(dst), "primitive".into()))
    })
}

/// Transforming with `psi` and back with the conjugate character returns
/// every basis function up to a sign.
pub fn plancherel_check(spec: &ReversalSpec, q0: u64, bound: &DimVector) -> Result<VerificationReport> {
    Check::new("fourier_plancherel")
        .param("source", spec.source().name())
        .param("q", q0)
        .param("bound", bound.to_string())
        .run(|| {
            let forward = Fourier::new(spec.clone(), q0, Character::Psi)?;
            let back = Fourier::with_engines(
                spec.inverse(),
                forward.target().clone(),
                forward.source().clone(),
                Character::Conjugate,
            )?;
            let src = forward.source().as_ref();
            let (mut tested, mut bad) = (0usize, Vec::new());
            for d in bound.below() {
                for k in src.classes(&d)?.iter() {
                    let f = InvariantFunction::indicator(src, k.clone())?;
                    let twice = back.transform(&forward.transform(&f)?)?;
                    let value = twice.value(k);
                    let rest = twice.element().terms().len();
                    tested += 1;
                    if !(rest == 1 && (value == C::one() || value == int(-1))) {
                        bad.push(src.render(k));
                    }
                }
            }
            Ok((bad.is_empty(), format!("{tested} basis functions, {} off", bad.len()), bad.join(" ")))
        })
}
