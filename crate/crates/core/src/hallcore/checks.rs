//! Exhaustive bialgebra checks on basis elements.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::coeff::{Coeff, SqrtExt};
use crate::error::Result;
use crate::report::{Check, VerificationReport};
use crate::repengine::{ClassKey, DimVector, RepEngine};

use super::element::{HallElement, TensorElement};
use super::ops::{comultiply, green_form, green_form_tensor, multiply};

type C = SqrtExt;

/// All dimension vectors with `nv` entries and total at most `max_total`.
pub fn grades_up_to(nv: usize, max_total: u32) -> Vec<DimVector> {
    fn rec(nv: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<DimVector>) {
        if cur.len() == nv {
            out.push(DimVector(cur.clone()));
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(nv, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nv, max_total, &mut Vec::new(), &mut out);
    out
}

fn classes_by_grade(e: &dyn RepEngine, max_total: u32) -> Result<Vec<(DimVector, Vec<ClassKey>)>> {
    grades_up_to(e.quiver().vertices(), max_total)
        .into_iter()
        .map(|d| Ok((d.clone(), e.classes(&d)?.to_vec())))
        .collect()
}

fn basis(e: &dyn RepEngine, c: &ClassKey) -> HallElement<C> {
    HallElement::basis(e, c.clone())
}

fn summary(check: &str, e: &dyn RepEngine, max_total: u32, outcomes: Vec<Option<String>>) -> Result<VerificationReport> {
    let total = outcomes.len();
    let failures: Vec<String> = outcomes.into_iter().flatten().collect();
    Check::new(check).param("engine", e.id()).param("max_total_dim", max_total).run(|| {
        let lhs = match failures.first() {
            Some(f) => format!("{} of {total} cases fail; first: {f}", failures.len()),
            None => format!("{total} cases hold"),
        };
        Ok((failures.is_empty(), lhs, format!("{total} cases")))
    })
}

/// `(ab)c = a(bc)` for all basis triples of total dimension at most `max_total`.
pub fn associativity_check(e: &dyn RepEngine, max_total: u32) -> Result<VerificationReport> {
    let by_grade = classes_by_grade(e, max_total)?;
    let mut triples = Vec::new();
    for (g1, c1) in &by_grade {
        for (g2, c2) in &by_grade {
            for (g3, c3) in &by_grade {
                if g1.total() + g2.total() + g3.total() > max_total {
                    continue;
                }
                for a in c1 {
                    for b in c2 {
                        for c in c3 {
                            triples.push((a, b, c));
                        }
                    }
                }
            }
        }
    }
    let outcomes = triples
        .par_iter()
        .map(|&(a, b, c)| {
            let (a, b, c) = (basis(e, a), basis(e, b), basis(e, c));
            let left = multiply(e, &multiply(e, &a, &b)?, &c)?;
            let right = multiply(e, &a, &multiply(e, &b, &c)?)?;
            Ok((left != right).then(|| format!("{} {} {}", a.render(e), b.render(e), c.render(e))))
        })
        .collect::<Result<Vec<_>>>()?;
    summary("associativity", e, max_total, outcomes)
}

type Triple = BTreeMap<(ClassKey, ClassKey, ClassKey), C>;

fn add3(t: &mut Triple, k: (ClassKey, ClassKey, ClassKey), c: C) {
    let entry = t.entry(k.clone()).or_insert_with(C::zero);
    *entry = entry.add_ref(&c);
    if entry.is_zero() {
        t.remove(&k);
    }
}

/// `(Delta (x) 1) Delta = (1 (x) Delta) Delta` on every basis element.
pub fn coassociativity_check(e: &dyn RepEngine, max_total: u32) -> Result<VerificationReport> {
    let all: Vec<ClassKey> = classes_by_grade(e, max_total)?.into_iter().flat_map(|(_, cs)| cs).collect();
    let outcomes = all
        .par_iter()
        .map(|m| {
            let x = basis(e, m);
            let dx: TensorElement<C> = comultiply(e, &x)?;
            let (mut left, mut right) = (Triple::new(), Triple::new());
            for ((a, b), c) in dx.terms() {
                for ((a1, a2), c1) in comultiply(e, &basis(e, a))?.terms() {
                    add3(&mut left, (a1.clone(), a2.clone(), b.clone()), c.mul_ref(c1));
                }
                for ((b1, b2), c2) in comultiply(e, &basis(e, b))?.terms() {
                    add3(&mut right, (a.clone(), b1.clone(), b2.clone()), c.mul_ref(c2));
                }
            }
            Ok((left != right).then(|| x.render(e)))
        })
        .collect::<Result<Vec<_>>>()?;
    summary("coassociativity", e, max_total, outcomes)
}

/// `{xy, z} = {x (x) y, Delta z}` for basis elements with
/// `dim x + dim y = dim z` of total dimension at most `max_total`.
pub fn adjointness_check(e: &dyn RepEngine, max_total: u32) -> Result<VerificationReport> {
    let by_grade = classes_by_grade(e, max_total)?;
    let lookup: BTreeMap<DimVector, Vec<ClassKey>> = by_grade.iter().cloned().collect();
    let mut cases = Vec::new();
    for (g1, c1) in &by_grade {
        for (g2, c2) in &by_grade {
            if g1.total() + g2.total() > max_total {
                continue;
            }
            for x in c1 {
                for y in c2 {
                    cases.push((x, y, &lookup[&(g1 + g2)]));
                }
            }
        }
    }
    let outcomes = cases
        .par_iter()
        .map(|&(x, y, zs)| {
            let (x, y) = (basis(e, x), basis(e, y));
            let xy = multiply(e, &x, &y)?;
            let xt = TensorElement::tensor(&x, &y)?;
            let mut bad = Vec::new();
            for z in zs {
                let z = basis(e, z);
                if green_form(e, &xy, &z)? != green_form_tensor(e, &xt, &comultiply(e, &z)?)? {
                    bad.push(format!("{} {} {}", x.render(e), y.render(e), z.render(e)));
                }
            }
            Ok(bad.into_iter().next())
        })
        .collect::<Result<Vec<_>>>()?;
    summary("green_adjointness", e, max_total, outcomes)
}
