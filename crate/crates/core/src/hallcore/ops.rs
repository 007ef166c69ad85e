use rayon::prelude::*;

use crate::coeff::rational::rat_u128;
use crate::coeff::{NumericCoeff, Rational, SqrtExt};
use crate::error::Result;
use crate::repengine::kronecker::{self, ClosedPoint};
use crate::repengine::{product_index, ClassKey, DimVector, RepEngine};

use super::element::{HallElement, TensorElement};

/// Membership test for a subcategory.
pub type Predicate<'a> = dyn Fn(&ClassKey) -> Result<bool> + Sync + 'a;

/// `v^<x,y>` at the engine's field.
pub fn twist<C: NumericCoeff>(e: &dyn RepEngine, x: &DimVector, y: &DimVector) -> Result<C> {
    let k = e.quiver().euler_form(x, y)?;
    Ok(C::from_sqrt(&SqrtExt::v_pow(e.q(), k)))
}

pub fn aut_rational(e: &dyn RepEngine, c: &ClassKey) -> Result<Rational> {
    Ok(rat_u128(e.aut_order(c)?))
}

/// `[M][N] = sum_L v^<M,N> F^L_{M,N} [L]`, extended bilinearly.
pub fn multiply<C: NumericCoeff>(e: &dyn RepEngine, a: &HallElement<C>, b: &HallElement<C>) -> Result<HallElement<C>> {
    a.check(e)?;
    b.check(e)?;
    let pairs: Vec<(&ClassKey, &C, &ClassKey, &C)> =
        a.terms().iter().flat_map(|(m, cm)| b.terms().iter().map(move |(n, cn)| (m, cm, n, cn))).collect();
    let parts: Vec<Vec<(ClassKey, C)>> = pairs
        .par_iter()
        .map(|&(m, cm, n, cn)| {
            let (dm, dn) = (e.grade(m)?, e.grade(n)?);
            let idx = product_index(e, &(&dm + &dn))?;
            let base = cm.mul_ref(cn).mul_ref(&twist::<C>(e, &dm, &dn)?);
            Ok(match idx.get(&(m.clone(), n.clone())) {
                Some(ls) => ls.iter().map(|(l, f)| (l.clone(), base.mul_ref(&C::from_rational(&rat_u128(*f as u128))))).collect(),
                None => Vec::new(),
            })
        })
        .collect::<Result<_>>()?;
    let mut out = HallElement::zero(e);
    for (l, c) in parts.into_iter().flatten() {
        out.add_term(l, &c);
    }
    Ok(out)
}

pub fn comultiply<C: NumericCoeff>(e: &dyn RepEngine, x: &HallElement<C>) -> Result<TensorElement<C>> {
    comultiply_restricted(e, x, &|_| Ok(true))
}

/// `Delta[M] = sum v^<X,Y> (a_X a_Y / a_M) F^M_{X,Y} [X](x)[Y]`, with `X` and
/// `Y` restricted to classes satisfying `pred`.
pub fn comultiply_restricted<C: NumericCoeff>(
    e: &dyn RepEngine,
    x: &HallElement<C>,
    pred: &Predicate<'_>,
) -> Result<TensorElement<C>> {
    x.check(e)?;
    let parts: Vec<Vec<(ClassKey, ClassKey, C)>> = x
        .terms()
        .par_iter()
        .map(|(m, cm)| {
            let am = aut_rational(e, m)?;
            let mut out = Vec::new();
            for ((quo, sub), &f) in e.hall_table(m)?.iter() {
                if !pred(quo)? || !pred(sub)? {
                    continue;
                }
                let s = aut_rational(e, quo)? * aut_rational(e, sub)? * rat_u128(f as u128) / &am;
                let c = cm.mul_ref(&C::from_rational(&s)).mul_ref(&twist::<C>(e, &e.grade(quo)?, &e.grade(sub)?)?);
                out.push((quo.clone(), sub.clone(), c));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut out = TensorElement::zero(e);
    for (a, b, c) in parts.into_iter().flatten() {
        out.add_term(a, b, &c);
    }
    Ok(out)
}

/// Green form `{[M],[N]} = delta_{M,N} / a_M`.
pub fn green_form<C: NumericCoeff>(e: &dyn RepEngine, x: &HallElement<C>, y: &HallElement<C>) -> Result<C> {
    x.check(e)?;
    y.check(e)?;
    let mut acc = C::zero();
    for (k, cx) in x.terms() {
        if let Some(cy) = y.terms().get(k) {
            let inv = C::from_rational(&(Rational::from_integer(1.into()) / aut_rational(e, k)?));
            acc = acc.add_ref(&cx.mul_ref(cy).mul_ref(&inv));
        }
    }
    Ok(acc)
}

/// `{a(x)b, c(x)d} = {a,c}{b,d}`.
pub fn green_form_tensor<C: NumericCoeff>(e: &dyn RepEngine, s: &TensorElement<C>, t: &TensorElement<C>) -> Result<C> {
    let mut acc = C::zero();
    for ((a, b), cs) in s.terms() {
        if let Some(ct) = t.terms().get(&(a.clone(), b.clone())) {
            let w = Rational::from_integer(1.into()) / (aut_rational(e, a)? * aut_rational(e, b)?);
            acc = acc.add_ref(&cs.mul_ref(ct).mul_ref(&C::from_rational(&w)));
        }
    }
    Ok(acc)
}

/// `1_d`: the sum of all classes of grade `d`.
pub fn one_d<C: NumericCoeff>(e: &dyn RepEngine, d: &DimVector) -> Result<HallElement<C>> {
    one_subset(e, d, &|_| Ok(true))
}

pub fn one_subset<C: NumericCoeff>(e: &dyn RepEngine, d: &DimVector, pred: &Predicate<'_>) -> Result<HallElement<C>> {
    let mut out = HallElement::zero(e);
    for c in e.classes(d)?.iter() {
        if pred(c)? {
            out.add_term(c.clone(), &C::one());
        }
    }
    Ok(out)
}

/// `1^reg_{n delta}` on the Kronecker quiver.
pub fn one_reg<C: NumericCoeff>(e: &dyn RepEngine, n: u32) -> Result<HallElement<C>> {
    let mut out = HallElement::zero(e);
    for c in kronecker::regular_classes(e, n)? {
        out.add_term(c, &C::one());
    }
    Ok(out)
}

/// Built-in subcategories; each is closed under extensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subcategory {
    All,
    /// Kronecker regular modules.
    Regular,
    /// `add T_x` for a homogeneous Kronecker tube.
    Tube(ClosedPoint),
}

impl Subcategory {
    pub fn contains(&self, e: &dyn RepEngine, c: &ClassKey) -> Result<bool> {
        match self {
            Subcategory::All => Ok(true),
            Subcategory::Regular => kronecker::is_regular(e, c),
            Subcategory::Tube(x) => {
                let d = e.grade(c)?;
                let k = d.0[0];
                if d.0[1] != k || k % x.degree() != 0 {
                    return Ok(false);
                }
                Ok(kronecker::tube_classes(e, x, k / x.degree())?.iter().any(|(_, t)| t == c))
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            Subcategory::All => "all".into(),
            Subcategory::Regular => "regular".into(),
            Subcategory::Tube(x) => format!("tube:{x}"),
        }
    }
}

/// `Delta` for a built-in subcategory.
pub fn comultiply_in<C: NumericCoeff>(
    e: &dyn RepEngine,
    x: &HallElement<C>,
    sub: &Subcategory,
) -> Result<TensorElement<C>> {
    match sub {
        Subcategory::All => comultiply(e, x),
        _ => comultiply_restricted(e, x, &|c| sub.contains(e, c)),
    }
}
