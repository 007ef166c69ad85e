use std::collections::BTreeMap;

use crate::coeff::linalg;
use crate::coeff::{FieldCoeff, NumericCoeff};
use crate::error::{Error, Result};
use crate::repengine::{ClassKey, DimVector, RepEngine};

use super::element::{HallElement, TensorElement};
use super::ops::{comultiply_in, Subcategory};

/// `Delta(x) - x(x)1 - 1(x)x`.
pub fn primitivity_defect<C: NumericCoeff>(
    e: &dyn RepEngine,
    x: &HallElement<C>,
    sub: &Subcategory,
) -> Result<TensorElement<C>> {
    let unit = HallElement::unit(e);
    comultiply_in(e, x, sub)?.sub(&TensorElement::tensor(x, &unit)?)?.sub(&TensorElement::tensor(&unit, x)?)
}

/// Whether `Delta(x) = x(x)1 + 1(x)x` exactly. `x` must be homogeneous of
/// nonzero grade.
pub fn is_primitive<C: NumericCoeff>(e: &dyn RepEngine, x: &HallElement<C>, sub: &Subcategory) -> Result<bool> {
    match x.grade(e)? {
        Some(d) if d.is_zero() => Err(Error::InvalidParameter("primitivity needs a nonzero grade".into())),
        _ => Ok(primitivity_defect(e, x, sub)?.is_zero()),
    }
}

/// Basis of the primitive elements of grade `d` in the Hall algebra of
/// `sub`, in reduced echelon form over the classes of `sub` at `d`.
pub fn primitive_subspace<C: NumericCoeff + FieldCoeff>(
    e: &dyn RepEngine,
    d: &DimVector,
    sub: &Subcategory,
) -> Result<Vec<HallElement<C>>> {
    if d.is_zero() {
        return Err(Error::InvalidParameter("primitivity needs a nonzero grade".into()));
    }
    let mut basis: Vec<ClassKey> = Vec::new();
    for c in e.classes(d)?.iter() {
        if sub.contains(e, c)? {
            basis.push(c.clone());
        }
    }
    // rows indexed by the tensor terms of the defect, columns by `basis`
    let mut rows: BTreeMap<(ClassKey, ClassKey), Vec<C>> = BTreeMap::new();
    let n = basis.len();
    for (j, c) in basis.iter().enumerate() {
        let defect = primitivity_defect(e, &HallElement::<C>::basis(e, c.clone()), sub)?;
        for (k, x) in defect.terms() {
            rows.entry(k.clone()).or_insert_with(|| vec![C::zero(); n])[j] = x.clone();
        }
    }
    let rows: Vec<Vec<C>> = rows.into_values().collect();
    let kernel = linalg::kernel(&rows, n);
    Ok(kernel
        .into_iter()
        .map(|v| HallElement::from_terms(e, basis.iter().cloned().zip(v)))
        .collect())
}

/// Coordinates of elements over a fixed list of classes.
pub fn coordinates<C: NumericCoeff>(xs: &[HallElement<C>], classes: &[ClassKey]) -> Vec<Vec<C>> {
    xs.iter().map(|x| classes.iter().map(|c| x.coeff(c)).collect()).collect()
}
