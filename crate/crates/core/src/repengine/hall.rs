//! Submodule enumeration and Hall numbers.

use crate::error::{Error, Result};
use crate::gf::{gaussian_binomial, subspaces, Gf, Subspace};

use super::engine::{ClassKey, HallTable, RepEngine};
use super::point::RepPoint;
use super::quiver::{DimVector, Quiver};

/// Upper bound on subspace families visited per enumeration.
pub const MAX_SUBSPACE_FAMILIES: u128 = 20_000_000;

fn family_count(d: &DimVector, sub: Option<&DimVector>, q: u64) -> u128 {
    d.0.iter()
        .enumerate()
        .map(|(i, &n)| match sub {
            Some(s) => gaussian_binomial(n, s.0[i], q),
            None => (0..=n).map(|k| gaussian_binomial(n, k, q)).sum(),
        })
        .product()
}

/// Calls `f` on every arrow-stable family of subspaces of `x`, restricted
/// to subfamilies of dimension `sub` when given.
pub fn for_each_submodule(
    quiver: &Quiver,
    gf: &Gf,
    x: &RepPoint,
    sub: Option<&DimVector>,
    mut f: impl FnMut(&[Subspace]) -> Result<()>,
) -> Result<()> {
    let d = x.dims();
    let count = family_count(d, sub, gf.q() as u64);
    if count > MAX_SUBSPACE_FAMILIES {
        return Err(Error::CapExceeded(format!(
            "{count} subspace families at dimension {d}; use a smaller dimension vector or field"
        )));
    }
    let nv = quiver.vertices();
    let choices: Vec<Vec<Subspace>> = (0..nv)
        .map(|i| {
            let n = d.0[i] as usize;
            let ks: Vec<usize> = match sub {
                Some(s) => vec![s.0[i] as usize],
                None => (0..=n).collect(),
            };
            ks.into_iter()
                .flat_map(|k| subspaces(gf, n, k))
                .map(|b| Subspace::from_rref(b, gf))
                .collect()
        })
        .collect();
    let mut chosen: Vec<Option<&Subspace>> = vec![None; nv];
    walk(quiver, gf, x, &choices, 0, &mut chosen, &mut f)
}

fn walk<'a>(
    quiver: &Quiver,
    gf: &Gf,
    x: &RepPoint,
    choices: &'a [Vec<Subspace>],
    v: usize,
    chosen: &mut Vec<Option<&'a Subspace>>,
    f: &mut impl FnMut(&[Subspace]) -> Result<()>,
) -> Result<()> {
    if v == choices.len() {
        let family: Vec<Subspace> = chosen.iter().map(|s| s.unwrap().clone()).collect();
        return f(&family);
    }
    for s in &choices[v] {
        chosen[v] = Some(s);
        // prune with the arrows whose endpoints are both chosen
        if x.is_stable(quiver, gf, chosen) {
            walk(quiver, gf, x, choices, v + 1, chosen, f)?;
        }
    }
    chosen[v] = None;
    Ok(())
}

pub fn compute_hall_table<E: RepEngine + ?Sized>(e: &E, l: &ClassKey) -> Result<HallTable> {
    let x = e.representative(l)?;
    let (quiver, gf) = (e.quiver(), e.gf());
    let mut table = HallTable::new();
    for_each_submodule(quiver, gf, &x, None, |subs| {
        let sub = x.sub_point(quiver, gf, subs).expect("family is stable");
        let quo = x.quotient_point(quiver, gf, subs);
        let key = (e.identify(&quo)?, e.identify(&sub)?);
        *table.entry(key).or_insert(0) += 1;
        Ok(())
    })?;
    Ok(table)
}

/// `F^L_{M,N}` by direct count on a representative of `L`, visiting only
/// subfamilies of dimension `dim N`.
pub fn count_hall_number<E: RepEngine + ?Sized>(e: &E, l: &ClassKey, m: &ClassKey, n: &ClassKey) -> Result<u64> {
    let (dl, dm, dn) = (e.grade(l)?, e.grade(m)?, e.grade(n)?);
    if dl != &dm + &dn {
        return Ok(0);
    }
    let x = e.representative(l)?;
    let (quiver, gf) = (e.quiver(), e.gf());
    let mut count = 0;
    for_each_submodule(quiver, gf, &x, Some(&dn), |subs| {
        let sub = x.sub_point(quiver, gf, subs).expect("family is stable");
        if &e.identify(&sub)? == n && &e.identify(&x.quotient_point(quiver, gf, subs))? == m {
            count += 1;
        }
        Ok(())
    })?;
    Ok(count)
}
