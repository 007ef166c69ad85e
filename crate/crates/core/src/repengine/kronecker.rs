//! Regular representations of the Kronecker quiver, organised by the
//! closed points of the projective line.
//!
//! A finite point is a monic irreducible `f` in `F_q[t]`; its tube holds
//! `I_lambda(f) = (I, C(f^lambda_1) + C(f^lambda_2) + ..)` with `C` the
//! companion matrix. The point at infinity holds `I_lambda(inf) = (J_lambda, I)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Gf, Mat};
use crate::partitions::{partitions_of, Partition};

use super::engine::{is_indecomposable, ClassKey, RepEngine};
use super::point::RepPoint;
use super::quiver::{DimVector, Quiver};

/// Monic polynomial over `GF(q)` as field codes, constant term first.
type GfPoly = Vec<u8>;

fn poly_mul(gf: &Gf, a: &[u8], b: &[u8]) -> GfPoly {
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = gf.add(out[i + j], gf.mul(x, y));
        }
    }
    out
}

/// Remainder of `a` modulo the monic `m`.
fn poly_rem(gf: &Gf, a: &[u8], m: &[u8]) -> GfPoly {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (k, &c) in m.iter().enumerate() {
                r[shift + k] = gf.sub(r[shift + k], gf.mul(lead, c));
            }
        }
        r.pop();
    }
    r
}

fn monic_polys(gf: &Gf, degree: usize) -> Vec<GfPoly> {
    let q = gf.q();
    let count = q.pow(degree as u32);
    (0..count)
        .map(|mut code| {
            let mut p: GfPoly = (0..degree)
                .map(|_| {
                    let c = (code % q) as u8;
                    code /= q;
                    c
                })
                .collect();
            p.push(1);
            p
        })
        .collect()
}

fn is_irreducible(gf: &Gf, f: &[u8]) -> bool {
    let deg = f.len() - 1;
    (1..=deg / 2).all(|d| monic_polys(gf, d).iter().all(|g| poly_rem(gf, f, g).iter().any(|&c| c != 0)))
}

/// A closed point of `P^1` over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedPoint {
    /// Monic irreducible polynomial, constant term first.
    Finite(GfPoly),
    Infinity,
}

impl ClosedPoint {
    pub fn degree(&self) -> u32 {
        match self {
            ClosedPoint::Finite(f) => (f.len() - 1) as u32,
            ClosedPoint::Infinity => 1,
        }
    }

    /// The degree-one point `t - a`.
    pub fn affine(gf: &Gf, a: u8) -> Self {
        ClosedPoint::Finite(vec![gf.neg(a), 1])
    }

    pub fn zero() -> Self {
        ClosedPoint::Finite(vec![0, 1])
    }

    /// Reads `inf`, a field code `a` (the point `t - a`), or a monic
    /// polynomial as codes constant-first, e.g. `[1,1,1]`.
    pub fn parse(gf: &Gf, s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad closed point `{s}`"));
        if s == "inf" || s == "∞" {
            return Ok(ClosedPoint::Infinity);
        }
        let p = if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let coeffs: Vec<u8> = body
                .split(',')
                .map(|c| c.trim().parse::<u8>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            if coeffs.len() < 2 || *coeffs.last().unwrap() != 1 || coeffs.iter().any(|&c| c as usize >= gf.q()) {
                return Err(bad());
            }
            ClosedPoint::Finite(coeffs)
        } else {
            let a: u8 = s.parse().map_err(|_| bad())?;
            if a as usize >= gf.q() {
                return Err(bad());
            }
            Self::affine(gf, a)
        };
        if let ClosedPoint::Finite(f) = &p {
            if !is_irreducible(gf, f) {
                return Err(Error::InvalidParameter(format!("`{s}` is not irreducible")));
            }
        }
        Ok(p)
    }
}

impl fmt::Display for ClosedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedPoint::Infinity => write!(f, "inf"),
            ClosedPoint::Finite(p) => {
                let items: Vec<String> = p.iter().map(|c| c.to_string()).collect();
                write!(f, "[{}]", items.join(","))
            }
        }
    }
}

/// Closed points of degree dividing `n`, finite points first by degree.
pub fn closed_points(gf: &Gf, max_degree: u32) -> Vec<ClosedPoint> {
    let mut out = Vec::new();
    for d in 1..=max_degree as usize {
        out.extend(monic_polys(gf, d).into_iter().filter(|f| is_irreducible(gf, f)).map(ClosedPoint::Finite));
    }
    out.push(ClosedPoint::Infinity);
    out
}

/// Points whose degree divides `n`: the tubes meeting grade `n delta`
/// through their homogeneous modules.
pub fn points_dividing(gf: &Gf, n: u32) -> Vec<ClosedPoint> {
    closed_points(gf, n).into_iter().filter(|x| n % x.degree() == 0).collect()
}

fn companion(gf: &Gf, g: &[u8]) -> Mat {
    let k = g.len() - 1;
    let mut m = Mat::zero(k, k);
    for i in 1..k {
        m.set(i, i - 1, 1);
    }
    for i in 0..k {
        m.set(i, k - 1, gf.neg(g[i]));
    }
    m
}

fn jordan_nilpotent(k: usize) -> Mat {
    let mut m = Mat::zero(k, k);
    for i in 1..k {
        m.set(i, i - 1, 1);
    }
    m
}

/// The matrix pair `I_lambda(x)` on the Kronecker quiver.
pub fn tube_point(gf: &Gf, x: &ClosedPoint, lambda: &Partition) -> RepPoint {
    let k2 = Quiver::kronecker();
    let blocks: Vec<Mat> = lambda
        .parts()
        .iter()
        .map(|&l| match x {
            ClosedPoint::Finite(f) => {
                let mut g = vec![1u8];
                for _ in 0..l {
                    g = poly_mul(gf, &g, f);
                }
                companion(gf, &g)
            }
            ClosedPoint::Infinity => jordan_nilpotent(l as usize),
        })
        .collect();
    let block = blocks.iter().fold(Mat::zero(0, 0), |acc, b| acc.direct_sum(b));
    let n = block.rows();
    let id = Mat::identity(n);
    let mats = match x {
        ClosedPoint::Finite(_) => vec![id, block],
        ClosedPoint::Infinity => vec![block, id],
    };
    RepPoint::new(&k2, DimVector(vec![n as u32, n as u32]), mats).expect("square blocks")
}

fn check_kronecker(e: &dyn RepEngine) -> Result<()> {
    let a = e.quiver().arrows();
    if e.quiver().vertices() != 2 || a.len() != 2 || a.iter().any(|&x| x != (0, 1)) {
        return Err(Error::InvalidParameter(format!("{} is not the Kronecker quiver", e.id())));
    }
    Ok(())
}

/// `[I_lambda(x)]` for every `lambda |- m`, in partition order.
pub fn tube_classes(e: &dyn RepEngine, x: &ClosedPoint, m: u32) -> Result<Vec<(Partition, ClassKey)>> {
    check_kronecker(e)?;
    partitions_of(m)?
        .iter()
        .map(|l| Ok((l.clone(), e.identify(&tube_point(e.gf(), x, l))?)))
        .collect()
}

fn is_square(d: &DimVector) -> bool {
    d.0[0] == d.0[1]
}

/// Whether every indecomposable summand has a square dimension vector.
pub fn is_regular(e: &dyn RepEngine, c: &ClassKey) -> Result<bool> {
    for (k, _) in e.decompose(c)?.iter() {
        if !is_square(&e.grade(k)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Regular classes at `(n, n)`.
pub fn regular_classes(e: &dyn RepEngine, n: u32) -> Result<Vec<ClassKey>> {
    check_kronecker(e)?;
    let d = DimVector(vec![n, n]);
    let mut out = Vec::new();
    for c in e.classes(&d)?.iter() {
        if is_regular(e, c)? {
            out.push(c.clone());
        }
    }
    Ok(out)
}

/// A regular indecomposable is regular simple iff it has no proper nonzero
/// regular submodule with square dimension vector.
pub fn is_regular_simple(e: &dyn RepEngine, c: &ClassKey) -> Result<bool> {
    check_kronecker(e)?;
    let d = e.grade(c)?;
    if d.is_zero() || !is_square(&d) || !is_indecomposable(e, c)? {
        return Ok(false);
    }
    for (_, sub) in e.hall_table(c)?.keys() {
        let s = e.grade(sub)?;
        if !s.is_zero() && s != d && is_square(&s) && is_regular(e, sub)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::phi_irreducible_count;
    use crate::partitions::{Count, Mode};
    use crate::repengine::BruteEngine;

    #[test]
    fn point_counts_match_necklace_formula() {
        for q in [2u64, 3, 4] {
            let gf = Gf::new(q).unwrap();
            for d in 1..=3u32 {
                let finite = closed_points(&gf, d).iter().filter(|x| x.degree() == d && **x != ClosedPoint::Infinity).count();
                let Count::Value(expected) = phi_irreducible_count(d, Mode::Numeric(q)).unwrap() else { panic!() };
                assert_eq!(finite.to_string(), expected.to_string());
            }
        }
    }

    #[test]
    fn regular_classes_at_delta() {
        for q in [2u64, 3] {
            let e = BruteEngine::new(Quiver::kronecker(), q).unwrap();
            assert_eq!(regular_classes(&e, 1).unwrap().len() as u64, q + 1);
        }
    }

    #[test]
    fn tube_modules_are_identified() {
        let e = BruteEngine::new(Quiver::kronecker(), 2).unwrap();
        let gf = e.gf().clone();
        for x in points_dividing(&gf, 2) {
            let m = 2 / x.degree();
            let classes = tube_classes(&e, &x, m).unwrap();
            for (l, c) in &classes {
                assert!(is_regular(&e, c).unwrap());
                // I_(m)(x) is indecomposable; it is regular simple only for m = 1
                if l.len() == 1 {
                    assert!(is_indecomposable(&e, c).unwrap());
                    assert_eq!(is_regular_simple(&e, c).unwrap(), m == 1);
                }
            }
        }
    }

    #[test]
    fn degree_two_simple_has_field_endomorphisms() {
        let e = BruteEngine::new(Quiver::kronecker(), 2).unwrap();
        let x = ClosedPoint::Finite(vec![1, 1, 1]);
        let c = &tube_classes(&e, &x, 1).unwrap()[0].1;
        assert_eq!(crate::repengine::hom_dim(&e, c, c).unwrap(), 2);
        assert!(is_regular_simple(&e, c).unwrap());
    }

    #[test]
    fn parse_points() {
        let gf = Gf::new(3).unwrap();
        assert_eq!(ClosedPoint::parse(&gf, "inf").unwrap(), ClosedPoint::Infinity);
        assert_eq!(ClosedPoint::parse(&gf, "0").unwrap(), ClosedPoint::zero());
        assert_eq!(ClosedPoint::parse(&gf, "[1,0,1]").unwrap().degree(), 2);
        assert!(ClosedPoint::parse(&gf, "[2,0,1]").is_err());
        assert!(ClosedPoint::parse(&gf, "3").is_err());
    }
}
