//! Constructors for the named primitive elements.

use std::sync::Arc;

use crate::coeff::rational::{rat, rat_pow};
use crate::coeff::{Coeff, QPoly, SqrtExt};
use crate::error::{Error, Result};
use crate::gf::Gf;
use crate::hallcore::{aut_rational, multiply, HallElement, Subcategory};
use crate::partitions::{partitions_of, prod_one_minus, Partition};
use crate::repengine::kronecker::{tube_classes, ClosedPoint};
use crate::repengine::{socle, BruteEngine, ClassKey, DimVector, Multisegment, NilCyclicEngine, Quiver, RepEngine};

type C = SqrtExt;

fn q_value(p: &QPoly, q0: u64) -> C {
    C::rational(p.eval_u64(q0))
}

/// `I_lambda = S[lambda_1] + S[lambda_2] + ..` over the Jordan quiver.
pub fn jordan_class(l: &Partition) -> ClassKey {
    ClassKey::Seg(Multisegment::from_lengths(1, 0, l.parts()))
}

/// `I^(r)_lambda = S_1[r lambda_1] + S_1[r lambda_2] + ..` over `C_r`.
pub fn cyclic_decomp_class(r: usize, l: &Partition) -> ClassKey {
    let lengths: Vec<u32> = l.parts().iter().map(|&p| p * r as u32).collect();
    ClassKey::Seg(Multisegment::from_lengths(r, 0, &lengths))
}

/// `sum_{lambda |- n} prod_{s=1}^{len-1} (1 - q^s) [I_lambda]` with polynomial coefficients.
pub fn p_jordan_symbolic(n: u32) -> Result<Vec<(Partition, QPoly)>> {
    Ok(partitions_of(n)?.iter().map(|l| (l.clone(), prod_one_minus(l, 1))).collect())
}

pub fn p_jordan(e: &NilCyclicEngine, n: u32) -> Result<HallElement<C>> {
    if e.r() != 1 {
        return Err(Error::InvalidParameter("p_n lives on the Jordan quiver".into()));
    }
    let q0 = e.q();
    let terms = p_jordan_symbolic(n)?.into_iter().map(|(l, c)| (jordan_class(&l), q_value(&c, q0)));
    Ok(HallElement::from_terms(e, terms))
}

fn is_square_free(v: &[u32]) -> bool {
    v.iter().all(|&m| m <= 1)
}

/// `c_n = (-1)^n v^(-2rn) sum (-1)^(dim End M) a_M [M]` over `dim M = n delta`
/// with square-free socle; `c_0 = [0]`.
pub fn c_central(e: &NilCyclicEngine, n: u32) -> Result<HallElement<C>> {
    let r = e.r();
    if r < 2 {
        return Err(Error::InvalidParameter("c_n needs r >= 2".into()));
    }
    let q0 = e.q();
    let mut out = HallElement::zero(e);
    for c in e.classes(&DimVector::delta(r, n))?.iter() {
        if !is_square_free(&socle(e, c)?) {
            continue;
        }
        let ClassKey::Seg(m) = c else { unreachable!() };
        let sign = if m.hom_dim(m) % 2 == 0 { 1 } else { -1 };
        out.add_term(c.clone(), &C::rational(aut_rational(e, c)? * rat(sign)));
    }
    let sign = if n % 2 == 0 { C::one() } else { C::from_int(-1) };
    Ok(out.scale(&sign.mul_ref(&SqrtExt::v_pow(q0, -2 * (r as i64) * n as i64))))
}

/// `x_1, .., x_n` with `x_k = k c_k - sum_{s=1}^{k-1} x_s c_{k-s}`.
pub fn x_elements(e: &NilCyclicEngine, n: u32) -> Result<Vec<HallElement<C>>> {
    let cs: Vec<HallElement<C>> = (0..=n).map(|k| c_central(e, k)).collect::<Result<_>>()?;
    let mut xs: Vec<HallElement<C>> = Vec::new();
    for k in 1..=n as usize {
        let mut x = cs[k].scale(&C::from_int(k as i64));
        for s in 1..k {
            x = x.sub(&multiply(e, &xs[s - 1], &cs[k - s])?)?;
        }
        xs.push(x);
    }
    Ok(xs)
}

pub fn x_element(e: &NilCyclicEngine, n: u32) -> Result<HallElement<C>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    Ok(x_elements(e, n)?.pop().expect("n >= 1"))
}

/// `p^(r)_n = q^(rn)/(q^n - 1) x_n`; for `r = 1` this is `p_n`.
pub fn p_cyclic(e: &NilCyclicEngine, n: u32) -> Result<HallElement<C>> {
    if e.r() == 1 {
        return p_jordan(e, n);
    }
    let q = rat(e.q() as i64);
    let rn = (e.r() as u32 * n) as i64;
    let scalar = rat_pow(&q, rn) / (rat_pow(&q, n as i64) - rat(1));
    Ok(x_element(e, n)?.scale(&C::rational(scalar)))
}

/// `p_m(x) = sum_{lambda |- m} prod_{s=1}^{len-1} (1 - q^(s e)) [I_lambda(x)]`,
/// given the classes `I_lambda(x)` for every `lambda |- m`.
pub fn p_tube_homog(
    e: &dyn RepEngine,
    degree: u32,
    m: u32,
    classes: &[(Partition, ClassKey)],
) -> Result<HallElement<C>> {
    let mut out = HallElement::zero(e);
    for l in partitions_of(m)?.iter() {
        let c = classes
            .iter()
            .find(|(k, _)| k == l)
            .map(|(_, c)| c)
            .ok_or_else(|| Error::InvalidParameter(format!("no class for partition {l}")))?;
        out.add_term(c.clone(), &q_value(&prod_one_minus(l, degree), e.q()));
    }
    Ok(out)
}

/// `p_m(x)` on the Kronecker quiver.
pub fn p_tube(e: &dyn RepEngine, x: &ClosedPoint, m: u32) -> Result<HallElement<C>> {
    p_tube_homog(e, x.degree(), m, &tube_classes(e, x, m)?)
}

pub fn kron_p0(e: &dyn RepEngine, n: u32) -> Result<HallElement<C>> {
    p_tube(e, &ClosedPoint::zero(), n)
}

pub fn kron_pinf(e: &dyn RepEngine, n: u32) -> Result<HallElement<C>> {
    p_tube(e, &ClosedPoint::Infinity, n)
}

/// `p_n^K2 = p_n(0) - p_n(inf)`.
pub fn kron_pk2(e: &dyn RepEngine, n: u32) -> Result<HallElement<C>> {
    kron_p0(e, n)?.sub(&kron_pinf(e, n)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    JordanPn,
    CyclicCn,
    CyclicXn,
    CyclicPnr,
    TubePm,
    KronP0,
    KronPinf,
    KronPK2,
}

impl Family {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "jordan_pn" => Family::JordanPn,
            "cyclic_cn" => Family::CyclicCn,
            "cyclic_xn" => Family::CyclicXn,
            "cyclic_pnr" => Family::CyclicPnr,
            "tube_pm" => Family::TubePm,
            "kron_p0" => Family::KronP0,
            "kron_pinf" => Family::KronPinf,
            "kron_pk2" => Family::KronPK2,
            _ => return Err(Error::Parse(format!("unknown primitive family `{s}`"))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::JordanPn => "jordan_pn",
            Family::CyclicCn => "cyclic_cn",
            Family::CyclicXn => "cyclic_xn",
            Family::CyclicPnr => "cyclic_pnr",
            Family::TubePm => "tube_pm",
            Family::KronP0 => "kron_p0",
            Family::KronPinf => "kron_pinf",
            Family::KronPK2 => "kron_pk2",
        }
    }
}

/// A named primitive element with its parameters.
#[derive(Clone, Debug)]
pub struct PrimitiveSpec {
    pub family: Family,
    pub r: usize,
    /// `n` for most families, `m` for tube elements.
    pub n: u32,
    /// Tube point for `tube_pm`.
    pub point: Option<ClosedPoint>,
    pub q0: u64,
}

impl PrimitiveSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidParameter(format!("{}: {why}", self.family.name())));
        if self.n == 0 {
            return bad("n must be positive");
        }
        match self.family {
            Family::JordanPn if self.n > 8 => bad("n <= 8"),
            Family::CyclicCn | Family::CyclicXn | Family::CyclicPnr if self.r < 1 || self.r > 3 || self.n > 2 => {
                bad("needs 1 <= r <= 3 and n <= 2")
            }
            Family::CyclicCn | Family::CyclicXn if self.r < 2 => bad("needs r >= 2"),
            Family::TubePm | Family::KronP0 | Family::KronPinf | Family::KronPK2
                if self.n > 3 || (self.n == 3 && self.q0 != 2) =>
            {
                bad("n <= 2 (n = 3 only at q = 2)")
            }
            _ => Ok(()),
        }
    }

    /// The coalgebra in which the element is primitive.
    pub fn coalgebra(&self) -> Subcategory {
        match (&self.family, &self.point) {
            (Family::TubePm, Some(x)) => Subcategory::Tube(x.clone()),
            (Family::KronP0, _) => Subcategory::Tube(ClosedPoint::zero()),
            (Family::KronPinf, _) => Subcategory::Tube(ClosedPoint::Infinity),
            _ => Subcategory::All,
        }
    }

    pub fn engine(&self) -> Result<Arc<dyn RepEngine>> {
        Ok(match self.family {
            Family::JordanPn => Arc::new(NilCyclicEngine::new(1, self.q0)?),
            Family::CyclicCn | Family::CyclicXn | Family::CyclicPnr => Arc::new(NilCyclicEngine::new(self.r, self.q0)?),
            _ => Arc::new(BruteEngine::new(Quiver::kronecker(), self.q0)?),
        })
    }

    pub fn build(&self) -> Result<(Arc<dyn RepEngine>, HallElement<C>)> {
        self.validate()?;
        let n = self.n;
        if let Family::JordanPn | Family::CyclicCn | Family::CyclicXn | Family::CyclicPnr = self.family {
            let r = if self.family == Family::JordanPn { 1 } else { self.r };
            let e = Arc::new(NilCyclicEngine::new(r, self.q0)?);
            let x = match self.family {
                Family::JordanPn => p_jordan(&e, n)?,
                Family::CyclicCn => c_central(&e, n)?,
                Family::CyclicXn => x_element(&e, n)?,
                _ => p_cyclic(&e, n)?,
            };
            return Ok((e, x));
        }
        let e = self.engine()?;
        let x = match self.family {
            Family::TubePm => p_tube(e.as_ref(), self.point.as_ref().unwrap_or(&ClosedPoint::zero()), n)?,
            Family::KronP0 => kron_p0(e.as_ref(), n)?,
            Family::KronPinf => kron_pinf(e.as_ref(), n)?,
            _ => kron_pk2(e.as_ref(), n)?,
        };
        Ok((e, x))
    }

    pub fn parse_point(&self, s: &str) -> Result<ClosedPoint> {
        ClosedPoint::parse(Gf::new(self.q0)?.as_ref(), s)
    }
}
