use std::fmt;
use std::sync::Arc;

use crate::coeff::CycloSqrt;
use crate::error::{Error, Result};

/// Largest field whose elements may be enumerated.
pub const MAX_ENUM_ORDER: u64 = 10_000;

/// `GF(p^e)` presented as `F_p[x]/(f)` where `f` is the first monic
/// irreducible polynomial of degree `e` when its lower coefficients are read
/// as base-`p` digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    /// Monic modulus, coefficients low to high, length `e + 1`.
    modulus: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Splits `q` as `p^e`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut m, mut e) = (q, 0);
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p as u32, e))
}

fn digits(mut n: u64, p: u32, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = (n % p as u64) as u32;
            n /= p as u64;
            d
        })
        .collect()
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    // m monic
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (c * mi) % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Trial-division irreducibility test for a monic `f` (coefficients low to high).
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let e = f.len() - 1;
    if e <= 1 {
        return e == 1;
    }
    for d in 1..=e / 2 {
        for code in 0..(p as u64).pow(d as u32) {
            let mut g = digits(code, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if !is_prime(p as u64) || e == 0 {
            return Err(Error::InvalidParameter(format!("GF({p}^{e}) is not a field")));
        }
        (p as u64)
            .checked_pow(e)
            .filter(|&q| q <= 1 << 32)
            .ok_or_else(|| Error::CapExceeded(format!("field order {p}^{e}")))?;
        let modulus = (0..(p as u64).pow(e))
            .map(|code| {
                let mut f = digits(code, p, e as usize);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree");
        Ok(FieldSpec { p, e, modulus })
    }

    pub fn from_order(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        Self::new(p, e)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.e)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub(crate) fn mul_coeffs(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut prod = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, p);
        r.resize(self.e as usize, 0);
        r
    }

    pub(crate) fn code_to_coeffs(&self, code: u64) -> Vec<u32> {
        digits(code, self.p, self.e as usize)
    }

    pub(crate) fn coeffs_to_code(&self, c: &[u32]) -> u64 {
        c.iter().rev().fold(0, |acc, &d| acc * self.p as u64 + d as u64)
    }
}

/// An element of `GF(p^e)`, stored as its coefficient vector (low to high).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    spec: Arc<FieldSpec>,
    coeffs: Vec<u32>,
}

impl FieldElem {
    pub fn new(spec: Arc<FieldSpec>, coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() != spec.e as usize || coeffs.iter().any(|&c| c >= spec.p) {
            return Err(Error::InvalidParameter(format!("bad coefficients {coeffs:?} for GF({})", spec.order())));
        }
        Ok(FieldElem { spec, coeffs })
    }

    pub fn from_code(spec: Arc<FieldSpec>, code: u64) -> Self {
        let coeffs = spec.code_to_coeffs(code);
        FieldElem { spec, coeffs }
    }

    pub fn zero(spec: Arc<FieldSpec>) -> Self {
        Self::from_code(spec, 0)
    }

    pub fn one(spec: Arc<FieldSpec>) -> Self {
        Self::from_code(spec, 1)
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn code(&self) -> u64 {
        self.spec.coeffs_to_code(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn same_field(&self, o: &Self) -> Result<()> {
        if self.spec == o.spec {
            Ok(())
        } else {
            Err(Error::CharacteristicMismatch(format!("GF({}) vs GF({})", self.spec.order(), o.spec.order())))
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_field(o)?;
        let p = self.spec.p;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| (a + b) % p).collect();
        Ok(FieldElem { spec: self.spec.clone(), coeffs })
    }

    pub fn neg(&self) -> Self {
        let p = self.spec.p;
        let coeffs = self.coeffs.iter().map(|a| (p - a) % p).collect();
        FieldElem { spec: self.spec.clone(), coeffs }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_field(o)?;
        let coeffs = self.spec.mul_coeffs(&self.coeffs, &o.coeffs);
        Ok(FieldElem { spec: self.spec.clone(), coeffs })
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::one(self.spec.clone());
        let mut b = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b).unwrap();
            }
            b = b.mul(&b).unwrap();
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.spec.order() - 2))
    }

    /// Absolute trace `x + x^p + ... + x^(p^(e-1))`, an element of `F_p`.
    pub fn trace(&self) -> u32 {
        let mut acc = self.clone();
        let mut y = self.clone();
        for _ in 1..self.spec.e {
            y = y.pow(self.spec.p as u64);
            acc = acc.add(&y).unwrap();
        }
        debug_assert!(acc.coeffs[1..].iter().all(|&c| c == 0));
        acc.coeffs[0]
    }

    /// Parses `GF(q):[c0,c1,...]`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad field element `{s}`"));
        let s = s.trim();
        let rest = s.strip_prefix("GF(").ok_or_else(bad)?;
        let (q, rest) = rest.split_once("):").ok_or_else(bad)?;
        let q: u64 = q.trim().parse().map_err(|_| bad())?;
        if q > MAX_ENUM_ORDER {
            return Err(Error::CapExceeded(format!("field order {q}")));
        }
        let inner = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let coeffs = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let spec = Arc::new(FieldSpec::from_order(q)?);
        Self::new(spec, coeffs)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}):[", self.spec.order())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// All elements in base-`p` counting order (code `0, 1, 2, ...`).
pub fn enumerate(spec: &Arc<FieldSpec>) -> Result<Vec<FieldElem>> {
    let q = spec.order();
    if q > MAX_ENUM_ORDER {
        return Err(Error::CapExceeded(format!("enumerating GF({q}) exceeds {MAX_ENUM_ORDER} elements")));
    }
    Ok((0..q).map(|c| FieldElem::from_code(spec.clone(), c)).collect())
}

pub fn trace_to_prime(x: &FieldElem) -> u32 {
    x.trace()
}

/// `psi(x) = zeta_p^Tr(x)`.
pub fn additive_character(x: &FieldElem) -> Result<CycloSqrt> {
    CycloSqrt::zeta_pow(x.spec.p, x.trace() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli() {
        assert_eq!(FieldSpec::from_order(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::from_order(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FieldSpec::from_order(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldSpec::from_order(5).unwrap().modulus(), &[0, 1]);
        assert!(FieldSpec::from_order(6).is_err());
    }

    #[test]
    fn gf4_arithmetic() {
        let spec = Arc::new(FieldSpec::from_order(4).unwrap());
        let x = FieldElem::new(spec.clone(), vec![0, 1]).unwrap();
        // x^2 = x + 1
        assert_eq!(x.mul(&x).unwrap(), FieldElem::new(spec.clone(), vec![1, 1]).unwrap());
        assert_eq!(x.trace(), 1);
        assert_eq!(FieldElem::one(spec.clone()).trace(), 0);
        assert_eq!(x.to_string(), "GF(4):[0,1]");
        assert_eq!(FieldElem::parse("GF(4):[1,1]").unwrap(), FieldElem::new(spec, vec![1, 1]).unwrap());
    }

    #[test]
    fn field_axioms_small_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let spec = Arc::new(FieldSpec::from_order(q).unwrap());
            let els = enumerate(&spec).unwrap();
            for a in &els {
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), FieldElem::one(spec.clone()));
                }
                for b in &els {
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                }
            }
            // trace is onto F_p and balanced
            let mut counts = vec![0u64; spec.p() as usize];
            for a in &els {
                counts[a.trace() as usize] += 1;
            }
            assert!(counts.iter().all(|&c| c == q / spec.p() as u64));
        }
    }

    #[test]
    fn enumeration_cap() {
        let spec = Arc::new(FieldSpec::from_order(10007).unwrap());
        assert!(matches!(enumerate(&spec), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn character_sum_vanishes() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let spec = Arc::new(FieldSpec::from_order(q).unwrap());
            let mut s = CycloSqrt::zero();
            for x in enumerate(&spec).unwrap() {
                s = s.try_add(&additive_character(&x).unwrap()).unwrap();
            }
            assert!(s.is_zero());
        }
    }
}
