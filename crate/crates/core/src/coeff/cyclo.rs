//! Elements of `Q(zeta_p)(sqrt(q0))` for the additive characters of a
//! finite field of characteristic `p <= 7`.

use std::fmt;

use num_traits::Zero;

use super::rational::rat;
use super::sqrt::SqrtExt;
use crate::error::{Error, Result};

pub const MAX_CYCLO_PRIME: u32 = 7;

/// Coordinates over `Q(sqrt(q0))` in the basis `1, zeta, ..., zeta^(p-2)`.
///
/// `prime == 0` marks a scalar from `Q(sqrt(q0))` that has not been tied to
/// a cyclotomic field yet; it combines with any prime.
#[derive(Clone, Debug)]
pub struct CycloSqrt {
    prime: u32,
    coords: Vec<SqrtExt>,
}

fn check_prime(p: u32) -> Result<()> {
    if matches!(p, 2 | 3 | 5 | 7) {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("cyclotomic coefficients need a prime p <= {MAX_CYCLO_PRIME}, got {p}")))
    }
}

impl CycloSqrt {
    pub fn scalar(x: SqrtExt) -> Self {
        CycloSqrt { prime: 0, coords: vec![x] }
    }

    pub fn zero() -> Self {
        Self::scalar(SqrtExt::zero())
    }

    pub fn one() -> Self {
        Self::scalar(SqrtExt::one())
    }

    pub fn from_coords(prime: u32, coords: Vec<SqrtExt>) -> Result<Self> {
        check_prime(prime)?;
        if coords.len() != prime as usize - 1 {
            return Err(Error::InvalidParameter(format!("expected {} coordinates", prime - 1)));
        }
        Ok(CycloSqrt { prime, coords }.normalized())
    }

    /// `zeta_p^k`.
    pub fn zeta_pow(prime: u32, k: i64) -> Result<Self> {
        check_prime(prime)?;
        let k = k.rem_euclid(prime as i64) as usize;
        let n = prime as usize - 1;
        let coords = if k < n {
            (0..n).map(|i| SqrtExt::from_int(i64::from(i == k))).collect()
        } else {
            vec![SqrtExt::from_int(-1); n]
        };
        Ok(CycloSqrt { prime, coords })
    }

    pub fn prime(&self) -> Option<u32> {
        (self.prime != 0).then_some(self.prime)
    }

    pub fn coords(&self) -> &[SqrtExt] {
        &self.coords
    }

    fn promoted(&self, p: u32) -> Vec<SqrtExt> {
        if self.prime == p {
            return self.coords.clone();
        }
        debug_assert_eq!(self.prime, 0);
        if p == 0 {
            return self.coords.clone();
        }
        let mut v = vec![SqrtExt::zero(); p as usize - 1];
        v[0] = self.coords[0].clone();
        v
    }

    fn joint_prime(&self, o: &Self) -> Result<u32> {
        match (self.prime, o.prime) {
            (0, p) | (p, 0) => Ok(p),
            (p, r) if p == r => Ok(p),
            (p, r) => Err(Error::CharacteristicMismatch(format!("zeta_{p} vs zeta_{r}"))),
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let p = self.joint_prime(o)?;
        let (a, b) = (self.promoted(p), o.promoted(p));
        let coords = a.iter().zip(&b).map(|(x, y)| x.try_add(y)).collect::<Result<Vec<_>>>()?;
        Ok(CycloSqrt { prime: p, coords }.normalized())
    }

    pub fn neg(&self) -> Self {
        CycloSqrt { prime: self.prime, coords: self.coords.iter().map(|x| -x).collect() }
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let p = self.joint_prime(o)?;
        if self.prime == 0 || o.prime == 0 {
            let (s, other) = if self.prime == 0 { (&self.coords[0], o) } else { (&o.coords[0], self) };
            let coords = other.coords.iter().map(|x| s.try_mul(x)).collect::<Result<Vec<_>>>()?;
            return Ok(CycloSqrt { prime: other.prime, coords }.normalized());
        }
        let n = p as usize;
        let mut full = vec![SqrtExt::zero(); n];
        for (i, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.coords.iter().enumerate() {
                if !y.is_zero() {
                    full[(i + j) % n] = full[(i + j) % n].try_add(&x.try_mul(y)?)?;
                }
            }
        }
        Ok(reduce_full(p, full).normalized())
    }

    pub fn scale(&self, s: &SqrtExt) -> Self {
        self.try_mul(&Self::scalar(s.clone())).expect("sqrt base mismatch")
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(SqrtExt::is_zero)
    }

    /// The value as an element of `Q(sqrt(q0))` when no zeta appears.
    pub fn as_sqrt(&self) -> Option<SqrtExt> {
        self.coords[1..].iter().all(SqrtExt::is_zero).then(|| self.coords[0].clone())
    }

    /// For `p = 1 mod 4`, `sqrt(p)` is the Gauss sum and lies in `Q(zeta_p)`;
    /// rewriting it keeps the coordinates unique.
    fn normalized(mut self) -> Self {
        let p = self.prime;
        if p == 0 || p % 4 != 1 {
            return self;
        }
        let Some(base) = self.coords.iter().find_map(SqrtExt::base) else {
            return self;
        };
        let (mut e, mut m) = (0u32, base);
        while m % p as u64 == 0 {
            m /= p as u64;
            e += 1;
        }
        if m != 1 || e % 2 == 0 {
            return self;
        }
        // sqrt(base) = p^((e-1)/2) * sum_a (a/p) zeta^a
        let factor = rat(p.pow((e - 1) / 2) as i64);
        let mut full = vec![SqrtExt::zero(); p as usize];
        for (i, x) in self.coords.iter().enumerate() {
            full[i] = &full[i] + &SqrtExt::rational(x.a().clone());
            if x.b().is_zero() {
                continue;
            }
            let c = x.b() * &factor;
            for a in 1..p as usize {
                let chi = legendre(a as u64, p as u64);
                let k = (i + a) % p as usize;
                full[k] = &full[k] + &SqrtExt::rational(&c * rat(chi));
            }
        }
        self.coords = reduce_full(p, full).coords;
        self
    }
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut r = 1u64;
    for _ in 0..(p - 1) / 2 {
        r = r * a % p;
    }
    if r == 1 {
        1
    } else if r == 0 {
        0
    } else {
        -1
    }
}

/// Reduces coordinates in `1, zeta, ..., zeta^(p-1)` using
/// `1 + zeta + ... + zeta^(p-1) = 0`.
fn reduce_full(p: u32, mut full: Vec<SqrtExt>) -> CycloSqrt {
    let top = full.pop().unwrap();
    let coords = full.iter().map(|x| x - &top).collect();
    CycloSqrt { prime: p, coords }
}

impl PartialEq for CycloSqrt {
    fn eq(&self, o: &Self) -> bool {
        match self.joint_prime(o) {
            Ok(p) => {
                let a = CycloSqrt { prime: p, coords: self.promoted(p) }.normalized();
                let b = CycloSqrt { prime: p, coords: o.promoted(p) }.normalized();
                a.coords == b.coords
            }
            Err(_) => self.is_zero() && o.is_zero(),
        }
    }
}

impl Eq for CycloSqrt {}

impl fmt::Display for CycloSqrt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.as_sqrt() {
            return write!(f, "{s}");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z{}", self.prime)?,
                _ => write!(f, "({c})*z{}^{i}", self.prime)?,
            }
        }
        Ok(())
    }
}

impl From<SqrtExt> for CycloSqrt {
    fn from(x: SqrtExt) -> Self {
        Self::scalar(x)
    }
}

impl Default for CycloSqrt {
    fn default() -> Self {
        Self::zero()
    }
}

impl CycloSqrt {
    pub fn sum<'a, I: IntoIterator<Item = &'a CycloSqrt>>(it: I) -> Result<Self> {
        let mut acc = Self::zero();
        for x in it {
            acc = acc.try_add(x)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_relation() {
        for p in [2u32, 3, 5, 7] {
            let mut s = CycloSqrt::zero();
            for k in 0..p as i64 {
                s = s.try_add(&CycloSqrt::zeta_pow(p, k).unwrap()).unwrap();
            }
            assert!(s.is_zero(), "p = {p}");
            let z = CycloSqrt::zeta_pow(p, 1).unwrap();
            let mut acc = CycloSqrt::one();
            for _ in 0..p {
                acc = acc.try_mul(&z).unwrap();
            }
            assert_eq!(acc, CycloSqrt::one());
        }
    }

    #[test]
    fn gauss_sum_squares_to_p_star() {
        for p in [3u32, 5, 7] {
            let mut g = CycloSqrt::zero();
            for a in 1..p as i64 {
                let t = CycloSqrt::zeta_pow(p, a).unwrap().scale(&SqrtExt::from_int(legendre(a as u64, p as u64)));
                g = g.try_add(&t).unwrap();
            }
            let sign = if p % 4 == 1 { 1 } else { -1 };
            assert_eq!(g.try_mul(&g).unwrap(), CycloSqrt::scalar(SqrtExt::from_int(sign * p as i64)));
        }
    }

    #[test]
    fn sqrt5_has_unique_coordinates() {
        // sqrt(5) written directly and as the Gauss sum must compare equal
        let direct = CycloSqrt::scalar(SqrtExt::v_pow(5, 1)).try_mul(&CycloSqrt::one().try_add(&CycloSqrt::zeta_pow(5, 0).unwrap()).unwrap()).unwrap();
        let mut g = CycloSqrt::zero();
        for a in 1..5 {
            let t = CycloSqrt::zeta_pow(5, a).unwrap().scale(&SqrtExt::from_int(2 * legendre(a as u64, 5)));
            g = g.try_add(&t).unwrap();
        }
        assert_eq!(direct, g);
    }

    #[test]
    fn rejects_large_primes() {
        assert!(CycloSqrt::zeta_pow(11, 1).is_err());
    }
}
