//! Elements `a + b*sqrt(q0)` of the quadratic field in which `v = sqrt(q0)`
//! is evaluated.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{exact_sqrt, is_minus_one, is_one, parse_rational, rat, rat_pow, Rational};
use crate::error::{Error, Result};

/// `a + b*sqrt(base)`.
///
/// When `b = 0` the element is a plain rational and carries no meaningful
/// base; it combines freely with elements of any base. Perfect-square bases
/// fold the root into `a`, so `b` is always zero for them.
#[derive(Clone, Debug)]
pub struct SqrtExt {
    base: u64,
    a: Rational,
    b: Rational,
}

impl SqrtExt {
    pub fn new(base: u64, a: Rational, b: Rational) -> Self {
        if b.is_zero() {
            return SqrtExt { base, a, b };
        }
        match exact_sqrt(base) {
            Some(r) => SqrtExt { base, a: a + b * rat(r as i64), b: Rational::zero() },
            None => SqrtExt { base, a, b },
        }
    }

    pub fn rational(a: Rational) -> Self {
        SqrtExt { base: 0, a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(rat(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `sqrt(q0)^k`.
    pub fn v_pow(q0: u64, k: i64) -> Self {
        let q = rat(q0 as i64);
        let half = k.div_euclid(2);
        let odd = k.rem_euclid(2) == 1;
        let c = rat_pow(&q, half);
        if odd {
            SqrtExt::new(q0, Rational::zero(), c)
        } else {
            SqrtExt { base: q0, a: c, b: Rational::zero() }
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// The base, or `None` for a plain rational.
    pub fn base(&self) -> Option<u64> {
        (!self.b.is_zero()).then_some(self.base)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    fn joint_base(&self, o: &Self) -> Result<u64> {
        match (self.base(), o.base()) {
            (Some(x), Some(y)) if x != y => Err(Error::BaseMismatch(x, y)),
            (Some(x), _) | (None, Some(x)) => Ok(x),
            (None, None) => Ok(if self.base != 0 { self.base } else { o.base }),
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let base = self.joint_base(o)?;
        Ok(SqrtExt::new(base, &self.a + &o.a, &self.b + &o.b))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let base = self.joint_base(o)?;
        let qb = rat(base as i64);
        let a = &self.a * &o.a + &self.b * &o.b * qb;
        let b = &self.a * &o.b + &self.b * &o.a;
        Ok(SqrtExt::new(base, a, b))
    }

    /// Galois conjugate `a - b*sqrt(q0)`.
    pub fn conj(&self) -> Self {
        SqrtExt { base: self.base, a: self.a.clone(), b: -&self.b }
    }

    /// Field norm `a^2 - q0 b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * rat(self.base as i64)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(SqrtExt::new(self.base, c.a / &n, c.b / n))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = SqrtExt { base: self.base, a: Rational::one(), b: Rational::zero() };
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Parses the rendering produced by `Display`, e.g. `3/2-1/2*sqrt(2)`.
    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad quadratic element `{s}`"));
        let Some(idx) = s.find("sqrt(") else {
            return Ok(Self::rational(parse_rational(&s)?));
        };
        let inner = s[idx + 5..].strip_suffix(')').ok_or_else(bad)?;
        let base: u64 = inner.parse().map_err(|_| bad())?;
        let head = &s[..idx];
        // split head into the rational part and the root coefficient
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (a_txt, b_txt) = match split {
            Some(i) if !head[..i].ends_with('/') => (&head[..i], &head[i..]),
            _ => ("", head),
        };
        let a = if a_txt.is_empty() { Rational::zero() } else { parse_rational(a_txt)? };
        let b_txt = b_txt.strip_prefix('+').unwrap_or(b_txt);
        let b = match b_txt {
            "" => Rational::one(),
            "-" => -Rational::one(),
            t => parse_rational(t.strip_suffix('*').ok_or_else(bad)?)?,
        };
        if b.is_zero() {
            return Err(bad());
        }
        Ok(SqrtExt::new(base, a, b))
    }
}

impl PartialEq for SqrtExt {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && (self.b.is_zero() || self.base == o.base)
    }
}

impl Eq for SqrtExt {}

impl Hash for SqrtExt {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.a.hash(h);
        self.b.hash(h);
        if !self.b.is_zero() {
            self.base.hash(h);
        }
    }
}

impl fmt::Display for SqrtExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if self.b.is_positive() {
                write!(f, "+")?;
            }
        }
        if is_one(&self.b) {
            write!(f, "sqrt({})", self.base)
        } else if is_minus_one(&self.b) {
            write!(f, "-sqrt({})", self.base)
        } else {
            write!(f, "{}*sqrt({})", self.b, self.base)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a SqrtExt> for &'a SqrtExt {
            type Output = SqrtExt;
            fn $m(self, o: &'a SqrtExt) -> SqrtExt {
                let f: fn(&SqrtExt, &SqrtExt) -> SqrtExt = $body;
                f(self, o)
            }
        }
        impl $tr for SqrtExt {
            type Output = SqrtExt;
            fn $m(self, o: SqrtExt) -> SqrtExt {
                (&self).$m(&o)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| x.try_add(y).expect("sqrt base mismatch"));
forward_binop!(Sub, sub, |x, y| x.try_add(&-y).expect("sqrt base mismatch"));
forward_binop!(Mul, mul, |x, y| x.try_mul(y).expect("sqrt base mismatch"));
forward_binop!(Div, div, |x, y| x
    .try_mul(&y.inv().expect("division by zero"))
    .expect("sqrt base mismatch"));

impl Neg for &SqrtExt {
    type Output = SqrtExt;
    fn neg(self) -> SqrtExt {
        SqrtExt { base: self.base, a: -&self.a, b: -&self.b }
    }
}

impl Neg for SqrtExt {
    type Output = SqrtExt;
    fn neg(self) -> SqrtExt {
        -&self
    }
}

impl From<Rational> for SqrtExt {
    fn from(r: Rational) -> Self {
        SqrtExt::rational(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rational::ratio;

    #[test]
    fn v_powers() {
        let v = SqrtExt::v_pow(2, 1);
        assert_eq!(&v * &v, SqrtExt::from_int(2));
        assert_eq!(SqrtExt::v_pow(2, -1), SqrtExt::new(2, rat(0), ratio(1, 2)));
        assert_eq!(SqrtExt::v_pow(4, 3), SqrtExt::from_int(8));
        assert_eq!(SqrtExt::v_pow(3, -2), SqrtExt::rational(ratio(1, 3)));
    }

    #[test]
    fn inverse_and_norm() {
        let x = SqrtExt::new(3, rat(1), rat(2));
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, SqrtExt::one());
        assert_eq!(x.norm(), rat(1 - 12));
        assert_eq!(SqrtExt::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixing_bases_is_rejected() {
        let x = SqrtExt::v_pow(2, 1);
        let y = SqrtExt::v_pow(3, 1);
        assert_eq!(x.try_mul(&y), Err(Error::BaseMismatch(2, 3)));
        // plain rationals mix with anything
        assert!(x.try_add(&SqrtExt::from_int(5)).is_ok());
    }

    #[test]
    fn display_parse_roundtrip() {
        for x in [
            SqrtExt::new(2, ratio(3, 2), ratio(-1, 2)),
            SqrtExt::new(3, rat(0), rat(1)),
            SqrtExt::new(3, rat(0), rat(-1)),
            SqrtExt::new(5, rat(-7), rat(2)),
            SqrtExt::from_int(-4),
            SqrtExt::rational(ratio(-5, 3)),
        ] {
            let s = x.to_string();
            assert_eq!(SqrtExt::parse(&s).unwrap(), x, "{s}");
        }
        assert_eq!(SqrtExt::new(2, ratio(3, 2), ratio(-1, 2)).to_string(), "3/2-1/2*sqrt(2)");
    }
}
