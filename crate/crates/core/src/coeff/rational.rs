use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_u128(n: u128) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `q0^k` for any integer `k`; `q0` must be nonzero when `k < 0`.
pub fn rat_pow(q0: &Rational, k: i64) -> Rational {
    if k >= 0 {
        num_traits::pow(q0.clone(), k as usize)
    } else {
        num_traits::pow(q0.recip(), (-k) as usize)
    }
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

pub(crate) fn is_one(r: &Rational) -> bool {
    r.is_one()
}

pub(crate) fn is_minus_one(r: &Rational) -> bool {
    r.is_negative() && r.abs().is_one()
}

/// Integer square root of `n` if `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&c| c.checked_mul(c) == Some(n))
}
