//! Partitions and the closed-form counts built from them: the automorphism
//! orders `a_lambda(q)` of nilpotent Jordan-quiver modules and the number of
//! monic irreducible polynomials of each degree.

use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::rational::{rat, ratio};
use crate::coeff::{QPoly, Rational, RationalFunctionV};
use crate::error::{Error, Result};

pub const MAX_PARTITION_SIZE: u32 = 30;

/// Symbolic in `q`, or specialised at a prime power `q0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Numeric(u64),
}

/// Result of a counting function: a polynomial in `q`, or its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Count {
    Poly(QPoly),
    Value(BigInt),
}

impl Count {
    fn from_poly(p: QPoly, mode: Mode) -> Count {
        match mode {
            Mode::Symbolic => Count::Poly(p),
            Mode::Numeric(q0) => {
                let v = p.eval_u64(q0);
                debug_assert!(v.is_integer());
                Count::Value(v.to_integer())
            }
        }
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Poly(p) => write!(f, "{p}"),
            Count::Value(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts into decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `n(lambda) = sum (i-1) lambda_i`.
    pub fn n_lambda(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Reads `(3,1,1)`; items may be written `a^m` for `m` copies of `a`,
    /// which covers the exponential form `(1^2,3^1)`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad partition `{s}`"));
        let inner = s.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for item in inner.split(',') {
            let (a, m) = match item.split_once('^') {
                Some((a, m)) => (a, m.trim().parse::<u32>().map_err(|_| bad())?),
                None => (item, 1),
            };
            let a: u32 = a.trim().parse().map_err(|_| bad())?;
            if a == 0 {
                return Err(bad());
            }
            if parts.len() as u64 + m as u64 > 4096 {
                return Err(Error::CapExceeded(format!("partition `{s}` too long")));
            }
            parts.extend(std::iter::repeat(a).take(m as usize));
        }
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

fn cache() -> &'static Mutex<Vec<Option<std::sync::Arc<Vec<Partition>>>>> {
    static CACHE: OnceLock<Mutex<Vec<Option<std::sync::Arc<Vec<Partition>>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![None; MAX_PARTITION_SIZE as usize + 1]))
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Result<std::sync::Arc<Vec<Partition>>> {
    if n > MAX_PARTITION_SIZE {
        return Err(Error::InvalidParameter(format!("partitions of {n} exceed the cap {MAX_PARTITION_SIZE}")));
    }
    if let Some(v) = &cache().lock().unwrap()[n as usize] {
        return Ok(v.clone());
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen(n, n, &mut cur, &mut out);
    let v = std::sync::Arc::new(out);
    cache().lock().unwrap()[n as usize] = Some(v.clone());
    Ok(v)
}

fn gen(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        gen(rest - p, p, cur, out);
        cur.pop();
    }
}

/// `prod_{j=1}^{t} (q^j - 1)` as a polynomial.
fn q_falling(t: u32) -> QPoly {
    let mut acc = QPoly::one();
    for j in 1..=t {
        acc = acc.mul(&QPoly::q_pow(j as usize).sub(&QPoly::one()));
    }
    acc
}

/// `a_lambda(q) = q^(|lambda| + 2 n(lambda)) prod_i prod_{j<=t_i} (1 - q^-j)`
/// with `t_i` the multiplicity of the part `i`; `a_() = 1`.
pub fn a_lambda_poly(l: &Partition) -> QPoly {
    let mut shift = l.size() as i64 + 2 * l.n_lambda() as i64;
    let mut acc = QPoly::one();
    for (_, t) in l.multiplicities() {
        shift -= (t as i64) * (t as i64 + 1) / 2;
        acc = acc.mul(&q_falling(t));
    }
    debug_assert!(shift >= 0);
    acc.mul(&QPoly::q_pow(shift as usize))
}

pub fn a_lambda(l: &Partition, mode: Mode) -> Count {
    Count::from_poly(a_lambda_poly(l), mode)
}

pub fn a_lambda_at(l: &Partition, q0: u64) -> BigInt {
    a_lambda_poly(l).eval_u64(q0).to_integer()
}

pub fn mobius(n: u64) -> i64 {
    let (mut m, mut k, mut d) = (n, 0, 2);
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            k += 1;
        }
        d += 1;
    }
    if m > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of monic irreducible polynomials of degree `s` over `F_q`,
/// `(1/s) sum_{d | s} mu(d) q^(s/d)`.
pub fn phi_irreducible_poly(s: u32) -> Result<QPoly> {
    if s == 0 {
        return Err(Error::InvalidParameter("degree must be positive".into()));
    }
    let mut acc = QPoly::zero();
    for d in (1..=s).filter(|d| s % d == 0) {
        let mu = mobius(d as u64);
        if mu != 0 {
            acc = acc.add(&QPoly::q_pow((s / d) as usize).scale(&rat(mu)));
        }
    }
    Ok(acc.scale(&ratio(1, s as i64)))
}

pub fn phi_irreducible_count(s: u32, mode: Mode) -> Result<Count> {
    Ok(Count::from_poly(phi_irreducible_poly(s)?, mode))
}

/// `prod_{s=1}^{len-1} (1 - q^(s e))`, the coefficient of `[I_lambda]` in the
/// primitive elements (with `e` the degree of the tube).
pub fn prod_one_minus(l: &Partition, e: u32) -> QPoly {
    let mut acc = QPoly::one();
    for s in 1..l.len() {
        acc = acc.mul(&QPoly::one().sub(&QPoly::q_pow(s * e as usize)));
    }
    acc
}

/// Partition-sum identities, as `(lhs, rhs)` rational functions in `v`.
pub mod identities {
    use super::*;

    fn q_n_minus_one(n: u32) -> RationalFunctionV {
        RationalFunctionV::q_pow(n as i64).sub(&RationalFunctionV::one())
    }

    fn sum_over(n: u32, f: impl Fn(&Partition) -> QPoly) -> Result<RationalFunctionV> {
        let mut acc = RationalFunctionV::zero();
        for l in partitions_of(n)?.iter() {
            let term = f(l).to_ratfunc().div(&a_lambda_poly(l).to_ratfunc())?;
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// `sum prod(1-q^s)/a_lambda` against `1/(q^n - 1)`.
    pub fn xi(n: u32) -> Result<(RationalFunctionV, RationalFunctionV)> {
        let lhs = sum_over(n, |l| prod_one_minus(l, 1))?;
        Ok((lhs, q_n_minus_one(n).inv()?))
    }

    /// `sum prod(1-q^s)^2/a_lambda` against `n/(q^n - 1)`.
    pub fn squared(n: u32) -> Result<(RationalFunctionV, RationalFunctionV)> {
        let lhs = sum_over(n, |l| {
            let p = prod_one_minus(l, 1);
            p.mul(&p)
        })?;
        Ok((lhs, RationalFunctionV::from_int(n as i64).div(&q_n_minus_one(n))?))
    }

    /// `sum 1/a_lambda` against `q^(n(n-1)/2) / prod_{i<=n} (q^i - 1)`.
    pub fn hua(n: u32) -> Result<(RationalFunctionV, RationalFunctionV)> {
        let lhs = sum_over(n, |_| QPoly::one())?;
        let mut den = RationalFunctionV::one();
        for i in 1..=n {
            den = den.mul(&q_n_minus_one(i));
        }
        let rhs = RationalFunctionV::q_pow((n as i64) * (n as i64 - 1) / 2).div(&den)?;
        Ok((lhs, rhs))
    }

    /// Same as [`xi`] but summed exactly at `q = q0`.
    pub fn xi_at(n: u32, q0: u64) -> Result<(Rational, Rational)> {
        let q = rat(q0 as i64);
        let mut acc = Rational::zero();
        for l in partitions_of(n)?.iter() {
            acc += prod_one_minus(l, 1).eval(&q) / a_lambda_poly(l).eval(&q);
        }
        let rhs = Rational::one() / (crate::coeff::rational::rat_pow(&q, n as i64) - Rational::one());
        Ok((acc, rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order() {
        let v: Vec<String> = partitions_of(4).unwrap().iter().map(|l| l.to_string()).collect();
        assert_eq!(v, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(*partitions_of(0).unwrap(), vec![Partition::empty()]);
        assert!(partitions_of(31).is_err());
    }

    /// Euler's pentagonal recurrence as an independent count.
    #[test]
    fn pentagonal_counts() {
        let mut pn = vec![1i64];
        for n in 1..=30i64 {
            let mut s = 0;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                s += sign * pn[(n - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    s += sign * pn[(n - g2) as usize];
                }
            }
            pn.push(s);
            assert_eq!(partitions_of(n as u32).unwrap().len() as i64, s, "n = {n}");
        }
    }

    #[test]
    fn a_lambda_examples() {
        assert_eq!(a_lambda_poly(&p(&[1])), QPoly::from_coeffs(vec![rat(-1), rat(1)]));
        assert_eq!(a_lambda_at(&p(&[1, 1]), 2), BigInt::from(6));
        assert_eq!(a_lambda_poly(&p(&[2])), QPoly::from_coeffs(vec![rat(0), rat(-1), rat(1)]));
        assert_eq!(a_lambda_poly(&Partition::empty()), QPoly::one());
    }

    #[test]
    fn phi_examples_and_necklace_identity() {
        assert_eq!(phi_irreducible_poly(1).unwrap(), QPoly::q_pow(1));
        assert_eq!(phi_irreducible_count(2, Mode::Numeric(2)).unwrap(), Count::Value(BigInt::from(1)));
        assert_eq!(phi_irreducible_count(3, Mode::Numeric(2)).unwrap(), Count::Value(BigInt::from(2)));
        for q0 in [2u64, 3, 4, 5] {
            for n in 1..=6u32 {
                let mut s = BigInt::zero();
                for d in (1..=n).filter(|d| n % d == 0) {
                    let Count::Value(c) = phi_irreducible_count(d, Mode::Numeric(q0)).unwrap() else { unreachable!() };
                    s += c * BigInt::from(d);
                }
                assert_eq!(s, BigInt::from(q0).pow(n));
            }
        }
    }

    /// Exhaustive irreducibility count over GF(2) and GF(3).
    #[test]
    fn phi_matches_exhaustive_irreducibility() {
        use crate::gf::is_irreducible;
        for (p, max_s) in [(2u32, 6u32), (3, 4)] {
            for s in 1..=max_s {
                let count = (0..(p as u64).pow(s))
                    .filter(|&code| {
                        let mut f: Vec<u32> = (0..s).map(|i| ((code / (p as u64).pow(i)) % p as u64) as u32).collect();
                        f.push(1);
                        is_irreducible(&f, p)
                    })
                    .count();
                let Count::Value(c) = phi_irreducible_count(s, Mode::Numeric(p as u64)).unwrap() else { unreachable!() };
                assert_eq!(c, BigInt::from(count), "p={p} s={s}");
            }
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Partition::parse("(3,1,1)").unwrap(), p(&[3, 1, 1]));
        assert_eq!(Partition::parse("(1^2,3^1)").unwrap(), p(&[3, 1, 1]));
        assert_eq!(Partition::parse("()").unwrap(), Partition::empty());
        assert_eq!(Partition::parse(" ( 2 , 2 ) ").unwrap(), p(&[2, 2]));
        for bad in ["3,1", "(0)", "(a)", "(1^x)", "(1,,2)", ""] {
            assert!(Partition::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn identities_small_n() {
        for n in 1..=5 {
            let (l, r) = identities::xi(n).unwrap();
            assert_eq!(l, r, "xi n={n}");
            let (l, r) = identities::squared(n).unwrap();
            assert_eq!(l, r, "squared n={n}");
            let (l, r) = identities::hua(n).unwrap();
            assert_eq!(l, r, "hua n={n}");
        }
    }
}
