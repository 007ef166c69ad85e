use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rational::{is_minus_one, is_one, rat, Rational};
use super::sqrt::SqrtExt;

/// Laurent polynomial in `v` with rational coefficients; only nonzero
/// coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolyV {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolyV {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPolyV { terms }
    }

    /// `v^e`.
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// `q^e = v^(2e)`.
    pub fn q_pow(e: i64) -> Self {
        Self::v_pow(2 * e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPolyV { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolyV { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    pub fn shift(&self, k: i64) -> Self {
        LaurentPolyV { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates at `v = sqrt(q0)`.
    pub fn eval_v(&self, q0: u64) -> SqrtExt {
        let mut acc = SqrtExt::rational(Rational::zero());
        for (e, c) in &self.terms {
            let t = &SqrtExt::v_pow(q0, *e) * &SqrtExt::rational(c.clone());
            acc = &acc + &t;
        }
        acc
    }

    /// Splits off the lowest power: `self = v^k * p(v)` with `p(0) != 0`.
    pub(crate) fn to_shifted_poly(&self) -> (i64, Poly) {
        let Some(k) = self.min_exp() else {
            return (0, Poly::zero());
        };
        let deg = (self.max_exp().unwrap() - k) as usize;
        let mut v = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            v[(e - k) as usize] = c.clone();
        }
        (k, Poly(v))
    }

    pub(crate) fn from_poly(p: &Poly, shift: i64) -> Self {
        Self::from_terms(p.0.iter().enumerate().map(|(i, c)| (i as i64 + shift, c.clone())))
    }

    pub(crate) fn fmt_term(f: &mut fmt::Formatter<'_>, e: i64, c: &Rational, first: bool) -> fmt::Result {
        let neg = c.is_negative();
        if !first {
            write!(f, "{}", if neg { "-" } else { "+" })?;
        } else if neg {
            write!(f, "-")?;
        }
        let a = c.abs();
        if e == 0 {
            return write!(f, "{a}");
        }
        if !is_one(&a) {
            write!(f, "{a}*")?;
        }
        if e == 1 {
            write!(f, "v")
        } else {
            write!(f, "v^{e}")
        }
    }

    pub(crate) fn is_single_positive_term(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.is_positive())
    }

    pub fn is_constant_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(is_one)
    }

    pub(crate) fn is_constant_minus_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(is_minus_one)
    }
}

impl fmt::Display for LaurentPolyV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            Self::fmt_term(f, *e, c, i == 0)?;
        }
        Ok(())
    }
}

impl From<i64> for LaurentPolyV {
    fn from(n: i64) -> Self {
        Self::constant(rat(n))
    }
}
