//! Rational functions in `v` (with `q = v^2`) in canonical reduced form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPolyV;
use super::poly::Poly;
use super::rational::Rational;
use super::sqrt::SqrtExt;
use crate::error::{Error, Result};

/// `num / den` in lowest terms.
///
/// The denominator is a monic ordinary polynomial with nonzero constant term;
/// any power of `v` lives in the numerator. With that normalization two
/// functions are equal exactly when their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunctionV {
    num: LaurentPolyV,
    den: LaurentPolyV,
}

impl Default for RationalFunctionV {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunctionV {
    pub fn zero() -> Self {
        RationalFunctionV { num: LaurentPolyV::zero(), den: LaurentPolyV::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPolyV::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_laurent(LaurentPolyV::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentPolyV::from(n))
    }

    pub fn from_laurent(p: LaurentPolyV) -> Self {
        RationalFunctionV { num: p, den: LaurentPolyV::one() }
    }

    pub fn v_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPolyV::v_pow(e))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::v_pow(2 * e)
    }

    /// `num / den`, reduced.
    pub fn new(num: LaurentPolyV, den: LaurentPolyV) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (kn, pn) = num.to_shifted_poly();
        let (kd, pd) = den.to_shifted_poly();
        Ok(Self::from_polys(pn, pd, kn - kd, true))
    }

    fn from_polys(pn: Poly, pd: Poly, shift: i64, reduce: bool) -> Self {
        if pn.is_zero() {
            return Self::zero();
        }
        let (pn, pd) = if reduce {
            let g = pn.gcd(&pd);
            if g.is_one() {
                (pn, pd)
            } else {
                (pn.divrem(&g).0, pd.divrem(&g).0)
            }
        } else {
            (pn, pd)
        };
        let lc = pd.lc().unwrap().recip();
        RationalFunctionV {
            num: LaurentPolyV::from_poly(&pn.scale(&lc), shift),
            den: LaurentPolyV::from_poly(&pd.scale(&lc), 0),
        }
    }

    pub fn numerator(&self) -> &LaurentPolyV {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolyV {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_constant_one() && self.den.is_constant_one()
    }

    fn parts(&self) -> (i64, Poly, Poly) {
        let (k, pn) = self.num.to_shifted_poly();
        (k, pn, self.den.to_shifted_poly().1)
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (k1, n1, d1) = self.parts();
        let (k2, n2, d2) = o.parts();
        // bring both numerators to a common power of v
        let k = k1.min(k2);
        let n1 = shift_poly(&n1, (k1 - k) as usize);
        let n2 = shift_poly(&n2, (k2 - k) as usize);
        let g = d1.gcd(&d2);
        let (c1, c2) = if g.is_one() { (d2.clone(), d1.clone()) } else { (d2.divrem(&g).0, d1.divrem(&g).0) };
        let num = n1.mul(&c1).add(&n2.mul(&c2));
        if num.is_zero() {
            return Self::zero();
        }
        let den = d1.mul(&c1);
        let (low, num) = strip_low(num);
        // only factors of g can survive in common
        let h = num.gcd(&g);
        let (num, den) = if h.is_one() { (num, den) } else { (num.divrem(&h).0, den.divrem(&h).0) };
        Self::from_polys(num, den, k + low as i64, false)
    }

    pub fn neg(&self) -> Self {
        RationalFunctionV { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let (k1, n1, d1) = self.parts();
        let (k2, n2, d2) = o.parts();
        let g1 = n1.gcd(&d2);
        let g2 = n2.gcd(&d1);
        let (n1, d2) = if g1.is_one() { (n1, d2) } else { (n1.divrem(&g1).0, d2.divrem(&g1).0) };
        let (n2, d1) = if g2.is_one() { (n2, d1) } else { (n2.divrem(&g2).0, d1.divrem(&g2).0) };
        Self::from_polys(n1.mul(&n2), d1.mul(&d2), k1 + k2, false)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (k, n, d) = self.parts();
        Ok(Self::from_polys(d, n, -k, false))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let (k, n, d) = base.parts();
        let m = e.unsigned_abs() as u32;
        Ok(Self::from_polys(n.pow(m), d.pow(m), k * m as i64, false))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunctionV { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Substitutes `v = sqrt(q0)`; errors at a pole.
    pub fn eval_v(&self, q0: u64) -> Result<SqrtExt> {
        let d = self.den.eval_v(q0);
        if d.is_zero() {
            return Err(Error::Pole(q0));
        }
        Ok(&self.num.eval_v(q0) / &d)
    }

    /// Returns the Laurent polynomial when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPolyV> {
        self.den.is_constant_one().then_some(&self.num)
    }

    pub fn parse(s: &str) -> Result<Self> {
        Parser::new(s).parse_all()
    }
}

fn shift_poly(p: &Poly, k: usize) -> Poly {
    if k == 0 {
        return p.clone();
    }
    let mut v = vec![Rational::zero(); k];
    v.extend(p.0.iter().cloned());
    Poly(v)
}

fn strip_low(p: Poly) -> (usize, Poly) {
    let low = p.0.iter().position(|c| !c.is_zero()).unwrap_or(0);
    (low, Poly(p.0[low..].to_vec()))
}

impl fmt::Display for RationalFunctionV {
    /// Canonical text, e.g. `(v^2-1)^-1 * v^4`; `parse` reads it back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})^-1 * ", self.den)?;
        if self.num.is_single_positive_term() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})", self.num)
        }
    }
}

impl From<LaurentPolyV> for RationalFunctionV {
    fn from(p: LaurentPolyV) -> Self {
        Self::from_laurent(p)
    }
}

const MAX_EXPONENT: i64 = 256;
const MAX_DEPTH: usize = 64;

/// Recursive-descent reader for expressions in `v` and `q` built from
/// integers, `+ - * /`, integer powers and parentheses.
struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { s: s.as_bytes(), pos: 0, depth: 0 }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_all(mut self) -> Result<RationalFunctionV> {
        let r = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(r)
    }

    fn expr(&mut self) -> Result<RationalFunctionV> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("nesting too deep"));
        }
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunctionV> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(b'/') {
                let d = self.unary()?;
                acc = acc.div(&d)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunctionV> {
        if self.eat(b'-') {
            self.depth += 1;
            if self.depth > MAX_DEPTH {
                return Err(self.err("nesting too deep"));
            }
            let r = self.unary()?.neg();
            self.depth -= 1;
            return Ok(r);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let e = self.integer()?;
            let e: i64 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            if e > MAX_EXPONENT {
                return Err(self.err("exponent too large"));
            }
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos || self.pos - start > 4096 {
            return Err(self.err("expected integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn atom(&mut self) -> Result<RationalFunctionV> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let r = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(r)
            }
            Some(b'v') => {
                self.pos += 1;
                Ok(RationalFunctionV::v_pow(1))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(RationalFunctionV::v_pow(2))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunctionV::from_rational(Rational::from_integer(n)))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

impl RationalFunctionV {
    /// True when the value is a polynomial in `q` with nonnegative powers.
    pub fn is_q_polynomial(&self) -> bool {
        match self.as_laurent() {
            Some(p) => p.terms().all(|(e, _)| e >= 0 && e % 2 == 0),
            None => false,
        }
    }

    pub fn is_minus_one(&self) -> bool {
        self.num.is_constant_minus_one() && self.den.is_constant_one()
    }

    pub fn is_unit_scalar(&self) -> bool {
        self.as_laurent().is_some_and(|p| p.len() == 1 && p.coeff(0).abs().is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rational::{rat, ratio};

    fn q() -> RationalFunctionV {
        RationalFunctionV::q_pow(1)
    }

    #[test]
    fn canonical_reduction() {
        // (q^2 - 1)/(q - 1) = q + 1
        let a = q().pow(2).unwrap().sub(&RationalFunctionV::one());
        let b = q().sub(&RationalFunctionV::one());
        let r = a.div(&b).unwrap();
        assert_eq!(r, q().add(&RationalFunctionV::one()));
        assert!(r.as_laurent().is_some());
    }

    #[test]
    fn rendering_example() {
        // q^2/(q-1) renders with a monic denominator
        let r = q().pow(2).unwrap().div(&q().sub(&RationalFunctionV::one())).unwrap();
        assert_eq!(r.to_string(), "(v^2-1)^-1 * v^4");
        assert_eq!(RationalFunctionV::parse("(v^2-1)^-1 * v^4").unwrap(), r);
    }

    #[test]
    fn eval_and_poles() {
        let r = RationalFunctionV::parse("(q-1)^-1").unwrap();
        assert_eq!(r.eval_v(3).unwrap(), SqrtExt::rational(ratio(1, 2)));
        assert_eq!(r.eval_v(1), Err(Error::Pole(1)));
        let v = RationalFunctionV::v_pow(1);
        assert_eq!(v.eval_v(2).unwrap(), SqrtExt::v_pow(2, 1));
    }

    #[test]
    fn zero_division() {
        assert_eq!(RationalFunctionV::one().div(&RationalFunctionV::zero()), Err(Error::DivisionByZero));
        assert!(RationalFunctionV::parse("1/(v-v)").is_err());
    }

    #[test]
    fn roundtrip_mixed() {
        for s in ["0", "1", "-v^-3+1/2", "(q+1)*(q-1)/(v^3*(2*q-5))", "-(v^2+1)/(3*v^4+v)", "7/3*v^-2"] {
            let r = RationalFunctionV::parse(s).unwrap();
            let t = r.to_string();
            assert_eq!(RationalFunctionV::parse(&t).unwrap(), r, "{s} -> {t}");
        }
        assert_eq!(RationalFunctionV::parse("6/4").unwrap(), RationalFunctionV::from_rational(ratio(3, 2)));
        assert_eq!(RationalFunctionV::parse("q^0").unwrap(), RationalFunctionV::from_rational(rat(1)));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "v+", "(v", "v^", "x", "2**v", "v^99999999999"] {
            assert!(RationalFunctionV::parse(s).is_err(), "{s}");
        }
    }
}
