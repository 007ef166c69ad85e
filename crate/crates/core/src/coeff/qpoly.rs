use std::fmt;

use num_traits::{One, Zero};

use super::laurent::LaurentPolyV;
use super::poly::Poly;
use super::ratfunc::RationalFunctionV;
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

/// Polynomial in `q` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly(Poly);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        QPoly(Poly::constant(c))
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = Rational::one();
        QPoly(Poly(v))
    }

    pub fn from_coeffs(c: Vec<Rational>) -> Self {
        let mut p = Poly(c);
        p.trim();
        QPoly(p)
    }

    /// Coefficients from the constant term upward.
    pub fn coeffs(&self) -> &[Rational] {
        &self.0 .0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        QPoly(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &Self) -> Self {
        QPoly(self.0.sub(&o.0))
    }

    pub fn mul(&self, o: &Self) -> Self {
        QPoly(self.0.mul(&o.0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QPoly(self.0.scale(c))
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.0.eval(q)
    }

    pub fn eval_u64(&self, q0: u64) -> Rational {
        self.eval(&rat(q0 as i64))
    }

    pub fn to_ratfunc(&self) -> RationalFunctionV {
        RationalFunctionV::from_laurent(LaurentPolyV::from_terms(
            self.coeffs().iter().enumerate().map(|(i, c)| (2 * i as i64, c.clone())),
        ))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = if neg { -c } else { c.clone() };
            match (e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{a}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Lagrange interpolation of a polynomial in `q` of degree at most
/// `degree_bound`. The first `degree_bound + 1` points determine the
/// polynomial; every further point must agree with it.
pub fn interpolate_q(points: &[(Rational, Rational)], degree_bound: usize) -> Result<QPoly> {
    if points.len() < degree_bound + 1 {
        return Err(Error::InvalidParameter(format!(
            "need {} points for degree bound {degree_bound}, got {}",
            degree_bound + 1,
            points.len()
        )));
    }
    let fit = &points[..degree_bound + 1];
    for (i, (x, _)) in fit.iter().enumerate() {
        if fit[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::InvalidParameter(format!("repeated sample point q = {x}")));
        }
    }
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in fit.iter().enumerate() {
        let mut basis = Poly::constant(Rational::one());
        let mut denom = Rational::one();
        for (j, (xj, _)) in fit.iter().enumerate() {
            if i != j {
                basis = basis.mul(&Poly(vec![-xj, Rational::one()]));
                denom *= xi - xj;
            }
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    let p = QPoly(acc);
    for (x, y) in &points[degree_bound + 1..] {
        let got = p.eval(x);
        if &got != y {
            return Err(Error::Inconsistent { q: x.to_string(), expected: y.to_string(), got: got.to_string() });
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|&(x, y)| (rat(x), rat(y))).collect()
    }

    #[test]
    fn linear_fit() {
        let p = interpolate_q(&pts(&[(2, 3), (3, 4), (5, 6)]), 1).unwrap();
        assert_eq!(p, QPoly::from_coeffs(vec![rat(1), rat(1)]));
        assert_eq!(p.to_string(), "q + 1");
    }

    #[test]
    fn inconsistent_data_names_point() {
        let e = interpolate_q(&pts(&[(2, 3), (3, 4), (5, 7)]), 1).unwrap_err();
        assert!(matches!(e, Error::Inconsistent { ref q, .. } if q == "5"));
    }

    #[test]
    fn too_few_points() {
        assert!(interpolate_q(&pts(&[(2, 3)]), 1).is_err());
    }
}
