use std::fmt;

use num_traits::{One, Zero};

use super::cyclo::CycloSqrt;
use super::ratfunc::RationalFunctionV;
use super::rational::Rational;
use super::sqrt::SqrtExt;
use crate::error::{Error, Result};

/// Commutative coefficient ring for Hall algebra elements.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;

    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
}

/// Coefficients that contain `Q(sqrt(q0))`, so twisted structure constants
/// can be applied to them.
pub trait NumericCoeff: Coeff {
    fn from_sqrt(x: &SqrtExt) -> Self;

    fn scale_sqrt(&self, s: &SqrtExt) -> Self {
        self.mul_ref(&Self::from_sqrt(s))
    }
}

/// Coefficients in which nonzero elements can be inverted.
pub trait FieldCoeff: Coeff {
    fn inv(&self) -> Result<Self>;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl FieldCoeff for Rational {
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

impl Coeff for SqrtExt {
    fn zero() -> Self {
        SqrtExt::zero()
    }
    fn one() -> Self {
        SqrtExt::one()
    }
    fn is_zero(&self) -> bool {
        SqrtExt::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        SqrtExt::rational(r.clone())
    }
}

impl NumericCoeff for SqrtExt {
    fn from_sqrt(x: &SqrtExt) -> Self {
        x.clone()
    }
}

impl FieldCoeff for SqrtExt {
    fn inv(&self) -> Result<Self> {
        SqrtExt::inv(self)
    }
}

impl Coeff for CycloSqrt {
    fn zero() -> Self {
        CycloSqrt::zero()
    }
    fn one() -> Self {
        CycloSqrt::one()
    }
    fn is_zero(&self) -> bool {
        CycloSqrt::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.try_add(o).expect("incompatible cyclotomic coefficients")
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.try_mul(o).expect("incompatible cyclotomic coefficients")
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn from_rational(r: &Rational) -> Self {
        CycloSqrt::scalar(SqrtExt::rational(r.clone()))
    }
}

impl NumericCoeff for CycloSqrt {
    fn from_sqrt(x: &SqrtExt) -> Self {
        CycloSqrt::scalar(x.clone())
    }
}

impl Coeff for RationalFunctionV {
    fn zero() -> Self {
        RationalFunctionV::zero()
    }
    fn one() -> Self {
        RationalFunctionV::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunctionV::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn from_rational(r: &Rational) -> Self {
        RationalFunctionV::from_rational(r.clone())
    }
}

impl FieldCoeff for RationalFunctionV {
    fn inv(&self) -> Result<Self> {
        RationalFunctionV::inv(self)
    }
}
