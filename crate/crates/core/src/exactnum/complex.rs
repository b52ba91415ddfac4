use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use super::{forward_binop, QuadReal, Rational};
use crate::error::{Error, Result};

/// `re + im*i` with both parts in Q(sqrt D).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadComplex {
    re: QuadReal,
    im: QuadReal,
}

impl QuadComplex {
    pub fn new(re: QuadReal, im: QuadReal) -> Result<Self> {
        if re.delta() != im.delta() {
            return Err(Error::DeltaMismatch(re.delta(), im.delta()));
        }
        Ok(Self { re, im })
    }

    pub fn zero(delta: i64) -> Result<Self> {
        let z = QuadReal::zero(delta)?;
        Ok(Self { re: z.clone(), im: z })
    }

    pub fn from_real(re: QuadReal) -> Self {
        let im = QuadReal::from_parts(Rational::zero(), Rational::zero(), re.delta());
        Self { re, im }
    }

    pub fn re(&self) -> &QuadReal {
        &self.re
    }

    pub fn im(&self) -> &QuadReal {
        &self.im
    }

    pub fn delta(&self) -> i64 {
        self.re.delta()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(Self { re: self.re.try_add(&other.re)?, im: self.im.try_add(&other.im)? })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(Self { re: self.re.try_sub(&other.re)?, im: self.im.try_sub(&other.im)? })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let re = self.re.try_mul(&other.re)?.try_sub(&self.im.try_mul(&other.im)?)?;
        let im = self.re.try_mul(&other.im)?.try_add(&self.im.try_mul(&other.re)?)?;
        Ok(Self { re, im })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        let den = other.re.try_mul(&other.re)?.try_add(&other.im.try_mul(&other.im)?)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let conj = Self { re: other.re.clone(), im: -&other.im };
        let num = self.try_mul(&conj)?;
        Ok(Self { re: num.re.try_div(&den)?, im: num.im.try_div(&den)? })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { re: self.re.scale(c), im: self.im.scale(c) }
    }

    pub fn try_add_real(&self, x: &QuadReal) -> Result<Self> {
        Ok(Self { re: self.re.try_add(x)?, im: self.im.clone() })
    }
}

impl fmt::Display for QuadComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "({})i", self.im)
        } else {
            write!(f, "{} + ({})i", self.re, self.im)
        }
    }
}

forward_binop!(Add, add, try_add, QuadComplex);
forward_binop!(Sub, sub, try_sub, QuadComplex);
forward_binop!(Mul, mul, try_mul, QuadComplex);
forward_binop!(Div, div, try_div, QuadComplex);

impl Neg for &QuadComplex {
    type Output = QuadComplex;
    fn neg(self) -> QuadComplex {
        QuadComplex { re: -&self.re, im: -&self.im }
    }
}

impl Neg for QuadComplex {
    type Output = QuadComplex;
    fn neg(self) -> QuadComplex {
        -&self
    }
}
