//! Exact scalars: rationals, real quadratic irrationals `p + q*sqrt(D)` and
//! complex numbers whose parts are such irrationals.
//!
//! Nothing in here touches floating point except [`QuadReal::to_f64`], which
//! exists for diagnostics only.

mod complex;
pub mod text;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use complex::QuadComplex;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Builds `n/d`. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Writes `n = s^2 * m` with `m` square-free and returns `(s, m)`.
pub fn square_free_decomposition(n: i64) -> (i64, i64) {
    assert!(n > 0, "square-free decomposition of non-positive {n}");
    let mut m = n;
    let mut s = 1;
    let mut p = 2;
    while p * p <= m {
        while m % (p * p) == 0 {
            m /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, m)
}

/// Sign of a rational as -1, 0 or +1.
pub fn rational_sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

fn check_delta(delta: i64) -> Result<()> {
    if delta <= 0 || is_perfect_square(&BigInt::from(delta)) {
        Err(Error::InvalidDelta(delta))
    } else {
        Ok(())
    }
}

/// The real number `rat + irr*sqrt(delta)` with `delta` a positive non-square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadReal {
    rat: Rational,
    irr: Rational,
    delta: i64,
}

impl QuadReal {
    pub fn new(rat: Rational, irr: Rational, delta: i64) -> Result<Self> {
        check_delta(delta)?;
        Ok(Self { rat, irr, delta })
    }

    /// Caller guarantees `delta` was validated elsewhere.
    pub(crate) fn from_parts(rat: Rational, irr: Rational, delta: i64) -> Self {
        debug_assert!(check_delta(delta).is_ok());
        Self { rat, irr, delta }
    }

    pub fn zero(delta: i64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::zero(), delta)
    }

    pub fn from_rational(q: Rational, delta: i64) -> Result<Self> {
        Self::new(q, Rational::zero(), delta)
    }

    /// `c * sqrt(delta)`.
    pub fn sqrt_multiple(c: Rational, delta: i64) -> Result<Self> {
        Self::new(Rational::zero(), c, delta)
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn irr(&self) -> &Rational {
        &self.irr
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    fn same_delta(&self, other: &Self) -> Result<()> {
        if self.delta == other.delta {
            Ok(())
        } else {
            Err(Error::DeltaMismatch(self.delta, other.delta))
        }
    }

    fn with(&self, rat: Rational, irr: Rational) -> Self {
        Self { rat, irr, delta: self.delta }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_delta(other)?;
        Ok(self.with(&self.rat + &other.rat, &self.irr + &other.irr))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_delta(other)?;
        Ok(self.with(&self.rat - &other.rat, &self.irr - &other.irr))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_delta(other)?;
        let d = int(self.delta);
        let rat = &self.rat * &other.rat + &self.irr * &other.irr * d;
        let irr = &self.rat * &other.irr + &self.irr * &other.rat;
        Ok(self.with(rat, irr))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.same_delta(other)?;
        let n = other.field_norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.try_mul(&other.conjugate())?;
        Ok(self.with(num.rat / &n, num.irr / n))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.with(&self.rat * c, &self.irr * c)
    }

    /// `p - q*sqrt(D)`.
    pub fn conjugate(&self) -> Self {
        self.with(self.rat.clone(), -self.irr.clone())
    }

    /// `p^2 - q^2 D`, the norm from Q(sqrt D) to Q.
    pub fn field_norm(&self) -> Rational {
        &self.rat * &self.rat - &self.irr * &self.irr * int(self.delta)
    }

    pub fn recip(&self) -> Result<Self> {
        let one = self.with(Rational::one(), Rational::zero());
        one.try_div(self)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.with(Rational::one(), Rational::zero());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact sign via integer case analysis.
    pub fn sign(&self) -> i32 {
        let sp = rational_sign(&self.rat);
        let sq = rational_sign(&self.irr);
        if sq == 0 {
            return sp;
        }
        if sp == 0 || sp == sq {
            return sq;
        }
        // opposite signs: compare p^2 with q^2 D; equality would make D a square
        let p2 = &self.rat * &self.rat;
        let q2d = &self.irr * &self.irr * int(self.delta);
        if p2 > q2d {
            sp
        } else {
            sq
        }
    }

    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        Ok(match self.try_sub(other)?.sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        })
    }

    /// Whether `self` lies in the infinite cyclic group generated by
    /// `scale * generator`, where `generator` is a pure multiple of sqrt(D).
    pub fn in_discrete_subgroup(&self, generator: &Self, scale: &Rational) -> Result<bool> {
        self.same_delta(generator)?;
        if !generator.rat.is_zero() || generator.irr.is_zero() {
            return Err(Error::NotPureIrrational(generator.to_string()));
        }
        if !scale.is_positive() {
            return Err(Error::InvalidParams(format!("subgroup scale {} must be positive", format_rational(scale))));
        }
        if !self.rat.is_zero() {
            return Ok(false);
        }
        let step = &generator.irr * scale;
        Ok((&self.irr / step).is_integer())
    }

    /// Formats with the radicand reduced to its square-free part, e.g. `1 + sqrt(2)`.
    pub fn to_reduced_string(&self) -> String {
        if self.irr.is_zero() {
            return format_rational(&self.rat);
        }
        let (s, m) = square_free_decomposition(self.delta);
        let coef = &self.irr * int(s);
        let radical = |c: &Rational| {
            if c.is_one() {
                format!("sqrt({m})")
            } else {
                format!("{}*sqrt({m})", format_rational(c))
            }
        };
        if self.rat.is_zero() {
            return if coef.is_negative() { format!("-{}", radical(&-coef)) } else { radical(&coef) };
        }
        let sign = if coef.is_negative() { '-' } else { '+' };
        format!("{} {} {}", format_rational(&self.rat), sign, radical(&coef.abs()))
    }

    /// Approximate value, for display only.
    pub fn to_f64(&self) -> f64 {
        let p = self.rat.to_f64().unwrap_or(f64::NAN);
        let q = self.irr.to_f64().unwrap_or(f64::NAN);
        p + q * (self.delta as f64).sqrt()
    }
}

impl fmt::Display for QuadReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            return write!(f, "{}", format_rational(&self.rat));
        }
        let radical = format!("sqrt({})", self.delta);
        if self.rat.is_zero() {
            return write!(f, "{}*{}", format_rational(&self.irr), radical);
        }
        let sign = if self.irr.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}*{}", format_rational(&self.rat), sign, format_rational(&self.irr.abs()), radical)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident, $ty:ty) => {
        impl $tr<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(Add, add, try_add, QuadReal);
forward_binop!(Sub, sub, try_sub, QuadReal);
forward_binop!(Mul, mul, try_mul, QuadReal);
forward_binop!(Div, div, try_div, QuadReal);

impl Neg for &QuadReal {
    type Output = QuadReal;
    fn neg(self) -> QuadReal {
        self.with(-self.rat.clone(), -self.irr.clone())
    }
}

impl Neg for QuadReal {
    type Output = QuadReal;
    fn neg(self) -> QuadReal {
        -&self
    }
}

/// Extended gcd on big integers: returns `(g, x, y)` with `a x + b y = g >= 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qr(p: Rational, q: Rational, d: i64) -> QuadReal {
        QuadReal::new(p, q, d).unwrap()
    }

    #[test]
    fn reduced_strings() {
        assert_eq!(qr(int(1), rat(1, 4), 32).to_reduced_string(), "1 + sqrt(2)");
        assert_eq!(qr(rat(1, 2), rat(1, 2), 5).to_reduced_string(), "1/2 + 1/2*sqrt(5)");
        assert_eq!(qr(int(0), rat(-1, 3), 12).to_reduced_string(), "-2/3*sqrt(3)");
        assert_eq!(qr(int(2), int(-1), 3).to_reduced_string(), "2 - sqrt(3)");
        assert_eq!(qr(rat(-5, 7), int(0), 3).to_reduced_string(), "-5/7");
    }

    #[test]
    fn norm_of_silver_ratio_square_is_one() {
        let a = qr(int(3), int(1), 8);
        let b = qr(int(3), int(-1), 8);
        assert_eq!(&a * &b, qr(int(1), int(0), 8));
    }

    #[test]
    fn additive_inverse() {
        let a = qr(int(0), int(1), 8);
        let b = qr(int(0), int(-1), 8);
        assert!((a + b).is_zero());
    }

    #[test]
    fn golden_ratio_squared() {
        let phi = qr(rat(1, 2), rat(1, 2), 5);
        assert_eq!(&phi * &phi, qr(rat(3, 2), rat(1, 2), 5));
        assert_eq!(&phi * &phi, &phi + &qr(int(1), int(0), 5));
    }

    #[test]
    fn signs() {
        assert_eq!(qr(int(3), int(-1), 8).sign(), 1);
        assert_eq!(qr(int(1), int(-1), 5).sign(), -1);
        let x = qr(rat(-7, 2), rat(3, 2), 5);
        assert_eq!(x.sign(), -1);
        assert!(x.to_f64() < 0.0 && x.to_f64() > -0.2);
        assert_eq!(QuadReal::zero(5).unwrap().sign(), 0);
    }

    #[test]
    fn discrete_subgroup_membership() {
        let gen = qr(int(0), int(-1), 8);
        let sixth = rat(1, 6);
        assert!(QuadReal::zero(8).unwrap().in_discrete_subgroup(&gen, &sixth).unwrap());
        assert!(qr(int(0), rat(-1, 2), 8).in_discrete_subgroup(&gen, &sixth).unwrap());
        assert!(!qr(int(0), rat(1, 4), 8).in_discrete_subgroup(&gen, &sixth).unwrap());
        assert!(!qr(int(1), int(0), 8).in_discrete_subgroup(&gen, &sixth).unwrap());
        let bad = qr(int(1), int(1), 8);
        assert!(matches!(qr(int(0), int(1), 8).in_discrete_subgroup(&bad, &sixth), Err(Error::NotPureIrrational(_))));
    }

    #[test]
    fn rejects_square_radicand_and_mismatch() {
        assert_eq!(QuadReal::zero(9), Err(Error::InvalidDelta(9)));
        assert_eq!(QuadReal::zero(0), Err(Error::InvalidDelta(0)));
        let a = qr(int(1), int(1), 5);
        let b = qr(int(1), int(1), 8);
        assert_eq!(a.try_add(&b), Err(Error::DeltaMismatch(5, 8)));
        assert_eq!(a.try_div(&QuadReal::zero(5).unwrap()), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(qr(rat(1, 2), rat(-3, 4), 5).to_string(), "1/2 - 3/4*sqrt(5)");
        assert_eq!(qr(int(0), rat(1, 12), 8).to_string(), "1/12*sqrt(8)");
        assert_eq!(qr(int(-2), int(0), 8).to_string(), "-2");
    }

    #[test]
    fn square_free() {
        assert_eq!(square_free_decomposition(32), (4, 2));
        assert_eq!(square_free_decomposition(45), (3, 5));
        assert_eq!(square_free_decomposition(12), (2, 3));
        assert_eq!(square_free_decomposition(13), (1, 13));
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
    }

    fn quad(delta: i64) -> impl Strategy<Value = QuadReal> {
        (small_rat(), small_rat()).prop_map(move |(p, q)| qr(p, q, delta))
    }

    proptest! {
        #[test]
        fn field_axioms(a in quad(13), b in quad(13), c in quad(13)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
        }

        #[test]
        fn sign_is_multiplicative(a in quad(8), b in quad(8)) {
            prop_assert_eq!(a.sign() * b.sign(), (&a * &b).sign());
        }

        #[test]
        fn sign_matches_rational_sign(p in small_rat()) {
            let a = qr(p.clone(), int(0), 7);
            prop_assert_eq!(a.sign(), rational_sign(&p));
        }

        #[test]
        fn sign_agrees_with_float(a in quad(21)) {
            let f = a.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(a.sign(), if f > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn canonical_form_is_idempotent(n in -50i64..50, d in 1i64..50) {
            let q = rat(n * 6, d * 6);
            let again = Rational::new(q.numer().clone(), q.denom().clone());
            prop_assert_eq!(&q, &again);
            prop_assert!(q.denom().is_positive());
            prop_assert!(q.numer().gcd(q.denom()).is_one());
        }
    }
}
