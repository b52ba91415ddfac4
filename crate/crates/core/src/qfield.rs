//! The real quadratic field `K = Q[X]/(X^2 - theta X + c0)` in the basis `{1, u}`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::text::{self, Evaluator};
use crate::exactnum::{format_rational, forward_binop, int, is_perfect_square, QuadReal, Rational};

/// Which of the two Inoue families the field belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceType {
    /// `X^2 - theta X + 1`, theta >= 3.
    Plus,
    /// `X^2 - theta X - 1`, theta >= 1.
    Minus,
}

impl SurfaceType {
    pub fn symbol(self) -> &'static str {
        match self {
            SurfaceType::Plus => "+",
            SurfaceType::Minus => "-",
        }
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({})", self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    theta: i64,
    c0: i64,
}

impl FieldDescriptor {
    pub fn new(theta: i64, surface: SurfaceType) -> Result<Self> {
        let c0 = match surface {
            SurfaceType::Plus => 1,
            SurfaceType::Minus => -1,
        };
        let min = if c0 == 1 { 3 } else { 1 };
        if theta < min {
            return Err(Error::InvalidField(format!(
                "theta = {theta} is out of range for {surface} (need theta >= {min})"
            )));
        }
        let d = Self { theta, c0 };
        let delta = d.delta();
        if is_perfect_square(&BigInt::from(delta)) {
            return Err(Error::InvalidField(format!("discriminant {delta} is a square")));
        }
        Ok(d)
    }

    pub fn plus(theta: i64) -> Result<Self> {
        Self::new(theta, SurfaceType::Plus)
    }

    pub fn minus(theta: i64) -> Result<Self> {
        Self::new(theta, SurfaceType::Minus)
    }

    pub fn theta(&self) -> i64 {
        self.theta
    }

    /// Constant term of the minimal polynomial of `u`, equal to `Norm(u)`.
    pub fn c0(&self) -> i64 {
        self.c0
    }

    pub fn delta(&self) -> i64 {
        self.theta * self.theta - 4 * self.c0
    }

    pub fn surface(&self) -> SurfaceType {
        if self.c0 == 1 {
            SurfaceType::Plus
        } else {
            SurfaceType::Minus
        }
    }

    pub fn element(&self, a: Rational, b: Rational) -> FieldElement {
        FieldElement { a, b, field: *self }
    }

    pub fn from_rational(&self, a: Rational) -> FieldElement {
        self.element(a, Rational::zero())
    }

    pub fn from_int(&self, a: i64) -> FieldElement {
        self.from_rational(int(a))
    }

    pub fn zero(&self) -> FieldElement {
        self.from_int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// The generator `u` (the class of X).
    pub fn u(&self) -> FieldElement {
        self.element(Rational::zero(), Rational::one())
    }

    /// `sqrt(delta)` as an element of K under the first embedding, i.e. `2u - theta`.
    pub fn sqrt_delta(&self) -> FieldElement {
        self.element(int(-self.theta), int(2))
    }

    /// Parses `a/b + c/d*u` (and any rational expression in `u`).
    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        text::parse_expr(s)?.eval(&FieldEval { field: *self })
    }
}

/// `a + b*u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    a: Rational,
    b: Rational,
    field: FieldDescriptor,
}

/// Selects one of the two real embeddings; `First` sends `u` above 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Embedding {
    First,
    Second,
}

impl FieldElement {
    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, a: Rational, b: Rational) -> Self {
        Self { a, b, field: self.field }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(&self.a + &other.a, &self.b + &other.b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(&self.a - &other.a, &self.b - &other.b))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        // u^2 = theta u - c0
        let bb = &self.b * &other.b;
        let a = &self.a * &other.a - &bb * int(self.field.c0);
        let b = &self.a * &other.b + &self.b * &other.a + bb * int(self.field.theta);
        Ok(self.with(a, b))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.try_mul(&other.inverse()?)
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.galois();
        Ok(self.with(c.a / &n, c.b / n))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.with(&self.a * c, &self.b * c)
    }

    /// Integer power; negative exponents require an invertible element.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = self.field.one();
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn norm(&self) -> Rational {
        let th = int(self.field.theta);
        let c0 = int(self.field.c0);
        &self.a * &self.a + &self.a * &self.b * th + &self.b * &self.b * c0
    }

    pub fn trace(&self) -> Rational {
        &self.a * int(2) + &self.b * int(self.field.theta)
    }

    /// The nontrivial automorphism `a + b u -> (a + b theta) - b u`.
    pub fn galois(&self) -> Self {
        self.with(&self.a + &self.b * int(self.field.theta), -self.b.clone())
    }

    /// Value under an embedding, with `sigma_1(u) = (theta + sqrt(delta))/2`.
    pub fn embed(&self, which: Embedding) -> QuadReal {
        let half_b = &self.b / int(2);
        let rat = &self.a + &half_b * int(self.field.theta);
        let irr = match which {
            Embedding::First => half_b,
            Embedding::Second => -half_b,
        };
        QuadReal::from_parts(rat, irr, self.field.delta())
    }

    pub fn sigma1(&self) -> QuadReal {
        self.embed(Embedding::First)
    }

    pub fn sigma2(&self) -> QuadReal {
        self.embed(Embedding::Second)
    }

    /// True when `a + b u` lies in `Z[u]`.
    pub fn is_in_order(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// Integral over Z: trace and norm are integers.
    pub fn is_algebraic_integer(&self) -> bool {
        self.trace().is_integer() && self.norm().is_integer()
    }

    pub fn is_unit(&self) -> bool {
        self.is_algebraic_integer() && self.norm().abs().is_one()
    }
}

/// `chi(x, y) = sigma1(x) sigma2(y) - sigma1(y) sigma2(x)`, always a rational
/// multiple of `sqrt(delta)`. Panics if the elements live in different fields.
pub fn chi(x: &FieldElement, y: &FieldElement) -> QuadReal {
    assert_eq!(x.field, y.field, "chi of elements from different fields");
    let coeff = -(&x.a * &y.b - &y.a * &x.b);
    QuadReal::from_parts(Rational::zero(), coeff, x.field.delta())
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        if self.a.is_zero() {
            return write!(f, "{}*u", format_rational(&self.b));
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}*u", format_rational(&self.a), sign, format_rational(&self.b.abs()))
    }
}

forward_binop!(Add, add, try_add, FieldElement);
forward_binop!(Sub, sub, try_sub, FieldElement);
forward_binop!(Mul, mul, try_mul, FieldElement);
forward_binop!(Div, div, try_div, FieldElement);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(-self.a.clone(), -self.b.clone())
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

struct FieldEval {
    field: FieldDescriptor,
}

impl Evaluator for FieldEval {
    type Value = FieldElement;
    fn number(&self, q: Rational) -> Result<FieldElement> {
        Ok(self.field.from_rational(q))
    }
    fn symbol(&self, name: &str, column: usize) -> Result<FieldElement> {
        match name {
            "u" => Ok(self.field.u()),
            _ => Err(Error::Parse { column, message: format!("unknown symbol '{name}'") }),
        }
    }
    fn sqrt(&self, n: &BigInt, column: usize) -> Result<FieldElement> {
        let (p, q) = text::sqrt_in_field(n, self.field.delta(), column)?;
        Ok(self.field.from_rational(p) + self.field.sqrt_delta().scale(&q))
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        a.try_add(b)
    }
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        a.try_sub(b)
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        a.try_mul(b)
    }
    fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        a.try_div(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn f6() -> FieldDescriptor {
        FieldDescriptor::plus(6).unwrap()
    }

    #[test]
    fn descriptor_validation() {
        assert!(FieldDescriptor::plus(2).is_err());
        assert!(FieldDescriptor::plus(3).is_ok());
        assert!(FieldDescriptor::minus(0).is_err());
        assert_eq!(FieldDescriptor::minus(1).unwrap().delta(), 5);
        assert_eq!(f6().delta(), 32);
    }

    #[test]
    fn u_squared() {
        let k = f6();
        assert_eq!(k.u() * k.u(), k.element(int(-1), int(6)));
        assert_eq!(k.u() * k.u().inverse().unwrap(), k.one());
        assert_eq!(k.zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_fields() {
        let a = f6().u();
        let b = FieldDescriptor::plus(7).unwrap().u();
        assert_eq!(a.try_mul(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn fourth_power_of_golden_ratio_is_u() {
        let k = FieldDescriptor::plus(7).unwrap();
        // sigma1(u) = (7 + 3 sqrt5)/2, golden ratio = (u - 2)/3
        let eta = k.parse("(u - 2)/3").unwrap();
        assert_eq!(eta.sigma1(), QuadReal::new(rat(1, 2), rat(1, 6), 45).unwrap());
        assert_eq!(eta.pow(4).unwrap(), k.u());
    }

    #[test]
    fn norms_and_traces() {
        for theta in 3..10 {
            let k = FieldDescriptor::plus(theta).unwrap();
            assert_eq!(k.u().norm(), int(1));
            assert_eq!((k.one() - k.u()).norm(), int(2 - theta));
        }
        let m = FieldDescriptor::minus(3).unwrap();
        assert_eq!(m.u().norm(), int(-1));
        let y = f6().element(rat(-3, 4), rat(1, 4));
        assert_eq!(y.norm(), rat(-1, 2));
        assert_eq!(y.sigma1(), QuadReal::new(int(0), rat(1, 8), 32).unwrap());
    }

    #[test]
    fn galois() {
        let k = f6();
        assert_eq!(k.from_int(5).galois(), k.from_int(5));
        assert_eq!(k.u().galois(), k.from_int(6) - k.u());
        assert_eq!(k.u().galois(), k.u().inverse().unwrap());
        let m = FieldDescriptor::minus(2).unwrap();
        assert_eq!(m.u().galois(), -m.u().inverse().unwrap());
    }

    #[test]
    fn embeddings() {
        let k = f6();
        assert_eq!(k.u().sigma1(), QuadReal::new(int(3), rat(1, 2), 32).unwrap());
        let k7 = FieldDescriptor::plus(7).unwrap();
        let eta = k7.element(rat(-2, 3), rat(1, 3));
        assert_eq!(eta.sigma1().to_string(), "1/2 + 1/6*sqrt(45)");
        assert!((eta.sigma1().to_f64() - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!(k.u().sigma1().sign() > 0 && k.u().sigma1().to_f64() > 1.0);
    }

    #[test]
    fn chi_values() {
        let k = f6();
        let x = k.element(rat(2, 3), rat(-1, 5));
        assert!(chi(&x, &x).is_zero());
        assert_eq!(chi(&k.one(), &k.u()), QuadReal::new(int(0), int(-1), 32).unwrap());
        let eta = k.element(rat(-1, 2), rat(1, 2));
        let c = chi(&k.one(), &eta);
        assert_eq!(c, QuadReal::new(int(0), rat(-1, 2), 32).unwrap());
        // oracle: substitute the embeddings directly
        let direct = &k.one().sigma1() * &eta.sigma2() - &eta.sigma1() * &k.one().sigma2();
        assert_eq!(c, direct);
    }

    #[test]
    fn parse_field_elements() {
        let k = f6();
        assert_eq!(k.parse("-1/2 + 1/2*u").unwrap(), k.element(rat(-1, 2), rat(1, 2)));
        assert_eq!(k.parse("1 + sqrt(2)").unwrap(), k.element(rat(-1, 2), rat(1, 2)));
        let e = k.parse("1/(6*(1-u))").unwrap();
        assert_eq!(e * (k.one() - k.u()) * k.from_int(6), k.one());
        let x = k.element(rat(7, 3), rat(-2, 9));
        assert_eq!(k.parse(&x.to_string()).unwrap(), x);
        assert!(matches!(k.parse("1 + v"), Err(Error::Parse { column: 5, .. })));
        assert!(matches!(k.parse("1/(u-u)"), Err(Error::Parse { column: 2, .. })));
    }

    fn elem(k: FieldDescriptor) -> impl Strategy<Value = FieldElement> {
        (-30i64..30, 1i64..8, -30i64..30, 1i64..8).prop_map(move |(a, da, b, db)| k.element(rat(a, da), rat(b, db)))
    }

    fn any_field() -> impl Strategy<Value = FieldDescriptor> {
        prop_oneof![
            (3i64..15).prop_map(|t| FieldDescriptor::plus(t).unwrap()),
            (1i64..10).prop_map(|t| FieldDescriptor::minus(t).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn chi_identities(
            (x, y1, y2) in any_field().prop_flat_map(|k| (elem(k), elem(k), elem(k)))
        ) {
            prop_assert_eq!(chi(&y1, &y2), -chi(&y2, &y1));
            prop_assert_eq!(chi(&(&x * &y1), &y2), chi(&y1, &(&x.galois() * &y2)));
            prop_assert_eq!(chi(&(&x * &y1), &(&x * &y2)), chi(&y1, &y2).scale(&x.norm()));
        }

        #[test]
        fn norm_trace_embedding(
            (x, y) in any_field().prop_flat_map(|k| (elem(k), elem(k)))
        ) {
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
            prop_assert_eq!((&x + &y).trace(), x.trace() + y.trace());
            let xx = &x * &x.galois();
            prop_assert!(xx.is_rational());
            prop_assert_eq!(xx.a(), &x.norm());
            let prod = &x.sigma1() * &x.sigma2();
            prop_assert!(prod.is_rational());
            prop_assert_eq!(prod.rat(), &x.norm());
            let sum = &x.sigma1() + &x.sigma2();
            prop_assert!(sum.is_rational());
            prop_assert_eq!(sum.rat(), &x.trace());
            prop_assert_eq!(x.galois().galois(), x.clone());
            prop_assert_eq!(x.galois().sigma1(), x.sigma2());
        }
    }
}
