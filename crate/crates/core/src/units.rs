//! Units of K: the fundamental unit, the generator of the units stabilising a
//! lattice, and exponents relating them to `u`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{square_free_decomposition, QuadReal, Rational};
use crate::lattice::Lattice;
use crate::qfield::{FieldDescriptor, FieldElement};

/// Cap on exponent searches; exceeding it means the input is not what it claims.
pub const POWER_CAP: u32 = 64;

/// Fundamental unit `eta` of the maximal order, normalised so `sigma1(eta) > 1`.
///
/// Runs the continued fraction of a reduced quadratic irrational of the
/// maximal order through one period; the product of the complete quotients
/// is the fundamental unit.
pub fn fundamental_unit(d: FieldDescriptor) -> FieldElement {
    let (s, m) = square_free_decomposition(d.delta());
    let big_m = BigInt::from(m);
    let root = big_m.sqrt();
    let (p0, q0) = if m.mod_floor(&4) == 1 {
        // largest odd integer below sqrt(m)
        let p = if root.is_odd() { root.clone() } else { &root - 1 };
        (p, BigInt::from(2))
    } else {
        (root.clone(), BigInt::one())
    };
    let complete_quotient = |p: &BigInt, q: &BigInt| {
        QuadReal::new(Rational::new(p.clone(), q.clone()), Rational::new(BigInt::one(), q.clone()), m)
            .expect("square-free part exceeds one")
    };
    let mut unit = QuadReal::from_rational(Rational::one(), m).expect("valid radicand");
    let (mut p, mut q) = (p0.clone(), q0.clone());
    loop {
        let a = (&p + &root).div_floor(&q);
        let p_next = &a * &q - &p;
        let q_next = (&big_m - &p_next * &p_next) / &q;
        p = p_next;
        q = q_next;
        unit = &unit * &complete_quotient(&p, &q);
        if p == p0 && q == q0 {
            break;
        }
    }
    debug_assert!(unit.sign() > 0);
    // A + B sqrt(m) with sqrt(m) = (2u - theta) / s
    let s = Rational::from_integer(BigInt::from(s));
    let theta = Rational::from_integer(BigInt::from(d.theta()));
    let b = unit.irr();
    let eta = d.element(unit.rat() - b * &theta / &s, b * Rational::from_integer(BigInt::from(2)) / &s);
    if eta.sigma1().try_cmp(&QuadReal::from_rational(Rational::one(), d.delta()).expect("valid"))
        == Ok(std::cmp::Ordering::Greater)
    {
        eta
    } else {
        eta.inverse().expect("units are invertible")
    }
}

/// Exponent `n` with `base^n = u`, found by repeated multiplication.
pub fn utheta_exponent(d: FieldDescriptor, base: &FieldElement) -> Result<u32> {
    let target = d.u();
    let mut acc = base.clone();
    for n in 1..=POWER_CAP {
        if acc == target {
            return Ok(n);
        }
        acc = &acc * base;
    }
    Err(Error::NotAPower(target.to_string(), base.to_string(), POWER_CAP))
}

/// Exponent `k` (possibly negative) with `base^k = x`, searched up to the cap in both directions.
pub fn signed_exponent(base: &FieldElement, x: &FieldElement) -> Option<i64> {
    let one = base.field().one();
    if *x == one {
        return Some(0);
    }
    let inv = base.inverse().ok()?;
    let (mut up, mut down) = (base.clone(), inv.clone());
    for k in 1..=i64::from(POWER_CAP) {
        if up == *x {
            return Some(k);
        }
        if down == *x {
            return Some(-k);
        }
        up = &up * base;
        down = &down * &inv;
    }
    None
}

/// Generator `eta^j` of the units with positive first embedding that stabilise `lattice`.
pub fn invariant_unit_generator(lattice: &Lattice) -> Result<(FieldElement, u32)> {
    let d = lattice.basis().0.field();
    if !lattice.mult_matrix(&d.u()).is_integral() {
        return Err(Error::NotInvariant(d.u().to_string()));
    }
    let eta = fundamental_unit(d);
    let n_max = utheta_exponent(d, &eta)?;
    let m1 = lattice.mult_matrix(&eta);
    let mut power = m1.clone();
    for j in 1..=n_max {
        if power.is_integral() {
            let u_gen = eta.pow(i64::from(j))?;
            return Ok((u_gen, j));
        }
        power = power.mul(&m1);
    }
    Err(Error::Internal(format!("no power of {eta} up to {n_max} stabilises the lattice")))
}
