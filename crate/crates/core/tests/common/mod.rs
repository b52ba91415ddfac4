//! Random parameter generators shared by the integration and acceptance tests.
#![allow(dead_code)]

use inoue_core::exactnum::{rat, QuadComplex, QuadReal};
use inoue_core::gamma::{e_from_pq, SurfaceParams};
use inoue_core::{FieldDescriptor, FieldElement};
use num_bigint::BigInt;
use rand::Rng;

pub fn random_field<R: Rng>(rng: &mut R, plus: bool) -> FieldDescriptor {
    loop {
        let d = if plus {
            FieldDescriptor::plus(rng.gen_range(3..=12))
        } else {
            FieldDescriptor::minus(rng.gen_range(1..=8))
        };
        if let Ok(d) = d {
            return d;
        }
    }
}

pub fn small_rational<R: Rng>(rng: &mut R, span: i64, max_den: i64) -> inoue_core::Rational {
    rat(rng.gen_range(-span..=span), rng.gen_range(1..=max_den))
}

pub fn random_element<R: Rng>(rng: &mut R, d: FieldDescriptor) -> FieldElement {
    d.element(small_rational(rng, 6, 4), small_rational(rng, 6, 4))
}

pub fn random_nonzero<R: Rng>(rng: &mut R, d: FieldDescriptor) -> FieldElement {
    loop {
        let x = random_element(rng, d);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Basis of `s * J` for a random ideal `J = <c m, c k + c u>` of `Z[u]`,
/// scaled by a random `s` and rebased by a random unimodular matrix.
pub fn random_ideal<R: Rng>(rng: &mut R, d: FieldDescriptor) -> (FieldElement, FieldElement) {
    let theta = d.theta();
    loop {
        let c = rng.gen_range(1..=3i64);
        let k = rng.gen_range(-3..=3i64);
        // m must divide Norm(k + u) = k^2 + k theta + c0
        let norm = k * k + k * theta + d.c0();
        let divisors: Vec<i64> = (1..=norm.abs()).filter(|m| norm % m == 0 && *m <= 12).collect();
        if divisors.is_empty() {
            continue;
        }
        let m = divisors[rng.gen_range(0..divisors.len())];
        let s = random_nonzero(rng, d);
        let x1 = &s * &d.from_int(c * m);
        let x2 = &s * &d.element(rat(c * k, 1), rat(c, 1));
        let (a, b) = (rng.gen_range(-2..=2i64), rng.gen_range(-2..=2i64));
        let y1 = &x1 + &x2.scale(&rat(a, 1));
        let y2 = &x2 + &y1.scale(&rat(b, 1));
        return if rng.gen_bool(0.5) { (y1, y2) } else { (y2, y1) };
    }
}

pub fn random_t<R: Rng>(rng: &mut R, d: FieldDescriptor) -> QuadComplex {
    let delta = d.delta();
    match rng.gen_range(0..4) {
        0 => QuadComplex::zero(delta).unwrap(),
        1 => QuadComplex::from_real(QuadReal::sqrt_multiple(small_rational(rng, 4, 8), delta).unwrap()),
        2 => {
            QuadComplex::from_real(QuadReal::new(small_rational(rng, 3, 3), small_rational(rng, 3, 3), delta).unwrap())
        }
        _ => QuadComplex::new(
            QuadReal::sqrt_multiple(small_rational(rng, 3, 3), delta).unwrap(),
            QuadReal::from_rational(small_rational(rng, 3, 3), delta).unwrap(),
        )
        .unwrap(),
    }
}

/// Standard-form parameters with `e` built from random `(p, q)`.
pub fn random_standard_params<R: Rng>(rng: &mut R, plus: bool) -> SurfaceParams {
    let d = random_field(rng, plus);
    let (x1, x2) = random_ideal(rng, d);
    let r = rng.gen_range(1..=12);
    let p = BigInt::from(rng.gen_range(-6..=6));
    let q = BigInt::from(rng.gen_range(-6..=6));
    let e = e_from_pq(d, r, &x1, &x2, &p, &q).unwrap();
    let t = if plus { random_t(rng, d) } else { QuadComplex::zero(d.delta()).unwrap() };
    SurfaceParams::new(d, r, x1, x2, e, t).unwrap()
}

/// Same data with `e` shifted by a random small element, usually breaking standard form.
pub fn perturb_e<R: Rng>(rng: &mut R, p: &SurfaceParams) -> SurfaceParams {
    let d = p.field();
    let shift = d.element(small_rational(rng, 3, 7), small_rational(rng, 3, 7));
    p.with_e(p.e() + &shift).unwrap()
}
