//! The solvable group `G` of triples `[v, x, t]`, the lattice group `Gamma`
//! generated by `g0..g3`, its word problem, and the standard-form tests.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, QuadComplex, QuadReal, Rational};
use crate::lattice::{Lattice, Matrix2Q};
use crate::qfield::{chi, FieldDescriptor, FieldElement, SurfaceType};
use crate::units::signed_exponent;

/// `[v, x, t]` with `v` a unit of positive first embedding.
///
/// Product: `[u,x,t][v,y,s] = [uv, x + u y, t + Norm(u) s - chi(x, u y)/2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GElement {
    v: FieldElement,
    x: FieldElement,
    t: QuadComplex,
}

impl GElement {
    pub fn new(v: FieldElement, x: FieldElement, t: QuadComplex) -> Result<Self> {
        let d = v.field();
        if x.field() != d {
            return Err(Error::FieldMismatch);
        }
        if t.delta() != d.delta() {
            return Err(Error::DeltaMismatch(t.delta(), d.delta()));
        }
        if !v.is_unit() {
            return Err(Error::NotUnit(v.to_string()));
        }
        if v.sigma1().sign() <= 0 {
            return Err(Error::InvalidParams(format!("unit {v} has negative first embedding")));
        }
        Ok(Self { v, x, t })
    }

    /// `[1, x, t]`.
    pub fn translation(x: FieldElement, t: QuadComplex) -> Result<Self> {
        Self::new(x.field().one(), x, t)
    }

    /// `[1, 0, t]` with real `t`.
    pub fn central(d: FieldDescriptor, t: QuadReal) -> Result<Self> {
        Self::new(d.one(), d.zero(), QuadComplex::from_real(t))
    }

    pub fn identity(d: FieldDescriptor) -> Self {
        Self { v: d.one(), x: d.zero(), t: QuadComplex::zero(d.delta()).expect("field discriminant is valid") }
    }

    pub fn v(&self) -> &FieldElement {
        &self.v
    }

    pub fn x(&self) -> &FieldElement {
        &self.x
    }

    pub fn t(&self) -> &QuadComplex {
        &self.t
    }

    pub fn field(&self) -> FieldDescriptor {
        self.v.field()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        let uy = &self.v * &other.x;
        let n = self.v.norm();
        let half_chi = chi(&self.x, &uy).scale(&Rational::new(BigInt::one(), BigInt::from(2)));
        let t = self.t.try_add(&other.t.scale(&n))?.try_add_real(&-half_chi)?;
        Ok(Self { v: &self.v * &other.v, x: &self.x + &uy, t })
    }

    /// `[1/u, -x/u, -t/Norm(u)]`.
    pub fn inverse(&self) -> Self {
        let vinv = self.v.inverse().expect("units are invertible");
        let n = self.v.norm();
        Self { x: -(&self.x * &vinv), v: vinv, t: self.t.scale(&(-n.recip())) }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.field());
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq).expect("same field");
            }
            sq = sq.mul(&sq).expect("same field");
            e >>= 1;
        }
        acc
    }

    pub fn conjugate_by(&self, h: &Self) -> Result<Self> {
        h.mul(self)?.mul(&h.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.v == self.field().one() && self.x.is_zero() && self.t.is_zero()
    }
}

impl fmt::Display for GElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.v, self.x, self.t)
    }
}

/// Defining data `(theta, r, x1, x2, e; t)` of a surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceParams {
    d: FieldDescriptor,
    r: i64,
    x1: FieldElement,
    x2: FieldElement,
    e: FieldElement,
    t: QuadComplex,
    lattice: Lattice,
}

impl SurfaceParams {
    pub fn new(
        d: FieldDescriptor,
        r: i64,
        x1: FieldElement,
        x2: FieldElement,
        e: FieldElement,
        t: QuadComplex,
    ) -> Result<Self> {
        if r <= 0 {
            return Err(Error::InvalidParams(format!("r = {r} must be a positive integer")));
        }
        if [&x1, &x2, &e].iter().any(|z| z.field() != d) {
            return Err(Error::FieldMismatch);
        }
        if t.delta() != d.delta() {
            return Err(Error::DeltaMismatch(t.delta(), d.delta()));
        }
        if d.surface() == SurfaceType::Minus && !t.is_zero() {
            return Err(Error::InvalidParams("t must be 0 for S(-) surfaces".into()));
        }
        let lattice = Lattice::new(x1.clone(), x2.clone()).map_err(|err| match err {
            Error::DegenerateBasis => Error::InvalidParams("chi(x1, x2) = 0".into()),
            other => other,
        })?;
        if !lattice.mult_matrix(&d.u()).is_integral() {
            return Err(Error::NotInvariant(d.u().to_string()));
        }
        Ok(Self { d, r, x1, x2, e, t, lattice })
    }

    /// Parameters with `t = 0`.
    pub fn with_zero_t(
        d: FieldDescriptor,
        r: i64,
        x1: FieldElement,
        x2: FieldElement,
        e: FieldElement,
    ) -> Result<Self> {
        let t = QuadComplex::zero(d.delta())?;
        Self::new(d, r, x1, x2, e, t)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.d
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn x1(&self) -> &FieldElement {
        &self.x1
    }

    pub fn x2(&self) -> &FieldElement {
        &self.x2
    }

    pub fn e(&self) -> &FieldElement {
        &self.e
    }

    pub fn t(&self) -> &QuadComplex {
        &self.t
    }

    /// `I = Z x1 + Z x2`.
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Matrix of multiplication by `u` on `(x1, x2)`.
    pub fn n_matrix(&self) -> Matrix2Q {
        self.lattice.mult_matrix(&self.d.u())
    }

    pub fn chi12(&self) -> QuadReal {
        chi(&self.x1, &self.x2)
    }

    pub fn with_r(&self, r: i64) -> Result<Self> {
        Self::new(self.d, r, self.x1.clone(), self.x2.clone(), self.e.clone(), self.t.clone())
    }

    pub fn with_e(&self, e: FieldElement) -> Result<Self> {
        Self::new(self.d, self.r, self.x1.clone(), self.x2.clone(), e, self.t.clone())
    }

    /// Whether `z` lies in `I / r`.
    pub fn in_lattice_over_r(&self, z: &FieldElement) -> bool {
        self.lattice.contains(&z.scale(&int(self.r)))
    }

    /// Whether a real `c` lies in `chi(I, I)/r = Z chi(x1, x2)/r`.
    pub fn in_chi_over_r(&self, c: &QuadReal) -> bool {
        c.in_discrete_subgroup(&self.chi12(), &Rational::new(BigInt::one(), BigInt::from(self.r)))
            .expect("chi(x1, x2) is a nonzero multiple of sqrt(delta)")
    }
}

/// `(g0, g1, g2, g3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators {
    pub g0: GElement,
    pub g1: GElement,
    pub g2: GElement,
    pub g3: GElement,
}

impl Generators {
    pub fn as_array(&self) -> [&GElement; 4] {
        [&self.g0, &self.g1, &self.g2, &self.g3]
    }
}

/// `g0 = [u, 0, t]`, `g_i = [1, x_i, chi(x_i, e)]`, `g3 = [1, 0, -chi(x1, x2)/r]`.
pub fn make_generators(p: &SurfaceParams) -> Generators {
    let d = p.d;
    let g0 = GElement::new(d.u(), d.zero(), p.t.clone()).expect("u is a positive unit");
    let gi = |x: &FieldElement| GElement::translation(x.clone(), QuadComplex::from_real(chi(x, &p.e))).expect("valid");
    let g3_t = p.chi12().scale(&Rational::new(-BigInt::one(), BigInt::from(p.r)));
    let g3 = GElement::central(d, g3_t).expect("valid");
    Generators { g0, g1: gi(&p.x1), g2: gi(&p.x2), g3 }
}

/// Integer `c` with `t = c * g3.t`, if any.
pub fn g3_exponent(p: &SurfaceParams, t: &QuadComplex) -> Option<BigInt> {
    if !t.im().is_zero() || !t.re().rat().is_zero() {
        return None;
    }
    let step = make_generators(p).g3.t.re().irr().clone();
    let c = t.re().irr() / step;
    c.is_integer().then(|| c.to_integer())
}

/// `g1^a g2^b g0^k` for the normal-form exponents of `g`, when they exist.
fn normal_form_word(p: &SurfaceParams, g: &GElement) -> Option<GElement> {
    let gens = make_generators(p);
    let k = signed_exponent(&p.d.u(), &g.v)?;
    let (a, b) = p.lattice.coords(&g.x)?;
    let (a, b) = (a.to_i64()?, b.to_i64()?);
    let w = gens.g1.pow(a).mul(&gens.g2.pow(b)).ok()?.mul(&gens.g0.pow(k)).ok()?;
    Some(w)
}

/// The central part `g w^{-1}` left after stripping `g`'s normal-form word.
pub fn gamma_residual(p: &SurfaceParams, g: &GElement) -> Option<QuadComplex> {
    let w = normal_form_word(p, g)?;
    let rest = g.mul(&w.inverse()).ok()?;
    debug_assert!(rest.v == p.d.one() && rest.x.is_zero());
    Some(rest.t)
}

/// Word problem for `Gamma`.
pub fn gamma_contains(p: &SurfaceParams, g: &GElement) -> bool {
    if g.field() != p.d {
        return false;
    }
    gamma_residual(p, g).is_some_and(|t| g3_exponent(p, &t).is_some())
}

/// Central residuals `g0 g_i g0^{-1} (g1^{n_i1} g2^{n_i2})^{-1}` for `i = 1, 2`.
pub fn standard_form_residuals(p: &SurfaceParams) -> [QuadComplex; 2] {
    let gens = make_generators(p);
    let n = p.n_matrix().to_ints().expect("lattice is u-invariant");
    let g0_inv = gens.g0.inverse();
    let residual = |gi: &GElement, row: &[BigInt; 2]| {
        let conj = gens.g0.mul(gi).and_then(|g| g.mul(&g0_inv)).expect("same field");
        let a = row[0].to_i64().expect("small matrix entry");
        let b = row[1].to_i64().expect("small matrix entry");
        let word = gens.g1.pow(a).mul(&gens.g2.pow(b)).expect("same field");
        let rest = conj.mul(&word.inverse()).expect("same field");
        debug_assert!(rest.v == p.d.one() && rest.x.is_zero());
        rest.t
    };
    [residual(&gens.g1, &n[0]), residual(&gens.g2, &n[1])]
}

/// Standard form by conjugating the generators directly; both surface types.
pub fn is_standard_form_direct(p: &SurfaceParams) -> bool {
    standard_form_residuals(p).iter().all(|t| g3_exponent(p, t).is_some())
}

/// `(1-u)/u e + (n21 n22/2) x1 - (n11 n12/2) x2`.
pub fn standard_form_witness(p: &SurfaceParams) -> FieldElement {
    let d = p.d;
    let n = p.n_matrix();
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let c1 = n.get(1, 0) * n.get(1, 1) * &half;
    let c2 = n.get(0, 0) * n.get(0, 1) * &half;
    let lead = (d.one() - d.u()) / d.u();
    &(&lead * &p.e) + &(&p.x1.scale(&c1) - &p.x2.scale(&c2))
}

/// Closed-form standard-form test; S(+) only.
pub fn is_standard_form_lemma(p: &SurfaceParams) -> Result<bool> {
    if p.d.surface() != SurfaceType::Plus {
        return Err(Error::Unsupported("the closed-form standard-form test needs an S(+) field".into()));
    }
    Ok(p.in_lattice_over_r(&standard_form_witness(p)))
}

/// `e = u/(1-u) ((n11 n12/2 + p/r) x2 - (n21 n22/2 + q/r) x1)`.
pub fn e_from_pq(
    d: FieldDescriptor,
    r: i64,
    x1: &FieldElement,
    x2: &FieldElement,
    p_int: &BigInt,
    q_int: &BigInt,
) -> Result<FieldElement> {
    if r <= 0 {
        return Err(Error::InvalidParams(format!("r = {r} must be a positive integer")));
    }
    let lattice = Lattice::new(x1.clone(), x2.clone())?;
    let n = lattice.mult_matrix(&d.u());
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let r = Rational::from_integer(BigInt::from(r));
    let k2 = n.get(0, 0) * n.get(0, 1) * &half + Rational::from_integer(p_int.clone()) / &r;
    let k1 = n.get(1, 0) * n.get(1, 1) * &half + Rational::from_integer(q_int.clone()) / &r;
    let lead = d.u() / (d.one() - d.u());
    Ok(&lead * &(&x2.scale(&k2) - &x1.scale(&k1)))
}

/// Inoue's original data for an S(+) surface in standard form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InoueParameters {
    pub n: Matrix2Q,
    pub p: BigInt,
    pub q: BigInt,
    pub a: [QuadReal; 2],
    pub b: [QuadReal; 2],
    pub c: [QuadReal; 2],
    pub d: QuadReal,
    pub alpha: QuadReal,
}

/// Exports `(N, p, q, a_i, b_i, c_i, alpha)` and checks
/// `(N - I)(c1; c2) = -(e1; e2) - d (p; q)` exactly.
pub fn to_inoue_parameters(p: &SurfaceParams) -> Result<InoueParameters> {
    if p.d.surface() != SurfaceType::Plus {
        return Err(Error::Unsupported("export to Inoue's parameters is defined for S(+) only".into()));
    }
    let w = standard_form_witness(p).scale(&int(p.r));
    let (alpha_c, beta_c) = p.lattice.coords(&w).ok_or_else(|| {
        Error::NotStandardForm(format!(
            "(1-u)/u e + ... = {} is not in I/r",
            w.scale(&Rational::new(BigInt::one(), BigInt::from(p.r)))
        ))
    })?;
    let (pi, qi) = (beta_c, -alpha_c);
    let n = p.n_matrix();
    let delta = p.d.delta();
    let a = [p.x1.sigma1(), p.x2.sigma1()];
    let b = [p.x1.sigma2(), p.x2.sigma2()];
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let c = [
        QuadReal::from_rational(p.x1.norm() * &half, delta)? + chi(&p.x1, &p.e),
        QuadReal::from_rational(p.x2.norm() * &half, delta)? + chi(&p.x2, &p.e),
    ];
    let r = Rational::from_integer(BigInt::from(p.r));
    let d = (&b[0] * &a[1] - &b[1] * &a[0]).scale(&r.recip());
    let alpha = p.d.u().sigma1();
    let ni = n.to_ints().expect("lattice is u-invariant");
    let e_i = |i: usize| {
        let (m1, m2) = (Rational::from_integer(ni[i][0].clone()), Rational::from_integer(ni[i][1].clone()));
        let t1 = (&a[0] * &b[0]).scale(&(&m1 * (&m1 - Rational::one()) * &half));
        let t2 = (&a[1] * &b[1]).scale(&(&m2 * (&m2 - Rational::one()) * &half));
        let t3 = (&b[0] * &a[1]).scale(&(&m1 * &m2));
        &(&t1 + &t2) + &t3
    };
    let pq = [Rational::from_integer(pi.clone()), Rational::from_integer(qi.clone())];
    for (i, pq_i) in pq.iter().enumerate() {
        let lhs = &c[0].scale(&(n.get(i, 0) - if i == 0 { Rational::one() } else { Rational::zero() }))
            + &c[1].scale(&(n.get(i, 1) - if i == 1 { Rational::one() } else { Rational::zero() }));
        let rhs = -&e_i(i) - d.scale(pq_i);
        if lhs != rhs {
            return Err(Error::Internal(format!("exported parameters violate Inoue's relation in row {}", i + 1)));
        }
    }
    Ok(InoueParameters { n, p: pi, q: qi, a, b, c, d, alpha })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::units::fundamental_unit;
    use proptest::prelude::*;

    fn ex_theta6() -> SurfaceParams {
        let d = FieldDescriptor::plus(6).unwrap();
        SurfaceParams::with_zero_t(d, 6, d.one(), fundamental_unit(d), d.zero()).unwrap()
    }

    fn ex_theta4(e: FieldElement) -> SurfaceParams {
        let d = FieldDescriptor::plus(4).unwrap();
        SurfaceParams::with_zero_t(d, 6, d.one(), d.u(), e).unwrap()
    }

    fn real(x: QuadReal) -> QuadComplex {
        QuadComplex::from_real(x)
    }

    #[test]
    fn generators_of_theta6_example() {
        let p = ex_theta6();
        let g = make_generators(&p);
        let expected = -chi(p.x1(), p.x2()).scale(&rat(1, 6));
        assert_eq!(g.g3.t(), &real(expected.clone()));
        // sqrt(8)/6 = sqrt(32)/12
        assert_eq!(expected, QuadReal::new(int(0), rat(1, 12), 32).unwrap());
        assert_eq!(g.g1.x(), p.x1());
        assert!(g.g2.t().is_zero());
    }

    #[test]
    fn group_basics() {
        let p = ex_theta6();
        let g = make_generators(&p);
        let id = GElement::identity(p.field());
        assert_eq!(g.g1.mul(&id).unwrap(), g.g1);
        assert!(g.g0.mul(&g.g0.inverse()).unwrap().is_identity());
        let comm = g.g1.mul(&g.g2).unwrap().mul(&g.g1.inverse()).unwrap().mul(&g.g2.inverse()).unwrap();
        assert_eq!(comm, g.g3.pow(6));
        let minus = FieldDescriptor::minus(3).unwrap();
        assert!(GElement::new(minus.from_int(-1), minus.zero(), QuadComplex::zero(13).unwrap()).is_err());
        assert!(GElement::new(minus.from_int(2), minus.zero(), QuadComplex::zero(13).unwrap()).is_err());
    }

    #[test]
    fn membership_in_gamma() {
        let p = ex_theta6();
        let g = make_generators(&p);
        assert!(gamma_contains(&p, &GElement::identity(p.field())));
        let w = g.g0.mul(&g.g1).unwrap().mul(&g.g3.inverse()).unwrap();
        assert!(gamma_contains(&p, &w));
        let d = p.field();
        for frac in [rat(1, 2), rat(1, 4)] {
            let t = g.g3.t().re().scale(&frac);
            assert!(!gamma_contains(&p, &GElement::central(d, t).unwrap()));
        }
        let off = GElement::translation(d.from_rational(rat(1, 2)), QuadComplex::zero(32).unwrap()).unwrap();
        assert!(!gamma_contains(&p, &off));
        let eta = fundamental_unit(d);
        let rot = GElement::new(eta, d.zero(), QuadComplex::zero(32).unwrap()).unwrap();
        assert!(!gamma_contains(&p, &rot));
    }

    #[test]
    fn standard_form_examples() {
        let d = FieldDescriptor::plus(4).unwrap();
        let inv = (d.one() - d.u()).inverse().unwrap();
        let ok = ex_theta4(inv.scale(&rat(1, 6)));
        assert!(is_standard_form_direct(&ok));
        assert!(is_standard_form_lemma(&ok).unwrap());
        let bad = ex_theta4(inv.scale(&rat(1, 17)));
        assert!(!is_standard_form_direct(&bad));
        assert!(!is_standard_form_lemma(&bad).unwrap());
        let p = ex_theta6();
        assert!(is_standard_form_direct(&p));
        assert!(is_standard_form_lemma(&p).unwrap());
        assert_eq!(p.n_matrix(), Matrix2Q::from_ints([[1, 2], [2, 5]]));
        let minus = FieldDescriptor::minus(2).unwrap();
        let q = SurfaceParams::with_zero_t(minus, 3, minus.one(), minus.u(), minus.zero()).unwrap();
        assert!(matches!(is_standard_form_lemma(&q), Err(Error::Unsupported(_))));
    }

    #[test]
    fn e_from_pq_examples() {
        let d = FieldDescriptor::plus(4).unwrap();
        let zero = BigInt::zero();
        let e = e_from_pq(d, 6, &d.one(), &d.u(), &zero, &zero).unwrap();
        let lead = d.u() / (d.one() - d.u());
        assert_eq!(e, &lead * &d.from_int(2));
        assert!(is_standard_form_direct(&ex_theta4(e.clone())));
        let e_shift = e_from_pq(d, 6, &d.one(), &d.u(), &BigInt::from(6), &zero).unwrap();
        assert_eq!(&e_shift - &e, &lead * &d.u());
    }

    #[test]
    fn inoue_export_theta6() {
        let p = ex_theta6();
        let ip = to_inoue_parameters(&p).unwrap();
        assert_eq!(ip.n, Matrix2Q::from_ints([[1, 2], [2, 5]]));
        assert_eq!(ip.alpha, QuadReal::new(int(3), rat(1, 2), 32).unwrap());
        assert_eq!(ip.c[0], QuadReal::from_rational(rat(1, 2), 32).unwrap());
        assert_eq!(ip.c[1], QuadReal::from_rational(p.x2().norm() * rat(1, 2), 32).unwrap());
        let e = e_from_pq(p.field(), 6, p.x1(), p.x2(), &ip.p, &ip.q).unwrap();
        assert_eq!(&e, p.e());
        let d = FieldDescriptor::plus(4).unwrap();
        let bad = ex_theta4((d.one() - d.u()).inverse().unwrap().scale(&rat(1, 17)));
        assert!(matches!(to_inoue_parameters(&bad), Err(Error::NotStandardForm(_))));
    }

    #[test]
    fn invalid_params() {
        let d = FieldDescriptor::plus(6).unwrap();
        assert!(matches!(SurfaceParams::with_zero_t(d, 0, d.one(), d.u(), d.zero()), Err(Error::InvalidParams(_))));
        assert!(matches!(
            SurfaceParams::with_zero_t(d, 2, d.one(), d.from_int(3), d.zero()),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            SurfaceParams::with_zero_t(d, 2, d.one(), d.parse("sqrt(2)/3").unwrap(), d.zero()),
            Err(Error::NotInvariant(_))
        ));
        let m = FieldDescriptor::minus(3).unwrap();
        let t = QuadComplex::from_real(QuadReal::from_rational(int(1), 13).unwrap());
        assert!(matches!(SurfaceParams::new(m, 2, m.one(), m.u(), m.zero(), t), Err(Error::InvalidParams(_))));
    }

    fn any_field() -> impl Strategy<Value = FieldDescriptor> {
        prop_oneof![
            (3i64..13).prop_map(|t| FieldDescriptor::plus(t).unwrap()),
            (1i64..9).prop_map(|t| FieldDescriptor::minus(t).unwrap()),
        ]
    }

    fn small_q() -> impl Strategy<Value = Rational> {
        (-9i64..10, 1i64..5).prop_map(|(n, d)| rat(n, d))
    }

    fn element(d: FieldDescriptor) -> impl Strategy<Value = GElement> {
        (-3i64..4, small_q(), small_q(), small_q(), small_q(), small_q()).prop_map(move |(k, a, b, re, im1, im2)| {
            let v = d.u().pow(k).unwrap();
            let x = d.element(a, b);
            let t = QuadComplex::new(
                QuadReal::new(re, im1.clone(), d.delta()).unwrap(),
                QuadReal::new(im2, im1, d.delta()).unwrap(),
            )
            .unwrap();
            GElement::new(v, x, t).unwrap()
        })
    }

    fn triple() -> impl Strategy<Value = (GElement, GElement, GElement)> {
        any_field().prop_flat_map(|d| (element(d), element(d), element(d)))
    }

    proptest! {
        #[test]
        fn group_axioms((g, h, k) in triple()) {
            let d = g.field();
            prop_assert_eq!(g.mul(&h).unwrap().mul(&k).unwrap(), g.mul(&h.mul(&k).unwrap()).unwrap());
            prop_assert!(g.mul(&g.inverse()).unwrap().is_identity());
            prop_assert!(g.inverse().mul(&g).unwrap().is_identity());
            prop_assert_eq!(g.mul(&GElement::identity(d)).unwrap(), g.clone());
            prop_assert_eq!(GElement::identity(d).mul(&g).unwrap(), g.clone());
            prop_assert_eq!(g.pow(3), g.mul(&g).unwrap().mul(&g).unwrap());
            prop_assert_eq!(g.pow(-2), g.inverse().mul(&g.inverse()).unwrap());
        }
    }
}
