//! Rank-2 Z-lattices in K, stored with a canonical Hermite form so that set
//! equality and membership are decidable.

pub mod intmat;

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, Rational};
use crate::qfield::{chi, FieldElement};
use intmat::{inverse_unimodular_2x2, smith, IntMat};

/// 2x2 rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix2Q {
    pub m: [[Rational; 2]; 2],
}

impl Matrix2Q {
    pub fn new(m11: Rational, m12: Rational, m21: Rational, m22: Rational) -> Self {
        Self { m: [[m11, m12], [m21, m22]] }
    }

    pub fn from_ints(m: [[i64; 2]; 2]) -> Self {
        let r = |x: i64| Rational::from_integer(BigInt::from(x));
        Self::new(r(m[0][0]), r(m[0][1]), r(m[1][0]), r(m[1][1]))
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0], [0, 1]])
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.m[i][j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let e = |i: usize, j: usize| &self.m[i][0] * &other.m[0][j] + &self.m[i][1] * &other.m[1][j];
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    pub fn det(&self) -> Rational {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn trace(&self) -> Rational {
        &self.m[0][0] + &self.m[1][1]
    }

    pub fn is_integral(&self) -> bool {
        self.m.iter().flatten().all(|x| x.is_integer())
    }

    /// Integer entries, if integral.
    pub fn to_ints(&self) -> Option<[[BigInt; 2]; 2]> {
        if !self.is_integral() {
            return None;
        }
        let e = |i: usize, j: usize| self.m[i][j].to_integer();
        Some([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl fmt::Display for Matrix2Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = |i: usize, j: usize| format_rational(&self.m[i][j]);
        write!(f, "[[{}, {}], [{}, {}]]", e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

/// `Z b1 + Z b2` inside K.
///
/// The canonical form is `(d, H)`: `d` is the least positive integer with
/// `d L` inside `Z + Z u`, and `H` is the row Hermite form of `d L` in
/// `{1, u}` coordinates.
#[derive(Clone, Debug)]
pub struct Lattice {
    b1: FieldElement,
    b2: FieldElement,
    denom: BigInt,
    hnf: [[BigInt; 2]; 2],
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.b1.field() == other.b1.field() && self.denom == other.denom && self.hnf == other.hnf
    }
}

impl Eq for Lattice {}

impl Hash for Lattice {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.b1.field().hash(state);
        self.denom.hash(state);
        self.hnf.hash(state);
    }
}

fn solve_coords(b1: &FieldElement, b2: &FieldElement, x: &FieldElement) -> (Rational, Rational) {
    let det = b1.a() * b2.b() - b1.b() * b2.a();
    let m1 = (x.a() * b2.b() - x.b() * b2.a()) / &det;
    let m2 = (b1.a() * x.b() - b1.b() * x.a()) / det;
    (m1, m2)
}

impl Lattice {
    pub fn new(b1: FieldElement, b2: FieldElement) -> Result<Self> {
        if b1.field() != b2.field() {
            return Err(Error::FieldMismatch);
        }
        if chi(&b1, &b2).is_zero() {
            return Err(Error::DegenerateBasis);
        }
        let denom = [b1.a(), b1.b(), b2.a(), b2.b()].iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let scaled = |q: &Rational| (q * Rational::from_integer(denom.clone())).to_integer();
        let rows: IntMat = vec![vec![scaled(b1.a()), scaled(b1.b())], vec![scaled(b2.a()), scaled(b2.b())]];
        let h = intmat::row_hnf(&rows);
        debug_assert_eq!(h.len(), 2);
        let hnf = [[h[0][0].clone(), h[0][1].clone()], [h[1][0].clone(), h[1][1].clone()]];
        Ok(Self { b1, b2, denom, hnf })
    }

    /// The order `Z[u] = Z + Z u`.
    pub fn order(field: crate::qfield::FieldDescriptor) -> Self {
        Self::new(field.one(), field.u()).expect("1, u are independent")
    }

    pub fn basis(&self) -> (&FieldElement, &FieldElement) {
        (&self.b1, &self.b2)
    }

    /// Basis read off the canonical form.
    pub fn canonical_basis(&self) -> (FieldElement, FieldElement) {
        let f = self.b1.field();
        let d = Rational::from_integer(self.denom.clone());
        let e = |x: &BigInt| Rational::from_integer(x.clone()) / &d;
        (f.element(e(&self.hnf[0][0]), e(&self.hnf[0][1])), f.element(e(&self.hnf[1][0]), e(&self.hnf[1][1])))
    }

    pub fn canonical_form(&self) -> (&BigInt, &[[BigInt; 2]; 2]) {
        (&self.denom, &self.hnf)
    }

    /// Rational coordinates of `x` in the defining basis.
    pub fn rational_coords(&self, x: &FieldElement) -> (Rational, Rational) {
        solve_coords(&self.b1, &self.b2, x)
    }

    /// Integer coordinates of `x` in the defining basis, if `x` is in the lattice.
    pub fn coords(&self, x: &FieldElement) -> Option<(BigInt, BigInt)> {
        let (m1, m2) = self.rational_coords(x);
        if m1.is_integer() && m2.is_integer() {
            Some((m1.to_integer(), m2.to_integer()))
        } else {
            None
        }
    }

    /// Membership through the canonical form.
    pub fn contains(&self, x: &FieldElement) -> bool {
        if x.field() != self.b1.field() {
            return false;
        }
        let d = Rational::from_integer(self.denom.clone());
        let xa = x.a() * &d;
        let xb = x.b() * &d;
        if !xa.is_integer() || !xb.is_integer() {
            return false;
        }
        let (xa, xb) = (xa.to_integer(), xb.to_integer());
        let h = &self.hnf;
        if !xa.is_multiple_of(&h[0][0]) {
            return false;
        }
        let m1 = &xa / &h[0][0];
        let rest = xb - &m1 * &h[0][1];
        rest.is_multiple_of(&h[1][1])
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        self.contains(&other.b1) && self.contains(&other.b2)
    }

    pub fn scale(&self, x: &FieldElement) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::ZeroScalar);
        }
        Self::new(x * &self.b1, x * &self.b2)
    }

    /// `[self : other] = |chi(other basis) / chi(self basis)|`.
    pub fn index(&self, other: &Lattice) -> Rational {
        let num = chi(&other.b1, &other.b2);
        let den = chi(&self.b1, &self.b2);
        (num.irr() / den.irr()).abs()
    }

    /// Matrix `M` with `M (b1; b2) = v (b1; b2)`: row i holds the coordinates of `v b_i`.
    pub fn mult_matrix(&self, v: &FieldElement) -> Matrix2Q {
        let (a, b) = self.rational_coords(&(v * &self.b1));
        let (c, d) = self.rational_coords(&(v * &self.b2));
        Matrix2Q::new(a, b, c, d)
    }

    /// Whether `v L = L`; `v` must be a unit.
    pub fn is_invariant(&self, v: &FieldElement) -> Result<bool> {
        if !v.is_unit() {
            return Err(Error::NotUnit(v.to_string()));
        }
        Ok(self.mult_matrix(v).is_integral())
    }

    /// Coset representatives and invariant factors of `self / small`.
    pub fn quotient(&self, small: &Lattice) -> Result<Quotient> {
        Quotient::new(self, small)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z<{}, {}>", self.b1, self.b2)
    }
}

/// The finite group `big / small` presented in a Smith basis.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// Basis of the big lattice adapted to the small one.
    gens: [FieldElement; 2],
    /// Invariant factors `d1 | d2`.
    factors: [u64; 2],
    /// Converts coordinates in the big lattice's defining basis to Smith coordinates.
    to_smith: IntMat,
    big: Lattice,
    reps: Vec<FieldElement>,
}

impl Quotient {
    fn new(big: &Lattice, small: &Lattice) -> Result<Self> {
        let c1 = big.coords(&small.b1).ok_or(Error::NotSublattice)?;
        let c2 = big.coords(&small.b2).ok_or(Error::NotSublattice)?;
        let inclusion: IntMat = vec![vec![c1.0, c1.1], vec![c2.0, c2.1]];
        let s = smith(&inclusion);
        let vinv = inverse_unimodular_2x2(&s.v);
        let gen = |i: usize| {
            let a = Rational::from_integer(vinv[i][0].clone());
            let b = Rational::from_integer(vinv[i][1].clone());
            &big.b1.scale(&a) + &big.b2.scale(&b)
        };
        let factor = |x: &BigInt| -> Result<u64> {
            u64::try_from(x).map_err(|_| Error::Internal(format!("quotient factor {x} out of range")))
        };
        let factors = [factor(&s.diag[0])?, factor(&s.diag[1])?];
        let gens = [gen(0), gen(1)];
        let mut reps = Vec::with_capacity((factors[0] * factors[1]) as usize);
        for k1 in 0..factors[0] {
            for k2 in 0..factors[1] {
                let k1 = Rational::from_integer(BigInt::from(k1));
                let k2 = Rational::from_integer(BigInt::from(k2));
                reps.push(&gens[0].scale(&k1) + &gens[1].scale(&k2));
            }
        }
        Ok(Self { gens, factors, to_smith: s.v, big: big.clone(), reps })
    }

    pub fn factors(&self) -> [u64; 2] {
        self.factors
    }

    pub fn generators(&self) -> &[FieldElement; 2] {
        &self.gens
    }

    /// Representatives ordered lexicographically by Smith coordinates; index 0 is zero.
    pub fn reps(&self) -> &[FieldElement] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Smith coordinates of `y` reduced into `[0, d1) x [0, d2)`.
    pub fn smith_coords(&self, y: &FieldElement) -> Option<[u64; 2]> {
        let (c1, c2) = self.big.coords(y)?;
        let v = &self.to_smith;
        let s1 = &c1 * &v[0][0] + &c2 * &v[1][0];
        let s2 = &c1 * &v[0][1] + &c2 * &v[1][1];
        let red = |x: BigInt, d: u64| -> u64 {
            let d = BigInt::from(d);
            u64::try_from(x.mod_floor(&d)).expect("reduced coordinate fits")
        };
        Some([red(s1, self.factors[0]), red(s2, self.factors[1])])
    }

    /// Index into [`Self::reps`] of the coset containing `y`.
    pub fn class_of(&self, y: &FieldElement) -> Option<usize> {
        let [k1, k2] = self.smith_coords(y)?;
        Some((k1 * self.factors[1] + k2) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::qfield::FieldDescriptor;
    use proptest::prelude::*;

    fn ex_theta6() -> (FieldDescriptor, Lattice, FieldElement) {
        let k = FieldDescriptor::plus(6).unwrap();
        let eta = k.element(rat(-1, 2), rat(1, 2));
        (k, Lattice::new(k.one(), eta.clone()).unwrap(), eta)
    }

    #[test]
    fn membership() {
        let (k, i, _) = ex_theta6();
        assert!(i.contains(&k.zero()));
        assert!(!i.contains(&k.from_rational(rat(1, 2))));
        let scaled = i.scale(&(k.one() - k.u())).unwrap();
        // 2 sqrt(2) = 1/2 * sqrt(32) = u - 3
        assert!(scaled.contains(&k.parse("2*sqrt(2)").unwrap()));
        assert!(scaled.contains(&k.from_int(2)));
        assert_eq!(scaled, Lattice::new(k.from_int(2), k.parse("2*sqrt(2)").unwrap()).unwrap());
        assert_eq!(i.scale(&k.zero()), Err(Error::ZeroScalar));
    }

    #[test]
    fn scaling_examples() {
        let k4 = FieldDescriptor::plus(4).unwrap();
        let o = Lattice::order(k4);
        assert_eq!(o.scale(&k4.one()).unwrap(), o);
        let expect = Lattice::new(k4.parse("1 + sqrt(3)").unwrap(), k4.from_int(2)).unwrap();
        assert_eq!(o.scale(&(k4.one() - k4.u())).unwrap(), expect);

        let k7 = FieldDescriptor::plus(7).unwrap();
        let eta = k7.element(rat(-2, 3), rat(1, 3));
        let z_eta = Lattice::new(k7.one(), eta.clone()).unwrap();
        let expect = Lattice::new(&eta + &k7.from_int(2), k7.from_int(5)).unwrap();
        assert_eq!(z_eta.scale(&(k7.one() - k7.u())).unwrap(), expect);
    }

    #[test]
    fn indices() {
        let (k, i, _) = ex_theta6();
        assert_eq!(i.index(&i), int(1));
        assert_eq!(Lattice::order(k).index(&i), rat(1, 2));
        let big = i.scale(&(k.one() - k.u()).inverse().unwrap()).unwrap();
        assert_eq!(big.index(&i), int(4));
    }

    #[test]
    fn quotient_theta6() {
        let (k, i, _) = ex_theta6();
        assert_eq!(i.quotient(&i).unwrap().reps(), &[k.zero()]);
        let big = i.scale(&(k.one() - k.u()).inverse().unwrap()).unwrap();
        let q = big.quotient(&i).unwrap();
        assert_eq!(q.factors(), [2, 2]);
        assert_eq!(q.len(), 4);
        assert_eq!(q.reps()[0], k.zero());
        let expected = ["0", "1/2", "sqrt(2)/2", "(1 + sqrt(2))/2"];
        let mut seen: Vec<usize> = expected.iter().map(|s| q.class_of(&k.parse(s).unwrap()).unwrap()).collect();
        seen.sort();
        assert_eq!(seen, vec![0, 1, 2, 3]);
        assert!(i.quotient(&big).is_err());
    }

    #[test]
    fn quotient_theta7_is_cyclic_of_order_five() {
        let k = FieldDescriptor::plus(7).unwrap();
        let eta = k.element(rat(-2, 3), rat(1, 3));
        let i = Lattice::new(k.one(), eta.clone()).unwrap();
        let big = i.scale(&(k.one() - k.u()).inverse().unwrap()).unwrap();
        let q = big.quotient(&i).unwrap();
        assert_eq!(q.factors(), [1, 5]);
        let g = (k.one() + eta.scale(&int(3))).scale(&rat(1, 5));
        let mut classes: Vec<usize> = (0..5).map(|j| q.class_of(&g.scale(&int(j))).unwrap()).collect();
        classes.sort();
        assert_eq!(classes, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn mult_matrices() {
        let (k, i, eta) = ex_theta6();
        assert_eq!(i.mult_matrix(&k.one()), Matrix2Q::identity());
        assert_eq!(i.mult_matrix(&eta), Matrix2Q::from_ints([[0, 1], [1, 2]]));
        assert!(i.is_invariant(&eta).unwrap());
        assert!(i.is_invariant(&k.one()).unwrap());
        assert!(matches!(i.is_invariant(&k.from_int(2)), Err(Error::NotUnit(_))));
        let k4 = FieldDescriptor::plus(4).unwrap();
        assert_eq!(Lattice::order(k4).mult_matrix(&k4.u()), Matrix2Q::from_ints([[0, 1], [-1, 4]]));
        let k7 = FieldDescriptor::plus(7).unwrap();
        let z_eta = Lattice::new(k7.one(), k7.element(rat(-2, 3), rat(1, 3))).unwrap();
        assert!(z_eta.is_invariant(&k7.element(rat(-2, 3), rat(1, 3))).unwrap());
    }

    fn field() -> impl Strategy<Value = FieldDescriptor> {
        prop_oneof![
            (3i64..12).prop_map(|t| FieldDescriptor::plus(t).unwrap()),
            (1i64..9).prop_map(|t| FieldDescriptor::minus(t).unwrap()),
        ]
    }

    fn elem(k: FieldDescriptor) -> impl Strategy<Value = FieldElement> {
        (-12i64..12, 1i64..5, -12i64..12, 1i64..5).prop_map(move |(a, da, b, db)| k.element(rat(a, da), rat(b, db)))
    }

    fn lattice_and_rebase() -> impl Strategy<Value = (Lattice, Lattice, Vec<FieldElement>)> {
        field().prop_flat_map(|k| {
            (elem(k), elem(k), (-3i64..4, -3i64..4, -3i64..4), proptest::collection::vec(elem(k), 8)).prop_filter_map(
                "degenerate",
                move |(b1, b2, (p, q, s), probes)| {
                    let l = Lattice::new(b1.clone(), b2.clone()).ok()?;
                    // [[1 + p q, p], [q, 1]] has determinant 1; compose with a shear by s
                    let u11 = int(1 + p * q);
                    let c1 = &b1.scale(&u11) + &b2.scale(&int(p));
                    let c2 = &b1.scale(&int(q)) + &b2;
                    let c2 = &c2 + &c1.scale(&int(s));
                    let r = Lattice::new(c1, c2).ok()?;
                    Some((l, r, probes))
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rebasing_preserves_membership((l, r, probes) in lattice_and_rebase()) {
            prop_assert_eq!(&l, &r);
            let (b1, b2) = l.basis();
            for p in probes.iter().chain([b1, b2, &(b1 - b2)]) {
                prop_assert_eq!(l.contains(p), r.contains(p));
                prop_assert_eq!(l.contains(p), l.coords(p).is_some());
            }
        }

        #[test]
        fn mult_matrix_is_multiplicative((l, _, probes) in lattice_and_rebase()) {
            let v = &probes[0];
            let w = &probes[1];
            if !v.is_zero() && !w.is_zero() {
                let mv = l.mult_matrix(v);
                let mw = l.mult_matrix(w);
                prop_assert_eq!(l.mult_matrix(&(v * w)), mv.mul(&mw));
                prop_assert_eq!(mv.det(), v.norm());
                prop_assert_eq!(mv.trace(), v.trace());
            }
        }

        #[test]
        fn quotient_reps_are_distinct_cosets((l, _, probes) in lattice_and_rebase()) {
            let k = l.basis().0.field();
            let x = &probes[2];
            if x.is_in_order() && !x.is_zero() && x.norm().abs() <= int(60) {
                let small = l.scale(x).unwrap();
                if l.contains_lattice(&small) {
                    let q = l.quotient(&small).unwrap();
                    prop_assert_eq!(int(q.len() as i64), l.index(&small));
                    for (idx, r) in q.reps().iter().enumerate() {
                        prop_assert!(l.contains(r));
                        prop_assert_eq!(q.class_of(r), Some(idx));
                    }
                    prop_assert_eq!(&q.reps()[0], &k.zero());
                }
            }
        }
    }

    #[test]
    fn order_multiplication_by_u_is_integral() {
        for theta in 3..15 {
            let k = FieldDescriptor::plus(theta).unwrap();
            let m = Lattice::order(k).mult_matrix(&k.u());
            assert!(m.is_integral());
            assert_eq!(m.det(), int(1));
            assert_eq!(m.trace(), int(theta));
        }
    }
}
