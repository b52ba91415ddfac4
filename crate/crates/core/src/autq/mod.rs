//! The finite group `H = Z/n x| I(1-u)^{-1}/I`, the component group `Q`
//! inside it, and an independent normalizer test for each element of `H`.

pub mod classify;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{QuadComplex, QuadReal, Rational};
use crate::gamma::{
    gamma_contains, gamma_residual, is_standard_form_direct, make_generators, standard_form_witness, GElement,
    SurfaceParams,
};
use crate::lattice::{Lattice, Quotient};
use crate::qfield::{chi, FieldElement, SurfaceType};
use crate::units::{fundamental_unit, invariant_unit_generator};
pub use classify::{format_abelian, Classification};

/// `H` with elements `(i, y)` ordered lexicographically; `(0, 0)` is the identity.
#[derive(Clone, Debug)]
pub struct HGroup {
    params: SurfaceParams,
    eta: FieldElement,
    j: u32,
    u_gen: FieldElement,
    n: u32,
    big: Lattice,
    quotient: Quotient,
    /// `action[y]` is the class of `u_gen * reps[y]`.
    action: Vec<usize>,
}

/// Element `(i, y_index)` of `H`, standing for `[u_gen^i, reps[y_index]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QElement {
    pub i: u32,
    pub y_index: usize,
}

impl HGroup {
    pub fn params(&self) -> &SurfaceParams {
        &self.params
    }

    pub fn eta(&self) -> &FieldElement {
        &self.eta
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn u_gen(&self) -> &FieldElement {
        &self.u_gen
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `I (1-u)^{-1}`.
    pub fn big_lattice(&self) -> &Lattice {
        &self.big
    }

    pub fn coset_reps(&self) -> &[FieldElement] {
        self.quotient.reps()
    }

    pub fn invariant_factors(&self) -> [u64; 2] {
        self.quotient.factors()
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    pub fn order(&self) -> usize {
        self.n as usize * self.coset_reps().len()
    }

    pub fn elements(&self) -> Vec<QElement> {
        let m = self.coset_reps().len();
        (0..self.n).flat_map(|i| (0..m).map(move |y_index| QElement { i, y_index })).collect()
    }

    pub fn index_of(&self, e: QElement) -> usize {
        e.i as usize * self.coset_reps().len() + e.y_index
    }

    pub fn identity(&self) -> QElement {
        QElement { i: 0, y_index: 0 }
    }

    /// `u_gen^i`.
    pub fn unit(&self, i: u32) -> FieldElement {
        self.u_gen.pow(i64::from(i)).expect("units are invertible")
    }

    /// `(v, y)` representing an element.
    pub fn representative(&self, e: QElement) -> (FieldElement, FieldElement) {
        (self.unit(e.i), self.coset_reps()[e.y_index].clone())
    }

    fn act(&self, i: u32, y_index: usize) -> usize {
        (0..i).fold(y_index, |y, _| self.action[y])
    }

    fn add(&self, y1: usize, y2: usize) -> usize {
        let reps = self.coset_reps();
        self.quotient.class_of(&(&reps[y1] + &reps[y2])).expect("sum of representatives stays in the lattice")
    }

    /// `(i1, y1)(i2, y2) = (i1 + i2 mod n, y1 + u_gen^i1 y2)`.
    pub fn mul(&self, a: QElement, b: QElement) -> QElement {
        QElement { i: (a.i + b.i) % self.n, y_index: self.add(a.y_index, self.act(a.i, b.y_index)) }
    }

    /// `n |Norm(1-u)|`.
    pub fn cardinality_bound(&self) -> u64 {
        cardinality_bound_from(&self.params, self.n)
    }
}

fn cardinality_bound_from(p: &SurfaceParams, n: u32) -> u64 {
    let d = p.field();
    let norm = (d.one() - d.u()).norm().abs().to_integer();
    u64::from(n) * norm.to_u64().expect("small norm")
}

/// Runs the unit computations and enumerates `I(1-u)^{-1} / I`.
pub fn build_h(p: &SurfaceParams) -> Result<HGroup> {
    let d = p.field();
    let lattice = p.lattice();
    let eta = fundamental_unit(d);
    let (u_gen, j) = invariant_unit_generator(lattice)?;
    let n = crate::units::utheta_exponent(d, &u_gen)?;
    let big = lattice.scale(&(d.one() - d.u()).inverse()?)?;
    let quotient = big.quotient(lattice)?;
    let action = quotient
        .reps()
        .iter()
        .map(|y| {
            quotient.class_of(&(&u_gen * y)).ok_or_else(|| Error::Internal("unit does not preserve I(1-u)^-1".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HGroup { params: p.clone(), eta, j, u_gen, n, big, quotient, action })
}

/// `n |Norm(1-u)|`, an upper bound for `|Q|`.
pub fn cardinality_bound(p: &SurfaceParams) -> Result<u64> {
    let (u_gen, _) = invariant_unit_generator(p.lattice())?;
    let n = crate::units::utheta_exponent(p.field(), &u_gen)?;
    Ok(cardinality_bound_from(p, n))
}

/// Validated pieces shared by both membership tests.
struct Candidate {
    /// Integer coordinates of `(1-u) y` in `(x1, x2)`.
    ab: (BigInt, BigInt),
    m: [[BigInt; 2]; 2],
}

fn validate(p: &SurfaceParams, v: &FieldElement, y: &FieldElement) -> Result<Candidate> {
    let d = p.field();
    let lattice = p.lattice();
    if !lattice.is_invariant(v)? {
        return Err(Error::NotInvariant(v.to_string()));
    }
    if v.sigma1().sign() <= 0 {
        return Err(Error::InvalidParams(format!("unit {v} has negative first embedding")));
    }
    let shifted = &(d.one() - d.u()) * y;
    let ab = lattice.coords(&shifted).ok_or_else(|| Error::OutsideLattice(y.to_string(), "I(1-u)^-1".into()))?;
    let m = lattice.mult_matrix(v).to_ints().expect("invariance checked");
    Ok(Candidate { ab, m })
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

/// Condition 2 target `(Norm(v)-1) t + chi((u-1)y, e - y/2) [+ chi(a x1, b x2)/2]`.
fn condition_two(p: &SurfaceParams, v: &FieldElement, y: &FieldElement, extra: bool, c: &Candidate) -> bool {
    let d = p.field();
    let mut value = chi(&(&(d.u() - d.one()) * y), &(p.e() - &y.scale(&half())));
    if extra {
        let ax1 = p.x1().scale(&Rational::from_integer(c.ab.0.clone()));
        let bx2 = p.x2().scale(&Rational::from_integer(c.ab.1.clone()));
        value = &value + &chi(&ax1, &bx2).scale(&half());
    }
    let t_part = p.t().scale(&(v.norm() - Rational::one()));
    let total = t_part.try_add_real(&value).expect("same field");
    total.im().is_zero() && total.re().rat().is_zero() && p.in_chi_over_r(total.re())
}

/// Membership of `[v, y]` in `Q` by the closed-form conditions.
///
/// Condition 1: `(v-1)e + y - (m21 m22 v x1 - m12 m11 v x2)/2` lies in `I/r`.
/// Condition 2 (S(+) only): see [`condition_two`]. For S(-) the free `s`
/// absorbs condition 2.
pub fn check_conditions(p: &SurfaceParams, v: &FieldElement, y: &FieldElement) -> Result<bool> {
    let c = validate(p, v, y)?;
    let d = p.field();
    let m = &c.m;
    let r1 = Rational::from_integer(&m[1][0] * &m[1][1]) * half();
    let r2 = Rational::from_integer(&m[0][1] * &m[0][0]) * half();
    let correction = &(v * p.x1()).scale(&r1) - &(v * p.x2()).scale(&r2);
    let cond1 = &(&(v - &d.one()) * p.e()) + &(y - &correction);
    if !p.in_lattice_over_r(&cond1) {
        return Ok(false);
    }
    Ok(match d.surface() {
        SurfaceType::Plus => condition_two(p, v, y, true, &c),
        SurfaceType::Minus => true,
    })
}

/// The even-`r` form: `(v-1)e + y` in `I/r` and condition 2 without the `chi(a x1, b x2)` term.
pub fn check_conditions_even_r(p: &SurfaceParams, v: &FieldElement, y: &FieldElement) -> Result<bool> {
    if p.r() % 2 != 0 {
        return Err(Error::InvalidParams(format!("the simplified conditions need even r, got {}", p.r())));
    }
    let c = validate(p, v, y)?;
    let d = p.field();
    let cond1 = &(&(v - &d.one()) * p.e()) + y;
    if !p.in_lattice_over_r(&cond1) {
        return Ok(false);
    }
    Ok(match d.surface() {
        SurfaceType::Plus => condition_two(p, v, y, false, &c),
        SurfaceType::Minus => true,
    })
}

/// Chooses `s` so that the central residual of `h g0 h^{-1}` vanishes, when
/// that residual depends on `s`; otherwise `s = 0`.
fn choose_s(p: &SurfaceParams, v: &FieldElement, y: &FieldElement) -> Result<QuadComplex> {
    let d = p.field();
    let g0 = make_generators(p).g0;
    let residual = |s: QuadComplex| -> Result<Option<QuadComplex>> {
        let h = GElement::new(v.clone(), y.clone(), s)?;
        Ok(gamma_residual(p, &g0.conjugate_by(&h)?))
    };
    let zero = QuadComplex::zero(d.delta())?;
    let one = QuadComplex::from_real(QuadReal::from_rational(Rational::one(), d.delta())?);
    let (Some(f0), Some(f1)) = (residual(zero.clone())?, residual(one)?) else {
        return Ok(zero);
    };
    let slope = f1.try_sub(&f0)?;
    if slope.is_zero() {
        Ok(zero)
    } else {
        Ok(-(f0.try_div(&slope)?))
    }
}

/// Membership of `[v, y]` in `Q` by conjugating every generator of `Gamma`
/// by `h = [v, y, s]` and by `h^{-1}` and solving the word problem.
pub fn normalizer_oracle(p: &SurfaceParams, v: &FieldElement, y: &FieldElement) -> Result<bool> {
    validate(p, v, y)?;
    let s = choose_s(p, v, y)?;
    let h = GElement::new(v.clone(), y.clone(), s)?;
    let h_inv = h.inverse();
    let gens = make_generators(p);
    for g in gens.as_array() {
        if !gamma_contains(p, &g.conjugate_by(&h)?) || !gamma_contains(p, &g.conjugate_by(&h_inv)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Kernel of `Aut(X) -> Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelKind {
    /// `C*`, for S(+).
    ComplexTorusStar,
    /// `Z/2`, for S(-).
    OrderTwo,
}

impl KernelKind {
    pub fn for_surface(s: SurfaceType) -> Self {
        match s {
            SurfaceType::Plus => KernelKind::ComplexTorusStar,
            SurfaceType::Minus => KernelKind::OrderTwo,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            KernelKind::ComplexTorusStar => "complex-torus-star",
            KernelKind::OrderTwo => "order-two",
        }
    }
}

/// The component group `Q` with its table and isomorphism type.
#[derive(Clone, Debug)]
pub struct ComponentGroup {
    pub elements: Vec<QElement>,
    /// `table[a][b]` is the index in `elements` of `elements[a] * elements[b]`.
    pub table: Vec<Vec<usize>>,
    pub classification: Classification,
    pub kernel_kind: KernelKind,
}

impl ComponentGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

fn require_standard_form(p: &SurfaceParams) -> Result<()> {
    if is_standard_form_direct(p) {
        return Ok(());
    }
    let w = standard_form_witness(p);
    Err(Error::NotStandardForm(format!("(1-u)/u*e + n21*n22/2*x1 - n11*n12/2*x2 = {w} is not in I/{}", p.r())))
}

/// Filters `H` through the conditions and assembles `Q`.
pub fn compute_q(p: &SurfaceParams) -> Result<ComponentGroup> {
    require_standard_form(p)?;
    let h = build_h(p)?;
    compute_q_in(&h)
}

pub fn compute_q_in(h: &HGroup) -> Result<ComponentGroup> {
    let p = h.params();
    let mut elements = Vec::new();
    for e in h.elements() {
        let (v, y) = h.representative(e);
        if check_conditions(p, &v, &y)? {
            elements.push(e);
        }
    }
    assemble(h, elements)
}

fn assemble(h: &HGroup, elements: Vec<QElement>) -> Result<ComponentGroup> {
    if elements.first() != Some(&h.identity()) {
        return Err(Error::Internal("identity of H fails the membership conditions".into()));
    }
    let position = |e: QElement| elements.binary_search(&e).ok();
    let mut table = Vec::with_capacity(elements.len());
    for &a in &elements {
        let row = elements
            .iter()
            .map(|&b| {
                let c = h.mul(a, b);
                position(c).ok_or_else(|| Error::Internal(format!("Q is not closed: ({a:?})({b:?}) = {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    let coords: Vec<classify::Coords> = elements
        .iter()
        .map(|e| {
            let y = h.quotient().smith_coords(&h.coset_reps()[e.y_index]).expect("representative");
            classify::Coords { i: u64::from(e.i), y }
        })
        .collect();
    let classification =
        classify::classify(&classify::Table { table: &table }, &coords, u64::from(h.n()), h.invariant_factors());
    let kernel_kind = KernelKind::for_surface(h.params().field().surface());
    Ok(ComponentGroup { elements, table, classification, kernel_kind })
}

/// One disagreement between the closed-form conditions and the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub element: QElement,
    pub conditions: bool,
    pub oracle: bool,
}

/// Runs both membership tests on every element of `H`.
pub fn cross_check(h: &HGroup) -> Result<Vec<Disagreement>> {
    let p = h.params();
    let mut out = Vec::new();
    for e in h.elements() {
        let (v, y) = h.representative(e);
        let conditions = check_conditions(p, &v, &y)?;
        let oracle = normalizer_oracle(p, &v, &y)?;
        if conditions != oracle {
            out.push(Disagreement { element: e, conditions, oracle });
        }
    }
    Ok(out)
}

/// `Q` for the same data with `r` doubled, and which of its elements lie in `Q` for `r`.
#[derive(Clone, Debug)]
pub struct DoubledR {
    pub q: ComponentGroup,
    /// `lifts[k]` tells whether `q.elements[k]` belongs to `Q` for the original `r`.
    pub lifts: Vec<bool>,
}

pub fn doubled_r(p: &SurfaceParams, original: &ComponentGroup) -> Result<DoubledR> {
    let p2 = p.with_r(2 * p.r())?;
    let q = compute_q(&p2)?;
    let lifts: Vec<bool> = q.elements.iter().map(|e| original.elements.binary_search(e).is_ok()).collect();
    let contained = original.elements.iter().all(|e| q.elements.binary_search(e).is_ok());
    if !contained {
        return Err(Error::Internal("Q for r is not contained in Q for 2r".into()));
    }
    Ok(DoubledR { q, lifts })
}

/// Everything computed for one surface.
#[derive(Clone, Debug)]
pub struct AutReport {
    pub h: HGroup,
    pub q: ComponentGroup,
    pub bound: u64,
    pub kernel_kind: KernelKind,
    /// `None` when the oracle was skipped.
    pub disagreements: Option<Vec<Disagreement>>,
    pub doubled: Option<DoubledR>,
}

pub fn aut_structure(p: &SurfaceParams, run_oracle: bool, double_r: bool) -> Result<AutReport> {
    require_standard_form(p)?;
    let h = build_h(p)?;
    let q = compute_q_in(&h)?;
    let bound = h.cardinality_bound();
    let disagreements = if run_oracle { Some(cross_check(&h)?) } else { None };
    let doubled = if double_r { Some(doubled_r(p, &q)?) } else { None };
    Ok(AutReport { kernel_kind: q.kernel_kind, h, q, bound, disagreements, doubled })
}
