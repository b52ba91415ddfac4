//! Isomorphism type of a finite group given by its multiplication table, with
//! extra structure when the group sits inside `Z/n x| A`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::lattice::intmat::{self, IntMat};

/// Multiplication table with identity at index 0.
pub struct Table<'a> {
    pub table: &'a [Vec<usize>],
}

impl Table<'_> {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul(a, b) == 0).expect("group table has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Invariant factors `d1 | d2 | ...` (all > 1) of an abelian table.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let n = self.order() as u64;
        let mut primary: Vec<Vec<u64>> = Vec::new();
        for p in prime_factors(n) {
            // c_k = #{g : g^(p^k) = 1} = p^(sum_j min(lambda_j, k))
            let mut counts = vec![1u64];
            let mut pk = 1u64;
            loop {
                pk *= p;
                let c = (0..self.order()).filter(|&g| self.pow(g, pk) == 0).count() as u64;
                counts.push(c);
                if c == counts[counts.len() - 2] {
                    break;
                }
            }
            // number of parts >= k is log_p(c_k / c_{k-1})
            let at_least: Vec<u32> = counts.windows(2).map(|w| log_exact(w[1] / w[0], p)).collect();
            let parts = at_least.first().copied().unwrap_or(0) as usize;
            let mut lambda = vec![0u32; parts];
            for ge in at_least.iter().take_while(|&&c| c > 0) {
                for part in lambda.iter_mut().take(*ge as usize) {
                    *part += 1;
                }
            }
            primary.push(lambda.into_iter().map(|e| p.pow(e)).collect());
        }
        combine_primary(primary)
    }
}

fn log_exact(mut x: u64, p: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        debug_assert_eq!(x % p, 0);
        x /= p;
        k += 1;
    }
    k
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Merges prime-power parts into invariant factors in ascending divisibility order.
fn combine_primary(primary: Vec<Vec<u64>>) -> Vec<u64> {
    let len = primary.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for mut parts in primary {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        for (slot, part) in out.iter_mut().zip(parts) {
            *slot *= part;
        }
    }
    out.reverse();
    out
}

/// `Z/d1 x ... x Z/dk`, or `trivial`.
pub fn format_abelian(factors: &[u64]) -> String {
    if factors.is_empty() {
        "trivial".to_string()
    } else {
        factors.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" x ")
    }
}

/// Structure of `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Abelian {
        order: u64,
        invariant_factors: Vec<u64>,
    },
    /// `Q` is generated by the abelian kernel `K = Q ∩ A` and a lift `c` of
    /// a generator of the image in `Z/n`.
    CyclicByAbelian {
        order: u64,
        /// Order of the image of `Q` in `Z/n`.
        image_order: u64,
        /// Index in `Q` of the lift `c`.
        lift: usize,
        /// Order of `c` in `Q`.
        lift_order: u64,
        /// Whether `c^image_order` is the identity, making `Q = <c> x| K`.
        split: bool,
        kernel_factors: Vec<u64>,
        /// Indices in `Q` of generators of `K`, one per kernel factor.
        kernel_generators: Vec<usize>,
        /// Row `j` holds the coordinates of `c k_j c^-1`.
        action: Vec<Vec<u64>>,
    },
}

impl Classification {
    pub fn order(&self) -> u64 {
        match self {
            Classification::Abelian { order, .. } | Classification::CyclicByAbelian { order, .. } => *order,
        }
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, Classification::Abelian { .. })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Abelian { invariant_factors, .. } => {
                write!(f, "{}", format_abelian(invariant_factors))
            }
            Classification::CyclicByAbelian { image_order, split, kernel_factors, action, .. } => {
                let rows: Vec<String> = action
                    .iter()
                    .map(|r| format!("[{}]", r.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")))
                    .collect();
                let mut kernel = format_abelian(kernel_factors);
                if kernel_factors.len() > 1 {
                    kernel = format!("({kernel})");
                }
                if *split {
                    write!(f, "Z/{image_order} ⋉ {kernel} (action [{}])", rows.join(", "))
                } else {
                    write!(f, "extension of Z/{image_order} by {kernel} (action [{}])", rows.join(", "))
                }
            }
        }
    }
}

/// Element of `Z/n x| A` used for classification: exponent and Smith coordinates in `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coords {
    pub i: u64,
    pub y: [u64; 2],
}

/// Classifies `Q` from its table and its coordinates in the ambient `Z/n x| (Z/d1 x Z/d2)`.
pub fn classify(table: &Table<'_>, coords: &[Coords], n: u64, factors: [u64; 2]) -> Classification {
    let order = table.order() as u64;
    if table.is_abelian() {
        return Classification::Abelian { order, invariant_factors: table.invariant_factors() };
    }
    let step = coords.iter().fold(n, |g, c| g.gcd(&c.i));
    let image_order = n / step;
    let kernel: Vec<usize> = (0..coords.len()).filter(|&k| coords[k].i == 0).collect();

    let candidates: Vec<usize> = (0..coords.len()).filter(|&k| coords[k].i == step).collect();
    let lift = candidates.iter().copied().find(|&c| table.pow(c, image_order) == 0).unwrap_or(candidates[0]);
    let split = table.pow(lift, image_order) == 0;

    let kb = KernelBasis::new(kernel.iter().map(|&k| coords[k].y).collect(), factors);
    let kernel_generators: Vec<usize> = kb
        .gens
        .iter()
        .map(|g| *kernel.iter().find(|&&k| coords[k].y == *g).expect("generator lies in the kernel"))
        .collect();
    let lift_inv = table.inverse(lift);
    let action = kernel_generators
        .iter()
        .map(|&g| {
            let image = table.mul(table.mul(lift, g), lift_inv);
            kb.coords_of(coords[image].y)
        })
        .collect();
    Classification::CyclicByAbelian {
        order,
        image_order,
        lift,
        lift_order: table.element_order(lift),
        split,
        kernel_factors: kb.factors,
        kernel_generators,
        action,
    }
}

/// Invariant-factor basis of a subgroup of `Z/d1 x Z/d2`.
struct KernelBasis {
    factors: Vec<u64>,
    gens: Vec<[u64; 2]>,
    /// Maps ambient Z^2 coordinates to generator coordinates.
    to_gens: IntMat,
    /// Lattice basis of the preimage in Z^2, used to invert coordinates.
    basis: IntMat,
}

impl KernelBasis {
    fn new(elements: Vec<[u64; 2]>, d: [u64; 2]) -> Self {
        let b = |x: u64| BigInt::from(x);
        let mut rows: Vec<Vec<BigInt>> = elements.iter().map(|y| vec![b(y[0]), b(y[1])]).collect();
        rows.push(vec![b(d[0]), BigInt::zero()]);
        rows.push(vec![BigInt::zero(), b(d[1])]);
        let basis = intmat::row_hnf(&rows);
        // relations diag(d1, d2) in the preimage basis
        let binv = rational_inverse(&basis);
        let rel = [[b(d[0]), BigInt::zero()], [BigInt::zero(), b(d[1])]];
        let c: IntMat = rel
            .iter()
            .map(|row| {
                (0..2)
                    .map(|j| {
                        let (num, den) = (&row[0] * &binv.0[0][j] + &row[1] * &binv.0[1][j], &binv.1);
                        debug_assert!(num.is_multiple_of(den));
                        num / den
                    })
                    .collect()
            })
            .collect();
        let s = intmat::smith(&c);
        let vinv = intmat::inverse_unimodular_2x2(&s.v);
        let new_basis = intmat::mat_mul(&vinv, &basis);
        let mut factors = Vec::new();
        let mut gens = Vec::new();
        let mut keep = Vec::new();
        for (k, dk) in s.diag.iter().enumerate() {
            if dk > &BigInt::from(1) {
                factors.push(dk.to_u64().expect("small factor"));
                let g = [
                    new_basis[k][0].mod_floor(&b(d[0])).to_u64().expect("reduced"),
                    new_basis[k][1].mod_floor(&b(d[1])).to_u64().expect("reduced"),
                ];
                gens.push(g);
                keep.push(k);
            }
        }
        let to_gens = keep.iter().map(|&k| vec![s.v[0][k].clone(), s.v[1][k].clone()]).collect();
        KernelBasis { factors, gens, to_gens, basis }
    }

    fn coords_of(&self, y: [u64; 2]) -> Vec<u64> {
        let binv = rational_inverse(&self.basis);
        let yb = [BigInt::from(y[0]), BigInt::from(y[1])];
        let in_basis: Vec<BigInt> = (0..2)
            .map(|j| {
                let num = &yb[0] * &binv.0[0][j] + &yb[1] * &binv.0[1][j];
                debug_assert!(num.is_multiple_of(&binv.1));
                num / &binv.1
            })
            .collect();
        self.to_gens
            .iter()
            .zip(&self.factors)
            .map(|(col, &f)| {
                let c = &in_basis[0] * &col[0] + &in_basis[1] * &col[1];
                c.mod_floor(&BigInt::from(f)).to_u64().expect("reduced")
            })
            .collect()
    }
}

/// Adjugate and determinant of a nonsingular 2x2 integer matrix.
fn rational_inverse(m: &IntMat) -> ([[BigInt; 2]; 2], BigInt) {
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    let adj = [[m[1][1].clone(), -m[0][1].clone()], [-m[1][0].clone(), m[0][0].clone()]];
    (adj, det)
}
