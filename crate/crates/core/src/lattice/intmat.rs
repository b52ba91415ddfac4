//! Small dense integer matrices: Smith and Hermite normal forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMat = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> IntMat {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n).map(|i| (0..m).map(|j| (0..k).fold(BigInt::zero(), |acc, l| acc + &a[i][l] * &b[l][j])).collect()).collect()
}

/// Result of a Smith decomposition `diag = u * a * v` with `u`, `v` unimodular.
#[derive(Clone, Debug)]
pub struct Smith {
    /// Diagonal entries, non-negative, each dividing the next (zeros last).
    pub diag: Vec<BigInt>,
    pub u: IntMat,
    pub v: IntMat,
}

fn swap_cols(m: &mut IntMat, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// row[dst] -= q * row[src]
fn row_axpy(m: &mut IntMat, dst: usize, src: usize, q: &BigInt) {
    let src_row = m[src].clone();
    for (x, s) in m[dst].iter_mut().zip(src_row.iter()) {
        *x -= q * s;
    }
}

/// col[dst] -= q * col[src]
fn col_axpy(m: &mut IntMat, dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let s = row[src].clone();
        row[dst] -= q * s;
    }
}

pub fn smith(a: &IntMat) -> Smith {
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    let mut a = a.clone();
    let mut u = identity(n);
    let mut v = identity(m);
    for t in 0..n.min(m) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..m {
                    if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish(a, u, v);
            };
            a.swap(t, bi);
            u.swap(t, bi);
            swap_cols(&mut a, t, bj);
            swap_cols(&mut v, t, bj);

            let mut clean = true;
            for i in t + 1..n {
                let q = a[i][t].div_floor(&a[t][t]);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..m {
                let q = a[t][j].div_floor(&a[t][t]);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..n).find(|&i| (t + 1..m).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut a, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    finish(a, u, v)
}

fn finish(a: IntMat, u: IntMat, v: IntMat) -> Smith {
    let k = a.len().min(if a.is_empty() { 0 } else { a[0].len() });
    Smith { diag: (0..k).map(|i| a[i][i].abs()).collect(), u, v }
}

/// Row Hermite normal form of the row span: upper echelon, positive pivots,
/// entries above each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn row_hnf(rows: &[Vec<BigInt>]) -> IntMat {
    let mut a: IntMat = rows.to_vec();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivot_row = 0;
    for c in 0..cols {
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..a.len() {
                if !a[i][c].is_zero() && best.is_none_or(|b| a[i][c].abs() < a[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..a.len() {
                let q = a[i][c].div_floor(&a[pivot_row][c]);
                row_axpy(&mut a, i, pivot_row, &q);
                done &= a[i][c].is_zero();
            }
            if done {
                if a[pivot_row][c].is_negative() {
                    for x in a[pivot_row].iter_mut() {
                        *x = -x.clone();
                    }
                }
                for i in 0..pivot_row {
                    let q = a[i][c].div_floor(&a[pivot_row][c]);
                    row_axpy(&mut a, i, pivot_row, &q);
                }
                pivot_row += 1;
                break;
            }
        }
    }
    a.truncate(pivot_row);
    a
}

/// Inverse of a unimodular matrix (2x2 only, which is all this crate needs).
pub fn inverse_unimodular_2x2(m: &IntMat) -> IntMat {
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    assert!(det.abs().is_one(), "matrix is not unimodular");
    vec![vec![&m[1][1] * &det, -&m[0][1] * &det], vec![-&m[1][0] * &det, &m[0][0] * &det]]
}
