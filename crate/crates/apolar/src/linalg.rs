//! Exact dense rational linear algebra.
//!
//! The production path clears denominators row-wise and runs fraction-free
//! (Bareiss) forward elimination over the integers, then back-substitutes
//! exactly to reach reduced row-echelon form. A plain rational Gauss-Jordan
//! ([`rref_naive`]) is kept as an independent reference; the two must agree
//! bit for bit because the RREF of a matrix is unique.
//!
//! Pivot selection always takes the first nonzero entry in column order, so
//! results are deterministic.

use num::bigint::BigInt;
use num::traits::{One, Zero};
use num::Integer;

use crate::poly::Rational;

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map(|r| r.len()).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        QMat {
            rows: nr,
            cols: nc,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> QMat {
        QMat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for c in 0..self.cols {
                    if !self.at(r, c).is_zero() && !v[c].is_zero() {
                        acc += self.at(r, c) * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul_mat(&self, rhs: &QMat) -> QMat {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        QMat::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Rational::zero();
            for t in 0..self.cols {
                if !self.at(r, t).is_zero() && !rhs.at(t, c).is_zero() {
                    acc += self.at(r, t) * rhs.at(t, c);
                }
            }
            acc
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Horizontal concatenation `[self | right]`.
    pub fn augment(&self, right: &QMat) -> QMat {
        assert_eq!(self.rows, right.rows, "row count mismatch");
        QMat::from_fn(self.rows, self.cols + right.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                right.at(r, c - self.cols).clone()
            }
        })
    }
}

/// A matrix in reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub mat: QMat,
    pub pivots: Vec<usize>,
}

/// Clear denominators row by row; scaling rows changes neither the RREF nor
/// the row space nor the kernel.
fn integer_rows(m: &QMat) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let mut lcm = BigInt::one();
            for c in 0..m.cols() {
                let d = m.at(r, c).denom();
                lcm = lcm.lcm(d);
            }
            (0..m.cols())
                .map(|c| {
                    let e = m.at(r, c);
                    e.numer() * (&lcm / e.denom())
                })
                .collect()
        })
        .collect()
}

/// Fraction-free forward elimination in place; pivot search is restricted to
/// the first `limit` columns. Returns the pivot columns. Every division is
/// checked to be exact.
fn bareiss_echelon(a: &mut [Vec<BigInt>], limit: usize) -> Vec<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..limit.min(cols) {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                let (q, rem) = num.div_rem(&prev);
                assert!(
                    rem.is_zero(),
                    "fraction-free elimination produced an inexact division"
                );
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

fn rref_with_limit(m: &QMat, limit: usize) -> Rref {
    let mut a = integer_rows(m);
    let pivots = bareiss_echelon(&mut a, limit);
    // Exact rational back-substitution from the integer echelon form.
    let mut out = QMat::from_fn(m.rows(), m.cols(), |r, c| {
        Rational::from_integer(a[r][c].clone())
    });
    for (pr, &pc) in pivots.iter().enumerate().rev() {
        let inv = out.at(pr, pc).clone();
        for c in 0..out.cols() {
            let v = out.at(pr, c) / &inv;
            out.set(pr, c, v);
        }
        for i in 0..pr {
            let factor = out.at(i, pc).clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..out.cols() {
                let v = out.at(i, c) - &factor * out.at(pr, c);
                out.set(i, c, v);
            }
        }
    }
    Rref { mat: out, pivots }
}

/// Reduced row-echelon form over the rationals (Bareiss path).
pub fn rref(m: &QMat) -> Rref {
    rref_with_limit(m, m.cols())
}

/// Textbook rational Gauss-Jordan; reference implementation used as an
/// oracle against the fraction-free path.
pub fn rref_naive(m: &QMat) -> Rref {
    let mut a: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let rows = m.rows();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].clone();
        for j in 0..cols {
            a[r][j] = &a[r][j] / &inv;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].clone();
            for j in 0..cols {
                a[i][j] = &a[i][j] - &factor * &a[r][j];
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    Rref {
        mat: QMat::from_rows(a),
        pivots,
    }
}

/// Rank via fraction-free forward elimination only.
pub fn rank(m: &QMat) -> usize {
    let mut a = integer_rows(m);
    bareiss_echelon(&mut a, m.cols()).len()
}

/// Basis of the right null space. Vectors are read off the RREF: one per
/// free column, deterministic.
pub fn kernel_basis(m: &QMat) -> Vec<Vec<Rational>> {
    let r = rref(m);
    let pivot_set: Vec<usize> = r.pivots.clone();
    let mut basis = Vec::new();
    for free in 0..m.cols() {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); m.cols()];
        v[free] = Rational::one();
        for (pr, &pc) in pivot_set.iter().enumerate() {
            v[pc] = -r.mat.at(pr, free).clone();
        }
        basis.push(v);
    }
    basis
}

/// Solve `m * x = target` with free variables set to zero. Returns the
/// coefficient vector when `target` lies in the column space; the candidate
/// is verified by an exact multiplication before it is returned.
pub fn in_column_space(m: &QMat, target: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(
        target.len(),
        m.rows(),
        "target length must equal the row count"
    );
    let rhs = QMat::from_fn(m.rows(), 1, |r, _| target[r].clone());
    let aug = m.augment(&rhs);
    let r = rref_with_limit(&aug, aug.cols());
    if r.pivots.contains(&m.cols()) {
        return None;
    }
    let mut x = vec![Rational::zero(); m.cols()];
    for (pr, &pc) in r.pivots.iter().enumerate() {
        x[pc] = r.mat.at(pr, m.cols()).clone();
    }
    // Back-substitution check: the certificate must reproduce the target.
    if m.mul_vec(&x) != target {
        return None;
    }
    Some(x)
}

/// Precomputed elimination operator for solving `m * x = rhs` repeatedly
/// against the same matrix.
#[derive(Clone, Debug)]
pub struct Solver {
    cols: usize,
    pivots: Vec<usize>,
    /// RREF of `[m | I]`; the right block is the recorded row operation.
    work: QMat,
}

impl Solver {
    pub fn new(m: &QMat) -> Self {
        let aug = m.augment(&QMat::identity(m.rows()));
        let r = rref_with_limit(&aug, m.cols());
        Solver {
            cols: m.cols(),
            pivots: r.pivots,
            work: r.mat,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Solution with free variables set to zero, or `None` when `rhs` is not
    /// in the column space.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        let rows = self.work.rows();
        assert_eq!(rhs.len(), rows, "rhs length mismatch");
        let mut y = vec![Rational::zero(); rows];
        for (i, yi) in y.iter_mut().enumerate() {
            let mut acc = Rational::zero();
            for (j, b) in rhs.iter().enumerate() {
                if !b.is_zero() {
                    acc += self.work.at(i, self.cols + j) * b;
                }
            }
            *yi = acc;
        }
        if y[self.pivots.len()..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (pr, &pc) in self.pivots.iter().enumerate() {
            x[pc] = y[pr].clone();
        }
        Some(x)
    }
}
