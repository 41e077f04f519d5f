//! Mixed and higher Hessian matrices, generic-rank estimation for matrices
//! of polynomials, Lefschetz-property diagnostics, and polar-map degeneracy.
//!
//! The mixed Hessian of order `(k, l)` is the matrix `[(b_i a_j)(f)]` with
//! rows indexed by the chosen basis of `A_l` and columns by the basis of
//! `A_k`; its entries are homogeneous of degree `d - k - l`. Multiplication
//! maps `A_k -> A_l` by powers of a linear operator factor through these
//! matrices: the map's matrix equals `(l-k)!` times the dual mixed Hessian
//! evaluated at the coefficient vector of the linear operator, and
//! [`dual_hessian_identity_holds`] verifies that identity exactly.
//!
//! Generic ranks are sampled at seeded random rational points; a rank equal
//! to `min(rows, cols)` is exact, and for small matrices a submaximal sample
//! is upgraded to a certified answer by fraction-free elimination over the
//! polynomial ring.

use std::collections::HashMap;

use num::bigint::BigInt;
use num::traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::duality::ApolarAlgebra;
use crate::linalg::{self, QMat};
use crate::poly::{apply_op, monomials_of_degree, Monomial, PointQ, Poly, Rational};
use crate::{Error, Result};

/// Matrix whose entries are homogeneous polynomials of one common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMat {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Poly>,
    pub row_labels: Vec<Poly>,
    pub col_labels: Vec<Poly>,
}

impl PolyMat {
    fn from_fn(
        nvars: usize,
        row_labels: Vec<Poly>,
        col_labels: Vec<Poly>,
        mut f: impl FnMut(usize, usize) -> Poly,
    ) -> Self {
        let rows = row_labels.len();
        let cols = col_labels.len();
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        let m = PolyMat {
            rows,
            cols,
            nvars,
            entries,
            row_labels,
            col_labels,
        };
        debug_assert!(
            m.common_degree_ok(),
            "entries are not of one homogeneous degree"
        );
        m
    }

    fn common_degree_ok(&self) -> bool {
        let mut deg = None;
        for e in &self.entries {
            if e.is_zero() {
                continue;
            }
            if !e.is_homogeneous() {
                return false;
            }
            let d = e.degree().unwrap();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return false,
                _ => {}
            }
        }
        true
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn min_dim(&self) -> usize {
        self.rows.min(self.cols)
    }

    pub fn at(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    /// Degree of the nonzero entries, if any.
    pub fn entry_degree(&self) -> Option<u32> {
        self.entries
            .iter()
            .find(|e| !e.is_zero())
            .map(|e| e.degree().unwrap())
    }

    pub fn evaluate(&self, pt: &PointQ) -> QMat {
        QMat::from_fn(self.rows, self.cols, |r, c| self.at(r, c).eval(pt))
    }

    pub fn transpose(&self) -> PolyMat {
        PolyMat::from_fn(
            self.nvars,
            self.col_labels.clone(),
            self.row_labels.clone(),
            |r, c| self.at(c, r).clone(),
        )
    }
}

/// The matrix of second partials `[d^2 f / dx_i dx_j]`; defined for every
/// form, cone or not.
pub fn classical_hessian(f: &Poly) -> PolyMat {
    let n = f.nvars();
    let labels: Vec<Poly> = (0..n).map(|i| Poly::variable(n, i)).collect();
    let partials: Vec<Poly> = (0..n).map(|i| f.diff(i)).collect();
    PolyMat::from_fn(n, labels.clone(), labels, |r, c| partials[r].diff(c))
}

/// Hessian determinant of `f`, as an exact polynomial.
pub fn hessian_det(f: &Poly) -> Poly {
    det_poly(&classical_hessian(f))
}

/// Mixed Hessian over explicit operator lists: entry `(i, j)` is
/// `(row_ops[i] * col_ops[j])(f)`.
pub fn mixed_hessian_with(f: &Poly, row_ops: &[Poly], col_ops: &[Poly]) -> Result<PolyMat> {
    f.homogeneous_degree()?;
    Ok(PolyMat::from_fn(
        f.nvars(),
        row_ops.to_vec(),
        col_ops.to_vec(),
        |r, c| {
            let op = row_ops[r]
                .checked_mul(&col_ops[c])
                .expect("operator product");
            apply_op(&op, f).expect("operator application")
        },
    ))
}

/// Mixed Hessian of order `(k, l)` on the catalecticant pivot bases:
/// rows indexed by the basis of `A_l`, columns by the basis of `A_k`.
pub fn mixed_hessian(alg: &ApolarAlgebra, k: usize, l: usize) -> Result<PolyMat> {
    let d = alg.socle_degree();
    if k + l > d {
        return Err(Error::InvalidArgument(format!(
            "mixed Hessian orders k={k}, l={l} exceed deg f = {d}"
        )));
    }
    mixed_hessian_with(alg.form(), &alg.basis_ops(l), &alg.basis_ops(k))
}

/// Degree-`k` monomial operators that act nontrivially on `f`. They span
/// the image but need not be independent; this is the index set used by the
/// worked matrices in the literature, so it is kept alongside the pivot
/// bases for reproducing those tables verbatim.
pub fn acting_monomials(f: &Poly, k: usize) -> Vec<Monomial> {
    monomials_of_degree(f.nvars(), k as u32)
        .into_iter()
        .filter(|m| {
            !apply_op(&Poly::term(m.clone(), Rational::one()), f)
                .expect("monomial operator application")
                .is_zero()
        })
        .collect()
}

/// Mixed Hessian of order `(k, l)` over the acting monomial sets.
pub fn mixed_hessian_acting(f: &Poly, k: usize, l: usize) -> Result<PolyMat> {
    let d = f.homogeneous_degree()? as usize;
    if k + l > d {
        return Err(Error::InvalidArgument(format!(
            "mixed Hessian orders k={k}, l={l} exceed deg f = {d}"
        )));
    }
    let rows: Vec<Poly> = acting_monomials(f, l)
        .into_iter()
        .map(|m| Poly::term(m, Rational::one()))
        .collect();
    let cols: Vec<Poly> = acting_monomials(f, k)
        .into_iter()
        .map(|m| Poly::term(m, Rational::one()))
        .collect();
    mixed_hessian_with(f, &rows, &cols)
}

/// Determinant of the order-`k` Hessian on the pivot basis of `A_k`.
pub fn hess_k(alg: &ApolarAlgebra, k: usize) -> Result<Poly> {
    if 2 * k > alg.socle_degree() {
        return Err(Error::InvalidArgument(format!(
            "order {k} exceeds half the socle degree {}",
            alg.socle_degree()
        )));
    }
    Ok(det_poly(&mixed_hessian(alg, k, k)?))
}

/// Exact symbolic determinant by Laplace expansion memoized on column
/// subsets. Intended for the small matrices that occur here (at most ~12).
pub fn det_poly(m: &PolyMat) -> Poly {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    assert!(n <= 20, "symbolic determinant limited to small matrices");
    if n == 0 {
        return Poly::one(m.nvars());
    }
    let mut prev: HashMap<u32, Poly> = HashMap::new();
    prev.insert(0, Poly::one(m.nvars()));
    for s in 1..=n {
        let mut layer: HashMap<u32, Poly> = HashMap::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != s {
                continue;
            }
            let mut acc = Poly::zero(m.nvars());
            let mut pos = 0;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let entry = m.at(s - 1, j);
                if !entry.is_zero() {
                    let minor = &prev[&(mask & !(1 << j))];
                    if !minor.is_zero() {
                        let term = entry.checked_mul(minor).expect("determinant degree cap");
                        if (s - 1 + pos) % 2 == 0 {
                            acc = &acc + &term;
                        } else {
                            acc = &acc - &term;
                        }
                    }
                }
                pos += 1;
            }
            layer.insert(mask, acc);
        }
        prev = layer;
    }
    prev.remove(&((1u32 << n) - 1)).unwrap()
}

/// Rank over the rational function field, by fraction-free elimination in
/// the polynomial ring. Exact, deterministic, no sampling.
pub fn symbolic_rank(m: &PolyMat) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<Poly>> = (0..rows)
        .map(|r| (0..cols).map(|c| m.at(r, c).clone()).collect())
        .collect();
    let mut prev = Poly::one(m.nvars());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                a[i][j] = if num.is_zero() {
                    num
                } else {
                    num.div_exact(&prev)
                };
            }
            a[i][c] = Poly::zero(m.nvars());
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// How a generic-rank answer was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    /// A sample already achieved `min(rows, cols)`; the answer is exact.
    SampledMaximal,
    /// Best rank seen over the trial budget; a lower bound only.
    SampledOnly,
    /// Certified by fraction-free elimination over the polynomial ring.
    Symbolic,
}

/// Generic rank of a polynomial matrix with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankEstimate {
    pub rank: usize,
    pub trials: u32,
    pub seed: u64,
    pub certified: bool,
    pub method: RankMethod,
}

impl RankEstimate {
    pub fn label(&self) -> String {
        match self.method {
            RankMethod::SampledMaximal => {
                format!("maximal rank hit by sampling ({} trials)", self.trials)
            }
            RankMethod::SampledOnly => {
                format!(
                    "no rank increase over {} trials (probabilistic lower bound)",
                    self.trials
                )
            }
            RankMethod::Symbolic => "certified by symbolic elimination".to_string(),
        }
    }
}

const SAMPLE_RANGE: i64 = 1_000_000;
/// Submaximal sampled ranks are upgraded to certified answers by symbolic
/// elimination whenever the smaller matrix dimension is at most this.
const SYMBOLIC_CERTIFY_DIM: usize = 8;

/// Maximum rank of `m` at `trials` seeded random integer points in
/// `[-10^6, 10^6]`. Monotone nondecreasing in `trials`; exact when the
/// maximum hits `min(rows, cols)` or when the symbolic upgrade applies.
pub fn generic_rank(m: &PolyMat, trials: u32, seed: u64) -> RankEstimate {
    let trials = trials.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    let target = m.min_dim();
    let mut done_trials = 0;
    for _ in 0..trials {
        done_trials += 1;
        let pt = PointQ::new(
            (0..m.nvars())
                .map(|_| {
                    Rational::from_integer(BigInt::from(
                        rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE),
                    ))
                })
                .collect(),
        );
        best = best.max(linalg::rank(&m.evaluate(&pt)));
        if best == target {
            return RankEstimate {
                rank: best,
                trials: done_trials,
                seed,
                certified: true,
                method: RankMethod::SampledMaximal,
            };
        }
    }
    if target <= SYMBOLIC_CERTIFY_DIM {
        let exact = symbolic_rank(m);
        debug_assert!(exact >= best);
        return RankEstimate {
            rank: exact,
            trials: done_trials,
            seed,
            certified: true,
            method: RankMethod::Symbolic,
        };
    }
    RankEstimate {
        rank: best,
        trials: done_trials,
        seed,
        certified: false,
        method: RankMethod::SampledOnly,
    }
}

/// Matrix of the multiplication map `L^{l-k}: A_k -> A_l` in the pivot
/// bases, found by multiplying operators and solving coordinates against the
/// basis images.
pub fn lefschetz_matrix(alg: &ApolarAlgebra, k: usize, l: usize, op: &Poly) -> Result<QMat> {
    let d = alg.socle_degree();
    if k > l || l > d {
        return Err(Error::InvalidArgument(format!(
            "need k <= l <= socle degree, got k={k}, l={l}"
        )));
    }
    if op.homogeneous_degree()? != 1 {
        return Err(Error::InvalidArgument(
            "the multiplier must be a linear operator".into(),
        ));
    }
    let power = op.checked_pow((l - k) as u32)?;
    let cols = alg.basis_ops(k);
    let mut m = QMat::zeros(alg.dim(l), alg.dim(k));
    for (j, b) in cols.iter().enumerate() {
        let prod = power.checked_mul(b)?;
        let coords = alg.class_coords(&prod, l);
        for (i, c) in coords.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// Mixed Hessian with rows indexed by the dual basis of `A_l` (operators of
/// degree `d - l`) and columns by the basis of `A_k`. Entries have degree
/// `l - k`.
pub fn dual_mixed_hessian(alg: &ApolarAlgebra, k: usize, l: usize) -> Result<PolyMat> {
    let d = alg.socle_degree();
    if k > l || l > d {
        return Err(Error::InvalidArgument(format!(
            "need k <= l <= socle degree, got k={k}, l={l}"
        )));
    }
    let duals = alg.dual_basis(l).duals;
    mixed_hessian_with(alg.form(), &duals, &alg.basis_ops(k))
}

/// Coefficient vector of a linear operator, as an evaluation point.
pub fn linear_coefficients(op: &Poly) -> Result<PointQ> {
    if op.homogeneous_degree()? != 1 {
        return Err(Error::InvalidArgument("expected a linear operator".into()));
    }
    let n = op.nvars();
    Ok(PointQ::new(
        (0..n).map(|i| op.coeff(&Monomial::var(n, i))).collect(),
    ))
}

/// Exact check that the multiplication matrix of `L^{l-k}: A_k -> A_l`
/// equals `(l-k)!` times the dual mixed Hessian evaluated at the coefficient
/// vector of `L`. Both sides are computed independently.
pub fn dual_hessian_identity_holds(
    alg: &ApolarAlgebra,
    k: usize,
    l: usize,
    op: &Poly,
) -> Result<bool> {
    let lhs = lefschetz_matrix(alg, k, l, op)?;
    let dual = dual_mixed_hessian(alg, k, l)?;
    let rhs = dual.evaluate(&linear_coefficients(op)?);
    let mut fact = BigInt::one();
    for t in 1..=(l - k) {
        fact *= BigInt::from(t);
    }
    let fact = Rational::from_integer(fact);
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            if *lhs.at(i, j) != &fact * rhs.at(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Verdict for one Hessian level `k <= d/2`.
#[derive(Clone, Debug)]
pub struct LevelReport {
    pub level: usize,
    pub dim: usize,
    pub rank: RankEstimate,
    /// Exact vanishing of the level determinant, when it was computed
    /// (always, at these problem sizes).
    pub determinant_zero: Option<bool>,
    pub ok: bool,
}

/// Verdict for one multiplication step `A_i -> A_{i+1}` under a generic
/// linear operator.
#[derive(Clone, Debug)]
pub struct StepReport {
    pub from: usize,
    pub to: usize,
    pub dim_source: usize,
    pub dim_target: usize,
    pub rank: RankEstimate,
    pub maximal: bool,
}

/// Strong/weak Lefschetz diagnostics for `A(f)`.
#[derive(Clone, Debug)]
pub struct LefschetzReport {
    pub socle_degree: usize,
    pub hilbert: Vec<usize>,
    pub levels: Vec<LevelReport>,
    pub slp: bool,
    pub steps: Vec<StepReport>,
    pub wlp: bool,
    pub trials: u32,
    pub seed: u64,
}

/// Determinant sizes up to which level verdicts are certified symbolically.
const LEVEL_DET_CAP: usize = 12;

/// Lefschetz report for `A(f)`: one level verdict per `k <= d/2` (the
/// algebra has the strong property iff every level determinant is nonzero)
/// and one step verdict per multiplication `A_i -> A_{i+1}`.
pub fn slp_report(f: &Poly, trials: u32, seed: u64) -> Result<LefschetzReport> {
    let alg = ApolarAlgebra::new(f)?;
    let d = alg.socle_degree();
    let mut levels = Vec::new();
    for k in 1..=d / 2 {
        let hm = mixed_hessian(&alg, k, k)?;
        let rank = generic_rank(&hm, trials, seed);
        let h_k = alg.dim(k);
        let (ok, det_zero) = if rank.rank == h_k {
            (true, Some(false))
        } else if h_k <= LEVEL_DET_CAP {
            let zero = det_poly(&hm).is_zero();
            (!zero, Some(zero))
        } else {
            (false, None)
        };
        levels.push(LevelReport {
            level: k,
            dim: h_k,
            rank,
            determinant_zero: det_zero,
            ok,
        });
    }
    let slp = levels.iter().all(|l| l.ok);
    let mut steps = Vec::new();
    for i in 0..d {
        let dm = dual_mixed_hessian(&alg, i, i + 1)?;
        let rank = generic_rank(&dm, trials, seed);
        let maximal = rank.rank == alg.dim(i).min(alg.dim(i + 1));
        steps.push(StepReport {
            from: i,
            to: i + 1,
            dim_source: alg.dim(i),
            dim_target: alg.dim(i + 1),
            rank,
            maximal,
        });
    }
    let wlp = steps.iter().all(|s| s.maximal);
    Ok(LefschetzReport {
        socle_degree: d,
        hilbert: alg.view().dims.clone(),
        levels,
        slp,
        steps,
        wlp,
        trials,
        seed,
    })
}

/// Dimension and degeneracy of the image of the order-`k` polar map.
#[derive(Clone, Debug)]
pub struct PolarReport {
    pub order: usize,
    pub rank: RankEstimate,
    /// Dimension of the closure of the polar image: rank - 1.
    pub image_dim: usize,
    /// Dimension of the ambient projective space.
    pub ambient_dim: usize,
    pub degenerate: bool,
}

/// The image of the order-`k` polar map has dimension
/// `rank(Hess^{(1,k)}) - 1`; it is degenerate when that falls short of the
/// ambient dimension.
pub fn polar_degeneracy(
    alg: &ApolarAlgebra,
    k: usize,
    trials: u32,
    seed: u64,
) -> Result<PolarReport> {
    let d = alg.socle_degree();
    if k == 0 || k >= d {
        return Err(Error::InvalidArgument(format!(
            "polar order must satisfy 1 <= k < d, got {k}"
        )));
    }
    let hm = mixed_hessian(alg, 1, k)?;
    let rank = generic_rank(&hm, trials, seed);
    let n = alg.nvars() - 1;
    let image_dim = rank.rank.saturating_sub(1);
    Ok(PolarReport {
        order: k,
        image_dim,
        ambient_dim: n,
        degenerate: image_dim < n,
        rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use num::traits::Zero;

    fn p(text: &str, nvars: usize) -> Poly {
        parse_poly(text, nvars).unwrap()
    }

    fn fermat() -> Poly {
        p("x0^4+x1^4+x2^4", 3)
    }

    fn gn_quartic() -> Poly {
        // x*u^3 + y*u^2*v + z*u*v^2 + v^4 with (x,y,z,u,v) = (x0..x4).
        p("x0*x3^3+x1*x3^2*x4+x2*x3*x4^2+x4^4", 5)
    }

    fn ikeda() -> Poly {
        // x*u*v^3 + y*u^3*v + x^2*y^3 with (x,y,u,v) = (x0..x3).
        p("x0*x2*x3^3+x1*x2^3*x3+x0^2*x1^3", 4)
    }

    #[test]
    fn hessian_of_triangle_by_hand() {
        // det [[0, x2, x1], [x2, 0, x0], [x1, x0, 0]] = 2*x0*x1*x2.
        let f = p("x0*x1*x2", 3);
        assert_eq!(hessian_det(&f), p("2*x0*x1*x2", 3));
        let alg = ApolarAlgebra::new(&f).unwrap();
        assert_eq!(hess_k(&alg, 1).unwrap(), p("2*x0*x1*x2", 3));
    }

    #[test]
    fn mixed_hessian_shapes_and_transpose() {
        let alg = ApolarAlgebra::new(&fermat()).unwrap();
        let h12 = mixed_hessian(&alg, 1, 2).unwrap();
        assert_eq!((h12.rows(), h12.cols()), (3, 3));
        let h21 = mixed_hessian(&alg, 2, 1).unwrap();
        assert_eq!(h21, h12.transpose());
        let h11 = mixed_hessian(&alg, 1, 1).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(h11.at(i, j), h11.at(j, i));
            }
        }
        // The order-(1,1) Hessian on the pivot basis is the classical one.
        assert_eq!(h11, classical_hessian(&fermat()));
    }

    #[test]
    fn generic_rank_of_zero_and_full_rank_matrices() {
        let z = PolyMat::from_fn(2, vec![Poly::one(2); 2], vec![Poly::one(2); 2], |_, _| {
            Poly::zero(2)
        });
        let est = generic_rank(&z, 3, 0);
        assert_eq!(est.rank, 0);
        assert!(est.certified);

        let alg = ApolarAlgebra::new(&fermat()).unwrap();
        let h = mixed_hessian(&alg, 1, 1).unwrap();
        let est = generic_rank(&h, 3, 0);
        assert_eq!(est.rank, 3);
        assert!(est.certified);
    }

    #[test]
    fn symbolic_rank_agrees_with_determinant_verdicts() {
        let f = gn_quartic();
        let hess = classical_hessian(&f);
        // Vanishing classical Hessian: the first three partials satisfy
        // f_x * f_z = f_y^2, so all five are algebraically dependent.
        assert!(hessian_det(&f).is_zero());
        assert!(symbolic_rank(&hess) < 5);

        let g = ikeda();
        assert!(!hessian_det(&g).is_zero());
        assert_eq!(symbolic_rank(&classical_hessian(&g)), 4);
    }

    #[test]
    fn acting_monomials_of_gn_quartic_reproduce_published_grid() {
        let f = gn_quartic();
        let acting = acting_monomials(&f, 2);
        assert_eq!(acting.len(), 8);
        let hm = mixed_hessian_acting(&f, 2, 2).unwrap();
        assert_eq!((hm.rows(), hm.cols()), (8, 8));
        // Dependent spanning set: the grid determinant vanishes while the
        // pivot-basis pairing determinant cannot (socle degree = 2k).
        assert!(det_poly(&hm).is_zero());
        assert_eq!(symbolic_rank(&hm), 6);
        let alg = ApolarAlgebra::new(&f).unwrap();
        assert_eq!(alg.dim(2), 6);
        assert!(!hess_k(&alg, 2).unwrap().is_zero());
    }

    #[test]
    fn gn_quartic_polar_rank_is_five() {
        let f = gn_quartic();
        let alg = ApolarAlgebra::new(&f).unwrap();
        let h12 = mixed_hessian(&alg, 1, 2).unwrap();
        assert_eq!((h12.rows(), h12.cols()), (6, 5));
        assert_eq!(generic_rank(&h12, 3, 0).rank, 5);
        let polar = polar_degeneracy(&alg, 2, 3, 0).unwrap();
        assert_eq!(polar.image_dim, 4);
        assert!(!polar.degenerate);
        // Injectivity of multiplication by u + v from degree 1 to degree 2.
        let step = lefschetz_matrix(&alg, 1, 2, &p("x3+x4", 5)).unwrap();
        assert_eq!(linalg::rank(&step), 5);
    }

    #[test]
    fn dual_hessian_identity_on_fixtures() {
        let alg = ApolarAlgebra::new(&fermat()).unwrap();
        let op = p("x0+2*x1+3*x2", 3);
        for (k, l) in [(0, 4), (1, 3), (1, 2), (2, 2)] {
            assert!(
                dual_hessian_identity_holds(&alg, k, l, &op).unwrap(),
                "({k},{l})"
            );
        }
        let g = gn_quartic();
        let alg = ApolarAlgebra::new(&g).unwrap();
        assert!(dual_hessian_identity_holds(&alg, 1, 2, &p("x3+x4", 5)).unwrap());
    }

    #[test]
    fn slp_of_fermat_and_failure_at_level_two_for_ikeda() {
        let rep = slp_report(&fermat(), 3, 0).unwrap();
        assert!(rep.slp);
        assert!(rep.levels.iter().all(|l| l.ok));

        let rep = slp_report(&ikeda(), 3, 0).unwrap();
        assert_eq!(rep.hilbert, vec![1, 4, 10, 10, 4, 1]);
        assert!(
            rep.levels[0].ok,
            "level 1 must pass (nonzero classical Hessian)"
        );
        assert!(!rep.levels[1].ok, "level 2 must fail");
        assert_eq!(rep.levels[1].determinant_zero, Some(true));
        assert!(!rep.slp);
    }

    #[test]
    fn even_socle_middle_hessian_has_full_generic_rank() {
        // When the socle degree is 2k, the order-k Hessian on a genuine
        // basis is the matrix of a perfect pairing, so its generic rank is
        // the full h_k on every non-cone fixture.
        for (text, nvars) in [
            ("x0^4+x1^4+x2^4", 3),
            ("x0^4+x1^4+x2^4+(x0+x1+x2)^4", 3),
            ("(x0^2+x1^2)^2+(x1^2+x2^2)^2", 3),
            ("x0^3*x1+x2^4", 3),
            ("x0*x3^3+x1*x3^2*x4+x2*x3*x4^2+x4^4", 5),
        ] {
            let alg = ApolarAlgebra::new(&p(text, nvars)).unwrap();
            let k = alg.socle_degree() / 2;
            let hm = mixed_hessian(&alg, k, k).unwrap();
            let est = generic_rank(&hm, 3, 0);
            assert_eq!(est.rank, alg.dim(k), "{text}");
            assert!(est.certified);
        }
    }

    #[test]
    fn polar_rank_equals_generic_multiplication_rank() {
        // The generic rank of multiplication A_1 -> A_{d-k} matches the
        // generic rank of the order-(1,k) Hessian.
        let mut rng = rand::rngs::StdRng::seed_from_u64(99);
        use rand::RngCore;
        for (text, nvars) in [
            ("x0*x3^3+x1*x3^2*x4+x2*x3*x4^2+x4^4", 5usize),
            ("x0^3*x1+x2^4", 3),
            ("x0*x2*x3^3+x1*x2^3*x3+x0^2*x1^3", 4),
        ] {
            let f = p(text, nvars);
            let alg = ApolarAlgebra::new(&f).unwrap();
            let d = alg.socle_degree();
            for k in 1..d {
                let hess_rank = generic_rank(&mixed_hessian(&alg, 1, k).unwrap(), 3, 0);
                let mut best = 0;
                for _ in 0..3 {
                    let mut ell = Poly::zero(nvars);
                    for i in 0..nvars {
                        let c = (rng.next_u32() % 2001) as i64 - 1000;
                        ell = &ell
                            + &Poly::variable(nvars, i)
                                .scale(&Rational::from_integer(BigInt::from(c)));
                    }
                    if ell.is_zero() {
                        continue;
                    }
                    let m = lefschetz_matrix(&alg, 1, d - k, &ell).unwrap();
                    best = best.max(linalg::rank(&m));
                }
                assert_eq!(best, hess_rank.rank, "{text}, order {k}");
            }
        }
    }

    #[test]
    fn nonvanishing_hessian_in_low_ambient_dimension() {
        // Up to ambient projective 3-space a non-cone has a nonzero
        // Hessian determinant; checked on fixtures and seeded samples.
        for (text, nvars) in [
            ("x0*x1*x2", 3usize),
            ("x0^3*x1+x2^4", 3),
            ("x0^2*x1^2+x2^4", 3),
            ("x0*x2*x3^3+x1*x2^3*x3+x0^2*x1^3", 4),
        ] {
            assert!(!hessian_det(&p(text, nvars)).is_zero(), "{text}");
        }
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        use rand::Rng;
        for _ in 0..10 {
            let nvars = 2 + rng.gen_range(0..3usize);
            let d = 3 + rng.gen_range(0..2u32);
            let mut f = Poly::zero(nvars);
            for m in monomials_of_degree(nvars, d) {
                f.add_term(
                    m,
                    Rational::from_integer(BigInt::from(rng.gen_range(-9i64..=9))),
                );
            }
            if f.is_zero() || crate::duality::is_cone(&f).unwrap() {
                continue;
            }
            assert!(!hessian_det(&f).is_zero(), "seeded sample {f}");
        }
    }

    #[test]
    fn level_zero_map_is_isomorphism() {
        let alg = ApolarAlgebra::new(&fermat()).unwrap();
        let m = lefschetz_matrix(&alg, 0, 4, &p("x0+x1+x2", 3)).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert!(!m.at(0, 0).is_zero());
        let id = lefschetz_matrix(&alg, 2, 2, &p("x0", 3)).unwrap();
        assert_eq!(id, QMat::identity(3));
    }
}
