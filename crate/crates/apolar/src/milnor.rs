//! Higher-order Jacobian ideals and Milnor algebras.
//!
//! For a reduced form `f` of degree `d`, the order-`k` Jacobian ideal is
//! generated by the distinct order-`k` partials of `f`; the order-`k` Milnor
//! algebra is the quotient by it. Artinian-ness is certified through a
//! regular-sequence bound: if the quotient is Artinian, `n+1` generic
//! combinations of the degree-`(d-k)` generators form a regular sequence
//! whose quotient dies after degree `(n+1)(d-k-1)`, so vanishing must occur
//! by `(n+1)(d-k-1)+1` and non-vanishing there certifies non-Artinian-ness.
//! No Groebner bases anywhere.
//!
//! The same graded-quotient machinery serves arbitrary ideals presented by
//! homogeneous generators: per-degree standard monomials, reduction, and
//! multiplication maps, which is what the Lefschetz and Betti layers use.

use num::traits::{One, Zero};

use crate::hessian::hessian_det;
use crate::linalg::{self, QMat};
use crate::poly::{
    apply_op, monomials_of_degree, Monomial, PointQ, Poly, Rational, MAX_TOTAL_DEGREE,
};
use crate::{binomial, Error, Result};

/// A graded ideal given by homogeneous generators.
#[derive(Clone, Debug)]
pub struct GradedIdealPresentation {
    nvars: usize,
    generators: Vec<Poly>,
}

impl GradedIdealPresentation {
    pub fn new(nvars: usize, generators: Vec<Poly>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::NvarsMismatch {
                    left: g.nvars(),
                    right: nvars,
                });
            }
            g.homogeneous_degree()?;
        }
        Ok(GradedIdealPresentation { nvars, generators })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }
}

/// Distinct nonzero order-`k` partial derivatives of `f` (with their
/// multinomial coefficients as produced by differentiation).
pub fn jac_gens(f: &Poly, k: usize) -> Result<GradedIdealPresentation> {
    let d = f.homogeneous_degree()? as usize;
    if k == 0 || k >= d {
        return Err(Error::InvalidArgument(format!(
            "derivative order must satisfy 1 <= k < d = {d}, got {k}"
        )));
    }
    let mut gens: Vec<Poly> = Vec::new();
    for m in monomials_of_degree(f.nvars(), k as u32) {
        let g = apply_op(&Poly::term(m, Rational::one()), f)?;
        if !g.is_zero() && !gens.contains(&g) {
            gens.push(g);
        }
    }
    GradedIdealPresentation::new(f.nvars(), gens)
}

/// Dimension of the degree-`m` piece of the ideal: the rank of the span of
/// all products (monomial of degree `m - deg g`) times `g`.
pub fn ideal_dim(pres: &GradedIdealPresentation, m: usize) -> usize {
    linalg::rank(&QMat::from_rows(span_rows(pres, m)))
}

fn span_rows(pres: &GradedIdealPresentation, m: usize) -> Vec<Vec<Rational>> {
    let mons = monomials_of_degree(pres.nvars, m as u32);
    let index: std::collections::HashMap<&Monomial, usize> =
        mons.iter().enumerate().map(|(i, mo)| (mo, i)).collect();
    let mut rows = Vec::new();
    for g in &pres.generators {
        let e = g.homogeneous_degree().unwrap() as usize;
        if e > m {
            continue;
        }
        for mu in monomials_of_degree(pres.nvars, (m - e) as u32) {
            let prod = Poly::term(mu, Rational::one())
                .checked_mul(g)
                .expect("ideal span product exceeds the degree cap");
            let mut row = vec![Rational::zero(); mons.len()];
            for (mon, c) in prod.iter() {
                row[index[mon]] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        rows.push(vec![Rational::zero(); mons.len()]);
    }
    rows
}

/// Per-degree data of the quotient by a graded ideal: a reduced basis of the
/// ideal piece and the complementary standard monomials.
struct DegreeData {
    mons: Vec<Monomial>,
    reduced: QMat,
    pivots: Vec<usize>,
    std_positions: Vec<usize>,
}

/// The graded quotient `R/I` up to a degree bound, with exact reduction onto
/// standard monomials and multiplication-by-variable maps.
pub struct IdealQuotient {
    nvars: usize,
    data: Vec<DegreeData>,
}

impl IdealQuotient {
    pub fn new(pres: &GradedIdealPresentation, max_degree: usize) -> Self {
        assert!(
            max_degree <= MAX_TOTAL_DEGREE as usize,
            "degree bound {max_degree} exceeds the supported cap {MAX_TOTAL_DEGREE}"
        );
        let mut data = Vec::with_capacity(max_degree + 1);
        for m in 0..=max_degree {
            let mons = monomials_of_degree(pres.nvars, m as u32);
            let r = linalg::rref(&QMat::from_rows(span_rows(pres, m)));
            let reduced = QMat::from_fn(r.pivots.len(), mons.len(), |i, j| r.mat.at(i, j).clone());
            let std_positions: Vec<usize> =
                (0..mons.len()).filter(|c| !r.pivots.contains(c)).collect();
            data.push(DegreeData {
                mons,
                reduced,
                pivots: r.pivots,
                std_positions,
            });
        }
        IdealQuotient {
            nvars: pres.nvars,
            data,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn max_degree(&self) -> usize {
        self.data.len() - 1
    }

    pub fn dim(&self, m: usize) -> usize {
        if m >= self.data.len() {
            panic!(
                "degree {m} beyond the precomputed bound {}",
                self.max_degree()
            );
        }
        self.data[m].std_positions.len()
    }

    /// Monomials whose classes form the chosen basis of the degree-`m` piece.
    pub fn std_monomials(&self, m: usize) -> Vec<Monomial> {
        let d = &self.data[m];
        d.std_positions.iter().map(|&p| d.mons[p].clone()).collect()
    }

    /// Coordinates of the class of a homogeneous `g` of degree `m` on the
    /// standard monomials, by eliminating the ideal's reduced rows.
    pub fn reduce(&self, g: &Poly, m: usize) -> Vec<Rational> {
        let d = &self.data[m];
        let mut v: Vec<Rational> = d.mons.iter().map(|mon| g.coeff(mon)).collect();
        for (row, &p) in d.pivots.iter().enumerate() {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..v.len() {
                let upd = &v[j] - &c * d.reduced.at(row, j);
                v[j] = upd;
            }
        }
        d.std_positions.iter().map(|&p| v[p].clone()).collect()
    }

    /// Matrix of multiplication by `x_i` from degree `m` to `m + 1` in the
    /// standard-monomial bases.
    pub fn var_map(&self, i: usize, m: usize) -> QMat {
        let src = self.std_monomials(m);
        let mut out = QMat::zeros(self.dim(m + 1), src.len());
        for (j, mon) in src.iter().enumerate() {
            let shifted = mon
                .checked_mul(&Monomial::var(self.nvars, i))
                .expect("variable shift exceeds the degree cap");
            let coords = self.reduce(&Poly::term(shifted, Rational::one()), m + 1);
            for (r, c) in coords.into_iter().enumerate() {
                out.set(r, j, c);
            }
        }
        out
    }
}

/// Classification of a Milnor-algebra profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// All pieces vanish from `vanishing_degree` on, certified.
    Artinian { vanishing_degree: usize },
    /// Certified non-Artinian with dimensions constant at `tail` from
    /// `from` through the cap. The constancy window is a heuristic; the
    /// non-Artinian certificate is not.
    Stable { tail: usize, from: usize },
    /// Neither certificate fired within the cap; raise the cap.
    Undetermined,
}

/// Per-degree dimensions of an order-`k` Milnor algebra with the
/// classification of its tail.
#[derive(Clone, Debug)]
pub struct MilnorProfile {
    pub order: usize,
    pub m_cap: usize,
    pub dims: Vec<usize>,
    pub classification: Classification,
}

impl MilnorProfile {
    /// Split into a polynomial part and an optional constant tail
    /// `(value, from)`, mirroring the closed form
    /// `sum dims[j] t^j + tail * t^from / (1 - t)`.
    pub fn series(&self) -> (Vec<usize>, Option<(usize, usize)>) {
        match self.classification {
            Classification::Artinian { vanishing_degree } => {
                (self.dims[..vanishing_degree].to_vec(), None)
            }
            Classification::Stable { tail, from } => {
                (self.dims[..from].to_vec(), Some((tail, from)))
            }
            Classification::Undetermined => (self.dims.clone(), None),
        }
    }

    pub fn is_artinian(&self) -> bool {
        matches!(self.classification, Classification::Artinian { .. })
    }
}

/// Cap beyond which Artinian-ness is decided: `(n+1)(d-k-1) + 1`.
pub fn certification_bound(nvars: usize, d: usize, k: usize) -> usize {
    nvars * (d - k - 1) + 1
}

/// Default profile cap: one degree past the certification bound.
pub fn default_m_cap(nvars: usize, d: usize, k: usize) -> usize {
    certification_bound(nvars, d, k) + 1
}

/// Dimensions of the order-`k` Milnor algebra up to `m_cap` (default one
/// past the certification bound), with a certified classification.
pub fn milnor_profile(f: &Poly, k: usize, m_cap: Option<usize>) -> Result<MilnorProfile> {
    let d = f.homogeneous_degree()? as usize;
    let pres = jac_gens(f, k)?;
    let nvars = f.nvars();
    let bound = certification_bound(nvars, d, k);
    let cap = m_cap.unwrap_or_else(|| default_m_cap(nvars, d, k));
    if cap > MAX_TOTAL_DEGREE as usize {
        return Err(Error::InvalidArgument(format!(
            "cap {cap} exceeds the supported total-degree cap {MAX_TOTAL_DEGREE}"
        )));
    }
    let quot = IdealQuotient::new(&pres, cap);
    let dims: Vec<usize> = (0..=cap).map(|m| quot.dim(m)).collect();
    let classification = if let Some(m0) = dims.iter().position(|&v| v == 0) {
        Classification::Artinian {
            vanishing_degree: m0,
        }
    } else if cap >= bound {
        // Certified non-Artinian; look for a constant window at the top.
        if cap >= 2 && dims[cap] == dims[cap - 1] && dims[cap] == dims[cap - 2] {
            let tail = dims[cap];
            let from = (0..=cap)
                .rev()
                .take_while(|&m| dims[m] == tail)
                .last()
                .unwrap();
            Classification::Stable { tail, from }
        } else {
            Classification::Undetermined
        }
    } else {
        Classification::Undetermined
    };
    Ok(MilnorProfile {
        order: k,
        m_cap: cap,
        dims,
        classification,
    })
}

/// Certified Artinian-ness of the order-`k` Milnor algebra, decided at the
/// single bound degree.
pub fn is_artinian(f: &Poly, k: usize) -> Result<bool> {
    let d = f.homogeneous_degree()? as usize;
    let pres = jac_gens(f, k)?;
    let bound = certification_bound(f.nvars(), d, k);
    let full = binomial(f.nvars() - 1 + bound, bound);
    Ok(ideal_dim(&pres, bound) == full)
}

/// Stable tail of the profile: the total higher-order Tjurina number summed
/// over the singular points. `None` when Artinian or undetermined.
pub fn tjurina_sum(f: &Poly, k: usize) -> Result<Option<usize>> {
    let profile = milnor_profile(f, k, None)?;
    Ok(match profile.classification {
        Classification::Stable { tail, .. } => Some(tail),
        _ => None,
    })
}

/// Outcome of testing whether the Hessian determinant lies in the Jacobian
/// ideal, with an exact certificate when it does.
#[derive(Clone, Debug)]
pub struct HessianMembership {
    pub in_ideal: bool,
    pub zero_hessian: bool,
    pub hessian_degree: Option<usize>,
    /// Coefficients over the products (monomial x partial) spanning the
    /// degree piece, verified by back-substitution.
    pub certificate: Option<Vec<Rational>>,
}

/// Does the Hessian determinant of `f` lie in the Jacobian ideal? Exact
/// membership in the single relevant degree `(d-2)(n+1)`; a vanishing
/// Hessian is reported as membership with a flag.
pub fn hessian_membership(f: &Poly) -> Result<HessianMembership> {
    f.homogeneous_degree()?;
    let hess = hessian_det(f);
    if hess.is_zero() {
        return Ok(HessianMembership {
            in_ideal: true,
            zero_hessian: true,
            hessian_degree: None,
            certificate: None,
        });
    }
    let target_degree = hess.homogeneous_degree()? as usize;
    let pres = jac_gens(f, 1)?;
    let rows = span_rows(&pres, target_degree);
    let span = QMat::from_rows(rows).transpose();
    let mons = monomials_of_degree(f.nvars(), target_degree as u32);
    let target: Vec<Rational> = mons.iter().map(|m| hess.coeff(m)).collect();
    let certificate = linalg::in_column_space(&span, &target);
    Ok(HessianMembership {
        in_ideal: certificate.is_some(),
        zero_hessian: false,
        hessian_degree: Some(target_degree),
        certificate,
    })
}

/// Rank of multiplication by `L^{j-i}` from degree `i` to degree `j` of the
/// quotient, with the maximal-rank flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRank {
    pub from: usize,
    pub to: usize,
    pub dim_source: usize,
    pub dim_target: usize,
    pub rank: usize,
    pub maximal: bool,
}

/// Multiplication `L^{j-i}: (R/I)_i -> (R/I)_j` by spanning and reduction.
pub fn quotient_lefschetz(
    pres: &GradedIdealPresentation,
    i: usize,
    j: usize,
    ell: &Poly,
) -> Result<QuotientRank> {
    if j <= i {
        return Err(Error::InvalidArgument(format!(
            "need j > i, got i={i}, j={j}"
        )));
    }
    if j > MAX_TOTAL_DEGREE as usize {
        return Err(Error::InvalidArgument(format!(
            "degree {j} exceeds the supported total-degree cap {MAX_TOTAL_DEGREE}"
        )));
    }
    if ell.homogeneous_degree()? != 1 {
        return Err(Error::InvalidArgument(
            "the multiplier must be linear".into(),
        ));
    }
    let quot = IdealQuotient::new(pres, j);
    let power = ell.checked_pow((j - i) as u32)?;
    let src = quot.std_monomials(i);
    let mut m = QMat::zeros(quot.dim(j), src.len());
    for (col, mon) in src.iter().enumerate() {
        let prod = power.checked_mul(&Poly::term(mon.clone(), Rational::one()))?;
        let coords = quot.reduce(&prod, j);
        for (r, c) in coords.into_iter().enumerate() {
            m.set(r, col, c);
        }
    }
    let rank = linalg::rank(&m);
    let dim_source = quot.dim(i);
    let dim_target = quot.dim(j);
    Ok(QuotientRank {
        from: i,
        to: j,
        dim_source,
        dim_target,
        rank,
        maximal: rank == dim_source.min(dim_target),
    })
}

/// Multiplicity of the hypersurface `V(f)` at a projective point: the order
/// of the lowest jet of the local equation after an exact linear change of
/// coordinates moving the point to `(1:0:...:0)`. Returns 0 off the
/// hypersurface.
pub fn multiplicity_at(f: &Poly, p: &PointQ) -> Result<usize> {
    let nvars = f.nvars();
    if p.nvars() != nvars {
        return Err(Error::NvarsMismatch {
            left: p.nvars(),
            right: nvars,
        });
    }
    if p.is_zero() {
        return Err(Error::InvalidArgument("the point must be nonzero".into()));
    }
    f.homogeneous_degree()?;
    let t = (0..nvars).find(|&i| !p.coords[i].is_zero()).unwrap();
    // Columns of the change of coordinates: the point itself, then the
    // standard vectors skipping slot t; invertible by construction.
    let mut subs = Vec::with_capacity(nvars);
    let mut fresh = 1;
    for i in 0..nvars {
        let mut s = Poly::variable(nvars, 0).scale(&p.coords[i]);
        if i != t {
            s = &s + &Poly::variable(nvars, fresh);
            fresh += 1;
        }
        subs.push(s);
    }
    let g = f.substitute(&subs)?;
    // Dehomogenize in the first slot; for homogeneous g no cancellation can
    // occur, so the multiplicity is the least residual degree.
    Ok(g.iter()
        .map(|(m, _)| (m.degree() - m.exp(0) as u32) as usize)
        .min()
        .expect("nonzero form stays nonzero under an invertible substitution"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(text: &str, nvars: usize) -> Poly {
        parse_poly(text, nvars).unwrap()
    }

    fn fermat() -> Poly {
        p("x0^4+x1^4+x2^4", 3)
    }

    fn e6() -> Poly {
        p("x0^3*x1+x2^4", 3)
    }

    #[test]
    fn jacobian_generators() {
        let g = jac_gens(&fermat(), 2).unwrap();
        let expected: Vec<Poly> = ["12*x0^2", "12*x1^2", "12*x2^2"]
            .iter()
            .map(|s| p(s, 3))
            .collect();
        assert_eq!(g.generators(), &expected[..]);

        let g = jac_gens(&p("x0*x1*x2", 3), 1).unwrap();
        let expected: Vec<Poly> = ["x1*x2", "x0*x2", "x0*x1"]
            .iter()
            .map(|s| p(s, 3))
            .collect();
        assert_eq!(g.generators(), &expected[..]);

        // Order-2 partials of the E6 quartic, by hand: 6*x0*x1, 3*x0^2 and
        // 12*x2^2 are the only nonzero ones.
        let g = jac_gens(&e6(), 2).unwrap();
        let expected: Vec<Poly> = ["6*x0*x1", "3*x0^2", "12*x2^2"]
            .iter()
            .map(|s| p(s, 3))
            .collect();
        assert_eq!(g.generators(), &expected[..]);

        assert!(jac_gens(&fermat(), 0).is_err());
        assert!(jac_gens(&fermat(), 4).is_err());
    }

    #[test]
    fn ideal_dims() {
        let j1 = jac_gens(&fermat(), 1).unwrap();
        assert_eq!(ideal_dim(&j1, 3), 3);
        assert_eq!(ideal_dim(&j1, 2), 0);
        let j2 = jac_gens(&fermat(), 2).unwrap();
        assert_eq!(ideal_dim(&j2, 2), 3);
    }

    #[test]
    fn milnor_profiles_of_quartics() {
        let prof = milnor_profile(&fermat(), 1, None).unwrap();
        assert_eq!(prof.dims[..7], [1, 3, 6, 7, 6, 3, 1]);
        assert_eq!(
            prof.classification,
            Classification::Artinian {
                vanishing_degree: 7
            }
        );

        let prof = milnor_profile(&fermat(), 2, None).unwrap();
        assert_eq!(prof.series(), (vec![1, 3, 3, 1], None));

        let prof = milnor_profile(&e6(), 2, None).unwrap();
        assert_eq!(
            prof.classification,
            Classification::Stable { tail: 2, from: 3 }
        );
        assert_eq!(prof.series(), (vec![1, 3, 3], Some((2, 3))));

        let prof = milnor_profile(&e6(), 1, None).unwrap();
        assert_eq!(
            prof.classification,
            Classification::Stable { tail: 6, from: 5 }
        );
        assert_eq!(prof.series(), (vec![1, 3, 6, 7, 7], Some((6, 5))));

        let f3a2 = p("x0^2*x1^2+x1^2*x2^2+x0^2*x2^2-2*x0*x1*x2*(x0+x1+x2)", 3);
        let prof = milnor_profile(&f3a2, 2, None).unwrap();
        assert_eq!(prof.series(), (vec![1, 3], None));

        let f4a1 = p("(x0^2+x1^2)^2+(x1^2+x2^2)^2", 3);
        let prof = milnor_profile(&f4a1, 2, None).unwrap();
        assert_eq!(prof.series(), (vec![1, 3, 1], None));
    }

    #[test]
    fn artinian_certification() {
        assert!(!is_artinian(&e6(), 2).unwrap());
        assert!(is_artinian(&e6(), 3).unwrap());
        let triangle = p("x0*x1*x2", 3);
        assert!(!is_artinian(&triangle, 1).unwrap());
        assert!(is_artinian(&triangle, 2).unwrap());
        // Certificates agree with the profile classification.
        assert!(milnor_profile(&e6(), 3, None).unwrap().is_artinian());
        assert!(!milnor_profile(&triangle, 1, None).unwrap().is_artinian());
    }

    #[test]
    fn tjurina_tails() {
        assert_eq!(tjurina_sum(&e6(), 1).unwrap(), Some(6));
        assert_eq!(tjurina_sum(&e6(), 2).unwrap(), Some(2));
        assert_eq!(tjurina_sum(&fermat(), 1).unwrap(), None);
        let f4a1 = p("(x0^2+x1^2)^2+(x1^2+x2^2)^2", 3);
        assert_eq!(tjurina_sum(&f4a1, 1).unwrap(), Some(4));
        // Triangle: three nodes, each contributing 1.
        assert_eq!(tjurina_sum(&p("x0*x1*x2", 3), 1).unwrap(), Some(3));
    }

    #[test]
    fn line_arrangement_tails() {
        // (x0^3+x1^3)*x2: an ordinary triple point (tau = 4) plus three
        // nodes (tau = 1 each) at first order; at second order only the
        // triple point survives, with tau^2 = 1.
        let f = p("(x0^3+x1^3)*x2", 3);
        assert_eq!(tjurina_sum(&f, 1).unwrap(), Some(7));
        assert_eq!(tjurina_sum(&f, 2).unwrap(), Some(1));
        assert_eq!(
            multiplicity_at(&f, &PointQ::from_ints(&[0, 0, 1])).unwrap(),
            3
        );
        assert!(!is_artinian(&f, 2).unwrap());
        assert!(is_artinian(&f, 3).unwrap());
    }

    #[test]
    fn hessian_membership_on_quartics() {
        let out = hessian_membership(&fermat()).unwrap();
        assert!(!out.in_ideal);
        assert!(!out.zero_hessian);

        let out = hessian_membership(&e6()).unwrap();
        assert!(out.in_ideal);
        let cert = out.certificate.unwrap();
        // Re-verify the certificate against an independently built span.
        let pres = jac_gens(&e6(), 1).unwrap();
        let span = QMat::from_rows(span_rows(&pres, 6)).transpose();
        let hess = hessian_det(&e6());
        let mons = monomials_of_degree(3, 6);
        let target: Vec<Rational> = mons.iter().map(|m| hess.coeff(m)).collect();
        assert_eq!(span.mul_vec(&cert), target);

        let out = hessian_membership(&p("x0^2*x1^2+x2^4", 3)).unwrap();
        assert!(out.in_ideal);
    }

    #[test]
    fn quotient_lefschetz_on_smooth_fixtures() {
        // Smooth quartic curve: squaring a general linear form is an
        // isomorphism between the two middle pieces of dimension 6.
        let j = jac_gens(&fermat(), 1).unwrap();
        let ell = p("x0+x1+x2", 3);
        let r = quotient_lefschetz(&j, 2, 4, &ell).unwrap();
        assert_eq!((r.dim_source, r.dim_target, r.rank), (6, 6, 6));
        assert!(r.maximal);

        // Degree-0 source: rank is 1 exactly when the power stays outside
        // the ideal piece.
        let r = quotient_lefschetz(&j, 0, 2, &ell).unwrap();
        assert_eq!(r.rank, 1);

        // Smooth cubic surface: all multiplication maps have maximal rank.
        let cubic = p("x0^3+x1^3+x2^3+x3^3", 4);
        let j = jac_gens(&cubic, 1).unwrap();
        let ell = p("x0+x1+x2+x3", 4);
        for i in 0..4 {
            for jj in i + 1..=4 {
                let r = quotient_lefschetz(&j, i, jj, &ell).unwrap();
                assert!(r.maximal, "map {i} -> {jj} must be maximal");
            }
        }
    }

    #[test]
    fn multiplicities() {
        let pt = PointQ::from_ints(&[0, 1, 0]);
        assert_eq!(multiplicity_at(&e6(), &pt).unwrap(), 3);
        // A smooth point on the curve.
        let pt = PointQ::from_ints(&[1, -1, 1]);
        assert_eq!(multiplicity_at(&e6(), &pt).unwrap(), 1);
        // Off the curve.
        let pt = PointQ::from_ints(&[1, 1, 1]);
        assert_eq!(multiplicity_at(&e6(), &pt).unwrap(), 0);
        // Nodes of the triangle.
        for coords in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            let pt = PointQ::from_ints(&coords);
            assert_eq!(multiplicity_at(&p("x0*x1*x2", 3), &pt).unwrap(), 2);
        }
    }

    #[test]
    fn generic_middle_dimension_of_higher_milnor_algebras() {
        // For generic f and k <= d/2 the degree-(d-k) piece of the order-k
        // Milnor algebra has dimension C(n+d-k,n) - C(n+k,n).
        use crate::binomial;
        let mut state: u64 = 20_240_104;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) as i64
        };
        for (nv, d) in [(3usize, 4usize), (2, 4), (3, 3)] {
            for _ in 0..5 {
                let mut f = Poly::zero(nv);
                for m in monomials_of_degree(nv, d as u32) {
                    f.add_term(
                        m,
                        Rational::new((next() % 2_000_001 - 1_000_000).into(), 1.into()),
                    );
                }
                if f.is_zero() {
                    continue;
                }
                let n = nv - 1;
                for k in 1..=d / 2 {
                    let pres = jac_gens(&f, k).unwrap();
                    let got = binomial(n + d - k, n) - ideal_dim(&pres, d - k);
                    let expected = binomial(n + d - k, n) - binomial(n + k, n);
                    assert_eq!(got, expected, "(nv={nv}, d={d}, k={k})");
                }
            }
        }
    }

    #[test]
    fn euler_inclusion_of_consecutive_jacobian_ideals() {
        for text in ["x0^4+x1^4+x2^4", "x0^3*x1+x2^4", "x0^2*x1^2+x2^4"] {
            let f = p(text, 3);
            let d = f.homogeneous_degree().unwrap() as usize;
            for k in 1..d - 1 {
                let a = jac_gens(&f, k).unwrap();
                let b = jac_gens(&f, k + 1).unwrap();
                for m in 0..=d + 2 {
                    assert!(
                        ideal_dim(&a, m) <= ideal_dim(&b, m),
                        "{text}: J^{k} vs J^{} in degree {m}",
                        k + 1
                    );
                }
            }
        }
    }
}
