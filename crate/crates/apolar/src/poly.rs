//! Sparse multivariate polynomials over the rationals.
//!
//! One arithmetic kernel serves two rings: ordinary polynomials in
//! `x0..x{n}` and differential operators in the dual variables `X0..X{n}`,
//! which act on the former through [`apply_op`]. Terms are kept in graded
//! lexicographic order with no zero coefficients stored, so structural
//! equality is semantic equality and printing is canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational; `num` keeps it in lowest terms with a
/// positive denominator, and zero is stored as 0/1.
pub type Rational = BigRational;

/// Hard cap on the total degree of any stored monomial.
pub const MAX_TOTAL_DEGREE: u32 = 64;

/// Exponent vector of fixed length `nvars`.
///
/// The ordering is graded lexicographic: compare total degrees first, then
/// exponent vectors lexicographically, so `x0 > x1 > ... > x{n}` within a
/// degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        let m = Monomial { exps };
        assert!(
            m.degree() <= MAX_TOTAL_DEGREE,
            "monomial degree {} exceeds cap {}",
            m.degree(),
            MAX_TOTAL_DEGREE
        );
        m
    }

    /// The constant monomial 1.
    pub fn unit(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// The monomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        assert_eq!(self.nvars(), other.nvars());
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        let degree: u32 = exps.iter().map(|&e| e as u32).sum();
        if degree > MAX_TOTAL_DEGREE {
            return Err(Error::DegreeCap {
                degree,
                cap: MAX_TOTAL_DEGREE,
            });
        }
        Ok(Monomial { exps })
    }

    /// Componentwise divisibility.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Quotient monomial; caller guarantees divisibility.
    pub fn quotient(&self, divisor: &Monomial) -> Monomial {
        debug_assert!(divisor.divides(self));
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&divisor.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given total degree, in descending graded-lex order
/// (so `x0^d` first). The list has length `C(nvars-1+deg, deg)`.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    assert!(nvars >= 1);
    let mut out = Vec::new();
    let mut current = vec![0u16; nvars];
    fn rec(out: &mut Vec<Monomial>, current: &mut Vec<u16>, pos: usize, left: u32) {
        if pos + 1 == current.len() {
            current[pos] = left as u16;
            out.push(Monomial {
                exps: current.clone(),
            });
            return;
        }
        for e in (0..=left).rev() {
            current[pos] = e as u16;
            rec(out, current, pos + 1, left - e);
        }
    }
    rec(&mut out, &mut current, 0, deg);
    out
}

/// A point with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointQ {
    pub coords: Vec<Rational>,
}

impl PointQ {
    pub fn new(coords: Vec<Rational>) -> Self {
        PointQ { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        PointQ {
            coords: coords
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// Sparse polynomial: a sorted map from monomials to nonzero rational
/// coefficients. The zero polynomial has an empty term list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, value: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        if !value.is_zero() {
            p.terms.insert(Monomial::unit(nvars), value);
        }
        p
    }

    pub fn from_int(nvars: usize, value: i64) -> Self {
        Poly::constant(nvars, Rational::from_integer(BigInt::from(value)))
    }

    pub fn one(nvars: usize) -> Self {
        Poly::from_int(nvars, 1)
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        Poly::term(Monomial::var(nvars, i), Rational::one())
    }

    /// Single-term polynomial `coeff * mon`.
    pub fn term(mon: Monomial, coeff: Rational) -> Self {
        let mut p = Poly::zero(mon.nvars());
        if !coeff.is_zero() {
            p.terms.insert(mon, coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lex order (canonical printing order).
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, mon: &Monomial) -> Rational {
        self.terms.get(mon).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant coefficient; the full value for degree-0 polynomials.
    pub fn constant_value(&self) -> Rational {
        self.coeff(&Monomial::unit(self.nvars))
    }

    /// Greatest term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, mon: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mon) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        if factor.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.checked_mul(m2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, e: u32) -> Result<Poly> {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn diff(&self, i: usize) -> Poly {
        assert!(i < self.nvars, "variable index {i} out of range");
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] = e - 1;
            out.add_term(
                Monomial { exps },
                c * Rational::from_integer(BigInt::from(e)),
            );
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, pt: &PointQ) -> Rational {
        assert_eq!(
            self.nvars,
            pt.nvars(),
            "evaluation point has wrong dimension"
        );
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term *= &pt.coords[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitute `subs[i]` for variable `i`; all substituents must share a
    /// common variable count.
    pub fn substitute(&self, subs: &[Poly]) -> Result<Poly> {
        assert_eq!(subs.len(), self.nvars, "substitution list has wrong length");
        let out_nvars = subs.first().map(|p| p.nvars()).unwrap_or(0);
        // Cache powers of each substituent.
        let mut powers: Vec<Vec<Poly>> = subs
            .iter()
            .map(|p| vec![Poly::one(out_nvars), p.clone()])
            .collect();
        let mut out = Poly::zero(out_nvars);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(out_nvars, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().checked_mul(&subs[i])?;
                    powers[i].push(next);
                }
                term = term.checked_mul(&powers[i][e as usize])?;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Largest total degree among the terms, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Common degree of all terms; errors on zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        Ok(self.leading().unwrap().0.degree())
    }

    /// Exact division in the polynomial ring; panics if the quotient does not
    /// exist. Internal kernel for fraction-free elimination.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        let (dm, dc) = {
            let (m, c) = divisor.leading().unwrap();
            (m.clone(), c.clone())
        };
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            assert!(
                dm.divides(&rm),
                "inexact polynomial division (leading term not divisible)"
            );
            let qm = rm.quotient(&dm);
            let qc = rc / &dc;
            let qterm = Poly::term(qm, qc);
            rem = &rem - &qterm.checked_mul(divisor).expect("degree cap in div_exact");
            quot = &quot + &qterm;
        }
        quot
    }

    /// Canonical text form with `X`-style variable names for operators.
    pub fn to_op_string(&self) -> String {
        self.format_with("X")
    }

    fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.iter_desc().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_unit() {
                factors.push(format_rational(&mag));
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("{var}{i}")),
                    _ => factors.push(format!("{var}{i}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("x"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs)
            .expect("polynomial product exceeds the total-degree cap")
    }
}

/// Apply a differential operator `alpha` (a polynomial read in the dual
/// variables) to `f`. Bilinear; nonzero inputs must be homogeneous.
pub fn apply_op(alpha: &Poly, f: &Poly) -> Result<Poly> {
    if alpha.nvars() != f.nvars() {
        return Err(Error::NvarsMismatch {
            left: alpha.nvars(),
            right: f.nvars(),
        });
    }
    if alpha.is_zero() || f.is_zero() {
        return Ok(Poly::zero(f.nvars()));
    }
    if !alpha.is_homogeneous() || !f.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let mut out = Poly::zero(f.nvars());
    for (ma, ca) in alpha.iter() {
        for (mf, cf) in f.iter() {
            if !ma.divides(mf) {
                continue;
            }
            let factor = falling_product(mf, ma);
            out.add_term(mf.quotient(ma), ca * cf * Rational::from_integer(factor));
        }
    }
    Ok(out)
}

/// Product over variables of the falling factorials `e_f * (e_f - 1) * ...`
/// of length `e_a`: the scalar produced by `d^{e_a}/dx^{e_a}` on `x^{e_f}`.
fn falling_product(mf: &Monomial, ma: &Monomial) -> BigInt {
    let mut acc = BigInt::one();
    for (ef, ea) in mf.exps().iter().zip(ma.exps()) {
        for t in 0..*ea {
            acc *= BigInt::from(ef - t);
        }
    }
    acc
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    /// Reference route for the operator action: one derivative at a time.
    pub(crate) fn apply_op_naive(alpha: &Poly, f: &Poly) -> Poly {
        let mut out = Poly::zero(f.nvars());
        for (ma, ca) in alpha.iter() {
            let mut g = f.clone();
            for (i, &e) in ma.exps().iter().enumerate() {
                for _ in 0..e {
                    g = g.diff(i);
                }
            }
            out = &out + &g.scale(ca);
        }
        out
    }

    fn p(text: &str, nvars: usize) -> Poly {
        parse_poly(text, nvars).unwrap()
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let m = monomials_of_degree(3, 1);
        let names: Vec<String> = m
            .iter()
            .map(|m| Poly::term(m.clone(), Rational::one()).to_string())
            .collect();
        assert_eq!(names, ["x0", "x1", "x2"]);
        let m2 = monomials_of_degree(3, 2);
        assert_eq!(m2.len(), 6);
        let names2: Vec<String> = m2
            .iter()
            .map(|m| Poly::term(m.clone(), Rational::one()).to_string())
            .collect();
        assert_eq!(names2, ["x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"]);
        assert_eq!(monomials_of_degree(5, 2).len(), 15);
    }

    #[test]
    fn diff_basics() {
        let f = p("x0^4+x1^4", 2);
        assert_eq!(f.diff(0), p("4*x0^3", 2));
        let g = p("x0*x1*x2", 3);
        assert_eq!(g.diff(1), p("x0*x2", 3));
        assert_eq!(Poly::from_int(3, 7).diff(2), Poly::zero(3));
    }

    #[test]
    fn apply_op_matches_repeated_diff() {
        let alpha = p("x0*x1", 2); // X0*X1
        let f = p("x0^2*x1^2", 2);
        let got = apply_op(&alpha, &f).unwrap();
        assert_eq!(got, p("4*x0*x1", 2));
        assert_eq!(got, apply_op_naive(&alpha, &f));

        let alpha = p("x0^2", 2);
        let f = p("x1^3", 2);
        assert_eq!(apply_op(&alpha, &f).unwrap(), Poly::zero(2));

        // Fourth derivative of the Fermat quartic, both routes.
        let alpha = p("x0^4", 3);
        let f = p("x0^4+x1^4+x2^4", 3);
        let via_kernel = apply_op(&alpha, &f).unwrap();
        let via_diff = apply_op_naive(&alpha, &f);
        assert_eq!(via_kernel, via_diff);
        assert_eq!(via_kernel, Poly::from_int(3, 24));
    }

    #[test]
    fn apply_op_rejects_inhomogeneous() {
        let alpha = p("x0+x1^2", 2);
        let f = p("x0^3", 2);
        assert!(apply_op(&alpha, &f).is_err());
    }

    #[test]
    fn apply_op_is_multiplicative() {
        let a = p("x0*x2", 3);
        let b = p("x1^2+x0*x2", 3);
        let f = p("x0^2*x1^2*x2^2+x0^6", 3);
        let ab = a.checked_mul(&b).unwrap();
        let lhs = apply_op(&ab, &f).unwrap();
        let rhs = apply_op(&a, &apply_op(&b, &f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_identity() {
        let f = p("x0^3*x1+x2^4", 3);
        let d = f.homogeneous_degree().unwrap();
        let mut acc = Poly::zero(3);
        for i in 0..3 {
            acc = &acc + &(&Poly::variable(3, i) * &f.diff(i));
        }
        assert_eq!(acc, f.scale(&Rational::from_integer(BigInt::from(d))));
    }

    #[test]
    fn eval_examples() {
        let f = p("x0^2+x1", 2);
        assert_eq!(f.eval(&PointQ::from_ints(&[2, 3])), rat(7, 1));
        assert_eq!(Poly::zero(2).eval(&PointQ::from_ints(&[5, 5])), rat(0, 1));
        let fermat = p("x0^4+x1^4+x2^4", 3);
        assert_eq!(fermat.eval(&PointQ::from_ints(&[1, 1, 1])), rat(3, 1));
    }

    #[test]
    fn homogeneous_degree_examples() {
        assert_eq!(p("x0^4+x1^4+x2^4", 3).homogeneous_degree().unwrap(), 4);
        assert_eq!(p("x0", 1).homogeneous_degree().unwrap(), 1);
        assert!(p("x0^2+x1", 2).homogeneous_degree().is_err());
        assert!(Poly::zero(2).homogeneous_degree().is_err());
    }

    #[test]
    fn division_is_exact_inverse_of_multiplication() {
        let a = p("x0^2*x1-3*x1*x2^2+x2^3", 3);
        let b = p("x0*x2+7*x1^2", 3);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), a);
        assert_eq!(prod.div_exact(&a), b);
    }

    #[test]
    fn degree_cap_is_enforced() {
        let f = p("x0^60", 1);
        assert!(f.checked_mul(&p("x0^10", 1)).is_err());
    }

    #[test]
    fn substitution_composes_linearly() {
        // x0 -> y0 + y1, x1 -> y1 in x0^2 - x1^2.
        let f = p("x0^2-x1^2", 2);
        let subs = vec![p("x0+x1", 2), p("x1", 2)];
        let g = f.substitute(&subs).unwrap();
        assert_eq!(g, p("x0^2+2*x0*x1", 2));
    }
}
