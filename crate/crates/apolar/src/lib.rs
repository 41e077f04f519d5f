//! Exact-arithmetic toolkit for graded algebras attached to projective
//! hypersurfaces: apolarity (Macaulay inverse systems), higher-order Jacobian
//! ideals and Milnor algebras, mixed Hessians with Lefschetz-property
//! diagnostics, and graded Betti tables via Koszul homology.
//!
//! All linear algebra is over arbitrary-precision rationals; nothing is ever
//! rounded. Randomness only enters through explicitly seeded generic-rank
//! sampling, and every probabilistic verdict is labeled as such.

pub mod betti;
pub mod duality;
pub mod fixtures;
pub mod hessian;
pub mod linalg;
pub mod milnor;
pub mod parse;
pub mod poly;
pub mod report;

pub use duality::{ApolarAlgebra, DualBasis, GradedAlgebraView};
pub use linalg::QMat;
pub use poly::{apply_op, monomials_of_degree, Monomial, PointQ, Poly, Rational};

/// Unified error type for the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] parse::ParseError),
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("total degree {degree} exceeds the supported cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the hypersurface is a cone: a nonzero linear operator annihilates it")]
    Cone,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Binomial coefficient as a machine integer; panics on overflow.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial coefficient overflows usize")
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn core_values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<crate::Poly>();
        assert_send_sync::<crate::Monomial>();
        assert_send_sync::<crate::PointQ>();
        assert_send_sync::<crate::QMat>();
        assert_send_sync::<crate::ApolarAlgebra>();
        assert_send_sync::<crate::betti::BettiTable>();
    }
}
