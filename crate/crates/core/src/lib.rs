//! Exact combinatorics of prepermutohedral varieties and the Hessenberg
//! varieties fibred over them.
//!
//! The crate computes the same invariants along independent routes so they
//! can be checked against each other:
//!
//! * [`chains`] and [`fan`]: cones of the fan indexed by chains of subsets,
//!   their intersections and shelling order, and a star-subdivision oracle.
//! * [`betti`]: Euler characteristics and Betti numbers from descents, from
//!   the blowup recursion and from Stembridge codes.
//! * [`codes`]: Stembridge codes, their decoding into blowup components and
//!   the symmetric group action on them.
//! * [`symfunc`] and [`charseries`]: characteristic series of the dot action,
//!   chromatic quasisymmetric functions and their identities.
//! * [`flags`]: exact Krylov-flag rank checks.
//!
//! Polynomial, series and matrix types are generic over the scalar; the
//! aliases below fix the concrete types used throughout.

pub mod betti;
pub mod chains;
pub mod charseries;
pub mod codes;
pub mod fan;
pub mod flags;
pub mod linalg;
pub mod poly;
pub mod rng;
pub mod scalar;
pub mod symfunc;
pub mod verify;

mod error;

pub use error::{Error, Result};

/// Arbitrary-precision rational used by default for exact linear algebra.
pub type Rational = num_rational::BigRational;
/// Dense matrix over [`Rational`].
pub type RationalMatrix = linalg::Matrix<Rational>;
/// Polynomial in `t` with machine-integer coefficients.
pub type TPoly = poly::Poly<i64>;
/// Symmetric-function series with [`TPoly`] coefficients.
pub type SymSeries = symfunc::SymSeries<i64>;
/// Monomial expansion with [`TPoly`] coefficients.
pub type MonomialExpansion = symfunc::MonomialExpansion<i64>;

/// `n! / (n - r)!`, the number of ordered selections of `r` items from `n`.
pub fn falling_factorial(n: usize, r: usize) -> u64 {
    assert!(r <= n);
    ((n - r + 1)..=n).map(|x| x as u64).product()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n).map(|x| x as u64).product()
}

pub fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

pub(crate) fn check_k(n: usize, k: usize, lo: usize, hi_offset: usize) -> Result<()> {
    if n < hi_offset || k < lo || k > n - hi_offset {
        return Err(Error::KOutOfRange {
            n,
            k,
            lo,
            hi: n as i64 - hi_offset as i64,
        });
    }
    Ok(())
}
