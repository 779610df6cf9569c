//! Exact tools for Pólya frequency sequences and the log-concavity operator
//! `L(a)_k = a_k^2 - a_{k-1} a_{k+1}`.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact_poly`]: rational polynomials, Sturm chains, root location.
//! * [`binomial_basis`]: the transform `E` sending `C(x, k)` to `x^k`, the
//!   diamond product and the reflection `x -> -x - 1`.
//! * [`sequences`]: sequence sources, `L` on terms and on interpolants,
//!   k-fold checks and Toeplitz minor searches.
//! * [`certify`]: PF tests for polynomial-interpolated sequences and
//!   infinite log-concavity certificates.
//! * [`reproduce`]: worked examples with embedded expected values.
//! * [`symm`]: elementary symmetric function identities and nonlinear
//!   zero-preserving operators.
//!
//! All arithmetic is exact.

pub mod binomial_basis;
pub mod certify;
mod error;
pub mod exact_poly;
pub mod reproduce;
pub mod sequences;
pub mod symm;

pub use error::{Error, Result};
pub use exact_poly::{Polynomial, Rational};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-polynomials.md")]
    mod exact_polynomials {}
    #[doc = include_str!("../../../book/src/binomial-basis.md")]
    mod binomial_basis {}
    #[doc = include_str!("../../../book/src/log-concavity.md")]
    mod log_concavity {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/symmetric-functions.md")]
    mod symmetric_functions {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
}
