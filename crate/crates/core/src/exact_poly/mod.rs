//! Exact univariate polynomial arithmetic over the rationals, with
//! multiplicity-aware real root counting.
//!
//! Every verdict produced here comes from exact integer sign computations;
//! no floating point is involved anywhere on a certification path.
//!
//! ```
//! use polya::exact_poly::{count_roots_in_interval, Interval, Polynomial, int};
//!
//! // (x + 1)^2 has a double root on the closed boundary of [-1, 0].
//! let p: Polynomial = "1, 2, 1".parse()?;
//! let report = count_roots_in_interval(&p, &Interval::closed(int(-1), int(0))?)?;
//! assert_eq!(report.roots_in_region_with_multiplicity, 2);
//! assert!(report.all_roots_in_region);
//! # Ok::<(), polya::Error>(())
//! ```

mod intpoly;
mod polynomial;
mod rational;
mod roots;

pub use polynomial::Polynomial;
pub use rational::{
    approx, binomial, factorial, format_rational, int, parse_rational, ratio, serde_rational,
    Rational,
};
pub use roots::{
    count_roots_in_interval, is_real_rooted, square_free_part, Bound, Interval, RootCounter,
    RootLocationReport,
};

/// `p(x + t)`.
pub fn shift_argument(p: &Polynomial, t: &Rational) -> Polynomial {
    p.shift(t)
}
