//! The nonlinear operators
//!
//! ```text
//! sum_k ( sum_j alpha_j g^(k+s+j)/(k+s+j)! * g^(k-j)/(k-j)! ) P(x)^k
//! ```
//!
//! for `P = c (x - a)(x - b)` (`U`) and arbitrary `P` (`E`), with `s` the
//! derivative shift `0` or `1`, and the polynomials `Q_n` and `Y_n` that
//! decide whether they preserve real zeros.

use num_traits::Zero;

use super::AlphaSeq;
use crate::exact_poly::{binomial, factorial, int, Polynomial, Rational};
use crate::{Error, Result};

/// `Q_n(x) = sum_k (sum_{j<=k} alpha_j / ((k+j)! (k-j)!)) x^k / (n-2k)!`.
pub fn q_poly(n: usize, alpha: &AlphaSeq) -> Polynomial {
    let coeffs = (0..=n / 2)
        .map(|k| {
            let inner = (0..=k)
                .map(|j| alpha.get(j) / (factorial(k + j) * factorial(k - j)))
                .fold(Rational::zero(), |a, b| a + b);
            inner / factorial(n - 2 * k)
        })
        .collect();
    Polynomial::new(coeffs)
}

/// `Y_n(x) = sum_k (sum_{j<=k} alpha_j C(n, k+j) C(n, k-j)) x^k`.
pub fn y_poly(n: usize, alpha: &AlphaSeq) -> Polynomial {
    let n = n as i64;
    let coeffs = (0..=n)
        .map(|k| {
            (0..=k)
                .map(|j| {
                    alpha.get(j as usize)
                        * Rational::from_integer(binomial(n, k + j) * binomial(n, k - j))
                })
                .fold(Rational::zero(), |a, b| a + b)
        })
        .collect();
    Polynomial::new(coeffs)
}

/// Coefficient polynomials `sum_j alpha_j T_{k+s+j} T_{k-j}`, `T_m = g^(m)/m!`,
/// for every `k` that can be nonzero.
fn paired_derivatives(g: &Polynomial, alpha: &AlphaSeq, shift: usize) -> Vec<Polynomial> {
    let Some(deg) = g.degree() else {
        return Vec::new();
    };
    let t: Vec<Polynomial> = (0..=deg).map(|m| g.taylor_coefficient(m)).collect();
    let get = |m: usize| t.get(m);
    (0..=deg)
        .map(|k| {
            let mut acc = Polynomial::zero();
            for j in 0..=k {
                let a = alpha.get(j);
                if a.is_zero() {
                    continue;
                }
                if let Some(hi) = get(k + shift + j) {
                    acc = acc + (hi * &t[k - j]).scale(&a);
                }
            }
            acc
        })
        .collect()
}

fn check_shift(shift: usize) -> Result<()> {
    if shift > 1 {
        return Err(Error::Precondition(format!(
            "shift must be 0 or 1, got {shift}"
        )));
    }
    Ok(())
}

/// `E(g) = sum_k inner_k(g) P(x)^k`.
pub fn e_op(g: &Polynomial, alpha: &AlphaSeq, p: &Polynomial, shift: usize) -> Result<Polynomial> {
    check_shift(shift)?;
    let mut out = Polynomial::zero();
    let mut p_pow = Polynomial::one();
    for inner in paired_derivatives(g, alpha, shift) {
        if !inner.is_zero() {
            out = out + &inner * &p_pow;
        }
        p_pow = &p_pow * p;
    }
    Ok(out)
}

/// `U(g) = sum_k inner_k(g) c^k (x - a)^k (x - b)^k`; requires `a < b`.
pub fn u_op(
    g: &Polynomial,
    alpha: &AlphaSeq,
    a: &Rational,
    b: &Rational,
    c: &Rational,
    shift: usize,
) -> Result<Polynomial> {
    if a >= b {
        return Err(Error::Precondition(format!(
            "need a < b, got a = {a}, b = {b}"
        )));
    }
    let p =
        (&Polynomial::linear_factor(a.clone()) * &Polynomial::linear_factor(b.clone())).scale(c);
    e_op(g, alpha, &p, shift)
}

/// `T(g) = sum_k (T_k^2 - T_{k-1} T_{k+1}) x^k (1 + x)^k`, which keeps all
/// zeros inside `[-1, 0]`.
pub fn t_operator(g: &Polynomial) -> Polynomial {
    u_op(g, &AlphaSeq::catalan(), &int(-1), &int(0), &int(1), 0).expect("-1 < 0")
}
