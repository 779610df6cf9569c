//! Elementary symmetric functions, the identities relating
//! `sum mu_{j-i} e_i e_j` to `e_n sum gamma_k e_{n-k}(x + 1/x)`, and the
//! nonlinear operators built from them.

pub mod identities;
mod laurent;
pub mod operators;
pub mod orthogonal;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact_poly::{binomial, serde_rational, Rational};

pub use identities::{
    verify_beauty, verify_interleaving, verify_magic, Method, Outcome, Transcript, Witness,
    DEFAULT_SEED,
};
pub use laurent::LaurentPoly;
pub use operators::{e_op, q_poly, t_operator, u_op, y_poly};
pub use orthogonal::{hermite, jacobi11, verify_hermite_cd_identity, verify_jacobi_identity};

/// A finitely supported real sequence `alpha_0, alpha_1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaSeq(#[serde(with = "serde_rational::vec")] Vec<Rational>);

impl AlphaSeq {
    pub fn new(mut values: Vec<Rational>) -> Self {
        while values.last().is_some_and(Zero::is_zero) {
            values.pop();
        }
        AlphaSeq(values)
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&x| crate::exact_poly::int(x)).collect())
    }

    /// `{1, -1}`, whose `Q_n` are the Catalan polynomials.
    pub fn catalan() -> Self {
        Self::from_ints(&[1, -1])
    }

    /// `alpha_j`, zero past the support.
    pub fn get(&self, j: usize) -> Rational {
        self.0.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    /// `{alpha_0, 0, alpha_1, 0, ...}`
    EvenInterleaved,
    /// `{0, alpha_0, 0, alpha_1, ...}`
    OddInterleaved,
    Raw,
}

/// Coefficients `mu_0, mu_1, ...` of `sum_{i <= j} mu_{j-i} e_i e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuSeq {
    #[serde(with = "serde_rational::vec")]
    values: Vec<Rational>,
    parity: Parity,
}

impl MuSeq {
    pub fn raw(mut values: Vec<Rational>) -> Self {
        while values.last().is_some_and(Zero::is_zero) {
            values.pop();
        }
        MuSeq {
            values,
            parity: Parity::Raw,
        }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::raw(v.iter().map(|&x| crate::exact_poly::int(x)).collect())
    }

    pub fn even_interleaved(alpha: &AlphaSeq) -> Self {
        Self::interleave(alpha, 0, Parity::EvenInterleaved)
    }

    pub fn odd_interleaved(alpha: &AlphaSeq) -> Self {
        Self::interleave(alpha, 1, Parity::OddInterleaved)
    }

    fn interleave(alpha: &AlphaSeq, offset: usize, parity: Parity) -> Self {
        let mut values = vec![Rational::zero(); offset + 2 * alpha.len()];
        for (j, a) in alpha.values().iter().enumerate() {
            values[offset + 2 * j] = a.clone();
        }
        let mut mu = Self::raw(values);
        mu.parity = parity;
        mu
    }

    pub fn get(&self, j: usize) -> Rational {
        self.values.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }
}

/// `gamma_0 .. gamma_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaSeq(#[serde(with = "serde_rational::vec")] pub Vec<Rational>);

/// `gamma_k = sum_{j <= k/2} C(k, j) mu_{k - 2j}` for `k = 0..=n`.
pub fn gamma_from_mu(mu: &MuSeq, n: usize) -> GammaSeq {
    GammaSeq(
        (0..=n)
            .map(|k| {
                (0..=k / 2)
                    .map(|j| {
                        Rational::from_integer(binomial(k as i64, j as i64)) * mu.get(k - 2 * j)
                    })
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect(),
    )
}

/// `e_0 .. e_n` of `xs` by the product recurrence
/// `prod (1 + x_i t) = sum e_k t^k`.
pub fn elem_sym_all(xs: &[Rational]) -> Vec<Rational> {
    elementary_symmetric(xs, &Rational::zero(), &Rational::from_integer(1.into()))
}

/// `e_k(xs)`; `e_0 = 1` and `e_k = 0` for `k > len`.
pub fn elem_sym(k: usize, xs: &[Rational]) -> Rational {
    elem_sym_all(xs)
        .get(k)
        .cloned()
        .unwrap_or_else(Rational::zero)
}

/// Minimal commutative-ring surface shared by exact scalars and Laurent
/// polynomials, so identities are expanded and evaluated by the same code.
pub(crate) trait Ring: Clone {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl Ring for Rational {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

impl Ring for LaurentPoly {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        LaurentPoly::scale(self, c)
    }
}

pub(crate) fn elementary_symmetric<T: Ring>(xs: &[T], zero: &T, one: &T) -> Vec<T> {
    let mut e = vec![zero.clone(); xs.len() + 1];
    e[0] = one.clone();
    for (i, x) in xs.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            e[k] = e[k].add(&e[k - 1].mul(x));
        }
    }
    e
}

/// Catalan number `C(2k, k) / (k + 1)`.
pub fn catalan(k: usize) -> Rational {
    Rational::new(binomial(2 * k as i64, k as i64), ((k + 1) as i64).into())
}
