//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, parse_rational, Rational};
use crate::error::{Error, Result};

/// A polynomial `c[0] + c[1] x + ... + c[d] x^d`.
///
/// The coefficient vector never carries a trailing zero; the zero polynomial
/// is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `c x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x - root`.
    pub fn linear_factor(root: Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }

    /// `lead * prod (x - r)` over the given roots.
    pub fn from_roots(lead: Rational, roots: &[Rational]) -> Self {
        roots.iter().fold(Self::constant(lead), |acc, r| {
            &acc * &Self::linear_factor(r.clone())
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&int(x))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// `p^(k) / k!`, the k-th Taylor coefficient polynomial.
    ///
    /// Computed directly from binomial weights so no factorial division is
    /// needed.
    pub fn taylor_coefficient(&self, k: usize) -> Self {
        if k >= self.coeffs.len() {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - k);
        let mut binom = num_bigint::BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate().skip(k) {
            if i > k {
                // C(i, k) = C(i-1, k) * i / (i - k)
                binom = binom * num_bigint::BigInt::from(i) / num_bigint::BigInt::from(i - k);
            }
            out.push(c * Rational::from_integer(binom.clone()));
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(q(x))`.
    pub fn compose(&self, q: &Polynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * q) + &Self::constant(c.clone())
        })
    }

    /// `p(x + t)`, by repeated synthetic division (Taylor shift).
    pub fn shift(&self, t: &Rational) -> Self {
        if t.is_zero() || self.coeffs.len() < 2 {
            return self.clone();
        }
        let mut a = self.coeffs.clone();
        let n = a.len() - 1;
        for i in 0..n {
            for j in (i..n).rev() {
                let carry = &a[j + 1] * t;
                a[j] += carry;
            }
        }
        Self::new(a)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Scales to leading coefficient one. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / &lc;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * d;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Precondition("division is not exact".into()))
        }
    }

    pub fn is_positive_leading(&self) -> bool {
        self.leading_coeff().is_some_and(Signed::is_positive)
    }
}

impl fmt::Display for Polynomial {
    /// Ascending comma-separated coefficients, `"0"` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        f.write_str(&parts.join(", "))
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        s.split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(Polynomial::new)
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        super::rational::serde_rational::vec::serialize(&self.coeffs, s)
    }
}

impl<'de> serde::Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        super::rational::serde_rational::vec::deserialize(d).map(Polynomial::new)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rational::ratio;

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Polynomial::from_ints(&[0, 0]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn text_format() {
        let p: Polynomial = "1, 0, -3/2, 1".parse().unwrap();
        assert_eq!(p.coeffs(), &[int(1), int(0), ratio(-3, 2), int(1)]);
        assert_eq!(p.to_string(), "1, 0, -3/2, 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert!("0".parse::<Polynomial>().unwrap().is_zero());
        assert!("1,,2".parse::<Polynomial>().is_err());
        assert!("".parse::<Polynomial>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Polynomial::from_ints(&[1, 1]);
        let b = Polynomial::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, Polynomial::from_ints(&[-1, 0, 1]));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(a.pow(3), Polynomial::from_ints(&[1, 3, 3, 1]));
        let (q, r) = Polynomial::from_ints(&[2, 3, 1])
            .div_rem(&Polynomial::from_ints(&[1, 1]))
            .unwrap();
        assert_eq!(q, Polynomial::from_ints(&[2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn taylor_coefficients_match_derivatives() {
        let p = Polynomial::from_ints(&[3, -1, 4, 1, -5]);
        let mut d = p.clone();
        for k in 0..6 {
            assert_eq!(
                p.taylor_coefficient(k),
                d.scale(&crate::exact_poly::factorial(k).recip())
            );
            d = d.derivative();
        }
    }

    #[test]
    fn compose_and_shift_agree() {
        let p = Polynomial::from_ints(&[1, -2, 0, 5]);
        let t = ratio(3, 7);
        let xt = Polynomial::new(vec![t.clone(), int(1)]);
        assert_eq!(p.shift(&t), p.compose(&xt));
    }
}
