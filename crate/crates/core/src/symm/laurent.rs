//! Sparse multivariate Laurent polynomials over the rationals, enough to
//! expand symmetric-function identities symbolically.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::exact_poly::Rational;

/// A finite sum of `coeff * x_0^{e_0} ... x_{n-1}^{e_{n-1}}`, integer exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// `x_i^power`.
    pub fn var_pow(nvars: usize, i: usize, power: i32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = power;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, Rational::one());
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
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

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exponents: &[i32]) -> Rational {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    fn add_term(&mut self, e: Vec<i32>, c: Rational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Evaluates at a point with all coordinates nonzero.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| {
                    acc * num_traits::pow::pow(
                        if k < 0 { x.recip() } else { x.clone() },
                        k.unsigned_abs() as usize,
                    )
                })
            })
            .fold(Rational::zero(), |a, b| a + b)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    #[allow(clippy::suspicious_arithmetic_impl)] // exponents add
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}
