//! The binomial basis `C(x, k) = x (x-1) ... (x-k+1) / k!` and the linear
//! transform `E` defined by `E(C(x, k)) = x^k`.
//!
//! `E` matters because a polynomial `p` with positive leading coefficient
//! interpolates a Pólya frequency sequence exactly when all zeros of `E(p)`
//! are real and lie in `[-1, 0]`.
//!
//! ```
//! use polya::binomial_basis::{e_transform, e_inverse};
//! use polya::Polynomial;
//!
//! let cube = Polynomial::from_ints(&[0, 0, 0, 1]);
//! let image = e_transform(&cube);
//! assert_eq!(image, Polynomial::from_ints(&[0, 1, 6, 6]));
//! assert_eq!(e_inverse(&image), cube);
//! ```

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_poly::{int, serde_rational, Polynomial, Rational};
use crate::symm::operators::t_operator;

/// Coefficients `c_k` with `p(x) = sum c_k C(x, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialBasisVector {
    #[serde(with = "serde_rational::vec")]
    coeffs: Vec<Rational>,
}

impl BinomialBasisVector {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BinomialBasisVector { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Back to the power basis.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut acc = Polynomial::zero();
        let mut basis = Polynomial::one();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                // C(x, k) = C(x, k-1) (x - k + 1) / k
                let factor = Polynomial::new(vec![int(1 - k as i64), Rational::one()]);
                basis = (&basis * &factor).scale(&int(k as i64).recip());
            }
            if !c.is_zero() {
                acc = &acc + &basis.scale(c);
            }
        }
        acc
    }
}

/// `c_k = (Delta^k p)(0)`, from forward differences of `p(0), ..., p(d)`.
pub fn to_binomial_basis(p: &Polynomial) -> BinomialBasisVector {
    let Some(d) = p.degree() else {
        return BinomialBasisVector::new(Vec::new());
    };
    let mut row: Vec<Rational> = (0..=d as i64).map(|k| p.eval_int(k)).collect();
    let mut out = Vec::with_capacity(d + 1);
    while !row.is_empty() {
        out.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    BinomialBasisVector::new(out)
}

/// `E(p) = sum c_k x^k` where `p = sum c_k C(x, k)`.
pub fn e_transform(p: &Polynomial) -> Polynomial {
    Polynomial::new(to_binomial_basis(p).coeffs)
}

/// The inverse of [`e_transform`]: `x^k -> C(x, k)`.
pub fn e_inverse(p: &Polynomial) -> Polynomial {
    BinomialBasisVector::new(p.coeffs().to_vec()).to_polynomial()
}

/// Diamond product via the derivative expansion
/// `sum_k f^(k)/k! g^(k)/k! x^k (x+1)^k`.
pub fn diamond(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Polynomial::zero();
    };
    let weight = Polynomial::from_ints(&[0, 1, 1]);
    let mut power = Polynomial::one();
    let mut acc = Polynomial::zero();
    for k in 0..=df.min(dg) {
        let term = &f.taylor_coefficient(k) * &g.taylor_coefficient(k);
        acc = &acc + &(&term * &power);
        power = &power * &weight;
    }
    acc
}

/// Diamond product from its definition `E(E^{-1}(f) E^{-1}(g))`.
pub fn diamond_by_definition(f: &Polynomial, g: &Polynomial) -> Polynomial {
    e_transform(&(&e_inverse(f) * &e_inverse(g)))
}

/// `(-1)^deg(p) p(-x - 1)`; commutes with `E`.
pub fn s_automorphism(p: &Polynomial) -> Polynomial {
    let Some(d) = p.degree() else {
        return Polynomial::zero();
    };
    // p(-x - 1) = q(-x) with q(y) = p(y - 1)
    let r = p.shift(&-Rational::one()).reflect();
    if d % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Both sides of the identity
/// `E(p(x)^2 - p(x-1) p(x+1)) = x (1+x) T(g)` where `E(p) = x (1+x) g`.
///
/// Requires `p(0) = p(-1) = 0`. Returns `(left, right)`; they agree for
/// every admissible input.
pub fn algg_image(p: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    if !p.eval_int(0).is_zero() || !p.eval_int(-1).is_zero() {
        return Err(Error::Precondition(
            "p must vanish at 0 and \u{2212}1".into(),
        ));
    }
    let left = e_transform(&crate::sequences::l_apply_poly(p));
    let f = e_transform(p);
    let x_x1 = Polynomial::from_ints(&[0, 1, 1]);
    let g = f.exact_div(&x_x1)?;
    let right = &x_x1 * &t_operator(&g);
    Ok((left, right))
}
