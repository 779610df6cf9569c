//! Jacobi `P_n^(1,1)` and Hermite `H_n` polynomials with the two identities
//! the zero-preservation arguments lean on.

use num_traits::Zero;

use super::catalan;
use super::identities::{Method, Transcript};
use crate::exact_poly::{binomial, factorial, int, Interval, Polynomial, Rational, RootCounter};
use crate::{Error, Result};

/// `P_n^(1,1)` from the three-term recurrence
/// `4n^2(n+2) P_n = 2n(2n+1)(2n+2) x P_{n-1} - 2n^2(2n+2) P_{n-2}`.
pub fn jacobi11(n: usize) -> Polynomial {
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Polynomial::from_ints(&[0, 2]);
    for m in 2..=n as i64 {
        let lead = int(4 * m * m * (m + 2));
        let a = int(2 * m * (2 * m + 1) * (2 * m + 2));
        let b = int(2 * m * m * (2 * m + 2));
        let next = (&(&Polynomial::x() * &cur).scale(&a) - &prev.scale(&b)).scale(&(int(1) / lead));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Physicists' Hermite polynomial, `H_{n+1} = 2x H_n - 2n H_{n-1}`.
///
/// Panics if the result violates `H_n' = 2n H_{n-1}`.
pub fn hermite(n: usize) -> Polynomial {
    let h = hermite_table(n);
    if n > 0 {
        assert_eq!(
            h[n].derivative(),
            h[n - 1].scale(&int(2 * n as i64)),
            "Appell property"
        );
    }
    h.into_iter().next_back().expect("nonempty")
}

fn hermite_table(n: usize) -> Vec<Polynomial> {
    let mut h = vec![Polynomial::one()];
    if n >= 1 {
        h.push(Polynomial::from_ints(&[0, 2]));
    }
    for m in 1..n {
        let next = &(&Polynomial::x() * &h[m]).scale(&int(2)) - &h[m - 1].scale(&int(2 * m as i64));
        h.push(next);
    }
    h
}

fn compare(t: &mut Transcript, location: &str, left: &Polynomial, right: &Polynomial) {
    t.checks += 1;
    if left != right {
        t.fail(location.to_string(), left.to_string(), right.to_string());
    }
}

/// Checks, as exact polynomials,
///
/// ```text
/// sum_k C_k C(n, 2k) x^k (1+x)^(n-2k)
///   = 1/(n+1) sum_k C(n+1, k) C(n+1, k+1) x^k
///   = 1/(n+1) (1-x)^n P_n^(1,1)((1+x)/(1-x))
/// ```
///
/// and that every zero is real and negative.
pub fn verify_jacobi_identity(n: usize) -> Transcript {
    let ni = n as i64;
    let inv = Rational::new(1.into(), (ni + 1).into());
    let one_plus = Polynomial::from_ints(&[1, 1]);
    let one_minus = Polynomial::from_ints(&[1, -1]);

    let mut catalan_form = Polynomial::zero();
    for k in 0..=n / 2 {
        let c = catalan(k) * Rational::from_integer(binomial(ni, 2 * k as i64));
        let term = &Polynomial::monomial(c, k) * &one_plus.pow(n - 2 * k);
        catalan_form = catalan_form + term;
    }

    let narayana = Polynomial::new(
        (0..=ni)
            .map(|k| Rational::from_integer(binomial(ni + 1, k) * binomial(ni + 1, k + 1)) * &inv)
            .collect(),
    );

    // (1-x)^n P((1+x)/(1-x)) = sum_i p_i (1+x)^i (1-x)^(n-i)
    let p = jacobi11(n);
    let mut jacobi_form = Polynomial::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            let term = (&one_plus.pow(i) * &one_minus.pow(n - i)).scale(c);
            jacobi_form = jacobi_form + term;
        }
    }
    let jacobi_form = jacobi_form.scale(&inv);

    let mut t = Transcript::new("jacobi-catalan", Method::Symbolic).param("n", n);
    compare(
        &mut t,
        "catalan form vs narayana form",
        &catalan_form,
        &narayana,
    );
    compare(
        &mut t,
        "narayana form vs jacobi form",
        &narayana,
        &jacobi_form,
    );

    t.checks += 1;
    let rc = RootCounter::new(&narayana).expect("leading term C(n+1, n+1) / (n+1) is nonzero");
    let negative = rc.count(&Interval::below(Rational::zero()));
    if negative != rc.degree() {
        t.fail(
            "zeros of the narayana form".to_string(),
            format!("{negative} real negative zeros"),
            format!("degree {}", rc.degree()),
        );
    }
    t
}

/// Checks `H_k^2 - H_{k-1} H_{k+1} = (k-1)! sum_{j<k} 2^(k-j)/j! H_j^2`, `k >= 1`.
pub fn verify_hermite_cd_identity(k: usize) -> Result<Transcript> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let h = hermite_table(k + 1);
    let left = &(&h[k] * &h[k]) - &(&h[k - 1] * &h[k + 1]);
    let mut sum = Polynomial::zero();
    for (j, hj) in h.iter().enumerate().take(k) {
        let w =
            Rational::from_integer(num_bigint::BigInt::from(2).pow((k - j) as u32)) / factorial(j);
        sum = sum + (hj * hj).scale(&w);
    }
    let right = sum.scale(&factorial(k - 1));
    let mut t = Transcript::new("hermite-christoffel-darboux", Method::Symbolic).param("k", k);
    compare(&mut t, "both sides", &left, &right);
    Ok(t)
}
