//! Checks of the symmetric-function identities
//!
//! ```text
//! sum_{0<=i<=j<=n} mu_{j-i} e_i e_j = e_n sum_{k=0}^{n} gamma_k e_{n-k}(x + 1/x)
//! ```
//!
//! and its Catalan special case, either by full expansion as Laurent
//! polynomials or by exact evaluation at seeded random rational points.
//! Both sides are produced by the same generic code, so the two methods
//! cannot drift apart.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use super::{catalan, elementary_symmetric, gamma_from_mu, AlphaSeq, MuSeq, Parity, Ring};
use crate::exact_poly::{format_rational, int, Rational};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Number of random points per randomized check.
pub const RANDOM_POINTS: usize = 64;

/// Largest `n` expanded symbolically by [`verify_magic`].
pub const MAGIC_SYMBOLIC_MAX_N: usize = 5;

/// Largest `n` expanded symbolically by [`verify_beauty`].
pub const BEAUTY_SYMBOLIC_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Symbolic,
    Randomized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
}

/// Where two sides disagreed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub location: String,
    pub left: String,
    pub right: String,
}

/// Record of one identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub identity: String,
    pub parameters: BTreeMap<String, String>,
    pub method: Method,
    pub seed: Option<u64>,
    /// Monomials compared (symbolic) or points evaluated (randomized).
    pub checks: usize,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
}

impl Transcript {
    pub(crate) fn new(identity: &str, method: Method) -> Self {
        Transcript {
            identity: identity.to_string(),
            parameters: BTreeMap::new(),
            method,
            seed: None,
            checks: 0,
            outcome: Outcome::Pass,
            witness: None,
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub(crate) fn fail(&mut self, location: String, left: String, right: String) {
        if self.outcome == Outcome::Pass {
            self.outcome = Outcome::Fail;
            self.witness = Some(Witness {
                location,
                left,
                right,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("transcript serializes")
    }
}

struct Vars<T> {
    xs: Vec<T>,
    inv: Vec<T>,
    zero: T,
    one: T,
}

impl<T: Ring> Vars<T> {
    fn e(&self) -> Vec<T> {
        elementary_symmetric(&self.xs, &self.zero, &self.one)
    }

    /// `e_k(x + 1/x)`.
    fn e_shifted(&self) -> Vec<T> {
        let ys: Vec<T> = self
            .xs
            .iter()
            .zip(&self.inv)
            .map(|(x, y)| x.add(y))
            .collect();
        elementary_symmetric(&ys, &self.zero, &self.one)
    }
}

fn symbolic_vars(n: usize, extra: usize) -> Vars<LaurentPoly> {
    let nv = n + extra;
    Vars {
        xs: (0..n).map(|i| LaurentPoly::var(nv, i)).collect(),
        inv: (0..n).map(|i| LaurentPoly::var_pow(nv, i, -1)).collect(),
        zero: LaurentPoly::zero(nv),
        one: LaurentPoly::one(nv),
    }
}

fn numeric_vars(point: &[Rational]) -> Vars<Rational> {
    Vars {
        xs: point.to_vec(),
        inv: point.iter().map(|x| x.recip()).collect(),
        zero: Rational::zero(),
        one: int(1),
    }
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let num: i64 = rng.gen_range(-30..=30);
        if num != 0 {
            let den: i64 = rng.gen_range(1..=12);
            return Rational::new(num.into(), den.into());
        }
    }
}

/// Seeded random nonzero rational points.
pub(crate) fn random_points(seed: u64, dim: usize, count: usize) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..dim).map(|_| random_nonzero(&mut rng)).collect())
        .collect()
}

fn magic_sides<T: Ring>(v: &Vars<T>, mu: &MuSeq) -> (T, T) {
    let n = v.xs.len();
    let e = v.e();
    let f = v.e_shifted();
    let mut lhs = v.zero.clone();
    for i in 0..=n {
        for j in i..=n {
            let m = mu.get(j - i);
            if !m.is_zero() {
                lhs = lhs.add(&e[i].mul(&e[j]).scale(&m));
            }
        }
    }
    let gamma = gamma_from_mu(mu, n);
    let mut inner = v.zero.clone();
    for (k, g) in gamma.0.iter().enumerate() {
        if !g.is_zero() {
            inner = inner.add(&f[n - k].scale(g));
        }
    }
    (lhs, e[n].mul(&inner))
}

fn beauty_sides<T: Ring>(v: &Vars<T>) -> (T, T) {
    let n = v.xs.len();
    let e = v.e();
    let f = v.e_shifted();
    let get = |k: isize| -> T {
        if k < 0 || k as usize > n {
            v.zero.clone()
        } else {
            e[k as usize].clone()
        }
    };
    let mut lhs = v.zero.clone();
    for k in 0..=n as isize {
        let sq = get(k).mul(&get(k));
        let cross = get(k - 1).mul(&get(k + 1)).scale(&int(-1));
        lhs = lhs.add(&sq).add(&cross);
    }
    let mut inner = v.zero.clone();
    for k in 0..=n / 2 {
        inner = inner.add(&f[n - 2 * k].scale(&catalan(k)));
    }
    (lhs, e[n].mul(&inner))
}

fn compare_symbolic(t: &mut Transcript, lhs: &LaurentPoly, rhs: &LaurentPoly) {
    let diff = lhs - rhs;
    let mut monomials: Vec<&[i32]> = lhs.terms().map(|(e, _)| e).collect();
    monomials.extend(rhs.terms().map(|(e, _)| e));
    monomials.sort();
    monomials.dedup();
    t.checks += monomials.len();
    let first = diff.terms().next().map(|(e, _)| e.to_vec());
    if let Some(e) = first {
        t.fail(
            format!("monomial exponents {e:?}"),
            format_rational(&lhs.coeff(&e)),
            format_rational(&rhs.coeff(&e)),
        );
    }
}

fn compare_numeric(t: &mut Transcript, point: &[Rational], lhs: &Rational, rhs: &Rational) {
    t.checks += 1;
    if lhs != rhs {
        let pt: Vec<String> = point.iter().map(format_rational).collect();
        t.fail(
            format!("point ({})", pt.join(", ")),
            format_rational(lhs),
            format_rational(rhs),
        );
    }
}

fn mu_string(mu: &MuSeq) -> String {
    let v: Vec<String> = mu.values().iter().map(format_rational).collect();
    format!("{{{}}}", v.join(", "))
}

/// Checks `sum mu_{j-i} e_i e_j = e_n sum gamma_k e_{n-k}(x + 1/x)` in `n`
/// variables: full expansion for `n <= 5`, otherwise exact evaluation at
/// [`RANDOM_POINTS`] seeded random points.
pub fn verify_magic(n: usize, mu: &MuSeq, seed: u64) -> Transcript {
    let symbolic = n <= MAGIC_SYMBOLIC_MAX_N;
    let method = if symbolic {
        Method::Symbolic
    } else {
        Method::Randomized
    };
    let mut t = Transcript::new("elementary-symmetric-mu-gamma", method)
        .param("n", n)
        .param("mu", mu_string(mu));
    if symbolic {
        let (l, r) = magic_sides(&symbolic_vars(n, 0), mu);
        compare_symbolic(&mut t, &l, &r);
    } else {
        t.seed = Some(seed);
        for p in random_points(seed, n, RANDOM_POINTS) {
            let (l, r) = magic_sides(&numeric_vars(&p), mu);
            compare_numeric(&mut t, &p, &l, &r);
        }
    }
    t
}

/// Checks the Catalan case
/// `sum (e_k^2 - e_{k-1} e_{k+1}) = e_n sum C_k e_{n-2k}(x + 1/x)`,
/// symbolically for `n <= 6`, and that `gamma` of `mu = {1, 0, -1}` is the
/// Catalan sequence on even indices and zero on odd ones.
pub fn verify_beauty(n: usize, seed: u64) -> Transcript {
    let symbolic = n <= BEAUTY_SYMBOLIC_MAX_N;
    let method = if symbolic {
        Method::Symbolic
    } else {
        Method::Randomized
    };
    let mut t = Transcript::new("catalan-log-concavity", method).param("n", n);
    if symbolic {
        let (l, r) = beauty_sides(&symbolic_vars(n, 0));
        compare_symbolic(&mut t, &l, &r);
    } else {
        t.seed = Some(seed);
        for p in random_points(seed, n, RANDOM_POINTS) {
            let (l, r) = beauty_sides(&numeric_vars(&p));
            compare_numeric(&mut t, &p, &l, &r);
        }
    }
    let gamma = gamma_from_mu(&MuSeq::even_interleaved(&AlphaSeq::catalan()), n);
    for (k, g) in gamma.0.iter().enumerate() {
        let expected = if k % 2 == 0 {
            catalan(k / 2)
        } else {
            Rational::zero()
        };
        t.checks += 1;
        if *g != expected {
            t.fail(
                format!("gamma_{k}"),
                format_rational(g),
                format_rational(&expected),
            );
        }
    }
    t
}

/// Checks, symbolically in `x_1..x_n` and `c`, that
/// `sum_{i<=j} mu_{j-i} e_j e_i c^{i+j}` regroups by powers of `c` as
/// `sum_k (sum_j alpha_j e_{k+j} e_{k-j}) c^{2k}` for the even interleaving
/// of `alpha`, or `sum_k (sum_j alpha_j e_{k+j+1} e_{k-j}) c^{2k+1}` for the
/// odd one.
pub fn verify_interleaving(n: usize, alpha: &AlphaSeq, parity: Parity) -> Transcript {
    let (mu, odd) = match parity {
        Parity::EvenInterleaved | Parity::Raw => (MuSeq::even_interleaved(alpha), false),
        Parity::OddInterleaved => (MuSeq::odd_interleaved(alpha), true),
    };
    let v = symbolic_vars(n, 1);
    let nv = n + 1;
    let c = LaurentPoly::var(nv, n);
    let mut c_pow = vec![LaurentPoly::one(nv)];
    for k in 1..=2 * n + 1 {
        c_pow.push(&c_pow[k - 1] * &c);
    }
    let e = v.e();
    let mut lhs = LaurentPoly::zero(nv);
    for i in 0..=n {
        for j in i..=n {
            let m = mu.get(j - i);
            if !m.is_zero() {
                lhs = &lhs + &(&(&e[j] * &e[i]) * &c_pow[i + j]).scale(&m);
            }
        }
    }
    let mut rhs = LaurentPoly::zero(nv);
    for k in 0..=n {
        let mut inner = LaurentPoly::zero(nv);
        for (j, a) in alpha.values().iter().enumerate() {
            let hi = k + j + usize::from(odd);
            if j > k || hi > n {
                continue;
            }
            inner = &inner + &(&e[hi] * &e[k - j]).scale(a);
        }
        let power = 2 * k + usize::from(odd);
        if power <= 2 * n + 1 {
            rhs = &rhs + &(&inner * &c_pow[power]);
        }
    }
    let name = if odd {
        "odd-interleaving"
    } else {
        "even-interleaving"
    };
    let mut t = Transcript::new(name, Method::Symbolic)
        .param("n", n)
        .param("alpha", mu_string(&MuSeq::raw(alpha.values().to_vec())));
    compare_symbolic(&mut t, &lhs, &rhs);
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn magic_small_cases() {
        assert!(verify_magic(2, &MuSeq::from_ints(&[1, 0, -1]), DEFAULT_SEED).passed());
        assert!(verify_magic(1, &MuSeq::from_ints(&[3, -7, 2]), DEFAULT_SEED).passed());
        assert!(verify_magic(4, &MuSeq::from_ints(&[0, 1, 0, 0]), DEFAULT_SEED).passed());
    }

    #[test]
    fn magic_randomized_records_seed() {
        let t = verify_magic(6, &MuSeq::from_ints(&[1, 2, -1]), 7);
        assert!(t.passed());
        assert_eq!(t.method, Method::Randomized);
        assert_eq!(t.seed, Some(7));
        assert_eq!(t.checks, RANDOM_POINTS);
    }

    #[test]
    fn beauty_small_cases() {
        for n in 1..=4 {
            let t = verify_beauty(n, DEFAULT_SEED);
            assert!(t.passed(), "{t:?}");
        }
    }

    #[test]
    fn wrong_identity_yields_witness() {
        // Compare the mu-identity against a deliberately wrong right side.
        let v = symbolic_vars(2, 0);
        let (l, r) = magic_sides(&v, &MuSeq::from_ints(&[1]));
        let mut t = Transcript::new("broken", Method::Symbolic);
        compare_symbolic(&mut t, &l, &r.scale(&int(2)));
        assert_eq!(t.outcome, Outcome::Fail);
        assert!(t.witness.is_some());
    }

    #[test]
    fn interleavings() {
        let a = AlphaSeq::from_ints(&[1, -1]);
        assert!(verify_interleaving(3, &a, Parity::EvenInterleaved).passed());
        assert!(verify_interleaving(3, &a, Parity::OddInterleaved).passed());
    }
}
