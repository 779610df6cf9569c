//! Integer-coefficient kernels behind root counting.
//!
//! Root location only depends on a polynomial up to a positive scalar, so
//! the heavy lifting (remainder sequences, square-free decomposition) runs on
//! primitive integer polynomials. Remainder sequences use subresultant
//! scaling, which keeps coefficient growth polynomial without any gcd of
//! coefficients inside the loop.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::polynomial::Polynomial;
use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub(crate) fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        IntPoly(c)
    }

    /// Positive multiple of `p` with coprime integer coefficients.
    pub(crate) fn from_rational(p: &Polynomial) -> Self {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IntPoly::new(ints).primitive()
    }

    pub(crate) fn to_rational(&self) -> Polynomial {
        Polynomial::new(self.0.iter().cloned().map(Rational::from_integer).collect())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub(crate) fn lc(&self) -> &BigInt {
        self.0.last().expect("nonzero polynomial")
    }

    pub(crate) fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the (positive) content; the sign is preserved.
    pub(crate) fn primitive(self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self;
        }
        IntPoly(self.0.into_iter().map(|c| c / &g).collect())
    }

    pub(crate) fn derivative(&self) -> Self {
        IntPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    fn sub(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&zero) - rhs.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    fn scalar_div_exact(self, d: &BigInt) -> IntPoly {
        if d.is_one() {
            return self;
        }
        IntPoly(
            self.0
                .into_iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    assert!(r.is_zero(), "inexact scalar division in remainder sequence");
                    q
                })
                .collect(),
        )
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub(crate) fn prem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree();
        if self.0.len() <= db {
            return self.clone();
        }
        let lc = b.lc();
        let mut r = self.0.clone();
        let steps = r.len() - db;
        for _ in 0..steps {
            let top = r.len() - 1;
            let lead = r[top].clone();
            let shift = top - db;
            for c in r.iter_mut() {
                *c *= lc;
            }
            if !lead.is_zero() {
                for (j, bj) in b.0.iter().enumerate() {
                    r[shift + j] -= &lead * bj;
                }
            }
            debug_assert!(r[top].is_zero());
            r.pop();
        }
        IntPoly::new(r)
    }

    /// Exact quotient in `Z[x]`; `None` when `b` does not divide `self`.
    pub(crate) fn exact_div(&self, b: &IntPoly) -> Option<IntPoly> {
        let db = b.degree();
        if self.is_zero() {
            return Some(IntPoly(Vec::new()));
        }
        if self.0.len() <= db {
            return None;
        }
        let lc = b.lc();
        let mut r = self.0.clone();
        let mut q = vec![BigInt::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            let (qi, rem) = r[i + db].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            if !qi.is_zero() {
                for (j, bj) in b.0.iter().enumerate() {
                    r[i + j] -= &qi * bj;
                }
            }
            q[i] = qi;
        }
        if r.iter().all(Zero::is_zero) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// Sign of `self(x)` at a rational point.
    pub(crate) fn sign_at(&self, x: &Rational) -> Ordering {
        // sign of den^d * p(num/den), with den > 0.
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.0.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc.sign().cmp_zero()
    }

    pub(crate) fn sign_at_pos_inf(&self) -> Ordering {
        self.0
            .last()
            .map_or(Ordering::Equal, |c| c.sign().cmp_zero())
    }

    pub(crate) fn sign_at_neg_inf(&self) -> Ordering {
        let s = self.sign_at_pos_inf();
        if self.degree() % 2 == 1 {
            s.reverse()
        } else {
            s
        }
    }
}

trait SignExt {
    fn cmp_zero(self) -> Ordering;
}

impl SignExt for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}

/// Signed remainder sequence of `(a, b)`, each element a positive multiple of
/// the classical Euclidean one: `s[i+1] = -rem(s[i-1], s[i])` up to a positive
/// factor. Magnitudes follow the subresultant PRS, so every scalar division is
/// exact.
pub(crate) fn sturm_like_chain(a: &IntPoly, b: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![a.clone()];
    if b.is_zero() {
        return chain;
    }
    chain.push(b.clone());
    let mut psi = BigInt::one();
    let mut first = true;
    loop {
        let n = chain.len();
        let (prev, cur) = (&chain[n - 2], &chain[n - 1]);
        let delta = prev.degree() - cur.degree();
        let lc_cur = cur.lc().clone();
        let prem = prev.prem(cur);
        if prem.is_zero() {
            break;
        }
        // |beta| = 1 on the first step, |lc(prev)| * |psi|^delta afterwards.
        let beta = if first {
            BigInt::one()
        } else {
            prev.lc().abs() * psi.pow(delta as u32)
        };
        // Make the scaling lc(cur)^(delta+1) positive, then negate.
        let flip = lc_cur.is_negative() && (delta + 1) % 2 == 1;
        let mut next = prem.scalar_div_exact(&beta);
        if !flip {
            next = IntPoly(next.0.into_iter().map(|c| -c).collect());
        }
        // psi_{i+1} = |lc(cur)|^delta / |psi_i|^(delta - 1)
        psi = if delta == 0 {
            psi
        } else {
            lc_cur.abs().pow(delta as u32) / psi.pow((delta - 1) as u32)
        };
        first = false;
        chain.push(next);
    }
    chain
}

/// Primitive gcd with positive leading coefficient. Both inputs nonzero.
pub(crate) fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (a, b) = if a.degree() >= b.degree() {
        (a, b)
    } else {
        (b, a)
    };
    if b.is_zero() {
        return normalize_sign(a.clone().primitive());
    }
    let chain = sturm_like_chain(a, b);
    let last = chain.last().expect("chain is nonempty").clone().primitive();
    normalize_sign(last)
}

fn normalize_sign(p: IntPoly) -> IntPoly {
    if p.0.last().is_some_and(Signed::is_negative) {
        IntPoly(p.0.into_iter().map(|c| -c).collect())
    } else {
        p
    }
}

/// Yun's square-free decomposition: returns `(multiplicity, factor)` pairs
/// with `p = const * prod factor^multiplicity`, factors square-free, pairwise
/// coprime, of positive degree.
pub(crate) fn square_free_decomposition(p: &IntPoly) -> Vec<(usize, IntPoly)> {
    let mut out = Vec::new();
    if p.degree() == 0 {
        return out;
    }
    let dp = p.derivative();
    let c = gcd(p, &dp);
    let mut w = p.exact_div(&c).expect("gcd divides p");
    let mut y = dp.exact_div(&c).expect("gcd divides p'");
    let mut z = y.sub(&w.derivative());
    let mut i = 1;
    while w.degree() > 0 {
        let g = if z.is_zero() {
            normalize_sign(w.clone().primitive())
        } else {
            gcd(&w, &z)
        };
        if g.degree() > 0 {
            out.push((i, g.clone()));
        }
        w = w.exact_div(&g).expect("factor divides w");
        y = z.exact_div(&g).expect("factor divides z");
        z = y.sub(&w.derivative());
        i += 1;
    }
    out
}
