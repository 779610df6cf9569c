//! Rational scalars and their text form.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    Rational::from_integer(factorial_int(n))
}

pub(crate) fn factorial_int(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n` or `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Parses `"num"`, `"num/den"` with an optional leading sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::Parse(format!("invalid rational {s:?}"));
    let body = s.strip_prefix('+').unwrap_or(s);
    if body.is_empty() || body.starts_with('+') {
        return Err(err());
    }
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (body, None),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = match den {
        Some(d) if d.starts_with('-') || d.starts_with('+') => return Err(err()),
        Some(d) => d.parse().map_err(|_| err())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Exact text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Decimal approximation for display only.
pub fn approx(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Serde adapters writing rationals as exact strings.
pub mod serde_rational {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(de::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(
            qs: &[Rational],
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(qs.len()))?;
            for q in qs {
                seq.serialize_element(&format_rational(q))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Rational>, D::Error> {
            let v = Vec::<String>::deserialize(d)?;
            v.iter()
                .map(|s| parse_rational(s).map_err(de::Error::custom))
                .collect()
        }
    }
}
