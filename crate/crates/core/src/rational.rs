//! Exact rational helpers.
//!
//! Every cut invariant is carried as a [`Rational`] in lowest terms. On the
//! wire a rational is always written as `"p/q"`, including integers (`"2/1"`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Builds `num/den` in lowest terms. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Formats as `"p/q"` with `q > 0`, never collapsing the denominator.
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`. Returns `None` on a zero
/// denominator or malformed input.
pub fn parse_pq(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Serde adapter writing a [`Rational`] as a `"p/q"` string.
pub mod serde_pq {
    use super::{parse_pq, to_pq, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_pq(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_pq(&s).ok_or_else(|| D::Error::custom(format!("invalid rational {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_keeps_unit_denominator() {
        assert_eq!(to_pq(&int(2)), "2/1");
        assert_eq!(to_pq(&rat(6, 4)), "3/2");
        assert_eq!(to_pq(&rat(3, -9)), "-1/3");
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(parse_pq("10/4"), Some(rat(5, 2)));
        assert_eq!(parse_pq("7"), Some(int(7)));
        assert_eq!(parse_pq("1/0"), None);
        assert_eq!(parse_pq("x/2"), None);
    }
}
