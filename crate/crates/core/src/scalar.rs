//! Coefficient fields and the rational scalar used throughout the crate.

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, Zero};

use crate::error::PolyError;

/// An exact coefficient field.
///
/// Polynomial and matrix code is generic over this trait. Zero tests and
/// equality are taken at face value, so only exact fields (big rationals,
/// or machine-word rationals for small inputs) give meaningful results.
pub trait Field:
    Clone + PartialEq + Debug + Display + Num + Signed + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("field contains the integers")
    }

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Debug
        + Display
        + Num
        + Signed
        + Neg<Output = T>
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Parses `"p/q"` or `"p"` into a reduced rational with positive denominator.
pub fn parse_rational(text: &str) -> Result<BigRational, PolyError> {
    let bad = || PolyError::ParseRational(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    if num.is_empty() || den.is_empty() {
        return Err(bad());
    }
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Parses a comma-separated list of rationals.
pub fn parse_rational_list(text: &str) -> Result<Vec<BigRational>, PolyError> {
    text.split(',').map(parse_rational).collect()
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Serde adapter storing a rational as its `"p/q"` string.
pub mod rational_str {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigRational, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(de)?;
        super::parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a sequence of `"p/q"` strings.
pub mod rational_vec_str {
    use num_rational::BigRational;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[BigRational], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<BigRational>, D::Error> {
        let texts = Vec::<String>::deserialize(de)?;
        texts
            .iter()
            .map(|t| super::parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rational("6/4").unwrap(), rational(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational(" 3/-9 ").unwrap(), rational(-1, 3));
        assert_eq!(parse_rational("3/-9").unwrap().to_string(), "-1/3");
        assert_eq!(int(5).to_string(), "5");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "x", "1/", "/2", "1.5", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn list_parsing() {
        let v = parse_rational_list("1,2/3,-4").unwrap();
        assert_eq!(v, vec![int(1), rational(2, 3), int(-4)]);
    }
}
