//! Exact rational helpers and JSON encodings for big numbers.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::ser::{SerializeSeq, Serializer};

use crate::error::{Error, Result};

pub fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `2^e` for any integer `e`.
pub fn p2(e: i64) -> BigRational {
    let base = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}

/// `2^(e2 / 2)`; fails unless `e2` is even.
pub fn p2_half(e2: i64) -> Result<BigRational> {
    if e2 % 2 != 0 {
        return Err(Error::Hypothesis(format!("exponent {e2}/2 is not an integer")));
    }
    Ok(p2(e2 / 2))
}

/// The value as a nonnegative integer, if it is one.
pub fn to_natural(x: &BigRational) -> Option<BigUint> {
    (x.is_integer() && !x.is_negative()).then(|| x.to_integer().to_biguint().expect("nonnegative"))
}

pub fn to_u64(x: &BigRational) -> Option<u64> {
    to_natural(x).and_then(|v| v.to_u64())
}

/// A JSON number carrying every digit.
pub fn json_int(x: &impl ToString) -> serde_json::Number {
    serde_json::Number::from_str(&x.to_string()).expect("integer literal")
}

/// Integers as JSON numbers, other rationals as `"p/q"` strings.
pub fn json_rational(x: &BigRational) -> serde_json::Value {
    if x.is_integer() {
        serde_json::Value::Number(json_int(&x.to_integer()))
    } else {
        serde_json::Value::String(x.to_string())
    }
}

pub fn ser_rational<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_some(&json_rational(x))
}

pub fn ser_rationals<S: Serializer>(xs: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&json_rational(x))?;
    }
    seq.end()
}

pub fn ser_opt_rational<S: Serializer>(x: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => ser_rational(v, s),
        None => s.serialize_none(),
    }
}

pub fn ser_biguint<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_some(&json_int(x))
}
