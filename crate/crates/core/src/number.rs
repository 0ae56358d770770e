//! Exact rational numbers and their textual forms.

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"33/100"`, `"0.33"`, `"-2"`, `"1e-3"` exactly (never through binary floating point).
pub fn parse(text: &str) -> Result<Rational> {
    let s = text.trim();
    let err = || Error::Parse(text.to_string());
    if let Some((p, q)) = s.split_once('/') {
        let p = parse_decimal(p.trim()).ok_or_else(err)?;
        let q = parse_decimal(q.trim()).ok_or_else(err)?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(p / q);
    }
    parse_decimal(s).ok_or_else(err)
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, body) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{whole}{frac}0").parse::<BigInt>().ok()? / 10;
    let shift = exponent - frac.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    let scale = if shift >= 0 {
        Pow::pow(&ten, shift as u32)
    } else {
        Pow::pow(&ten, (-shift) as u32).recip()
    };
    let value = Rational::from_integer(digits) * scale;
    Some(if negative { -value } else { value })
}

/// Canonical `"p/q"` rendering; the denominator is always printed.
pub fn format(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `2^-t` as an exact rational.
pub fn half_pow(t: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << t)
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

/// Serde adapter: rationals travel as `"p/q"` strings; plain JSON numbers are accepted on input.
pub mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        from_json(&v).map_err(serde::de::Error::custom)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Rational> {
        match v {
            serde_json::Value::String(s) => parse(s),
            serde_json::Value::Number(n) => parse(&n.to_string()),
            other => Err(Error::Parse(other.to_string())),
        }
    }
}
