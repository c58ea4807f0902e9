//! Exact rational arithmetic shared by every module.
//!
//! All weights, densities, thresholds and estimates are `BigRational`, so
//! comparisons against tolerances never depend on floating point rounding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serializer};
use std::fmt;
use std::str::FromStr;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational `{0}`: expected `a/b` or a decimal such as `0.25`")]
pub struct ParseRationalError(pub String);

/// Builds `num/den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_u64(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn from_usize(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `a/b`, an integer, or a finite decimal (`0.125`, `-1.5`) exactly.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    let err = || ParseRationalError(text.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    let all_digits = |p: &str| p.chars().all(|c| c.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(err());
    }
    let digits = format!("{}{}", int_part, frac_part);
    let num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| err())?;
    let den = num_traits::pow(BigInt::from(10u32), frac_part.len());
    let value = Rational::new(num, den);
    Ok(if neg { -value } else { value })
}

/// Canonical text form: `p/q`, or just `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Wrapper that displays a rational in canonical form.
pub struct Display<'a>(pub &'a Rational);

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(self.0))
    }
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

pub fn ceil_to_usize(r: &Rational) -> Option<usize> {
    r.ceil().to_integer().to_usize()
}

pub fn floor_to_u64(r: &Rational) -> Option<u64> {
    r.floor().to_integer().to_u64()
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Smallest rational with denominator `2^bits` whose value `x` satisfies
/// `pred(x)`, searched on `[lo, hi]`. `pred` must be monotone (false then true)
/// and `pred(hi)` must hold.
pub fn bisect_up(lo: &Rational, hi: &Rational, bits: u32, pred: impl Fn(&Rational) -> bool) -> Rational {
    let scale = BigInt::one() << bits;
    let mut lo_n = (lo * Rational::from_integer(scale.clone())).floor().to_integer();
    let mut hi_n = (hi * Rational::from_integer(scale.clone())).ceil().to_integer();
    let at = |k: &BigInt| Rational::new(k.clone(), scale.clone());
    debug_assert!(pred(&at(&hi_n)));
    if pred(&at(&lo_n)) {
        return at(&lo_n);
    }
    // invariant: pred(lo_n) false, pred(hi_n) true
    while &hi_n - &lo_n > BigInt::one() {
        let mid: BigInt = (&lo_n + &hi_n).div_floor(&BigInt::from(2));
        if pred(&at(&mid)) {
            hi_n = mid;
        } else {
            lo_n = mid;
        }
    }
    at(&hi_n)
}

pub fn is_in_open_unit(r: &Rational) -> bool {
    r.is_positive() && r < &Rational::one()
}

pub(crate) mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

pub(crate) mod serde_rational_opt {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let text: Option<String> = Option::deserialize(d)?;
        text.map(|t| parse_rational(&t).map_err(serde::de::Error::custom)).transpose()
    }
}
