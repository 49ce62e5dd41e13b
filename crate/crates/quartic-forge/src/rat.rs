//! Exact rational scalars and their canonical string forms.
//!
//! `Rat` is an arbitrary-precision rational kept reduced with a positive
//! denominator. Canonical JSON encoding is the string `"numerator/denominator"`.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Rat = num_rational::BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"n"` or `"n/d"` with arbitrary-precision components.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    match t.split_once('/') {
        None => {
            let n =
                BigInt::from_str(t).map_err(|e| Error::Parse(format!("bad integer `{t}`: {e}")))?;
            Ok(Rat::from_integer(n))
        }
        Some((ns, ds)) => {
            let n = BigInt::from_str(ns.trim())
                .map_err(|e| Error::Parse(format!("bad numerator `{ns}`: {e}")))?;
            let d = BigInt::from_str(ds.trim())
                .map_err(|e| Error::Parse(format!("bad denominator `{ds}`: {e}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{t}`")));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Canonical `"n/d"` encoding used in JSON payloads, denominator always shown.
pub fn fraction_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Human-readable form: plain integer when the denominator is 1.
pub fn display_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True exactly when `r` is the square of a rational.
pub fn is_perfect_square(r: &Rat) -> bool {
    if r.is_negative() {
        return false;
    }
    let (n, d) = (r.numer(), r.denom());
    let sn = n.sqrt();
    let sd = d.sqrt();
    &sn * &sn == *n && &sd * &sd == *d
}
