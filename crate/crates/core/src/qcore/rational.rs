//! Exact rationals and their `num/den` wire format.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{QError, Result};

pub use num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn checked_div(a: &BigRational, b: &BigRational) -> Result<BigRational> {
    if b.is_zero() {
        return Err(QError::DivisionByZero);
    }
    Ok(a / b)
}

pub fn checked_recip(a: &BigRational) -> Result<BigRational> {
    if a.is_zero() {
        return Err(QError::DivisionByZero);
    }
    Ok(a.recip())
}

/// `base^e` for any integer `e`; zero to a negative power is an error.
pub fn pow_i64(base: &BigRational, e: i64) -> Result<BigRational> {
    if e >= 0 {
        Ok(pow_u(base, e as u64))
    } else {
        checked_recip(&pow_u(base, e.unsigned_abs()))
    }
}

pub fn pow_u(base: &BigRational, e: u64) -> BigRational {
    let numer = num_traits::pow::pow(base.numer().clone(), e as usize);
    let denom = num_traits::pow::pow(base.denom().clone(), e as usize);
    // already coprime, skip the gcd
    BigRational::new_raw(numer, denom)
}

/// Always `num/den`, including integers (`3/1`).
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `num/den`, a bare integer or a plain decimal such as `-0.35`
/// (read exactly, as 35/100); result is in lowest terms.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let err = || QError::Parse {
        input: s.to_string(),
        what: "rational num/den",
    };
    let s = s.trim();
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || whole.contains('/') {
            return Err(err());
        }
        let digits = format!("{whole}{frac}");
        let n: BigInt = digits.parse().map_err(|_| err())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(n, d));
    }
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}

pub fn to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // scale down huge operands before dividing
    let bits = r.numer().bits().max(r.denom().bits()) as i64;
    let shift = (bits - 960).max(0) as usize;
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Exact conversion of a finite double.
pub fn from_f64(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or(QError::NonFinite("from_f64"))
}

/// Exponent of the prime `p` in a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> u64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (quot, rem) = n.div_rem(&p);
        if !rem.is_zero() {
            return v;
        }
        n = quot;
        v += 1;
    }
}

pub fn is_integer(r: &BigRational) -> bool {
    r.denom().is_one()
}
