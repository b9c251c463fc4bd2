//! Exact rationals and the q-analog primitives: `[x]_q`, `(a:q)_n`,
//! binomials and the validated types `QValue` and `EvalPoint`.
//!
//! The polynomial argument `x` never appears directly. Every closed form
//! depends on it only through `q^x`, so an evaluation point carries
//! `tau = q^x` as an exact rational instead.

pub mod algebra;
pub mod degree;
pub mod rational;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use algebra::{QBase, Ring};
pub use degree::{DegreeSpan, SymBase};
pub use rational::{
    checked_div, format_rational, int, parse_rational, pow_i64, rat, to_f64, BigRational,
};

use crate::error::{QError, Result};

/// A rational evaluation point for `q`, excluding `0`, `1` and `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QValue(BigRational);

impl QValue {
    pub fn new(q: BigRational) -> Result<Self> {
        let reason = if q.is_zero() {
            "q = 0 makes negative powers undefined"
        } else if q.is_one() {
            "q = 1 is a pole of every closed form (division by 1 - q)"
        } else if q == -BigRational::one() {
            "q = -1 makes [2]_q = 1 + q vanish"
        } else {
            return Ok(QValue(q));
        };
        Err(QError::InvalidQ {
            q: format_rational(&q),
            reason,
        })
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(QError::DivisionByZero);
        }
        QValue::new(rat(n, d))
    }

    pub fn parse(s: &str) -> Result<Self> {
        QValue::new(parse_rational(s)?)
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    /// `q^n` exactly.
    pub fn pow_exact(&self, n: i64) -> BigRational {
        // q != 0 so negative powers are fine
        pow_i64(&self.0, n).expect("q is nonzero")
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl QBase for QValue {
    type R = BigRational;

    fn pow(&self, e: i64) -> BigRational {
        self.pow_exact(e)
    }

    fn recip_one_plus_pow(&self, e: i64) -> Result<BigRational> {
        let f = BigRational::one() + self.pow_exact(e);
        if f.is_zero() {
            return Err(QError::Pole { exponent: e });
        }
        Ok(f.recip())
    }

    fn recip_one_minus_pow(&self, e: i64) -> Result<BigRational> {
        let f = BigRational::one() - self.pow_exact(e);
        if f.is_zero() {
            return Err(QError::PoleOneMinus { exponent: e });
        }
        Ok(f.recip())
    }

    fn power_base(&self, l: i64) -> Result<Self> {
        if l == 0 {
            return Err(QError::param("l", "base exponent must be nonzero"));
        }
        QValue::new(self.pow_exact(l))
    }
}

/// `(q, tau)` with `tau` standing in for `q^x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvalPoint {
    pub q: QValue,
    pub tau: BigRational,
}

impl EvalPoint {
    pub fn new(q: QValue, tau: BigRational) -> Result<Self> {
        if tau.is_zero() {
            return Err(QError::InvalidPoint("tau = q^x must be nonzero"));
        }
        Ok(EvalPoint { q, tau })
    }

    /// The point for an integer argument `x = n`, i.e. `tau = q^n`.
    pub fn at_integer(q: QValue, n: i64) -> Self {
        let tau = q.pow_exact(n);
        EvalPoint { q, tau }
    }

    /// `x = 0`.
    pub fn origin(q: QValue) -> Self {
        EvalPoint::at_integer(q, 0)
    }
}

pub fn q_bracket_int(n: i64, q: &QValue) -> BigRational {
    q.bracket_int(n).expect("q != 1")
}

pub fn q_bracket_tau(pt: &EvalPoint) -> BigRational {
    pt.q.bracket_tau(&pt.tau).expect("q != 1")
}

/// `(a : base)_n = prod_{i<n} (1 - a base^i)`.
pub fn q_shifted_factorial(a: &BigRational, base: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut p = BigRational::one();
    for _ in 0..n {
        acc *= BigRational::one() - a * &p;
        p *= base;
    }
    acc
}

pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exponents `e` such that the closed forms for `(m, h, k)` divide by
/// `1 + q^e`: `{h + l - i : 0 <= l <= m, 0 <= i < k}`.
pub fn denominator_support(m: u32, h: i64, k: u32) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    for l in 0..=m as i64 {
        for i in 0..k as i64 {
            out.insert(h + l - i);
        }
    }
    out
}

/// Rejects `q` when some `1 + q^e` with `e` in the support vanishes.
pub fn check_poles(q: &QValue, m: u32, h: i64, k: u32) -> Result<()> {
    for e in denominator_support(m, h, k) {
        if (BigRational::one() + q.pow_exact(e)).is_zero() {
            return Err(QError::Pole { exponent: e });
        }
    }
    Ok(())
}
