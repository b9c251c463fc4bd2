//! The small algebra every closed form is written against.
//!
//! A [`QBase`] is "the number q" in some concrete representation: an exact
//! rational ([`QValue`](super::QValue)) for evaluation, or a symbolic power
//! `q^r` ([`SymBase`](super::degree::SymBase)) whose ring tracks degree
//! bounds. Closed forms only ever divide by `1 + base^e` and `1 - base^e`,
//! which is what lets the symbolic side keep exact denominators.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::BigRational;
use crate::error::Result;

pub trait Ring:
    Clone
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: &BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Self::from_rational(&BigRational::from_integer(n.clone()))
    }

    fn powu(&self, mut e: u64) -> Self {
        let mut acc = Self::one();
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq.clone();
            }
            e >>= 1;
            if e > 0 {
                sq = sq.clone() * sq;
            }
        }
        acc
    }

    /// `(-1)^e` times `self`.
    fn signed(self, e: u64) -> Self {
        if e.is_multiple_of(2) {
            self
        } else {
            -self
        }
    }
}

impl Ring for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn powu(&self, e: u64) -> Self {
        super::rational::pow_u(self, e)
    }
}

pub trait QBase: Clone {
    type R: Ring;

    /// `base^e`.
    fn pow(&self, e: i64) -> Self::R;

    /// `1 / (1 + base^e)`; a vanishing factor is a pole error.
    fn recip_one_plus_pow(&self, e: i64) -> Result<Self::R>;

    /// `1 / (1 - base^e)`; `e = 0` is always a pole.
    fn recip_one_minus_pow(&self, e: i64) -> Result<Self::R>;

    /// The base `base^l`, used for multiplication formulas (`l` odd) and the
    /// reflection `q -> q^{-1}` (`l = -1`).
    fn power_base(&self, l: i64) -> Result<Self>;

    fn q(&self) -> Self::R {
        self.pow(1)
    }

    /// `[2]_q = 1 + q`.
    fn two(&self) -> Self::R {
        Self::R::one() + self.q()
    }

    /// `[x]_q = (1 - tau) / (1 - q)` where `tau = q^x`.
    fn bracket_tau(&self, tau: &Self::R) -> Result<Self::R> {
        Ok((Self::R::one() - tau.clone()) * self.recip_one_minus_pow(1)?)
    }

    /// `[n]_q` for an integer `n`.
    fn bracket_int(&self, n: i64) -> Result<Self::R> {
        self.bracket_tau(&self.pow(n))
    }

    /// `(-q^e : q^{-1})_k = prod_{i<k} (1 + q^{e-i})`, inverted.
    fn recip_neg_shifted_factorial(&self, e: i64, k: u32) -> Result<Self::R> {
        let mut acc = Self::R::one();
        for i in 0..k as i64 {
            acc = acc * self.recip_one_plus_pow(e - i)?;
        }
        Ok(acc)
    }
}
