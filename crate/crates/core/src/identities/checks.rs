//! Both sides of every registry identity, generic over the base so the
//! same code serves exact evaluation and degree certification.

use num_traits::One;

use super::Params;
use crate::error::{QError, Result};
use crate::euler::{classical_euler_higher, classical_euler_numbers, number_hk, poly_hk, series, weighted_moment};
use crate::qcore::{binomial, QBase, Ring};

fn c<R: Ring>(n: u64, k: i64) -> R {
    R::from_bigint(&binomial(n, k))
}

fn delta<R: Ring>(m: u32) -> R {
    if m == 0 {
        R::one()
    } else {
        R::zero()
    }
}

fn sum<R: Ring>(terms: impl Iterator<Item = Result<R>>) -> Result<R> {
    terms.fold(Ok(R::zero()), |acc, t| Ok(acc? + t?))
}

fn qm1<B: QBase>(b: &B) -> B::R {
    b.q() - B::R::one()
}

fn need_l(p: &Params) -> Result<i64> {
    let l = p.l.ok_or_else(|| QError::param("l", "missing"))? as i64;
    if l < 1 || l % 2 == 0 {
        return Err(QError::param("l", format!("{l} is not a positive odd integer")));
    }
    Ok(l)
}

/// `sum_j C(m,j) (q-1)^j E^{(h,k)}_j(x)`.
fn moment_sum<B: QBase>(b: &B, tau: &B::R, m: u32, h: i64, k: u32, from: u32) -> Result<B::R> {
    sum((from..=m).map(|j| {
        Ok(c::<B::R>(m as u64, j as i64) * qm1(b).powu(j as u64) * poly_hk(b, tau, j, h, k)?)
    }))
}

/// Right side of the multiplication/distribution formula:
/// `[l]_q^m / [l]_{-q}^k * sum_{i_1..i_k < l} q^{sum (h-j+1) i_j} (-1)^{sum i_j} E_{m,q^l}(tau q^{sum i})`.
/// Multi-indices with equal `sum i_j` share the same evaluation, so their
/// coefficients are convolved first.
pub(crate) fn multiplication<B: QBase>(b: &B, tau: &B::R, m: u32, h: i64, k: u32, l: i64) -> Result<B::R> {
    let bl = b.power_base(l)?;
    let mut coeff: Vec<B::R> = vec![B::R::one()];
    for j in 1..=k as i64 {
        let w: Vec<B::R> = (0..l).map(|i| b.pow((h - j + 1) * i).signed(i as u64)).collect();
        coeff = series::mul(&coeff, &w, coeff.len() + w.len() - 1);
    }
    let s = sum(coeff.iter().enumerate().map(|(shift, cs)| {
        Ok(cs.clone() * poly_hk(&bl, &(tau.clone() * b.pow(shift as i64)), m, h, k)?)
    }))?;
    let inv_l_neg = b.two() * b.recip_one_plus_pow(l)?;
    Ok(b.bracket_int(l)?.powu(m as u64) * inv_l_neg.powu(k as u64) * s)
}

/// The same sum, one multi-index at a time.
#[cfg(test)]
pub(crate) fn multiplication_brute<B: QBase>(b: &B, tau: &B::R, m: u32, h: i64, k: u32, l: i64) -> Result<B::R> {
    let bl = b.power_base(l)?;
    let total = (l as usize).pow(k);
    let mut s = <B::R as num_traits::Zero>::zero();
    for flat in 0..total {
        let mut rest = flat;
        let (mut weight_exp, mut shift) = (0i64, 0i64);
        for j in 1..=k as i64 {
            let i = (rest % l as usize) as i64;
            rest /= l as usize;
            weight_exp += (h - j + 1) * i;
            shift += i;
        }
        let term = b.pow(weight_exp) * poly_hk(&bl, &(tau.clone() * b.pow(shift)), m, h, k)?;
        s = s + term.signed(shift as u64);
    }
    let inv_l_neg = b.two() * b.recip_one_plus_pow(l)?;
    Ok(b.bracket_int(l)?.powu(m as u64) * inv_l_neg.powu(k as u64) * s)
}

/// `E^{(h,k)}_m(x) = sum_i C(m,i) E^{(h,k)}_i tau^i [x]^{m-i}`.
fn binomial_expansion<B: QBase>(b: &B, tau: &B::R, m: u32, h: i64, k: u32) -> Result<B::R> {
    let bracket = b.bracket_tau(tau)?;
    sum((0..=m).map(|i| {
        Ok(c::<B::R>(m as u64, i as i64)
            * number_hk(b, i, h, k)?
            * tau.powu(i as u64)
            * bracket.powu((m - i) as u64))
    }))
}

/// `(q E + 1)^m` read symbolically: `sum_i C(m,i) q^i E_i`.
fn umbral_shift<B: QBase>(b: &B, m: u32, h: i64, k: u32) -> Result<B::R> {
    sum((0..=m).map(|i| Ok(c::<B::R>(m as u64, i as i64) * b.pow(i as i64) * number_hk(b, i, h, k)?)))
}

fn classical_rational(m: u32) -> Vec<crate::qcore::BigRational> {
    classical_euler_numbers(m)
}

/// `(lhs, rhs)` for registry entry `id`. `tau` and `tau2` are `q^x` and `q^y`.
pub fn sides<B: QBase>(id: &str, b: &B, tau: &B::R, tau2: &B::R, p: &Params) -> Result<(B::R, B::R)> {
    type R<B> = <B as QBase>::R;
    let (m, h, k) = (p.m, p.h, p.k);
    let one = R::<B>::one();
    let two = b.two();
    Ok(match id {
        "P1a" | "E2-literal" => {
            let from = if id == "P1a" { 0 } else { 1 };
            let lhs = moment_sum(b, &one, m, 0, k + 1, from)?;
            let rhs = two.powu(k as u64 + 1) * b.recip_neg_shifted_factorial(m as i64, k + 1)?;
            (lhs, rhs)
        }
        "HREC" => (
            number_hk(b, m, h, k)?,
            number_hk(b, m, h - 1, k)? + qm1(b) * number_hk(b, m + 1, h - 1, k)?,
        ),
        "MIX" => {
            let i = p.i.ok_or_else(|| QError::param("i", "missing"))?;
            if i == 0 || i > m {
                return Err(QError::param("i", "requires 1 <= i <= m"));
            }
            let lhs = sum((0..=i).map(|j| {
                Ok(c::<R<B>>(i as u64, j as i64) * qm1(b).powu(j as u64) * number_hk(b, m - i + j, h - 1, k)?)
            }))?;
            let rhs = sum((0..i).map(|j| {
                Ok(c::<R<B>>(i as u64 - 1, j as i64) * qm1(b).powu(j as u64) * number_hk(b, m + j - i, h, k)?)
            }))?;
            (lhs, rhs)
        }
        "MOM" => (
            moment_sum(b, &one, m, h, 1, 0)?,
            two * b.recip_one_plus_pow(m as i64 + h)?,
        ),
        "E4" => (
            moment_sum(b, &one, m, 0, k, 0)?,
            two.powu(k as u64) * b.recip_neg_shifted_factorial(m as i64, k)?,
        ),
        "L2" => (
            moment_sum(b, tau, m, 0, k, 0)?,
            tau.powu(m as u64) * two.powu(k as u64) * b.recip_neg_shifted_factorial(m as i64, k)?,
        ),
        "T3a" | "T3b" => {
            let l = need_l(p)?;
            let t = if id == "T3a" { tau.clone() } else { tau.powu(l as u64) };
            (poly_hk(b, &t, m, 0, k)?, multiplication(b, &t, m, 0, k, l)?)
        }
        "T6" => {
            let l = need_l(p)?;
            let t = tau.powu(l as u64);
            (poly_hk(b, &t, m, h, k)?, multiplication(b, &t, m, h, k, l)?)
        }
        "E9" => (poly_hk(b, tau, m, 0, k)?, binomial_expansion(b, tau, m, 0, k)?),
        "E10" => {
            let y_bracket = b.bracket_tau(tau2)?;
            let rhs = sum((0..=m).map(|j| {
                Ok(c::<R<B>>(m as u64, j as i64)
                    * y_bracket.powu((m - j) as u64)
                    * tau2.powu(j as u64)
                    * poly_hk(b, tau, j, 0, k)?)
            }))?;
            (poly_hk(b, &(tau.clone() * tau2.clone()), m, 0, k)?, rhs)
        }
        "E12" => (
            tau.clone() * poly_hk(b, tau, m, h, 1)?,
            qm1(b) * poly_hk(b, tau, m + 1, h - 1, 1)? + poly_hk(b, tau, m, h - 1, 1)?,
        ),
        "E13" => (
            b.pow(h) * poly_hk(b, &(tau.clone() * b.q()), m, h, 1)? + poly_hk(b, tau, m, h, 1)?,
            two * b.bracket_tau(tau)?.powu(m as u64),
        ),
        "E14c" | "E14-literal" => {
            let lhs = b.pow(h) * umbral_shift(b, m, h, 1)? + number_hk(b, m, h, 1)?;
            let rhs = if id == "E14c" { two * delta::<R<B>>(m) } else { delta::<R<B>>(m) };
            (lhs, rhs)
        }
        "T4" => {
            let inv = b.power_base(-1)?;
            let lhs = poly_hk(&inv, &(tau.clone() * b.pow(-1)), m, h, 1)?;
            let rhs = b.pow(m as i64 + h - 1).signed(m as u64) * poly_hk(b, tau, m, h, 1)?;
            (lhs, rhs)
        }
        "E16" => {
            let inv = b.power_base(-1)?;
            let lhs = number_hk(&inv, m, h, 1)?;
            let rhs = b.pow(m as i64 - 1).signed(m as u64 + 1) * number_hk(b, m, h, 1)?;
            (lhs, rhs)
        }
        "T5a" | "T5b" => {
            let l = need_l(p)?;
            let t = if id == "T5a" { tau.clone() } else { tau.powu(l as u64) };
            let bl = b.power_base(l)?;
            let s = sum((0..l).map(|i| {
                Ok(b.pow(h * i).signed(i as u64) * poly_hk(&bl, &(t.clone() * b.pow(i)), m, h, 1)?)
            }))?;
            let lhs = two * b.recip_one_plus_pow(l)? * b.bracket_int(l)?.powu(m as u64) * s;
            (lhs, poly_hk(b, &t, m, h, 1)?)
        }
        "E17" => {
            let rhs = sum((0..=m).map(|j| {
                Ok(c::<R<B>>(m as u64, j as i64).signed((m - j) as u64)
                    * tau.powu(j as u64)
                    * two.powu(k as u64)
                    * b.recip_neg_shifted_factorial(j as i64 + h, k)?)
            }))?;
            (qm1(b).powu(m as u64) * poly_hk(b, tau, m, h, k)?, rhs)
        }
        "E18" => (
            b.pow(h) * poly_hk(b, &(tau.clone() * b.q()), m, h, k)? + poly_hk(b, tau, m, h, k)?,
            two * poly_hk(b, tau, m, h - 1, k - 1)?,
        ),
        "E19" => (
            tau.clone() * poly_hk(b, tau, m, h + 1, k)?,
            qm1(b) * poly_hk(b, tau, m + 1, h, k)? + poly_hk(b, tau, m, h, k)?,
        ),
        "E22" => {
            let inv = b.power_base(-1)?;
            let kk = k as i64;
            let lhs = poly_hk(&inv, &(tau.clone() * b.pow(-kk)), m, kk, k)?;
            let rhs = b.pow(m as i64 + kk * (kk - 1) / 2).signed(m as u64) * poly_hk(b, tau, m, kk, k)?;
            (lhs, rhs)
        }
        "E23" => {
            let inv = b.power_base(-1)?;
            let kk = k as i64;
            let lhs = number_hk(&inv, m, kk, k)?;
            let rhs = b.pow(m as i64 + kk * (kk - 1) / 2).signed(m as u64) * poly_hk(b, &b.pow(kk), m, kk, k)?;
            (lhs, rhs)
        }
        "E24" => {
            let kk = k as i64;
            (
                b.pow(kk) * poly_hk(b, &(tau.clone() * b.q()), m, kk, k)? + poly_hk(b, tau, m, kk, k)?,
                two * poly_hk(b, tau, m, kk - 1, k - 1)?,
            )
        }
        "E28" => {
            let kk = k as i64;
            (
                b.pow(kk) * umbral_shift(b, m, kk, k)? + number_hk(b, m, kk, k)?,
                two * number_hk(b, m, kk - 1, k - 1)?,
            )
        }
        "E26" => (
            moment_sum(b, &one, m, k as i64, k, 0)?,
            two.powu(k as u64) * b.recip_neg_shifted_factorial(m as i64 + k as i64, k)?,
        ),
        "E27" => (
            poly_hk(b, tau, m, k as i64, k)?,
            binomial_expansion(b, tau, m, k as i64, k)?,
        ),
        "E30" => (
            b.pow(h - k as i64) * poly_hk(b, &(tau.clone() * b.q()), m, h, k + 1)?,
            two * poly_hk(b, tau, m, h, k)? - poly_hk(b, tau, m, h, k + 1)?,
        ),
        "E31" | "E32c" => {
            let t = if id == "E31" { tau.clone() } else { one.clone() };
            let kk = k as i64;
            let rhs = sum((0..=m).map(|j| {
                Ok(c::<R<B>>(m as u64, j as i64)
                    * t.powu(j as u64)
                    * number_hk(b, j, 1, 1)?
                    * poly_hk(b, &t, m - j, kk + j as i64, k - 1)?)
            }))?;
            (poly_hk(b, &t, m, kk, k)?, rhs)
        }
        "E32-literal" => {
            // j is unbound under the printed summation index; held at j = 0
            let kk = k as i64;
            let rhs = sum((0..=m).map(|i| {
                Ok(c::<R<B>>(m as u64, i as i64) * number_hk(b, 0, 1, 1)? * number_hk(b, m, kk, k - 1)?)
            }))?;
            (number_hk(b, m, kk, k)?, rhs)
        }
        "E33" => {
            if h < 0 {
                return Err(QError::param("h", "requires h >= 0"));
            }
            let rhs = sum((0..=h as u32).map(|j| {
                Ok(c::<R<B>>(h as u64, j as i64) * qm1(b).powu(j as u64) * number_hk(b, m + j, 1, 1)?)
            }))?;
            (number_hk(b, m, h + 1, 1)?, rhs)
        }
        "E34" => {
            let rhs = sum((0..=m).map(|j| {
                let inner = sum((0..=j + 1).map(|i| {
                    Ok(c::<R<B>>(j as u64 + 1, i as i64) * qm1(b).powu(i as u64) * number_hk(b, m - j + i, 1, 1)?)
                }))?;
                Ok(c::<R<B>>(m as u64, j as i64) * number_hk(b, j, 1, 1)? * inner)
            }))?;
            (number_hk(b, m, 2, 2)?, rhs)
        }
        "T7" => {
            let kk = k as i64;
            let rhs = sum((0..=m).map(|j| {
                Ok(c::<R<B>>(m as u64, j as i64)
                    * tau.powu(j as u64)
                    * poly_hk(b, tau, m - j, kk + j as i64, 1)?
                    * number_hk(b, j, kk - 1, k - 1)?)
            }))?;
            (poly_hk(b, tau, m, kk, k)?, rhs)
        }
        "E36c" | "E36-literal" => {
            let kk = k as i64;
            let rhs = sum((0..=m).map(|j| {
                let top = kk + j as i64;
                let inner = if id == "E36c" {
                    sum((0..top).map(|i| {
                        Ok(c::<R<B>>(top as u64 - 1, i) * qm1(b).powu(i as u64) * number_hk(b, m - j + i as u32, 1, 1)?)
                    }))?
                } else {
                    // the inner binder shadows j and doubles as i
                    sum((0..=top).map(|jj| {
                        Ok(c::<R<B>>((kk + jj - 1) as u64, jj) * qm1(b).powu(jj as u64) * number_hk(b, m, 1, 1)?)
                    }))?
                };
                Ok(c::<R<B>>(m as u64, j as i64) * number_hk(b, j, kk - 1, k - 1)? * inner)
            }))?;
            (number_hk(b, m, kk, k)?, rhs)
        }
        "CL2" => {
            let e = classical_rational(m);
            let conv = (0..=m as usize).fold(crate::qcore::int(0), |acc, j| {
                acc + crate::qcore::BigRational::from_integer(binomial(m as u64, j as i64)) * &e[j] * &e[m as usize - j]
            });
            (
                R::<B>::from_rational(&classical_euler_higher(m, 2)?),
                R::<B>::from_rational(&conv),
            )
        }
        "GF29" => {
            let len = m as usize + 1;
            let inv_1mq = b.recip_one_minus_pow(1)?;
            let a = series::exp_scaled(&inv_1mq, len);
            let mut bser = Vec::with_capacity(len);
            let mut tau_j = one.clone();
            for j in 0..len {
                let fact = R::<B>::from_rational(&series::factorial(j as u32).recip());
                bser.push(
                    (two.powu(k as u64)
                        * tau_j.clone()
                        * b.recip_neg_shifted_factorial(j as i64 + h, k)?
                        * inv_1mq.powu(j as u64)
                        * fact)
                        .signed(j as u64),
                );
                tau_j = tau_j * tau.clone();
            }
            let prod = series::mul(&a, &bser, len);
            let coeff = prod[m as usize].clone() * R::<B>::from_rational(&series::factorial(m));
            (coeff, poly_hk(b, tau, m, h, k)?)
        }
        "S3-literal" => {
            let plus: Vec<i64> = (1..=k as i64).collect();
            (weighted_moment(b, tau, m, &plus)?, poly_hk(b, tau, m, 0, k)?)
        }
        "E37-literal" => (poly_hk(b, tau, m, h, 1)?, poly_hk(b, tau, 0, h, 1)?),
        other => return Err(QError::UnknownIdentity(other.to_string())),
    })
}
