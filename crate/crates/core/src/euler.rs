//! Closed forms for the higher-order q-Euler numbers and polynomials
//! `E^{(h,k)}_{m,q}(x)` and their specializations, plus the classical
//! Euler numbers and polynomials they tend to as `q -> 1`.
//!
//! The general closed form is
//!
//! ```text
//! E^{(h,k)}_{m,q}(x) = [2]_q^k / (1-q)^m * sum_j C(m,j) (-1)^j tau^j / (-q^{j+h} : q^{-1})_k
//! ```
//!
//! with `tau = q^x`. At `k = 0` the sum collapses to `[x]_q^m`, the value of
//! the empty integral.

use num_traits::{One, Zero};

use crate::error::{QError, Result};
use crate::qcore::{
    binomial, check_poles, int, pow_i64, BigRational, EvalPoint, QBase, QValue, Ring,
};

/// `(m, h, k)`: degree, weight and order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EulerIndex {
    pub m: u32,
    pub h: i64,
    pub k: u32,
}

impl EulerIndex {
    pub fn new(m: u32, h: i64, k: u32) -> Self {
        EulerIndex { m, h, k }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EulerValue {
    pub value: BigRational,
    pub index: EulerIndex,
    pub point: EvalPoint,
}

/// The general closed form over any base. `k = 0` is allowed here.
pub fn poly_hk<B: QBase>(b: &B, tau: &B::R, m: u32, h: i64, k: u32) -> Result<B::R> {
    let mut sum = B::R::zero();
    let mut tau_j = B::R::one();
    for j in 0..=m {
        let term = B::R::from_bigint(&binomial(m as u64, j as i64))
            * tau_j.clone()
            * b.recip_neg_shifted_factorial(j as i64 + h, k)?;
        sum = sum + term.signed(j as u64);
        tau_j = tau_j * tau.clone();
    }
    Ok(b.two().powu(k as u64) * b.recip_one_minus_pow(1)?.powu(m as u64) * sum)
}

/// Number form (`x = 0`).
pub fn number_hk<B: QBase>(b: &B, m: u32, h: i64, k: u32) -> Result<B::R> {
    poly_hk(b, &B::R::one(), m, h, k)
}

/// Closed form of the k-fold fermionic integral of
/// `[x + x_1 + ... + x_k]_q^m * q^{a_1 x_1 + ... + a_k x_k}`
/// for an arbitrary exponent vector. Each coordinate contributes
/// `[2]_q / (1 + q^{l + a_j + 1})` to the `l`-th binomial term.
pub fn weighted_moment<B: QBase>(b: &B, tau: &B::R, m: u32, exponents: &[i64]) -> Result<B::R> {
    let mut sum = B::R::zero();
    let mut tau_l = B::R::one();
    for l in 0..=m {
        let mut term = B::R::from_bigint(&binomial(m as u64, l as i64)) * tau_l.clone();
        for a in exponents {
            term = term * b.recip_one_plus_pow(l as i64 + a + 1)?;
        }
        sum = sum + term.signed(l as u64);
        tau_l = tau_l * tau.clone();
    }
    Ok(b.two().powu(exponents.len() as u64) * b.recip_one_minus_pow(1)?.powu(m as u64) * sum)
}

/// The integrand exponents `a_j = h - j`, `j = 1..=k`.
pub fn h_minus_j(h: i64, k: u32) -> Vec<i64> {
    (1..=k as i64).map(|j| h - j).collect()
}

fn require_order(k: u32) -> Result<()> {
    if k == 0 {
        return Err(QError::param("k", "order must be at least 1"));
    }
    Ok(())
}

pub fn euler_number_hk(idx: EulerIndex, q: &QValue) -> Result<BigRational> {
    require_order(idx.k)?;
    check_poles(q, idx.m, idx.h, idx.k)?;
    number_hk(q, idx.m, idx.h, idx.k)
}

pub fn euler_poly_hk(idx: EulerIndex, pt: &EvalPoint) -> Result<BigRational> {
    require_order(idx.k)?;
    check_poles(&pt.q, idx.m, idx.h, idx.k)?;
    poly_hk(&pt.q, &pt.tau, idx.m, idx.h, idx.k)
}

pub fn euler_value(idx: EulerIndex, pt: &EvalPoint) -> Result<EulerValue> {
    Ok(EulerValue {
        value: euler_poly_hk(idx, pt)?,
        index: idx,
        point: pt.clone(),
    })
}

/// `k = 1`: `[2]_q/(1-q)^m sum_l C(m,l) (-1)^l tau^l / (1 + q^{l+h})`.
pub fn euler_poly_h1(m: u32, h: i64, pt: &EvalPoint) -> Result<BigRational> {
    check_poles(&pt.q, m, h, 1)?;
    let q = pt.q.value();
    let one = BigRational::one();
    let mut sum = BigRational::zero();
    let mut tau_l = one.clone();
    let mut q_pow = pt.q.pow_exact(h);
    for l in 0..=m {
        let term = BigRational::from_integer(binomial(m as u64, l as i64)) * &tau_l
            / (&one + &q_pow);
        if l % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        tau_l *= &pt.tau;
        q_pow *= q;
    }
    Ok((&one + q) * sum / pow_i64(&(&one - q), m as i64)?)
}

/// `h = 0`, arranged as `(q-1)^m E = [2]^k sum_j C(m,j) (-1)^{m-j} tau^j / (-q^j : q^{-1})_k`.
pub fn euler_poly_0k(m: u32, k: u32, pt: &EvalPoint) -> Result<BigRational> {
    require_order(k)?;
    check_poles(&pt.q, m, 0, k)?;
    let q = &pt.q;
    let mut sum = BigRational::zero();
    let mut tau_j = BigRational::one();
    for j in 0..=m {
        let mut den = BigRational::one();
        for i in 0..k as i64 {
            den *= int(1) + q.pow_exact(j as i64 - i);
        }
        let term = BigRational::from_integer(binomial(m as u64, j as i64)) * &tau_j / den;
        if (m - j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        tau_j *= &pt.tau;
    }
    let two_k = pow_i64(&(int(1) + q.value()), k as i64)?;
    Ok(two_k * sum / pow_i64(&(q.value() - int(1)), m as i64)?)
}

/// `E^{(k)}_{m,q} = E^{(k,k)}_{m,q}`.
pub fn euler_number_k(m: u32, k: u32, q: &QValue) -> Result<BigRational> {
    euler_number_hk(EulerIndex::new(m, k as i64, k), q)
}

pub fn euler_poly_k(m: u32, k: u32, pt: &EvalPoint) -> Result<BigRational> {
    euler_poly_hk(EulerIndex::new(m, k as i64, k), pt)
}

/// The point `(q^l, tau * q^offset)`: base `q^l` at argument `(x + offset)/l`.
pub fn rebase_point(pt: &EvalPoint, l: i64, offset: i64) -> Result<EvalPoint> {
    if l < 1 || l % 2 == 0 {
        return Err(QError::param("l", format!("{l} is not a positive odd integer")));
    }
    let q = pt.q.power_base(l)?;
    let tau = &pt.tau * pt.q.pow_exact(offset);
    EvalPoint::new(q, tau)
}

/// The point `(q^{-1}, tau / q)`: base `q^{-1}` at argument `1 - x`.
pub fn reflect_point(pt: &EvalPoint) -> Result<EvalPoint> {
    let q = pt.q.power_base(-1)?;
    let tau = &pt.tau / pt.q.value();
    EvalPoint::new(q, tau)
}

/// `E_0, ..., E_n` from `sum_k C(n,k) E_k + E_n = 2 delta_{n,0}`.
pub fn classical_euler_numbers(n: u32) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        let mut acc = if i == 0 { int(2) } else { int(0) };
        for (k, e) in out.iter().enumerate() {
            acc -= BigRational::from_integer(binomial(i as u64, k as i64)) * e;
        }
        out.push(acc / int(2));
    }
    out
}

pub fn classical_euler_number(n: u32) -> BigRational {
    classical_euler_numbers(n).pop().expect("nonempty")
}

/// `E_n(z) = sum_k C(n,k) E_k z^{n-k}`.
pub fn classical_euler_poly(n: u32, z: &BigRational) -> BigRational {
    classical_euler_numbers(n)
        .iter()
        .enumerate()
        .map(|(k, e)| {
            BigRational::from_integer(binomial(n as u64, k as i64))
                * e
                * crate::qcore::rational::pow_u(z, (n as usize - k) as u64)
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Truncated power series with coefficients in a ring.
pub mod series {
    use super::*;

    pub fn mul<R: Ring>(a: &[R], b: &[R], len: usize) -> Vec<R> {
        let mut out = vec![R::zero(); len];
        for (i, ai) in a.iter().enumerate().take(len) {
            for (j, bj) in b.iter().enumerate().take(len - i) {
                out[i + j] = out[i + j].clone() + ai.clone() * bj.clone();
            }
        }
        out
    }

    /// Reciprocal of a series with nonzero constant term.
    pub fn inv(a: &[BigRational], len: usize) -> Result<Vec<BigRational>> {
        let a0 = a.first().filter(|c| !c.is_zero()).ok_or(QError::DivisionByZero)?;
        let mut out: Vec<BigRational> = Vec::with_capacity(len);
        out.push(a0.recip());
        for n in 1..len {
            let mut acc = BigRational::zero();
            for k in 1..=n.min(a.len() - 1) {
                acc += &a[k] * &out[n - k];
            }
            out.push(-acc / a0);
        }
        Ok(out)
    }

    /// `e^{c t}` up to `t^{len-1}`.
    pub fn exp_scaled<R: Ring>(c: &R, len: usize) -> Vec<R> {
        let mut out = Vec::with_capacity(len);
        let mut term = R::one();
        for n in 0..len {
            out.push(term.clone());
            term = term * c.clone() * R::from_rational(&crate::qcore::rat(1, n as i64 + 1));
        }
        out
    }

    pub fn factorial(n: u32) -> BigRational {
        (1..=n as i64).fold(int(1), |acc, i| acc * int(i))
    }
}

/// Order-`k` classical Euler numbers from `(2/(e^t+1))^k`, computed by
/// series inversion (independent of the convolution identities).
pub fn classical_euler_higher(n: u32, k: u32) -> Result<BigRational> {
    let len = n as usize + 1;
    let mut half_sum = series::exp_scaled(&int(1), len);
    for c in half_sum.iter_mut() {
        *c /= int(2);
    }
    half_sum[0] = int(1);
    let mut pow = vec![int(1)];
    for _ in 0..k {
        pow = series::mul(&pow, &half_sum, len);
    }
    let g = series::inv(&pow, len)?;
    Ok(&g[n as usize] * series::factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::rat;

    fn q(n: i64, d: i64) -> QValue {
        QValue::from_ratio(n, d).unwrap()
    }

    const QS: [(i64, i64); 5] = [(2, 1), (1, 2), (3, 5), (4, 1), (5, 3)];

    /// Brute-force alternating series `[2]_q sum (-1)^n q^{nh} [n+x]_q^m` in
    /// floating point, stopped by the geometric tail bound.
    fn series_oracle(m: u32, h: i64, q: f64, x: f64) -> f64 {
        let bracket = |y: f64| (1.0 - q.powf(y)) / (1.0 - q);
        let sup = 1.0 / (1.0 - q);
        let mut sum = 0.0;
        for n in 0..10_000 {
            let t = (-1f64).powi(n) * q.powi(h as i32 * n) * bracket(n as f64 + x).powi(m as i32);
            sum += t;
            let tail = q.powi(h as i32 * (n + 1)) * sup.powi(m as i32) / (1.0 - q.powi(h as i32));
            if tail < 1e-15 {
                break;
            }
        }
        (1.0 + q) * sum
    }

    #[test]
    fn first_numbers() {
        let half = q(1, 2);
        assert_eq!(euler_number_hk(EulerIndex::new(0, 1, 1), &half).unwrap(), int(1));
        assert_eq!(euler_number_hk(EulerIndex::new(1, 1, 1), &half).unwrap(), rat(-2, 5));
        assert_eq!(euler_number_hk(EulerIndex::new(2, 1, 1), &half).unwrap(), rat(-4, 15));
        assert_eq!(euler_number_hk(EulerIndex::new(0, 2, 1), &half).unwrap(), rat(6, 5));
        for (n, d) in QS {
            let qv = q(n, d);
            assert_eq!(euler_number_hk(EulerIndex::new(0, 1, 1), &qv).unwrap(), int(1));
        }
    }

    #[test]
    fn oracle_matches_first_numbers() {
        let v = series_oracle(1, 1, 0.5, 0.0);
        assert!((v + 0.4).abs() < 1e-12, "{v}");
        let v = series_oracle(2, 1, 0.5, 0.0);
        assert!((v + 4.0 / 15.0).abs() < 1e-12, "{v}");
    }

    #[test]
    fn order_zero_is_rejected_by_public_api() {
        assert!(euler_number_hk(EulerIndex::new(1, 1, 0), &q(1, 2)).is_err());
        // but the generic form gives [x]^m
        let pt = EvalPoint::at_integer(q(1, 2), 3);
        let v = poly_hk(&pt.q, &pt.tau, 2, 5, 0).unwrap();
        assert_eq!(v, rat(7, 4) * rat(7, 4));
    }

    #[test]
    fn number_zero_of_order_k() {
        for (n, d) in QS {
            let qv = q(n, d);
            for k in 1..=4u32 {
                let expect = (0..k as i64).fold(pow_i64(&(int(1) + qv.value()), k as i64).unwrap(), |acc, i| {
                    acc / (int(1) + qv.pow_exact(k as i64 - i))
                });
                assert_eq!(euler_number_k(0, k, &qv).unwrap(), expect);
            }
        }
    }

    #[test]
    fn poly_reduces_to_number_at_origin() {
        for (n, d) in QS {
            let qv = q(n, d);
            for m in 0..=5 {
                for h in -2..=4 {
                    for k in 1..=3 {
                        let idx = EulerIndex::new(m, h, k);
                        assert_eq!(
                            euler_poly_hk(idx, &EvalPoint::origin(qv.clone())).unwrap(),
                            euler_number_hk(idx, &qv).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn weight_zero_degree_is_tau_independent() {
        let qv = q(3, 5);
        for h in -2..=4 {
            let expect = (int(1) + qv.value()) / (int(1) + qv.pow_exact(h));
            for tau in [int(1), rat(7, 3), rat(-2, 9)] {
                let pt = EvalPoint::new(qv.clone(), tau).unwrap();
                assert_eq!(euler_poly_hk(EulerIndex::new(0, h, 1), &pt).unwrap(), expect);
                assert_eq!(euler_poly_h1(0, h, &pt).unwrap(), expect);
            }
        }
    }

    #[test]
    fn functional_equation_at_degree_one() {
        // q^h E_m(1) = -E_m(0) for m >= 1
        let half = q(1, 2);
        let e0 = euler_poly_hk(EulerIndex::new(1, 1, 1), &EvalPoint::origin(half.clone())).unwrap();
        let e1 = euler_poly_hk(EulerIndex::new(1, 1, 1), &EvalPoint::at_integer(half, 1)).unwrap();
        assert_eq!(e1 * rat(1, 2), -e0);
    }

    #[test]
    fn specializations_agree_on_grid() {
        for (n, d) in QS {
            let qv = q(n, d);
            let taus = [int(1), qv.value().clone(), rat(2, 7)];
            for tau in taus {
                let pt = EvalPoint::new(qv.clone(), tau).unwrap();
                for m in 0..=8 {
                    for h in -2..=4 {
                        let general = euler_poly_hk(EulerIndex::new(m, h, 1), &pt).unwrap();
                        assert_eq!(euler_poly_h1(m, h, &pt).unwrap(), general);
                    }
                    for k in 1..=3 {
                        let general = euler_poly_hk(EulerIndex::new(m, 0, k), &pt).unwrap();
                        assert_eq!(euler_poly_0k(m, k, &pt).unwrap(), general);
                        assert_eq!(
                            weighted_moment(&pt.q, &pt.tau, m, &h_minus_j(3, k)).unwrap(),
                            euler_poly_hk(EulerIndex::new(m, 3, k), &pt).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn base_case_of_order_zero_weight_zero() {
        let pt = EvalPoint::origin(q(1, 2));
        assert_eq!(euler_poly_0k(0, 1, &pt).unwrap(), (int(1) + rat(1, 2)) / int(2));
    }

    #[test]
    fn order_one_weight_one_is_q_euler() {
        // [2]_q sum (-1)^n q^n [n+x]^m
        for m in 0..=4 {
            for (x_int, x) in [(0i64, 0.0), (1, 1.0)] {
                let pt = EvalPoint::at_integer(q(1, 2), x_int);
                let exact = crate::qcore::to_f64(&euler_poly_k(m, 1, &pt).unwrap());
                assert!((exact - series_oracle(m, 1, 0.5, x)).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn rebase_examples() {
        let pt = EvalPoint::origin(q(2, 1));
        assert_eq!(rebase_point(&pt, 1, 0).unwrap(), pt);
        let r = rebase_point(&pt, 3, 2).unwrap();
        assert_eq!(r.q.value(), &int(8));
        assert_eq!(r.tau, int(4));
        assert!(rebase_point(&pt, 2, 0).is_err());
        let refl = reflect_point(&pt).unwrap();
        assert_eq!(refl.q.value(), &rat(1, 2));
        assert_eq!(refl.tau, rat(1, 2));
    }

    #[test]
    fn classical_numbers() {
        let e = classical_euler_numbers(8);
        assert_eq!(e[0], int(1));
        assert_eq!(e[1], rat(-1, 2));
        assert_eq!(e[2], int(0));
        assert_eq!(e[3], rat(1, 4));
        for n in (2..=8).step_by(2) {
            assert_eq!(e[n], int(0));
        }
        assert_eq!(classical_euler_poly(3, &int(0)), rat(1, 4));
    }

    #[test]
    fn classical_polys_at_half() {
        // brute-force expansion of 2 e^{t/2} / (e^t + 1)
        let len = 9;
        let num: Vec<BigRational> = series::exp_scaled(&rat(1, 2), len).into_iter().map(|c| c * int(2)).collect();
        let mut den = series::exp_scaled(&int(1), len);
        den[0] += int(1);
        let g = series::mul(&num, &series::inv(&den, len).unwrap(), len);
        let expect = [1, 0, -1, 0, 5, 0, -61, 0, 1385];
        for n in 0..len {
            let by_series = &g[n] * series::factorial(n as u32);
            let scaled = classical_euler_poly(n as u32, &rat(1, 2)) * pow_i64(&int(2), n as i64).unwrap();
            assert_eq!(by_series * pow_i64(&int(2), n as i64).unwrap(), scaled);
            assert_eq!(scaled, int(expect[n]));
        }
    }

    #[test]
    fn classical_higher_order_one_matches_recurrence() {
        for n in 0..=8 {
            assert_eq!(classical_euler_higher(n, 1).unwrap(), classical_euler_number(n));
        }
    }

    #[test]
    fn classical_limit_of_order_two() {
        // E^{(2)}_{m,q} -> E^{(2)}_m as q -> 1
        for m in 0..=5 {
            let target = classical_euler_higher(m, 2).unwrap();
            let mut last = None;
            for j in 3..=6 {
                let qv = QValue::new(int(1) + rat(1, 10i64.pow(j))).unwrap();
                let diff = crate::qcore::to_f64(&(euler_number_k(m, 2, &qv).unwrap() - &target)).abs();
                if let Some(prev) = last {
                    assert!(diff <= prev, "m={m} j={j}");
                }
                last = Some(diff);
            }
            assert!(last.unwrap() < 1e-3);
        }
    }
}
