//! Level-N q-Volkenborn sums over `Z_p` (and `X_d`) and p-adic comparison
//! against the closed forms.
//!
//! The fermionic measure gives `x + d p^N Z_p` the weight
//! `(-1)^x q^x [2]_q / (1 + q^{d p^N})`; the bosonic one `q^x / [d p^N]_q`.
//! A k-fold sum of `[shift + x_1 + ... + x_k]_q^m q^{a_1 x_1 + ... + a_k x_k}`
//! factors over coordinates except through `x_1 + ... + x_k`, so the weights
//! are convolved into a distribution of that sum and the bracket power is
//! applied once per value of it.
//!
//! Sums are exact rationals. With `q` admissible (`v_p(q - 1) >= 1`) their
//! denominators are p-units, and agreement with a target is measured by the
//! p-adic valuation of the difference.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{QError, Result};
use crate::euler::weighted_moment;
use crate::identities::pool;
use crate::qcore::rational::int_valuation;
use crate::qcore::{BigRational, QBase, QValue};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// `QEULER_BUDGET` if set and parseable, else [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u128 {
    std::env::var("QEULER_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    /// `mu_q`
    Bosonic,
    /// `mu_{-q}`
    Fermionic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightPattern {
    /// exponents `(h - j) x_j`
    HMinusJ,
    /// exponents `(m - j) x_j`, no bracket factor
    PurePower,
    /// `(h - 1) x_1`, one coordinate
    K1Weight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegrandSpec {
    pub m: u32,
    pub h: i64,
    pub k: u32,
    pub shift: i64,
    pub mode: Measure,
    pub pattern: WeightPattern,
}

impl IntegrandSpec {
    pub fn fermionic(m: u32, h: i64, k: u32) -> Self {
        IntegrandSpec {
            m,
            h,
            k,
            shift: 0,
            mode: Measure::Fermionic,
            pattern: WeightPattern::HMinusJ,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(QError::param("k", "at least one coordinate is required"));
        }
        if self.pattern == WeightPattern::K1Weight && self.k != 1 {
            return Err(QError::param("k", "the k1 weight pattern has exactly one coordinate"));
        }
        if self.shift < 0 {
            return Err(QError::param("shift", "must be nonnegative"));
        }
        Ok(())
    }

    /// `a_j` in `q^{sum a_j x_j}`.
    pub fn exponents(&self) -> Vec<i64> {
        match self.pattern {
            WeightPattern::HMinusJ | WeightPattern::K1Weight => {
                (1..=self.k as i64).map(|j| self.h - j).collect()
            }
            WeightPattern::PurePower => (1..=self.k as i64).map(|j| self.m as i64 - j).collect(),
        }
    }

    pub fn bracket_power(&self) -> u32 {
        match self.pattern {
            WeightPattern::PurePower => 0,
            _ => self.m,
        }
    }
}

/// `(p, N, d, M)`: prime, level, `X_d` modulus and comparison precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PadicContext {
    pub p: u64,
    pub level: u32,
    pub d: u64,
    pub precision: u32,
}

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut i = 3;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 2;
    }
    true
}

impl PadicContext {
    pub fn new(p: u64, level: u32, d: u64, precision: u32) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(QError::param("p", format!("{p} is not an odd prime")));
        }
        if level < 1 {
            return Err(QError::param("N", "level must be at least 1"));
        }
        if precision < 1 {
            return Err(QError::param("M", "precision must be at least 1"));
        }
        if d < 1 || d.gcd(&p) != 1 {
            return Err(QError::param("d", format!("{d} must be positive and prime to p")));
        }
        Ok(PadicContext {
            p,
            level,
            d,
            precision,
        })
    }

    /// `d p^N`, the number of residues per coordinate.
    pub fn period(&self) -> Result<u64> {
        self.p
            .checked_pow(self.level)
            .and_then(|x| x.checked_mul(self.d))
            .ok_or_else(|| QError::param("N", "d p^N overflows"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    fn plus(self, n: i64) -> Valuation {
        match self {
            Valuation::Finite(v) => Valuation::Finite(v + n),
            Valuation::Infinite => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

pub fn valuation(r: &BigRational, p: u64) -> Valuation {
    if r.is_zero() {
        return Valuation::Infinite;
    }
    Valuation::Finite(int_valuation(r.numer(), p) as i64 - int_valuation(r.denom(), p) as i64)
}

/// `|q - 1|_p < p^{-1/(p-1)}`, i.e. `v_p(q - 1) >= 1` for odd `p`.
pub fn admissible_q(q: &BigRational, p: u64) -> bool {
    match valuation(&(q - BigRational::one()), p) {
        Valuation::Infinite => false,
        Valuation::Finite(v) => v >= 1,
    }
}

/// A rational with p-unit denominator reduced mod `p^M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicResidue {
    pub p: u64,
    pub precision: u32,
    pub residue: BigInt,
}

impl PadicResidue {
    pub fn from_rational(r: &BigRational, p: u64, precision: u32) -> Result<Self> {
        let modulus = num_traits::pow(BigInt::from(p), precision as usize);
        let den = r.denom().mod_floor(&modulus);
        let g = den.extended_gcd(&modulus);
        if !g.gcd.is_one() {
            return Err(QError::param("r", "denominator is divisible by p"));
        }
        let inv = g.x.mod_floor(&modulus);
        let residue = (r.numer() * inv).mod_floor(&modulus);
        Ok(PadicResidue {
            p,
            precision,
            residue,
        })
    }
}

fn require_admissible(q: &QValue, p: u64) -> Result<()> {
    if !admissible_q(q.value(), p) {
        return Err(QError::param("q", format!("{q} is not admissible for p = {p}: need v_p(q - 1) >= 1")));
    }
    Ok(())
}

/// The normalizing constant shared by every weight of one coordinate.
fn mass_constant(q: &QValue, period: u64, mode: Measure) -> Result<BigRational> {
    let period = period as i64;
    match mode {
        Measure::Fermionic => Ok(q.two() * q.recip_one_plus_pow(period)?),
        Measure::Bosonic => Ok((BigRational::one() - q.value()) * q.recip_one_minus_pow(period)?),
    }
}

pub fn measure_weight(x: u64, ctx: &PadicContext, q: &QValue, mode: Measure) -> Result<BigRational> {
    let period = ctx.period()?;
    if x >= period {
        return Err(QError::param("x", format!("residue {x} outside [0, {period})")));
    }
    let w = mass_constant(q, period, mode)? * q.pow_exact(x as i64);
    Ok(if mode == Measure::Fermionic && x % 2 == 1 { -w } else { w })
}

fn check_budget(period: u64, k: u32, budget: u128) -> Result<u128> {
    let needed = (period as u128).checked_pow(k).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(QError::Budget { needed, budget });
    }
    Ok(needed)
}

/// Level-N k-fold sum for an arbitrary exponent vector.
pub fn riemann_sum_exponents(
    exponents: &[i64],
    bracket_power: u32,
    shift: i64,
    ctx: &PadicContext,
    q: &QValue,
    mode: Measure,
    budget: u128,
    workers: usize,
) -> Result<BigRational> {
    if exponents.is_empty() {
        return Err(QError::param("k", "at least one coordinate is required"));
    }
    if mode == Measure::Fermionic && ctx.d.is_multiple_of(2) {
        return Err(QError::param("d", "the fermionic measure needs an odd period d p^N"));
    }
    require_admissible(q, ctx.p)?;
    let period = ctx.period()?;
    check_budget(period, exponents.len() as u32, budget)?;
    let n = period as usize;
    let constant = mass_constant(q, period, mode)?;

    let coordinate = |a: i64| -> Vec<BigRational> {
        let step = q.pow_exact(a + 1);
        let mut out = Vec::with_capacity(n);
        let mut pw = BigRational::one();
        for x in 0..n {
            out.push(if mode == Measure::Fermionic && x % 2 == 1 { -pw.clone() } else { pw.clone() });
            pw *= &step;
        }
        out
    };

    pool(workers).install(|| {
        let mut dist = coordinate(exponents[0]);
        for &a in &exponents[1..] {
            let w = coordinate(a);
            let prev = &dist;
            let len = prev.len() + n - 1;
            dist = (0..len)
                .into_par_iter()
                .map(|s| {
                    let lo = s.saturating_sub(prev.len() - 1);
                    let hi = s.min(n - 1);
                    (lo..=hi).fold(BigRational::zero(), |acc, x| acc + &prev[s - x] * &w[x])
                })
                .collect();
        }

        // [shift + s]_q for s = 0, 1, ... by [y + 1] = [y] + q^y
        let mut brackets = Vec::with_capacity(dist.len());
        let mut br = q.bracket_int(shift)?;
        let mut qy = q.pow_exact(shift);
        for _ in 0..dist.len() {
            brackets.push(br.clone());
            br += &qy;
            qy *= q.value();
        }
        let terms: Vec<BigRational> = dist
            .par_iter()
            .zip(brackets.par_iter())
            .map(|(w, b)| w * crate::qcore::rational::pow_u(b, bracket_power as u64))
            .collect();
        let total = terms.into_iter().fold(BigRational::zero(), |a, b| a + b);
        Ok(total * crate::qcore::rational::pow_u(&constant, exponents.len() as u64))
    })
}

pub fn riemann_sum(spec: &IntegrandSpec, ctx: &PadicContext, q: &QValue, budget: u128, workers: usize) -> Result<BigRational> {
    spec.validate()?;
    riemann_sum_exponents(
        &spec.exponents(),
        spec.bracket_power(),
        spec.shift,
        ctx,
        q,
        spec.mode,
        budget,
        workers,
    )
}

/// The limit of the fermionic sums, from the product-of-geometric-series
/// closed form. The bosonic family has no rational closed form here.
pub fn closed_form(spec: &IntegrandSpec, q: &QValue) -> Result<BigRational> {
    spec.validate()?;
    if spec.mode == Measure::Bosonic {
        return Err(QError::param("mode", "no closed-form target for the bosonic measure; pass one explicitly"));
    }
    let tau = q.pow_exact(spec.shift);
    weighted_moment(q, &tau, spec.bracket_power(), &spec.exponents())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub level: u32,
    pub terms: u128,
    pub valuation: Valuation,
    pub residue: PadicResidue,
    pub elapsed_ms: u128,
}

/// `v_p(S_N - target)` for each level in `levels`.
pub fn convergence_table(
    spec: &IntegrandSpec,
    ctx: &PadicContext,
    levels: std::ops::RangeInclusive<u32>,
    q: &QValue,
    target: &BigRational,
    budget: u128,
    workers: usize,
) -> Result<Vec<ConvergenceRow>> {
    spec.validate()?;
    require_admissible(q, ctx.p)?;
    // check every level up front so nothing runs if the last one is too big
    for level in levels.clone() {
        let c = PadicContext::new(ctx.p, level, ctx.d, ctx.precision)?;
        check_budget(c.period()?, spec.k, budget)?;
    }
    let mut rows = Vec::new();
    for level in levels {
        let c = PadicContext::new(ctx.p, level, ctx.d, ctx.precision)?;
        let start = Instant::now();
        let s = riemann_sum(spec, &c, q, budget, workers)?;
        let elapsed_ms = start.elapsed().as_millis();
        rows.push(ConvergenceRow {
            level,
            terms: (c.period()? as u128).pow(spec.k),
            valuation: valuation(&(&s - target), ctx.p),
            residue: PadicResidue::from_rational(&s, ctx.p, ctx.precision)?,
            elapsed_ms,
        });
    }
    Ok(rows)
}

/// Nondecreasing valuations that gain at least one over every two levels.
pub fn certify_convergence(rows: &[ConvergenceRow]) -> bool {
    let v: Vec<Valuation> = rows.iter().map(|r| r.valuation).collect();
    v.windows(2).all(|w| w[1] >= w[0]) && v.windows(3).all(|w| w[2] >= w[0].plus(1))
}

/// CSV with columns `N,terms,valuation,elapsed_ms`; `stable` drops the
/// timing column so repeated runs are byte-identical.
pub fn table_to_csv(rows: &[ConvergenceRow], stable: bool) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| QError::param("output", e.to_string());
    let mut header = vec!["N", "terms", "valuation"];
    if !stable {
        header.push("elapsed_ms");
    }
    w.write_record(&header).map_err(io)?;
    for r in rows {
        let mut rec = vec![r.level.to_string(), r.terms.to_string(), r.valuation.to_string()];
        if !stable {
            rec.push(r.elapsed_ms.to_string());
        }
        w.write_record(&rec).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| QError::param("output", e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

/// Sign-agnostic helper for display: `-r` has the same valuation as `r`.
pub fn abs_valuation(r: &BigRational, p: u64) -> Valuation {
    valuation(&r.abs(), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{euler_number_hk, EulerIndex};
    use crate::qcore::{int, rat, Ring};

    fn four() -> QValue {
        QValue::from_ratio(4, 1).unwrap()
    }

    fn ctx(level: u32) -> PadicContext {
        PadicContext::new(3, level, 1, 8).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(admissible_q(&int(4), 3));
        assert!(!admissible_q(&int(2), 3));
        assert!(admissible_q(&int(10), 3));
        assert!(admissible_q(&rat(7, 4), 3));
        assert!(!admissible_q(&int(1), 3));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&rat(9, 2), 3), Valuation::Finite(2));
        assert_eq!(valuation(&int(0), 3), Valuation::Infinite);
        assert_eq!(valuation(&rat(1, 3), 3), Valuation::Finite(-1));
        assert_eq!(abs_valuation(&rat(-18, 5), 3), Valuation::Finite(2));
    }

    #[test]
    fn context_validation() {
        assert!(PadicContext::new(2, 1, 1, 1).is_err());
        assert!(PadicContext::new(9, 1, 1, 1).is_err());
        assert!(PadicContext::new(3, 0, 1, 1).is_err());
        assert!(PadicContext::new(3, 1, 6, 1).is_err());
        assert!(PadicContext::new(5, 2, 3, 4).is_ok());
    }

    #[test]
    fn residue_reduction() {
        // 1/2 mod 27 = 14
        let r = PadicResidue::from_rational(&rat(1, 2), 3, 3).unwrap();
        assert_eq!(r.residue, BigInt::from(14));
        assert!(PadicResidue::from_rational(&rat(1, 3), 3, 3).is_err());
    }

    #[test]
    fn first_fermionic_weight() {
        let c = ctx(2);
        let q = four();
        assert_eq!(
            measure_weight(0, &c, &q, Measure::Fermionic).unwrap(),
            int(5) / (int(1) + q.pow_exact(9))
        );
        assert!(measure_weight(9, &c, &q, Measure::Fermionic).is_err());
    }

    #[test]
    fn total_mass_is_one() {
        for (n, d) in [(4, 1), (7, 4), (10, 1), (-2, 1)] {
            let q = QValue::from_ratio(n, d).unwrap();
            for level in 1..=3 {
                for mode in [Measure::Fermionic, Measure::Bosonic] {
                    let c = ctx(level);
                    let total = (0..c.period().unwrap())
                        .map(|x| measure_weight(x, &c, &q, mode).unwrap())
                        .fold(int(0), |a, b| a + b);
                    assert_eq!(total, int(1));
                }
            }
        }
    }

    #[test]
    fn degree_zero_sum_is_exactly_one() {
        let s = riemann_sum(&IntegrandSpec::fermionic(0, 1, 1), &ctx(1), &four(), DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(s, int(1));
    }

    #[test]
    fn weight_two_converges_to_five_seventeenths() {
        let spec = IntegrandSpec::fermionic(0, 2, 1);
        let target = rat(5, 17);
        assert_eq!(closed_form(&spec, &four()).unwrap(), target);
        let rows = convergence_table(&spec, &ctx(1), 1..=4, &four(), &target, DEFAULT_BUDGET, 1).unwrap();
        let v: Vec<_> = rows.iter().map(|r| r.valuation).collect();
        assert!(v.windows(2).all(|w| w[1] > w[0]), "{v:?}");
        assert!(certify_convergence(&rows));
    }

    #[test]
    fn order_two_degree_zero_converges() {
        let spec = IntegrandSpec::fermionic(0, 2, 2);
        let q = four();
        let expect = int(25) / (int(17) * int(5));
        assert_eq!(closed_form(&spec, &q).unwrap(), expect);
        let rows = convergence_table(&spec, &ctx(1), 1..=3, &q, &expect, DEFAULT_BUDGET, 1).unwrap();
        assert!(certify_convergence(&rows));
    }

    #[test]
    fn degree_one_converges_to_euler_number() {
        let q = four();
        let target = euler_number_hk(EulerIndex::new(1, 1, 1), &q).unwrap();
        let rows = convergence_table(&IntegrandSpec::fermionic(1, 1, 1), &ctx(1), 1..=4, &q, &target, DEFAULT_BUDGET, 1).unwrap();
        let v: Vec<_> = rows.iter().map(|r| r.valuation).collect();
        assert!(v.iter().all(|x| matches!(x, Valuation::Finite(_))));
        assert!(v.windows(2).all(|w| w[1] > w[0]), "{v:?}");
    }

    #[test]
    fn wrong_target_is_detected() {
        let q = four();
        let target = euler_number_hk(EulerIndex::new(1, 1, 1), &q).unwrap() + int(1);
        let rows = convergence_table(&IntegrandSpec::fermionic(1, 1, 1), &ctx(1), 1..=4, &q, &target, DEFAULT_BUDGET, 1).unwrap();
        assert!(rows.iter().all(|r| r.valuation == Valuation::Finite(0)));
        assert!(!certify_convergence(&rows));
    }

    #[test]
    fn pure_power_family() {
        let q = four();
        for k in 1..=2u32 {
            for m in 0..=3u32 {
                let spec = IntegrandSpec {
                    pattern: WeightPattern::PurePower,
                    ..IntegrandSpec::fermionic(m, 0, k)
                };
                let expect = q.two().powu(k as u64) * q.recip_neg_shifted_factorial(m as i64, k).unwrap();
                let target = closed_form(&spec, &q).unwrap();
                assert_eq!(target, expect);
                let rows = convergence_table(&spec, &ctx(1), 1..=3, &q, &target, DEFAULT_BUDGET, 1).unwrap();
                assert!(certify_convergence(&rows), "k={k} m={m}");
            }
        }
    }

    #[test]
    fn shifted_integrand_matches_polynomial() {
        let q = four();
        let spec = IntegrandSpec { shift: 2, ..IntegrandSpec::fermionic(2, 1, 2) };
        let target = crate::euler::euler_poly_hk(EulerIndex::new(2, 1, 2), &crate::qcore::EvalPoint::at_integer(q.clone(), 2)).unwrap();
        assert_eq!(closed_form(&spec, &q).unwrap(), target);
        let rows = convergence_table(&spec, &ctx(1), 1..=3, &q, &target, DEFAULT_BUDGET, 1).unwrap();
        assert!(certify_convergence(&rows));
    }

    #[test]
    fn d_invariance() {
        let q = four();
        let spec = IntegrandSpec::fermionic(2, 1, 1);
        let target = closed_form(&spec, &q).unwrap();
        let zp = convergence_table(&spec, &ctx(1), 1..=3, &q, &target, DEFAULT_BUDGET, 1).unwrap();
        let xd = convergence_table(&spec, &PadicContext::new(3, 1, 5, 8).unwrap(), 1..=3, &q, &target, DEFAULT_BUDGET, 1).unwrap();
        assert!(certify_convergence(&zp));
        assert!(certify_convergence(&xd));
    }

    #[test]
    fn even_period_rejected_for_fermionic() {
        let c = PadicContext::new(3, 1, 2, 4).unwrap();
        let err = riemann_sum(&IntegrandSpec::fermionic(0, 1, 1), &c, &four(), DEFAULT_BUDGET, 1);
        assert!(matches!(err, Err(QError::InvalidParam { key: "d", .. })));
    }

    #[test]
    fn bosonic_mass_through_riemann_sum() {
        let spec = IntegrandSpec {
            mode: Measure::Bosonic,
            h: 1,
            ..IntegrandSpec::fermionic(0, 1, 1)
        };
        let s = riemann_sum(&spec, &ctx(2), &four(), DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(s, int(1));
        assert!(closed_form(&spec, &four()).is_err());
    }

    #[test]
    fn literal_plus_sign_weight_has_its_own_limit() {
        // the q^{+j x_j} integrand converges to its own closed form, not to E^{(0,k)}
        let q = four();
        let ex = vec![1i64, 2];
        let own = weighted_moment(&q, &int(1), 1, &ex).unwrap();
        let e0k = euler_number_hk(EulerIndex::new(1, 0, 2), &q).unwrap();
        assert_ne!(own, e0k);
        let mut prev = Valuation::Finite(i64::MIN);
        for level in 1..=3 {
            let s = riemann_sum_exponents(&ex, 1, 0, &ctx(level), &q, Measure::Fermionic, DEFAULT_BUDGET, 1).unwrap();
            let v = valuation(&(s - &own), 3);
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn inadmissible_q_and_budget() {
        let q = QValue::from_ratio(2, 1).unwrap();
        let e = riemann_sum(&IntegrandSpec::fermionic(0, 1, 1), &ctx(1), &q, DEFAULT_BUDGET, 1);
        assert!(matches!(e, Err(QError::InvalidParam { key: "q", .. })));
        let e = riemann_sum(&IntegrandSpec::fermionic(0, 1, 3), &ctx(5), &four(), DEFAULT_BUDGET, 1);
        assert!(matches!(e, Err(QError::Budget { .. })));
    }

    #[test]
    fn k1_pattern_requires_one_coordinate() {
        let spec = IntegrandSpec { pattern: WeightPattern::K1Weight, ..IntegrandSpec::fermionic(1, 2, 2) };
        assert!(spec.validate().is_err());
    }

    #[test]
    fn sum_independent_of_workers() {
        let spec = IntegrandSpec::fermionic(3, 0, 2);
        let a = riemann_sum(&spec, &ctx(3), &four(), DEFAULT_BUDGET, 1).unwrap();
        let b = riemann_sum(&spec, &ctx(3), &four(), DEFAULT_BUDGET, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn csv_shape() {
        let spec = IntegrandSpec::fermionic(0, 1, 1);
        let rows = convergence_table(&spec, &ctx(1), 1..=2, &four(), &int(1), DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(table_to_csv(&rows, true).unwrap(), "N,terms,valuation\n1,3,inf\n2,9,inf\n");
        let timed = table_to_csv(&rows, false).unwrap();
        assert!(timed.starts_with("N,terms,valuation,elapsed_ms\n1,3,inf,"));
    }
}
