//! The acceptance checks, one function per criterion, each returning a
//! pass/fail outcome with a one-line detail.

use std::time::Instant;

use num_traits::{Signed, Zero};

use crate::euler::{classical_euler_numbers, euler_number_hk, euler_poly_hk, EulerIndex};
use crate::identities::{run_registry, GridSpec};
use crate::padic::{
    closed_form, convergence_table, riemann_sum_exponents, table_to_csv, IntegrandSpec, Measure, PadicContext,
    Valuation, DEFAULT_BUDGET,
};
use crate::qcore::rational::from_f64;
use crate::qcore::{int, rat, to_f64, BigRational, EvalPoint, QValue};
use crate::zeta::{interpolation_check, mellin_check, SeriesConfig};

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "[{}] criterion {} ({}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

fn timed(id: u8, name: &'static str, f: impl FnOnce() -> (bool, String)) -> CriterionOutcome {
    let start = Instant::now();
    let (passed, detail) = f();
    CriterionOutcome {
        id,
        name,
        passed,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn fail(e: impl std::fmt::Display) -> (bool, String) {
    (false, format!("error: {e}"))
}

pub fn identity_registry(workers: usize) -> CriterionOutcome {
    timed(1, "identity registry", || match run_registry(&GridSpec::default(), None, workers) {
        Ok(run) => {
            let failed: Vec<String> = run
                .summary()
                .into_iter()
                .filter(|(_, p, t)| p != t)
                .map(|(id, p, t)| format!("{id} {p}/{t}"))
                .collect();
            let detail = if failed.is_empty() {
                format!("{} checks over {} identities, all exact ({} pole points skipped)", run.reports.len(), run.summary().len(), run.skipped)
            } else {
                format!("failing: {}", failed.join(", "))
            };
            (failed.is_empty(), detail)
        }
        Err(e) => fail(e),
    })
}

pub fn erratum_counterexamples(workers: usize) -> CriterionOutcome {
    timed(2, "erratum counterexamples", || {
        let grid = GridSpec::default();
        let mut ok = true;
        let mut parts = Vec::new();
        for (literal, corrected) in [("E14-literal", "E14c"), ("E36-literal", "E36c")] {
            let lit = match run_registry(&grid, Some(&[literal.to_string()]), workers) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            let cor = match run_registry(&grid, Some(&[corrected.to_string()]), workers) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            let lit_fail = lit.failures().count();
            let cor_fail = cor.failures().count();
            ok &= lit_fail > 0 && cor_fail == 0;
            parts.push(format!(
                "{literal} fails {lit_fail}/{}, {corrected} fails {cor_fail}/{}",
                lit.reports.len(),
                cor.reports.len()
            ));
        }
        (ok, parts.join("; "))
    })
}

pub fn padic_certification(workers: usize) -> CriterionOutcome {
    timed(3, "p-adic certification", || {
        let q = QValue::from_ratio(4, 1).expect("valid q");
        let ctx = PadicContext::new(3, 1, 1, 8).expect("valid context");
        let mut worst_gain = i64::MAX;
        let mut bad = Vec::new();
        let mut points = 0;
        for k in 1..=2u32 {
            for h in 0..=2i64 {
                for m in 0..=3u32 {
                    let spec = IntegrandSpec::fermionic(m, h, k);
                    let target = match closed_form(&spec, &q) {
                        Ok(t) => t,
                        Err(e) => return fail(e),
                    };
                    let rows = match convergence_table(&spec, &ctx, 1..=4, &q, &target, DEFAULT_BUDGET, workers) {
                        Ok(r) => r,
                        Err(e) => return fail(e),
                    };
                    points += 1;
                    let v: Vec<Valuation> = rows.iter().map(|r| r.valuation).collect();
                    let monotone = v.windows(2).all(|w| w[1] >= w[0]);
                    let gain_ok = match (v[0], v[3]) {
                        (Valuation::Finite(a), Valuation::Finite(b)) => {
                            worst_gain = worst_gain.min(b - a);
                            b - a >= 2
                        }
                        (_, Valuation::Infinite) => true,
                        (Valuation::Infinite, Valuation::Finite(_)) => false,
                    };
                    if !(monotone && gain_ok) {
                        bad.push(format!("(m={m},h={h},k={k}) {v:?}"));
                    }
                }
            }
        }
        let mut mass_ok = true;
        for level in 1..=4 {
            let c = PadicContext::new(3, level, 1, 8).expect("valid context");
            for ex in [&[0i64][..], &[0, 0]] {
                match riemann_sum_exponents(ex, 0, 0, &c, &q, Measure::Fermionic, DEFAULT_BUDGET, workers) {
                    Ok(s) => mass_ok &= s == int(1),
                    Err(e) => return fail(e),
                }
            }
        }
        let passed = bad.is_empty() && mass_ok;
        let detail = if passed {
            format!("{points} grid points certified, smallest N=1..4 gain {worst_gain}, unit integrand sums to 1 at N=1..4")
        } else {
            format!("mass exact: {mass_ok}; failing points: {}", bad.join("; "))
        };
        (passed, detail)
    })
}

/// `[2]_q sum_n (-1)^n q^n [n + x]_q^m` in doubles, stopped once the
/// geometric tail bound drops below `eps`.
fn alternating_series(m: u32, x: f64, q: f64, eps: f64) -> f64 {
    let bracket_max = 1.0 / (1.0 - q);
    let mut acc = 0.0;
    let mut n = 0u32;
    loop {
        let b = (1.0 - q.powf(n as f64 + x)) / (1.0 - q);
        let term = q.powi(n as i32) * b.powi(m as i32);
        acc += if n.is_multiple_of(2) { term } else { -term };
        let tail = (1.0 + q) * q.powi(n as i32 + 1) * bracket_max.powi(m as i32) / (1.0 - q);
        if tail < eps {
            return (1.0 + q) * acc;
        }
        n += 1;
    }
}

pub fn oracle_equivalence() -> CriterionOutcome {
    timed(4, "oracle equivalence", || {
        let q = QValue::from_ratio(1, 2).expect("valid q");
        let qf = 0.5f64;
        let mut worst: f64 = 0.0;
        for m in 0..=4u32 {
            for x in [0.0, 0.25, 0.5, 1.0, 2.0] {
                let pt = if x == (x as i64) as f64 {
                    EvalPoint::at_integer(q.clone(), x as i64)
                } else {
                    let tau = from_f64(qf.powf(x)).expect("finite");
                    EvalPoint::new(q.clone(), tau).expect("nonzero")
                };
                let closed = match euler_poly_hk(EulerIndex::new(m, 1, 1), &pt) {
                    Ok(v) => to_f64(&v),
                    Err(e) => return fail(e),
                };
                worst = worst.max((alternating_series(m, x, qf, 1e-15) - closed).abs());
            }
        }
        (worst < 1e-10, format!("max |series - closed| = {worst:.3e} over m <= 4 at q = 1/2"))
    })
}

pub fn classical_limit() -> CriterionOutcome {
    timed(5, "classical limit", || {
        let classical = classical_euler_numbers(8);
        let head_ok = classical[..4] == [int(1), rat(-1, 2), int(0), rat(1, 4)];
        let mut bad = Vec::new();
        for m in 0..=8u32 {
            let mut diffs: Vec<BigRational> = Vec::new();
            for j in 2..=6u32 {
                let q = QValue::new(int(1) + rat(1, 10i64.pow(j))).expect("valid q");
                match euler_number_hk(EulerIndex::new(m, 1, 1), &q) {
                    Ok(v) => diffs.push((v - &classical[m as usize]).abs()),
                    Err(e) => return fail(e),
                }
            }
            // an identically zero difference is exact agreement at every q
            let exact = diffs.iter().all(Zero::is_zero);
            if !exact && !diffs.windows(2).all(|w| w[1] < w[0]) {
                bad.push(m);
            }
        }
        let passed = head_ok && bad.is_empty();
        let detail = if passed {
            "|E^(1,1)_m(q_j) - E_m| strictly decreasing for j = 2..6, m <= 8 (m = 0 exact); E_0..E_3 = 1, -1/2, 0, 1/4".to_string()
        } else {
            format!("classical head ok: {head_ok}; non-decreasing m: {bad:?}")
        };
        (passed, detail)
    })
}

pub fn zeta_interpolation() -> CriterionOutcome {
    timed(6, "zeta interpolation", || {
        let cfg = SeriesConfig::default();
        let mut worst: f64 = 0.0;
        for m in 0..=6u32 {
            for q in [rat(3, 10), rat(1, 2), rat(7, 10)] {
                for h in [1i64, 2] {
                    for x in [rat(1, 2), int(1)] {
                        match interpolation_check(m, &x, &q, h, &cfg) {
                            Ok(r) => worst = worst.max(r.abs_diff),
                            Err(e) => return fail(e),
                        }
                    }
                }
            }
        }
        (worst < 1e-10, format!("max |zeta(-m) - E^(h,1)_m| = {worst:.3e}"))
    })
}

pub fn mellin() -> CriterionOutcome {
    timed(7, "Mellin check", || {
        let cfg = SeriesConfig::default();
        let mut parts = Vec::new();
        let mut ok = true;
        for (s, x, q, h) in [(2.0, 1.0, 0.5, 1i64), (1.0, 0.5, 0.3, 2)] {
            match mellin_check(s, x, q, h, &cfg) {
                Ok(r) => {
                    ok &= r.abs_diff < 1e-6;
                    parts.push(format!("s={s},x={x},q={q},h={h}: {:.3e}", r.abs_diff));
                }
                Err(e) => return fail(e),
            }
        }
        (ok, parts.join("; "))
    })
}

/// Library-level determinism of the verify and integrate outputs.
pub fn determinism() -> CriterionOutcome {
    timed(8, "determinism", || {
        let grid = GridSpec::default();
        let q = QValue::from_ratio(4, 1).expect("valid q");
        let ctx = PadicContext::new(3, 1, 1, 8).expect("valid context");
        let spec = IntegrandSpec::fermionic(3, 1, 2);
        let target = match closed_form(&spec, &q) {
            Ok(t) => t,
            Err(e) => return fail(e),
        };
        let mut outputs = Vec::new();
        for workers in [1usize, 2, 8] {
            let verify = match run_registry(&grid, None, workers) {
                Ok(r) => r.to_json_lines(),
                Err(e) => return fail(e),
            };
            let integrate = match convergence_table(&spec, &ctx, 1..=4, &q, &target, DEFAULT_BUDGET, workers)
                .and_then(|rows| table_to_csv(&rows, true))
            {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            outputs.push((verify, integrate));
        }
        let same = outputs.windows(2).all(|w| w[0] == w[1]);
        (same, format!("verify and integrate outputs identical for 1, 2, 8 workers: {same}"))
    })
}

/// Every criterion in order.
pub fn run_all(workers: usize) -> Vec<CriterionOutcome> {
    vec![
        identity_registry(workers),
        erratum_counterexamples(workers),
        padic_certification(workers),
        oracle_equivalence(),
        classical_limit(),
        zeta_interpolation(),
        mellin(),
        determinism(),
    ]
}
