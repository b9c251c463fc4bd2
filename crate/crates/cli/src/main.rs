//! `qeuler`: tables, identity verification, p-adic convergence reports and
//! zeta evaluation.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
//! 3 budget exceeded.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use qeuler::euler::{euler_number_hk, euler_poly_hk, EulerIndex};
use qeuler::identities::{certify_registry, entry, run_registry, GridSpec, Kind};
use qeuler::padic::{
    budget_from_env, certify_convergence, closed_form, convergence_table, table_to_csv, IntegrandSpec, Measure,
    PadicContext, WeightPattern,
};
use qeuler::qcore::{format_rational, parse_rational, BigRational, EvalPoint, QValue};
use qeuler::selftest;
use qeuler::zeta::{format_complex, gen_fn, interpolation_check, mellin_check, zeta_eq, SeriesConfig};
use qeuler::QError;

#[derive(Parser, Debug)]
#[command(name = "qeuler", version, about = "Higher-order q-Euler numbers, identities, p-adic sums and zeta values")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    output: Option<String>,
    /// Maximum number of multi-indices for a p-adic sum (default: QEULER_BUDGET or 10^7)
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Worker threads; results do not depend on this
    #[arg(long, global = true, default_value_t = default_workers())]
    workers: usize,
    /// Omit timing columns so repeated runs are byte-identical
    #[arg(long, global = true)]
    stable: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Fermionic,
    Bosonic,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PatternArg {
    HMinusJ,
    PurePower,
    K1,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of E^(h,k)_m(q) for m = 0..m_max
    Numbers {
        #[arg(long, default_value_t = 6)]
        m_max: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        h: i64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Table of E^(h,k)_m(x) at q^x = tau for m = 0..m_max
    Poly {
        #[arg(long, default_value_t = 6)]
        m_max: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        h: i64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Integer argument x (tau = q^x)
        #[arg(long, allow_hyphen_values = true, conflicts_with = "tau")]
        x: Option<i64>,
        /// tau = q^x given directly
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
    },
    /// Check the identity registry by exact equality
    Verify {
        /// Identity ids (comma separated or repeated); default: every corrected identity
        #[arg(long = "id", value_delimiter = ',')]
        ids: Vec<String>,
        /// Prove each grid instance for all q by a degree bound
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        m_max: Option<u32>,
        #[arg(long)]
        k_max: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        h_min: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        h_max: Option<i64>,
        #[arg(long, value_delimiter = ',')]
        ls: Option<Vec<u32>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        qs: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        tau_exps: Option<Vec<i64>>,
    },
    /// p-adic convergence of level-N Riemann sums to the closed form
    Integrate {
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        h: i64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        shift: i64,
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Level or range of levels, e.g. 3 or 1..4
        #[arg(long = "N", default_value = "1..3")]
        levels: String,
        #[arg(long, default_value_t = 1)]
        d: u64,
        /// Precision M of the reported residues mod p^M
        #[arg(long, default_value_t = 8)]
        precision: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Fermionic)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = PatternArg::HMinusJ)]
        pattern: PatternArg,
        /// Limit to compare against (required for the bosonic measure)
        #[arg(long, allow_hyphen_values = true)]
        target: Option<String>,
    },
    /// The q-Euler zeta function and related checks
    Zeta {
        /// s as `a` or `a+bi`
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value = "1")]
        x: String,
        /// q as `a` or `a+bi`, |q| < 1
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        h: i64,
        #[arg(long, default_value_t = 1e-18)]
        eps: f64,
        #[arg(long, default_value_t = 1_000_000)]
        max_terms: usize,
        /// Compare zeta(-m) with the closed form (s must be a nonpositive integer)
        #[arg(long)]
        check_interpolation: bool,
        /// Compare the Mellin integral with the series (real s > 0)
        #[arg(long)]
        mellin: bool,
        /// Evaluate the generating function F_q(t, x) instead
        #[arg(long, allow_hyphen_values = true)]
        gen_fn: Option<String>,
    },
    /// Run every acceptance criterion
    Selftest,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

struct Output {
    body: String,
    /// Everything passed; otherwise exit 1 after writing the body.
    ok: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, ok: true }
    }
}

fn parse_q(s: &str) -> Result<QValue, QError> {
    QValue::new(parse_rational(s)?)
}

fn parse_levels(s: &str) -> Result<RangeInclusive<u32>, QError> {
    let bad = || QError::param("N", format!("`{s}` is not a level or a range a..b"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (s.trim(), s.trim()),
    };
    let a: u32 = a.parse().map_err(|_| bad())?;
    let b: u32 = b.parse().map_err(|_| bad())?;
    if a < 1 || b < a {
        return Err(bad());
    }
    Ok(a..=b)
}

fn parse_complex(key: &'static str, s: &str) -> Result<Complex64, QError> {
    let t = s.trim();
    let z = if let Some(body) = t.strip_suffix('i') {
        // split at the last sign that is not an exponent sign or the leading one
        let bytes = body.as_bytes();
        let cut = (1..bytes.len())
            .rev()
            .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
        let (re, im) = match cut {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            other => other,
        };
        Complex64::new(re.parse().ok().unwrap_or(f64::NAN), im.parse().ok().unwrap_or(f64::NAN))
    } else {
        Complex64::new(t.parse().ok().unwrap_or(f64::NAN), 0.0)
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(QError::param(key, format!("`{s}` is not a number a or a+bi")))
    }
}

/// Shortest round-trip decimal.
fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String, QError> {
    let io = |e: csv::Error| QError::param("output", e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| QError::param("output", e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

fn json_lines(values: impl IntoIterator<Item = serde_json::Value>) -> String {
    let mut out = String::new();
    for v in values {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

fn table(format: Format, header: &[&str], rows: Vec<Vec<String>>) -> Result<String, QError> {
    match format {
        Format::Csv => csv_text(header, &rows),
        Format::Json => Ok(json_lines(rows.iter().map(|r| {
            let obj: serde_json::Map<String, serde_json::Value> =
                header.iter().zip(r).map(|(k, v)| (k.to_string(), json!(v))).collect();
            serde_json::Value::Object(obj)
        }))),
        Format::Human => {
            let widths: Vec<usize> = (0..header.len())
                .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0))
                .collect();
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            let mut out = line(header.to_vec());
            out.push('\n');
            for r in &rows {
                out.push_str(&line(r.iter().map(String::as_str).collect()));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn cmd_numbers(format: Format, m_max: u32, h: i64, k: u32, q: &str) -> Result<Output, QError> {
    let q = parse_q(q)?;
    let mut rows = Vec::new();
    for m in 0..=m_max {
        let v = euler_number_hk(EulerIndex::new(m, h, k), &q)?;
        rows.push(vec![m.to_string(), format_rational(&v)]);
    }
    Ok(Output::ok(table(format, &["m", "value"], rows)?))
}

fn cmd_poly(format: Format, m_max: u32, h: i64, k: u32, q: &str, x: Option<i64>, tau: Option<&str>) -> Result<Output, QError> {
    let q = parse_q(q)?;
    let pt = match (x, tau) {
        (Some(x), None) => EvalPoint::at_integer(q, x),
        (None, Some(t)) => EvalPoint::new(q, parse_rational(t)?)?,
        (None, None) => return Err(QError::param("x", "give --x or --tau")),
        (Some(_), Some(_)) => return Err(QError::param("tau", "give only one of --x and --tau")),
    };
    let mut rows = Vec::new();
    for m in 0..=m_max {
        let v = euler_poly_hk(EulerIndex::new(m, h, k), &pt)?;
        rows.push(vec![m.to_string(), format_rational(&v)]);
    }
    Ok(Output::ok(table(format, &["m", "value"], rows)?))
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    format: Format,
    workers: usize,
    ids: &[String],
    certify: bool,
    grid: GridSpec,
) -> Result<Output, QError> {
    let filter = (!ids.is_empty()).then_some(ids);
    if let Some(ids) = filter {
        for id in ids {
            entry(id).ok_or_else(|| QError::UnknownIdentity(id.clone()))?;
        }
    }
    let mut notes = String::new();
    if let Some(ids) = filter {
        for id in ids {
            let e = entry(id).expect("checked above");
            if e.kind == Kind::Literal {
                if let Some(note) = e.erratum {
                    notes.push_str(&format!("{id}: literal form as printed; erratum: {note}\n"));
                }
            }
        }
    }
    if certify {
        let reports = certify_registry(&grid, filter, workers)?;
        let ok = reports.iter().all(|r| r.certified);
        let body = match format {
            Format::Json => json_lines(reports.iter().map(|r| r.to_json())),
            Format::Csv | Format::Human => {
                let rows = reports
                    .iter()
                    .map(|r| {
                        vec![
                            r.id.to_string(),
                            r.params.to_json().to_string(),
                            r.degree_bound.to_string(),
                            r.points.to_string(),
                            r.certified.to_string(),
                            r.counterexample.as_ref().map(format_rational).unwrap_or_default(),
                        ]
                    })
                    .collect();
                table(format, &["id", "params", "degree_bound", "points", "certified", "counterexample"], rows)?
            }
        };
        if !notes.is_empty() {
            eprint!("{notes}");
        }
        return Ok(Output { body, ok });
    }
    let run = run_registry(&grid, filter, workers)?;
    let body = match format {
        Format::Json => run.to_json_lines(),
        Format::Csv => {
            let rows = run
                .reports
                .iter()
                .map(|r| {
                    vec![
                        r.id.to_string(),
                        r.params.to_json().to_string(),
                        format_rational(&r.lhs),
                        format_rational(&r.rhs),
                        r.pass.to_string(),
                    ]
                })
                .collect::<Vec<_>>();
            csv_text(&["id", "params", "lhs", "rhs", "pass"], &rows)?
        }
        Format::Human => {
            let rows = run
                .summary()
                .into_iter()
                .map(|(id, p, t)| vec![id.to_string(), p.to_string(), t.to_string(), if p == t { "ok" } else { "FAIL" }.to_string()])
                .collect();
            let mut s = table(Format::Human, &["id", "passed", "total", "status"], rows)?;
            if let Some(f) = run.failures().next() {
                s.push_str(&format!("first failure: {} at {}\n", f.id, f.params.to_json()));
            }
            s.push_str(&format!("skipped pole points: {}\n", run.skipped));
            s
        }
    };
    if !notes.is_empty() {
        eprint!("{notes}");
    }
    Ok(Output { body, ok: run.all_pass() })
}

#[allow(clippy::too_many_arguments)]
fn cmd_integrate(
    cli: &Cli,
    format: Format,
    spec: IntegrandSpec,
    p: u64,
    q: &str,
    levels: &str,
    d: u64,
    precision: u32,
    target: Option<&str>,
) -> Result<Output, QError> {
    let levels = parse_levels(levels)?;
    let ctx = PadicContext::new(p, *levels.start(), d, precision)?;
    let q = parse_q(q)?;
    let target: BigRational = match target {
        Some(t) => parse_rational(t)?,
        None => closed_form(&spec, &q)?,
    };
    let budget = cli.budget.unwrap_or_else(budget_from_env);
    let rows = convergence_table(&spec, &ctx, levels, &q, &target, budget, cli.workers)?;
    let ok = certify_convergence(&rows);
    let body = match format {
        Format::Csv => table_to_csv(&rows, cli.stable)?,
        Format::Json => json_lines(rows.iter().map(|r| {
            let mut v = json!({
                "N": r.level,
                "terms": r.terms.to_string(),
                "valuation": r.valuation.to_string(),
                "residue": r.residue.residue.to_string(),
                "modulus": format!("{}^{}", r.residue.p, r.residue.precision),
            });
            if !cli.stable {
                v["elapsed_ms"] = json!(r.elapsed_ms as u64);
            }
            v
        })),
        Format::Human => {
            let mut header = vec!["N", "terms", "valuation", "residue"];
            if !cli.stable {
                header.push("elapsed_ms");
            }
            let data = rows
                .iter()
                .map(|r| {
                    let mut v = vec![r.level.to_string(), r.terms.to_string(), r.valuation.to_string(), r.residue.residue.to_string()];
                    if !cli.stable {
                        v.push(r.elapsed_ms.to_string());
                    }
                    v
                })
                .collect();
            let mut s = format!("target {}\n", format_rational(&target));
            s.push_str(&table(Format::Human, &header, data)?);
            s.push_str(&format!("certified: {}\n", if ok { "yes" } else { "no" }));
            s
        }
    };
    Ok(Output { body, ok })
}

fn zeta_body(format: Format, fields: Vec<(&'static str, serde_json::Value)>) -> Result<String, QError> {
    let text = |v: &serde_json::Value| match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    match format {
        Format::Json => {
            let obj: serde_json::Map<String, serde_json::Value> =
                fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            Ok(json_lines([serde_json::Value::Object(obj)]))
        }
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            csv_text(&header, &[fields.iter().map(|(_, v)| text(v)).collect()])
        }
        Format::Human => Ok(fields.iter().map(|(k, v)| format!("{k} = {}\n", text(v))).collect()),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_zeta(
    format: Format,
    s: &str,
    x: &str,
    q: &str,
    h: i64,
    cfg: SeriesConfig,
    check_interpolation: bool,
    mellin: bool,
    t: Option<&str>,
) -> Result<Output, QError> {
    let sz = parse_complex("s", s)?;
    let qz = parse_complex("q", q)?;
    let xr = parse_rational(x).map_err(|_| QError::param("x", format!("`{x}` is not a rational or decimal")))?;
    let xf = qeuler::qcore::to_f64(&xr);
    if check_interpolation {
        if !(sz.im == 0.0 && sz.re <= 0.0 && sz.re.fract() == 0.0) {
            return Err(QError::param("s", "interpolation needs s = -m with m a nonnegative integer"));
        }
        if qz.im != 0.0 {
            return Err(QError::param("q", "interpolation needs a real q"));
        }
        let qr = parse_rational(q).map_err(|_| QError::param("q", "interpolation needs a rational q"))?;
        let r = interpolation_check(-sz.re as u32, &xr, &qr, h, &cfg)?;
        let ok = r.abs_diff < 1e-10;
        let body = zeta_body(
            format,
            vec![
                ("series_value", json!(r.series_value)),
                ("closed_value", json!(r.closed_value)),
                ("abs_diff", json!(r.abs_diff)),
                ("exact_tau", json!(r.exact_tau)),
                ("n_terms", json!(r.series.n_terms)),
                ("tail_bound", json!(r.series.tail_bound)),
            ],
        )?;
        return Ok(Output { body, ok });
    }
    if mellin {
        if sz.im != 0.0 || qz.im != 0.0 {
            return Err(QError::param("s", "the Mellin check takes real s and q"));
        }
        let r = mellin_check(sz.re, xf, qz.re, h, &cfg)?;
        let ok = r.abs_diff < 1e-6;
        let body = zeta_body(
            format,
            vec![
                ("quadrature_value", json!(r.quadrature_value)),
                ("series_value", json!(r.series_value)),
                ("abs_diff", json!(r.abs_diff)),
                ("cutoff", json!(r.cutoff)),
                ("quadrature_error", json!(r.quadrature_error)),
            ],
        )?;
        return Ok(Output { body, ok });
    }
    if let Some(t) = t {
        let tz = parse_complex("gen-fn", t)?;
        let v = gen_fn(tz, xf, qz, h, &cfg)?;
        let body = zeta_body(
            format,
            vec![
                ("t", json!(format_complex(tz))),
                ("x", json!(xf)),
                ("q", json!(format_complex(qz))),
                ("h", json!(h)),
                ("value_re", json!(v.value.re)),
                ("value_im", json!(v.value.im)),
                ("n_terms", json!(v.n_terms)),
                ("tail_bound", json!(v.tail_bound)),
            ],
        )?;
        return Ok(Output::ok(body));
    }
    let v = zeta_eq(sz, xf, qz, h, &cfg)?;
    let body = match format {
        Format::Human if v.value.im == 0.0 => format!(
            "{}\nn_terms = {}\ntail_bound = {}\n",
            fmt_f64(v.value.re),
            v.n_terms,
            fmt_f64(v.tail_bound)
        ),
        Format::Human => format!(
            "{} {:+}i\nn_terms = {}\ntail_bound = {}\n",
            fmt_f64(v.value.re),
            v.value.im,
            v.n_terms,
            fmt_f64(v.tail_bound)
        ),
        _ => zeta_body(
            format,
            vec![
                ("s_re", json!(sz.re)),
                ("s_im", json!(sz.im)),
                ("x", json!(xf)),
                ("q", json!(format_complex(qz))),
                ("h", json!(h)),
                ("value_re", json!(v.value.re)),
                ("value_im", json!(v.value.im)),
                ("n_terms", json!(v.n_terms)),
                ("tail_bound", json!(v.tail_bound)),
            ],
        )?,
    };
    Ok(Output::ok(body))
}

fn cmd_selftest(format: Format, workers: usize, stable: bool) -> Result<Output, QError> {
    let outcomes = selftest::run_all(workers);
    let ok = outcomes.iter().all(|c| c.passed);
    let body = match format {
        Format::Json => json_lines(outcomes.iter().map(|c| {
            let mut v = json!({"criterion": c.id, "name": c.name, "passed": c.passed, "detail": c.detail});
            if !stable {
                v["elapsed_ms"] = json!(c.elapsed_ms as u64);
            }
            v
        })),
        Format::Csv => csv_text(
            &["criterion", "name", "passed", "detail"],
            &outcomes
                .iter()
                .map(|c| vec![c.id.to_string(), c.name.to_string(), c.passed.to_string(), c.detail.clone()])
                .collect::<Vec<_>>(),
        )?,
        Format::Human => {
            let mut s: String = outcomes
                .iter()
                .map(|c| {
                    if stable {
                        format!("{}\n", c.line())
                    } else {
                        format!("{} [{} ms]\n", c.line(), c.elapsed_ms)
                    }
                })
                .collect();
            let passed = outcomes.iter().filter(|c| c.passed).count();
            s.push_str(&format!("{passed}/{} criteria passed\n", outcomes.len()));
            s
        }
    };
    Ok(Output { body, ok })
}

fn grid_from(
    m_max: Option<u32>,
    k_max: Option<u32>,
    h_min: Option<i64>,
    h_max: Option<i64>,
    ls: Option<&Vec<u32>>,
    qs: Option<&Vec<String>>,
    tau_exps: Option<&Vec<i64>>,
) -> Result<GridSpec, QError> {
    let mut g = GridSpec::default();
    if let Some(v) = m_max {
        g.m_max = v;
    }
    if let Some(v) = k_max {
        g.k_max = v;
    }
    if let Some(v) = h_min {
        g.h_min = v;
    }
    if let Some(v) = h_max {
        g.h_max = v;
    }
    if g.h_min > g.h_max {
        return Err(QError::param("h-min", "must not exceed h-max"));
    }
    if let Some(v) = ls {
        if v.iter().any(|&l| l % 2 == 0) {
            return Err(QError::param("ls", "multiplication factors must be odd"));
        }
        g.ls = v.clone();
    }
    if let Some(v) = qs {
        g.qs = v.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>()?;
    }
    if let Some(v) = tau_exps {
        g.tau_exps = v.clone();
    }
    Ok(g)
}

fn run(cli: &Cli) -> Result<Output, QError> {
    if cli.workers == 0 {
        return Err(QError::param("workers", "must be at least 1"));
    }
    match &cli.command {
        Command::Numbers { m_max, h, k, q } => cmd_numbers(cli.format.unwrap_or(Format::Human), *m_max, *h, *k, q),
        Command::Poly { m_max, h, k, q, x, tau } => {
            cmd_poly(cli.format.unwrap_or(Format::Human), *m_max, *h, *k, q, *x, tau.as_deref())
        }
        Command::Verify {
            ids,
            certify,
            m_max,
            k_max,
            h_min,
            h_max,
            ls,
            qs,
            tau_exps,
        } => {
            let grid = grid_from(*m_max, *k_max, *h_min, *h_max, ls.as_ref(), qs.as_ref(), tau_exps.as_ref())?;
            cmd_verify(cli.format.unwrap_or(Format::Json), cli.workers, ids, *certify, grid)
        }
        Command::Integrate {
            m,
            h,
            k,
            shift,
            p,
            q,
            levels,
            d,
            precision,
            mode,
            pattern,
            target,
        } => {
            let spec = IntegrandSpec {
                m: *m,
                h: *h,
                k: *k,
                shift: *shift,
                mode: match mode {
                    ModeArg::Fermionic => Measure::Fermionic,
                    ModeArg::Bosonic => Measure::Bosonic,
                },
                pattern: match pattern {
                    PatternArg::HMinusJ => WeightPattern::HMinusJ,
                    PatternArg::PurePower => WeightPattern::PurePower,
                    PatternArg::K1 => WeightPattern::K1Weight,
                },
            };
            cmd_integrate(
                cli,
                cli.format.unwrap_or(Format::Csv),
                spec,
                *p,
                q,
                levels,
                *d,
                *precision,
                target.as_deref(),
            )
        }
        Command::Zeta {
            s,
            x,
            q,
            h,
            eps,
            max_terms,
            check_interpolation,
            mellin,
            gen_fn,
        } => {
            let cfg = SeriesConfig::new(*eps, *max_terms)?;
            cmd_zeta(
                cli.format.unwrap_or(Format::Human),
                s,
                x,
                q,
                *h,
                cfg,
                *check_interpolation,
                *mellin,
                gen_fn.as_deref(),
            )
        }
        Command::Selftest => cmd_selftest(cli.format.unwrap_or(Format::Human), cli.workers, cli.stable),
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), QError> {
    match &cli.output {
        Some(path) => fs::write(path, body).map_err(|e| QError::param("output", e.to_string())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| QError::param("output", e.to_string()))
        }
    }
}

fn exit_code(e: &QError) -> u8 {
    match e {
        QError::Budget { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.body) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
