//! The identity registry.
//!
//! Each entry states one identity between q-Euler numbers or polynomials
//! and is checked by exact rational equality of its two sides. Entries of
//! [`Kind::Literal`] are deliberately uncorrected readings of statements
//! that need an index or factor fix; they exist to exhibit a concrete
//! counterexample and are excluded from the default run.
//!
//! Evaluation points use `tau = q^a` for an integer `a`, so every check is
//! also a statement about rational functions of `q` and can be certified by
//! [`certify`].

mod certify;
pub mod checks;

use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{QError, Result};
use crate::qcore::{format_rational, rat, BigRational, QValue};

pub use certify::{certify_instance, certify_registry, CertReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Identity,
    Literal,
}

/// Which parameters an entry ranges over, and its hypotheses.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub h: bool,
    /// `Some(min)` when the entry ranges over the order `k >= min`.
    pub k: Option<u32>,
    pub l: bool,
    pub i: bool,
    pub tau: bool,
    pub tau2: bool,
    pub q: bool,
    pub m_min: u32,
    pub h_min: Option<i64>,
}

const BASE: Shape = Shape {
    h: false,
    k: None,
    l: false,
    i: false,
    tau: false,
    tau2: false,
    q: true,
    m_min: 0,
    h_min: None,
};

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub id: &'static str,
    pub kind: Kind,
    pub statement: &'static str,
    pub erratum: Option<&'static str>,
    pub shape: Shape,
}

const fn shape(h: bool, k: Option<u32>, tau: bool) -> Shape {
    Shape { h, k, tau, ..BASE }
}

pub const REGISTRY: &[Entry] = &[
    Entry {
        id: "P1a",
        kind: Kind::Identity,
        statement: "sum_j C(m,j)(q-1)^j E^(0,k+1)_j = [2]^(k+1) / (-q^m:q^-1)_(k+1)",
        erratum: Some("the companion k+1-fold integral expansion starts its sum at j=0, not j=1 (see E2-literal)"),
        shape: shape(false, Some(1), false),
    },
    Entry {
        id: "E2-literal",
        kind: Kind::Literal,
        statement: "sum_{j=1..m} C(m,j)(q-1)^j E^(0,k+1)_j = [2]^(k+1) / (-q^m:q^-1)_(k+1)",
        erratum: Some("literal lower index j=1 drops the j=0 term E^(0,k+1)_0; fails whenever that term is nonzero"),
        shape: shape(false, Some(1), false),
    },
    Entry {
        id: "HREC",
        kind: Kind::Identity,
        statement: "E^(h,k)_m = E^(h-1,k)_m + (q-1) E^(h-1,k)_(m+1)",
        erratum: None,
        shape: shape(true, Some(1), false),
    },
    Entry {
        id: "MIX",
        kind: Kind::Identity,
        statement: "sum_{j<=i} C(i,j)(q-1)^j E^(h-1,k)_(m-i+j) = sum_{j<i} C(i-1,j)(q-1)^j E^(h,k)_(m+j-i), 1 <= i <= m",
        erratum: None,
        shape: Shape { h: true, k: Some(1), i: true, m_min: 1, ..BASE },
    },
    Entry {
        id: "MOM",
        kind: Kind::Identity,
        statement: "sum_j C(m,j)(q-1)^j E^(h,1)_j = [2]_q / [2]_(q^(m+h))",
        erratum: None,
        shape: shape(true, None, false),
    },
    Entry {
        id: "E4",
        kind: Kind::Identity,
        statement: "sum_j C(m,j)(q-1)^j E^(0,k)_j = [2]^k / (-q^m:q^-1)_k",
        erratum: None,
        shape: shape(false, Some(1), false),
    },
    Entry {
        id: "L2",
        kind: Kind::Identity,
        statement: "sum_j C(m,j)(q-1)^j E^(0,k)_j(x) = q^(mx) [2]^k / (-q^m:q^-1)_k",
        erratum: None,
        shape: shape(false, Some(1), true),
    },
    Entry {
        id: "T3a",
        kind: Kind::Identity,
        statement: "E^(0,k)_(m,q)(x) = [l]^m/[l]_(-q)^k sum_{i_1..i_k<l} q^(-sum (j-1) i_j) (-1)^(sum i) E^(0,k)_(m,q^l)((x+sum i)/l)",
        erratum: Some("E^(0,k) is taken as the h=0 case of E^(h,k); the integrand weight q^(+sum j x_j) contradicts its own closed form (see S3-literal)"),
        shape: Shape { k: Some(1), l: true, tau: true, ..BASE },
    },
    Entry {
        id: "T3b",
        kind: Kind::Identity,
        statement: "E^(0,k)_(m,q)(lx) = [l]^m/[l]_(-q)^k sum_{i_1..i_k<l} q^(-sum (j-1) i_j) (-1)^(sum i) E^(0,k)_(m,q^l)(x + (sum i)/l)",
        erratum: None,
        shape: Shape { k: Some(1), l: true, tau: true, ..BASE },
    },
    Entry {
        id: "E9",
        kind: Kind::Identity,
        statement: "E^(0,k)_m(x) = sum_i C(m,i) E^(0,k)_i [x]^(m-i) q^(ix)",
        erratum: None,
        shape: shape(false, Some(1), true),
    },
    Entry {
        id: "E10",
        kind: Kind::Identity,
        statement: "E^(0,k)_m(x+y) = sum_j C(m,j) [y]^(m-j) q^(jy) E^(0,k)_j(x)",
        erratum: Some("mixed i/j indices unified: the exponent m-j pairs with summation index j"),
        shape: Shape { k: Some(1), tau: true, tau2: true, ..BASE },
    },
    Entry {
        id: "E12",
        kind: Kind::Identity,
        statement: "q^x E^(h,1)_m(x) = (q-1) E^(h-1,1)_(m+1)(x) + E^(h-1,1)_m(x)",
        erratum: None,
        shape: shape(true, None, true),
    },
    Entry {
        id: "E13",
        kind: Kind::Identity,
        statement: "q^h E^(h,1)_m(x+1) + E^(h,1)_m(x) = [2]_q [x]^m",
        erratum: None,
        shape: shape(true, None, true),
    },
    Entry {
        id: "E14c",
        kind: Kind::Identity,
        statement: "q^h (q E^(h,1) + 1)^m + E^(h,1)_m = [2]_q delta_(m,0)",
        erratum: Some("right side corrected from delta_(0,k) to [2]_q delta_(m,0), the x=0 case of E13"),
        shape: shape(true, None, false),
    },
    Entry {
        id: "E14-literal",
        kind: Kind::Literal,
        statement: "q^h (q E^(h,1) + 1)^m + E^(h,1)_m = delta_(m,0)",
        erratum: Some("literal form lacks the [2]_q factor; fails at m=0 where the left side is [2]_q"),
        shape: shape(true, None, false),
    },
    Entry {
        id: "T4",
        kind: Kind::Identity,
        statement: "E^(h,1)_(m,q^-1)(1-x) = (-1)^m q^(m+h-1) E^(h,1)_(m,q)(x)",
        erratum: None,
        shape: shape(true, None, true),
    },
    Entry {
        id: "E16",
        kind: Kind::Identity,
        statement: "E^(h,1)_(m,q^-1)(0) = (-1)^(m-1) q^(m-1) E^(h,1)_(m,q), m >= 1",
        erratum: Some("base written q-1 is read as q^-1"),
        shape: Shape { h: true, m_min: 1, ..BASE },
    },
    Entry {
        id: "T5a",
        kind: Kind::Identity,
        statement: "[2]_q/[2]_(q^l) [l]^m sum_{i<l} q^(hi) (-1)^i E^(h,1)_(m,q^l)((x+i)/l) = E^(h,1)_(m,q)(x)",
        erratum: None,
        shape: Shape { h: true, l: true, tau: true, ..BASE },
    },
    Entry {
        id: "T5b",
        kind: Kind::Identity,
        statement: "[2]_q/[2]_(q^l) [l]^m sum_{i<l} q^(hi) (-1)^i E^(h,1)_(m,q^l)(x + i/l) = E^(h,1)_(m,q)(lx)",
        erratum: None,
        shape: Shape { h: true, l: true, tau: true, ..BASE },
    },
    Entry {
        id: "E17",
        kind: Kind::Identity,
        statement: "(q-1)^m E^(h,k)_m(x) = sum_j C(m,j) (-1)^(m-j) q^(xj) [2]^k / (-q^(j+h):q^-1)_k",
        erratum: None,
        shape: shape(true, Some(1), true),
    },
    Entry {
        id: "E18",
        kind: Kind::Identity,
        statement: "q^h E^(h,k)_m(x+1) + E^(h,k)_m(x) = [2]_q E^(h-1,k-1)_m(x)",
        erratum: Some("at k=1 the right side uses the empty-integral convention E^(h,0)_m(x) = [x]^m"),
        shape: shape(true, Some(1), true),
    },
    Entry {
        id: "E19",
        kind: Kind::Identity,
        statement: "q^x E^(h+1,k)_m(x) = (q-1) E^(h,k)_(m+1)(x) + E^(h,k)_m(x)",
        erratum: None,
        shape: shape(true, Some(1), true),
    },
    Entry {
        id: "T6",
        kind: Kind::Identity,
        statement: "E^(h,k)_(m,q)(lx) = [l]^m/[l]_(-q)^k sum_{i_1..i_k<l} q^(h sum i - sum (j-1) i_j) (-1)^(sum i) E^(h,k)_(m,q^l)(x + (sum i)/l)",
        erratum: None,
        shape: Shape { h: true, k: Some(1), l: true, tau: true, ..BASE },
    },
    Entry {
        id: "E22",
        kind: Kind::Identity,
        statement: "E^(k)_(m,q^-1)(k-x) = (-1)^m q^(m+C(k,2)) E^(k)_(m,q)(x)",
        erratum: None,
        shape: shape(false, Some(1), true),
    },
    Entry {
        id: "E23",
        kind: Kind::Identity,
        statement: "E^(k)_(m,q^-1)(0) = (-1)^m q^(m+C(k,2)) E^(k)_(m,q)(k)",
        erratum: None,
        shape: shape(false, Some(1), false),
    },
    Entry {
        id: "E24",
        kind: Kind::Identity,
        statement: "q^k E^(k)_m(x+1) + E^(k)_m(x) = [2]_q E^(k-1)_m(x)",
        erratum: None,
        shape: shape(false, Some(1), true),
    },
    Entry {
        id: "E28",
        kind: Kind::Identity,
        statement: "q^k (q E^(k) + 1)^m + E^(k)_m = [2]_q E^(k-1)_m",
        erratum: None,
        shape: shape(false, Some(1), false),
    },
    Entry {
        id: "E26",
        kind: Kind::Identity,
        statement: "sum_i C(m,i)(q-1)^i E^(k)_i = [2]^k / (-q^(m+k):q^-1)_k",
        erratum: None,
        shape: shape(false, Some(1), false),
    },
    Entry {
        id: "E27",
        kind: Kind::Identity,
        statement: "E^(k)_m(x) = (q^x E^(k) + [x])^m, m >= 1",
        erratum: None,
        shape: Shape { k: Some(1), tau: true, m_min: 1, ..BASE },
    },
    Entry {
        id: "E30",
        kind: Kind::Identity,
        statement: "q^(h-k) E^(h,k+1)_m(x+1) = [2]_q E^(h,k)_m(x) - E^(h,k+1)_m(x)",
        erratum: None,
        shape: shape(true, Some(1), true),
    },
    Entry {
        id: "E31",
        kind: Kind::Identity,
        statement: "E^(k)_m(x) = sum_j C(m,j) q^(xj) E^(1)_j E^(k+j,k-1)_(m-j)(x)",
        erratum: None,
        shape: shape(false, Some(1), true),
    },
    Entry {
        id: "E32c",
        kind: Kind::Identity,
        statement: "E^(k)_m = sum_j C(m,j) E^(1)_j E^(k+j,k-1)_(m-j)",
        erratum: Some("summation index i and summand index j unified to j"),
        shape: shape(false, Some(1), false),
    },
    Entry {
        id: "E32-literal",
        kind: Kind::Literal,
        statement: "E^(k)_m = sum_i C(m,i) E^(1)_j E^(k+j,k-1)_(m-j) with j unbound (held at 0)",
        erratum: Some("literal form sums over i while the summand depends on a free j; at j=0 it reads 2^m E^(1)_0 E^(k,k-1)_m"),
        shape: shape(false, Some(1), false),
    },
    Entry {
        id: "E33",
        kind: Kind::Identity,
        statement: "E^(h+1,1)_m = sum_{j<=h} C(h,j)(q-1)^j E_(m+j,q), h >= 0",
        erratum: None,
        shape: Shape { h: true, h_min: Some(0), ..BASE },
    },
    Entry {
        id: "E34",
        kind: Kind::Identity,
        statement: "E^(2)_m = sum_j C(m,j) E_j sum_{i<=j+1} C(j+1,i)(q-1)^i E_(m-j+i)",
        erratum: None,
        shape: BASE,
    },
    Entry {
        id: "T7",
        kind: Kind::Identity,
        statement: "E^(k)_m(x) = sum_j C(m,j) q^(jx) E^(k+j,1)_(m-j)(x) E^(k-1)_j",
        erratum: None,
        shape: shape(false, Some(1), true),
    },
    Entry {
        id: "E36c",
        kind: Kind::Identity,
        statement: "E^(k)_m = sum_j C(m,j) E^(k-1)_j sum_{i<=k+j-1} C(k+j-1,i)(q-1)^i E^(1)_(m-j+i)",
        erratum: Some("inner sum corrected to i = 0..k+j-1 with C(k+j-1,i), the h=k+j-1 case of E33"),
        shape: shape(false, Some(1), false),
    },
    Entry {
        id: "E36-literal",
        kind: Kind::Literal,
        statement: "E^(k)_m = sum_j C(m,j) E^(k-1)_j sum_{j'<=k+j} C(k+j'-1,j')(q-1)^(j') E^(1)_m",
        erratum: Some("literal inner sum rebinds j (upper limit k+j) and its summand is read with i = j'; fails off the trivial points"),
        shape: shape(false, Some(1), false),
    },
    Entry {
        id: "CL2",
        kind: Kind::Identity,
        statement: "classical order-2 Euler numbers: E^(2)_m = sum_j C(m,j) E_j E_(m-j)",
        erratum: None,
        shape: Shape { q: false, ..BASE },
    },
    Entry {
        id: "GF29",
        kind: Kind::Identity,
        statement: "m! [t^m] [2]^k e^(t/(1-q)) sum_j (-1)^j q^(jx) / (-q^(j+h):q^-1)_k (1/(1-q))^j t^j/j! = E^(h,k)_m(x)",
        erratum: None,
        shape: shape(true, Some(1), true),
    },
    Entry {
        id: "S3-literal",
        kind: Kind::Literal,
        statement: "k-fold integral of [x + sum x_j]^m q^(+sum j x_j) equals the E^(0,k)_m(x) closed form",
        erratum: Some("literal integrand weight q^(+sum j x_j) gives factors 1/(1+q^(l+j+1)); the closed form needs q^(-sum j x_j)"),
        shape: shape(false, Some(1), true),
    },
    Entry {
        id: "E37-literal",
        kind: Kind::Literal,
        statement: "[2]_q sum_n (-1)^n q^(nh) [n+x]^n is independent of m, so E^(h,1)_m(x) = E^(h,1)_0(x)",
        erratum: Some("literal bracket exponent n makes the series independent of m; the summand must carry [n+x]^m"),
        shape: Shape { h: true, tau: true, m_min: 1, ..BASE },
    },
];

pub fn entry(id: &str) -> Option<&'static Entry> {
    REGISTRY.iter().find(|e| e.id == id)
}

/// Parameters of one check. `tau_exp = a` means `tau = q^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub m: u32,
    pub h: i64,
    pub k: u32,
    pub l: Option<u32>,
    pub i: Option<u32>,
    pub q: Option<BigRational>,
    pub tau_exp: Option<i64>,
    pub tau2_exp: Option<i64>,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            m: 0,
            h: 1,
            k: 1,
            l: None,
            i: None,
            q: None,
            tau_exp: None,
            tau2_exp: None,
        }
    }
}

impl Params {
    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("m".into(), json!(self.m));
        obj.insert("h".into(), json!(self.h));
        obj.insert("k".into(), json!(self.k));
        if let Some(l) = self.l {
            obj.insert("l".into(), json!(l));
        }
        if let Some(i) = self.i {
            obj.insert("i".into(), json!(i));
        }
        if let Some(a) = self.tau_exp {
            obj.insert("tau_exp".into(), json!(a));
        }
        if let Some(a) = self.tau2_exp {
            obj.insert("tau2_exp".into(), json!(a));
        }
        if let Some(q) = &self.q {
            obj.insert("q".into(), json!(format_rational(q)));
            if let Ok(q) = QValue::new(q.clone()) {
                if let Some(a) = self.tau_exp {
                    obj.insert("tau".into(), json!(format_rational(&q.pow_exact(a))));
                }
                if let Some(a) = self.tau2_exp {
                    obj.insert("tau2".into(), json!(format_rational(&q.pow_exact(a))));
                }
            }
        }
        Value::Object(obj)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub id: &'static str,
    pub params: Params,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub pass: bool,
    pub erratum: Option<&'static str>,
}

impl IdentityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "params": self.params.to_json(),
            "lhs": format_rational(&self.lhs),
            "rhs": format_rational(&self.rhs),
            "pass": self.pass,
            "erratum": self.erratum,
        })
    }
}

/// Check one identity at one parameter point.
pub fn verify(id: &str, params: &Params) -> Result<IdentityReport> {
    let e = entry(id).ok_or_else(|| QError::UnknownIdentity(id.to_string()))?;
    let (lhs, rhs) = if e.shape.q {
        let q = QValue::new(params.q.clone().ok_or_else(|| QError::param("q", "missing"))?)?;
        let tau = q.pow_exact(params.tau_exp.unwrap_or(0));
        let tau2 = q.pow_exact(params.tau2_exp.unwrap_or(0));
        checks::sides(e.id, &q, &tau, &tau2, params)?
    } else {
        // q-free entries still need a base for the generic signature
        let q = QValue::new(rat(2, 1))?;
        checks::sides(e.id, &q, &BigRational::one(), &BigRational::one(), params)?
    };
    Ok(IdentityReport {
        id: e.id,
        params: params.clone(),
        pass: lhs == rhs,
        lhs,
        rhs,
        erratum: e.erratum,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub m_max: u32,
    pub k_max: u32,
    pub h_min: i64,
    pub h_max: i64,
    pub ls: Vec<u32>,
    pub qs: Vec<BigRational>,
    pub tau_exps: Vec<i64>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            m_max: 6,
            k_max: 3,
            h_min: -1,
            h_max: 4,
            ls: vec![1, 3, 5],
            qs: vec![rat(2, 1), rat(1, 2), rat(3, 5), rat(4, 1), rat(5, 3)],
            tau_exps: vec![0, 1, 2, -1],
        }
    }
}

impl GridSpec {
    /// Grid points for one entry, in lexicographic order of
    /// (m, h, k, l, i, q, tau, tau2). Invalid `q` values are dropped.
    pub fn points(&self, e: &Entry) -> Vec<Params> {
        let s = e.shape;
        let qs: Vec<Option<BigRational>> = if s.q {
            self.qs
                .iter()
                .filter(|q| QValue::new((*q).clone()).is_ok())
                .cloned()
                .map(Some)
                .collect()
        } else {
            vec![None]
        };
        let hs: Vec<i64> = if s.h {
            (self.h_min.max(s.h_min.unwrap_or(i64::MIN))..=self.h_max).collect()
        } else {
            vec![1]
        };
        let ks: Vec<u32> = match s.k {
            Some(min) => (min..=self.k_max).collect(),
            None if e.id == "E34" => vec![2],
            None => vec![1],
        };
        let ls: Vec<Option<u32>> = if s.l {
            self.ls.iter().copied().map(Some).collect()
        } else {
            vec![None]
        };
        let taus: Vec<Option<i64>> = if s.tau {
            self.tau_exps.iter().copied().map(Some).collect()
        } else {
            vec![None]
        };
        let tau2s = if s.tau2 { taus.clone() } else { vec![None] };
        let mut out = Vec::new();
        for m in s.m_min..=self.m_max {
            for &h in &hs {
                for &k in &ks {
                    for &l in &ls {
                        let is: Vec<Option<u32>> = if s.i { (1..=m).map(Some).collect() } else { vec![None] };
                        for &i in &is {
                            for q in &qs {
                                for &tau_exp in &taus {
                                    for &tau2_exp in &tau2s {
                                        out.push(Params {
                                            m,
                                            h,
                                            k,
                                            l,
                                            i,
                                            q: q.clone(),
                                            tau_exp,
                                            tau2_exp,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegistryRun {
    pub reports: Vec<IdentityReport>,
    /// Grid points rejected because some factor vanished there.
    pub skipped: usize,
}

impl RegistryRun {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityReport> {
        self.reports.iter().filter(|r| !r.pass)
    }

    /// One JSON object per line, in report order.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.to_json().to_string());
            out.push('\n');
        }
        out
    }

    /// `(id, passed, total)` per identity in registry order.
    pub fn summary(&self) -> Vec<(&'static str, usize, usize)> {
        let mut out: Vec<(&'static str, usize, usize)> = Vec::new();
        for r in &self.reports {
            match out.last_mut() {
                Some(last) if last.0 == r.id => {
                    last.1 += r.pass as usize;
                    last.2 += 1;
                }
                _ => out.push((r.id, r.pass as usize, 1)),
            }
        }
        out
    }
}

/// Resolve a filter into registry entries. `None` selects every
/// [`Kind::Identity`] entry.
pub fn select(filter: Option<&[String]>) -> Result<Vec<&'static Entry>> {
    match filter {
        None => Ok(REGISTRY.iter().filter(|e| e.kind == Kind::Identity).collect()),
        Some(ids) => {
            let mut out = Vec::new();
            for id in ids {
                out.push(entry(id).ok_or_else(|| QError::UnknownIdentity(id.clone()))?);
            }
            // registry order regardless of filter order
            out.sort_by_key(|e| REGISTRY.iter().position(|r| r.id == e.id));
            out.dedup_by_key(|e| e.id);
            Ok(out)
        }
    }
}

pub(crate) fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
}

/// Run the selected identities over the grid on `workers` threads. The
/// output is identical for every worker count.
pub fn run_registry(grid: &GridSpec, filter: Option<&[String]>, workers: usize) -> Result<RegistryRun> {
    if grid.qs.iter().all(|q| QValue::new(q.clone()).is_err()) {
        return Err(QError::EmptyGrid);
    }
    let entries = select(filter)?;
    let jobs: Vec<(&'static Entry, Params)> = entries
        .iter()
        .flat_map(|e| grid.points(e).into_iter().map(move |p| (*e, p)))
        .collect();
    if jobs.is_empty() {
        return Err(QError::EmptyGrid);
    }
    let results: Vec<Result<IdentityReport>> =
        pool(workers).install(|| jobs.par_iter().map(|(e, p)| verify(e.id, p)).collect());
    let mut reports = Vec::with_capacity(results.len());
    let mut skipped = 0;
    for r in results {
        match r {
            Ok(rep) => reports.push(rep),
            Err(QError::Pole { .. } | QError::PoleOneMinus { .. } | QError::InvalidQ { .. }) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(RegistryRun { reports, skipped })
}
