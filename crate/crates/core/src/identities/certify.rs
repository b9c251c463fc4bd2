//! Identity-level certification from point checks.
//!
//! For fixed integer parameters both sides of an identity are rational
//! functions of `q`. Evaluating them over [`SymBase`] bounds the numerator
//! degree `D` of `lhs - rhs` (after clearing the tracked denominator and a
//! power of `q`). Agreement at `D + 1` distinct nonzero points away from
//! `q = +-1`, where no tracked factor vanishes, then proves the identity for
//! those parameters.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{checks, entry, pool, select, GridSpec, Params};
use crate::error::{QError, Result};
use crate::qcore::{format_rational, BigRational, QBase, SymBase};

#[derive(Clone, Debug, PartialEq)]
pub struct CertReport {
    pub id: &'static str,
    pub params: Params,
    pub degree_bound: u64,
    pub points: usize,
    pub certified: bool,
    pub counterexample: Option<BigRational>,
}

impl CertReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "id": self.id,
            "params": self.params.to_json(),
            "degree_bound": self.degree_bound,
            "points": self.points,
            "certified": self.certified,
            "counterexample": self.counterexample.as_ref().map(format_rational),
        })
    }
}

/// `2, -2, 3, -3, ...`
fn sample_q(n: usize) -> BigRational {
    let mag = 2 + (n / 2) as i64;
    let v = if n.is_multiple_of(2) { mag } else { -mag };
    BigRational::from_integer(BigInt::from(v))
}

pub fn certify_instance(id: &str, params: &Params) -> Result<CertReport> {
    let e = entry(id).ok_or_else(|| QError::UnknownIdentity(id.to_string()))?;
    let mut p = params.clone();
    p.q = None;
    let degree_bound = if e.shape.q {
        let b = SymBase::q();
        let tau = b.pow(p.tau_exp.unwrap_or(0));
        let tau2 = b.pow(p.tau2_exp.unwrap_or(0));
        let (lhs, rhs) = checks::sides(e.id, &b, &tau, &tau2, &p)?;
        (lhs - rhs).root_bound()
    } else {
        0
    };
    let needed = degree_bound as usize + 1;
    for n in 0..needed {
        let q = sample_q(n);
        let mut at = p.clone();
        at.q = Some(q.clone());
        let rep = super::verify(e.id, &at)?;
        if !rep.pass {
            return Ok(CertReport {
                id: e.id,
                params: p,
                degree_bound,
                points: n + 1,
                certified: false,
                counterexample: Some(q),
            });
        }
    }
    Ok(CertReport {
        id: e.id,
        params: p,
        degree_bound,
        points: needed,
        certified: true,
        counterexample: None,
    })
}

/// Certify every grid instance (the grid's q values are ignored).
pub fn certify_registry(grid: &GridSpec, filter: Option<&[String]>, workers: usize) -> Result<Vec<CertReport>> {
    let entries = select(filter)?;
    let mut g = grid.clone();
    g.qs = vec![BigRational::from_integer(BigInt::from(2))];
    let jobs: Vec<(&'static str, Params)> = entries
        .iter()
        .flat_map(|e| g.points(e).into_iter().map(move |p| (e.id, p)))
        .collect();
    pool(workers).install(|| jobs.par_iter().map(|(id, p)| certify_instance(id, p)).collect())
}
