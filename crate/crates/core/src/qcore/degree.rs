//! Degree bookkeeping for rational functions in q.
//!
//! [`DegreeSpan`] abstracts a rational function `N(q) / D(q)` where `D` is a
//! product of known factors `1 + q^e` and `1 - q^a` (tracked exactly, with
//! multiplicity) and `N` is a Laurent polynomial of which only the exponent
//! range is kept. Running a closed form over [`SymBase`] instead of a
//! concrete `q` therefore yields an upper bound on the numerator degree of
//! `lhs - rhs`, which is how many distinct evaluation points are needed to
//! certify an identity from point checks alone.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::algebra::{QBase, Ring};
use super::rational::BigRational;
use crate::error::{QError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// `1 + q^e`, `e > 0`
    OnePlus(u64),
    /// `1 - q^a`, `a > 0`
    OneMinus(u64),
}

impl Atom {
    fn degree(self) -> i64 {
        match self {
            Atom::OnePlus(e) | Atom::OneMinus(e) => e as i64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeSpan {
    /// Structurally zero.
    Zero,
    Frac {
        lo: i64,
        hi: i64,
        den: BTreeMap<Atom, u32>,
    },
}

impl DegreeSpan {
    pub fn monomial(e: i64) -> Self {
        DegreeSpan::Frac {
            lo: e,
            hi: e,
            den: BTreeMap::new(),
        }
    }

    fn over(e: i64, atom: Atom) -> Self {
        let mut den = BTreeMap::new();
        den.insert(atom, 1);
        DegreeSpan::Frac { lo: e, hi: e, den }
    }

    /// Exponent range `(lo, hi)` of the numerator, `None` when zero.
    pub fn numerator_span(&self) -> Option<(i64, i64)> {
        match self {
            DegreeSpan::Zero => None,
            DegreeSpan::Frac { lo, hi, .. } => Some((*lo, *hi)),
        }
    }

    /// Bound on the degree of `N(q) / q^lo`; a nonzero `N` has at most this
    /// many roots away from `q = 0`.
    pub fn root_bound(&self) -> u64 {
        match self.numerator_span() {
            None => 0,
            Some((lo, hi)) => (hi - lo) as u64,
        }
    }

    pub fn denominator_degree(&self) -> i64 {
        match self {
            DegreeSpan::Zero => 0,
            DegreeSpan::Frac { den, .. } => den.iter().map(|(a, m)| a.degree() * *m as i64).sum(),
        }
    }
}

impl Zero for DegreeSpan {
    fn zero() -> Self {
        DegreeSpan::Zero
    }

    fn is_zero(&self) -> bool {
        matches!(self, DegreeSpan::Zero)
    }
}

impl One for DegreeSpan {
    fn one() -> Self {
        DegreeSpan::monomial(0)
    }
}

impl Add for DegreeSpan {
    type Output = DegreeSpan;

    fn add(self, rhs: DegreeSpan) -> DegreeSpan {
        match (self, rhs) {
            (DegreeSpan::Zero, x) | (x, DegreeSpan::Zero) => x,
            (
                DegreeSpan::Frac {
                    lo: lo_a,
                    hi: hi_a,
                    den: den_a,
                },
                DegreeSpan::Frac {
                    lo: lo_b,
                    hi: hi_b,
                    den: den_b,
                },
            ) => {
                let mut lcm = den_a.clone();
                for (atom, mult) in &den_b {
                    let e = lcm.entry(*atom).or_insert(0);
                    *e = (*e).max(*mult);
                }
                let lift = |den: &BTreeMap<Atom, u32>| -> i64 {
                    lcm.iter()
                        .map(|(atom, m)| {
                            let have = den.get(atom).copied().unwrap_or(0);
                            atom.degree() * (m - have) as i64
                        })
                        .sum()
                };
                let hi = (hi_a + lift(&den_a)).max(hi_b + lift(&den_b));
                DegreeSpan::Frac {
                    lo: lo_a.min(lo_b),
                    hi,
                    den: lcm,
                }
            }
        }
    }
}

impl Sub for DegreeSpan {
    type Output = DegreeSpan;

    fn sub(self, rhs: DegreeSpan) -> DegreeSpan {
        self + rhs
    }
}

impl Neg for DegreeSpan {
    type Output = DegreeSpan;

    fn neg(self) -> DegreeSpan {
        self
    }
}

impl Mul for DegreeSpan {
    type Output = DegreeSpan;

    fn mul(self, rhs: DegreeSpan) -> DegreeSpan {
        match (self, rhs) {
            (DegreeSpan::Zero, _) | (_, DegreeSpan::Zero) => DegreeSpan::Zero,
            (
                DegreeSpan::Frac {
                    lo: lo_a,
                    hi: hi_a,
                    den: mut den_a,
                },
                DegreeSpan::Frac {
                    lo: lo_b,
                    hi: hi_b,
                    den: den_b,
                },
            ) => {
                for (atom, m) in den_b {
                    *den_a.entry(atom).or_insert(0) += m;
                }
                DegreeSpan::Frac {
                    lo: lo_a + lo_b,
                    hi: hi_a + hi_b,
                    den: den_a,
                }
            }
        }
    }
}

impl Ring for DegreeSpan {
    fn from_rational(r: &BigRational) -> Self {
        if r.is_zero() {
            DegreeSpan::Zero
        } else {
            DegreeSpan::one()
        }
    }
}

/// The symbolic base `q^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymBase {
    pub r: i64,
}

impl SymBase {
    pub fn q() -> Self {
        SymBase { r: 1 }
    }
}

impl QBase for SymBase {
    type R = DegreeSpan;

    fn pow(&self, e: i64) -> DegreeSpan {
        DegreeSpan::monomial(self.r * e)
    }

    fn recip_one_plus_pow(&self, e: i64) -> Result<DegreeSpan> {
        let ex = self.r * e;
        Ok(match ex {
            0 => DegreeSpan::one(),
            ex if ex > 0 => DegreeSpan::over(0, Atom::OnePlus(ex as u64)),
            // 1/(1 + q^-f) = q^f / (1 + q^f)
            ex => DegreeSpan::over(-ex, Atom::OnePlus(ex.unsigned_abs())),
        })
    }

    fn recip_one_minus_pow(&self, e: i64) -> Result<DegreeSpan> {
        let ex = self.r * e;
        match ex {
            0 => Err(QError::PoleOneMinus { exponent: 0 }),
            ex if ex > 0 => Ok(DegreeSpan::over(0, Atom::OneMinus(ex as u64))),
            ex => Ok(DegreeSpan::over(-ex, Atom::OneMinus(ex.unsigned_abs()))),
        }
    }

    fn power_base(&self, l: i64) -> Result<Self> {
        if l == 0 {
            return Err(QError::param("l", "base exponent must be nonzero"));
        }
        Ok(SymBase { r: self.r * l })
    }
}
