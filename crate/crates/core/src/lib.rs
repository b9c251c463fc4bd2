//! Exact higher-order q-Euler numbers and polynomials.
//!
//! * [`qcore`]: rationals, `[x]_q`, `(a:q)_n` and the base abstraction.
//! * [`euler`]: closed forms for `E^{(h,k)}_{m,q}(x)` and classical Euler numbers.
//! * [`identities`]: the identity registry, checked by exact equality.
//! * [`padic`]: level-N fermionic and bosonic q-Volkenborn sums.
//! * [`zeta`]: the q-Euler zeta function and its generating function over C.
//! * [`selftest`]: the acceptance criteria as runnable checks.

pub mod error;
pub mod euler;
pub mod identities;
pub mod padic;
pub mod qcore;
pub mod selftest;
pub mod zeta;

pub use error::{QError, Result};
