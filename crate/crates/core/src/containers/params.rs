//! Container parameters for the rainbow-triangle hypergraph and an exact
//! audit of the two hypotheses they must satisfy.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::Pow;

use super::check_shape;
use crate::error::{Error, Result};

/// `1000 * 3!^3 * 3`.
pub const DEFAULT_CONTAINER_C: f64 = 648_000.0;

/// `epsilon = factor * n^exponent`, `tau = sqrt(72 * 3! * r) * n^(-1/3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ContainerParams {
    pub n: u64,
    pub r: usize,
    pub epsilon_factor: Ratio<u64>,
    pub epsilon_exponent: Ratio<i64>,
    pub tau: f64,
    pub c_cap: f64,
}

impl ContainerParams {
    pub fn new(n: u64, r: usize) -> Result<Self> {
        check_shape(n.min(usize::MAX as u64) as usize, r)?;
        let rr = r as u64;
        Ok(ContainerParams {
            n,
            r,
            epsilon_factor: Ratio::new(1, rr * (rr - 1) * (rr - 2)),
            epsilon_exponent: Ratio::new(-1, 3),
            tau: (432.0 * r as f64).sqrt() * (n as f64).cbrt().recip(),
            c_cap: DEFAULT_CONTAINER_C,
        })
    }

    pub fn epsilon(&self) -> f64 {
        let f = self.epsilon_factor;
        *f.numer() as f64 / *f.denom() as f64 / (self.n as f64).cbrt()
    }
}

/// `4 delta2 / (d tau) + 2 delta3 / (d tau^2)` with the closed-form statistics.
pub fn codegree_function(n: usize, r: usize, tau: f64) -> Result<f64> {
    if !(tau > 0.0 && tau < 1.0) {
        return Err(Error::InvalidInput(format!("tau must lie in (0, 1), got {tau}")));
    }
    check_shape(n, r)?;
    Ok(codegree_value(n as f64, r as f64, tau))
}

fn codegree_value(n: f64, r: f64, tau: f64) -> f64 {
    let d = (r - 1.0) * (r - 2.0) * (n - 2.0);
    4.0 * (r - 2.0) / (d * tau) + 2.0 / (d * tau * tau)
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditReport {
    pub n: u64,
    pub r: usize,
    pub tau: f64,
    pub epsilon: f64,
    /// `Delta(H, tau)`, evaluated in floating point for display.
    pub codegree: f64,
    /// `tau <= 1 / (200 * 3!^2 * 3)`, decided exactly.
    pub tau_ok: bool,
    /// `Delta(H, tau) <= epsilon / (12 * 3!)`, decided exactly.
    pub delta_ok: bool,
    /// Smallest order at which both hold for this `r`.
    pub min_n_estimate: Option<u128>,
}

/// With `s = n^(1/3)` and `q = sqrt(432 r)`, `tau = q / s`, so
/// `tau <= 1/21600` iff `(432 r 21600^2)^3 <= n^2`.
fn tau_ok(n: &BigUint, r: usize) -> bool {
    let lhs = (BigUint::from(432 * r as u64) * BigUint::from(21_600u64).pow(2u32)).pow(3u32);
    lhs <= n.pow(2u32)
}

/// Multiplying `Delta <= epsilon / 72` through by `72 R s d q^2` with
/// `R = r(r-1)(r-2)` gives `288 R (r-2) s^2 q <= 432 r d - 144 R n`; the right
/// side simplifies to `R (288 n - 864)`. Dividing by `R` and raising to the
/// sixth power removes the roots.
fn delta_ok(n: &BigUint, r: usize) -> bool {
    let rhs_base = BigUint::from(288u32) * n;
    let shift = BigUint::from(864u32);
    if rhs_base < shift {
        return false;
    }
    let rhs = (rhs_base - shift).pow(6u32);
    let lhs = BigUint::from(288 * (r as u64 - 2)).pow(6u32) * BigUint::from(432 * r as u64).pow(3u32) * n.pow(4u32);
    lhs <= rhs
}

fn both_hold(n: u128, r: usize) -> bool {
    let n = BigUint::from(n);
    tau_ok(&n, r) && delta_ok(&n, r)
}

/// Smallest `n >= 3` with both hypotheses, by doubling then bisection; both
/// predicates are monotone in `n`.
fn min_n(r: usize) -> Option<u128> {
    let mut hi: u128 = 3;
    while !both_hold(hi, r) {
        hi = hi.checked_mul(2)?;
    }
    let mut lo = hi / 2;
    if lo < 3 {
        return Some(hi);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if both_hold(mid, r) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

pub fn audit_params(n: u64, r: usize) -> Result<AuditReport> {
    let params = ContainerParams::new(n, r)?;
    let big = BigUint::from(n);
    let codegree = codegree_value(n as f64, r as f64, params.tau);
    Ok(AuditReport {
        n,
        r,
        tau: params.tau,
        epsilon: params.epsilon(),
        codegree,
        tau_ok: tau_ok(&big, r),
        delta_ok: delta_ok(&big, r),
        min_n_estimate: min_n(r),
    })
}

/// Monotonicity probe used by the tests: both predicates along a geometric
/// grid of orders.
#[cfg(test)]
pub(crate) fn predicate_grid(r: usize, points: &[u128]) -> Vec<(bool, bool)> {
    points
        .iter()
        .map(|&n| {
            let n = BigUint::from(n);
            (tau_ok(&n, r), delta_ok(&n, r))
        })
        .collect()
}
