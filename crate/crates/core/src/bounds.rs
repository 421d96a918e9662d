//! Exact integer checks of the inequalities behind the degree thresholds.
//!
//! Fractional exponents are cleared by raising both sides to the fourth
//! power, so every decision is a comparison `2^a ≥ b^e` of integers.

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::PermGroup;

pub const DEFAULT_MAIN_SCAN: u64 = 100_000;
pub const DEFAULT_BABAI_SCAN: u64 = 1 << 22;

/// `⌈log2 v⌉` for `v ≥ 1`.
pub fn ceil_log2(v: u64) -> u32 {
    assert!(v >= 1, "ceil_log2 is defined for v >= 1");
    let mut k = 0;
    while (1u128 << k) < v as u128 {
        k += 1;
    }
    k
}

/// `2^exp2 ≥ base^exp`, decided from bit lengths when they settle it and by
/// big-integer arithmetic otherwise.
pub fn pow2_at_least(exp2: u64, base: u64, exp: u64) -> bool {
    assert!(base >= 1);
    let bits = 64 - u64::from(base.leading_zeros());
    // 2^((bits-1)·exp) ≤ base^exp < 2^(bits·exp)
    if exp2 >= bits * exp {
        return true;
    }
    if exp2 < (bits - 1) * exp {
        return false;
    }
    let rhs = BigUint::from(base).pow(u32::try_from(exp).expect("exponent fits in u32"));
    (BigUint::one() << exp2) >= rhs
}

/// Exponent `4·(1 + ⌈log2 v⌉)` of the fourth power of `v^(1+⌈log2 v⌉)`.
fn order_bound_exponent(v: u64) -> u64 {
    4 * (1 + u64::from(ceil_log2(v)))
}

/// True iff `2^(v/4) ≥ v^(1+⌈log2 v⌉)`, i.e. the order bound for groups
/// outside the Johnson-power and Mathieu families is incompatible with the
/// lower bound forced by minimum degree `v/2`.
pub fn maroti_conflict(v: u64) -> bool {
    pow2_at_least(v, v, order_bound_exponent(v))
}

/// True iff `2^⌊√w⌋ ≥ w^(4(1+⌈log2 w⌉))`: the same conflict with the minimum
/// degree only known to exceed `√w / 2`, relaxed to `⌊√w⌋ / 2`.
pub fn babai_conflict(w: u64) -> bool {
    pow2_at_least(w.isqrt(), w, order_bound_exponent(w))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    /// Least `v` such that the predicate holds on all of `[v, scan_limit]`;
    /// equals `scan_limit` when the predicate fails there.
    pub threshold: u64,
    pub scan_limit: u64,
    /// The predicate holds on `[threshold, scan_limit]`.
    pub all_beyond_hold: bool,
    /// `Some(scan_limit)` when the predicate fails at the top of the scan.
    pub first_counterexample: Option<u64>,
    /// Largest scanned `w` below the threshold where the predicate fails.
    pub last_failure: Option<u64>,
}

fn threshold_scan(
    start: u64,
    scan_limit: u64,
    predicate: impl Fn(u64) -> bool + Sync,
) -> ThresholdReport {
    let last_failure = (start..=scan_limit)
        .into_par_iter()
        .filter(|&w| !predicate(w))
        .max();
    match last_failure {
        Some(w) if w == scan_limit => ThresholdReport {
            threshold: scan_limit,
            scan_limit,
            all_beyond_hold: false,
            first_counterexample: Some(scan_limit),
            last_failure: (start..scan_limit).rev().find(|&x| !predicate(x)),
        },
        _ => ThresholdReport {
            threshold: last_failure.map_or(start.min(scan_limit), |w| w + 1),
            scan_limit,
            all_beyond_hold: true,
            first_counterexample: None,
            last_failure,
        },
    }
}

/// Scans `[2, scan_limit]` for the degree beyond which [`maroti_conflict`]
/// always holds.
pub fn main_threshold(scan_limit: u64) -> ThresholdReport {
    threshold_scan(2, scan_limit, maroti_conflict)
}

/// Scans `[2, scan_limit]` for the degree beyond which [`babai_conflict`]
/// always holds.
pub fn babai_threshold(scan_limit: u64) -> ThresholdReport {
    threshold_scan(2, scan_limit, babai_conflict)
}

/// `4δ² > v`, the integer form of `δ > √v / 2`.
pub fn babai_bound_holds(degree: usize, minimum_degree: usize) -> bool {
    4 * (minimum_degree as u128).pow(2) > degree as u128
}

/// Checks the minimum-degree bound on a primitive group that does not
/// contain the alternating group.
pub fn babai_min_degree_ok(group: &PermGroup, cap: u64) -> Result<bool> {
    if !group.is_primitive() {
        return Err(Error::PreconditionViolated("group is not primitive".into()));
    }
    if group.contains_alternating() {
        return Err(Error::PreconditionViolated(
            "group contains the alternating group".into(),
        ));
    }
    let delta = group.minimum_degree(cap)?;
    Ok(babai_bound_holds(group.degree(), delta))
}
