//! Exhaustive check that the canonical generator of the chain-of-unknots
//! lens space diagram is alone in its spin^c class.
//!
//! A paired generator is a vector `u` with `0 <= u_j < c_j`. Its class
//! relative to the canonical generator `u = 0` is `sum_j n_j x_j mod x0`,
//! where `n_j = u_j [u_j != 0] - [u_{j-1} != 0]`.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arithmetic::pos_cf;

pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HkmError {
    #[error("bad coefficients: {0}")]
    BadCoefficient(String),
    #[error("sweep needs {needed} generators, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
}

/// `x_{n+1} = 0`, `x_n = 1`, `x_j = c_{j+1} x_{j+1} - x_{j+2}`.
pub fn x_sequence(coeffs: &[i64]) -> Result<Vec<i64>, HkmError> {
    if coeffs.is_empty() {
        return Err(HkmError::BadCoefficient("empty list".into()));
    }
    if let Some(c) = coeffs.iter().find(|&&c| c < 2) {
        return Err(HkmError::BadCoefficient(format!("{c} is below 2")));
    }
    let n = coeffs.len();
    let mut x = vec![0i64; n + 2];
    x[n] = 1;
    for j in (0..n).rev() {
        x[j] = coeffs[j]
            .checked_mul(x[j + 1])
            .and_then(|v| v.checked_sub(x[j + 2]))
            .ok_or_else(|| HkmError::BadCoefficient("sequence overflows".into()))?;
    }
    debug_assert_eq!(pos_cf(x[0], x[1]).ok().as_deref(), Some(coeffs));
    Ok(x)
}

/// The coefficients `n_1..n_n` of a paired generator.
pub fn region_coefficients(u: &[i64]) -> Vec<i64> {
    let mut prev_nonzero = false;
    u.iter()
        .map(|&uj| {
            let n = uj - i64::from(prev_nonzero);
            prev_nonzero = uj != 0;
            n
        })
        .collect()
}

/// `sum_j n_j x_j`, before reduction mod `x0`.
pub fn epsilon_sum(x: &[i64], u: &[i64]) -> i64 {
    region_coefficients(u)
        .iter()
        .enumerate()
        .map(|(j, n)| n * x[j + 1])
        .sum()
}

pub fn epsilon_class(x: &[i64], u: &[i64]) -> i64 {
    epsilon_sum(x, u).rem_euclid(x[0])
}

/// Which of the three local coefficient bounds fails, if any.
///
/// (a) `n_1 <= c_1 - 1`, and `n_j <= c_j - 2` when `u_{j-1} != 0`;
/// (b) `n_j` is `0` or `-1` when `u_j = 0`;
/// (c) every `-1` follows a positive coefficient with only zeros between.
pub fn coefficient_property_violation(coeffs: &[i64], u: &[i64]) -> Option<char> {
    let n = region_coefficients(u);
    if n[0] > coeffs[0] - 1 {
        return Some('a');
    }
    for j in 1..n.len() {
        if u[j - 1] != 0 && n[j] > coeffs[j] - 2 {
            return Some('a');
        }
    }
    if (0..n.len()).any(|j| u[j] == 0 && !(n[j] == 0 || n[j] == -1)) {
        return Some('b');
    }
    for j in (0..n.len()).filter(|&j| n[j] == -1) {
        let before = n[..j].iter().rev().find(|&&v| v != 0);
        if !matches!(before, Some(&v) if v > 0) {
            return Some('c');
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HkmReport {
    pub strong: bool,
    pub x_sequence: Vec<i64>,
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<i64>>,
    /// Generators violating one of the coefficient bounds.
    #[serde(skip)]
    pub property_violations: u64,
}

fn decode(mut index: u64, coeffs: &[i64], out: &mut [i64]) {
    for (slot, &c) in out.iter_mut().zip(coeffs).rev() {
        *slot = (index % c as u64) as i64;
        index /= c as u64;
    }
}

/// Sweeps every nonzero paired generator in mixed-radix order (last entry
/// fastest). The reported counterexample is the least one in that order.
pub fn verify_hkm_strong(coeffs: &[i64], budget: u64) -> Result<HkmReport, HkmError> {
    let x = x_sequence(coeffs)?;
    let total = coeffs.iter().map(|&c| c as u128).product::<u128>();
    if total - 1 > u128::from(budget) {
        return Err(HkmError::BudgetExceeded {
            needed: total - 1,
            budget,
        });
    }
    let total = total as u64;
    const CHUNK: u64 = 4096;
    let chunks = total.div_ceil(CHUNK);
    let (first_bad, violations) = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut u = vec![0; coeffs.len()];
            let mut first = None;
            let mut violations = 0u64;
            for index in (chunk * CHUNK).max(1)..((chunk + 1) * CHUNK).min(total) {
                decode(index, coeffs, &mut u);
                if coefficient_property_violation(coeffs, &u).is_some() {
                    violations += 1;
                }
                let sum = epsilon_sum(&x, &u);
                if first.is_none() && !(0 < sum && sum < x[0]) {
                    first = Some(index);
                }
            }
            (first, violations)
        })
        .reduce(
            || (None, 0),
            |(a, va), (b, vb)| {
                let first = match (a, b) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
                (first, va + vb)
            },
        );
    let counterexample = first_bad.map(|index| {
        let mut u = vec![0; coeffs.len()];
        decode(index, coeffs, &mut u);
        u
    });
    Ok(HkmReport {
        strong: counterexample.is_none(),
        x_sequence: x,
        checked: total - 1,
        counterexample,
        property_violations: violations,
    })
}
