//! Concordance invariants read off the structure maps.
//!
//! Every search runs over `[-width - 1, width + 1]`; outside that range the
//! subquotients coincide with `B` and the answers are forced.

use serde::Serialize;
use thiserror::Error;

use crate::cfk::{
    complex_b, v_map, v_prime_map, vertical_filtered_inclusion, CfkError, KnotComplex,
};
use crate::gf2::{homology, is_surjective_on_homology, is_zero_on_homology, Gf2Error};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Cfk(#[from] CfkError),
    #[error(transparent)]
    Algebra(#[from] Gf2Error),
    #[error("vertical homology has dimension {0}, expected 1")]
    NotKnotLike(usize),
    #[error("structure maps at tau = {tau} match no epsilon case")]
    EpsilonUndetermined { tau: i32 },
    #[error("v_s is not monotone in s (changes at s = {0})")]
    NonMonotone(i32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub tau: i32,
    pub nu: i32,
    pub epsilon: i32,
    pub width: u32,
}

fn search_range(c: &KnotComplex) -> std::ops::RangeInclusive<i32> {
    let w = c.width() as i32;
    -w - 1..=w + 1
}

fn ensure_knot_like(c: &KnotComplex) -> Result<(), InvariantError> {
    let b = complex_b(c)?;
    let dim = homology(&b.base)?.total_dim();
    if dim == 1 {
        Ok(())
    } else {
        Err(InvariantError::NotKnotLike(dim))
    }
}

/// Least `s` for which `C{i = 0, j <= s}` carries the generator of `H(B)`.
pub fn tau(c: &KnotComplex) -> Result<i32, InvariantError> {
    ensure_knot_like(c)?;
    for s in search_range(c) {
        if is_surjective_on_homology(&vertical_filtered_inclusion(c, s)?)? {
            return Ok(s);
        }
    }
    unreachable!("the inclusion is the identity once s >= width")
}

/// Least `s` for which `v_s` is onto in homology. Also checks that `v_s`
/// is zero below that value and onto above it.
pub fn nu(c: &KnotComplex) -> Result<i32, InvariantError> {
    ensure_knot_like(c)?;
    let mut found = None;
    for s in search_range(c) {
        let onto = is_surjective_on_homology(&v_map(c, s)?)?;
        match (found, onto) {
            (None, true) => found = Some(s),
            (Some(_), false) => return Err(InvariantError::NonMonotone(s)),
            (None, false) => {
                if !is_zero_on_homology(&v_map(c, s)?)? {
                    return Err(InvariantError::NonMonotone(s));
                }
            }
            (Some(_), true) => {}
        }
    }
    Ok(found.expect("v_s is the identity once s >= width"))
}

pub fn epsilon(c: &KnotComplex) -> Result<i32, InvariantError> {
    epsilon_at(c, tau(c)?)
}

fn epsilon_at(c: &KnotComplex, t: i32) -> Result<i32, InvariantError> {
    let v_onto = is_surjective_on_homology(&v_map(c, t)?)?;
    let v_zero = is_zero_on_homology(&v_map(c, t)?)?;
    let vp_zero = is_zero_on_homology(&v_prime_map(c, t)?)?;
    match (v_onto, v_zero, vp_zero) {
        (true, _, true) => Ok(1),
        (true, _, false) => Ok(0),
        (false, true, false) => Ok(-1),
        _ => Err(InvariantError::EpsilonUndetermined { tau: t }),
    }
}

pub fn invariants(c: &KnotComplex) -> Result<InvariantReport, InvariantError> {
    let t = tau(c)?;
    Ok(InvariantReport {
        tau: t,
        nu: nu(c)?,
        epsilon: epsilon_at(c, t)?,
        width: c.width(),
    })
}
