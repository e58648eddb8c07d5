//! Contact surgery on Legendrian knots: the smooth slope, the cone index of
//! the contact class, the decision rule in terms of `tau` and `epsilon`, and
//! the direct computation it must agree with.

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::cfk::{mirror, KnotComplex};
use crate::cone::{inclusion_image, ConeError, HomologyClass, SurgerySlope};
use crate::invariants::{invariants, InvariantError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContactError {
    #[error("coefficient {x}/{y} must be a reduced fraction with x/y >= 1")]
    InvalidCoefficient { x: i64, y: i64 },
    #[error("tb + rot = {0} must be odd")]
    ParityError(i64),
    #[error("tb + |rot| = {bound} exceeds 2 tau - 1 = {limit}")]
    BennequinViolation { bound: i64, limit: i64 },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error("decision says {decided}, cone computation says {computed}")]
    Disagreement { decided: bool, computed: bool },
}

#[derive(Clone, Debug)]
pub struct LegendrianData {
    pub tb: i64,
    pub rot: i64,
    pub complex: KnotComplex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ContactCoefficient {
    x: i64,
    y: i64,
}

impl ContactCoefficient {
    pub fn new(x: i64, y: i64) -> Result<Self, ContactError> {
        if y < 1 || x < y || x.gcd(&y) != 1 {
            return Err(ContactError::InvalidCoefficient { x, y });
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerdictReason {
    SlopeAboveThreshold,
    SlopeAtOrAboveTwoTau,
    BelowMaximalTbRot,
    EpsilonNegative,
    SlopeTooSmall,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContactVerdict {
    pub nonzero: bool,
    pub reason: VerdictReason,
    pub k: i64,
    pub slope: SurgerySlope,
    pub tau: i32,
    pub epsilon: i32,
}

/// Report combining the decision and the cone computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContactReport {
    pub nonzero: bool,
    pub reason: VerdictReason,
    pub tau: i32,
    pub epsilon: i32,
    pub tb: i64,
    pub rot: i64,
    pub x: i64,
    pub y: i64,
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub residue: i64,
}

/// `p = x + y tb`, `q = y`.
pub fn smooth_slope(tb: i64, c: ContactCoefficient) -> SurgerySlope {
    SurgerySlope::new(c.x + c.y * tb, c.y).expect("gcd(x + y tb, y) = gcd(x, y) = 1")
}

/// `k = ((rot - tb + 1) q - 2) / 2`.
pub fn cone_k_index(tb: i64, rot: i64, q: i64) -> Result<i64, ContactError> {
    if (tb + rot).rem_euclid(2) != 1 {
        return Err(ContactError::ParityError(tb + rot));
    }
    let twice = (rot - tb + 1) * q - 2;
    let k = twice / 2;
    debug_assert_eq!(2 * k, -(tb - rot + 1) * q + 2 * q - 2);
    Ok(k)
}

fn check_legendrian(l: &LegendrianData, tau: i32) -> Result<(), ContactError> {
    if (l.tb + l.rot).rem_euclid(2) != 1 {
        return Err(ContactError::ParityError(l.tb + l.rot));
    }
    let bound = l.tb + l.rot.abs();
    let limit = 2 * i64::from(tau) - 1;
    if bound > limit {
        return Err(ContactError::BennequinViolation { bound, limit });
    }
    Ok(())
}

pub fn decide_contact_invariant(
    l: &LegendrianData,
    c: ContactCoefficient,
) -> Result<ContactVerdict, ContactError> {
    let inv = invariants(&l.complex)?;
    decide_with(l, c, inv.tau, inv.epsilon)
}

fn decide_with(
    l: &LegendrianData,
    c: ContactCoefficient,
    tau: i32,
    epsilon: i32,
) -> Result<ContactVerdict, ContactError> {
    check_legendrian(l, tau)?;
    let slope = smooth_slope(l.tb, c);
    let k = cone_k_index(l.tb, l.rot, slope.q())?;
    let threshold = 2 * i64::from(tau) - 1;
    let (p, q) = (slope.p(), slope.q());
    let (nonzero, reason) = if l.tb - l.rot < threshold {
        (false, VerdictReason::BelowMaximalTbRot)
    } else {
        match epsilon {
            1 if p > threshold * q => (true, VerdictReason::SlopeAboveThreshold),
            0 if p >= (threshold + 1) * q => (true, VerdictReason::SlopeAtOrAboveTwoTau),
            1 | 0 => (false, VerdictReason::SlopeTooSmall),
            _ => (false, VerdictReason::EpsilonNegative),
        }
    };
    Ok(ContactVerdict {
        nonzero,
        reason,
        k,
        slope,
        tau,
        epsilon,
    })
}

/// Image of `(k, B)` in the cone of `-p/q` surgery on the mirror.
pub fn compute_contact_invariant(
    l: &LegendrianData,
    c: ContactCoefficient,
) -> Result<HomologyClass, ContactError> {
    let tau = crate::invariants::tau(&l.complex)?;
    check_legendrian(l, tau)?;
    let slope = smooth_slope(l.tb, c);
    let k = cone_k_index(l.tb, l.rot, slope.q())?;
    let m = mirror(&l.complex).map_err(InvariantError::from)?;
    Ok(inclusion_image(&m, slope.negated(), k)?)
}

/// Runs both routes and fails with [`ContactError::Disagreement`] if they
/// differ.
pub fn contact_report(
    l: &LegendrianData,
    c: ContactCoefficient,
) -> Result<(ContactReport, HomologyClass), ContactError> {
    let verdict = decide_contact_invariant(l, c)?;
    let class = compute_contact_invariant(l, c)?;
    if verdict.nonzero == class.is_zero {
        return Err(ContactError::Disagreement {
            decided: verdict.nonzero,
            computed: !class.is_zero,
        });
    }
    let report = ContactReport {
        nonzero: verdict.nonzero,
        reason: verdict.reason,
        tau: verdict.tau,
        epsilon: verdict.epsilon,
        tb: l.tb,
        rot: l.rot,
        x: c.x,
        y: c.y,
        p: verdict.slope.p(),
        q: verdict.slope.q(),
        k: verdict.k,
        residue: class.residue,
    };
    Ok((report, class))
}
