//! Finitely generated models of the full knot Floer complex, their standard
//! constructions, and the subquotient complexes and structure maps used by
//! the surgery formula.
//!
//! A generator `x` is placed at filtration level `(i, j) = (0, A(x))` and
//! `U^n x` at `(-n, A(x) - n)`. Every region used here contains exactly one
//! `U`-translate of each generator (or none), so a region is described by a
//! placement `x -> Option<m>` and the induced differential keeps the arrow
//! `x -> U^n y` exactly when `m(x) + n = m(y)`.

mod complex;
mod constructors;
mod format;
mod subquotient;

pub use complex::{Arrow, Diagnostic, Generator, KnotComplex};
pub use constructors::{box_complex, direct_sum, mirror, staircase, tensor, unknot};
pub use format::{ComplexFile, DifferentialEntry, GeneratorEntry};
pub use subquotient::{
    complex_a, complex_a_prime, complex_b, h_map, horizontal_slice, v_map, v_prime_map,
    vertical_filtered, vertical_filtered_inclusion, Placement, Region, SubquotientComplex,
};

use thiserror::Error;

use crate::gf2::Gf2Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfkError {
    #[error("duplicate generator label {0:?}")]
    DuplicateGenerator(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("bad involution: {0}")]
    BadInvolution(String),
    #[error("invalid complex: {}", join_diagnostics(.0))]
    InvalidComplex(Vec<Diagnostic>),
    #[error("staircase needs at least one step")]
    EmptySteps,
    #[error("staircase needs an even number of steps, got {0}")]
    OddSteps(usize),
    #[error("staircase steps must be positive")]
    NonPositiveStep,
    #[error("staircase steps must read the same in both directions")]
    AsymmetricSteps,
    #[error("complex {0:?} has no involution")]
    MissingInvolution(String),
    #[error("malformed complex file: {0}")]
    Format(String),
    #[error(transparent)]
    Algebra(#[from] Gf2Error),
}

fn join_diagnostics(d: &[Diagnostic]) -> String {
    d.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
