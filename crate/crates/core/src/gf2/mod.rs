//! Linear algebra over the two-element field and homology of finite chain
//! complexes.

mod complex;
mod matrix;
mod vector;

pub use complex::{
    homology, homology_rank, induced_map_on_homology, is_surjective_on_homology,
    is_zero_on_homology, mapping_cone, ChainComplexF2, ChainMapF2, Homology, HomologyGroup,
};
pub use matrix::MatrixF2;
pub use vector::F2Vector;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("duplicate entry ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("boundary squares to a nonzero map at grading {grading}")]
    InvalidComplex { grading: i32 },
    #[error("map does not commute with the boundaries at grading {grading}")]
    NotChainMap { grading: i32 },
    #[error("vector is not a cycle")]
    NotACycle,
}
