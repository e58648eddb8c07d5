//! Truncated mapping cone for rational surgery.
//!
//! Summands are `(k, A_{floor(k/q)})` and `(k, B)`, with
//! `D(k, x) = (k, v(x)) + (k + p, h(x))`. The truncation keeps
//!
//! * `A_k` for `k` in `[kmin, kmax]` with `kmin = -q b` and
//!   `kmax = max(q (b + 1) - 1, kmin + |p| - 1)`,
//! * `B_j` for `j` in `[kmin + p, kmax]`,
//!
//! where `b` is the window. Once `b > width`, every dropped `A_k` has `v`
//! or `h` an isomorphism onto a dropped `B`, so the dropped part is acyclic:
//! a quotient complex when `p > 0` and a subcomplex when `p <= 0`. The same
//! block assembly serves every sign of `p`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cfk::{complex_a, complex_b, h_map, v_map, CfkError, KnotComplex, SubquotientComplex};
use crate::gf2::{
    homology, mapping_cone, ChainComplexF2, ChainMapF2, F2Vector, Gf2Error, MatrixF2,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error(transparent)]
    Cfk(#[from] CfkError),
    #[error(transparent)]
    Algebra(#[from] Gf2Error),
    #[error("invalid slope {p}/{q}: need q >= 1 and gcd(|p|, q) = 1")]
    InvalidSlope { p: i64, q: i64 },
    #[error("window {window} is below width + 1 = {required}")]
    WindowTooSmall { window: u32, required: u32 },
    #[error("B summand at k = {k} lies outside the truncation [{lo}, {hi}]")]
    IndexOutsideTruncation { k: i64, lo: i64, hi: i64 },
    #[error("vertical homology has dimension {0}, expected 1")]
    NotKnotLike(usize),
    #[error("c1 + p + q - 1 = {0} is odd")]
    ParityError(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SurgerySlope {
    p: i64,
    q: i64,
}

impl SurgerySlope {
    pub fn new(p: i64, q: i64) -> Result<Self, ConeError> {
        if q < 1 || p.unsigned_abs().gcd(&q.unsigned_abs()) != 1 {
            return Err(ConeError::InvalidSlope { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn negated(&self) -> Self {
        Self {
            p: -self.p,
            q: self.q,
        }
    }

    /// Spin^c label of index `k`: `k mod |p|`, or `k` itself when `p = 0`.
    pub fn residue(&self, k: i64) -> i64 {
        if self.p == 0 {
            k
        } else {
            k.rem_euclid(self.p.abs())
        }
    }
}

impl fmt::Display for SurgerySlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// `<c1(s), [S]> = 2k - p - q + 1`.
pub fn spinc_chern_from_k(slope: SurgerySlope, k: i64) -> i64 {
    2 * k - slope.p - slope.q + 1
}

pub fn k_from_chern(slope: SurgerySlope, c1: i64) -> Result<i64, ConeError> {
    let twice = c1 + slope.p + slope.q - 1;
    if twice % 2 != 0 {
        return Err(ConeError::ParityError(twice));
    }
    Ok(twice / 2)
}

pub fn default_window(c: &KnotComplex) -> u32 {
    c.width() + 1
}

#[derive(Clone, Debug)]
pub struct ConeComplex {
    pub slope: SurgerySlope,
    pub window: u32,
    /// Inclusive range of retained `A` indices.
    pub a_range: (i64, i64),
    /// Inclusive range of retained `B` indices; empty when `lo > hi`.
    pub b_range: (i64, i64),
    /// `A_s` for every `s = floor(k/q)` that occurs.
    pub a_summands: BTreeMap<i32, SubquotientComplex>,
    pub b_summand: SubquotientComplex,
    v_blocks: BTreeMap<i32, MatrixF2>,
    h_blocks: BTreeMap<i32, MatrixF2>,
}

/// The part of the cone in one spin^c residue, as the mapping cone of
/// `D: (A summands) -> (B summands)`. `A` coordinates come first.
#[derive(Clone, Debug)]
pub struct ResidueBlock {
    pub residue: i64,
    pub complex: ChainComplexF2,
    pub a_offsets: Vec<(i64, usize)>,
    pub b_offsets: Vec<(i64, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyClass {
    pub residue: i64,
    /// Coordinates in the representative basis of the residue block.
    pub coordinates: Vec<u8>,
    pub is_zero: bool,
    /// Homology dimension of the residue block containing the class.
    pub block_dim: usize,
}

pub fn build_cone(
    c: &KnotComplex,
    slope: SurgerySlope,
    window: u32,
) -> Result<ConeComplex, ConeError> {
    ensure_involution(c)?;
    let required = default_window(c);
    if window < required {
        return Err(ConeError::WindowTooSmall { window, required });
    }
    let (p, q, b) = (slope.p, slope.q, i64::from(window));
    let kmin = -q * b;
    let kmax = (q * (b + 1) - 1).max(kmin + p.abs() - 1);
    let s_of = |k: i64| k.div_euclid(q) as i32;

    let mut a_summands = BTreeMap::new();
    let mut v_blocks = BTreeMap::new();
    let mut h_blocks = BTreeMap::new();
    for s in s_of(kmin)..=s_of(kmax) {
        a_summands.insert(s, complex_a(c, s)?);
        v_blocks.insert(s, v_map(c, s)?.block(0));
        h_blocks.insert(s, h_map(c, s)?.block(0));
    }
    Ok(ConeComplex {
        slope,
        window,
        a_range: (kmin, kmax),
        b_range: (kmin + p, kmax),
        a_summands,
        b_summand: complex_b(c)?,
        v_blocks,
        h_blocks,
    })
}

fn ensure_involution(c: &KnotComplex) -> Result<(), CfkError> {
    c.ensure_valid()?;
    match c.involution() {
        Some(_) => Ok(()),
        None => Err(CfkError::MissingInvolution(c.name().to_string())),
    }
}

impl ConeComplex {
    fn s_of(&self, k: i64) -> i32 {
        k.div_euclid(self.slope.q) as i32
    }

    fn b_contains(&self, j: i64) -> bool {
        self.b_range.0 <= j && j <= self.b_range.1
    }

    /// Residues in increasing order.
    pub fn residues(&self) -> Vec<i64> {
        if self.slope.p == 0 {
            (self.a_range.0..=self.a_range.1).collect()
        } else {
            (0..self.slope.p.abs()).collect()
        }
    }

    pub fn residue_block(&self, residue: i64) -> Result<ResidueBlock, ConeError> {
        let slope = self.slope;
        let a_ks: Vec<i64> = (self.a_range.0..=self.a_range.1)
            .filter(|&k| slope.residue(k) == residue)
            .collect();
        let b_js: Vec<i64> = (self.b_range.0..=self.b_range.1)
            .filter(|&j| slope.residue(j) == residue)
            .collect();

        let mut a_offsets = Vec::with_capacity(a_ks.len());
        let mut a_labels = Vec::new();
        let mut a_dim = 0;
        for &k in &a_ks {
            a_offsets.push((k, a_dim));
            let summand = &self.a_summands[&self.s_of(k)];
            a_labels.extend(summand.base.labels(0).iter().map(|l| format!("A[{k}]:{l}")));
            a_dim += summand.dim();
        }
        let n_b = self.b_summand.dim();
        let b_labels: Vec<String> = b_js
            .iter()
            .flat_map(|j| {
                self.b_summand
                    .base
                    .labels(0)
                    .iter()
                    .map(move |l| format!("B[{j}]:{l}"))
            })
            .collect();
        let b_offsets: Vec<(i64, usize)> = b_js
            .iter()
            .enumerate()
            .map(|(i, &j)| (j, i * n_b))
            .collect();
        let b_position = |j: i64| b_offsets.iter().find(|(jj, _)| *jj == j).map(|&(_, o)| o);

        let mut a_boundary = MatrixF2::zeros(a_dim, a_dim);
        let mut d = MatrixF2::zeros(b_labels.len(), a_dim);
        for &(k, off) in &a_offsets {
            let s = self.s_of(k);
            a_boundary.add_block(off, off, &self.a_summands[&s].boundary());
            if let Some(row) = b_position(k) {
                d.add_block(row, off, &self.v_blocks[&s]);
            }
            if let Some(row) = b_position(k + slope.p) {
                d.add_block(row, off, &self.h_blocks[&s]);
            }
        }
        let mut b_boundary = MatrixF2::zeros(b_labels.len(), b_labels.len());
        let single = self.b_summand.boundary();
        for &(_, off) in &b_offsets {
            b_boundary.add_block(off, off, &single);
        }

        let source = ChainComplexF2::ungraded(a_labels, a_boundary)?;
        let target = ChainComplexF2::ungraded(b_labels, b_boundary)?;
        let complex = mapping_cone(&ChainMapF2::ungraded(source, target, d)?)?;
        Ok(ResidueBlock {
            residue,
            complex,
            a_offsets,
            b_offsets: b_offsets.iter().map(|&(j, o)| (j, o + a_dim)).collect(),
        })
    }

    /// Homology dimension of every residue block, computed in parallel.
    pub fn homology_by_residue(&self) -> Result<BTreeMap<i64, usize>, ConeError> {
        self.residues()
            .into_par_iter()
            .map(|r| {
                let block = self.residue_block(r)?;
                Ok((r, homology(&block.complex)?.total_dim()))
            })
            .collect()
    }

    /// Image of the generator of `H(B)` placed at index `k`.
    pub fn inclusion_image(&self, k: i64) -> Result<HomologyClass, ConeError> {
        if !self.b_contains(k) {
            return Err(ConeError::IndexOutsideTruncation {
                k,
                lo: self.b_range.0,
                hi: self.b_range.1,
            });
        }
        let hb = homology(&self.b_summand.base)?;
        if hb.total_dim() != 1 {
            return Err(ConeError::NotKnotLike(hb.total_dim()));
        }
        let generator = &hb.group(0).expect("ungraded bucket").representatives[0];
        let residue = self.slope.residue(k);
        let block = self.residue_block(residue)?;
        let offset = block
            .b_offsets
            .iter()
            .find(|(j, _)| *j == k)
            .map(|&(_, o)| o)
            .expect("k is retained");
        let cycle = generator.embed(block.complex.dim(0), offset);
        let h = homology(&block.complex)?;
        let coords: F2Vector = h.group(0).expect("ungraded bucket").coordinates(&cycle)?;
        Ok(HomologyClass {
            residue,
            coordinates: coords.to_bits().into_iter().map(u8::from).collect(),
            is_zero: coords.is_zero(),
            block_dim: h.total_dim(),
        })
    }
}

/// Per-residue homology dimensions with the default window.
pub fn cone_homology(
    c: &KnotComplex,
    slope: SurgerySlope,
) -> Result<BTreeMap<i64, usize>, ConeError> {
    build_cone(c, slope, default_window(c))?.homology_by_residue()
}

/// Smallest window at least `width + 1` whose truncation retains `(k, B)`.
pub fn window_for_index(c: &KnotComplex, slope: SurgerySlope, k: i64) -> u32 {
    let (p, q) = (slope.p, slope.q);
    let mut b = default_window(c);
    loop {
        let bb = i64::from(b);
        let kmin = -q * bb;
        let kmax = (q * (bb + 1) - 1).max(kmin + p.abs() - 1);
        if kmin + p <= k && k <= kmax {
            return b;
        }
        b += 1;
    }
}

pub fn inclusion_image(
    c: &KnotComplex,
    slope: SurgerySlope,
    k: i64,
) -> Result<HomologyClass, ConeError> {
    build_cone(c, slope, window_for_index(c, slope, k))?.inclusion_image(k)
}
