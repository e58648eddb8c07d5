use std::fmt;

use super::{CfkError, Generator, KnotComplex};
use crate::gf2::{ChainComplexF2, ChainMapF2, MatrixF2};

/// Region of the `(i, j)` plane a subquotient is cut from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// `max(i, j - s) = 0`
    A(i32),
    /// `min(i, j - s) = 0`
    APrime(i32),
    /// `i = 0`
    B,
    /// `j = s`
    Horizontal(i32),
    /// `i = 0, j <= s`
    VerticalFiltered(i32),
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::A(s) => write!(f, "A_{s}"),
            Region::APrime(s) => write!(f, "A'_{s}"),
            Region::B => write!(f, "B"),
            Region::Horizontal(s) => write!(f, "C{{j={s}}}"),
            Region::VerticalFiltered(s) => write!(f, "C{{i=0,j<={s}}}"),
        }
    }
}

impl Region {
    /// Power of `U` placing generator `g` in the region, if any.
    pub fn placement(self, g: &Generator) -> Option<i32> {
        match self {
            Region::A(s) => Some((g.alexander - s).max(0)),
            Region::APrime(s) => Some((g.alexander - s).min(0)),
            Region::B => Some(0),
            Region::Horizontal(s) => Some(g.alexander - s),
            Region::VerticalFiltered(s) => (g.alexander <= s).then_some(0),
        }
    }
}

/// Basis element `U^u_power * generator` of a subquotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Placement {
    pub generator: usize,
    pub u_power: i32,
}

#[derive(Clone, Debug)]
pub struct SubquotientComplex {
    pub origin: Region,
    pub base: ChainComplexF2,
    pub placements: Vec<Placement>,
}

impl SubquotientComplex {
    pub fn dim(&self) -> usize {
        self.placements.len()
    }

    /// Basis position of a generator, if the region contains it.
    pub fn position(&self, generator: usize) -> Option<usize> {
        self.placements
            .iter()
            .position(|p| p.generator == generator)
    }

    /// Base label and `U` power for each basis label.
    pub fn generator_map<'a>(&'a self, c: &'a KnotComplex) -> Vec<(String, &'a str, i32)> {
        self.base
            .labels(0)
            .iter()
            .zip(&self.placements)
            .map(|(l, p)| {
                (
                    l.clone(),
                    c.generators()[p.generator].name.as_str(),
                    p.u_power,
                )
            })
            .collect()
    }

    pub fn boundary(&self) -> MatrixF2 {
        self.base.boundary(0)
    }
}

fn placed_label(name: &str, u_power: i32) -> String {
    match u_power {
        0 => name.to_string(),
        1 => format!("U {name}"),
        m => format!("U^{m} {name}"),
    }
}

fn build(c: &KnotComplex, origin: Region) -> Result<SubquotientComplex, CfkError> {
    c.ensure_valid()?;
    Ok(build_unchecked(c, origin))
}

pub(crate) fn build_unchecked(c: &KnotComplex, origin: Region) -> SubquotientComplex {
    let mut position = vec![None; c.len()];
    let mut placements = Vec::new();
    for (i, g) in c.generators().iter().enumerate() {
        if let Some(u_power) = origin.placement(g) {
            position[i] = Some(placements.len());
            placements.push(Placement {
                generator: i,
                u_power,
            });
        }
    }
    let n = placements.len();
    let mut boundary = MatrixF2::zeros(n, n);
    for a in c.arrows() {
        if let (Some(px), Some(py)) = (position[a.from], position[a.to]) {
            if placements[px].u_power + a.u_power as i32 == placements[py].u_power {
                boundary.toggle(py, px);
            }
        }
    }
    let labels = placements
        .iter()
        .map(|p| placed_label(&c.generators()[p.generator].name, p.u_power))
        .collect();
    let base = ChainComplexF2::ungraded(labels, boundary)
        .expect("subquotient of a valid complex squares to zero");
    SubquotientComplex {
        origin,
        base,
        placements,
    }
}

pub fn complex_b(c: &KnotComplex) -> Result<SubquotientComplex, CfkError> {
    build(c, Region::B)
}

pub fn complex_a(c: &KnotComplex, s: i32) -> Result<SubquotientComplex, CfkError> {
    build(c, Region::A(s))
}

pub fn complex_a_prime(c: &KnotComplex, s: i32) -> Result<SubquotientComplex, CfkError> {
    build(c, Region::APrime(s))
}

pub fn horizontal_slice(c: &KnotComplex, s: i32) -> Result<SubquotientComplex, CfkError> {
    build(c, Region::Horizontal(s))
}

pub fn vertical_filtered(c: &KnotComplex, s: i32) -> Result<SubquotientComplex, CfkError> {
    build(c, Region::VerticalFiltered(s))
}

/// Matrix of `v_s: A_s -> B` in the generator bases (both indexed by
/// generator order).
pub(crate) fn v_matrix(c: &KnotComplex, s: i32) -> MatrixF2 {
    let n = c.len();
    let entries = (0..n).filter(|&i| c.alexander(i) <= s).map(|i| (i, i));
    MatrixF2::from_entries(n, n, entries).expect("diagonal entries")
}

/// Matrix of `h_s: A_s -> B`: project onto `C{j = s}` and flip.
pub(crate) fn h_matrix(c: &KnotComplex, s: i32) -> Result<MatrixF2, CfkError> {
    let perm = c
        .involution()
        .ok_or_else(|| CfkError::MissingInvolution(c.name().to_string()))?;
    let n = c.len();
    let entries = (0..n)
        .filter(|&i| c.alexander(i) >= s)
        .map(|i| (perm[i], i));
    Ok(MatrixF2::from_entries(n, n, entries).expect("permutation entries"))
}

pub(crate) fn v_prime_matrix(c: &KnotComplex, s: i32) -> MatrixF2 {
    let n = c.len();
    let entries = (0..n).filter(|&i| c.alexander(i) >= s).map(|i| (i, i));
    MatrixF2::from_entries(n, n, entries).expect("diagonal entries")
}

pub fn v_map(c: &KnotComplex, s: i32) -> Result<ChainMapF2, CfkError> {
    let a = complex_a(c, s)?;
    let b = build_unchecked(c, Region::B);
    Ok(ChainMapF2::ungraded(a.base, b.base, v_matrix(c, s))?)
}

pub fn h_map(c: &KnotComplex, s: i32) -> Result<ChainMapF2, CfkError> {
    let a = complex_a(c, s)?;
    let m = h_matrix(c, s)?;
    let b = build_unchecked(c, Region::B);
    Ok(ChainMapF2::ungraded(a.base, b.base, m)?)
}

pub fn v_prime_map(c: &KnotComplex, s: i32) -> Result<ChainMapF2, CfkError> {
    let b = complex_b(c)?;
    let a = build_unchecked(c, Region::APrime(s));
    Ok(ChainMapF2::ungraded(b.base, a.base, v_prime_matrix(c, s))?)
}

/// Inclusion `C{i = 0, j <= s} -> B`.
pub fn vertical_filtered_inclusion(c: &KnotComplex, s: i32) -> Result<ChainMapF2, CfkError> {
    let sub = vertical_filtered(c, s)?;
    let b = build_unchecked(c, Region::B);
    let entries = sub
        .placements
        .iter()
        .enumerate()
        .map(|(col, p)| (p.generator, col));
    let m = MatrixF2::from_entries(c.len(), sub.dim(), entries)?;
    Ok(ChainMapF2::ungraded(sub.base, b.base, m)?)
}
