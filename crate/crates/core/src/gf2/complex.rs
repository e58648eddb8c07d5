use std::collections::BTreeMap;

use super::matrix::Echelon;
use super::{F2Vector, Gf2Error, MatrixF2};

/// Finite chain complex of vector spaces over the two-element field.
///
/// In graded mode the boundary at grading `d` maps degree `d` to `d - 1`.
/// In ungraded mode there is a single bucket `0` and the boundary is an
/// endomorphism of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexF2 {
    graded: bool,
    labels: BTreeMap<i32, Vec<String>>,
    boundaries: BTreeMap<i32, MatrixF2>,
}

impl ChainComplexF2 {
    pub fn graded(
        labels: BTreeMap<i32, Vec<String>>,
        boundaries: BTreeMap<i32, MatrixF2>,
    ) -> Result<Self, Gf2Error> {
        let c = Self {
            graded: true,
            labels,
            boundaries,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn ungraded(labels: Vec<String>, boundary: MatrixF2) -> Result<Self, Gf2Error> {
        let c = Self {
            graded: false,
            labels: BTreeMap::from([(0, labels)]),
            boundaries: BTreeMap::from([(0, boundary)]),
        };
        c.validate()?;
        Ok(c)
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// Grading that the boundary out of `d` lands in.
    pub fn boundary_target(&self, d: i32) -> i32 {
        if self.graded {
            d - 1
        } else {
            d
        }
    }

    /// Grading whose boundary lands in `d`.
    pub fn boundary_source(&self, d: i32) -> i32 {
        if self.graded {
            d + 1
        } else {
            d
        }
    }

    pub fn gradings(&self) -> impl Iterator<Item = i32> + '_ {
        self.labels.keys().copied()
    }

    pub fn dim(&self, d: i32) -> usize {
        self.labels.get(&d).map_or(0, Vec::len)
    }

    pub fn total_dim(&self) -> usize {
        self.labels.values().map(Vec::len).sum()
    }

    pub fn labels(&self, d: i32) -> &[String] {
        self.labels.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn boundary(&self, d: i32) -> MatrixF2 {
        self.boundaries
            .get(&d)
            .cloned()
            .unwrap_or_else(|| MatrixF2::zeros(self.dim(self.boundary_target(d)), self.dim(d)))
    }

    pub fn validate(&self) -> Result<(), Gf2Error> {
        if !self.graded && self.labels.keys().any(|&d| d != 0) {
            return Err(Gf2Error::ShapeMismatch(
                "ungraded complexes live in grading 0".into(),
            ));
        }
        for (&d, m) in &self.boundaries {
            let expected = (self.dim(self.boundary_target(d)), self.dim(d));
            if (m.rows(), m.cols()) != expected {
                return Err(Gf2Error::ShapeMismatch(format!(
                    "boundary at grading {d} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    expected.0,
                    expected.1
                )));
            }
        }
        for &d in self.boundaries.keys() {
            let next = self.boundary(self.boundary_target(d));
            if !next.mul(&self.boundary(d)).is_zero() {
                return Err(Gf2Error::InvalidComplex { grading: d });
            }
        }
        Ok(())
    }
}

/// Homology in one grading together with a fixed basis of representatives.
#[derive(Clone, Debug)]
pub struct HomologyGroup {
    pub grading: i32,
    pub representatives: Vec<F2Vector>,
    reducer: Echelon,
    chain_dim: usize,
}

impl HomologyGroup {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of `cycle` in the representative basis.
    pub fn coordinates(&self, cycle: &F2Vector) -> Result<F2Vector, Gf2Error> {
        if cycle.len() != self.chain_dim {
            return Err(Gf2Error::ShapeMismatch(format!(
                "vector of length {} in a grading of dimension {}",
                cycle.len(),
                self.chain_dim
            )));
        }
        let (rest, coords) = self
            .reducer
            .reduce(cycle.clone(), F2Vector::zeros(self.dim()));
        if rest.is_zero() {
            Ok(coords)
        } else {
            Err(Gf2Error::NotACycle)
        }
    }
}

#[derive(Clone, Debug)]
pub struct Homology {
    pub groups: BTreeMap<i32, HomologyGroup>,
}

impl Homology {
    pub fn dim(&self, d: i32) -> usize {
        self.groups.get(&d).map_or(0, HomologyGroup::dim)
    }

    pub fn total_dim(&self) -> usize {
        self.groups.values().map(HomologyGroup::dim).sum()
    }

    pub fn group(&self, d: i32) -> Option<&HomologyGroup> {
        self.groups.get(&d)
    }

    pub fn dims(&self) -> BTreeMap<i32, usize> {
        self.groups.iter().map(|(&d, g)| (d, g.dim())).collect()
    }
}

/// Homology with deterministic cycle representatives.
///
/// Representatives are the kernel basis vectors (reduced echelon order)
/// that are independent modulo boundaries, each reduced against the
/// boundaries and the earlier representatives.
pub fn homology(c: &ChainComplexF2) -> Result<Homology, Gf2Error> {
    c.validate()?;
    let mut groups = BTreeMap::new();
    for d in c.gradings() {
        let n = c.dim(d);
        let incoming = c.boundary(c.boundary_source(d));
        let cycles = c.boundary(d).kernel_basis();
        let h_dim = cycles.len() - incoming.rank();

        let mut reducer = Echelon::new(n, h_dim);
        for col in incoming.dense_columns() {
            reducer.insert(col, F2Vector::zeros(h_dim));
        }
        let mut representatives = Vec::with_capacity(h_dim);
        for z in cycles {
            let (rest, _) = reducer.reduce(z, F2Vector::zeros(h_dim));
            if !rest.is_zero() {
                let tag = F2Vector::unit(h_dim, representatives.len());
                representatives.push(rest.clone());
                reducer.insert_reduced(rest, tag);
            }
        }
        debug_assert_eq!(representatives.len(), h_dim);
        groups.insert(
            d,
            HomologyGroup {
                grading: d,
                representatives,
                reducer,
                chain_dim: n,
            },
        );
    }
    Ok(Homology { groups })
}

/// Chain map between two complexes, one matrix block per source grading.
#[derive(Clone, Debug)]
pub struct ChainMapF2 {
    source: ChainComplexF2,
    target: ChainComplexF2,
    blocks: BTreeMap<i32, MatrixF2>,
    degree_shift: i32,
}

impl ChainMapF2 {
    pub fn new(
        source: ChainComplexF2,
        target: ChainComplexF2,
        blocks: BTreeMap<i32, MatrixF2>,
        degree_shift: i32,
    ) -> Result<Self, Gf2Error> {
        if source.is_graded() != target.is_graded() {
            return Err(Gf2Error::ShapeMismatch(
                "cannot map between graded and ungraded complexes".into(),
            ));
        }
        if !source.is_graded() && degree_shift != 0 {
            return Err(Gf2Error::ShapeMismatch(
                "ungraded maps have degree shift 0".into(),
            ));
        }
        let f = Self {
            source,
            target,
            blocks,
            degree_shift,
        };
        f.check()?;
        Ok(f)
    }

    /// Ungraded map given by a single matrix.
    pub fn ungraded(
        source: ChainComplexF2,
        target: ChainComplexF2,
        matrix: MatrixF2,
    ) -> Result<Self, Gf2Error> {
        Self::new(source, target, BTreeMap::from([(0, matrix)]), 0)
    }

    pub fn identity(c: &ChainComplexF2) -> Self {
        let blocks = c
            .gradings()
            .map(|d| (d, MatrixF2::identity(c.dim(d))))
            .collect();
        Self {
            source: c.clone(),
            target: c.clone(),
            blocks,
            degree_shift: 0,
        }
    }

    pub fn source(&self) -> &ChainComplexF2 {
        &self.source
    }

    pub fn target(&self) -> &ChainComplexF2 {
        &self.target
    }

    pub fn degree_shift(&self) -> i32 {
        self.degree_shift
    }

    pub fn block(&self, d: i32) -> MatrixF2 {
        self.blocks.get(&d).cloned().unwrap_or_else(|| {
            MatrixF2::zeros(self.target.dim(d + self.degree_shift), self.source.dim(d))
        })
    }

    fn check(&self) -> Result<(), Gf2Error> {
        for (&d, m) in &self.blocks {
            let expected = (self.target.dim(d + self.degree_shift), self.source.dim(d));
            if (m.rows(), m.cols()) != expected {
                return Err(Gf2Error::ShapeMismatch(format!(
                    "map block at grading {d} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    expected.0,
                    expected.1
                )));
            }
        }
        for d in self.source.gradings() {
            let lower = self.source.boundary_target(d);
            let lhs = self.block(lower).mul(&self.source.boundary(d));
            let rhs = self
                .target
                .boundary(d + self.degree_shift)
                .mul(&self.block(d));
            if lhs != rhs {
                return Err(Gf2Error::NotChainMap { grading: d });
            }
        }
        Ok(())
    }
}

/// Matrix of `f_*` per source grading, in the representative bases that
/// [`homology`] fixes on source and target.
pub fn induced_map_on_homology(f: &ChainMapF2) -> Result<BTreeMap<i32, MatrixF2>, Gf2Error> {
    f.check()?;
    let hs = homology(f.source())?;
    let ht = homology(f.target())?;
    let mut out = BTreeMap::new();
    for (&d, group) in &hs.groups {
        let target_d = d + f.degree_shift();
        let block = f.block(d);
        let columns = match ht.group(target_d) {
            Some(tg) => group
                .representatives
                .iter()
                .map(|z| tg.coordinates(&block.apply(z)))
                .collect::<Result<Vec<_>, _>>()?,
            None => vec![F2Vector::zeros(0); group.dim()],
        };
        out.insert(d, MatrixF2::from_columns(ht.dim(target_d), &columns));
    }
    Ok(out)
}

/// Rank of `f_*` summed over gradings.
pub fn homology_rank(f: &ChainMapF2) -> Result<usize, Gf2Error> {
    Ok(induced_map_on_homology(f)?
        .values()
        .map(MatrixF2::rank)
        .sum())
}

/// `f_*` hits every class of the target.
pub fn is_surjective_on_homology(f: &ChainMapF2) -> Result<bool, Gf2Error> {
    let rank = homology_rank(f)?;
    Ok(rank == homology(f.target())?.total_dim())
}

pub fn is_zero_on_homology(f: &ChainMapF2) -> Result<bool, Gf2Error> {
    Ok(homology_rank(f)? == 0)
}

/// Mapping cone: shifted source plus target with boundary
/// `[[d_src, 0], [f, d_tgt]]`. Source generators come first in each grading.
pub fn mapping_cone(f: &ChainMapF2) -> Result<ChainComplexF2, Gf2Error> {
    f.check()?;
    let src = f.source();
    let tgt = f.target();
    if !src.is_graded() {
        let (ns, nt) = (src.dim(0), tgt.dim(0));
        let mut m = MatrixF2::zeros(ns + nt, ns + nt);
        m.add_block(0, 0, &src.boundary(0));
        m.add_block(ns, 0, &f.block(0));
        m.add_block(ns, ns, &tgt.boundary(0));
        let labels = cone_labels(src.labels(0), tgt.labels(0));
        return ChainComplexF2::ungraded(labels, m);
    }

    // cone_d = src_{d - 1 - shift} + tgt_d
    let shift = f.degree_shift();
    let src_at = |d: i32| d - 1 - shift;
    let mut gradings: Vec<i32> = tgt.gradings().collect();
    gradings.extend(src.gradings().map(|d| d + 1 + shift));
    gradings.sort_unstable();
    gradings.dedup();

    let mut labels = BTreeMap::new();
    let mut boundaries = BTreeMap::new();
    for &d in &gradings {
        labels.insert(d, cone_labels(src.labels(src_at(d)), tgt.labels(d)));
    }
    for &d in &gradings {
        let (s_hi, t_hi) = (src.dim(src_at(d)), tgt.dim(d));
        let (s_lo, t_lo) = (src.dim(src_at(d) - 1), tgt.dim(d - 1));
        let mut m = MatrixF2::zeros(s_lo + t_lo, s_hi + t_hi);
        m.add_block(0, 0, &src.boundary(src_at(d)));
        m.add_block(s_lo, 0, &f.block(src_at(d)));
        m.add_block(s_lo, s_hi, &tgt.boundary(d));
        boundaries.insert(d, m);
    }
    ChainComplexF2::graded(labels, boundaries)
}

fn cone_labels(src: &[String], tgt: &[String]) -> Vec<String> {
    src.iter()
        .map(|l| format!("src:{l}"))
        .chain(tgt.iter().map(|l| format!("tgt:{l}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(prefix: &str, n: usize) -> Vec<String> {
        (0..n).map(|i| format!("{prefix}{i}")).collect()
    }

    fn two_term(id: bool) -> ChainComplexF2 {
        // F in degree 1 -> F in degree 0
        let m = if id {
            MatrixF2::identity(1)
        } else {
            MatrixF2::zeros(1, 1)
        };
        ChainComplexF2::graded(
            BTreeMap::from([(1, labels("a", 1)), (0, labels("b", 1))]),
            BTreeMap::from([(1, m)]),
        )
        .unwrap()
    }

    #[test]
    fn acyclic_two_term_complex() {
        let h = homology(&two_term(true)).unwrap();
        assert_eq!(h.total_dim(), 0);
    }

    #[test]
    fn zero_boundaries_give_chain_groups() {
        let c = ChainComplexF2::graded(
            BTreeMap::from([(0, labels("x", 2)), (1, labels("y", 3))]),
            BTreeMap::new(),
        )
        .unwrap();
        let h = homology(&c).unwrap();
        assert_eq!(h.dim(0), 2);
        assert_eq!(h.dim(1), 3);
    }

    #[test]
    fn rejects_nonzero_square() {
        // ungraded x -> y -> z has nonzero square
        let bad = MatrixF2::from_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(
            ChainComplexF2::ungraded(labels("x", 3), bad),
            Err(Gf2Error::InvalidComplex { grading: 0 })
        );
    }

    #[test]
    fn identity_map_induces_identity() {
        let c = two_term(false);
        let f = ChainMapF2::identity(&c);
        let induced = induced_map_on_homology(&f).unwrap();
        for (d, m) in induced {
            assert_eq!(m, MatrixF2::identity(c.dim(d)));
        }
    }

    #[test]
    fn non_chain_map_is_rejected() {
        let c = two_term(true);
        // identity in degree 1, zero in degree 0
        let blocks = BTreeMap::from([(1, MatrixF2::identity(1)), (0, MatrixF2::zeros(1, 1))]);
        let err = ChainMapF2::new(c.clone(), c, blocks, 0).unwrap_err();
        assert!(matches!(err, Gf2Error::NotChainMap { .. }));
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let c = two_term(false);
        let cone = mapping_cone(&ChainMapF2::identity(&c)).unwrap();
        assert_eq!(homology(&cone).unwrap().total_dim(), 0);
        assert_eq!(cone.total_dim(), 4);
    }

    #[test]
    fn cone_of_zero_map_is_direct_sum() {
        let c = two_term(false);
        let zero = ChainMapF2::new(c.clone(), c.clone(), BTreeMap::new(), 0).unwrap();
        let cone = mapping_cone(&zero).unwrap();
        let h = homology(&cone).unwrap();
        assert_eq!(h.total_dim(), 4);
        // source shifted up by one
        assert_eq!(h.dim(2), 1);
        assert_eq!(h.dim(1), 2);
        assert_eq!(h.dim(0), 1);
    }

    #[test]
    fn ungraded_cone_of_identity() {
        let c = ChainComplexF2::ungraded(labels("x", 2), MatrixF2::zeros(2, 2)).unwrap();
        let cone = mapping_cone(&ChainMapF2::identity(&c)).unwrap();
        assert_eq!(homology(&cone).unwrap().total_dim(), 0);
    }

    #[test]
    fn coordinates_ignore_boundaries() {
        // x -> y, z isolated; class of y + z equals class of z
        let d = MatrixF2::from_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]);
        let c = ChainComplexF2::ungraded(vec!["x".into(), "y".into(), "z".into()], d).unwrap();
        let h = homology(&c).unwrap();
        let g = h.group(0).unwrap();
        assert_eq!(g.dim(), 1);
        let z = F2Vector::unit(3, 2);
        let mut yz = z.clone();
        yz.flip(1);
        assert_eq!(g.coordinates(&z).unwrap(), g.coordinates(&yz).unwrap());
        assert_eq!(
            g.coordinates(&F2Vector::unit(3, 0)),
            Err(Gf2Error::NotACycle)
        );
    }
}
