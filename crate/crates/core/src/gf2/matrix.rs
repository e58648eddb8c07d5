use std::collections::BTreeMap;
use std::fmt;

use super::{F2Vector, Gf2Error};

/// Sparse matrix over the two-element field.
///
/// Stored column-major as sorted lists of the rows holding a one, so the
/// entry set is exactly the set of `(row, col)` pairs present.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixF2 {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<usize>>,
}

impl MatrixF2 {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// Builds a matrix from its set of nonzero positions.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Gf2Error> {
        let mut m = Self::zeros(rows, cols);
        for (row, col) in entries {
            if row >= rows || col >= cols {
                return Err(Gf2Error::EntryOutOfRange {
                    row,
                    col,
                    rows,
                    cols,
                });
            }
            match m.columns[col].binary_search(&row) {
                Ok(_) => return Err(Gf2Error::DuplicateEntry { row, col }),
                Err(pos) => m.columns[col].insert(pos, row),
            }
        }
        Ok(m)
    }

    /// Dense row-major constructor, mostly for tests.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(n_rows, n_cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n_cols, "ragged rows");
            for (c, &x) in row.iter().enumerate() {
                if x % 2 == 1 {
                    m.columns[c].push(r);
                }
            }
        }
        m
    }

    pub fn from_columns(rows: usize, columns: &[F2Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            assert_eq!(v.len(), rows, "column length mismatch");
            m.columns[c] = v.ones().collect();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols, "index out of range");
        self.columns[col].binary_search(&row).is_ok()
    }

    /// Adds one at `(row, col)`.
    pub fn toggle(&mut self, row: usize, col: usize) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        match self.columns[col].binary_search(&row) {
            Ok(pos) => {
                self.columns[col].remove(pos);
            }
            Err(pos) => self.columns[col].insert(pos, row),
        }
    }

    /// Nonzero positions in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, rows)| rows.iter().map(move |&r| (r, c)))
    }

    pub fn column(&self, col: usize) -> F2Vector {
        F2Vector::from_indices(self.rows, self.columns[col].iter().copied())
    }

    pub fn dense_columns(&self) -> Vec<F2Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn apply(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(
            v.len(),
            self.cols,
            "vector length does not match column count"
        );
        let mut out = F2Vector::zeros(self.rows);
        for c in v.ones() {
            for &r in &self.columns[c] {
                out.flip(r);
            }
        }
        out
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &MatrixF2) -> MatrixF2 {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = MatrixF2::zeros(self.rows, rhs.cols);
        for c in 0..rhs.cols {
            let mut acc = F2Vector::zeros(self.rows);
            for &k in &rhs.columns[c] {
                for &r in &self.columns[k] {
                    acc.flip(r);
                }
            }
            out.columns[c] = acc.ones().collect();
        }
        out
    }

    pub fn transpose(&self) -> MatrixF2 {
        let mut out = MatrixF2::zeros(self.cols, self.rows);
        for (r, c) in self.entries() {
            out.columns[r].push(c);
        }
        out
    }

    /// Copies `block` into position `(row_offset, col_offset)`, adding to
    /// whatever is already there.
    pub fn add_block(&mut self, row_offset: usize, col_offset: usize, block: &MatrixF2) {
        assert!(
            row_offset + block.rows <= self.rows && col_offset + block.cols <= self.cols,
            "block does not fit"
        );
        for (r, c) in block.entries() {
            self.toggle(row_offset + r, col_offset + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut echelon = Echelon::new(self.rows, 0);
        self.dense_columns()
            .into_iter()
            .filter(|col| echelon.insert(col.clone(), F2Vector::zeros(0)))
            .count()
    }

    /// Basis of the null space in reduced echelon form.
    ///
    /// Columns are eliminated left to right with pivots at their lowest
    /// nonzero row; each column that reduces to zero yields one kernel
    /// vector, recorded by the combination of columns that produced it.
    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        let mut echelon = Echelon::new(self.rows, self.cols);
        let mut kernel = Vec::new();
        for (c, col) in self.dense_columns().into_iter().enumerate() {
            let (rest, combo) = echelon.reduce(col, F2Vector::unit(self.cols, c));
            if rest.is_zero() {
                kernel.push(combo);
            } else {
                echelon.insert_reduced(rest, combo);
            }
        }
        reduced_echelon(kernel)
    }
}

/// Puts a linearly independent list of vectors in reduced echelon form,
/// pivoting on the highest set index and ordering by pivot.
pub(crate) fn reduced_echelon(mut vectors: Vec<F2Vector>) -> Vec<F2Vector> {
    let last_one = |v: &F2Vector| v.ones().last();
    let mut pivots: Vec<usize> = Vec::with_capacity(vectors.len());
    for i in 0..vectors.len() {
        for j in 0..i {
            if vectors[i].get(pivots[j]) {
                let (head, tail) = vectors.split_at_mut(i);
                tail[0].add_assign(&head[j]);
            }
        }
        let p = last_one(&vectors[i]).expect("vectors must be independent");
        for j in 0..i {
            if vectors[j].get(p) {
                let (head, tail) = vectors.split_at_mut(i);
                head[j].add_assign(&tail[0]);
            }
        }
        pivots.push(p);
    }
    let mut order: Vec<usize> = (0..vectors.len()).collect();
    order.sort_by_key(|&i| pivots[i]);
    order.into_iter().map(|i| vectors[i].clone()).collect()
}

/// Incremental echelon basis keyed by lowest set index.
///
/// Every stored vector carries a tag vector that is transported along all
/// additions; this records which combination of inputs (or homology
/// classes) a reduced vector stands for.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    len: usize,
    tag_len: usize,
    pivots: BTreeMap<usize, (F2Vector, F2Vector)>,
}

impl Echelon {
    pub(crate) fn new(len: usize, tag_len: usize) -> Self {
        Self {
            len,
            tag_len,
            pivots: BTreeMap::new(),
        }
    }

    pub(crate) fn reduce(&self, mut v: F2Vector, mut tag: F2Vector) -> (F2Vector, F2Vector) {
        debug_assert_eq!(v.len(), self.len);
        debug_assert_eq!(tag.len(), self.tag_len);
        while let Some(p) = v.first_one() {
            match self.pivots.get(&p) {
                Some((row, row_tag)) => {
                    v.add_assign(row);
                    tag.add_assign(row_tag);
                }
                None => break,
            }
        }
        (v, tag)
    }

    /// Inserts `v`; returns whether it was independent of the stored span.
    pub(crate) fn insert(&mut self, v: F2Vector, tag: F2Vector) -> bool {
        let (rest, tag) = self.reduce(v, tag);
        if rest.is_zero() {
            false
        } else {
            self.insert_reduced(rest, tag);
            true
        }
    }

    pub(crate) fn insert_reduced(&mut self, v: F2Vector, tag: F2Vector) {
        let p = v.first_one().expect("cannot insert the zero vector");
        let previous = self.pivots.insert(p, (v, tag));
        debug_assert!(previous.is_none(), "pivot {p} already occupied");
    }
}

impl fmt::Debug for MatrixF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixF2 {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(MatrixF2::identity(2).rank(), 2);
        assert_eq!(MatrixF2::zeros(3, 3).rank(), 0);
        assert_eq!(MatrixF2::from_rows(&[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(MatrixF2::identity(4).kernel_basis().is_empty());
        let zero = MatrixF2::zeros(2, 3);
        let k = zero.kernel_basis();
        assert_eq!(k.len(), 3);
        let row = MatrixF2::from_rows(&[&[1, 1]]);
        assert_eq!(row.kernel_basis(), vec![F2Vector::from_bits(&[true, true])]);
    }

    #[test]
    fn from_entries_rejects_bad_input() {
        assert_eq!(
            MatrixF2::from_entries(2, 2, [(2, 0)]),
            Err(Gf2Error::EntryOutOfRange {
                row: 2,
                col: 0,
                rows: 2,
                cols: 2
            })
        );
        assert_eq!(
            MatrixF2::from_entries(2, 2, [(1, 0), (1, 0)]),
            Err(Gf2Error::DuplicateEntry { row: 1, col: 0 })
        );
    }

    #[test]
    fn product_and_transpose() {
        let a = MatrixF2::from_rows(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = MatrixF2::from_rows(&[&[1, 0], &[1, 1], &[0, 1]]);
        assert_eq!(a.mul(&b), MatrixF2::from_rows(&[&[0, 1], &[1, 0]]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(
            a.transpose(),
            MatrixF2::from_rows(&[&[1, 0], &[1, 1], &[0, 1]])
        );
    }

    #[test]
    fn reduced_echelon_clears_pivot_columns() {
        let basis = reduced_echelon(vec![
            F2Vector::from_bits(&[true, true, true]),
            F2Vector::from_bits(&[false, true, true]),
        ]);
        // pivots at indices 0 and 2; no other vector has a one there
        assert_eq!(basis[0], F2Vector::from_bits(&[true, false, false]));
        assert_eq!(basis[1], F2Vector::from_bits(&[false, true, true]));
    }
}
