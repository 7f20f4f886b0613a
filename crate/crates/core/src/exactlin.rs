//! Exact sparse linear algebra over the rationals.
//!
//! Everything downstream (equality checks, kernels, quotients, coordinates in
//! subspaces) reduces to the routines here. Vectors are sparse maps from
//! coordinate index to a nonzero [`Scalar`]; matrices keep a canonical
//! row-major entry list so that printed output is reproducible.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar. Always normalized (lowest terms, positive
/// denominator, zero is `0/1`).
pub type Scalar = num_rational::BigRational;

/// Sparse vector: coordinate index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a scalar as `n` or `n/d`.
pub fn fmt_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Adds `coeff * value` into `acc[key]`, dropping the entry if it cancels.
pub fn add_term<K: Ord>(acc: &mut BTreeMap<K, Scalar>, key: K, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match acc.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// `acc += c * v`
pub fn axpy<K: Ord + Clone>(acc: &mut BTreeMap<K, Scalar>, c: &Scalar, v: &BTreeMap<K, Scalar>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        add_term(acc, k.clone(), c * x);
    }
}

pub fn scale<K: Ord + Clone>(v: &BTreeMap<K, Scalar>, c: &Scalar) -> BTreeMap<K, Scalar> {
    if c.is_zero() {
        return BTreeMap::new();
    }
    v.iter().map(|(k, x)| (k.clone(), x * c)).collect()
}

pub fn sub<K: Ord + Clone>(a: &BTreeMap<K, Scalar>, b: &BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
    let mut out = a.clone();
    axpy(&mut out, &-Scalar::one(), b);
    out
}

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (&i, x) in v {
        out[i] = x.clone();
    }
    out
}

pub fn from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Sparse matrix with canonical row-major entry order and no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, Scalar)>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| (i, i, Scalar::one())).collect(),
        }
    }

    /// Builds a matrix from arbitrary triples. Repeated positions are summed
    /// and zero results dropped.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self, LinError> {
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (r, c, x) in entries {
            if r >= rows || c >= cols {
                return Err(LinError::IndexOutOfRange {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
            add_term(&mut acc, (r, c), x);
        }
        Ok(SparseMatrix {
            rows,
            cols,
            entries: acc.into_iter().map(|((r, c), x)| (r, c, x)).collect(),
        })
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let entries = rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(move |(c, x)| (r, c, x.clone()))
        });
        SparseMatrix {
            rows: nrows,
            cols: ncols,
            entries: entries.collect(),
        }
    }

    /// Builds a matrix whose rows are the given sparse vectors.
    pub fn from_rows(cols: usize, rows: &[SparseVec]) -> Result<Self, LinError> {
        Self::from_entries(
            rows.len(),
            cols,
            rows.iter()
                .enumerate()
                .flat_map(|(r, v)| v.iter().map(move |(&c, x)| (r, c, x.clone()))),
        )
    }

    /// Builds a matrix whose columns are the given sparse vectors.
    pub fn from_columns(rows: usize, cols: &[SparseVec]) -> Result<Self, LinError> {
        Self::from_entries(
            rows,
            cols.len(),
            cols.iter()
                .enumerate()
                .flat_map(|(c, v)| v.iter().map(move |(&r, x)| (r, c, x.clone()))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, Scalar)] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.entries
            .binary_search_by(|(r, c, _)| (*r, *c).cmp(&(row, col)))
            .map(|i| self.entries[i].2.clone())
            .unwrap_or_else(|_| Scalar::zero())
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut out = vec![SparseVec::new(); self.rows];
        for (r, c, x) in &self.entries {
            out[*r].insert(*c, x.clone());
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); self.cols]; self.rows];
        for (r, c, x) in &self.entries {
            out[*r][*c] = x.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut entries: Vec<_> = self
            .entries
            .iter()
            .map(|(r, c, x)| (*c, *r, x.clone()))
            .collect();
        entries.sort_by_key(|a| (a.0, a.1));
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinError> {
        if v.len() != self.cols {
            return Err(LinError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for (r, c, x) in &self.entries {
            out[*r] += x * &v[*c];
        }
        Ok(out)
    }

    pub fn mul_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (r, c, x) in &self.entries {
            if let Some(y) = v.get(c) {
                add_term(&mut out, *r, x * y);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for row in self.row_vectors() {
            ech.insert(row);
        }
        ech.rank()
    }
}

impl fmt::Display for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(fmt_scalar).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally maintained reduced row echelon form.
///
/// Rows are keyed by pivot column, normalized so the pivot is 1, and kept
/// fully reduced: no row has a nonzero entry in another row's pivot column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter()
    }

    /// Reduces `v` against the current rows. The result has zero entries in
    /// every pivot column.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        // Subtracting a fully reduced row never introduces another pivot
        // column, so the pivots hit are known up front.
        let hits: Vec<usize> = v.keys().filter(|c| self.rows.contains_key(c)).copied().collect();
        for p in hits {
            if let Some(c) = v.get(&p).cloned() {
                axpy(&mut v, &-c, &self.rows[&p]);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Inserts `v`; returns the new pivot column if `v` was independent.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        let (&lead, lead_val) = r.iter().next()?;
        let inv = lead_val.recip();
        let r = scale(&r, &inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&lead).cloned() {
                axpy(row, &-c, &r);
            }
        }
        self.rows.insert(lead, r);
        Some(lead)
    }
}

/// Result of [`rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub matrix: SparseMatrix,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape
/// matches the input.
pub fn rref(m: &SparseMatrix) -> Rref {
    let mut ech = Echelon::new();
    for row in m.row_vectors() {
        ech.insert(row);
    }
    let pivots: Vec<usize> = ech.pivots().collect();
    let entries = ech
        .rows()
        .enumerate()
        .flat_map(|(r, (_, row))| row.iter().map(move |(&c, x)| (r, c, x.clone())));
    let matrix = SparseMatrix::from_entries(m.rows(), m.cols(), entries)
        .expect("echelon rows stay inside the input shape");
    Rref {
        rank: pivots.len(),
        matrix,
        pivots,
    }
}

/// Basis of the right nullspace: one vector per free column (ascending),
/// with that free variable set to 1 and the other free variables 0.
pub fn nullspace(m: &SparseMatrix) -> Vec<SparseVec> {
    let mut ech = Echelon::new();
    for row in m.row_vectors() {
        ech.insert(row);
    }
    nullspace_of(&ech, m.cols())
}

pub(crate) fn nullspace_of(ech: &Echelon, cols: usize) -> Vec<SparseVec> {
    let pivot_set: std::collections::BTreeSet<usize> = ech.pivots().collect();
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = SparseVec::new();
        v.insert(free, Scalar::one());
        for (&p, row) in ech.rows() {
            if let Some(x) = row.get(&free) {
                v.insert(p, -x);
            }
        }
        out.push(v);
    }
    out
}

/// Solves `m x = rhs`. Returns `Ok(None)` when the system is inconsistent;
/// otherwise the solution with every free variable zero.
pub fn solve(m: &SparseMatrix, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinError> {
    if rhs.len() != m.rows() {
        return Err(LinError::DimensionMismatch {
            expected: m.rows(),
            found: rhs.len(),
        });
    }
    let aug = m.cols();
    let mut ech = Echelon::new();
    for (mut row, b) in m.row_vectors().into_iter().zip(rhs) {
        if !b.is_zero() {
            row.insert(aug, b.clone());
        }
        ech.insert(row);
    }
    if ech.pivots().any(|p| p == aug) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); m.cols()];
    for (&p, row) in ech.rows() {
        if let Some(b) = row.get(&aug) {
            x[p] = b.clone();
        }
    }
    Ok(Some(x))
}

/// A subspace given by independent spanning vectors, with coordinate
/// extraction relative to that basis.
#[derive(Debug, Clone)]
pub struct Subspace {
    basis: Vec<SparseVec>,
    tag_offset: usize,
    ech: Echelon,
}

impl Subspace {
    /// `ambient` bounds every coordinate index that will ever be queried.
    /// Dependent vectors are skipped.
    pub fn new(ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut s = Subspace {
            basis: Vec::new(),
            tag_offset: ambient,
            ech: Echelon::new(),
        };
        for v in vectors {
            s.push(v);
        }
        s
    }

    /// Adds `v` if it is independent of the current basis.
    pub fn push(&mut self, v: SparseVec) -> bool {
        if v.is_empty() || self.contains(&v) {
            return false;
        }
        let mut aug = v.clone();
        aug.insert(self.tag_offset + self.basis.len(), Scalar::one());
        let lead = self.ech.insert(aug);
        debug_assert!(lead.is_some_and(|c| c < self.tag_offset));
        self.basis.push(v);
        true
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coords(v).is_some()
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` lies outside.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        let r = self.ech.reduce(v.clone());
        if r.keys().any(|&c| c < self.tag_offset) {
            return None;
        }
        Some(
            r.into_iter()
                .map(|(c, x)| (c - self.tag_offset, -x))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    /// Textbook dense Gauss-Jordan elimination, kept independent of
    /// [`Echelon`] as a cross-check.
    fn dense_rref(a: &[Vec<Scalar>]) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        let mut a = a.to_vec();
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for x in a[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..rows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..cols {
                        let t = &f * &a[r][j];
                        a[i][j] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    #[test]
    fn rref_identity() {
        let r = rref(&SparseMatrix::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.matrix, SparseMatrix::identity(2));
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_zero() {
        let z = SparseMatrix::zero(3, 3);
        let r = rref(&z);
        assert_eq!(r.rank, 0);
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let (oracle, oracle_pivots) = dense_rref(&a.to_dense());
        assert_eq!(oracle, vec![v(&[1, 2]), v(&[0, 0])]);
        assert_eq!(oracle_pivots, vec![0]);
        let r = rref(&a);
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&SparseMatrix::identity(2)).is_empty());
        let ns = nullspace(&SparseMatrix::zero(1, 3));
        assert_eq!(
            ns.iter().map(|x| to_dense(x, 3)).collect::<Vec<_>>(),
            vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]
        );
        let a = m(&[&[1, 1, 0]]);
        let ns: Vec<Vec<Scalar>> = nullspace(&a).iter().map(|x| to_dense(x, 3)).collect();
        assert_eq!(ns, vec![v(&[-1, 1, 0]), v(&[0, 0, 1])]);
        // enumeration oracle: every small integer vector in the kernel is in the span
        for x in -2..=2 {
            for y in -2..=2 {
                for z in -2..=2 {
                    let w = v(&[x, y, z]);
                    if a.mul_vec(&w).unwrap().iter().all(Zero::is_zero) {
                        let s = Subspace::new(3, nullspace(&a));
                        assert!(s.contains(&from_dense(&w)));
                    }
                }
            }
        }
    }

    #[test]
    fn solve_examples() {
        assert_eq!(
            solve(&SparseMatrix::identity(2), &v(&[3, 5])).unwrap(),
            Some(v(&[3, 5]))
        );
        let a = m(&[&[1, 1]]);
        let x = solve(&a, &v(&[2])).unwrap().unwrap();
        assert_eq!(x, v(&[2, 0]));
        assert_eq!(a.mul_vec(&x).unwrap(), v(&[2]));
        assert_eq!(solve(&m(&[&[1], &[1]]), &v(&[1, 2])).unwrap(), None);
        assert_eq!(
            solve(&a, &v(&[1, 2])),
            Err(LinError::DimensionMismatch {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn out_of_range_entry() {
        assert!(SparseMatrix::from_entries(2, 2, [(2, 0, int(1))]).is_err());
    }

    #[test]
    fn subspace_coords() {
        let s = Subspace::new(
            3,
            vec![from_dense(&v(&[1, 1, 0])), from_dense(&v(&[0, 1, 1]))],
        );
        let c = s.coords(&from_dense(&v(&[2, 5, 3]))).unwrap();
        assert_eq!(to_dense(&c, 2), v(&[2, 3]));
        assert!(s.coords(&from_dense(&v(&[1, 0, 0]))).is_none());
    }

    #[test]
    fn subspace_skips_dependent_vectors() {
        let mut s = Subspace::new(3, vec![from_dense(&v(&[1, 1, 0]))]);
        assert!(!s.push(from_dense(&v(&[2, 2, 0]))));
        assert!(!s.push(SparseVec::new()));
        assert!(s.push(from_dense(&v(&[0, 1, 1]))));
        assert!(!s.push(from_dense(&v(&[1, 2, 1]))));
        assert_eq!(s.dim(), 2);
    }

    fn small_matrix() -> impl Strategy<Value = SparseMatrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..4, c), r).prop_map(
                |rows| {
                    SparseMatrix::from_dense(
                        &rows
                            .into_iter()
                            .map(|r| r.into_iter().map(int).collect())
                            .collect::<Vec<_>>(),
                    )
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in small_matrix()) {
            let r = rref(&a);
            let ns = nullspace(&a);
            prop_assert_eq!(r.rank + ns.len(), a.cols());
            for x in &ns {
                prop_assert!(a.mul_sparse(x).is_empty());
            }
            let (oracle, pivots) = dense_rref(&a.to_dense());
            prop_assert_eq!(r.matrix.to_dense(), oracle);
            prop_assert_eq!(r.pivots, pivots);
        }

        #[test]
        fn rref_idempotent(a in small_matrix()) {
            let once = rref(&a);
            let twice = rref(&once.matrix);
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn solve_consistent(a in small_matrix(), seed in proptest::collection::vec(-3i64..4, 6)) {
            let x0: Vec<Scalar> = seed[..a.cols()].iter().map(|&x| int(x)).collect();
            let b = a.mul_vec(&x0).unwrap();
            let x = solve(&a, &b).unwrap().expect("constructed consistent");
            prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
        }
    }
}
