use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{add_term, axpy, int, Scalar, SparseVec};

/// Finite-dimensional Lie algebra over the rationals, by structure constants
/// on an ordered basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    /// `brackets[i][j]` = `[x_i, x_j]` in basis coordinates.
    brackets: Vec<Vec<SparseVec>>,
}

impl LieAlgebra {
    /// Brackets not listed are zero; `[x_j, x_i]` is filled in by
    /// antisymmetry. Jacobi is checked on every triple.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        given: impl IntoIterator<Item = (usize, usize, SparseVec)>,
    ) -> Result<Self> {
        let n = labels.len();
        let uniq: BTreeSet<&String> = labels.iter().collect();
        if uniq.len() != n {
            return Err(Error::InvalidLie("duplicate basis labels".into()));
        }
        let mut brackets = vec![vec![SparseVec::new(); n]; n];
        let mut set = vec![vec![false; n]; n];
        for (i, j, v) in given {
            if i >= n || j >= n || v.keys().any(|&k| k >= n) {
                return Err(Error::InvalidLie("bracket index out of range".into()));
            }
            if i == j && !v.is_empty() {
                return Err(Error::InvalidLie(format!(
                    "[{0}, {0}] must be zero",
                    labels[i]
                )));
            }
            let neg: SparseVec = v.iter().map(|(&k, x)| (k, -x)).collect();
            for (a, b, val) in [(i, j, v), (j, i, neg)] {
                if set[a][b] && brackets[a][b] != val {
                    return Err(Error::InvalidLie(format!(
                        "[{}, {}] given inconsistently",
                        labels[a], labels[b]
                    )));
                }
                set[a][b] = true;
                brackets[a][b] = val;
            }
        }
        let lie = LieAlgebra {
            name: name.into(),
            labels,
            brackets,
        };
        if let Some((i, j, k)) = lie.jacobi_failure() {
            return Err(Error::Jacobi(
                lie.labels[i].clone(),
                lie.labels[j].clone(),
                lie.labels[k].clone(),
            ));
        }
        Ok(lie)
    }

    fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        let e = |i: usize| -> SparseVec { std::iter::once((i, int(1))).collect() };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut sum = self.bracket_vec(&e(i), &self.brackets[j][k]);
                    axpy(&mut sum, &int(1), &self.bracket_vec(&e(j), &self.brackets[k][i]));
                    axpy(&mut sum, &int(1), &self.bracket_vec(&e(k), &self.brackets[i][j]));
                    if !sum.is_empty() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// The zero Lie algebra.
    pub fn zero() -> Self {
        LieAlgebra {
            name: "0".into(),
            labels: Vec::new(),
            brackets: Vec::new(),
        }
    }

    /// Abelian Lie algebra on `x, y, z` (or `x0, x1, ...` above dimension 3).
    pub fn abelian(n: usize) -> Self {
        let labels = if n <= 3 {
            ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
        } else {
            (0..n).map(|i| format!("x{i}")).collect()
        };
        Self::new(format!("ab{n}"), labels, []).expect("abelian")
    }

    /// Two-dimensional non-abelian: `[x, y] = y`.
    pub fn aff2() -> Self {
        Self::new(
            "aff2",
            vec!["x".into(), "y".into()],
            [(0, 1, SparseVec::from([(1, int(1))]))],
        )
        .expect("aff2")
    }

    /// Heisenberg: `[x, y] = z`, `z` central.
    pub fn heis3() -> Self {
        Self::new(
            "heis3",
            vec!["x".into(), "y".into(), "z".into()],
            [(0, 1, SparseVec::from([(2, int(1))]))],
        )
        .expect("heis3")
    }

    /// `sl2` on `h, x, y`: `[h, x] = 2x`, `[h, y] = -2y`, `[x, y] = h`.
    pub fn sl2() -> Self {
        Self::new(
            "sl2",
            vec!["h".into(), "x".into(), "y".into()],
            [
                (0, 1, SparseVec::from([(1, int(2))])),
                (0, 2, SparseVec::from([(2, int(-2))])),
                (1, 2, SparseVec::from([(0, int(1))])),
            ],
        )
        .expect("sl2")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.brackets[i][j]
    }

    /// Bilinear extension of the bracket.
    pub fn bracket_vec(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, a) in u {
            for (&j, b) in v {
                let c = a * b;
                for (&k, x) in &self.brackets[i][j] {
                    add_term(&mut out, k, &c * x);
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().flatten().all(|v| v.is_empty())
    }

    /// Nonzero structure constants `(i, j, k, c)` with `i < j`.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                for (&k, c) in &self.brackets[i][j] {
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_valid() {
        for l in [
            LieAlgebra::zero(),
            LieAlgebra::abelian(3),
            LieAlgebra::aff2(),
            LieAlgebra::heis3(),
            LieAlgebra::sl2(),
        ] {
            assert!(l.jacobi_failure().is_none(), "{}", l.name());
        }
        let aff = LieAlgebra::aff2();
        assert_eq!(aff.bracket(1, 0), &SparseVec::from([(1, int(-1))]));
    }

    #[test]
    fn jacobi_violation_reports_triple() {
        // [x,y] = x, [y,z] = y, [z,x] = z is not a Lie algebra
        let err = LieAlgebra::new(
            "bad",
            vec!["x".into(), "y".into(), "z".into()],
            [
                (0, 1, SparseVec::from([(0, int(1))])),
                (1, 2, SparseVec::from([(1, int(1))])),
                (2, 0, SparseVec::from([(2, int(1))])),
            ],
        )
        .unwrap_err();
        assert_eq!(err, Error::Jacobi("x".into(), "y".into(), "z".into()));
    }

    #[test]
    fn antisymmetry_enforced() {
        let l = vec!["x".to_string(), "y".to_string()];
        assert!(LieAlgebra::new("bad", l.clone(), [(0, 0, SparseVec::from([(1, int(1))]))]).is_err());
        assert!(LieAlgebra::new(
            "bad",
            l,
            [
                (0, 1, SparseVec::from([(1, int(1))])),
                (1, 0, SparseVec::from([(1, int(1))]))
            ]
        )
        .is_err());
    }
}
