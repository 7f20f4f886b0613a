use crate::error::{Error, Result};
use crate::exactlin::{add_term, axpy, SparseVec};
use crate::hopf::{fmt_combination, Monomial};
use crate::verdict::Verdict;

use super::pbw::{PbwPoly, Straightener};
use super::{FiniteGroup, LieAlgebra};

/// Action of a finite group on a Lie algebra by automorphisms, stored as one
/// matrix per group element. It extends multiplicatively to U(L), which is
/// the module Hopf algebra structure used by smash products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAction {
    name: String,
    group: FiniteGroup,
    lie: LieAlgebra,
    /// `images[g][j]` = `g · x_j`.
    images: Vec<Vec<SparseVec>>,
}

impl HopfAction {
    /// Checks shapes only; semantic validity is reported by
    /// [`HopfAction::validate`].
    pub fn new(
        name: impl Into<String>,
        group: FiniteGroup,
        lie: LieAlgebra,
        images: Vec<Vec<SparseVec>>,
    ) -> Result<Self> {
        let n = lie.dim();
        if images.len() != group.order()
            || images.iter().any(|row| row.len() != n)
            || images.iter().flatten().any(|v| v.keys().any(|&k| k >= n))
        {
            return Err(Error::InvalidAction(
                "one image per group element and Lie basis element required".into(),
            ));
        }
        Ok(HopfAction {
            name: name.into(),
            group,
            lie,
            images,
        })
    }

    /// Extends images of generating group elements to the whole group by
    /// `ρ(a·g) = ρ(a)ρ(g)`, breadth-first from the identity. Elements the
    /// generators do not reach, or reached with two different matrices, are
    /// errors.
    pub fn from_generators(
        name: impl Into<String>,
        group: FiniteGroup,
        lie: LieAlgebra,
        gens: &[(usize, Vec<SparseVec>)],
    ) -> Result<Self> {
        let n = lie.dim();
        let id: Vec<SparseVec> = (0..n)
            .map(|j| SparseVec::from([(j, crate::exactlin::int(1))]))
            .collect();
        let mut images: Vec<Option<Vec<SparseVec>>> = vec![None; group.order()];
        images[group.identity()] = Some(id);
        let mut act = HopfAction {
            name: name.into(),
            group,
            lie,
            images: Vec::new(),
        };
        let mut queue = std::collections::VecDeque::from([act.group.identity()]);
        while let Some(a) = queue.pop_front() {
            for (g, img) in gens {
                if img.len() != n || *g >= act.group.order() {
                    return Err(Error::InvalidAction("generator image has the wrong shape".into()));
                }
                let ra = images[a].clone().unwrap();
                let composed: Vec<SparseVec> = img
                    .iter()
                    .map(|v| {
                        let mut out = SparseVec::new();
                        for (&k, c) in v {
                            axpy(&mut out, c, &ra[k]);
                        }
                        out
                    })
                    .collect();
                let b = act.group.mul(a, *g);
                match &images[b] {
                    None => {
                        images[b] = Some(composed);
                        queue.push_back(b);
                    }
                    Some(existing) if *existing != composed => {
                        return Err(Error::InvalidAction(format!(
                            "generator images are inconsistent at {}",
                            act.group.label(b)
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        act.images = images
            .into_iter()
            .enumerate()
            .map(|(b, m)| {
                m.ok_or_else(|| {
                    Error::InvalidAction(format!(
                        "{} is not generated by the given elements",
                        act.group.label(b)
                    ))
                })
            })
            .collect::<Result<_>>()?;
        Ok(act)
    }

    pub fn trivial(group: FiniteGroup, lie: LieAlgebra) -> Self {
        let n = lie.dim();
        let id: Vec<SparseVec> = (0..n)
            .map(|j| SparseVec::from([(j, crate::exactlin::int(1))]))
            .collect();
        let images = vec![id; group.order()];
        let name = format!("trivial({}, {})", group.name(), lie.name());
        HopfAction {
            name,
            group,
            lie,
            images,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn image(&self, g: usize, j: usize) -> &SparseVec {
        &self.images[g][j]
    }

    /// `g · v` for `v` in L.
    pub fn apply(&self, g: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&j, c) in v {
            axpy(&mut out, c, &self.images[g][j]);
        }
        out
    }

    /// `g · m` for a PBW monomial: the product of the images of its letters.
    pub(crate) fn apply_monomial(
        &self,
        st: &mut Straightener<'_>,
        g: usize,
        m: &Monomial,
    ) -> PbwPoly {
        let mut words = std::collections::BTreeMap::from([(Vec::new(), crate::exactlin::int(1))]);
        for letter in m.word() {
            let mut next = std::collections::BTreeMap::new();
            for (w, c) in &words {
                for (&k, x) in &self.images[g][letter] {
                    let mut w2: Vec<usize> = w.clone();
                    w2.push(k);
                    add_term(&mut next, w2, c * x);
                }
            }
            words = next;
        }
        st.straighten_words(&words)
    }

    fn fmt_lie(&self, v: &SparseVec) -> String {
        fmt_combination(v.iter().map(|(&i, c)| (self.lie.label(i).to_string(), c)))
    }

    /// Checks `ρ(e) = id`, `ρ(gh) = ρ(g)ρ(h)`, and that every `ρ(g)`
    /// preserves the bracket. Failures carry the offending elements.
    pub fn validate(&self) -> Verdict {
        let g = &self.group;
        let n = self.lie.dim();
        let e = |j: usize| SparseVec::from([(j, crate::exactlin::int(1))]);
        let mut v = Verdict::new(format!("action {}", self.name), 0);
        let ident = (0..n).find(|&j| self.images[g.identity()][j] != e(j));
        match ident {
            None => v.ok("identity acts trivially", format!("{n} basis elements")),
            Some(j) => v.fail(
                "identity acts trivially",
                format!(
                    "{} · {} = {}",
                    g.label(g.identity()),
                    self.lie.label(j),
                    self.fmt_lie(&self.images[g.identity()][j])
                ),
                format!("({}, {})", g.label(g.identity()), self.lie.label(j)),
            ),
        }

        let mut hom = Ok(format!("{} element pairs", g.order() * g.order()));
        'hom: for a in 0..g.order() {
            for b in 0..g.order() {
                for j in 0..n {
                    let lhs = self.images[g.mul(a, b)][j].clone();
                    let rhs = self.apply(a, &self.images[b][j]);
                    if lhs != rhs {
                        hom = Err((
                            format!(
                                "({}{}) · {} = {} but {} · ({} · {}) = {}",
                                g.label(a),
                                g.label(b),
                                self.lie.label(j),
                                self.fmt_lie(&lhs),
                                g.label(a),
                                g.label(b),
                                self.lie.label(j),
                                self.fmt_lie(&rhs)
                            ),
                            format!("({}, {}, {})", g.label(a), g.label(b), self.lie.label(j)),
                        ));
                        break 'hom;
                    }
                }
            }
        }
        v.record("group homomorphism", hom);

        let mut brk = Ok(format!("{} elements", g.order()));
        'brk: for a in 0..g.order() {
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.apply(a, self.lie.bracket(i, j));
                    let rhs = self
                        .lie
                        .bracket_vec(&self.images[a][i], &self.images[a][j]);
                    if lhs != rhs {
                        brk = Err((
                            format!(
                                "[{0}·{1}, {0}·{2}] = {3} but {0}·[{1}, {2}] = {4}",
                                g.label(a),
                                self.lie.label(i),
                                self.lie.label(j),
                                self.fmt_lie(&rhs),
                                self.fmt_lie(&lhs)
                            ),
                            format!("({}, {}, {})", g.label(a), self.lie.label(i), self.lie.label(j)),
                        ));
                        break 'brk;
                    }
                }
            }
        }
        v.record("bracket preserved", brk);
        v
    }
}

/// Free-function form of [`HopfAction::validate`].
pub fn validate_action(act: &HopfAction) -> Verdict {
    act.validate()
}
