//! Presented Hopf algebras: basis bookkeeping, elements, tensors, and the
//! five structure maps (multiplication, unit, comultiplication, counit,
//! antipode).
//!
//! Every presentation is truncated at a filtration degree `d`. Group
//! directions have degree 0 and PBW monomials their total degree. The basis
//! is always sorted by degree first, so the filtration piece `F_k` is a
//! prefix of the basis. Structure maps are tabulated once at construction on
//! every basis element (and every pair of combined degree at most `d`) and
//! are immutable afterwards.

mod axioms;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{One, Zero};

use crate::constructors::{FiniteGroup, HopfAction, LieAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{add_term, axpy, fmt_scalar, Scalar, SparseVec};

pub use axioms::check_hopf_axioms;

pub type PresentationId = u64;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

fn fresh_id() -> PresentationId {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

/// Exponent vector over the ordered Lie basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// The sorted word `x_0^{a_0} x_1^{a_1} ...` as letter indices.
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    pub fn from_sorted_word(vars: usize, word: &[usize]) -> Self {
        let mut e = vec![0; vars];
        for &w in word {
            e[w] += 1;
        }
        Monomial(e)
    }

    /// All exponent vectors of total degree exactly `k`, in descending lex
    /// order (`x^2, xy, y^2`).
    pub fn of_degree(vars: usize, k: usize) -> Vec<Monomial> {
        fn rec(vars: usize, left: usize, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == vars {
                prefix.push(left as u32);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e as u32);
                rec(vars, left - e, prefix, out);
                prefix.pop();
            }
        }
        if vars == 0 {
            return if k == 0 { vec![Monomial(Vec::new())] } else { Vec::new() };
        }
        let mut out = Vec::new();
        rec(vars, k, &mut Vec::new(), &mut out);
        out
    }

    /// All monomials of degree at most `d`, sorted by degree, then
    /// descending lex.
    pub fn up_to(vars: usize, d: usize) -> Vec<Monomial> {
        (0..=d).flat_map(|k| Self::of_degree(vars, k)).collect()
    }

    pub fn label(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{e}", names[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Kind-specific label of a basis element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisIndex {
    /// Group element id in a group algebra.
    Group(usize),
    /// PBW monomial in an enveloping algebra.
    Pbw(Monomial),
    /// `monomial ⊗ group element` in a smash product.
    Smash(Monomial, usize),
    /// Basis position of a structure-constant presentation.
    Opaque(usize),
}

/// Finitely supported combination of basis elements of one presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    owner: PresentationId,
    terms: SparseVec,
}

impl Element {
    pub(crate) fn new(owner: PresentationId, terms: SparseVec) -> Self {
        Element { owner, terms }
    }

    pub fn zero(owner: PresentationId) -> Self {
        Element {
            owner,
            terms: SparseVec::new(),
        }
    }

    pub fn owner(&self) -> PresentationId {
        self.owner
    }

    pub fn terms(&self) -> &SparseVec {
        &self.terms
    }

    pub fn into_terms(self) -> SparseVec {
        self.terms
    }

    pub fn coeff(&self, index: usize) -> Scalar {
        self.terms.get(&index).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &Scalar) -> Element {
        Element::new(self.owner, crate::exactlin::scale(&self.terms, c))
    }

    fn assert_same(&self, other: &Element) {
        assert_eq!(
            self.owner, other.owner,
            "arithmetic between elements of different presentations"
        );
    }
}

/// Panics if the owners differ.
impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.assert_same(rhs);
        let mut t = self.terms.clone();
        axpy(&mut t, &Scalar::one(), &rhs.terms);
        Element::new(self.owner, t)
    }
}

/// Panics if the owners differ.
impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.assert_same(rhs);
        Element::new(self.owner, crate::exactlin::sub(&self.terms, &rhs.terms))
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scaled(&-Scalar::one())
    }
}

impl Mul<&Element> for &Scalar {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scaled(self)
    }
}

/// Raw tensor coordinates: tuple of basis positions to coefficient.
pub type RawTensor<const N: usize> = BTreeMap<[usize; N], Scalar>;

/// Element of a tensor product of presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor<const N: usize> {
    owners: [PresentationId; N],
    terms: RawTensor<N>,
}

pub type TensorElement = Tensor<2>;

impl<const N: usize> Tensor<N> {
    pub(crate) fn new(owners: [PresentationId; N], terms: RawTensor<N>) -> Self {
        Tensor { owners, terms }
    }

    pub fn owners(&self) -> [PresentationId; N] {
        self.owners
    }

    pub fn terms(&self) -> &RawTensor<N> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: [usize; N]) -> Scalar {
        self.terms.get(&key).cloned().unwrap_or_else(Scalar::zero)
    }
}

impl Tensor<2> {
    /// The flip `x ⊗ y ↦ y ⊗ x`.
    pub fn twist(&self) -> Tensor<2> {
        Tensor {
            owners: [self.owners[1], self.owners[0]],
            terms: twist(&self.terms),
        }
    }
}

pub(crate) fn twist(t: &RawTensor<2>) -> RawTensor<2> {
    t.iter().map(|([a, b], x)| ([*b, *a], x.clone())).collect()
}

/// `a ⊗ b` for sparse vectors.
pub(crate) fn outer(a: &SparseVec, b: &SparseVec) -> RawTensor<2> {
    let mut out = RawTensor::new();
    for (&i, x) in a {
        for (&j, y) in b {
            out.insert([i, j], x * y);
        }
    }
    out
}

/// A grouplike element declared for a structure-constant presentation. It
/// is verified when grouplikes are extracted, never trusted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeclaredGrouplike {
    pub label: String,
    pub element: SparseVec,
}

/// Full tabulated Hopf structure on a degree-sorted basis.
///
/// `product[i * dim + j]` is only meaningful when `degrees[i] + degrees[j]`
/// is within the truncation; entries beyond it are empty and never read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTables {
    pub labels: Vec<String>,
    pub degrees: Vec<usize>,
    pub unit: SparseVec,
    pub product: Vec<SparseVec>,
    pub coproduct: Vec<RawTensor<2>>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<SparseVec>,
    pub grouplikes: Option<Vec<DeclaredGrouplike>>,
}

impl StructureTables {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Tables with the right shape and every map zero.
    pub fn empty(labels: Vec<String>, degrees: Vec<usize>) -> Self {
        let n = labels.len();
        StructureTables {
            labels,
            degrees,
            unit: SparseVec::new(),
            product: vec![SparseVec::new(); n * n],
            coproduct: vec![RawTensor::new(); n],
            counit: vec![Scalar::zero(); n],
            antipode: vec![SparseVec::new(); n],
            grouplikes: None,
        }
    }

    fn validate(&self, d: usize) -> Result<()> {
        let n = self.dim();
        let bad = |msg: String| Err(Error::InvalidTables(msg));
        if n == 0 {
            return bad("empty basis".into());
        }
        if self.degrees.len() != n
            || self.product.len() != n * n
            || self.coproduct.len() != n
            || self.counit.len() != n
            || self.antipode.len() != n
        {
            return bad("table sizes do not match the basis".into());
        }
        if self.degrees.windows(2).any(|w| w[0] > w[1]) {
            return bad("basis must be sorted by degree".into());
        }
        if let Some(&k) = self.degrees.iter().find(|&&k| k > d) {
            return bad(format!("basis element of degree {k} above truncation {d}"));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &self.labels {
            if !seen.insert(l) {
                return bad(format!("duplicate basis label {l}"));
            }
        }
        let vec_deg = |v: &SparseVec| -> Result<usize> {
            let mut m = 0;
            for &i in v.keys() {
                if i >= n {
                    return Err(Error::BasisOutOfRange { index: i, dim: n });
                }
                m = m.max(self.degrees[i]);
            }
            Ok(m)
        };
        if vec_deg(&self.unit)? > 0 || self.unit.is_empty() {
            return bad("unit must be a nonzero degree-0 element".into());
        }
        for i in 0..n {
            for j in 0..n {
                let k = self.degrees[i] + self.degrees[j];
                let p = &self.product[i * n + j];
                if k > d {
                    if !p.is_empty() {
                        return bad(format!(
                            "product {}*{} given beyond the truncation",
                            self.labels[i], self.labels[j]
                        ));
                    }
                } else if vec_deg(p)? > k {
                    return bad(format!(
                        "product {}*{} raises the filtration degree",
                        self.labels[i], self.labels[j]
                    ));
                }
            }
            for [a, b] in self.coproduct[i].keys() {
                if *a >= n || *b >= n {
                    return Err(Error::BasisOutOfRange {
                        index: (*a).max(*b),
                        dim: n,
                    });
                }
                if self.degrees[*a] + self.degrees[*b] > self.degrees[i] {
                    return bad(format!(
                        "coproduct of {} raises the filtration degree",
                        self.labels[i]
                    ));
                }
            }
            if vec_deg(&self.antipode[i])? > self.degrees[i] {
                return bad(format!(
                    "antipode of {} raises the filtration degree",
                    self.labels[i]
                ));
            }
        }
        if let Some(gs) = &self.grouplikes {
            for g in gs {
                vec_deg(&g.element)?;
            }
        }
        Ok(())
    }
}

/// Structural kind of a presentation, with the data it was built from.
#[derive(Debug, Clone)]
pub enum Kind {
    GroupAlgebra(FiniteGroup),
    Enveloping(LieAlgebra),
    Smash(HopfAction),
    StructureConstants,
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::GroupAlgebra(_) => "group-algebra",
            Kind::Enveloping(_) => "enveloping",
            Kind::Smash(_) => "smash",
            Kind::StructureConstants => "structure-constants",
        }
    }
}

/// Generator of a presentation as seen by morphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// Group element id (group algebras and the group leg of smash products).
    Group(usize),
    /// Lie basis index (enveloping algebras and the Lie leg of smash products).
    Lie(usize),
    /// Any basis element of a structure-constant presentation.
    Basis(usize),
}

/// A Hopf algebra truncated at filtration degree `d`.
#[derive(Debug)]
pub struct HopfPresentation {
    id: PresentationId,
    name: String,
    kind: Kind,
    truncation: usize,
    basis: Vec<BasisIndex>,
    lookup: HashMap<BasisIndex, usize>,
    tables: StructureTables,
    prefix: Vec<usize>,
}

impl HopfPresentation {
    pub(crate) fn assemble(
        name: impl Into<String>,
        kind: Kind,
        truncation: usize,
        basis: Vec<BasisIndex>,
        tables: StructureTables,
    ) -> Result<Self> {
        if truncation < 2 {
            return Err(Error::TruncationTooSmall(truncation));
        }
        tables.validate(truncation)?;
        if basis.len() != tables.dim() {
            return Err(Error::InvalidTables("basis length mismatch".into()));
        }
        let lookup = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let prefix = (0..=truncation)
            .map(|k| tables.degrees.iter().filter(|&&x| x <= k).count())
            .collect();
        Ok(HopfPresentation {
            id: fresh_id(),
            name: name.into(),
            kind,
            truncation,
            basis,
            lookup,
            tables,
            prefix,
        })
    }

    /// A presentation given directly by structure tables. Only
    /// dimensional consistency and filtration compatibility are checked here;
    /// the Hopf axioms are checked by [`check_hopf_axioms`].
    pub fn from_tables(
        name: impl Into<String>,
        truncation: usize,
        tables: StructureTables,
    ) -> Result<Self> {
        let basis = (0..tables.dim()).map(BasisIndex::Opaque).collect();
        Self::assemble(name, Kind::StructureConstants, truncation, basis, tables)
    }

    pub fn id(&self) -> PresentationId {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub(crate) fn set_name(&mut self, name: String) {
        self.name = name;
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    /// Truncation degree `d`.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the filtration piece `F_k` (clamped at `d`).
    pub fn dim_at(&self, k: usize) -> usize {
        self.prefix[k.min(self.truncation)]
    }

    pub fn basis(&self) -> &[BasisIndex] {
        &self.basis
    }

    pub fn index_of(&self, b: &BasisIndex) -> Option<usize> {
        self.lookup.get(b).copied()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.tables.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.tables.labels
    }

    pub fn basis_degree(&self, i: usize) -> usize {
        self.tables.degrees[i]
    }

    pub fn tables(&self) -> &StructureTables {
        &self.tables
    }

    pub fn unit(&self) -> Element {
        Element::new(self.id, self.tables.unit.clone())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut t = SparseVec::new();
        t.insert(i, Scalar::one());
        Element::new(self.id, t)
    }

    /// Builds an element, validating every index.
    pub fn element(&self, terms: impl IntoIterator<Item = (usize, Scalar)>) -> Result<Element> {
        let mut t = SparseVec::new();
        for (i, x) in terms {
            if i >= self.dim() {
                return Err(Error::BasisOutOfRange {
                    index: i,
                    dim: self.dim(),
                });
            }
            add_term(&mut t, i, x);
        }
        Ok(Element::new(self.id, t))
    }

    pub(crate) fn wrap(&self, terms: SparseVec) -> Element {
        Element::new(self.id, terms)
    }

    pub(crate) fn wrap2(&self, terms: RawTensor<2>) -> TensorElement {
        Tensor::new([self.id, self.id], terms)
    }

    pub fn check_owner(&self, a: &Element) -> Result<()> {
        if a.owner() != self.id {
            return Err(Error::OwnershipMismatch {
                expected: self.id,
                found: a.owner(),
            });
        }
        Ok(())
    }

    /// Filtration degree of an element (0 for zero).
    pub fn degree(&self, a: &Element) -> usize {
        self.vec_degree(a.terms())
    }

    pub(crate) fn vec_degree(&self, v: &SparseVec) -> usize {
        v.keys().map(|&i| self.tables.degrees[i]).max().unwrap_or(0)
    }

    // Structure maps on raw coordinates.

    pub(crate) fn mul_raw(&self, a: &SparseVec, b: &SparseVec) -> Result<SparseVec> {
        let needed = self.vec_degree(a) + self.vec_degree(b);
        if needed > self.truncation {
            return Err(Error::DegreeOverflow {
                needed,
                available: self.truncation,
            });
        }
        let n = self.dim();
        let mut out = SparseVec::new();
        for (&i, x) in a {
            for (&j, y) in b {
                axpy(&mut out, &(x * y), &self.tables.product[i * n + j]);
            }
        }
        Ok(out)
    }

    pub(crate) fn comul_raw(&self, a: &SparseVec) -> RawTensor<2> {
        let mut out = RawTensor::new();
        for (&i, x) in a {
            axpy(&mut out, x, &self.tables.coproduct[i]);
        }
        out
    }

    pub(crate) fn counit_raw(&self, a: &SparseVec) -> Scalar {
        a.iter()
            .map(|(&i, x)| x * &self.tables.counit[i])
            .fold(Scalar::zero(), |s, t| s + t)
    }

    pub(crate) fn antipode_raw(&self, a: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, x) in a {
            axpy(&mut out, x, &self.tables.antipode[i]);
        }
        out
    }

    /// Product in the tensor-square algebra.
    pub(crate) fn mul2_raw(&self, a: &RawTensor<2>, b: &RawTensor<2>) -> Result<RawTensor<2>> {
        let mut out = RawTensor::new();
        let n = self.dim();
        for ([a1, a2], x) in a {
            for ([b1, b2], y) in b {
                let left = &self.tables.product[a1 * n + b1];
                let right = &self.tables.product[a2 * n + b2];
                for deg in [
                    self.tables.degrees[*a1] + self.tables.degrees[*b1],
                    self.tables.degrees[*a2] + self.tables.degrees[*b2],
                ] {
                    if deg > self.truncation {
                        return Err(Error::DegreeOverflow {
                            needed: deg,
                            available: self.truncation,
                        });
                    }
                }
                let c = x * y;
                for (&l, p) in left {
                    for (&r, q) in right {
                        add_term(&mut out, [l, r], &c * p * q);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies `Δ` to the leg at position `leg` of an `N`-tensor.
    pub(crate) fn comul_leg<const N: usize, const M: usize>(
        &self,
        t: &RawTensor<N>,
        leg: usize,
    ) -> RawTensor<M> {
        debug_assert_eq!(M, N + 1);
        let mut out = RawTensor::<M>::new();
        for (key, x) in t {
            for ([l, r], y) in &self.tables.coproduct[key[leg]] {
                let mut k = [0usize; M];
                k[..leg].copy_from_slice(&key[..leg]);
                k[leg] = *l;
                k[leg + 1] = *r;
                k[leg + 2..].copy_from_slice(&key[leg + 1..]);
                add_term(&mut out, k, x * y);
            }
        }
        out
    }

    // Public structure maps.

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_owner(a)?;
        self.check_owner(b)?;
        Ok(self.wrap(self.mul_raw(a.terms(), b.terms())?))
    }

    pub fn comultiply(&self, a: &Element) -> Result<TensorElement> {
        self.check_owner(a)?;
        Ok(self.wrap2(self.comul_raw(a.terms())))
    }

    pub fn counit(&self, a: &Element) -> Result<Scalar> {
        self.check_owner(a)?;
        Ok(self.counit_raw(a.terms()))
    }

    pub fn antipode(&self, a: &Element) -> Result<Element> {
        self.check_owner(a)?;
        Ok(self.wrap(self.antipode_raw(a.terms())))
    }

    /// PBW normal form of a word in the Lie basis of an enveloping
    /// presentation.
    pub fn straighten(&self, word: &[usize]) -> Result<Element> {
        let Kind::Enveloping(lie) = &self.kind else {
            return Err(Error::UnsupportedKind("straightening".into()));
        };
        if word.len() > self.truncation {
            return Err(Error::DegreeOverflow {
                needed: word.len(),
                available: self.truncation,
            });
        }
        let poly = crate::constructors::pbw_straighten(lie, word)?;
        let mut t = SparseVec::new();
        for (m, c) in poly {
            let i = self.lookup[&BasisIndex::Pbw(m)];
            add_term(&mut t, i, c);
        }
        Ok(self.wrap(t))
    }

    // Generators.

    pub fn generators(&self) -> Vec<Generator> {
        match &self.kind {
            Kind::GroupAlgebra(g) => g.generators().iter().map(|&i| Generator::Group(i)).collect(),
            Kind::Enveloping(l) => (0..l.dim()).map(Generator::Lie).collect(),
            Kind::Smash(act) => (0..act.lie().dim())
                .map(Generator::Lie)
                .chain(act.group().generators().iter().map(|&i| Generator::Group(i)))
                .collect(),
            Kind::StructureConstants => (0..self.dim()).map(Generator::Basis).collect(),
        }
    }

    pub fn generator_label(&self, g: Generator) -> String {
        match (&self.kind, g) {
            (Kind::GroupAlgebra(grp), Generator::Group(i)) => grp.label(i).to_string(),
            (Kind::Smash(act), Generator::Group(i)) => act.group().label(i).to_string(),
            (Kind::Enveloping(l), Generator::Lie(i)) => l.label(i).to_string(),
            (Kind::Smash(act), Generator::Lie(i)) => act.lie().label(i).to_string(),
            (_, Generator::Basis(i)) => self.label(i).to_string(),
            _ => format!("{g:?}"),
        }
    }

    /// Basis position of a generator, if it is valid for this presentation.
    pub fn generator_index(&self, g: Generator) -> Option<usize> {
        match (&self.kind, g) {
            (Kind::GroupAlgebra(grp), Generator::Group(i)) if i < grp.order() => {
                self.index_of(&BasisIndex::Group(i))
            }
            (Kind::Enveloping(l), Generator::Lie(i)) if i < l.dim() => {
                self.index_of(&BasisIndex::Pbw(Monomial::var(l.dim(), i)))
            }
            (Kind::Smash(act), Generator::Lie(i)) if i < act.lie().dim() => self.index_of(
                &BasisIndex::Smash(Monomial::var(act.lie().dim(), i), act.group().identity()),
            ),
            (Kind::Smash(act), Generator::Group(i)) if i < act.group().order() => self
                .index_of(&BasisIndex::Smash(Monomial::one(act.lie().dim()), i)),
            (Kind::StructureConstants, Generator::Basis(i)) if i < self.dim() => Some(i),
            _ => None,
        }
    }

    /// Labels usable as factors in element expressions, with their values.
    /// Group element and Lie basis labels for the structural kinds; basis
    /// labels for structure-constant presentations.
    pub fn atoms(&self) -> Vec<(String, SparseVec)> {
        let unit = |i: usize| -> SparseVec { std::iter::once((i, Scalar::one())).collect() };
        match &self.kind {
            Kind::GroupAlgebra(g) => (0..g.order())
                .map(|i| (g.label(i).to_string(), unit(self.lookup[&BasisIndex::Group(i)])))
                .collect(),
            Kind::Enveloping(l) => (0..l.dim())
                .map(|i| (l.label(i).to_string(), unit(self.generator_index(Generator::Lie(i)).unwrap())))
                .collect(),
            Kind::Smash(act) => (0..act.lie().dim())
                .map(Generator::Lie)
                .chain((0..act.group().order()).map(Generator::Group))
                .map(|g| (self.generator_label(g), unit(self.generator_index(g).unwrap())))
                .collect(),
            Kind::StructureConstants => (0..self.dim())
                .map(|i| (self.label(i).to_string(), unit(i)))
                .collect(),
        }
    }

    // Printing.

    pub fn fmt_vec(&self, v: &SparseVec) -> String {
        fmt_combination(v.iter().map(|(&i, x)| (self.label(i).to_string(), x)))
    }

    pub fn fmt_element(&self, a: &Element) -> String {
        self.fmt_vec(a.terms())
    }

    pub fn fmt_raw_tensor(&self, t: &RawTensor<2>) -> String {
        fmt_combination(
            t.iter()
                .rev()
                .map(|([a, b], x)| (format!("{}|{}", self.label(*a), self.label(*b)), x)),
        )
    }

    pub fn fmt_tensor(&self, t: &TensorElement) -> String {
        self.fmt_raw_tensor(t.terms())
    }

    pub fn summary(&self) -> String {
        format!(
            "{} ({}, dim F_{} = {})",
            self.name,
            self.kind.name(),
            self.truncation,
            self.dim()
        )
    }
}

impl fmt::Display for HopfPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

/// Formats `Σ c_i label_i` in the given order, e.g. `x^2 - 1/2*y + 3`.
pub fn fmt_combination<'a>(terms: impl Iterator<Item = (String, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (label, c) in terms {
        let neg = c < &Scalar::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        let body = if label == "1" {
            fmt_scalar(&abs)
        } else if abs.is_one() {
            label
        } else {
            format!("{}*{label}", fmt_scalar(&abs))
        };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&body),
            (true, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_sorted_and_counted() {
        let ms = Monomial::up_to(2, 2);
        let exps: Vec<Vec<u32>> = ms.iter().map(|m| m.0.clone()).collect();
        assert_eq!(
            exps,
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(Monomial(vec![2, 1]).label(&names), "x^2*y");
        assert_eq!(Monomial(vec![0, 0]).label(&names), "1");
        assert_eq!(Monomial(vec![2, 1]).word(), vec![0, 0, 1]);
        assert_eq!(Monomial::up_to(0, 4).len(), 1);
    }

    #[test]
    fn combination_format() {
        use crate::exactlin::{frac, int};
        let terms = [("1".to_string(), int(3)),
            ("x".to_string(), int(-1)),
            ("y".to_string(), frac(1, 2)),
            ("z".to_string(), int(-2))];
        assert_eq!(
            fmt_combination(terms.iter().map(|(l, c)| (l.clone(), c))),
            "3 - x + 1/2*y - 2*z"
        );
        assert_eq!(fmt_combination(std::iter::empty()), "0");
    }
}
