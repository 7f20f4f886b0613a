//! Grouplike and primitive functors, and the decomposition of a
//! cocommutative Hopf algebra as `U(L_H) ⋊ K[G_H]`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::constructors::{enveloping, group_algebra, smash, FiniteGroup, HopfAction, LieAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, nullspace, Scalar, SparseMatrix, SparseVec, Subspace};
use crate::hopf::{outer, BasisIndex, Generator, HopfPresentation, Kind};
use crate::morphisms::{HopfMorphism, RankProfile};
use crate::verdict::Verdict;

/// The group of grouplike elements, with each element's coordinates in H.
#[derive(Debug, Clone)]
pub struct Grouplikes {
    pub group: FiniteGroup,
    /// `elements[k]` is the grouplike for group element `k`.
    pub elements: Vec<SparseVec>,
}

impl Grouplikes {
    /// Position of a grouplike given by coordinates, if it is one of ours.
    pub fn position(&self, v: &SparseVec) -> Option<usize> {
        self.elements.iter().position(|e| e == v)
    }

    /// `K[G_H] → H`, built at the truncation of `h`.
    pub fn embedding(&self, h: &Arc<HopfPresentation>) -> Result<HopfMorphism> {
        let kg = Arc::new(group_algebra(&self.group, h.truncation())?);
        self.embedding_from(kg, h)
    }

    fn embedding_from(
        &self,
        kg: Arc<HopfPresentation>,
        h: &Arc<HopfPresentation>,
    ) -> Result<HopfMorphism> {
        let images = self
            .group
            .generators()
            .iter()
            .map(|&g| (Generator::Group(g), h.wrap(self.elements[g].clone())))
            .collect();
        HopfMorphism::new(format!("s_{}", h.name()), kg, h.clone(), &images)
    }
}

/// Label of a degree-zero basis element when read as a group element.
fn grouplike_label(h: &HopfPresentation, i: usize) -> String {
    match (&h.basis()[i], h.kind()) {
        (BasisIndex::Group(g), Kind::GroupAlgebra(grp)) => grp.label(*g).to_string(),
        (BasisIndex::Smash(_, g), Kind::Smash(act)) => act.group().label(*g).to_string(),
        _ if h.label(i) == "1" => "e".into(),
        _ => h.label(i).to_string(),
    }
}

/// Grouplikes of `H`.
///
/// In a filtered presentation every grouplike lies in `F_0`: if `x` had a
/// top-degree component `x_n` with `n ≥ 1`, then `x ⊗ x` would carry
/// `x_n ⊗ x_n` in total degree `2n`, which `Δ(x)` cannot reach. On `F_0`
/// write `x = Σ α_i b_i`. When every `Δ(b_i)` is diagonal the off-diagonal
/// coefficients of `Δ(x) = x ⊗ x` read `α_i α_j = 0`, so all α's but one
/// vanish and the survivors are scalar multiples of single basis elements,
/// fixed by `ε(x) = 1`. Structure-constant presentations may instead
/// declare their grouplikes; each declared element is verified.
pub fn grouplikes(h: &HopfPresentation) -> Result<Grouplikes> {
    let mut labels = Vec::new();
    let mut elements = Vec::new();
    match &h.tables().grouplikes {
        Some(declared) if matches!(h.kind(), Kind::StructureConstants) => {
            for g in declared {
                labels.push(g.label.clone());
                elements.push(g.element.clone());
            }
        }
        _ => {
            let z = h.dim_at(0);
            let diagonal = (0..z).all(|k| h.tables().coproduct[k].keys().all(|[a, b]| a == b));
            if !diagonal {
                return Err(Error::UnsupportedKind(format!(
                    "grouplikes of {}: degree-zero coproduct is not diagonal and no grouplikes are declared",
                    h.name()
                )));
            }
            for i in 0..z {
                let c = h.tables().coproduct[i].get(&[i, i]).cloned().unwrap_or_else(Scalar::zero);
                if c.is_zero() || !(&c * &h.tables().counit[i]).is_one() {
                    continue;
                }
                labels.push(grouplike_label(h, i));
                elements.push(SparseVec::from([(i, c)]));
            }
        }
    }
    for (l, x) in labels.iter().zip(&elements) {
        if h.comul_raw(x) != outer(x, x) || !h.counit_raw(x).is_one() {
            return Err(Error::NotGrouplike(l.clone()));
        }
    }
    let mut table = vec![vec![0; elements.len()]; elements.len()];
    for (a, x) in elements.iter().enumerate() {
        for (b, y) in elements.iter().enumerate() {
            let xy = h.mul_raw(x, y)?;
            table[a][b] = elements
                .iter()
                .position(|e| *e == xy)
                .ok_or_else(|| Error::ClosureFailure(format!("products of grouplikes ({} * {})", labels[a], labels[b])))?;
        }
    }
    let group = FiniteGroup::new(format!("G({})", h.name()), labels, table)?;
    if elements[group.identity()] != h.tables().unit {
        return Err(Error::ClosureFailure("grouplikes: identity is not the unit".into()));
    }
    Ok(Grouplikes { group, elements })
}

/// The Lie algebra of primitive elements, with a basis in H coordinates.
#[derive(Debug, Clone)]
pub struct Primitives {
    pub lie: LieAlgebra,
    pub elements: Vec<SparseVec>,
    space: Subspace,
}

impl Primitives {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Coordinates in the primitive basis, or `None` outside `P(H)`.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        self.space.coords(v)
    }

    /// `U(L_H) → H`, built at the truncation of `h`.
    pub fn embedding(&self, h: &Arc<HopfPresentation>) -> Result<HopfMorphism> {
        let u = Arc::new(enveloping(&self.lie, h.truncation())?);
        self.embedding_from(u, h)
    }

    fn embedding_from(
        &self,
        u: Arc<HopfPresentation>,
        h: &Arc<HopfPresentation>,
    ) -> Result<HopfMorphism> {
        let images = (0..self.dim())
            .map(|k| (Generator::Lie(k), h.wrap(self.elements[k].clone())))
            .collect();
        HopfMorphism::new(format!("i_{}", h.name()), u, h.clone(), &images)
    }
}

/// Primitives of `H`: the nullspace of `v ↦ Δ(v) - v ⊗ 1 - 1 ⊗ v` on
/// `F_d`, one basis vector per free column in canonical order. The
/// commutator bracket is checked to close on that span.
pub fn primitives(h: &HopfPresentation) -> Result<Primitives> {
    let n = h.dim();
    let unit = &h.tables().unit;
    let columns: Vec<SparseVec> = (0..n)
        .map(|j| {
            let b = SparseVec::from([(j, Scalar::one())]);
            let mut t = h.comul_raw(&b);
            axpy(&mut t, &-Scalar::one(), &outer(&b, unit));
            axpy(&mut t, &-Scalar::one(), &outer(unit, &b));
            t.into_iter().map(|([a, c], x)| (a * n + c, x)).collect()
        })
        .collect();
    let m = SparseMatrix::from_columns(n * n, &columns)?;
    let elements = nullspace(&m);
    let space = Subspace::new(n, elements.iter().cloned());

    let mut labels: Vec<String> = elements
        .iter()
        .enumerate()
        .map(|(k, v)| match v.iter().next() {
            Some((&i, c)) if v.len() == 1 && c.is_one() => h.label(i).to_string(),
            _ => format!("p{k}"),
        })
        .collect();
    let distinct: std::collections::BTreeSet<&String> = labels.iter().collect();
    if distinct.len() != labels.len() {
        labels = (0..elements.len()).map(|k| format!("p{k}")).collect();
    }

    let mut brackets = Vec::new();
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let not_closed = || Error::BracketNotClosed(labels[i].clone(), labels[j].clone());
            let mut c = h.mul_raw(&elements[i], &elements[j]).map_err(|_| not_closed())?;
            let ji = h.mul_raw(&elements[j], &elements[i]).map_err(|_| not_closed())?;
            axpy(&mut c, &-Scalar::one(), &ji);
            let coords = space.coords(&c).ok_or_else(not_closed)?;
            if !coords.is_empty() {
                brackets.push((i, j, coords));
            }
        }
    }
    let lie = LieAlgebra::new(format!("P({})", h.name()), labels, brackets)?;
    Ok(Primitives {
        lie,
        elements,
        space,
    })
}

/// `0 → A --i--> H --p--> B → 0` with a section `s` of `p`.
#[derive(Debug, Clone)]
pub struct SplitSES {
    pub a: Arc<HopfPresentation>,
    pub h: Arc<HopfPresentation>,
    pub b: Arc<HopfPresentation>,
    pub i: HopfMorphism,
    pub p: HopfMorphism,
    pub s: HopfMorphism,
}

/// Output of [`decompose`].
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub ses: SplitSES,
    pub grouplikes: Grouplikes,
    pub primitives: Primitives,
    /// Conjugation action of `G_H` on `L_H`.
    pub action: HopfAction,
    pub smash: Arc<HopfPresentation>,
    /// `h: U(L_H) ⋊ K[G_H] → H`, `h(a ⊗ g) = i(a) s(g)`.
    pub comparison: HopfMorphism,
    pub comparison_profile: RankProfile,
}

/// Splits `H` as `U(L_H) ⋊ K[G_H]`: computes grouplikes and primitives,
/// the conjugation action `g·x = g x g⁻¹`, the comparison map from the
/// smash product (certified bijective at the truncation), and
/// `i_H = h∘i_1`, `s_H = h∘i_2`, `p_H = p_2∘h⁻¹`.
pub fn decompose(h: &Arc<HopfPresentation>) -> Result<Decomposition> {
    let d = h.truncation();
    let gl = grouplikes(h)?;
    let pr = primitives(h)?;
    let grp = &gl.group;

    let mut images = Vec::with_capacity(grp.order());
    for g in 0..grp.order() {
        let x = &gl.elements[g];
        let x_inv = &gl.elements[grp.inv(g)];
        let mut row = Vec::with_capacity(pr.dim());
        for p in &pr.elements {
            let conj = h.mul_raw(&h.mul_raw(x, p)?, x_inv)?;
            row.push(pr.coords(&conj).ok_or_else(|| {
                Error::ClosureFailure(format!(
                    "conjugation of {} by {}",
                    h.fmt_vec(p),
                    grp.label(g)
                ))
            })?);
        }
        images.push(row);
    }
    let action = HopfAction::new(format!("conj({})", h.name()), grp.clone(), pr.lie.clone(), images)?;
    let sm = Arc::new(smash(&action, d)?);

    let mut gen_images = BTreeMap::new();
    for k in 0..pr.dim() {
        gen_images.insert(Generator::Lie(k), h.wrap(pr.elements[k].clone()));
    }
    for &g in grp.generators() {
        gen_images.insert(Generator::Group(g), h.wrap(gl.elements[g].clone()));
    }
    let comparison = HopfMorphism::new(format!("h_{}", h.name()), sm.clone(), h.clone(), &gen_images)?;
    let profile = comparison.rank_profile();
    if !profile.bijective() {
        return Err(Error::NotBijective(d));
    }

    let a = Arc::new(enveloping(&pr.lie, d)?);
    let b = Arc::new(group_algebra(grp, d)?);
    let i = pr.embedding_from(a.clone(), h)?;
    let s = gl.embedding_from(b.clone(), h)?;

    // p_2: U(L) ⋊ K[G] → K[G], a ⊗ g ↦ ε(a) g, composed with h⁻¹.
    let inverse = Subspace::new(h.dim(), comparison.basis_images().iter().cloned());
    let mut p_images = Vec::with_capacity(h.dim());
    for j in 0..h.dim() {
        let coords = inverse
            .coords(&SparseVec::from([(j, Scalar::one())]))
            .expect("comparison is bijective");
        let mut out = SparseVec::new();
        for (k, c) in coords {
            let BasisIndex::Smash(m, g) = &sm.basis()[k] else { unreachable!() };
            if m.degree() == 0 {
                let target = b.index_of(&BasisIndex::Group(*g)).expect("group element");
                axpy(&mut out, &c, &SparseVec::from([(target, Scalar::one())]));
            }
        }
        p_images.push(out);
    }
    let p = HopfMorphism::from_basis_images(format!("p_{}", h.name()), h.clone(), b.clone(), p_images)?;

    Ok(Decomposition {
        ses: SplitSES {
            a,
            h: h.clone(),
            b,
            i,
            p,
            s,
        },
        grouplikes: gl,
        primitives: pr,
        action,
        smash: sm,
        comparison,
        comparison_profile: profile,
    })
}

/// The morphism of split sequences induced by `f: H1 → H2`.
#[derive(Debug, Clone)]
pub struct InducedPair {
    /// `U(P(f)): U(L_{H1}) → U(L_{H2})`.
    pub f1: HopfMorphism,
    /// `K[G(f)]: K[G_{H1}] → K[G_{H2}]`.
    pub f2: HopfMorphism,
    /// The `i`, `p` and `s` squares.
    pub verdict: Verdict,
}

/// `f1 = U(P(f))` and `f2 = K[G(f)]`, with the three squares checked on
/// every basis element of the truncation.
pub fn induced_pair(
    f: &HopfMorphism,
    source: &Decomposition,
    target: &Decomposition,
) -> Result<InducedPair> {
    let (s1, s2) = (&source.ses, &target.ses);
    if f.source().id() != s1.h.id() || f.target().id() != s2.h.id() {
        return Err(Error::Composition(format!(
            "{} does not run between the decomposed objects",
            f.name()
        )));
    }
    let mut lie_images = BTreeMap::new();
    for (k, p) in source.primitives.elements.iter().enumerate() {
        let img = f.apply_raw(p);
        let c = target.primitives.coords(&img).ok_or_else(|| {
            Error::NotPrimitive(format!("f({})", source.primitives.lie.label(k)))
        })?;
        let mut v = SparseVec::new();
        for (l, x) in c {
            let idx = s2.a.generator_index(Generator::Lie(l)).expect("Lie generator");
            axpy(&mut v, &x, &SparseVec::from([(idx, Scalar::one())]));
        }
        lie_images.insert(Generator::Lie(k), s2.a.wrap(v));
    }
    let f1 = HopfMorphism::new(format!("U(P({}))", f.name()), s1.a.clone(), s2.a.clone(), &lie_images)?;

    let mut grp_images = BTreeMap::new();
    for &g in source.grouplikes.group.generators() {
        let img = f.apply_raw(&source.grouplikes.elements[g]);
        let k = target.grouplikes.position(&img).ok_or_else(|| {
            Error::NotGrouplike(format!("f({})", source.grouplikes.group.label(g)))
        })?;
        let idx = s2.b.index_of(&BasisIndex::Group(k)).expect("group element");
        grp_images.insert(Generator::Group(g), s2.b.basis_element(idx));
    }
    let f2 = HopfMorphism::new(format!("K[G({})]", f.name()), s1.b.clone(), s2.b.clone(), &grp_images)?;

    let mut verdict = Verdict::new(format!("induced pair of {}", f.name()), f.source().truncation());
    square(&mut verdict, "i square", (&s2.i, &f1), (f, &s1.i))?;
    square(&mut verdict, "p square", (&s2.p, f), (&f2, &s1.p))?;
    square(&mut verdict, "s square", (&s2.s, &f2), (f, &s1.s))?;
    Ok(InducedPair { f1, f2, verdict })
}

/// Records whether `l.0 ∘ l.1 = r.0 ∘ r.1`.
pub(crate) fn square(
    v: &mut Verdict,
    name: &str,
    l: (&HopfMorphism, &HopfMorphism),
    r: (&HopfMorphism, &HopfMorphism),
) -> Result<()> {
    let lhs = HopfMorphism::compose(l.0, l.1)?;
    let rhs = HopfMorphism::compose(r.0, r.1)?;
    match lhs.difference(&rhs) {
        None => v.ok(name, format!("{} = {}", lhs.name(), rhs.name())),
        Some(w) => v.fail(name, format!("{} ≠ {}", lhs.name(), rhs.name()), w),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{FiniteGroup, LieAlgebra};
    use crate::exactlin::int;

    fn h2() -> Arc<HopfPresentation> {
        let act = HopfAction::new(
            "sign",
            FiniteGroup::cyclic(2),
            LieAlgebra::abelian(1),
            vec![vec![SparseVec::from([(0, int(1))])], vec![SparseVec::from([(0, int(-1))])]],
        )
        .unwrap();
        Arc::new(smash(&act, 4).unwrap().with_name("H2"))
    }

    #[test]
    fn grouplikes_of_group_algebras() {
        for g in [FiniteGroup::cyclic(2), FiniteGroup::symmetric3(), FiniteGroup::quaternion8()] {
            let gl = grouplikes(&group_algebra(&g, 4).unwrap()).unwrap();
            assert_eq!(gl.group.labels(), g.labels());
            assert_eq!(gl.group.table(), g.table());
        }
    }

    #[test]
    fn grouplikes_of_enveloping_and_smash() {
        let gl = grouplikes(&enveloping(&LieAlgebra::abelian(1), 4).unwrap()).unwrap();
        assert_eq!(gl.group.order(), 1);
        assert_eq!(gl.elements, vec![SparseVec::from([(0, int(1))])]);
        let h = h2();
        let gl = grouplikes(&h).unwrap();
        assert_eq!(gl.group.labels(), &["e".to_string(), "g".to_string()]);
        let names: Vec<String> = gl.elements.iter().map(|v| h.fmt_vec(v)).collect();
        assert_eq!(names, vec!["1", "g"]);
    }

    #[test]
    fn primitives_of_group_algebra_vanish() {
        let p = primitives(&group_algebra(&FiniteGroup::cyclic(2), 4).unwrap()).unwrap();
        assert_eq!(p.dim(), 0);
        let p = primitives(&group_algebra(&FiniteGroup::trivial(), 4).unwrap()).unwrap();
        assert_eq!(p.dim(), 0);
    }

    #[test]
    fn primitives_of_aff2_at_three() {
        let u = enveloping(&LieAlgebra::aff2(), 3).unwrap();
        let p = primitives(&u).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.lie.labels(), LieAlgebra::aff2().labels());
        assert_eq!(p.lie.structure_constants(), LieAlgebra::aff2().structure_constants());
    }

    #[test]
    fn decompose_h2() {
        let h = h2();
        let dec = decompose(&h).unwrap();
        assert_eq!(dec.ses.a.dim(), 5);
        assert_eq!(dec.ses.b.dim(), 2);
        assert!(dec.comparison_profile.bijective());
        assert_eq!(dec.ses.i.describe(), vec![("x".to_string(), "x".to_string())]);
        assert_eq!(dec.ses.s.describe(), vec![("g".to_string(), "g".to_string())]);
        // p_H(x^n ⊗ b) = 0 for n ≥ 1, 1 ⊗ b ↦ b
        for (j, label) in h.labels().iter().enumerate() {
            let img = dec.ses.b.fmt_vec(&dec.ses.p.basis_images()[j]);
            let expect = match label.as_str() {
                "1" => "e",
                "g" => "g",
                _ => "0",
            };
            assert_eq!(img, expect, "{label}");
        }
    }

    #[test]
    fn decompose_group_algebra_and_enveloping() {
        let kg = Arc::new(group_algebra(&FiniteGroup::symmetric3(), 4).unwrap());
        let dec = decompose(&kg).unwrap();
        assert_eq!(dec.ses.a.dim(), 1);
        assert_eq!(dec.ses.b.dim(), 6);
        let u = Arc::new(enveloping(&LieAlgebra::sl2(), 3).unwrap());
        let dec = decompose(&u).unwrap();
        assert_eq!(dec.ses.a.dim(), u.dim());
        assert_eq!(dec.ses.b.dim(), 1);
    }

    #[test]
    fn induced_pair_of_identity_and_projection() {
        let h = h2();
        let dec = decompose(&h).unwrap();
        let id = HopfMorphism::identity(h.clone());
        let pair = induced_pair(&id, &dec, &dec).unwrap();
        assert!(pair.verdict.pass);
        assert!(pair.f1.difference(&HopfMorphism::identity(dec.ses.a.clone())).is_none());

        let kc2 = dec.ses.b.clone();
        let dec_b = decompose(&kc2).unwrap();
        let pair = induced_pair(&dec.ses.p, &dec, &dec_b).unwrap();
        assert!(pair.verdict.pass, "{:?}", pair.verdict);
        // P(p_H) kills x, so f1 is the counit map to K
        assert_eq!(pair.f1.target().dim(), 1);
        assert!(pair.f1.difference(&HopfMorphism::zero(dec.ses.a.clone(), dec_b.ses.a.clone())).is_none());
        assert!(pair.f2.rank_profile().bijective());
    }
}
