//! Hopf algebra morphisms between presentations.
//!
//! A morphism is specified on generators and extended multiplicatively to
//! the whole truncated basis. The stored form is the image of every basis
//! element, so application, composition and rank computations are plain
//! linear algebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{add_term, axpy, scale, Echelon, Scalar, SparseVec};
use crate::hopf::{BasisIndex, Element, Generator, HopfPresentation, Kind, Monomial, RawTensor};
use crate::verdict::Verdict;

#[derive(Debug, Clone)]
pub struct HopfMorphism {
    name: String,
    source: Arc<HopfPresentation>,
    target: Arc<HopfPresentation>,
    /// `images[i]` = image of source basis element `i`, in target coordinates.
    images: Vec<SparseVec>,
}

/// Ranks of a morphism restricted to each filtration level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub degree: usize,
    pub source_dims: Vec<usize>,
    pub target_dims: Vec<usize>,
    pub ranks: Vec<usize>,
    pub injective: bool,
    pub surjective: bool,
}

impl RankProfile {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }

    /// `dim ker(f) ∩ F_k` for each `k`.
    pub fn kernel_dims(&self) -> Vec<usize> {
        self.source_dims
            .iter()
            .zip(&self.ranks)
            .map(|(s, r)| s - r)
            .collect()
    }
}

fn unit_vec(i: usize) -> SparseVec {
    SparseVec::from([(i, Scalar::one())])
}

fn power_product(
    target: &HopfPresentation,
    factors: impl IntoIterator<Item = SparseVec>,
) -> Result<SparseVec> {
    let mut acc = target.tables().unit.clone();
    for f in factors {
        acc = target.mul_raw(&acc, &f)?;
    }
    Ok(acc)
}

impl HopfMorphism {
    /// Extends generator images multiplicatively without checking any
    /// relation or the filtration. Missing generators, foreign elements and
    /// degree overflow are still errors.
    pub fn from_generators_unchecked(
        name: impl Into<String>,
        source: Arc<HopfPresentation>,
        target: Arc<HopfPresentation>,
        images: &BTreeMap<Generator, Element>,
    ) -> Result<Self> {
        let mut gen = BTreeMap::new();
        for g in source.generators() {
            let label = source.generator_label(g);
            let img = images.get(&g).ok_or_else(|| Error::MissingImage(label.clone()))?;
            target.check_owner(img)?;
            gen.insert(g, img.terms().clone());
        }
        if let Some(extra) = images.keys().find(|g| !gen.contains_key(g)) {
            return Err(Error::MissingImage(format!(
                "{extra:?} is not a generator of {}",
                source.name()
            )));
        }
        let basis_images = Self::extend(&source, &target, &gen)?;
        Ok(HopfMorphism {
            name: name.into(),
            source,
            target,
            images: basis_images,
        })
    }

    fn extend(
        source: &HopfPresentation,
        target: &HopfPresentation,
        gen: &BTreeMap<Generator, SparseVec>,
    ) -> Result<Vec<SparseVec>> {
        let group_part = |grp: &crate::constructors::FiniteGroup| -> Result<Vec<SparseVec>> {
            // image of every group element through a word in the generators
            let words = grp.words();
            let mut out = Vec::with_capacity(grp.order());
            for w in &words {
                out.push(power_product(
                    target,
                    w.iter().map(|&g| gen[&Generator::Group(g)].clone()),
                )?);
            }
            Ok(out)
        };
        let lie_part = |m: &Monomial| -> Result<SparseVec> {
            power_product(target, m.word().into_iter().map(|i| gen[&Generator::Lie(i)].clone()))
        };
        let mut out = Vec::with_capacity(source.dim());
        match source.kind() {
            Kind::GroupAlgebra(grp) => {
                let per = group_part(grp)?;
                for b in source.basis() {
                    let BasisIndex::Group(g) = b else { unreachable!() };
                    out.push(per[*g].clone());
                }
            }
            Kind::Enveloping(_) => {
                for b in source.basis() {
                    let BasisIndex::Pbw(m) = b else { unreachable!() };
                    out.push(lie_part(m)?);
                }
            }
            Kind::Smash(act) => {
                let per = group_part(act.group())?;
                for b in source.basis() {
                    let BasisIndex::Smash(m, g) = b else { unreachable!() };
                    out.push(target.mul_raw(&lie_part(m)?, &per[*g])?);
                }
            }
            Kind::StructureConstants => {
                for i in 0..source.dim() {
                    out.push(gen[&Generator::Basis(i)].clone());
                }
            }
        }
        Ok(out)
    }

    /// A linear map given on every basis element, unchecked apart from
    /// shape.
    pub fn from_basis_images_unchecked(
        name: impl Into<String>,
        source: Arc<HopfPresentation>,
        target: Arc<HopfPresentation>,
        images: Vec<SparseVec>,
    ) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(Error::InvalidTables(format!(
                "{} basis images given for a source of dimension {}",
                images.len(),
                source.dim()
            )));
        }
        if let Some(&k) = images.iter().flat_map(|v| v.keys()).find(|&&k| k >= target.dim()) {
            return Err(Error::BasisOutOfRange {
                index: k,
                dim: target.dim(),
            });
        }
        Ok(HopfMorphism {
            name: name.into(),
            source,
            target,
            images,
        })
    }

    /// A validated morphism from generator images. The first failed
    /// condition is returned as an error: grouplike and primitive images,
    /// then the defining relations, then the full structure check.
    pub fn new(
        name: impl Into<String>,
        source: Arc<HopfPresentation>,
        target: Arc<HopfPresentation>,
        images: &BTreeMap<Generator, Element>,
    ) -> Result<Self> {
        for (&g, img) in images {
            let Some(idx) = source.generator_index(g) else { continue };
            target.check_owner(img)?;
            let degree = source.basis_degree(idx);
            let image_degree = target.degree(img);
            if image_degree > degree {
                return Err(Error::FiltrationViolation {
                    generator: source.generator_label(g),
                    degree,
                    image_degree,
                });
            }
        }
        let f = Self::from_generators_unchecked(name, source, target, images)?;
        f.ensure_valid()?;
        Ok(f)
    }

    /// Validated form of [`HopfMorphism::from_basis_images_unchecked`].
    pub fn from_basis_images(
        name: impl Into<String>,
        source: Arc<HopfPresentation>,
        target: Arc<HopfPresentation>,
        images: Vec<SparseVec>,
    ) -> Result<Self> {
        let f = Self::from_basis_images_unchecked(name, source, target, images)?;
        f.ensure_valid()?;
        Ok(f)
    }

    pub fn identity(h: Arc<HopfPresentation>) -> Self {
        let images = (0..h.dim()).map(unit_vec).collect();
        HopfMorphism {
            name: format!("id_{}", h.name()),
            source: h.clone(),
            target: h,
            images,
        }
    }

    /// The zero morphism `u ∘ ε`.
    pub fn zero(source: Arc<HopfPresentation>, target: Arc<HopfPresentation>) -> Self {
        let unit = target.tables().unit.clone();
        let images = source
            .tables()
            .counit
            .iter()
            .map(|c| scale(&unit, c))
            .collect();
        HopfMorphism {
            name: format!("0: {} -> {}", source.name(), target.name()),
            source,
            target,
            images,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn source(&self) -> &Arc<HopfPresentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<HopfPresentation> {
        &self.target
    }

    pub fn basis_images(&self) -> &[SparseVec] {
        &self.images
    }

    pub fn generator_image(&self, g: Generator) -> Option<Element> {
        let i = self.source.generator_index(g)?;
        Some(self.target.wrap(self.images[i].clone()))
    }

    pub(crate) fn apply_raw(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, c) in v {
            axpy(&mut out, c, &self.images[i]);
        }
        out
    }

    fn apply2_raw(&self, t: &RawTensor<2>) -> RawTensor<2> {
        let mut out = RawTensor::new();
        for ([a, b], c) in t {
            for (&x, p) in &self.images[*a] {
                for (&y, q) in &self.images[*b] {
                    add_term(&mut out, [x, y], c * p * q);
                }
            }
        }
        out
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        self.source.check_owner(a)?;
        Ok(self.target.wrap(self.apply_raw(a.terms())))
    }

    /// `g ∘ f`.
    pub fn compose(g: &HopfMorphism, f: &HopfMorphism) -> Result<HopfMorphism> {
        if f.target.id() != g.source.id() {
            return Err(Error::Composition(format!(
                "{} ends at {} but {} starts at {}",
                f.name,
                f.target.name(),
                g.name,
                g.source.name()
            )));
        }
        let images = f.images.iter().map(|v| g.apply_raw(v)).collect();
        Ok(HopfMorphism {
            name: format!("{} ∘ {}", g.name, f.name),
            source: f.source.clone(),
            target: g.target.clone(),
            images,
        })
    }

    /// First source basis element on which the two maps differ, or `None`
    /// if they agree. Maps with different endpoints differ at "shape".
    pub fn difference(&self, other: &HopfMorphism) -> Option<String> {
        if self.source.id() != other.source.id() || self.target.id() != other.target.id() {
            return Some("shape".into());
        }
        (0..self.source.dim())
            .find(|&i| self.images[i] != other.images[i])
            .map(|i| self.source.label(i).to_string())
    }

    /// Ranks of `f|F_k` for each `k`. Source prefixes are taken in the
    /// canonical degree-sorted basis, so each rank is that of a prefix of
    /// the image columns.
    pub fn rank_profile(&self) -> RankProfile {
        let d = self.source.truncation();
        let mut ech = Echelon::new();
        let mut ranks = Vec::with_capacity(d + 1);
        let mut next = 0;
        for k in 0..=d {
            let upto = self.source.dim_at(k);
            while next < upto {
                ech.insert(self.images[next].clone());
                next += 1;
            }
            ranks.push(ech.rank());
        }
        let source_dims: Vec<usize> = (0..=d).map(|k| self.source.dim_at(k)).collect();
        let target_dims: Vec<usize> = (0..=d).map(|k| self.target.dim_at(k)).collect();
        let top = *ranks.last().unwrap_or(&0);
        RankProfile {
            degree: d,
            injective: top == self.source.dim(),
            surjective: top == self.target.dim(),
            source_dims,
            target_dims,
            ranks,
        }
    }

    /// First basis element whose image has higher degree than itself.
    fn filtration_failure(&self) -> Option<(usize, usize)> {
        (0..self.source.dim()).find_map(|i| {
            let deg = self.target.vec_degree(&self.images[i]);
            (deg > self.source.basis_degree(i)).then_some((i, deg))
        })
    }

    fn ensure_valid(&self) -> Result<()> {
        if let Some((i, image_degree)) = self.filtration_failure() {
            return Err(Error::FiltrationViolation {
                generator: self.source.label(i).to_string(),
                degree: self.source.basis_degree(i),
                image_degree,
            });
        }
        match self.first_failure() {
            None => Ok(()),
            Some(e) => Err(e),
        }
    }

    fn first_failure(&self) -> Option<Error> {
        let v = self.validate();
        let c = v.failures().next()?;
        let witness = c.witness.clone().unwrap_or_default();
        Some(match c.name.as_str() {
            "grouplike generators" => Error::NotGrouplike(witness),
            "primitive generators" => Error::NotPrimitive(witness),
            "relations" => Error::RelationViolation { relation: witness },
            other => Error::NotAMorphism {
                check: other.to_string(),
                witness,
            },
        })
    }

    /// Full check, reported check by check. Generator-level conditions come
    /// first, then agreement with `M`, `u`, `Δ`, `ε` and `S` on every basis
    /// element (and every pair for `M` within the truncation).
    pub fn validate(&self) -> Verdict {
        let src = &*self.source;
        let dst = &*self.target;
        let mut v = Verdict::new(
            format!("morphism {}: {} -> {}", self.name, src.name(), dst.name()),
            src.truncation(),
        );
        let gens = src.generators();
        let image = |g: Generator| &self.images[src.generator_index(g).unwrap()];
        let dst_unit = &dst.tables().unit;

        let group_gens: Vec<Generator> =
            gens.iter().copied().filter(|g| matches!(g, Generator::Group(_))).collect();
        let lie_gens: Vec<Generator> =
            gens.iter().copied().filter(|g| matches!(g, Generator::Lie(_))).collect();

        if !group_gens.is_empty() {
            let bad = group_gens.iter().find(|&&g| {
                let y = image(g);
                dst.comul_raw(y) != crate::hopf::outer(y, y) || !dst.counit_raw(y).is_one()
            });
            v.record(
                "grouplike generators",
                match bad {
                    None => Ok(format!("{} generators", group_gens.len())),
                    Some(&g) => Err((
                        format!(
                            "f({}) = {} is not grouplike",
                            src.generator_label(g),
                            dst.fmt_vec(image(g))
                        ),
                        src.generator_label(g),
                    )),
                },
            );
        }
        if !lie_gens.is_empty() {
            let bad = lie_gens.iter().find(|&&g| {
                let y = image(g);
                let mut expect = crate::hopf::outer(y, dst_unit);
                axpy(&mut expect, &Scalar::one(), &crate::hopf::outer(dst_unit, y));
                dst.comul_raw(y) != expect
            });
            v.record(
                "primitive generators",
                match bad {
                    None => Ok(format!("{} generators", lie_gens.len())),
                    Some(&g) => Err((
                        format!(
                            "f({}) = {} is not primitive",
                            src.generator_label(g),
                            dst.fmt_vec(image(g))
                        ),
                        src.generator_label(g),
                    )),
                },
            );
        }
        v.record(
            "filtration",
            match self.filtration_failure() {
                None => Ok("images stay in their filtration degree".into()),
                Some((i, deg)) => Err((
                    format!(
                        "f({}) = {} has degree {deg} > {}",
                        src.label(i),
                        dst.fmt_vec(&self.images[i]),
                        src.basis_degree(i)
                    ),
                    src.label(i).to_string(),
                )),
            },
        );
        if !matches!(src.kind(), Kind::StructureConstants) {
            v.record("relations", self.relation_check());
        }
        if !v.pass {
            return v;
        }
        self.structure_checks(&mut v);
        v
    }

    fn relation_check(&self) -> Result<String, (String, String)> {
        let src = &*self.source;
        let dst = &*self.target;
        let (grp, lie, act) = match src.kind() {
            Kind::GroupAlgebra(g) => (Some(g), None, None),
            Kind::Enveloping(l) => (None, Some(l), None),
            Kind::Smash(a) => (Some(a.group()), Some(a.lie()), Some(a)),
            Kind::StructureConstants => return Ok("given on the basis".into()),
        };
        let mut count = 0;
        let mul = |a: &SparseVec, b: &SparseVec| dst.mul_raw(a, b);
        let fail = |rel: String, lhs: &SparseVec, rhs: &SparseVec| {
            Err((
                format!("{rel}: {} ≠ {}", dst.fmt_vec(lhs), dst.fmt_vec(rhs)),
                rel,
            ))
        };
        if let Some(grp) = grp {
            let g_img = |a: usize| {
                let b = match act {
                    Some(a2) => BasisIndex::Smash(Monomial::one(a2.lie().dim()), a),
                    None => BasisIndex::Group(a),
                };
                &self.images[src.index_of(&b).unwrap()]
            };
            for a in 0..grp.order() {
                for b in 0..grp.order() {
                    count += 1;
                    let lhs = mul(g_img(a), g_img(b)).map_err(|e| (e.to_string(), "degree".into()))?;
                    let rhs = g_img(grp.mul(a, b));
                    if &lhs != rhs {
                        let rel = format!("{}*{} = {}", grp.label(a), grp.label(b), grp.label(grp.mul(a, b)));
                        return fail(rel, &lhs, rhs);
                    }
                }
            }
        }
        if let Some(lie) = lie {
            let x_img = |i: usize| self.images[src.generator_index(Generator::Lie(i)).unwrap()].clone();
            let err = |e: Error| (e.to_string(), "degree".to_string());
            for i in 0..lie.dim() {
                for j in i + 1..lie.dim() {
                    count += 1;
                    let mut lhs = mul(&x_img(i), &x_img(j)).map_err(err)?;
                    axpy(&mut lhs, &-Scalar::one(), &mul(&x_img(j), &x_img(i)).map_err(err)?);
                    let mut rhs = SparseVec::new();
                    for (&k, c) in lie.bracket(i, j) {
                        axpy(&mut rhs, c, &x_img(k));
                    }
                    if lhs != rhs {
                        let br = crate::hopf::fmt_combination(
                            lie.bracket(i, j).iter().map(|(&k, c)| (lie.label(k).to_string(), c)),
                        );
                        let rel = format!("[{}, {}] = {}", lie.label(i), lie.label(j), br);
                        return fail(rel, &lhs, &rhs);
                    }
                }
            }
            if let Some(act) = act {
                let grp = act.group();
                let g_img = |a: usize| {
                    self.images[src
                        .index_of(&BasisIndex::Smash(Monomial::one(lie.dim()), a))
                        .unwrap()]
                    .clone()
                };
                for a in 0..grp.order() {
                    for i in 0..lie.dim() {
                        count += 1;
                        let lhs = mul(&g_img(a), &x_img(i)).map_err(err)?;
                        let mut acted = SparseVec::new();
                        for (&k, c) in act.image(a, i) {
                            axpy(&mut acted, c, &x_img(k));
                        }
                        let rhs = mul(&acted, &g_img(a)).map_err(err)?;
                        if lhs != rhs {
                            let rel = format!(
                                "{0}*{1} = ({0}·{1})*{0}",
                                grp.label(a),
                                lie.label(i)
                            );
                            return fail(rel, &lhs, &rhs);
                        }
                    }
                }
            }
        }
        Ok(format!("{count} relations"))
    }

    fn structure_checks(&self, v: &mut Verdict) {
        let src = &*self.source;
        let dst = &*self.target;
        let n = src.dim();
        let d = src.truncation();
        let label = |i: usize| src.label(i).to_string();

        let unit_img = self.apply_raw(&src.tables().unit);
        if unit_img == dst.tables().unit {
            v.ok("unit", "f(1) = 1");
        } else {
            v.fail("unit", format!("f(1) = {}", dst.fmt_vec(&unit_img)), "1");
        }

        let mut mult = Ok(String::new());
        let mut pairs = 0usize;
        'm: for i in 0..n {
            for j in 0..n {
                if src.basis_degree(i) + src.basis_degree(j) > d {
                    continue;
                }
                pairs += 1;
                let lhs = self.apply_raw(&src.tables().product[i * n + j]);
                let rhs = match dst.mul_raw(&self.images[i], &self.images[j]) {
                    Ok(r) => r,
                    Err(e) => {
                        mult = Err((e.to_string(), format!("({}, {})", label(i), label(j))));
                        break 'm;
                    }
                };
                if lhs != rhs {
                    mult = Err((
                        format!(
                            "f({0}*{1}) = {2} but f({0})f({1}) = {3}",
                            label(i),
                            label(j),
                            dst.fmt_vec(&lhs),
                            dst.fmt_vec(&rhs)
                        ),
                        format!("({}, {})", label(i), label(j)),
                    ));
                    break 'm;
                }
            }
        }
        v.record("multiplicative", mult.map(|_| format!("{pairs} basis pairs")));

        let per_basis = |name: &str, v: &mut Verdict, f: &dyn Fn(usize) -> Option<String>| {
            let bad = (0..n).find_map(|i| f(i).map(|d| (d, label(i))));
            v.record(
                name,
                match bad {
                    None => Ok(format!("{n} basis elements")),
                    Some(e) => Err(e),
                },
            );
        };
        per_basis("comultiplication", v, &|i| {
            let lhs = dst.comul_raw(&self.images[i]);
            let rhs = self.apply2_raw(&src.tables().coproduct[i]);
            (lhs != rhs).then(|| {
                format!(
                    "Δ(f({})) = {} but (f⊗f)Δ = {}",
                    label(i),
                    dst.fmt_raw_tensor(&lhs),
                    dst.fmt_raw_tensor(&rhs)
                )
            })
        });
        per_basis("counit", v, &|i| {
            let lhs = dst.counit_raw(&self.images[i]);
            let rhs = &src.tables().counit[i];
            (&lhs != rhs).then(|| {
                format!(
                    "ε(f({})) = {} but ε = {}",
                    label(i),
                    crate::exactlin::fmt_scalar(&lhs),
                    crate::exactlin::fmt_scalar(rhs)
                )
            })
        });
        per_basis("antipode", v, &|i| {
            let lhs = dst.antipode_raw(&self.images[i]);
            let rhs = self.apply_raw(&src.tables().antipode[i]);
            (lhs != rhs).then(|| {
                format!(
                    "S(f({})) = {} but f(S({})) = {}",
                    label(i),
                    dst.fmt_vec(&lhs),
                    label(i),
                    dst.fmt_vec(&rhs)
                )
            })
        });
    }

    /// Generator images as `label ↦ image` strings, in generator order.
    pub fn describe(&self) -> Vec<(String, String)> {
        self.source
            .generators()
            .into_iter()
            .map(|g| {
                let i = self.source.generator_index(g).unwrap();
                (self.source.generator_label(g), self.target.fmt_vec(&self.images[i]))
            })
            .collect()
    }
}

/// Builds the generator-image map from labels and expressions already
/// evaluated in the target.
pub fn make_morphism(
    name: impl Into<String>,
    source: Arc<HopfPresentation>,
    target: Arc<HopfPresentation>,
    images: &BTreeMap<Generator, Element>,
) -> Result<HopfMorphism> {
    HopfMorphism::new(name, source, target, images)
}

/// Linear combination helper for callers assembling basis images.
pub fn combination(terms: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVec {
    let mut v = SparseVec::new();
    for (i, c) in terms {
        if !c.is_zero() {
            add_term(&mut v, i, c);
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{enveloping, group_algebra, smash, FiniteGroup, HopfAction, LieAlgebra};
    use crate::exactlin::int;

    fn arc(h: HopfPresentation) -> Arc<HopfPresentation> {
        Arc::new(h)
    }

    fn h2() -> Arc<HopfPresentation> {
        let act = HopfAction::new(
            "sign",
            FiniteGroup::cyclic(2),
            LieAlgebra::abelian(1),
            vec![vec![SparseVec::from([(0, int(1))])], vec![SparseVec::from([(0, int(-1))])]],
        )
        .unwrap();
        arc(smash(&act, 4).unwrap())
    }

    fn basis(h: &HopfPresentation, label: &str) -> Element {
        let i = h.labels().iter().position(|l| l == label).unwrap();
        h.basis_element(i)
    }

    #[test]
    fn identity_and_zero_validate() {
        let h = h2();
        assert!(HopfMorphism::identity(h.clone()).validate().pass);
        let kc3 = arc(group_algebra(&FiniteGroup::cyclic(3), 4).unwrap());
        assert!(HopfMorphism::zero(h.clone(), kc3).validate().pass);
    }

    #[test]
    fn c2_to_c3_violates_relation() {
        let c2 = arc(group_algebra(&FiniteGroup::cyclic(2), 4).unwrap());
        let c3 = arc(group_algebra(&FiniteGroup::cyclic(3), 4).unwrap());
        let images = BTreeMap::from([(Generator::Group(1), basis(&c3, "g"))]);
        let err = HopfMorphism::new("f", c2, c3, &images).unwrap_err();
        assert_eq!(
            err,
            Error::RelationViolation {
                relation: "g*g = e".into()
            }
        );
    }

    #[test]
    fn non_grouplike_and_non_primitive_rejected() {
        let c2 = arc(group_algebra(&FiniteGroup::cyclic(2), 4).unwrap());
        let h = h2();
        let twice = &basis(&h, "g") + &basis(&h, "g");
        let err = HopfMorphism::new("f", c2, h.clone(), &BTreeMap::from([(Generator::Group(1), twice)]))
            .unwrap_err();
        assert_eq!(err, Error::NotGrouplike("g".into()));

        let u = arc(enveloping(&LieAlgebra::abelian(1), 4).unwrap());
        let xg = basis(&h, "x*g");
        let err = HopfMorphism::new("f", u, h, &BTreeMap::from([(Generator::Lie(0), xg)])).unwrap_err();
        assert_eq!(err, Error::NotPrimitive("x".into()));
    }

    #[test]
    fn filtration_violation() {
        let u = arc(enveloping(&LieAlgebra::abelian(1), 4).unwrap());
        let x2 = basis(&u, "x^2");
        let err = HopfMorphism::new("f", u.clone(), u, &BTreeMap::from([(Generator::Lie(0), x2)])).unwrap_err();
        assert!(matches!(err, Error::FiltrationViolation { .. }));
    }

    #[test]
    fn scaling_endomorphism_and_composition() {
        // x ↦ 2x on U(⟨x⟩): x^k ↦ 2^k x^k
        let u = arc(enveloping(&LieAlgebra::abelian(1), 4).unwrap());
        let two_x = basis(&u, "x").scaled(&int(2));
        let f = HopfMorphism::new("f", u.clone(), u.clone(), &BTreeMap::from([(Generator::Lie(0), two_x)])).unwrap();
        for k in 0..=4 {
            assert_eq!(f.basis_images()[k], SparseVec::from([(k, int(1 << k))]));
        }
        let ff = HopfMorphism::compose(&f, &f).unwrap();
        assert!(ff.validate().pass);
        assert_eq!(ff.basis_images()[3], SparseVec::from([(3, int(64))]));
        assert!(ff.rank_profile().bijective());
    }

    #[test]
    fn projection_of_h2_onto_group_part() {
        let h = h2();
        let c2 = arc(group_algebra(&FiniteGroup::cyclic(2), 4).unwrap());
        let p = HopfMorphism::new(
            "p",
            h.clone(),
            c2.clone(),
            &BTreeMap::from([
                (Generator::Lie(0), Element::zero(c2.id())),
                (Generator::Group(1), basis(&c2, "g")),
            ]),
        )
        .unwrap();
        let prof = p.rank_profile();
        assert!(prof.surjective && !prof.injective);
        assert_eq!(prof.kernel_dims(), vec![0, 2, 4, 6, 8]);
    }

    #[test]
    fn compose_shape_mismatch() {
        let h = h2();
        let u = arc(enveloping(&LieAlgebra::abelian(1), 4).unwrap());
        let a = HopfMorphism::identity(h);
        let b = HopfMorphism::identity(u);
        assert!(matches!(HopfMorphism::compose(&a, &b), Err(Error::Composition(_))));
    }
}
