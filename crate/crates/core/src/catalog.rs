//! Standard test objects: small groups, low-dimensional Lie algebras, and
//! four smash products.

use std::sync::Arc;

use crate::constructors::{enveloping, group_algebra, smash, FiniteGroup, HopfAction, LieAlgebra};
use crate::error::Result;
use crate::exactlin::{int, SparseVec};
use crate::hopf::HopfPresentation;

/// `C1, ..., C8, S3, D4, Q8`.
pub fn groups() -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = (1..=8).map(FiniteGroup::cyclic).collect();
    out.push(FiniteGroup::symmetric3());
    out.push(FiniteGroup::dihedral4());
    out.push(FiniteGroup::quaternion8());
    out
}

/// `ab1, ab2, ab3, aff2, heis3, sl2`.
pub fn lie_algebras() -> Vec<LieAlgebra> {
    vec![
        LieAlgebra::abelian(1),
        LieAlgebra::abelian(2),
        LieAlgebra::abelian(3),
        LieAlgebra::aff2(),
        LieAlgebra::heis3(),
        LieAlgebra::sl2(),
    ]
}

/// One-dimensional abelian Lie algebra on a chosen label.
pub fn line(label: &str) -> LieAlgebra {
    LieAlgebra::new(label, vec![label.to_string()], []).expect("one-dimensional")
}

fn v(entries: &[(usize, i64)]) -> SparseVec {
    entries.iter().map(|&(i, c)| (i, int(c))).collect()
}

/// `C2` acting on the line by `x ↦ -x`.
pub fn sign_action() -> HopfAction {
    HopfAction::from_generators(
        "sign",
        FiniteGroup::cyclic(2),
        LieAlgebra::abelian(1),
        &[(1, vec![v(&[(0, -1)])])],
    )
    .expect("sign action")
}

/// `S3` on the sum-zero plane of `Q^3` in the basis `x = e0 - e1`,
/// `y = e1 - e2`.
pub fn s3_standard_action() -> HopfAction {
    let g = FiniteGroup::symmetric3();
    let r = g.index_of("r").expect("r");
    let s = g.index_of("s").expect("s");
    HopfAction::from_generators(
        "standard",
        g,
        LieAlgebra::abelian(2),
        &[
            (r, vec![v(&[(1, 1)]), v(&[(0, -1), (1, -1)])]),
            (s, vec![v(&[(0, -1)]), v(&[(0, 1), (1, 1)])]),
        ],
    )
    .expect("standard action")
}

/// `C2` on heis3: `x ↦ -x`, `y ↦ -y`, `z ↦ z`.
pub fn heis3_action() -> HopfAction {
    HopfAction::from_generators(
        "inversion",
        FiniteGroup::cyclic(2),
        LieAlgebra::heis3(),
        &[(1, vec![v(&[(0, -1)]), v(&[(1, -1)]), v(&[(2, 1)])])],
    )
    .expect("heis3 action")
}

/// `C2` on sl2: `h ↦ -h`, `x ↔ y`.
pub fn sl2_action() -> HopfAction {
    HopfAction::from_generators(
        "flip",
        FiniteGroup::cyclic(2),
        LieAlgebra::sl2(),
        &[(1, vec![v(&[(0, -1)]), v(&[(2, 1)]), v(&[(1, 1)])])],
    )
    .expect("sl2 action")
}

/// The four catalog actions with the names of their smash products.
pub fn actions() -> Vec<(&'static str, HopfAction)> {
    vec![
        ("H2", sign_action()),
        ("ab2⋊S3", s3_standard_action()),
        ("heis3⋊C2", heis3_action()),
        ("sl2⋊C2", sl2_action()),
    ]
}

/// `H2 = U(⟨x⟩) ⋊ K[C2]` with the sign action.
pub fn h2(d: usize) -> Result<HopfPresentation> {
    Ok(smash(&sign_action(), d)?.with_name("H2"))
}

/// The zero object `K = K[C1]`.
pub fn zero_object(d: usize) -> Result<HopfPresentation> {
    Ok(group_algebra(&FiniteGroup::trivial(), d)?.with_name("K"))
}

pub fn group_algebras(d: usize) -> Result<Vec<HopfPresentation>> {
    groups().iter().map(|g| group_algebra(g, d)).collect()
}

pub fn envelopings(d: usize) -> Result<Vec<HopfPresentation>> {
    lie_algebras().iter().map(|l| enveloping(l, d)).collect()
}

pub fn smash_products(d: usize) -> Result<Vec<HopfPresentation>> {
    actions()
        .into_iter()
        .map(|(name, a)| Ok(smash(&a, d)?.with_name(name)))
        .collect()
}

/// Every catalog object: group algebras, enveloping algebras, smash products.
pub fn all_objects(d: usize) -> Result<Vec<Arc<HopfPresentation>>> {
    let mut out = Vec::new();
    for h in group_algebras(d)?.into_iter().chain(envelopings(d)?).chain(smash_products(d)?) {
        out.push(Arc::new(h));
    }
    Ok(out)
}
