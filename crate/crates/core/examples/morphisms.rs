//! Hopf morphisms defined on generators: a valid quotient, an invalid map
//! caught by the relation check, and composition.

use std::collections::BTreeMap;
use std::sync::Arc;

use hopfcat::catalog;
use hopfcat::constructors::{enveloping, group_algebra, FiniteGroup, LieAlgebra};
use hopfcat::exactlin::SparseVec;
use hopfcat::hopf::Generator;
use hopfcat::morphisms::HopfMorphism;
use hopfcat::Result;

fn main() -> Result<()> {
    let u = Arc::new(enveloping(&LieAlgebra::aff2(), 3)?);
    let t = Arc::new(enveloping(&catalog::line("t"), 3)?);

    // [x, y] = y, so y must die in any map to an abelian target
    let q = HopfMorphism::new(
        "q",
        u.clone(),
        t.clone(),
        &BTreeMap::from([
            (Generator::Lie(0), t.basis_element(1)),
            (Generator::Lie(1), t.element(SparseVec::new())?),
        ]),
    )?;
    for (from, to) in q.describe() {
        println!("q: {from} ↦ {to}");
    }
    let p = q.rank_profile();
    println!("ranks by filtration degree {:?} of {:?}", p.ranks, p.source_dims);
    println!("kernel dims {:?}", p.kernel_dims());

    let wrong = HopfMorphism::new(
        "x ↦ t, y ↦ t",
        u.clone(),
        t.clone(),
        &BTreeMap::from([(Generator::Lie(0), t.basis_element(1)), (Generator::Lie(1), t.basis_element(1))]),
    );
    match wrong {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }

    let kc2 = Arc::new(group_algebra(&FiniteGroup::cyclic(2), 3)?);
    let kc4 = Arc::new(group_algebra(&FiniteGroup::cyclic(4), 3)?);
    let square = HopfMorphism::new(
        "g ↦ g2",
        kc4.clone(),
        kc4.clone(),
        &BTreeMap::from([(Generator::Group(1), kc4.basis_element(2))]),
    )?;
    let twice = HopfMorphism::compose(&square, &square)?;
    let trivial = HopfMorphism::zero(kc4.clone(), kc4.clone());
    println!("(g ↦ g2)∘(g ↦ g2) is trivial: {}", twice.difference(&trivial).is_none());
    let c2_into_c4 = HopfMorphism::new(
        "g ↦ g2",
        kc2,
        kc4.clone(),
        &BTreeMap::from([(Generator::Group(1), kc4.basis_element(2))]),
    )?;
    println!("C2 → C4 injective: {}", c2_into_c4.rank_profile().injective);
    Ok(())
}
