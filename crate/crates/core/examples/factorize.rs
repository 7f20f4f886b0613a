//! Factor a morphism as Hopf cokernel of its kernel followed by a map that
//! is injective on the quotient.

use std::collections::BTreeMap;
use std::sync::Arc;

use hopfcat::catalog;
use hopfcat::constructors::{enveloping, LieAlgebra};
use hopfcat::exactlin::SparseVec;
use hopfcat::exactness::factorize;
use hopfcat::functors::decompose;
use hopfcat::hopf::Generator;
use hopfcat::morphisms::HopfMorphism;
use hopfcat::Result;

fn report(f: &HopfMorphism) -> Result<()> {
    let fz = factorize(f)?;
    println!("{}: {} → {}", f.name(), f.source().name(), f.target().name());
    println!("  Hopf kernel {:?} (dim {})", fz.kernel.sub.labels(), fz.kernel.sub.dim());
    println!("  quotient dim {}, ideal dims {:?}", fz.cokernel.quotient.dim(), fz.cokernel.ideal_dims);
    println!("  linear kernel dims {:?}", fz.kernel_dims);
    let mp = HopfMorphism::compose(&fz.m, fz.p())?;
    println!("  m∘p = f: {}, checks {}", mp.difference(f).is_none(), if fz.verdict.pass { "pass" } else { "fail" });
    Ok(())
}

fn main() -> Result<()> {
    let h = Arc::new(catalog::h2(3)?);
    let dec = decompose(&h)?;
    report(&dec.ses.p)?;
    report(&dec.ses.s)?;

    let u = Arc::new(enveloping(&LieAlgebra::aff2(), 2)?);
    let t = Arc::new(enveloping(&catalog::line("t"), 2)?);
    let q = HopfMorphism::new(
        "q",
        u,
        t.clone(),
        &BTreeMap::from([
            (Generator::Lie(0), t.basis_element(1)),
            (Generator::Lie(1), t.element(SparseVec::new())?),
        ]),
    )?;
    report(&q)
}
