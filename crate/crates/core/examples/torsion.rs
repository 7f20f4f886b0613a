//! The torsion pair: for each object, its torsion-free and torsion parts
//! and the zero morphisms from enveloping algebras to group algebras.

use std::sync::Arc;

use hopfcat::catalog;
use hopfcat::exactness::{torsion, zero_morphism_search};
use hopfcat::Result;

fn main() -> Result<()> {
    let d = 3;
    let objects = [
        Arc::new(catalog::h2(d)?),
        Arc::new(catalog::group_algebras(d)?.remove(2)),
        Arc::new(catalog::envelopings(d)?.remove(1)),
    ];
    for h in &objects {
        let t = torsion(h)?;
        let s = &t.decomposition.ses;
        println!(
            "{}: free part {} (dim {}), torsion part {} (dim {}), {}",
            h.name(),
            s.a.name(),
            s.a.dim(),
            s.b.name(),
            s.b.dim(),
            if t.pass() { "ok" } else { "FAIL" }
        );
    }

    println!();
    let us: Vec<_> = catalog::envelopings(d)?.into_iter().map(Arc::new).collect();
    let ks: Vec<_> = catalog::group_algebras(d)?.into_iter().map(Arc::new).collect();
    for u in us.iter().take(3) {
        for k in ks.iter().take(3) {
            let z = zero_morphism_search(u, k)?;
            println!("Hom({}, {}): {} morphism(s), all trivial: {}", u.name(), k.name(), z.morphisms.len(), z.verdict.pass);
        }
    }
    Ok(())
}
