//! Morphisms of split short exact sequences, checked against the split
//! short five lemma and the surjectivity lemma. The last diagram is broken
//! on purpose.

use std::sync::Arc;

use hopfcat::catalog;
use hopfcat::exactness::{check_split_diagram, DiagramMode, SplitSESMorphismDiagram};
use hopfcat::functors::{decompose, induced_pair};
use hopfcat::morphisms::HopfMorphism;
use hopfcat::Result;

fn show(name: &str, dg: &SplitSESMorphismDiagram) {
    for mode in [DiagramMode::Ssfl, DiagramMode::SurjectivityLemma] {
        let v = check_split_diagram(dg, mode);
        print!("{name:<12} {:<20} {}", mode.name(), if v.pass { "ok" } else { "FAIL" });
        if let Some(c) = v.failures().next() {
            print!("  ({}: {})", c.name, c.detail);
        }
        println!();
    }
}

fn main() -> Result<()> {
    let h = Arc::new(catalog::h2(3)?);
    let d = decompose(&h)?;
    let s = &d.ses;

    let induced = |name: &str, f: HopfMorphism| -> Result<SplitSESMorphismDiagram> {
        let pair = induced_pair(&f, &d, &d)?;
        println!("{name}: induced arrows {}", if pair.verdict.pass { "commute" } else { "do not commute" });
        Ok(SplitSESMorphismDiagram { top: s.clone(), bottom: s.clone(), h_a: pair.f1, h: f, h_b: pair.f2 })
    };

    show("identity", &induced("identity", HopfMorphism::identity(h.clone()))?);
    show("retract", &induced("retract", HopfMorphism::compose(&s.s, &s.p)?)?);

    let broken = SplitSESMorphismDiagram {
        top: s.clone(),
        bottom: s.clone(),
        h_a: HopfMorphism::identity(s.a.clone()),
        h: HopfMorphism::identity(h.clone()),
        h_b: HopfMorphism::zero(s.b.clone(), s.b.clone()),
    };
    show("zero on B", &broken);
    Ok(())
}
