//! Run the Hopf axiom suite on every catalog object, then on a deliberately
//! broken antipode to show what a failure looks like.
//!
//! ```text
//! cargo run --example check_axioms
//! ```

use hopfcat::catalog;
use hopfcat::constructors::{group_algebra, FiniteGroup};
use hopfcat::exactlin::{int, SparseVec};
use hopfcat::hopf::{check_hopf_axioms, HopfPresentation};
use hopfcat::Result;

fn main() -> Result<()> {
    let d = 3;
    for h in catalog::all_objects(d)? {
        let v = check_hopf_axioms(&h);
        println!("{:<5} {:<28} dim {:>3}", if v.pass { "ok" } else { "FAIL" }, h.name(), h.dim());
    }

    let kc3 = group_algebra(&FiniteGroup::cyclic(3), d)?;
    let g = kc3.labels().iter().position(|l| l == "g").unwrap();
    let mut tables = kc3.tables().clone();
    tables.antipode[g] = SparseVec::from([(g, int(1))]);
    let bad = HopfPresentation::from_tables("K[C3], S(g) = g", d, tables)?;

    println!();
    let v = check_hopf_axioms(&bad);
    for c in v.failures() {
        println!("{}: {} (witness {})", c.name, c.detail, c.witness.as_deref().unwrap_or("-"));
    }
    Ok(())
}
