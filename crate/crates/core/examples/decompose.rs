//! Split a pointed Hopf algebra into primitive and grouplike parts and rebuild
//! it as a smash product.
//!
//! ```text
//! cargo run --example decompose
//! ```

use std::sync::Arc;

use hopfcat::catalog;
use hopfcat::exactness::check_ses;
use hopfcat::functors::decompose;
use hopfcat::Result;

fn main() -> Result<()> {
    let d = 3;
    for h in catalog::smash_products(d)?.into_iter().map(Arc::new) {
        let dec = decompose(&h)?;
        let s = &dec.ses;
        println!("{} (dim {})", h.name(), h.dim());
        println!("  grouplikes  {} of order {}", dec.grouplikes.group.name(), dec.grouplikes.group.order());
        println!("  primitives  dim {} with basis {:?}", dec.primitives.dim(), dec.primitives.lie.labels());
        println!("  A = {} (dim {}), B = {} (dim {})", s.a.name(), s.a.dim(), s.b.name(), s.b.dim());
        for (from, to) in s.s.describe() {
            println!("  s: {from} ↦ {to}");
        }
        let p = &dec.comparison_profile;
        println!("  comparison map ranks {:?} of {:?}, bijective {}", p.ranks, p.target_dims, p.bijective());
        println!("  split exact: {}", check_ses(s).pass);
    }
    Ok(())
}
