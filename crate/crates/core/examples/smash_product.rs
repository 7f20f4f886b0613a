//! Build K[G] ⋉ U(L) from a group action and look at its structure maps.

use hopfcat::catalog;
use hopfcat::constructors::smash;
use hopfcat::hopf::check_hopf_axioms;
use hopfcat::Result;

fn main() -> Result<()> {
    let action = catalog::s3_standard_action();
    let v = action.validate();
    println!("action {}: {}", action.name(), if v.pass { "valid" } else { "invalid" });

    let h = smash(&action, 2)?;
    println!("{}", h.summary());

    let label = |l: &str| h.labels().iter().position(|x| x == l).unwrap();
    let x = h.basis_element(label("x"));
    for name in ["r", "s"] {
        let g = h.basis_element(label(name));
        // conjugating x by g is the action of g on x
        let gx = h.multiply(&g, &x)?;
        let conj = h.multiply(&gx, &h.antipode(&g)?)?;
        println!("{name} x {name}^-1 = {}", h.fmt_element(&conj));
    }
    let xr = h.multiply(&x, &h.basis_element(label("r")))?;
    println!("Δ(x r) = {}", h.fmt_tensor(&h.comultiply(&xr)?));
    println!("S(x r) = {}", h.fmt_element(&h.antipode(&xr)?));
    println!("axioms: {}", if check_hopf_axioms(&h).pass { "hold" } else { "fail" });
    Ok(())
}
