//! Builders for the structural presentation kinds: group algebras K[G],
//! enveloping algebras U(L), and smash products U(L) ⋊ K[G].

mod action;
mod group;
mod lie;
mod pbw;

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{add_term, int, Scalar, SparseVec};
use crate::hopf::{BasisIndex, HopfPresentation, Kind, Monomial, RawTensor, StructureTables};

pub use action::{validate_action, HopfAction};
pub use group::FiniteGroup;
pub use lie::LieAlgebra;
pub use pbw::{pbw_straighten, PbwPoly, Straightener};

/// Default truncation degree.
pub const DEFAULT_DEGREE: usize = 4;

fn check_degree(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::TruncationTooSmall(d));
    }
    Ok(())
}

/// The group Hopf algebra: grouplike basis, `S(g) = g⁻¹`.
pub fn group_algebra(group: &FiniteGroup, d: usize) -> Result<HopfPresentation> {
    check_degree(d)?;
    let n = group.order();
    let labels: Vec<String> = group.labels().to_vec();
    let mut t = StructureTables::empty(labels, vec![0; n]);
    t.unit = SparseVec::from([(group.identity(), Scalar::one())]);
    for a in 0..n {
        for b in 0..n {
            t.product[a * n + b] = SparseVec::from([(group.mul(a, b), Scalar::one())]);
        }
        t.coproduct[a] = RawTensor::from([([a, a], Scalar::one())]);
        t.counit[a] = Scalar::one();
        t.antipode[a] = SparseVec::from([(group.inv(a), Scalar::one())]);
    }
    let basis = (0..n).map(BasisIndex::Group).collect();
    HopfPresentation::assemble(
        format!("K[{}]", group.name()),
        Kind::GroupAlgebra(group.clone()),
        d,
        basis,
        t,
    )
}

/// Sub-multisets `b <= a` of an exponent vector with the multinomial weight
/// `prod C(a_i, b_i)`, i.e. the terms of `Δ(x^a)`.
fn coproduct_terms(a: &Monomial) -> Vec<(Monomial, Monomial, Scalar)> {
    let mut out = vec![(Vec::new(), Vec::new(), Scalar::one())];
    for &e in &a.0 {
        let mut next = Vec::new();
        for (l, r, c) in &out {
            let mut binom = int(1);
            for k in 0..=e {
                let mut l2: Vec<u32> = l.clone();
                l2.push(k);
                let mut r2: Vec<u32> = r.clone();
                r2.push(e - k);
                next.push((l2, r2, c * &binom));
                binom = binom * int((e - k) as i64) / int(k as i64 + 1);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(l, r, c)| (Monomial(l), Monomial(r), c))
        .collect()
}

/// U(L) on the PBW monomials of degree at most `d`.
pub fn enveloping(lie: &LieAlgebra, d: usize) -> Result<HopfPresentation> {
    check_degree(d)?;
    let vars = lie.dim();
    let monos = Monomial::up_to(vars, d);
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = monos.len();
    let labels = monos.iter().map(|m| m.label(lie.labels())).collect();
    let degrees = monos.iter().map(Monomial::degree).collect();
    let mut t = StructureTables::empty(labels, degrees);
    let mut st = Straightener::new(lie);
    let to_vec = |p: PbwPoly| -> SparseVec {
        let mut v = SparseVec::new();
        for (m, c) in p {
            add_term(&mut v, index[&m], c);
        }
        v
    };
    t.unit = SparseVec::from([(0, Scalar::one())]);
    for (i, a) in monos.iter().enumerate() {
        for (j, b) in monos.iter().enumerate() {
            if a.degree() + b.degree() > d {
                continue;
            }
            let mut w = a.word();
            w.extend(b.word());
            t.product[i * n + j] = to_vec(st.straighten(&w));
        }
        let mut delta = RawTensor::new();
        for (l, r, c) in coproduct_terms(a) {
            delta.insert([index[&l], index[&r]], c);
        }
        t.coproduct[i] = delta;
        t.counit[i] = if a.degree() == 0 { Scalar::one() } else { Scalar::zero() };
        // S(x_1 ... x_k) = (-1)^k x_k ... x_1
        let mut rev = a.word();
        rev.reverse();
        let sign = if a.degree() % 2 == 0 { int(1) } else { int(-1) };
        t.antipode[i] = crate::exactlin::scale(&to_vec(st.straighten(&rev)), &sign);
    }
    let basis = monos.into_iter().map(BasisIndex::Pbw).collect();
    HopfPresentation::assemble(
        format!("U({})", lie.name()),
        Kind::Enveloping(lie.clone()),
        d,
        basis,
        t,
    )
}

fn smash_label(act: &HopfAction, m: &Monomial, g: usize) -> String {
    let grp = act.group();
    match (m.degree() == 0, g == grp.identity()) {
        (true, true) => "1".into(),
        (true, false) => grp.label(g).to_string(),
        (false, true) => m.label(act.lie().labels()),
        (false, false) => format!("{}*{}", m.label(act.lie().labels()), grp.label(g)),
    }
}

/// The smash product U(L) ⋊ K[G] of a validated action.
///
/// With `Δ(g) = g ⊗ g` the general formulas specialize to
/// `(a ⊗ g)(a' ⊗ h) = a (g·a') ⊗ gh`, the tensor product coalgebra, and
/// `S(a ⊗ g) = g⁻¹·S(a) ⊗ g⁻¹`.
pub fn smash(act: &HopfAction, d: usize) -> Result<HopfPresentation> {
    check_degree(d)?;
    let verdict = act.validate();
    if let Some(f) = verdict.failures().next() {
        return Err(Error::InvalidAction(format!(
            "{}: {} (witness {})",
            f.name,
            f.detail,
            f.witness.as_deref().unwrap_or("-")
        )));
    }
    let grp = act.group();
    let lie = act.lie();
    if let Some(clash) = grp.labels().iter().find(|l| lie.index_of(l).is_some()) {
        return Err(Error::InvalidAction(format!(
            "label {clash} names both a group element and a Lie basis element"
        )));
    }
    let vars = lie.dim();
    let mut basis = Vec::new();
    for k in 0..=d {
        for g in 0..grp.order() {
            for m in Monomial::of_degree(vars, k) {
                basis.push((m, g));
            }
        }
    }
    let index: HashMap<(Monomial, usize), usize> =
        basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let n = basis.len();
    let labels = basis.iter().map(|(m, g)| smash_label(act, m, g.to_owned())).collect();
    let degrees = basis.iter().map(|(m, _)| m.degree()).collect();
    let mut t = StructureTables::empty(labels, degrees);
    let mut st = Straightener::new(lie);
    let mut acted: HashMap<(usize, Monomial), PbwPoly> = HashMap::new();
    let mut act_on = |st: &mut Straightener<'_>, g: usize, m: &Monomial| -> PbwPoly {
        acted
            .entry((g, m.clone()))
            .or_insert_with(|| act.apply_monomial(st, g, m))
            .clone()
    };
    let embed = |p: &PbwPoly, g: usize| -> SparseVec {
        let mut v = SparseVec::new();
        for (m, c) in p {
            add_term(&mut v, index[&(m.clone(), g)], c.clone());
        }
        v
    };

    t.unit = SparseVec::from([(index[&(Monomial::one(vars), grp.identity())], Scalar::one())]);
    for (i, (a, g)) in basis.iter().enumerate() {
        let a_poly = PbwPoly::from([(a.clone(), Scalar::one())]);
        for (j, (b, h)) in basis.iter().enumerate() {
            if a.degree() + b.degree() > d {
                continue;
            }
            let gb = act_on(&mut st, *g, b);
            let prod = st.multiply(&a_poly, &gb);
            t.product[i * n + j] = embed(&prod, grp.mul(*g, *h));
        }
        let mut delta = RawTensor::new();
        for (l, r, c) in coproduct_terms(a) {
            delta.insert([index[&(l, *g)], index[&(r, *g)]], c);
        }
        t.coproduct[i] = delta;
        t.counit[i] = if a.degree() == 0 { Scalar::one() } else { Scalar::zero() };
        let mut rev = a.word();
        rev.reverse();
        let sign = if a.degree() % 2 == 0 { int(1) } else { int(-1) };
        let s_a = st.straighten(&rev);
        let ginv = grp.inv(*g);
        let mut anti = PbwPoly::new();
        for (m, c) in &s_a {
            let moved = act_on(&mut st, ginv, m);
            crate::exactlin::axpy(&mut anti, &(c * &sign), &moved);
        }
        t.antipode[i] = embed(&anti, ginv);
    }
    let basis = basis
        .into_iter()
        .map(|(m, g)| BasisIndex::Smash(m, g))
        .collect();
    HopfPresentation::assemble(
        format!("U({})⋊K[{}]", lie.name(), grp.name()),
        Kind::Smash(act.clone()),
        d,
        basis,
        t,
    )
}

impl HopfPresentation {
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.set_name(name.into());
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_hopf_axioms;

    fn sign_action() -> HopfAction {
        HopfAction::new(
            "sign",
            FiniteGroup::cyclic(2),
            LieAlgebra::abelian(1),
            vec![
                vec![SparseVec::from([(0, int(1))])],
                vec![SparseVec::from([(0, int(-1))])],
            ],
        )
        .unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn group_algebras() {
        let k = group_algebra(&FiniteGroup::trivial(), 4).unwrap();
        assert_eq!(k.dim(), 1);
        let c2 = group_algebra(&FiniteGroup::cyclic(2), 4).unwrap();
        assert_eq!(c2.labels(), &["e".to_string(), "g".to_string()]);
        let g = c2.basis_element(1);
        assert_eq!(c2.antipode(&g).unwrap(), g);
        let s3 = group_algebra(&FiniteGroup::symmetric3(), 4).unwrap();
        assert_eq!(s3.dim(), 6);
        assert!(check_hopf_axioms(&s3).pass);
        let r = s3.basis_element(1);
        let s = s3.basis_element(2);
        assert_ne!(s3.multiply(&r, &s).unwrap(), s3.multiply(&s, &r).unwrap());
    }

    #[test]
    fn enveloping_dimensions() {
        assert_eq!(enveloping(&LieAlgebra::zero(), 4).unwrap().dim(), 1);
        let u = enveloping(&LieAlgebra::abelian(1), 4).unwrap();
        assert_eq!(u.labels(), &["1", "x", "x^2", "x^3", "x^4"]);
        // x^2 * x = x^3
        let x2 = u.basis_element(2);
        let x = u.basis_element(1);
        assert_eq!(u.multiply(&x2, &x).unwrap(), u.basis_element(3));
        let aff = enveloping(&LieAlgebra::aff2(), 3).unwrap();
        assert_eq!(aff.dim(), 10);
        for (n, l) in [(3, LieAlgebra::sl2()), (3, LieAlgebra::heis3()), (2, LieAlgebra::aff2())] {
            let u = enveloping(&l, 4).unwrap();
            for k in 0..=4 {
                assert_eq!(u.dim_at(k), binomial(n + k, k));
            }
        }
    }

    #[test]
    fn enveloping_coproduct_of_square() {
        let u = enveloping(&LieAlgebra::abelian(1), 4).unwrap();
        let x = u.basis_element(1);
        let dx = u.comultiply(&x).unwrap();
        assert_eq!(u.fmt_tensor(&dx), "x|1 + 1|x");
        let x2 = u.basis_element(2);
        assert_eq!(u.fmt_tensor(&u.comultiply(&x2).unwrap()), "x^2|1 + 2*x|x + 1|x^2");
        assert_eq!(u.fmt_tensor(&u.comultiply(&u.unit()).unwrap()), "1|1");
        assert!(u.counit(&x).unwrap().is_zero());
    }

    #[test]
    fn truncation_overflow_is_an_error() {
        let u = enveloping(&LieAlgebra::abelian(1), 4).unwrap();
        let x3 = u.basis_element(3);
        assert_eq!(
            u.multiply(&x3, &x3),
            Err(Error::DegreeOverflow {
                needed: 6,
                available: 4
            })
        );
        assert_eq!(
            enveloping(&LieAlgebra::aff2(), 1).unwrap_err(),
            Error::TruncationTooSmall(1)
        );
    }

    #[test]
    fn straighten_through_presentation() {
        let aff = enveloping(&LieAlgebra::aff2(), 3).unwrap();
        let e = aff.straighten(&[1, 1, 0]).unwrap();
        assert_eq!(aff.fmt_element(&e), "-2*y^2 + x*y^2");
        assert!(aff.straighten(&[0, 0, 0, 0]).is_err());
    }

    #[test]
    fn h2_products() {
        let h2 = smash(&sign_action(), 4).unwrap();
        assert_eq!(h2.dim(), 10);
        let at = |l: &str| h2.basis_element(h2.labels().iter().position(|x| x == l).unwrap());
        let (g, x, one) = (at("g"), at("x"), at("1"));
        let xg = at("x*g");
        assert_eq!(h2.multiply(&g, &x).unwrap(), -&xg);
        assert_eq!(h2.multiply(&x, &g).unwrap(), xg);
        assert_eq!(h2.multiply(&g, &g).unwrap(), one);
        // S(x⊗e) = -x⊗e, S(1) = 1, S(x⊗g) = x⊗g
        assert_eq!(h2.antipode(&x).unwrap(), -&x);
        assert_eq!(h2.antipode(&one).unwrap(), one);
        assert_eq!(h2.antipode(&xg).unwrap(), xg);
        // ε(3 x⊗e + 2 1⊗g) = 2
        let e = &x.scaled(&int(3)) + &g.scaled(&int(2));
        assert_eq!(h2.counit(&e).unwrap(), int(2));
        assert!(check_hopf_axioms(&h2).pass);
    }

    #[test]
    fn smash_degenerate_cases() {
        let l = LieAlgebra::aff2();
        let a = smash(&HopfAction::trivial(FiniteGroup::trivial(), l.clone()), 4).unwrap();
        let u = enveloping(&l, 4).unwrap();
        assert_eq!(a.labels(), u.labels());
        assert_eq!(a.tables().product, u.tables().product);
        assert_eq!(a.tables().coproduct, u.tables().coproduct);
        assert_eq!(a.tables().antipode, u.tables().antipode);

        let g = FiniteGroup::symmetric3();
        let b = smash(&HopfAction::trivial(g.clone(), LieAlgebra::zero()), 4).unwrap();
        let kg = group_algebra(&g, 4).unwrap();
        assert_eq!(b.dim(), kg.dim());
        assert_eq!(b.tables().product, kg.tables().product);
        assert_eq!(b.tables().antipode, kg.tables().antipode);
    }

    #[test]
    fn invalid_action_rejected() {
        let act = HopfAction::new(
            "swap",
            FiniteGroup::cyclic(2),
            LieAlgebra::aff2(),
            vec![
                vec![SparseVec::from([(0, int(1))]), SparseVec::from([(1, int(1))])],
                vec![SparseVec::from([(1, int(1))]), SparseVec::from([(0, int(1))])],
            ],
        )
        .unwrap();
        assert!(matches!(smash(&act, 4), Err(Error::InvalidAction(_))));
    }
}
