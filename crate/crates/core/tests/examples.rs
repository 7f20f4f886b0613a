//! Worked examples, each checked against an oracle computed here
//! independently of the library's own algorithms where possible.

use std::collections::BTreeMap;
use std::sync::Arc;

use hopfcat::catalog;
use hopfcat::constructors::{
    enveloping, group_algebra, pbw_straighten, smash, FiniteGroup, HopfAction, LieAlgebra,
};
use hopfcat::exactlin::{frac, int, nullspace, rref, solve, Scalar, SparseMatrix, SparseVec};
use hopfcat::exactness::{
    check_ses, check_split_diagram, factorize, hcokernel, hkernel, zero_morphism_search, DiagramMode,
    SplitSESMorphismDiagram,
};
use hopfcat::functors::{decompose, grouplikes, induced_pair, primitives, SplitSES};
use hopfcat::hopf::{check_hopf_axioms, Element, Generator, HopfPresentation, Monomial};
use hopfcat::morphisms::HopfMorphism;
use hopfcat::Error;

fn idx(h: &HopfPresentation, label: &str) -> usize {
    h.labels()
        .iter()
        .position(|l| l == label)
        .unwrap_or_else(|| panic!("no basis label {label} in {:?}", h.labels()))
}

fn el(h: &HopfPresentation, terms: &[(&str, i64)]) -> Element {
    h.element(terms.iter().map(|&(l, c)| (idx(h, l), int(c)))).unwrap()
}

fn h2() -> Arc<HopfPresentation> {
    Arc::new(catalog::h2(4).unwrap())
}

fn dense(rows: &[&[i64]]) -> SparseMatrix {
    SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
}

// Linear algebra.

#[test]
fn rref_examples() {
    let r = rref(&dense(&[&[1, 0], &[0, 1]]));
    assert_eq!((r.rank, r.pivots.clone()), (2, vec![0, 1]));
    assert_eq!(r.matrix, dense(&[&[1, 0], &[0, 1]]));
    let r = rref(&SparseMatrix::zero(3, 3));
    assert_eq!((r.rank, r.pivots.len()), (0, 0));
    // hand elimination: R2 -= 2 R1
    let r = rref(&dense(&[&[1, 2], &[2, 4]]));
    assert_eq!((r.rank, r.pivots.clone()), (1, vec![0]));
    assert_eq!(r.matrix, dense(&[&[1, 2], &[0, 0]]));
}

#[test]
fn nullspace_examples() {
    assert!(nullspace(&dense(&[&[1, 0], &[0, 1]])).is_empty());
    assert_eq!(nullspace(&SparseMatrix::zero(1, 3)).len(), 3);
    let m = dense(&[&[1, 1, 0]]);
    let ns = nullspace(&m);
    assert_eq!(ns.len(), 2);
    for v in &ns {
        assert!(m.mul_sparse(v).is_empty());
    }
    assert_eq!(ns[0], SparseVec::from([(0, int(-1)), (1, int(1))]));
    assert_eq!(ns[1], SparseVec::from([(2, int(1))]));
}

#[test]
fn solve_examples() {
    assert_eq!(solve(&dense(&[&[1, 0], &[0, 1]]), &[int(3), int(5)]).unwrap(), Some(vec![int(3), int(5)]));
    let x = solve(&dense(&[&[1, 1]]), &[int(2)]).unwrap().unwrap();
    assert_eq!(x, vec![int(2), int(0)]);
    assert_eq!(solve(&dense(&[&[1], &[1]]), &[int(1), int(2)]).unwrap(), None);
}

// Structure maps of H2 and U(<x>).

#[test]
fn smash_products_in_h2() {
    let h = h2();
    let m = |a: &[(&str, i64)], b: &[(&str, i64)]| h.multiply(&el(&h, a), &el(&h, b)).unwrap();
    assert_eq!(m(&[("g", 1)], &[("x", 1)]), el(&h, &[("x*g", -1)]));
    assert_eq!(m(&[("x", 1)], &[("g", 1)]), el(&h, &[("x*g", 1)]));
    assert_eq!(m(&[("g", 1)], &[("g", 1)]), h.unit());
}

#[test]
fn comultiplication_counit_antipode() {
    let u = enveloping(&catalog::line("x"), 4).unwrap();
    let (one, x, x2) = (idx(&u, "1"), idx(&u, "x"), idx(&u, "x^2"));
    let dx = u.comultiply(&u.basis_element(x)).unwrap();
    assert_eq!(dx.terms(), &BTreeMap::from([([x, one], int(1)), ([one, x], int(1))]));
    assert_eq!(u.fmt_tensor(&dx), "x|1 + 1|x");
    let d1 = u.comultiply(&u.unit()).unwrap();
    assert_eq!(d1.terms(), &BTreeMap::from([([one, one], int(1))]));
    // (x⊗1 + 1⊗x)² expanded by hand
    let dx2 = u.comultiply(&u.basis_element(x2)).unwrap();
    assert_eq!(
        dx2.terms(),
        &BTreeMap::from([([x2, one], int(1)), ([x, x], int(2)), ([one, x2], int(1))])
    );
    assert_eq!(u.counit(&u.basis_element(x)).unwrap(), int(0));

    let kc2 = group_algebra(&FiniteGroup::cyclic(2), 4).unwrap();
    assert_eq!(kc2.counit(&kc2.basis_element(idx(&kc2, "g"))).unwrap(), int(1));

    let h = h2();
    assert_eq!(h.counit(&el(&h, &[("x", 3), ("g", 2)])).unwrap(), int(2));
    assert_eq!(h.antipode(&el(&h, &[("x", 1)])).unwrap(), el(&h, &[("x", -1)]));
    assert_eq!(h.antipode(&h.unit()).unwrap(), h.unit());
    // S(x g) = S(g) S(x) = g (-x) = x g
    assert_eq!(h.antipode(&el(&h, &[("x*g", 1)])).unwrap(), el(&h, &[("x*g", 1)]));
}

// Axiom suite.

#[test]
fn axiom_suite_examples() {
    assert!(check_hopf_axioms(&group_algebra(&FiniteGroup::symmetric3(), 4).unwrap()).pass);
    assert!(check_hopf_axioms(&catalog::zero_object(4).unwrap()).pass);

    let kc3 = group_algebra(&FiniteGroup::cyclic(3), 4).unwrap();
    let g = idx(&kc3, "g");
    let mut t = kc3.tables().clone();
    t.antipode[g] = SparseVec::from([(g, int(1))]);
    let bad = HopfPresentation::from_tables("K[C3] with S(g) = g", 4, t).unwrap();
    let v = check_hopf_axioms(&bad);
    let c = v.check("antipode").unwrap();
    assert!(!c.pass);
    assert_eq!(c.witness.as_deref(), Some("g"));
}

// Constructors.

#[test]
fn group_algebra_examples() {
    let k = group_algebra(&FiniteGroup::trivial(), 4).unwrap();
    assert_eq!(k.dim(), 1);
    let kc2 = group_algebra(&FiniteGroup::cyclic(2), 4).unwrap();
    assert_eq!(kc2.labels(), ["e", "g"]);
    let g = kc2.basis_element(1);
    assert_eq!(kc2.antipode(&g).unwrap(), g);
    let ks3 = group_algebra(&FiniteGroup::symmetric3(), 4).unwrap();
    assert_eq!(ks3.dim(), 6);
    let (r, s) = (ks3.basis_element(idx(&ks3, "r")), ks3.basis_element(idx(&ks3, "s")));
    assert_ne!(ks3.multiply(&r, &s).unwrap(), ks3.multiply(&s, &r).unwrap());
    assert!(check_hopf_axioms(&ks3).pass);
}

/// Dimension of `T(L)/I` in tensor degree at most `d`: words of length at
/// most `d` modulo `u (ab - ba - [a,b]) v`.
fn tensor_quotient_dim(l: &LieAlgebra, d: usize) -> usize {
    let n = l.dim();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &frontier {
            for a in 0..n {
                let mut w2: Vec<usize> = w.clone();
                w2.push(a);
                next.push(w2);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let pos: BTreeMap<Vec<usize>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut rows = Vec::new();
    for u in &words {
        for v in &words {
            if u.len() + v.len() + 2 > d {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    let mut row = SparseVec::new();
                    let mut add = |w: Vec<usize>, c: Scalar| {
                        *row.entry(pos[&w]).or_insert_with(|| int(0)) += c;
                    };
                    let cat = |mid: &[usize]| [u.as_slice(), mid, v.as_slice()].concat();
                    add(cat(&[a, b]), int(1));
                    add(cat(&[b, a]), int(-1));
                    for (&k, c) in l.bracket(a, b) {
                        add(cat(&[k]), -c.clone());
                    }
                    row.retain(|_, c| *c != int(0));
                    rows.push(row);
                }
            }
        }
    }
    let m = SparseMatrix::from_rows(words.len(), &rows).unwrap();
    words.len() - m.rank()
}

#[test]
fn enveloping_examples() {
    assert_eq!(enveloping(&LieAlgebra::zero(), 4).unwrap().dim(), 1);
    let u = enveloping(&catalog::line("x"), 4).unwrap();
    assert_eq!(u.labels(), ["1", "x", "x^2", "x^3", "x^4"]);
    let x = u.basis_element(1);
    let x3 = u.multiply(&u.multiply(&x, &x).unwrap(), &x).unwrap();
    assert_eq!(x3, u.basis_element(3));
    let aff = enveloping(&LieAlgebra::aff2(), 3).unwrap();
    assert_eq!(aff.dim(), 10);
    assert_eq!(tensor_quotient_dim(&LieAlgebra::aff2(), 3), 10);
    assert_eq!(tensor_quotient_dim(&LieAlgebra::sl2(), 3), enveloping(&LieAlgebra::sl2(), 3).unwrap().dim());
}

/// Operators on polynomials in `s` of degree below `N`: aff2 acts by
/// `x = -s d/ds`, `y = d/ds`, so `[x, y] = y`.
const N: usize = 8;

type Op = Vec<Vec<Scalar>>;

fn op_mul(a: &Op, b: &Op) -> Op {
    (0..N)
        .map(|i| (0..N).map(|j| (0..N).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

fn op_id() -> Op {
    (0..N).map(|i| (0..N).map(|j| int((i == j) as i64)).collect()).collect()
}

fn aff2_ops() -> [Op; 2] {
    let mut x = vec![vec![int(0); N]; N];
    let mut y = vec![vec![int(0); N]; N];
    for k in 0..N {
        x[k][k] = int(-(k as i64));
        if k > 0 {
            y[k - 1][k] = int(k as i64);
        }
    }
    [x, y]
}

fn eval_poly(p: &BTreeMap<Monomial, Scalar>, ops: &[Op]) -> Op {
    let mut out = vec![vec![int(0); N]; N];
    for (m, c) in p {
        let mut acc = op_id();
        for i in m.word() {
            acc = op_mul(&acc, &ops[i]);
        }
        for i in 0..N {
            for j in 0..N {
                out[i][j] += c * &acc[i][j];
            }
        }
    }
    out
}

#[test]
fn pbw_examples() {
    let l = LieAlgebra::aff2();
    let p = pbw_straighten(&l, &[0]).unwrap();
    assert_eq!(p, BTreeMap::from([(Monomial(vec![1, 0]), int(1))]));
    let p = pbw_straighten(&l, &[1, 0]).unwrap();
    assert_eq!(p, BTreeMap::from([(Monomial(vec![1, 1]), int(1)), (Monomial(vec![0, 1]), int(-1))]));
    let p = pbw_straighten(&l, &[1, 1, 0]).unwrap();
    assert_eq!(p, BTreeMap::from([(Monomial(vec![1, 2]), int(1)), (Monomial(vec![0, 2]), int(-2))]));
    let ops = aff2_ops();
    let word = op_mul(&op_mul(&ops[1], &ops[1]), &ops[0]);
    assert_eq!(eval_poly(&p, &ops), word);
}

#[test]
fn smash_examples() {
    let l = LieAlgebra::aff2();
    let u = smash(&HopfAction::trivial(FiniteGroup::trivial(), l.clone()), 4).unwrap();
    assert_eq!(u.dim(), enveloping(&l, 4).unwrap().dim());
    assert!(check_hopf_axioms(&u).pass);
    let kg = smash(&HopfAction::trivial(FiniteGroup::symmetric3(), LieAlgebra::zero()), 4).unwrap();
    assert_eq!(kg.dim(), 6);
    assert!(check_hopf_axioms(&kg).pass);
    let h = h2();
    assert_eq!(h.dim(), 10);
    assert!(check_hopf_axioms(&h).pass);
}

#[test]
fn action_examples() {
    assert!(catalog::sign_action().validate().pass);
    assert!(HopfAction::trivial(FiniteGroup::cyclic(3), LieAlgebra::sl2()).validate().pass);
    let swap = HopfAction::from_generators(
        "swap",
        FiniteGroup::cyclic(2),
        LieAlgebra::aff2(),
        &[(1, vec![SparseVec::from([(1, int(1))]), SparseVec::from([(0, int(1))])])],
    )
    .unwrap();
    let v = swap.validate();
    assert!(!v.pass);
    assert!(v.failures().all(|c| c.witness.is_some()));
}

// Morphisms.

fn gens(images: &[(Generator, Element)]) -> BTreeMap<Generator, Element> {
    images.iter().cloned().collect()
}

fn aff2_quotient() -> HopfMorphism {
    let u = Arc::new(enveloping(&LieAlgebra::aff2(), 4).unwrap());
    let t = Arc::new(enveloping(&catalog::line("t"), 4).unwrap());
    let im = gens(&[
            (Generator::Lie(0), t.basis_element(idx(&t, "t"))),
        (Generator::Lie(1), t.element(SparseVec::new()).unwrap()),
    ]);
    HopfMorphism::new("q", u, t, &im).unwrap()
}

#[test]
fn morphism_examples() {
    let h = h2();
    assert!(HopfMorphism::identity(h.clone()).validate().pass);
    let q = aff2_quotient();
    assert!(q.validate().pass);
    let u = q.source();
    let xy = el(u, &[("x*y", 1)]);
    assert!(q.apply(&xy).unwrap().is_zero());

    let kc2 = Arc::new(group_algebra(&FiniteGroup::cyclic(2), 4).unwrap());
    let kc3 = Arc::new(group_algebra(&FiniteGroup::cyclic(3), 4).unwrap());
    let im = BTreeMap::from([(Generator::Group(1), kc3.basis_element(1))]);
    match HopfMorphism::new("bad", kc2, kc3, &im) {
        Err(Error::RelationViolation { .. }) => {}
        other => panic!("expected a relation violation, got {other:?}"),
    }
}

#[test]
fn apply_and_rank_examples() {
    let h = h2();
    let d = decompose(&h).unwrap();
    let a = el(&h, &[("x^3", 2), ("g", 1)]);
    assert_eq!(HopfMorphism::identity(h.clone()).apply(&a).unwrap(), a);
    assert!(d.ses.p.apply(&el(&h, &[("x^2*g", 1)])).unwrap().is_zero());

    let id = HopfMorphism::identity(h.clone()).rank_profile();
    assert!(id.injective && id.surjective);
    let s = d.ses.s.rank_profile();
    assert!(s.injective && !s.surjective);
    assert_eq!((s.ranks[4], s.target_dims[4]), (2, 10));
    let p = d.ses.p.rank_profile();
    assert!(p.surjective && !p.injective);
}

// Functors.

#[test]
fn grouplike_examples() {
    let kc2 = group_algebra(&FiniteGroup::cyclic(2), 4).unwrap();
    assert_eq!(grouplikes(&kc2).unwrap().group.labels(), ["e", "g"]);
    let u = enveloping(&catalog::line("x"), 4).unwrap();
    let g = grouplikes(&u).unwrap();
    assert_eq!(g.elements, vec![u.tables().unit.clone()]);
    let h = h2();
    let g = grouplikes(&h).unwrap();
    assert_eq!(g.group.order(), 2);
    let want: Vec<SparseVec> = ["1", "g"].iter().map(|l| SparseVec::from([(idx(&h, l), int(1))])).collect();
    assert_eq!(g.elements, want);
}

#[test]
fn primitive_examples() {
    let kc2 = group_algebra(&FiniteGroup::cyclic(2), 4).unwrap();
    assert_eq!(primitives(&kc2).unwrap().dim(), 0);
    assert_eq!(primitives(&catalog::zero_object(4).unwrap()).unwrap().dim(), 0);
    let u = enveloping(&LieAlgebra::aff2(), 3).unwrap();
    let p = primitives(&u).unwrap();
    assert_eq!(p.dim(), 2);
    assert_eq!(p.lie.structure_constants(), vec![(0, 1, 1, int(1))]);
}

#[test]
fn decompose_examples() {
    let kg = Arc::new(group_algebra(&FiniteGroup::symmetric3(), 4).unwrap());
    let d = decompose(&kg).unwrap();
    assert_eq!((d.ses.a.dim(), d.ses.b.dim()), (1, 6));
    assert!(d.ses.p.rank_profile().bijective());
    assert_eq!(d.ses.i.basis_images(), &[kg.tables().unit.clone()]);

    let u = Arc::new(enveloping(&LieAlgebra::heis3(), 4).unwrap());
    let d = decompose(&u).unwrap();
    assert_eq!((d.ses.a.dim(), d.ses.b.dim()), (u.dim(), 1));

    let h = h2();
    let d = decompose(&h).unwrap();
    assert_eq!(d.ses.a.dim(), 5);
    assert_eq!(d.ses.b.labels(), ["e", "g"]);
    let desc = |f: &HopfMorphism| f.describe();
    assert_eq!(desc(&d.ses.i), vec![("x".to_string(), "x".to_string())]);
    assert_eq!(desc(&d.ses.s), vec![("g".to_string(), "g".to_string())]);
    for (i, img) in d.ses.p.basis_images().iter().enumerate() {
        let label = h.label(i);
        if label.starts_with('x') {
            assert!(img.is_empty(), "p({label})");
        } else {
            assert_eq!(img.len(), 1, "p({label})");
        }
    }
}

#[test]
fn induced_pair_examples() {
    let h = h2();
    let kc2 = Arc::new(group_algebra(&FiniteGroup::cyclic(2), 4).unwrap());
    let dh = decompose(&h).unwrap();
    let dk = decompose(&kc2).unwrap();
    let id = induced_pair(&HopfMorphism::identity(h.clone()), &dh, &dh).unwrap();
    assert!(id.f1.difference(&HopfMorphism::identity(dh.ses.a.clone())).is_none());
    assert!(id.f2.difference(&HopfMorphism::identity(dh.ses.b.clone())).is_none());

    let p = HopfMorphism::new(
        "p",
        h.clone(),
        kc2.clone(),
        &BTreeMap::from([
            (Generator::Lie(0), kc2.element(SparseVec::new()).unwrap()),
            (Generator::Group(1), kc2.basis_element(1)),
        ]),
    )
    .unwrap();
    let pp = induced_pair(&p, &dh, &dk).unwrap();
    assert!(pp.verdict.pass);
    assert!(pp.f1.difference(&HopfMorphism::zero(dh.ses.a.clone(), dk.ses.a.clone())).is_none());
    assert!(pp.f2.rank_profile().bijective());

    let s = HopfMorphism::new(
        "s",
        kc2.clone(),
        h.clone(),
        &BTreeMap::from([(Generator::Group(1), el(&h, &[("g", 1)]))]),
    )
    .unwrap();
    let sp = induced_pair(&s, &dk, &dh).unwrap();
    assert!(sp.verdict.pass);
    assert_eq!(sp.f1.basis_images(), &[dh.ses.a.tables().unit.clone()]);
    assert!(sp.f2.rank_profile().bijective());
}

// Exactness.

#[test]
fn hkernel_examples() {
    let h = h2();
    assert_eq!(hkernel(&HopfMorphism::identity(h.clone())).unwrap().sub.dim(), 1);
    let k = Arc::new(catalog::zero_object(4).unwrap());
    assert_eq!(hkernel(&HopfMorphism::zero(h.clone(), k)).unwrap().sub.dim(), h.dim());
    let d = decompose(&h).unwrap();
    let ker = hkernel(&d.ses.p).unwrap();
    assert_eq!(ker.dims, vec![1, 2, 3, 4, 5]);
    // the kernel is exactly the image of i_H
    let img = d.ses.i.rank_profile();
    assert_eq!(img.ranks, ker.dims);
    for v in ker.inclusion.basis_images() {
        assert!(v.keys().all(|&i| !h.label(i).contains('g')));
    }
}

#[test]
fn hcokernel_examples() {
    let h = h2();
    let k = Arc::new(catalog::zero_object(4).unwrap());
    let unit = HopfMorphism::new("unit", k, h.clone(), &BTreeMap::new()).unwrap();
    assert_eq!(hcokernel(&unit).unwrap().quotient.dim(), h.dim());
    assert_eq!(hcokernel(&HopfMorphism::identity(h.clone())).unwrap().quotient.dim(), 1);
    let d = decompose(&h).unwrap();
    let c = hcokernel(&d.ses.i).unwrap();
    assert_eq!(c.quotient.dim(), 2);
    // ideal spanned by x^n and x^n g for 1 ≤ n ≤ k
    assert_eq!(c.ideal_dims, (0..=4).map(|k| 2 * k).collect::<Vec<_>>());
}

#[test]
fn factorize_examples() {
    let h = h2();
    let d = decompose(&h).unwrap();
    let fp = factorize(&d.ses.p).unwrap();
    assert!(fp.verdict.pass);
    assert!(fp.m.rank_profile().bijective());
    let fs = factorize(&d.ses.s).unwrap();
    assert!(fs.verdict.pass);
    assert!(fs.p().rank_profile().bijective());
    assert_eq!(fs.kernel.sub.dim(), 1);

    let u = Arc::new(enveloping(&LieAlgebra::aff2(), 2).unwrap());
    let t = Arc::new(enveloping(&catalog::line("t"), 2).unwrap());
    let q = HopfMorphism::new(
        "q",
        u,
        t.clone(),
        &BTreeMap::from([
            (Generator::Lie(0), t.basis_element(1)),
            (Generator::Lie(1), t.element(SparseVec::new()).unwrap()),
        ]),
    )
    .unwrap();
    let fq = factorize(&q).unwrap();
    assert!(fq.verdict.pass);
    assert_eq!(fq.kernel.sub.labels(), ["1", "y", "y^2"]);
    assert!(fq.m.rank_profile().bijective());
}

#[test]
fn check_ses_examples() {
    let h = h2();
    assert!(check_ses(&decompose(&h).unwrap().ses).pass);
    let kg = Arc::new(group_algebra(&FiniteGroup::quaternion8(), 4).unwrap());
    assert!(check_ses(&decompose(&kg).unwrap().ses).pass);

    let d = decompose(&h).unwrap();
    let bad_g = el(&h, &[("x*g", 1), ("g", 1)]);
    let s = HopfMorphism::from_generators_unchecked(
        "s'",
        d.ses.b.clone(),
        h.clone(),
        &BTreeMap::from([(Generator::Group(1), bad_g)]),
    )
    .unwrap();
    let tampered = SplitSES { s, ..d.ses.clone() };
    let v = check_ses(&tampered);
    assert!(!v.pass);
    let c = v.check("s is a Hopf morphism").unwrap();
    assert!(!c.pass);
    assert_eq!(c.witness.as_deref(), Some("g"));
}

#[test]
fn diagram_examples() {
    let h = h2();
    let d = decompose(&h).unwrap();
    let s = &d.ses;
    let ident = SplitSESMorphismDiagram {
        top: s.clone(),
        bottom: s.clone(),
        h_a: HopfMorphism::identity(s.a.clone()),
        h: HopfMorphism::identity(h.clone()),
        h_b: HopfMorphism::identity(s.b.clone()),
    };
    assert!(check_split_diagram(&ident, DiagramMode::Ssfl).pass);

    // top row K -> K[C2] -> K[C2], h = s_H: outer arrows are the unit and id
    let kc2 = s.b.clone();
    let dk = decompose(&kc2).unwrap();
    let sh = HopfMorphism::new("s_H", kc2.clone(), h.clone(), &BTreeMap::from([(Generator::Group(1), el(&h, &[("g", 1)]))]))
        .unwrap();
    let pair = induced_pair(&sh, &dk, &d).unwrap();
    assert!(!pair.f1.rank_profile().bijective());
    let alpha = sh.rank_profile();
    assert_eq!((alpha.ranks[4], alpha.target_dims[4]), (2, 10));
    let dg = SplitSESMorphismDiagram {
        top: dk.ses.clone(),
        bottom: s.clone(),
        h_a: pair.f1,
        h: sh,
        h_b: pair.f2,
    };
    assert!(check_split_diagram(&dg, DiagramMode::Ssfl).pass);

    // h = p_H, all three arrows surjective
    let dkc = decompose(&s.b).unwrap();
    let ph = HopfMorphism::new(
        "p_H",
        h.clone(),
        s.b.clone(),
        &BTreeMap::from([
            (Generator::Lie(0), s.b.element(SparseVec::new()).unwrap()),
            (Generator::Group(1), s.b.basis_element(1)),
        ]),
    )
    .unwrap();
    let pair = induced_pair(&ph, &d, &dkc).unwrap();
    let dg = SplitSESMorphismDiagram {
        top: s.clone(),
        bottom: dkc.ses.clone(),
        h_a: pair.f1,
        h: ph,
        h_b: pair.f2,
    };
    assert!(check_split_diagram(&dg, DiagramMode::SurjectivityLemma).pass);

    // h = s_H∘p_H on H2: neither h nor h_A is surjective
    let sp = HopfMorphism::compose(&s.s, &s.p).unwrap();
    let pair = induced_pair(&sp, &d, &d).unwrap();
    assert!(!sp.rank_profile().surjective && !pair.f1.rank_profile().surjective);
    let dg = SplitSESMorphismDiagram {
        top: s.clone(),
        bottom: s.clone(),
        h_a: pair.f1,
        h: sp,
        h_b: pair.f2,
    };
    assert!(check_split_diagram(&dg, DiagramMode::SurjectivityLemma).pass);
}

#[test]
fn zero_morphism_examples() {
    let u = Arc::new(enveloping(&catalog::line("x"), 4).unwrap());
    let kc2 = Arc::new(group_algebra(&FiniteGroup::cyclic(2), 4).unwrap());
    let z = zero_morphism_search(&u, &kc2).unwrap();
    assert!(z.verdict.pass);
    assert_eq!((z.primitive_dim, z.morphisms.len()), (0, 1));
    let k = Arc::new(catalog::zero_object(4).unwrap());
    let kq8 = Arc::new(group_algebra(&FiniteGroup::quaternion8(), 4).unwrap());
    assert!(zero_morphism_search(&k, &kq8).unwrap().verdict.pass);
    let back = zero_morphism_search(&kc2, &u).unwrap();
    assert!(back.verdict.pass);
    assert_eq!(back.grouplike_count, 1);
    assert!(back.morphisms[0].difference(&HopfMorphism::zero(kc2.clone(), u.clone())).is_none());
}

#[test]
fn rational_coefficients_survive() {
    let h = h2();
    let a = h.element([(idx(&h, "x"), frac(1, 3)), (idx(&h, "g"), frac(-2, 7))]).unwrap();
    let sq = h.multiply(&a, &a).unwrap();
    // (x/3 - 2g/7)² = x²/9 - 2/21 (x g + g x) + 4/49 = x²/9 + 4/49 since g x = -x g
    let want = h
        .element([(idx(&h, "x^2"), frac(1, 9)), (idx(&h, "1"), frac(4, 49))])
        .unwrap();
    assert_eq!(sq, want);
}
