//! The Hopf axiom suite, run on every basis element and every basis pair
//! (triple, for associativity) of combined degree at most `d`.

use num_traits::One;

use super::{outer, twist, HopfPresentation, RawTensor};
use crate::exactlin::{add_term, axpy, Scalar, SparseVec};
use crate::verdict::Verdict;

type Outcome = Result<String, (String, String)>;

pub fn check_hopf_axioms(h: &HopfPresentation) -> Verdict {
    let mut v = Verdict::new(format!("Hopf axioms of {}", h.name()), h.truncation());
    let s = Suite::new(h);
    v.record("associativity", s.associativity());
    v.record("unit", s.unit());
    v.record("coassociativity", s.coassociativity());
    v.record("counit", s.counit());
    v.record("comultiplication multiplicative", s.comul_multiplicative());
    v.record("counit multiplicative", s.counit_multiplicative());
    v.record("antipode", s.antipode());
    v.record("antipode anti-multiplicative", s.antipode_anti());
    v.record("cocommutativity", s.cocommutativity());
    v
}

struct Suite<'a> {
    h: &'a HopfPresentation,
    n: usize,
    d: usize,
}

fn basis_vec(i: usize) -> SparseVec {
    std::iter::once((i, Scalar::one())).collect()
}

impl<'a> Suite<'a> {
    fn new(h: &'a HopfPresentation) -> Self {
        Suite {
            h,
            n: h.dim(),
            d: h.truncation(),
        }
    }

    fn deg(&self, i: usize) -> usize {
        self.h.basis_degree(i)
    }

    fn prod(&self, i: usize, j: usize) -> &SparseVec {
        &self.h.tables().product[i * self.n + j]
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.n)
                .filter(move |&j| self.deg(i) + self.deg(j) <= self.d)
                .map(move |j| (i, j))
        })
    }

    fn name2(&self, i: usize, j: usize) -> String {
        format!("{} * {}", self.h.label(i), self.h.label(j))
    }

    fn associativity(&self) -> Outcome {
        let mut count = 0usize;
        for (i, j) in self.pairs() {
            let ij = self.prod(i, j);
            for k in (0..self.n).filter(|&k| self.deg(i) + self.deg(j) + self.deg(k) <= self.d) {
                let mut lhs = SparseVec::new();
                for (&t, x) in ij {
                    axpy(&mut lhs, x, self.prod(t, k));
                }
                let mut rhs = SparseVec::new();
                for (&t, x) in self.prod(j, k) {
                    axpy(&mut rhs, x, self.prod(i, t));
                }
                if lhs != rhs {
                    return Err((
                        format!(
                            "(ab)c = {} but a(bc) = {}",
                            self.h.fmt_vec(&lhs),
                            self.h.fmt_vec(&rhs)
                        ),
                        format!("{} * {}", self.name2(i, j), self.h.label(k)),
                    ));
                }
                count += 1;
            }
        }
        Ok(format!("{count} basis triples"))
    }

    fn unit(&self) -> Outcome {
        let unit = &self.h.tables().unit;
        for i in 0..self.n {
            let b = basis_vec(i);
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for (&u, x) in unit {
                axpy(&mut left, x, self.prod(u, i));
                axpy(&mut right, x, self.prod(i, u));
            }
            if left != b || right != b {
                return Err((
                    format!(
                        "1*b = {}, b*1 = {}",
                        self.h.fmt_vec(&left),
                        self.h.fmt_vec(&right)
                    ),
                    self.h.label(i).to_string(),
                ));
            }
        }
        Ok(format!("{} basis elements", self.n))
    }

    fn coassociativity(&self) -> Outcome {
        for i in 0..self.n {
            let delta = &self.h.tables().coproduct[i];
            let left: RawTensor<3> = self.h.comul_leg(delta, 0);
            let right: RawTensor<3> = self.h.comul_leg(delta, 1);
            if left != right {
                return Err((
                    "(Δ⊗id)Δ differs from (id⊗Δ)Δ".into(),
                    self.h.label(i).to_string(),
                ));
            }
        }
        Ok(format!("{} basis elements", self.n))
    }

    fn counit(&self) -> Outcome {
        let eps = &self.h.tables().counit;
        for i in 0..self.n {
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for ([a, b], x) in &self.h.tables().coproduct[i] {
                add_term(&mut left, *b, x * &eps[*a]);
                add_term(&mut right, *a, x * &eps[*b]);
            }
            let b = basis_vec(i);
            if left != b || right != b {
                return Err((
                    format!(
                        "(ε⊗id)Δ = {}, (id⊗ε)Δ = {}",
                        self.h.fmt_vec(&left),
                        self.h.fmt_vec(&right)
                    ),
                    self.h.label(i).to_string(),
                ));
            }
        }
        Ok(format!("{} basis elements", self.n))
    }

    fn comul_multiplicative(&self) -> Outcome {
        let unit = &self.h.tables().unit;
        if self.h.comul_raw(unit) != outer(unit, unit) {
            return Err(("Δ(1) ≠ 1⊗1".into(), "1".into()));
        }
        let co = &self.h.tables().coproduct;
        let mut count = 0usize;
        for (i, j) in self.pairs() {
            let lhs = self.h.comul_raw(self.prod(i, j));
            let rhs = match self.h.mul2_raw(&co[i], &co[j]) {
                Ok(r) => r,
                Err(e) => return Err((e.to_string(), self.name2(i, j))),
            };
            if lhs != rhs {
                return Err((
                    format!(
                        "Δ(ab) = {} but Δ(a)Δ(b) = {}",
                        self.h.fmt_raw_tensor(&lhs),
                        self.h.fmt_raw_tensor(&rhs)
                    ),
                    self.name2(i, j),
                ));
            }
            count += 1;
        }
        Ok(format!("{count} basis pairs"))
    }

    fn counit_multiplicative(&self) -> Outcome {
        let eps = &self.h.tables().counit;
        if !self.h.counit_raw(&self.h.tables().unit).is_one() {
            return Err(("ε(1) ≠ 1".into(), "1".into()));
        }
        let mut count = 0usize;
        for (i, j) in self.pairs() {
            let lhs = self.h.counit_raw(self.prod(i, j));
            let rhs = &eps[i] * &eps[j];
            if lhs != rhs {
                return Err((
                    format!("ε(ab) = {lhs} but ε(a)ε(b) = {rhs}"),
                    self.name2(i, j),
                ));
            }
            count += 1;
        }
        Ok(format!("{count} basis pairs"))
    }

    fn antipode(&self) -> Outcome {
        let t = self.h.tables();
        for i in 0..self.n {
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for ([a, b], x) in &t.coproduct[i] {
                for (&s, y) in &t.antipode[*a] {
                    axpy(&mut left, &(x * y), self.prod(s, *b));
                }
                for (&s, y) in &t.antipode[*b] {
                    axpy(&mut right, &(x * y), self.prod(*a, s));
                }
            }
            let expected = crate::exactlin::scale(&t.unit, &t.counit[i]);
            if left != expected || right != expected {
                return Err((
                    format!(
                        "M(S⊗id)Δ = {}, M(id⊗S)Δ = {}, uε = {}",
                        self.h.fmt_vec(&left),
                        self.h.fmt_vec(&right),
                        self.h.fmt_vec(&expected)
                    ),
                    self.h.label(i).to_string(),
                ));
            }
        }
        Ok(format!("{} basis elements", self.n))
    }

    fn antipode_anti(&self) -> Outcome {
        let t = self.h.tables();
        let mut count = 0usize;
        for (i, j) in self.pairs() {
            let lhs = self.h.antipode_raw(self.prod(i, j));
            let rhs = match self.h.mul_raw(&t.antipode[j], &t.antipode[i]) {
                Ok(r) => r,
                Err(e) => return Err((e.to_string(), self.name2(i, j))),
            };
            if lhs != rhs {
                return Err((
                    format!(
                        "S(ab) = {} but S(b)S(a) = {}",
                        self.h.fmt_vec(&lhs),
                        self.h.fmt_vec(&rhs)
                    ),
                    self.name2(i, j),
                ));
            }
            count += 1;
        }
        Ok(format!("{count} basis pairs"))
    }

    fn cocommutativity(&self) -> Outcome {
        for i in 0..self.n {
            let delta = &self.h.tables().coproduct[i];
            if &twist(delta) != delta {
                return Err((
                    format!("Δ = {}", self.h.fmt_raw_tensor(delta)),
                    self.h.label(i).to_string(),
                ));
            }
        }
        Ok(format!("{} basis elements", self.n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{group_algebra, FiniteGroup};

    #[test]
    fn corrupted_antipode_has_witness() {
        let kc3 = group_algebra(&FiniteGroup::cyclic(3), 4).unwrap();
        let mut t = kc3.tables().clone();
        let g = kc3.labels().iter().position(|l| l == "g").unwrap();
        t.antipode[g] = basis_vec(g);
        let bad = HopfPresentation::from_tables("C3-bad", 4, t).unwrap();
        let v = check_hopf_axioms(&bad);
        assert!(!v.pass);
        let c = v.check("antipode").unwrap();
        assert!(!c.pass);
        assert_eq!(c.witness.as_deref(), Some("g"));
        // M(S⊗id)Δ(g) = g*g = g2, not the unit
        assert!(c.detail.contains("M(S⊗id)Δ = g2"), "{}", c.detail);
        assert!(v.check("associativity").unwrap().pass);
        assert!(v.check("cocommutativity").unwrap().pass);
    }

    #[test]
    fn zero_object_passes() {
        let k = group_algebra(&FiniteGroup::trivial(), 4).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(check_hopf_axioms(&k).pass);
    }

    #[test]
    fn noncocommutative_witness() {
        // Sweedler-style tampering: break cocommutativity on one element.
        let kc2 = group_algebra(&FiniteGroup::cyclic(2), 2).unwrap();
        let mut t = kc2.tables().clone();
        let g = 1;
        let mut d = RawTensor::new();
        d.insert([g, 0], Scalar::one());
        t.coproduct[g] = d;
        let bad = HopfPresentation::from_tables("C2-bad", 2, t).unwrap();
        let v = check_hopf_axioms(&bad);
        assert_eq!(v.check("cocommutativity").unwrap().witness.as_deref(), Some("g"));
    }
}
