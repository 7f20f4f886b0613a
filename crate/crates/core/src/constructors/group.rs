use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the table: Latin square, two-sided identity, associativity.
    /// `table[a][b]` is the index of `a * b`.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = labels.len();
        let bad = |m: String| Err(Error::InvalidGroup(m));
        if n == 0 {
            return bad("empty group".into());
        }
        let uniq: BTreeSet<&String> = labels.iter().collect();
        if uniq.len() != n {
            return bad("duplicate element labels".into());
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return bad(format!("table must be {n}x{n}"));
        }
        for (a, row) in table.iter().enumerate() {
            let set: BTreeSet<usize> = row.iter().copied().collect();
            if set.len() != n || row.iter().any(|&x| x >= n) {
                return bad(format!("row of {} is not a permutation", labels[a]));
            }
        }
        for b in 0..n {
            let set: BTreeSet<usize> = (0..n).map(|a| table[a][b]).collect();
            if set.len() != n {
                return bad(format!("column of {} is not a permutation", labels[b]));
            }
        }
        let Some(identity) =
            (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        else {
            return bad("no identity element".into());
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!(
                            "associativity fails on ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        ));
                    }
                }
            }
        }
        // Latin square with identity: each row hits the identity exactly once.
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == identity).unwrap())
            .collect();
        let mut g = FiniteGroup {
            name: name.into(),
            labels,
            table,
            identity,
            inverses,
            generators: Vec::new(),
        };
        g.generators = g.greedy_generators();
        Ok(g)
    }

    /// Parses a table whose entries are element labels. Row `i` lists
    /// `labels[i] * labels[j]`.
    pub fn from_label_table(
        name: impl Into<String>,
        labels: Vec<String>,
        rows: &[Vec<String>],
    ) -> Result<Self> {
        let index: HashMap<&str, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut table = Vec::with_capacity(rows.len());
        for row in rows {
            let mut r = Vec::with_capacity(row.len());
            for x in row {
                let Some(&i) = index.get(x.as_str()) else {
                    return Err(Error::InvalidGroup(format!("unknown element {x}")));
                };
                r.push(i);
            }
            table.push(r);
        }
        Self::new(name, labels, table)
    }

    /// Closure of permutation generators; labels are shortest words in the
    /// generator names (breadth-first, generators in the given order).
    pub fn from_permutations(
        name: impl Into<String>,
        gens: &[(&str, Vec<usize>)],
    ) -> Result<Self> {
        let degree = gens.first().map_or(0, |g| g.1.len());
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
        let id: Vec<usize> = (0..degree).collect();
        let mut perms = vec![id.clone()];
        let mut labels = vec!["e".to_string()];
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (gname, g) in gens {
                let p = compose(&perms[i], g);
                if !seen.contains_key(&p) {
                    let label = if i == 0 {
                        gname.to_string()
                    } else {
                        format!("{}{gname}", labels[i])
                    };
                    seen.insert(p.clone(), perms.len());
                    queue.push_back(perms.len());
                    perms.push(p);
                    labels.push(label);
                }
            }
        }
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| seen[&compose(a, b)]).collect())
            .collect();
        Self::new(name, labels, table)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `C_n` with elements `e, g, g2, ..., g{n-1}`.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(format!("C{n}"), labels, table).expect("cyclic table is a group")
    }

    /// `S_3` generated by the 3-cycle `r` and the transposition `s`.
    pub fn symmetric3() -> Self {
        Self::from_permutations("S3", &[("r", vec![1, 2, 0]), ("s", vec![1, 0, 2])])
            .expect("S3 is a group")
    }

    /// Symmetries of the square, rotation `r` and reflection `s`.
    pub fn dihedral4() -> Self {
        Self::from_permutations("D4", &[("r", vec![1, 2, 3, 0]), ("s", vec![0, 3, 2, 1])])
            .expect("D4 is a group")
    }

    /// Quaternion group; `m` is the central element `-1`.
    pub fn quaternion8() -> Self {
        // unit products among 1, i, j, k as (sign, unit)
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let labels: Vec<String> = ["e", "i", "j", "k", "m", "mi", "mj", "mk"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let split = |x: usize| (x >= 4, x % 4);
        let table = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (sa, ua) = split(a);
                        let (sb, ub) = split(b);
                        let (s, u) = UNIT[ua][ub];
                        u + if sa ^ sb ^ s { 4 } else { 0 }
                    })
                    .collect()
            })
            .collect();
        Self::new("Q8", labels, table).expect("Q8 is a group")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// A generating set: elements in index order, each kept if it is not in
    /// the subgroup generated by the earlier ones.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        for a in 0..self.order() {
            if !span.contains(&a) {
                gens.push(a);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut span = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let b = self.mul(a, g);
                if span.insert(b) {
                    queue.push_back(b);
                }
            }
        }
        span
    }

    /// For each element, a word in the generators reaching it (breadth-first).
    pub fn words(&self) -> Vec<Vec<usize>> {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.order()];
        words[self.identity] = Some(Vec::new());
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for &g in &self.generators {
                let b = self.mul(a, g);
                if words[b].is_none() {
                    let mut w = words[a].clone().unwrap();
                    w.push(g);
                    words[b] = Some(w);
                    queue.push_back(b);
                }
            }
        }
        words.into_iter().map(|w| w.expect("generators span the group")).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        assert_eq!(FiniteGroup::trivial().order(), 1);
        assert_eq!(FiniteGroup::cyclic(8).order(), 8);
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let d4 = FiniteGroup::dihedral4();
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
        let q8 = FiniteGroup::quaternion8();
        assert!(!q8.is_abelian());
        // i^2 = j^2 = k^2 = -1
        let m = q8.index_of("m").unwrap();
        for u in ["i", "j", "k"] {
            let x = q8.index_of(u).unwrap();
            assert_eq!(q8.mul(x, x), m);
        }
        // Q8 has a single element of order 2, D4 has five
        let involutions = |g: &FiniteGroup| {
            (0..g.order())
                .filter(|&a| a != g.identity() && g.mul(a, a) == g.identity())
                .count()
        };
        assert_eq!(involutions(&q8), 1);
        assert_eq!(involutions(&d4), 5);
    }

    #[test]
    fn generators_and_words() {
        let c6 = FiniteGroup::cyclic(6);
        assert_eq!(c6.generators(), &[1]);
        let s3 = FiniteGroup::symmetric3();
        let words = s3.words();
        for (a, w) in words.iter().enumerate() {
            let v = w.iter().fold(s3.identity(), |acc, &g| s3.mul(acc, g));
            assert_eq!(v, a);
        }
    }

    #[test]
    fn rejects_bad_tables() {
        let l = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        // not a Latin square
        assert!(FiniteGroup::from_label_table(
            "bad",
            l(&["e", "g"]),
            &[l(&["e", "g"]), l(&["g", "g"])]
        )
        .is_err());
        // Latin square without associativity (a quasigroup loop of order 5)
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::new("loop", l(&["e", "a", "b", "c", "d"]), table).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
        let c2 = FiniteGroup::from_label_table("C2", l(&["e", "g"]), &[l(&["e", "g"]), l(&["g", "e"])])
            .unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(c2.inv(1), 1);
    }
}
