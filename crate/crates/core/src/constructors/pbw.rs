//! PBW straightening in U(L).
//!
//! A word in the Lie basis is rewritten to a combination of sorted
//! monomials by repeatedly replacing the first out-of-order adjacent pair
//! `y x` (with `y > x`) by `x y + [y, x]`. Each rewrite either lowers the
//! inversion count at equal length or shortens the word, so the process
//! terminates.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{axpy, Scalar};
use crate::hopf::Monomial;

/// Element of U(L) in PBW coordinates.
pub type PbwPoly = BTreeMap<Monomial, Scalar>;

/// Straightening with a word-level memo table.
pub struct Straightener<'a> {
    lie: &'a LieAlgebra,
    memo: HashMap<Vec<usize>, PbwPoly>,
}

impl<'a> Straightener<'a> {
    pub fn new(lie: &'a LieAlgebra) -> Self {
        Straightener {
            lie,
            memo: HashMap::new(),
        }
    }

    pub fn straighten(&mut self, word: &[usize]) -> PbwPoly {
        if let Some(p) = self.memo.get(word) {
            return p.clone();
        }
        let lie = self.lie;
        let result = match word.windows(2).position(|w| w[0] > w[1]) {
            None => PbwPoly::from([(Monomial::from_sorted_word(lie.dim(), word), Scalar::one())]),
            Some(i) => {
                let (y, x) = (word[i], word[i + 1]);
                let mut swapped = word.to_vec();
                swapped.swap(i, i + 1);
                let mut out = self.straighten(&swapped);
                for (&k, c) in lie.bracket(y, x) {
                    let mut shorter = Vec::with_capacity(word.len() - 1);
                    shorter.extend_from_slice(&word[..i]);
                    shorter.push(k);
                    shorter.extend_from_slice(&word[i + 2..]);
                    let sub = self.straighten(&shorter);
                    axpy(&mut out, c, &sub);
                }
                out
            }
        };
        self.memo.insert(word.to_vec(), result.clone());
        result
    }

    /// Straightens a combination of words.
    pub fn straighten_words(&mut self, words: &BTreeMap<Vec<usize>, Scalar>) -> PbwPoly {
        let mut out = PbwPoly::new();
        for (w, c) in words {
            let p = self.straighten(w);
            axpy(&mut out, c, &p);
        }
        out
    }

    /// Product in U(L) of two PBW combinations.
    pub fn multiply(&mut self, a: &PbwPoly, b: &PbwPoly) -> PbwPoly {
        let mut out = PbwPoly::new();
        for (ma, x) in a {
            for (mb, y) in b {
                let mut w = ma.word();
                w.extend(mb.word());
                let p = self.straighten(&w);
                axpy(&mut out, &(x * y), &p);
            }
        }
        out
    }
}

/// PBW normal form of `word` (letters are Lie basis indices).
pub fn pbw_straighten(lie: &LieAlgebra, word: &[usize]) -> Result<PbwPoly> {
    if let Some(&bad) = word.iter().find(|&&w| w >= lie.dim()) {
        return Err(Error::InvalidLie(format!(
            "letter {bad} outside a basis of dimension {}",
            lie.dim()
        )));
    }
    Ok(Straightener::new(lie).straighten(word))
}
