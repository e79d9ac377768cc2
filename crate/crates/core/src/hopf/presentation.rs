//! Algebras given by generators and relations, turned into structure
//! constants by a terminating rewriting system.
//!
//! Each relation is oriented left to right (e.g. `yx -> q xy`) and applied at
//! the leftmost match until no rule applies. Confluence is not proved here;
//! callers check associativity of the resulting table.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::sparse::{Sparse, SparseVec};

use super::algebra::FinDimAlgebra;

pub type Word = Vec<usize>;

/// A rewriting rule `lhs -> sum c_i w_i`.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Vec<(Word, Scalar)>,
}

impl Rule {
    pub fn new(lhs: Word, rhs: Vec<(Word, Scalar)>) -> Self {
        Self { lhs, rhs }
    }
}

#[derive(Clone, Debug)]
pub struct Presentation {
    rules: Vec<Rule>,
}

impl Presentation {
    pub fn new(rules: Vec<Rule>) -> Self {
        Self { rules }
    }

    fn leftmost_match(&self, w: &[usize]) -> Option<(usize, &Rule)> {
        (0..w.len()).find_map(|pos| {
            self.rules
                .iter()
                .find(|r| w[pos..].starts_with(&r.lhs))
                .map(|r| (pos, r))
        })
    }

    /// Normal form of a word as a combination of irreducible words.
    pub fn normal_form(&self, w: &[usize]) -> Sparse<Word> {
        let mut memo = BTreeMap::new();
        self.reduce(w, &mut memo)
    }

    fn reduce(&self, w: &[usize], memo: &mut BTreeMap<Word, Sparse<Word>>) -> Sparse<Word> {
        if let Some(r) = memo.get(w) {
            return r.clone();
        }
        let out = match self.leftmost_match(w) {
            None => Sparse::single(w.to_vec(), Scalar::one()),
            Some((pos, rule)) => {
                let mut acc = Sparse::new();
                for (rhs, c) in &rule.rhs {
                    let mut next = w[..pos].to_vec();
                    next.extend_from_slice(rhs);
                    next.extend_from_slice(&w[pos + rule.lhs.len()..]);
                    acc.add_scaled(&self.reduce(&next, memo), c);
                }
                acc
            }
        };
        memo.insert(w.to_vec(), out.clone());
        out
    }

    /// Coordinates of a word's normal form in the basis `basis`.
    pub fn coordinates(&self, w: &[usize], basis: &[Word]) -> Result<SparseVec> {
        let nf = self.normal_form(w);
        let mut out = SparseVec::new();
        for (word, c) in nf.iter() {
            let i = basis
                .iter()
                .position(|b| b == word)
                .ok_or_else(|| Error::Presentation(format!("irreducible word {word:?} is not a basis word")))?;
            out.add_term(i, c.clone());
        }
        Ok(out)
    }

    /// Structure constants on the given basis of normal words. The empty word
    /// must be among them and serves as unit.
    pub fn algebra(&self, basis: &[Word], labels: Vec<String>) -> Result<FinDimAlgebra> {
        let n = basis.len();
        let mut mult = vec![vec![SparseVec::new(); n]; n];
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate() {
                let mut w = u.clone();
                w.extend_from_slice(v);
                mult[i][j] = self.coordinates(&w, basis)?;
            }
        }
        let unit = basis
            .iter()
            .position(Vec::is_empty)
            .ok_or_else(|| Error::Presentation("the empty word is not a basis word".into()))?;
        FinDimAlgebra::new(labels, mult, SparseVec::basis(unit))
    }
}

/// Evaluate a word through images of its letters, multiplying left to right.
pub(crate) fn word_image<T: Clone>(w: &[usize], images: &[T], one: T, mul: impl Fn(&T, &T) -> T) -> T {
    w.iter().fold(one, |acc, &g| mul(&acc, &images[g]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anticommutation_normal_form() {
        // x = 0, y = 1; xx -> 1, yx -> -xy, yy -> 0
        let p = Presentation::new(vec![
            Rule::new(vec![0, 0], vec![(vec![], Scalar::one())]),
            Rule::new(vec![1, 0], vec![(vec![0, 1], Scalar::int(-1))]),
            Rule::new(vec![1, 1], vec![]),
        ]);
        let nf = p.normal_form(&[1, 0, 1, 0]);
        assert!(nf.is_zero());
        let nf = p.normal_form(&[1, 0]);
        assert_eq!(nf.get(&vec![0, 1]), Scalar::int(-1));
        let nf = p.normal_form(&[0, 1, 0]);
        assert_eq!(nf.get(&vec![1]), Scalar::int(-1));
    }
}
