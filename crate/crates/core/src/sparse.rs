use std::collections::BTreeMap;

use crate::exact::Scalar;

/// Sparse linear combination keyed by `K`; no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Sparse<K: Ord>(BTreeMap<K, Scalar>);

/// Coordinates with respect to a basis.
pub type SparseVec = Sparse<usize>;
/// Element of a tensor product `V ⊗ W` in the product basis.
pub type Tensor2 = Sparse<(usize, usize)>;
/// Element of a triple tensor product.
pub type Tensor3 = Sparse<(usize, usize, usize)>;

impl<K: Ord> Default for Sparse<K> {
    fn default() -> Self {
        Sparse(BTreeMap::new())
    }
}

impl<K: Ord + Clone> Sparse<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: Scalar) -> Self {
        let mut s = Self::new();
        s.add_term(k, c);
        s
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn get(&self, k: &K) -> Scalar {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.0.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.0 {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::int(-1));
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> Sparse<L> {
        let mut out = Sparse::new();
        for (k, v) in &self.0 {
            out.add_term(f(k), v.clone());
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Sparse<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut s = Sparse::new();
        for (k, c) in iter {
            s.add_term(k, c);
        }
        s
    }
}

impl SparseVec {
    pub fn basis(i: usize) -> Self {
        Self::single(i, Scalar::one())
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        v.iter().cloned().enumerate().collect()
    }

    pub fn to_dense(&self, n: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); n];
        for (&i, c) in self.iter() {
            out[i] = c.clone();
        }
        out
    }
}
