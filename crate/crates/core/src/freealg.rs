//! The tensor algebra `T(X_H)` on the basis of a Hopf algebra, with its
//! coaction `X_x ↦ X_{x_1} ⊗ x_2`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::hopf::HopfAlgebra;
use crate::sparse::{Sparse, SparseVec};

pub const DEFAULT_DEGREE_LIMIT: usize = 8;

/// A word in the generators `X_{x_i}`, ordered by length, then
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    /// All words of length `r` over `n` letters, in order.
    pub fn all(n: usize, r: usize) -> Vec<Word> {
        let mut out = vec![Word::default()];
        for _ in 0..r {
            out = out
                .iter()
                .flat_map(|w| (0..n).map(move |i| w.concat(&Word(vec![i]))))
                .collect();
        }
        out
    }
}

/// An element of `T(X_H) ⊗ H`, keyed by (word, basis index of `H`).
pub type TensorWithH = Sparse<(Word, usize)>;

/// An element of `T(X_H)` for `H` of dimension `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeElement {
    n: usize,
    terms: Sparse<Word>,
    limit: usize,
}

impl FreeElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: Sparse::new(),
            limit: DEFAULT_DEGREE_LIMIT,
        }
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        Self {
            terms: Sparse::single(Word::default(), c),
            ..Self::zero(n)
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Scalar::one())
    }

    pub fn word(n: usize, letters: &[usize]) -> Result<Self> {
        if letters.len() > DEFAULT_DEGREE_LIMIT {
            return Err(Error::DegreeLimit {
                degree: letters.len(),
                limit: DEFAULT_DEGREE_LIMIT,
            });
        }
        if let Some(&bad) = letters.iter().find(|&&i| i >= n) {
            return Err(Error::Dimension {
                what: "generator index".into(),
                expected: n,
                found: bad + 1,
            });
        }
        Ok(Self {
            terms: Sparse::single(Word(letters.to_vec()), Scalar::one()),
            ..Self::zero(n)
        })
    }

    /// `X_x = Σ c_i X_{x_i}` for `x = Σ c_i x_i`.
    pub fn generator(n: usize, x: &SparseVec) -> Self {
        Self {
            terms: x.map_keys(|&i| Word(vec![i])),
            ..Self::zero(n)
        }
    }

    pub fn basis_generator(n: usize, i: usize) -> Self {
        Self::generator(n, &SparseVec::basis(i))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        Self {
            terms: terms.into_iter().collect(),
            ..Self::zero(n)
        }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word length, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Word::len);
        match lens.next() {
            None => true,
            Some(d) => lens.all(|l| l == d),
        }
    }

    /// The constant term, if the element has no word of positive length.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.degree() {
            None => Some(Scalar::zero()),
            Some(0) => Some(self.terms.get(&Word::default())),
            _ => None,
        }
    }

    fn same_shape(&self, o: &Self) -> usize {
        debug_assert_eq!(self.n, o.n, "elements of different tensor algebras");
        self.limit.max(o.limit)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.add(&o.terms),
            limit: self.same_shape(o),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.sub(&o.terms),
            limit: self.same_shape(o),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            terms: self.terms.scale(c),
            ..self.clone()
        }
    }

    /// Concatenation product; fails if a word would exceed the degree limit.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        let limit = self.same_shape(o);
        if let (Some(a), Some(b)) = (self.degree(), o.degree()) {
            if a + b > limit {
                return Err(Error::DegreeLimit { degree: a + b, limit });
            }
        }
        let mut terms = Sparse::new();
        for (u, c) in self.terms.iter() {
            for (v, d) in o.terms.iter() {
                terms.add_term(u.concat(v), c * d);
            }
        }
        Ok(Self { n: self.n, terms, limit })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.n).with_limit(self.limit);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Homogeneous parts by increasing degree; zero parts are omitted.
    pub fn homogeneous_components(&self) -> Vec<(usize, FreeElement)> {
        let mut out: Vec<(usize, FreeElement)> = Vec::new();
        for (w, c) in self.terms.iter() {
            match out.last_mut() {
                Some((d, p)) if *d == w.len() => p.terms.add_term(w.clone(), c.clone()),
                _ => out.push((
                    w.len(),
                    Self {
                        terms: Sparse::single(w.clone(), c.clone()),
                        ..self.clone()
                    },
                )),
            }
        }
        out
    }

    /// `X_x ↦ λ^{deg} X_x`, the rescaling endomorphism `X_x ↦ λ X_x`.
    pub fn rescale(&self, lambda: &Scalar) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * &lambda.pow(w.len() as u32)))
                .collect(),
            ..self.clone()
        }
    }

    /// The coaction `δ(X_{i_1} ··· X_{i_r}) = X_{a_1}···X_{a_r} ⊗ x_{b_1}···x_{b_r}`
    /// summed over `Δ(x_{i_k}) = Σ x_{a_k} ⊗ x_{b_k}`.
    pub fn coaction(&self, h: &HopfAlgebra) -> TensorWithH {
        let mut out = TensorWithH::new();
        for (w, c) in self.terms.iter() {
            let mut partial: Vec<(Word, SparseVec)> = vec![(Word::default(), h.unit().scale(c))];
            for &letter in &w.0 {
                let mut next = Vec::new();
                for (prefix, hv) in &partial {
                    for (&(a, b), d) in h.comult[letter].iter() {
                        let v = h.mul(hv, &SparseVec::basis(b)).scale(d);
                        if !v.is_zero() {
                            next.push((prefix.concat(&Word(vec![a])), v));
                        }
                    }
                }
                partial = next;
            }
            for (word, hv) in partial {
                for (&k, e) in hv.iter() {
                    out.add_term((word.clone(), k), e.clone());
                }
            }
        }
        out
    }

    /// `δ(P) = Σ_k P_k ⊗ x_k`; returns the nonzero `(k, P_k)`.
    pub fn coideal_parts(&self, h: &HopfAlgebra) -> Vec<(usize, FreeElement)> {
        let mut parts: Vec<Sparse<Word>> = vec![Sparse::new(); h.dim()];
        for ((w, k), c) in self.coaction(h).iter() {
            parts[*k].add_term(w.clone(), c.clone());
        }
        parts
            .into_iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(k, terms)| (k, Self { terms, ..self.clone() }))
            .collect()
    }

    /// `P ⊗ 1` in `T(X_H) ⊗ H`.
    pub fn tensor_one(&self, h: &HopfAlgebra) -> TensorWithH {
        let mut out = TensorWithH::new();
        for (w, c) in self.terms.iter() {
            for (&k, e) in h.unit().iter() {
                out.add_term((w.clone(), k), c * e);
            }
        }
        out
    }

    pub fn is_coinvariant(&self, h: &HopfAlgebra) -> bool {
        self.coaction(h) == self.tensor_one(h)
    }

    /// Renders with `X[label]` generators; parses back to the same element.
    pub fn display<'a>(&'a self, labels: &'a [String]) -> impl fmt::Display + 'a {
        Pretty { p: self, labels }
    }
}

/// `P_x = X_{x_1} X_{S(x_2)}`.
pub fn p_element(h: &HopfAlgebra, x: &SparseVec) -> FreeElement {
    let n = h.dim();
    let mut out = FreeElement::zero(n);
    for (&i, c) in x.iter() {
        for (&(a, b), d) in h.comult[i].iter() {
            let right = FreeElement::generator(n, &h.antipode[b]);
            let term = FreeElement::basis_generator(n, a).mul(&right).expect("degree 2");
            out = out.add(&term.scale(&(c * d)));
        }
    }
    out
}

/// `Q_{x,y} = X_{x_1} X_{y_1} X_{S(x_2 y_2)}`.
pub fn q_element(h: &HopfAlgebra, x: &SparseVec, y: &SparseVec) -> FreeElement {
    let n = h.dim();
    let mut out = FreeElement::zero(n);
    for (&i, c) in x.iter() {
        for (&j, c2) in y.iter() {
            for (&(a, b), d) in h.comult[i].iter() {
                for (&(p, q), e) in h.comult[j].iter() {
                    let s = h.antipode_of(h.mul_basis(b, q));
                    let term = FreeElement::word(n, &[a, p])
                        .and_then(|w| w.mul(&FreeElement::generator(n, &s)))
                        .expect("degree 3");
                    out = out.add(&term.scale(&(&(c * c2) * &(d * e))));
                }
            }
        }
    }
    out
}

struct Pretty<'a> {
    p: &'a FreeElement,
    labels: &'a [String],
}

impl fmt::Display for Pretty<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.p.terms.iter().enumerate() {
            let word = w
                .0
                .iter()
                .map(|&i| format!("X[{}]", self.labels[i]))
                .collect::<Vec<_>>()
                .join("*");
            let (neg, coef) = if c.is_compound() {
                (false, format!("({c})"))
            } else {
                let s = c.to_string();
                match s.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, s),
                }
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (word.is_empty(), coef == "1") {
                (true, _) => write!(f, "{coef}")?,
                (false, true) => write!(f, "{word}")?,
                (false, false) => write!(f, "{coef}*{word}")?,
            }
        }
        Ok(())
    }
}
