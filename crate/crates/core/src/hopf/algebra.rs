use crate::error::{Error, Result};
use crate::exact::{Field, Scalar};
use crate::report::{Axiom, Violation};
use crate::sparse::{SparseVec, Tensor2};

/// A finite-dimensional associative unital algebra given by structure
/// constants: `mult[i][j]` holds the coordinates of `x_i x_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct FinDimAlgebra {
    pub labels: Vec<String>,
    pub mult: Vec<Vec<SparseVec>>,
    pub unit: SparseVec,
}

impl FinDimAlgebra {
    pub fn new(labels: Vec<String>, mult: Vec<Vec<SparseVec>>, unit: SparseVec) -> Result<Self> {
        let a = Self { labels, mult, unit };
        a.check_dimensions()?;
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_dimensions(&self) -> Result<()> {
        let n = self.dim();
        let dim_err = |what: &str, found| Error::Dimension {
            what: what.into(),
            expected: n,
            found,
        };
        if self.mult.len() != n {
            return Err(dim_err("multiplication table rows", self.mult.len()));
        }
        for row in &self.mult {
            if row.len() != n {
                return Err(dim_err("multiplication table columns", row.len()));
            }
            for v in row {
                if let Some(&k) = v.keys().find(|&&k| k >= n) {
                    return Err(dim_err("multiplication coordinate index", k + 1));
                }
            }
        }
        if let Some(&k) = self.unit.keys().find(|&&k| k >= n) {
            return Err(dim_err("unit coordinate index", k + 1));
        }
        Ok(())
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, x) in a.iter() {
            for (&j, y) in b.iter() {
                out.add_scaled(&self.mult[i][j], &(x * y));
            }
        }
        out
    }

    pub fn commutator(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// Ground field of the structure constants.
    pub fn field(&self) -> Result<Field> {
        let mut f = Field::Rationals;
        for v in self.mult.iter().flatten().chain(std::iter::once(&self.unit)) {
            for (_, c) in v.iter() {
                f = f.join(&c.base_field()?)?;
            }
        }
        Ok(f)
    }

    /// Associativity and unit laws on basis elements.
    pub fn verify(&self) -> Vec<Violation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    let left = self.mul(ij, &SparseVec::basis(k));
                    let right = self.mul(&SparseVec::basis(i), &self.mult[j][k]);
                    if left != right {
                        out.push(Violation::new(
                            Axiom::Associativity,
                            &[self.label(i), self.label(j), self.label(k)],
                        ));
                    }
                }
            }
        }
        for i in 0..n {
            let e = SparseVec::basis(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                out.push(Violation::new(Axiom::Unit, &[self.label(i)]));
            }
        }
        out
    }

    /// Product in `self ⊗ other`.
    pub fn mul_tensor(&self, other: &FinDimAlgebra, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(i, j), x) in a.iter() {
            for (&(k, l), y) in b.iter() {
                let c = x * y;
                for (&p, u) in self.mult[i][k].iter() {
                    let cu = &c * u;
                    for (&q, v) in other.mult[j][l].iter() {
                        out.add_term((p, q), &cu * v);
                    }
                }
            }
        }
        out
    }

    /// The full matrix algebra `M_n(k)` with basis `e_ij`, row-major.
    pub fn matrix_algebra(n: usize) -> Self {
        let idx = |i: usize, j: usize| i * n + j;
        let mut labels = Vec::new();
        for i in 0..n {
            for j in 0..n {
                labels.push(format!("e{}{}", i + 1, j + 1));
            }
        }
        let mut mult = vec![vec![SparseVec::new(); n * n]; n * n];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    mult[idx(i, j)][idx(j, l)] = SparseVec::basis(idx(i, l));
                }
            }
        }
        let unit = (0..n).map(|i| (idx(i, i), Scalar::one())).collect();
        Self { labels, mult, unit }
    }

    /// The ground field itself, as a one-dimensional algebra.
    pub fn ground() -> Self {
        Self {
            labels: vec!["1".into()],
            mult: vec![vec![SparseVec::basis(0)]],
            unit: SparseVec::basis(0),
        }
    }
}
