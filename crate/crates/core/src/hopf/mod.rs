//! Finite-dimensional Hopf algebras presented by structure constants, the
//! axiom checker, and builders for group algebras, their duals, and the
//! Sweedler and Taft algebras.

mod algebra;
mod builders;
mod group;
pub mod presentation;

pub use algebra::FinDimAlgebra;
pub use builders::{builtin, dual_group_algebra, group_algebra, sweedler, sweedler_over, taft, trivial_hopf};
pub use group::FiniteGroup;

use crate::error::{Error, Result};
use crate::exact::{Field, Scalar};
use crate::report::{Axiom, Violation};
use crate::sparse::{SparseVec, Tensor2, Tensor3};

/// Hopf algebra structure on a finite-dimensional algebra.
///
/// `comult[i]` is `Δ(x_i)` in the basis `x_j ⊗ x_k`, `counit[i]` is `ε(x_i)`
/// and `antipode[i]` holds the coordinates of `S(x_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebra {
    pub field: Field,
    pub alg: FinDimAlgebra,
    pub comult: Vec<Tensor2>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<SparseVec>,
}

impl HopfAlgebra {
    pub fn new(
        field: Field,
        alg: FinDimAlgebra,
        comult: Vec<Tensor2>,
        counit: Vec<Scalar>,
        antipode: Vec<SparseVec>,
    ) -> Result<Self> {
        let h = Self {
            field,
            alg,
            comult,
            counit,
            antipode,
        };
        h.check_dimensions()?;
        Ok(h)
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.alg.labels
    }

    pub fn label(&self, i: usize) -> &str {
        self.alg.label(i)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.alg.index_of(label)
    }

    pub fn unit(&self) -> &SparseVec {
        &self.alg.unit
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.alg.mul(a, b)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.alg.mult[i][j]
    }

    pub fn check_dimensions(&self) -> Result<()> {
        self.alg.check_dimensions()?;
        let n = self.dim();
        let err = |what: &str, found| {
            Err(Error::Dimension {
                what: what.into(),
                expected: n,
                found,
            })
        };
        if self.comult.len() != n {
            return err("comultiplication table", self.comult.len());
        }
        if self.counit.len() != n {
            return err("counit", self.counit.len());
        }
        if self.antipode.len() != n {
            return err("antipode", self.antipode.len());
        }
        for t in &self.comult {
            if let Some(&(j, k)) = t.keys().find(|&&(j, k)| j >= n || k >= n) {
                return err("comultiplication index", j.max(k) + 1);
            }
        }
        for v in &self.antipode {
            if let Some(&k) = v.keys().find(|&&k| k >= n) {
                return err("antipode index", k + 1);
            }
        }
        Ok(())
    }

    pub fn coproduct(&self, x: &SparseVec) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&i, c) in x.iter() {
            out.add_scaled(&self.comult[i], c);
        }
        out
    }

    pub fn counit_of(&self, x: &SparseVec) -> Scalar {
        x.iter().fold(Scalar::zero(), |acc, (&i, c)| acc + c * &self.counit[i])
    }

    pub fn antipode_of(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, c) in x.iter() {
            out.add_scaled(&self.antipode[i], c);
        }
        out
    }

    /// `Δ⁽²⁾(x_i) = (Δ ⊗ id) Δ(x_i)`.
    pub fn coproduct2(&self, i: usize) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&(j, k), c) in self.comult[i].iter() {
            for (&(p, q), d) in self.comult[j].iter() {
                out.add_term((p, q, k), c * d);
            }
        }
        out
    }

    fn coproduct2_right(&self, i: usize) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&(j, k), c) in self.comult[i].iter() {
            for (&(p, q), d) in self.comult[k].iter() {
                out.add_term((j, p, q), c * d);
            }
        }
        out
    }

    /// Checks every Hopf algebra axiom on basis elements. The report is empty
    /// iff the tables define a Hopf algebra.
    pub fn verify(&self) -> Result<Vec<Violation>> {
        self.check_dimensions()?;
        let n = self.dim();
        let mut out = self.alg.verify();
        let lab = |i: usize| self.label(i);
        let unit = self.unit();
        for i in 0..n {
            if self.coproduct2(i) != self.coproduct2_right(i) {
                out.push(Violation::new(Axiom::Coassociativity, &[lab(i)]));
            }
            let e = SparseVec::basis(i);
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for (&(j, k), c) in self.comult[i].iter() {
                left.add_term(k, c * &self.counit[j]);
                right.add_term(j, c * &self.counit[k]);
            }
            if left != e || right != e {
                out.push(Violation::new(Axiom::Counit, &[lab(i)]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let prod = &self.alg.mult[i][j];
                let lhs = self.coproduct(prod);
                let rhs = self.alg.mul_tensor(&self.alg, &self.comult[i], &self.comult[j]);
                if lhs != rhs {
                    out.push(Violation::new(Axiom::ComultiplicationMultiplicative, &[lab(i), lab(j)]));
                }
                if self.counit_of(prod) != &self.counit[i] * &self.counit[j] {
                    out.push(Violation::new(Axiom::CounitMultiplicative, &[lab(i), lab(j)]));
                }
            }
        }
        let unit_tensor: Tensor2 = unit
            .iter()
            .flat_map(|(&a, x)| unit.iter().map(move |(&b, y)| ((a, b), x * y)))
            .collect();
        if self.coproduct(unit) != unit_tensor {
            out.push(Violation::new(Axiom::ComultiplicationUnital, &["1"]));
        }
        if !self.counit_of(unit).is_one() {
            out.push(Violation::new(Axiom::CounitUnital, &["1"]));
        }
        for i in 0..n {
            let target = unit.scale(&self.counit[i]);
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for (&(j, k), c) in self.comult[i].iter() {
                left.add_scaled(&self.mul(&self.antipode[j], &SparseVec::basis(k)), c);
                right.add_scaled(&self.mul(&SparseVec::basis(j), &self.antipode[k]), c);
            }
            if left != target || right != target {
                out.push(Violation::new(Axiom::Antipode, &[lab(i)]));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::mentions;

    #[test]
    fn builders_pass_verification() {
        assert!(trivial_hopf().verify().unwrap().is_empty());
        assert!(sweedler().verify().unwrap().is_empty());
        for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::symmetric3()] {
            assert!(group_algebra(&g).verify().unwrap().is_empty());
            assert!(dual_group_algebra(&g).verify().unwrap().is_empty());
        }
    }

    #[test]
    fn corrupted_antipode_is_reported_at_y() {
        let mut h = sweedler();
        let y = h.index_of("y").unwrap();
        h.antipode[y] = SparseVec::basis(y);
        let report = h.verify().unwrap();
        assert!(report.contains(&Violation::new(Axiom::Antipode, &["y"])));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let mut h = sweedler();
        h.counit.pop();
        assert!(matches!(h.verify(), Err(Error::Dimension { .. })));
    }

    #[test]
    fn counit_applied_to_coproduct_is_identity() {
        for h in [sweedler(), taft(3, &crate::exact::cyclotomic_field(3).1).unwrap()] {
            for i in 0..h.dim() {
                let mut acc = SparseVec::new();
                for (&(j, k), c) in h.comult[i].iter() {
                    acc.add_term(k, c * &h.counit[j]);
                }
                assert_eq!(acc, SparseVec::basis(i));
            }
        }
    }

    #[test]
    fn corrupted_counit_names_counit_law() {
        let mut h = sweedler();
        let y = h.index_of("y").unwrap();
        h.counit[y] = Scalar::one();
        assert!(mentions(&h.verify().unwrap(), Axiom::Counit));
    }
}
