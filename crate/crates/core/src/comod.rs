//! Comodule algebras over a finite-dimensional Hopf algebra: axiom checks,
//! coinvariants, center, and the space of comodule maps `H -> A`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{kernel_basis, ExactMatrix, Scalar};
use crate::hopf::{dual_group_algebra, group_algebra, FinDimAlgebra, FiniteGroup, HopfAlgebra};
use crate::report::{Axiom, Violation};
use crate::sparse::{SparseVec, Tensor2, Tensor3};

/// An algebra `A` with a right coaction `δ: A -> A ⊗ H`.
///
/// `coaction[i]` is `δ(a_i)` in the basis `a_j ⊗ x_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleAlgebra {
    pub alg: FinDimAlgebra,
    pub host: Arc<HopfAlgebra>,
    pub coaction: Vec<Tensor2>,
}

/// A basis of the comodule maps `f: H -> A`. Each map is stored as the list
/// of images `f(x_i)` of the basis of `H`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleMapSpace {
    pub basis: Vec<Vec<SparseVec>>,
}

impl ComoduleMapSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl ComoduleAlgebra {
    pub fn new(alg: FinDimAlgebra, host: Arc<HopfAlgebra>, coaction: Vec<Tensor2>) -> Result<Self> {
        let a = Self { alg, host, coaction };
        a.check_dimensions()?;
        Ok(a)
    }

    /// `H` as a comodule algebra over itself with `δ = Δ`.
    pub fn regular(host: Arc<HopfAlgebra>) -> Self {
        Self {
            alg: host.alg.clone(),
            coaction: host.comult.clone(),
            host,
        }
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn check_dimensions(&self) -> Result<()> {
        self.alg.check_dimensions()?;
        let (m, n) = (self.dim(), self.host.dim());
        if self.coaction.len() != m {
            return Err(Error::Dimension {
                what: "coaction table".into(),
                expected: m,
                found: self.coaction.len(),
            });
        }
        for t in &self.coaction {
            for &(j, k) in t.keys() {
                if j >= m || k >= n {
                    return Err(Error::Dimension {
                        what: "coaction index".into(),
                        expected: if j >= m { m } else { n },
                        found: if j >= m { j + 1 } else { k + 1 },
                    });
                }
            }
        }
        Ok(())
    }

    pub fn coact(&self, a: &SparseVec) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&i, c) in a.iter() {
            out.add_scaled(&self.coaction[i], c);
        }
        out
    }

    /// Checks coassociativity, the counit law, multiplicativity and
    /// unitality of the coaction, plus the algebra axioms of `A`.
    pub fn verify(&self) -> Result<Vec<Violation>> {
        self.check_dimensions()?;
        self.host.check_dimensions()?;
        let h = &*self.host;
        let m = self.dim();
        let mut out = self.alg.verify();
        let lab = |i: usize| self.alg.label(i);
        for i in 0..m {
            let mut left = Tensor3::new();
            let mut right = Tensor3::new();
            for (&(j, k), c) in self.coaction[i].iter() {
                for (&(p, q), d) in self.coaction[j].iter() {
                    left.add_term((p, q, k), c * d);
                }
                for (&(p, q), d) in h.comult[k].iter() {
                    right.add_term((j, p, q), c * d);
                }
            }
            if left != right {
                out.push(Violation::new(Axiom::CoactionCoassociativity, &[lab(i)]));
            }
            let mut counit = SparseVec::new();
            for (&(j, k), c) in self.coaction[i].iter() {
                counit.add_term(j, c * &h.counit[k]);
            }
            if counit != SparseVec::basis(i) {
                out.push(Violation::new(Axiom::CoactionCounit, &[lab(i)]));
            }
        }
        for i in 0..m {
            for j in 0..m {
                let lhs = self.coact(&self.alg.mult[i][j]);
                let rhs = self.alg.mul_tensor(&h.alg, &self.coaction[i], &self.coaction[j]);
                if lhs != rhs {
                    out.push(Violation::new(Axiom::CoactionMultiplicative, &[lab(i), lab(j)]));
                }
            }
        }
        let one_one: Tensor2 = self
            .alg
            .unit
            .iter()
            .flat_map(|(&a, x)| h.unit().iter().map(move |(&b, y)| ((a, b), x * y)))
            .collect();
        if self.coact(&self.alg.unit) != one_one {
            out.push(Violation::new(Axiom::CoactionUnital, &["1"]));
        }
        Ok(out)
    }

    /// Basis of `A^H = {a : δ(a) = a ⊗ 1}`.
    pub fn coinvariants(&self) -> Result<Vec<SparseVec>> {
        let (m, n) = (self.dim(), self.host.dim());
        let mut mat = ExactMatrix::zeros(m * n, m);
        for i in 0..m {
            let mut col = self.coaction[i].clone();
            for (&k, c) in self.host.unit().iter() {
                col.add_term((i, k), c.neg_ref());
            }
            for (&(j, k), c) in col.iter() {
                mat.set(j * n + k, i, c.clone());
            }
        }
        Ok(kernel_basis(&mat)?.iter().map(|v| SparseVec::from_dense(v)).collect())
    }

    /// Basis of the center of `A`.
    pub fn center(&self) -> Result<Vec<SparseVec>> {
        center_of(&self.alg)
    }

    /// All linear `f: H -> A` with `δ_A ∘ f = (f ⊗ id) ∘ Δ`.
    pub fn comodule_map_space(&self) -> Result<ComoduleMapSpace> {
        let h = &*self.host;
        let (m, n) = (self.dim(), h.dim());
        // unknown F[j][i] = coefficient of a_j in f(x_i), at column j*n + i
        let col = |j: usize, i: usize| j * n + i;
        let row = |i: usize, l: usize, k: usize| (i * m + l) * n + k;
        let mut mat = ExactMatrix::zeros(n * m * n, m * n);
        let mut add = |r: usize, c: usize, v: &Scalar| {
            let cur = mat.get(r, c).add_ref(v);
            mat.set(r, c, cur);
        };
        for i in 0..n {
            for j in 0..m {
                for (&(l, k), d) in self.coaction[j].iter() {
                    add(row(i, l, k), col(j, i), d);
                }
            }
            for (&(p, k), d) in h.comult[i].iter() {
                for l in 0..m {
                    add(row(i, l, k), col(l, p), &d.neg_ref());
                }
            }
        }
        let basis = kernel_basis(&mat)?
            .into_iter()
            .map(|v| {
                (0..n)
                    .map(|i| (0..m).map(|j| (j, v[col(j, i)].clone())).collect())
                    .collect()
            })
            .collect();
        Ok(ComoduleMapSpace { basis })
    }
}

/// Basis of the center of a finite-dimensional algebra.
pub fn center_of(alg: &FinDimAlgebra) -> Result<Vec<SparseVec>> {
    let m = alg.dim();
    let mut mat = ExactMatrix::zeros(m * m, m);
    for a in 0..m {
        for i in 0..m {
            let c = alg.mult[a][i].sub(&alg.mult[i][a]);
            for (&k, v) in c.iter() {
                mat.set(i * m + k, a, v.clone());
            }
        }
    }
    Ok(kernel_basis(&mat)?.iter().map(|v| SparseVec::from_dense(v)).collect())
}

/// A `G`-graded algebra as a `k[G]`-comodule algebra. `degrees[i]` is the
/// group element carrying basis element `a_i`, which must be homogeneous.
pub fn graded_algebra_as_comodule(g: &FiniteGroup, alg: FinDimAlgebra, degrees: &[usize]) -> Result<ComoduleAlgebra> {
    let m = alg.dim();
    if degrees.len() != m {
        return Err(Error::Dimension {
            what: "degree list".into(),
            expected: m,
            found: degrees.len(),
        });
    }
    if let Some(&d) = degrees.iter().find(|&&d| d >= g.order()) {
        return Err(Error::GradingViolation(format!("degree index {d} is not a group element")));
    }
    for i in 0..m {
        for j in 0..m {
            let deg = g.mul(degrees[i], degrees[j]);
            if let Some(&k) = alg.mult[i][j].keys().find(|&&k| degrees[k] != deg) {
                return Err(Error::GradingViolation(format!(
                    "{}·{} has a component along {} outside degree {}",
                    alg.label(i),
                    alg.label(j),
                    alg.label(k),
                    g.labels()[deg]
                )));
            }
        }
    }
    if let Some(&k) = alg.unit.keys().find(|&&k| degrees[k] != g.identity()) {
        return Err(Error::GradingViolation(format!("the unit has a component along {}", alg.label(k))));
    }
    let coaction = (0..m).map(|i| Tensor2::single((i, degrees[i]), Scalar::one())).collect();
    ComoduleAlgebra::new(alg, Arc::new(group_algebra(g)), coaction)
}

/// An algebra with a left `G`-action by automorphisms as a comodule algebra
/// over `k^G`: `δ(a) = Σ_g g·a ⊗ e_g`. `action[g][i]` is `g·a_i`.
pub fn g_algebra_as_comodule(g: &FiniteGroup, alg: FinDimAlgebra, action: &[Vec<SparseVec>]) -> Result<ComoduleAlgebra> {
    let m = alg.dim();
    if action.len() != g.order() {
        return Err(Error::Dimension {
            what: "action list".into(),
            expected: g.order(),
            found: action.len(),
        });
    }
    if let Some(bad) = action.iter().find(|a| a.len() != m) {
        return Err(Error::Dimension {
            what: "action matrix".into(),
            expected: m,
            found: bad.len(),
        });
    }
    let apply = |gi: usize, v: &SparseVec| {
        let mut out = SparseVec::new();
        for (&i, c) in v.iter() {
            out.add_scaled(&action[gi][i], c);
        }
        out
    };
    let name = |gi: usize| &g.labels()[gi];
    for gi in 0..g.order() {
        if apply(gi, &alg.unit) != alg.unit {
            return Err(Error::NotAutomorphism(format!("{} does not fix the unit", name(gi))));
        }
        for i in 0..m {
            for j in 0..m {
                let lhs = apply(gi, &alg.mult[i][j]);
                let rhs = alg.mul(&action[gi][i], &action[gi][j]);
                if lhs != rhs {
                    return Err(Error::NotAutomorphism(format!(
                        "{} is not multiplicative on ({}, {})",
                        name(gi),
                        alg.label(i),
                        alg.label(j)
                    )));
                }
            }
        }
        for hi in 0..g.order() {
            let gh = g.mul(gi, hi);
            if (0..m).any(|i| apply(gi, &action[hi][i]) != action[gh][i]) {
                return Err(Error::NotAutomorphism(format!(
                    "the action of {}·{} is not the composite",
                    name(gi),
                    name(hi)
                )));
            }
        }
    }
    let e = g.identity();
    if (0..m).any(|i| action[e][i] != SparseVec::basis(i)) {
        return Err(Error::NotAutomorphism("the identity acts nontrivially".into()));
    }
    let coaction = (0..m)
        .map(|i| {
            let mut t = Tensor2::new();
            for gi in 0..g.order() {
                for (&j, c) in action[gi][i].iter() {
                    t.add_term((j, gi), c.clone());
                }
            }
            t
        })
        .collect();
    ComoduleAlgebra::new(alg, Arc::new(dual_group_algebra(g)), coaction)
}
