//! The convolution inverse `t⁻¹` of the tautological map `x ↦ t_x`, the
//! generic cocycle `σ` with its inverse, and the generators of the generic
//! base algebra inside `Frac k[t_x]`.

use std::collections::BTreeMap;

use crate::cocycle::{cocycle_condition, inverse_law, Bilinear, TwoCocycle};
use crate::error::{Error, Result};
use crate::exact::{solve_linear, ExactMatrix, MPoly, Scalar};
use crate::hopf::HopfAlgebra;
use crate::ident::t_variables;
use crate::sparse::SparseVec;

/// `t⁻¹_{x_i}` for each basis element, as rational functions.
#[derive(Clone, Debug, PartialEq)]
pub struct TInverse {
    pub vars: Vec<String>,
    pub values: Vec<Scalar>,
}

impl TInverse {
    pub fn t(&self, i: usize) -> Scalar {
        Scalar::from_poly(MPoly::var(&self.vars[i]))
    }

    /// `t_v` for a vector `v`, by linearity.
    pub fn t_of(&self, v: &SparseVec) -> Scalar {
        v.iter().fold(Scalar::zero(), |acc, (&k, c)| acc + c * &self.t(k))
    }

    /// `t⁻¹_v` for a vector `v`, by linearity.
    pub fn inv_of(&self, v: &SparseVec) -> Scalar {
        v.iter().fold(Scalar::zero(), |acc, (&k, c)| acc + c * &self.values[k])
    }

    /// Basis elements where `t_{x_1} t⁻¹_{x_2} = ε(x) = t⁻¹_{x_1} t_{x_2}`
    /// fails.
    pub fn violations(&self, h: &HopfAlgebra) -> Vec<usize> {
        (0..h.dim())
            .filter(|&i| {
                let (mut left, mut right) = (Scalar::zero(), Scalar::zero());
                for (&(j, k), c) in h.comult[i].iter() {
                    left = left + c * &(&self.t(j) * &self.values[k]);
                    right = right + c * &(&self.values[j] * &self.t(k));
                }
                left != h.counit[i] || right != h.counit[i]
            })
            .collect()
    }
}

/// Solves `M v = ε` with `M_{ik} = Σ_j m^i_{jk} t_{x_j}`.
pub fn t_inverse(h: &HopfAlgebra) -> Result<TInverse> {
    let n = h.dim();
    let vars = t_variables(h);
    let mut mat = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for (&(j, k), c) in h.comult[i].iter() {
            let cur = mat.get(i, k).add_ref(&(c * &Scalar::var(&vars[j])));
            mat.set(i, k, cur);
        }
    }
    let values = solve_linear(&mat, &h.counit)?.ok_or(Error::SingularCoalgebraMatrix)?;
    let out = TInverse { vars, values };
    if !out.violations(h).is_empty() {
        return Err(Error::SingularCoalgebraMatrix);
    }
    Ok(out)
}

/// `σ` and `σ⁻¹` on basis pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaTable {
    pub sigma: Bilinear,
    pub sigma_inv: Bilinear,
    pub tinv: TInverse,
}

/// `σ(x,y) = t_{x_1} t_{y_1} α(x_2,y_2) t⁻¹_{x_3 y_3}` and
/// `σ⁻¹(x,y) = t_{x_1 y_1} α⁻¹(x_2,y_2) t⁻¹_{x_3} t⁻¹_{y_3}`, both checked
/// against the cocycle condition and the inverse law before returning.
pub fn sigma(c: &TwoCocycle) -> Result<SigmaTable> {
    let report = c.verify();
    if !report.is_empty() {
        return Err(Error::InvalidCocycle(report));
    }
    let h = &**c.host();
    let n = h.dim();
    let tinv = t_inverse(h)?;
    let d2: Vec<_> = (0..n).map(|i| h.coproduct2(i)).collect();
    let mut tinv_prod = vec![vec![Scalar::zero(); n]; n];
    let mut t_prod = vec![vec![Scalar::zero(); n]; n];
    for a in 0..n {
        for b in 0..n {
            tinv_prod[a][b] = tinv.inv_of(h.mul_basis(a, b));
            t_prod[a][b] = tinv.t_of(h.mul_basis(a, b));
        }
    }
    let mut sig = vec![vec![Scalar::zero(); n]; n];
    let mut sig_inv = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let (mut s, mut si) = (Scalar::zero(), Scalar::zero());
            for (&(a1, a2, a3), p) in d2[i].iter() {
                for (&(b1, b2, b3), q) in d2[j].iter() {
                    let coef = p * q;
                    let al = &c.alpha()[a2][b2];
                    if !al.is_zero() {
                        let term = &(&tinv.t(a1) * &tinv.t(b1)) * &(al * &tinv_prod[a3][b3]);
                        s = s + &coef * &term;
                    }
                    let ai = &c.alpha_inv()[a2][b2];
                    if !ai.is_zero() {
                        let term = &(&t_prod[a1][b1] * ai) * &(&tinv.values[a3] * &tinv.values[b3]);
                        si = si + &coef * &term;
                    }
                }
            }
            sig[i][j] = s;
            sig_inv[i][j] = si;
        }
    }
    let mut report = cocycle_condition(h, &sig);
    report.extend(inverse_law(h, &sig, &sig_inv));
    if !report.is_empty() {
        return Err(Error::InvalidCocycle(report));
    }
    Ok(SigmaTable {
        sigma: sig,
        sigma_inv: sig_inv,
        tinv,
    })
}

impl SigmaTable {
    /// `σ` with every `t_{x_i}` replaced by `ε(x_i)`.
    pub fn at_counit(&self, h: &HopfAlgebra) -> Result<Bilinear> {
        let point: BTreeMap<String, Scalar> = self.tinv.vars.iter().cloned().zip(h.counit.iter().cloned()).collect();
        self.sigma
            .iter()
            .map(|row| row.iter().map(|s| Ok(s.substitute(&point)?)).collect())
            .collect()
    }
}

/// The entries `σ(x_i, x_j)` and `σ⁻¹(x_i, x_j)`, labelled
/// `sigma(x,y)` / `sigma^-1(x,y)`, keeping the first of equal values and
/// skipping zeros.
pub fn generic_base_generators(h: &HopfAlgebra, table: &SigmaTable) -> Vec<(String, Scalar)> {
    let n = h.dim();
    let mut out: Vec<(String, Scalar)> = Vec::new();
    for (name, form) in [("sigma", &table.sigma), ("sigma^-1", &table.sigma_inv)] {
        for i in 0..n {
            for j in 0..n {
                let v = &form[i][j];
                if !v.is_zero() && !out.iter().any(|(_, w)| w == v) {
                    out.push((format!("{name}({},{})", h.label(i), h.label(j)), v.clone()));
                }
            }
        }
    }
    out
}
