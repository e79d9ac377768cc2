//! Two-cocycles on a Hopf algebra, their convolution inverses, twisted
//! algebras `ᵅH`, and the Sweedler family `A_{a,b,c}`.

use std::sync::Arc;

use crate::comod::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::exact::{solve_linear, ExactMatrix, Field, Scalar};
use crate::hopf::presentation::{Presentation, Rule, Word};
use crate::hopf::{sweedler_over, HopfAlgebra};
use crate::report::{Axiom, Violation};
use crate::sparse::SparseVec;

pub type Bilinear = Vec<Vec<Scalar>>;

/// A bilinear form on `H` together with its convolution inverse.
/// `alpha[i][j] = α(x_i, x_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoCocycle {
    host: Arc<HopfAlgebra>,
    alpha: Bilinear,
    alpha_inv: Bilinear,
}

/// Evaluates a bilinear form with its second argument a vector.
fn eval_right(f: &Bilinear, i: usize, v: &SparseVec) -> Scalar {
    v.iter().fold(Scalar::zero(), |acc, (&k, c)| acc + c * &f[i][k])
}

fn eval_left(f: &Bilinear, v: &SparseVec, j: usize) -> Scalar {
    v.iter().fold(Scalar::zero(), |acc, (&k, c)| acc + c * &f[k][j])
}

/// Convolution `(f * g)(x, y) = f(x_1, y_1) g(x_2, y_2)` on basis pairs.
pub fn convolve(h: &HopfAlgebra, f: &Bilinear, g: &Bilinear) -> Bilinear {
    let n = h.dim();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let mut acc = Scalar::zero();
            for (&(a, b), c) in h.comult[i].iter() {
                for (&(p, q), d) in h.comult[j].iter() {
                    let fv = &f[a][p];
                    let gv = &g[b][q];
                    if !fv.is_zero() && !gv.is_zero() {
                        acc = acc + &(c * d) * &(fv * gv);
                    }
                }
            }
            *entry = acc;
        }
    }
    out
}

/// `ε ⊗ ε` as a bilinear form.
pub fn counit_form(h: &HopfAlgebra) -> Bilinear {
    h.counit.iter().map(|a| h.counit.iter().map(|b| a * b).collect()).collect()
}

fn check_square(h: &HopfAlgebra, alpha: &Bilinear) -> Result<()> {
    let n = h.dim();
    let bad = if alpha.len() != n {
        Some(alpha.len())
    } else {
        alpha.iter().map(Vec::len).find(|&l| l != n)
    };
    match bad {
        Some(found) => Err(Error::Dimension {
            what: "bilinear form".into(),
            expected: n,
            found,
        }),
        None => Ok(()),
    }
}

/// Solves `α * β = ε ⊗ ε` for `β`, and confirms `β * α = ε ⊗ ε`. Returns
/// `None` when `α` is not convolution-invertible.
pub fn convolution_inverse(h: &HopfAlgebra, alpha: &Bilinear) -> Result<Option<Bilinear>> {
    check_square(h, alpha)?;
    let n = h.dim();
    let mut mat = ExactMatrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for (&(a, b), c) in h.comult[i].iter() {
                for (&(p, q), d) in h.comult[j].iter() {
                    let v = &alpha[a][p];
                    if v.is_zero() {
                        continue;
                    }
                    let (r, col) = (i * n + j, b * n + q);
                    let cur = mat.get(r, col).add_ref(&(&(c * d) * v));
                    mat.set(r, col, cur);
                }
            }
        }
    }
    let target = counit_form(h);
    let rhs: Vec<Scalar> = target.iter().flatten().cloned().collect();
    let Some(sol) = solve_linear(&mat, &rhs)? else {
        return Ok(None);
    };
    let beta: Bilinear = sol.chunks(n).map(<[Scalar]>::to_vec).collect();
    if convolve(h, &beta, alpha) != target {
        return Ok(None);
    }
    Ok(Some(beta))
}

impl TwoCocycle {
    /// Stores `alpha` with its convolution inverse. The cocycle condition is
    /// not checked here; see [`TwoCocycle::verify`].
    pub fn new(host: Arc<HopfAlgebra>, alpha: Bilinear) -> Result<Self> {
        let alpha_inv = convolution_inverse(&host, &alpha)?.ok_or(Error::NotInvertible)?;
        Ok(Self { host, alpha, alpha_inv })
    }

    /// `α₀(x, y) = ε(x) ε(y)`.
    pub fn trivial(host: Arc<HopfAlgebra>) -> Self {
        let alpha = counit_form(&host);
        Self {
            alpha_inv: alpha.clone(),
            alpha,
            host,
        }
    }

    pub fn host(&self) -> &Arc<HopfAlgebra> {
        &self.host
    }

    pub fn alpha(&self) -> &Bilinear {
        &self.alpha
    }

    pub fn alpha_inv(&self) -> &Bilinear {
        &self.alpha_inv
    }

    /// Checks the cocycle condition on basis triples, normalization, and the
    /// two-sided inverse.
    pub fn verify(&self) -> Vec<Violation> {
        verify_cocycle_form(&self.host, &self.alpha, Some(&self.alpha_inv))
    }
}

/// Cocycle condition `α(x_1,y_1) α(x_2 y_2, z) = α(y_1,z_1) α(x, y_2 z_2)`,
/// normalization `α(x,1) = α(1,x) = ε(x)` and, if given, the inverse.
pub fn verify_cocycle_form(h: &HopfAlgebra, alpha: &Bilinear, inv: Option<&Bilinear>) -> Vec<Violation> {
    let mut out = cocycle_condition(h, alpha);
    out.extend(normalization(h, alpha));
    if let Some(inv) = inv {
        out.extend(inverse_law(h, alpha, inv));
    }
    out
}

/// Basis triples where the cocycle condition fails.
pub fn cocycle_condition(h: &HopfAlgebra, alpha: &Bilinear) -> Vec<Violation> {
    let n = h.dim();
    let lab = |i: usize| h.label(i);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let mut lhs = Scalar::zero();
                for (&(a, b), c) in h.comult[i].iter() {
                    for (&(p, q), d) in h.comult[j].iter() {
                        if alpha[a][p].is_zero() {
                            continue;
                        }
                        let w = eval_left(alpha, h.mul_basis(b, q), l);
                        lhs = lhs + &(c * d) * &(&alpha[a][p] * &w);
                    }
                }
                let mut rhs = Scalar::zero();
                for (&(p, q), d) in h.comult[j].iter() {
                    for (&(r, s), e) in h.comult[l].iter() {
                        if alpha[p][r].is_zero() {
                            continue;
                        }
                        let w = eval_right(alpha, i, h.mul_basis(q, s));
                        rhs = rhs + &(d * e) * &(&alpha[p][r] * &w);
                    }
                }
                if lhs != rhs {
                    out.push(Violation::new(Axiom::CocycleCondition, &[lab(i), lab(j), lab(l)]));
                }
            }
        }
    }
    out
}

fn normalization(h: &HopfAlgebra, alpha: &Bilinear) -> Vec<Violation> {
    let lab = |i: usize| h.label(i);
    let mut out = Vec::new();
    let unit = h.unit();
    for i in 0..h.dim() {
        if eval_right(alpha, i, unit) != h.counit[i] {
            out.push(Violation::new(Axiom::CocycleNormalization, &[lab(i), "1"]));
        }
        if eval_left(alpha, unit, i) != h.counit[i] {
            out.push(Violation::new(Axiom::CocycleNormalization, &["1", lab(i)]));
        }
    }
    out
}

/// Basis pairs where `α * β = ε ⊗ ε = β * α` fails.
pub fn inverse_law(h: &HopfAlgebra, alpha: &Bilinear, beta: &Bilinear) -> Vec<Violation> {
    let n = h.dim();
    let target = counit_form(h);
    let left = convolve(h, alpha, beta);
    let right = convolve(h, beta, alpha);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if left[i][j] != target[i][j] || right[i][j] != target[i][j] {
                out.push(Violation::new(Axiom::ConvolutionInverse, &[h.label(i), h.label(j)]));
            }
        }
    }
    out
}

/// Where a cleft algebra came from.
#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    Cocycle(TwoCocycle),
    /// The Sweedler family with the given `(a, b, c)`.
    Presentation { a: Scalar, b: Scalar, c: Scalar },
}

/// A comodule algebra with basis `u_{x_i}` indexed like the host's basis and
/// coaction `δ(u_x) = u_{x_1} ⊗ x_2`.
#[derive(Clone, Debug, PartialEq)]
pub struct CleftAlgebra {
    pub comod: ComoduleAlgebra,
    pub provenance: Provenance,
}

impl CleftAlgebra {
    pub fn host(&self) -> &Arc<HopfAlgebra> {
        &self.comod.host
    }

    pub fn dim(&self) -> usize {
        self.comod.dim()
    }

    /// True iff the center is one-dimensional.
    pub fn is_nondegenerate(&self) -> Result<bool> {
        Ok(self.comod.center()?.len() == 1)
    }
}

fn twisted_labels(h: &HopfAlgebra) -> Vec<String> {
    h.labels().iter().map(|l| format!("u_{l}")).collect()
}

/// `ᵅH`: `u_x u_y = α(x_1, y_1) u_{x_2 y_2}`, `δ(u_x) = u_{x_1} ⊗ x_2`.
pub fn twist(c: &TwoCocycle) -> Result<CleftAlgebra> {
    let report = c.verify();
    if !report.is_empty() {
        return Err(Error::InvalidCocycle(report));
    }
    let h = &*c.host;
    let n = h.dim();
    let mut mult = vec![vec![SparseVec::new(); n]; n];
    for (i, row) in mult.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            for (&(a, b), s) in h.comult[i].iter() {
                for (&(p, q), t) in h.comult[j].iter() {
                    let v = &c.alpha[a][p];
                    if !v.is_zero() {
                        entry.add_scaled(h.mul_basis(b, q), &(&(s * t) * v));
                    }
                }
            }
        }
    }
    let alg = crate::hopf::FinDimAlgebra::new(twisted_labels(h), mult, h.unit().clone())?;
    let comod = ComoduleAlgebra::new(alg, c.host.clone(), h.comult.clone())?;
    let report = comod.verify()?;
    if !report.is_empty() {
        return Err(Error::InvalidComoduleAlgebra(report));
    }
    Ok(CleftAlgebra {
        comod,
        provenance: Provenance::Cocycle(c.clone()),
    })
}

/// `A_{a,b,c}`: `u_x² = a, u_x u_y + u_y u_x = b, u_y² = c`, basis
/// `(u_1, u_x, u_y, u_z = u_x u_y)`, over the Sweedler algebra.
pub fn sweedler_cleft(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<CleftAlgebra> {
    if a.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let field = [a, b, c]
        .iter()
        .try_fold(Field::Rationals, |f, s| f.join(&s.base_field()?))?;
    let host = Arc::new(sweedler_over(&field)?);
    let (x, y) = (0, 1);
    let pres = Presentation::new(vec![
        Rule::new(vec![x, x], vec![(vec![], a.clone())]),
        Rule::new(vec![y, x], vec![(vec![], b.clone()), (vec![x, y], Scalar::int(-1))]),
        Rule::new(vec![y, y], vec![(vec![], c.clone())]),
    ]);
    let basis: Vec<Word> = vec![vec![], vec![x], vec![y], vec![x, y]];
    let alg = pres.algebra(&basis, twisted_labels(&host))?;
    let comod = ComoduleAlgebra::new(alg, host.clone(), host.comult.clone())?;
    let report = comod.verify()?;
    if !report.is_empty() {
        return Err(Error::InvalidComoduleAlgebra(report));
    }
    Ok(CleftAlgebra {
        comod,
        provenance: Provenance::Presentation {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
        },
    })
}

/// `A_{a,b,c}` with indeterminate parameters `a, b, c`.
pub fn sweedler_cleft_generic() -> CleftAlgebra {
    sweedler_cleft(&Scalar::var("a"), &Scalar::var("b"), &Scalar::var("c")).expect("generic parameters")
}
