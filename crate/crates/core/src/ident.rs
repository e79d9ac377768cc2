//! Deciding and computing H-identities.
//!
//! Every comodule algebra map `T(X_H) -> A` is fixed by a comodule map
//! `f: H -> A` on generators. Writing a general such `f` with indeterminate
//! coefficients turns the map into a single algebra map into
//! `k[vars] ⊗ A`, and `P` is an identity iff its image vanishes there. For
//! twisted algebras `ᵅH` this map is `μ_α(X_x) = t_{x_1} u_{x_2}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cocycle::CleftAlgebra;
use crate::comod::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::exact::{kernel_basis, solve_linear, ExactMatrix, Field, MPoly, Monomial, Scalar};
use crate::freealg::{FreeElement, Word};
use crate::hopf::{FinDimAlgebra, HopfAlgebra};
use crate::sparse::SparseVec;

pub const DEFAULT_ROW_CAP: usize = 20_000;

const FINITE_FIELD_WARNING: &str =
    "the coefficient field is finite; identities are characterized by the universal map only over infinite fields";

/// `Σ_j p_j ⊗ a_j` in `k[vars] ⊗ A`.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedElement {
    pub entries: Vec<MPoly>,
}

impl MixedElement {
    pub fn zero(m: usize) -> Self {
        Self {
            entries: vec![MPoly::zero(); m],
        }
    }

    /// `p ⊗ a`.
    pub fn from_parts(m: usize, p: &MPoly, a: &SparseVec) -> Self {
        let mut out = Self::zero(m);
        for (&j, c) in a.iter() {
            out.entries[j] = p.scale(c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MPoly::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self, alg: &FinDimAlgebra) -> Self {
        let mut out = Self::zero(self.entries.len());
        for (i, p) in self.entries.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, q) in o.entries.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                let pq = p.mul(q);
                for (&k, c) in alg.mult[i][j].iter() {
                    out.entries[k] = out.entries[k].add(&pq.scale(c));
                }
            }
        }
        out
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.entries
            .iter()
            .flat_map(|p| p.variables())
            .map(|v| v.name().to_string())
            .collect()
    }

    /// Substitutes values for variables; the result is an element of `A`
    /// when every variable is assigned.
    pub fn substitute(&self, values: &BTreeMap<String, Scalar>) -> Result<Self> {
        Ok(Self {
            entries: self
                .entries
                .iter()
                .map(|p| p.substitute(values))
                .collect::<std::result::Result<_, _>>()?,
        })
    }

    /// The coordinates in `A` of a fully specialized element.
    pub fn as_vector(&self) -> Option<SparseVec> {
        let mut out = SparseVec::new();
        for (j, p) in self.entries.iter().enumerate() {
            out.add_term(j, p.as_constant()?);
        }
        Some(out)
    }

    /// Coefficient vectors in `A` of each monomial.
    pub fn by_monomial(&self) -> BTreeMap<Monomial, SparseVec> {
        let mut out: BTreeMap<Monomial, SparseVec> = BTreeMap::new();
        for (j, p) in self.entries.iter().enumerate() {
            for (mono, c) in p.terms() {
                out.entry(mono.clone()).or_default().add_term(j, c.clone());
            }
        }
        out
    }

    pub fn display<'a>(&'a self, labels: &'a [String]) -> String {
        let parts: Vec<String> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(j, p)| {
                if p.len() == 1 && p.as_constant().is_none() {
                    format!("{p}*{}", labels[j])
                } else {
                    format!("({p})*{}", labels[j])
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// The answer to "is `P` an identity?".
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityVerdict {
    pub is_identity: bool,
    /// Values of the variables under which the image is nonzero.
    pub witness: Option<BTreeMap<String, Scalar>>,
    pub image: MixedElement,
    pub warning: Option<String>,
}

/// An algebra map `T(X_H) -> k[vars] ⊗ A` given by generator images.
#[derive(Clone, Debug)]
pub struct GenericMap {
    alg: FinDimAlgebra,
    images: Vec<MixedElement>,
    field: Field,
}

/// Variable name `t_label`, with characters outside `[A-Za-z0-9_]` dropped.
pub fn t_variable(label: &str) -> String {
    let clean: String = label.chars().filter(|c| c.is_alphanumeric() || *c == '_').collect();
    format!("t_{clean}")
}

/// Variable names for the basis of `H`, falling back to positions if the
/// cleaned labels collide.
pub fn t_variables(h: &HopfAlgebra) -> Vec<String> {
    let names: Vec<String> = h.labels().iter().map(|l| t_variable(l)).collect();
    let distinct: BTreeSet<&String> = names.iter().collect();
    if distinct.len() == names.len() {
        names
    } else {
        (1..=names.len()).map(|i| format!("t_i{i}")).collect()
    }
}

impl GenericMap {
    /// `μ_α(X_x) = t_{x_1} u_{x_2}`.
    pub fn universal(a: &CleftAlgebra) -> Self {
        let h = &**a.host();
        let vars = t_variables(h);
        let m = a.dim();
        let images = (0..h.dim())
            .map(|i| {
                let mut img = MixedElement::zero(m);
                for (&(p, q), c) in h.comult[i].iter() {
                    img.entries[q] = img.entries[q].add(&MPoly::var(&vars[p]).scale(c));
                }
                img
            })
            .collect();
        Self {
            alg: a.comod.alg.clone(),
            images,
            field: h.field.clone(),
        }
    }

    /// `X_{x_i} ↦ Σ_k c_k f_k(x_i)` over a basis `f_k` of the comodule maps.
    pub fn general(a: &ComoduleAlgebra) -> Result<Self> {
        let space = a.comodule_map_space()?;
        let (m, n) = (a.dim(), a.host.dim());
        let images = (0..n)
            .map(|i| {
                let mut img = MixedElement::zero(m);
                for (k, f) in space.basis.iter().enumerate() {
                    let c = MPoly::var(&format!("c_{}", k + 1));
                    img = img.add(&MixedElement::from_parts(m, &c, &f[i]));
                }
                img
            })
            .collect();
        Ok(Self {
            alg: a.alg.clone(),
            images,
            field: a.host.field.clone(),
        })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn image_of_generator(&self, i: usize) -> &MixedElement {
        &self.images[i]
    }

    fn one(&self) -> MixedElement {
        MixedElement::from_parts(self.alg.dim(), &MPoly::constant(Scalar::one()), &self.alg.unit)
    }

    fn check(&self, p: &FreeElement) -> Result<()> {
        if p.rank() != self.rank() {
            return Err(Error::HostMismatch);
        }
        Ok(())
    }

    pub fn eval_word(&self, w: &Word) -> MixedElement {
        w.0.iter()
            .fold(self.one(), |acc, &i| acc.mul(&self.images[i], &self.alg))
    }

    pub fn eval(&self, p: &FreeElement) -> Result<MixedElement> {
        self.check(p)?;
        let mut memo: BTreeMap<Vec<usize>, MixedElement> = BTreeMap::new();
        let mut out = MixedElement::zero(self.alg.dim());
        for (w, c) in p.terms() {
            let img = self.eval_prefixed(&w.0, &mut memo);
            out = out.add(&img.scale(c));
        }
        Ok(out)
    }

    fn eval_prefixed(&self, w: &[usize], memo: &mut BTreeMap<Vec<usize>, MixedElement>) -> MixedElement {
        if w.is_empty() {
            return self.one();
        }
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let (head, last) = w.split_at(w.len() - 1);
        let v = self.eval_prefixed(head, memo).mul(&self.images[last[0]], &self.alg);
        memo.insert(w.to_vec(), v.clone());
        v
    }

    /// Images of all words of length `r`, in [`Word::all`] order.
    pub fn all_word_images(&self, r: usize) -> Vec<(Word, MixedElement)> {
        let mut level = vec![(Word::default(), self.one())];
        for _ in 0..r {
            level = level
                .iter()
                .flat_map(|(w, img)| {
                    (0..self.rank()).map(move |i| (w.concat(&Word(vec![i])), img.mul(&self.images[i], &self.alg)))
                })
                .collect();
        }
        level
    }

    pub fn decide(&self, p: &FreeElement) -> Result<IdentityVerdict> {
        let image = self.eval(p)?;
        let warning = self.field.is_finite().then(|| FINITE_FIELD_WARNING.to_string());
        if image.is_zero() {
            return Ok(IdentityVerdict {
                is_identity: true,
                witness: None,
                image,
                warning,
            });
        }
        let witness = find_witness(&image, &self.field);
        Ok(IdentityVerdict {
            is_identity: false,
            witness,
            image,
            warning,
        })
    }

    /// Basis of the degree-`r` identities: the kernel on `T^r`.
    pub fn kernel_of_degree(&self, r: usize, cap: usize) -> Result<Vec<FreeElement>> {
        let n = self.rank();
        let rows = (n as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
        if rows > cap as u128 {
            return Err(Error::CapExceeded {
                rows: rows.min(usize::MAX as u128) as usize,
                cap,
            });
        }
        let images = self.all_word_images(r);
        let mut coords: BTreeMap<(Monomial, usize), usize> = BTreeMap::new();
        for (_, img) in &images {
            for (j, p) in img.entries.iter().enumerate() {
                for (mono, _) in p.terms() {
                    let next = coords.len();
                    coords.entry((mono.clone(), j)).or_insert(next);
                }
            }
        }
        let mut mat = ExactMatrix::zeros(coords.len(), images.len());
        for (col, (_, img)) in images.iter().enumerate() {
            for (j, p) in img.entries.iter().enumerate() {
                for (mono, c) in p.terms() {
                    mat.set(coords[&(mono.clone(), j)], col, c.clone());
                }
            }
        }
        let limit = r.max(crate::freealg::DEFAULT_DEGREE_LIMIT);
        Ok(kernel_basis(&mat)?
            .into_iter()
            .map(|v| {
                let terms = images.iter().zip(v).map(|((w, _), c)| (w.clone(), c));
                FreeElement::from_terms(n, terms).with_limit(limit)
            })
            .collect())
    }
}

/// A point where the first nonzero entry of `image` does not vanish,
/// chosen one variable at a time from `0, 1, -1, 2, -2, ...`.
fn find_witness(image: &MixedElement, field: &Field) -> Option<BTreeMap<String, Scalar>> {
    let target = image.entries.iter().find(|p| !p.is_zero())?;
    let mut values: BTreeMap<String, Scalar> = image.variables().into_iter().map(|v| (v, field.int(0))).collect();
    let vars: Vec<String> = target.variables().iter().map(|v| v.name().to_string()).collect();
    let mut current = target.clone();
    let budget = match field.characteristic() {
        0 => usize::MAX,
        p => p as usize,
    };
    for v in vars {
        let deg = current.terms().map(|(m, _)| m.exponent(&crate::exact::Var::new(&v))).max().unwrap_or(0);
        let tries = (deg as usize + 1).min(budget);
        let mut found = None;
        for k in 0..tries {
            let val = field.int(if k % 2 == 1 { (k as i64 + 1) / 2 } else { -(k as i64 / 2) });
            let single = BTreeMap::from([(v.clone(), val.clone())]);
            let next = current.substitute(&single).ok()?;
            if !next.is_zero() {
                found = Some((val, next));
                break;
            }
        }
        let (val, next) = found?;
        values.insert(v, val);
        current = next;
    }
    Some(values)
}

pub fn mu_alpha(p: &FreeElement, a: &CleftAlgebra) -> Result<MixedElement> {
    GenericMap::universal(a).eval(p)
}

pub fn is_identity_twisted(p: &FreeElement, a: &CleftAlgebra) -> Result<IdentityVerdict> {
    GenericMap::universal(a).decide(p)
}

pub fn is_identity_general(p: &FreeElement, a: &ComoduleAlgebra) -> Result<IdentityVerdict> {
    GenericMap::general(a)?.decide(p)
}

pub fn identities_of_degree(r: usize, a: &CleftAlgebra) -> Result<Vec<FreeElement>> {
    GenericMap::universal(a).kernel_of_degree(r, DEFAULT_ROW_CAP)
}

pub fn identities_of_degree_general(r: usize, a: &ComoduleAlgebra) -> Result<Vec<FreeElement>> {
    GenericMap::general(a)?.kernel_of_degree(r, DEFAULT_ROW_CAP)
}

/// Smallest `r ≤ max_r` with a nonzero identity of degree `r`, with the
/// kernel basis there.
pub fn minimal_identity_degree(a: &CleftAlgebra, max_r: usize) -> Result<Option<(usize, Vec<FreeElement>)>> {
    let map = GenericMap::universal(a);
    for r in 0..=max_r {
        let k = map.kernel_of_degree(r, DEFAULT_ROW_CAP)?;
        if !k.is_empty() {
            return Ok(Some((r, k)));
        }
    }
    Ok(None)
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// First `r` with `n^r > n·C(r+n-1, n-1)`, where words of degree `r` must
/// outnumber the coordinates of `S^r(t_H) ⊗ ᵅH`. `None` for `n < 2`.
pub fn dimension_bound_degree(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let n = n as u128;
    (1..).find(|&r| n.pow(r as u32) > n * binomial(r as u128 + n - 1, n - 1))
}

/// A failed check from [`check_ideal_properties`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "at")]
pub enum IdealViolation {
    Component(usize),
    Coideal(String),
    LeftProduct(usize),
    RightProduct(usize),
}

/// Checks that the homogeneous components of `p`, the parts `P_k` of
/// `δ(P) = Σ P_k ⊗ x_k`, and the products `Q P`, `P Q` for each sample `Q`
/// are identities.
pub fn check_ideal_properties(p: &FreeElement, a: &CleftAlgebra, samples: &[FreeElement]) -> Result<Vec<IdealViolation>> {
    let map = GenericMap::universal(a);
    let h = &**a.host();
    let zero = |q: &FreeElement| -> Result<bool> { Ok(map.eval(q)?.is_zero()) };
    let mut out = Vec::new();
    for (d, comp) in p.homogeneous_components() {
        if !zero(&comp)? {
            out.push(IdealViolation::Component(d));
        }
    }
    for (k, part) in p.coideal_parts(h) {
        if !zero(&part)? {
            out.push(IdealViolation::Coideal(h.label(k).to_string()));
        }
    }
    for (i, q) in samples.iter().enumerate() {
        let limit = p.limit().max(q.limit()).max(p.degree().unwrap_or(0) + q.degree().unwrap_or(0));
        let (p, q) = (p.clone().with_limit(limit), q.clone().with_limit(limit));
        if !zero(&q.mul(&p)?)? {
            out.push(IdealViolation::LeftProduct(i));
        }
        if !zero(&p.mul(&q)?)? {
            out.push(IdealViolation::RightProduct(i));
        }
    }
    Ok(out)
}

fn in_span(v: &SparseVec, basis: &[SparseVec], m: usize) -> Result<bool> {
    if v.is_zero() {
        return Ok(true);
    }
    if basis.is_empty() {
        return Ok(false);
    }
    let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| b.to_dense(m)).collect();
    let rows: Vec<Vec<Scalar>> = (0..m).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let mat = ExactMatrix::from_rows(rows)?;
    Ok(solve_linear(&mat, &v.to_dense(m))?.is_some())
}

/// Whether `μ_α(P)` lies in `k[t] ⊗ (ᵅH)^H` and in `k[t] ⊗ Z(ᵅH)`.
pub fn universal_image_flags(p: &FreeElement, a: &CleftAlgebra) -> Result<(bool, bool)> {
    let image = mu_alpha(p, a)?;
    let m = a.dim();
    let coinv = a.comod.coinvariants()?;
    let center = a.comod.center()?;
    let mut flags = (true, true);
    for v in image.by_monomial().values() {
        flags.0 &= in_span(v, &coinv, m)?;
        flags.1 &= in_span(v, &center, m)?;
    }
    Ok(flags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::{sweedler_cleft, sweedler_cleft_generic};
    use crate::parse::parse_expression;

    fn t(name: &str) -> MPoly {
        MPoly::var(name)
    }

    #[test]
    fn generator_images_on_sweedler() {
        let a = sweedler_cleft_generic();
        let map = GenericMap::universal(&a);
        let e = |entries: Vec<(usize, MPoly)>| {
            let mut m = MixedElement::zero(4);
            for (j, p) in entries {
                m.entries[j] = p;
            }
            m
        };
        assert_eq!(map.image_of_generator(0), &e(vec![(0, t("t_1"))]));
        assert_eq!(map.image_of_generator(1), &e(vec![(1, t("t_x"))]));
        assert_eq!(map.image_of_generator(2), &e(vec![(2, t("t_1")), (1, t("t_y"))]));
        assert_eq!(map.image_of_generator(3), &e(vec![(3, t("t_x")), (0, t("t_z"))]));
        let one = mu_alpha(&FreeElement::one(4), &a).unwrap();
        assert_eq!(one, e(vec![(0, MPoly::constant(Scalar::one()))]));
    }

    #[test]
    fn y_squared_image() {
        let a = sweedler_cleft_generic();
        let s = parse_expression("X[y]^2", a.host()).unwrap();
        let img = mu_alpha(&s, &a).unwrap();
        let v = |s: &str| MPoly::constant(Scalar::var(s));
        let expect = v("a")
            .mul(&t("t_y").pow(2))
            .add(&v("b").mul(&t("t_1")).mul(&t("t_y")))
            .add(&v("c").mul(&t("t_1").pow(2)));
        assert_eq!(img.entries[0], expect);
        assert!(img.entries[1..].iter().all(MPoly::is_zero));
    }

    #[test]
    fn x_is_not_an_identity() {
        let a = sweedler_cleft(&Scalar::one(), &Scalar::zero(), &Scalar::zero()).unwrap();
        let x = FreeElement::basis_generator(4, 1);
        let v = is_identity_twisted(&x, &a).unwrap();
        assert!(!v.is_identity);
        let w = v.witness.unwrap();
        assert_eq!(w, BTreeMap::from([("t_x".to_string(), Scalar::one())]));
        assert_eq!(universal_image_flags(&x, &a).unwrap(), (false, false));
        assert_eq!(universal_image_flags(&FreeElement::one(4), &a).unwrap(), (true, true));
    }

    #[test]
    fn low_degree_kernels_are_trivial() {
        let a = sweedler_cleft(&Scalar::one(), &Scalar::zero(), &Scalar::zero()).unwrap();
        assert!(identities_of_degree(0, &a).unwrap().is_empty());
        assert!(identities_of_degree(1, &a).unwrap().is_empty());
    }

    #[test]
    fn dimension_count() {
        assert_eq!(dimension_bound_degree(4), Some(4));
        assert_eq!(4u128.pow(4), 256);
        assert_eq!(4 * binomial(7, 3), 140);
        assert_eq!(dimension_bound_degree(1), None);
    }

    #[test]
    fn cap_is_enforced() {
        let a = sweedler_cleft(&Scalar::one(), &Scalar::zero(), &Scalar::zero()).unwrap();
        let map = GenericMap::universal(&a);
        assert_eq!(map.kernel_of_degree(3, 10), Err(Error::CapExceeded { rows: 64, cap: 10 }));
    }

    #[test]
    fn variables_are_sanitized() {
        assert_eq!(t_variable("x^2y"), "t_x2y");
        assert_eq!(t_variable("(123)"), "t_123");
    }
}
