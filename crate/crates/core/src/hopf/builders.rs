use crate::error::{Error, Result};
use crate::exact::{Field, Scalar};
use crate::sparse::{SparseVec, Tensor2};

use super::algebra::FinDimAlgebra;
use super::group::FiniteGroup;
use super::presentation::{word_image, Presentation, Rule, Word};
use super::HopfAlgebra;

/// The one-dimensional Hopf algebra `k`.
pub fn trivial_hopf() -> HopfAlgebra {
    group_algebra(&FiniteGroup::cyclic(1))
}

/// `k[G]`: group-like basis, `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &FiniteGroup) -> HopfAlgebra {
    let n = g.order();
    let mult = (0..n)
        .map(|a| (0..n).map(|b| SparseVec::basis(g.mul(a, b))).collect())
        .collect();
    let alg = FinDimAlgebra::new(g.labels().to_vec(), mult, SparseVec::basis(g.identity()))
        .expect("group table");
    let comult = (0..n).map(|a| Tensor2::single((a, a), Scalar::one())).collect();
    let counit = vec![Scalar::one(); n];
    let antipode = (0..n).map(|a| SparseVec::basis(g.inverse(a))).collect();
    HopfAlgebra::new(Field::Rationals, alg, comult, counit, antipode).expect("group algebra")
}

/// `k^G`, functions on `G` with basis of point indicators `e_g`.
pub fn dual_group_algebra(g: &FiniteGroup) -> HopfAlgebra {
    let n = g.order();
    let labels = g.labels().iter().map(|l| format!("e_{l}")).collect();
    let mult = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| if a == b { SparseVec::basis(a) } else { SparseVec::new() })
                .collect()
        })
        .collect();
    let unit = (0..n).map(|a| (a, Scalar::one())).collect();
    let alg = FinDimAlgebra::new(labels, mult, unit).expect("function algebra");
    let mut comult = vec![Tensor2::new(); n];
    for a in 0..n {
        for b in 0..n {
            comult[g.mul(a, b)].add_term((a, b), Scalar::one());
        }
    }
    let counit = (0..n)
        .map(|a| if a == g.identity() { Scalar::one() } else { Scalar::zero() })
        .collect();
    let antipode = (0..n).map(|a| SparseVec::basis(g.inverse(a))).collect();
    HopfAlgebra::new(Field::Rationals, alg, comult, counit, antipode).expect("dual group algebra")
}

/// Looks up a built-in Hopf algebra: `trivial`, `sweedler`, `taft:N`,
/// `group:G` or `dual:G` with `G` one of `zN`, `s3`. Only `sweedler` uses
/// `field`.
pub fn builtin(name: &str, field: &Field) -> Result<HopfAlgebra> {
    let group = |g: &str| -> Result<FiniteGroup> {
        if g == "s3" {
            return Ok(FiniteGroup::symmetric3());
        }
        g.strip_prefix('z')
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .map(FiniteGroup::cyclic)
            .ok_or_else(|| Error::Format(format!("unknown group `{g}`")))
    };
    match name.split_once(':') {
        None if name == "trivial" => Ok(trivial_hopf()),
        None if name == "sweedler" => sweedler_over(field),
        Some(("taft", n)) => {
            let n: u32 = n
                .parse()
                .ok()
                .filter(|&n| n >= 2)
                .ok_or_else(|| Error::Format(format!("bad Taft order `{n}`")))?;
            let q = if n == 2 { Scalar::int(-1) } else { crate::exact::cyclotomic_field(n).1 };
            taft(n as usize, &q)
        }
        Some(("group", g)) => Ok(group_algebra(&group(g)?)),
        Some(("dual", g)) => Ok(dual_group_algebra(&group(g)?)),
        _ => Err(Error::Format(format!("unknown built-in `{name}`"))),
    }
}

/// Sweedler's four-dimensional Hopf algebra over Q, basis `(1, x, y, z = xy)`.
pub fn sweedler() -> HopfAlgebra {
    sweedler_over(&Field::Rationals).expect("Q has characteristic 0")
}

/// Sweedler's algebra over `field`: `x² = 1, xy + yx = 0, y² = 0`.
pub fn sweedler_over(field: &Field) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let k = |v: i64| field.int(v);
    let (x, y) = (0, 1);
    let pres = Presentation::new(vec![
        Rule::new(vec![x, x], vec![(vec![], k(1))]),
        Rule::new(vec![y, x], vec![(vec![x, y], k(-1))]),
        Rule::new(vec![y, y], vec![]),
    ]);
    let basis: Vec<Word> = vec![vec![], vec![x], vec![y], vec![x, y]];
    let labels = ["1", "x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let alg = pres.algebra(&basis, labels)?;
    let (one, xb, yb, zb) = (0, 1, 2, 3);
    let t = |terms: &[(usize, usize, i64)]| -> Tensor2 { terms.iter().map(|&(a, b, c)| ((a, b), k(c))).collect() };
    let comult = vec![
        t(&[(one, one, 1)]),
        t(&[(xb, xb, 1)]),
        t(&[(one, yb, 1), (yb, xb, 1)]),
        t(&[(xb, zb, 1), (zb, one, 1)]),
    ];
    let counit = vec![k(1), k(1), k(0), k(0)];
    let antipode = vec![
        SparseVec::single(one, k(1)),
        SparseVec::single(xb, k(1)),
        SparseVec::single(zb, k(1)),
        SparseVec::single(yb, k(-1)),
    ];
    HopfAlgebra::new(field.clone(), alg, comult, counit, antipode)
}

fn taft_label(i: usize, j: usize) -> String {
    let part = |s: &str, e: usize| match e {
        0 => String::new(),
        1 => s.to_string(),
        _ => format!("{s}^{e}"),
    };
    let l = format!("{}{}", part("x", i), part("y", j));
    if l.is_empty() {
        "1".into()
    } else {
        l
    }
}

/// The Taft algebra of dimension `n²`: `x^n = 1, yx = q xy, y^n = 0`, with
/// `Δ(x) = x ⊗ x`, `Δ(y) = 1 ⊗ y + y ⊗ x`. Basis `x^i y^j` at index
/// `i + n j`.
pub fn taft(n: usize, q: &Scalar) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(Error::NotPrimitiveRoot(q.to_string(), n as u32));
    }
    if !q.is_numeric() || !q.pow(n as u32).is_one() || (1..n).any(|m| q.pow(m as u32).is_one()) {
        return Err(Error::NotPrimitiveRoot(q.to_string(), n as u32));
    }
    let field = q.base_field()?;
    let (x, y) = (0, 1);
    let pres = Presentation::new(vec![
        Rule::new(vec![x; n], vec![(vec![], Scalar::one())]),
        Rule::new(vec![y, x], vec![(vec![x, y], q.clone())]),
        Rule::new(vec![y; n], vec![]),
    ]);
    let mut basis = Vec::with_capacity(n * n);
    let mut labels = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            let mut w = vec![x; i];
            w.extend(std::iter::repeat(y).take(j));
            basis.push(w);
            labels.push(taft_label(i, j));
        }
    }
    let alg = pres.algebra(&basis, labels)?;
    let idx = |i: usize, j: usize| i + n * j;
    let one = idx(0, 0);

    let dx = Tensor2::single((idx(1, 0), idx(1, 0)), Scalar::one());
    let dy: Tensor2 = [((one, idx(0, 1)), Scalar::one()), ((idx(0, 1), idx(1, 0)), Scalar::one())]
        .into_iter()
        .collect();
    let comult = basis
        .iter()
        .map(|w| {
            word_image(w, &[dx.clone(), dy.clone()], Tensor2::single((one, one), Scalar::one()), |a, b| {
                alg.mul_tensor(&alg, a, b)
            })
        })
        .collect();

    let counit = basis
        .iter()
        .map(|w| word_image(w, &[Scalar::one(), Scalar::zero()], Scalar::one(), |a, b| a * b))
        .collect();

    // S(x) = x^{n-1}, S(y) = -y x^{n-1}; S is an anti-homomorphism.
    let sx = SparseVec::basis(idx(n - 1, 0));
    let sy = alg.mul(&SparseVec::basis(idx(0, 1)), &sx).scale(&Scalar::int(-1));
    let antipode = basis
        .iter()
        .map(|w| {
            let rev: Vec<usize> = w.iter().rev().copied().collect();
            word_image(&rev, &[sx.clone(), sy.clone()], SparseVec::basis(one), |a, b| alg.mul(a, b))
        })
        .collect();

    HopfAlgebra::new(field, alg, comult, counit, antipode)
}
