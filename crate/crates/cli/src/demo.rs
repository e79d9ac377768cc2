//! The Sweedler computations for `A_{a,b,c}`, replayed and checked.

use serde_json::{json, Value};

use hopfpi::cocycle::{sweedler_cleft, CleftAlgebra};
use hopfpi::exact::{MPoly, Scalar};
use hopfpi::freealg::FreeElement;
use hopfpi::ident::{is_identity_twisted, mu_alpha, universal_image_flags, MixedElement};
use hopfpi::io::mixed_json;
use hopfpi::parse::parse_expression;

/// `E`, `R`, `S`, `T`, `U` in the expression syntax.
pub const SHORTHANDS: [(&str, &str); 5] = [
    ("E", "X[1]"),
    ("R", "X[x]^2"),
    ("S", "X[y]^2"),
    ("T", "(X[x]*X[y] + X[y]*X[x])"),
    ("U", "X[x]*(X[x]*X[z] + X[z]*X[x])"),
];

/// Replaces the single-letter shorthands by their definitions.
pub fn expand(src: &str) -> String {
    let mut out = String::new();
    for ch in src.chars() {
        match SHORTHANDS.iter().find(|(k, _)| k.starts_with(ch)) {
            Some((_, v)) => out.push_str(v),
            None => out.push(ch),
        }
    }
    out
}

pub fn element(a: &CleftAlgebra, src: &str) -> hopfpi::Result<FreeElement> {
    parse_expression(&expand(src), a.host())
}

/// `T^2 - 4RS - ((b^2 - 4ac)/a) E^2 R`.
pub fn discriminant_identity(alg: &CleftAlgebra, a: &Scalar, b: &Scalar, c: &Scalar) -> hopfpi::Result<FreeElement> {
    let disc = (&(b * b) - &(&Scalar::int(4) * &(a * c))).div(a)?;
    Ok(element(alg, "T^2 - 4*R*S")?.sub(&element(alg, "E^2*R")?.scale(&disc)))
}

/// `ERZ - RXY - (EU - RT)/2`.
pub fn second_identity(alg: &CleftAlgebra) -> hopfpi::Result<FreeElement> {
    element(alg, "E*R*X[z] - R*X[x]*X[y] - (E*U - R*T)/2")
}

fn t(name: &str) -> MPoly {
    MPoly::var(name)
}

fn k(s: &Scalar) -> MPoly {
    MPoly::constant(s.clone())
}

fn at(entries: &[(usize, MPoly)]) -> MixedElement {
    let mut m = MixedElement::zero(4);
    for (j, p) in entries {
        m.entries[*j] = m.entries[*j].add(p);
    }
    m
}

struct Checks {
    list: Vec<Value>,
    ok: bool,
}

impl Checks {
    fn push(&mut self, name: &str, pass: bool, detail: Value) {
        self.ok &= pass;
        self.list.push(json!({ "check": name, "pass": pass, "detail": detail }));
    }
}

/// Runs every check; the report's `ok` is true iff all of them pass.
pub fn demo_sweedler(a: &Scalar, b: &Scalar, c: &Scalar) -> hopfpi::Result<Value> {
    let alg = sweedler_cleft(a, b, c)?;
    let labels = alg.comod.alg.labels.clone();
    let mut checks = Checks { list: Vec::new(), ok: true };

    let generators = [
        ("X[1]", at(&[(0, t("t_1"))])),
        ("X[x]", at(&[(1, t("t_x"))])),
        ("X[y]", at(&[(2, t("t_1")), (1, t("t_y"))])),
        ("X[z]", at(&[(3, t("t_x")), (0, t("t_z"))])),
    ];
    for (src, expect) in &generators {
        let img = mu_alpha(&element(&alg, src)?, &alg)?;
        checks.push(&format!("image of {src}"), &img == expect, mixed_json(&img, &labels));
    }

    let two = Scalar::int(2);
    let closed_forms = [
        ("R", k(a).mul(&t("t_x").pow(2))),
        (
            "S",
            k(a).mul(&t("t_y").pow(2))
                .add(&k(b).mul(&t("t_1")).mul(&t("t_y")))
                .add(&k(c).mul(&t("t_1").pow(2))),
        ),
        ("T", t("t_x").mul(&k(&(&two * a)).mul(&t("t_y")).add(&k(b).mul(&t("t_1"))))),
        ("U", k(a).mul(&t("t_x").pow(2)).mul(&k(&two).mul(&t("t_z")).add(&k(b).mul(&t("t_x"))))),
    ];
    for (name, coeff) in &closed_forms {
        let img = mu_alpha(&element(&alg, name)?, &alg)?;
        checks.push(&format!("image of {name}"), img == at(&[(0, coeff.clone())]), mixed_json(&img, &labels));
    }

    let host_labels = alg.host().labels().to_vec();
    let d = discriminant_identity(&alg, a, b, c)?;
    let second = second_identity(&alg)?;
    for (name, p) in [("first identity", &d), ("second identity", &second)] {
        let v = is_identity_twisted(p, &alg)?;
        checks.push(name, v.is_identity, json!(p.display(&host_labels).to_string()));
    }
    let image_of_d = mu_alpha(&d, &alg)?;
    checks.push("D vanishes", image_of_d.is_zero(), mixed_json(&image_of_d, &labels));

    for (name, _) in SHORTHANDS {
        let (coinvariant, central) = universal_image_flags(&element(&alg, name)?, &alg)?;
        checks.push(
            &format!("{name} is central and coinvariant"),
            coinvariant && central,
            json!({ "coinvariant": coinvariant, "central": central }),
        );
    }

    Ok(json!({
        "parameters": { "a": a.to_string(), "b": b.to_string(), "c": c.to_string() },
        "checks": checks.list,
        "ok": checks.ok,
    }))
}
