//! Browser bindings. Every function returns a JSON string; failures come
//! back as `{"error": "..."}` so the page never has to catch.

use std::sync::Arc;

use serde_json::{json, Map, Value};
use wasm_bindgen::prelude::*;

use hopfpi::cocycle::{sweedler_cleft, CleftAlgebra, TwoCocycle};
use hopfpi::exact::{Field, Scalar};
use hopfpi::genbase::sigma;
use hopfpi::hopf::builtin;
use hopfpi::ident::{is_identity_twisted, mu_alpha};
use hopfpi::io::{fraction_str, mixed_json};
use hopfpi::parse::{parse_expression, parse_scalar};

fn param(src: &str, name: &str) -> hopfpi::Result<Scalar> {
    let src = src.trim();
    // a blank field keeps the parameter symbolic
    parse_scalar(if src.is_empty() { name } else { src }, &Field::Rationals)
}

fn sweedler_family(a: &str, b: &str, c: &str) -> hopfpi::Result<CleftAlgebra> {
    sweedler_cleft(&param(a, "a")?, &param(b, "b")?, &param(c, "c")?)
}

fn respond(r: hopfpi::Result<Value>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e.to_string() })).to_string()
}

/// `μ_α` of an expression over `A_{a,b,c}`.
#[wasm_bindgen]
pub fn universal_image(a: &str, b: &str, c: &str, expr: &str) -> String {
    respond((|| {
        let alg = sweedler_family(a, b, c)?;
        let p = parse_expression(expr, alg.host())?;
        let img = mu_alpha(&p, &alg)?;
        Ok(json!({
            "expression": p.display(alg.host().labels()).to_string(),
            "image": mixed_json(&img, &alg.comod.alg.labels),
            "text": img.display(&alg.comod.alg.labels),
        }))
    })())
}

/// Whether an expression is an identity for `A_{a,b,c}`, with a witness
/// point when it is not.
#[wasm_bindgen]
pub fn check_identity(a: &str, b: &str, c: &str, expr: &str) -> String {
    respond((|| {
        let alg = sweedler_family(a, b, c)?;
        let p = parse_expression(expr, alg.host())?;
        let v = is_identity_twisted(&p, &alg)?;
        let witness = v.witness.as_ref().map(|w| {
            w.iter()
                .map(|(k, s)| (k.clone(), Value::String(s.to_string())))
                .collect::<Map<_, _>>()
        });
        Ok(json!({
            "expression": p.display(alg.host().labels()).to_string(),
            "is_identity": v.is_identity,
            "witness": witness,
        }))
    })())
}

/// `σ` for the trivial cocycle on a built-in Hopf algebra, entries as
/// `"numerator | denominator"`.
#[wasm_bindgen]
pub fn sigma_table(name: &str) -> String {
    respond((|| {
        let h = Arc::new(builtin(name.trim(), &Field::Rationals)?);
        let cocycle = TwoCocycle::trivial(h.clone());
        let table = sigma(&cocycle)?;
        let labels = h.labels();
        let rows: Vec<Value> = table
            .sigma
            .iter()
            .enumerate()
            .map(|(i, row)| {
                json!({
                    "x": labels[i],
                    "values": row.iter().map(fraction_str).collect::<Vec<_>>(),
                })
            })
            .collect();
        Ok(json!({ "labels": labels, "rows": rows }))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn image_of_s_at_one_two_three() {
        let v = parse(&universal_image("1", "2", "3", "X[y]^2"));
        assert_eq!(v["image"]["u_1"], "3*t_1^2 + 2*t_1*t_y + t_y^2");
    }

    #[test]
    fn blank_parameters_are_symbolic() {
        let v = parse(&universal_image("", "", "", "X[x]^2"));
        assert_eq!(v["image"]["u_1"], "a*t_x^2");
    }

    #[test]
    fn identity_and_witness() {
        let v = parse(&check_identity("1", "0", "0", "X[1]*X[x] - X[x]*X[1]"));
        assert_eq!(v["is_identity"], true);
        let v = parse(&check_identity("1", "0", "0", "X[y]"));
        assert_eq!(v["is_identity"], false);
        assert!(v["witness"].is_object());
    }

    #[test]
    fn errors_are_reported_as_json() {
        let v = parse(&check_identity("0", "0", "0", "X[x]"));
        assert!(v["error"].is_string());
        let v = parse(&sigma_table("nothing"));
        assert!(v["error"].is_string());
    }

    #[test]
    fn z3_sigma_rows() {
        let v = parse(&sigma_table("group:z3"));
        assert_eq!(v["rows"][1]["values"][1], "t_g^2 | t_g2");
    }
}
