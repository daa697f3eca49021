//! Text, LaTeX and JSON renderings of polynomials and tensors.
//!
//! Generator names come from a caller-supplied namer so that the algebra
//! layer stays independent of how structures are displayed.

use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::key::TypeKey;
use super::poly::{coeff_string, parse_coeff, Coeff, Monomial, Polynomial, Tensor2};
use crate::error::{Error, Result};

pub type Namer<'a> = &'a dyn Fn(&TypeKey) -> String;

pub fn wire_namer(k: &TypeKey) -> String {
    k.wire()
}

fn subscript(name: &str) -> String {
    if name.chars().count() == 1 {
        format!("t_{name}")
    } else {
        format!("t_{{{name}}}")
    }
}

fn monomial_text(m: &Monomial, namer: Namer<'_>, latex: bool) -> String {
    let parts: Vec<String> = m
        .powers()
        .into_iter()
        .map(|(k, e)| {
            let base = subscript(&namer(k));
            match (e, latex) {
                (1, _) => base,
                (_, true) => format!("{base}^{{{e}}}"),
                (_, false) => format!("{base}^{e}"),
            }
        })
        .collect();
    parts.join(" ")
}

fn coeff_abs_text(c: &Coeff, latex: bool) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else if latex {
        format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn term_body(c: &Coeff, m: &Monomial, namer: Namer<'_>, latex: bool) -> String {
    let mono = monomial_text(m, namer, latex);
    if m.is_one() {
        coeff_abs_text(c, latex)
    } else if c.abs().is_one() {
        mono
    } else {
        format!("{} {}", coeff_abs_text(c, latex), mono)
    }
}

fn poly_render(p: &Polynomial, namer: Namer<'_>, latex: bool) -> String {
    join_terms(p.terms().map(|(m, c)| (c.is_negative(), term_body(c, m, namer, latex))).collect())
}

pub fn poly_text(p: &Polynomial, namer: Namer<'_>) -> String {
    poly_render(p, namer, false)
}

pub fn poly_latex(p: &Polynomial, namer: Namer<'_>) -> String {
    poly_render(p, namer, true)
}

fn tensor_render(t: &Tensor2, namer: Namer<'_>, latex: bool) -> String {
    let side = |m: &Monomial| {
        if m.is_one() {
            "1".to_string()
        } else {
            monomial_text(m, namer, latex)
        }
    };
    let otimes = if latex { " \\otimes " } else { " ⊗ " };
    join_terms(
        t.terms()
            .map(|((l, r), c)| {
                let body = format!("{}{}{}", side(l), otimes, side(r));
                let body = if c.abs().is_one() { body } else { format!("{} {}", coeff_abs_text(c, latex), body) };
                (c.is_negative(), body)
            })
            .collect(),
    )
}

pub fn tensor_text(t: &Tensor2, namer: Namer<'_>) -> String {
    tensor_render(t, namer, false)
}

pub fn tensor_latex(t: &Tensor2, namer: Namer<'_>) -> String {
    tensor_render(t, namer, true)
}

fn keys_json(m: &Monomial) -> Value {
    Value::Array(m.factors().iter().map(|k| Value::String(k.wire())).collect())
}

/// `[{coeff: "p/q", factors: [typekey, ...]}, ...]` in monomial order.
pub fn poly_json(p: &Polynomial) -> Value {
    Value::Array(p.terms().map(|(m, c)| json!({"coeff": coeff_string(c), "factors": keys_json(m)})).collect())
}

/// `[{coeff, left: [...], right: [...]}, ...]`.
pub fn tensor_json(t: &Tensor2) -> Value {
    Value::Array(
        t.terms()
            .map(|((l, r), c)| json!({"coeff": coeff_string(c), "left": keys_json(l), "right": keys_json(r)}))
            .collect(),
    )
}

fn parse_keys(v: &Value) -> Result<Vec<TypeKey>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected an array of type keys".into()))?
        .iter()
        .map(|k| k.as_str().ok_or_else(|| Error::Parse("type key must be a string".into()))?.parse())
        .collect()
}

fn parse_json_coeff(v: &Value) -> Result<Coeff> {
    v.as_str().and_then(parse_coeff).ok_or_else(|| Error::Parse(format!("bad coefficient {v}")))
}

/// Inverse of [`poly_json`]. Factors are taken verbatim, singletons included.
pub fn poly_from_json(v: &Value) -> Result<Polynomial> {
    let items = v.as_array().ok_or_else(|| Error::Parse("polynomial JSON must be an array".into()))?;
    let mut p = Polynomial::zero();
    for item in items {
        let c = parse_json_coeff(&item["coeff"])?;
        let m = Monomial::from_keys_raw(parse_keys(&item["factors"])?);
        p.add_term(m, c);
    }
    Ok(p)
}

pub fn tensor_from_json(v: &Value) -> Result<Tensor2> {
    let items = v.as_array().ok_or_else(|| Error::Parse("tensor JSON must be an array".into()))?;
    let mut t = Tensor2::zero();
    for item in items {
        let c = parse_json_coeff(&item["coeff"])?;
        let l = Monomial::from_keys_raw(parse_keys(&item["left"])?);
        let r = Monomial::from_keys_raw(parse_keys(&item["right"])?);
        t.add_term(l, r, c);
    }
    Ok(t)
}
