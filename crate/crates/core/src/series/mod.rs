//! Truncated exponential generating series with polynomial coefficients.
//!
//! `coeffs[n]` is the coefficient of `xⁿ/n!`. All operations keep the
//! truncation order of their inputs.

mod bell;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};

pub use bell::{
    bell_partial, falling_factorial_bell_sum, haiman_schmitt, lagrange_pointed, pointed_bell_sides, pointed_generator,
    set_generator,
};

use crate::algebra::render::{poly_json, poly_latex, poly_text, Namer};
use crate::algebra::{rat, Coeff, Polynomial, TypeKey};
use crate::error::{Error, Result};
use crate::hopf::{HopfContext, Weight};
use crate::structures::Label;

pub(crate) fn factorial(n: usize) -> Coeff {
    (1..=n as i64).fold(Coeff::one(), |acc, i| acc * rat(i))
}

pub(crate) fn binomial(n: usize, k: usize) -> Coeff {
    if k > n {
        return Coeff::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Polynomial>,
}

impl PowerSeries {
    /// Zero series truncated at `x^order`.
    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![Polynomial::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Polynomial::one(), order)
    }

    pub fn constant(c: Polynomial, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The identity series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Polynomial::one();
        }
        s
    }

    /// From exponential coefficients `a₀, a₁, …`; missing ones are zero.
    pub fn from_coeffs(coeffs: Vec<Polynomial>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `xⁿ/n!` (zero past the truncation).
    pub fn coeff(&self, n: usize) -> Polynomial {
        self.coeffs.get(n).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// Coefficient of plain `xⁿ`.
    pub fn ordinary_coeff(&self, n: usize) -> Polynomial {
        self.coeff(n).scale(&(Coeff::one() / factorial(n)))
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    fn common(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common(other);
        PowerSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common(other);
        PowerSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// Exponential product: `cₙ = Σ C(n,k) aₖ bₙ₋ₖ`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common(other);
        let coeffs = (0..=n)
            .map(|i| {
                let mut c = Polynomial::zero();
                for k in 0..=i {
                    if self.coeffs[k].is_zero() || other.coeffs[i - k].is_zero() {
                        continue;
                    }
                    c += (&self.coeffs[k] * &other.coeffs[i - k]).scale(&binomial(i, k));
                }
                c
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// Non-negative power.
    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one(self.order());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0] != Polynomial::one() {
            return Err(Error::NonInvertible);
        }
        let n = self.order();
        let mut b = vec![Polynomial::zero(); n + 1];
        b[0] = Polynomial::one();
        for i in 1..=n {
            let mut c = Polynomial::zero();
            for k in 1..=i {
                c += (&self.coeffs[k] * &b[i - k]).scale(&binomial(i, k));
            }
            b[i] = -c;
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// Integer power; negative exponents need constant term 1.
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as usize))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs() as usize))
        }
    }

    /// `f(x)/x`, defined when `a₀ = 0`; loses one order.
    pub fn div_x(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Range("series has a constant term; cannot divide by x".into()));
        }
        let n = self.order().saturating_sub(1);
        // xⁿ⁺¹/(n+1)! ÷ x = (1/(n+1)) xⁿ/n!
        let coeffs = (0..=n).map(|i| self.coeff(i + 1).scale(&(Coeff::one() / rat(i as i64 + 1)))).collect();
        Ok(PowerSeries { coeffs })
    }

    /// `self ∘ g`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::NonDeltaComposition);
        }
        let n = self.common(g);
        let mut out = Self::zero(n);
        let mut power = Self::one(n);
        for k in 0..=n {
            if !self.coeffs[k].is_zero() {
                let c = Self::constant(self.coeffs[k].clone(), n).scale(&(Coeff::one() / factorial(k)));
                out = out.add(&c.mul(&power));
            }
            power = power.mul(&g.truncate(n));
        }
        Ok(out)
    }

    /// Compositional inverse of a series `x + …`.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 || self.coeffs[1] != Polynomial::one() {
            return Err(Error::NonInvertible);
        }
        let n = self.order();
        let mut r = Self::x(n);
        // The n-th coefficient of f∘r is rₙ plus terms in r₂..rₙ₋₁.
        for i in 2..=n {
            let partial = self.compose(&r)?;
            r.coeffs[i] = -partial.coeffs[i].clone();
        }
        Ok(r)
    }

    pub fn is_delta(&self) -> bool {
        self.coeffs[0].is_zero() && self.order() >= 1 && self.coeffs[1] == Polynomial::one()
    }

    /// `x + Σ cₙ xⁿ/n!` with plain-text coefficients.
    pub fn text(&self, namer: Namer<'_>) -> String {
        self.render(namer, false)
    }

    pub fn latex(&self, namer: Namer<'_>) -> String {
        self.render(namer, true)
    }

    fn render(&self, namer: Namer<'_>, latex: bool) -> String {
        let mut parts = vec![];
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = if latex { poly_latex(c, namer) } else { poly_text(c, namer) };
            let xn = match (n, latex) {
                (0, _) => String::new(),
                (1, _) => "x".to_string(),
                (_, false) => format!("x^{n}/{n}!"),
                (_, true) => format!("\\frac{{x^{{{n}}}}}{{{n}!}}"),
            };
            let part = if n == 0 {
                body
            } else if *c == Polynomial::one() {
                xn
            } else if c.len() == 1 {
                format!("{body} {xn}")
            } else {
                format!("({body}) {xn}")
            };
            parts.push(part);
        }
        let order = self.order() + 1;
        let tail = if latex { format!("O(x^{{{order}}})") } else { format!("O(x^{order})") };
        parts.push(tail);
        parts.join(" + ").replace("+ -", "- ")
    }

    /// `{order, coeffs: [polynomial JSON, …]}` indexed by n.
    pub fn json(&self) -> Value {
        json!({"order": self.order(), "coeffs": self.coeffs.iter().map(poly_json).collect::<Vec<_>>()})
    }
}

impl std::fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.text(&crate::algebra::render::wire_namer))
    }
}

/// `M^ω(x) = x + Σₙ (Σ_{m ∈ M[n]} ω(t_{τ(m)})) xⁿ/n!`, summed over labelled
/// structures so no automorphism counts are needed.
pub fn m_series(ctx: &HopfContext, w: &Weight, order: usize) -> Result<PowerSeries> {
    let mut s = PowerSeries::zero(order);
    for n in 1..=order {
        let labels: Vec<Label> = (1..=n as Label).collect();
        let mut counts: BTreeMap<TypeKey, i64> = BTreeMap::new();
        for m in ctx.operad().enumerate(&labels, ctx.caps())? {
            *counts.entry(ctx.key_of(&m)?).or_default() += 1;
        }
        let mut c = Polynomial::zero();
        for (key, k) in counts {
            c += w.eval(&key)?.scale(&rat(k));
        }
        s.coeffs[n] = c;
    }
    Ok(s)
}
