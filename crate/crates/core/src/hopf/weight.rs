use std::collections::BTreeMap;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::HopfContext;
use crate::algebra::{frac, Monomial, Polynomial, TypeKey};
use crate::error::Result;

type Rule = dyn Fn(&TypeKey) -> Result<Polynomial> + Send + Sync;

/// An algebra map out of 𝒩_M, given by its values on generators.
///
/// The singleton type always maps to 1, so every weight is a character of
/// the underlying polynomial algebra.
#[derive(Clone)]
pub struct Weight {
    rule: Arc<Rule>,
}

impl Weight {
    pub fn from_fn(f: impl Fn(&TypeKey) -> Result<Polynomial> + Send + Sync + 'static) -> Weight {
        Weight { rule: Arc::new(f) }
    }

    /// t_α ↦ t_α.
    pub fn identity() -> Weight {
        Weight::from_fn(|k| Ok(Polynomial::generator(k.clone())))
    }

    /// u∘ε: every non-singleton generator goes to 0.
    pub fn counit() -> Weight {
        Weight::from_fn(|_| Ok(Polynomial::zero()))
    }

    /// Values from a table; absent generators go to 0.
    pub fn from_map(values: BTreeMap<TypeKey, Polynomial>) -> Weight {
        Weight::from_fn(move |k| Ok(values.get(k).cloned().unwrap_or_else(Polynomial::zero)))
    }

    /// Seeded random rationals `p/q` (|p| ≤ 5, 1 ≤ q ≤ 4) on every type of
    /// size 2..=`max_size`.
    pub fn random(ctx: &HopfContext, max_size: usize, seed: u64) -> Result<Weight> {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut values = BTreeMap::new();
        for n in 2..=max_size {
            for key in ctx.types(n)? {
                let c = frac(rng.gen_range(-5..=5), rng.gen_range(1..=4));
                values.insert(key, Polynomial::constant(c));
            }
        }
        Ok(Weight::from_map(values))
    }

    /// The recursive antipode of `ctx`.
    pub fn antipode(ctx: Arc<HopfContext>) -> Weight {
        Weight::from_fn(move |k| ctx.antipode_recursive(k))
    }

    /// `self ∘ inner`: apply `inner`, then extend `self` multiplicatively.
    pub fn after(&self, inner: &Weight) -> Weight {
        let (outer, inner) = (self.clone(), inner.clone());
        Weight::from_fn(move |k| outer.eval_poly(&inner.eval(k)?))
    }

    /// Convolution product `self ∗ other` over `ctx`.
    pub fn convolution(&self, other: &Weight, ctx: Arc<HopfContext>) -> Weight {
        let (f, g) = (self.clone(), other.clone());
        Weight::from_fn(move |k| convolve(&ctx, &f, &g, k))
    }

    pub fn eval(&self, key: &TypeKey) -> Result<Polynomial> {
        if key.is_singleton() {
            return Ok(Polynomial::one());
        }
        (self.rule)(key)
    }

    pub fn eval_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let mut out = Polynomial::one();
        for k in m.factors() {
            out = out * self.eval(k)?;
        }
        Ok(out)
    }

    pub fn eval_poly(&self, p: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            out += self.eval_monomial(m)?.scale(c);
        }
        Ok(out)
    }
}

/// (f ∗ g)(t_α) = μ (f ⊗ g) Δ(t_α).
pub fn convolve(ctx: &HopfContext, f: &Weight, g: &Weight, key: &TypeKey) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for ((l, r), c) in ctx.coproduct(key)?.terms() {
        out += (f.eval_monomial(l)? * g.eval_monomial(r)?).scale(c);
    }
    Ok(out)
}
