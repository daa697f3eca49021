//! Antipode algorithms behind one trait, selected by name at runtime.

use std::sync::Arc;

use crate::algebra::{Polynomial, TypeKey};
use crate::error::{Error, Result};
use crate::hopf::HopfContext;
use crate::schroeder::{antipode_colorings, antipode_schroeder, ColoringRule};

pub trait AntipodeMethod: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Whether the method has a formula for the operad of `ctx`.
    fn supports(&self, _ctx: &HopfContext) -> bool {
        true
    }

    fn antipode(&self, ctx: &HopfContext, key: &TypeKey) -> Result<Polynomial>;

    /// S extended as an algebra map.
    fn antipode_poly(&self, ctx: &HopfContext, p: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            let mut term = Polynomial::one();
            for k in m.factors() {
                term = term * self.antipode(ctx, k)?;
            }
            out += term.scale(c);
        }
        Ok(out)
    }
}

/// The convolution-inverse recursion over proper factorizations.
pub struct Recursive;

/// The signed sum over enriched Schröder trees.
pub struct Schroeder;

/// The signed sum over admissible edge colorings.
pub struct Colorings;

impl AntipodeMethod for Recursive {
    fn name(&self) -> &'static str {
        "recursive"
    }

    fn description(&self) -> &'static str {
        "S(t) = -t - sum over proper factorizations of S(t_a) t_m'"
    }

    fn antipode(&self, ctx: &HopfContext, key: &TypeKey) -> Result<Polynomial> {
        ctx.antipode_recursive(key)
    }
}

impl AntipodeMethod for Schroeder {
    fn name(&self) -> &'static str {
        "schroeder"
    }

    fn description(&self) -> &'static str {
        "signed sum over M-enriched Schroeder trees"
    }

    fn antipode(&self, ctx: &HopfContext, key: &TypeKey) -> Result<Polynomial> {
        antipode_schroeder(ctx, key)
    }
}

impl AntipodeMethod for Colorings {
    fn name(&self) -> &'static str {
        "colorings"
    }

    fn description(&self) -> &'static str {
        "signed sum over admissible edge colorings (trees, graphs, pointed graphs)"
    }

    fn supports(&self, ctx: &HopfContext) -> bool {
        ColoringRule::for_species(ctx.species()).is_ok()
    }

    fn antipode(&self, ctx: &HopfContext, key: &TypeKey) -> Result<Polynomial> {
        antipode_colorings(ctx, key)
    }
}

type Factory = fn() -> Arc<dyn AntipodeMethod>;

/// Name-keyed table of antipode methods.
pub struct AntipodeRegistry {
    entries: Vec<(&'static str, Factory)>,
}

impl AntipodeRegistry {
    pub fn empty() -> Self {
        AntipodeRegistry { entries: vec![] }
    }

    pub fn standard() -> Self {
        let mut r = AntipodeRegistry::empty();
        r.register("recursive", || Arc::new(Recursive));
        r.register("schroeder", || Arc::new(Schroeder));
        r.register("colorings", || Arc::new(Colorings));
        r
    }

    pub fn register(&mut self, name: &'static str, factory: Factory) {
        self.entries.retain(|(n, _)| *n != name);
        self.entries.push((name, factory));
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn AntipodeMethod>> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, f)| f())
            .ok_or_else(|| Error::UnknownName(format!("antipode method {name}; known: {}", self.names().join(", "))))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|(n, _)| *n).collect()
    }
}

pub fn method_by_name(name: &str) -> Result<Arc<dyn AntipodeMethod>> {
    AntipodeRegistry::standard().get(name)
}
