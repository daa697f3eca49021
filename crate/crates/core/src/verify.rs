//! Invariant suites, each a list of named checks with the first
//! counterexample recorded on failure.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{rat, Polynomial};
use crate::antipode::AntipodeRegistry;
use crate::ck::{
    b_minus_morphism_check, ck_coassociativity_sides, edge_bicolorings, forest_vertex_bicolorings, move_down, move_up,
};
use crate::error::{Error, Result};
use crate::hopf::{convolve, counit, HopfContext, Weight};
use crate::operads::{is_prime, operad_by_name, Operad};
use crate::posets::{all_quotients, build_poset, incidence_coproduct, POSET_CAP};
use crate::schroeder::{
    admissible_colorings, coloring_of_tree, enumerate_schroeder, eta_hat, phi, phi_inv, schroeder_from_coloring,
    ColoringRule,
};
use crate::series::{
    falling_factorial_bell_sum, haiman_schmitt, lagrange_pointed, m_series, pointed_bell_sides, PowerSeries,
};
use crate::structures::{decode_key, partitions, Caps, Label, PartitionFilter, Species, Structure};

/// Operads covered when no single one is requested.
pub const DEFAULT_OPERADS: [&str; 7] = ["e+", "e-pointed", "arb", "arb-l", "arb-e", "gr", "grp"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    AntipodeAgreement,
    Bijections,
    Series,
    Posets,
    Ck,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Axioms, Suite::AntipodeAgreement, Suite::Bijections, Suite::Series, Suite::Posets, Suite::Ck];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::AntipodeAgreement => "antipode-agreement",
            Suite::Bijections => "bijections",
            Suite::Series => "series",
            Suite::Posets => "posets",
            Suite::Ck => "ck",
        }
    }

    pub fn from_name(name: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name).ok_or_else(|| {
            let known: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            Error::UnknownName(format!("suite {name}; known: {}", known.join(", ")))
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Overrides every per-operad default size.
    pub max_size: Option<usize>,
    /// Restricts operad-indexed checks to one operad.
    pub operad: Option<String>,
    /// Series truncation order.
    pub order: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_size: None, operad: None, order: 6, seed: 7 }
    }
}

impl VerifyOptions {
    fn operads(&self, allowed: &[&'static str]) -> Result<Vec<Arc<dyn Operad>>> {
        match &self.operad {
            Some(name) => Ok(vec![operad_by_name(name)?]),
            None => allowed.iter().map(|n| operad_by_name(n)).collect(),
        }
    }

    fn size(&self, species: Species, sets_and_trees: usize, graphs: usize) -> usize {
        self.max_size.unwrap_or(if species.is_graph() { graphs } else { sets_and_trees })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "{status}  {} ({} cases, {} ms)", c.name, c.cases, c.millis)?;
            if let Some(x) = &c.counterexample {
                writeln!(f, "      counterexample: {x}")?;
            }
        }
        write!(f, "{}: {}", self.suite, if self.passed { "pass" } else { "FAIL" })
    }
}

/// Why a check stopped early.
enum Fail {
    Counterexample(String),
    Error(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Error(e)
    }
}

type Outcome = std::result::Result<(), Fail>;

/// Case counter handed to each check body.
struct Cases {
    count: usize,
}

impl Cases {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) -> Outcome {
        self.count += 1;
        if ok {
            Ok(())
        } else {
            Err(Fail::Counterexample(what()))
        }
    }
}

struct Builder {
    checks: Vec<Check>,
}

impl Builder {
    fn run(&mut self, name: impl Into<String>, body: impl FnOnce(&mut Cases) -> Outcome) {
        let start = Instant::now();
        let mut cases = Cases { count: 0 };
        let counterexample = match body(&mut cases) {
            Ok(()) => None,
            Err(Fail::Counterexample(x)) => Some(x),
            Err(Fail::Error(e)) => Some(format!("error: {e}")),
        };
        self.checks.push(Check {
            name: name.into(),
            cases: cases.count,
            passed: counterexample.is_none(),
            counterexample,
            millis: start.elapsed().as_millis(),
        });
    }

    fn finish(self, suite: Suite) -> Report {
        Report { suite: suite.name().into(), passed: self.checks.iter().all(|c| c.passed), checks: self.checks }
    }
}

/// Runs one suite.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Report> {
    let mut b = Builder { checks: vec![] };
    match suite {
        Suite::Axioms => axioms(&mut b, opts)?,
        Suite::AntipodeAgreement => agreement(&mut b, opts)?,
        Suite::Bijections => bijections(&mut b, opts)?,
        Suite::Series => series(&mut b, opts),
        Suite::Posets => posets(&mut b, opts)?,
        Suite::Ck => ck(&mut b, opts),
    }
    Ok(b.finish(suite))
}

fn axioms(b: &mut Builder, opts: &VerifyOptions) -> Result<()> {
    for op in opts.operads(&DEFAULT_OPERADS)? {
        let name = op.name();
        let top = opts.size(op.species(), 5, 4);
        let ctx = HopfContext::new(op.clone(), Caps::default());
        b.run(format!("coassociativity and counit [{name}, n ≤ {top}]"), |cases| {
            for n in 1..=top {
                for key in ctx.types(n)? {
                    let (l, r) = ctx.coassociativity_sides(&key)?;
                    cases.expect(l == r, || format!("coassociativity fails on {key}"))?;
                    let (e1, e2) = ctx.counit_sides(&key)?;
                    let t = Polynomial::generator(key.clone());
                    cases.expect(e1 == t && e2 == t, || format!("counit fails on {key}"))?;
                }
            }
            Ok(())
        });
        b.run(format!("S∗I = I∗S = uε [{name}, n ≤ {top}]"), |cases| {
            let (s, id) = (Weight::antipode(ctx.clone()), Weight::identity());
            for n in 1..=top {
                for key in ctx.types(n)? {
                    let unit = Polynomial::constant(counit(&key));
                    let ok = convolve(&ctx, &s, &id, &key)? == unit && convolve(&ctx, &id, &s, &key)? == unit;
                    cases.expect(ok, || format!("antipode axiom fails on {key}"))?;
                }
            }
            Ok(())
        });
        let labelled = top.min(4);
        b.run(format!("representative independence [{name}, n ≤ {labelled}]"), |cases| {
            for n in 1..=labelled {
                let labels: Vec<Label> = (1..=n as Label).collect();
                for m in op.enumerate(&labels, &Caps::default())? {
                    let ok = ctx.coproduct_of(&m)? == ctx.coproduct(&ctx.key_of(&m)?)?;
                    cases.expect(ok, || format!("coproduct of {m:?} differs from its type's"))?;
                }
            }
            Ok(())
        });
        b.run(format!("primitive ⟺ prime [{name}, n ≤ {top}]"), |cases| {
            for n in 2..=top {
                for key in ctx.types(n)? {
                    let m = ctx.representative(&key)?;
                    let ok = ctx.is_primitive(&key)? == is_prime(op.as_ref(), &m, &Caps::default())?;
                    cases.expect(ok, || format!("primitivity and primality disagree on {key}"))?;
                }
            }
            Ok(())
        });
    }
    Ok(())
}

fn agreement(b: &mut Builder, opts: &VerifyOptions) -> Result<()> {
    let registry = AntipodeRegistry::standard();
    for op in opts.operads(&DEFAULT_OPERADS)? {
        let name = op.name();
        let sets = matches!(op.species(), Species::Set | Species::PointedSet);
        let top = opts.size(op.species(), if sets { 5 } else { 6 }, 4);
        let ctx = HopfContext::new(op.clone(), Caps::default());
        let methods: Vec<_> = registry.names().into_iter().map(|n| registry.get(n)).collect::<Result<Vec<_>>>()?;
        let methods: Vec<_> = methods.into_iter().filter(|m| m.supports(&ctx)).collect();
        let listed: Vec<&str> = methods.iter().map(|m| m.name()).collect();
        b.run(format!("{} agree [{name}, n ≤ {top}]", listed.join(" = ")), |cases| {
            for n in 1..=top {
                for key in ctx.types(n)? {
                    let reference = methods[0].antipode(&ctx, &key)?;
                    for m in &methods[1..] {
                        let other = m.antipode(&ctx, &key)?;
                        cases.expect(other == reference, || format!("{} differs on {key}", m.name()))?;
                    }
                }
            }
            Ok(())
        });
    }
    Ok(())
}

fn bijections(b: &mut Builder, opts: &VerifyOptions) -> Result<()> {
    for op in opts.operads(&["arb", "arb-l", "arb-e", "gr", "grp"])? {
        if ColoringRule::for_species(op.species()).is_err() {
            continue;
        }
        let name = op.name();
        let top = opts.size(op.species(), 5, 4);
        b.run(format!("colorings ↔ Schröder trees [{name}, n ≤ {top}]"), |cases| {
            for n in 1..=top {
                let labels: Vec<Label> = (1..=n as Label).collect();
                for m in op.enumerate(&labels, &Caps::default())? {
                    let trees = enumerate_schroeder(op.as_ref(), &m, &Caps::default())?;
                    let mut images = BTreeSet::new();
                    for t in &trees {
                        images.insert(coloring_of_tree(op.as_ref(), t)?.1);
                    }
                    let admissible = admissible_colorings(&m)?;
                    let same =
                        images.len() == trees.len() && admissible.iter().cloned().collect::<BTreeSet<_>>() == images;
                    cases.expect(same, || format!("coloring sets differ on {m:?}"))?;
                    for c in &admissible {
                        let t = schroeder_from_coloring(op.as_ref(), &m, c)?;
                        let ok = eta_hat(op.as_ref(), &t)? == m && &coloring_of_tree(op.as_ref(), &t)?.1 == c;
                        cases.expect(ok, || format!("round trip fails on {m:?} with {c}"))?;
                    }
                }
            }
            Ok(())
        });
    }
    let phi_size = opts.max_size.unwrap_or(4);
    for name in ["e-pointed", "arb", "arb-e", "arb-l"] {
        if opts.operad.as_deref().is_some_and(|o| o != name) {
            continue;
        }
        let op = operad_by_name(name)?;
        b.run(format!("φ round trip and diagrams [{name}, n ≤ {phi_size}]"), |cases| {
            for n in 1..=phi_size {
                let labels: Vec<Label> = (1..=n as Label).collect();
                for m in op.enumerate(&labels, &Caps::default())? {
                    for t in enumerate_schroeder(op.as_ref(), &m, &Caps::default())? {
                        let ct = phi(op.as_ref(), &t)?;
                        let mut ok = phi_inv(op.as_ref(), &ct)? == t;
                        if let Species::Tree(kind) = op.species() {
                            let evaluated = eta_hat(op.as_ref(), &t)?;
                            ok &= ct.nu_hat(kind)? == evaluated;
                            if name == "arb" {
                                ok &= ct.erase_colors() == evaluated;
                            }
                        } else {
                            ok &= Some(ct.root()) == m.point();
                        }
                        cases.expect(ok, || format!("φ fails on {t}"))?;
                    }
                }
            }
            Ok(())
        });
    }
    b.run("set Schröder trees by internal vertices [n ≤ 6, k ≤ 4]", |cases| {
        let ep = operad_by_name("e+")?;
        for n in 1..=6u32 {
            let trees = enumerate_schroeder(ep.as_ref(), &Structure::set(1..=n), &Caps::default())?;
            for k in 1..=4usize {
                let left = trees.iter().filter(|t| t.internal_vertices() == k).count();
                let labels: Vec<Label> = (1..=n + k as u32 - 1).collect();
                let filter = PartitionFilter { min_blocks: Some(k), max_blocks: Some(k), block_min_size: Some(2) };
                let right = partitions(&labels, filter).count();
                cases.expect(left == right, || format!("n={n} k={k}: {left} trees, {right} partitions"))?;
            }
        }
        Ok(())
    });
    b.run("edge ↔ vertex bicolorings [rooted trees, n ≤ 5]", |cases| {
        let ctx = HopfContext::new(operad_by_name("arb")?, Caps::default());
        for n in 1..=5 {
            for key in ctx.types(n)? {
                let t = decode_key(&key)?.as_tree().cloned().expect("rooted tree key");
                let edges = edge_bicolorings(&t);
                let vertices: BTreeSet<_> = forest_vertex_bicolorings(&t).into_iter().collect();
                let moved: BTreeSet<_> = edges.iter().map(move_up).collect();
                let ok = edges.len() == vertices.len()
                    && moved == vertices
                    && edges.iter().all(|e| &move_down(&t, &move_up(e)) == e);
                cases.expect(ok, || format!("bicoloring map fails on {key}"))?;
            }
        }
        Ok(())
    });
    Ok(())
}

fn series(b: &mut Builder, opts: &VerifyOptions) {
    let order = opts.order;
    b.run(format!("closed set antipode = recursive [n ≤ {order}]"), |cases| {
        let ctx = HopfContext::new(operad_by_name("e+")?, Caps::default());
        for n in 2..=order {
            let ok = haiman_schmitt(n)? == ctx.antipode_recursive(&Structure::set(1..=n as u32).key())?;
            cases.expect(ok, || format!("n = {n}"))?;
        }
        Ok(())
    });
    b.run(format!("pointed Lagrange inversion, three ways [n ≤ {order}]"), |cases| {
        let ctx = HopfContext::new(operad_by_name("e-pointed")?, Caps::default());
        for n in 2..=order {
            let s = ctx.antipode_recursive(&Structure::pointed_set(1..=n as u32, 1).key())?.scale(&rat(n as i64));
            let ok = lagrange_pointed(n)? == s && falling_factorial_bell_sum(n)? == s;
            cases.expect(ok, || format!("n = {n}"))?;
        }
        Ok(())
    });
    b.run(format!("Bell identity for pointed partitions [n ≤ {}]", order + 1), |cases| {
        for n in 1..=order + 1 {
            for k in 1..=n {
                let (l, r) = pointed_bell_sides(n, k)?;
                cases.expect(l == r, || format!("n={n} k={k}"))?;
            }
        }
        Ok(())
    });
    for name in ["e+", "e-pointed"] {
        b.run(format!("substitution = convolution [{name}, order {order}]"), |cases| {
            let ctx = HopfContext::new(operad_by_name(name)?, Caps::default());
            for i in 0..3 {
                let w1 = Weight::random(&ctx, order, opts.seed.wrapping_add(2 * i))?;
                let w2 = Weight::random(&ctx, order, opts.seed.wrapping_add(2 * i + 1))?;
                let lhs = m_series(&ctx, &w1, order)?.compose(&m_series(&ctx, &w2, order)?)?;
                let rhs = m_series(&ctx, &w2.convolution(&w1, ctx.clone()), order)?;
                cases.expect(lhs == rhs, || format!("weights from seed {}", opts.seed + 2 * i))?;
            }
            Ok(())
        });
        b.run(format!("M^(ω∘S) = (M^ω)^(-1) [{name}, order {order}]"), |cases| {
            let ctx = HopfContext::new(operad_by_name(name)?, Caps::default());
            let s = Weight::antipode(ctx.clone());
            let mut weights = vec![Weight::identity()];
            for i in 0..3 {
                weights.push(Weight::random(&ctx, order, opts.seed.wrapping_add(100 + i))?);
            }
            for (i, w) in weights.iter().enumerate() {
                let lhs = m_series(&ctx, &w.after(&s), order)?;
                let rhs = m_series(&ctx, w, order)?.reversion()?;
                cases.expect(lhs == rhs, || format!("weight #{i}"))?;
            }
            Ok(())
        });
        b.run(format!("M^S = x − M₂₊^I(M^S) [{name}, order {order}]"), |cases| {
            let ctx = HopfContext::new(operad_by_name(name)?, Caps::default());
            let ms = m_series(&ctx, &Weight::antipode(ctx.clone()), order)?;
            let m2 = m_series(&ctx, &Weight::identity(), order)?.sub(&PowerSeries::x(order));
            let rhs = PowerSeries::x(order).sub(&m2.compose(&ms)?);
            cases.expect(ms == rhs, || format!("{ms:?} vs {rhs:?}"))
        });
    }
}

fn posets(b: &mut Builder, opts: &VerifyOptions) -> Result<()> {
    for op in opts.operads(&DEFAULT_OPERADS)? {
        let name = op.name();
        let top = opts.size(op.species(), 4, 3).min(POSET_CAP);
        let ctx = HopfContext::new(op.clone(), Caps::default());
        b.run(format!("incidence coproduct = Δ [{name}, n ≤ {top}]"), |cases| {
            for n in 1..=top {
                for key in ctx.types(n)? {
                    let m = ctx.representative(&key)?;
                    let ok = incidence_coproduct(op.as_ref(), &m, POSET_CAP)? == ctx.coproduct(&key)?;
                    cases.expect(ok, || format!("differs on {key}"))?;
                }
            }
            Ok(())
        });
        let small = top.min(3);
        b.run(format!("partial order and unique quotients [{name}, |U| ≤ {small}]"), |cases| {
            for n in 1..=small {
                let labels: Vec<Label> = (1..=n as Label).collect();
                let p = build_poset(op.as_ref(), &labels, POSET_CAP)?;
                cases.expect(p.partial_order_violation().is_none(), || {
                    p.partial_order_violation().unwrap_or_default()
                })?;
                for (i, a1) in p.ground().iter().enumerate() {
                    for (j, a2) in p.ground().iter().enumerate() {
                        let found = all_quotients(op.as_ref(), a1, a2)?;
                        let ok = found.len() <= 1 && found.first() == p.quotient(i, j);
                        cases.expect(ok, || format!("{a1:?} ⪯ {a2:?}: {} quotients", found.len()))?;
                    }
                }
            }
            Ok(())
        });
    }
    Ok(())
}

fn ck(b: &mut Builder, opts: &VerifyOptions) {
    let top = opts.max_size.unwrap_or(5);
    b.run(format!("B⁻ is a Hopf morphism [n ≤ {top}]"), |cases| {
        let ctx = HopfContext::new(operad_by_name("arb")?, Caps::default());
        let report = b_minus_morphism_check(&ctx, top)?;
        cases.count += report.checked;
        report.counterexample.map_or(Ok(()), |x| Err(Fail::Counterexample(x)))
    });
    b.run(format!("Connes–Kreimer coassociativity [n ≤ {top}]"), |cases| {
        let ctx = HopfContext::new(operad_by_name("arb")?, Caps::default());
        for n in 1..=top {
            for key in ctx.types(n)? {
                let (l, r) = ck_coassociativity_sides(&key, &Caps::default())?;
                cases.expect(l == r, || format!("fails on {key}"))?;
            }
        }
        Ok(())
    });
}
