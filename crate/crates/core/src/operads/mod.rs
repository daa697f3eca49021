//! Set operads: the product η on assemblies, factorization enumeration and
//! a name-keyed registry of the concrete instances.
//!
//! Outer structures are labelled by block indices `0..k`, where block `i`
//! is the `i`-th block of the assembly in order of minimum label.

mod graphs;
mod monoid;
mod sets;
mod trees;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use itertools::Itertools;

pub use graphs::{Gr, Grp};
pub use monoid::{nu_bar, ListMonoid, Monoid, SetMonoid};
pub use sets::{EPlus, EPointed};
pub use trees::TreeOperad;

use crate::algebra::Monomial;
use crate::error::{Error, Result};
use crate::structures::{enumerate_structures, partitions, Caps, Label, PartitionFilter, Species, Structure};

/// A partition of a label set with one structure on each block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assembly {
    blocks: Vec<Vec<Label>>,
    pieces: Vec<Structure>,
}

impl Assembly {
    /// Orders the pieces by minimum label; rejects overlapping label sets.
    pub fn new(mut pieces: Vec<Structure>) -> Result<Assembly> {
        pieces.sort_by_key(|p| p.labels()[0]);
        let blocks: Vec<Vec<Label>> = pieces.iter().map(Structure::labels).collect();
        let mut seen = BTreeSet::new();
        for u in blocks.iter().flatten() {
            if !seen.insert(*u) {
                return Err(Error::LabelOverlap(format!("label {u} in two blocks")));
            }
        }
        Ok(Assembly { blocks, pieces })
    }

    pub fn singletons(species: Species, labels: &[Label]) -> Assembly {
        let mut labels = labels.to_vec();
        labels.sort_unstable();
        Assembly {
            blocks: labels.iter().map(|&u| vec![u]).collect(),
            pieces: labels.iter().map(|&u| species.singleton(u)).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<Label>] {
        &self.blocks
    }

    pub fn pieces(&self) -> &[Structure] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// All labels, sorted.
    pub fn labels(&self) -> Vec<Label> {
        let mut l: Vec<Label> = self.blocks.iter().flatten().copied().collect();
        l.sort_unstable();
        l
    }

    pub fn block_of(&self, u: Label) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&u).is_ok())
    }

    /// t_{τ(a)}: the product of the piece types, singletons dropped.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_keys(self.pieces.iter().filter(|p| p.size() > 1).map(Structure::key))
    }

    /// The block-index labels `0..k` an outer structure must carry.
    pub fn index_labels(&self) -> Vec<Label> {
        (0..self.len() as Label).collect()
    }
}

/// A pair (assembly, outer structure on the blocks).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    pub assembly: Assembly,
    pub outer: Structure,
}

impl Factorization {
    pub fn blocks(&self) -> usize {
        self.assembly.len()
    }

    pub fn is_trivial(&self) -> bool {
        let k = self.blocks();
        k == 1 || k == self.assembly.labels().len()
    }
}

/// Filters applied on top of factorization enumeration.
#[derive(Clone, Copy, Debug, Default)]
pub struct FactorFilter {
    pub min_blocks: Option<usize>,
    pub exclude_trivial: bool,
}

impl FactorFilter {
    pub fn proper() -> FactorFilter {
        FactorFilter { exclude_trivial: true, ..Default::default() }
    }

    fn accepts(&self, f: &Factorization) -> bool {
        self.min_blocks.is_none_or(|k| f.blocks() >= k) && !(self.exclude_trivial && f.is_trivial())
    }
}

/// A set operad on one of the supported species.
pub trait Operad: Send + Sync {
    fn name(&self) -> &'static str;

    fn species(&self) -> Species;

    fn description(&self) -> &'static str;

    /// The product η(a, m′).
    fn eta(&self, a: &Assembly, outer: &Structure) -> Result<Structure>;

    /// A cheap guess for the outer structure m′ with η(a, m′) = m.
    /// [`Operad::solve_outer`] verifies it; `None` falls back to search.
    fn outer_candidate(&self, _a: &Assembly, _m: &Structure) -> Option<Structure> {
        None
    }

    /// All factorizations of `m`, computed without the brute-force search.
    fn fast_factorizations(&self, _m: &Structure) -> Option<Vec<Factorization>> {
        None
    }

    /// The unique m′ with η(a, m′) = m, if any.
    fn solve_outer(&self, a: &Assembly, m: &Structure) -> Option<Structure> {
        if a.labels() != m.labels() {
            return None;
        }
        if let Some(c) = self.outer_candidate(a, m) {
            return (self.eta(a, &c).ok().as_ref() == Some(m)).then_some(c);
        }
        enumerate_structures(self.species(), &a.index_labels(), &Caps::unbounded())
            .ok()?
            .into_iter()
            .find(|o| self.eta(a, o).ok().as_ref() == Some(m))
    }

    fn enumerate(&self, labels: &[Label], caps: &Caps) -> Result<Vec<Structure>> {
        enumerate_structures(self.species(), labels, caps)
    }
}

pub(crate) fn check_species(op: &dyn Operad, s: &Structure) -> Result<()> {
    if s.species() == op.species() {
        Ok(())
    } else {
        Err(Error::SpeciesMismatch {
            expected: op.species().tag().as_str().into(),
            found: s.species().tag().as_str().into(),
        })
    }
}

pub(crate) fn check_eta_input(op: &dyn Operad, a: &Assembly, outer: &Structure) -> Result<()> {
    check_species(op, outer)?;
    for p in a.pieces() {
        check_species(op, p)?;
    }
    if outer.labels() != a.index_labels() {
        return Err(Error::LabelMismatch(format!(
            "outer structure on {:?} but the assembly has {} blocks",
            outer.labels(),
            a.len()
        )));
    }
    Ok(())
}

/// η̄: composes `a` (blocks `0..k`) with an assembly `b` on the block
/// indices, one product per block of `b`.
pub fn eta_bar(op: &dyn Operad, a: &Assembly, b: &Assembly) -> Result<Assembly> {
    if b.labels() != a.index_labels() {
        return Err(Error::LabelMismatch("inner assembly must live on the block indices".into()));
    }
    let mut out = vec![];
    for piece in b.pieces() {
        let idx = piece.labels();
        let sub = Assembly::new(idx.iter().map(|&i| a.pieces()[i as usize].clone()).collect())?;
        let local: BTreeMap<Label, Label> = idx.iter().enumerate().map(|(pos, &i)| (i, pos as Label)).collect();
        out.push(op.eta(&sub, &piece.relabel_map(&local))?);
    }
    Assembly::new(out)
}

/// Every assembly of `op`-structures over the given partition.
pub fn assemblies_on(op: &dyn Operad, blocks: &[Vec<Label>]) -> Result<Vec<Assembly>> {
    let per_block: Vec<Vec<Structure>> =
        blocks.iter().map(|b| op.enumerate(b, &Caps::unbounded())).collect::<Result<_>>()?;
    Ok(per_block
        .iter()
        .map(|v| v.iter())
        .multi_cartesian_product()
        .map(|pieces| Assembly { blocks: blocks.to_vec(), pieces: pieces.into_iter().cloned().collect() })
        .collect())
}

/// Every assembly of `op`-structures on `labels`.
pub fn all_assemblies(op: &dyn Operad, labels: &[Label]) -> Result<Vec<Assembly>> {
    let mut out = vec![];
    for p in partitions(labels, PartitionFilter::default()) {
        out.extend(assemblies_on(op, &p)?);
    }
    Ok(out)
}

/// Brute force over partitions, assemblies and outer structures.
pub fn baseline_factorizations(op: &dyn Operad, m: &Structure, caps: &Caps) -> Result<Vec<Factorization>> {
    check_species(op, m)?;
    caps.check(m.species(), m.size())?;
    let mut out = vec![];
    for p in partitions(&m.labels(), PartitionFilter::default()) {
        let outers = op.enumerate(&(0..p.len() as Label).collect::<Vec<_>>(), &Caps::unbounded())?;
        for a in assemblies_on(op, &p)? {
            for o in &outers {
                if op.eta(&a, o)? == *m {
                    out.push(Factorization { assembly: a.clone(), outer: o.clone() });
                }
            }
        }
    }
    Ok(out)
}

/// Factorizations of `m`, through the fast path when the operad has one.
pub fn factorizations(op: &dyn Operad, m: &Structure, filter: FactorFilter, caps: &Caps) -> Result<Vec<Factorization>> {
    check_species(op, m)?;
    caps.check(m.species(), m.size())?;
    let all = match op.fast_factorizations(m) {
        Some(f) => f,
        None => baseline_factorizations(op, m, caps)?,
    };
    Ok(all.into_iter().filter(|f| filter.accepts(f)).collect())
}

/// All of M(M)[U] evaluated once and grouped by product.
pub fn factorization_table(
    op: &dyn Operad,
    labels: &[Label],
    caps: &Caps,
) -> Result<BTreeMap<Structure, Vec<Factorization>>> {
    caps.check(op.species(), labels.len())?;
    let mut table: BTreeMap<Structure, Vec<Factorization>> = BTreeMap::new();
    for p in partitions(labels, PartitionFilter::default()) {
        let outers = op.enumerate(&(0..p.len() as Label).collect::<Vec<_>>(), &Caps::unbounded())?;
        for a in assemblies_on(op, &p)? {
            for o in &outers {
                let m = op.eta(&a, o)?;
                table.entry(m).or_default().push(Factorization { assembly: a.clone(), outer: o.clone() });
            }
        }
    }
    Ok(table)
}

/// True when `m` only factors trivially.
pub fn is_prime(op: &dyn Operad, m: &Structure, caps: &Caps) -> Result<bool> {
    Ok(factorizations(op, m, FactorFilter::proper(), caps)?.is_empty())
}

type Factory = fn() -> Arc<dyn Operad>;

/// Operads registered by name.
pub struct OperadRegistry {
    entries: Vec<(&'static str, Factory)>,
}

impl OperadRegistry {
    pub fn empty() -> Self {
        OperadRegistry { entries: vec![] }
    }

    /// The instances shipped with the crate.
    pub fn standard() -> Self {
        let mut r = OperadRegistry::empty();
        r.register("e+", || Arc::new(EPlus));
        r.register("e-pointed", || Arc::new(EPointed));
        r.register("gr", || Arc::new(Gr));
        r.register("grp", || Arc::new(Grp));
        r.register("arb", || Arc::new(TreeOperad::arb()));
        r.register("arb-l", || Arc::new(TreeOperad::arb_l()));
        r.register("arb-e", || Arc::new(TreeOperad::arb_e()));
        r
    }

    pub fn register(&mut self, name: &'static str, factory: Factory) {
        self.entries.retain(|(n, _)| *n != name);
        self.entries.push((name, factory));
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn Operad>> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, f)| f())
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|(n, _)| *n).collect()
    }
}

/// Looks a name up in the standard registry.
pub fn operad_by_name(name: &str) -> Result<Arc<dyn Operad>> {
    OperadRegistry::standard().get(name)
}
