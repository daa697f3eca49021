//! Enriched Schröder trees, the antipode as a signed sum over them, the
//! main-spine bijection φ, and the admissible-coloring antipodes.
//!
//! A Schröder tree is a leaf or an internal vertex with at least two
//! children, decorated by an M-structure on the child positions `0..k`.
//! Children are kept sorted by their smallest leaf, so position `i` is the
//! `i`-th block of the induced partition, as for outer structures.

mod coloring;
mod graphs;
mod phi;
mod text;

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::One;

pub use coloring::{
    admissible_colorings, antipode_colorings, coloring_term, is_admissible, ColoringRule, EdgeColoring,
};
pub use graphs::{
    biconnected_components, graph_modules_and_quotient, is_module, quotient_graph, sees_all_or_none, Biconnected,
    ModuleQuotient,
};
pub use phi::{phi, phi_inv, ColoredTree};
pub use text::parse_schroeder;

use crate::algebra::{Coeff, Monomial, Polynomial, TypeKey};
use crate::error::{Error, Result};
use crate::hopf::HopfContext;
use crate::operads::{factorizations, Assembly, FactorFilter, Operad};
use crate::structures::{components, substructure, Caps, Label, Structure};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SchroederTree {
    Leaf(Label),
    Node { decoration: Structure, children: Vec<SchroederTree> },
}

impl SchroederTree {
    /// An internal vertex whose `decoration` lives on the written positions
    /// of `children`; children are then re-sorted by smallest leaf and the
    /// decoration relabelled to match.
    pub fn node(decoration: Structure, children: Vec<SchroederTree>) -> Result<SchroederTree> {
        let k = children.len();
        if k < 2 {
            return Err(Error::InvalidStructure("an internal vertex needs at least two children".into()));
        }
        if decoration.labels() != (0..k as Label).collect::<Vec<_>>() {
            return Err(Error::LabelMismatch(format!("decoration on {:?} for {k} children", decoration.labels())));
        }
        let mut seen = BTreeSet::new();
        if !children.iter().flat_map(SchroederTree::leaves).all(|u| seen.insert(u)) {
            return Err(Error::LabelOverlap("repeated leaf".into()));
        }
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&i| children[i].min_leaf());
        let mut new_index = vec![0; k];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new as Label;
        }
        let decoration = decoration.relabel(&|u| new_index[u as usize]);
        let mut slots: Vec<Option<SchroederTree>> = children.into_iter().map(Some).collect();
        let children = order.iter().map(|&i| slots[i].take().expect("permutation")).collect();
        Ok(SchroederTree::Node { decoration, children })
    }

    pub fn leaves(&self) -> Vec<Label> {
        let mut out = vec![];
        self.collect_leaves(&mut out);
        out.sort_unstable();
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Label>) {
        match self {
            SchroederTree::Leaf(u) => out.push(*u),
            SchroederTree::Node { children, .. } => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn min_leaf(&self) -> Label {
        match self {
            SchroederTree::Leaf(u) => *u,
            SchroederTree::Node { children, .. } => children[0].min_leaf(),
        }
    }

    /// |Iv(T)|.
    pub fn internal_vertices(&self) -> usize {
        match self {
            SchroederTree::Leaf(_) => 0,
            SchroederTree::Node { children, .. } => 1 + children.iter().map(Self::internal_vertices).sum::<usize>(),
        }
    }

    /// Decorations with the depth of their vertex; the root has depth 1.
    pub fn decorations(&self) -> Vec<(u32, &Structure)> {
        fn go<'a>(t: &'a SchroederTree, d: u32, out: &mut Vec<(u32, &'a Structure)>) {
            if let SchroederTree::Node { decoration, children } = t {
                out.push((d, decoration));
                children.iter().for_each(|c| go(c, d + 1, out));
            }
        }
        let mut out = vec![];
        go(self, 1, &mut out);
        out
    }

    /// (−1)^{|Iv(T)|} Π_v t_{τ(m_v)}.
    pub fn term(&self) -> Polynomial {
        let decs = self.decorations();
        let sign = if decs.len().is_multiple_of(2) { Coeff::one() } else { -Coeff::one() };
        Polynomial::term(sign, Monomial::from_keys(decs.iter().map(|(_, s)| s.key())))
    }
}

/// η̂: evaluates the tree bottom-up with the operad product.
pub fn eta_hat(op: &dyn Operad, t: &SchroederTree) -> Result<Structure> {
    match t {
        SchroederTree::Leaf(u) => Ok(op.species().singleton(*u)),
        SchroederTree::Node { decoration, children } => {
            let pieces = children.iter().map(|c| eta_hat(op, c)).collect::<Result<_>>()?;
            op.eta(&Assembly::new(pieces)?, decoration)
        }
    }
}

/// Every Schröder tree T with η̂(T) = m.
pub fn enumerate_schroeder(op: &dyn Operad, m: &Structure, caps: &Caps) -> Result<Vec<SchroederTree>> {
    if m.species() != op.species() {
        return Err(Error::SpeciesMismatch {
            expected: op.species().tag().as_str().into(),
            found: m.species().tag().as_str().into(),
        });
    }
    caps.check(m.species(), m.size())?;
    m.validate()?;
    trees_over(op, m, caps)
}

fn trees_over(op: &dyn Operad, m: &Structure, caps: &Caps) -> Result<Vec<SchroederTree>> {
    if m.size() == 1 {
        return Ok(vec![SchroederTree::Leaf(m.labels()[0])]);
    }
    let filter = FactorFilter { min_blocks: Some(2), exclude_trivial: false };
    let mut out = vec![];
    for f in factorizations(op, m, filter, caps)? {
        let options: Vec<Vec<SchroederTree>> =
            f.assembly.pieces().iter().map(|p| trees_over(op, p, caps)).collect::<Result<_>>()?;
        for combo in options.iter().multi_cartesian_product() {
            out.push(SchroederTree::Node {
                decoration: f.outer.clone(),
                children: combo.into_iter().cloned().collect(),
            });
        }
    }
    Ok(out)
}

/// S(t_α) = Σ_T (−1)^{|Iv(T)|} Π_v t_{τ(m_v)} over the trees of a representative.
pub fn antipode_schroeder(ctx: &HopfContext, key: &TypeKey) -> Result<Polynomial> {
    if key.is_singleton() {
        return Ok(Polynomial::one());
    }
    let m = ctx.representative(key)?;
    let mut out = Polynomial::zero();
    for t in enumerate_schroeder(ctx.operad(), &m, ctx.caps())? {
        out += t.term();
    }
    Ok(out)
}

/// Colors each edge of η̂(T) by the depth of the vertex whose product created it.
pub fn coloring_of_tree(op: &dyn Operad, t: &SchroederTree) -> Result<(Structure, EdgeColoring)> {
    let mut colors = std::collections::BTreeMap::new();
    let m = colored_eta(op, t, 1, &mut colors)?;
    Ok((m, EdgeColoring::new(colors)?))
}

fn colored_eta(
    op: &dyn Operad,
    t: &SchroederTree,
    depth: u32,
    colors: &mut std::collections::BTreeMap<(Label, Label), u32>,
) -> Result<Structure> {
    match t {
        SchroederTree::Leaf(u) => Ok(op.species().singleton(*u)),
        SchroederTree::Node { decoration, children } => {
            let pieces: Vec<Structure> =
                children.iter().map(|c| colored_eta(op, c, depth + 1, colors)).collect::<Result<_>>()?;
            let inner: BTreeSet<(Label, Label)> = pieces.iter().flat_map(Structure::edges).collect();
            let m = op.eta(&Assembly::new(pieces)?, decoration)?;
            for e in m.edges() {
                if !inner.contains(&e) {
                    colors.insert(e, depth);
                }
            }
            Ok(m)
        }
    }
}

/// The Schröder tree coded by an edge coloring of `m`: the blocks below a
/// depth-`d` vertex are the components of the edges colored above `d`.
pub fn schroeder_from_coloring(op: &dyn Operad, m: &Structure, c: &EdgeColoring) -> Result<SchroederTree> {
    let edges: BTreeSet<(Label, Label)> = m.edges().into_iter().collect();
    if edges != c.colors().keys().copied().collect() {
        return Err(Error::LabelMismatch("coloring does not cover exactly the edges".into()));
    }
    rebuild(op, m, c, 1)
}

fn rebuild(op: &dyn Operad, s: &Structure, c: &EdgeColoring, depth: u32) -> Result<SchroederTree> {
    let labels = s.labels();
    if labels.len() == 1 {
        return Ok(SchroederTree::Leaf(labels[0]));
    }
    let deeper: Vec<(Label, Label)> = s.edges().into_iter().filter(|e| c.color(e) > Some(depth)).collect();
    let blocks = components(&labels, &deeper);
    if blocks.len() < 2 {
        return Err(Error::ShapeMismatch(format!("a piece on {labels:?} has no edge of color {depth}")));
    }
    let pieces = blocks
        .iter()
        .map(|b| {
            let inside: Vec<(Label, Label)> =
                deeper.iter().copied().filter(|(u, v)| b.contains(u) && b.contains(v)).collect();
            substructure(s, b, &inside)
        })
        .collect();
    let a = Assembly::new(pieces)?;
    let outer = op
        .solve_outer(&a, s)
        .ok_or_else(|| Error::ShapeMismatch(format!("color-{depth} edges do not factor the piece on {labels:?}")))?;
    let children = a.pieces().iter().map(|p| rebuild(op, p, c, depth + 1)).collect::<Result<_>>()?;
    Ok(SchroederTree::Node { decoration: outer, children })
}
