//! The main-spine bijection φ for decorations of the form X·M.
//!
//! Every decoration has a preferred child (the point of a pointed set, the
//! root of a tree). φ contracts each internal vertex onto the φ-image of its
//! preferred child and records the depth of the vertex as the color of the
//! fiber component it creates.

use std::collections::BTreeMap;

use super::{EdgeColoring, SchroederTree};
use crate::error::{Error, Result};
use crate::operads::{nu_bar, ListMonoid, Operad, SetMonoid};
use crate::structures::{Label, Species, Structure, Tree, TreeKind};

/// A rooted tree whose fibers are split into colored components: vertex `u`
/// carries at most one list of children per color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTree {
    ordered: bool,
    root: Label,
    parts: BTreeMap<Label, BTreeMap<u32, Vec<Label>>>,
}

impl ColoredTree {
    /// Groups the fibers of `t` by edge color, keeping fiber order.
    pub fn from_coloring(t: &Tree, ordered: bool, c: &EdgeColoring) -> Result<ColoredTree> {
        let mut parts: BTreeMap<Label, BTreeMap<u32, Vec<Label>>> = BTreeMap::new();
        for u in t.labels() {
            parts.entry(u).or_default();
            for &w in t.children(u) {
                let color = c.color(&(u, w)).ok_or_else(|| Error::LabelMismatch(format!("edge {u}-{w} uncolored")))?;
                parts.entry(u).or_default().entry(color).or_default().push(w);
            }
        }
        Ok(ColoredTree { ordered, root: t.root(), parts })
    }

    pub fn root(&self) -> Label {
        self.root
    }

    pub fn labels(&self) -> Vec<Label> {
        self.parts.keys().copied().collect()
    }

    /// Fiber components of `u`, by increasing color.
    pub fn parts(&self, u: Label) -> impl Iterator<Item = (u32, &[Label])> {
        self.parts.get(&u).into_iter().flatten().map(|(&c, v)| (c, v.as_slice()))
    }

    pub fn coloring(&self) -> EdgeColoring {
        let map = self
            .parts
            .iter()
            .flat_map(|(&u, ps)| ps.iter().flat_map(move |(&c, ws)| ws.iter().map(move |&w| ((u, w), c))))
            .collect();
        EdgeColoring::new(map).expect("colors start at 1")
    }

    /// Forgets the colors; the result is an unordered rooted tree.
    pub fn erase_colors(&self) -> Structure {
        let children = self.parts.iter().map(|(&u, ps)| (u, ps.values().flatten().copied().collect())).collect();
        Structure::tree(TreeKind::Rooted, Tree::from_children(self.root, children))
    }

    /// ν̂: merges each fiber's components with ν̄, deepest color first, since
    /// the product puts the inner fiber before the grafted children.
    pub fn nu_hat(&self, kind: TreeKind) -> Result<Structure> {
        let mut children = BTreeMap::new();
        for (&u, ps) in &self.parts {
            let tuple: Vec<Vec<Label>> = ps.values().rev().cloned().collect();
            let fiber = if tuple.is_empty() {
                vec![]
            } else if kind.ordered() {
                nu_bar(&ListMonoid, &tuple)?
            } else {
                nu_bar(&SetMonoid, &tuple)?
            };
            children.insert(u, fiber);
        }
        Ok(Structure::tree(kind, Tree::from_children(self.root, children)))
    }
}

enum Shape {
    Pointed,
    Tree { ordered: bool, kind: TreeKind },
}

fn shape_of(op: &dyn Operad) -> Result<Shape> {
    match op.species() {
        Species::PointedSet => Ok(Shape::Pointed),
        Species::Tree(kind) => Ok(Shape::Tree { ordered: kind.ordered(), kind }),
        other => Err(Error::ShapeMismatch(format!(
            "{} decorations have no preferred child (species {})",
            op.name(),
            other.tag().as_str()
        ))),
    }
}

/// φ: contracts the main spines of `t`.
pub fn phi(op: &dyn Operad, t: &SchroederTree) -> Result<ColoredTree> {
    let shape = shape_of(op)?;
    let ordered = matches!(shape, Shape::Tree { ordered: true, .. });
    let mut parts: BTreeMap<Label, BTreeMap<u32, Vec<Label>>> = BTreeMap::new();
    let root = contract(t, 1, &shape, &mut parts)?;
    for u in t.leaves() {
        parts.entry(u).or_default();
    }
    Ok(ColoredTree { ordered, root, parts })
}

fn contract(
    t: &SchroederTree,
    depth: u32,
    shape: &Shape,
    parts: &mut BTreeMap<Label, BTreeMap<u32, Vec<Label>>>,
) -> Result<Label> {
    let (decoration, children) = match t {
        SchroederTree::Leaf(u) => return Ok(*u),
        SchroederTree::Node { decoration, children } => (decoration, children),
    };
    let roots: Vec<Label> = children.iter().map(|c| contract(c, depth + 1, shape, parts)).collect::<Result<_>>()?;
    let mut add = |at: Label, list: Vec<Label>| {
        if !list.is_empty() {
            parts.entry(at).or_default().insert(depth, list);
        }
    };
    match (shape, decoration) {
        (Shape::Pointed, Structure::PointedSet(l, p)) => {
            let others = l.iter().filter(|&u| u != p).map(|&j| roots[j as usize]).collect();
            add(roots[*p as usize], others);
            Ok(roots[*p as usize])
        }
        (Shape::Tree { .. }, Structure::Tree(_, d)) => {
            for i in d.labels() {
                let mut list: Vec<Label> = d.children(i).iter().map(|&j| roots[j as usize]).collect();
                if !matches!(shape, Shape::Tree { ordered: true, .. }) {
                    list.sort_unstable();
                }
                add(roots[i as usize], list);
            }
            Ok(roots[d.root() as usize])
        }
        _ => Err(Error::ShapeMismatch(format!("decoration {decoration:?} does not match the operad"))),
    }
}

/// φ⁻¹: rebuilds the Schröder tree, one color per depth.
pub fn phi_inv(op: &dyn Operad, ct: &ColoredTree) -> Result<SchroederTree> {
    let shape = shape_of(op)?;
    let t = expand(ct, ct.root, 1, &shape)?;
    if t.leaves() != ct.labels() {
        return Err(Error::ShapeMismatch("colors do not increase along the tree".into()));
    }
    Ok(t)
}

fn expand(ct: &ColoredTree, x: Label, depth: u32, shape: &Shape) -> Result<SchroederTree> {
    if !ct.parts(x).any(|(c, _)| c >= depth) {
        return Ok(SchroederTree::Leaf(x));
    }
    if !ct.parts(x).any(|(c, _)| c == depth) {
        return Err(Error::ShapeMismatch(format!("vertex {x} skips color {depth}")));
    }
    // The vertices of the decoration: x, then everything reached through
    // color-`depth` components, in breadth-first order.
    let mut order = vec![x];
    let mut links: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut i = 0;
    while i < order.len() {
        let y = order[i];
        if let Some((_, ws)) = ct.parts(y).find(|&(c, _)| c == depth) {
            for &w in ws {
                links.entry(i).or_default().push(order.len());
                order.push(w);
            }
        }
        i += 1;
    }
    let k = order.len() as Label;
    let decoration = match shape {
        Shape::Pointed => {
            if links.keys().any(|&i| i != 0) {
                return Err(Error::ShapeMismatch("pointed-set decorations are corollas".into()));
            }
            Structure::pointed_set(0..k, 0)
        }
        Shape::Tree { kind, .. } => {
            let children = (0..k)
                .map(|i| (i, links.get(&(i as usize)).map_or(vec![], |v| v.iter().map(|&j| j as Label).collect())))
                .collect();
            Structure::tree(*kind, Tree::from_children(0, children))
        }
    };
    let children = order.iter().map(|&y| expand(ct, y, depth + 1, shape)).collect::<Result<_>>()?;
    SchroederTree::node(decoration, children)
}
