//! Labelled structures for the species the operads live on.
//!
//! Labels are opaque `u32` atoms. Every constructor normalizes its input
//! (sorted label lists, sorted edge lists, sorted fibers for unordered trees)
//! so that derived equality is structural equality.

mod canon;
mod enumerate;
mod graph;
mod parse;
mod partition;
mod tree;

use std::collections::{BTreeMap, BTreeSet};

pub use canon::{canonical_key, decode_key, pretty_name, Caps, MAX_N_ENV};
pub use enumerate::enumerate_structures;
pub use graph::{components, Graph};
pub use parse::{format_graph, format_tree, parse_graph, parse_tree};
pub use partition::{partitions, PartitionFilter, Partitions, SetPartition};
pub use tree::{Tree, TreeKind};

use crate::algebra::{SpeciesTag, TypeKey};
use crate::error::{Error, Result};

pub type Label = u32;

/// The species an operad is defined on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Species {
    Set,
    PointedSet,
    Graph,
    PointedGraph,
    Tree(TreeKind),
}

impl Species {
    pub fn tag(self) -> SpeciesTag {
        match self {
            Species::Set => SpeciesTag::Set,
            Species::PointedSet => SpeciesTag::PointedSet,
            Species::Graph => SpeciesTag::Graph,
            Species::PointedGraph => SpeciesTag::PointedGraph,
            Species::Tree(k) => k.tag(),
        }
    }

    pub fn from_tag(tag: SpeciesTag) -> Species {
        match tag {
            SpeciesTag::Set => Species::Set,
            SpeciesTag::PointedSet => Species::PointedSet,
            SpeciesTag::Graph => Species::Graph,
            SpeciesTag::PointedGraph => Species::PointedGraph,
            SpeciesTag::RootedTree => Species::Tree(TreeKind::Rooted),
            SpeciesTag::PlanarTree => Species::Tree(TreeKind::Planar),
            SpeciesTag::EnrichedTree => Species::Tree(TreeKind::Enriched),
        }
    }

    pub fn is_graph(self) -> bool {
        matches!(self, Species::Graph | Species::PointedGraph)
    }

    /// The unique structure on a one-element set.
    pub fn singleton(self, u: Label) -> Structure {
        match self {
            Species::Set => Structure::Set(vec![u]),
            Species::PointedSet => Structure::PointedSet(vec![u], u),
            Species::Graph => Structure::Graph(Graph::new_unchecked(vec![u], vec![])),
            Species::PointedGraph => Structure::PointedGraph(Graph::new_unchecked(vec![u], vec![]), u),
            Species::Tree(k) => Structure::Tree(k, Tree::singleton(u)),
        }
    }
}

/// A labelled structure of one of the supported species.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Structure {
    Set(Vec<Label>),
    PointedSet(Vec<Label>, Label),
    Graph(Graph),
    PointedGraph(Graph, Label),
    Tree(TreeKind, Tree),
}

impl Structure {
    pub fn set(labels: impl IntoIterator<Item = Label>) -> Structure {
        Structure::Set(sorted(labels))
    }

    pub fn pointed_set(labels: impl IntoIterator<Item = Label>, point: Label) -> Structure {
        Structure::PointedSet(sorted(labels), point)
    }

    pub fn tree(kind: TreeKind, tree: Tree) -> Structure {
        Structure::Tree(kind, tree.normalized(kind))
    }

    pub fn species(&self) -> Species {
        match self {
            Structure::Set(_) => Species::Set,
            Structure::PointedSet(..) => Species::PointedSet,
            Structure::Graph(_) => Species::Graph,
            Structure::PointedGraph(..) => Species::PointedGraph,
            Structure::Tree(k, _) => Species::Tree(*k),
        }
    }

    /// Sorted label set.
    pub fn labels(&self) -> Vec<Label> {
        match self {
            Structure::Set(l) | Structure::PointedSet(l, _) => l.clone(),
            Structure::Graph(g) | Structure::PointedGraph(g, _) => g.labels().to_vec(),
            Structure::Tree(_, t) => t.labels(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Structure::Set(l) | Structure::PointedSet(l, _) => l.len(),
            Structure::Graph(g) | Structure::PointedGraph(g, _) => g.len(),
            Structure::Tree(_, t) => t.len(),
        }
    }

    /// The distinguished element: the point or the root. Sets and graphs have none.
    pub fn point(&self) -> Option<Label> {
        match self {
            Structure::PointedSet(_, p) | Structure::PointedGraph(_, p) => Some(*p),
            Structure::Tree(_, t) => Some(t.root()),
            _ => None,
        }
    }

    /// Undirected edges, `(u, v)` with `u < v` for graphs and `(parent, child)` for trees.
    pub fn edges(&self) -> Vec<(Label, Label)> {
        match self {
            Structure::Set(_) | Structure::PointedSet(..) => vec![],
            Structure::Graph(g) | Structure::PointedGraph(g, _) => g.edges().to_vec(),
            Structure::Tree(_, t) => t.edges(),
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match self {
            Structure::Graph(g) | Structure::PointedGraph(g, _) => Some(g),
            _ => None,
        }
    }

    pub fn as_tree(&self) -> Option<&Tree> {
        match self {
            Structure::Tree(_, t) => Some(t),
            _ => None,
        }
    }

    /// Transport along a bijection of labels.
    pub fn relabel(&self, f: &dyn Fn(Label) -> Label) -> Structure {
        match self {
            Structure::Set(l) => Structure::set(l.iter().map(|&u| f(u))),
            Structure::PointedSet(l, p) => Structure::pointed_set(l.iter().map(|&u| f(u)), f(*p)),
            Structure::Graph(g) => Structure::Graph(g.relabel(f)),
            Structure::PointedGraph(g, p) => Structure::PointedGraph(g.relabel(f), f(*p)),
            Structure::Tree(k, t) => Structure::tree(*k, t.relabel(f)),
        }
    }

    /// Relabels along an explicit map.
    pub fn relabel_map(&self, map: &BTreeMap<Label, Label>) -> Structure {
        self.relabel(&|u| map[&u])
    }

    /// Checks the species invariants.
    pub fn validate(&self) -> Result<()> {
        let distinct = |l: &[Label]| l.windows(2).all(|w| w[0] < w[1]);
        let ok = match self {
            Structure::Set(l) => !l.is_empty() && distinct(l),
            Structure::PointedSet(l, p) => distinct(l) && l.binary_search(p).is_ok(),
            Structure::Graph(g) => g.validate().is_ok() && g.is_connected(),
            Structure::PointedGraph(g, p) => {
                g.validate().is_ok() && g.is_connected() && g.labels().binary_search(p).is_ok()
            }
            Structure::Tree(k, t) => t.validate().is_ok() && t.normalized(*k) == *t,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidStructure(format!("{self:?}")))
        }
    }

    /// Isomorphism type, subject to the size caps.
    pub fn key_capped(&self, caps: &Caps) -> Result<TypeKey> {
        canonical_key(self, caps)
    }

    /// Isomorphism type without a cap. Used internally on pieces of
    /// structures that already passed a capped entry point.
    pub fn key(&self) -> TypeKey {
        canonical_key(self, &Caps::unbounded()).expect("uncapped canonicalization")
    }
}

fn sorted(labels: impl IntoIterator<Item = Label>) -> Vec<Label> {
    let mut v: Vec<Label> = labels.into_iter().collect();
    v.sort_unstable();
    v
}

/// Restriction of a structure to the vertices of a connected piece, in the
/// sense used by colorings: graphs keep the induced edges in `edges`,
/// trees are re-rooted at the vertex of `block` closest to the old root.
pub fn substructure(m: &Structure, block: &[Label], edges: &[(Label, Label)]) -> Structure {
    let block_set: BTreeSet<Label> = block.iter().copied().collect();
    let closest = || closest_to_point(m, block);
    match m {
        Structure::Set(_) => Structure::set(block.iter().copied()),
        Structure::PointedSet(..) => Structure::pointed_set(block.iter().copied(), closest()),
        Structure::Graph(_) => Structure::Graph(Graph::new_unchecked(block.to_vec(), edges.to_vec())),
        Structure::PointedGraph(..) => {
            Structure::PointedGraph(Graph::new_unchecked(block.to_vec(), edges.to_vec()), closest())
        }
        Structure::Tree(k, t) => {
            let keep: BTreeSet<(Label, Label)> = edges.iter().copied().collect();
            let root = closest();
            let children = block
                .iter()
                .map(|&u| {
                    let cs = t
                        .children(u)
                        .iter()
                        .copied()
                        .filter(|c| block_set.contains(c) && keep.contains(&(u, *c)))
                        .collect();
                    (u, cs)
                })
                .collect();
            Structure::tree(*k, Tree::from_children(root, children))
        }
    }
}

/// The vertex of `block` nearest (by BFS distance in `m`) to the point of `m`.
pub fn closest_to_point(m: &Structure, block: &[Label]) -> Label {
    let Some(p) = m.point() else {
        return block[0];
    };
    let labels = m.labels();
    let g = Graph::new_unchecked(labels, undirected(&m.edges()));
    let dist = g.distances_from(p);
    *block.iter().min_by_key(|u| (dist.get(u).copied().unwrap_or(usize::MAX), **u)).expect("non-empty block")
}

fn undirected(edges: &[(Label, Label)]) -> Vec<(Label, Label)> {
    edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabel_normalizes() {
        let s = Structure::set([3, 1, 2]);
        assert_eq!(s.labels(), vec![1, 2, 3]);
        let r = s.relabel(&|u| 10 - u);
        assert_eq!(r.labels(), vec![7, 8, 9]);
    }

    #[test]
    fn singleton_validates() {
        for sp in [
            Species::Set,
            Species::PointedSet,
            Species::Graph,
            Species::PointedGraph,
            Species::Tree(TreeKind::Rooted),
            Species::Tree(TreeKind::Planar),
        ] {
            assert!(sp.singleton(4).validate().is_ok());
            assert!(sp.singleton(4).key().is_singleton());
        }
    }

    #[test]
    fn substructure_reroots() {
        let t = parse_tree("1(2(3,4))", TreeKind::Rooted).unwrap();
        let sub = substructure(&t, &[2, 3], &[(2, 3)]);
        assert_eq!(sub.point(), Some(2));
        assert_eq!(sub.edges(), vec![(2, 3)]);
    }
}
