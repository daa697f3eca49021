use std::collections::{BTreeMap, BTreeSet};

use super::Label;
use crate::algebra::SpeciesTag;
use crate::error::{Error, Result};

/// How the fibers of a rooted tree are enriched.
///
/// `Rooted` and `Enriched` carry unordered fibers (the set monoid); they
/// differ only in the species tag, so the NAP operad and its enriched
/// reading stay distinguishable. `Planar` fibers are linear orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeKind {
    Rooted,
    Planar,
    Enriched,
}

impl TreeKind {
    pub fn tag(self) -> SpeciesTag {
        match self {
            TreeKind::Rooted => SpeciesTag::RootedTree,
            TreeKind::Planar => SpeciesTag::PlanarTree,
            TreeKind::Enriched => SpeciesTag::EnrichedTree,
        }
    }

    pub fn ordered(self) -> bool {
        self == TreeKind::Planar
    }
}

/// Rooted tree given by its root and the fiber (children list) of every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    root: Label,
    children: BTreeMap<Label, Vec<Label>>,
}

impl Tree {
    pub fn singleton(u: Label) -> Tree {
        Tree { root: u, children: BTreeMap::from([(u, vec![])]) }
    }

    /// Builds from fibers; vertices missing from the map get empty fibers.
    pub fn from_children(root: Label, mut children: BTreeMap<Label, Vec<Label>>) -> Tree {
        let mentioned: Vec<Label> = children.values().flatten().copied().collect();
        children.entry(root).or_default();
        for c in mentioned {
            children.entry(c).or_default();
        }
        Tree { root, children }
    }

    pub fn from_parents(root: Label, parents: &BTreeMap<Label, Label>) -> Tree {
        let mut children: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
        for (&c, &p) in parents {
            children.entry(p).or_default().push(c);
        }
        Tree::from_children(root, children)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::from([self.root]);
        let mut stack = vec![self.root];
        while let Some(u) = stack.pop() {
            for &c in self.children(u) {
                if !seen.insert(c) {
                    return Err(Error::InvalidStructure(format!("vertex {c} reached twice")));
                }
                stack.push(c);
            }
        }
        if seen.len() != self.children.len() {
            return Err(Error::InvalidStructure("tree has unreachable vertices".into()));
        }
        Ok(())
    }

    /// Sorts fibers unless the kind is ordered.
    pub fn normalized(&self, kind: TreeKind) -> Tree {
        let mut t = self.clone();
        if !kind.ordered() {
            for fiber in t.children.values_mut() {
                fiber.sort_unstable();
            }
        }
        t
    }

    pub fn root(&self) -> Label {
        self.root
    }

    pub fn children(&self, u: Label) -> &[Label] {
        self.children.get(&u).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn fibers(&self) -> &BTreeMap<Label, Vec<Label>> {
        &self.children
    }

    pub fn labels(&self) -> Vec<Label> {
        self.children.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    /// `(parent, child)` pairs, sorted.
    pub fn edges(&self) -> Vec<(Label, Label)> {
        let mut e: Vec<(Label, Label)> =
            self.children.iter().flat_map(|(&p, cs)| cs.iter().map(move |&c| (p, c))).collect();
        e.sort_unstable();
        e
    }

    pub fn parents(&self) -> BTreeMap<Label, Label> {
        self.children.iter().flat_map(|(&p, cs)| cs.iter().map(move |&c| (c, p))).collect()
    }

    pub fn parent(&self, u: Label) -> Option<Label> {
        self.children.iter().find(|(_, cs)| cs.contains(&u)).map(|(&p, _)| p)
    }

    /// Vertices in preorder, fibers visited in stored order.
    pub fn preorder(&self) -> Vec<Label> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children(u).iter().rev());
        }
        out
    }

    /// Labels of the subtree hanging from `u`, including `u`.
    pub fn descendants(&self, u: Label) -> Vec<Label> {
        let mut out = vec![];
        let mut stack = vec![u];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(self.children(v));
        }
        out.sort_unstable();
        out
    }

    pub fn relabel(&self, f: &dyn Fn(Label) -> Label) -> Tree {
        Tree {
            root: f(self.root),
            children: self.children.iter().map(|(&p, cs)| (f(p), cs.iter().map(|&c| f(c)).collect())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preorder_respects_fiber_order() {
        let t = Tree::from_children(1, BTreeMap::from([(1, vec![3, 2]), (3, vec![4])]));
        assert_eq!(t.preorder(), vec![1, 3, 4, 2]);
        assert_eq!(t.normalized(TreeKind::Rooted).preorder(), vec![1, 2, 3, 4]);
        assert_eq!(t.parent(4), Some(3));
    }

    #[test]
    fn detects_cycles() {
        let t = Tree { root: 1, children: BTreeMap::from([(1, vec![2]), (2, vec![1])]) };
        assert!(t.validate().is_err());
        let t = Tree { root: 1, children: BTreeMap::from([(1, vec![]), (2, vec![])]) };
        assert!(t.validate().is_err());
    }
}
