use std::collections::{BTreeMap, BTreeSet};

use super::{check_eta_input, Assembly, Factorization, ListMonoid, Monoid, Operad, SetMonoid};
use crate::error::{Error, Result};
use crate::structures::{components, Label, Species, Structure, Tree, TreeKind};

/// Rooted trees whose fibers are enriched by a monoid: the root of every
/// outer child is grafted under the root of its parent block, and at that
/// root the fiber becomes ν(inner fiber, outer children).
///
/// With the set monoid this is the NAP operad on rooted trees; with the list
/// monoid it is the operad of planar trees.
pub struct TreeOperad {
    name: &'static str,
    description: &'static str,
    kind: TreeKind,
    monoid: Box<dyn Monoid>,
}

impl TreeOperad {
    pub fn arb() -> Self {
        TreeOperad {
            name: "arb",
            description: "rooted trees under root grafting (NAP)",
            kind: TreeKind::Rooted,
            monoid: Box::new(SetMonoid),
        }
    }

    pub fn arb_l() -> Self {
        TreeOperad {
            name: "arb-l",
            description: "planar rooted trees; inner children precede grafted ones",
            kind: TreeKind::Planar,
            monoid: Box::new(ListMonoid),
        }
    }

    pub fn arb_e() -> Self {
        TreeOperad {
            name: "arb-e",
            description: "rooted trees enriched with sets",
            kind: TreeKind::Enriched,
            monoid: Box::new(SetMonoid),
        }
    }

    pub fn kind(&self) -> TreeKind {
        self.kind
    }

    pub fn monoid(&self) -> &dyn Monoid {
        self.monoid.as_ref()
    }
}

fn piece_tree(s: &Structure) -> Result<&Tree> {
    s.as_tree().ok_or_else(|| Error::InvalidStructure("tree piece expected".into()))
}

impl Operad for TreeOperad {
    fn name(&self) -> &'static str {
        self.name
    }

    fn species(&self) -> Species {
        Species::Tree(self.kind)
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn eta(&self, a: &Assembly, outer: &Structure) -> Result<Structure> {
        check_eta_input(self, a, outer)?;
        let trees: Vec<&Tree> = a.pieces().iter().map(piece_tree).collect::<Result<_>>()?;
        let roots: Vec<Label> = trees.iter().map(|t| t.root()).collect();
        let outer_tree = piece_tree(outer)?;
        let mut fibers: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
        for t in &trees {
            for (&u, cs) in t.fibers() {
                fibers.insert(u, cs.clone());
            }
        }
        for (i, &r) in roots.iter().enumerate() {
            let grafted: Vec<Label> = outer_tree.children(i as Label).iter().map(|&j| roots[j as usize]).collect();
            if !grafted.is_empty() {
                let inner = fibers.remove(&r).unwrap_or_default();
                fibers.insert(r, self.monoid.nu(&inner, &grafted));
            }
        }
        let root = roots[outer_tree.root() as usize];
        Ok(Structure::tree(self.kind, Tree::from_children(root, fibers)))
    }

    fn outer_candidate(&self, a: &Assembly, m: &Structure) -> Option<Structure> {
        let t = m.as_tree()?;
        let parents = t.parents();
        let roots: Vec<Label> = a.pieces().iter().map(|p| p.as_tree().map(Tree::root)).collect::<Option<_>>()?;
        let mut grafted: BTreeMap<Label, Vec<(usize, Label)>> = BTreeMap::new();
        for (j, r) in roots.iter().enumerate() {
            if let Some(&p) = parents.get(r) {
                let i = a.block_of(p)?;
                let pos = t.children(p).iter().position(|c| c == r)?;
                grafted.entry(i as Label).or_default().push((pos, j as Label));
            }
        }
        let mut children: BTreeMap<Label, Vec<Label>> = a.index_labels().into_iter().map(|i| (i, vec![])).collect();
        for (i, mut v) in grafted {
            v.sort_unstable();
            children.insert(i, v.into_iter().map(|(_, j)| j).collect());
        }
        let outer = Tree::from_children(a.block_of(t.root())? as Label, children);
        Some(Structure::tree(self.kind, outer))
    }

    fn fast_factorizations(&self, m: &Structure) -> Option<Vec<Factorization>> {
        let t = m.as_tree()?;
        let edges = t.edges();
        let labels = t.labels();
        let parents = t.parents();
        let mut out = vec![];
        for mask in 0u64..1 << edges.len() {
            let cut: BTreeSet<(Label, Label)> =
                edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            if let Some(f) = self.split(t, &labels, &edges, &parents, &cut) {
                out.push(f);
            }
        }
        Some(out)
    }
}

impl TreeOperad {
    /// The factorization whose outer edges are `cut`, if the bicoloring is valid.
    fn split(
        &self,
        t: &Tree,
        labels: &[Label],
        edges: &[(Label, Label)],
        parents: &BTreeMap<Label, Label>,
        cut: &BTreeSet<(Label, Label)>,
    ) -> Option<Factorization> {
        let inner: Vec<(Label, Label)> = edges.iter().copied().filter(|e| !cut.contains(e)).collect();
        let blocks = components(labels, &inner);
        let block_of: BTreeMap<Label, usize> =
            blocks.iter().enumerate().flat_map(|(i, b)| b.iter().map(move |&u| (u, i))).collect();
        let is_block_root = |u: Label| parents.get(&u).is_none_or(|&p| cut.contains(&(p, u)));
        if !cut.iter().all(|&(p, _)| is_block_root(p)) {
            return None;
        }
        let mut pieces = vec![];
        let mut outer_children: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
        for (i, b) in blocks.iter().enumerate() {
            let root = *b.iter().find(|&&u| is_block_root(u))?;
            let fiber = t.children(root);
            let split = fiber.iter().position(|&c| cut.contains(&(root, c))).unwrap_or(fiber.len());
            let (head, tail) = fiber.split_at(split);
            if self.kind.ordered() && tail.iter().any(|&c| !cut.contains(&(root, c))) {
                return None;
            }
            let outer_kids: Vec<Label> =
                fiber.iter().filter(|&&c| cut.contains(&(root, c))).map(|&c| block_of[&c] as Label).collect();
            outer_children.insert(i as Label, outer_kids);
            let mut fibers: BTreeMap<Label, Vec<Label>> = b.iter().map(|&u| (u, t.children(u).to_vec())).collect();
            let inner_root: Vec<Label> = if self.kind.ordered() {
                head.to_vec()
            } else {
                fiber.iter().copied().filter(|&c| !cut.contains(&(root, c))).collect()
            };
            fibers.insert(root, inner_root);
            pieces.push(Structure::tree(self.kind, Tree::from_children(root, fibers)));
        }
        let outer_root = block_of[&t.root()] as Label;
        Some(Factorization {
            assembly: Assembly::new(pieces).ok()?,
            outer: Structure::tree(self.kind, Tree::from_children(outer_root, outer_children)),
        })
    }
}
