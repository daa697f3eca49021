//! The Connes–Kreimer Hopf algebra of rooted forests and the epimorphism
//! B⁻ out of the rooted-tree natural Hopf algebra.
//!
//! Generators are rooted-tree type keys, but here the one-vertex tree is a
//! genuine generator: monomials are built with [`Monomial::from_keys_raw`].

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{rat, Monomial, Tensor2, Tensor3, TypeKey};
use crate::error::{Error, Result};
use crate::hopf::HopfContext;
use crate::structures::{decode_key, Caps, Label, Species, Structure, Tree, TreeKind};

const ROOTED: Species = Species::Tree(TreeKind::Rooted);

fn rooted_tree(key: &TypeKey) -> Result<Tree> {
    match decode_key(key)? {
        Structure::Tree(TreeKind::Rooted, t) => Ok(t),
        other => Err(Error::SpeciesMismatch {
            expected: ROOTED.tag().as_str().into(),
            found: other.species().tag().as_str().into(),
        }),
    }
}

fn key(t: Tree) -> TypeKey {
    Structure::tree(TreeKind::Rooted, t).key()
}

/// The trees of `t` restricted to `keep`, each rooted at its top vertex.
fn induced_forest(t: &Tree, keep: &BTreeSet<Label>) -> Vec<Tree> {
    let parents = t.parents();
    let tops = keep.iter().filter(|u| parents.get(u).is_none_or(|p| !keep.contains(p)));
    tops.map(|&top| {
        let mut children = BTreeMap::new();
        let mut stack = vec![top];
        while let Some(u) = stack.pop() {
            let ch: Vec<Label> = t.children(u).iter().copied().filter(|c| keep.contains(c)).collect();
            stack.extend(&ch);
            children.insert(u, ch);
        }
        Tree::from_children(top, children)
    })
    .collect()
}

/// Vertex sets closed under taking parents (the root excluded from the
/// closure when `below_root`), the empty set included.
fn upward_closed(t: &Tree, below_root: bool) -> Vec<BTreeSet<Label>> {
    let root = t.root();
    let vs: Vec<Label> = t.labels().into_iter().filter(|&u| !(below_root && u == root)).collect();
    let parents = t.parents();
    let mut out = vec![];
    for mask in 0u64..1 << vs.len() {
        let set: BTreeSet<Label> = vs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        let closed = set.iter().all(|u| match parents.get(u) {
            None => true,
            Some(p) if below_root && *p == root => true,
            Some(p) => set.contains(p),
        });
        if closed {
            out.push(set);
        }
    }
    out
}

/// Vertex bicolorings of `t` whose color-1 vertices form a (possibly empty)
/// subtree at the root; each is returned as its color-1 set.
pub fn vertex_bicolorings(t: &Tree) -> Vec<BTreeSet<Label>> {
    upward_closed(t, false)
}

/// `Δ_CK(t_T) = Σ t_{τ(forest of color 2)} ⊗ t_{τ(subtree of color 1)}`.
pub fn ck_coproduct_tree(t: &Tree) -> Tensor2 {
    let all: BTreeSet<Label> = t.labels().into_iter().collect();
    let mut out = Tensor2::zero();
    for top in vertex_bicolorings(t) {
        let rest: BTreeSet<Label> = all.difference(&top).copied().collect();
        let left = Monomial::from_keys_raw(induced_forest(t, &rest).into_iter().map(key));
        let right = Monomial::from_keys_raw(induced_forest(t, &top).into_iter().map(key));
        out.add_term(left, right, rat(1));
    }
    out
}

pub fn ck_coproduct(k: &TypeKey, caps: &Caps) -> Result<Tensor2> {
    caps.check(ROOTED, k.size())?;
    Ok(ck_coproduct_tree(&rooted_tree(k)?))
}

pub fn ck_coproduct_monomial(m: &Monomial, caps: &Caps) -> Result<Tensor2> {
    let mut out = Tensor2::one();
    for k in m.factors() {
        out = out.mul(&ck_coproduct(k, caps)?);
    }
    Ok(out)
}

/// Both sides of coassociativity for `Δ_CK` on one tree.
pub fn ck_coassociativity_sides(k: &TypeKey, caps: &Caps) -> Result<(Tensor3, Tensor3)> {
    let d = ck_coproduct(k, caps)?;
    let (mut left, mut right) = (Tensor3::default(), Tensor3::default());
    for ((a, b), c) in d.terms() {
        for ((x, y), c2) in ck_coproduct_monomial(a, caps)?.terms() {
            left.add_term(x.clone(), y.clone(), b.clone(), c * c2);
        }
        for ((x, y), c2) in ck_coproduct_monomial(b, caps)?.terms() {
            right.add_term(a.clone(), x.clone(), y.clone(), c * c2);
        }
    }
    Ok((left, right))
}

/// B⁺: grafts the trees of a forest under a new root.
pub fn b_plus(forest: &Monomial) -> Result<TypeKey> {
    let mut children: BTreeMap<Label, Vec<Label>> = BTreeMap::from([(0, vec![])]);
    let mut offset = 1;
    for k in forest.factors() {
        let t = rooted_tree(k)?;
        let shift = offset;
        let moved = t.relabel(&|u| u - t.labels()[0] + shift);
        children.get_mut(&0).expect("root present").push(moved.root());
        for (u, ch) in moved.fibers() {
            children.insert(*u, ch.clone());
        }
        offset += t.len() as Label;
    }
    Ok(key(Tree::from_children(0, children)))
}

/// B⁻: removes the root, leaving the forest of its subtrees.
pub fn b_minus(k: &TypeKey) -> Result<Monomial> {
    let t = rooted_tree(k)?;
    let rest: BTreeSet<Label> = t.labels().into_iter().filter(|&u| u != t.root()).collect();
    Ok(Monomial::from_keys_raw(induced_forest(&t, &rest).into_iter().map(key)))
}

/// B⁻ on a monomial of the rooted-tree natural Hopf algebra, where the
/// one-vertex tree is already 1.
pub fn b_minus_monomial(m: &Monomial) -> Result<Monomial> {
    m.factors().iter().try_fold(Monomial::one(), |acc, k| Ok(acc.mul(&b_minus(k)?)))
}

/// Edge bicolorings of `t` whose color-1 edges form a subtree at the root,
/// as color-1 edge sets.
pub fn edge_bicolorings(t: &Tree) -> Vec<BTreeSet<(Label, Label)>> {
    upward_closed(t, true).into_iter().map(|vs| move_down(t, &vs)).collect()
}

/// Moves each edge color onto its endpoint away from the root.
pub fn move_up(edges: &BTreeSet<(Label, Label)>) -> BTreeSet<Label> {
    edges.iter().map(|&(_, c)| c).collect()
}

/// Inverse of [`move_up`].
pub fn move_down(t: &Tree, vertices: &BTreeSet<Label>) -> BTreeSet<(Label, Label)> {
    vertices.iter().filter_map(|&v| t.parent(v).map(|p| (p, v))).collect()
}

/// Vertex bicolorings of the forest B⁻(t) that are admissible in every tree.
pub fn forest_vertex_bicolorings(t: &Tree) -> Vec<BTreeSet<Label>> {
    upward_closed(t, true)
}

#[derive(Clone, Debug, Default)]
pub struct MorphismReport {
    pub checked: usize,
    pub counterexample: Option<String>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `(B⁻⊗B⁻)∘Δ = Δ_CK∘B⁻` on every rooted-tree type up to `max_size`.
pub fn b_minus_morphism_check(ctx: &HopfContext, max_size: usize) -> Result<MorphismReport> {
    if ctx.species() != ROOTED {
        return Err(Error::SpeciesMismatch {
            expected: ROOTED.tag().as_str().into(),
            found: ctx.species().tag().as_str().into(),
        });
    }
    let mut report = MorphismReport::default();
    for n in 1..=max_size {
        for k in ctx.types(n)? {
            let mut lhs = Tensor2::zero();
            for ((l, r), c) in ctx.coproduct(&k)?.terms() {
                lhs.add_term(b_minus_monomial(l)?, b_minus_monomial(r)?, c.clone());
            }
            let image = if k.is_singleton() { Monomial::one() } else { b_minus(&k)? };
            let rhs = ck_coproduct_monomial(&image, &Caps::unbounded())?;
            report.checked += 1;
            if lhs != rhs {
                report.counterexample = Some(format!("{k}: {lhs:?} != {rhs:?}"));
                return Ok(report);
            }
        }
    }
    Ok(report)
}
