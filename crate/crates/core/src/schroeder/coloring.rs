//! Admissible edge colorings and the antipode formulas they index.
//!
//! Each rule is checked straight from its definition; the enumerators only
//! generate candidates, which are then filtered by [`is_admissible`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::One;

use super::graphs::{biconnected_components, is_module, quotient_graph};
use crate::algebra::{Coeff, Monomial, Polynomial, TypeKey};
use crate::error::{Error, Result};
use crate::hopf::HopfContext;
use crate::structures::{components, substructure, Graph, Label, Species, Structure, Tree, TreeKind};

type Edge = (Label, Label);

/// A map from the edges of a structure to positive colors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeColoring(BTreeMap<Edge, u32>);

impl EdgeColoring {
    pub fn new(colors: BTreeMap<Edge, u32>) -> Result<EdgeColoring> {
        if colors.values().any(|&c| c == 0) {
            return Err(Error::Range("colors are positive".into()));
        }
        Ok(EdgeColoring(colors))
    }

    pub fn colors(&self) -> &BTreeMap<Edge, u32> {
        &self.0
    }

    pub fn color(&self, e: &Edge) -> Option<u32> {
        self.0.get(e).copied()
    }

    pub fn max_color(&self) -> u32 {
        self.0.values().copied().max().unwrap_or(0)
    }

    pub fn edges_of(&self, color: u32) -> Vec<Edge> {
        self.0.iter().filter(|(_, &c)| c == color).map(|(&e, _)| e).collect()
    }

    /// Edges whose color is at least `color`.
    pub fn edges_from(&self, color: u32) -> Vec<Edge> {
        self.0.iter().filter(|(_, &c)| c >= color).map(|(&e, _)| e).collect()
    }

    fn touches(&self, u: Label, color: u32) -> bool {
        self.0.iter().any(|(&(a, b), &c)| c == color && (a == u || b == u))
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|((a, b), c)| format!("{a}-{b}:{c}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Which admissibility definition applies, read off the species.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringRule {
    /// Rooted trees (plain or enriched with sets).
    Arb,
    /// Planar trees: additionally, deeper colors sit to the left in each fiber.
    ArbPlanar,
    Gr,
    Grp,
}

impl ColoringRule {
    pub fn for_species(species: Species) -> Result<ColoringRule> {
        match species {
            Species::Tree(TreeKind::Planar) => Ok(ColoringRule::ArbPlanar),
            Species::Tree(_) => Ok(ColoringRule::Arb),
            Species::Graph => Ok(ColoringRule::Gr),
            Species::PointedGraph => Ok(ColoringRule::Grp),
            other => Err(Error::Unsupported(format!("no coloring formula for species {}", other.tag().as_str()))),
        }
    }
}

/// Checks `c` against the admissibility definition for the species of `m`.
pub fn is_admissible(m: &Structure, c: &EdgeColoring) -> Result<bool> {
    let rule = ColoringRule::for_species(m.species())?;
    let edges: BTreeSet<Edge> = m.edges().into_iter().collect();
    if edges != c.0.keys().copied().collect() {
        return Ok(false);
    }
    if edges.is_empty() {
        return Ok(true);
    }
    let ok = match (rule, m) {
        (ColoringRule::Arb, Structure::Tree(_, t)) => arb_ok(t, c, false),
        (ColoringRule::ArbPlanar, Structure::Tree(_, t)) => arb_ok(t, c, true),
        (ColoringRule::Gr, Structure::Graph(g)) => gr_ok(g, c),
        (ColoringRule::Grp, Structure::PointedGraph(g, v0)) => grp_ok(g, *v0, c),
        _ => unreachable!("rule follows the species"),
    };
    // Every rule forces the image to be 1..k.
    debug_assert!(!ok || contiguous(c));
    Ok(ok)
}

fn contiguous(c: &EdgeColoring) -> bool {
    let used: BTreeSet<u32> = c.0.values().copied().collect();
    used.iter().copied().eq(1..=c.max_color())
}

fn arb_ok(t: &Tree, c: &EdgeColoring, planar: bool) -> bool {
    let parents = t.parents();
    let col = |p: Label, u: Label| c.0[&(p, u)];
    if !c.0.values().any(|&x| x == 1) {
        return false;
    }
    // Weakly increasing away from the root.
    for (&u, &p) in &parents {
        if t.children(u).iter().any(|&w| col(u, w) < col(p, u)) {
            return false;
        }
    }
    // The top of each color-i component, i ≥ 2, meets color i − 1.
    for i in 2..=c.max_color() {
        let es = c.edges_of(i);
        for comp in components(&vertices_of(&es), &es) {
            let top = *comp.iter().find(|&&u| parents.get(&u).is_none_or(|&p| c.0[&(p, u)] != i)).expect("top");
            let above = parents.get(&top).map(|&p| col(p, top));
            let below = t.children(top).iter().map(|&w| col(top, w));
            if !above.into_iter().chain(below).any(|x| x == i - 1) {
                return false;
            }
        }
    }
    if planar {
        for u in t.labels() {
            let fiber: Vec<u32> = t.children(u).iter().map(|&w| col(u, w)).collect();
            if fiber.windows(2).any(|w| w[0] < w[1]) {
                return false;
            }
        }
    }
    true
}

fn gr_ok(g: &Graph, c: &EdgeColoring) -> bool {
    let k = c.max_color();
    for i in 2..=k {
        // Each vertex on a color-i edge also lies on a color-(i−1) edge.
        for (a, b) in c.edges_of(i) {
            if !c.touches(a, i - 1) || !c.touches(b, i - 1) {
                return false;
            }
        }
        // g(i) divides g(i−1): every component of g(i) is a module of its
        // component of g(i−1), with exactly the edges it inherits.
        let upper = c.edges_from(i - 1);
        let lower = c.edges_from(i);
        for comp in components(g.labels(), &upper) {
            let outer = Graph::new_unchecked(comp.clone(), inside(&upper, &comp));
            for block in components(&comp, &inside(&lower, &comp)) {
                if !is_module(&outer, &block) || outer.induced(&block).edges() != inside(&lower, &block).as_slice() {
                    return false;
                }
            }
        }
    }
    k == 0 || !c.edges_of(1).is_empty()
}

fn grp_ok(g: &Graph, v0: Label, c: &EdgeColoring) -> bool {
    let bc = biconnected_components(g);
    let mut block_color = vec![];
    for b in &bc.blocks {
        let cs: BTreeSet<u32> = b.iter().map(|e| c.0[e]).collect();
        if cs.len() != 1 {
            return false;
        }
        block_color.push(*cs.first().expect("non-empty block"));
    }
    if !block_color.contains(&1) {
        return false;
    }
    // Weakly increasing along the block-cut tree, away from v0: the block
    // holding the top vertex of B from the v0 side has a color at most B's.
    let dist = g.distances_from(v0);
    let verts: Vec<BTreeSet<Label>> = bc.blocks.iter().map(|b| vertices_of(b).into_iter().collect()).collect();
    for (j, b) in verts.iter().enumerate() {
        let top = *b.iter().min_by_key(|u| dist[u]).expect("non-empty");
        if top == v0 {
            continue;
        }
        let parent = verts
            .iter()
            .position(|o| o.contains(&top) && o.iter().any(|u| dist[u] < dist[&top]))
            .expect("a block toward v0");
        if block_color[parent] > block_color[j] {
            return false;
        }
    }
    for i in 2..=c.max_color() {
        let es = c.edges_of(i);
        for comp in components(&vertices_of(&es), &es) {
            let touches_lower =
                comp.iter().any(|u| verts.iter().zip(&block_color).any(|(b, &bcol)| bcol == i - 1 && b.contains(u)));
            if !touches_lower {
                return false;
            }
        }
    }
    true
}

fn vertices_of(edges: &[Edge]) -> Vec<Label> {
    let set: BTreeSet<Label> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    set.into_iter().collect()
}

fn inside(edges: &[Edge], block: &[Label]) -> Vec<Edge> {
    edges.iter().copied().filter(|(a, b)| block.contains(a) && block.contains(b)).collect()
}

/// All admissible colorings of `m`, in increasing order.
pub fn admissible_colorings(m: &Structure) -> Result<Vec<EdgeColoring>> {
    let rule = ColoringRule::for_species(m.species())?;
    m.validate()?;
    let edges = m.edges();
    if edges.is_empty() {
        return Ok(vec![EdgeColoring(BTreeMap::new())]);
    }
    let candidates = match (rule, m) {
        (ColoringRule::Arb | ColoringRule::ArbPlanar, Structure::Tree(_, t)) => tree_candidates(t),
        (ColoringRule::Grp, Structure::PointedGraph(g, _)) => block_candidates(g),
        (ColoringRule::Gr, Structure::Graph(g)) => layered_candidates(g),
        _ => unreachable!("rule follows the species"),
    };
    let mut out = vec![];
    for c in candidates {
        if is_admissible(m, &c)? {
            out.push(c);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Colorings in `1..=|E|` that weakly increase away from the root.
fn tree_candidates(t: &Tree) -> Vec<EdgeColoring> {
    let edges: Vec<Edge> = t.preorder().into_iter().flat_map(|u| t.children(u).iter().map(move |&w| (u, w))).collect();
    let parents = t.parents();
    let top = edges.len() as u32;
    let mut out = vec![];
    let mut current = BTreeMap::new();
    fn go(
        i: usize,
        edges: &[Edge],
        parents: &BTreeMap<Label, Label>,
        top: u32,
        current: &mut BTreeMap<Edge, u32>,
        out: &mut Vec<EdgeColoring>,
    ) {
        if i == edges.len() {
            out.push(EdgeColoring(current.clone()));
            return;
        }
        let (u, w) = edges[i];
        let floor = parents.get(&u).map_or(1, |&p| current[&(p, u)]);
        for color in floor..=top {
            current.insert((u, w), color);
            go(i + 1, edges, parents, top, current, out);
        }
        current.remove(&(u, w));
    }
    go(0, &edges, &parents, top, &mut current, &mut out);
    out
}

/// Colorings constant on biconnected blocks.
fn block_candidates(g: &Graph) -> Vec<EdgeColoring> {
    let blocks = biconnected_components(g).blocks;
    let top = blocks.len() as u32;
    let mut out = vec![];
    let mut colors = vec![1u32; blocks.len()];
    loop {
        let map = blocks.iter().zip(&colors).flat_map(|(b, &c)| b.iter().map(move |&e| (e, c))).collect();
        out.push(EdgeColoring(map));
        let Some(i) = colors.iter().position(|&c| c < top) else { break };
        colors[i] += 1;
        colors[..i].iter_mut().for_each(|c| *c = 1);
    }
    out
}

/// Colorings built level by level: color `i` is a non-empty subset of the
/// edges still uncolored, kept only when the remaining graph divides the
/// current one and the vertex condition holds so far.
fn layered_candidates(g: &Graph) -> Vec<EdgeColoring> {
    let mut out = vec![];
    let all: Vec<Edge> = g.edges().to_vec();
    layer(g, &all, 1, &mut BTreeMap::new(), &mut out);
    out
}

fn layer(g: &Graph, rest: &[Edge], level: u32, current: &mut BTreeMap<Edge, u32>, out: &mut Vec<EdgeColoring>) {
    if rest.is_empty() {
        out.push(EdgeColoring(current.clone()));
        return;
    }
    let n = rest.len();
    for mask in 1u64..1 << n {
        let (mut now, mut later) = (vec![], vec![]);
        for (j, &e) in rest.iter().enumerate() {
            if mask >> j & 1 == 1 {
                now.push(e);
            } else {
                later.push(e);
            }
        }
        if level >= 2
            && !now.iter().all(|&(a, b)| {
                let has = |u: Label| current.iter().any(|(&(x, y), &c)| c == level - 1 && (x == u || y == u));
                has(a) && has(b)
            })
        {
            continue;
        }
        if !divides_layer(g, rest, &later) {
            continue;
        }
        for &e in &now {
            current.insert(e, level);
        }
        layer(g, &later, level + 1, current, out);
        for e in &now {
            current.remove(e);
        }
    }
}

fn divides_layer(g: &Graph, upper: &[Edge], lower: &[Edge]) -> bool {
    components(g.labels(), upper).into_iter().all(|comp| {
        let outer = Graph::new_unchecked(comp.clone(), inside(upper, &comp));
        components(&comp, &inside(lower, &comp))
            .iter()
            .all(|b| is_module(&outer, b) && outer.induced(b).edges() == inside(lower, b).as_slice())
    })
}

/// The signed monomial a coloring contributes to the antipode.
pub fn coloring_term(m: &Structure, c: &EdgeColoring) -> Result<Polynomial> {
    let rule = ColoringRule::for_species(m.species())?;
    let mut keys: Vec<TypeKey> = vec![];
    match rule {
        ColoringRule::Arb | ColoringRule::ArbPlanar | ColoringRule::Grp => {
            // Color-i components, rooted or pointed at their vertex nearest
            // the root (for i = 1 in a pointed graph this is v0 itself).
            for i in 1..=c.max_color() {
                let es = c.edges_of(i);
                for comp in components(&vertices_of(&es), &es) {
                    keys.push(substructure(m, &comp, &inside(&es, &comp)).key());
                }
            }
        }
        ColoringRule::Gr => {
            let g = m.graph().expect("graph species");
            // Non-singleton components of the quotients g(i)/g(i+1).
            for i in 1..=c.max_color() {
                let upper = c.edges_from(i);
                let lower = c.edges_from(i + 1);
                for comp in components(g.labels(), &upper) {
                    if comp.len() < 2 {
                        continue;
                    }
                    let outer = Graph::new_unchecked(comp.clone(), inside(&upper, &comp));
                    let blocks = components(&comp, &inside(&lower, &comp));
                    keys.push(Structure::Graph(quotient_graph(&outer, &blocks)).key());
                }
            }
        }
    }
    let sign = if keys.len().is_multiple_of(2) { Coeff::one() } else { -Coeff::one() };
    Ok(Polynomial::term(sign, Monomial::from_keys(keys)))
}

/// S(t_α) as the signed sum over admissible colorings of a representative.
pub fn antipode_colorings(ctx: &HopfContext, key: &TypeKey) -> Result<Polynomial> {
    ColoringRule::for_species(ctx.species())?;
    if key.is_singleton() {
        return Ok(Polynomial::one());
    }
    let m = ctx.representative(key)?;
    let mut out = Polynomial::zero();
    for c in admissible_colorings(&m)? {
        out += coloring_term(&m, &c)?;
    }
    Ok(out)
}
