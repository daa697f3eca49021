//! Graph modules, quotients and biconnected components.

use std::collections::{BTreeMap, BTreeSet};

use crate::structures::{Graph, Label};

type Edge = (Label, Label);

/// Biconnected components as edge sets, and the cutpoints between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biconnected {
    pub blocks: Vec<Vec<Edge>>,
    pub cutpoints: Vec<Label>,
}

/// Hopcroft–Tarjan on a connected graph.
pub fn biconnected_components(g: &Graph) -> Biconnected {
    struct State {
        adj: BTreeMap<Label, BTreeSet<Label>>,
        disc: BTreeMap<Label, usize>,
        low: BTreeMap<Label, usize>,
        stack: Vec<Edge>,
        blocks: Vec<Vec<Edge>>,
        cut: BTreeSet<Label>,
    }

    fn visit(s: &mut State, u: Label, parent: Option<Label>) {
        let t = s.disc.len();
        s.disc.insert(u, t);
        s.low.insert(u, t);
        let mut children = 0;
        let neighbours: Vec<Label> = s.adj[&u].iter().copied().collect();
        for v in neighbours {
            if !s.disc.contains_key(&v) {
                children += 1;
                s.stack.push((u.min(v), u.max(v)));
                visit(s, v, Some(u));
                let lv = s.low[&v];
                let lu = s.low[&u].min(lv);
                s.low.insert(u, lu);
                if lv >= s.disc[&u] {
                    if parent.is_some() {
                        s.cut.insert(u);
                    }
                    let mut block = vec![];
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u.min(v), u.max(v)) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    s.blocks.push(block);
                }
            } else if Some(v) != parent && s.disc[&v] < s.disc[&u] {
                s.stack.push((u.min(v), u.max(v)));
                let lu = s.low[&u].min(s.disc[&v]);
                s.low.insert(u, lu);
            }
        }
        if parent.is_none() && children > 1 {
            s.cut.insert(u);
        }
    }

    let mut s = State {
        adj: g.adjacency(),
        disc: BTreeMap::new(),
        low: BTreeMap::new(),
        stack: vec![],
        blocks: vec![],
        cut: BTreeSet::new(),
    };
    if let Some(&start) = g.labels().first() {
        visit(&mut s, start, None);
    }
    s.blocks.sort();
    Biconnected { blocks: s.blocks, cutpoints: s.cut.into_iter().collect() }
}

/// `g_B` is a module when it is connected (a structure of the species) and
/// every vertex outside `B` sees either all of `B` or none of it.
pub fn is_module(g: &Graph, block: &[Label]) -> bool {
    !block.is_empty() && g.induced(block).is_connected() && sees_all_or_none(g, block)
}

/// The neighbourhood half of the module test, without connectivity.
pub fn sees_all_or_none(g: &Graph, block: &[Label]) -> bool {
    let inside: BTreeSet<Label> = block.iter().copied().collect();
    let adj = g.adjacency();
    g.labels().iter().filter(|u| !inside.contains(u)).all(|u| {
        let seen = adj[u].iter().filter(|v| inside.contains(v)).count();
        seen == 0 || seen == inside.len()
    })
}

/// The quotient on block indices `0..k`: blocks `i` and `j` are adjacent
/// when some edge of `g` joins them.
pub fn quotient_graph(g: &Graph, blocks: &[Vec<Label>]) -> Graph {
    let block_of: BTreeMap<Label, Label> =
        blocks.iter().enumerate().flat_map(|(i, b)| b.iter().map(move |&u| (u, i as Label))).collect();
    let mut edges = BTreeSet::new();
    for &(a, b) in g.edges() {
        let (i, j) = (block_of[&a], block_of[&b]);
        if i != j {
            edges.insert((i.min(j), i.max(j)));
        }
    }
    Graph::new_unchecked((0..blocks.len() as Label).collect(), edges.into_iter().collect())
}

/// Module test for `B` together with the quotient contracting `B` to a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleQuotient {
    pub is_module: bool,
    /// Outside vertices see all of `B` or none of it (true for some
    /// disconnected `B`, which are still not modules).
    pub uniform: bool,
    /// `B` and the singletons outside it, ordered by least element; these
    /// are the vertices `0..k` of the quotient.
    pub blocks: Vec<Vec<Label>>,
    pub quotient: Graph,
}

pub fn graph_modules_and_quotient(g: &Graph, b: &[Label]) -> ModuleQuotient {
    let mut big: Vec<Label> = b.to_vec();
    big.sort_unstable();
    big.dedup();
    let mut blocks: Vec<Vec<Label>> =
        g.labels().iter().filter(|u| big.binary_search(u).is_err()).map(|&u| vec![u]).collect();
    blocks.push(big.clone());
    blocks.sort();
    ModuleQuotient {
        is_module: is_module(g, &big),
        uniform: sees_all_or_none(g, &big),
        quotient: quotient_graph(g, &blocks),
        blocks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::parse_graph;

    fn graph(text: &str) -> Graph {
        parse_graph(text).unwrap().graph().unwrap().clone()
    }

    #[test]
    fn bowtie_blocks() {
        let b = biconnected_components(&graph("n=5; 1 2; 1 3; 2 3; 1 4; 1 5; 4 5"));
        assert_eq!(b.blocks, vec![vec![(1, 2), (1, 3), (2, 3)], vec![(1, 4), (1, 5), (4, 5)]]);
        assert_eq!(b.cutpoints, vec![1]);
    }

    #[test]
    fn edge_and_path_blocks() {
        let e = biconnected_components(&graph("n=2; 1 2"));
        assert_eq!(e.blocks.len(), 1);
        assert!(e.cutpoints.is_empty());
        let p = biconnected_components(&graph("n=3; 1 2; 2 3"));
        assert_eq!(p.blocks.len(), 2);
        assert_eq!(p.cutpoints, vec![2]);
    }

    #[test]
    fn k4_minus_e_module() {
        let g = graph("n=4; 1 2;1 3;1 4;2 3;2 4");
        // The degree-3 pair {1, 2} is a module with quotient P3.
        let mq = graph_modules_and_quotient(&g, &[1, 2]);
        assert!(mq.is_module);
        assert_eq!(mq.quotient.edges().len(), 2);
        // The degree-2 pair {3, 4} is seen uniformly and contracts to a
        // triangle, but it induces no edge, so it is not a module.
        let mq = graph_modules_and_quotient(&g, &[3, 4]);
        assert!(mq.uniform && !mq.is_module);
        assert_eq!(mq.quotient.edges().len(), 3);
        assert!(graph_modules_and_quotient(&g, &[2]).is_module);
    }

    #[test]
    fn path_ends_are_not_a_module() {
        let g = graph("n=3; 1 2; 2 3");
        let mq = graph_modules_and_quotient(&g, &[1, 3]);
        assert!(mq.uniform && !mq.is_module);
    }
}
