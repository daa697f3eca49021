use std::collections::BTreeMap;

use itertools::Itertools;

use super::{Caps, Graph, Label, Species, Structure, Tree, TreeKind};
use crate::error::Result;

/// Every labelled structure of `species` on `labels`, in a fixed order.
pub fn enumerate_structures(species: Species, labels: &[Label], caps: &Caps) -> Result<Vec<Structure>> {
    caps.check(species, labels.len())?;
    let mut labels = labels.to_vec();
    labels.sort_unstable();
    if labels.is_empty() {
        return Ok(vec![]);
    }
    Ok(match species {
        Species::Set => vec![Structure::Set(labels)],
        Species::PointedSet => labels.iter().map(|&p| Structure::PointedSet(labels.clone(), p)).collect(),
        Species::Graph => connected_graphs(&labels).into_iter().map(Structure::Graph).collect(),
        Species::PointedGraph => connected_graphs(&labels)
            .into_iter()
            .flat_map(|g| labels.iter().map(move |&p| Structure::PointedGraph(g.clone(), p)).collect::<Vec<_>>())
            .collect(),
        Species::Tree(TreeKind::Planar) => rooted_trees(&labels)
            .into_iter()
            .flat_map(|t| planar_orders(&t))
            .map(|t| Structure::Tree(TreeKind::Planar, t))
            .collect(),
        Species::Tree(kind) => rooted_trees(&labels).into_iter().map(|t| Structure::tree(kind, t)).collect(),
    })
}

fn connected_graphs(labels: &[Label]) -> Vec<Graph> {
    let pairs: Vec<(Label, Label)> = labels.iter().copied().tuple_combinations().collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new_unchecked(labels.to_vec(), edges)
        })
        .filter(Graph::is_connected)
        .collect()
}

fn rooted_trees(labels: &[Label]) -> Vec<Tree> {
    let n = labels.len();
    let mut out = vec![];
    for &root in labels {
        let others: Vec<Label> = labels.iter().copied().filter(|&u| u != root).collect();
        let choices: Vec<Vec<Label>> =
            others.iter().map(|&u| labels.iter().copied().filter(|&p| p != u).collect()).collect();
        if others.is_empty() {
            out.push(Tree::singleton(root));
            continue;
        }
        for parents in choices.iter().map(|c| c.iter().copied()).multi_cartesian_product() {
            let map: BTreeMap<Label, Label> = others.iter().copied().zip(parents).collect();
            let reaches_root = others.iter().all(|&u| {
                let mut v = u;
                for _ in 0..n {
                    if v == root {
                        return true;
                    }
                    v = map[&v];
                }
                v == root
            });
            if reaches_root {
                out.push(Tree::from_parents(root, &map));
            }
        }
    }
    out
}

fn planar_orders(t: &Tree) -> Vec<Tree> {
    let fibers: Vec<(Label, Vec<Label>)> = t.fibers().iter().map(|(&u, cs)| (u, cs.clone())).collect();
    let per_fiber: Vec<Vec<Vec<Label>>> =
        fibers.iter().map(|(_, cs)| cs.iter().copied().permutations(cs.len()).collect()).collect();
    per_fiber
        .iter()
        .map(|p| p.iter())
        .multi_cartesian_product()
        .map(|orders| {
            let children = fibers.iter().map(|(u, _)| *u).zip(orders.into_iter().cloned()).collect();
            Tree::from_children(t.root(), children)
        })
        .collect()
}
