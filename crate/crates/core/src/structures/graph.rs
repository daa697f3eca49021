use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::Label;
use crate::error::{Error, Result};

/// Simple undirected graph on an explicit label set.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted. Connectivity is not an
/// invariant of this type; the graph species checks it on validation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    labels: Vec<Label>,
    edges: Vec<(Label, Label)>,
}

impl Graph {
    pub fn new(labels: Vec<Label>, edges: Vec<(Label, Label)>) -> Result<Graph> {
        let g = Graph::new_unchecked(labels, edges);
        g.validate()?;
        Ok(g)
    }

    /// Normalizes without checking loops or foreign endpoints.
    pub fn new_unchecked(mut labels: Vec<Label>, edges: Vec<(Label, Label)>) -> Graph {
        labels.sort_unstable();
        labels.dedup();
        let mut edges: Vec<(Label, Label)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        edges.dedup();
        Graph { labels, edges }
    }

    pub fn validate(&self) -> Result<()> {
        for &(a, b) in &self.edges {
            if a == b {
                return Err(Error::InvalidStructure(format!("loop at {a}")));
            }
            if self.labels.binary_search(&a).is_err() || self.labels.binary_search(&b).is_err() {
                return Err(Error::InvalidStructure(format!("edge {a}-{b} leaves the vertex set")));
            }
        }
        if self.labels.is_empty() {
            return Err(Error::InvalidStructure("empty graph".into()));
        }
        Ok(())
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn edges(&self) -> &[(Label, Label)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn has_edge(&self, a: Label, b: Label) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn adjacency(&self) -> BTreeMap<Label, BTreeSet<Label>> {
        let mut adj: BTreeMap<Label, BTreeSet<Label>> = self.labels.iter().map(|&u| (u, BTreeSet::new())).collect();
        for &(a, b) in &self.edges {
            adj.entry(a).or_default().insert(b);
            adj.entry(b).or_default().insert(a);
        }
        adj
    }

    pub fn degree(&self, u: Label) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == u || b == u).count()
    }

    pub fn is_connected(&self) -> bool {
        components(&self.labels, &self.edges).len() == 1
    }

    pub fn relabel(&self, f: &dyn Fn(Label) -> Label) -> Graph {
        Graph::new_unchecked(
            self.labels.iter().map(|&u| f(u)).collect(),
            self.edges.iter().map(|&(a, b)| (f(a), f(b))).collect(),
        )
    }

    /// Subgraph induced on `block`.
    pub fn induced(&self, block: &[Label]) -> Graph {
        let set: BTreeSet<Label> = block.iter().copied().collect();
        Graph::new_unchecked(
            block.to_vec(),
            self.edges.iter().copied().filter(|(a, b)| set.contains(a) && set.contains(b)).collect(),
        )
    }

    /// BFS distances from `src` (unreachable vertices are absent).
    pub fn distances_from(&self, src: Label) -> BTreeMap<Label, usize> {
        let adj = self.adjacency();
        let mut dist = BTreeMap::from([(src, 0usize)]);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[&u];
            for &w in adj.get(&u).into_iter().flatten() {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                    e.insert(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Connected components of `(vertices, edges)`, each sorted, ordered by minimum.
pub fn components(vertices: &[Label], edges: &[(Label, Label)]) -> Vec<Vec<Label>> {
    let index: BTreeMap<Label, usize> = vertices.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for (a, b) in edges {
        let (Some(&i), Some(&j)) = (index.get(a), index.get(b)) else {
            continue;
        };
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri.max(rj)] = ri.min(rj);
        }
    }
    let mut groups: BTreeMap<usize, Vec<Label>> = BTreeMap::new();
    for (i, &v) in vertices.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(v);
    }
    let mut out: Vec<Vec<Label>> = groups
        .into_values()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    out.sort();
    out
}
