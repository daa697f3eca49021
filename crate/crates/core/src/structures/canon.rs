//! Canonical forms.
//!
//! Trees use the AHU parenthesis code (fibers sorted unless planar).
//! Graphs use the lexicographically least upper-triangle adjacency bitstring
//! over vertex orders compatible with a degree refinement; a pointed graph
//! forces its point into position 0.

use std::collections::BTreeMap;

use itertools::Itertools;

use super::{Graph, Label, Species, Structure, Tree};
use crate::algebra::{SpeciesTag, TypeKey};
use crate::error::{Error, Result};

/// Size limits for canonicalization and enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub general: usize,
    pub graphs: usize,
}

pub const MAX_N_ENV: &str = "OPERAD_HOPF_MAX_N";

impl Default for Caps {
    fn default() -> Self {
        Caps { general: 8, graphs: 6 }
    }
}

impl Caps {
    /// Defaults, overridden by `OPERAD_HOPF_MAX_N` when set.
    pub fn from_env() -> Caps {
        match std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(n) => Caps::uniform(n),
            None => Caps::default(),
        }
    }

    pub fn uniform(n: usize) -> Caps {
        Caps { general: n, graphs: n }
    }

    pub fn unbounded() -> Caps {
        Caps::uniform(usize::MAX)
    }

    pub fn limit(&self, species: Species) -> usize {
        if species.is_graph() {
            self.graphs
        } else {
            self.general
        }
    }

    pub fn check(&self, species: Species, size: usize) -> Result<()> {
        let cap = self.limit(species);
        if size > cap {
            Err(Error::SizeCapExceeded { size, cap })
        } else {
            Ok(())
        }
    }
}

pub fn canonical_key(s: &Structure, caps: &Caps) -> Result<TypeKey> {
    let n = s.size();
    caps.check(s.species(), n)?;
    let tag = s.species().tag();
    let bytes = match s {
        Structure::Set(_) => vec![],
        Structure::PointedSet(..) => vec![1],
        Structure::Graph(g) => graph_code(g, None),
        Structure::PointedGraph(g, p) => graph_code(g, Some(*p)),
        Structure::Tree(k, t) => {
            let mut out = Vec::with_capacity(2 * n);
            ahu(t, t.root(), k.ordered(), &mut out);
            out
        }
    };
    Ok(TypeKey::new(tag, n, bytes))
}

fn ahu(t: &Tree, u: Label, ordered: bool, out: &mut Vec<u8>) {
    let mut codes: Vec<Vec<u8>> = t
        .children(u)
        .iter()
        .map(|&c| {
            let mut v = vec![];
            ahu(t, c, ordered, &mut v);
            v
        })
        .collect();
    if !ordered {
        codes.sort();
    }
    out.push(b'(');
    for c in codes {
        out.extend(c);
    }
    out.push(b')');
}

fn graph_code(g: &Graph, point: Option<Label>) -> Vec<u8> {
    let n = g.len();
    let idx: BTreeMap<Label, usize> = g.labels().iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in g.edges() {
        adj[idx[&a]][idx[&b]] = true;
        adj[idx[&b]][idx[&a]] = true;
    }
    let deg: Vec<usize> = (0..n).map(|i| adj[i].iter().filter(|&&x| x).count()).collect();
    let invariant = |i: usize| {
        let mut nd: Vec<usize> = (0..n).filter(|&j| adj[i][j]).map(|j| deg[j]).collect();
        nd.sort_unstable();
        let pointed = point.map_or(1, |p| usize::from(idx[&p] != i));
        (pointed, deg[i], nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| invariant(i));
    let classes: Vec<Vec<usize>> =
        order.iter().copied().chunk_by(|&i| invariant(i)).into_iter().map(|(_, c)| c.collect()).collect();

    let mut best: Option<Vec<bool>> = None;
    let class_perms: Vec<Vec<Vec<usize>>> =
        classes.iter().map(|c| c.iter().copied().permutations(c.len()).collect()).collect();
    for choice in class_perms.iter().map(|p| p.iter()).multi_cartesian_product() {
        let perm: Vec<usize> = choice.into_iter().flatten().copied().collect();
        let bits: Vec<bool> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| adj[perm[i]][perm[j]]).collect();
        if best.as_ref().is_none_or(|b| bits < *b) {
            best = Some(bits);
        }
    }
    // multi_cartesian_product of zero iterators yields nothing.
    let bits = best.unwrap_or_default();
    pack(&bits)
}

fn pack(bits: &[bool]) -> Vec<u8> {
    bits.chunks(8)
        .map(|chunk| chunk.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | (u8::from(b) << (7 - i))))
        .collect()
}

fn unpack(bytes: &[u8], len: usize) -> Vec<bool> {
    (0..len).map(|i| bytes.get(i / 8).is_some_and(|b| b >> (7 - i % 8) & 1 == 1)).collect()
}

/// Rebuilds a structure on labels `1..=n` whose key is `key`.
pub fn decode_key(key: &TypeKey) -> Result<Structure> {
    let n = key.size();
    let labels: Vec<Label> = (1..=n as Label).collect();
    let bad = || Error::Parse(format!("undecodable type key {key}"));
    let s = match key.tag() {
        SpeciesTag::Set => Structure::Set(labels),
        SpeciesTag::PointedSet => Structure::PointedSet(labels, 1),
        SpeciesTag::Graph | SpeciesTag::PointedGraph => {
            let bits = unpack(key.bytes(), n * (n - 1) / 2);
            let mut edges = vec![];
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((i as Label + 1, j as Label + 1));
                    }
                    k += 1;
                }
            }
            let g = Graph::new(labels, edges)?;
            if key.tag() == SpeciesTag::Graph {
                Structure::Graph(g)
            } else {
                Structure::PointedGraph(g, 1)
            }
        }
        tag @ (SpeciesTag::RootedTree | SpeciesTag::PlanarTree | SpeciesTag::EnrichedTree) => {
            let kind = match Species::from_tag(tag) {
                Species::Tree(k) => k,
                _ => unreachable!(),
            };
            let mut next = 1;
            let mut children: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
            let mut stack: Vec<Label> = vec![];
            for &b in key.bytes() {
                match b {
                    b'(' => {
                        let u = next;
                        next += 1;
                        if let Some(&p) = stack.last() {
                            children.entry(p).or_default().push(u);
                        }
                        children.entry(u).or_default();
                        stack.push(u);
                    }
                    b')' => {
                        stack.pop().ok_or_else(bad)?;
                    }
                    _ => return Err(bad()),
                }
            }
            if next as usize != n + 1 || !stack.is_empty() {
                return Err(bad());
            }
            Structure::tree(kind, Tree::from_children(1, children))
        }
    };
    if canonical_key(&s, &Caps::unbounded())? != *key {
        return Err(bad());
    }
    Ok(s)
}

/// Short human-readable name for a type: set sizes, familiar graphs
/// (`K4`, `K4-e`, `P3`, `C4`, `K1,3`), chains `L3` and corollas `V3`.
/// Other trees print in nested notation, other graphs as canonical edge lists.
pub fn pretty_name(key: &TypeKey) -> String {
    let n = key.size();
    let graph = matches!(key.tag(), SpeciesTag::Graph | SpeciesTag::PointedGraph);
    if (n <= 2 && !graph) || matches!(key.tag(), SpeciesTag::Set | SpeciesTag::PointedSet) {
        return n.to_string();
    }
    let Ok(s) = decode_key(key) else {
        return key.wire();
    };
    match &s {
        Structure::Graph(g) => graph_name(g).unwrap_or_else(|| edge_list(g)),
        Structure::PointedGraph(g, p) => match graph_name(g) {
            // Complete graphs and cycles look the same from every vertex; for the
            // other named families up to P4 the degree of the point pins it down.
            Some(name) if g.edges().len() == n * (n - 1) / 2 || name.starts_with('C') => name,
            Some(name) if !(name.starts_with('P') && n > 4) => format!("{name}@{}", g.degree(*p)),
            _ => format!("{}@{p}", edge_list(g)),
        },
        Structure::Tree(_, t) => {
            let edges = t.edges();
            if edges.iter().all(|&(p, _)| t.children(p).len() == 1) {
                format!("L{n}")
            } else if t.children(t.root()).len() == n - 1 {
                format!("V{n}")
            } else {
                super::format_tree(t)
            }
        }
        _ => key.wire(),
    }
}

fn edge_list(g: &Graph) -> String {
    format!("[{}]", g.edges().iter().map(|(a, b)| format!("{a}-{b}")).join(" "))
}

fn graph_name(g: &Graph) -> Option<String> {
    let n = g.len();
    let m = g.edges().len();
    let mut degs: Vec<usize> = g.labels().iter().map(|&u| g.degree(u)).collect();
    degs.sort_unstable();
    let full = n * (n - 1) / 2;
    if m == full {
        Some(format!("K{n}"))
    } else if m + 1 == full && n >= 4 {
        Some(format!("K{n}-e"))
    } else if m == n - 1 && degs[n - 1] == 2 {
        Some(format!("P{n}"))
    } else if m == n && degs.iter().all(|&d| d == 2) {
        Some(format!("C{n}"))
    } else if m == n - 1 && degs[n - 1] == n - 1 {
        Some(format!("K1,{}", n - 1))
    } else {
        None
    }
}
