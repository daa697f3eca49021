use std::collections::BTreeSet;

use super::{check_eta_input, Assembly, Factorization, Operad};
use crate::error::{Error, Result};
use crate::structures::{partitions, Graph, Label, PartitionFilter, SetPartition, Species, Structure};

/// Gr: blocks adjacent in the outer graph are joined completely.
pub struct Gr;

/// Grp: blocks adjacent in the outer graph are joined through their points.
pub struct Grp;

fn piece_graph(s: &Structure) -> Result<&Graph> {
    s.graph().ok_or_else(|| Error::InvalidStructure("graph piece expected".into()))
}

fn piece_edges(a: &Assembly) -> Result<Vec<(Label, Label)>> {
    let mut edges = vec![];
    for p in a.pieces() {
        edges.extend_from_slice(piece_graph(p)?.edges());
    }
    Ok(edges)
}

/// Outer edges `(i, j)` for every pair of blocks joined by some edge of `g`.
fn crossing_pairs(a: &Assembly, g: &Graph) -> Option<Vec<(Label, Label)>> {
    let mut out = BTreeSet::new();
    for &(u, v) in g.edges() {
        let (i, j) = (a.block_of(u)?, a.block_of(v)?);
        if i != j {
            out.insert((i.min(j) as Label, i.max(j) as Label));
        }
    }
    Some(out.into_iter().collect())
}

impl Operad for Gr {
    fn name(&self) -> &'static str {
        "gr"
    }

    fn species(&self) -> Species {
        Species::Graph
    }

    fn description(&self) -> &'static str {
        "connected simple graphs, blocks joined completely"
    }

    fn eta(&self, a: &Assembly, outer: &Structure) -> Result<Structure> {
        check_eta_input(self, a, outer)?;
        let mut edges = piece_edges(a)?;
        for &(i, j) in outer.edges().iter() {
            for &u in &a.blocks()[i as usize] {
                for &v in &a.blocks()[j as usize] {
                    edges.push((u, v));
                }
            }
        }
        Ok(Structure::Graph(Graph::new_unchecked(a.labels(), edges)))
    }

    fn outer_candidate(&self, a: &Assembly, m: &Structure) -> Option<Structure> {
        let pairs = crossing_pairs(a, m.graph()?)?;
        Some(Structure::Graph(Graph::new_unchecked(a.index_labels(), pairs)))
    }

    fn fast_factorizations(&self, m: &Structure) -> Option<Vec<Factorization>> {
        let g = m.graph()?;
        let mut out = vec![];
        for p in partitions(g.labels(), PartitionFilter::default()) {
            if let Some(f) = gr_split(g, &p) {
                out.push(f);
            }
        }
        Some(out)
    }
}

/// The factorization over `p` when every block is connected and every pair
/// of blocks is joined by all or none of the possible edges.
fn gr_split(g: &Graph, p: &SetPartition) -> Option<Factorization> {
    let pieces: Vec<Graph> = p.iter().map(|b| g.induced(b)).collect();
    if !pieces.iter().all(Graph::is_connected) {
        return None;
    }
    let mut outer = vec![];
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let count =
                p[i].iter().flat_map(|&u| p[j].iter().map(move |&v| (u, v))).filter(|&(u, v)| g.has_edge(u, v)).count();
            if count == p[i].len() * p[j].len() {
                outer.push((i as Label, j as Label));
            } else if count != 0 {
                return None;
            }
        }
    }
    Some(Factorization {
        assembly: Assembly::new(pieces.into_iter().map(Structure::Graph).collect()).ok()?,
        outer: Structure::Graph(Graph::new_unchecked((0..p.len() as Label).collect(), outer)),
    })
}

impl Operad for Grp {
    fn name(&self) -> &'static str {
        "grp"
    }

    fn species(&self) -> Species {
        Species::PointedGraph
    }

    fn description(&self) -> &'static str {
        "connected pointed graphs, blocks joined at their points"
    }

    fn eta(&self, a: &Assembly, outer: &Structure) -> Result<Structure> {
        check_eta_input(self, a, outer)?;
        let points: Vec<Label> = a
            .pieces()
            .iter()
            .map(|p| p.point().ok_or_else(|| Error::InvalidStructure("unpointed piece".into())))
            .collect::<Result<_>>()?;
        let mut edges = piece_edges(a)?;
        for &(i, j) in outer.edges().iter() {
            edges.push((points[i as usize], points[j as usize]));
        }
        let b0 = outer.point().expect("pointed outer") as usize;
        Ok(Structure::PointedGraph(Graph::new_unchecked(a.labels(), edges), points[b0]))
    }

    fn outer_candidate(&self, a: &Assembly, m: &Structure) -> Option<Structure> {
        let pairs = crossing_pairs(a, m.graph()?)?;
        let b0 = a.block_of(m.point()?)?;
        Some(Structure::PointedGraph(Graph::new_unchecked(a.index_labels(), pairs), b0 as Label))
    }

    fn fast_factorizations(&self, m: &Structure) -> Option<Vec<Factorization>> {
        let g = m.graph()?;
        let v0 = m.point()?;
        let mut out = vec![];
        for p in partitions(g.labels(), PartitionFilter::default()) {
            if let Some(f) = grp_split(g, v0, &p) {
                out.push(f);
            }
        }
        Some(out)
    }
}

/// The factorization over `p` when each block is connected and all edges
/// leaving a block start at one vertex, which is the point for the block of `v0`.
fn grp_split(g: &Graph, v0: Label, p: &SetPartition) -> Option<Factorization> {
    let block_of = |u: Label| p.iter().position(|b| b.contains(&u)).expect("cover");
    let mut points: Vec<Option<Label>> = vec![None; p.len()];
    let b0 = block_of(v0);
    points[b0] = Some(v0);
    let mut outer = BTreeSet::new();
    for &(u, v) in g.edges() {
        let (i, j) = (block_of(u), block_of(v));
        if i == j {
            continue;
        }
        for (blk, end) in [(i, u), (j, v)] {
            match points[blk] {
                Some(q) if q != end => return None,
                _ => points[blk] = Some(end),
            }
        }
        outer.insert((i.min(j) as Label, i.max(j) as Label));
    }
    let mut pieces = vec![];
    for (b, pt) in p.iter().zip(&points) {
        let h = g.induced(b);
        if !h.is_connected() {
            return None;
        }
        // Only a lone block has no outside edges, and then it holds v0.
        pieces.push(Structure::PointedGraph(h, pt.unwrap_or(b[0])));
    }
    Some(Factorization {
        assembly: Assembly::new(pieces).ok()?,
        outer: Structure::PointedGraph(
            Graph::new_unchecked((0..p.len() as Label).collect(), outer.into_iter().collect()),
            b0 as Label,
        ),
    })
}
