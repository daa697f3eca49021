//! Text formats.
//!
//! Graphs: clauses separated by `;` or newlines. `n=k` declares vertices
//! `1..=k`, an optional `p=v` points the graph at `v`, and every other clause
//! is an edge `u v`.
//!
//! Trees: `1(2,3(4))` is the tree rooted at 1 with children 2 and 3, where 3
//! has child 4. The written order is the fiber order of planar trees.

use std::collections::BTreeMap;

use super::{Graph, Label, Structure, Tree, TreeKind};
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Structure> {
    let mut n: Option<Label> = None;
    let mut point: Option<Label> = None;
    let mut edges = vec![];
    for clause in text.split([';', '\n']).map(str::trim).filter(|c| !c.is_empty()) {
        if let Some((key, value)) = clause.split_once('=') {
            let value: Label = value.trim().parse().map_err(|_| Error::Parse(format!("bad number in {clause:?}")))?;
            match key.trim() {
                "n" => n = Some(value),
                "p" | "point" => point = Some(value),
                other => return Err(Error::Parse(format!("unknown graph setting {other:?}"))),
            }
            continue;
        }
        let ends: Vec<Label> = clause
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad vertex {t:?}"))))
            .collect::<Result<_>>()?;
        match ends[..] {
            [a, b] => edges.push((a, b)),
            _ => return Err(Error::Parse(format!("expected an edge `u v`, got {clause:?}"))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("graph needs an `n=k` clause".into()))?;
    if n == 0 {
        return Err(Error::Parse("graph needs at least one vertex".into()));
    }
    let g = Graph::new((1..=n).collect(), edges).map_err(|e| Error::Parse(e.to_string()))?;
    let s = match point {
        Some(p) => Structure::PointedGraph(g, p),
        None => Structure::Graph(g),
    };
    s.validate().map_err(|_| Error::Parse("graph must be connected, with the point among its vertices".into()))?;
    Ok(s)
}

pub fn parse_tree(text: &str, kind: TreeKind) -> Result<Structure> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let mut children: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
    let root = parse_node(&chars, &mut pos, &mut children)?;
    if pos != chars.len() {
        return Err(Error::Parse(format!("trailing input at position {pos} in {text:?}")));
    }
    let t = Tree::from_children(root, children);
    let count: usize = t.fibers().values().map(Vec::len).sum::<usize>() + 1;
    if count != t.len() || t.validate().is_err() {
        return Err(Error::Parse(format!("repeated label in tree {text:?}")));
    }
    Ok(Structure::tree(kind, t))
}

fn parse_node(chars: &[char], pos: &mut usize, children: &mut BTreeMap<Label, Vec<Label>>) -> Result<Label> {
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    let label: Label = chars[start..*pos]
        .iter()
        .collect::<String>()
        .parse()
        .map_err(|_| Error::Parse(format!("expected a label at position {start}")))?;
    children.entry(label).or_default();
    if chars.get(*pos) == Some(&'(') {
        *pos += 1;
        loop {
            let c = parse_node(chars, pos, children)?;
            children.entry(label).or_default().push(c);
            match chars.get(*pos) {
                Some(',') => *pos += 1,
                Some(')') => {
                    *pos += 1;
                    break;
                }
                _ => return Err(Error::Parse(format!("expected `,` or `)` at position {pos}"))),
            }
        }
    }
    Ok(label)
}

/// Inverse of [`parse_tree`].
pub fn format_tree(t: &Tree) -> String {
    fn go(t: &Tree, u: Label, out: &mut String) {
        out.push_str(&u.to_string());
        let cs = t.children(u);
        if !cs.is_empty() {
            out.push('(');
            for (i, &c) in cs.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                go(t, c, out);
            }
            out.push(')');
        }
    }
    let mut out = String::new();
    go(t, t.root(), &mut out);
    out
}

/// Text form of a graph or pointed graph; labels are written as they are,
/// so the result only reparses when they are `1..=n`.
pub fn format_graph(s: &Structure) -> Option<String> {
    let g = s.graph()?;
    let mut clauses = vec![format!("n={}", g.len())];
    if let Structure::PointedGraph(_, p) = s {
        clauses.push(format!("p={p}"));
    }
    clauses.extend(g.edges().iter().map(|(a, b)| format!("{a} {b}")));
    Some(clauses.join("; "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_format() {
        let g = parse_graph("n=4; 1 2;1 3;1 4;2 3;2 4").unwrap();
        assert_eq!(g.edges().len(), 5);
        let p = parse_graph("n=3\np=2\n1 2\n2 3").unwrap();
        assert_eq!(p.point(), Some(2));
        assert!(parse_graph("n=3; 1 2").is_err());
        assert!(parse_graph("1 2").is_err());
        assert!(parse_graph("n=2; 1 x").is_err());
    }

    #[test]
    fn tree_format() {
        let t = parse_tree("1(2,3(4))", TreeKind::Planar).unwrap();
        let t = t.as_tree().unwrap();
        assert_eq!(t.root(), 1);
        assert_eq!(t.children(1), &[2, 3]);
        assert_eq!(t.children(3), &[4]);
        let p = parse_tree("1(3,2)", TreeKind::Planar).unwrap();
        assert_eq!(p.as_tree().unwrap().children(1), &[3, 2]);
        assert!(parse_tree("1(2,2)", TreeKind::Rooted).is_err());
        assert!(parse_tree("1(2", TreeKind::Rooted).is_err());
        assert!(parse_tree("1(2))", TreeKind::Rooted).is_err());
    }

    #[test]
    fn formats_round_trip() {
        for text in ["1(3,2(4))", "5", "1(2(3(4)))"] {
            let t = parse_tree(text, TreeKind::Planar).unwrap();
            assert_eq!(format_tree(t.as_tree().unwrap()), text);
        }
        let g = parse_graph("n=3; p=2; 1 2; 2 3").unwrap();
        assert_eq!(format_graph(&g).unwrap(), "n=3; p=2; 1 2; 2 3");
        assert_eq!(parse_graph(&format_graph(&g).unwrap()).unwrap(), g);
    }
}
