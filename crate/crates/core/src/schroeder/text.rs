//! Text form of Schröder trees.
//!
//! ```text
//! tree       := label | "[" "(" decoration ")" tree tree+ "]"
//! decoration := ""                  sets
//!             | "p=i"               pointed sets
//!             | "i-j i-j …"         graphs
//!             | "p=i; i-j i-j …"    pointed graphs
//!             | "0(1,2(3))"         trees, in the nested notation
//! ```
//!
//! Decoration labels `0..k` name the children in the order written. Output
//! always lists children by smallest leaf.

use std::fmt;

use super::SchroederTree;
use crate::error::{Error, Result};
use crate::structures::{format_tree, parse_tree, Graph, Label, Species, Structure};

fn decoration_text(s: &Structure) -> String {
    let edges = |g: &Graph| g.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ");
    match s {
        Structure::Set(_) => String::new(),
        Structure::PointedSet(_, p) => format!("p={p}"),
        Structure::Graph(g) => edges(g),
        Structure::PointedGraph(g, p) => format!("p={p}; {}", edges(g)),
        Structure::Tree(_, t) => format_tree(t),
    }
}

impl fmt::Display for SchroederTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchroederTree::Leaf(u) => write!(f, "{u}"),
            SchroederTree::Node { decoration, children } => {
                write!(f, "[({})", decoration_text(decoration))?;
                for c in children {
                    write!(f, " {c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Parses the text form for decorations of `species`.
pub fn parse_schroeder(text: &str, species: Species) -> Result<SchroederTree> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let t = item(&chars, &mut pos, species)?;
    skip_ws(&chars, &mut pos);
    if pos != chars.len() {
        return Err(Error::Parse(format!("trailing input at position {pos}")));
    }
    Ok(t)
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while chars.get(*pos).is_some_and(|c| c.is_whitespace()) {
        *pos += 1;
    }
}

fn item(chars: &[char], pos: &mut usize, species: Species) -> Result<SchroederTree> {
    skip_ws(chars, pos);
    match chars.get(*pos) {
        Some('[') => {
            *pos += 1;
            skip_ws(chars, pos);
            if chars.get(*pos) != Some(&'(') {
                return Err(Error::Parse(format!("expected `(` at position {pos}")));
            }
            let start = *pos + 1;
            let mut depth = 0;
            loop {
                match chars.get(*pos) {
                    Some('(') => depth += 1,
                    Some(')') => {
                        depth -= 1;
                        if depth == 0 {
                            break;
                        }
                    }
                    None => return Err(Error::Parse("unclosed decoration".into())),
                    _ => {}
                }
                *pos += 1;
            }
            let dec: String = chars[start..*pos].iter().collect();
            *pos += 1;
            let mut children = vec![];
            loop {
                skip_ws(chars, pos);
                match chars.get(*pos) {
                    Some(']') => {
                        *pos += 1;
                        break;
                    }
                    None => return Err(Error::Parse("unclosed `[`".into())),
                    _ => children.push(item(chars, pos, species)?),
                }
            }
            let decoration = parse_decoration(dec.trim(), species, children.len())?;
            SchroederTree::node(decoration, children).map_err(|e| Error::Parse(e.to_string()))
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                *pos += 1;
            }
            let s: String = chars[start..*pos].iter().collect();
            Ok(SchroederTree::Leaf(s.parse().map_err(|_| Error::Parse(format!("bad label {s:?}")))?))
        }
        _ => Err(Error::Parse(format!("expected a label or `[` at position {pos}"))),
    }
}

fn number(s: &str) -> Result<Label> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad number {s:?}")))
}

fn parse_decoration(text: &str, species: Species, k: usize) -> Result<Structure> {
    let labels: Vec<Label> = (0..k as Label).collect();
    let point = |t: &str| -> Result<Option<Label>> { t.trim().strip_prefix("p=").map(number).transpose() };
    let s = match species {
        Species::Set if text.is_empty() => Structure::set(labels),
        Species::Set => return Err(Error::Parse("set decorations are empty".into())),
        Species::PointedSet => {
            let p = point(text)?.ok_or_else(|| Error::Parse("expected `p=i`".into()))?;
            Structure::pointed_set(labels, p)
        }
        Species::Graph | Species::PointedGraph => {
            let (p, body) = match text.split_once(';') {
                Some((head, body)) => (point(head)?, body),
                None => (None, text),
            };
            let mut edges = vec![];
            for tok in body.split_whitespace() {
                let (a, b) = tok.split_once('-').ok_or_else(|| Error::Parse(format!("bad edge {tok:?}")))?;
                edges.push((number(a)?, number(b)?));
            }
            let g = Graph::new(labels, edges).map_err(|e| Error::Parse(e.to_string()))?;
            match (species, p) {
                (Species::Graph, None) => Structure::Graph(g),
                (Species::PointedGraph, Some(p)) => Structure::PointedGraph(g, p),
                _ => return Err(Error::Parse("graph decorations take `p=i;` exactly when pointed".into())),
            }
        }
        Species::Tree(kind) => parse_tree(text, kind)?,
    };
    if s.labels() != (0..k as Label).collect::<Vec<_>>() || s.validate().is_err() {
        return Err(Error::Parse(format!("decoration ({text}) is not a structure on 0..{k}")));
    }
    Ok(s)
}
