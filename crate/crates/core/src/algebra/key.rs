use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Species a structure (and hence its isomorphism type) belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SpeciesTag {
    Set,
    PointedSet,
    Graph,
    PointedGraph,
    RootedTree,
    PlanarTree,
    EnrichedTree,
}

impl SpeciesTag {
    pub const ALL: [SpeciesTag; 7] = [
        SpeciesTag::Set,
        SpeciesTag::PointedSet,
        SpeciesTag::Graph,
        SpeciesTag::PointedGraph,
        SpeciesTag::RootedTree,
        SpeciesTag::PlanarTree,
        SpeciesTag::EnrichedTree,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SpeciesTag::Set => "set",
            SpeciesTag::PointedSet => "pset",
            SpeciesTag::Graph => "graph",
            SpeciesTag::PointedGraph => "pgraph",
            SpeciesTag::RootedTree => "tree",
            SpeciesTag::PlanarTree => "planar",
            SpeciesTag::EnrichedTree => "etree",
        }
    }
}

impl FromStr for SpeciesTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpeciesTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown species tag {s:?}")))
    }
}

/// Canonical name of an isomorphism type.
///
/// Field order matters: the derived `Ord` is the monomial order
/// (species tag, then size, then canonical bytes).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeKey {
    tag: SpeciesTag,
    size: usize,
    bytes: Vec<u8>,
}

impl TypeKey {
    pub fn new(tag: SpeciesTag, size: usize, bytes: Vec<u8>) -> Self {
        assert!(size > 0, "isomorphism types are positive");
        TypeKey { tag, size, bytes }
    }

    pub fn tag(&self) -> SpeciesTag {
        self.tag
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn is_singleton(&self) -> bool {
        self.size == 1
    }

    /// Wire form `<tag>:<size>:<hex>`.
    pub fn wire(&self) -> String {
        let mut s = format!("{}:{}:", self.tag.as_str(), self.size);
        for b in &self.bytes {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

impl FromStr for TypeKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.splitn(3, ':');
        let (Some(tag), Some(size), Some(hex)) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse(format!("malformed type key {s:?}")));
        };
        let tag: SpeciesTag = tag.parse()?;
        let size: usize = size.parse().map_err(|_| Error::Parse(format!("bad size in type key {s:?}")))?;
        if size == 0 || hex.len() % 2 != 0 {
            return Err(Error::Parse(format!("malformed type key {s:?}")));
        }
        let bytes = (0..hex.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&hex[i..i + 2], 16))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad hex in type key {s:?}")))?;
        Ok(TypeKey { tag, size, bytes })
    }
}

impl fmt::Display for TypeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.wire())
    }
}

impl fmt::Debug for TypeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeKey({})", self.wire())
    }
}

impl Serialize for TypeKey {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.wire())
    }
}

impl<'de> Deserialize<'de> for TypeKey {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
