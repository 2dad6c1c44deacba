//! DOT and JSON serialization shared by all graph kinds.
//!
//! JSON schema: `{kind, directed, vertices: [{id, label, length?}],
//! edges: [{u, v, root, degree, area?}]}` with root coordinates and areas as
//! `"p/q"` strings. Vertex ids are Weyl group indices (or lexicographic
//! permutation indices for the Cayley graph).

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_in_basis, RationalVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

impl FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(GraphFormat::Dot),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub u: usize,
    pub v: usize,
    pub root: Vec<String>,
    pub degree: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub area: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub kind: String,
    pub directed: bool,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
}

impl GraphDocument {
    /// Vertices by (length, id), edges by (u, v, root).
    pub fn sorted(mut self) -> Self {
        self.vertices.sort_by_key(|v| (v.length, v.id));
        self.edges.sort_by(|a, b| (a.u, a.v, &a.root).cmp(&(b.u, b.v, &b.root)));
        self
    }

    pub fn render(&self, format: GraphFormat) -> Result<String> {
        match format {
            GraphFormat::Dot => Ok(self.to_dot()),
            GraphFormat::Json => self.to_json(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Inconsistent(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_dot(&self) -> String {
        let (keyword, arrow) = if self.directed { ("digraph", "->") } else { ("graph", "--") };
        let mut out = String::new();
        let _ = writeln!(out, "{keyword} {} {{", self.kind);
        for v in &self.vertices {
            let _ = writeln!(out, "  n{} [label=\"{}\"];", v.id, escape(&v.label));
        }
        for e in &self.edges {
            let root = RationalVector::from_wire(&e.root)
                .map(|r| format_in_basis(&r))
                .unwrap_or_else(|_| e.root.join(","));
            let degree: Vec<String> = e.degree.iter().map(i64::to_string).collect();
            let mut label = format!("{root} / ({})", degree.join(","));
            if let Some(area) = &e.area {
                label.push_str(" / ");
                label.push_str(area);
            }
            let _ = writeln!(out, "  n{} {arrow} n{} [label=\"{}\"];", e.u, e.v, escape(&label));
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_format() {
        assert_eq!("svg".parse::<GraphFormat>(), Err(Error::UnknownFormat("svg".into())));
        assert_eq!("DOT".parse::<GraphFormat>(), Ok(GraphFormat::Dot));
    }
}
