//! Graph file formats.
//!
//! Edge list: a header line `n m l`, then `m` lines `u v`, then `l` lines
//! each holding one looped vertex, then one line per vertex that appears in
//! neither an edge nor a loop (there are `n` minus the mentioned vertices of
//! them). Labels use their textual form, e.g. `3`, `w`, `(1,(2,0))`. Blank
//! lines and lines starting with `#` are ignored.
//!
//! JSON: `{"vertices": [...], "edges": [[u, v], ...], "loops": [...]}` with
//! integers as numbers, names as strings and tuples as arrays.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::label::Label;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<Label>,
    pub edges: Vec<(Label, Label)>,
    #[serde(default)]
    pub loops: Vec<Label>,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile { vertices: g.labels().to_vec(), edges: g.edge_labels(), loops: g.loop_labels() }
    }
}

impl TryFrom<GraphFile> for Graph {
    type Error = Error;

    fn try_from(f: GraphFile) -> Result<Graph> {
        Graph::new(f.vertices, f.edges, f.loops)
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let file: GraphFile = serde_json::from_str(text)?;
        Graph::try_from(file)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let edges = self.edge_labels();
        let loops = self.loop_labels();
        writeln!(out, "{} {} {}", self.vertex_count(), edges.len(), loops.len()).unwrap();
        let mut mentioned = BTreeSet::new();
        for (u, v) in &edges {
            writeln!(out, "{u} {v}").unwrap();
            mentioned.insert(u);
            mentioned.insert(v);
        }
        for l in &loops {
            writeln!(out, "{l}").unwrap();
            mentioned.insert(l);
        }
        for v in self.labels() {
            if !mentioned.contains(v) {
                writeln!(out, "{v}").unwrap();
            }
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("missing `n m l` header".into()))?;
        let counts: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        let [n, m, l] = counts[..] else {
            return Err(Error::Parse(format!("header must be `n m l`, got {header:?}")));
        };
        let mut vertices = BTreeSet::new();
        let mut edges = Vec::with_capacity(m);
        for k in 0..m {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("expected {m} edges, found {k}")))?;
            let (u, v) = split_pair(line)?;
            vertices.insert(u.clone());
            vertices.insert(v.clone());
            edges.push((u, v));
        }
        let mut loops = Vec::with_capacity(l);
        for k in 0..l {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("expected {l} loops, found {k}")))?;
            let v: Label = line.parse()?;
            vertices.insert(v.clone());
            loops.push(v);
        }
        for line in lines {
            let v: Label = line.parse()?;
            if !vertices.insert(v.clone()) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        if vertices.len() != n {
            return Err(Error::Parse(format!("header says {n} vertices, found {}", vertices.len())));
        }
        Graph::new(vertices, edges, loops)
    }
}

/// Splits `u v` where labels may contain spaces inside parentheses.
fn split_pair(line: &str) -> Result<(Label, Label)> {
    let mut depth = 0i32;
    for (i, c) in line.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c.is_whitespace() && depth == 0 => {
                let (a, b) = line.split_at(i);
                return Ok((a.parse()?, b.trim().parse()?));
            }
            _ => {}
        }
    }
    Err(Error::Parse(format!("expected two labels in {line:?}")))
}
