//! JSON mirror of the text graph format, accepted wherever the text form is.
//!
//! Schema: `{qubits, field, edges: [{u, v, re, im}], loops: [{v, re, im}]}`.

use anyhow::{bail, Context, Result};
use gsep_core::format::{parse_graph, serialize_graph};
use gsep_core::graph::{Field, WeightedGraph};
use gsep_core::C64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct JsonGraph {
    pub qubits: u32,
    pub field: String,
    pub edges: Vec<JsonEdge>,
    pub loops: Vec<JsonLoop>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct JsonEdge {
    pub u: usize,
    pub v: usize,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct JsonLoop {
    pub v: usize,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

impl JsonGraph {
    pub fn to_graph(&self) -> Result<WeightedGraph> {
        let field = match self.field.as_str() {
            "real" => Field::Real,
            "complex" => Field::Complex,
            other => bail!("field must be real or complex, got '{other}'"),
        };
        let mut g = WeightedGraph::new(self.qubits, field)?;
        for e in &self.edges {
            g.add_edge(e.u, e.v, C64::new(e.re, e.im))
                .with_context(|| format!("edge ({}, {})", e.u, e.v))?;
        }
        for l in &self.loops {
            if l.im != 0.0 {
                bail!("loop on vertex {} has a nonzero imaginary part", l.v);
            }
            g.add_loop(l.v, C64::new(l.re, 0.0))
                .with_context(|| format!("loop on vertex {}", l.v))?;
        }
        Ok(g)
    }

    pub fn from_graph(g: &WeightedGraph) -> Self {
        Self {
            qubits: g.n_qubits(),
            field: match g.field() {
                Field::Real => "real".into(),
                Field::Complex => "complex".into(),
            },
            edges: g
                .edges()
                .iter()
                .map(|(&(u, v), w)| JsonEdge {
                    u,
                    v,
                    re: w.re,
                    im: w.im,
                })
                .collect(),
            loops: g
                .loops()
                .iter()
                .map(|(&v, w)| JsonLoop {
                    v,
                    re: w.re,
                    im: w.im,
                })
                .collect(),
        }
    }
}

/// Loads a graph from text or JSON, sniffing by the first non-space byte.
pub fn load_graph_str(content: &str) -> Result<WeightedGraph> {
    if content.trim_start().starts_with('{') {
        let json: JsonGraph = serde_json::from_str(content).context("invalid graph JSON")?;
        json.to_graph()
    } else {
        parse_graph(content).map_err(|e| anyhow::anyhow!("{e}"))
    }
}

/// Canonical text serialization (used for replay records and hashing).
pub fn canonical_text(g: &WeightedGraph) -> String {
    serialize_graph(g)
}
