use serde::{Deserialize, Serialize};

use super::{MetricEdge, MetricGraph, MetricNode};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct MetricGraphJson {
    nodes: Vec<MetricNode>,
    edges: Vec<MetricEdge>,
    root: usize,
    beta1: usize,
}

impl MetricGraph {
    /// JSON export: `{"nodes": [{"id", "height"}], "edges": [{"a", "b",
    /// "length"}], "root": id, "beta1": n}`.
    pub fn to_json(&self) -> String {
        let doc = MetricGraphJson {
            nodes: self.nodes.clone(),
            edges: self.edges.clone(),
            root: self.root_node,
            beta1: self.betti1(),
        };
        serde_json::to_string_pretty(&doc).expect("metric graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MetricGraphJson =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let graph = MetricGraph {
            nodes: doc.nodes,
            edges: doc.edges,
            root_node: doc.root,
        };
        let ids = graph.index_of_ids();
        if ids.len() != graph.nodes.len() {
            return Err(Error::Json("duplicate node ids".into()));
        }
        if !ids.contains_key(&graph.root_node) {
            return Err(Error::Json(format!("unknown root node {}", graph.root_node)));
        }
        for e in &graph.edges {
            if !ids.contains_key(&e.a) || !ids.contains_key(&e.b) {
                return Err(Error::Json(format!("edge ({}, {}) names unknown node", e.a, e.b)));
            }
        }
        if graph.betti1() != doc.beta1 {
            return Err(Error::Json(format!(
                "beta1 field is {} but the edge set gives {}",
                doc.beta1,
                graph.betti1()
            )));
        }
        Ok(graph)
    }

    /// DOT export for external renderers; node labels are heights rounded to
    /// four decimals, no layout is computed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph reconstruction {\n");
        for n in &self.nodes {
            out.push_str(&format!("  n{} [label=\"{:.4}\"];\n", n.id, n.height));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  n{} -- n{} [label=\"{:.4}\"];\n",
                e.a, e.b, e.length
            ));
        }
        out.push_str("}\n");
        out
    }
}
