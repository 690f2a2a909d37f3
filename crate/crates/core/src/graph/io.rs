//! JSON and DOT serialization of (marked) decorated graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::decorated::{DecoratedGraph, HalfEdge, Vertex, VertexId};
use super::lattice::Charge;
use super::marked::MarkedGraph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: VertexId,
    pub beta: Charge,
    pub chi: i64,
    pub n: i64,
    pub legs: Vec<HalfEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub half_edges: Vec<HalfEdge>,
    pub sigma: Vec<[HalfEdge; 2]>,
    pub vertices: Vec<VertexJson>,
    #[serde(default)]
    pub filtration: Vec<Vec<usize>>,
}

impl GraphJson {
    pub fn from_marked(m: &MarkedGraph) -> Self {
        let g = &m.graph;
        let mut legs: BTreeMap<VertexId, Vec<HalfEdge>> = BTreeMap::new();
        for (&h, &v) in &g.pi {
            legs.entry(v).or_default().push(h);
        }
        GraphJson {
            half_edges: g.half_edges.iter().copied().collect(),
            sigma: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            vertices: g
                .vertices
                .values()
                .map(|v| VertexJson {
                    id: v.id,
                    beta: v.beta.clone(),
                    chi: v.chi,
                    n: v.n_punct,
                    legs: legs.remove(&v.id).unwrap_or_default(),
                })
                .collect(),
            filtration: m.filtration.iter().map(|s| s.iter().copied().collect()).collect(),
        }
    }

    /// Rebuilds the marked graph; σ pairs may be listed in either orientation.
    pub fn to_marked(&self) -> Result<MarkedGraph> {
        let mut sigma = BTreeMap::new();
        for &[a, b] in &self.sigma {
            for (x, y) in [(a, b), (b, a)] {
                if sigma.insert(x, y).is_some_and(|old| old != y) {
                    return Err(Error::InvalidGraph(format!("half-edge {x} paired twice")));
                }
            }
        }
        let mut pi = BTreeMap::new();
        let mut vertices = BTreeMap::new();
        for v in &self.vertices {
            if vertices.insert(v.id, Vertex::new(v.id, v.beta.clone(), v.chi, v.n)).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {}", v.id)));
            }
            for &h in &v.legs {
                if pi.insert(h, v.id).is_some() {
                    return Err(Error::InvalidGraph(format!("half-edge {h} attached twice")));
                }
            }
        }
        let half_edges: BTreeSet<HalfEdge> = self.half_edges.iter().copied().collect();
        if let Some(h) = sigma.keys().chain(pi.keys()).find(|h| !half_edges.contains(h)) {
            return Err(Error::InvalidGraph(format!("half-edge {h} is not declared")));
        }
        let graph = DecoratedGraph { half_edges, sigma, pi, vertices };
        let filtration = self.filtration.iter().map(|s| s.iter().copied().collect()).collect();
        MarkedGraph::new(graph, filtration)
    }
}

pub fn to_json(m: &MarkedGraph) -> Result<String> {
    Ok(serde_json::to_string_pretty(&GraphJson::from_marked(m))?)
}

pub fn from_json(s: &str) -> Result<MarkedGraph> {
    serde_json::from_str::<GraphJson>(s)?.to_marked()
}

/// Deterministic DOT export. Vertices are labeled `β;χ;n`, edges by index
/// (and filtration level when marked).
pub fn to_dot(m: &MarkedGraph) -> String {
    let g = &m.graph;
    let levels = m.edge_levels();
    let mut out = String::from("graph G {\n");
    for v in g.vertices.values() {
        let beta: Vec<String> = v.beta.iter().map(|b| b.to_string()).collect();
        let _ = writeln!(out, "  v{} [label=\"{};{};{}\"];", v.id, beta.join(","), v.chi, v.n_punct);
    }
    for (i, (a, b)) in g.edges().into_iter().enumerate() {
        let (u, w) = (g.pi[&a], g.pi[&b]);
        if m.filtration.is_empty() {
            let _ = writeln!(out, "  v{u} -- v{w} [label=\"e{i}\"];");
        } else {
            let _ = writeln!(out, "  v{u} -- v{w} [label=\"e{i}@{}\"];", levels[i]);
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> MarkedGraph {
        let vs = vec![Vertex::new(0, vec![1], 0, 0), Vertex::new(1, vec![2], 1, 1)];
        let g = DecoratedGraph::from_edges(vs, &[(0, 1), (0, 1), (1, 1)]);
        MarkedGraph::new(g, vec![BTreeSet::from([0]), BTreeSet::from([0, 2])]).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let m = theta();
        let back = from_json(&to_json(&m).unwrap()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn json_rejects_dangling() {
        let s = r#"{"half_edges":[0,1],"sigma":[[0,1]],"vertices":[{"id":0,"beta":[0],"chi":1,"n":0,"legs":[0]}]}"#;
        assert!(matches!(from_json(s), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn dot_is_deterministic() {
        let d = to_dot(&theta());
        assert_eq!(d, to_dot(&theta()));
        assert!(d.contains("v1 [label=\"2;1;1\"]"));
        assert!(d.contains("v0 -- v1 [label=\"e1@2\"]"));
    }
}
