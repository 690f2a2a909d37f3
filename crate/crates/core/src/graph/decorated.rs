//! Decorated graphs: half-edges paired by a fixed-point-free involution,
//! attached to vertices carrying a charge, an Euler characteristic and a
//! puncture count.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::lattice::{Charge, ChargeLattice};
use crate::error::{Error, Result};

pub type HalfEdge = usize;
pub type VertexId = usize;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub id: VertexId,
    pub beta: Charge,
    pub chi: i64,
    pub n_punct: i64,
}

impl Vertex {
    pub fn new(id: VertexId, beta: Charge, chi: i64, n_punct: i64) -> Self {
        Vertex { id, beta, chi, n_punct }
    }

    /// (β, χ, n) without the id.
    pub fn decoration(&self) -> (Charge, i64, i64) {
        (self.beta.clone(), self.chi, self.n_punct)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedGraph {
    pub half_edges: BTreeSet<HalfEdge>,
    pub sigma: BTreeMap<HalfEdge, HalfEdge>,
    pub pi: BTreeMap<HalfEdge, VertexId>,
    pub vertices: BTreeMap<VertexId, Vertex>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub unstable: Vec<VertexId>,
}

impl StabilityReport {
    pub fn is_stable(&self) -> bool {
        self.unstable.is_empty()
    }
}

impl DecoratedGraph {
    /// Builds a graph with half-edges `2j, 2j+1` for the `j`-th edge `(u, v)`.
    pub fn from_edges(vertices: Vec<Vertex>, edges: &[(VertexId, VertexId)]) -> Self {
        let mut g = DecoratedGraph {
            half_edges: BTreeSet::new(),
            sigma: BTreeMap::new(),
            pi: BTreeMap::new(),
            vertices: vertices.into_iter().map(|v| (v.id, v)).collect(),
        };
        for (j, &(u, v)) in edges.iter().enumerate() {
            let (a, b) = (2 * j, 2 * j + 1);
            g.half_edges.extend([a, b]);
            g.sigma.insert(a, b);
            g.sigma.insert(b, a);
            g.pi.insert(a, u);
            g.pi.insert(b, v);
        }
        g
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for &h in &self.half_edges {
            match self.sigma.get(&h) {
                None => violations.push(format!("sigma undefined at half-edge {h}")),
                Some(&s) if s == h => violations.push(format!("sigma has fixed point {h}")),
                Some(&s) => {
                    if !self.half_edges.contains(&s) {
                        violations.push(format!("sigma maps {h} outside the half-edge set"));
                    } else if self.sigma.get(&s) != Some(&h) {
                        violations.push(format!("sigma is not an involution at {h}"));
                    }
                }
            }
            match self.pi.get(&h) {
                Some(v) if self.vertices.contains_key(v) => {}
                _ => violations.push(format!("dangling half-edge {h}")),
            }
        }
        for v in self.vertices.values() {
            if v.chi > 1 {
                violations.push(format!("chi exceeds 1 at vertex {}", v.id));
            }
            if v.n_punct < 0 {
                violations.push(format!("negative n_punct at vertex {}", v.id));
            }
        }
        if !self.half_edges.len().is_multiple_of(2) {
            violations.push("odd number of half-edges".into());
        }
        ValidationReport { violations }
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.passed() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(report.violations.join("; ")))
        }
    }

    /// Edges as `(h, σ(h))` with `h < σ(h)`, sorted; an edge's index is its position here.
    pub fn edges(&self) -> Vec<(HalfEdge, HalfEdge)> {
        self.half_edges
            .iter()
            .filter_map(|&h| {
                let s = self.sigma[&h];
                (h < s).then_some((h, s))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.half_edges.len() / 2
    }

    pub fn edge_index(&self, h: HalfEdge) -> Option<usize> {
        let s = *self.sigma.get(&h)?;
        let key = (h.min(s), h.max(s));
        self.edges().iter().position(|e| *e == key)
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.pi.values().filter(|&&w| w == v).count()
    }

    pub fn total_charge(&self, rank: usize) -> Charge {
        let mut beta = vec![0; rank];
        for v in self.vertices.values() {
            for (b, x) in beta.iter_mut().zip(&v.beta) {
                *b += x;
            }
        }
        beta
    }

    /// χ(G) = Σ_v (χ_v − n_v) − |E(G)|.
    pub fn euler_characteristic(&self) -> Result<i64> {
        self.ensure_valid()?;
        let vertex_sum: i64 = self.vertices.values().map(|v| v.chi - v.n_punct).sum();
        Ok(vertex_sum - self.edge_count() as i64)
    }

    /// A vertex is unstable when β_v = 0 and 2χ_v − |π⁻¹(v)| ≥ 0.
    pub fn stability(&self) -> Result<StabilityReport> {
        self.ensure_valid()?;
        let unstable = self
            .vertices
            .values()
            .filter(|v| {
                ChargeLattice::is_zero(&v.beta) && 2 * v.chi - self.valence(v.id) as i64 >= 0
            })
            .map(|v| v.id)
            .collect();
        Ok(StabilityReport { unstable })
    }

    pub fn is_stable(&self) -> Result<bool> {
        Ok(self.stability()?.is_stable())
    }

    /// δ_e G: removes the edge and merges (or, for a self-edge, lowers χ at) its endpoint.
    /// The merged vertex keeps the smaller of the two ids.
    pub fn contract_edge(&self, edge: (HalfEdge, HalfEdge)) -> Result<DecoratedGraph> {
        self.ensure_valid()?;
        let (h1, h2) = edge;
        if self.sigma.get(&h1) != Some(&h2) {
            return Err(Error::NotAnEdge(edge));
        }
        let (v1, v2) = (self.pi[&h1], self.pi[&h2]);
        let mut g = self.clone();
        g.half_edges.remove(&h1);
        g.half_edges.remove(&h2);
        g.sigma.remove(&h1);
        g.sigma.remove(&h2);
        g.pi.remove(&h1);
        g.pi.remove(&h2);
        if v1 == v2 {
            g.vertices.get_mut(&v1).expect("valid graph").chi -= 1;
        } else {
            let (keep, drop) = (v1.min(v2), v1.max(v2));
            let gone = g.vertices.remove(&drop).expect("valid graph");
            let kept = g.vertices.get_mut(&keep).expect("valid graph");
            kept.chi += gone.chi - 1;
            kept.n_punct += gone.n_punct;
            for (b, x) in kept.beta.iter_mut().zip(&gone.beta) {
                *b += x;
            }
            for w in g.pi.values_mut() {
                if *w == drop {
                    *w = keep;
                }
            }
        }
        Ok(g)
    }

    /// Relabels half-edges to `0..2k` so that the `j`-th edge is `(2j, 2j+1)`,
    /// preserving edge order and the orientation `h < σ(h)`.
    pub fn standardized(&self) -> (DecoratedGraph, BTreeMap<HalfEdge, HalfEdge>) {
        let mut map = BTreeMap::new();
        for (j, (a, b)) in self.edges().into_iter().enumerate() {
            map.insert(a, 2 * j);
            map.insert(b, 2 * j + 1);
        }
        let mut g = DecoratedGraph {
            half_edges: map.values().copied().collect(),
            sigma: BTreeMap::new(),
            pi: BTreeMap::new(),
            vertices: self.vertices.clone(),
        };
        for (&old, &new) in &map {
            g.sigma.insert(new, map[&self.sigma[&old]]);
            g.pi.insert(new, self.pi[&old]);
        }
        (g, map)
    }

    /// Vertex ids become `0..|V|` in increasing order of the old id.
    pub fn compact_vertex_ids(&self) -> DecoratedGraph {
        let ids: BTreeMap<VertexId, VertexId> =
            self.vertices.keys().enumerate().map(|(i, &v)| (v, i)).collect();
        DecoratedGraph {
            half_edges: self.half_edges.clone(),
            sigma: self.sigma.clone(),
            pi: self.pi.iter().map(|(&h, v)| (h, ids[v])).collect(),
            vertices: self
                .vertices
                .values()
                .map(|v| (ids[&v.id], Vertex { id: ids[&v.id], ..v.clone() }))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_vertex_edge(b1: i64, b2: i64) -> DecoratedGraph {
        DecoratedGraph::from_edges(
            vec![Vertex::new(0, vec![b1], 1, 0), Vertex::new(1, vec![b2], 1, 0)],
            &[(0, 1)],
        )
    }

    #[test]
    fn validation_reports() {
        let mut g = two_vertex_edge(1, 1);
        assert!(g.validate().passed());
        g.sigma.insert(0, 0);
        assert!(g.validate().violations.iter().any(|v| v.contains("sigma has fixed point")));

        let mut g = two_vertex_edge(1, 1);
        g.vertices.get_mut(&0).unwrap().chi = 2;
        assert!(g.validate().violations.iter().any(|v| v.contains("chi exceeds 1")));

        let mut g = two_vertex_edge(1, 1);
        g.pi.insert(1, 7);
        assert!(g.validate().violations.iter().any(|v| v.contains("dangling")));

        let mut g = two_vertex_edge(1, 1);
        g.vertices.get_mut(&1).unwrap().n_punct = -1;
        assert!(g.validate().violations.iter().any(|v| v.contains("negative n_punct")));
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(two_vertex_edge(1, 1).euler_characteristic().unwrap(), 1);
        let loop_graph = DecoratedGraph::from_edges(vec![Vertex::new(0, vec![0], 1, 0)], &[(0, 0)]);
        assert_eq!(loop_graph.euler_characteristic().unwrap(), 0);
        let lone = DecoratedGraph::from_edges(vec![Vertex::new(0, vec![0], -1, 2)], &[]);
        assert_eq!(lone.euler_characteristic().unwrap(), -3);
    }

    #[test]
    fn stability_examples() {
        let bare = DecoratedGraph::from_edges(vec![Vertex::new(0, vec![0], 1, 0)], &[]);
        assert_eq!(bare.stability().unwrap().unstable, vec![0]);

        // β = 0, χ = 1 with three half-edges: a self-edge plus one edge out.
        let trivalent = DecoratedGraph::from_edges(
            vec![Vertex::new(0, vec![0], 1, 0), Vertex::new(1, vec![1], 1, 0)],
            &[(0, 0), (0, 1)],
        );
        let report = trivalent.stability().unwrap();
        assert!(report.is_stable());

        let charged = DecoratedGraph::from_edges(vec![Vertex::new(0, vec![2], 1, 0)], &[]);
        assert!(charged.is_stable().unwrap());
    }

    #[test]
    fn contraction_cases() {
        let g = two_vertex_edge(2, 3);
        let c = g.contract_edge((0, 1)).unwrap();
        assert_eq!(c.vertices.len(), 1);
        let v = &c.vertices[&0];
        assert_eq!((v.chi, v.beta.clone(), v.n_punct), (1, vec![5], 0));

        let g = DecoratedGraph::from_edges(vec![Vertex::new(0, vec![4], 1, 0)], &[(0, 0)]);
        let c = g.contract_edge((0, 1)).unwrap();
        assert_eq!((c.vertices[&0].chi, c.vertices[&0].beta.clone()), (0, vec![4]));
        assert_eq!(c.euler_characteristic().unwrap(), g.euler_characteristic().unwrap());

        assert!(matches!(g.contract_edge((0, 0)), Err(Error::NotAnEdge(_))));
    }
}
