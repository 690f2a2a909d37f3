//! Automorphisms of marked graphs and their orientation signs.

use std::collections::BTreeMap;

use super::decorated::{HalfEdge, VertexId};
use super::marked::MarkedGraph;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Automorphism {
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub half_edge_map: BTreeMap<HalfEdge, HalfEdge>,
    /// Action on the orientation torsor: (−1)^{#edges whose ordered pair is reversed}.
    pub sign: i32,
}

impl Automorphism {
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        // self ∘ other
        Automorphism {
            vertex_map: other.vertex_map.iter().map(|(&v, w)| (v, self.vertex_map[w])).collect(),
            half_edge_map: other
                .half_edge_map
                .iter()
                .map(|(&h, k)| (h, self.half_edge_map[k]))
                .collect(),
            sign: self.sign * other.sign,
        }
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            vertex_map: self.vertex_map.iter().map(|(&a, &b)| (b, a)).collect(),
            half_edge_map: self.half_edge_map.iter().map(|(&a, &b)| (b, a)).collect(),
            sign: self.sign,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_map.iter().all(|(a, b)| a == b) && self.half_edge_map.iter().all(|(a, b)| a == b)
    }
}

/// Orientation sign of a half-edge bijection between two graphs whose edges
/// are oriented `h < σ(h)`.
pub fn orientation_sign(edges: &[(HalfEdge, HalfEdge)], map: &BTreeMap<HalfEdge, HalfEdge>) -> i32 {
    let reversed = edges.iter().filter(|(a, b)| map[a] > map[b]).count();
    if reversed % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All automorphisms of `m`: bijections of vertices and half-edges commuting with
/// σ and π, preserving decorations and each E_i setwise.
pub fn automorphism_group(m: &MarkedGraph) -> Result<Vec<Automorphism>> {
    m.validate()?;
    let g = &m.graph;
    let edges = g.edges();
    let levels = m.edge_levels();
    let mut out = Vec::new();
    let mut search = Search {
        m,
        edges: &edges,
        levels: &levels,
        used: vec![false; edges.len()],
        half: BTreeMap::new(),
        vmap: BTreeMap::new(),
        vused: BTreeMap::new(),
    };
    search.run(0, &mut |half, vmap| {
        // vertices without half-edges: any decoration-preserving bijection
        let isolated: Vec<VertexId> =
            g.vertices.keys().copied().filter(|v| !vmap.contains_key(v)).collect();
        let mut extensions = Vec::new();
        extend_isolated(m, &isolated, 0, &mut vmap.clone(), &mut extensions);
        for vm in extensions {
            out.push(Automorphism {
                vertex_map: vm,
                half_edge_map: half.clone(),
                sign: orientation_sign(&edges, half),
            });
        }
    });
    out.sort();
    Ok(out)
}

fn extend_isolated(
    m: &MarkedGraph,
    isolated: &[VertexId],
    i: usize,
    vmap: &mut BTreeMap<VertexId, VertexId>,
    out: &mut Vec<BTreeMap<VertexId, VertexId>>,
) {
    if i == isolated.len() {
        out.push(vmap.clone());
        return;
    }
    let v = isolated[i];
    for &w in isolated {
        if vmap.values().any(|&x| x == w) {
            continue;
        }
        if m.graph.vertices[&v].decoration() != m.graph.vertices[&w].decoration() {
            continue;
        }
        vmap.insert(v, w);
        extend_isolated(m, isolated, i + 1, vmap, out);
        vmap.remove(&v);
    }
}

type Emit<'e> = dyn FnMut(&BTreeMap<HalfEdge, HalfEdge>, &BTreeMap<VertexId, VertexId>) + 'e;

struct Search<'a> {
    m: &'a MarkedGraph,
    edges: &'a [(HalfEdge, HalfEdge)],
    levels: &'a [usize],
    used: Vec<bool>,
    half: BTreeMap<HalfEdge, HalfEdge>,
    vmap: BTreeMap<VertexId, VertexId>,
    vused: BTreeMap<VertexId, usize>,
}

impl Search<'_> {
    fn bind(&mut self, v: VertexId, w: VertexId) -> Option<bool> {
        // Some(true) if newly bound, Some(false) if already consistent, None on conflict
        match self.vmap.get(&v) {
            Some(&x) => (x == w).then_some(false),
            None => {
                if self.vused.contains_key(&w) {
                    return None;
                }
                let g = &self.m.graph;
                if g.vertices[&v].decoration() != g.vertices[&w].decoration()
                    || g.valence(v) != g.valence(w)
                {
                    return None;
                }
                self.vmap.insert(v, w);
                self.vused.insert(w, v);
                Some(true)
            }
        }
    }

    fn unbind(&mut self, v: VertexId) {
        if let Some(w) = self.vmap.remove(&v) {
            self.vused.remove(&w);
        }
    }

    fn run(&mut self, i: usize, emit: &mut Emit<'_>) {
        if i == self.edges.len() {
            emit(&self.half, &self.vmap);
            return;
        }
        let (a, b) = self.edges[i];
        let pi = &self.m.graph.pi;
        for j in 0..self.edges.len() {
            if self.used[j] || self.levels[j] != self.levels[i] {
                continue;
            }
            let (c, d) = self.edges[j];
            for (x, y) in [(c, d), (d, c)] {
                let nb1 = match self.bind(pi[&a], pi[&x]) {
                    Some(n) => n,
                    None => continue,
                };
                let nb2 = match self.bind(pi[&b], pi[&y]) {
                    Some(n) => n,
                    None => {
                        if nb1 {
                            self.unbind(pi[&a]);
                        }
                        continue;
                    }
                };
                self.used[j] = true;
                self.half.insert(a, x);
                self.half.insert(b, y);
                self.run(i + 1, emit);
                self.half.remove(&a);
                self.half.remove(&b);
                self.used[j] = false;
                if nb2 {
                    self.unbind(pi[&b]);
                }
                if nb1 {
                    self.unbind(pi[&a]);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::decorated::{DecoratedGraph, Vertex};

    #[test]
    fn distinct_decorations_rigidify() {
        let g = DecoratedGraph::from_edges(
            vec![Vertex::new(0, vec![1], 1, 0), Vertex::new(1, vec![2], 1, 0)],
            &[(0, 1)],
        );
        let auts = automorphism_group(&MarkedGraph::bare(g)).unwrap();
        assert_eq!(auts.len(), 1);
        assert!(auts[0].is_identity());
    }

    #[test]
    fn parallel_edges_give_order_four() {
        let g = DecoratedGraph::from_edges(
            vec![Vertex::new(0, vec![1], 1, 0), Vertex::new(1, vec![1], 1, 0)],
            &[(0, 1), (0, 1)],
        );
        let auts = automorphism_group(&MarkedGraph::bare(g)).unwrap();
        assert_eq!(auts.len(), 4);
        // swapping the vertices reverses both edges: sign +1; swapping the edges: +1
        assert!(auts.iter().all(|a| a.sign == 1));
    }

    #[test]
    fn self_edge_flip_has_negative_sign() {
        let g = DecoratedGraph::from_edges(vec![Vertex::new(0, vec![1], 1, 0)], &[(0, 0)]);
        let auts = automorphism_group(&MarkedGraph::bare(g)).unwrap();
        assert_eq!(auts.len(), 2);
        let flip = auts.iter().find(|a| !a.is_identity()).unwrap();
        assert_eq!(flip.sign, -1);
    }
}
