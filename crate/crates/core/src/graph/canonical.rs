//! Canonical labels for marked graphs, by minimizing an encoding over vertex
//! orderings that respect a refined invariant coloring.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::decorated::{DecoratedGraph, HalfEdge, Vertex, VertexId};
use super::lattice::Charge;
use super::marked::MarkedGraph;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalLabel {
    /// (β, χ, n) per canonical vertex.
    pub vertices: Vec<(Charge, i64, i64)>,
    /// (u, v, level) with u ≤ v, sorted; level = filtration length means "in no E_i".
    pub edges: Vec<(usize, usize, usize)>,
    pub filtration_len: usize,
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub label: CanonicalLabel,
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub half_edge_map: BTreeMap<HalfEdge, HalfEdge>,
}

impl CanonicalLabel {
    /// The canonical representative: vertex ids `0..n`, edge `j` = half-edges `(2j, 2j+1)`.
    pub fn to_marked_graph(&self) -> MarkedGraph {
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, (b, c, n))| Vertex::new(i, b.clone(), *c, *n))
            .collect();
        let pairs: Vec<_> = self.edges.iter().map(|&(u, v, _)| (u, v)).collect();
        let graph = DecoratedGraph::from_edges(vertices, &pairs);
        let filtration = (0..self.filtration_len)
            .map(|i| {
                self.edges.iter().enumerate().filter(|(_, e)| e.2 <= i).map(|(j, _)| j).collect()
            })
            .collect();
        MarkedGraph { graph, filtration }
    }
}

type Invariant = ((Charge, i64, i64), usize, Vec<((Charge, i64, i64), usize)>);

type Decoration = (Charge, i64, i64);

fn vertex_invariants(m: &MarkedGraph) -> BTreeMap<VertexId, Invariant> {
    let g = &m.graph;
    let levels = m.edge_levels();
    let mut nbrs: BTreeMap<VertexId, Vec<(Decoration, usize)>> =
        g.vertices.keys().map(|&v| (v, vec![])).collect();
    for (j, (a, b)) in g.edges().into_iter().enumerate() {
        let (u, v) = (g.pi[&a], g.pi[&b]);
        nbrs.get_mut(&u).unwrap().push((g.vertices[&v].decoration(), levels[j]));
        nbrs.get_mut(&v).unwrap().push((g.vertices[&u].decoration(), levels[j]));
    }
    nbrs.into_iter()
        .map(|(v, mut n)| {
            n.sort();
            (v, (g.vertices[&v].decoration(), g.valence(v), n))
        })
        .collect()
}

fn encode(m: &MarkedGraph, order: &[VertexId], levels: &[usize]) -> CanonicalLabel {
    let g = &m.graph;
    let pos: BTreeMap<VertexId, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges: Vec<_> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(j, (a, b))| {
            let (u, v) = (pos[&g.pi[a]], pos[&g.pi[b]]);
            (u.min(v), u.max(v), levels[j])
        })
        .collect();
    edges.sort();
    CanonicalLabel {
        vertices: order.iter().map(|v| g.vertices[v].decoration()).collect(),
        edges,
        filtration_len: m.filtration.len(),
    }
}

pub fn canonical_form(m: &MarkedGraph) -> Result<CanonicalForm> {
    m.validate()?;
    let g = &m.graph;
    let levels = m.edge_levels();
    let inv = vertex_invariants(m);
    let mut classes: BTreeMap<&Invariant, Vec<VertexId>> = BTreeMap::new();
    for (v, i) in &inv {
        classes.entry(i).or_default().push(*v);
    }
    let classes: Vec<Vec<VertexId>> = classes.into_values().collect();

    let mut best: Option<(CanonicalLabel, Vec<VertexId>)> = None;
    let mut order = Vec::with_capacity(g.vertices.len());
    search_orders(&classes, 0, &mut vec![], &mut order, &mut |ord| {
        let label = encode(m, ord, &levels);
        if best.as_ref().is_none_or(|(b, _)| label < *b) {
            best = Some((label, ord.to_vec()));
        }
    });
    let (label, order) = best.expect("at least one ordering");

    let vertex_map: BTreeMap<VertexId, VertexId> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    // assign each original edge to a canonical slot with the same key
    let mut slots: BTreeMap<(usize, usize, usize), Vec<usize>> = BTreeMap::new();
    for (j, e) in label.edges.iter().enumerate() {
        slots.entry(*e).or_default().push(j);
    }
    for v in slots.values_mut() {
        v.reverse();
    }
    let mut half_edge_map = BTreeMap::new();
    for (j, (a, b)) in g.edges().into_iter().enumerate() {
        let (u, v) = (vertex_map[&g.pi[&a]], vertex_map[&g.pi[&b]]);
        let key = (u.min(v), u.max(v), levels[j]);
        let slot = slots.get_mut(&key).and_then(|s| s.pop()).expect("matching slot");
        let (first, second) = if u <= v { (a, b) } else { (b, a) };
        half_edge_map.insert(first, 2 * slot);
        half_edge_map.insert(second, 2 * slot + 1);
    }
    Ok(CanonicalForm { label, vertex_map, half_edge_map })
}

fn search_orders(
    classes: &[Vec<VertexId>],
    ci: usize,
    taken: &mut Vec<VertexId>,
    order: &mut Vec<VertexId>,
    emit: &mut dyn FnMut(&[VertexId]),
) {
    if ci == classes.len() {
        emit(order);
        return;
    }
    let class = &classes[ci];
    if taken.len() == class.len() {
        let saved = std::mem::take(taken);
        search_orders(classes, ci + 1, taken, order, emit);
        *taken = saved;
        return;
    }
    for &v in class {
        if taken.contains(&v) {
            continue;
        }
        taken.push(v);
        order.push(v);
        search_orders(classes, ci, taken, order, emit);
        order.pop();
        taken.pop();
    }
}

/// Applies a half-edge and vertex relabeling to a marked graph.
pub fn relabel(
    m: &MarkedGraph,
    vertex_map: &BTreeMap<VertexId, VertexId>,
    half_edge_map: &BTreeMap<HalfEdge, HalfEdge>,
) -> MarkedGraph {
    let g = &m.graph;
    let graph = DecoratedGraph {
        half_edges: g.half_edges.iter().map(|h| half_edge_map[h]).collect(),
        sigma: g.sigma.iter().map(|(a, b)| (half_edge_map[a], half_edge_map[b])).collect(),
        pi: g.pi.iter().map(|(h, v)| (half_edge_map[h], vertex_map[v])).collect(),
        vertices: g
            .vertices
            .values()
            .map(|v| (vertex_map[&v.id], Vertex { id: vertex_map[&v.id], ..v.clone() }))
            .collect(),
    };
    let old_edges = g.edges();
    let filtration = m
        .filtration
        .iter()
        .map(|set| {
            set.iter()
                .map(|&e| {
                    let (a, _) = old_edges[e];
                    graph.edge_index(half_edge_map[&a]).expect("edge survives relabeling")
                })
                .collect::<BTreeSet<_>>()
        })
        .collect();
    MarkedGraph { graph, filtration }
}
