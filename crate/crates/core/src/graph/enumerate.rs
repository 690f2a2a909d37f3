//! Enumeration of the finite set of stable decorated graphs with a given total
//! charge and Euler characteristic whose vertices satisfy ‖β_v‖ ≤ C·ω(β_v).
//!
//! Write D_v = 2χ_v − 2n_v − |π⁻¹(v)|, so that Σ_v D_v = 2χ(G). A charged
//! vertex has D_v ≤ 2 and a stable neutral vertex has D_v ≤ −1. Every nonzero
//! admissible charge has ω(x) ≥ ‖x‖/C ≥ min_i w_i / C, which bounds the number
//! P of charged vertices by C·ω(β)/min_i w_i. Then 2χ ≤ 2P − Q bounds the
//! number Q of neutral vertices, each D_v is at least 2χ − 2P, and the number
//! of edges is at most P + Q − χ.

use std::collections::BTreeMap;

use num_traits::Signed;

use super::canonical::{canonical_form, CanonicalLabel};
use super::decorated::{DecoratedGraph, Vertex};
use super::lattice::{Charge, ChargeLattice};
use super::marked::MarkedGraph;
use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EnumerationBounds {
    pub max_charged_vertices: usize,
    pub max_neutral_vertices: usize,
    pub min_vertex_defect: i64,
    pub max_edges: usize,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub bounds: EnumerationBounds,
    /// Canonical representatives keyed by canonical label.
    pub graphs: BTreeMap<CanonicalLabel, DecoratedGraph>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct VertexType {
    beta: Charge,
    chi: i64,
    n: i64,
    valence: usize,
}

impl VertexType {
    fn defect(&self) -> i64 {
        2 * self.chi - 2 * self.n - self.valence as i64
    }
}

pub fn derive_bounds(lattice: &ChargeLattice, beta: &[i64], chi: i64, c: &Q) -> Result<EnumerationBounds> {
    lattice.validate()?;
    if beta.len() != lattice.rank {
        return Err(Error::InvalidInput("beta has the wrong rank".into()));
    }
    if !c.is_positive() {
        return Err(Error::InvalidInput("C must be positive".into()));
    }
    if lattice.omega.iter().all(num_traits::Zero::is_zero) {
        return Err(Error::DegenerateLattice("symplectic area vanishes identically".into()));
    }
    let area = lattice.omega_of(beta);
    let w_min = lattice.norm_weights.iter().min().expect("rank > 0").clone();
    let p: usize = if area.is_negative() {
        0
    } else {
        (c * &area / w_min).floor().to_integer().try_into().unwrap_or(usize::MAX)
    };
    let q = (2 * p as i64 - 2 * chi).max(0) as usize;
    Ok(EnumerationBounds {
        max_charged_vertices: p,
        max_neutral_vertices: q,
        min_vertex_defect: 2 * chi - 2 * p as i64,
        max_edges: (p as i64 + q as i64 - chi).max(0) as usize,
    })
}

/// Stable graphs in 𝔊(β, χ, C), as canonical representatives sorted by label.
pub fn enumerate_graphs(lattice: &ChargeLattice, beta: &[i64], chi: i64, c: &Q) -> Result<Vec<DecoratedGraph>> {
    Ok(enumerate(lattice, beta, chi, c)?.graphs.into_values().collect())
}

pub fn enumerate(lattice: &ChargeLattice, beta: &[i64], chi: i64, c: &Q) -> Result<Enumeration> {
    let bounds = derive_bounds(lattice, beta, chi, c)?;
    let area = lattice.omega_of(beta);
    let charges = lattice.admissible_charges(c, &area)?;
    let w_min = lattice.norm_weights.iter().min().expect("rank > 0").clone();

    let mut types = Vec::new();
    for d in bounds.min_vertex_defect..=2 {
        for x in &charges {
            push_types(&mut types, x.clone(), d);
        }
        if d <= -1 {
            push_types(&mut types, lattice.zero_charge(), d);
        }
    }
    types.sort();

    let mut graphs = BTreeMap::new();
    let mut chosen = Vec::new();
    let ctx = Ctx {
        lattice,
        c,
        w_min: &w_min,
        types: &types,
        target_defect: 2 * chi,
        max_vertices: bounds.max_charged_vertices + bounds.max_neutral_vertices,
    };
    ctx.choose(0, beta.to_vec(), 0, &mut chosen, &mut |multiset| {
        for graph in realize(multiset) {
            let cf = canonical_form(&MarkedGraph::bare(graph)).expect("valid by construction");
            graphs.entry(cf.label.clone()).or_insert_with(|| cf.label.to_marked_graph().graph);
        }
    });
    Ok(Enumeration { bounds, graphs })
}

fn push_types(types: &mut Vec<VertexType>, beta: Charge, defect: i64) {
    // valence + 2n + 2(1 − χ) = 2 − D
    let budget = 2 - defect;
    if budget < 0 {
        return;
    }
    let neutral = ChargeLattice::is_zero(&beta);
    for deficit in 0..=budget / 2 {
        for n in 0..=(budget / 2 - deficit) {
            let valence = budget - 2 * deficit - 2 * n;
            let t = VertexType { beta: beta.clone(), chi: 1 - deficit, n, valence: valence as usize };
            if neutral && 2 * t.chi - t.valence as i64 >= 0 {
                continue;
            }
            debug_assert_eq!(t.defect(), defect);
            types.push(t);
        }
    }
}

struct Ctx<'a> {
    lattice: &'a ChargeLattice,
    c: &'a Q,
    w_min: &'a Q,
    types: &'a [VertexType],
    target_defect: i64,
    max_vertices: usize,
}

impl Ctx<'_> {
    fn max_charged(&self, remaining: &[i64]) -> i64 {
        let area = self.lattice.omega_of(remaining);
        if area.is_negative() {
            return -1;
        }
        (self.c * area / self.w_min).floor().to_integer().try_into().unwrap_or(i64::MAX)
    }

    fn choose<'t>(
        &'t self,
        start: usize,
        remaining: Charge,
        defect: i64,
        chosen: &mut Vec<&'t VertexType>,
        emit: &mut dyn FnMut(&[&VertexType]),
    ) {
        let rem_zero = ChargeLattice::is_zero(&remaining);
        if rem_zero && defect == self.target_defect && !chosen.is_empty() {
            let valence: usize = chosen.iter().map(|t| t.valence).sum();
            if valence.is_multiple_of(2) {
                emit(chosen);
            }
        }
        let max_charged = self.max_charged(&remaining);
        if max_charged < 0 || defect + 2 * max_charged < self.target_defect {
            return;
        }
        if chosen.len() >= self.max_vertices {
            return;
        }
        for (i, t) in self.types.iter().enumerate().skip(start) {
            let neutral = ChargeLattice::is_zero(&t.beta);
            if !neutral && rem_zero {
                continue;
            }
            let next: Charge = remaining.iter().zip(&t.beta).map(|(a, b)| a - b).collect();
            if !neutral && self.max_charged(&next) < 0 {
                continue;
            }
            chosen.push(t);
            self.choose(i, next, defect + t.defect(), chosen, emit);
            chosen.pop();
        }
    }
}

type Edge = (usize, usize);

/// All labeled multigraphs realizing the valences, as decorated graphs.
fn realize(types: &[&VertexType]) -> Vec<DecoratedGraph> {
    let n = types.len();
    let mut remaining: Vec<usize> = types.iter().map(|t| t.valence).collect();
    let mut edges = Vec::new();
    let mut out = Vec::new();
    fill(0, &mut remaining, &mut edges, &mut |edges| {
        let vertices =
            types.iter().enumerate().map(|(i, t)| Vertex::new(i, t.beta.clone(), t.chi, t.n)).collect();
        out.push(DecoratedGraph::from_edges(vertices, edges));
    });
    debug_assert!(n > 0);
    out
}

fn fill(
    i: usize,
    remaining: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[Edge]),
) {
    if i == remaining.len() {
        emit(edges);
        return;
    }
    let r = remaining[i];
    for loops in 0..=r / 2 {
        let rest = r - 2 * loops;
        let before = edges.len();
        edges.extend(std::iter::repeat_n((i, i), loops));
        remaining[i] = rest;
        distribute(i, i + 1, remaining, edges, emit);
        remaining[i] = r;
        edges.truncate(before);
    }
}

fn distribute(
    i: usize,
    j: usize,
    remaining: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[Edge]),
) {
    if remaining[i] == 0 {
        let saved = remaining[i];
        fill(i + 1, remaining, edges, emit);
        remaining[i] = saved;
        return;
    }
    if j >= remaining.len() {
        return;
    }
    let max = remaining[i].min(remaining[j]);
    for m in (0..=max).rev() {
        let before = edges.len();
        edges.extend(std::iter::repeat_n((i, j), m));
        remaining[i] -= m;
        remaining[j] -= m;
        distribute(i, j + 1, remaining, edges, emit);
        remaining[i] += m;
        remaining[j] += m;
        edges.truncate(before);
    }
}
