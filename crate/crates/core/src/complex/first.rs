//! First-version chains, indexed by isomorphism classes of marked graphs, and
//! the linear map to second-version chains.
//!
//! Each class is represented by its canonical marked graph, whose edge `j`
//! is the half-edge pair (2j, 2j+1); cells are labeled by those half-edges.
//! Entries are stored as Aut(G, E₀…E_l)-invariant vectors (orbit sums), and
//! a degree-d chain has cells of dimension d + l.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::cell::{act, add_into, boundary_comb, diagonal_comb, norm, Cell, LinComb};
use super::chain::{SecondChain, SecondIndex};
use super::perm::HalfEdgePerm;
use crate::error::{Error, Result};
use crate::graph::{automorphism_group, canonical_form, CanonicalLabel, MarkedGraph};
use crate::rational::Q;

fn one() -> Q {
    Q::from_integer(1.into())
}

fn alt(i: usize) -> Q {
    Q::from_integer(if i.is_multiple_of(2) { 1.into() } else { (-1).into() })
}

fn to_perm(map: &BTreeMap<usize, usize>) -> HalfEdgePerm {
    HalfEdgePerm((0..map.len()).map(|h| map[&h]).collect())
}

/// Symmetries of the canonical representative, as half-edge permutations.
pub fn label_group(label: &CanonicalLabel) -> Result<Arc<Vec<HalfEdgePerm>>> {
    static CACHE: OnceLock<Mutex<HashMap<CanonicalLabel, Arc<Vec<HalfEdgePerm>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().unwrap().get(label) {
        return Ok(g.clone());
    }
    let rep = label.to_marked_graph();
    let g: Arc<Vec<HalfEdgePerm>> =
        Arc::new(automorphism_group(&rep)?.iter().map(|a| to_perm(&a.half_edge_map)).collect());
    cache.lock().unwrap().insert(label.clone(), g.clone());
    Ok(g)
}

/// Canonical label of `m` (with half-edges 0..2k, edge j = (2j, 2j+1)) and
/// the relabeling from `m` onto the canonical representative.
fn canonicalize(m: &MarkedGraph) -> Result<(CanonicalLabel, HalfEdgePerm)> {
    let f = canonical_form(m)?;
    Ok((f.label, to_perm(&f.half_edge_map)))
}

/// δ_e of a standard-labeled marked graph with half-edges compacted.
fn contract(m: &MarkedGraph, e: usize) -> Result<MarkedGraph> {
    let g = m.graph.contract_edge((2 * e, 2 * e + 1))?;
    let (graph, _) = g.standardized();
    let filtration = m
        .filtration
        .iter()
        .map(|s| s.iter().filter(|&&j| j != e).map(|&j| if j > e { j - 1 } else { j }).collect())
        .collect();
    Ok(MarkedGraph { graph: graph.compact_vertex_ids(), filtration })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstChain<C: Cell> {
    pub degree: i32,
    pub entries: BTreeMap<CanonicalLabel, LinComb<C>>,
}

impl<C: Cell> FirstChain<C> {
    pub fn zero(degree: i32) -> Self {
        FirstChain { degree, entries: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|v| v.is_empty())
    }

    fn add_entry(&mut self, label: CanonicalLabel, v: &LinComb<C>, scale: &Q) {
        let slot = self.entries.entry(label.clone()).or_default();
        add_into(slot, v, scale);
        if slot.is_empty() {
            self.entries.remove(&label);
        }
    }

    /// Adds the class of raw cells `x` on the marked graph `m`, whose half-edges
    /// must be 0..2k with edge j = (2j, 2j+1).
    pub fn add_raw(&mut self, m: &MarkedGraph, x: &LinComb<C>, scale: &Q) -> Result<()> {
        if m.filtration.is_empty() {
            return Err(Error::InvalidInput("first-version entries need l ≥ 0".into()));
        }
        let (label, psi) = canonicalize(m)?;
        let n = norm(&label_group(&label)?, &act(&psi, x));
        self.add_entry(label, &n, scale);
        Ok(())
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        if out.is_zero() {
            out.degree = other.degree;
        }
        for (l, v) in &other.entries {
            out.add_entry(l.clone(), v, &-one());
        }
        out
    }

    pub fn boundary(&self) -> Result<Self> {
        let mut out = Self::zero(self.degree - 1);
        for (l, v) in &self.entries {
            out.add_entry(l.clone(), &boundary_comb(v)?, &one());
        }
        Ok(out)
    }

    /// Contraction of every edge outside E_l, moved to the canonical target.
    pub fn delta(&self) -> Result<Self> {
        let mut out = Self::zero(self.degree - 1);
        for (label, v) in &self.entries {
            let rep = label.to_marked_graph();
            let scale = Q::new(1.into(), label_group(label)?.len().into());
            for e in rep.free_edges() {
                let restricted = diagonal_comb(v, e)?;
                if restricted.is_empty() {
                    continue;
                }
                let (target, psi) = canonicalize(&contract(&rep, e)?)?;
                let n = norm(&label_group(&target)?, &act(&psi, &restricted));
                out.add_entry(target, &n, &scale);
            }
        }
        Ok(out)
    }

    /// (−1)^d Σ_i (−1)^i of the entry at the i-th face, over all one-longer filtrations.
    pub fn tilde(&self) -> Result<Self> {
        let mut targets = BTreeSet::new();
        for label in self.entries.keys() {
            let rep = label.to_marked_graph();
            let k = rep.graph.edge_count();
            let all: BTreeSet<usize> = (0..k).collect();
            let n = rep.filtration.len();
            for i in 0..=n {
                let lo = if i == 0 { BTreeSet::new() } else { rep.filtration[i - 1].clone() };
                let hi = if i == n { all.clone() } else { rep.filtration[i].clone() };
                let free: Vec<usize> = hi.difference(&lo).copied().collect();
                for bits in 0..(1usize << free.len()) {
                    let mut s = lo.clone();
                    s.extend(free.iter().enumerate().filter(|(b, _)| bits >> b & 1 == 1).map(|(_, &e)| e));
                    let mut m = rep.clone();
                    m.filtration.insert(i, s);
                    targets.insert(canonicalize(&m)?.0);
                }
            }
        }
        let global = alt(self.degree.unsigned_abs() as usize);
        let mut out = Self::zero(self.degree - 1);
        for t in targets {
            let rep = t.to_marked_graph();
            let mut acc = LinComb::new();
            for i in 0..rep.filtration.len() {
                let (face, psi) = canonicalize(&rep.remove_face(i)?)?;
                if let Some(y) = self.entries.get(&face) {
                    add_into(&mut acc, &act(&psi.inverse(), y), &alt(i));
                }
            }
            out.add_entry(t, &acc, &global);
        }
        Ok(out)
    }

    pub fn hat(&self) -> Result<Self> {
        Ok(self.boundary()?.minus(&self.delta()?).minus(&self.tilde()?))
    }
}

/// Orders edges by filtration level (stably), keeping each edge's orientation,
/// so that every E_i becomes an initial segment.
pub fn initial_segment_relabeling(m: &MarkedGraph) -> HalfEdgePerm {
    let levels = m.edge_levels();
    let mut order: Vec<usize> = (0..levels.len()).collect();
    order.sort_by_key(|&e| levels[e]);
    let mut pos = vec![0; order.len()];
    for (p, &e) in order.iter().enumerate() {
        pos[e] = p;
    }
    HalfEdgePerm::from_edges(&pos, &vec![false; pos.len()])
}

/// The map forgetting the graph: each entry moves to (k; |E₀|, …, |E_l|).
pub fn first_to_second<C: Cell>(c: &FirstChain<C>) -> Result<SecondChain<C>> {
    let mut out = SecondChain::zero(c.degree);
    for (label, v) in &c.entries {
        let rep = label.to_marked_graph();
        let iota = initial_segment_relabeling(&rep);
        let idx = SecondIndex::new(rep.graph.edge_count(), rep.signature())?;
        let n = norm(&idx.group(), &act(&iota, v));
        out.add_entry(idx, &n, &Q::new(1.into(), label_group(label)?.len().into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::synthetic::{random_first_chain, random_marked_graph, SyntheticCell};
    use crate::graph::{DecoratedGraph, Vertex};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identities_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut nontrivial = 0;
        for _ in 0..40 {
            let d = rng.gen_range(0..=2);
            let c = random_first_chain(&mut rng, d, 3, 2);
            let h = c.hat().unwrap();
            assert!(h.hat().unwrap().is_zero());
            let dl = c.delta().unwrap();
            assert!(dl.delta().unwrap().is_zero());
            assert!(c.tilde().unwrap().tilde().unwrap().is_zero());
            nontrivial += (!dl.is_zero() && !c.tilde().unwrap().is_zero()) as usize;
        }
        assert!(nontrivial > 5);
    }

    #[test]
    fn forgetting_the_graph_is_a_chain_map() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..40 {
            let d = rng.gen_range(0..=2);
            let c = random_first_chain(&mut rng, d, 3, 2);
            let lhs = first_to_second(&c.hat().unwrap()).unwrap();
            let rhs = first_to_second(&c).unwrap().hat().unwrap();
            assert!(lhs.minus(&rhs).unwrap().is_zero());
            for part in [first_to_second(&c.delta().unwrap()).unwrap().minus(&first_to_second(&c).unwrap().delta().unwrap()).unwrap(),
                first_to_second(&c.tilde().unwrap()).unwrap().minus(&first_to_second(&c).unwrap().tilde()).unwrap()] {
                assert!(part.is_zero());
            }
        }
    }

    #[test]
    fn single_edge_maps_to_its_k1_entry() {
        let g = DecoratedGraph::from_edges(vec![Vertex::new(0, vec![1], 1, 0), Vertex::new(1, vec![0], 1, 0)], &[(0, 1)]);
        let m = MarkedGraph::new(g, vec![BTreeSet::new()]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let cell = SyntheticCell::random(&mut rng, 1, 0);
        let mut c = FirstChain::zero(0);
        c.add_raw(&m, &LinComb::from([(cell.clone(), one())]), &one()).unwrap();
        let s = first_to_second(&c).unwrap();
        let idx = SecondIndex::new(1, vec![0]).unwrap();
        let expected = super::super::chain::single(0, idx, cell, one());
        assert_eq!(s, expected);
    }

    #[test]
    fn isomorphic_entries_share_one_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let m = random_marked_graph(&mut rng, 2, 0);
        let cell = SyntheticCell::random(&mut rng, 2, 0);
        let swap = HalfEdgePerm::from_edges(&[1, 0], &[false, false]);
        // relabel the graph by swapping its two edges
        let m2 = crate::graph::canonical::relabel(
            &m,
            &m.graph.vertices.keys().map(|&v| (v, v)).collect(),
            &(0..4).map(|h| (h, swap.apply(h))).collect(),
        );
        let mut a = FirstChain::zero(0);
        a.add_raw(&m, &LinComb::from([(cell.clone(), one())]), &one()).unwrap();
        let mut b = FirstChain::zero(0);
        b.add_raw(&m2, &act(&swap, &LinComb::from([(cell, one())])), &one()).unwrap();
        assert_eq!(a, b);
        let mut both = a.clone();
        for (l, v) in &b.entries {
            both.add_entry(l.clone(), v, &one());
        }
        assert_eq!(both.entries.len(), 1);
        assert_eq!(first_to_second(&both).unwrap(), first_to_second(&a).unwrap().scaled(&Q::from_integer(2.into())));
    }
}
