//! Formal cubical cells over H(k): free construction satisfying the cell
//! identities by design, used to exercise the complex in every degree.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::cell::{Cell, LinComb};
use super::chain::{SecondChain, SecondIndex};
use super::first::FirstChain;
use crate::graph::{DecoratedGraph, MarkedGraph, Vertex};
use super::perm::{compact, HalfEdgePerm};
use crate::error::Result;
use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CoordState {
    Free,
    Lo,
    Hi,
    Mid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CoordKind {
    Plain,
    /// Transverse coordinate to the diagonal of an edge, with a reference
    /// ordering of its two half-edges.
    Edge(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coord {
    pub kind: CoordKind,
    pub state: CoordState,
}

/// A face of a labeled cube. Each half-edge carries a tag so that relabeling
/// is visible; the tags travel with the half-edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SyntheticCell {
    pub tags: Vec<u8>,
    pub coords: Vec<Coord>,
}

impl SyntheticCell {
    fn free_positions(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&i| self.coords[i].state == CoordState::Free).collect()
    }

    /// A random cell on H(k) with `dim` free coordinates.
    pub fn random<R: Rng>(rng: &mut R, k: usize, dim: usize) -> Self {
        let tags = (0..2 * k).map(|_| rng.gen_range(0..3)).collect();
        let mut edges: Vec<usize> = (0..k).collect();
        edges.shuffle(rng);
        let n_edge = rng.gen_range(0..=dim.min(k));
        let mut coords: Vec<Coord> = edges[..n_edge]
            .iter()
            .map(|&e| {
                let kind = if rng.gen_bool(0.5) { CoordKind::Edge(2 * e, 2 * e + 1) } else { CoordKind::Edge(2 * e + 1, 2 * e) };
                Coord { kind, state: CoordState::Free }
            })
            .collect();
        coords.extend((n_edge..dim).map(|_| Coord { kind: CoordKind::Plain, state: CoordState::Free }));
        for _ in 0..rng.gen_range(0..=1) {
            let state = if rng.gen_bool(0.5) { CoordState::Lo } else { CoordState::Hi };
            coords.push(Coord { kind: CoordKind::Plain, state });
        }
        coords.shuffle(rng);
        SyntheticCell { tags, coords }
    }
}

fn sign_q(s: i32) -> Q {
    Q::from_integer(s.into())
}

impl Cell for SyntheticCell {
    fn dim(&self) -> usize {
        self.free_positions().len()
    }

    fn label_count(&self) -> usize {
        self.tags.len()
    }

    fn relabel(&self, g: &HalfEdgePerm) -> (i32, Self) {
        let mut tags = vec![0; self.tags.len()];
        for (h, &t) in self.tags.iter().enumerate() {
            tags[g.apply(h)] = t;
        }
        let coords = self
            .coords
            .iter()
            .map(|c| match c.kind {
                CoordKind::Plain => *c,
                CoordKind::Edge(a, b) => Coord { kind: CoordKind::Edge(g.apply(a), g.apply(b)), state: c.state },
            })
            .collect();
        (1, SyntheticCell { tags, coords })
    }

    fn boundary(&self) -> Result<Vec<(Q, Self)>> {
        let mut out = Vec::new();
        for (pos, &i) in self.free_positions().iter().enumerate() {
            let s = if pos % 2 == 0 { 1 } else { -1 };
            for (state, sign) in [(CoordState::Hi, s), (CoordState::Lo, -s)] {
                let mut c = self.clone();
                c.coords[i].state = state;
                out.push((sign_q(sign), c));
            }
        }
        Ok(out)
    }

    fn diagonal_restriction(&self, e: usize) -> Result<Vec<(Q, Self)>> {
        let free = self.free_positions();
        let hit = free.iter().enumerate().find(|(_, &i)| {
            matches!(self.coords[i].kind, CoordKind::Edge(a, _) if a / 2 == e)
        });
        let Some((pos, &i)) = hit else {
            return Ok(vec![]);
        };
        let CoordKind::Edge(a, _) = self.coords[i].kind else { unreachable!() };
        let mut sign = if pos % 2 == 0 { 1 } else { -1 };
        if a != 2 * e {
            sign = -sign;
        }
        let tags = self.tags.iter().enumerate().filter(|(h, _)| h / 2 != e).map(|(_, &t)| t).collect();
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if j == i {
                    return Coord { kind: CoordKind::Plain, state: CoordState::Mid };
                }
                match c.kind {
                    CoordKind::Edge(x, y) if x / 2 != e => {
                        Coord { kind: CoordKind::Edge(compact(x, e), compact(y, e)), state: c.state }
                    }
                    // a spent coordinate of the same edge cannot occur: one coordinate per edge
                    _ => *c,
                }
            })
            .collect();
        Ok(vec![(sign_q(sign), SyntheticCell { tags, coords })])
    }
}

/// A random second-version chain of degree `degree` with a few entries,
/// k ≤ `max_k` and l ≤ `max_l`.
pub fn random_second_chain<R: Rng>(rng: &mut R, degree: usize, max_k: usize, max_l: usize) -> SecondChain<SyntheticCell> {
    let mut out = SecondChain::zero(degree as i32);
    for _ in 0..rng.gen_range(1..=3) {
        let k = rng.gen_range(1..=max_k);
        let l = rng.gen_range(0..=max_l);
        let mut sig: Vec<usize> = (0..=l).map(|_| rng.gen_range(0..=k)).collect();
        sig.sort();
        let cell = SyntheticCell::random(rng, k, degree + l);
        let coeff = Q::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into());
        out.add_raw(SecondIndex { k, sig }, &LinComb::from([(cell, coeff)]), &Q::from_integer(1.into()));
    }
    out
}

/// A random marked graph with `k` edges (edge j = half-edges 2j, 2j+1),
/// connected, with a filtration of length l + 1.
pub fn random_marked_graph<R: Rng>(rng: &mut R, k: usize, l: usize) -> MarkedGraph {
    let nv = rng.gen_range(1..=k.min(3) + 1).min(k + 1);
    let vertices = (0..nv).map(|i| Vertex::new(i, vec![rng.gen_range(0..=1)], 1, 0)).collect();
    let edges: Vec<(usize, usize)> = (0..k)
        .map(|j| if j + 1 < nv { (j, j + 1) } else { (rng.gen_range(0..nv), rng.gen_range(0..nv)) })
        .collect();
    let graph = DecoratedGraph::from_edges(vertices, &edges);
    let levels: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=l + 1)).collect();
    let filtration = (0..=l).map(|i| (0..k).filter(|&e| levels[e] <= i).collect()).collect();
    MarkedGraph { graph, filtration }
}

/// A random first-version chain of degree `degree`.
pub fn random_first_chain<R: Rng>(rng: &mut R, degree: usize, max_k: usize, max_l: usize) -> FirstChain<SyntheticCell> {
    let mut out = FirstChain::zero(degree as i32);
    for _ in 0..rng.gen_range(1..=3) {
        let k = rng.gen_range(1..=max_k);
        let l = rng.gen_range(0..=max_l);
        let m = random_marked_graph(rng, k, l);
        let cell = SyntheticCell::random(rng, k, degree + l);
        let coeff = Q::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into());
        out.add_raw(&m, &LinComb::from([(cell, coeff)]), &Q::from_integer(1.into()))
            .expect("random marked graphs are valid");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::cell::{boundary_comb, diagonal_comb, LinComb};
    use crate::complex::perm::aut_group;
    use num_traits::Zero;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn single(c: SyntheticCell) -> LinComb<SyntheticCell> {
        LinComb::from([(c, Q::from_integer(1.into()))])
    }

    #[test]
    fn cell_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let k = rng.gen_range(1..=4);
            let dim = rng.gen_range(0..=4);
            let c = SyntheticCell::random(&mut rng, k, dim);
            let v = single(c);
            assert!(boundary_comb(&boundary_comb(&v).unwrap()).unwrap().is_empty());
            for e in 0..k {
                let a = boundary_comb(&diagonal_comb(&v, e).unwrap()).unwrap();
                let b = diagonal_comb(&boundary_comb(&v).unwrap(), e).unwrap();
                let mut sum = a.clone();
                crate::complex::cell::add_into(&mut sum, &b, &Q::from_integer(1.into()));
                assert!(sum.is_empty());
                for f in 0..k {
                    if f == e {
                        continue;
                    }
                    let f1 = if f > e { f - 1 } else { f };
                    let e1 = if e > f { e - 1 } else { e };
                    let ef = diagonal_comb(&diagonal_comb(&v, e).unwrap(), f1).unwrap();
                    let fe = diagonal_comb(&diagonal_comb(&v, f).unwrap(), e1).unwrap();
                    let mut s = ef.clone();
                    crate::complex::cell::add_into(&mut s, &fe, &Q::from_integer(1.into()));
                    assert!(s.is_empty(), "δ_e δ_f should anticommute");
                }
            }
        }
    }

    #[test]
    fn diagonal_is_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let k = 3;
            let v = single(SyntheticCell::random(&mut rng, k, 3));
            for g in aut_group(k, &[0]).iter().step_by(7) {
                for e in 0..k {
                    let lhs = diagonal_comb(&crate::complex::cell::act(g, &v), g.edge_image(e)).unwrap();
                    let rhs = crate::complex::cell::act(&g.induced_without(e), &diagonal_comb(&v, e).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
        assert!(Q::zero().is_zero());
    }
}
