//! Permutations of H(k) = {0, …, 2k−1} commuting with σ(2j) = 2j+1, and the
//! groups Aut(H(k), σ, k₀, …, k_l) preserving the initial edge segments.

use serde::{Deserialize, Serialize};

/// A permutation of half-edges that commutes with σ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfEdgePerm(pub Vec<usize>);

impl HalfEdgePerm {
    pub fn identity(k: usize) -> Self {
        HalfEdgePerm((0..2 * k).collect())
    }

    /// Edge `e` goes to edge `edges[e]`, reversed when `flips[e]`.
    pub fn from_edges(edges: &[usize], flips: &[bool]) -> Self {
        let mut map = vec![0; 2 * edges.len()];
        for (e, (&t, &f)) in edges.iter().zip(flips).enumerate() {
            map[2 * e] = 2 * t + f as usize;
            map[2 * e + 1] = 2 * t + 1 - f as usize;
        }
        HalfEdgePerm(map)
    }

    pub fn edge_count(&self) -> usize {
        self.0.len() / 2
    }

    pub fn apply(&self, h: usize) -> usize {
        self.0[h]
    }

    pub fn edge_image(&self, e: usize) -> usize {
        self.0[2 * e] / 2
    }

    pub fn flips(&self, e: usize) -> bool {
        self.0[2 * e] % 2 == 1
    }

    /// (−1)^{number of reversed edges}: the action on the orientation torsor.
    pub fn orientation_sign(&self) -> i32 {
        if (0..self.edge_count()).filter(|&e| self.flips(e)).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &HalfEdgePerm) -> HalfEdgePerm {
        HalfEdgePerm(other.0.iter().map(|&h| self.0[h]).collect())
    }

    pub fn inverse(&self) -> HalfEdgePerm {
        let mut inv = vec![0; self.0.len()];
        for (h, &t) in self.0.iter().enumerate() {
            inv[t] = h;
        }
        HalfEdgePerm(inv)
    }

    pub fn commutes_with_sigma(&self) -> bool {
        (0..self.0.len()).all(|h| self.0[h ^ 1] == self.0[h] ^ 1)
    }

    /// The permutation of H(k−1) induced on the complement of edge `e`,
    /// using the order-preserving compactions on both sides.
    pub fn induced_without(&self, e: usize) -> HalfEdgePerm {
        let target = self.edge_image(e);
        let map = (0..self.0.len())
            .filter(|&h| h / 2 != e)
            .map(|h| compact(self.0[h], target))
            .collect();
        HalfEdgePerm(map)
    }
}

/// Order-preserving relabeling of H(k) ∖ {2e, 2e+1} onto H(k−1).
pub fn compact(h: usize, e: usize) -> usize {
    debug_assert!(h / 2 != e);
    if h < 2 * e {
        h
    } else {
        h - 2
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Boundaries of the edge blocks [0,k₀), [k₀,k₁), …, [k_l,k).
pub fn blocks(k: usize, signature: &[usize]) -> Vec<(usize, usize)> {
    let mut cuts = vec![0];
    cuts.extend(signature.iter().copied());
    cuts.push(k);
    cuts.windows(2).map(|w| (w[0], w[1])).filter(|(a, b)| a < b).collect()
}

/// All elements of Aut(H(k), σ, k₀, …, k_l), sorted.
pub fn aut_group(k: usize, signature: &[usize]) -> Vec<HalfEdgePerm> {
    let mut edge_maps: Vec<Vec<usize>> = vec![(0..k).collect()];
    for (a, b) in blocks(k, signature) {
        let perms = permutations(b - a);
        let mut next = Vec::with_capacity(edge_maps.len() * perms.len());
        for m in &edge_maps {
            for p in &perms {
                let mut m2 = m.clone();
                for (i, &pi) in p.iter().enumerate() {
                    m2[a + i] = a + pi;
                }
                next.push(m2);
            }
        }
        edge_maps = next;
    }
    let mut out = Vec::with_capacity(edge_maps.len() << k);
    for m in &edge_maps {
        for bits in 0..(1usize << k) {
            let flips: Vec<bool> = (0..k).map(|e| bits >> e & 1 == 1).collect();
            out.push(HalfEdgePerm::from_edges(m, &flips));
        }
    }
    out.sort();
    out
}

pub fn group_order(k: usize, signature: &[usize]) -> u64 {
    let fact = |n: usize| (1..=n as u64).product::<u64>();
    blocks(k, signature).iter().map(|(a, b)| fact(b - a)).product::<u64>() << k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(aut_group(4, &[0]).len(), 384);
        assert_eq!(group_order(4, &[0]), 384);
        assert_eq!(aut_group(3, &[1, 2]).len(), 8);
        assert_eq!(group_order(3, &[1, 1, 3]), 16);
        assert_eq!(aut_group(0, &[0]).len(), 1);
    }

    #[test]
    fn elements_commute_with_sigma_and_preserve_segments() {
        for g in aut_group(4, &[1, 3]) {
            assert!(g.commutes_with_sigma());
            assert_eq!(g.edge_image(0), 0);
            assert!(g.edge_image(3) == 3);
        }
    }

    #[test]
    fn sign_is_a_homomorphism() {
        let g = aut_group(3, &[0]);
        for a in g.iter().step_by(5) {
            for b in g.iter().step_by(7) {
                assert_eq!(a.compose(b).orientation_sign(), a.orientation_sign() * b.orientation_sign());
                assert!(a.compose(&a.inverse()) == HalfEdgePerm::identity(3));
            }
        }
    }

    #[test]
    fn induced_map_fixes_complement() {
        let g = HalfEdgePerm::from_edges(&[2, 0, 1], &[false, true, false]);
        let ind = g.induced_without(1);
        // edge 0 -> 2 becomes 0 -> 1, edge 2 -> 1 becomes 1 -> 0 after compaction around edge 0
        assert_eq!(ind, HalfEdgePerm::from_edges(&[1, 0], &[false, false]));
    }
}
