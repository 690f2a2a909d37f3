//! Small translations separating σ-paired chains, with the straight-line
//! isotopy that realizes them.

use num_traits::Zero;

use super::curve::OneChain;
use super::isotopy::Isotopy;
use super::linking::projection_direction;
use super::point::{self, Point};
use super::predicates::{are_disjoint, min_dist_sq};
use crate::error::{Error, Result};
use crate::rational::Q;

const ATTEMPTS: usize = 24;

#[derive(Clone, Debug)]
pub struct Perturbation {
    pub chains: Vec<OneChain>,
    /// Per label, the translation applied.
    pub shifts: Vec<Point>,
    /// Straight-line motion from the input to `chains`.
    pub isotopy: Isotopy,
    /// Smallest squared distance between paired supports after the move.
    pub min_separation_sq: Q,
}

/// Moves `chains[σh]` for every intersecting pair `h < σh` by a translation of
/// ℓ¹ length at most `epsilon`, so that every σ-pair becomes disjoint.
pub fn perturb_off_diagonal(chains: &[OneChain], sigma: &[usize], epsilon: &Q) -> Result<Perturbation> {
    if *epsilon <= Q::zero() {
        return Err(Error::InvalidInput("epsilon must be positive".into()));
    }
    if sigma.len() != chains.len() || sigma.iter().enumerate().any(|(h, &s)| s >= sigma.len() || s == h || sigma[s] != h) {
        return Err(Error::InvalidInput("pairing must be a fixed-point-free involution on the labels".into()));
    }
    let mut out = chains.to_vec();
    let mut shifts = vec![point::origin(); chains.len()];
    for (h, &s) in sigma.iter().enumerate() {
        if h > s || are_disjoint(&out[h], &out[s]) {
            continue;
        }
        let mut done = false;
        for i in 0..ATTEMPTS {
            let d = projection_direction(1000 + i);
            let v = point::scale(&(epsilon / point::norm_l1(&d)), &d);
            let moved = chains[s].translated(&v);
            if are_disjoint(&out[h], &moved) {
                out[s] = moved;
                shifts[s] = v;
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::PerturbationFailed { min_separation_sq: Q::zero(), attempts: ATTEMPTS });
        }
    }
    let min_separation_sq = sigma
        .iter()
        .enumerate()
        .filter(|(h, s)| h < s)
        .map(|(h, &s)| min_dist_sq(&out[h], &out[s]))
        .min()
        .unwrap_or_else(Q::zero);
    let isotopy = Isotopy::straight(chains.to_vec(), out.clone())?;
    Ok(Perturbation { chains: out, shifts, isotopy, min_separation_sq })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::qf;

    #[test]
    fn separates_coincident_circles() {
        let (a, _) = fixtures::hopf_pair();
        let eps = qf(1, 8);
        let p = perturb_off_diagonal(&[a.clone(), a.clone()], &[1, 0], &eps).unwrap();
        assert!(are_disjoint(&p.chains[0], &p.chains[1]));
        assert!(p.min_separation_sq > Q::zero());
        assert!(point::norm_l1(&p.shifts[1]) <= eps);
        assert_eq!(p.chains[1].homology_class(), a.homology_class());
    }

    #[test]
    fn disjoint_input_is_untouched() {
        let (a, b) = fixtures::hopf_pair();
        let p = perturb_off_diagonal(&[a.clone(), b.clone()], &[1, 0], &qf(1, 8)).unwrap();
        assert_eq!(p.chains, vec![a, b]);
        assert!(p.shifts.iter().all(point::is_zero));
    }

    #[test]
    fn torus_classes_are_preserved() {
        let w = fixtures::torus_winding_loop([0, 1, 0]);
        let p = perturb_off_diagonal(&[w.clone(), w.clone()], &[1, 0], &qf(1, 16)).unwrap();
        assert!(are_disjoint(&p.chains[0], &p.chains[1]));
        assert_eq!(p.chains[1].homology_class(), w.homology_class());
    }
}
