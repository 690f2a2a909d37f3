//! The charge lattice: a free abelian group of finite rank with a boundary
//! map to first homology, a rational area functional and a weighted ℓ¹ norm.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{serde_q_vec, Q};

pub type Charge = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChargeLattice {
    pub rank: usize,
    /// Rows index H₁ generators, columns index lattice generators.
    pub boundary_matrix: Vec<Vec<i64>>,
    #[serde(with = "serde_q_vec")]
    pub omega: Vec<Q>,
    #[serde(with = "serde_q_vec")]
    pub norm_weights: Vec<Q>,
}

impl ChargeLattice {
    pub fn new(
        boundary_matrix: Vec<Vec<i64>>,
        omega: Vec<Q>,
        norm_weights: Vec<Q>,
    ) -> Result<Self> {
        let lattice = ChargeLattice { rank: omega.len(), boundary_matrix, omega, norm_weights };
        lattice.validate()?;
        Ok(lattice)
    }

    /// Rank one, zero boundary, ω = id and ‖·‖ = |·|.
    pub fn rank_one() -> Self {
        ChargeLattice {
            rank: 1,
            boundary_matrix: vec![],
            omega: vec![crate::rational::one()],
            norm_weights: vec![crate::rational::one()],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank == 0 {
            return Err(Error::InvalidInput("lattice rank must be positive".into()));
        }
        if self.omega.len() != self.rank || self.norm_weights.len() != self.rank {
            return Err(Error::InvalidInput("omega and norm_weights must have length rank".into()));
        }
        if self.norm_weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::InvalidInput("norm weights must be strictly positive".into()));
        }
        if self.boundary_matrix.iter().any(|row| row.len() != self.rank) {
            return Err(Error::InvalidInput("boundary matrix rows must have length rank".into()));
        }
        Ok(())
    }

    pub fn omega_of(&self, x: &[i64]) -> Q {
        self.omega.iter().zip(x).map(|(w, &xi)| w * Q::from_integer(xi.into())).sum()
    }

    pub fn norm(&self, x: &[i64]) -> Q {
        self.norm_weights.iter().zip(x).map(|(w, &xi)| w * Q::from_integer(xi.abs().into())).sum()
    }

    /// ∂x ∈ H₁(L, ℤ).
    pub fn boundary(&self, x: &[i64]) -> Vec<i64> {
        self.boundary_matrix.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    /// The support condition ‖x‖ ≤ C·ω(x).
    pub fn admissible(&self, x: &[i64], c: &Q) -> bool {
        self.norm(x) <= c * self.omega_of(x)
    }

    pub fn zero_charge(&self) -> Charge {
        vec![0; self.rank]
    }

    pub fn is_zero(x: &[i64]) -> bool {
        x.iter().all(|v| *v == 0)
    }

    /// All nonzero admissible charges with ω(x) ≤ `area`, in lexicographic order.
    ///
    /// Admissible nonzero charges satisfy |x_i| ≤ ‖x‖/w_i ≤ C·area/w_i, so the
    /// search box is finite.
    pub fn admissible_charges(&self, c: &Q, area: &Q) -> Result<Vec<Charge>> {
        if self.omega.iter().all(|w| w.is_zero()) {
            return Err(Error::DegenerateLattice("symplectic area vanishes identically".into()));
        }
        if !c.is_positive() {
            return Err(Error::InvalidInput("C must be positive".into()));
        }
        if area.is_negative() {
            return Ok(vec![]);
        }
        let bounds: Vec<i64> = self
            .norm_weights
            .iter()
            .map(|w| {
                let b = (c * area / w).floor();
                b.to_integer().try_into().unwrap_or(i64::MAX)
            })
            .collect();
        let mut out = Vec::new();
        let mut x = bounds.iter().map(|b| -b).collect::<Vec<_>>();
        loop {
            if !Self::is_zero(&x) && self.admissible(&x, c) && &self.omega_of(&x) <= area {
                out.push(x.clone());
            }
            let mut i = 0;
            loop {
                if i == x.len() {
                    return Ok(out);
                }
                if x[i] < bounds[i] {
                    x[i] += 1;
                    break;
                }
                x[i] = -bounds[i];
                i += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn rank_one_admissible_charges() {
        let l = ChargeLattice::rank_one();
        let xs = l.admissible_charges(&q(1), &q(3)).unwrap();
        assert_eq!(xs, vec![vec![1], vec![2], vec![3]]);
        assert!(l.admissible(&[0], &q(1)));
        assert!(!l.admissible(&[-1], &q(1)));
    }

    #[test]
    fn norm_vanishes_only_at_zero() {
        let l = ChargeLattice::new(vec![vec![1, 0]], vec![q(1), q(2)], vec![q(1), q(3)]).unwrap();
        assert!(l.norm(&[0, 0]).is_zero());
        assert!(l.norm(&[0, -1]).is_positive());
        assert_eq!(l.boundary(&[2, 5]), vec![2]);
    }

    #[test]
    fn degenerate_area_is_reported() {
        let l = ChargeLattice::new(vec![], vec![q(0)], vec![q(1)]).unwrap();
        assert!(matches!(l.admissible_charges(&q(1), &q(1)), Err(Error::DegenerateLattice(_))));
    }
}
