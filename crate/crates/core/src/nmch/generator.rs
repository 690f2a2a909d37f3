//! Nice generators: 2k curves paired by a fixed-point-free involution with
//! each pair disjoint.

use serde::{Deserialize, Serialize};

use crate::complex::{nice_chain, PlCell, SecondChain};
use crate::error::{Error, Result};
use crate::geometry::io::CurveJson;
use crate::geometry::{are_disjoint, homology_class, OneChain};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceGenerator {
    pub k: usize,
    pub pairing: Vec<usize>,
    pub curves: Vec<OneChain>,
}

/// Checks that `pairing` is an involution of 0..n without fixed points.
pub fn check_pairing(pairing: &[usize]) -> Result<()> {
    for (h, &s) in pairing.iter().enumerate() {
        if s >= pairing.len() || s == h || pairing[s] != h {
            return Err(Error::InvalidInput(format!("pairing is not a fixed-point-free involution at {h}")));
        }
    }
    Ok(())
}

impl NiceGenerator {
    pub fn new(pairing: Vec<usize>, curves: Vec<OneChain>) -> Result<Self> {
        if pairing.len() != curves.len() || !pairing.len().is_multiple_of(2) {
            return Err(Error::InvalidInput(format!("{} curves for {} labels", curves.len(), pairing.len())));
        }
        check_pairing(&pairing)?;
        if curves.windows(2).any(|w| w[0].ambient != w[1].ambient) {
            return Err(Error::InvalidInput("curves live in different ambients".into()));
        }
        let g = NiceGenerator { k: pairing.len() / 2, pairing, curves };
        for (a, b) in g.edges() {
            if !are_disjoint(&g.curves[a], &g.curves[b]) {
                return Err(Error::NotDisjoint);
            }
        }
        Ok(g)
    }

    /// Pairing 2j ↔ 2j+1.
    pub fn standard(curves: Vec<OneChain>) -> Result<Self> {
        let pairing = (0..curves.len()).map(|h| h ^ 1).collect();
        Self::new(pairing, curves)
    }

    /// (h, σh) with h < σh, ordered by h.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.pairing.len()).filter(|&h| h < self.pairing[h]).map(|h| (h, self.pairing[h])).collect()
    }

    /// Errors unless every curve has class `gamma`.
    pub fn check_class(&self, gamma: &[Q; 3]) -> Result<()> {
        let bad: Vec<String> = (0..self.curves.len())
            .filter(|&h| homology_class(&self.curves[h]) != *gamma)
            .map(|h| format!("curve {h}"))
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("class differs from γ: {}", bad.join(", "))))
        }
    }

    /// Label h becomes `perm[h]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let n = self.curves.len();
        let mut curves = self.curves.clone();
        let mut pairing = vec![0; n];
        for h in 0..n {
            curves[perm[h]] = self.curves[h].clone();
            pairing[perm[h]] = perm[self.pairing[h]];
        }
        Self::new(pairing, curves)
    }

    /// Curves reordered so that the j-th edge is (2j, 2j+1).
    pub fn standardized(&self) -> Self {
        let curves = self.edges().into_iter().flat_map(|(a, b)| [self.curves[a].clone(), self.curves[b].clone()]).collect();
        NiceGenerator { k: self.k, pairing: (0..2 * self.k).map(|h| h ^ 1).collect(), curves }
    }

    pub fn to_chain(&self) -> Result<SecondChain<PlCell>> {
        nice_chain(self.k, &[(Q::from_integer(1.into()), self.standardized().curves)])
    }

    pub fn to_json(&self) -> GeneratorJson {
        GeneratorJson { pairing: self.pairing.clone(), curves: self.curves.iter().map(CurveJson::from_chain).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub pairing: Vec<usize>,
    pub curves: Vec<CurveJson>,
}

impl GeneratorJson {
    pub fn to_generator(&self) -> Result<NiceGenerator> {
        let curves = self.curves.iter().map(|c| c.to_chain()).collect::<Result<_>>()?;
        NiceGenerator::new(self.pairing.clone(), curves)
    }
}

pub fn generator_to_json(g: &NiceGenerator) -> Result<String> {
    Ok(serde_json::to_string_pretty(&g.to_json())?)
}

pub fn generator_from_json(s: &str) -> Result<NiceGenerator> {
    serde_json::from_str::<GeneratorJson>(s)?.to_generator()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rejects_bad_pairings_and_meeting_pairs() {
        let (a, b) = fixtures::hopf_pair();
        assert!(NiceGenerator::new(vec![0, 1], vec![a.clone(), b.clone()]).is_err());
        assert!(NiceGenerator::new(vec![1, 0], vec![a.clone(), a.clone()]).is_err());
        assert!(NiceGenerator::new(vec![1, 0], vec![a, b]).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let g = NiceGenerator::new(vec![2, 3, 0, 1], fixtures::hopf_blocks(2)).unwrap();
        assert_eq!(generator_from_json(&generator_to_json(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn standardized_pairs_consecutive_labels() {
        let c = fixtures::hopf_blocks(2);
        let g = NiceGenerator::new(vec![3, 2, 1, 0], c.clone()).unwrap().standardized();
        assert_eq!(g.curves, vec![c[0].clone(), c[3].clone(), c[1].clone(), c[2].clone()]);
    }
}
