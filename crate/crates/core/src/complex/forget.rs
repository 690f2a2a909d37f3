//! Forgetful compatibility of PL chains in a class γ: on every entry with
//! k₀ > 0, the curves carried by the half-edges of E₀ move in loop families
//! of class γ, independently of the rest of the configuration.

use std::collections::BTreeMap;

use super::chain::{SecondChain, SecondIndex};
use super::pl::PlCell;
use crate::error::{Error, Result};
use crate::geometry::{homology_class, OneChain};
use crate::rational::Q;

/// The loops f_h(x, ·) of one forgotten half-edge, sampled at the cell's keyframes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorFamily {
    pub half_edge: usize,
    /// Vertex the half-edge is attached to, when the chain came from a graph.
    pub vertex: Option<usize>,
    pub loops: Vec<OneChain>,
}

/// One term ρ_a φ_a of an entry together with its factor families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForgetfulFactorization {
    pub weight: Q,
    pub cell: PlCell,
    pub families: Vec<FactorFamily>,
}

pub type ForgetfulMetadata = BTreeMap<SecondIndex, Vec<ForgetfulFactorization>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForgetfulReport {
    pub passed: bool,
    /// (index, half-edge) pairs whose family has the wrong class or shape.
    pub offending: Vec<(SecondIndex, usize)>,
    /// Entries whose terms do not add up to the stored value.
    pub mismatched_entries: Vec<SecondIndex>,
    /// Families of half-edges on a common vertex coincide.
    pub depends_only_on_vertex: bool,
}

/// The track of half-edge `h` through the cell's keyframes.
pub fn track(cell: &PlCell, h: usize) -> Vec<OneChain> {
    match cell {
        PlCell::Product(c) => vec![c[h].clone()],
        PlCell::Sweep(iso) => iso.frames().iter().map(|f| f[h].clone()).collect(),
    }
}

/// Metadata read off the cells themselves, one term per cell.
pub fn factorize(c: &SecondChain<PlCell>) -> ForgetfulMetadata {
    let mut out = ForgetfulMetadata::new();
    for (idx, v) in &c.entries {
        if idx.sig[0] == 0 {
            continue;
        }
        let terms = v
            .iter()
            .map(|(cell, q)| ForgetfulFactorization {
                weight: q.clone(),
                cell: cell.clone(),
                families: (0..2 * idx.sig[0])
                    .map(|h| FactorFamily { half_edge: h, vertex: None, loops: track(cell, h) })
                    .collect(),
            })
            .collect();
        out.insert(idx.clone(), terms);
    }
    out
}

pub fn check_forgetful(c: &SecondChain<PlCell>, meta: &ForgetfulMetadata, gamma: &[Q; 3]) -> Result<ForgetfulReport> {
    let mut offending = Vec::new();
    let mut mismatched_entries = Vec::new();
    let mut depends_only_on_vertex = true;
    for (idx, v) in &c.entries {
        let k0 = idx.sig[0];
        if k0 == 0 {
            continue;
        }
        let terms = meta.get(idx).ok_or_else(|| Error::MissingMetadata(format!("{idx:?}")))?;
        let mut sum = BTreeMap::new();
        for t in terms {
            super::cell::add_term(&mut sum, t.cell.clone(), t.weight.clone());
            for h in 0..2 * k0 {
                let ok = t.families.iter().find(|f| f.half_edge == h).is_some_and(|f| {
                    f.loops == track(&t.cell, h) && f.loops.iter().all(|l| homology_class(l) == *gamma)
                });
                if !ok && !offending.contains(&(idx.clone(), h)) {
                    offending.push((idx.clone(), h));
                }
            }
            let mut by_vertex: BTreeMap<usize, &Vec<OneChain>> = BTreeMap::new();
            for f in &t.families {
                match f.vertex {
                    None => depends_only_on_vertex = false,
                    Some(p) => {
                        if by_vertex.get(&p).is_some_and(|l| **l != f.loops) {
                            depends_only_on_vertex = false;
                        }
                        by_vertex.entry(p).or_insert(&f.loops);
                    }
                }
            }
        }
        if &sum != v {
            mismatched_entries.push(idx.clone());
        }
    }
    Ok(ForgetfulReport {
        passed: offending.is_empty() && mismatched_entries.is_empty(),
        offending,
        mismatched_entries,
        depends_only_on_vertex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::cell::LinComb;
    use crate::fixtures;

    fn winding_chain(windings: [i64; 4]) -> SecondChain<PlCell> {
        let chains: Vec<OneChain> = windings.iter().map(|&w| fixtures::torus_winding_loop(if w == 0 { [0, 1, 0] } else { [w, 0, 0] })).collect();
        let mut c = SecondChain::zero(0);
        c.add_entry(
            SecondIndex::new(2, vec![1]).unwrap(),
            &LinComb::from([(PlCell::Product(chains), Q::from_integer(1.into()))]),
            &Q::from_integer(1.into()),
        );
        c
    }

    fn class(w: i64) -> [Q; 3] {
        homology_class(&fixtures::torus_winding_loop([w, 0, 0]))
    }

    #[test]
    fn constructed_product_passes() {
        let c = winding_chain([1, 1, 0, 0]);
        let r = check_forgetful(&c, &factorize(&c), &class(1)).unwrap();
        assert!(r.passed);
        assert!(!r.depends_only_on_vertex);
    }

    #[test]
    fn wrong_winding_is_reported() {
        let c = winding_chain([1, 2, 0, 0]);
        let r = check_forgetful(&c, &factorize(&c), &class(1)).unwrap();
        assert!(!r.passed);
        assert_eq!(r.offending, vec![(SecondIndex::new(2, vec![1]).unwrap(), 1)]);
    }

    #[test]
    fn missing_metadata_is_an_error() {
        let c = winding_chain([1, 1, 0, 0]);
        assert!(matches!(check_forgetful(&c, &ForgetfulMetadata::new(), &class(1)), Err(Error::MissingMetadata(_))));
    }

    #[test]
    fn shared_vertex_flag() {
        let c = winding_chain([1, 1, 0, 0]);
        let mut meta = factorize(&c);
        for t in meta.values_mut().flatten() {
            for f in &mut t.families {
                f.vertex = Some(0);
            }
        }
        assert!(check_forgetful(&c, &meta, &class(1)).unwrap().depends_only_on_vertex);
    }
}
