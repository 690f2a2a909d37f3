//! Moving a PL 0-cycle to a nice representative of its homology class by
//! adding the total differential of a 1-chain, one edge count at a time
//! from the top down.

use super::cell::{add_term, average, norm, Cell, LinComb};
use super::chain::{SecondChain, SecondIndex};
use super::pl::PlCell;
use crate::error::{Error, Result};
use crate::geometry::{are_disjoint, perturb_off_diagonal, OneChain};
use crate::rational::Q;

/// Largest edge count handled.
pub const K_MAX: usize = 3;

/// σ on H(k): 2j ↔ 2j+1.
pub fn pairing(k: usize) -> Vec<usize> {
    (0..2 * k).map(|h| h ^ 1).collect()
}

/// The nice chain of degree `degree` holding the orbit sum of `raw` (under
/// the full symmetry group of H(k)) in every slot k₀ = 0..=k.
pub fn nice_from_raw(k: usize, degree: i32, raw: &LinComb<PlCell>) -> SecondChain<PlCell> {
    let v = norm(&SecondIndex::nice(k).group(), raw);
    let mut out = SecondChain::zero(degree);
    for k0 in 0..=k {
        out.add_entry(SecondIndex { k, sig: vec![k0] }, &v, &Q::from_integer(1.into()));
    }
    out
}

/// The nice 0-chain of Σ q·∏γ_h.
pub fn nice_chain(k: usize, terms: &[(Q, Vec<OneChain>)]) -> Result<SecondChain<PlCell>> {
    let mut raw = LinComb::new();
    for (q, chains) in terms {
        if chains.len() != 2 * k {
            return Err(Error::InvalidInput(format!("{} curves for k = {k}", chains.len())));
        }
        add_term(&mut raw, PlCell::Product(chains.clone()), q.clone());
    }
    Ok(nice_from_raw(k, 0, &raw))
}

fn pairs_disjoint(chains: &[OneChain]) -> bool {
    (0..chains.len() / 2).all(|e| are_disjoint(&chains[2 * e], &chains[2 * e + 1]))
}

#[derive(Clone, Debug)]
pub struct Nicified {
    pub b: SecondChain<PlCell>,
    pub z_nice: SecondChain<PlCell>,
}

/// Requires a degree-0 cycle with entries at l ≤ 1 and k ≤ [`K_MAX`].
pub fn nicify(z: &SecondChain<PlCell>, epsilon: &Q) -> Result<Nicified> {
    if z.degree != 0 && !z.is_zero() {
        return Err(Error::InvalidInput("nicify takes a 0-chain".into()));
    }
    if let Some(idx) = z.entries.keys().find(|i| i.k > K_MAX || i.l() > 1) {
        return Err(Error::InvalidInput(format!("entry at {idx:?} is outside k ≤ {K_MAX}, l ≤ 1")));
    }
    if !z.hat()?.is_zero() {
        return Err(Error::NonCycle("∂̂z ≠ 0".into()));
    }
    let mut z = z.clone();
    let mut b_total = SecondChain::zero(1);
    let top = z.entries.keys().map(|i| i.k).max().unwrap_or(0);
    for kb in (1..=top).rev() {
        let top_idx = SecondIndex { k: kb, sig: vec![kb] };
        let group = top_idx.group();
        let mut moved = LinComb::new();
        let mut sweeps = LinComb::new();
        for (cell, q) in z.get(&top_idx).cloned().unwrap_or_default() {
            let PlCell::Product(chains) = &cell else {
                return Err(Error::Inconsistency("a 0-cycle holds configurations at l = 0".into()));
            };
            if pairs_disjoint(chains) {
                add_term(&mut moved, cell.clone(), q);
                continue;
            }
            let p = perturb_off_diagonal(chains, &pairing(kb), epsilon)?;
            add_term(&mut moved, PlCell::Product(p.chains), q.clone());
            add_term(&mut sweeps, PlCell::Sweep(p.isotopy), q);
        }
        let s = average(&group, &sweeps);
        let mut b = SecondChain::zero(1);
        for k0 in 0..=kb {
            let idx = SecondIndex { k: kb, sig: vec![k0] };
            if let Some(v) = z.get(&SecondIndex { k: kb, sig: vec![k0, kb] }) {
                b.add_entry(idx.clone(), v, &Q::from_integer(1.into()));
            }
            b.add_entry(idx, &s, &Q::from_integer(1.into()));
        }
        debug_assert!(b.entries.values().flat_map(|v| v.keys()).all(|c| c.dim() == 1));
        z = z.plus(&b.hat()?)?;
        b_total = b_total.plus(&b)?;
        if z.entries.keys().any(|i| i.k == kb && i.l() > 0) {
            return Err(Error::Inconsistency(format!("l > 0 entries remain at k = {kb}")));
        }
    }
    if !z.is_nice() {
        return Err(Error::Inconsistency("l > 0 entries remain at k = 0".into()));
    }
    Ok(Nicified { b: b_total, z_nice: z })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::qf;

    #[test]
    fn nice_input_needs_no_correction() {
        let z = nice_chain(2, &[(qf(1, 1), fixtures::hopf_blocks(2))]).unwrap();
        let out = nicify(&z, &qf(1, 100)).unwrap();
        assert!(out.b.is_zero());
        assert_eq!(out.z_nice, z);
    }

    #[test]
    fn witness_is_undone() {
        for seed in 0..2 {
            let (nice, z) = fixtures::witness_cycle(seed, 1).unwrap();
            assert!(!z.is_nice());
            let out = nicify(&z, &qf(1, 100)).unwrap();
            assert!(out.z_nice.is_nice());
            assert!(out.z_nice.hat().unwrap().is_zero());
            assert_eq!(z.plus(&out.b.hat().unwrap()).unwrap(), out.z_nice);
            assert!(!nice.is_zero());
        }
    }

    #[test]
    fn rejects_non_cycles() {
        let mut z = nice_chain(1, &[(qf(1, 1), fixtures::hopf_blocks(1))]).unwrap();
        z.entries.remove(&SecondIndex { k: 1, sig: vec![0] });
        assert!(matches!(nicify(&z, &qf(1, 100)), Err(Error::NonCycle(_))));
    }
}
