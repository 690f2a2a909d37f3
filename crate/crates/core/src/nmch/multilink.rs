//! The product over edges of pairwise linking numbers, on generators, on
//! nice 0-chains and along isotopies.

use num_traits::One;

use super::generator::{check_pairing, NiceGenerator};
use super::point_chain::PointChain;
use crate::complex::{PlCell, SecondChain};
use crate::error::{Error, Result};
use crate::geometry::isotopy::all_crossing_events;
use crate::geometry::{linking_number, Isotopy, OneChain};
use crate::rational::Q;

/// Π over pairs (h, σh) of Link(γ_h, γ_σh) for an arbitrary pairing.
pub fn multilink_of(curves: &[OneChain], pairing: &[usize]) -> Result<Q> {
    let mut out = Q::one();
    for h in 0..pairing.len() {
        if h < pairing[h] {
            out *= linking_number(&curves[h], &curves[pairing[h]])?;
        }
    }
    Ok(out)
}

pub fn multilink(g: &NiceGenerator) -> Result<Q> {
    multilink_of(&g.curves, &g.pairing)
}

/// MultiLink of a nice 0-chain: each stored entry at (k; 0) is an orbit sum,
/// so its value is divided by the orbit group order.
pub fn multilink_chain(z: &SecondChain<PlCell>) -> Result<Q> {
    if !z.is_nice() {
        return Err(Error::InvalidInput("MultiLink is defined on nice chains".into()));
    }
    let mut total = Q::from_integer(0.into());
    for (idx, v) in &z.entries {
        if idx.sig[0] != 0 {
            continue;
        }
        let pairing: Vec<usize> = (0..2 * idx.k).map(|h| h ^ 1).collect();
        let mut entry = Q::from_integer(0.into());
        for (cell, q) in v {
            let PlCell::Product(chains) = cell else {
                return Err(Error::InvalidInput("a nice 0-chain holds configurations".into()));
            };
            entry += q * multilink_of(chains, &pairing)?;
        }
        total += entry / Q::from_integer(idx.group_order().into());
    }
    Ok(total)
}

/// The track t ↦ Π Link(γ_h(t), γ_σh(t)); breakpoints at the crossing times.
pub fn multilink_track(iso: &Isotopy, pairing: &[usize]) -> Result<PointChain> {
    check_pairing(pairing)?;
    if pairing.len() != iso.label_count() {
        return Err(Error::InvalidInput("pairing and isotopy disagree on the label count".into()));
    }
    let events = all_crossing_events(iso, pairing)?;
    for w in events.windows(2) {
        if w[0].hi >= w[1].lo {
            return Err(Error::transversality(&w[1].lo, &w[0].hi));
        }
    }
    let mut values = vec![multilink_of(iso.start(), pairing)?];
    for (i, _) in events.iter().enumerate().skip(1) {
        let t = (&events[i - 1].hi + &events[i].lo) / Q::from_integer(2.into());
        values.push(multilink_of(&iso.at(&t)?, pairing)?);
    }
    if !events.is_empty() {
        values.push(multilink_of(iso.end(), pairing)?);
    }
    PointChain::track(events.iter().map(|e| e.t_star.clone()).collect(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::perm::aut_group;
    use crate::fixtures;
    use crate::rational::qf;

    #[test]
    fn hopf_pair_has_multilink_one() {
        let (a, b) = fixtures::hopf_pair();
        assert_eq!(multilink(&NiceGenerator::standard(vec![a, b]).unwrap()).unwrap(), qf(1, 1));
    }

    #[test]
    fn product_of_links() {
        let (a, b) = fixtures::doubled_clasp_pair();
        let mut curves = fixtures::hopf_blocks(1);
        let shift = crate::geometry::point::point(0, 40, 0);
        curves.extend([a.translated(&shift), b.translated(&shift)]);
        assert_eq!(multilink(&NiceGenerator::standard(curves).unwrap()).unwrap(), qf(2, 1));
    }

    #[test]
    fn split_pair_annihilates() {
        let (a, b) = fixtures::split_pair();
        let mut curves = fixtures::hopf_blocks(1);
        let shift = crate::geometry::point::point(0, 40, 0);
        curves.extend([a.translated(&shift), b.translated(&shift)]);
        assert_eq!(multilink(&NiceGenerator::standard(curves).unwrap()).unwrap(), qf(0, 1));
    }

    #[test]
    fn nonzero_class_is_rejected() {
        let g = NiceGenerator::standard(vec![
            fixtures::torus_winding_loop([1, 0, 0]),
            fixtures::torus_winding_loop([0, 1, 0]).translated(&[qf(0, 1), qf(0, 1), qf(1, 3)]),
        ])
        .unwrap();
        assert!(matches!(multilink(&g), Err(Error::NotNullHomologous(_))));
    }

    #[test]
    fn invariant_under_every_symmetry() {
        for k in 1..=3 {
            let g = NiceGenerator::standard(fixtures::hopf_blocks(k)).unwrap();
            let v = multilink(&g).unwrap();
            for p in aut_group(k, &[0]) {
                assert_eq!(multilink(&g.relabeled(&p.0).unwrap()).unwrap(), v);
            }
        }
    }

    #[test]
    fn chain_value_matches_generator() {
        let g = NiceGenerator::standard(fixtures::hopf_blocks(2)).unwrap();
        assert_eq!(multilink_chain(&g.to_chain().unwrap()).unwrap(), qf(1, 1));
    }

    #[test]
    fn tracks() {
        let c = PointChain::track(vec![], vec![qf(1, 1)]).unwrap();
        let constant = Isotopy::constant(fixtures::hopf_blocks(1)).unwrap();
        assert_eq!(multilink_track(&constant, &[1, 0]).unwrap(), c);
        let t = multilink_track(&fixtures::hopf_pass_isotopy(), &[1, 0]).unwrap();
        assert_eq!(t.jumps(), vec![qf(1, 1)]);
        assert_eq!(t.endpoint_difference(), qf(1, 1));
    }
}
