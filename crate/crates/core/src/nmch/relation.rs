//! Relations generated by isotopies, and the check that MultiLink kills them.

use serde::Serialize;

use super::generator::check_pairing;
use super::multilink::multilink_of;
use crate::error::{Error, Result};
use crate::geometry::isotopy::all_crossing_events;
use crate::geometry::{Isotopy, OneChain};
use crate::rational::{format_q, Q};

/// One configuration of a relation, with its own pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnulTerm {
    pub coeff: Q,
    pub curves: Vec<OneChain>,
    pub pairing: Vec<usize>,
    /// Crossing time and crossed pair for correction terms.
    pub crossing: Option<(Q, (usize, usize))>,
}

/// {γ(1)} − {γ(0)} − Σ_crossings jump · {γ(t*) without the crossed pair}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnulElement {
    pub terms: Vec<HnulTerm>,
}

impl HnulElement {
    pub fn multilink(&self) -> Result<Q> {
        let mut out = Q::from_integer(0.into());
        for t in &self.terms {
            out += &t.coeff * multilink_of(&t.curves, &t.pairing)?;
        }
        Ok(out)
    }
}

/// Removes labels `a`, `b` and renumbers the rest in order.
fn remove_pair(curves: &[OneChain], pairing: &[usize], a: usize, b: usize) -> (Vec<OneChain>, Vec<usize>) {
    let keep: Vec<usize> = (0..curves.len()).filter(|&h| h != a && h != b).collect();
    let mut new_of = vec![usize::MAX; curves.len()];
    for (i, &h) in keep.iter().enumerate() {
        new_of[h] = i;
    }
    (keep.iter().map(|&h| curves[h].clone()).collect(), keep.iter().map(|&h| new_of[pairing[h]]).collect())
}

pub fn hnul_element(iso: &Isotopy, pairing: &[usize]) -> Result<HnulElement> {
    check_pairing(pairing)?;
    if pairing.len() != iso.label_count() {
        return Err(Error::InvalidInput("pairing and isotopy disagree on the label count".into()));
    }
    let one = Q::from_integer(1.into());
    let mut terms = vec![
        HnulTerm { coeff: one.clone(), curves: iso.end().to_vec(), pairing: pairing.to_vec(), crossing: None },
        HnulTerm { coeff: -one, curves: iso.start().to_vec(), pairing: pairing.to_vec(), crossing: None },
    ];
    for ev in all_crossing_events(iso, pairing)? {
        let (a, b) = ev.labels;
        let (curves, p) = remove_pair(&iso.at(&ev.t_star)?, pairing, a, b);
        terms.push(HnulTerm { coeff: -ev.jump.clone(), curves, pairing: p, crossing: Some((ev.t_star, (a, b))) });
    }
    Ok(HnulElement { terms })
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossingTerm {
    pub t_star: String,
    pub pair: (usize, usize),
    pub jump: String,
    pub multilink_removed: String,
    pub contribution: String,
}

/// MultiLink(γ(1)) − MultiLink(γ(0)) against Σ jump × MultiLink(pair removed).
#[derive(Clone, Debug, Serialize)]
pub struct ChainMapReport {
    pub multilink_start: String,
    pub multilink_end: String,
    pub lhs: String,
    pub rhs: String,
    pub terms: Vec<CrossingTerm>,
    pub passed: bool,
}

pub fn verify_chain_map(iso: &Isotopy, pairing: &[usize]) -> Result<ChainMapReport> {
    let rel = hnul_element(iso, pairing)?;
    let start = multilink_of(&rel.terms[1].curves, pairing)?;
    let end = multilink_of(&rel.terms[0].curves, pairing)?;
    let lhs = &end - &start;
    let mut rhs = Q::from_integer(0.into());
    let mut terms = Vec::new();
    for t in &rel.terms[2..] {
        let (time, pair) = t.crossing.clone().expect("correction terms carry their crossing");
        let jump = -t.coeff.clone();
        let removed = multilink_of(&t.curves, &t.pairing)?;
        let contribution = &jump * &removed;
        rhs += &contribution;
        terms.push(CrossingTerm {
            t_star: format_q(&time),
            pair,
            jump: format_q(&jump),
            multilink_removed: format_q(&removed),
            contribution: format_q(&contribution),
        });
    }
    Ok(ChainMapReport {
        multilink_start: format_q(&start),
        multilink_end: format_q(&end),
        passed: lhs == rhs,
        lhs: format_q(&lhs),
        rhs: format_q(&rhs),
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{nice_from_raw, PlCell};
    use crate::fixtures;
    use crate::nmch::multilink_chain;
    use crate::rational::qf;

    #[test]
    fn one_pass() {
        let iso = fixtures::hopf_pass_isotopy();
        let rel = hnul_element(&iso, &[1, 0]).unwrap();
        assert_eq!(rel.terms.len(), 3);
        assert!(rel.terms[2].curves.is_empty());
        assert_eq!(rel.multilink().unwrap(), qf(0, 1));
        let r = verify_chain_map(&iso, &[1, 0]).unwrap();
        assert!(r.passed);
        assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("1", "1"));
    }

    #[test]
    fn pass_and_return() {
        let iso = fixtures::hopf_pass_isotopy();
        let both = iso.then(&iso.reversed()).unwrap();
        let r = verify_chain_map(&both, &[1, 0]).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, "0");
        assert_eq!(r.terms.iter().map(|t| t.jump.clone()).collect::<Vec<_>>(), vec!["1", "-1"]);
    }

    #[test]
    fn crossing_free_isotopy_gives_two_terms() {
        let iso = Isotopy::constant(fixtures::hopf_blocks(1)).unwrap();
        let rel = hnul_element(&iso, &[1, 0]).unwrap();
        assert_eq!(rel.terms.len(), 2);
        assert!(verify_chain_map(&iso, &[1, 0]).unwrap().passed);
    }

    #[test]
    fn agrees_with_the_chain_level_differential() {
        let mut frames = fixtures::hopf_blocks(1);
        let iso = fixtures::hopf_pass_isotopy();
        frames.extend(iso.start().iter().map(|c| c.translated(&crate::geometry::point::point(0, 30, 0))));
        let mut end = fixtures::hopf_blocks(1);
        end.extend(iso.end().iter().map(|c| c.translated(&crate::geometry::point::point(0, 30, 0))));
        let two = Isotopy::straight(frames, end).unwrap();
        let b = nice_from_raw(2, 1, &[(PlCell::Sweep(two.clone()), qf(1, 1))].into());
        let h = b.hat().unwrap();
        assert!(h.is_nice());
        assert_eq!(multilink_chain(&h).unwrap(), qf(0, 1));
        assert!(verify_chain_map(&two, &[1, 0, 3, 2]).unwrap().passed);
    }
}
