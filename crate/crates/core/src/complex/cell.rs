//! The abstract cell contract for chains on L^{H(k)}.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Debug;

use num_traits::Zero;

use super::perm::HalfEdgePerm;
use crate::error::Result;
use crate::rational::Q;

/// A parametrized cell whose labels are the half-edges 0..2k of H(k), with
/// edge `e` = {2e, 2e+1}.
///
/// Required identities (as signed formal sums):
/// ∂∂ = 0, δ_e∂ = −∂δ_e, and the two orders of restricting to two diagonals
/// differ by a sign, so that the summed δ squares to zero.
pub trait Cell: Clone + Ord + Debug {
    /// Number of free parameters.
    fn dim(&self) -> usize;

    /// 2k
    fn label_count(&self) -> usize;

    /// The relabeled cell `g_*(self)` and the sign of the pushforward.
    fn relabel(&self, g: &HalfEdgePerm) -> (i32, Self);

    fn boundary(&self) -> Result<Vec<(Q, Self)>>;

    /// Restriction to the diagonal of edge `e`; labels of the result are
    /// compacted to H(k−1).
    fn diagonal_restriction(&self, e: usize) -> Result<Vec<(Q, Self)>>;
}

/// A finite rational combination of cells.
pub type LinComb<C> = BTreeMap<C, Q>;

pub fn add_term<C: Ord>(v: &mut LinComb<C>, c: C, q: Q) {
    if q.is_zero() {
        return;
    }
    match v.entry(c) {
        Entry::Vacant(slot) => {
            slot.insert(q);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += q;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

pub fn add_into<C: Ord + Clone>(v: &mut LinComb<C>, w: &LinComb<C>, scale: &Q) {
    for (c, q) in w {
        add_term(v, c.clone(), q * scale);
    }
}

pub fn scaled<C: Ord + Clone>(v: &LinComb<C>, s: &Q) -> LinComb<C> {
    let mut out = LinComb::new();
    add_into(&mut out, v, s);
    out
}

/// g·v including the orientation-torsor sign of g.
pub fn act<C: Cell>(g: &HalfEdgePerm, v: &LinComb<C>) -> LinComb<C> {
    let or = g.orientation_sign();
    let mut out = LinComb::new();
    for (c, q) in v {
        let (s, gc) = c.relabel(g);
        add_term(&mut out, gc, q * Q::from_integer((or * s).into()));
    }
    out
}

/// Σ_{g ∈ G} g·v
pub fn norm<C: Cell>(group: &[HalfEdgePerm], v: &LinComb<C>) -> LinComb<C> {
    let mut out = LinComb::new();
    for g in group {
        for (c, q) in act(g, v) {
            add_term(&mut out, c, q);
        }
    }
    out
}

/// The averaging projection (1/|G|) Σ g·v.
pub fn average<C: Cell>(group: &[HalfEdgePerm], v: &LinComb<C>) -> LinComb<C> {
    let n = norm(group, v);
    scaled(&n, &Q::new(1.into(), group.len().into()))
}

pub fn boundary_comb<C: Cell>(v: &LinComb<C>) -> Result<LinComb<C>> {
    let mut out = LinComb::new();
    for (c, q) in v {
        for (s, f) in c.boundary()? {
            add_term(&mut out, f, q * s);
        }
    }
    Ok(out)
}

pub fn diagonal_comb<C: Cell>(v: &LinComb<C>, e: usize) -> Result<LinComb<C>> {
    let mut out = LinComb::new();
    for (c, q) in v {
        for (s, f) in c.diagonal_restriction(e)? {
            add_term(&mut out, f, q * s);
        }
    }
    Ok(out)
}
