//! Second-version chains indexed by (k; k₀ ≤ … ≤ k_l).
//!
//! An entry at an index is stored as an invariant vector of the symmetry
//! group Aut(H(k), σ, k₀…k_l): the class of a raw combination x is kept as
//! its orbit sum N(x). Cells at (k; k₀…k_l) in a degree-d chain have
//! dimension d + l.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::cell::{add_into, add_term, average, boundary_comb, diagonal_comb, norm, scaled, Cell, LinComb};
use super::perm::{aut_group, HalfEdgePerm};
use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SecondIndex {
    pub k: usize,
    /// k₀ ≤ … ≤ k_l ≤ k, never empty.
    pub sig: Vec<usize>,
}

impl SecondIndex {
    pub fn new(k: usize, sig: Vec<usize>) -> Result<Self> {
        if sig.is_empty() {
            return Err(Error::InvalidInput("empty signature".into()));
        }
        if sig.windows(2).any(|w| w[0] > w[1]) || sig.last().is_some_and(|&m| m > k) {
            return Err(Error::InvalidInput(format!("bad signature {sig:?} for k = {k}")));
        }
        Ok(SecondIndex { k, sig })
    }

    pub fn nice(k: usize) -> Self {
        SecondIndex { k, sig: vec![0] }
    }

    pub fn l(&self) -> usize {
        self.sig.len() - 1
    }

    pub fn group(&self) -> Arc<Vec<HalfEdgePerm>> {
        static CACHE: OnceLock<Mutex<HashMap<SecondIndex, Arc<Vec<HalfEdgePerm>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.lock().unwrap().get(self) {
            return g.clone();
        }
        let g = Arc::new(aut_group(self.k, &self.sig));
        cache.lock().unwrap().insert(self.clone(), g.clone());
        g
    }

    pub fn group_order(&self) -> usize {
        self.group().len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondChain<C: Cell> {
    pub degree: i32,
    pub entries: BTreeMap<SecondIndex, LinComb<C>>,
}

fn sign(i: usize) -> Q {
    Q::from_integer(if i.is_multiple_of(2) { 1.into() } else { (-1).into() })
}

impl<C: Cell> SecondChain<C> {
    pub fn zero(degree: i32) -> Self {
        SecondChain { degree, entries: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|v| v.is_empty())
    }

    pub fn get(&self, idx: &SecondIndex) -> Option<&LinComb<C>> {
        self.entries.get(idx)
    }

    /// Adds `scale · v` to the entry at `idx`. `v` must already be invariant.
    pub fn add_entry(&mut self, idx: SecondIndex, v: &LinComb<C>, scale: &Q) {
        let slot = self.entries.entry(idx.clone()).or_default();
        add_into(slot, v, scale);
        if slot.is_empty() {
            self.entries.remove(&idx);
        }
    }

    /// Stores the class of the raw combination `x` at `idx`.
    pub fn add_raw(&mut self, idx: SecondIndex, x: &LinComb<C>, scale: &Q) {
        let n = norm(&idx.group(), x);
        self.add_entry(idx, &n, scale);
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.combine(other, &Q::from_integer(1.into()))
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.combine(other, &Q::from_integer((-1).into()))
    }

    fn combine(&self, other: &Self, s: &Q) -> Result<Self> {
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::InvalidInput(format!("degrees {} and {} differ", self.degree, other.degree)));
        }
        let mut out = self.clone();
        if out.is_zero() {
            out.degree = other.degree;
        }
        for (idx, v) in &other.entries {
            out.add_entry(idx.clone(), v, s);
        }
        Ok(out)
    }

    pub fn scaled(&self, s: &Q) -> Self {
        let mut out = Self::zero(self.degree);
        for (idx, v) in &self.entries {
            out.add_entry(idx.clone(), &scaled(v, s), &Q::from_integer(1.into()));
        }
        out
    }

    /// Checks label counts, cell dimensions and invariance of every entry.
    pub fn validate(&self) -> Result<()> {
        for (idx, v) in &self.entries {
            SecondIndex::new(idx.k, idx.sig.clone())?;
            for c in v.keys() {
                if c.label_count() != 2 * idx.k {
                    return Err(Error::InvalidInput(format!("cell with {} labels at k = {}", c.label_count(), idx.k)));
                }
                if c.dim() as i64 != self.degree as i64 + idx.l() as i64 {
                    return Err(Error::InvalidInput(format!(
                        "cell of dimension {} at l = {} in a degree {} chain",
                        c.dim(),
                        idx.l(),
                        self.degree
                    )));
                }
            }
            if &average(&idx.group(), v) != v {
                return Err(Error::InvalidInput(format!("entry at {idx:?} is not symmetric")));
            }
        }
        Ok(())
    }

    /// Orbit-averages every entry. Idempotent.
    pub fn symmetrize(&self) -> Self {
        let mut out = Self::zero(self.degree);
        for (idx, v) in &self.entries {
            out.add_entry(idx.clone(), &average(&idx.group(), v), &Q::from_integer(1.into()));
        }
        out
    }

    /// Cellwise boundary.
    pub fn boundary(&self) -> Result<Self> {
        let mut out = Self::zero(self.degree - 1);
        for (idx, v) in &self.entries {
            out.add_entry(idx.clone(), &boundary_comb(v)?, &Q::from_integer(1.into()));
        }
        Ok(out)
    }

    /// Restriction to the diagonals of the edges outside E_l.
    pub fn delta(&self) -> Result<Self> {
        let mut out = Self::zero(self.degree - 1);
        for (idx, v) in &self.entries {
            let last = *idx.sig.last().unwrap();
            if idx.k == 0 || last >= idx.k {
                continue;
            }
            let mut w = LinComb::new();
            for e in last..idx.k {
                add_into(&mut w, &diagonal_comb(v, e)?, &Q::from_integer(1.into()));
            }
            let target = SecondIndex { k: idx.k - 1, sig: idx.sig.clone() };
            let n = norm(&target.group(), &w);
            out.add_entry(target, &n, &Q::new(1.into(), idx.group_order().into()));
        }
        Ok(out)
    }

    /// Alternating sum over the faces of one-longer filtrations.
    pub fn tilde(&self) -> Self {
        let mut out = Self::zero(self.degree - 1);
        let global = sign(self.degree.unsigned_abs() as usize);
        for (idx, v) in &self.entries {
            for pos in 0..=idx.sig.len() {
                let lo = if pos == 0 { 0 } else { idx.sig[pos - 1] };
                let hi = if pos == idx.sig.len() { idx.k } else { idx.sig[pos] };
                for val in lo..=hi {
                    // skip duplicates: the same target arises from the leftmost insertion slot only
                    if pos > 0 && val == idx.sig[pos - 1] {
                        continue;
                    }
                    let mut sig = idx.sig.clone();
                    sig.insert(pos, val);
                    let target = SecondIndex { k: idx.k, sig };
                    // every deletion i of target giving idx contributes (−1)^i
                    let mut coeff = Q::from_integer(0.into());
                    for i in 0..target.sig.len() {
                        let mut s = target.sig.clone();
                        s.remove(i);
                        if s == idx.sig {
                            coeff += sign(i);
                        }
                    }
                    out.add_entry(target, v, &(coeff * &global));
                }
            }
        }
        out
    }

    /// ∂̂ = ∂ − δ − ∂̃
    pub fn hat(&self) -> Result<Self> {
        let a = self.boundary()?;
        let b = self.delta()?;
        let c = self.tilde();
        a.minus(&b)?.minus(&c)
    }

    /// No entries with l > 0.
    pub fn is_nice(&self) -> bool {
        self.entries.keys().all(|idx| idx.l() == 0)
    }

    pub fn restrict_k(&self, k: usize) -> Self {
        let mut out = Self::zero(self.degree);
        for (idx, v) in &self.entries {
            if idx.k == k {
                out.entries.insert(idx.clone(), v.clone());
            }
        }
        out
    }
}

/// The class of a single raw cell at `idx`.
pub fn single<C: Cell>(degree: i32, idx: SecondIndex, cell: C, coeff: Q) -> SecondChain<C> {
    let mut x = LinComb::new();
    add_term(&mut x, cell, coeff);
    let mut out = SecondChain::zero(degree);
    out.add_raw(idx, &x, &Q::from_integer(1.into()));
    out
}
