//! Cells built from PL curves: point configurations (dimension 0) and
//! isotopies of configurations (dimension 1).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::cell::Cell;
use super::perm::HalfEdgePerm;
use crate::error::{Error, Result};
use crate::geometry::{are_disjoint, crossing_events, Isotopy, OneChain};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlCell {
    /// The product configuration h ↦ γ_h.
    Product(Vec<OneChain>),
    /// An isotopy of configurations, parametrized by [0,1].
    Sweep(Isotopy),
}

fn permute<T: Clone>(items: &[T], g: &HalfEdgePerm) -> Vec<T> {
    let mut out = items.to_vec();
    for (h, x) in items.iter().enumerate() {
        out[g.apply(h)] = x.clone();
    }
    out
}

fn without_pair<T: Clone>(items: &[T], e: usize) -> Vec<T> {
    items.iter().enumerate().filter(|(h, _)| h / 2 != e).map(|(_, x)| x.clone()).collect()
}

type EventKey = (Vec<Q>, Vec<OneChain>, Vec<OneChain>);
type EventCache = HashMap<EventKey, Vec<(Q, Q)>>;

/// (time, jump) of every event of one pair; keyed by the pair's own motion.
fn pair_events(iso: &Isotopy, e: usize) -> Result<Vec<(Q, Q)>> {
    static CACHE: OnceLock<Mutex<EventCache>> = OnceLock::new();
    let track = |h: usize| iso.frames().iter().map(|f| f[h].clone()).collect::<Vec<_>>();
    let (a, b) = (track(2 * e), track(2 * e + 1));
    let key = if a <= b { (iso.times().to_vec(), a, b) } else { (iso.times().to_vec(), b, a) };
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let events: Vec<(Q, Q)> =
        crossing_events(iso, (2 * e, 2 * e + 1))?.into_iter().map(|ev| (ev.t_star, ev.jump)).collect();
    cache.lock().unwrap().insert(key, events.clone());
    Ok(events)
}

impl PlCell {
    pub fn chains(&self) -> &[OneChain] {
        match self {
            PlCell::Product(c) => c,
            PlCell::Sweep(iso) => iso.start(),
        }
    }
}

impl Cell for PlCell {
    fn dim(&self) -> usize {
        match self {
            PlCell::Product(_) => 0,
            PlCell::Sweep(_) => 1,
        }
    }

    fn label_count(&self) -> usize {
        self.chains().len()
    }

    /// The orientation sign of the product of the factors cancels that of
    /// the torsor, so symmetries act without sign.
    fn relabel(&self, g: &HalfEdgePerm) -> (i32, Self) {
        let cell = match self {
            PlCell::Product(c) => PlCell::Product(permute(c, g)),
            PlCell::Sweep(iso) => PlCell::Sweep(iso.map_frames(|f| permute(f, g)).expect("relabeling keeps frames valid")),
        };
        (g.orientation_sign(), cell)
    }

    fn boundary(&self) -> Result<Vec<(Q, Self)>> {
        Ok(match self {
            PlCell::Product(_) => vec![],
            PlCell::Sweep(iso) => vec![
                (Q::from_integer(1.into()), PlCell::Product(iso.end().to_vec())),
                (Q::from_integer((-1).into()), PlCell::Product(iso.start().to_vec())),
            ],
        })
    }

    fn diagonal_restriction(&self, e: usize) -> Result<Vec<(Q, Self)>> {
        match self {
            PlCell::Product(c) => {
                if are_disjoint(&c[2 * e], &c[2 * e + 1]) {
                    Ok(vec![])
                } else {
                    Err(Error::NotDisjoint)
                }
            }
            PlCell::Sweep(iso) => {
                let mut out = Vec::new();
                for (t, jump) in pair_events(iso, e)? {
                    out.push((jump, PlCell::Product(without_pair(&iso.at(&t)?, e))));
                }
                Ok(out)
            }
        }
    }
}
