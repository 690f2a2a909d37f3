//! Keyframed isotopies of labeled chains and detection of the times at which
//! two labeled chains pass through each other.

use num_traits::{One, Signed, Zero};

use super::curve::{Ambient, OneChain, PLLoop};
use super::linking::linking_number_prevalidated;
use super::point::{self, Point};
use super::predicates::{are_disjoint, chain_segments, min_dist_sq, segment_closest};
use crate::error::{Error, Result};
use crate::rational::{qf, Q};

/// Relates sign det(a′, b′, va − vb) to the linking jump.
const DET_CONVENTION: i32 = 1;

/// Bracket width below which a sign change is reported as an event.
pub fn bracket_width() -> Q {
    Q::new(1.into(), num_bigint::BigInt::from(1u64 << 30))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Isotopy {
    times: Vec<Q>,
    /// `frames[j][h]` is the chain of label `h` at `times[j]`.
    frames: Vec<Vec<OneChain>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrossingEvent {
    pub lo: Q,
    pub hi: Q,
    pub t_star: Q,
    pub labels: (usize, usize),
    /// Link(t⁺) − Link(t⁻).
    pub jump: Q,
    pub location: [f64; 3],
    /// Sign of det(a′, b′, va − vb) at the closest points when both lie inside segments.
    pub det_sign: Option<i32>,
}

impl CrossingEvent {
    pub fn sign(&self) -> i32 {
        crossing_sign(self)
    }
}

/// Sign of the linking jump across the event.
pub fn crossing_sign(e: &CrossingEvent) -> i32 {
    crate::rational::sign(&e.jump)
}

impl Isotopy {
    pub fn new(times: Vec<Q>, frames: Vec<Vec<OneChain>>) -> Result<Self> {
        let iso = Isotopy { times, frames };
        iso.validate()?;
        Ok(iso)
    }

    pub fn constant(frame: Vec<OneChain>) -> Result<Self> {
        Isotopy::new(vec![Q::zero(), Q::one()], vec![frame.clone(), frame])
    }

    /// Straight-line motion from `a` to `b`.
    pub fn straight(a: Vec<OneChain>, b: Vec<OneChain>) -> Result<Self> {
        Isotopy::new(vec![Q::zero(), Q::one()], vec![a, b])
    }

    /// Keyframes equally spaced in time.
    pub fn through(frames: Vec<Vec<OneChain>>) -> Result<Self> {
        let m = frames.len().saturating_sub(1).max(1) as i64;
        let times = (0..frames.len() as i64).map(|j| qf(j, m)).collect();
        Isotopy::new(times, frames)
    }

    pub fn times(&self) -> &[Q] {
        &self.times
    }

    pub fn frames(&self) -> &[Vec<OneChain>] {
        &self.frames
    }

    pub fn label_count(&self) -> usize {
        self.frames[0].len()
    }

    pub fn start(&self) -> &[OneChain] {
        &self.frames[0]
    }

    pub fn end(&self) -> &[OneChain] {
        self.frames.last().expect("at least two frames")
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidInput(format!("isotopy: {m}")));
        if self.times.len() < 2 || self.times.len() != self.frames.len() {
            return bad("need at least two times and one frame per time");
        }
        if !self.times[0].is_zero() || !self.times.last().expect("nonempty").is_one() {
            return bad("times must run from 0 to 1");
        }
        if self.times.windows(2).any(|w| w[0] >= w[1]) {
            return bad("times must be strictly increasing");
        }
        let first = &self.frames[0];
        for f in &self.frames {
            if f.len() != first.len() {
                return bad("frames carry different label counts");
            }
            for (c, c0) in f.iter().zip(first) {
                if c.ambient != c0.ambient {
                    return bad("frames live in different ambient spaces");
                }
                if c.terms.len() != c0.terms.len() {
                    return bad("frames differ in loop counts");
                }
                for ((q, l), (q0, l0)) in c.terms.iter().zip(&c0.terms) {
                    if q != q0 || l.len() != l0.len() || l.period() != l0.period() {
                        return bad("frames differ in coefficients, vertex counts or classes");
                    }
                }
            }
        }
        Ok(())
    }

    fn interval(&self, t: &Q) -> usize {
        let j = self.times.partition_point(|x| x <= t);
        j.clamp(1, self.times.len() - 1) - 1
    }

    /// The configuration at time `t ∈ [0,1]`, interpolated vertexwise.
    pub fn at(&self, t: &Q) -> Result<Vec<OneChain>> {
        let j = self.interval(t);
        let s = (t - &self.times[j]) / (&self.times[j + 1] - &self.times[j]);
        if s.is_zero() {
            return Ok(self.frames[j].clone());
        }
        if s.is_one() {
            return Ok(self.frames[j + 1].clone());
        }
        let (fa, fb) = (&self.frames[j], &self.frames[j + 1]);
        fa.iter()
            .zip(fb)
            .map(|(ca, cb)| {
                let terms = ca
                    .terms
                    .iter()
                    .zip(&cb.terms)
                    .map(|((q, la), (_, lb))| {
                        let pts = la
                            .lifted_points()
                            .iter()
                            .zip(aligned_lift(la, lb))
                            .map(|(p, r)| point::lerp(p, &r, &s))
                            .collect();
                        Ok((q.clone(), PLLoop::from_lift(la.ambient, pts, la.period())?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                OneChain::new(ca.ambient, terms)
            })
            .collect()
    }

    /// Per label, per loop, per vertex velocity on keyframe interval `j`.
    fn velocities(&self, j: usize) -> Vec<Vec<Vec<Point>>> {
        let dt = &self.times[j + 1] - &self.times[j];
        let inv = Q::one() / dt;
        self.frames[j]
            .iter()
            .zip(&self.frames[j + 1])
            .map(|(ca, cb)| {
                ca.terms
                    .iter()
                    .zip(&cb.terms)
                    .map(|((_, la), (_, lb))| {
                        la.lifted_points()
                            .iter()
                            .zip(aligned_lift(la, lb))
                            .map(|(p, r)| point::scale(&inv, &point::sub(&r, p)))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// Upper bound on the speed of any point of label `h` over keyframe intervals meeting [lo, hi].
    fn speed_bound(&self, h: usize, lo: &Q, hi: &Q) -> Q {
        let (a, b) = (self.interval(lo), self.interval(hi));
        let mut best = Q::zero();
        for j in a..=b {
            for lv in &self.velocities(j)[h] {
                for v in lv {
                    let s = point::norm_l1(v);
                    if s > best {
                        best = s;
                    }
                }
            }
        }
        best
    }

    pub fn reversed(&self) -> Isotopy {
        let times = self.times.iter().rev().map(|t| Q::one() - t).collect();
        let frames = self.frames.iter().rev().cloned().collect();
        Isotopy { times, frames }
    }

    /// Runs `self` on [0, ½] and `other` on [½, 1]; the end of `self` must equal the start of `other`.
    pub fn then(&self, other: &Isotopy) -> Result<Isotopy> {
        if self.end() != other.start() {
            return Err(Error::InvalidInput("isotopies do not concatenate".into()));
        }
        let half = qf(1, 2);
        let mut times: Vec<Q> = self.times.iter().map(|t| t * &half).collect();
        let mut frames = self.frames.clone();
        times.extend(other.times.iter().skip(1).map(|t| &half + t * &half));
        frames.extend(other.frames.iter().skip(1).cloned());
        Isotopy::new(times, frames)
    }

    /// Applies `f` to every frame.
    pub fn map_frames(&self, f: impl Fn(&[OneChain]) -> Vec<OneChain>) -> Result<Isotopy> {
        Isotopy::new(self.times.clone(), self.frames.iter().map(|fr| f(fr)).collect())
    }
}

/// In the torus, the lift of `b` shifted by the integer vector bringing its first point nearest to that of `a`.
fn aligned_lift(a: &PLLoop, b: &PLLoop) -> Vec<Point> {
    if a.ambient == Ambient::Euclidean {
        return b.lifted_points().to_vec();
    }
    let (pa, pb) = (&a.lifted_points()[0], &b.lifted_points()[0]);
    let shift: Point = [0, 1, 2].map(|i| Q::from_integer((&pa[i] - &pb[i]).round().to_integer()));
    b.lifted_points().iter().map(|p| point::add(p, &shift)).collect()
}

struct PairTracker<'a> {
    iso: &'a Isotopy,
    h0: usize,
    h1: usize,
}

impl PairTracker<'_> {
    fn link_at(&self, t: &Q) -> Result<Option<Q>> {
        let f = self.iso.at(t)?;
        if !are_disjoint(&f[self.h0], &f[self.h1]) {
            return Ok(None);
        }
        Ok(Some(linking_number_prevalidated(&f[self.h0], &f[self.h1])?))
    }

    fn separated(&self, lo: &Q, hi: &Q) -> Result<bool> {
        let mid = (lo + hi) / Q::from_integer(2.into());
        let f = self.iso.at(&mid)?;
        let d = min_dist_sq(&f[self.h0], &f[self.h1]);
        let v = self.iso.speed_bound(self.h0, lo, hi) + self.iso.speed_bound(self.h1, lo, hi);
        let reach = v * (hi - lo) / Q::from_integer(2.into());
        Ok(d > &reach * &reach)
    }

    /// A split point of (lo, hi) where the pair is disjoint.
    fn split(&self, lo: &Q, hi: &Q) -> Result<(Q, Q)> {
        for (n, d) in [(1, 2), (1, 3), (2, 3), (5, 11), (6, 11)] {
            let t = lo + (hi - lo) * qf(n, d);
            if let Some(l) = self.link_at(&t)? {
                return Ok((t, l));
            }
        }
        Err(Error::transversality(lo, hi))
    }

    fn event(&self, lo: Q, hi: Q, jump: Q) -> Result<CrossingEvent> {
        let t_star = (&lo + &hi) / Q::from_integer(2.into());
        let f = self.iso.at(&t_star)?;
        let vel = self.iso.velocities(self.iso.interval(&t_star));
        let sa = chain_segments(&f[self.h0]);
        let sb = chain_segments(&f[self.h1]);
        let mut best: Option<(Q, usize, usize, Q, Q)> = None;
        for (i, (_, x)) in sa.iter().enumerate() {
            for (j, (_, y)) in sb.iter().enumerate() {
                let (s, t, d) = segment_closest(x, y);
                if best.as_ref().is_none_or(|b| d < b.0) {
                    best = Some((d, i, j, s, t));
                }
            }
        }
        let (_, i, j, s, t) = best.expect("chains are nonempty");
        let (la, x) = &sa[i];
        let (lb, y) = &sb[j];
        let p = point::lerp(&x.0, &x.1, &s);
        let location = point::to_f64(&p);
        let inside = |u: &Q| u.is_positive() && *u < Q::one();
        let det_sign = if inside(&s) && inside(&t) {
            let va = segment_velocity(&vel[self.h0][*la], seg_index(&sa, i), &s);
            let vb = segment_velocity(&vel[self.h1][*lb], seg_index(&sb, j), &t);
            let d = point::det(&point::sub(&x.1, &x.0), &point::sub(&y.1, &y.0), &point::sub(&va, &vb));
            let coeff = &f[self.h0].terms[*la].0 * &f[self.h1].terms[*lb].0;
            let sd = crate::rational::sign(&d) * crate::rational::sign(&coeff);
            if sd == 0 {
                return Err(Error::Inconsistency(format!(
                    "zero crossing determinant with nonzero linking jump near t = {}",
                    crate::rational::format_q(&t_star)
                )));
            }
            if DET_CONVENTION * sd != crate::rational::sign(&jump) {
                return Err(Error::Inconsistency(format!(
                    "crossing determinant disagrees with the linking jump near t = {}",
                    crate::rational::format_q(&t_star)
                )));
            }
            Some(DET_CONVENTION * sd)
        } else {
            None
        };
        Ok(CrossingEvent { lo, hi, t_star, labels: (self.h0, self.h1), jump, location, det_sign })
    }
}

/// Position of segment `i` within its own loop.
fn seg_index(segs: &[(usize, super::curve::Segment)], i: usize) -> usize {
    let lp = segs[i].0;
    i - segs.iter().position(|(l, _)| *l == lp).expect("present")
}

fn segment_velocity(vs: &[Point], k: usize, s: &Q) -> Point {
    let n = vs.len();
    point::lerp(&vs[k], &vs[(k + 1) % n], s)
}

/// All times in (0,1) at which labels `h0` and `h1` meet, each bracketed by a
/// few intervals of width ≤ 2⁻³⁰.
pub fn crossing_events(iso: &Isotopy, pair: (usize, usize)) -> Result<Vec<CrossingEvent>> {
    let (h0, h1) = pair;
    let n = iso.label_count();
    if h0 >= n || h1 >= n || h0 == h1 {
        return Err(Error::InvalidInput(format!("labels {h0}, {h1} are not a pair of the isotopy")));
    }
    if iso.start()[h0].ambient != Ambient::Euclidean {
        return Err(Error::InvalidInput("crossing detection is implemented in R3 only".into()));
    }
    let tracker = PairTracker { iso, h0, h1 };
    let zero = Q::zero();
    let one = Q::one();
    let l0 = tracker.link_at(&zero)?.ok_or(Error::NotDisjoint)?;
    let l1 = tracker.link_at(&one)?.ok_or(Error::NotDisjoint)?;
    let width = bracket_width();
    let mut tiny: Vec<(Q, Q, Q)> = Vec::new();
    let mut stack = vec![(zero, one, l0, l1)];
    while let Some((lo, hi, llo, lhi)) = stack.pop() {
        if tracker.separated(&lo, &hi)? {
            if llo != lhi {
                return Err(Error::Inconsistency("linking changed across a separated interval".into()));
            }
            continue;
        }
        if &hi - &lo <= width {
            tiny.push((lo, hi, lhi - llo));
            continue;
        }
        let (mid, lmid) = tracker.split(&lo, &hi)?;
        // push the right half first so events come out in time order
        stack.push((mid.clone(), hi, lmid.clone(), lhi));
        stack.push((lo, mid, llo, lmid));
    }
    // Near an event the speed bound rarely separates the neighbouring tiny
    // intervals, so contiguous runs are merged. A run must carry exactly one
    // nonzero jump; otherwise the contact is tangential.
    let mut events = Vec::new();
    let mut i = 0;
    while i < tiny.len() {
        let mut j = i + 1;
        while j < tiny.len() && tiny[j].0 == tiny[j - 1].1 {
            j += 1;
        }
        let run = &tiny[i..j];
        let (lo, hi) = (run[0].0.clone(), run[j - i - 1].1.clone());
        let jumps: Vec<&Q> = run.iter().map(|r| &r.2).filter(|q| !q.is_zero()).collect();
        if jumps.len() != 1 {
            return Err(Error::transversality(&lo, &hi));
        }
        events.push(tracker.event(lo, hi, jumps[0].clone())?);
        i = j;
    }
    Ok(events)
}

/// Events for every σ-pair `(h, σh)` with `h < σh`, sorted by time.
pub fn all_crossing_events(iso: &Isotopy, sigma: &[usize]) -> Result<Vec<CrossingEvent>> {
    let mut out = Vec::new();
    for (h, &s) in sigma.iter().enumerate() {
        if h < s {
            out.extend(crossing_events(iso, (h, s))?);
        }
    }
    out.sort_by(|a, b| a.t_star.cmp(&b.t_star).then(a.labels.cmp(&b.labels)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::q;

    #[test]
    fn one_pass_has_one_event() {
        let iso = fixtures::hopf_pass_isotopy();
        let ev = crossing_events(&iso, (0, 1)).unwrap();
        assert_eq!(ev.len(), 1);
        let f0 = iso.start();
        let f1 = iso.end();
        let jump = crate::geometry::linking_number(&f1[0], &f1[1]).unwrap()
            - crate::geometry::linking_number(&f0[0], &f0[1]).unwrap();
        assert_eq!(ev[0].jump, jump);
        assert!(&ev[0].hi - &ev[0].lo <= bracket_width() * Q::from_integer(8.into()));
        assert_eq!(ev[0].det_sign, Some(ev[0].sign()));
    }

    #[test]
    fn constant_isotopy_has_none() {
        let (a, b) = fixtures::hopf_pair();
        let iso = Isotopy::constant(vec![a, b]).unwrap();
        assert!(crossing_events(&iso, (0, 1)).unwrap().is_empty());
    }

    #[test]
    fn push_and_return_cancels() {
        let there = fixtures::hopf_pass_isotopy();
        let iso = there.then(&there.reversed()).unwrap();
        let ev = crossing_events(&iso, (0, 1)).unwrap();
        assert_eq!(ev.len(), 2);
        assert_eq!(&ev[0].jump + &ev[1].jump, q(0));
        assert!(ev[0].t_star < ev[1].t_star);
    }

    #[test]
    fn strand_moving_up_through_strand() {
        let iso = fixtures::strand_crossing_isotopy();
        let ev = crossing_events(&iso, (0, 1)).unwrap();
        assert_eq!(ev.len(), 1);
        assert_eq!(ev[0].sign(), 1);
        let rev = crossing_events(&iso.reversed(), (0, 1)).unwrap();
        assert_eq!(rev[0].sign(), -1);
        let flipped = iso.map_frames(|f| vec![f[0].reversed(), f[1].clone()]).unwrap();
        assert_eq!(crossing_events(&flipped, (0, 1)).unwrap()[0].sign(), -1);
    }

    #[test]
    fn tangency_is_rejected() {
        let iso = fixtures::tangent_isotopy();
        assert!(matches!(crossing_events(&iso, (0, 1)), Err(Error::TransversalityFailure { .. })));
    }
}
