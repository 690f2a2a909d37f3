//! Exact distance and disjointness predicates on rational segments and chains.

use num_traits::{One, Signed, Zero};

use super::curve::{bbox, Ambient, OneChain, Segment};
use super::point::{self, Point};
use crate::rational::Q;

fn clamp01(t: Q) -> Q {
    if t.is_negative() {
        Q::zero()
    } else if t > Q::one() {
        Q::one()
    } else {
        t
    }
}

pub fn point_segment_dist_sq(p: &Point, s: &Segment) -> Q {
    let d = point::sub(&s.1, &s.0);
    let len = point::norm_sq(&d);
    let t = clamp01(point::dot(&point::sub(p, &s.0), &d) / len);
    point::norm_sq(&point::sub(p, &point::lerp(&s.0, &s.1, &t)))
}

/// Closest parameters (s, t) and the squared distance between two segments.
pub fn segment_closest(a: &Segment, b: &Segment) -> (Q, Q, Q) {
    let da = point::sub(&a.1, &a.0);
    let db = point::sub(&b.1, &b.0);
    let r = point::sub(&a.0, &b.0);
    let (aa, bb, ab) = (point::norm_sq(&da), point::norm_sq(&db), point::dot(&da, &db));
    let (ar, br) = (point::dot(&da, &r), point::dot(&db, &r));
    let denom = &aa * &bb - &ab * &ab;
    let dist = |s: &Q, t: &Q| point::norm_sq(&point::sub(&point::lerp(&a.0, &a.1, s), &point::lerp(&b.0, &b.1, t)));
    let mut best: Option<(Q, Q, Q)> = None;
    let mut consider = |s: Q, t: Q| {
        let d = dist(&s, &t);
        if best.as_ref().is_none_or(|(_, _, bd)| d < *bd) {
            best = Some((s, t, d));
        }
    };
    if !denom.is_zero() {
        // interior stationary point of |a(s) − b(t)|²
        let s = (&ab * &br - &bb * &ar) / &denom;
        let t = (&aa * &br - &ab * &ar) / &denom;
        if !s.is_negative() && s <= Q::one() && !t.is_negative() && t <= Q::one() {
            consider(s, t);
        }
    }
    for s in [Q::zero(), Q::one()] {
        let p = point::lerp(&a.0, &a.1, &s);
        let t = clamp01(point::dot(&point::sub(&p, &b.0), &db) / &bb);
        consider(s, t);
    }
    for t in [Q::zero(), Q::one()] {
        let p = point::lerp(&b.0, &b.1, &t);
        let s = clamp01(point::dot(&point::sub(&p, &a.0), &da) / &aa);
        consider(s, t);
    }
    best.expect("at least one candidate")
}

pub fn segment_dist_sq(a: &Segment, b: &Segment) -> Q {
    segment_closest(a, b).2
}

/// Integer translations n for which box `a` and box `b + n` overlap (closed boxes).
pub(crate) fn overlapping_translates(a: &(Point, Point), b: &(Point, Point)) -> Vec<Point> {
    let range = |i: usize| -> (i64, i64) {
        let lo = (&a.0[i] - &b.1[i]).ceil().to_integer();
        let hi = (&a.1[i] - &b.0[i]).floor().to_integer();
        (i64::try_from(lo).expect("small"), i64::try_from(hi).expect("small"))
    };
    let (rx, ry, rz) = (range(0), range(1), range(2));
    let mut out = Vec::new();
    for x in rx.0..=rx.1 {
        for y in ry.0..=ry.1 {
            for z in rz.0..=rz.1 {
                out.push(point::point(x, y, z));
            }
        }
    }
    out
}

/// A segment of a chain together with the index of its loop.
pub(crate) fn chain_segments(c: &OneChain) -> Vec<(usize, Segment)> {
    c.terms.iter().enumerate().flat_map(|(i, (_, l))| l.segments().into_iter().map(move |s| (i, s))).collect()
}

/// Translates of `b` (torus) or just `b` (ℝ³) to compare against a segment of `a`.
fn relevant_shifts(ambient: Ambient, sa: &Segment, sb: &Segment) -> Vec<Point> {
    match ambient {
        Ambient::Euclidean => vec![point::origin()],
        Ambient::Torus => overlapping_translates(&bbox([&sa.0, &sa.1]), &bbox([&sb.0, &sb.1])),
    }
}

/// Lower bound for the squared distance between supports. Exact in ℝ³; in the
/// torus the result is capped at 1 and exact below that. Empty chains give 1.
pub fn min_dist_sq(a: &OneChain, b: &OneChain) -> Q {
    let sa = chain_segments(a);
    let sb = chain_segments(b);
    let mut best: Option<Q> = None;
    for (_, x) in &sa {
        for (_, y) in &sb {
            for shift in shifts_within_unit(a.ambient, x, y) {
                let y2 = (point::add(&y.0, &shift), point::add(&y.1, &shift));
                let d = segment_dist_sq(x, &y2);
                if best.as_ref().is_none_or(|b| d < *b) {
                    best = Some(d);
                }
            }
        }
    }
    match (best, a.ambient) {
        (Some(d), Ambient::Euclidean) => d,
        (Some(d), Ambient::Torus) => d.min(Q::one()),
        (None, _) => Q::one(),
    }
}

fn shifts_within_unit(ambient: Ambient, x: &Segment, y: &Segment) -> Vec<Point> {
    match ambient {
        Ambient::Euclidean => vec![point::origin()],
        Ambient::Torus => {
            // enlarge the box of x by one so every translate within distance 1 is visited
            let (mut lo, mut hi) = bbox([&x.0, &x.1]);
            for i in 0..3 {
                lo[i] -= Q::one();
                hi[i] += Q::one();
            }
            overlapping_translates(&(lo, hi), &bbox([&y.0, &y.1]))
        }
    }
}

/// Exact test that the supports of two chains do not meet.
pub fn are_disjoint(a: &OneChain, b: &OneChain) -> bool {
    let sa = chain_segments(a);
    let sb = chain_segments(b);
    for (_, x) in &sa {
        for (_, y) in &sb {
            for shift in relevant_shifts(a.ambient, x, y) {
                let y2 = (point::add(&y.0, &shift), point::add(&y.1, &shift));
                if segment_dist_sq(x, &y2).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::curve::PLLoop;
    use crate::rational::{q, qf};

    fn seg(a: [i64; 3], b: [i64; 3]) -> Segment {
        (point::from_ints(a), point::from_ints(b))
    }

    #[test]
    fn skew_segments() {
        let a = seg([-1, 0, 0], [1, 0, 0]);
        let b = seg([0, -1, 2], [0, 1, 2]);
        assert_eq!(segment_dist_sq(&a, &b), q(4));
        let (s, t, _) = segment_closest(&a, &b);
        assert_eq!((s, t), (qf(1, 2), qf(1, 2)));
    }

    #[test]
    fn parallel_and_touching() {
        let a = seg([0, 0, 0], [2, 0, 0]);
        assert_eq!(segment_dist_sq(&a, &seg([3, 1, 0], [5, 1, 0])), q(2));
        assert!(segment_dist_sq(&a, &seg([2, 0, 0], [2, 5, 5])).is_zero());
    }

    fn square(z: i64) -> OneChain {
        OneChain::single(
            PLLoop::euclidean(vec![
                point::point(0, 0, z),
                point::point(2, 0, z),
                point::point(2, 2, z),
                point::point(0, 2, z),
            ])
            .unwrap(),
        )
    }

    #[test]
    fn chain_disjointness() {
        assert!(are_disjoint(&square(0), &square(1)));
        assert!(!are_disjoint(&square(0), &square(0)));
        assert_eq!(min_dist_sq(&square(0), &square(3)), q(9));
    }

    #[test]
    fn torus_translates_are_checked() {
        let h = qf(1, 2);
        let mk = |y: Q| {
            let vs = vec![
                [q(0), y.clone(), h.clone()],
                [qf(1, 3), y.clone(), qf(1, 4)],
                [qf(2, 3), y.clone(), h.clone()],
            ];
            OneChain::single(PLLoop::torus(vs, vec![[0; 3], [0; 3], [1, 0, 0]]).unwrap())
        };
        // same curve shifted by a full period in y meets itself
        let a = mk(qf(1, 2));
        assert!(are_disjoint(&a, &mk(qf(1, 4))));
        let wrapped = mk(qf(3, 2));
        assert!(!are_disjoint(&a, &wrapped));
    }
}
