//! Linking numbers of disjoint null-homologous chains: an exact signed crossing
//! count in a generic projection, and a numeric Gauss-integral estimate.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::curve::{Ambient, OneChain, PLLoop, Segment};
use super::point::{self, Point};
use super::predicates::{are_disjoint, overlapping_translates};
use crate::error::{Error, Result};
use crate::rational::{format_q, Q};

const DIRECTION_ATTEMPTS: usize = 16;

/// Fixed pseudo-random projection directions; the `i`-th is always the same.
pub fn projection_direction(i: usize) -> Point {
    let mut rng = ChaCha8Rng::seed_from_u64(0x11_4b ^ i as u64);
    let mut c = || {
        let v: i64 = rng.gen_range(1..=997);
        if rng.gen_bool(0.5) { v } else { -v }
    };
    point::point(c(), c(), c())
}

enum Crossing {
    None,
    Signed(i64),
    Degenerate,
}

/// Signed crossing of `p` over/under `q` seen along `u`.
fn crossing(p: &Segment, q: &Segment, u: &Point) -> Crossing {
    let dp = point::sub(&p.1, &p.0);
    let dq = point::sub(&q.1, &q.0);
    let r = point::sub(&q.0, &p.0);
    let d = point::det(&dp, &dq, u);
    if d.is_zero() {
        // projections are parallel; they only meet if coplanar with u
        if point::det(&dp, &r, u).is_zero() && !point::is_zero(&point::cross(&dp, &r)) {
            return Crossing::Degenerate;
        }
        if point::is_zero(&point::cross(&dp, u)) || point::is_zero(&point::cross(&dq, u)) {
            return Crossing::Degenerate;
        }
        return Crossing::None;
    }
    let s = point::det(&r, &dq, u) / &d;
    let t = -point::det(&dp, &r, u) / &d;
    let lambda = -point::det(&dp, &dq, &r) / &d;
    let inside = |x: &Q| x.is_positive() && *x < Q::from_integer(1.into());
    let closed = |x: &Q| !x.is_negative() && *x <= Q::from_integer(1.into());
    if inside(&s) && inside(&t) {
        if lambda.is_zero() {
            return Crossing::Degenerate;
        }
        let sd = if d.is_positive() { 1 } else { -1 };
        let sl = if lambda.is_positive() { 1 } else { -1 };
        Crossing::Signed(sd * sl)
    } else if closed(&s) && closed(&t) {
        Crossing::Degenerate
    } else {
        Crossing::None
    }
}

/// Twice the linking number of two closed polygons in ℝ³, or `None` when `u`
/// is not generic for them.
fn doubled_link_along(a: &[Segment], b: &[Segment], u: &Point) -> Option<i64> {
    let mut total = 0;
    for p in a {
        for q in b {
            match crossing(p, q, u) {
                Crossing::None => {}
                Crossing::Signed(s) => total += s,
                Crossing::Degenerate => return None,
            }
        }
    }
    Some(total)
}

fn shifted(segs: &[Segment], v: &Point) -> Vec<Segment> {
    segs.iter().map(|(a, b)| (point::add(a, v), point::add(b, v))).collect()
}

fn check_null_homologous(c: &OneChain) -> Result<()> {
    let class = c.homology_class();
    let loops_ok = c.terms.iter().all(|(_, l)| l.period() == [0; 3]);
    if !point::is_zero(&class) || !loops_ok {
        let offending = if point::is_zero(&class) {
            let l = c.terms.iter().find(|(_, l)| l.period() != [0; 3]).expect("some loop winds");
            point::from_ints(l.1.period())
        } else {
            class
        };
        return Err(Error::NotNullHomologous(offending.iter().map(format_q).collect()));
    }
    Ok(())
}

/// Integer linking number of two null-homologous loops along a direction,
/// summed over the deck translates that can interact in the torus.
fn loop_link_along(a: &PLLoop, b: &PLLoop, u: &Point) -> Option<i64> {
    let sa = a.segments();
    let sb = b.segments();
    let doubled = match a.ambient {
        Ambient::Euclidean => doubled_link_along(&sa, &sb, u)?,
        Ambient::Torus => {
            let mut total = 0;
            for n in overlapping_translates(&a.bounding_box(), &b.bounding_box()) {
                total += doubled_link_along(&sa, &shifted(&sb, &n), u)?;
            }
            total
        }
    };
    debug_assert!(doubled % 2 == 0);
    Some(doubled / 2)
}

/// Linking number along a given projection direction.
pub fn linking_number_along(a: &OneChain, b: &OneChain, u: &Point) -> Result<Q> {
    validate_pair(a, b)?;
    link_unchecked(a, b, u).ok_or(Error::ProjectionDegenerate(1))
}

fn validate_pair(a: &OneChain, b: &OneChain) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::InvalidInput("chains live in different ambient spaces".into()));
    }
    check_null_homologous(a)?;
    check_null_homologous(b)?;
    if !are_disjoint(a, b) {
        return Err(Error::NotDisjoint);
    }
    Ok(())
}

fn link_unchecked(a: &OneChain, b: &OneChain, u: &Point) -> Option<Q> {
    let mut total = Q::zero();
    for (ca, la) in &a.terms {
        for (cb, lb) in &b.terms {
            let lk = loop_link_along(la, lb, u)?;
            total += ca * cb * Q::from_integer(lk.into());
        }
    }
    Some(total)
}

/// Exact linking number, bilinear in the chains.
pub fn linking_number(a: &OneChain, b: &OneChain) -> Result<Q> {
    validate_pair(a, b)?;
    linking_number_prevalidated(a, b)
}

/// Linking number without the disjointness and class checks; the caller
/// guarantees both.
pub(crate) fn linking_number_prevalidated(a: &OneChain, b: &OneChain) -> Result<Q> {
    for i in 0..DIRECTION_ATTEMPTS {
        if let Some(v) = link_unchecked(a, b, &projection_direction(i)) {
            return Ok(v);
        }
    }
    Err(Error::ProjectionDegenerate(DIRECTION_ATTEMPTS))
}

// Gauss–Legendre nodes and weights on [-1, 1], 8 points.
const GL_NODES: [f64; 8] = [
    -0.960_289_856_497_536_3,
    -0.796_666_477_413_626_7,
    -0.525_532_409_916_329,
    -0.183_434_642_495_649_8,
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_3,
];
const GL_WEIGHTS: [f64; 8] = [
    0.101_228_536_290_376_26,
    0.222_381_034_453_374_47,
    0.313_706_645_877_887_3,
    0.362_683_783_378_362,
    0.362_683_783_378_362,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_47,
    0.101_228_536_290_376_26,
];

fn gauss_legendre(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let (m, h) = ((a + b) / 2.0, (b - a) / 2.0);
    GL_NODES.iter().zip(GL_WEIGHTS).map(|(x, w)| w * f(m + h * x)).sum::<f64>() * h
}

const MAX_DEPTH: u32 = 40;

fn adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> std::result::Result<f64, f64> {
    let m = (a + b) / 2.0;
    let (l, r) = (gauss_legendre(f, a, m), gauss_legendre(f, m, b));
    let change = (l + r - whole).abs();
    if change <= tol {
        return Ok(l + r);
    }
    if depth >= MAX_DEPTH {
        return Err(change);
    }
    let l = adaptive(f, a, m, l, tol / 2.0, depth + 1)?;
    let r = adaptive(f, m, b, r, tol / 2.0, depth + 1)?;
    Ok(l + r)
}

type V3 = [f64; 3];

fn sub3(a: V3, b: V3) -> V3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot3(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: V3, b: V3) -> V3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// ∫₀¹∫₀¹ (a(s) − b(t))·(a′ × b′)/|a(s) − b(t)|³ dt ds for two straight segments.
/// The numerator is constant and the inner integral has a closed form.
fn segment_pair_integral(a: (V3, V3), b: (V3, V3), tol: f64) -> std::result::Result<f64, f64> {
    let da = sub3(a.1, a.0);
    let db = sub3(b.1, b.0);
    let num = dot3(sub3(a.0, b.0), cross3(da, db));
    if num == 0.0 {
        return Ok(0.0);
    }
    let alpha = dot3(db, db);
    let inner = move |s: f64| {
        let w = sub3([a.0[0] + s * da[0], a.0[1] + s * da[1], a.0[2] + s * da[2]], b.0);
        let beta = -2.0 * dot3(w, db);
        let gamma = dot3(w, w);
        let disc = 4.0 * alpha * gamma - beta * beta;
        let prim = |t: f64| 2.0 * (2.0 * alpha * t + beta) / (disc * (alpha * t * t + beta * t + gamma).sqrt());
        num * (prim(1.0) - prim(0.0))
    };
    let whole = gauss_legendre(&inner, 0.0, 1.0);
    adaptive(&inner, 0.0, 1.0, whole, tol, 0)
}

/// Numeric Gauss linking integral (1/4π)∮∮ (a − b)·(da × db)/|a − b|³.
pub fn gauss_linking_estimate(a: &OneChain, b: &OneChain, tolerance: f64) -> Result<f64> {
    validate_pair(a, b)?;
    let mut jobs = Vec::new();
    for (ca, la) in &a.terms {
        for (cb, lb) in &b.terms {
            let w = crate::rational::to_f64(&(ca * cb));
            let shifts = match a.ambient {
                Ambient::Euclidean => vec![point::origin()],
                Ambient::Torus => overlapping_translates(&la.bounding_box(), &lb.bounding_box()),
            };
            for n in shifts {
                for sa in la.segments() {
                    for sb in shifted(&lb.segments(), &n) {
                        jobs.push((w, sa.clone(), sb));
                    }
                }
            }
        }
    }
    let four_pi = 4.0 * std::f64::consts::PI;
    let per_job = tolerance * four_pi / (jobs.len().max(1) as f64) / 2.0;
    let mut total = 0.0;
    for (w, sa, sb) in jobs {
        let fa = (point::to_f64(&sa.0), point::to_f64(&sa.1));
        let fb = (point::to_f64(&sb.0), point::to_f64(&sb.1));
        let scale = w.abs().max(f64::MIN_POSITIVE);
        match segment_pair_integral(fa, fb, per_job / scale) {
            Ok(v) => total += w * v,
            Err(change) => {
                return Err(Error::ToleranceUnachievable { tolerance, last_change: change * scale / four_pi })
            }
        }
    }
    Ok(total / four_pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{q, qf};

    #[test]
    fn hopf_is_plus_one() {
        let (a, b) = fixtures::hopf_pair();
        assert_eq!(linking_number(&a, &b).unwrap(), q(1));
        let g = gauss_linking_estimate(&a, &b, 1e-4).unwrap();
        assert!((g - 1.0).abs() < 1e-3, "gauss {g}");
    }

    #[test]
    fn split_is_zero() {
        let (a, b) = fixtures::split_pair();
        assert_eq!(linking_number(&a, &b).unwrap(), q(0));
        assert!(gauss_linking_estimate(&a, &b, 1e-4).unwrap().abs() < 1e-3);
    }

    #[test]
    fn doubled_clasp_is_two() {
        let (a, b) = fixtures::doubled_clasp_pair();
        assert_eq!(linking_number(&a, &b).unwrap(), q(2));
        let g = gauss_linking_estimate(&a, &b, 1e-3).unwrap();
        assert!((g - 2.0).abs() < 0.01, "gauss {g}");
    }

    #[test]
    fn bilinear_symmetric_and_orientation() {
        let (a, b) = fixtures::hopf_pair();
        assert_eq!(linking_number(&b, &a).unwrap(), q(1));
        assert_eq!(linking_number(&a.reversed(), &b).unwrap(), q(-1));
        assert_eq!(linking_number(&a.scaled(&qf(3, 7)), &b).unwrap(), qf(3, 7));
    }

    #[test]
    fn directions_agree() {
        let (a, b) = fixtures::doubled_clasp_pair();
        let l0 = linking_number_along(&a, &b, &projection_direction(3)).unwrap();
        let l1 = linking_number_along(&a, &b, &projection_direction(7)).unwrap();
        assert_eq!(l0, l1);
    }

    #[test]
    fn rejects_bad_inputs() {
        let (a, _) = fixtures::hopf_pair();
        assert!(matches!(linking_number(&a, &a), Err(Error::NotDisjoint)));
        let w = fixtures::torus_winding_loop([1, 0, 0]);
        let z = fixtures::torus_small_hopf().0;
        assert!(matches!(linking_number(&w, &z), Err(Error::NotNullHomologous(_))));
    }

    #[test]
    fn torus_agrees_with_euclidean_inside_a_cube() {
        let (a, b) = fixtures::torus_small_hopf();
        let (ea, eb) = fixtures::small_hopf_euclidean();
        assert_eq!(linking_number(&a, &b).unwrap(), linking_number(&ea, &eb).unwrap());
        assert_eq!(linking_number(&a, &b).unwrap(), q(1));
    }
}
