//! Explicit PL configurations used by tests, examples and the shipped fixture files.

use num_traits::One;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{nice_chain, PlCell, SecondChain, SecondIndex};
use crate::error::Result;
use crate::geometry::curve::{Ambient, OneChain, PLLoop};
use crate::geometry::isotopy::Isotopy;
use crate::geometry::point::{self, Point};
use crate::rational::{from_f64, qf, Q};

fn pt(x: Q, y: Q, z: Q) -> Point {
    [x, y, z]
}

fn poly(points: Vec<Point>) -> OneChain {
    OneChain::single(PLLoop::euclidean(points).expect("fixture loop is valid"))
}

/// Unit square around the origin in the xy-plane, counterclockwise from +z.
pub fn square_xy() -> Vec<Point> {
    vec![point::point(-1, -1, 0), point::point(1, -1, 0), point::point(1, 1, 0), point::point(-1, 1, 0)]
}

/// Square in the xz-plane passing upward through the origin.
pub fn square_xz() -> Vec<Point> {
    vec![point::point(0, 0, -1), point::point(0, 0, 1), point::point(2, 0, 1), point::point(2, 0, -1)]
}

/// Two squares forming a Hopf link with linking number +1.
pub fn hopf_pair() -> (OneChain, OneChain) {
    (poly(square_xy()), poly(square_xz()))
}

/// The Hopf squares with the second moved far away along x.
pub fn split_pair() -> (OneChain, OneChain) {
    let (a, b) = hopf_pair();
    (a, b.translated(&point::point(10, 0, 0)))
}

fn circle_point(r: f64, theta: f64, z: f64) -> Point {
    let d = 1000;
    pt(from_f64(r * theta.cos(), d), from_f64(r * theta.sin(), d), from_f64(z, d))
}

/// A round polygon of radius 4 and a curve winding twice around its core
/// on a torus of tube radius 1; linking number 2.
pub fn doubled_clasp_pair() -> (OneChain, OneChain) {
    use std::f64::consts::TAU;
    let a = (0..24).map(|i| circle_point(4.0, TAU * i as f64 / 24.0, 0.0)).collect();
    let b = (0..48)
        .map(|i| {
            let th = -TAU * i as f64 / 48.0;
            circle_point(4.0 + (2.0 * th).cos(), th, (2.0 * th).sin())
        })
        .collect();
    (poly(a), poly(b))
}

fn shrink_into_cube(points: Vec<Point>) -> Vec<Point> {
    let s = qf(1, 8);
    let c = pt(qf(1, 2), qf(1, 2), qf(1, 2));
    points.iter().map(|p| point::add(&c, &point::scale(&s, p))).collect()
}

/// The Hopf pair scaled by 1/8 and centered in the unit cube, in ℝ³.
pub fn small_hopf_euclidean() -> (OneChain, OneChain) {
    (poly(shrink_into_cube(square_xy())), poly(shrink_into_cube(square_xz())))
}

/// The same coordinates as [`small_hopf_euclidean`], read in the torus.
pub fn torus_small_hopf() -> (OneChain, OneChain) {
    let mk = |ps| OneChain::single(PLLoop::from_lift(Ambient::Torus, ps, [0; 3]).expect("valid"));
    (mk(shrink_into_cube(square_xy())), mk(shrink_into_cube(square_xz())))
}

/// A torus loop with the given winding vector (nonzero).
pub fn torus_winding_loop(winding: [i64; 3]) -> OneChain {
    let base = pt(qf(1, 2), qf(1, 3), qf(1, 5));
    let v = point::from_ints(winding);
    let bump = pt(qf(1, 17), qf(1, 19), qf(1, 23));
    let points = vec![
        base.clone(),
        point::add(&point::add(&base, &point::scale(&qf(1, 3), &v)), &bump),
        point::add(&base, &point::scale(&qf(2, 3), &v)),
    ];
    OneChain::new(Ambient::Torus, vec![(Q::one(), PLLoop::from_lift(Ambient::Torus, points, winding).expect("valid"))])
        .expect("valid")
}

/// `k` copies of the Hopf pair spaced along y, as curves for half-edges 0..2k.
pub fn hopf_blocks(k: usize) -> Vec<OneChain> {
    let (a, b) = hopf_pair();
    (0..k)
        .flat_map(|j| {
            let v = point::point(0, 10 * j as i64, 0);
            [a.translated(&v), b.translated(&v)]
        })
        .collect()
}

fn poly_ints(points: &[[i64; 3]]) -> OneChain {
    poly(points.iter().map(|p| point::from_ints(*p)).collect())
}

/// The second Hopf square descends from height 3 onto its linked position;
/// one crossing at t = 2/3 raising the linking number from 0 to 1.
pub fn hopf_pass_isotopy() -> Isotopy {
    let (a, b) = hopf_pair();
    let start = vec![a.clone(), b.translated(&point::point(0, 0, 3))];
    Isotopy::straight(start, vec![a, b]).expect("valid")
}

/// A strand along +x moving in +z through a strand along +y at the origin.
pub fn strand_crossing_isotopy() -> Isotopy {
    let a = |z: i64| poly_ints(&[[-2, 0, z], [2, 0, z], [2, 0, z + 10], [-2, 0, z + 10]]);
    let b = poly_ints(&[[0, -2, 0], [0, 2, 0], [0, 2, -10], [0, -2, -10]]);
    Isotopy::straight(vec![a(-1), b.clone()], vec![a(1), b]).expect("valid")
}

/// The second Hopf square, moved aside, touches the first at t = 1/2 and retreats.
pub fn tangent_isotopy() -> Isotopy {
    let (a, b) = hopf_pair();
    let away = b.translated(&point::point(2, 0, 0));
    let touch = b.translated(&point::point(1, 0, 0));
    Isotopy::through(vec![vec![a.clone(), away.clone()], vec![a.clone(), touch], vec![a, away]]).expect("valid")
}

fn jitter(rng: &mut ChaCha8Rng) -> Point {
    let mut c = || qf(rng.gen_range(-20..=20), 97);
    pt(c(), c(), c())
}

/// A nice cycle on `k` Hopf blocks and the non-nice cycle `nice + ∂̂w`, where
/// the witness w moves a raised configuration X to a slot-dependent
/// configuration Y(k₀) in which some of the raised squares have descended
/// through their partners.
pub fn witness_cycle(seed: u64, k: usize) -> Result<(SecondChain<PlCell>, SecondChain<PlCell>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nice = nice_chain(k, &[(Q::one(), hopf_blocks(k))])?;
    let (a, b) = hopf_pair();
    let centers: Vec<Point> = (0..k).map(|j| point::add(&point::point(0, 10 * j as i64, 0), &jitter(&mut rng))).collect();
    let raised: Vec<Point> = (0..k).map(|_| point::add(&point::point(0, 0, 3), &jitter(&mut rng))).collect();
    let x: Vec<OneChain> = (0..k)
        .flat_map(|j| [a.translated(&centers[j]), b.translated(&point::add(&centers[j], &raised[j]))])
        .collect();
    let mut w = SecondChain::zero(1);
    for k0 in 0..=k {
        let y: Vec<OneChain> = (0..k)
            .flat_map(|j| {
                let drop = k0 == 0 || rng.gen_bool(0.5);
                let offset = if drop { jitter(&mut rng) } else { point::add(&raised[j], &jitter(&mut rng)) };
                [a.translated(&centers[j]), b.translated(&point::add(&centers[j], &offset))]
            })
            .collect();
        let sweep = PlCell::Sweep(Isotopy::straight(x.clone(), y)?);
        let coeff = qf(rng.gen_range(1..=3), rng.gen_range(1..=2));
        w.add_raw(SecondIndex { k, sig: vec![k0] }, &[(sweep, coeff)].into_iter().collect(), &Q::one());
    }
    let z = nice.plus(&w.hat()?)?;
    Ok((nice, z))
}

/// A transversal isotopy of `k` Hopf blocks: each block's second square moves
/// between raised (unlinked) and lowered (linked) keyframe positions with
/// small random offsets. At most `max_crossings` raise/lower transitions.
pub fn random_block_isotopy(seed: u64, k: usize, max_crossings: usize) -> Result<Isotopy> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b) = hopf_pair();
    let n_frames = rng.gen_range(2..=4);
    let mut lowered: Vec<Vec<bool>> = (0..k).map(|_| vec![rng.gen_bool(0.5)]).collect();
    let mut budget = max_crossings;
    for _ in 1..n_frames {
        for state in lowered.iter_mut() {
            let prev = *state.last().unwrap();
            let flip = budget > 0 && rng.gen_bool(0.5);
            if flip {
                budget -= 1;
            }
            state.push(prev ^ flip);
        }
    }
    let centers: Vec<Point> = (0..k).map(|j| point::add(&point::point(0, 10 * j as i64, 0), &jitter(&mut rng))).collect();
    let frames = (0..n_frames)
        .map(|f| {
            (0..k)
                .flat_map(|j| {
                    let lift = if lowered[j][f] { point::origin() } else { point::point(0, 0, 3) };
                    let offset = point::add(&lift, &jitter(&mut rng));
                    [a.translated(&centers[j]), b.translated(&point::add(&centers[j], &offset))]
                })
                .collect()
        })
        .collect();
    Isotopy::through(frames)
}

/// A pair of disjoint loops near a circle in the xy-plane and a circle in the
/// xz-plane, linked or not, with `n` random vertices each.
pub fn random_loop_pair(rng: &mut ChaCha8Rng, n: usize, linked: bool) -> (OneChain, OneChain) {
    use std::f64::consts::TAU;
    let mut ring = |center: [f64; 3], in_xz: bool| -> OneChain {
        let pts = (0..n)
            .map(|i| {
                let th = TAU * (i as f64 + rng.gen_range(-0.3..0.3)) / n as f64;
                let r = 2.0 + rng.gen_range(-0.3..0.3);
                let w = rng.gen_range(-0.3..0.3);
                let (x, y, z) = if in_xz { (r * th.cos(), w, r * th.sin()) } else { (r * th.cos(), r * th.sin(), w) };
                pt(from_f64(center[0] + x, 64), from_f64(center[1] + y, 64), from_f64(center[2] + z, 64))
            })
            .collect();
        poly(pts)
    };
    let a = ring([0.0, 0.0, 0.0], false);
    let b = ring([if linked { 2.0 } else { 6.0 }, 0.0, 0.0], true);
    (a, b)
}
