//! Closed polygonal loops and rational 1-chains in ℝ³ or the flat torus ℝ³/ℤ³.
//!
//! A loop is stored lifted to ℝ³: consecutive points are joined by straight
//! segments and the closing segment runs from the last point to the first
//! point shifted by an integer period vector (always zero in ℝ³). In the
//! torus the first point is kept in the unit cube.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::point::{self, Point};
use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ambient {
    #[serde(rename = "R3")]
    Euclidean,
    #[serde(rename = "T3")]
    Torus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PLLoop {
    pub ambient: Ambient,
    points: Vec<Point>,
    period: [i64; 3],
}

pub type Segment = (Point, Point);

impl PLLoop {
    pub fn euclidean(vertices: Vec<Point>) -> Result<Self> {
        Self::from_lift(Ambient::Euclidean, vertices, [0; 3])
    }

    /// Torus loop from vertices (reduced mod 1 here) and one integer
    /// translation per step: step `i` runs from `v_i` to `v_{i+1} + t_i`.
    pub fn torus(vertices: Vec<Point>, translations: Vec<[i64; 3]>) -> Result<Self> {
        if translations.len() != vertices.len() {
            return Err(Error::InvalidInput("one translation per step is required".into()));
        }
        let mut points = Vec::with_capacity(vertices.len());
        let mut shift = point::origin();
        for (i, v) in vertices.iter().enumerate() {
            points.push(point::add(v, &shift));
            shift = point::add(&shift, &point::from_ints(translations[i]));
        }
        // the closing step lands on v_0 + Σ t_i
        let period = translations.iter().fold([0i64; 3], |acc, t| [acc[0] + t[0], acc[1] + t[1], acc[2] + t[2]]);
        Self::from_lift(Ambient::Torus, points, period)
    }

    /// Builds from lifted points; for the torus the lift is shifted so the
    /// first point lies in [0,1)³.
    pub fn from_lift(ambient: Ambient, mut points: Vec<Point>, period: [i64; 3]) -> Result<Self> {
        if ambient == Ambient::Euclidean && period != [0; 3] {
            return Err(Error::InvalidInput("loops in R3 have zero period".into()));
        }
        if points.len() < 3 {
            return Err(Error::InvalidInput("a loop needs at least 3 vertices".into()));
        }
        if ambient == Ambient::Torus {
            let f: Point = [
                Q::from_integer(points[0][0].floor().to_integer()),
                Q::from_integer(points[0][1].floor().to_integer()),
                Q::from_integer(points[0][2].floor().to_integer()),
            ];
            if !point::is_zero(&f) {
                points = points.iter().map(|p| point::sub(p, &f)).collect();
            }
        }
        let l = PLLoop { ambient, points, period };
        if l.segments().iter().any(|(a, b)| a == b) {
            return Err(Error::InvalidInput("loop has a zero-length segment".into()));
        }
        Ok(l)
    }

    pub fn lifted_points(&self) -> &[Point] {
        &self.points
    }

    pub fn period(&self) -> [i64; 3] {
        self.period
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Vertices reduced to the unit cube (torus) or as given (ℝ³).
    pub fn vertices(&self) -> Vec<Point> {
        match self.ambient {
            Ambient::Euclidean => self.points.clone(),
            Ambient::Torus => self.points.iter().map(|p| p.clone().map(|x| x.clone() - x.floor())).collect(),
        }
    }

    /// Integer translation per step, matching [`PLLoop::torus`].
    pub fn translations(&self) -> Vec<[i64; 3]> {
        let n = self.points.len();
        let floor = |p: &Point| -> [i64; 3] {
            [0, 1, 2].map(|i| i64::try_from(p[i].floor().to_integer()).expect("coordinate fits in i64"))
        };
        (0..n)
            .map(|i| {
                let a = floor(&self.points[i]);
                let b = if i + 1 < n {
                    floor(&self.points[i + 1])
                } else {
                    let f = floor(&self.points[0]);
                    [f[0] + self.period[0], f[1] + self.period[1], f[2] + self.period[2]]
                };
                [b[0] - a[0], b[1] - a[1], b[2] - a[2]]
            })
            .collect()
    }

    pub fn segments(&self) -> Vec<Segment> {
        let n = self.points.len();
        let per = point::from_ints(self.period);
        (0..n)
            .map(|i| {
                let b = if i + 1 < n { self.points[i + 1].clone() } else { point::add(&self.points[0], &per) };
                (self.points[i].clone(), b)
            })
            .collect()
    }

    pub fn reversed(&self) -> PLLoop {
        let n = self.points.len();
        let per = point::from_ints(self.period);
        let mut points = vec![self.points[0].clone()];
        // walk backwards from the start's lift shifted by the period
        for j in 1..n {
            points.push(point::sub(&self.points[n - j], &per));
        }
        let period = self.period.map(|x| -x);
        PLLoop::from_lift(self.ambient, points, period).expect("reversal preserves validity")
    }

    pub fn translated(&self, v: &Point) -> PLLoop {
        let points = self.points.iter().map(|p| point::add(p, v)).collect();
        PLLoop::from_lift(self.ambient, points, self.period).expect("translation preserves validity")
    }

    /// Axis-aligned bounding box of the lift (including the closing point).
    pub fn bounding_box(&self) -> (Point, Point) {
        bbox(self.segments().iter().flat_map(|(a, b)| [a, b]))
    }
}

pub(crate) fn bbox<'a>(pts: impl IntoIterator<Item = &'a Point>) -> (Point, Point) {
    let mut it = pts.into_iter();
    let first = it.next().expect("nonempty").clone();
    let (mut lo, mut hi) = (first.clone(), first);
    for p in it {
        for i in 0..3 {
            if p[i] < lo[i] {
                lo[i] = p[i].clone();
            }
            if p[i] > hi[i] {
                hi[i] = p[i].clone();
            }
        }
    }
    (lo, hi)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneChain {
    pub ambient: Ambient,
    pub terms: Vec<(Q, PLLoop)>,
}

impl OneChain {
    pub fn new(ambient: Ambient, terms: Vec<(Q, PLLoop)>) -> Result<Self> {
        if terms.iter().any(|(c, _)| c.is_zero()) {
            return Err(Error::InvalidInput("chain coefficients must be nonzero".into()));
        }
        if terms.iter().any(|(_, l)| l.ambient != ambient) {
            return Err(Error::InvalidInput("loops must share the ambient space".into()));
        }
        Ok(OneChain { ambient, terms })
    }

    pub fn single(l: PLLoop) -> Self {
        OneChain { ambient: l.ambient, terms: vec![(Q::one(), l)] }
    }

    pub fn zero(ambient: Ambient) -> Self {
        OneChain { ambient, terms: vec![] }
    }

    pub fn scaled(&self, q: &Q) -> OneChain {
        if q.is_zero() {
            return OneChain::zero(self.ambient);
        }
        OneChain { ambient: self.ambient, terms: self.terms.iter().map(|(c, l)| (c * q, l.clone())).collect() }
    }

    pub fn reversed(&self) -> OneChain {
        OneChain { ambient: self.ambient, terms: self.terms.iter().map(|(c, l)| (c.clone(), l.reversed())).collect() }
    }

    pub fn translated(&self, v: &Point) -> OneChain {
        OneChain {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(c, l)| (c.clone(), l.translated(v))).collect(),
        }
    }

    pub fn plus(&self, other: &OneChain) -> Result<OneChain> {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        OneChain::new(self.ambient, terms)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(c, _)| c.is_integer())
    }

    /// Class in H₁(·, ℚ) ≅ ℚ³ (identically zero in ℝ³).
    pub fn homology_class(&self) -> [Q; 3] {
        let mut h = point::origin();
        if self.ambient == Ambient::Torus {
            for (c, l) in &self.terms {
                h = point::add(&h, &point::scale(c, &point::from_ints(l.period)));
            }
        }
        h
    }
}

/// H₁ class of a chain, see [`OneChain::homology_class`].
pub fn homology_class(c: &OneChain) -> [Q; 3] {
    c.homology_class()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn square() -> PLLoop {
        PLLoop::euclidean(vec![point::point(0, 0, 0), point::point(1, 0, 0), point::point(1, 1, 0), point::point(0, 1, 0)])
            .unwrap()
    }

    fn pt(x: Q, y: Q, z: Q) -> Point {
        [x, y, z]
    }

    fn x_winder(times: i64) -> PLLoop {
        let h = qf(1, 2);
        let vs = vec![pt(q(0), h.clone(), h.clone()), pt(qf(1, 3), h.clone(), qf(1, 4)), pt(qf(2, 3), h.clone(), h.clone())];
        let mut ts = vec![[0, 0, 0], [0, 0, 0], [1, 0, 0]];
        if times == 2 {
            let mut vs2 = vs.clone();
            vs2.extend(vs.iter().cloned());
            ts = vec![[0; 3], [0; 3], [1, 0, 0], [0; 3], [0; 3], [1, 0, 0]];
            return PLLoop::torus(vs2, ts).unwrap();
        }
        PLLoop::torus(vs, ts).unwrap()
    }

    #[test]
    fn euclidean_class_is_zero() {
        let c = OneChain::single(square());
        assert_eq!(c.homology_class(), point::origin());
    }

    #[test]
    fn torus_winding() {
        let c = OneChain::single(x_winder(1));
        assert_eq!(c.homology_class(), point::point(1, 0, 0));
        let half = OneChain::new(Ambient::Torus, vec![(qf(1, 2), x_winder(2))]).unwrap();
        assert_eq!(half.homology_class(), point::point(1, 0, 0));
        assert_eq!(x_winder(2).period(), [2, 0, 0]);
    }

    #[test]
    fn torus_reduces_and_round_trips_translations() {
        let l = x_winder(1);
        let again = PLLoop::torus(l.vertices(), l.translations()).unwrap();
        assert_eq!(again, l);
        let shifted = l.translated(&point::point(3, -1, 0));
        assert_eq!(shifted, l);
    }

    #[test]
    fn reversal_is_involutive() {
        let l = x_winder(1);
        assert_eq!(l.reversed().reversed(), l);
        assert_eq!(l.reversed().period(), [-1, 0, 0]);
        assert_eq!(square().reversed().reversed(), square());
    }

    #[test]
    fn rejects_degenerate() {
        assert!(PLLoop::euclidean(vec![point::point(0, 0, 0), point::point(1, 0, 0)]).is_err());
        assert!(PLLoop::euclidean(vec![point::point(0, 0, 0), point::point(0, 0, 0), point::point(1, 0, 0)]).is_err());
    }
}
