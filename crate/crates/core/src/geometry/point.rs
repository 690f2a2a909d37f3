//! Exact rational points and vectors in three dimensions.

use num_traits::{Signed, Zero};

use crate::rational::Q;

pub type Point = [Q; 3];

pub fn point(x: i64, y: i64, z: i64) -> Point {
    [Q::from_integer(x.into()), Q::from_integer(y.into()), Q::from_integer(z.into())]
}

pub fn origin() -> Point {
    [Q::zero(), Q::zero(), Q::zero()]
}

pub fn add(a: &Point, b: &Point) -> Point {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

pub fn sub(a: &Point, b: &Point) -> Point {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

pub fn scale(s: &Q, a: &Point) -> Point {
    [s * &a[0], s * &a[1], s * &a[2]]
}

pub fn neg(a: &Point) -> Point {
    [-&a[0], -&a[1], -&a[2]]
}

pub fn dot(a: &Point, b: &Point) -> Q {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn cross(a: &Point, b: &Point) -> Point {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn det(a: &Point, b: &Point, c: &Point) -> Q {
    dot(&cross(a, b), c)
}

pub fn norm_sq(a: &Point) -> Q {
    dot(a, a)
}

/// ℓ¹ norm, an upper bound for the Euclidean one.
pub fn norm_l1(a: &Point) -> Q {
    a.iter().fold(Q::zero(), |acc, x| acc + x.abs())
}

/// (1 − t)·a + t·b
pub fn lerp(a: &Point, b: &Point, t: &Q) -> Point {
    add(a, &scale(t, &sub(b, a)))
}

pub fn is_zero(a: &Point) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn from_ints(v: [i64; 3]) -> Point {
    point(v[0], v[1], v[2])
}

pub fn to_f64(a: &Point) -> [f64; 3] {
    [crate::rational::to_f64(&a[0]), crate::rational::to_f64(&a[1]), crate::rational::to_f64(&a[2])]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_handed_cross() {
        assert_eq!(cross(&point(1, 0, 0), &point(0, 1, 0)), point(0, 0, 1));
        assert_eq!(det(&point(1, 0, 0), &point(0, 1, 0), &point(0, 0, 1)), Q::from_integer(1.into()));
    }
}
