#![allow(dead_code)]

use hlab_core::scalar::ratio;
use hlab_core::{ConvexPolygon, Point, PolyhedralNorm, Scalar};
use proptest::prelude::*;

/// Rationals `p/q` with `|p/q| <= 4` and `q <= 16`.
pub fn small_scalar() -> impl Strategy<Value = Scalar> {
    (1i64..=16).prop_flat_map(|q| (-4 * q..=4 * q).prop_map(move |p| ratio(p, q)))
}

pub fn point() -> impl Strategy<Value = Point> {
    (small_scalar(), small_scalar()).prop_map(|(x, y)| Point::new(x, y))
}

/// Hull of 3 to 10 random points; may be a segment or a point.
pub fn any_convex() -> impl Strategy<Value = ConvexPolygon> {
    prop::collection::vec(point(), 3..10).prop_map(|pts| ConvexPolygon::hull(&pts).unwrap())
}

/// Hull with nonempty interior.
pub fn solid_convex() -> impl Strategy<Value = ConvexPolygon> {
    any_convex().prop_filter("two-dimensional", |p| p.len() >= 3)
}

pub fn hexagon_norm() -> impl Strategy<Value = PolyhedralNorm> {
    prop::collection::vec(point(), 3).prop_filter_map("degenerate ball", |vs| {
        let mut all = vs.clone();
        all.extend(vs.iter().map(|v| -v));
        PolyhedralNorm::new(ConvexPolygon::hull(&all).ok()?).ok()
    })
}

pub fn norm() -> impl Strategy<Value = PolyhedralNorm> {
    prop_oneof![
        Just(PolyhedralNorm::linf()),
        Just(PolyhedralNorm::l1()),
        hexagon_norm()
    ]
}

/// Nonnegative radius with denominator at most 8.
pub fn radius() -> impl Strategy<Value = Scalar> {
    (0i64..=24, 1i64..=8).prop_map(|(p, q)| ratio(p, q))
}
