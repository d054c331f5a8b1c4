//! Exact planar primitives: points, segments, orientation, convex polygons.
//!
//! Polygons are stored canonically: counter-clockwise, no repeated or
//! collinear vertices, starting at the lexicographically smallest vertex.
//! A single vertex is a point and two vertices are a segment; both are
//! ordinary values of [`ConvexPolygon`].

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::error::{GeomError, Result};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(scalar::int(x), scalar::int(y))
    }

    pub fn origin() -> Self {
        Point::new(Scalar::zero(), Scalar::zero())
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, t: &Scalar) -> Point {
        Point::new(&self.x * t, &self.y * t)
    }

    pub fn dot(&self, other: &Point) -> Scalar {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of `self × other`.
    pub fn cross(&self, other: &Point) -> Scalar {
        &self.x * &other.y - &self.y * &other.x
    }

    /// `(1 - t) * self + t * other`.
    pub fn lerp(&self, other: &Point, t: &Scalar) -> Point {
        self + &(other - self).scale(t)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl<'a> Add<&'a Point> for &'a Point {
    type Output = Point;
    fn add(self, rhs: &'a Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl<'a> Sub<&'a Point> for &'a Point {
    type Output = Point;
    fn sub(self, rhs: &'a Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

/// Closed segment `[a, b]`; `a == b` is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn midpoint(&self) -> Point {
        self.a.lerp(&self.b, &scalar::ratio(1, 2))
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn to_polygon(&self) -> ConvexPolygon {
        ConvexPolygon::hull(&[self.a.clone(), self.b.clone()]).expect("two points")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative = -1,
    Zero = 0,
    Positive = 1,
}

impl Sign {
    pub fn of(value: &Scalar) -> Sign {
        if value.is_positive() {
            Sign::Positive
        } else if value.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn as_i32(self) -> i32 {
        self as i32
    }
}

/// Sign of `(q - p) × (r - p)`: positive for a counter-clockwise turn.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Sign {
    Sign::of(&cross3(p, q, r))
}

fn cross3(p: &Point, q: &Point, r: &Point) -> Scalar {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

/// Whether `x` lies on the closed segment `[a, b]`.
pub fn on_segment(a: &Point, b: &Point, x: &Point) -> bool {
    if orientation(a, b, x) != Sign::Zero {
        return false;
    }
    let (lo_x, hi_x) = if a.x <= b.x {
        (&a.x, &b.x)
    } else {
        (&b.x, &a.x)
    };
    let (lo_y, hi_y) = if a.y <= b.y {
        (&a.y, &b.y)
    } else {
        (&b.y, &a.y)
    };
    lo_x <= &x.x && &x.x <= hi_x && lo_y <= &x.y && &x.y <= hi_y
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

impl Membership {
    pub fn is_inside(self) -> bool {
        self != Membership::Outside
    }
}

/// Closed half-plane `normal · x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlane {
    pub normal: Point,
    pub offset: Scalar,
}

impl HalfPlane {
    /// Half-plane to the left of the directed line `a -> b` (boundary included).
    pub fn left_of(a: &Point, b: &Point) -> HalfPlane {
        let d = b - a;
        let normal = Point::new(d.y.clone(), -d.x);
        let offset = normal.dot(a);
        HalfPlane { normal, offset }
    }

    fn slack(&self, p: &Point) -> Scalar {
        &self.offset - self.normal.dot(p)
    }

    pub fn contains(&self, p: &Point) -> bool {
        !self.slack(p).is_negative()
    }
}

/// Nonempty compact convex set in the plane, stored canonically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Convex hull (Andrew's monotone chain). Collinear points are dropped;
    /// the result may be a point or a segment.
    pub fn hull(points: &[Point]) -> Result<ConvexPolygon> {
        if points.is_empty() {
            return Err(GeomError::EmptyPointSet);
        }
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() <= 2 {
            return Ok(ConvexPolygon { vertices: pts });
        }
        let mut lower: Vec<Point> = Vec::with_capacity(pts.len());
        for p in &pts {
            while lower.len() >= 2
                && orientation(&lower[lower.len() - 2], &lower[lower.len() - 1], p)
                    != Sign::Positive
            {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<Point> = Vec::with_capacity(pts.len());
        for p in pts.iter().rev() {
            while upper.len() >= 2
                && orientation(&upper[upper.len() - 2], &upper[upper.len() - 1], p)
                    != Sign::Positive
            {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Ok(ConvexPolygon { vertices: lower })
    }

    /// Builds a polygon from a vertex loop in either orientation, rejecting
    /// loops that are not convex. Repeated points and vertices in the
    /// relative interior of an edge are accepted and dropped.
    pub fn from_vertices(points: &[Point]) -> Result<ConvexPolygon> {
        let hull = ConvexPolygon::hull(points)?;
        if hull.len() <= 2 {
            return Ok(hull);
        }
        // every input point must sit on the hull boundary
        if points
            .iter()
            .any(|p| hull.contains_point(p) == Membership::Interior)
        {
            return Err(GeomError::NonConvex);
        }
        // and the hull vertices must be visited in cyclic order
        let mut seen: Vec<usize> = Vec::with_capacity(hull.len());
        for p in points {
            if let Some(i) = hull.vertices.iter().position(|v| v == p) {
                if seen.last() != Some(&i) {
                    seen.push(i);
                }
            }
        }
        while seen.len() > 1 && seen.first() == seen.last() {
            seen.pop();
        }
        if seen.len() != hull.len() {
            return Err(GeomError::NonConvex);
        }
        let n = hull.len();
        let step = (seen[1] + n - seen[0]) % n;
        if step != 1 && step != n - 1 {
            return Err(GeomError::NonConvex);
        }
        let consistent = seen
            .iter()
            .zip(seen.iter().cycle().skip(1))
            .all(|(&i, &j)| (j + n - i) % n == step);
        if !consistent {
            return Err(GeomError::NonConvex);
        }
        Ok(hull)
    }

    /// Canonical form of a loop already known to be strictly convex, CCW and
    /// free of repeated or collinear vertices: just rotate it.
    pub(crate) fn from_convex_loop(mut vertices: Vec<Point>) -> ConvexPolygon {
        let start = (0..vertices.len())
            .min_by(|&a, &b| vertices[a].cmp(&vertices[b]))
            .expect("nonempty loop");
        vertices.rotate_left(start);
        ConvexPolygon { vertices }
    }

    pub fn point(p: Point) -> ConvexPolygon {
        ConvexPolygon { vertices: vec![p] }
    }

    /// Axis-aligned rectangle `[x0, x1] × [y0, y1]`.
    pub fn rect(x0: Scalar, y0: Scalar, x1: Scalar, y1: Scalar) -> ConvexPolygon {
        ConvexPolygon::hull(&[
            Point::new(x0.clone(), y0.clone()),
            Point::new(x1.clone(), y0),
            Point::new(x1, y1.clone()),
            Point::new(x0, y1),
        ])
        .expect("four points")
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Boundary edges in CCW order. A segment yields one edge, a point none.
    pub fn edges(&self) -> Vec<Segment> {
        match self.vertices.len() {
            1 => Vec::new(),
            2 => vec![Segment::new(
                self.vertices[0].clone(),
                self.vertices[1].clone(),
            )],
            n => (0..n)
                .map(|i| Segment::new(self.vertices[i].clone(), self.vertices[(i + 1) % n].clone()))
                .collect(),
        }
    }

    /// Image under `x -> factor * x + shift`. `factor` must be positive.
    pub fn affine(&self, factor: &Scalar, shift: &Point) -> ConvexPolygon {
        assert!(factor.is_positive());
        let vertices = self
            .vertices
            .iter()
            .map(|v| &v.scale(factor) + shift)
            .collect();
        ConvexPolygon { vertices }
    }

    pub fn translate(&self, shift: &Point) -> ConvexPolygon {
        let vertices = self.vertices.iter().map(|v| v + shift).collect();
        ConvexPolygon { vertices }
    }

    pub fn scale(&self, factor: &Scalar) -> ConvexPolygon {
        self.affine(factor, &Point::origin())
    }

    /// Point reflection through the origin.
    pub fn negate(&self) -> ConvexPolygon {
        let pts: Vec<Point> = self.vertices.iter().map(|v| -v).collect();
        ConvexPolygon::hull(&pts).expect("nonempty")
    }

    /// Three-way membership. Degenerate polygons have empty interior.
    pub fn contains_point(&self, x: &Point) -> Membership {
        match self.vertices.len() {
            1 => {
                if &self.vertices[0] == x {
                    Membership::Boundary
                } else {
                    Membership::Outside
                }
            }
            2 => {
                if on_segment(&self.vertices[0], &self.vertices[1], x) {
                    Membership::Boundary
                } else {
                    Membership::Outside
                }
            }
            n => {
                let mut on_edge = false;
                for i in 0..n {
                    match orientation(&self.vertices[i], &self.vertices[(i + 1) % n], x) {
                        Sign::Negative => return Membership::Outside,
                        Sign::Zero => on_edge = true,
                        Sign::Positive => {}
                    }
                }
                if on_edge {
                    Membership::Boundary
                } else {
                    Membership::Interior
                }
            }
        }
    }

    /// Half-planes whose intersection is exactly this set. Degenerate sets
    /// are described by pairs of opposite half-planes plus end caps.
    pub fn halfplanes(&self) -> Vec<HalfPlane> {
        match self.vertices.len() {
            1 => {
                let p = &self.vertices[0];
                let one = scalar::int(1);
                let zero = Scalar::zero();
                vec![
                    HalfPlane {
                        normal: Point::new(one.clone(), zero.clone()),
                        offset: p.x.clone(),
                    },
                    HalfPlane {
                        normal: Point::new(-&one, zero.clone()),
                        offset: -&p.x,
                    },
                    HalfPlane {
                        normal: Point::new(zero.clone(), one.clone()),
                        offset: p.y.clone(),
                    },
                    HalfPlane {
                        normal: Point::new(zero, -one),
                        offset: -&p.y,
                    },
                ]
            }
            2 => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                let d = b - a;
                vec![
                    HalfPlane::left_of(a, b),
                    HalfPlane::left_of(b, a),
                    HalfPlane {
                        normal: d.clone(),
                        offset: d.dot(b),
                    },
                    HalfPlane {
                        normal: -&d,
                        offset: -d.dot(a),
                    },
                ]
            }
            n => (0..n)
                .map(|i| HalfPlane::left_of(&self.vertices[i], &self.vertices[(i + 1) % n]))
                .collect(),
        }
    }

    /// Intersection with a closed half-plane, or `None` if empty.
    pub fn clip(&self, h: &HalfPlane) -> Option<ConvexPolygon> {
        let ring = clip_ring(&self.vertices, h);
        if ring.is_empty() {
            None
        } else {
            Some(ConvexPolygon::hull(&ring).expect("nonempty"))
        }
    }

    /// Sub-segment `s ∩ self`, exact; `None` when disjoint.
    pub fn clip_segment(&self, s: &Segment) -> Option<Segment> {
        let mut ring = vec![s.a.clone(), s.b.clone()];
        for h in self.halfplanes() {
            ring = clip_ring(&ring, &h);
            if ring.is_empty() {
                return None;
            }
        }
        let (lo, hi) = (ring.iter().min()?, ring.iter().max()?);
        Some(Segment::new(lo.clone(), hi.clone()))
    }

    /// Lexicographically smallest vertex; canonical order starts here.
    pub fn first(&self) -> &Point {
        &self.vertices[0]
    }
}

/// Sutherland–Hodgman step on a closed vertex ring. Degenerate rings (one
/// or two points) are treated as closed loops as well.
pub(crate) fn clip_ring(ring: &[Point], h: &HalfPlane) -> Vec<Point> {
    let n = ring.len();
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        let s = &ring[(i + n - 1) % n];
        let e = &ring[i];
        let ss = h.slack(s);
        let se = h.slack(e);
        let s_in = !ss.is_negative();
        let e_in = !se.is_negative();
        if e_in {
            if !s_in {
                out.push(crossing(s, e, &ss, &se));
            }
            out.push(e.clone());
        } else if s_in {
            out.push(crossing(s, e, &ss, &se));
        }
    }
    out
}

fn crossing(s: &Point, e: &Point, ss: &Scalar, se: &Scalar) -> Point {
    let t = ss / (ss - se);
    s.lerp(e, &t)
}

impl fmt::Display for ConvexPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::rect(int(0), int(0), int(1), int(1))
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Sign::Positive);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), Sign::Zero);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), Sign::Negative);
        assert_eq!(Sign::Negative.as_i32(), -1);
    }

    #[test]
    fn hull_examples() {
        assert_eq!(
            ConvexPolygon::hull(&[p(0, 0)]).unwrap().vertices(),
            &[p(0, 0)]
        );
        let seg = ConvexPolygon::hull(&[p(0, 0), p(2, 0), p(1, 0)]).unwrap();
        assert_eq!(seg.vertices(), &[p(0, 0), p(2, 0)]);
        let half = ratio(1, 2);
        let sq = ConvexPolygon::hull(&[
            p(0, 0),
            p(1, 0),
            p(1, 1),
            p(0, 1),
            Point::new(half.clone(), half),
        ])
        .unwrap();
        assert_eq!(sq.vertices(), &[p(0, 0), p(1, 0), p(1, 1), p(0, 1)]);
        assert_eq!(ConvexPolygon::hull(&[]), Err(GeomError::EmptyPointSet));
    }

    #[test]
    fn hull_drops_collinear_boundary_points() {
        let h =
            ConvexPolygon::hull(&[p(0, 0), p(1, 0), p(2, 0), p(2, 2), p(0, 2), p(0, 1)]).unwrap();
        assert_eq!(h.vertices(), &[p(0, 0), p(2, 0), p(2, 2), p(0, 2)]);
        let h = ConvexPolygon::hull(&[p(3, 3), p(1, 1), p(2, 2), p(1, 1)]).unwrap();
        assert_eq!(h.vertices(), &[p(1, 1), p(3, 3)]);
    }

    #[test]
    fn from_vertices_accepts_either_orientation() {
        let cw = ConvexPolygon::from_vertices(&[p(0, 0), p(0, 1), p(1, 1), p(1, 0)]).unwrap();
        assert_eq!(cw, unit_square());
        let rotated = ConvexPolygon::from_vertices(&[p(1, 1), p(0, 1), p(0, 0), p(1, 0)]).unwrap();
        assert_eq!(rotated, unit_square());
    }

    #[test]
    fn from_vertices_rejects_non_convex_loops() {
        // dart
        let dart = [p(0, 0), p(4, 0), p(1, 1), p(0, 4)];
        assert_eq!(
            ConvexPolygon::from_vertices(&dart),
            Err(GeomError::NonConvex)
        );
        // pentagram visits the hull vertices out of order
        let star = [p(0, 3), p(2, -3), p(-3, 1), p(3, 1), p(-2, -3)];
        assert_eq!(
            ConvexPolygon::from_vertices(&star),
            Err(GeomError::NonConvex)
        );
        // bow-tie
        let bow = [p(0, 0), p(1, 1), p(1, 0), p(0, 1)];
        assert_eq!(
            ConvexPolygon::from_vertices(&bow),
            Err(GeomError::NonConvex)
        );
    }

    #[test]
    fn contains_point_examples() {
        let sq = unit_square();
        let half = ratio(1, 2);
        assert_eq!(
            sq.contains_point(&Point::new(half.clone(), half.clone())),
            Membership::Interior
        );
        assert_eq!(
            sq.contains_point(&Point::new(int(0), half)),
            Membership::Boundary
        );
        assert_eq!(sq.contains_point(&p(2, 0)), Membership::Outside);
    }

    #[test]
    fn contains_point_on_degenerate_sets() {
        let seg = ConvexPolygon::hull(&[p(0, 0), p(2, 2)]).unwrap();
        assert_eq!(seg.contains_point(&p(1, 1)), Membership::Boundary);
        assert_eq!(seg.contains_point(&p(3, 3)), Membership::Outside);
        let pt = ConvexPolygon::point(p(1, 1));
        assert_eq!(pt.contains_point(&p(1, 1)), Membership::Boundary);
        assert_eq!(pt.contains_point(&p(1, 0)), Membership::Outside);
    }

    #[test]
    fn clip_segment_examples() {
        let sq = unit_square();
        let half = ratio(1, 2);
        let s = Segment::new(
            Point::new(int(-1), half.clone()),
            Point::new(int(2), half.clone()),
        );
        assert_eq!(
            sq.clip_segment(&s),
            Some(Segment::new(
                Point::new(int(0), half.clone()),
                Point::new(int(1), half)
            ))
        );
        assert_eq!(sq.clip_segment(&Segment::new(p(2, 2), p(3, 3))), None);
        assert_eq!(
            sq.clip_segment(&Segment::new(p(1, 0), p(2, 0))),
            Some(Segment::new(p(1, 0), p(1, 0)))
        );
    }

    #[test]
    fn clip_segment_against_degenerate_polygon() {
        let seg = ConvexPolygon::hull(&[p(0, 0), p(4, 0)]).unwrap();
        let s = Segment::new(p(2, -1), p(2, 1));
        assert_eq!(seg.clip_segment(&s), Some(Segment::new(p(2, 0), p(2, 0))));
        let overlap = Segment::new(p(-1, 0), p(2, 0));
        assert_eq!(
            seg.clip_segment(&overlap),
            Some(Segment::new(p(0, 0), p(2, 0)))
        );
        let pt = ConvexPolygon::point(p(1, 1));
        assert_eq!(
            pt.clip_segment(&Segment::new(p(0, 0), p(2, 2))),
            Some(Segment::new(p(1, 1), p(1, 1)))
        );
        assert_eq!(pt.clip_segment(&Segment::new(p(0, 0), p(2, 0))), None);
    }

    #[test]
    fn halfplanes_describe_the_set() {
        let sets = [
            unit_square(),
            ConvexPolygon::hull(&[p(0, 0), p(3, 1)]).unwrap(),
            ConvexPolygon::point(p(2, -1)),
        ];
        let probes: Vec<Point> = (-2..5)
            .flat_map(|x| (-2..5).map(move |y| Point::new(ratio(x, 2), ratio(y, 2))))
            .chain([p(3, 1), p(2, -1)])
            .collect();
        for set in &sets {
            let hs = set.halfplanes();
            for q in &probes {
                assert_eq!(
                    hs.iter().all(|h| h.contains(q)),
                    set.contains_point(q).is_inside(),
                    "{set} {q}"
                );
            }
        }
    }
}
