//! Polyhedral norms and certified polygonal sandwiches of the Euclidean norm.

use num_traits::{One, Signed, Zero};

use crate::error::{GeomError, Result};
use crate::geom::{ConvexPolygon, Membership, Point};
use crate::scalar::{self, Scalar};

/// A norm whose unit ball is a centrally symmetric convex polygon with the
/// origin in its interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralNorm {
    ball: ConvexPolygon,
    // (a, b - a, a × b) for each CCW edge [a, b] of the ball
    edges: Vec<(Point, Point, Scalar)>,
}

impl PolyhedralNorm {
    pub fn new(ball: ConvexPolygon) -> Result<PolyhedralNorm> {
        let symmetric = ball
            .vertices()
            .iter()
            .all(|v| ball.vertices().contains(&-v));
        if !symmetric {
            return Err(GeomError::NotSymmetric);
        }
        if ball.contains_point(&Point::origin()) != Membership::Interior {
            return Err(GeomError::OriginNotInterior);
        }
        debug_assert!(ball.len() >= 4 && ball.len().is_multiple_of(2));
        let edges = ball
            .edges()
            .into_iter()
            .map(|e| {
                let d = &e.b - &e.a;
                let c = e.a.cross(&e.b);
                (e.a, d, c)
            })
            .collect();
        Ok(PolyhedralNorm { ball, edges })
    }

    /// Max norm, unit ball `[-1, 1]²`.
    pub fn linf() -> PolyhedralNorm {
        let ball = ConvexPolygon::rect(
            scalar::int(-1),
            scalar::int(-1),
            scalar::int(1),
            scalar::int(1),
        );
        PolyhedralNorm::new(ball).expect("square ball")
    }

    /// Taxicab norm, unit ball the diamond `|x| + |y| <= 1`.
    pub fn l1() -> PolyhedralNorm {
        let ball = ConvexPolygon::hull(&[
            Point::from_ints(1, 0),
            Point::from_ints(0, 1),
            Point::from_ints(-1, 0),
            Point::from_ints(0, -1),
        ])
        .expect("diamond");
        PolyhedralNorm::new(ball).expect("diamond ball")
    }

    pub fn unit_ball(&self) -> &ConvexPolygon {
        &self.ball
    }

    /// Minkowski functional of the unit ball: `min { t >= 0 : v ∈ t·ball }`.
    ///
    /// Finds the ball edge `[a, b]` whose cone contains `v` and intersects the
    /// ray through `v` with that edge's line.
    pub fn gauge(&self, v: &Point) -> Scalar {
        if v.is_origin() {
            return Scalar::zero();
        }
        for (a, d, c) in &self.edges {
            let b = a + d;
            if !a.cross(v).is_negative() && !v.cross(&b).is_negative() {
                return v.cross(d) / c;
            }
        }
        unreachable!("the edge cones of a ball around the origin cover the plane")
    }

    /// `gauge(q - p)`.
    pub fn dist(&self, p: &Point, q: &Point) -> Scalar {
        self.gauge(&(q - p))
    }

    /// Outward edge normals `ν` of the ball paired with `h(ν) = max ⟨ν, ball⟩`.
    pub fn facets(&self) -> Vec<(Point, Scalar)> {
        self.edges
            .iter()
            .map(|(_, d, c)| (Point::new(d.y.clone(), -&d.x), c.clone()))
            .collect()
    }

    /// Largest sup-norm coordinate of any ball vertex; `gauge(v) >= |v|∞ / R`.
    pub fn sup_radius(&self) -> Scalar {
        self.ball
            .vertices()
            .iter()
            .map(|v| scalar::max(&v.x.abs(), &v.y.abs()))
            .max()
            .expect("nonempty ball")
    }
}

/// Max of `⟨vertex, u⟩` over the polygon.
pub fn support(p: &ConvexPolygon, u: &Point) -> Result<Scalar> {
    if u.is_origin() {
        return Err(GeomError::ZeroDirection);
    }
    Ok(p.vertices()
        .iter()
        .map(|v| v.dot(u))
        .max()
        .expect("nonempty polygon"))
}

/// Inner/outer polyhedral bounds of the Euclidean norm.
///
/// `inner` has its vertices exactly on the unit circle, so its ball sits
/// inside the disc; `outer = ratio_bound · inner` contains the disc. Hence
/// `gauge(outer, v) <= |v| <= gauge(inner, v) = ratio_bound · gauge(outer, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormSandwich {
    pub inner: PolyhedralNorm,
    pub outer: PolyhedralNorm,
    pub ratio_bound: Scalar,
}

const TAN_DENOMINATOR: i64 = 1 << 24;

/// Regular-ish `2k`-gon with rational vertices on the unit circle plus a
/// certified outer scaling.
pub fn euclidean_approx(k: u32) -> Result<NormSandwich> {
    if k < 3 {
        return Err(GeomError::KTooSmall);
    }
    let one = Scalar::one();
    let two = scalar::int(2);
    let mut vertices = Vec::with_capacity(2 * k as usize);
    for j in 0..k {
        // t = tan(θ/2) for θ = jπ/k; the circle point depends only on t
        let t = tan_fraction_of_pi(j, 2 * k);
        let den = &one + &t * &t;
        let v = Point::new((&one - &t * &t) / &den, &two * &t / &den);
        vertices.push(-&v);
        vertices.push(v);
    }
    let ball = ConvexPolygon::hull(&vertices)?;
    debug_assert_eq!(ball.len(), 2 * k as usize);
    let inner = PolyhedralNorm::new(ball)?;

    // squared inradius of each edge [a, b] with |a| = |b| = 1 is (a×b)² / |b-a|²
    let worst = inner
        .unit_ball()
        .edges()
        .iter()
        .map(|e| {
            let d = &e.b - &e.a;
            let c = e.a.cross(&e.b);
            d.dot(&d) / (&c * &c)
        })
        .max()
        .expect("edges");
    let ratio_bound = scalar::sqrt_upper(&worst, &scalar::ratio(1, 1_000_000));
    let outer = PolyhedralNorm::new(inner.unit_ball().scale(&ratio_bound))?;
    Ok(NormSandwich {
        inner,
        outer,
        ratio_bound,
    })
}

/// Rational approximation (denominator 2^24) of `tan(j·π/n)` for `0 <= j/n < 1/2`,
/// evaluated with rational Taylor series.
fn tan_fraction_of_pi(j: u32, n: u32) -> Scalar {
    if j == 0 {
        return Scalar::zero();
    }
    let pi =
        scalar::parse("314159265358979323846264338327950288/100000000000000000000000000000000000")
            .expect("pi literal");
    let x = pi * scalar::ratio(j as i64, n as i64);
    let cutoff = scalar::ratio(1, 1_000_000_000_000_000_000);
    let mut sin = Scalar::zero();
    let mut cos = Scalar::zero();
    let mut term = Scalar::one();
    let mut k: i64 = 0;
    loop {
        // term = x^k / k!
        if k % 2 == 0 {
            let signed = if k % 4 == 0 { term.clone() } else { -&term };
            cos += signed;
        } else {
            let signed = if k % 4 == 1 { term.clone() } else { -&term };
            sin += signed;
        }
        k += 1;
        term = round_to(&(term * &x / scalar::int(k)), 1 << 62);
        if k > 2 && term.abs() < cutoff {
            break;
        }
    }
    round_to(&(sin / cos), TAN_DENOMINATOR)
}

fn round_to(v: &Scalar, den: i64) -> Scalar {
    let d = scalar::int(den);
    (v * &d).round() / d
}
