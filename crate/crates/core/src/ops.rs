//! Set-level operations under a polyhedral norm: neighborhoods, intersections,
//! point/set distances with projection witnesses, and Hausdorff distances.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::error::{GeomError, Result};
use crate::geom::{clip_ring, ConvexPolygon, Point, Segment};
use crate::norm::{support, PolyhedralNorm};
use crate::scalar::{self, Scalar};

/// `P ⊕ Q` by merging the edge sequences of both polygons in angular order.
pub fn minkowski_sum(p: &ConvexPolygon, q: &ConvexPolygon) -> ConvexPolygon {
    if p.is_point() {
        return q.translate(p.first());
    }
    if q.is_point() {
        return p.translate(q.first());
    }
    let (p0, pe) = edge_walk(p);
    let (q0, qe) = edge_walk(q);
    let mut cur = &p0 + &q0;
    let mut out = Vec::with_capacity(pe.len() + qe.len());
    let (mut i, mut j) = (0, 0);
    while i < pe.len() || j < qe.len() {
        out.push(cur.clone());
        let order = if j == qe.len() {
            Ordering::Less
        } else if i == pe.len() {
            Ordering::Greater
        } else {
            angle_cmp(&pe[i], &qe[j])
        };
        // parallel edges are merged so no collinear vertices appear
        match order {
            Ordering::Less => {
                cur = &cur + &pe[i];
                i += 1;
            }
            Ordering::Greater => {
                cur = &cur + &qe[j];
                j += 1;
            }
            Ordering::Equal => {
                cur = &cur + &(&pe[i] + &qe[j]);
                i += 1;
                j += 1;
            }
        }
    }
    debug_assert_eq!(cur, &p0 + &q0);
    ConvexPolygon::from_convex_loop(out)
}

/// Bottom-most (then left-most) vertex and the CCW edge vectors from it.
/// A segment is walked as a two-edge loop.
fn edge_walk(p: &ConvexPolygon) -> (Point, Vec<Point>) {
    let vs = p.vertices();
    let n = vs.len();
    let start = (0..n)
        .min_by(|&a, &b| (&vs[a].y, &vs[a].x).cmp(&(&vs[b].y, &vs[b].x)))
        .expect("nonempty");
    let edges = (0..n)
        .map(|k| &vs[(start + k + 1) % n] - &vs[(start + k) % n])
        .collect();
    (vs[start].clone(), edges)
}

/// Orders nonzero vectors by polar angle in `[0, 2π)`.
fn angle_cmp(a: &Point, b: &Point) -> Ordering {
    let half = |v: &Point| !(v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()));
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.cross(b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Closed neighborhood `{ p : |pA| <= r }`, i.e. `A ⊕ r·ball`.
pub fn neighborhood(a: &ConvexPolygon, r: &Scalar, n: &PolyhedralNorm) -> Result<ConvexPolygon> {
    if r.is_negative() {
        return Err(GeomError::NegativeRadius);
    }
    if r.is_zero() {
        return Ok(a.clone());
    }
    Ok(minkowski_sum(a, &n.unit_ball().scale(r)))
}

/// `P ∩ Q`, possibly a segment or a point; `None` when disjoint.
pub fn intersect(p: &ConvexPolygon, q: &ConvexPolygon) -> Option<ConvexPolygon> {
    let mut ring = p.vertices().to_vec();
    for h in q.halfplanes() {
        ring = clip_ring(&ring, &h);
        if ring.is_empty() {
            return None;
        }
    }
    Some(ConvexPolygon::hull(&ring).expect("nonempty"))
}

/// `P ⊆ Q`; checking vertices suffices since `Q` is convex.
pub fn subset_of(p: &ConvexPolygon, q: &ConvexPolygon) -> bool {
    p.vertices().iter().all(|v| q.contains_point(v).is_inside())
}

/// Distance from a point to a set together with one nearest point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceWitness {
    pub distance: Scalar,
    pub projection: Point,
}

/// Exact `|xP|` with the lexicographically smallest nearest point.
///
/// For `x` outside `P` the nearest points form an interval of `∂P` whose ends
/// are vertices of `P` or points `x - t·w` with `w` a ball vertex. Those are
/// the candidates.
pub fn point_distance(x: &Point, p: &ConvexPolygon, n: &PolyhedralNorm) -> DistanceWitness {
    if p.contains_point(x).is_inside() {
        return DistanceWitness {
            distance: Scalar::zero(),
            projection: x.clone(),
        };
    }
    let mut candidates: Vec<Point> = p.vertices().to_vec();
    for e in p.edges() {
        let d = &e.b - &e.a;
        let to_x = x - &e.a;
        for w in n.unit_ball().vertices() {
            let den = d.cross(w);
            if den.is_zero() {
                continue;
            }
            let t = to_x.cross(w) / den;
            if !t.is_negative() && t <= Scalar::from_integer(1.into()) {
                candidates.push(e.a.lerp(&e.b, &t));
            }
        }
    }
    let mut best: Option<DistanceWitness> = None;
    for c in candidates {
        let dist = n.dist(x, &c);
        let better = match &best {
            None => true,
            Some(b) => dist < b.distance || (dist == b.distance && c < b.projection),
        };
        if better {
            best = Some(DistanceWitness {
                distance: dist,
                projection: c,
            });
        }
    }
    best.expect("nonempty polygon")
}

/// `min { |ab| : a ∈ P, b ∈ Q }`; zero iff the sets meet.
///
/// When the sets are disjoint some minimizing pair has a vertex on one side,
/// so vertex-to-set distances in both directions suffice.
pub fn set_distance(p: &ConvexPolygon, q: &ConvexPolygon, n: &PolyhedralNorm) -> Scalar {
    if intersect(p, q).is_some() {
        return Scalar::zero();
    }
    let (to_q, to_p) = (DistanceField::new(q, n), DistanceField::new(p, n));
    let forward = p.vertices().iter().map(|v| to_q.eval(v));
    let backward = q.vertices().iter().map(|v| to_p.eval(v));
    forward.chain(backward).min().expect("nonempty polygons")
}

pub fn segment_distance(s: &Segment, p: &ConvexPolygon, n: &PolyhedralNorm) -> Scalar {
    set_distance(&s.to_polygon(), p, n)
}

/// `max_{x ∈ P} |xQ|`. `x ↦ |xQ|` is convex for convex `Q`, so the max over
/// the convex set `P` is attained at a vertex.
pub fn directed_hausdorff(p: &ConvexPolygon, q: &ConvexPolygon, n: &PolyhedralNorm) -> Scalar {
    let field = DistanceField::new(q, n);
    p.vertices()
        .iter()
        .map(|v| field.eval(v))
        .max()
        .expect("nonempty polygon")
}

pub fn hausdorff(p: &ConvexPolygon, q: &ConvexPolygon, n: &PolyhedralNorm) -> Scalar {
    scalar::max(&directed_hausdorff(p, q, n), &directed_hausdorff(q, p, n))
}

/// Hausdorff distance between two finite unions of convex polygons.
pub fn hausdorff_union(
    ps: &[ConvexPolygon],
    qs: &[ConvexPolygon],
    n: &PolyhedralNorm,
) -> Result<Scalar> {
    if ps.is_empty() || qs.is_empty() {
        return Err(GeomError::EmptyUnion);
    }
    Ok(scalar::max(
        &directed_union(ps, qs, n),
        &directed_union(qs, ps, n),
    ))
}

/// `max_{x ∈ ∪P} min_j |x Q_j|`.
pub fn directed_union(ps: &[ConvexPolygon], qs: &[ConvexPolygon], n: &PolyhedralNorm) -> Scalar {
    if let [q] = qs {
        return ps
            .iter()
            .map(|p| directed_hausdorff(p, q, n))
            .max()
            .expect("nonempty union");
    }
    let targets: Vec<DistanceField> = qs.iter().map(|q| DistanceField::new(q, n)).collect();
    let mut lines: BTreeSet<Line> = BTreeSet::new();
    let pieces: Vec<&Affine> = targets.iter().flat_map(|t| t.pieces.iter()).collect();
    for (i, a) in pieces.iter().enumerate() {
        for b in &pieces[i + 1..] {
            if let Some(l) = Line::normalized(a.sub(b)) {
                lines.insert(l);
            }
        }
    }
    let eval = |x: &Point| {
        targets
            .iter()
            .map(|t| t.eval(x))
            .min()
            .expect("nonempty union")
    };
    let mut best = Scalar::zero();
    for p in ps {
        // on each cell of the arrangement every distance field is affine and
        // the minimizing target is fixed, so the max sits at a cell vertex
        let mut all: Vec<Line> = lines.iter().cloned().collect();
        for e in p.edges() {
            if let Some(l) = Line::through(&e.a, &e.b) {
                if !lines.contains(&l) {
                    all.push(l);
                }
            }
        }
        for v in p.vertices() {
            let d = eval(v);
            if d > best {
                best = d;
            }
        }
        if p.is_point() {
            continue;
        }
        for (i, l1) in all.iter().enumerate() {
            for l2 in &all[i + 1..] {
                if let Some(x) = l1.meet(l2) {
                    if p.contains_point(&x).is_inside() {
                        let d = eval(&x);
                        if d > best {
                            best = d;
                        }
                    }
                }
            }
        }
    }
    best
}

/// `a·x + b·y + c`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Affine {
    a: Scalar,
    b: Scalar,
    c: Scalar,
}

impl Affine {
    fn eval(&self, x: &Point) -> Scalar {
        &self.a * &x.x + &self.b * &x.y + &self.c
    }

    fn sub(&self, o: &Affine) -> Affine {
        Affine {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            c: &self.c - &o.c,
        }
    }
}

/// `x ↦ |xQ|` as a max of affine pieces: zero plus one piece per edge
/// normal `ν` of `Q ⊕ ball`, `(⟨ν, x⟩ - h_Q(ν)) / h_ball(ν)`.
struct DistanceField {
    pieces: Vec<Affine>,
}

impl DistanceField {
    fn new(q: &ConvexPolygon, n: &PolyhedralNorm) -> DistanceField {
        let fan = minkowski_sum(q, n.unit_ball());
        let mut pieces = vec![Affine {
            a: Scalar::zero(),
            b: Scalar::zero(),
            c: Scalar::zero(),
        }];
        for e in fan.edges() {
            let d = &e.b - &e.a;
            let nu = Point::new(d.y.clone(), -&d.x);
            // the fan edge lies on the supporting line of Q ⊕ ball
            let hu = support(n.unit_ball(), &nu).expect("nonzero normal");
            let hq = nu.dot(&e.a) - &hu;
            pieces.push(Affine {
                a: &nu.x / &hu,
                b: &nu.y / &hu,
                c: -hq / &hu,
            });
        }
        DistanceField { pieces }
    }

    fn eval(&self, x: &Point) -> Scalar {
        self.pieces
            .iter()
            .map(|p| p.eval(x))
            .max()
            .expect("zero piece")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Line(Affine);

impl Line {
    /// Scales so the first nonzero of `(a, b)` is one; `None` for constants.
    fn normalized(f: Affine) -> Option<Line> {
        let lead = if !f.a.is_zero() {
            f.a.clone()
        } else if !f.b.is_zero() {
            f.b.clone()
        } else {
            return None;
        };
        Some(Line(Affine {
            a: &f.a / &lead,
            b: &f.b / &lead,
            c: &f.c / &lead,
        }))
    }

    fn through(p: &Point, q: &Point) -> Option<Line> {
        let d = q - p;
        Line::normalized(Affine {
            a: d.y.clone(),
            b: -&d.x,
            c: d.x.clone() * &p.y - &d.y * &p.x,
        })
    }

    fn meet(&self, o: &Line) -> Option<Point> {
        let (f, g) = (&self.0, &o.0);
        let det = &f.a * &g.b - &g.a * &f.b;
        if det.is_zero() {
            return None;
        }
        let x = (&f.b * &g.c - &g.b * &f.c) / &det;
        let y = (&f.c * &g.a - &g.c * &f.a) / &det;
        Some(Point::new(x, y))
    }
}
