//! Brute-force bracketing of Hausdorff distances on a rational grid.
//!
//! Each set is replaced by a finite sample lying inside it: the grid nodes on
//! every horizontal and vertical grid line it meets, plus the two endpoints of
//! each such chord. Every point of a convex set that is not trapped inside a
//! single open grid cell then has a sample in a closed cell containing it, so
//! the sample is `D`-dense with `D` the norm diameter of one cell. Comparing
//! samples therefore brackets the true distance within `±D`.
//!
//! Nothing here calls the distance machinery in [`crate::ops`]. A float copy
//! of the norm prunes candidates with a wide safety margin; every distance
//! that reaches the result is an exact gauge.

use std::collections::BTreeSet;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{GeomError, Result};
use crate::geom::{ConvexPolygon, Point};
use crate::norm::PolyhedralNorm;
use crate::scalar::{self, Scalar};

/// `lo <= d_H <= hi`, with `estimate` the sample-to-sample distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleInterval {
    pub lo: Scalar,
    pub hi: Scalar,
    pub estimate: Scalar,
    pub cell_diameter: Scalar,
}

impl OracleInterval {
    pub fn contains(&self, value: &Scalar) -> bool {
        self.lo <= *value && *value <= self.hi
    }

    pub fn width(&self) -> Scalar {
        &self.hi - &self.lo
    }
}

pub fn grid_oracle_hausdorff(
    ps: &[ConvexPolygon],
    qs: &[ConvexPolygon],
    n: &PolyhedralNorm,
    step: &Scalar,
) -> Result<OracleInterval> {
    if !step.is_positive() {
        return Err(GeomError::NonPositiveStep);
    }
    if ps.is_empty() || qs.is_empty() {
        return Err(GeomError::EmptyUnion);
    }
    let sp = sample_union(ps, step)?;
    let sq = sample_union(qs, step)?;
    let radius = n.sup_radius();
    let all: Vec<Point> = sp.iter().chain(&sq).cloned().collect();
    let approx = Approx::new(n, &all);
    let forward = directed(&sp, &Tree::new(&sq, step), n, &approx, &radius);
    let backward = directed(&sq, &Tree::new(&sp, step), n, &approx, &radius);
    let estimate = scalar::max(&forward, &backward);
    let cell_diameter = scalar::max(
        &n.gauge(&Point::new(step.clone(), step.clone())),
        &n.gauge(&Point::new(step.clone(), -step)),
    );
    let lo = scalar::max(&(&estimate - &cell_diameter), &Scalar::zero());
    let hi = &estimate + &cell_diameter;
    Ok(OracleInterval {
        lo,
        hi,
        estimate,
        cell_diameter,
    })
}

fn sample_union(parts: &[ConvexPolygon], step: &Scalar) -> Result<Vec<Point>> {
    let mut all = BTreeSet::new();
    for part in parts {
        let s = sample(part, step);
        if s.is_empty() {
            return Err(GeomError::GridTooCoarse);
        }
        all.extend(s);
    }
    Ok(all.into_iter().collect())
}

fn sample(part: &ConvexPolygon, step: &Scalar) -> BTreeSet<Point> {
    let mut out = BTreeSet::new();
    if part.is_point() {
        out.insert(part.first().clone());
        return out;
    }
    let swap = |p: &Point| Point::new(p.y.clone(), p.x.clone());
    let transposed: Vec<Point> = part.vertices().iter().map(swap).collect();
    for (verts, flip) in [(part.vertices().to_vec(), false), (transposed, true)] {
        for (line, lo, hi) in chords(&verts, step) {
            let mut push = |x: Scalar| {
                let p = Point::new(x, line.clone());
                out.insert(if flip { swap(&p) } else { p });
            };
            push(lo.clone());
            push(hi.clone());
            let mut i = (&lo / step).ceil().to_integer();
            let last = (&hi / step).floor().to_integer();
            while i <= last {
                push(Scalar::from_integer(i.clone()) * step);
                i += 1;
            }
        }
    }
    out
}

/// For each horizontal grid line `y = j·step` meeting the loop, the chord
/// `[lo, hi]` of x-values inside it.
fn chords(verts: &[Point], step: &Scalar) -> Vec<(Scalar, Scalar, Scalar)> {
    let ys = verts.iter().map(|v| &v.y);
    let y_min = ys.clone().min().expect("nonempty").clone();
    let y_max = ys.max().expect("nonempty").clone();
    let mut j = (&y_min / step).ceil().to_integer();
    let last = (&y_max / step).floor().to_integer();
    let n = verts.len();
    let mut out = Vec::new();
    while j <= last {
        let y = Scalar::from_integer(j.clone()) * step;
        let mut xs: Vec<Scalar> = Vec::new();
        for i in 0..n {
            let (a, b) = (&verts[i], &verts[(i + 1) % n]);
            if a.y == b.y {
                if a.y == y {
                    xs.push(a.x.clone());
                    xs.push(b.x.clone());
                }
                continue;
            }
            let (ylo, yhi) = if a.y < b.y {
                (&a.y, &b.y)
            } else {
                (&b.y, &a.y)
            };
            if *ylo <= y && y <= *yhi {
                xs.push(&a.x + (&y - &a.y) * (&b.x - &a.x) / (&b.y - &a.y));
            }
        }
        if let (Some(lo), Some(hi)) = (xs.iter().min(), xs.iter().max()) {
            out.push((y, lo.clone(), hi.clone()));
        }
        j += 1;
    }
    out
}

const LEAF: usize = 8;

/// Static 2-d tree over the target samples. Boxes are kept in grid-cell
/// indices so pruning never touches rational arithmetic.
struct Tree<'a> {
    step: &'a Scalar,
    step_f: f64,
    pts: Vec<(Point, (i64, i64), [f64; 2])>,
    nodes: Vec<Node>,
}

struct Node {
    lo: (i64, i64),
    hi: (i64, i64),
    range: (usize, usize),
    children: Option<(usize, usize)>,
}

impl<'a> Tree<'a> {
    fn new(points: &[Point], step: &'a Scalar) -> Tree<'a> {
        let pts = points
            .iter()
            .map(|p| (p.clone(), cell_of(p, step), to_float(p)))
            .collect();
        let step_f = step.to_f64().expect("finite");
        let mut tree = Tree {
            step,
            step_f,
            pts,
            nodes: Vec::new(),
        };
        let len = tree.pts.len();
        tree.build(0, len);
        tree
    }

    fn build(&mut self, start: usize, end: usize) -> usize {
        let cells = self.pts[start..end].iter().map(|(_, c, _)| *c);
        let lo = cells
            .clone()
            .fold((i64::MAX, i64::MAX), |a, c| (a.0.min(c.0), a.1.min(c.1)));
        let hi = cells.fold((i64::MIN, i64::MIN), |a, c| (a.0.max(c.0), a.1.max(c.1)));
        let id = self.nodes.len();
        self.nodes.push(Node {
            lo,
            hi,
            range: (start, end),
            children: None,
        });
        if end - start > LEAF {
            let slice = &mut self.pts[start..end];
            if hi.0 - lo.0 >= hi.1 - lo.1 {
                slice.sort_by_key(|(_, c, _)| c.0);
            } else {
                slice.sort_by_key(|(_, c, _)| c.1);
            }
            let mid = start + (end - start) / 2;
            let left = self.build(start, mid);
            let right = self.build(mid, end);
            self.nodes[id].children = Some((left, right));
        }
        id
    }

    /// Whole cells strictly between the query cell and the box, in sup-norm.
    fn gap(&self, node: usize, c: (i64, i64)) -> i64 {
        let n = &self.nodes[node];
        let axis = |v: i64, lo: i64, hi: i64| {
            if v < lo {
                lo - v - 1
            } else if v > hi {
                v - hi - 1
            } else {
                0
            }
        };
        axis(c.0, n.lo.0, n.hi.0).max(axis(c.1, n.lo.1, n.hi.1))
    }
}

fn cell_of(p: &Point, step: &Scalar) -> (i64, i64) {
    let idx =
        |v: &Scalar| i64::try_from((v / step).floor().to_integer()).expect("grid index overflow");
    (idx(&p.x), idx(&p.y))
}

fn to_float(p: &Point) -> [f64; 2] {
    [p.x.to_f64().expect("finite"), p.y.to_f64().expect("finite")]
}

/// Float copy of the norm, `gauge(v) = max_i ⟨w_i, v⟩` over scaled facet
/// normals. Used only to decide which exact gauges are worth evaluating.
struct Approx {
    normals: Vec<[f64; 2]>,
    // bound on the float error of any gauge or stored distance, kept far
    // above rounding noise
    tol: f64,
}

impl Approx {
    fn new(n: &PolyhedralNorm, points: &[Point]) -> Approx {
        let normals: Vec<[f64; 2]> = n
            .facets()
            .iter()
            .map(|(nu, h)| {
                [
                    (&nu.x / h).to_f64().expect("finite"),
                    (&nu.y / h).to_f64().expect("finite"),
                ]
            })
            .collect();
        let reach = points
            .iter()
            .map(|p| {
                let f = to_float(p);
                f[0].abs().max(f[1].abs())
            })
            .fold(0.0, f64::max);
        let weight = normals
            .iter()
            .map(|w| w[0].abs() + w[1].abs())
            .fold(0.0, f64::max);
        Approx {
            normals,
            tol: 1e-9 * (1.0 + reach * weight),
        }
    }

    fn gauge(&self, s: &[f64; 2], t: &[f64; 2]) -> f64 {
        let v = [t[0] - s[0], t[1] - s[1]];
        self.normals
            .iter()
            .map(|w| w[0] * v[0] + w[1] * v[1])
            .fold(f64::MIN, f64::max)
    }
}

struct Query<'q> {
    s: &'q Point,
    sf: [f64; 2],
    cell: (i64, i64),
    n: &'q PolyhedralNorm,
    approx: &'q Approx,
    radius: f64,
    worst: &'q Scalar,
    worst_f: f64,
    best: Option<(Scalar, f64)>,
    // prune boxes whose gap reaches this many cells
    cutoff: i64,
}

impl Query<'_> {
    /// Returns `true` once some target is within `worst`.
    fn visit(&mut self, tree: &Tree, node: usize) -> bool {
        if tree.gap(node, self.cell) >= self.cutoff {
            return false;
        }
        match tree.nodes[node].children {
            Some((l, r)) => {
                let (first, second) = if tree.gap(l, self.cell) <= tree.gap(r, self.cell) {
                    (l, r)
                } else {
                    (r, l)
                };
                self.visit(tree, first) || self.visit(tree, second)
            }
            None => {
                let (start, end) = tree.nodes[node].range;
                let tol = self.approx.tol;
                for (t, _, tf) in &tree.pts[start..end] {
                    let df = self.approx.gauge(&self.sf, tf);
                    if df + 2.0 * tol < self.worst_f {
                        return true;
                    }
                    if self
                        .best
                        .as_ref()
                        .is_some_and(|(_, bf)| df - 2.0 * tol > *bf)
                    {
                        continue;
                    }
                    let d = self.n.dist(self.s, t);
                    if d <= *self.worst {
                        return true;
                    }
                    if self.best.as_ref().is_none_or(|(b, _)| d < *b) {
                        // a gap of k cells forces a distance of at least k·step/radius
                        let reach = (df + 2.0 * tol) * self.radius / tree.step_f;
                        self.cutoff = if reach < 1e15 {
                            reach.ceil() as i64 + 1
                        } else {
                            i64::MAX
                        };
                        self.best = Some((d, df));
                    }
                }
                false
            }
        }
    }
}

/// `max_{s ∈ from} min_{t ∈ to} |s t|`, skipping a query as soon as it
/// cannot raise the running maximum.
fn directed(
    from: &[Point],
    to: &Tree,
    n: &PolyhedralNorm,
    approx: &Approx,
    radius: &Scalar,
) -> Scalar {
    let mut worst = Scalar::zero();
    let radius = radius.to_f64().expect("finite");
    for s in from {
        let mut q = Query {
            s,
            sf: to_float(s),
            cell: cell_of(s, to.step),
            n,
            approx,
            radius,
            worst: &worst,
            worst_f: worst.to_f64().expect("finite"),
            best: None,
            cutoff: i64::MAX,
        };
        if q.visit(to, 0) {
            continue;
        }
        worst = q.best.expect("nonempty target").0;
    }
    worst
}
