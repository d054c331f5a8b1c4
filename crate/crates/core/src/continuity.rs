//! Evaluation of `f(r) = B_r(A) ∩ B` and its one-sided continuity witnesses.
//!
//! For a radius `r` and tolerance `ε > 0`:
//!
//! - [`delta_right`] takes the part `K` of `∂B_ε(M) ∩ B` (with `M = f(r)`)
//!   and sets `δ = |K B_r(A)|`. Any `r' ∈ [r, r + δ)` keeps
//!   `d_H(f(r), f(r')) <= ε`. An empty `K` means `B ⊆ B_ε(M)` and every
//!   `r' >= r` works.
//! - [`delta_left`] contracts `M` toward a point `p ∈ U_r(A) ∩ B` by
//!   `g(x) = x + λ(p - x)` with `λ·L <= ε`, `L = max |p - x|`, and sets
//!   `δ = |g(M) ∂B_r(A)|`. Any `r' ∈ (r - δ, r]` in the domain keeps
//!   `g(M) ⊆ f(r')` and therefore `d_H(f(r), f(r')) <= ε`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{GeomError, Result};
use crate::geom::{ConvexPolygon, Point, Segment};
use crate::norm::PolyhedralNorm;
use crate::ops::{hausdorff, intersect, neighborhood, segment_distance, set_distance};
use crate::scalar::{self, Scalar};

/// `f(r)`, rejecting radii below `|A B|`.
pub fn f_eval(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    r: &Scalar,
    n: &PolyhedralNorm,
) -> Result<ConvexPolygon> {
    if *r < set_distance(a, b, n) {
        return Err(GeomError::RadiusBelowSetDistance);
    }
    f_unchecked(a, b, r, n)
}

/// `f(r)` for a radius already known to be in the domain.
fn f_unchecked(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    r: &Scalar,
    n: &PolyhedralNorm,
) -> Result<ConvexPolygon> {
    let ball = neighborhood(a, r, n)?;
    intersect(&ball, b).ok_or(GeomError::RadiusBelowSetDistance)
}

/// Witness radius; `Infinite` when every larger radius works.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Delta {
    Finite(Scalar),
    Infinite,
}

impl Delta {
    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            Delta::Finite(d) => Some(d),
            Delta::Infinite => None,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Delta::Finite(d) => d.is_positive(),
            Delta::Infinite => true,
        }
    }

    /// `min(self, cap)`.
    pub fn capped(&self, cap: &Scalar) -> Scalar {
        match self {
            Delta::Finite(d) => scalar::min(d, cap),
            Delta::Infinite => cap.clone(),
        }
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta::Finite(d) => write!(f, "{d}"),
            Delta::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightWitness {
    pub epsilon: Scalar,
    pub m: ConvexPolygon,
    /// `B ∩ ∂B_ε(M)`, one (possibly degenerate) segment per touched edge.
    pub k: Vec<Segment>,
    pub delta: Delta,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftWitness {
    pub epsilon: Scalar,
    pub m: ConvexPolygon,
    pub p: Point,
    pub lambda: Scalar,
    /// `max_{x ∈ M} |p - x|`.
    pub reach: Scalar,
    pub gm: ConvexPolygon,
    pub delta: Scalar,
}

fn check_epsilon(epsilon: &Scalar) -> Result<()> {
    if epsilon.is_positive() {
        Ok(())
    } else {
        Err(GeomError::NonPositiveEpsilon)
    }
}

pub fn delta_right(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    r: &Scalar,
    epsilon: &Scalar,
    n: &PolyhedralNorm,
) -> Result<RightWitness> {
    check_epsilon(epsilon)?;
    let m = f_eval(a, b, r, n)?;
    let grown = neighborhood(&m, epsilon, n)?;
    let k: Vec<Segment> = grown
        .edges()
        .iter()
        .filter_map(|e| b.clip_segment(e))
        .collect();
    let delta = if k.is_empty() {
        Delta::Infinite
    } else {
        let ball = neighborhood(a, r, n)?;
        let d = k
            .iter()
            .map(|s| segment_distance(s, &ball, n))
            .min()
            .expect("nonempty K");
        Delta::Finite(d)
    };
    debug_assert!(delta.is_positive(), "K meets B_r(A)");
    Ok(RightWitness {
        epsilon: epsilon.clone(),
        m,
        k,
        delta,
    })
}

pub fn delta_left(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    r: &Scalar,
    epsilon: &Scalar,
    n: &PolyhedralNorm,
) -> Result<LeftWitness> {
    check_epsilon(epsilon)?;
    let floor = set_distance(a, b, n);
    if *r <= floor {
        return Err(GeomError::LeftWitnessAtEndpoint);
    }
    // points of B at distance |A B| from A are exactly f(|A B|); take the
    // lexicographically smallest, which canonical order puts first
    let p = f_unchecked(a, b, &floor, n)?.first().clone();
    let m = f_unchecked(a, b, r, n)?;
    let reach = m
        .vertices()
        .iter()
        .map(|x| n.dist(x, &p))
        .max()
        .expect("nonempty M");
    let half = scalar::ratio(1, 2);
    let lambda = if reach.is_zero() {
        half
    } else {
        scalar::min(&(epsilon / &reach), &half)
    };
    let gm = m.affine(&(Scalar::one() - &lambda), &p.scale(&lambda));
    let ball = neighborhood(a, r, n)?;
    let delta = ball
        .edges()
        .iter()
        .map(|e| segment_distance(e, &gm, n))
        .min()
        .expect("two-dimensional ball");
    debug_assert!(delta.is_positive(), "g(M) touches the boundary of B_r(A)");
    Ok(LeftWitness {
        epsilon: epsilon.clone(),
        m,
        p,
        lambda,
        reach,
        gm,
        delta,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Result of sampling `d_H(f(r), f(r'))` on one side of `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulusReport {
    pub side: Side,
    pub r: Scalar,
    pub epsilon: Scalar,
    pub delta: Delta,
    pub r_primes: Vec<Scalar>,
    pub gaps: Vec<Scalar>,
    pub all_passed: bool,
    pub worst_gap: Scalar,
    /// Set when the side was not sampled.
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulusCheck {
    pub right: ModulusReport,
    pub left: ModulusReport,
}

impl ModulusCheck {
    pub fn all_passed(&self) -> bool {
        self.right.all_passed && self.left.all_passed
    }
}

pub const DEFAULT_SAMPLES: usize = 8;

/// Samples both witness intervals with the default cap of 1.
pub fn verify_modulus(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    r: &Scalar,
    epsilon: &Scalar,
    n: &PolyhedralNorm,
    samples: usize,
) -> Result<ModulusCheck> {
    verify_modulus_capped(a, b, r, epsilon, n, samples, &Scalar::one())
}

/// Checks `d_H(f(r), f(r')) <= ε` at `samples` equispaced radii in
/// `[r, r + min(δ_right, cap))` and in `(max(|A B|, r - δ_left), r]`.
pub fn verify_modulus_capped(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    r: &Scalar,
    epsilon: &Scalar,
    n: &PolyhedralNorm,
    samples: usize,
    cap: &Scalar,
) -> Result<ModulusCheck> {
    if samples == 0 {
        return Err(GeomError::ZeroSteps);
    }
    let right_w = delta_right(a, b, r, epsilon, n)?;
    let base = right_w.m.clone();
    let count = Scalar::from_integer((samples as i64).into());

    let span = right_w.delta.capped(cap);
    let r_primes: Vec<Scalar> = (0..samples)
        .map(|i| r + &span * Scalar::from_integer((i as i64).into()) / &count)
        .collect();
    let right = sample_side(
        a,
        b,
        n,
        &base,
        Side::Right,
        r,
        epsilon,
        right_w.delta,
        r_primes,
    )?;

    let floor = set_distance(a, b, n);
    let left = if *r == floor {
        ModulusReport {
            side: Side::Left,
            r: r.clone(),
            epsilon: epsilon.clone(),
            delta: Delta::Finite(Scalar::zero()),
            r_primes: Vec::new(),
            gaps: Vec::new(),
            all_passed: true,
            worst_gap: Scalar::zero(),
            note: Some("not applicable at domain endpoint".to_string()),
        }
    } else {
        let left_w = delta_left(a, b, r, epsilon, n)?;
        let lower = scalar::max(&floor, &(r - &left_w.delta));
        let span = scalar::min(&(r - &lower), cap);
        let r_primes: Vec<Scalar> = (0..samples)
            .map(|i| r - &span * Scalar::from_integer((i as i64).into()) / &count)
            .collect();
        sample_side(
            a,
            b,
            n,
            &base,
            Side::Left,
            r,
            epsilon,
            Delta::Finite(left_w.delta),
            r_primes,
        )?
    };
    Ok(ModulusCheck { right, left })
}

#[allow(clippy::too_many_arguments)]
fn sample_side(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    n: &PolyhedralNorm,
    base: &ConvexPolygon,
    side: Side,
    r: &Scalar,
    epsilon: &Scalar,
    delta: Delta,
    r_primes: Vec<Scalar>,
) -> Result<ModulusReport> {
    let gaps = r_primes
        .iter()
        .map(|rp| Ok(hausdorff(base, &f_unchecked(a, b, rp, n)?, n)))
        .collect::<Result<Vec<Scalar>>>()?;
    let worst_gap = gaps.iter().max().cloned().unwrap_or_else(Scalar::zero);
    Ok(ModulusReport {
        side,
        r: r.clone(),
        epsilon: epsilon.clone(),
        delta,
        all_passed: worst_gap <= *epsilon,
        r_primes,
        gaps,
        worst_gap,
        note: None,
    })
}

/// One row of a modulus table: `gap = d_H(f(r), f(r_next))`,
/// `ratio = gap / (r_next - r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub r: Scalar,
    pub r_next: Scalar,
    pub gap: Scalar,
    pub ratio: Scalar,
}

impl ScanRow {
    pub(crate) fn new(r: Scalar, r_next: Scalar, gap: Scalar) -> ScanRow {
        let ratio = &gap / (&r_next - &r);
        ScanRow {
            r,
            r_next,
            gap,
            ratio,
        }
    }
}

/// Rows `(r, r + h)` for each listed radius.
pub fn modulus_table(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    n: &PolyhedralNorm,
    radii: &[Scalar],
    h: &Scalar,
) -> Result<Vec<ScanRow>> {
    if !h.is_positive() {
        return Err(GeomError::BadRange);
    }
    let floor = set_distance(a, b, n);
    let mut rows = Vec::with_capacity(radii.len());
    for r in radii {
        if *r < floor {
            return Err(GeomError::RadiusBelowSetDistance);
        }
        let next = r + h;
        let gap = hausdorff(&f_unchecked(a, b, r, n)?, &f_unchecked(a, b, &next, n)?, n);
        rows.push(ScanRow::new(r.clone(), next, gap));
    }
    Ok(rows)
}

/// `steps` consecutive rows over the equispaced grid of `[r_lo, r_hi]`.
pub fn modulus_scan(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    n: &PolyhedralNorm,
    r_lo: &Scalar,
    r_hi: &Scalar,
    steps: usize,
) -> Result<Vec<ScanRow>> {
    if steps == 0 {
        return Err(GeomError::ZeroSteps);
    }
    if r_hi <= r_lo {
        return Err(GeomError::BadRange);
    }
    if *r_lo < set_distance(a, b, n) {
        return Err(GeomError::RadiusBelowSetDistance);
    }
    let grid = equispaced(r_lo, r_hi, steps);
    let sets = grid
        .iter()
        .map(|r| f_unchecked(a, b, r, n))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..steps)
        .map(|i| {
            ScanRow::new(
                grid[i].clone(),
                grid[i + 1].clone(),
                hausdorff(&sets[i], &sets[i + 1], n),
            )
        })
        .collect())
}

/// `steps + 1` points from `lo` to `hi` inclusive.
pub(crate) fn equispaced(lo: &Scalar, hi: &Scalar, steps: usize) -> Vec<Scalar> {
    let count = Scalar::from_integer((steps as i64).into());
    (0..=steps)
        .map(|i| lo + (hi - lo) * Scalar::from_integer((i as i64).into()) / &count)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::subset_of;
    use crate::scalar::{int, ratio};

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn worked() -> (ConvexPolygon, ConvexPolygon, PolyhedralNorm) {
        (
            ConvexPolygon::rect(int(0), int(0), int(1), int(1)),
            ConvexPolygon::rect(int(2), int(0), int(3), int(1)),
            PolyhedralNorm::linf(),
        )
    }

    #[test]
    fn f_eval_examples() {
        let (a, b, n) = worked();
        assert_eq!(
            f_eval(&a, &b, &int(1), &n).unwrap(),
            ConvexPolygon::hull(&[p(2, 0), p(2, 1)]).unwrap()
        );
        assert_eq!(
            f_eval(&a, &b, &ratio(3, 2), &n).unwrap(),
            ConvexPolygon::rect(int(2), int(0), ratio(5, 2), int(1))
        );
        assert_eq!(f_eval(&a, &b, &int(10), &n).unwrap(), b);
        assert_eq!(
            f_eval(&a, &b, &ratio(1, 2), &n),
            Err(GeomError::RadiusBelowSetDistance)
        );
    }

    #[test]
    fn delta_right_worked_instance() {
        let (a, b, n) = worked();
        let w = delta_right(&a, &b, &int(1), &ratio(1, 4), &n).unwrap();
        let x = ratio(9, 4);
        assert_eq!(
            w.k,
            vec![Segment::new(
                Point::new(x.clone(), int(0)),
                Point::new(x, int(1))
            )]
        );
        assert_eq!(w.delta, Delta::Finite(ratio(1, 4)));
        for rp in [ratio(17, 16), ratio(9, 8), ratio(19, 16)] {
            let gap = hausdorff(&w.m, &f_eval(&a, &b, &rp, &n).unwrap(), &n);
            assert_eq!(gap, &rp - int(1));
            assert!(gap <= ratio(1, 4));
        }
    }

    #[test]
    fn delta_right_empty_k() {
        let n = PolyhedralNorm::linf();
        let a = ConvexPolygon::rect(int(0), int(0), int(1), int(1));
        let b = ConvexPolygon::rect(ratio(1, 4), ratio(1, 4), ratio(3, 4), ratio(3, 4));
        let w = delta_right(&a, &b, &int(0), &ratio(1, 4), &n).unwrap();
        assert!(w.k.is_empty());
        assert_eq!(w.delta, Delta::Infinite);
        assert_eq!(w.delta.to_string(), "inf");
    }

    #[test]
    fn delta_right_rejects_bad_inputs() {
        let (a, b, n) = worked();
        assert_eq!(
            delta_right(&a, &b, &int(1), &int(0), &n),
            Err(GeomError::NonPositiveEpsilon)
        );
        assert_eq!(
            delta_right(&a, &b, &ratio(1, 2), &int(1), &n),
            Err(GeomError::RadiusBelowSetDistance)
        );
    }

    #[test]
    fn delta_left_worked_instance() {
        let (a, b, n) = worked();
        let r = ratio(3, 2);
        let w = delta_left(&a, &b, &r, &ratio(1, 4), &n).unwrap();
        assert_eq!(w.p, p(2, 0));
        assert_eq!(w.reach, int(1));
        assert_eq!(w.lambda, ratio(1, 4));
        assert_eq!(
            w.gm,
            ConvexPolygon::rect(int(2), int(0), ratio(19, 8), ratio(3, 4))
        );
        assert_eq!(w.delta, ratio(1, 8));
        for rp in [&r - ratio(1, 16), &r - ratio(1, 10)] {
            let f_rp = f_eval(&a, &b, &rp, &n).unwrap();
            let gap = hausdorff(&f_rp, &w.m, &n);
            assert_eq!(gap, &r - &rp);
            assert!(subset_of(&w.gm, &f_rp));
        }
    }

    #[test]
    fn delta_left_degenerate_fixed_point() {
        let n = PolyhedralNorm::linf();
        let a = ConvexPolygon::rect(int(0), int(0), int(1), int(1));
        let b = ConvexPolygon::point(p(3, 0));
        let w = delta_left(&a, &b, &int(3), &ratio(1, 4), &n).unwrap();
        assert_eq!(w.reach, int(0));
        assert_eq!(w.lambda, ratio(1, 2));
        assert_eq!(w.gm, b);
        // (3, 0) sits 1 inside the right edge x = 4 of [-3, 4]²
        assert_eq!(w.delta, int(1));
    }

    #[test]
    fn delta_left_needs_r_above_floor() {
        let (a, b, n) = worked();
        assert_eq!(
            delta_left(&a, &b, &int(1), &ratio(1, 4), &n),
            Err(GeomError::LeftWitnessAtEndpoint)
        );
    }

    #[test]
    fn verify_modulus_worked_instance() {
        let (a, b, n) = worked();
        for r in [int(1), ratio(3, 2), int(2)] {
            let check = verify_modulus(&a, &b, &r, &ratio(1, 4), &n, DEFAULT_SAMPLES).unwrap();
            assert!(check.all_passed(), "r = {r}");
            assert_eq!(check.right.r_primes.len(), 8);
        }
        let at_floor = verify_modulus(&a, &b, &int(1), &ratio(1, 4), &n, 8).unwrap();
        assert!(at_floor.left.note.is_some());
        assert!(at_floor.left.r_primes.is_empty());
    }

    #[test]
    fn verify_modulus_huge_epsilon() {
        let (a, b, n) = worked();
        let check = verify_modulus(&a, &b, &ratio(3, 2), &int(1_000_000), &n, 8).unwrap();
        assert!(check.all_passed());
        assert_eq!(check.right.delta, Delta::Infinite);
    }

    #[test]
    fn scan_examples() {
        let (a, b, n) = worked();
        let same = modulus_scan(&a, &a, &n, &int(0), &int(2), 4).unwrap();
        assert!(same.iter().all(|row| row.gap.is_zero()));
        let rows = modulus_scan(&a, &b, &n, &int(1), &int(2), 4).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|row| row.ratio == int(1)));
        assert_eq!(
            modulus_scan(&a, &b, &n, &int(1), &int(2), 0),
            Err(GeomError::ZeroSteps)
        );
        assert_eq!(
            modulus_scan(&a, &b, &n, &int(2), &int(1), 3),
            Err(GeomError::BadRange)
        );
        assert_eq!(
            modulus_scan(&a, &b, &n, &int(0), &int(1), 3),
            Err(GeomError::RadiusBelowSetDistance)
        );
    }
}
