//! Built-in instances: the super-linear gap of `f` for convex inputs and the
//! jump of `f` when `B` is a union of separated pieces.

use num_traits::Zero;

use crate::continuity::{modulus_table, ScanRow};
use crate::error::{GeomError, Result};
use crate::geom::{ConvexPolygon, Point};
use crate::norm::PolyhedralNorm;
use crate::ops::{hausdorff_union, intersect, neighborhood, point_distance, set_distance};
use crate::scalar::{int, ratio, Scalar};
use crate::scene::{SceneFile, SceneNorm};

/// A problem instance; `b_parts` of length one is the convex case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scene {
    pub norm: SceneNorm,
    pub a: ConvexPolygon,
    pub b_parts: Vec<ConvexPolygon>,
    pub r_range: (Scalar, Scalar),
    pub label: String,
}

impl Scene {
    pub fn to_scene_file(&self) -> SceneFile {
        SceneFile {
            norm: self.norm.clone(),
            a: self.a.clone(),
            b_parts: self.b_parts.clone(),
            r: None,
            r_range: Some(self.r_range.clone()),
            epsilon: None,
            label: Some(self.label.clone()),
        }
    }
}

/// `f` on a union: the nonempty pieces `B_r(A) ∩ B_i`.
pub fn f_union_eval(
    a: &ConvexPolygon,
    b_parts: &[ConvexPolygon],
    r: &Scalar,
    n: &PolyhedralNorm,
) -> Result<Vec<ConvexPolygon>> {
    if b_parts.is_empty() {
        return Err(GeomError::EmptyUnion);
    }
    let floor = b_parts
        .iter()
        .map(|b| set_distance(a, b, n))
        .min()
        .expect("nonempty union");
    if *r < floor {
        return Err(GeomError::RadiusBelowUnionDistance);
    }
    let ball = neighborhood(a, r, n)?;
    Ok(b_parts.iter().filter_map(|b| intersect(&ball, b)).collect())
}

/// Union analogue of [`crate::continuity::modulus_scan`].
pub fn union_modulus_scan(
    a: &ConvexPolygon,
    b_parts: &[ConvexPolygon],
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
    let grid = crate::continuity::equispaced(r_lo, r_hi, steps);
    let sets = grid
        .iter()
        .map(|r| f_union_eval(a, b_parts, r, n))
        .collect::<Result<Vec<_>>>()?;
    (0..steps)
        .map(|i| {
            let gap = hausdorff_union(&sets[i], &sets[i + 1], n)?;
            Ok(ScanRow::new(grid[i].clone(), grid[i + 1].clone(), gap))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Figure1Report {
    pub scene: Scene,
    pub table: Vec<ScanRow>,
    pub max_ratio: Scalar,
}

impl Figure1Report {
    /// Every tested row moved by strictly more than its radius step.
    pub fn certified_strictly_greater_than_one(&self) -> bool {
        !self.table.is_empty() && self.table.iter().all(|row| row.ratio > int(1))
    }
}

/// `A = [0,8]×{0}`, `B` the triangle `(0,1), (8,2), (0,3)` under L∞.
///
/// For `1 < r < 2` the top of `B_r(A)` is the line `y = r`, which cuts `B`'s
/// lower edge of slope 1/8. Raising `r` by `h` moves the cut corner `8h`
/// sideways, so `d_H(f(r), f(r + h)) = 8h`.
pub fn figure1_scenario() -> Result<Figure1Report> {
    let scene = figure1_scene();
    let n = scene.norm.resolve()?;
    let radii = [ratio(5, 4), ratio(3, 2), ratio(7, 4)];
    let table = modulus_table(&scene.a, &scene.b_parts[0], &n, &radii, &ratio(1, 32))?;
    let max_ratio = table
        .iter()
        .map(|row| row.ratio.clone())
        .max()
        .expect("rows");
    Ok(Figure1Report {
        scene,
        table,
        max_ratio,
    })
}

pub fn figure1_scene() -> Scene {
    let a =
        ConvexPolygon::hull(&[Point::from_ints(0, 0), Point::from_ints(8, 0)]).expect("segment");
    let b = ConvexPolygon::hull(&[
        Point::from_ints(0, 1),
        Point::from_ints(8, 2),
        Point::from_ints(0, 3),
    ])
    .expect("triangle");
    Scene {
        norm: SceneNorm::Linf,
        a,
        b_parts: vec![b],
        r_range: (int(1), int(2)),
        label: "figure1: oblique exit through a slope-1/8 edge".to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpReport {
    pub threshold: Scalar,
    pub deltas: Vec<Scalar>,
    /// `gaps[i] = d_H(f(threshold - deltas[i]), f(threshold))` over unions.
    pub gaps: Vec<Scalar>,
    pub jump_lower_bound: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Figure2Report {
    pub scene: Scene,
    pub jump: JumpReport,
    /// Same radii with `B` replaced by the convex hull of its parts.
    pub control_scene: Scene,
    pub control_gaps: Vec<Scalar>,
}

/// `A = [0,1]²` under L∞; `B` is `[-2,-1]×[0,1]` (at distance 1) together with
/// the lone point `(3, 1/2)` (at distance 2). At `ρ = 2` the point joins
/// `f`, four units away from everything else `f` contains.
pub fn figure2_scenario() -> Result<Figure2Report> {
    let scene = figure2_scene();
    let n = scene.norm.resolve()?;
    let threshold = int(2);
    let deltas: Vec<Scalar> = [2, 4, 8, 16, 32].iter().map(|&d| ratio(1, d)).collect();

    let near = &scene.b_parts[0];
    let far = scene.b_parts[1].first().clone();
    let jump_lower_bound = point_distance(&far, near, &n).distance;

    let gaps_for = |parts: &[ConvexPolygon]| -> Result<Vec<Scalar>> {
        let at = f_union_eval(&scene.a, parts, &threshold, &n)?;
        deltas
            .iter()
            .map(|d| {
                hausdorff_union(
                    &f_union_eval(&scene.a, parts, &(&threshold - d), &n)?,
                    &at,
                    &n,
                )
            })
            .collect()
    };
    let gaps = gaps_for(&scene.b_parts)?;
    debug_assert!(gaps.iter().all(|g| *g >= jump_lower_bound) && !jump_lower_bound.is_zero());

    let hull_pts: Vec<Point> = scene
        .b_parts
        .iter()
        .flat_map(|p| p.vertices().to_vec())
        .collect();
    let control_scene = Scene {
        b_parts: vec![ConvexPolygon::hull(&hull_pts)?],
        label: "figure2 control: B replaced by its convex hull".to_string(),
        ..scene.clone()
    };
    let control_gaps = gaps_for(&control_scene.b_parts)?;

    Ok(Figure2Report {
        scene,
        jump: JumpReport {
            threshold,
            deltas,
            gaps,
            jump_lower_bound,
        },
        control_scene,
        control_gaps,
    })
}

pub fn figure2_scene() -> Scene {
    let a = ConvexPolygon::rect(int(0), int(0), int(1), int(1));
    let near = ConvexPolygon::rect(int(-2), int(0), int(-1), int(1));
    let far = ConvexPolygon::point(Point::new(int(3), ratio(1, 2)));
    Scene {
        norm: SceneNorm::Linf,
        a,
        b_parts: vec![near, far],
        r_range: (ratio(3, 2), ratio(5, 2)),
        label: "figure2: a far component appears at r = 2".to_string(),
    }
}
