//! Exact planar convex geometry over polyhedral norms.
//!
//! The central object is the map `f(r) = B_r(A) ∩ B` for convex compacts
//! `A`, `B`: the part of `B` within distance `r` of `A`. The crate evaluates
//! it exactly over rationals, measures it in the Hausdorff metric, and builds
//! explicit one-sided continuity witnesses (`δ` for a given `ε`).
//!
//! Modules, bottom up:
//! - [`scalar`], [`geom`]: rationals, points, canonical convex polygons.
//! - [`norm`]: polyhedral norms and Euclidean sandwiches.
//! - [`ops`]: neighborhoods, intersections, distances, Hausdorff metric.
//! - [`continuity`]: `f`, the witnesses, modulus checks and scans.
//! - [`oracle`]: brute-force grid bracketing of Hausdorff distances.
//! - [`scenarios`]: the built-in gap and jump instances.
//! - [`scene`]: JSON scene files.

pub mod continuity;
pub mod error;
pub mod geom;
pub mod norm;
pub mod ops;
pub mod oracle;
pub mod scalar;
pub mod scenarios;
pub mod scene;

pub use continuity::ModulusCheck;
pub use continuity::{
    delta_left, delta_right, f_eval, modulus_scan, modulus_table, verify_modulus, Delta,
    LeftWitness, ModulusReport, RightWitness, ScanRow, Side,
};
pub use error::{GeomError, Result};
pub use geom::{orientation, ConvexPolygon, Membership, Point, Segment, Sign};
pub use norm::{euclidean_approx, support, NormSandwich, PolyhedralNorm};
pub use ops::{
    hausdorff, hausdorff_union, intersect, minkowski_sum, neighborhood, point_distance,
    segment_distance, set_distance, subset_of, DistanceWitness,
};
pub use oracle::{grid_oracle_hausdorff, OracleInterval};
pub use scalar::Scalar;
pub use scenarios::{
    f_union_eval, figure1_scenario, figure1_scene, figure2_scenario, figure2_scene,
    union_modulus_scan, Figure1Report, Figure2Report, JumpReport, Scene,
};
pub use scene::SceneError;
pub use scene::{SceneFile, SceneNorm};
