//! Python module `hlab`. Scalars cross the boundary as `fractions.Fraction`
//! (plain ints are accepted on input); points are `(x, y)` tuples.

use hlab_core::{self as core, GeomError, Scalar};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(
    hlab,
    GeometryError,
    PyValueError,
    "Invalid geometric input."
);
create_exception!(
    hlab,
    DomainError,
    GeometryError,
    "Query outside the domain of f."
);

type Pt = (Scalar, Scalar);

fn err(e: GeomError) -> PyErr {
    if e.is_domain_violation() {
        DomainError::new_err(e.to_string())
    } else {
        GeometryError::new_err(e.to_string())
    }
}

fn pt(p: Pt) -> core::Point {
    core::Point::new(p.0, p.1)
}

fn tup(p: &core::Point) -> Pt {
    (p.x.clone(), p.y.clone())
}

#[pyclass(
    frozen,
    eq,
    hash,
    from_py_object,
    name = "ConvexPolygon",
    module = "hlab"
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Polygon(core::ConvexPolygon);

#[pymethods]
impl Polygon {
    /// Vertex loop in either orientation; must be convex.
    #[new]
    fn new(vertices: Vec<Pt>) -> PyResult<Self> {
        let pts: Vec<core::Point> = vertices.into_iter().map(pt).collect();
        core::ConvexPolygon::from_vertices(&pts)
            .map(Polygon)
            .map_err(err)
    }

    #[staticmethod]
    fn hull(points: Vec<Pt>) -> PyResult<Self> {
        let pts: Vec<core::Point> = points.into_iter().map(pt).collect();
        core::ConvexPolygon::hull(&pts).map(Polygon).map_err(err)
    }

    #[getter]
    fn vertices(&self) -> Vec<Pt> {
        self.0.vertices().iter().map(tup).collect()
    }

    /// "interior", "boundary" or "outside".
    fn locate(&self, point: Pt) -> &'static str {
        match self.0.contains_point(&pt(point)) {
            core::Membership::Interior => "interior",
            core::Membership::Boundary => "boundary",
            core::Membership::Outside => "outside",
        }
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("ConvexPolygon({})", self.0)
    }
}

#[pyclass(frozen, skip_from_py_object, name = "Norm", module = "hlab")]
#[derive(Clone)]
struct Norm(core::PolyhedralNorm);

#[pymethods]
impl Norm {
    #[staticmethod]
    fn linf() -> Self {
        Norm(core::PolyhedralNorm::linf())
    }

    #[staticmethod]
    fn l1() -> Self {
        Norm(core::PolyhedralNorm::l1())
    }

    /// Norm with the given centrally symmetric unit ball.
    #[staticmethod]
    fn from_ball(ball: &Polygon) -> PyResult<Self> {
        core::PolyhedralNorm::new(ball.0.clone())
            .map(Norm)
            .map_err(err)
    }

    /// `(inner, outer, ratio_bound)` bracketing the Euclidean norm.
    #[staticmethod]
    fn euclidean_approx(k: u32) -> PyResult<(Norm, Norm, Scalar)> {
        let s = core::euclidean_approx(k).map_err(err)?;
        Ok((Norm(s.inner), Norm(s.outer), s.ratio_bound))
    }

    #[getter]
    fn ball(&self) -> Polygon {
        Polygon(self.0.unit_ball().clone())
    }

    fn gauge(&self, v: Pt) -> Scalar {
        self.0.gauge(&pt(v))
    }

    fn dist(&self, p: Pt, q: Pt) -> Scalar {
        self.0.dist(&pt(p), &pt(q))
    }
}

fn polys(parts: &[core::ConvexPolygon]) -> Vec<Polygon> {
    parts.iter().cloned().map(Polygon).collect()
}

fn unwrap_all(parts: &[Polygon]) -> Vec<core::ConvexPolygon> {
    parts.iter().map(|p| p.0.clone()).collect()
}

#[pyfunction]
fn minkowski_sum(p: &Polygon, q: &Polygon) -> Polygon {
    Polygon(core::minkowski_sum(&p.0, &q.0))
}

#[pyfunction]
fn neighborhood(a: &Polygon, r: Scalar, n: &Norm) -> PyResult<Polygon> {
    core::neighborhood(&a.0, &r, &n.0).map(Polygon).map_err(err)
}

#[pyfunction]
fn intersect(p: &Polygon, q: &Polygon) -> Option<Polygon> {
    core::intersect(&p.0, &q.0).map(Polygon)
}

/// `(distance, nearest point)`.
#[pyfunction]
fn point_distance(x: Pt, p: &Polygon, n: &Norm) -> (Scalar, Pt) {
    let w = core::point_distance(&pt(x), &p.0, &n.0);
    (w.distance, tup(&w.projection))
}

#[pyfunction]
fn set_distance(p: &Polygon, q: &Polygon, n: &Norm) -> Scalar {
    core::set_distance(&p.0, &q.0, &n.0)
}

#[pyfunction]
fn hausdorff(p: &Polygon, q: &Polygon, n: &Norm) -> Scalar {
    core::hausdorff(&p.0, &q.0, &n.0)
}

#[pyfunction]
fn hausdorff_union(ps: Vec<Polygon>, qs: Vec<Polygon>, n: &Norm) -> PyResult<Scalar> {
    core::hausdorff_union(&unwrap_all(&ps), &unwrap_all(&qs), &n.0).map_err(err)
}

#[pyfunction]
fn f_eval(a: &Polygon, b: &Polygon, r: Scalar, n: &Norm) -> PyResult<Polygon> {
    core::f_eval(&a.0, &b.0, &r, &n.0).map(Polygon).map_err(err)
}

#[pyfunction]
fn f_union_eval(a: &Polygon, b_parts: Vec<Polygon>, r: Scalar, n: &Norm) -> PyResult<Vec<Polygon>> {
    core::f_union_eval(&a.0, &unwrap_all(&b_parts), &r, &n.0)
        .map(|v| polys(&v))
        .map_err(err)
}

fn delta_value(py: Python<'_>, d: &core::Delta) -> PyResult<Py<PyAny>> {
    Ok(match d.finite() {
        Some(v) => v.into_pyobject(py)?.unbind(),
        None => f64::INFINITY.into_pyobject(py)?.into_any().unbind(),
    })
}

/// Keys `delta` (`math.inf` when K is empty), `M`, `K`.
#[pyfunction]
fn delta_right<'py>(
    py: Python<'py>,
    a: &Polygon,
    b: &Polygon,
    r: Scalar,
    epsilon: Scalar,
    n: &Norm,
) -> PyResult<Bound<'py, PyDict>> {
    let w = core::delta_right(&a.0, &b.0, &r, &epsilon, &n.0).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("delta", delta_value(py, &w.delta)?)?;
    d.set_item("M", Polygon(w.m))?;
    let k: Vec<(Pt, Pt)> = w.k.iter().map(|s| (tup(&s.a), tup(&s.b))).collect();
    d.set_item("K", k)?;
    Ok(d)
}

/// Keys `delta`, `M`, `p`, `lambda`, `reach`, `gM`.
#[pyfunction]
fn delta_left<'py>(
    py: Python<'py>,
    a: &Polygon,
    b: &Polygon,
    r: Scalar,
    epsilon: Scalar,
    n: &Norm,
) -> PyResult<Bound<'py, PyDict>> {
    let w = core::delta_left(&a.0, &b.0, &r, &epsilon, &n.0).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("delta", w.delta)?;
    d.set_item("M", Polygon(w.m))?;
    d.set_item("p", tup(&w.p))?;
    d.set_item("lambda", w.lambda)?;
    d.set_item("reach", w.reach)?;
    d.set_item("gM", Polygon(w.gm))?;
    Ok(d)
}

/// `(right_passed, left_passed)` with 8 samples per side.
#[pyfunction]
fn verify_modulus(
    a: &Polygon,
    b: &Polygon,
    r: Scalar,
    epsilon: Scalar,
    n: &Norm,
) -> PyResult<(bool, bool)> {
    let c = core::verify_modulus(
        &a.0,
        &b.0,
        &r,
        &epsilon,
        &n.0,
        core::continuity::DEFAULT_SAMPLES,
    )
    .map_err(err)?;
    Ok((c.right.all_passed, c.left.all_passed))
}

#[pyfunction]
fn figure1(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let rep = core::figure1_scenario().map_err(err)?;
    let d = PyDict::new(py);
    let rows: Vec<(Scalar, Scalar, Scalar, Scalar)> = rep
        .table
        .iter()
        .map(|r| {
            (
                r.r.clone(),
                r.r_next.clone(),
                r.gap.clone(),
                r.ratio.clone(),
            )
        })
        .collect();
    d.set_item("table", rows)?;
    d.set_item(
        "certified_strictly_greater_than_one",
        rep.certified_strictly_greater_than_one(),
    )?;
    d.set_item("max_ratio", rep.max_ratio)?;
    Ok(d)
}

#[pyfunction]
fn figure2(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let rep = core::figure2_scenario().map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("threshold", rep.jump.threshold)?;
    d.set_item("deltas", rep.jump.deltas)?;
    d.set_item("gaps", rep.jump.gaps)?;
    d.set_item("jump_lower_bound", rep.jump.jump_lower_bound)?;
    d.set_item("control_gaps", rep.control_gaps)?;
    Ok(d)
}

/// Keys `norm`, `A`, `B`, and `r`, `r_range`, `epsilon`, `label` (None when absent).
#[pyfunction]
fn load_scene(py: Python<'_>, path: std::path::PathBuf) -> PyResult<Bound<'_, PyDict>> {
    let s = core::SceneFile::load(&path).map_err(|e| GeometryError::new_err(e.to_string()))?;
    let d = PyDict::new(py);
    d.set_item("norm", Norm(s.norm.resolve().map_err(err)?))?;
    d.set_item("A", Polygon(s.a))?;
    d.set_item("B", polys(&s.b_parts))?;
    d.set_item("r", s.r)?;
    d.set_item("r_range", s.r_range)?;
    d.set_item("epsilon", s.epsilon)?;
    d.set_item("label", s.label)?;
    Ok(d)
}

#[pymodule]
fn hlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("GeometryError", py.get_type::<GeometryError>())?;
    m.add("DomainError", py.get_type::<DomainError>())?;
    m.add_class::<Polygon>()?;
    m.add_class::<Norm>()?;
    m.add_function(wrap_pyfunction!(minkowski_sum, m)?)?;
    m.add_function(wrap_pyfunction!(neighborhood, m)?)?;
    m.add_function(wrap_pyfunction!(intersect, m)?)?;
    m.add_function(wrap_pyfunction!(point_distance, m)?)?;
    m.add_function(wrap_pyfunction!(set_distance, m)?)?;
    m.add_function(wrap_pyfunction!(hausdorff, m)?)?;
    m.add_function(wrap_pyfunction!(hausdorff_union, m)?)?;
    m.add_function(wrap_pyfunction!(f_eval, m)?)?;
    m.add_function(wrap_pyfunction!(f_union_eval, m)?)?;
    m.add_function(wrap_pyfunction!(delta_right, m)?)?;
    m.add_function(wrap_pyfunction!(delta_left, m)?)?;
    m.add_function(wrap_pyfunction!(verify_modulus, m)?)?;
    m.add_function(wrap_pyfunction!(figure1, m)?)?;
    m.add_function(wrap_pyfunction!(figure2, m)?)?;
    m.add_function(wrap_pyfunction!(load_scene, m)?)?;
    Ok(())
}
