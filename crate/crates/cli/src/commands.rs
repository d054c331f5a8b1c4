use std::path::Path;

use hlab_core::continuity::DEFAULT_SAMPLES;
use hlab_core::{
    delta_left, delta_right, f_eval, f_union_eval, figure1_scenario, figure2_scenario,
    grid_oracle_hausdorff, hausdorff_union, modulus_scan, neighborhood, subset_of,
    union_modulus_scan, verify_modulus, ConvexPolygon, ModulusReport, Point, Scalar, ScanRow,
    Scene, SceneFile, Segment,
};
use serde_json::{json, Value};

use crate::svg::{Frame, Svg};
use crate::Failure;

pub const SCENARIOS: [&str; 2] = ["figure1", "figure2"];

type Out = Result<String, Failure>;

fn num(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

fn nums(xs: &[Scalar]) -> Value {
    xs.iter().map(num).collect()
}

fn point(p: &Point) -> Value {
    json!([p.x.to_string(), p.y.to_string()])
}

fn polygon(p: &ConvexPolygon) -> Value {
    p.vertices().iter().map(point).collect()
}

fn segment(s: &Segment) -> Value {
    json!([point(&s.a), point(&s.b)])
}

fn render(v: &Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("plain data");
    out.push('\n');
    out
}

fn required<'a, T>(value: &'a Option<T>, key: &str) -> Result<&'a T, Failure> {
    value
        .as_ref()
        .ok_or_else(|| Failure::Input(format!("scene has no \"{key}\"")))
}

fn convex_b(scene: &SceneFile, command: &str) -> Result<ConvexPolygon, Failure> {
    scene
        .convex_b()
        .cloned()
        .ok_or_else(|| Failure::Input(format!("{command} needs \"B\" with exactly one part")))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}

pub fn eval(path: &Path, r: Option<Scalar>) -> Out {
    let scene = SceneFile::load(path)?;
    let n = scene.norm.resolve()?;
    let r = match r {
        Some(r) => r,
        None => required(&scene.r, "r")?.clone(),
    };
    let body = match scene.convex_b() {
        Some(b) => json!({ "r": num(&r), "vertices": polygon(&f_eval(&scene.a, b, &r, &n)?) }),
        None => {
            let parts = f_union_eval(&scene.a, &scene.b_parts, &r, &n)?;
            json!({ "r": num(&r), "components": parts.iter().map(polygon).collect::<Value>() })
        }
    };
    Ok(render(&body))
}

fn modulus_report(rep: &ModulusReport) -> Value {
    let mut v = json!({
        "delta": rep.delta.to_string(),
        "r_primes": nums(&rep.r_primes),
        "gaps": nums(&rep.gaps),
        "worst_gap": num(&rep.worst_gap),
        "all_passed": rep.all_passed,
    });
    if let Some(note) = &rep.note {
        v["note"] = Value::String(note.clone());
    }
    v
}

pub fn witness(path: &Path, left: bool) -> Out {
    let scene = SceneFile::load(path)?;
    let n = scene.norm.resolve()?;
    let b = convex_b(&scene, "witness")?;
    let r = required(&scene.r, "r")?;
    let eps = required(&scene.epsilon, "epsilon")?;
    let body = if left {
        let w = delta_left(&scene.a, &b, r, eps, &n)?;
        let check = verify_modulus(&scene.a, &b, r, eps, &n, DEFAULT_SAMPLES)?;
        // g(M) must sit inside every sampled f(r')
        let mut contained = true;
        for rp in &check.left.r_primes {
            contained &= subset_of(&w.gm, &f_eval(&scene.a, &b, rp, &n)?);
        }
        json!({
            "side": "left",
            "r": num(r),
            "epsilon": num(eps),
            "delta": num(&w.delta),
            "M": polygon(&w.m),
            "p": point(&w.p),
            "reach": num(&w.reach),
            "lambda": num(&w.lambda),
            "gM": polygon(&w.gm),
            "verification": modulus_report(&check.left),
            "gM_inside_sampled_f": contained,
        })
    } else {
        let w = delta_right(&scene.a, &b, r, eps, &n)?;
        let check = verify_modulus(&scene.a, &b, r, eps, &n, DEFAULT_SAMPLES)?;
        json!({
            "side": "right",
            "r": num(r),
            "epsilon": num(eps),
            "delta": w.delta.to_string(),
            "M": polygon(&w.m),
            "K": w.k.iter().map(segment).collect::<Value>(),
            "verification": modulus_report(&check.right),
        })
    };
    Ok(render(&body))
}

fn csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("r,r_next,d_H,ratio\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.r, row.r_next, row.gap, row.ratio
        ));
    }
    out
}

fn ratio_plot(rows: &[ScanRow], title: &str) -> String {
    let zero = Scalar::from_integer(0.into());
    let mut pts: Vec<Point> = rows
        .iter()
        .map(|row| Point::new(row.r.clone(), row.ratio.clone()))
        .collect();
    if let Some(last) = rows.last() {
        pts.push(Point::new(last.r_next.clone(), last.ratio.clone()));
    }
    let first = rows
        .first()
        .map(|row| row.r.clone())
        .unwrap_or_else(|| zero.clone());
    let end = pts
        .last()
        .map(|p| p.x.clone())
        .unwrap_or_else(|| zero.clone());
    let axis = [Point::new(first, zero.clone()), Point::new(end, zero)];
    let mut svg = Svg::new(Frame::stretched(pts.iter().chain(&axis)));
    svg.polyline(&axis, "#999999");
    svg.polyline(&pts, "#c0392b");
    svg.finish(title)
}

pub fn scan(path: &Path, steps: usize, svg: Option<&Path>) -> Out {
    let scene = SceneFile::load(path)?;
    let n = scene.norm.resolve()?;
    let (lo, hi) = required(&scene.r_range, "r_range")?;
    let rows = match scene.convex_b() {
        Some(b) => modulus_scan(&scene.a, b, &n, lo, hi, steps)?,
        None => union_modulus_scan(&scene.a, &scene.b_parts, &n, lo, hi, steps)?,
    };
    if let Some(out) = svg {
        let title = scene
            .label
            .clone()
            .unwrap_or_else(|| "ratio against r".to_string());
        write_file(out, &ratio_plot(&rows, &title))?;
    }
    Ok(csv(&rows))
}

/// A, the parts of B, the boundary of B_r(A) and f(r) shaded.
fn draw_scene(scene: &Scene, r: &Scalar) -> Result<String, Failure> {
    let n = scene.norm.resolve()?;
    let ball = neighborhood(&scene.a, r, &n)?;
    let pieces = f_union_eval(&scene.a, &scene.b_parts, r, &n)?;
    let all = ball
        .vertices()
        .iter()
        .chain(scene.a.vertices())
        .chain(scene.b_parts.iter().flat_map(|p| p.vertices()));
    let mut svg = Svg::new(Frame::fitting(all));
    svg.polygon(&ball, "none", "#7f8c8d");
    for part in &scene.b_parts {
        svg.polygon(part, "#d6eaf8", "#2e86c1");
    }
    for piece in &pieces {
        svg.polygon(piece, "#f5b041", "#ca6f1e");
    }
    svg.polygon(&scene.a, "#bbbbbb", "#333333");
    Ok(svg.finish(&format!("{}, drawn at r = {r}", scene.label)))
}

pub fn scenario(name: &str, svg: Option<&Path>) -> Out {
    let (body, drawing) = match name {
        "figure1" => {
            let rep = figure1_scenario()?;
            let table: Vec<Value> = rep
                .table
                .iter()
                .map(|row| json!({ "r": num(&row.r), "r_next": num(&row.r_next), "d_H": num(&row.gap), "ratio": num(&row.ratio) }))
                .collect();
            let body = json!({
                "scenario": "figure1",
                "label": rep.scene.label,
                "A": polygon(&rep.scene.a),
                "B": rep.scene.b_parts.iter().map(polygon).collect::<Value>(),
                "table": table,
                "max_ratio": num(&rep.max_ratio),
                "certified_strictly_greater_than_one": rep.certified_strictly_greater_than_one(),
            });
            let r = &rep.table[rep.table.len() / 2].r;
            (body, draw_scene(&rep.scene, r)?)
        }
        "figure2" => {
            let rep = figure2_scenario()?;
            let j = &rep.jump;
            let jump_certified = j.gaps.iter().all(|g| *g >= j.jump_lower_bound);
            let two = Scalar::from_integer(2.into());
            let control_within_two_delta = j
                .deltas
                .iter()
                .zip(&rep.control_gaps)
                .all(|(d, g)| *g <= d * &two);
            let body = json!({
                "scenario": "figure2",
                "label": rep.scene.label,
                "A": polygon(&rep.scene.a),
                "B": rep.scene.b_parts.iter().map(polygon).collect::<Value>(),
                "threshold": num(&j.threshold),
                "deltas": nums(&j.deltas),
                "gaps": nums(&j.gaps),
                "jump_lower_bound": num(&j.jump_lower_bound),
                "jump_certified": jump_certified,
                "control_B": rep.control_scene.b_parts.iter().map(polygon).collect::<Value>(),
                "control_gaps": nums(&rep.control_gaps),
                "control_within_two_delta": control_within_two_delta,
            });
            (body, draw_scene(&rep.scene, &j.threshold)?)
        }
        other => {
            return Err(Failure::Input(format!(
                "unknown scenario {other:?}; available: {}",
                SCENARIOS.join(", ")
            )))
        }
    };
    if let Some(out) = svg {
        write_file(out, &drawing)?;
    }
    Ok(render(&body))
}

pub fn oracle(path: &Path, step: &Scalar) -> Out {
    let scene = SceneFile::load(path)?;
    let n = scene.norm.resolve()?;
    let a = [scene.a.clone()];
    let exact = hausdorff_union(&a, &scene.b_parts, &n)?;
    let iv = grid_oracle_hausdorff(&a, &scene.b_parts, &n, step)?;
    Ok(render(&json!({
        "step": num(step),
        "exact": num(&exact),
        "estimate": num(&iv.estimate),
        "cell_diameter": num(&iv.cell_diameter),
        "lo": num(&iv.lo),
        "hi": num(&iv.hi),
        "contains_exact": iv.contains(&exact),
    })))
}
