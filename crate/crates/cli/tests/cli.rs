use std::path::PathBuf;
use std::process::{Command, Output};

fn scene(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../scenes")
        .join(name)
        .display()
        .to_string()
}

fn hlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlab"))
        .args(args)
        .output()
        .expect("spawn hlab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    assert_eq!(o.status.code(), Some(0), "{}", stderr(o));
    serde_json::from_slice(&o.stdout).unwrap()
}

/// Writes a variant of the worked scene to a temp file.
fn temp_scene(tag: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("hlab-cli-{}-{tag}.json", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn worked_with(from: &str, to: &str) -> String {
    std::fs::read_to_string(scene("worked_linf.json"))
        .unwrap()
        .replace(from, to)
}

#[test]
fn eval_worked_scene() {
    let v = json(&hlab(&["eval", &scene("worked_linf.json"), "--r", "3/2"]));
    assert_eq!(
        v["vertices"],
        serde_json::json!([["2", "0"], ["5/2", "0"], ["5/2", "1"], ["2", "1"]])
    );
    assert_eq!(v["r"], "3/2");
}

#[test]
fn eval_below_set_distance_is_a_domain_violation() {
    let o = hlab(&["eval", &scene("worked_linf.json"), "--r", "1/2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("radius below set distance"));
}

#[test]
fn eval_union_lists_components() {
    let v = json(&hlab(&["eval", &scene("figure2.json"), "--r", "2"]));
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    let v = json(&hlab(&["eval", &scene("figure2.json"), "--r", "3/2"]));
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
}

#[test]
fn bad_inputs_exit_one_and_name_the_key() {
    let decimal = temp_scene("decimal", &worked_with("\"3/2\"", "\"1.5\""));
    let o = hlab(&["eval", &decimal]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("`r`"), "{}", stderr(&o));

    let bent = temp_scene(
        "bent",
        &worked_with(r#"["3", "1"], ["2", "1"]"#, r#"["2", "1"], ["3", "1"]"#),
    );
    let o = hlab(&["eval", &bent]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("B[0]") && stderr(&o).contains("non-convex"),
        "{}",
        stderr(&o)
    );

    let broken = temp_scene("broken", "{\"norm\": ");
    assert_eq!(hlab(&["eval", &broken]).status.code(), Some(1));
    assert_eq!(
        hlab(&["eval", "/nonexistent/scene.json"]).status.code(),
        Some(1)
    );
    assert_eq!(
        hlab(&["eval", &scene("worked_linf.json"), "--r", "0.5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(hlab(&["frobnicate"]).status.code(), Some(1));
    for p in [decimal, bent, broken] {
        std::fs::remove_file(p).unwrap();
    }
}

#[test]
fn witness_examples() {
    let v = json(&hlab(&[
        "witness",
        &scene("worked_linf.json"),
        "--side",
        "right",
    ]));
    assert_eq!(v["delta"], "1/4");
    assert_eq!(v["verification"]["all_passed"], true);

    let v = json(&hlab(&[
        "witness",
        &scene("worked_linf.json"),
        "--side",
        "left",
    ]));
    assert_eq!(v["delta"], "1/8");
    assert_eq!(v["lambda"], "1/4");
    assert_eq!(v["p"], serde_json::json!(["2", "0"]));
    assert_eq!(v["gM_inside_sampled_f"], true);
    assert_eq!(v["verification"]["all_passed"], true);

    let huge = temp_scene("huge", &worked_with("\"1/4\"", "\"1000000\""));
    let v = json(&hlab(&["witness", &huge, "--side", "right"]));
    assert_eq!(v["delta"], "inf");
    assert_eq!(v["K"], serde_json::json!([]));
    std::fs::remove_file(huge).unwrap();
}

#[test]
fn left_witness_at_the_endpoint() {
    let endpoint = temp_scene("endpoint", &worked_with("\"3/2\"", "\"1\""));
    let o = hlab(&["witness", &endpoint, "--side", "left"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("left witness needs r strictly above set distance"));
    let v = json(&hlab(&["witness", &endpoint, "--side", "right"]));
    assert_eq!(v["delta"], "1/4");
    std::fs::remove_file(endpoint).unwrap();
}

#[test]
fn scan_examples() {
    let o = hlab(&["scan", &scene("figure1.json"), "--steps", "4"]);
    let csv = stdout(&o);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("r,r_next,d_H,ratio"));
    let ratios: Vec<&str> = lines.map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(ratios, vec!["8"; 4]);

    let csv = stdout(&hlab(&["scan", &scene("identical.json"), "--steps", "5"]));
    assert!(
        csv.lines()
            .skip(1)
            .all(|l| l.split(',').nth(2) == Some("0")),
        "{csv}"
    );

    let o = hlab(&["scan", &scene("worked_linf.json"), "--steps", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("steps must be ≥ 1"));
}

#[test]
fn scan_writes_svg() {
    let out = std::env::temp_dir().join(format!("hlab-cli-{}-scan.svg", std::process::id()));
    let o = hlab(&[
        "scan",
        &scene("figure2.json"),
        "--steps",
        "4",
        "--svg",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(
        svg.starts_with("<?xml") && svg.contains("version=\"1.1\"") && svg.contains("<polyline")
    );
    std::fs::remove_file(out).unwrap();
}

#[test]
fn scenario_reports() {
    let v = json(&hlab(&["scenario", "figure1"]));
    assert_eq!(v["max_ratio"], "8");
    assert_eq!(v["certified_strictly_greater_than_one"], true);
    let v = json(&hlab(&["scenario", "figure2"]));
    assert_eq!(v["jump_lower_bound"], "4");
    assert_eq!(v["control_within_two_delta"], true);
    let o = hlab(&["scenario", "figure3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("figure1, figure2"));
}

#[test]
fn oracle_brackets_the_exact_value() {
    let v = json(&hlab(&["oracle", &scene("hexagon.json"), "--step", "1/32"]));
    assert_eq!(v["contains_exact"], true);
    assert_eq!(
        hlab(&["oracle", &scene("hexagon.json"), "--step", "0"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn shipped_figures_match_builtin_scenes() {
    use hlab_core::{figure1_scene, figure2_scene, SceneFile};
    for (file, builtin) in [
        ("figure1.json", figure1_scene()),
        ("figure2.json", figure2_scene()),
    ] {
        let shipped = SceneFile::load(std::path::Path::new(&scene(file))).unwrap();
        assert_eq!(shipped.norm, builtin.norm);
        assert_eq!(shipped.a, builtin.a);
        assert_eq!(shipped.b_parts, builtin.b_parts);
        assert_eq!(shipped.r_range, Some(builtin.r_range.clone()));
    }
}
