use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

use toric_cli::input::InputDocument;
use toric_cli::{CliError, EXIT_INFEASIBLE, EXIT_VALIDATION};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn toric(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_toric")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, text) = toric(args);
    (code, serde_json::from_str(&text).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_doc(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const SHIPPED: [&str; 8] = [
    "bl1p2.json",
    "bl2p2.json",
    "bl_p3_two_lines.json",
    "p1.json",
    "p2.json",
    "p3.json",
    "p4.json",
    "p1xp1.json",
];

#[test]
fn shipped_inputs_round_trip_and_validate() {
    for name in SHIPPED {
        let text = std::fs::read_to_string(data(name)).unwrap();
        let doc = InputDocument::from_json(&text).unwrap();
        let again = InputDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(doc, again, "{name}");
        doc.variety().unwrap();
        let (code, report) = json(&["check", path(&data(name))]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(report["is_smooth"], Value::Bool(true));
    }
}

#[test]
fn basis_of_the_plane_blown_up_twice() {
    let (code, out) = json(&["basis", "--all-flags", path(&data("bl2p2.json"))]);
    assert_eq!(code, 0);
    let mut classes: Vec<&str> = out["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["class"].as_str().unwrap())
        .collect();
    classes.sort();
    assert_eq!(classes, ["H", "H-E1", "H-E2"]);
    assert_eq!(out["rejected"].as_array().unwrap().len(), 0);

    let (code, out) = json(&["basis", "--cone", "3", path(&data("bl2p2.json"))]);
    assert_eq!(code, 0);
    assert_eq!(out["mode"], "cone");
    let divisors: Vec<&str> = out["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["divisor"]["expression"].as_str().unwrap())
        .collect();
    for d in ["D1", "D2", "D2+E2"] {
        assert!(divisors.contains(&d), "{divisors:?}");
    }
}

#[test]
fn decomposition_example() {
    let file = data("bl2p2.json");
    let (code, out) = json(&["decompose", path(&file), "D1+D2+E1", "--cone", "3", "--order", "D3,E1"]);
    assert_eq!(code, 0);
    assert_eq!(out["fixed"]["expression"], "0");
    for c in out["coefficients"].as_array().unwrap() {
        let want = match c["class"].as_str().unwrap() {
            "H" | "H-E2" => "1",
            _ => "0",
        };
        assert_eq!(c["coefficient"], want);
    }
    assert_eq!(out["chamber"].as_array().unwrap().len(), 2);

    let (code, out) = json(&["decompose", path(&file), "E1", "--cone", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out["fixed"]["expression"], "E1");
    assert_eq!(out["movable"]["expression"], "0");
    assert_eq!(out["okounkov_body"]["affine_dim"], 0);
}

#[test]
fn divisors_by_name_list_expression_and_class() {
    let file = data("bl2p2.json");
    let volume = |args: &[&str]| {
        let (code, out) = json(args);
        assert_eq!(code, 0, "{args:?}");
        out["polytope"]["volume"].as_str().unwrap().to_string()
    };
    let f = path(&file);
    assert_eq!(volume(&["polytope", f, "big"]), "41/2");
    assert_eq!(volume(&["polytope", f, "3,4,2,0,1"]), "41/2");
    assert_eq!(volume(&["polytope", f, "3D1+4D2+2E2+E1"]), "41/2");
    assert_eq!(volume(&["polytope", f, "--class", "7H-2E1-2E2"]), "41/2");
    let (code, out) = json(&["okounkov", f, "--class", "7H-2E1-2E2", "--cone", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out["body"]["volume"], "41/2");
}

#[test]
fn nef_and_class_group() {
    let file = data("bl_p3_two_lines.json");
    let (code, out) = json(&["nef", path(&file), "wall"]);
    assert_eq!(code, 0);
    assert_eq!(out["divisor"]["class"], "2H-E1-E2");
    assert_eq!(out["cartier_data"].as_array().unwrap().len(), 8);
    let (code, out) = json(&["classgroup", path(&file)]);
    assert_eq!(code, 0);
    assert_eq!(out["rank"], 3);
    assert_eq!(out["movable_cone"].as_array().unwrap().len(), 3);
}

#[test]
fn validation_failures_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let single = write_doc(&dir, "single.json", r#"{"rays": [[1, 0], [0, 1]], "max_cones": [[0, 1]]}"#);
    let (code, out) = json(&["check", path(&single)]);
    assert_eq!(code, EXIT_VALIDATION);
    assert_eq!(out["is_complete"], false);
    let (code, out) = json(&["classgroup", path(&single)]);
    assert_eq!(code, EXIT_VALIDATION);
    assert_eq!(out["error"]["kind"], "not-complete");

    let overlap = write_doc(
        &dir,
        "overlap.json",
        r#"{"rays": [[1, 0], [0, 1], [-1, -1], [1, 1]], "max_cones": [[0, 1], [1, 2], [2, 0], [0, 3]]}"#,
    );
    let (code, out) = json(&["check", path(&overlap)]);
    assert_eq!(code, EXIT_VALIDATION);
    assert_eq!(out["is_fan"], false);

    let singular = write_doc(
        &dir,
        "singular.json",
        r#"{"rays": [[1, 0], [1, 2], [-1, 0], [0, -1]], "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]]}"#,
    );
    let (code, out) = json(&["polytope", path(&singular), "1,1,1,1"]);
    assert_eq!(code, EXIT_VALIDATION);
    assert_eq!(out["error"]["kind"], "not-smooth");

    let broken = write_doc(&dir, "broken.json", "{");
    let (code, out) = json(&["check", path(&broken)]);
    assert_eq!(code, EXIT_VALIDATION);
    assert_eq!(out["error"]["kind"], "invalid-input");

    let (code, out) = json(&["okounkov", path(&data("bl2p2.json")), "E1", "--cone", "0"]);
    assert_eq!(code, EXIT_VALIDATION);
    assert_eq!(out["error"]["kind"], "not-big");
}

#[test]
fn infeasible_computations_exit_with_three() {
    let e: CliError = toric_core::Error::InfeasibleDecomposition("no candidates".into()).into();
    assert_eq!(e.code, EXIT_INFEASIBLE);
    assert_eq!(e.kind, "infeasible-decomposition");
    let e: CliError = toric_core::Error::NotBig { polytope_dim: 1, dim: 2 }.into();
    assert_eq!(e.code, EXIT_VALIDATION);
}

#[test]
fn drawings() {
    let (code, svg) = toric(&["--format", "svg", "okounkov", path(&data("bl1p2.json")), "D", "--cone", "2", "--order", "D3,E1"]);
    assert_eq!(code, 0);
    assert!(svg.starts_with("<svg"));
    let (code, svg) = toric(&["--format", "svg", "basis", path(&data("bl2p2.json"))]);
    assert_eq!(code, 0);
    assert_eq!(svg.matches("<polygon").count(), 3);
    let (code, svg) = toric(&["--format", "svg", "decompose", path(&data("bl2p2.json")), "D", "--cone", "3"]);
    assert_eq!(code, 0);
    assert_eq!(svg.matches("<polygon").count(), 3);

    let file = data("bl_p3_two_lines.json");
    let (code, off) = toric(&["--format", "off", "polytope", path(&file), "wall"]);
    assert_eq!(code, 0);
    assert!(off.starts_with("OFF\n5 5 0\n"), "{off}");
    let (code, out) = toric(&["--format", "svg", "polytope", path(&file), "wall"]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(out.contains("unsupported-format"));
}

#[test]
fn output_is_deterministic() {
    let runs: Vec<&[&str]> = vec![
        &["basis", "--all-flags"],
        &["classgroup"],
    ];
    for name in ["bl2p2.json", "bl_p3_two_lines.json"] {
        let file = data(name);
        for r in &runs {
            let mut args = r.to_vec();
            args.push(path(&file));
            let a = toric(&args);
            let b = toric(&args);
            assert_eq!(a, b);
        }
    }
    let f = data("bl2p2.json");
    let args = ["decompose", path(&f), "big", "--cone", "1"];
    assert_eq!(toric(&args), toric(&args));
    let seq = toric(&["basis", "--sequential", path(&f)]);
    let par = toric(&["basis", path(&f)]);
    assert_eq!(seq, par);
}
