use std::fs;
use std::process::{Command, Output};

use kostant_core::exactalg::json::rational_from_str;
use kostant_core::kostant::rank1::tilde_factor;
use kostant_core::kostant::{center_ideal_rank1, CenterPresentation, PresentationJson};
use kostant_core::q;

fn kostant(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kostant")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn center_json_round_trips() {
    let o = kostant(&["center", "--algebra", "A1", "--mu", "5", "--coords", "tilde"]);
    assert_eq!(o.status.code(), Some(0));
    let j: PresentationJson = serde_json::from_str(&stdout(&o)).unwrap();
    let p = CenterPresentation::from_json(&j).unwrap();
    assert_eq!(p, center_ideal_rank1(5));
}

#[test]
fn graded_is_center_with_graded_coords() {
    let a = kostant(&["graded", "--mu", "4"]);
    let b = kostant(&["center", "--mu", "4", "--coords", "graded"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn a2_adjoint_components() {
    let o = kostant(&["center", "--algebra", "A2", "--mu", "1,1", "--coords", "components"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    assert_eq!(v["fiber_dimension"], 10);
    assert_eq!(v["multiplicity_free"], false);
}

#[test]
fn tensor_labels() {
    let o = kostant(&["tensor", "--mu", "5", "--lambda", "-1", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("M_(-1) ⊗ V^(5) = P_{-6} ⊕ P_{-4} ⊕ P_{-2}"));
    let o = kostant(&["tensor", "--mu", "5", "--lambda", "1/2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["blocks"].as_array().unwrap().len(), 6);
}

#[test]
fn exit_codes() {
    assert_eq!(kostant(&["center", "--mu", "-1"]).status.code(), Some(2));
    assert_eq!(kostant(&["center", "--algebra", "X7", "--mu", "1"]).status.code(), Some(2));
    assert_eq!(kostant(&["center", "--algebra", "A2", "--mu", "1,1", "--coords", "tilde"]).status.code(), Some(2));
    assert_eq!(kostant(&["plot", "--figure", "nope"]).status.code(), Some(2));
    let e8 = ["center", "--algebra", "E8", "--mu", "1,0,0,0,0,0,0,0", "--coords", "components"];
    assert_eq!(kostant(&e8).status.code(), Some(3));
}

#[test]
fn verify_paper_passes_and_is_deterministic() {
    let a = kostant(&["verify", "--suite", "paper", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert!(v["passed"].as_u64().unwrap() >= 12);
    assert_eq!(v["failed"], 0);
    assert_eq!(a.stdout, kostant(&["verify", "--suite", "paper", "--seed", "7"]).stdout);
}

#[test]
fn verify_properties_is_deterministic() {
    let a = kostant(&["verify", "--suite", "properties", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, kostant(&["verify", "--suite", "properties", "--seed", "3"]).stdout);
}

#[test]
fn verify_detects_mutated_golden() {
    let dir = tempfile::tempdir().unwrap();
    let builtin = include_str!("../src/goldens.json");
    let mutated = builtin.replace("- 18*C2 - 18*Mt1 + 45", "- 18*C2 - 18*Mt1 + 46");
    assert_ne!(builtin, mutated);
    let path = dir.path().join("goldens.json");
    fs::write(&path, mutated).unwrap();
    let o = kostant(&["verify", "--goldens", path.to_str().unwrap(), "--format", "text"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let line = out.lines().find(|l| l.starts_with("FAIL")).unwrap();
    assert!(line.contains("tilde factor 2") && line.contains("+ 46"), "{line}");
    assert!(line.contains("takes value"), "{line}");

    fs::write(&path, "{").unwrap();
    assert_eq!(kostant(&["verify", "--goldens", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn plot_points_are_exact() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("tilde.csv");
    let svg = dir.path().join("tilde.svg");
    let o = kostant(&[
        "plot", "--figure", "center-tilde", "--range", "-7/2:5", "--samples", "9", "--out",
        csv.to_str().unwrap(), "--svg", svg.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("figure,curve_id,color_index,x_num,x_den,y_num,y_den"));
    let mut n = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let m: u32 = f[1].strip_prefix("m=").unwrap().parse().unwrap();
        let x = rational_from_str(&format!("{}/{}", f[3], f[4])).unwrap();
        let y = rational_from_str(&format!("{}/{}", f[5], f[6])).unwrap();
        assert_eq!(tilde_factor(m).evaluate(&[x, y]).unwrap(), q(0), "{line}");
        n += 1;
    }
    assert_eq!(n, 3 * 9);
    assert!(fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn hc_category_coloring() {
    let o = kostant(&["plot", "--figure", "hc-category", "--cutoff", "5", "--range", "-3:3", "--samples", "7"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let own: u32 = f[1].strip_prefix("m=").unwrap().parse().unwrap();
        let color: u32 = f[2].parse().unwrap();
        assert!(color % 2 == 1 && color <= own);
        let x = rational_from_str(&format!("{}/{}", f[3], f[4])).unwrap();
        let y = rational_from_str(&format!("{}/{}", f[5], f[6])).unwrap();
        assert_eq!(tilde_factor(color).evaluate(&[x.clone(), y.clone()]).unwrap(), q(0));
        for smaller in (1..color).step_by(2) {
            assert_ne!(tilde_factor(smaller).evaluate(&[x.clone(), y.clone()]).unwrap(), q(0));
        }
    }
    let j = kostant(&["plot", "--figure", "hc-category", "--format", "json", "--samples", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert!(v["interpretation"].is_string());
}

#[test]
fn plot_all_figures_succeed() {
    for fig in ["lines", "center-tilde", "center-rozhkovskaya", "graded", "hc-category"] {
        for mu in ["4", "5"] {
            let o = kostant(&["plot", "--figure", fig, "--mu", mu, "--samples", "5"]);
            assert_eq!(o.status.code(), Some(0), "{fig} {mu}: {}", String::from_utf8_lossy(&o.stderr));
        }
    }
}
