use std::path::Path;

use qspace::cli::format::{ReportFile, SpaceFile, GENERATOR_CONVENTION};
use qspace::cli::run_from;
use qspace::linalg::Rational;
use qspace::presets::{cubic_example, quantum_plane};
use qspace::space::{hom_space, EquippedSpace};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_from(
        std::iter::once("qspace").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, space: &EquippedSpace) -> String {
    let path = dir.join(name);
    std::fs::write(&path, SpaceFile::from_space(space).to_text()).unwrap();
    path.to_string_lossy().into_owned()
}

fn write_text(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn hom_writes_the_generator_convention() {
    let dir = tempfile::tempdir().unwrap();
    let qp = quantum_plane(Rational::from(2));
    let a = write(dir.path(), "qp.json", &qp);
    let (code, out, _) = run(&["hom", &a, &a]);
    assert_eq!(code, 0);
    let file = SpaceFile::parse(&out).unwrap();
    assert_eq!(file.generator_convention.as_deref(), Some(GENERATOR_CONVENTION));
    assert_eq!(file.to_space().unwrap(), hom_space(&qp, &qp));
}

#[test]
fn out_flag_prints_a_summary() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "qp.json", &quantum_plane(Rational::from(2)));
    let target = dir.path().join("prod.json");
    let (code, out, _) = run(&["product", &a, &a, "--out", target.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("dim=4"), "{out}");
    assert!(out.contains("rank(R_2)=7"), "{out}");
    assert!(target.exists());
}

#[test]
fn hilbert_and_degree_cap() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "qp.json", &quantum_plane(Rational::from(2)));
    let (code, out, _) = run(&["hilbert", &a, "--max-degree", "4"]);
    assert_eq!((code, out.as_str()), (0, "1 2 3 4 5\n"));

    let (code, _, err) = run(&["hilbert", &a, "--max-degree", "7"]);
    assert_eq!(code, 4, "{err}");
    let (code, out, _) = run(&["hilbert", &a, "--max-degree", "7", "--cap-override"]);
    assert_eq!((code, out.as_str()), (0, "1 2 3 4 5 6 7 8\n"));

    let report = dir.path().join("h.json");
    let (code, _, _) = run(&["hilbert", &a, "--out", report.to_str().unwrap()]);
    assert_eq!(code, 0);
    let parsed: ReportFile =
        serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(parsed.hilbert, Some(vec![1, 2, 3, 4, 5]));
}

#[test]
fn parse_and_usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_text(dir.path(), "bad.json", "{\"dim\": 2,");
    assert_eq!(run(&["dual", &bad]).0, 2);
    assert_eq!(run(&["dual", "/nonexistent/x.json"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "nonsense"]).0, 2);

    let a = write(dir.path(), "qp.json", &quantum_plane(Rational::from(2)));
    let (code, _, err) = run(&["verify", &a, &a, "--suite", "bialgebra"]);
    assert_eq!(code, 2, "{err}");
    assert_eq!(run(&["verify", &a]).0, 2);
}

#[test]
fn invalid_structure_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let wrong_shape = write_text(
        dir.path(),
        "shape.json",
        r#"{"dim":2,"structure":[{"degree":2,"matrix":[["1","0"],["0","1"]]}]}"#,
    );
    assert_eq!(run(&["dual", &wrong_shape]).0, 3);
    let degree_one = write_text(
        dir.path(),
        "deg1.json",
        r#"{"dim":2,"structure":[{"degree":1,"matrix":[["1","0"],["0","1"]]}]}"#,
    );
    assert_eq!(run(&["dual", &degree_one]).0, 3);
}

#[test]
fn verify_suites_on_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "qp.json", &quantum_plane(Rational::from(2)));
    let (code, out, _) = run(&["verify", &a, &a, &a, "--suite", "all"]);
    assert_eq!(code, 0, "{out}");
    let report: ReportFile = serde_json::from_str(&out).unwrap();
    assert!(report.pass);
    let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(names.contains(&"bialgebra/hom_equals_frt"));
    assert!(names.contains(&"epi/u_epimorphism"));

    let (code, out, _) = run(&["verify", &a, &a, "--suite", "rigidity", "--pretty"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("overall: pass\n"), "{out}");

    let cubic = write(dir.path(), "cubic.json", &cubic_example());
    assert_eq!(run(&["verify", &cubic, &cubic, "--suite", "rigidity"]).0, 0);
    assert_eq!(run(&["verify", &cubic, &cubic, "--suite", "epi"]).0, 2);
}

#[test]
fn random_verify_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let args = [
        "verify", "--random", "--seed", "5", "--trials", "2", "--suite", "epi", "--out",
        out.to_str().unwrap(),
    ];
    assert_eq!(run(&args).0, 0);
    let first = std::fs::read(&out).unwrap();
    assert_eq!(run(&args).0, 0);
    assert_eq!(std::fs::read(&out).unwrap(), first);
    let report: ReportFile = serde_json::from_slice(&first).unwrap();
    assert!(report.checks[0].name.starts_with("trial_0000/"));
}

#[test]
fn project_builds_a_projector_space() {
    let dir = tempfile::tempdir().unwrap();
    let rel = write_text(
        dir.path(),
        "rel.json",
        r#"{"dim":2,"basis":[["0","1","-2","0"]]}"#,
    );
    let (code, out, _) = run(&["project", &rel]);
    assert_eq!(code, 0);
    let space = SpaceFile::parse(&out).unwrap().to_space().unwrap();
    let p = space.structure(2);
    assert_eq!(&*p * &*p, *p);
    let a = write(dir.path(), "p.json", &space);
    assert_eq!(run(&["hilbert", &a]).1, "1 2 3 4 5\n");
}
