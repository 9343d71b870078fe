//! End-to-end tests of the command-line interface: exit codes, output
//! formats, and the pipe from `quandle` into `groebner`.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quadset"))
}

fn fixture_path(name: &str) -> String {
    format!("{}/../../fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_reports_flags() {
    let out = run(&["check", &fixture_path("perm3")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("braided            yes"));
    assert!(text.contains("two_cancellative   no"));
    assert!(text.contains("order of r: 6"));

    let out = run(&["check", &fixture_path("q5")]);
    let text = stdout(&out);
    assert!(text.contains("square_free        yes"));
    assert!(text.contains("sd                 yes"));
    assert!(text.contains("involutive         no"));
}

#[test]
fn check_json_record() {
    let out = run(&["check", &fixture_path("quandle4"), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["base"], 0);
    assert_eq!(v["n"], 4);
    let flags = v["flags"].as_array().unwrap();
    assert!(flags
        .iter()
        .any(|f| f[0] == "braided" && f[1] == true));
}

#[test]
fn malformed_file_exits_two() {
    let dir = std::env::temp_dir().join("quadset-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let path = dir.join("badtable.json");
    std::fs::write(&path, r#"{"format_version":1,"n":2,"r":[[0,0],[0,0],[1,0],[1,1]]}"#).unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_three() {
    let out = run(&["dims", &fixture_path("quandle9"), "--max-degree", "9", "--budget", "1000"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn dims_of_the_order_five_quandle() {
    let out = run(&["dims", &fixture_path("q5"), "--max-degree", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 5 9 10");
}

#[test]
fn orbit_census_output() {
    let out = run(&["orbits", &fixture_path("q5"), "--degree", "2"]);
    let text = stdout(&out);
    assert!(text.contains("degree 2 orbits 9 fixed 5 nontrivial 4"));
    assert!(text.contains("length 5 count 4"));
}

#[test]
fn quandle_pipes_into_groebner() {
    let quandle = run(&["quandle", "dihedral", "5"]);
    assert!(quandle.status.success());

    let mut child = bin()
        .args(["groebner", "-", "--max-degree", "4"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(&quandle.stdout)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    assert!(text.contains("relations 16"));
    // four elements beyond the quadratic part, one of degree 4
    let extras: Vec<&str> = text
        .lines()
        .filter(|l| {
            let lead = l.split('-').next().unwrap_or("");
            lead.chars().all(|c| c.is_ascii_digit()) && lead.len() >= 3
        })
        .collect();
    assert_eq!(extras, vec!["133-122", "144-122", "155-122", "1222-1112"]);
}

#[test]
fn groebner_on_the_fixture_matches_the_documented_extras() {
    let out = run(&["groebner", &fixture_path("q5"), "--max-degree", "4"]);
    let text = stdout(&out);
    for extra in ["155-122", "144-122", "133-122", "1222-1112"] {
        assert!(text.contains(extra), "{text}");
    }
}

#[test]
fn extend_builds_the_order_six_solution() {
    let out = run(&[
        "extend",
        &fixture_path("triv3a"),
        &fixture_path("triv3b"),
        "--sigma",
        "(0 1 2)",
        "--tau",
        "(0 1 2)",
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(stderr.contains("order-of-r 6"), "{stderr}");
    assert!(stderr.contains("braided true"));
    let qs = quadset::solfile::read_qset(&stdout(&out)).unwrap();
    assert_eq!(qs.n(), 6);
    assert_eq!(qs, quadset::fixtures::extension6());
}

#[test]
fn enumerate_output_is_line_structured() {
    let out = run(&[
        "enumerate",
        "--n",
        "3",
        "--require",
        "nondegenerate",
        "--require",
        "two_cancellative",
        "--require",
        "square_free",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    for (i, line) in lines.iter().enumerate() {
        assert!(line.starts_with(&format!("class {i} base 0 n 3 dimA2 ")));
        assert!(line.contains(" rmap ") && line.contains(" flags "));
    }
}

#[test]
fn unknown_flag_is_a_parse_error() {
    let out = run(&["enumerate", "--n", "3", "--require", "sparkly"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stu_on_the_order_nine_quandle() {
    let out = run(&[
        "stu",
        &fixture_path("quandle9"),
        "--blocks",
        "0,3,6;2,5,7;1,4,8",
        "--length",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ground-stu yes"));
    assert!(text.contains("word-stu-to-length-2 yes"));
}

#[test]
fn stu_two_blocks_reports_mixed_conditions() {
    let dir = std::env::temp_dir().join("quadset-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("extension6.json");
    std::fs::write(
        &path,
        quadset::solfile::write_qset(&quadset::fixtures::extension6(), None, None),
    )
    .unwrap();
    let out = run(&[
        "stu",
        path.to_str().unwrap(),
        "--blocks",
        "0,1,2;3,4,5",
        "--length",
        "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ground-stu yes"));
    assert!(text.contains("predicted-ybe true direct-ybe true"));
}

#[test]
fn invariant_blocks_are_rejected_when_not_closed() {
    let out = run(&[
        "stu",
        &fixture_path("quandle9"),
        "--blocks",
        "0,1;2,3,4,5,6,7,8",
        "--length",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
