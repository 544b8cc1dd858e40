use assert_cmd::Command;
use serde_json::Value;

fn regmatch() -> Command {
    Command::cargo_bin("regmatch").unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = regmatch().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn report(args: &[&str]) -> Value {
    let out = regmatch().args(args).arg("--json").output().unwrap();
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn polynomial_of_a_family() {
    assert_eq!(stdout(&["poly", "K3,3*2"]), "1,18,117,336,432,216,36\n");
    assert_eq!(stdout(&["poly", "C4"]), "1,4,2\n");
}

#[test]
fn polynomial_of_a_graph_file() {
    let dir = std::env::temp_dir().join(format!("regmatch-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p3.txt");
    std::fs::write(&path, "n 3\ne 0 1\ne 1 2\n").unwrap();
    assert_eq!(stdout(&["poly", path.to_str().unwrap()]), "1,2\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn incomparable_pair() {
    assert_eq!(
        stdout(&["compare", "P8+P6+P3", "P7+P5+P5"]),
        "Incomparable\n"
    );
    assert_eq!(stdout(&["compare", "P4", "C4"]), "StrictlyLess\n");
}

#[test]
fn cubic_on_ten_vertices_has_no_coefficientwise_maximum() {
    let r = report(&["verify", "umc", "10", "3"]);
    let res = &r["result"];
    assert_eq!(res["coefficientwise_max_exists"], false);
    assert_eq!(res["holds"], true);
    assert_eq!(res["per_m"][4]["argmax"], serde_json::json!(["G1"]));
    assert_eq!(res["per_m"][5]["argmax"], serde_json::json!(["M10"]));
    regmatch()
        .args(["verify", "umc", "10", "3"])
        .assert()
        .code(0);
}

#[test]
fn lower_bound_fails_for_cycles() {
    let out = regmatch()
        .args(["verify", "lmc", "12", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("counterexample C6"), "{text}");
    regmatch()
        .args(["verify", "lmc", "12", "3"])
        .assert()
        .code(0);
}

#[test]
fn extremal_theorems_hold() {
    regmatch()
        .args(["verify", "omega-extremal", "8"])
        .assert()
        .code(0);
    regmatch()
        .args(["verify", "2reg-extremal", "10"])
        .assert()
        .code(0);
}

#[test]
fn usage_errors() {
    regmatch().assert().code(2);
    regmatch().args(["poly"]).assert().code(2);
    regmatch().args(["poly", "Q7"]).assert().code(2);
    regmatch()
        .args(["expect", "e3", "1", "2", "3"])
        .assert()
        .code(2);
    regmatch().args(["smallm", "3", "3", "4"]).assert().code(2);
    regmatch().args(["--help"]).assert().code(0);
}

#[test]
fn report_schema() {
    let r = report(&["expect", "e1", "3", "5", "3", "--mc", "500", "--seed", "9"]);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["command"], "expect");
    assert_eq!(r["seed"], 9);
    assert_eq!(r["parameters"]["m"], 3);
    assert_eq!(r["result"]["value"]["fraction"], "834/5");
    assert_eq!(r["result"]["value"]["decimal"], "1.6680000000000000e2");
    assert!(r["wall_time_ms"].is_u64());
    assert_eq!(report(&["poly", "C4"])["seed"], Value::Null);
}

#[test]
fn results_are_reproducible_across_runs_and_threads() {
    for args in [
        &["scan", "regular", "12", "3"][..],
        &["expect", "e2", "4", "6", "3", "--mc", "300", "--seed", "5"],
        &["bound", "gh", "3"],
    ] {
        let a = report(&[&["--threads", "1"][..], args].concat());
        let b = report(&[&["--threads", "4"][..], args].concat());
        let c = report(args);
        assert_eq!(a["result"].to_string(), b["result"].to_string());
        assert_eq!(a["result"].to_string(), c["result"].to_string());
    }
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("regmatch-report-{}.json", std::process::id()));
    let text = stdout(&["bound", "schrijver", "5", "3", "-o", path.to_str().unwrap()]);
    assert!(text.starts_with("r=3 n=5\tln="));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["result"]["bound"], "schrijver");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn csv_sweep() {
    let text = stdout(&["bound", "gh", "3", "--steps", "4", "--csv"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,p,m,n,quantity,value");
    assert_eq!(lines.len(), 6);
    assert!(lines[5].starts_with("3,1,,,gh,1.15470053837925"));
}

#[test]
fn enumeration_listings() {
    assert_eq!(
        stdout(&["enum-omega", "6", "2", "simple"]),
        "P2 + P4\nP3*2\n2 graphs\n"
    );
    let r = report(&["enum-regular", "10", "3"]);
    assert_eq!(r["result"]["count"], 2);
    assert!(stdout(&["enum-regular", "6", "2", "--graphs"]).contains("n 6\n"));
    assert_eq!(
        stdout(&["smallm", "4", "3", "4", "--a4", "6"])
            .lines()
            .next(),
        Some("9")
    );
}
