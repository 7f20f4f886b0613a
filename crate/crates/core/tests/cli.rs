//! The `hopfcat` binary: exit statuses, output options and error messages.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfcat"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn passing_run_exits_zero() {
    let o = run(&["check-axioms", fixture("h2.model").to_str().unwrap(), "H2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "hopfcat-report/1");
    assert_eq!(v["command"], "check-axioms");
    assert_eq!(v["pass"], true);
    assert_eq!(v["inputs"]["degree"], 4);
}

#[test]
fn failing_verdict_exits_one() {
    let o = run(&["verify-diagram", fixture("negative.model").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], false);
    for r in v["results"].as_array().unwrap() {
        assert_eq!(r["pass"], false);
    }
}

#[test]
fn input_errors_exit_two() {
    let h2 = fixture("h2.model");
    let h2 = h2.to_str().unwrap();
    assert_eq!(run(&["decompose", h2, "Nope"]).status.code(), Some(2));
    assert_eq!(run(&["launch", h2]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "/nonexistent/model"]).status.code(), Some(2));
    assert_eq!(run(&["zero-hom", h2, "Ux"]).status.code(), Some(2));
    assert_eq!(run(&["check-axioms", h2, "--degree", "1"]).status.code(), Some(2));
}

#[test]
fn parse_errors_carry_position() {
    let p = scratch("bad.model", "[lie L]\nbasis = x y\nbracket x y = x + z\n");
    let o = run(&["check-axioms", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3, column 19"), "{err}");
    assert!(err.contains("unknown basis label z"), "{err}");
}

#[test]
fn degree_overflow_is_refused() {
    // x^2 does not exist at truncation 2 when the generator already sits in degree 2
    let p = scratch(
        "overflow.model",
        "degree = 2\n[lie t]\nbasis = t\n[hopf U]\nenveloping = t\n[morphism sq]\nfrom = U\nto = U\nt = t^3\n",
    );
    let o = run(&["check-axioms", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("raise the truncation degree"), "{err}");
}

#[test]
fn out_format_and_degree_flags() {
    let out = std::env::temp_dir().join(format!("hopfcat-cli-out-{}.txt", std::process::id()));
    let o = run(&[
        "decompose",
        fixture("h2.model").to_str().unwrap(),
        "H2",
        "--degree",
        "3",
        "--format",
        "text",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("decompose h2.model (degree 3): PASS"), "{text}");
    assert!(text.contains("[ok] HKer(p) = im(i)"));
    let _ = std::fs::remove_file(out);
}

#[test]
fn torsion_of_a_group_algebra() {
    let o = run(&["torsion", fixture("groups.model").to_str().unwrap(), "KS3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v["results"][0]["data"];
    assert_eq!(r["torsion_part"]["name"], "K");
    assert_eq!(r["free_part"]["dim"], 6);
}

#[test]
fn timing_is_opt_in() {
    let f = fixture("groups.model");
    let plain = stdout(&run(&["check-axioms", f.to_str().unwrap(), "KC2"]));
    assert!(!plain.contains("timing_ms"));
    let timed = stdout(&run(&["check-axioms", f.to_str().unwrap(), "KC2", "--timing"]));
    assert!(timed.contains("timing_ms"));
}
