use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn scmh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scmh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn counterexample_is_rejected() {
    let o = scmh(&["check-triangle", data("ex_nobd.tri").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "REJECT condition=c at (i=3,j=3)");
}

#[test]
fn witness_realizes_the_triangle() {
    let dir = std::env::temp_dir().join(format!("scmh-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("w.fac");
    let o = scmh(&["witness", data("small.tri").to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = scmh(&["htriangle", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(data("small.tri")).unwrap());
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn witness_of_a_rejected_triangle_exits_one() {
    let o = scmh(&["witness", data("ex_nobd.tri").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn betti_table_text() {
    let o = scmh(&["betti", data("ideal.gens").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("2: 2 1"), "{text}");
}

#[test]
fn bfs_translations_agree() {
    let path = stdout(&scmh(&["bfs", "path", "NEENENNEEEN"]));
    assert!(path.contains("{1,4,6,7,11}") && path.contains("w1*w3*w4^2"));
    let set = stdout(&scmh(&["bfs", "set", "1,4,6,7,11", "--r", "6", "--a", "5"]));
    assert_eq!(set, path);
    let o = scmh(&["bfs", "path", "NEEN", "--r", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rho_and_regular_composition() {
    let o = scmh(&["rho", "--vars", "2", "--cap", "2", "--h", "1,4,9,4,1", "22"]);
    assert_eq!(stdout(&o).trim(), "7");
    let o = scmh(&["rho", "--vars", "2", "--cap", "2", "--h", "1,4,9,4,1", "22", "--oracle"]);
    assert_eq!(stdout(&o).trim(), "7");
    let o = scmh(&["rho", "--vars", "2", "--cap", "2", "--h", "1,2,0", "7", "--positivity", "strict"]);
    assert_eq!((o.status.code(), stdout(&o).trim().to_string()), (Some(1), "INFEASIBLE".to_string()));
    let o = scmh(&["regular-composition", "--vars", "2", "--cap", "2", "--h", "1,4,9,4,1", "22"]);
    assert!(stdout(&o).starts_with("1 10\nu1 4\nu1^2 1\nu2 5\n"));
}

#[test]
fn generator_array_checks() {
    let dir = std::env::temp_dir().join(format!("scmh-arr-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    // Degrees 2..6 of the rotated counterexample on six variables.
    let bad = dir.join("bad.arr");
    std::fs::write(&bad, "1 2 0 0 0\n1 3 3 4\n1 4 7\n1 5\n1\n").unwrap();
    let o = scmh(&["check-generator-array", bad.to_str().unwrap(), "--n", "6", "--r", "6", "--d", "2"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), "REJECT condition=c at (i=3,j=3)"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn census_with_verification() {
    let o = scmh(&["census", "--n", "4", "--dmax", "2", "--verify", "all", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS census verification"));
}

#[test]
fn format_errors_exit_two_with_line_numbers() {
    let dir = std::env::temp_dir().join(format!("scmh-fmt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.tri");
    std::fs::write(&bad, "1\n1 2 3\n").unwrap();
    let o = scmh(&["check-triangle", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(scmh(&["no-such-command"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).ok();
}
