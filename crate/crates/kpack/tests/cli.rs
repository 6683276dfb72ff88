use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn kpack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpack"))
        .args(args)
        .env_remove("KPACK_BRUTE_CAP")
        .env_remove("KPACK_TU_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = kpack(args);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn solve_examples() {
    let claw = fixture("claw.edges");
    let out = ok(&["solve", "--graph", claw.to_str().unwrap(), "--k", "2"]);
    assert!(out.starts_with("optimum 2\n"), "{}", out);

    let fig2 = fixture("fig2.adj");
    let out = ok(&["solve", "--graph", fig2.to_str().unwrap(), "--format", "adj", "--k", "1"]);
    assert!(out.starts_with("optimum 1\n"));
    assert!(out.contains("method branch_and_bound\n"));

    let out = ok(&["solve", "--family", "cycle", "--n", "5", "--k", "2"]);
    assert!(out.starts_with("optimum 3\nk 2\nmethod brute\n"));

    let out = ok(&["solve", "--family", "path", "--n", "7", "--k", "2", "--method", "bnb", "--out", "kv"]);
    assert!(out.starts_with("optimum=6\nk=2\nmethod=branch_and_bound\n"), "{}", out);
}

#[test]
fn relax_examples() {
    let fig2 = fixture("fig2.adj");
    let out = ok(&["relax", "--graph", fig2.to_str().unwrap(), "--format", "adj"]);
    assert!(out.starts_with("objective 7/3\n"));
    assert!(out.contains("certificate ok\n"));

    assert!(ok(&["relax", "--family", "clique", "--n", "6"]).starts_with("objective 1\n"));
    assert!(ok(&["relax", "--family", "path", "--n", "3"]).starts_with("objective 1\nq 1\n"));
    assert!(ok(&["relax", "--family", "cycle", "--n", "5", "--k", "2"]).starts_with("objective 10/3\n"));
}

#[test]
fn bounds_and_tu() {
    let out = ok(&["bounds", "--family", "cycle", "--n", "6", "--k", "2", "--with-exact", "--out", "kv"]);
    assert!(out.contains("exact=4\n"));
    assert!(out.contains("lower_diam=4\n"));

    let claw = fixture("claw.edges");
    let out = ok(&["tu-check", "--graph", claw.to_str().unwrap(), "--k", "2"]);
    assert!(out.starts_with("det -2\nNOT TU"), "{}", out);
    assert!(ok(&["tu-check", "--family", "path", "--n", "6", "--k", "3"]).contains("\nTU\n"));
}

#[test]
fn family_subcommand() {
    let out = ok(&["family", "--family", "cycle", "--n", "7", "--k", "3"]);
    assert!(out.starts_with("optimum 7\n"));
    assert!(out.ends_with("formula 7\n"));
    let out = ok(&["family", "--family", "star", "--n", "4"]);
    assert!(out.ends_with("formula none\n"));
}

#[test]
fn output_is_deterministic() {
    let args = ["solve", "--family", "cycle", "--n", "11", "--k", "4", "--method", "bnb"];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    std::fs::write(&bad, "3 2\n1 2\n2 9\n").unwrap();
    let o = kpack(&["solve", "--graph", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    assert_eq!(kpack(&["solve", "--graph", "/nonexistent/g.edges"]).status.code(), Some(2));
    assert_eq!(kpack(&["solve", "--family", "cycle", "--n", "2"]).status.code(), Some(2));
    assert_eq!(kpack(&["solve", "--family", "path", "--n", "3", "--k", "0"]).status.code(), Some(2));
    assert_eq!(kpack(&["solve"]).status.code(), Some(2));
}

#[test]
fn cap_refusal_exits_3() {
    let fig2 = fixture("fig2.adj");
    let o = kpack(&["solve", "--graph", fig2.to_str().unwrap(), "--format", "adj", "--method", "brute"]);
    assert_eq!(o.status.code(), Some(3));

    let o = Command::new(env!("CARGO_BIN_EXE_kpack"))
        .args(["solve", "--family", "path", "--n", "8", "--method", "brute"])
        .env("KPACK_BRUTE_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_subcommand() {
    let out = ok(&["verify-paper", "--only", "1,7"]);
    assert!(out.ends_with("2/2 criteria passed\n"));

    let o = kpack(&["verify-paper", "--only", "4", "--mutate"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("FAIL")));

    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(fixture("claw.edges"), dir.path().join("claw.edges")).unwrap();
    let fig2 = std::fs::read_to_string(fixture("fig2.adj")).unwrap();
    std::fs::write(dir.path().join("fig2.adj"), fig2.replacen("0 1", "0 7", 1)).unwrap();
    let o = kpack(&["verify-paper", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let empty = tempfile::tempdir().unwrap();
    let o = kpack(&["verify-paper", "--fixtures", empty.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn other_seeds_pass_too() {
    for seed in ["1", "2"] {
        let out = ok(&["verify-paper", "--seed", seed, "--only", "5,6,9,11"]);
        assert!(out.ends_with("4/4 criteria passed\n"), "{}", out);
    }
}
