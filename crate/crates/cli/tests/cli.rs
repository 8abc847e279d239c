use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn xcomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xcomp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn put(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const K3: &str = "problem clique\nvertices 3\nedge 1 2\nedge 2 3\nedge 1 3\ntarget 3\n";

#[test]
fn solve_prints_answer_and_value() {
    let dir = tempfile::tempdir().unwrap();
    let f = put(dir.path(), "k3.txt", K3);
    let o = xcomp(&["solve", "--engine", "oracle", &f]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("YES\nvalue 3\n"), "{out}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = put(dir.path(), "bad.txt", "problem clique\nvertices 2\nedge 1 1\ntarget 1\n");
    assert_eq!(xcomp(&["solve", &bad]).status.code(), Some(2));

    let uncovered = put(
        dir.path(),
        "uncovered.txt",
        "problem clique-by-vc\nvertices 3\nedge 1 2\nedge 2 3\ntarget 2\nwitness 1\n",
    );
    assert_eq!(xcomp(&["solve", &uncovered]).status.code(), Some(3));

    let f = put(dir.path(), "k3.txt", K3);
    assert_eq!(xcomp(&["solve", "--engine", "fpt", &f]).status.code(), Some(1));
    assert_eq!(xcomp(&["solve", "--engine", "nope", &f]).status.code(), Some(1));
}

#[test]
fn compose_writes_instance_and_audit() {
    let dir = tempfile::tempdir().unwrap();
    let a = put(dir.path(), "a.txt", "problem clique\nvertices 3\nedge 1 2\nedge 2 3\ntarget 2\n");
    let b = put(dir.path(), "b.txt", "problem clique\nvertices 3\ntarget 2\n");
    let out = dir.path().join("out.txt");
    let o = xcomp(&["compose", "--construction", "thm7", &a, &b, "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let audit = fs::read_to_string(dir.path().join("out.txt.audit")).unwrap();
    for line in ["construction=thm7", "t_raw=2", "t=2", "n=3", "l_prime=6", "k_prime=15"] {
        assert!(audit.lines().any(|l| l == line), "{line} missing from\n{audit}");
    }
    let first = fs::read_to_string(&out).unwrap();
    let solved = xcomp(&["solve", out.to_str().unwrap()]);
    assert!(stdout(&solved).starts_with("YES"));

    let o = xcomp(&["compose", "--construction", "thm7", &a, &b, "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(fs::read_to_string(&out).unwrap(), first);

    let k4 = put(dir.path(), "c.txt", "problem clique\nvertices 4\ntarget 2\n");
    let o = xcomp(&["compose", "--construction", "thm7", &a, &k4, "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn partition_lists_classes() {
    let dir = tempfile::tempdir().unwrap();
    let a = put(dir.path(), "a.txt", K3);
    let b = put(dir.path(), "b.txt", "problem clique\nvertices 3\ntarget 5\n");
    let o = xcomp(&["partition", "--construction", "thm7", &a, &b]);
    let out = stdout(&o);
    assert!(out.contains("thm7[n=3,l=3]"), "{out}");
    assert!(out.contains("thm7[malformed]"), "{out}");
}

#[test]
fn transform_and_turing_kernel() {
    let dir = tempfile::tempdir().unwrap();
    let vc = put(dir.path(), "vc.txt", "problem vc-by-clique-deletion\nvertices 4\nedge 1 2\nedge 1 3\nedge 1 4\nedge 2 3\nedge 2 4\nedge 3 4\ntarget 3\nwitness 1\n");
    let out = dir.path().join("apex.txt");
    let o = xcomp(&["transform", "--rule", "thm9-oct", &vc, "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("problem oct-by-clique-deletion\nvertices 6\n"), "{text}");

    let star = put(dir.path(), "star.txt", "problem clique-by-vc\nvertices 4\nedge 1 2\nedge 1 3\nedge 1 4\ntarget 2\nwitness 1\n");
    let kdir = dir.path().join("kernel");
    let o = xcomp(&["turing-kernel", &star, "-o", kdir.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(fs::read_dir(&kdir).unwrap().count(), 4);
}

#[test]
fn budget_and_verify() {
    let o = xcomp(&["budget", "--b", "2", "--c", "1", "--d", "1", "--eps", "1", "--s", "2"]);
    let out = stdout(&o);
    assert!(out.starts_with("t 8\ndelta 0.333"), "{out}");
    let o = xcomp(&["budget", "--b", "0", "--c", "0", "--d", "1", "--eps", "1", "--s", "2"]);
    assert_eq!(o.status.code(), Some(1));

    let o = xcomp(&["verify", "--construction", "thm10-oct", "--trials", "4", "--seed", "9"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("agreements=4"));
}
