use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn ptg(args: &[&str]) -> Output {
    ptg_with(args, &[], None)
}

fn ptg_with(args: &[&str], env: &[(&str, &str)], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ptg"));
    cmd.args(args)
        .env_remove("PTG_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn ptg");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn scratch(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn discharge_prism() {
    let o = ptg(&["discharge", path(&fixture("prism7.ptg"))]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for line in ["sum_alpha: 28", "sum_beta: 0", "overcharged: 5"] {
        assert!(out.lines().any(|l| l == line), "{out}");
    }
}

#[test]
fn prime_prism_has_a_witness() {
    let o = ptg(&["prime", path(&fixture("prism7.ptg"))]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("prime: no\n"));
    assert!(out.lines().any(|l| l.starts_with("witness: conf")), "{out}");
}

#[test]
fn petersen_is_not_colourable() {
    let o = ptg(&["colour", path(&fixture("petersen3.ptg"))]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("colourable: no\n"));
}

#[test]
fn colour_output_verifies() {
    for name in ["prism7.ptg", "k4.ptg", "cube7.ptg", "hexagon7.ptg"] {
        let f = fixture(name);
        let o = ptg(&["colour", path(&f)]);
        assert_eq!(code(&o), 0, "{name}");
        let v = ptg_with(&["verify", path(&f), "-"], &[], Some(&stdout(&o)));
        assert_eq!(code(&v), 0, "{name}");
        assert_eq!(stdout(&v), "colouring: valid\n");
    }
}

#[test]
fn tampered_colouring_fails_verification() {
    let f = fixture("prism7.ptg");
    let text = stdout(&ptg(&["colour", path(&f)])).replacen("a-a'", "a-b", 1);
    let v = ptg_with(&["verify", path(&f), "-"], &[], Some(&text));
    assert_eq!(code(&v), 1);
    assert!(stdout(&v).contains("colouring: invalid"));
}

#[test]
fn budgets() {
    let f = fixture("prism7.ptg");
    let o = ptg(&["colour", "--budget", "0", path(&f)]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).starts_with("colourable: unknown\n"));
    assert_eq!(code(&ptg_with(&["colour", path(&f)], &[("PTG_BUDGET", "0")], None)), 2);
    assert_eq!(
        code(&ptg_with(&["colour", path(&f)], &[("PTG_BUDGET", "lots")], None)),
        2
    );
    assert_eq!(
        code(&ptg_with(&["colour", path(&f)], &[("PTG_BUDGET", "100000")], None)),
        0
    );
    // the flag wins over the environment
    let o = ptg_with(
        &["colour", "--budget", "0", path(&f)],
        &[("PTG_BUDGET", "100000")],
        None,
    );
    assert_eq!(code(&o), 3);
}

#[test]
fn reports_are_deterministic() {
    let f = fixture("pentagon7.ptg");
    for cmd in ["scan", "discharge", "prime", "colour", "validate"] {
        let a = ptg(&[cmd, path(&f)]);
        let b = ptg(&[cmd, path(&f)]);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        for line in stdout(&a).lines() {
            assert!(line.contains(": "), "{cmd}: {line}");
        }
    }
}

#[test]
fn parse_errors_exit_two() {
    let dup = scratch("ptg 1\nd 1\nv a b\nv b a\ne a b 2\ne b a 3\n");
    let o = ptg(&["validate", dup.path().to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 6"));
    let zero = scratch("ptg 1\nd 0\n");
    assert_eq!(code(&ptg(&["validate", zero.path().to_str().unwrap()])), 2);
    assert_eq!(code(&ptg(&["validate", "/no/such/file.ptg"])), 2);
    assert_eq!(code(&ptg(&["scan", "--conf", "17", path(&fixture("prism7.ptg"))])), 2);
}

#[test]
fn invalid_target_is_a_failed_property() {
    let text = std::fs::read_to_string(fixture("prism7.ptg"))
        .unwrap()
        .replace("e a a' 3", "e a a' 4");
    let f = scratch(&text);
    let o = ptg(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("degree: fail vertex a has m-degree 8"));
    assert_eq!(code(&ptg(&["discharge", f.path().to_str().unwrap()])), 2);
}

#[test]
fn switch_writes_a_valid_target() {
    let f = fixture("prism7.ptg");
    let out = tempfile::NamedTempFile::new().unwrap();
    let o = ptg(&[
        "switch",
        path(&f),
        "c",
        "a",
        "b",
        "b'",
        "--out",
        out.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("chord: new in [b,c,c',b']"));
    let v = ptg(&["validate", out.path().to_str().unwrap()]);
    assert_eq!(code(&v), 0);
    let piped = ptg(&["switch", path(&f), "c", "a", "b", "b'", "--out", "-"]);
    assert_eq!(stdout(&piped), std::fs::read_to_string(out.path()).unwrap());
}

#[test]
fn switch_rejections() {
    let f = fixture("prism7.ptg");
    let switched = stdout(&ptg(&["switch", path(&f), "c", "a", "b", "b'", "--out", "-"]));
    let s = scratch(&switched);
    let o = ptg(&["switch", s.path().to_str().unwrap(), "a", "b", "c", "a'"]);
    assert_eq!(code(&o), 2, "missing edge c-a'");
    let o = ptg(&["switch", path(&f), "a", "b", "c", "a"]);
    assert_eq!(code(&o), 2, "repeated vertex");
    let o = ptg(&["switch", path(&f), "c", "a", "b", "b'", "--region", "a,b,c"]);
    assert_eq!(code(&o), 2, "region misses b'");
}

#[test]
fn switch_through_a_zero_edge_is_rejected() {
    // in cut1, m(b-c) = 0
    let f = fixture("cuts/cut1.ptg");
    let o = ptg(&["switch", path(&f), "c", "b", "n0", "d"]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
    assert_eq!(stdout(&o), "valid: no\nwitness: m(b-c) would become negative\n");
}

#[test]
fn planted_cut_is_found() {
    let dir = fixture("cuts");
    let o = ptg(&[
        "cuts",
        path(&dir.join("cut1.ptg")),
        "b",
        "n0",
        "d",
        "c",
        "--class",
        "1",
        "--colouring",
        path(&dir.join("cut1.cut")),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("cut: found\n") && out.contains("verify: pass\n"), "{out}");
    let o = ptg(&["cuts", path(&dir.join("cut1.ptg")), "b", "n0", "d", "c", "--class", "9"]);
    assert_eq!(code(&o), 2);
}
