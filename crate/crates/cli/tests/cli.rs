use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn toric(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_toric"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn sum_glued_quadrics_golden() {
    let (code, stdout, stderr) = toric(&["sum", &data("glued.ideal"), "--certify", "--max-degree", "3"]);
    assert_eq!(code, 0, "{stderr}");
    assert_eq!(
        stdout,
        "\
vars z1 z2 w1 w2 x
params t1_t t2_w s
1 -1 0 0 0
0 0 1 -1 0
1 1 1 1 1
k=2 r=1
dim(rank)=3
predicted(thm)=3
predicted(printed)=4
formula-mismatch: yes
verdict: equal-up-to-degree (d=3)
"
    );
}

#[test]
fn sum_path_family() {
    let (code, stdout, _) = toric(&["sum", &data("path.ideal"), "--certify", "--max-degree", "3"]);
    assert_eq!(code, 0);
    for line in [
        "k=3 r=1",
        "dim(rank)=4",
        "predicted(thm)=4",
        "predicted(printed)=5",
        "formula-mismatch: yes",
        "verdict: equal-up-to-degree (d=3)",
    ] {
        assert!(stdout.lines().any(|l| l == line), "missing `{line}` in\n{stdout}");
    }
}

#[test]
fn sum_without_certify_has_no_verdict() {
    let (code, stdout, _) = toric(&["sum", &data("glued.ideal")]);
    assert_eq!(code, 0);
    assert!(!stdout.contains("verdict"));
}

#[test]
fn missing_generator_is_a_witnessed_failure() {
    let text = std::fs::read_to_string(data("glued.ideal")).unwrap();
    let trimmed: String = text
        .lines()
        .filter(|l| !l.starts_with("gen w1"))
        .map(|l| format!("{l}\n"))
        .collect();
    let dir = std::env::temp_dir().join(format!("toric-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("half.ideal");
    std::fs::write(&path, trimmed).unwrap();
    let (code, stdout, _) = toric(&["sum", path.to_str().unwrap(), "--certify", "--max-degree", "3"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("verdict: missing-in-sum w1*w2 - x^2 (d=3)"), "{stdout}");
}

#[test]
fn graph_golden() {
    let (code, stdout, _) = toric(&["graph", &data("path.ideal")]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "k=3 r=1\nedge I1 I2 via x\nedge I2 I3 via y\ncomponent 1: tree {I1,I2,I3}\n"
    );
    let (code, stdout, _) = toric(&["graph", &data("triangle.ideal")]);
    assert_eq!(code, 1);
    assert!(stdout.contains("component 1: cycle {I1,I2,I3}\n"), "{stdout}");
}

#[test]
fn graph_two_shared_variables() {
    let (code, stdout, stderr) = toric(&["graph", &data("shared_two.ideal")]);
    assert_eq!((code, stdout.as_str()), (1, ""));
    assert_eq!(stderr, "error: I1 and I2 share 2 variables {a,b}\n");
}

#[test]
fn dim_golden() {
    assert_eq!(
        toric(&["dim", &data("identity.ideal")]),
        (0, "E: dim(rank)=3\n".into(), String::new())
    );
    let (code, stdout, _) = toric(&["dim", &data("path.ideal")]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "I1: dim(rank)=2\nI2: dim(rank)=2\nI3: dim(rank)=2\n");
}

#[test]
fn homog_golden() {
    assert_eq!(
        toric(&["homog", &data("cubic.ideal")]),
        (0, "C: omega=(1/3, 1/3)\n".into(), String::new())
    );
    let (code, stdout, _) = toric(&["homog", &data("nonhomog.ideal")]);
    assert_eq!(code, 1);
    assert_eq!(stdout, "I1: not homogeneous\nI2: omega=(0, 1)\n");
}

#[test]
fn kernel_golden() {
    let (code, stdout, _) = toric(&["kernel", &data("cubic.ideal"), "--max-degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "C: 3 binomials up to degree 2\n  x0*x2 - x1^2\n  x0*x3 - x1*x2\n  x1*x3 - x2^2\n"
    );
    let (code, stdout, _) = toric(&["kernel", &data("identity.ideal"), "--max-degree", "3"]);
    assert_eq!((code, stdout.as_str()), (0, "E: 0 binomials up to degree 3\n"));
}

#[test]
fn normalize_golden() {
    let (code, stdout, _) = toric(&["normalize", &data("cubic.ideal"), "--pin", "x0"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "ideal C pinned at x0\nq=1\npinned parameter: t1\nvars x0 x1 x2 x3\nparams t1 t2\n1 0 -1 -2\n0 1 2 3\n"
    );
}

#[test]
fn rejections_exit_one() {
    for (args, message) in [
        (vec!["sum", "shared_two.ideal"], "error: I1 and I2 share 2 variables {a,b}\n"),
        (vec!["sum", "triangle.ideal"], "error: cycle {I1,I2,I3}\n"),
        (vec!["sum", "nonhomog.ideal"], "error: ideal I1 is not homogeneous\n"),
    ] {
        let file = data(args[1]);
        let (code, _, stderr) = toric(&[args[0], &file]);
        assert_eq!(code, 1, "{args:?}");
        assert_eq!(stderr, message);
    }
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let glued = data("glued.ideal");
    let cubic = data("cubic.ideal");
    let cases: Vec<Vec<&str>> = vec![
        vec![],
        vec!["frobnicate"],
        vec!["dim"],
        vec!["dim", "/nonexistent/file.ideal"],
        vec!["kernel", &cubic, "--max-degree", "0"],
        vec!["kernel", &cubic, "--max-degree", "two"],
        vec!["kernel", &glued, "--ideal", "nope"],
        vec!["normalize", &glued, "--pin", "x"],
        vec!["normalize", &cubic, "--pin", "y"],
        vec!["normalize", &cubic],
        vec!["sum", &cubic, "--max-degree", "-1"],
    ];
    for args in cases {
        let (code, stdout, stderr) = toric(&args);
        assert_eq!(code, 2, "{args:?}: {stdout}{stderr}");
        assert!(!stderr.is_empty());
    }
}

#[test]
fn parse_error_names_the_line() {
    let dir = std::env::temp_dir().join(format!("toric-parse-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.ideal");
    std::fs::write(&path, "ideal A\nvars x y\nparams t\nrow 1 2 3\n").unwrap();
    let (code, _, stderr) = toric(&["dim", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line 4: row has 3 entries, expected 2"), "{stderr}");
}

#[test]
fn help_exits_zero() {
    let (code, stdout, _) = toric(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("normalize"));
}
