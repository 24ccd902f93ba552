use std::path::PathBuf;

use readk::cli::main_with_args;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = main_with_args(std::iter::once("readk").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn validate_two_pass_fixture() {
    let (code, out) = run(&["validate", &fixture("x1x2x1x2.json")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("read-2, 2-pass, order (1,2)"));
}

#[test]
fn pit_exit_codes() {
    let (code, out) = run(&["pit", "--generator", "grid", &fixture("q2.json")]);
    assert_eq!(code, 1);
    let witness = out.lines().find(|l| l.starts_with("witness")).unwrap();
    let values: Vec<i64> = witness
        .trim_start_matches("witness (")
        .trim_end_matches(')')
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert_eq!(values.len(), 6);
    let point = values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    let (code, value) = run(&["eval", &fixture("q2.json"), "--point", &point]);
    assert_eq!(code, 0);
    assert_ne!(value.trim(), "0");

    for zero in ["zero_layer.json", "zero_cancel.json"] {
        let (code, out) = run(&["pit", &fixture(zero)]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("zero (grid generator)"));
    }
    let (code, _) = run(&["pit", "/nonexistent/file.json"]);
    assert_eq!(code, 2);
}

#[test]
fn external_and_random_generators() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("points.txt");
    std::fs::write(&pts, "# x1 x2\n0 0\n1 1\n").unwrap();
    let pts = pts.display().to_string();
    let (code, out) = run(&["pit", "--generator", "external", "--points", &pts, &fixture("x1x2x1x2.json")]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("witness (1,1)"));
    let (code, out) = run(&["pit", "--generator", "random", "--seed", "3", &fixture("p2.json")]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("random generator"));
    let (code, _) = run(&["pit", "--generator", "external", &fixture("p2.json")]);
    assert_eq!(code, 2);
}

#[test]
fn iteration_bound_sweep() {
    let (code, out) = run(&["experiment", "iteration-bound", "--p", "0.5", "--r", "9", "--n-max", "10000"]);
    assert_eq!(code, 0);
    assert!(out.contains("all pass"), "{out}");
}

#[test]
fn parse_errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"field_prime\": 101,\n  \"num_vars\": x\n}\n").unwrap();
    let (code, _) = run(&["validate", &bad.display().to_string()]);
    assert_eq!(code, 2);
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for threads in ["1", "4"] {
        let path = dir.path().join(format!("qn{threads}.csv"));
        let p = path.display().to_string();
        let (code, out) = run(&[
            "experiment", "qn-evaldim", "--n", "3", "--trials", "6", "--threads", threads, "--report", &p,
        ]);
        assert_eq!(code, 0, "{out}");
        reports.push((out, std::fs::read(&path).unwrap()));
    }
    assert_eq!(reports[0], reports[1]);
    let csv = String::from_utf8(reports[0].1.clone()).unwrap();
    assert!(csv.starts_with("n,trial,s,t,dimension,matching,cross_edges,floor,pass"));
    assert_eq!(csv.lines().count(), 7);
}

#[test]
fn gen_and_collapse_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("p2.json").display().to_string();
    let (code, _) = run(&["gen", "pn", "--n", "2", "--out", &out_path]);
    assert_eq!(code, 0);
    assert_eq!(
        std::fs::read_to_string(&out_path).unwrap(),
        std::fs::read_to_string(fixture("p2.json")).unwrap()
    );
    let (code, out) = run(&["collapse", "--mode", "k-gap", &fixture("kgap_read3.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("width 1 (input width 1)"));
    let (code, _) = run(&["collapse", "--mode", "k-pass", &fixture("kgap_read3.json")]);
    assert_eq!(code, 2);
    let (code, out) = run(&["synth-roabp", &fixture("x1x2x1x2.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("width profile [1]"));
}

#[test]
fn sequence_and_evaldim_verbs() {
    let (code, out) = run(&["sequence", "check", "--labels", "1,2,1,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("regularly interleaving: yes"));
    let (code, out) = run(&["sequence", "prune", "--abp", &fixture("q2.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("pruned"));
    let (code, out) = run(&["evaldim", &fixture("p2.json"), "--s", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("dimension 3 (exact)"), "{out}");
    let (code, out) = run(&["experiment", "blocks", &fixture("q2.json"), "--r", "2"]);
    assert_eq!(code, 0, "{out}");
    let (code, _) = run(&["experiment", "eliminate", "--n", "4", "--width", "3"]);
    assert_eq!(code, 0);
}
