use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qfredkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfredkin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('\t')))
        .unwrap_or_else(|| panic!("no {key} in\n{out}"))
}

fn synth(dir: &Path, n: u32) -> String {
    let path = dir.join(format!("f{n}.qc"));
    let o = qfredkin(&[
        "synth",
        "--controls",
        &n.to_string(),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    path.to_str().unwrap().to_string()
}

#[test]
fn synth_then_verify_three_qubits() {
    let dir = tempfile::tempdir().unwrap();
    let file = synth(dir.path(), 1);
    let o = qfredkin(&["verify", &file]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(field(&out, "max_deviation").parse::<f64>().unwrap() <= 1e-12);
    assert_eq!(field(&out, "controlled"), "5");
    assert_eq!(field(&out, "single"), "2");
    assert_eq!(field(&out, "nearest_neighbor"), "true");
}

#[test]
fn synth_writes_to_stdout_without_out() {
    let o = qfredkin(&["synth", "--controls", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("wires: c:2 t1:3 t2:2\n"));
    assert_eq!(stdout(&o).lines().count(), 8);
}

#[test]
fn verify_with_explicit_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let file = synth(dir.path(), 3);
    let o = qfredkin(&["verify", &file, "--oracle", "fredkin:3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "controlled"), "9");
    assert_eq!(field(&out, "single"), "6");

    let o = qfredkin(&["verify", &file, "--oracle", "fredkin:2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qfredkin(&["verify", &file, "--oracle", "toffoli:3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_fails_on_a_broken_circuit() {
    let dir = tempfile::tempdir().unwrap();
    let file = synth(dir.path(), 1);
    let text = fs::read_to_string(&file).unwrap();
    let broken: Vec<&str> = text.lines().filter(|l| !l.starts_with("gate X")).collect();
    let path = dir.path().join("broken.qc");
    fs::write(&path, broken.join("\n")).unwrap();
    let o = qfredkin(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(field(&stdout(&o), "result"), "fail");
    assert!(!o.stderr.is_empty());
}

#[test]
fn parse_errors_exit_two_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.qc");
    fs::write(
        &path,
        "wires: c:2 t1:3 t2:2\ngate CNOT control=t9@1 target=t1\n",
    )
    .unwrap();
    let o = qfredkin(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    assert!(err.contains("unknown wire t9"), "{err}");
    assert!(o.stdout.is_empty());

    let o = qfredkin(&["verify", dir.path().join("missing.qc").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(qfredkin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        qfredkin(&["synth", "--controls", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn sim_swaps_targets_when_control_is_set() {
    let dir = tempfile::tempdir().unwrap();
    let file = synth(dir.path(), 1);
    let o = qfredkin(&["sim", &file, "--input", "1,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1, "{out}");
    let parts: Vec<&str> = lines[0].split(' ').collect();
    assert_eq!(parts[0], "1,0,1");
    assert_eq!(parts[1].parse::<f64>().unwrap(), 1.0);
    assert_eq!(parts[2].parse::<f64>().unwrap(), 0.0);

    let o = qfredkin(&["sim", &file, "--input", "0,1,0"]);
    assert!(stdout(&o).starts_with("0,1,0 "));
    let o = qfredkin(&["sim", &file, "--input", "1,5,0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qfredkin(&["sim", &file, "--input", "1,x,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cost_table_is_tab_separated() {
    let o = qfredkin(&["cost", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "n\tqsd\tlower_bound\tli\tfredkin\n1\t1/4\t0\t-3/4\t5\n2\t3\t9/4\t4\t7\n3\t20\t27/2\t16\t9\n"
    );
    let o = qfredkin(&["cost", "--max-n", "2", "--formula", "fredkin"]);
    assert_eq!(stdout(&o), "n\tfredkin\n1\t5\n2\t7\n");
    let o = qfredkin(&["cost", "--max-n", "4", "--format", "human"]);
    assert!(stdout(&o).contains("n^2 (ref)"));
    assert_eq!(
        qfredkin(&["cost", "--max-n", "2", "--formula", "nope"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn heralded_trials_succeed_half_the_time() {
    let o = qfredkin(&[
        "photonic",
        "--variant",
        "heralded",
        "--trials",
        "100",
        "--seed",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<Vec<&str>> = out
        .lines()
        .skip_while(|l| !l.starts_with("trial\t"))
        .skip(1)
        .take(100)
        .map(|l| l.split('\t').collect())
        .collect();
    assert_eq!(rows.len(), 100);
    for r in rows {
        assert!((r[1].parse::<f64>().unwrap() - 0.5).abs() <= 1e-12);
        assert!((r[2].parse::<f64>().unwrap() - 1.0).abs() <= 1e-12);
        assert!(r[3].parse::<f64>().unwrap() <= 1e-12);
    }
    assert_eq!(field(&out, "result"), "pass");
}

#[test]
fn photonic_output_is_reproducible() {
    let run = |seed: &str| {
        stdout(&qfredkin(&[
            "photonic",
            "--variant",
            "heralded",
            "--trials",
            "10",
            "--seed",
            seed,
        ]))
    };
    assert_eq!(run("3"), run("3"));
    let o = qfredkin(&["photonic", "--variant", "deterministic", "--trials", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        field(&stdout(&o), "success_probability_min")
            .parse::<f64>()
            .unwrap(),
        1.0
    );
    assert_eq!(
        qfredkin(&["photonic", "--variant", "lossy"]).status.code(),
        Some(2)
    );
}
