use std::process::Command;

fn torigraph(args: &[&str]) -> (bool, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_torigraph"))
        .args(args)
        .output()
        .expect("binary runs");
    let mut text = String::from_utf8(out.stdout).unwrap();
    text.push_str(&String::from_utf8(out.stderr).unwrap());
    (out.status.success(), text)
}

#[test]
fn enumerate_writes_graph6_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n4.g6");
    let (ok, _) = torigraph(&["enumerate", "--n", "4", "--out", path.to_str().unwrap()]);
    assert!(ok);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.starts_with('C')));
}

#[test]
fn classify_then_table() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for n in ["3", "4", "5"] {
        let path = dir.path().join(format!("n{n}.jsonl"));
        let (ok, msg) = torigraph(&[
            "classify",
            "--n",
            n,
            "--iterations",
            "200",
            "--seed",
            "7",
            "--fan-cap",
            "10",
            "--jobs",
            "2",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(ok, "{msg}");
        files.push(path);
    }
    let mut args = vec!["table1", "--records"];
    args.extend(files.iter().map(|p| p.to_str().unwrap()));
    let (ok, csv) = torigraph(&args);
    assert!(ok, "{csv}");
    assert_eq!(
        csv.lines().collect::<Vec<_>>(),
        [
            "n,connected,quad_generated,zero_ideals,star,star_deg1",
            "3,2,2,2,0,0",
            "4,6,6,3,0,0",
            "5,21,20,7,0,0"
        ]
    );
}

#[test]
fn table_rejects_truncated_records() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n4.jsonl");
    let (ok, _) = torigraph(&[
        "classify",
        "--n",
        "4",
        "--iterations",
        "10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(ok);
    let text = std::fs::read_to_string(&path).unwrap();
    let cut: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
    std::fs::write(&path, cut).unwrap();
    let (ok, msg) = torigraph(&["table1", "--records", path.to_str().unwrap()]);
    assert!(!ok);
    assert!(msg.contains("expected 6"), "{msg}");
}

#[test]
fn analyze_reports_failing_condition() {
    // the 6-cycle
    let (ok, text) = torigraph(&["analyze", "--graph", "EhEG"]);
    assert!(ok, "{text}");
    assert!(text.contains("quadratically generated: no"));
    assert!(text.contains("even cycle"));
}

#[test]
fn certify_wheel_and_square() {
    let (ok, text) = torigraph(&[
        "certify",
        "--graph",
        "E|fG",
        "--fan-cap",
        "1000",
        "--iterations",
        "50",
    ]);
    assert!(ok, "{text}");
    assert!(text.starts_with("NO fan_size=70"), "{text}");
    let (ok, text) = torigraph(&["certify", "--graph", "Cl", "--fan-cap", "10"]);
    assert!(ok);
    assert!(text.starts_with("YES"), "{text}");
}

#[test]
fn gb_fan_and_kn_commands() {
    let (ok, text) = torigraph(&["gb", "--graph", "Cl", "--weights", "1,1,1,1"]);
    assert!(ok, "{text}");
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().next().unwrap().starts_with("+x["));
    assert!(text.contains("max_degree=2"));
    let (ok, _) = torigraph(&["gb", "--graph", "Cl", "--weights", "1,2"]);
    assert!(!ok);

    let (ok, text) = torigraph(&["fan", "--graph", "Cl"]);
    assert!(ok);
    assert!(
        text.starts_with("reduced_bases=2 min_degree=2 max_degree=2"),
        "{text}"
    );

    let (ok, text) = torigraph(&["kn-gb", "--n", "6", "--verify"]);
    assert!(ok);
    assert!(text.contains("basis_size=30"));
    assert!(text.contains("buchberger_criterion=PASS"));
}

#[test]
fn family_and_audit_commands() {
    let (ok, text) = torigraph(&[
        "family",
        "--n",
        "5",
        "--iterations",
        "100",
        "--fan-cap",
        "100",
    ]);
    assert!(ok, "{text}");
    assert!(text.contains("fan: 70 bases"));
    assert!(text.ends_with("result: PASS\n"), "{text}");
    let (ok, text) = torigraph(&[
        "audit",
        "--graph",
        "E|fG",
        "--iterations",
        "2000",
        "--fan-cap",
        "100",
    ]);
    assert!(ok, "{text}");
    assert!(text.contains("minimal: true"));
}
