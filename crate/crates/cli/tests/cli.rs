use std::path::Path;
use std::process::{Command, Output};

fn copnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_copnum"))
        .args(args)
        .env_remove("COPNUM_JOBS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

const PETERSEN: &str = "IheA@GUAo";

#[test]
fn solve_examples() {
    let o = copnum(&["solve", "--graph6", PETERSEN]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("cop_number = 3"));

    let o = copnum(&["solve", "--graph6", "A_"]);
    assert!(stdout(&o).contains("cop_number = 1"));

    let dir = tempfile::tempdir().unwrap();
    let c4 = dir.path().join("c4.txt");
    std::fs::write(&c4, "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let o = copnum(&["solve", "--edges", path_str(&c4)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("cop_number = 2"));
}

#[test]
fn solve_reports_bound_verdict_and_trace() {
    let o = copnum(&["solve", "--graph6", PETERSEN, "--lemmas", "--trace"]);
    let s = stdout(&o);
    assert!(s.contains("lower_bound = 3"));
    assert!(s.contains("prune = unknown"));
    assert!(s.contains("petersen_by_property = true"));
    assert!(s.contains("captured"));
}

#[test]
fn solve_exit_codes() {
    assert_eq!(
        code(&copnum(&["solve", "--graph6", PETERSEN, "--max-k", "2"])),
        2
    );
    assert_eq!(code(&copnum(&["solve", "--graph6", "not graph6"])), 1);
    assert_eq!(code(&copnum(&["solve"])), 1);
    assert_eq!(
        code(&copnum(&["solve", "--graph6", "A_", "--edges", "x"])),
        1
    );
    // two isolated vertices
    assert_eq!(code(&copnum(&["solve", "--graph6", "A?"])), 1);
}

#[test]
fn enumerate_examples() {
    let o = copnum(&["enumerate", "--n", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 6);
    assert!(String::from_utf8_lossy(&o.stderr).contains("6 graphs"));

    assert_eq!(stdout(&copnum(&["enumerate", "--n", "1"])), "@\n");

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cubic.g6");
    let o = copnum(&[
        "enumerate",
        "--n",
        "10",
        "--min-degree",
        "3",
        "--max-degree",
        "3",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 19);
    assert!(text.lines().any(|l| l == "IsP@PGXD_"));

    assert_eq!(code(&copnum(&["enumerate", "--n", "17"])), 1);
    assert_eq!(
        code(&copnum(&[
            "enumerate",
            "--n",
            "5",
            "--min-degree",
            "4",
            "--max-degree",
            "2"
        ])),
        1
    );
}

#[test]
fn survey_writes_records_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let csv = dir.path().join("s.csv");
    let o = copnum(&[
        "survey",
        "--n",
        "5",
        "--mode",
        "full",
        "--out",
        path_str(&out),
        "--summary",
        path_str(&csv),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("classes: 21"));
    let lines: Vec<serde_json::Value> = std::fs::read_to_string(&out)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 21);
    for r in &lines {
        assert!(r["cop_number"].as_u64().unwrap() <= 2);
        assert!(r.get("pruned_by").is_none());
        assert!(r["micros"].is_u64());
    }
    let summary = std::fs::read_to_string(&csv).unwrap();
    let mut rows = summary.lines();
    assert_eq!(
        rows.next(),
        Some("n,mode,classes,c1,c2,c3plus,pruned,seconds")
    );
    assert!(rows.next().unwrap().starts_with("5,full,21,16,5,0,0,"));
}

#[test]
fn pruned_records_carry_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let o = copnum(&[
        "survey",
        "--n",
        "8",
        "--mode",
        "pruned",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(code(&o), 0);
    for line in std::fs::read_to_string(&out).unwrap().lines() {
        let r: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(
            r.get("cop_number").is_some() != r.get("pruned_by").is_some(),
            "{line}"
        );
    }
}

fn stable_report(dir: &Path, name: &str, extra: &[&str]) -> Vec<u8> {
    let out = dir.join(name);
    let mut args = vec![
        "survey",
        "--n",
        "7",
        "--mode",
        "audit",
        "--stable-output",
        "--seed",
        "5",
        "--out",
        path_str(&out),
    ];
    args.extend_from_slice(extra);
    assert_eq!(code(&copnum(&args)), 0);
    std::fs::read(&out).unwrap()
}

#[test]
fn reports_are_deterministic_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let a = stable_report(dir.path(), "a", &["--jobs", "1"]);
    let b = stable_report(dir.path(), "b", &["--jobs", "1"]);
    let c = stable_report(dir.path(), "c", &["--jobs", "3"]);
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert!(!String::from_utf8_lossy(&a).contains("micros"));
}

#[test]
fn stopped_survey_resumes_to_the_same_result() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let full_out = d.join("full.jsonl");
    let full_csv = d.join("full.csv");
    let whole = copnum(&[
        "survey",
        "--n",
        "8",
        "--stable-output",
        "--out",
        path_str(&full_out),
        "--summary",
        path_str(&full_csv),
    ]);
    assert_eq!(code(&whole), 0);

    let out = d.join("part.jsonl");
    let csv = d.join("part.csv");
    let ck = d.join("ck.json");
    let base = [
        "survey",
        "--n",
        "8",
        "--stable-output",
        "--out",
        path_str(&out),
        "--summary",
        path_str(&csv),
        "--checkpoint",
        path_str(&ck),
    ];
    let mut stopped = 0;
    loop {
        let mut args = base.to_vec();
        args.extend(["--stop-after", "3000"]);
        let o = copnum(&args);
        if code(&o) == 0 {
            break;
        }
        assert_eq!(code(&o), 1);
        assert!(ck.exists());
        stopped += 1;
        assert!(stopped < 10);
    }
    assert_eq!(stopped, 3);
    assert!(!ck.exists());
    assert_eq!(
        std::fs::read(&out).unwrap(),
        std::fs::read(&full_out).unwrap()
    );
    let without_seconds = |p: &Path| {
        let s = std::fs::read_to_string(p).unwrap();
        s.rsplit_once(',').unwrap().0.to_string()
    };
    assert_eq!(without_seconds(&csv), without_seconds(&full_csv));
}

#[test]
fn checkpoint_from_other_settings_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("ck.json");
    let ckp = path_str(&ck);
    let o = copnum(&[
        "survey",
        "--n",
        "8",
        "--checkpoint",
        ckp,
        "--stop-after",
        "100",
    ]);
    assert_eq!(code(&o), 1);
    let o = copnum(&[
        "survey",
        "--n",
        "8",
        "--mode",
        "pruned",
        "--checkpoint",
        ckp,
    ]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("different settings"));
}

#[test]
fn external_stream_matches_generator() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("g.g6");
    assert_eq!(
        code(&copnum(&["enumerate", "--n", "7", "--out", path_str(&g6)])),
        0
    );
    let a = copnum(&["survey", "--n", "7", "--in", path_str(&g6)]);
    let b = copnum(&["survey", "--n", "7"]);
    assert_eq!(code(&a), 0);
    let body = |o: &Output| {
        stdout(o)
            .lines()
            .skip(1)
            .filter(|l| !l.starts_with("seconds"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(body(&a), body(&b));

    std::fs::write(&g6, "FQhVO\nnot graph6\n").unwrap();
    let o = copnum(&["survey", "--n", "7", "--in", path_str(&g6)]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn audit_contradiction_exits_2() {
    let o = copnum(&[
        "survey",
        "--n",
        "6",
        "--mode",
        "audit",
        "--inject-fault",
        "cycles-need-three-cops",
    ]);
    assert_eq!(code(&o), 2);
    let o = copnum(&["survey", "--n", "6", "--mode", "audit"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("0 contradictions"));
}

#[test]
fn verify_small_orders_and_fault() {
    let o = copnum(&["verify-m3", "--max-n", "7", "--jobs", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("VERIFIED"));
    let o = copnum(&[
        "verify-m3",
        "--mode",
        "full",
        "--max-n",
        "7",
        "--inject-fault",
        "cycles-need-three-cops",
    ]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("Bw"));
}

#[test]
fn jobs_environment_variable_is_honored() {
    let run = |env: &str, extra: &[&str]| {
        let mut args = vec!["survey", "--n", "4"];
        args.extend_from_slice(extra);
        Command::new(env!("CARGO_BIN_EXE_copnum"))
            .args(&args)
            .env("COPNUM_JOBS", env)
            .output()
            .unwrap()
    };
    let o = run("0", &[]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("jobs"));
    assert_eq!(code(&run("0", &["--jobs", "2"])), 0);
    assert_eq!(code(&run("3", &[])), 0);
}

#[cfg(unix)]
#[test]
fn interrupt_leaves_a_resumable_checkpoint() {
    use std::time::{Duration, Instant};

    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = d.join("r.jsonl");
    let ck = d.join("ck.json");
    let args = [
        "survey",
        "--n",
        "9",
        "--mode",
        "full",
        "--stable-output",
        "--jobs",
        "2",
        "--out",
        path_str(&out),
        "--checkpoint",
        path_str(&ck),
    ];
    let child = Command::new(env!("CARGO_BIN_EXE_copnum"))
        .args(args)
        .stdout(std::process::Stdio::null())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    // wait until some output exists so the signal lands mid-run
    let start = Instant::now();
    while std::fs::metadata(&out).map_or(0, |m| m.len()) < 100_000
        && start.elapsed() < Duration::from_secs(60)
    {
        std::thread::sleep(Duration::from_millis(20));
    }
    Command::new("kill")
        .args(["-INT", &child.id().to_string()])
        .status()
        .unwrap();
    let o = child.wait_with_output().unwrap();
    if code(&o) == 0 {
        // finished before the signal arrived; nothing to resume
        return;
    }
    assert_eq!(code(&o), 1, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(ck.exists());
    let o = copnum(&args);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("classes: 261080"));
    assert!(stdout(&o).contains("cop_number >= 3: 0"));
    assert_eq!(
        std::fs::read_to_string(&out).unwrap().lines().count(),
        261_080
    );
}
