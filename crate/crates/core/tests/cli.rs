//! End-to-end runs of the `islrc` binary: exit-code contract, file formats
//! and the construct → verify round trip.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn islrc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_islrc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path_str = path.to_str().unwrap().to_string();
    let mut all = vec!["construct"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", &path_str]);
    let out = islrc(&all);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path_str
}

#[test]
fn construct_then_verify_reproduces_the_certificate() {
    let dir = TempDir::new().unwrap();
    let h = dir.path().join("h.txt");
    let report = dir.path().join("report.json");
    let out = islrc(&[
        "construct",
        "-c",
        "1",
        "-p",
        "5",
        "-m",
        "1",
        "-o",
        h.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let constructed: Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(constructed["command"], "construct");
    assert_eq!(constructed["inputs"]["source"]["p"], 5);

    let out = islrc(&[
        "verify",
        h.to_str().unwrap(),
        "--l",
        "25",
        "--r",
        "5",
        "--t",
        "5",
    ]);
    assert_eq!(code(&out), 0);
    let verified = json(&out);
    assert_eq!(verified["results"]["certificate"]["passed"], true);
    let a = serde_json::to_string(&constructed["results"]["certificate"]).unwrap();
    let b = serde_json::to_string(&verified["results"]["certificate"]).unwrap();
    assert_eq!(a, b, "certificates differ byte-for-byte");

    // the inputs echo is enough to re-run the command
    assert_eq!(verified["inputs"]["locality"]["l"], 25);
    assert!(verified["tool_version"].is_string());
    assert!(verified["elapsed_ms"].is_u64());
}

#[test]
fn construct_without_output_prints_the_matrix() {
    let out = islrc(&["construct", "-c", "2", "-p", "2"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "# construction=2 p=2 m=1 n=14 k=7 r=3 t=3 d_claimed=4 q=2"
    );
    assert_eq!(lines.next().unwrap(), "2 7 14");
    let report: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(report["results"]["certificate"]["r_observed"], 3);
    assert_eq!(report["results"]["row_intersections"]["max"], 1);
}

#[test]
fn fills_and_target_fields_reach_the_header() {
    let out = islrc(&[
        "construct",
        "-c",
        "1",
        "-p",
        "2",
        "--over",
        "4",
        "--fill",
        "random",
        "--seed",
        "9",
    ]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with(
        "# construction=1 p=2 m=1 n=8 k=4 r=2 t=2 d_claimed=3 q=4 fill=random:9\n4 4 8\n"
    ));
    let out = islrc(&[
        "construct",
        "-c",
        "1",
        "-p",
        "2",
        "--over",
        "3",
        "--fill",
        "uniform:2",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn distance_claims_are_certified_or_refuted() {
    let dir = TempDir::new().unwrap();
    let h = construct(dir.path(), "h.txt", &["-c", "1", "-p", "5"]);

    let out = islrc(&["distance", &h, "--claim", "6"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["results"]["verified"], true);
    assert_eq!(r["results"]["distance"]["certificate"]["d"], 6);
    let witness = r["results"]["distance"]["witness_text"].as_str().unwrap();
    assert!(witness.starts_with("2 1 50\n"));

    let out = islrc(&["distance", &h, "--claim", "7"]);
    assert_eq!(code(&out), 1);
    let r = json(&out);
    assert_eq!(r["results"]["verified"], false);
    assert_eq!(
        r["results"]["refuted"]["refutation"]["kind"],
        "lighter_codeword"
    );
    assert_eq!(r["results"]["refuted"]["refutation"]["weight"], 6);

    let out = islrc(&["distance", &h, "--claim", "5"]);
    assert_eq!(code(&out), 1);
    assert_eq!(
        json(&out)["results"]["refuted"]["refutation"]["kind"],
        "no_codeword_of_weight"
    );

    let out = islrc(&["distance", &h, "--mode", "subsets", "--w-max", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["exceeds"]["lower_bound"], 5);

    let out = islrc(&["distance", &h, "--mode", "enumerate", "--enum-cap", "1000"]);
    assert_eq!(code(&out), 1, "2^25 codewords exceeds the cap");
}

#[test]
fn small_codes_enumerate_and_certify() {
    let dir = TempDir::new().unwrap();
    let h = construct(dir.path(), "h.txt", &["-c", "1", "-p", "2"]);
    let out = islrc(&["distance", &h, "--mode", "enumerate", "--claim", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["distance"]["certificate"]["work"], 15);
    let out = islrc(&["distance", &h, "--mode", "enumerate", "--claim", "4"]);
    assert_eq!(code(&out), 1);

    let out = islrc(&["certify", &h, "--r", "2", "--t", "2", "--claim", "3"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["results"]["passed"], true);
    assert_eq!(r["results"]["bounds"]["distance_optimal"], true);
    assert_eq!(r["results"]["bounds"]["rate_optimal"], true);

    let out = islrc(&["certify", &h, "--r", "2", "--t", "3", "--claim", "3"]);
    assert_eq!(code(&out), 1, "availability 3 is not provided");
}

#[test]
fn bounds_table_and_json() {
    let out = islrc(&[
        "bounds", "--n", "50", "--k", "25", "--d", "6", "--r", "5", "--t", "5",
    ]);
    assert_eq!(code(&out), 0);
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.contains("distance_optimal"));
    assert!(table
        .lines()
        .any(|l| l.starts_with("d <= n-k-ceil(k/r)+2") && l.ends_with(" 22")));

    let out = islrc(&[
        "bounds", "--n", "50", "--k", "25", "--d", "6", "--r", "5", "--t", "5", "--json",
    ]);
    let r = json(&out);
    assert_eq!(r["results"]["wang_zhang"], 21);
    assert_eq!(r["results"]["rate_prakash"], "5/7");
    assert_eq!(r["results"]["distance_optimal"], true);

    let out = islrc(&[
        "bounds", "--n", "5", "--k", "0", "--d", "1", "--r", "1", "--t", "1",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn puncture_rows_and_suite() {
    let dir = TempDir::new().unwrap();
    let h = construct(dir.path(), "h.txt", &["-c", "1", "-p", "2"]);
    let sub = dir.path().join("sub.txt");
    let out = islrc(&["puncture", &h, "--rows", "1,3", "-o", sub.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["results"]["report"]["classification"], "mds");
    assert_eq!(r["results"]["h_sub_text"], "2 2 3\n1 1 0\n1 0 1\n");
    assert_eq!(
        std::fs::read_to_string(&sub).unwrap(),
        "2 2 3\n1 1 0\n1 0 1\n"
    );

    let out = islrc(&["puncture", &h, "--rows", "7"]);
    assert_eq!(code(&out), 2);

    let big = construct(dir.path(), "big.txt", &["-c", "1", "-p", "5"]);
    let out = islrc(&[
        "puncture", &big, "--suite", "--r", "5", "--t", "5", "--d", "6", "--count", "10", "--seed",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["results"]["passed"], true);
    assert_eq!(
        r["results"]["suite"]["instances"].as_array().unwrap().len(),
        20
    );
}

#[test]
fn simulate_is_deterministic_across_worker_counts() {
    let dir = TempDir::new().unwrap();
    let t1 = dir.path().join("t1.txt");
    let t3 = dir.path().join("t3.txt");
    let a = islrc(&[
        "--workers",
        "1",
        "simulate",
        "-c",
        "2",
        "-p",
        "2",
        "--seed",
        "5",
        "--trials",
        "300",
        "--trace",
        t1.to_str().unwrap(),
    ]);
    let b = islrc(&[
        "simulate",
        "-c",
        "2",
        "-p",
        "2",
        "--seed",
        "5",
        "--trials",
        "300",
        "--trace",
        t3.to_str().unwrap(),
        "--workers",
        "3",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(code(&b), 0);
    let (ra, rb) = (json(&a), json(&b));
    assert_eq!(ra["results"], rb["results"]);
    assert_eq!(ra["results"]["succeeded"], 300);
    assert_eq!(ra["results"]["max_reads"], 3);
    let trace = std::fs::read_to_string(&t1).unwrap();
    assert_eq!(trace, std::fs::read_to_string(&t3).unwrap());
    assert_eq!(trace.lines().count(), 300);

    let h = construct(dir.path(), "h.txt", &["-c", "1", "-p", "3"]);
    let out = islrc(&[
        "simulate", "--matrix", &h, "--r", "3", "--t", "3", "--trials", "50",
    ]);
    assert_eq!(code(&out), 0);
    let out = islrc(&[
        "simulate", "--matrix", &h, "--r", "3", "--t", "3", "--trials", "0",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn usage_and_format_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "2 2 3\n1 0 1\n1 x 0\n").unwrap();
    let out = islrc(&["verify", bad.to_str().unwrap(), "--r", "2", "--t", "1"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");

    let not_standard = dir.path().join("ns.txt");
    std::fs::write(&not_standard, "2 2 4\n1 0 1 1\n0 1 0 1\n").unwrap();
    assert_eq!(
        code(&islrc(&[
            "verify",
            not_standard.to_str().unwrap(),
            "--r",
            "2",
            "--t",
            "1"
        ])),
        2
    );

    assert_eq!(code(&islrc(&["verify"])), 2);
    assert_eq!(code(&islrc(&["construct", "-c", "3", "-p", "2"])), 2);
    assert_eq!(code(&islrc(&["construct", "-c", "1", "-p", "4"])), 2);
    assert_eq!(
        code(&islrc(&[
            "construct",
            "-c",
            "1",
            "-p",
            "2",
            "--fill",
            "sparkly"
        ])),
        2
    );
    assert_eq!(code(&islrc(&["no-such-command"])), 2);
    assert_eq!(
        code(&islrc(&[
            "verify",
            "/nonexistent/h.txt",
            "--r",
            "1",
            "--t",
            "1"
        ])),
        2
    );
}

#[test]
fn failed_locality_checks_exit_with_one() {
    let dir = TempDir::new().unwrap();
    let h = construct(dir.path(), "h.txt", &["-c", "1", "-p", "3"]);
    let out = islrc(&["verify", &h, "--r", "2", "--t", "3"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["results"]["certificate"]["passed"], false);
}
