//! End-to-end tests of the `latbox` binary: every subcommand, the file
//! formats, determinism of emitted reports, and the exit-code contract.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

fn latbox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latbox"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

static SCRATCH_ID: AtomicU32 = AtomicU32::new(0);

fn scratch_file(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "latbox-cli-{}-{}",
        std::process::id(),
        SCRATCH_ID.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn generate_then_dispersion_round_trip() {
    let path = scratch_file("golden-32.txt");
    let path_str = path.to_str().unwrap();

    let gen = latbox(&[
        "generate",
        "--lattice",
        "golden",
        "--n",
        "32",
        "--out",
        path_str,
    ]);
    assert!(gen.status.success(), "generate failed: {}", stderr(&gen));

    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("# d=2 n=32 t="), "header was {header:?}");
    assert_eq!(lines.count(), 32);

    let disp = latbox(&["dispersion", "--in", path_str]);
    assert!(
        disp.status.success(),
        "dispersion failed: {}",
        stderr(&disp)
    );
    let report: serde_json::Value = serde_json::from_str(&stdout(&disp)).unwrap();
    let volume = report["volume"].as_f64().unwrap();
    assert!(volume > 0.0 && volume < 1.0, "volume {volume}");
    assert_eq!(report["algorithm"], "sweep2d");
    assert_eq!(report["certified_exact"], true);
}

#[test]
fn generate_to_stdout_matches_file_output() {
    let path = scratch_file("golden-8.txt");
    let path_str = path.to_str().unwrap();
    let to_file = latbox(&[
        "generate",
        "--lattice",
        "golden",
        "--n",
        "8",
        "--out",
        path_str,
    ]);
    assert!(to_file.status.success());
    let to_stdout = latbox(&["generate", "--lattice", "golden", "--n", "8"]);
    assert!(to_stdout.status.success());
    assert_eq!(stdout(&to_stdout), std::fs::read_to_string(&path).unwrap());
}

#[test]
fn scaling_csv_is_deterministic() {
    let args = [
        "scaling",
        "--lattice",
        "golden",
        "--n",
        "8,16",
        "--format",
        "csv",
    ];
    let first = latbox(&args);
    let second = latbox(&args);
    assert!(first.status.success(), "{}", stderr(&first));
    let text = stdout(&first);
    assert_eq!(text, stdout(&second), "two runs differed");
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("N,n_t,disp,n_times_disp"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn scaling_json_carries_the_same_rows() {
    let out = latbox(&[
        "scaling",
        "--lattice",
        "frolov",
        "--dim",
        "2",
        "--n",
        "8,16",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["N"], 8);
    assert!(rows[0]["disp"].as_f64().unwrap() > rows[1]["disp"].as_f64().unwrap());
}

#[test]
fn bounded_reports_growth_ratios() {
    let out = latbox(&["bounded", "--lattice", "golden", "--m", "4,8"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("M,disp_star_window,growth_ratio"));
    let first_row = lines.next().unwrap();
    assert!(first_row.starts_with("4.0000000000000000e0,"));
    assert!(
        first_row.ends_with(",1.0000000000000000e0"),
        "first ratio is 1: {first_row}"
    );
    assert_eq!(lines.count(), 1);
}

#[test]
fn counting_emits_one_row_per_volume() {
    let out = latbox(&[
        "counting",
        "--lattice",
        "golden",
        "--volumes",
        "10,100",
        "--shifts",
        "5",
        "--seed",
        "7",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("vol,max_discrepancy,max_log_bound_ratio")
    );
    assert_eq!(lines.count(), 2);

    // Same seed, same rows.
    let again = latbox(&[
        "counting",
        "--lattice",
        "golden",
        "--volumes",
        "10,100",
        "--shifts",
        "5",
        "--seed",
        "7",
    ]);
    assert_eq!(text, stdout(&again));
}

#[test]
fn selftest_passes_and_reports_each_check() {
    let out = latbox(&["selftest"]);
    assert!(out.status.success(), "selftest failed: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 9, "one line per check: {text}");
    for line in lines {
        assert!(line.starts_with("ok - "), "unexpected line {line:?}");
    }
}

#[test]
fn help_exits_zero_and_bad_flags_exit_one() {
    assert!(latbox(&["--help"]).status.success());
    assert!(latbox(&["scaling", "--help"]).status.success());

    let bad = latbox(&["scaling", "--lattice", "golden"]);
    assert_eq!(bad.status.code(), Some(1), "missing required --n");

    let unknown = latbox(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(1));
}

#[test]
fn non_admissible_generate_exits_one_with_message() {
    let out = latbox(&[
        "generate",
        "--lattice",
        "integer",
        "--dim",
        "2",
        "--n",
        "16",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).starts_with("error:"),
        "stderr {:?}",
        stderr(&out)
    );
}

#[test]
fn malformed_point_file_exits_one() {
    let path = scratch_file("garbage.txt");
    std::fs::write(&path, "not a point set\n1 2 3\n").unwrap();
    let out = latbox(&["dispersion", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error:"));
}

#[test]
fn custom_lattice_json_round_trip() {
    let lattice_path = scratch_file("lattice.json");
    let lattice = latbox::Lattice::custom(&[vec![1.0, 0.5], vec![0.0, 1.0]]).unwrap();
    std::fs::write(&lattice_path, serde_json::to_string(&lattice).unwrap()).unwrap();

    // A custom lattice carries no certificate, so calibration must refuse it.
    let arg = format!("custom:{}", lattice_path.display());
    let out = latbox(&["generate", "--lattice", &arg, "--n", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("certified"),
        "stderr {:?}",
        stderr(&out)
    );
}
