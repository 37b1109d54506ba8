//! End-to-end tests for the command line interface: exit codes, artifact
//! round-trips, pinned pipeline output, and environment handling.

use std::path::Path;
use std::process::Command;

use ramseylab::EdgeColoring;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ramseylab"));
    cmd.env_remove("RAMSEYLAB_MAX_N");
    cmd
}

fn run(cmd: &mut Command) -> (i32, String, String) {
    let out = cmd.output().expect("spawn ramseylab");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("stdout utf8"),
        String::from_utf8(out.stderr).expect("stderr utf8"),
    )
}

fn write_turan(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("turan.rcol");
    let (code, stdout, stderr) = run(bin().args([
        "construct",
        "turan",
        "--k",
        "3",
        "--n",
        "6",
        "--output",
        path.to_str().unwrap(),
    ]));
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.contains("wrote:"));
    path
}

#[test]
fn construct_turan_round_trips() {
    let tmp = tempfile::tempdir().unwrap();
    let path = write_turan(tmp.path());
    let coloring = EdgeColoring::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(coloring.vertex_count(), 18);
    assert_eq!(coloring.color_count(), 2);
    assert_eq!(coloring.color_counts(), vec![45, 108]);
}

#[test]
fn verify_reports_free_and_copy() {
    let tmp = tempfile::tempdir().unwrap();
    let path = write_turan(tmp.path());

    let (code, stdout, _) = run(bin().args([
        "verify",
        "--coloring",
        path.to_str().unwrap(),
        "--pattern",
        "gkn:3,6",
    ]));
    assert_eq!(code, 0);
    assert!(stdout.contains("verdict: free"), "stdout: {stdout}");

    let (code, stdout, _) = run(bin().args([
        "verify",
        "--coloring",
        path.to_str().unwrap(),
        "--pattern",
        "clique:3",
    ]));
    assert_eq!(code, 1);
    assert!(stdout.contains("verdict: copy"), "stdout: {stdout}");
}

#[test]
fn arrow_exit_codes_and_canonical_witness() {
    let tmp = tempfile::tempdir().unwrap();
    let witness = tmp.path().join("witness.rcol");
    let (code, stdout, _) = run(bin().args([
        "arrow",
        "--pattern",
        "clique:3",
        "--n",
        "5",
        "--q",
        "2",
        "--output",
        witness.to_str().unwrap(),
    ]));
    assert_eq!(code, 1);
    assert!(stdout.contains("arrows: false"), "stdout: {stdout}");
    let coloring = EdgeColoring::parse(&std::fs::read_to_string(&witness).unwrap()).unwrap();
    let mut flat = Vec::new();
    for i in 0..5 {
        for j in (i + 1)..5 {
            flat.push(coloring.color(i, j));
        }
    }
    assert_eq!(flat, [0, 0, 1, 1, 1, 0, 1, 1, 0, 0]);

    let (code, stdout, _) = run(bin().args([
        "arrow", "--pattern", "clique:3", "--n", "6", "--q", "2",
    ]));
    assert_eq!(code, 0);
    assert!(stdout.contains("arrows: true"), "stdout: {stdout}");
}

#[test]
fn ramsey_writes_certificate_directory() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("cert-k3");
    let (code, stdout, stderr) = run(bin().args([
        "ramsey",
        "--pattern",
        "clique:3",
        "--q",
        "2",
        "--output",
        dir.to_str().unwrap(),
    ]));
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.contains("value: 6"), "stdout: {stdout}");
    for name in ["cert.json", "witness.rcol", "pattern.graph", "timings.json"] {
        assert!(dir.join(name).is_file(), "missing {name}");
    }
    let cert = std::fs::read_to_string(dir.join("cert.json")).unwrap();
    assert!(cert.contains("\"value\": 6"), "cert.json: {cert}");
    assert!(cert.contains("\"format\": \"ramseylab-cert-1\""));
}

#[test]
fn ramsey_limit_exhaustion_exits_3() {
    let (code, _, stderr) = run(bin().args([
        "ramsey", "--pattern", "clique:4", "--q", "2", "--max-n", "6",
    ]));
    assert_eq!(code, 3);
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");
}

#[test]
fn max_n_env_and_flag_precedence() {
    let (code, _, stderr) = run(bin()
        .env("RAMSEYLAB_MAX_N", "4")
        .args(["ramsey", "--pattern", "clique:3", "--q", "2"]));
    assert_eq!(code, 3, "stderr: {stderr}");

    let (code, stdout, stderr) = run(bin()
        .env("RAMSEYLAB_MAX_N", "4")
        .args(["ramsey", "--pattern", "clique:3", "--q", "2", "--max-n", "8"]));
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.contains("value: 6"));

    let (code, _, stderr) = run(bin()
        .env("RAMSEYLAB_MAX_N", "not-a-number")
        .args(["ramsey", "--pattern", "clique:3", "--q", "2"]));
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");
}

#[test]
fn usage_and_input_errors_exit_2() {
    let (code, _, _) = run(bin().arg("no-such-subcommand"));
    assert_eq!(code, 2);

    let (code, _, stderr) = run(bin().args([
        "arrow", "--pattern", "klique:3", "--n", "5", "--q", "2",
    ]));
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");

    let (code, _, stderr) = run(bin().args([
        "verify",
        "--coloring",
        "/nonexistent/missing.rcol",
        "--pattern",
        "clique:3",
    ]));
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");
}

#[test]
fn reproduce_main_default_prints_pinned_gap() {
    let tmp = tempfile::tempdir().unwrap();
    let (code, stdout, stderr) = run(bin().args([
        "reproduce-main",
        "--workdir",
        tmp.path().to_str().unwrap(),
    ]));
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.contains("construction: turan(3, 6)"), "stdout: {stdout}");
    assert!(stdout.contains("r_H: 6"));
    assert!(stdout.contains("r_G_lower_bound: 19"));
    assert!(stdout.contains("comparison: 19 > 18 = k * r_H"));
    assert!(stdout.contains("ratio_lb: 3.1667"));
    assert!(tmp.path().join("cert-h").join("cert.json").is_file());
    assert!(tmp.path().join("turan.rcol").is_file());
}

#[test]
fn reproduce_main_small_case_prints_gap() {
    let tmp = tempfile::tempdir().unwrap();
    let (code, stdout, stderr) = run(bin().args([
        "reproduce-main",
        "--workdir",
        tmp.path().to_str().unwrap(),
        "--k",
        "2",
        "--n",
        "3",
    ]));
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.contains("r_H: 3"), "stdout: {stdout}");
    assert!(stdout.contains("r_G_lower_bound: 7"));
    assert!(stdout.contains("comparison: 7 > 6 = k * r_H"));
    assert!(stdout.contains("ratio_lb: 2.3333"));
}

#[test]
fn reproduce_main_multicolor_prints_product_gap() {
    let tmp = tempfile::tempdir().unwrap();
    let (code, stdout, stderr) = run(bin().args([
        "reproduce-main",
        "--workdir",
        tmp.path().to_str().unwrap(),
        "--multicolor",
    ]));
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.contains("construction: product(pentagon, 3)"), "stdout: {stdout}");
    assert!(stdout.contains("r_H: 3"));
    assert!(stdout.contains("r_G_lower_bound: 16"));
    assert!(stdout.contains("comparison: 16 > 3 = r_H"));
    assert!(stdout.contains("ratio_lb: 5.3333"));
    assert!(tmp.path().join("product.rcol").is_file());
}

#[test]
fn seeded_commands_reproduce_identical_artifacts() {
    let tmp = tempfile::tempdir().unwrap();
    let a = tmp.path().join("a.rcol");
    let b = tmp.path().join("b.rcol");
    for path in [&a, &b] {
        let (code, _, stderr) = run(bin().args([
            "construct",
            "random",
            "--n",
            "20",
            "--q",
            "3",
            "--seed",
            "99",
            "--output",
            path.to_str().unwrap(),
        ]));
        assert_eq!(code, 0, "stderr: {stderr}");
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let wa = tmp.path().join("wa.rcol");
    let wb = tmp.path().join("wb.rcol");
    let mut outputs = Vec::new();
    for path in [&wa, &wb] {
        let (code, stdout, stderr) = run(bin().args([
            "lb-random",
            "--pattern",
            "clique:7",
            "--d",
            "6",
            "--seed",
            "7",
            "--output",
            path.to_str().unwrap(),
        ]));
        assert_eq!(code, 0, "stderr: {stderr}");
        let summary: Vec<&str> = stdout
            .lines()
            .filter(|line| !line.starts_with("wrote:"))
            .collect();
        outputs.push(summary.join("\n"));
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(std::fs::read(&wa).unwrap(), std::fs::read(&wb).unwrap());
}

#[test]
fn analyze_chase_and_embed_smoke() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("t23.rcol");
    let (code, _, stderr) = run(bin().args([
        "construct",
        "turan",
        "--k",
        "2",
        "--n",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]));
    assert_eq!(code, 0, "stderr: {stderr}");

    let (code, stdout, _) = run(bin().args([
        "analyze",
        "--coloring",
        path.to_str().unwrap(),
        "--pattern",
        "hkn:2,3",
    ]));
    assert_eq!(code, 0);
    assert!(stdout.contains("epsilon_star: 0.400000"), "stdout: {stdout}");
    assert!(stdout.contains("best_pair_size: 2"));
    assert!(stdout.contains("verdict: free"));
    assert!(stdout.contains("bound_holds: true"));

    let (code, stdout, _) = run(bin().args(["chase", "--coloring", path.to_str().unwrap()]));
    assert_eq!(code, 0);
    assert!(stdout.contains("majority_color: blue"), "stdout: {stdout}");
    assert!(stdout.contains("T_size: 2"));

    let (code, stdout, _) = run(bin().args([
        "embed", "--guest", "path:3", "--host", "clique:5", "--d", "1",
    ]));
    assert_eq!(code, 0);
    assert!(stdout.contains("map: 2 1 0"), "stdout: {stdout}");

    let (code, _, stderr) = run(bin().args([
        "embed", "--guest", "path:3", "--host", "clique:2", "--d", "1",
    ]));
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");
}
