//! End-to-end runs of the `ntnsim` binary.
use std::path::Path;
use std::process::Command;

use ntnsim::cli_io::{read_csv, read_json};
use ntnsim::engine::{preset_names, Direction, Population};

fn ntnsim(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ntnsim"))
        .args(args)
        .env("SOURCE_DATE_EPOCH", "1700000000")
        .env_remove("NTNSIM_WORKERS")
        .output()
        .unwrap()
}

fn write_config(dir: &Path) -> String {
    let path = dir.join("small.toml");
    std::fs::write(
        &path,
        "preset = \"case3.offload_90_frf3\"\nname = \"small\"\n\n[deployment]\narea_km2 = 5.0\n\n[run]\nn_drops = 2\n",
    )
    .unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn presets_lists_fourteen_names() {
    let out = ntnsim(&["presets"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().collect::<Vec<_>>(), preset_names());
    assert_eq!(text.lines().count(), 14);
}

#[test]
fn validate_accepts_presets_and_rejects_bad_files() {
    assert!(ntnsim(&["validate", "--preset", "case2.relief"]).status.success());
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.toml");
    std::fs::write(&empty, "").unwrap();
    let out = ntnsim(&["validate", "--config", empty.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("deployment"));
    let bad = dir.path().join("bad.toml");
    std::fs::write(
        &bad,
        "preset = \"case3.standalone\"\n[deployment]\nelevation_deg = 95.0\n",
    )
    .unwrap();
    let out = ntnsim(&["validate", "--config", bad.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("(0, 90]"));
}

#[test]
fn usage_errors_print_a_synopsis() {
    let out = ntnsim(&["run"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn run_with_zero_drops_is_a_config_error() {
    let out = ntnsim(&["run", "--preset", "case3.standalone", "--drops", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("run.n_drops"));
}

#[test]
fn run_writes_consistent_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let out_dir = dir.path().join("out");
    let out = ntnsim(&["run", "--config", &config, "--out", out_dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let result = read_json(out_dir.join("small.json")).unwrap();
    assert_eq!(result.metadata.timestamp_unix, 1_700_000_000);
    assert_eq!(result.metadata.config.run.n_drops, 2);
    let rows = read_csv(out_dir.join("small.csv")).unwrap();
    let total: usize = result.summary.distributions.iter().map(|d| 2 * d.len()).sum();
    assert_eq!(rows.len(), total);

    // Outage recounted from the CSV samples matches the JSON scalar.
    let threshold = result.summary.outage_threshold_db;
    for pop in [Population::Gue, Population::Uav] {
        for dir in [Direction::Dl, Direction::Ul] {
            let sinr: Vec<f64> = rows
                .iter()
                .filter(|r| r.population == pop && r.direction == dir && r.metric == "sinr_db")
                .map(|r| r.value)
                .collect();
            let d = result.summary.get(pop, dir);
            assert_eq!(sinr, d.sinr_db);
            let recount = sinr.iter().filter(|&&s| s < threshold).count() as f64 / sinr.len() as f64;
            assert_eq!(Some(recount), d.outage);
        }
    }

    // Re-running from the echoed configuration reproduces the file.
    let echo = dir.path().join("echo.toml");
    std::fs::write(&echo, toml::to_string(&result.metadata.config).unwrap()).unwrap();
    let again = dir.path().join("again");
    let out = ntnsim(&[
        "run",
        "--config",
        echo.to_str().unwrap(),
        "--out",
        again.to_str().unwrap(),
        "--workers",
        "3",
    ]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read(out_dir.join("small.json")).unwrap(),
        std::fs::read(again.join("small.json")).unwrap()
    );
}

#[test]
fn sweep_writes_one_result_per_combination() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let out_dir = dir.path().join("sweep");
    let out = ntnsim(&[
        "sweep",
        "--config",
        &config,
        "--vary",
        "elevation=87,90",
        "--vary",
        "frf=1,3",
        "--drops",
        "1",
        "--format",
        "json",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let mut names: Vec<String> = std::fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 4);
    assert_eq!(names[0], "small__elevation_deg=87__frf=1.json");
    let r = read_json(out_dir.join(&names[3])).unwrap();
    assert_eq!(r.metadata.config.deployment.elevation_deg, 90.0);
    assert_eq!(r.metadata.config.deployment.frf, 3);
}
