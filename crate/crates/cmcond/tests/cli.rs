//! End-to-end checks of the command-line interface: file outputs,
//! determinism under a fixed seed, and the documented exit codes.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cmcond"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cmcond-cli-{name}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn unit_config_json() -> String {
    r#"{
        "converter": {"v_in": "2V", "v_out": "1V", "inductance": "1uH",
                      "capacitance": "100uF", "r_load": "1", "r_sense": "10m"},
        "modulation": {"variant": "constant_off_time", "t_off": "1us", "t_on_min": "10ns"},
        "interference": {"a_ub": "0.1A", "omega_l": "2MHz", "lambda_ub": "1.26A/us",
                         "waveform": {"kind": "sinusoid", "amplitude": "0.1A",
                                      "omega": "12.57M", "phase": 1.5707963}},
        "method": {"variant": "slope_comp", "m_s": "0.5A/us"}
    }"#
    .to_string()
}

#[test]
fn simulate_is_deterministic_and_writes_everything() {
    let dir = tmp("det");
    let cfg = dir.join("config.json");
    fs::write(&cfg, unit_config_json()).unwrap();
    let mut outputs = Vec::new();
    for run in ["a", "b"] {
        let out = dir.join(run);
        let status = bin()
            .args(["--config"])
            .arg(&cfg)
            .args(["--seed", "7", "--out"])
            .arg(&out)
            .args(["simulate", "--cycles", "200", "--command", "2.0"])
            .status()
            .unwrap();
        assert!(status.success());
        outputs.push(out);
    }
    for name in ["trace.csv", "dense.csv", "spectrum.csv", "summary.json", "manifest.json"] {
        let a = fs::read(outputs[0].join(name)).unwrap_or_else(|_| panic!("{name} missing"));
        let b = fs::read(outputs[1].join(name)).unwrap();
        if name == "manifest.json" {
            // differs only in the out_dir path
            continue;
        }
        assert_eq!(a, b, "{name} differs between identical runs");
    }
    let trace = fs::read_to_string(outputs[0].join("trace.csv")).unwrap();
    assert!(trace.starts_with("n,t_on_s,i_extremum_A,i_command_A\n"));
    let dense = fs::read_to_string(outputs[0].join("dense.csv")).unwrap();
    assert!(dense.starts_with("t_s,i_A\n"));
}

#[test]
fn schema_violation_exits_2_with_pointer() {
    let dir = tmp("schema");
    let cfg = dir.join("bad.json");
    fs::write(&cfg, r#"{"converter": {"v_in": "12V"}}"#).unwrap();
    let out = bin()
        .args(["--config"])
        .arg(&cfg)
        .args(["--out"])
        .arg(dir.join("o"))
        .args(["simulate"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("/converter/"), "stderr: {stderr}");
}

#[test]
fn starvation_exits_4() {
    let dir = tmp("starve");
    let cfg = dir.join("config.json");
    fs::write(&cfg, unit_config_json()).unwrap();
    let out = bin()
        .args(["--config"])
        .arg(&cfg)
        .args(["--out"])
        .arg(dir.join("o"))
        .args(["simulate", "--cycles", "9", "--command", "2.0", "--step", "250"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn infeasible_design_exits_3() {
    let dir = tmp("infeasible");
    let cfg = dir.join("config.json");
    // interference so large the required minimum on time exceeds the
    // base period
    fs::write(
        &cfg,
        r#"{
        "converter": {"v_in": "2V", "v_out": "1V", "inductance": "1uH",
                      "capacitance": "100uF", "r_load": "1", "r_sense": "10m"},
        "modulation": {"variant": "constant_off_time", "t_off": "1us", "t_on_min": "10ns"},
        "interference": {"a_ub": "0.45A", "omega_l": "15.7M", "lambda_ub": "10A/us",
                         "b_functional": 2.9e-8},
        "method": {"variant": "overdrive_delay", "tau_c": "10ns", "v_trig": "50m"}
    }"#,
    )
    .unwrap();
    let out = bin()
        .args(["--config"])
        .arg(&cfg)
        .args(["--out"])
        .arg(dir.join("o"))
        .args(["design", "overdrive", "--v-trig", "0.05"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn design_slope_emits_report_and_sweep() {
    let dir = tmp("design-slope");
    let cfg = dir.join("config.json");
    fs::write(&cfg, unit_config_json()).unwrap();
    let out_dir = dir.join("o");
    let status = bin()
        .args(["--config"])
        .arg(&cfg)
        .args(["--out"])
        .arg(&out_dir)
        .args(["design", "slope"])
        .status()
        .unwrap();
    assert!(status.success());
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out_dir.join("report.json")).unwrap()).unwrap();
    // lambda_hat = 1.26: needs m_s_hat >= 0.76 for the GAS bound
    let rec = report["recommended_m_s_hat"].as_f64().unwrap();
    assert!(rec > 0.76 && rec < 1.2, "recommended {rec}");
    assert!(report["pipeline"]["step1_triggering"].is_string());
    let sweep = fs::read_to_string(out_dir.join("sweep.csv")).unwrap();
    assert!(sweep.starts_with("m_s_hat,n_w,o_w,gas_stable\n"));
}

#[test]
fn fit_comparator_roundtrip() {
    let dir = tmp("fit");
    let mut csv = String::from("v_od_mV,t_od_ns\n");
    for k in 1..=10 {
        let v = k as f64; // mV
        csv.push_str(&format!("{v},{}\n", 6.102 / v + 4.198));
    }
    let input = dir.join("delay.csv");
    fs::write(&input, csv).unwrap();
    let out_dir = dir.join("o");
    let status = bin()
        .args(["--out"])
        .arg(&out_dir)
        .args(["fit-comparator", "--input"])
        .arg(&input)
        .status()
        .unwrap();
    assert!(status.success());
    let fit: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out_dir.join("fit.json")).unwrap()).unwrap();
    assert!((fit["v_trig_tau_ns_mv"].as_f64().unwrap() - 6.102).abs() < 1e-6);
    assert!((fit["t_d_ns"].as_f64().unwrap() - 4.198).abs() < 1e-6);
}

#[test]
fn spectrum_subcommand_reads_dense_csv() {
    let dir = tmp("spectrum");
    let cfg = dir.join("config.json");
    fs::write(&cfg, unit_config_json()).unwrap();
    let sim_out = dir.join("sim");
    assert!(bin()
        .args(["--config"])
        .arg(&cfg)
        .args(["--out"])
        .arg(&sim_out)
        .args(["simulate", "--cycles", "200", "--command", "2.0"])
        .status()
        .unwrap()
        .success());
    let out_dir = dir.join("o");
    let status = bin()
        .args(["--out"])
        .arg(&out_dir)
        .args(["spectrum", "--input"])
        .arg(sim_out.join("dense.csv"))
        .args(["--fundamental", "500000"])
        .status()
        .unwrap();
    assert!(status.success());
    assert!(Path::new(&out_dir.join("spectrum.csv")).exists());
    assert!(Path::new(&out_dir.join("orders.json")).exists());
}

#[test]
fn probe_runs_deterministically() {
    let dir = tmp("probe");
    let cfg = dir.join("config.json");
    fs::write(&cfg, unit_config_json()).unwrap();
    let mut reports = Vec::new();
    for run in ["a", "b"] {
        let out_dir = dir.join(run);
        let status = bin()
            .args(["--config"])
            .arg(&cfg)
            .args(["--seed", "3", "--out"])
            .arg(&out_dir)
            .args(["probe", "--draws", "8", "--cycles", "120", "--command", "2.0"])
            .status()
            .unwrap();
        assert!(status.success());
        reports.push(fs::read(out_dir.join("probe.json")).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
}
