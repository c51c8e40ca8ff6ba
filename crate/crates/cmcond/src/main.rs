//! Command-line front end: config ingestion, the 3-step design
//! pipeline, sweeps, method comparison, Monte-Carlo probing, and
//! figure-data emission. Output is data (CSV/JSON) only; plotting is
//! left to external tools.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cmcond::compare::{self, TradeoffGrids};
use cmcond::config::{load_config_file, table1_preset, RunConfig, RunManifest};
use cmcond::error::Error;
use cmcond::filter;
use cmcond::interference::PhaseMode;
use cmcond::metrics::{self, SETTLING_BAND};
use cmcond::overdrive;
use cmcond::probe::{probe, ProbeOptions};
use cmcond::sim::{self, DenseWaveform, InitState, SimOptions, Termination};
use cmcond::slope;
use cmcond::spectrum::{spectrum, SpectrumOptions};
use cmcond::types::ConditioningMethod;

#[derive(Parser)]
#[command(name = "cmcond", version, about = "Control conditioning for current-mode converters with sensor interference")]
struct Cli {
    /// JSON run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Built-in configuration preset (table1).
    #[arg(long, global = true)]
    preset: Option<String>,
    /// Seed for randomized draws; overrides the config waveform seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output directory.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the cycle simulation and export trace, dense waveform,
    /// spectrum, and a summary.
    Simulate(SimulateArgs),
    /// Analytical design pipeline for one conditioning method.
    #[command(subcommand)]
    Design(DesignCmd),
    /// Overshoot-settling tradeoff clouds for all three methods.
    Compare(CompareArgs),
    /// Monte-Carlo stability probing over the interference class.
    Probe(ProbeArgs),
    /// Fit datasheet overdrive-delay points to t = p1/v + p2.
    FitComparator(FitArgs),
    /// Spectrum and subharmonic orders of a dense waveform CSV.
    Spectrum(SpectrumArgs),
}

#[derive(Args)]
struct SimulateArgs {
    /// Cycles to simulate.
    #[arg(long, default_value_t = 1000)]
    cycles: usize,
    /// Current command (A); default is twice the ripple.
    #[arg(long)]
    command: Option<f64>,
    /// Relative command step applied after a third of the run.
    #[arg(long, default_value_t = 0.0)]
    step: f64,
    /// Dense waveform samples per switching period.
    #[arg(long, default_value_t = 64)]
    dense: usize,
}

#[derive(Subcommand)]
enum DesignCmd {
    Slope(DesignSlopeArgs),
    Filter(DesignFilterArgs),
    Overdrive(DesignOverdriveArgs),
}

#[derive(Args)]
struct DesignSlopeArgs {
    /// Sweep ceiling for the normalized slope.
    #[arg(long, default_value_t = 2.0)]
    ms_max: f64,
    /// Sweep step for the normalized slope.
    #[arg(long, default_value_t = 0.01)]
    ms_step: f64,
}

#[derive(Args)]
struct DesignFilterArgs {
    #[arg(long, default_value_t = 0.1)]
    tau_min: f64,
    #[arg(long, default_value_t = 2.5)]
    tau_max: f64,
    #[arg(long, default_value_t = 13)]
    points: usize,
    /// Maximum inductor current for the certificates (A); defaults to
    /// command + ripple.
    #[arg(long)]
    i_max: Option<f64>,
    /// Current command (A); default is twice the ripple.
    #[arg(long)]
    command: Option<f64>,
    /// Relative size of the cross-check command step.
    #[arg(long, default_value_t = 0.02)]
    step_frac: f64,
}

#[derive(Args)]
struct DesignOverdriveArgs {
    /// Comparator trigger threshold (V).
    #[arg(long, default_value_t = 0.05)]
    v_trig: f64,
    /// Budget margin over the stability boundary.
    #[arg(long, default_value_t = 0.05)]
    margin: f64,
    #[arg(long, default_value_t = 0.1)]
    tau_hat_min: f64,
    #[arg(long, default_value_t = 6.0)]
    tau_hat_max: f64,
    #[arg(long, default_value_t = 30)]
    points: usize,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long)]
    a_hat: f64,
    #[arg(long)]
    omega_hat: f64,
    /// Command level in ripple units for the filter theory.
    #[arg(long, default_value_t = 3.0)]
    i_c_hat: f64,
}

#[derive(Args)]
struct ProbeArgs {
    #[arg(long, default_value_t = 100)]
    draws: usize,
    #[arg(long, default_value_t = 300)]
    cycles: usize,
    /// Current command (A); default is twice the ripple.
    #[arg(long)]
    command: Option<f64>,
}

#[derive(Args)]
struct FitArgs {
    /// CSV with header v_od_mV,t_od_ns.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Dense waveform CSV with header t_s,i_A.
    #[arg(long)]
    input: PathBuf,
    /// Switching fundamental (Hz).
    #[arg(long)]
    fundamental: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> ExitCode {
    match e {
        Error::Validation { .. } | Error::Config { .. } | Error::Json(_) => ExitCode::from(2),
        Error::TheoremScope(_) | Error::Numerical(_) | Error::UnstablePole { .. } => {
            ExitCode::from(2)
        }
        Error::NonIntegrableSpectrum(_) => ExitCode::from(2),
        Error::Infeasible(_) => ExitCode::from(3),
        Error::TriggerStarvation { .. } => ExitCode::from(4),
        Error::Io(_) => ExitCode::from(1),
    }
}

fn load(cli: &Cli) -> Result<(RunConfig, Option<&Path>), Error> {
    match (&cli.config, cli.preset.as_deref()) {
        (Some(path), None) => Ok((load_config_file(path)?, Some(path.as_path()))),
        (None, Some("table1")) => Ok((table1_preset(), None)),
        (None, Some(other)) => Err(Error::validation(
            "preset",
            format!("unknown preset `{other}`; available: table1"),
        )),
        (Some(_), Some(_)) => Err(Error::validation(
            "config",
            "pass either --config or --preset, not both",
        )),
        (None, None) => Err(Error::validation(
            "config",
            "one of --config PATH or --preset table1 is required",
        )),
    }
}

fn apply_seed(cfg: &mut RunConfig, seed: u64) {
    if let Some(w) = cfg.interference.waveform.as_mut() {
        if seed != 0 {
            w.seed = seed;
        }
    }
}

fn default_command(cfg: &RunConfig) -> f64 {
    let ripple = cfg.scheme.controlled_slope(&cfg.converter) * cfg.scheme.base_period(&cfg.converter);
    2.0 * ripple
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), Error> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join(name), contents)?;
    Ok(())
}

fn write_json<T: serde::Serialize>(dir: &Path, name: &str, value: &T) -> Result<(), Error> {
    write_file(dir, name, &format!("{}\n", serde_json::to_string_pretty(value)?))
}

fn fmt(x: f64) -> String {
    format!("{x:.12e}")
}

fn write_manifest(cli: &Cli, sub: &str, cfg: &RunConfig, cfg_path: Option<&Path>) -> Result<(), Error> {
    let m = RunManifest::new(sub, cfg_path, cli.seed, &cli.out, cfg);
    write_json(&cli.out, "manifest.json", &m)
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.cmd {
        Cmd::Simulate(a) => cmd_simulate(cli, a),
        Cmd::Design(DesignCmd::Slope(a)) => cmd_design_slope(cli, a),
        Cmd::Design(DesignCmd::Filter(a)) => cmd_design_filter(cli, a),
        Cmd::Design(DesignCmd::Overdrive(a)) => cmd_design_overdrive(cli, a),
        Cmd::Compare(a) => cmd_compare(cli, a),
        Cmd::Probe(a) => cmd_probe(cli, a),
        Cmd::FitComparator(a) => cmd_fit(cli, a),
        Cmd::Spectrum(a) => cmd_spectrum(cli, a),
    }
}

fn trace_csv(trace: &sim::SimTrace) -> String {
    let mut s = String::from("n,t_on_s,i_extremum_A,i_command_A\n");
    for c in &trace.samples {
        s.push_str(&format!(
            "{},{},{},{}\n",
            c.n,
            fmt(c.t_on),
            fmt(c.i_extremum),
            fmt(c.i_command)
        ));
    }
    s
}

fn dense_csv(d: &DenseWaveform) -> String {
    let mut s = String::from("t_s,i_A\n");
    for (t, i) in d.points() {
        s.push_str(&format!("{},{}\n", fmt(t), fmt(i)));
    }
    s
}

fn cmd_simulate(cli: &Cli, a: &SimulateArgs) -> Result<ExitCode, Error> {
    let (mut cfg, cfg_path) = load(cli)?;
    apply_seed(&mut cfg, cli.seed);
    let i_c = a.command.unwrap_or_else(|| default_command(&cfg));
    let commands: Vec<f64> = if a.step != 0.0 {
        let pre = a.cycles / 3;
        std::iter::repeat(i_c)
            .take(pre)
            .chain(std::iter::repeat(i_c * (1.0 + a.step)))
            .take(a.cycles)
            .collect()
    } else {
        vec![i_c]
    };
    let opts = SimOptions {
        dense_samples_per_cycle: Some(a.dense),
        ..Default::default()
    };
    let trace = sim::run_cycles_with(
        &cfg.converter,
        &cfg.scheme,
        &cfg.interference,
        &cfg.method,
        &commands,
        a.cycles,
        InitState::SteadyState,
        &opts,
    )?;

    write_manifest(cli, "simulate", &cfg, cfg_path)?;
    write_file(&cli.out, "trace.csv", &trace_csv(&trace))?;

    let mut detected = Vec::new();
    if let Some(d) = &trace.dense_waveform {
        write_file(&cli.out, "dense.csv", &dense_csv(d))?;
        let cycles_run = trace.samples.len() as f64;
        let fundamental = cycles_run / d.duration();
        if let Ok(rep) = spectrum(d, fundamental, &SpectrumOptions::default()) {
            let mut s = String::from("freq_hz,magnitude\n");
            for (f, m) in rep.frequencies.iter().zip(&rep.magnitudes) {
                s.push_str(&format!("{},{}\n", fmt(*f), fmt(*m)));
            }
            write_file(&cli.out, "spectrum.csv", &s)?;
            detected = rep.detected_orders;
        }
    }

    let transient = if a.step != 0.0 {
        metrics::measure_transient(&trace, SETTLING_BAND).ok()
    } else {
        None
    };
    let tail = sim::classify_tail(&trace, 8, i_c);
    #[derive(serde::Serialize)]
    struct Summary {
        terminated_by: Termination,
        saturated_cycles: usize,
        tail: sim::TailBehavior,
        detected_orders: Vec<(u32, u32)>,
        transient: Option<metrics::TransientMetrics>,
    }
    write_json(
        &cli.out,
        "summary.json",
        &Summary {
            terminated_by: trace.terminated_by,
            saturated_cycles: trace.saturated_cycles,
            tail,
            detected_orders: detected,
            transient,
        },
    )?;

    if trace.terminated_by == Termination::Diverged {
        eprintln!("simulation diverged; outputs written to {}", cli.out.display());
        return Ok(ExitCode::from(4));
    }
    println!("simulated {} cycles; tail: {tail:?}", trace.samples.len());
    Ok(ExitCode::SUCCESS)
}

/// The 3-step conditioning pipeline notes emitted with every design
/// report.
#[derive(serde::Serialize)]
struct Pipeline<T: serde::Serialize> {
    step1_triggering: &'static str,
    step2_continuity: T,
    step3_stability: T,
}

const STEP1: &str = "first-event triggering with latching is always enforced by the cycle engine";

fn cmd_design_slope(cli: &Cli, a: &DesignSlopeArgs) -> Result<ExitCode, Error> {
    let (mut cfg, cfg_path) = load(cli)?;
    apply_seed(&mut cfg, cli.seed);
    let m = cfg.scheme.controlled_slope(&cfg.converter);
    let lambda_hat = cfg.interference.lambda_ub / m;
    let m_s = match cfg.method {
        ConditioningMethod::SlopeComp { m_s } => m_s,
        _ => slope::optimal_slope(lambda_hat) * m,
    };
    let report = slope::design_report(m, m_s, &cfg.interference)?;
    // the recommendation must satisfy the GAS bound before optimizing
    let gas_floor = (lambda_hat - 0.5).max(0.0);
    let recommended_hat = slope::optimal_slope(lambda_hat).max(gas_floor * 1.02 + 1e-6);

    let n = (a.ms_max / a.ms_step).round() as usize;
    let grid: Vec<f64> = (0..=n).map(|k| k as f64 * a.ms_step).collect();
    let rows = slope::design_sweep(lambda_hat, &grid)?;
    let mut csv = String::from("m_s_hat,n_w,o_w,gas_stable\n");
    for r in &rows {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            fmt(r.m_s_hat),
            fmt(r.n_w),
            fmt(r.o_w),
            r.gas_stable
        ));
    }

    #[derive(serde::Serialize)]
    struct Out {
        pipeline: Pipeline<bool>,
        report: slope::SlopeDesignReport,
        recommended_m_s_hat: f64,
        recommended_m_s: f64,
    }
    write_manifest(cli, "design-slope", &cfg, cfg_path)?;
    write_file(&cli.out, "sweep.csv", &csv)?;
    write_json(
        &cli.out,
        "report.json",
        &Out {
            pipeline: Pipeline {
                step1_triggering: STEP1,
                step2_continuity: report.continuous,
                step3_stability: report.gas_stable,
            },
            report,
            recommended_m_s_hat: recommended_hat,
            recommended_m_s: recommended_hat * m,
        },
    )?;
    println!(
        "slope design: continuous={} gas_stable={} recommended m_s_hat={recommended_hat:.4}",
        report.continuous, report.gas_stable
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_design_filter(cli: &Cli, a: &DesignFilterArgs) -> Result<ExitCode, Error> {
    let (mut cfg, cfg_path) = load(cli)?;
    apply_seed(&mut cfg, cli.seed);
    let i_c = a.command.unwrap_or_else(|| default_command(&cfg));
    let ripple =
        cfg.scheme.controlled_slope(&cfg.converter) * cfg.scheme.base_period(&cfg.converter);
    let i_max = a.i_max.unwrap_or(i_c + ripple);
    let t_base = cfg.scheme.base_period(&cfg.converter);
    let grid: Vec<f64> = (0..a.points)
        .map(|k| {
            (a.tau_min + (a.tau_max - a.tau_min) * k as f64 / (a.points - 1).max(1) as f64) * t_base
        })
        .collect();
    let rows = filter::design_sweep(
        &cfg.converter,
        &cfg.scheme,
        &cfg.interference,
        &grid,
        i_max,
        i_c,
        a.step_frac,
    )?;
    let mut csv = String::from("tau_hat,n_w_theory,o_w_theory,n_w_sim,o_w_sim,stable\n");
    for r in &rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            fmt(r.tau_hat),
            fmt(r.n_w_theory),
            fmt(r.o_w_theory),
            fmt(r.n_w_sim),
            fmt(r.o_w_sim),
            r.stable.map_or("na".to_string(), |b| b.to_string()),
        ));
    }
    // recommend the settling argmin, preferring certified rows
    let best = rows
        .iter()
        .filter(|r| r.stable == Some(true))
        .min_by(|x, y| x.n_w_sim.total_cmp(&y.n_w_sim))
        .or_else(|| rows.iter().min_by(|x, y| x.n_w_sim.total_cmp(&y.n_w_sim)));
    let certified = best.map(|b| b.stable == Some(true)).unwrap_or(false);
    // linearized closed loop at the recommended point, as coefficient
    // arrays in z^-1
    let closed_loop = match best {
        Some(b) => {
            let tau = b.tau_hat * t_base;
            let op = filter::operating_point(&cfg.converter, &cfg.scheme, &cfg.interference, tau, i_c)?;
            Some(filter::linearize(&cfg.converter, &cfg.scheme, &cfg.interference, tau, &op)?)
        }
        None => None,
    };

    #[derive(serde::Serialize)]
    struct Out<'a> {
        pipeline: Pipeline<String>,
        rows: &'a [filter::FilterSweepRow],
        recommended_tau_hat: Option<f64>,
        recommendation_note: &'static str,
        linearization: Option<filter::FilterLoopLinearization>,
    }
    let continuity = match &rows.first() {
        Some(_) => describe_certificates(&cfg, &grid, i_max, true)?,
        None => "empty sweep".to_string(),
    };
    let stability = describe_certificates(&cfg, &grid, i_max, false)?;
    write_manifest(cli, "design-filter", &cfg, cfg_path)?;
    write_file(&cli.out, "sweep.csv", &csv)?;
    write_json(
        &cli.out,
        "report.json",
        &Out {
            pipeline: Pipeline {
                step1_triggering: STEP1,
                step2_continuity: continuity,
                step3_stability: stability,
            },
            rows: &rows,
            recommended_tau_hat: best.map(|b| b.tau_hat),
            recommendation_note: if certified {
                "large-signal certificate holds at the recommended point"
            } else {
                "no large-signal certificate; linearized verdict plus simulation evidence only"
            },
            linearization: closed_loop,
        },
    )?;
    println!(
        "filter design: {} rows, recommended tau_hat = {:?}",
        rows.len(),
        best.map(|b| b.tau_hat)
    );
    Ok(ExitCode::SUCCESS)
}

fn describe_certificates(
    cfg: &RunConfig,
    tau_grid: &[f64],
    i_max: f64,
    continuity: bool,
) -> Result<String, Error> {
    let mut certified: Vec<f64> = Vec::new();
    for &tau in tau_grid {
        let ok = if continuity {
            filter::continuity_condition(&cfg.converter, &cfg.scheme, &cfg.interference, tau, i_max)
        } else {
            filter::stability_condition(&cfg.converter, &cfg.scheme, &cfg.interference, tau, i_max)
        };
        match ok {
            Ok(true) => certified.push(tau / cfg.scheme.base_period(&cfg.converter)),
            Ok(false) => {}
            Err(Error::TheoremScope(s)) => return Ok(format!("not certified: {s}")),
            Err(e) => return Err(e),
        }
    }
    Ok(if certified.is_empty() {
        "no grid point certified".to_string()
    } else {
        format!(
            "certified for tau_hat in [{:.4}, {:.4}] (grid scan)",
            certified.first().unwrap(),
            certified.last().unwrap()
        )
    })
}

fn cmd_design_overdrive(cli: &Cli, a: &DesignOverdriveArgs) -> Result<ExitCode, Error> {
    let (mut cfg, cfg_path) = load(cli)?;
    apply_seed(&mut cfg, cli.seed);
    let report = overdrive::size_for_speed(
        &cfg.converter,
        &cfg.scheme,
        &cfg.interference,
        a.v_trig,
        a.margin,
    )?;

    let m = cfg.scheme.controlled_slope(&cfg.converter);
    let t_base = cfg.scheme.base_period(&cfg.converter);
    let a_hat = cfg.interference.a_ub / (m * t_base);
    let omega_hat = cfg.interference.omega_l * t_base / (2.0 * std::f64::consts::PI);
    let mut csv = String::from("tau_hat,n_w,o_w,t_od_max_s\n");
    for k in 0..a.points {
        let th = a.tau_hat_min
            + (a.tau_hat_max - a.tau_hat_min) * k as f64 / (a.points - 1).max(1) as f64;
        let budget = th * m * t_base * t_base / 2.0;
        let t_od = overdrive::max_overdrive_delay(m, &cfg.interference, budget)?;
        match overdrive::psi_and_pole_range(m, a_hat, omega_hat, th) {
            Ok((_, _, pr)) if pr.is_stable() => {
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    fmt(th),
                    fmt(metrics::settling_cycles(pr)?),
                    fmt(metrics::overshoot(pr)),
                    fmt(t_od)
                ));
            }
            _ => {
                csv.push_str(&format!("{},inf,inf,{}\n", fmt(th), fmt(t_od)));
            }
        }
    }
    #[derive(serde::Serialize)]
    struct Out {
        pipeline: Pipeline<String>,
        report: overdrive::OverdriveDesignReport,
    }
    write_manifest(cli, "design-overdrive", &cfg, cfg_path)?;
    write_file(&cli.out, "sweep.csv", &csv)?;
    write_json(
        &cli.out,
        "report.json",
        &Out {
            pipeline: Pipeline {
                step1_triggering: STEP1,
                step2_continuity:
                    "not evaluable from this artifact's inputs; rely on the static-map grid scan"
                        .to_string(),
                step3_stability: format!(
                    "charge budget sized at the stability boundary with margin {}",
                    a.margin
                ),
            },
            report,
        },
    )?;
    println!(
        "overdrive design: tau_c = {:.3e} s, t_on_min = {:.3e} s",
        report.tau_c, report.t_on_min
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_compare(cli: &Cli, a: &CompareArgs) -> Result<ExitCode, Error> {
    let cloud = compare::tradeoff_cloud(a.a_hat, a.omega_hat, a.i_c_hat, &TradeoffGrids::default())?;
    let mut csv = String::from("method,parameter,n_w,o_w\n");
    for p in &cloud {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            p.method.name(),
            fmt(p.parameter),
            fmt(p.n_w),
            fmt(p.o_w)
        ));
    }
    #[derive(serde::Serialize)]
    struct Retention {
        method: &'static str,
        against: &'static str,
        retention: f64,
    }
    let mut retentions = Vec::new();
    use compare::Method::*;
    for (x, y) in [
        (Slope, Filter),
        (Slope, Overdrive),
        (Filter, Slope),
        (Filter, Overdrive),
        (Overdrive, Slope),
        (Overdrive, Filter),
    ] {
        retentions.push(Retention {
            method: x.name(),
            against: y.name(),
            retention: compare::front_retention(&cloud, x, y),
        });
    }
    fs::create_dir_all(&cli.out)?;
    write_file(&cli.out, "tradeoff.csv", &csv)?;
    write_json(&cli.out, "pareto.json", &retentions)?;
    println!("compare: {} points written", cloud.len());
    Ok(ExitCode::SUCCESS)
}

fn cmd_probe(cli: &Cli, a: &ProbeArgs) -> Result<ExitCode, Error> {
    let (mut cfg, cfg_path) = load(cli)?;
    apply_seed(&mut cfg, cli.seed);
    let i_c = a.command.unwrap_or_else(|| default_command(&cfg));
    let opts = ProbeOptions { cycles: a.cycles, ..Default::default() };
    let report = probe(
        &cfg.converter,
        &cfg.scheme,
        &cfg.interference,
        &cfg.method,
        i_c,
        a.draws,
        cli.seed,
        &opts,
    )?;
    write_manifest(cli, "probe", &cfg, cfg_path)?;
    write_json(&cli.out, "probe.json", &report)?;
    // save counterexample traces for the first few failures
    for f in report.failures.iter().take(3) {
        let kind = cfg
            .interference
            .worst_case_trapezoid(f.phase)
            .unwrap_or(cmcond::interference::WaveformKind::Sinusoid {
                amplitude: 0.0,
                omega: 1.0,
                phase: 0.0,
            });
        let mut spec = cfg.interference.clone();
        spec.waveform = Some(cmcond::interference::Waveform {
            kind,
            phase_mode: PhaseMode::Fixed,
            seed: cli.seed,
        });
        if let Ok(trace) = sim::run_cycles(
            &cfg.converter,
            &cfg.scheme,
            &spec,
            &cfg.method,
            &[i_c],
            a.cycles,
            InitState::SteadyState,
        ) {
            write_file(
                &cli.out,
                &format!("counterexample_{}.csv", f.index),
                &trace_csv(&trace),
            )?;
        }
    }
    println!(
        "probe: {}/{} draws converged ({} subharmonic, {} irregular, {} diverged)",
        report.converged, report.n_draws, report.subharmonic, report.irregular, report.diverged
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_fit(cli: &Cli, a: &FitArgs) -> Result<ExitCode, Error> {
    let text = fs::read_to_string(&a.input)?;
    let mut samples = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (i == 0 && line.starts_with("v_od")) {
            continue;
        }
        let mut parts = line.split(',');
        let (v, t) = (parts.next(), parts.next());
        match (v.and_then(|x| x.trim().parse::<f64>().ok()), t.and_then(|x| x.trim().parse::<f64>().ok())) {
            (Some(v_mv), Some(t_ns)) => samples.push((v_mv * 1e-3, t_ns * 1e-9)),
            _ => {
                return Err(Error::validation(
                    "input",
                    format!("line {} is not `v_od_mV,t_od_ns`", i + 1),
                ))
            }
        }
    }
    let (p1, p2) = overdrive::fit_datasheet_delay(&samples)?;
    #[derive(serde::Serialize)]
    struct Fit {
        v_trig_tau_vs: f64,
        t_d_s: f64,
        v_trig_tau_ns_mv: f64,
        t_d_ns: f64,
        points: usize,
    }
    fs::create_dir_all(&cli.out)?;
    write_json(
        &cli.out,
        "fit.json",
        &Fit {
            v_trig_tau_vs: p1,
            t_d_s: p2,
            v_trig_tau_ns_mv: p1 / 1e-3 / 1e-9,
            t_d_ns: p2 / 1e-9,
            points: samples.len(),
        },
    )?;
    println!("fit: v_trig*tau = {:.4} ns*mV, t_d = {:.4} ns", p1 / 1e-12, p2 / 1e-9);
    Ok(ExitCode::SUCCESS)
}

fn cmd_spectrum(cli: &Cli, a: &SpectrumArgs) -> Result<ExitCode, Error> {
    let text = fs::read_to_string(&a.input)?;
    let mut ts = Vec::new();
    let mut is = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (i == 0 && line.starts_with("t_s")) {
            continue;
        }
        let mut parts = line.split(',');
        match (
            parts.next().and_then(|x| x.trim().parse::<f64>().ok()),
            parts.next().and_then(|x| x.trim().parse::<f64>().ok()),
        ) {
            (Some(t), Some(cur)) => {
                ts.push(t);
                is.push(cur);
            }
            _ => {
                return Err(Error::validation(
                    "input",
                    format!("line {} is not `t_s,i_A`", i + 1),
                ))
            }
        }
    }
    if ts.len() < 16 {
        return Err(Error::validation("input", "too few samples"));
    }
    let dt = (ts[ts.len() - 1] - ts[0]) / (ts.len() - 1) as f64;
    let dense = DenseWaveform { t0: ts[0], dt, current: is };
    let rep = spectrum(&dense, a.fundamental, &SpectrumOptions::default())?;
    let mut s = String::from("freq_hz,magnitude\n");
    for (f, m) in rep.frequencies.iter().zip(&rep.magnitudes) {
        s.push_str(&format!("{},{}\n", fmt(*f), fmt(*m)));
    }
    fs::create_dir_all(&cli.out)?;
    write_file(&cli.out, "spectrum.csv", &s)?;
    #[derive(serde::Serialize)]
    struct Orders {
        fundamental_hz: f64,
        detected_orders: Vec<(u32, u32)>,
    }
    write_json(
        &cli.out,
        "orders.json",
        &Orders { fundamental_hz: rep.fundamental_hz, detected_orders: rep.detected_orders },
    )?;
    println!("spectrum: {} bins", rep.frequencies.len());
    Ok(ExitCode::SUCCESS)
}
