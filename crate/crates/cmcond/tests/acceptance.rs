//! Acceptance suite: theory-versus-simulation equivalence, invariant
//! bounds, and qualitative scenario reproduction. One test per
//! criterion; each prints a PASS line with its headline numbers when it
//! holds.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use cmcond::compare::{self, Method, TradeoffGrids};
use cmcond::filter;
use cmcond::interference::{InterferenceSpec, WaveformKind};
use cmcond::metrics::{
    measure_contraction_ratio, measure_transient, overshoot, settling_cycles, PoleRange,
    SETTLING_BAND,
};
use cmcond::overdrive::{self, ComparatorModel};
use cmcond::probe::{probe, ProbeOptions};
use cmcond::sim::{self, InitState, SimOptions, TailBehavior};
use cmcond::slope;
use cmcond::spectrum::{spectrum, SpectrumOptions};
use cmcond::tf::{appendix_a_tf, appendix_b_plant, appendix_c_boost_tf, BoostSampledParams};
use cmcond::types::{ConditioningMethod, ConverterConfig, ModulationScheme};

fn unit_loop() -> (ConverterConfig, ModulationScheme) {
    (
        ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap(),
        ModulationScheme::constant_off_time(1e-6, 0.0).unwrap(),
    )
}

/// Subharmonic orders of the settled tail of a trace, with the
/// fundamental taken from the actual cycle count inside the window.
fn tail_orders(trace: &sim::SimTrace, t_fixed: f64, tail_cycles: usize, spc: usize) -> Vec<(u32, u32)> {
    let d = trace.dense_waveform.as_ref().expect("dense waveform");
    let tail = d.tail(tail_cycles * spc);
    let mut t = 0.0;
    let mut cycles_in = 0usize;
    for s in &trace.samples {
        t += t_fixed + s.t_on;
        if t >= tail.t0 {
            cycles_in += 1;
        }
    }
    let f0 = cycles_in as f64 / tail.duration();
    spectrum(&tail, f0, &SpectrumOptions::default())
        .map(|r| r.detected_orders)
        .unwrap_or_default()
}

#[test]
fn criterion_1_slope_stability_boundary() {
    let (c, s) = unit_loop();
    let omega = 2.0 * PI * 0.25e6;
    let i_c = 2.0;

    // lambda_hat = 0.45 < 1/2: certified; no subharmonics over 1000
    // cycles at any probed phase
    let lam = 0.45e6;
    let a_ub = 0.3; // leaves plenty of ramp room (validity: 2 A w / pi)
    let spec = InterferenceSpec::class_bounds(a_ub, omega, lam, 0.0).unwrap();
    let method = ConditioningMethod::SlopeComp { m_s: 0.0 };
    assert!(slope::stability_check(c.m1, 0.0, &spec).unwrap());
    let opts = ProbeOptions { cycles: 1000, step_fraction: 0.1, ..Default::default() };
    let rep = probe(&c, &s, &spec, &method, i_c, 12, 7, &opts).unwrap();
    assert_eq!(rep.converged, rep.n_draws, "failures: {:?}", rep.failures);

    // spectral check on the locked worst phase
    let ss = sim::interference_free_steady_state(&c, &s, &method, i_c).unwrap();
    let locked = WaveformKind::trapezoid_falling_at(a_ub, omega, lam, ss.t_ctl).unwrap();
    let spec_locked = InterferenceSpec::from_waveform(locked, omega).unwrap();
    let sim_opts = SimOptions { dense_samples_per_cycle: Some(64), ..Default::default() };
    let tr = sim::run_cycles_with(&c, &s, &spec_locked, &method, &[i_c], 1000, InitState::SteadyState, &sim_opts)
        .unwrap();
    let orders = tail_orders(&tr, s_t_off(&s), 840, 64);
    assert!(orders.is_empty(), "unexpected subharmonics {orders:?}");

    // 3x above the bound: the adversarial search finds a bad orbit
    let lam_hot = 1.5e6;
    let a_hot = 0.6;
    let spec_hot = InterferenceSpec::class_bounds(a_hot, omega, lam_hot, 0.0).unwrap();
    assert!(!slope::stability_check(c.m1, 1e6, &spec_hot).unwrap()); // even m_s=1 fails the bound
    let rep = probe(&c, &s, &spec_hot, &method, i_c, 16, 5, &opts).unwrap();
    let bad = rep.subharmonic + rep.irregular + rep.diverged;
    assert!(bad >= 1, "no instability found: {rep:?}");

    println!(
        "ACCEPTANCE 1 PASS: lambda_hat 0.45 clean over 1000 cycles ({} draws); \
         lambda_hat 1.5 produced {bad} unstable draws",
        rep.n_draws
    );
}

fn s_t_off(s: &ModulationScheme) -> f64 {
    match s.variant {
        cmcond::types::Modulation::ConstantOffTime { t_off } => t_off,
        cmcond::types::Modulation::ConstantOnTime { t_on } => t_on,
        cmcond::types::Modulation::FixedFrequency { .. } => 0.0,
    }
}

#[test]
fn criterion_2_optimal_slope_matches_simulated_argmin() {
    let (c, s) = unit_loop();
    let omega = 2.0 * PI * 0.1e6;
    let i_c = 2.0;
    let step = 0.25;

    for lam_hat in [0.05, 0.15, 0.3] {
        let lam = lam_hat * c.m1;
        // trapezoid sized so its ramps are 1.875 us long: locked-phase
        // runs keep every trigger on a constant-slope stretch
        let a_ub = 0.75 * PI * lam / (2.0 * omega);
        let grid: Vec<f64> = (0..=25).map(|k| k as f64 * 0.01).collect();
        let settle_of = |m_s_hat: f64| -> f64 {
            let method = ConditioningMethod::SlopeComp { m_s: m_s_hat * c.m1 };
            let ss = sim::interference_free_steady_state(&c, &s, &method, i_c).unwrap();
            let mut worst: f64 = 0.0;
            for falling in [true, false] {
                let kind = if falling {
                    WaveformKind::trapezoid_falling_at(a_ub, omega, lam, ss.t_ctl).unwrap()
                } else {
                    WaveformKind::trapezoid_rising_at(a_ub, omega, lam, ss.t_ctl).unwrap()
                };
                let spec = InterferenceSpec::from_waveform(kind, omega).unwrap();
                let cmds: Vec<f64> = std::iter::repeat(i_c)
                    .take(20)
                    .chain(std::iter::repeat(i_c + step))
                    .take(140)
                    .collect();
                let tr = sim::run_cycles(&c, &s, &spec, &method, &cmds, 140, InitState::SteadyState)
                    .unwrap();
                if let Some(r) = measure_contraction_ratio(&tr) {
                    let n = if r <= 1e-12 { 0.0 } else { (4.0 / r.ln()).abs() };
                    worst = worst.max(n);
                }
            }
            worst
        };
        let settles: Vec<f64> = grid.par_iter().map(|&ms| settle_of(ms)).collect();
        let argmin = settles
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .unwrap()
            .0;
        let ms_star = slope::optimal_slope(lam_hat);
        assert!(
            (grid[argmin] - ms_star).abs() <= 0.02 + 1e-12,
            "lambda_hat {lam_hat}: simulated argmin {} vs formula {ms_star}",
            grid[argmin]
        );
        println!(
            "ACCEPTANCE 2 PASS (lambda_hat {lam_hat}): simulated argmin {:.2} vs m_s_hat* {:.4}",
            grid[argmin], ms_star
        );
    }
}

#[test]
fn criterion_3_filter_theory_matches_simulation() {
    let (c, s) = unit_loop();
    let t_on = 1e-6;
    let omega = 2.0 * (2.0 * PI / t_on); // omega_hat = 2
    let spec = InterferenceSpec::from_waveform(
        WaveformKind::sinusoid(0.03, omega, PI / 2.0),
        omega,
    )
    .unwrap();
    for tau_hat in [0.2, 0.5, 1.0, 2.0] {
        let tau = tau_hat * t_on;
        let (th, sm) =
            filter::theory_and_sim_metrics(&c, &s, &spec, tau, 3.0, 0.01).unwrap();
        let dn = (th.n_settle as f64 - sm.n_settle as f64).abs();
        let do_ = (th.overshoot - sm.overshoot).abs();
        assert!(
            dn <= 1.0,
            "tau_hat {tau_hat}: settling theory {} vs sim {}",
            th.n_settle,
            sm.n_settle
        );
        assert!(
            do_ <= 0.02,
            "tau_hat {tau_hat}: overshoot theory {} vs sim {}",
            th.overshoot,
            sm.overshoot
        );
        println!(
            "ACCEPTANCE 3 PASS (tau_hat {tau_hat}): N {} vs {} cycles, O {:.3} vs {:.3}",
            th.n_settle, sm.n_settle, th.overshoot, sm.overshoot
        );
    }
}

#[test]
fn criterion_4_filter_capacitor_sequence() {
    // valley-controlled loop as in the hardware: increasing the filter
    // time constant walks unstable -> stable -> period-2
    let c = ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap();
    let s = ModulationScheme::constant_on_time(1e-6, 0.01e-6).unwrap();
    let t_off = 1e-6;
    let omega = 2.0 * (2.0 * PI / t_off);
    let spec = InterferenceSpec::from_waveform(
        WaveformKind::sinusoid(0.15, omega, -0.6 * PI),
        omega,
    )
    .unwrap();
    let i_c = 2.0;
    let opts = SimOptions { dense_samples_per_cycle: Some(64), ..Default::default() };
    let run = |tau_hat: f64| {
        let method = ConditioningMethod::LowPassFilter { tau: tau_hat * t_off };
        let tr = sim::run_cycles_with(&c, &s, &spec, &method, &[i_c], 1200, InitState::SteadyState, &opts)
            .unwrap();
        let tail = sim::classify_tail(&tr, 8, i_c);
        let orders = tail_orders(&tr, 1e-6, 840, 64);
        (tail, orders)
    };

    let (tail_fast, orders_fast) = run(0.05);
    assert_ne!(tail_fast, TailBehavior::Converged, "fast filter should not stabilize");
    assert!(
        orders_fast.len() >= 2 && orders_fast.iter().any(|&(_, q)| q >= 3),
        "expected multiple fractional orders, got {orders_fast:?}"
    );

    let (tail_mid, orders_mid) = run(0.25);
    assert_eq!(tail_mid, TailBehavior::Converged);
    assert!(orders_mid.is_empty(), "stable case flagged {orders_mid:?}");

    let (tail_slow, orders_slow) = run(0.65);
    assert_eq!(tail_slow, TailBehavior::Periodic { q: 2 }, "got {tail_slow:?}");
    assert!(
        !orders_slow.is_empty() && orders_slow.iter().all(|&(_, q)| q == 2),
        "expected only 1/2-order content, got {orders_slow:?}"
    );

    println!(
        "ACCEPTANCE 4 PASS: tau_hat 0.05 orders {orders_fast:?}; 0.25 clean; 0.65 orders {orders_slow:?}"
    );
}

#[test]
fn criterion_5_overdrive_envelope_theorems_and_delay() {
    let (c, s) = unit_loop();
    let i_c = 2.0;

    // (a) 500-draw envelope containment
    let a_ub = 0.08;
    let omega = 2.0 * PI * 2e6;
    let slew = 4.0 * a_ub * omega / PI;
    let model = ComparatorModel::new(20e-9, 0.05, 0.0, 0.0).unwrap();
    let zero = InterferenceSpec::zero();
    let ideal = overdrive::overdrive_trigger_time(&c, &s, &zero, &model, 1.0, i_c, 0).unwrap();
    let slack = a_ub / c.m1 + 1e-12;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let phases: Vec<f64> = (0..500).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
    let violations: usize = phases
        .par_iter()
        .map(|&phase| {
            let kind = WaveformKind::trapezoid(a_ub, omega, slew, phase).unwrap();
            let spec = InterferenceSpec::from_waveform(kind, omega).unwrap();
            let t = overdrive::overdrive_trigger_time(&c, &s, &spec, &model, 1.0, i_c, 0)
                .unwrap();
            usize::from(t < ideal - slack || t > ideal + slack)
        })
        .sum();
    assert_eq!(violations, 0, "{violations} envelope violations");

    // (b) stability-bound checks over 1000 draws. The class B comes
    // from the worst-case trapezoid's own line spectrum.
    let b_trap = cmcond::interference::b_of_lines(
        &WaveformKind::trapezoid(a_ub, omega, slew, 0.0).unwrap(),
    )
    .unwrap();
    let class = InterferenceSpec::class_bounds(a_ub, omega, slew, b_trap).unwrap();
    let opts = ProbeOptions { cycles: 300, step_fraction: 0.1, ..Default::default() };

    // at the bound with 5% margin: no divergent trace (bound check, not
    // exact boundary: the small-signal pole range still straddles the
    // unit circle there, so bounded subharmonics can survive)
    let budget = overdrive::stability_bound(c.m1, &class).unwrap() * 1.05;
    let cert = ComparatorModel::new(budget * c.r_sense / 0.05, 0.05, 0.0, 0.0).unwrap();
    let rep5 = probe(&c, &s, &class, &cert.method(), i_c, 1000, 13, &opts).unwrap();
    assert_eq!(rep5.diverged, 0, "divergent draws at the certified budget: {:?}", &rep5.failures);

    // with the margin that also brings the pole range inside the unit
    // circle, every draw settles to the period-1 point
    let budget2 = overdrive::stability_bound(c.m1, &class).unwrap() * 2.0;
    let t_base = s.base_period(&c);
    let tau_hat2 = 2.0 * budget2 / (c.m1 * t_base * t_base);
    let a_hat = a_ub / (c.m1 * t_base);
    let omega_hat = omega * t_base / (2.0 * PI);
    let (_, _, pr) = overdrive::psi_and_pole_range(c.m1, a_hat, omega_hat, tau_hat2).unwrap();
    assert!(pr.is_stable(), "pole range {pr:?}");
    let cert2 = ComparatorModel::new(budget2 * c.r_sense / 0.05, 0.05, 0.0, 0.0).unwrap();
    let rep = probe(&c, &s, &class, &cert2.method(), i_c, 1000, 13, &opts).unwrap();
    assert_eq!(rep.converged, rep.n_draws, "failures: {:?}", &rep.failures[..rep.failures.len().min(4)]);

    // (c) interference-free overdrive delay equals sqrt(2 V tau / m1) + T_d.
    // A vanishingly small sinusoid keeps the solver on the generic
    // saturating-integrator path, so the comparison is not circular.
    let t_d = 3e-9;
    let model_d = ComparatorModel::new(20e-9, 0.05, t_d, 0.0).unwrap();
    let nearly_zero = InterferenceSpec::from_waveform(
        WaveformKind::sinusoid(1e-9, 2.0 * PI * 2e6, 0.3),
        2.0 * PI * 2e6,
    )
    .unwrap();
    let tr = sim::run_cycles(&c, &s, &nearly_zero, &model_d.method(), &[i_c], 6, InitState::SteadyState)
        .unwrap();
    let last = tr.samples.last().unwrap();
    let i_v = last.i_extremum - c.m1 * last.t_on;
    let t0 = (i_c - i_v) / c.m1;
    let t_od_meas = last.t_on - t0 - t_d;
    let t_od_pred = (2.0 * model_d.budget(c.r_sense) / c.m1).sqrt();
    assert!(
        ((t_od_meas - t_od_pred) / t_od_pred).abs() < 1e-6,
        "t_od measured {t_od_meas} vs predicted {t_od_pred}"
    );

    println!(
        "ACCEPTANCE 5 PASS: envelope 500/500, Monte-Carlo {}/{} stable, t_od rel err {:.2e}",
        rep.converged,
        rep.n_draws,
        ((t_od_meas - t_od_pred) / t_od_pred).abs()
    );
}

#[test]
fn criterion_6_datasheet_fit_recovery() {
    for (p1_ns_mv, p2_ns) in [(6.102, 4.198), (113.3, 24.75)] {
        let p1 = p1_ns_mv * 1e-9 * 1e-3;
        let p2 = p2_ns * 1e-9;
        let samples: Vec<(f64, f64)> = (1..=25)
            .map(|k| {
                let v = 0.8e-3 * k as f64;
                (v, p1 / v + p2)
            })
            .collect();
        let (f1, f2) = overdrive::fit_datasheet_delay(&samples).unwrap();
        assert!(((f1 - p1) / p1).abs() < 1e-9);
        assert!(((f2 - p2) / p2).abs() < 1e-9);
    }
    println!("ACCEPTANCE 6 PASS: both fitted comparator pairs recovered to 1e-9");
}

#[test]
fn criterion_7_metric_formulas_vs_measurement() {
    for &a in &[0.1f64, -0.1, 0.3, -0.3, 0.6, -0.6, 0.9, -0.9] {
        let pr = PoleRange::new(a, a).unwrap();
        let n_pred = settling_cycles(pr).unwrap();
        let o_pred = overshoot(pr);

        // synthetic single-pole trace through a unit step
        let mut commands = vec![1.0, 1.0];
        let mut peaks = vec![1.0, 1.0];
        let mut err = -1.0;
        for _ in 0..200 {
            commands.push(2.0);
            err *= a;
            peaks.push(2.0 + err);
        }
        let samples: Vec<sim::CycleSample> = commands
            .iter()
            .zip(&peaks)
            .enumerate()
            .map(|(n, (&i_command, &i_extremum))| sim::CycleSample {
                n,
                t_on: 1e-6,
                i_extremum,
                i_command,
                trigger_time_deviation: 0.0,
            })
            .collect();
        let trace = sim::SimTrace {
            samples,
            dense_waveform: None,
            terminated_by: sim::Termination::CycleBudget,
            saturated_cycles: 0,
        };
        let m = measure_transient(&trace, SETTLING_BAND).unwrap();
        assert!(
            (m.n_settle as f64 - n_pred).abs() <= 1.0,
            "pole {a}: measured {} vs formula {n_pred}",
            m.n_settle
        );
        assert!(
            (m.overshoot - o_pred).abs() <= 0.02,
            "pole {a}: overshoot {} vs formula {o_pred}",
            m.overshoot
        );
    }
    println!("ACCEPTANCE 7 PASS: settling/overshoot formulas agree for 8 pole values");
}

#[test]
fn criterion_8_method_comparison_regimes() {
    // regime 1: interference well above the switching rate
    let cloud = compare::tradeoff_cloud(0.01, 3.0, 3.0, &TradeoffGrids::default()).unwrap();
    let s_f = compare::front_retention(&cloud, Method::Slope, Method::Filter);
    let f_s = compare::front_retention(&cloud, Method::Filter, Method::Slope);
    let s_o = compare::front_retention(&cloud, Method::Slope, Method::Overdrive);
    let o_s = compare::front_retention(&cloud, Method::Overdrive, Method::Slope);
    assert!(s_f < f_s && s_o < o_s, "regime 1: {s_f} {f_s} {s_o} {o_s}");

    // regime 2: interference at the switching rate
    let cloud = compare::tradeoff_cloud(0.12, 1.0, 3.0, &TradeoffGrids::default()).unwrap();
    let f_s = compare::front_retention(&cloud, Method::Filter, Method::Slope);
    let s_f = compare::front_retention(&cloud, Method::Slope, Method::Filter);
    let f_o = compare::front_retention(&cloud, Method::Filter, Method::Overdrive);
    let o_f = compare::front_retention(&cloud, Method::Overdrive, Method::Filter);
    assert!(f_s < s_f && f_o < o_f, "regime 2: {f_s} {s_f} {f_o} {o_f}");

    println!(
        "ACCEPTANCE 8 PASS: slope dominated at (0.01, 3), filter dominated at (0.12, 1)"
    );
}

#[test]
fn criterion_9_appendix_models() {
    let c = ConverterConfig::buck(12.0, 2.0, 240e-9, 100e-6, 0.2, 0.01).unwrap();
    let s = ModulationScheme::constant_on_time(100e-9, 10e-9).unwrap();

    // double-entry golden tuples (independently evaluated coefficients)
    let tf_a = appendix_a_tf(&c, &s, 0.5);
    assert!((-tf_a.den[1] - 0.96875).abs() < 1e-12);
    let g = 240e-9 / 2.0;
    assert!((tf_a.num[0] - g).abs() < 1e-18);
    assert!((tf_a.num[1] + g * 1.96125).abs() < 1e-12 * g);
    assert!((tf_a.num[2] + g * -0.97625).abs() < 1e-12 * g);

    let tf_b = appendix_b_plant(&c, &s, 0.5);
    assert!((tf_b.num[1] - 0.003).abs() < 1e-15);
    assert!((-tf_b.den[1] - 0.96875).abs() < 1e-12);
    assert!((-tf_b.num[2] / tf_b.num[1] + 1.0).abs() < 1e-12);

    let tf_c = appendix_c_boost_tf(&BoostSampledParams {
        m_ratio: 1.0,
        tau1_hat: 10.0,
        tau2_hat: 2.0,
        r_load: 1.0,
        t_s: 0.2e-6,
    });
    assert!((tf_c.num[1] - -0.1625).abs() < 1e-15);
    assert!((-tf_c.den[1] - 0.83125).abs() < 1e-15);
    assert!((-tf_c.num[2] / tf_c.num[1] - 23.0 / 19.0).abs() < 1e-12);

    // step responses by direct recursion equal the geometric closed form
    for tf in [&tf_a, &tf_b, &tf_c] {
        let a = -tf.den[1];
        let (n0, n1, n2) = (
            tf.num[0],
            tf.num.get(1).copied().unwrap_or(0.0),
            tf.num.get(2).copied().unwrap_or(0.0),
        );
        let geo = |j: i64| -> f64 {
            if j < 0 {
                0.0
            } else {
                (1.0 - a.powi(j as i32 + 1)) / (1.0 - a)
            }
        };
        let resp = tf.step_response(96);
        let scale = resp.iter().fold(1e-30f64, |m, y| m.max(y.abs()));
        for (k, y) in resp.iter().enumerate() {
            let exact = n0 * geo(k as i64) + n1 * geo(k as i64 - 1) + n2 * geo(k as i64 - 2);
            assert!((y - exact).abs() <= 1e-9 * scale, "k={k}: {y} vs {exact}");
        }
    }
    println!("ACCEPTANCE 9 PASS: appendix golden tuples and step-response equivalence hold");
}
