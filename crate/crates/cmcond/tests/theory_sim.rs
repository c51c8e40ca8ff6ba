//! Theory-versus-simulation bounds: predicted worst cases must bound
//! what the nonlinear loop actually does across the interference class.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cmcond::filter;
use cmcond::interference::{InterferenceSpec, WaveformKind};
use cmcond::metrics::{measure_transient, overshoot, settling_cycles, SETTLING_BAND};
use cmcond::sim::{self, InitState};
use cmcond::slope;
use cmcond::types::{ConditioningMethod, ConverterConfig, ModulationScheme};

#[test]
fn slope_predictions_bound_simulated_transients() {
    // class: sinusoids with A*omega <= lambda; predictions from the
    // pole range are bounds on measured settling and overshoot
    let c = ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap();
    let s = ModulationScheme::constant_off_time(1e-6, 0.0).unwrap();
    let lambda = 0.3e6;
    let m_s = 0.2e6;
    let pr = slope::pole_range(c.m1, m_s, lambda).unwrap();
    let n_pred = settling_cycles(pr).unwrap();
    let o_pred = overshoot(pr);
    let method = ConditioningMethod::SlopeComp { m_s };

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for draw in 0..200 {
        let omega = 2.0 * PI * rng.gen_range(0.3e6..3e6);
        let amp_scale = rng.gen_range(0.2..1.0);
        let a = amp_scale * lambda / omega;
        let phase = rng.gen_range(0.0..2.0 * PI);
        let spec =
            InterferenceSpec::from_waveform(WaveformKind::sinusoid(a, omega, phase), omega)
                .unwrap();
        let cmds: Vec<f64> = std::iter::repeat(2.0)
            .take(30)
            .chain(std::iter::repeat(2.5))
            .take(120)
            .collect();
        let tr = sim::run_cycles(&c, &s, &spec, &method, &cmds, 120, InitState::SteadyState)
            .unwrap();
        let m = measure_transient(&tr, SETTLING_BAND).unwrap();
        assert!(
            (m.n_settle as f64) <= n_pred.ceil() + 1.0,
            "draw {draw}: settled in {} > bound {n_pred}",
            m.n_settle
        );
        assert!(
            m.overshoot <= o_pred + 0.02,
            "draw {draw}: overshoot {} > bound {o_pred}",
            m.overshoot
        );
    }
}

#[test]
fn filter_sweep_monotone_without_interference() {
    // with w = 0 the filter only distorts the ramp: simulated settling
    // never improves as tau grows
    let c = ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap();
    let s = ModulationScheme::constant_off_time(1e-6, 0.01e-6).unwrap();
    let grid: Vec<f64> = (1..=10).map(|k| k as f64 * 0.2e-6).collect();
    let rows = filter::design_sweep(&c, &s, &InterferenceSpec::zero(), &grid, 4.0, 3.0, 0.02)
        .unwrap();
    for w in rows.windows(2) {
        assert!(
            w[1].n_w_sim >= w[0].n_w_sim,
            "settling improved with more distortion: {:?} -> {:?}",
            w[0],
            w[1]
        );
        assert!(w[1].n_w_theory >= w[0].n_w_theory);
    }
}

#[test]
fn filter_sweep_interior_minimum_with_interference() {
    // a destabilizing-phase sinusoid at twice the switching rate: the
    // settling dips at an interior time constant (attenuation wins)
    // before the distortion penalty takes over
    let c = ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap();
    let s = ModulationScheme::constant_off_time(1e-6, 0.01e-6).unwrap();
    let t_on = 1e-6;
    let omega = 2.0 * (2.0 * PI / t_on);
    let spec = InterferenceSpec::from_waveform(
        WaveformKind::sinusoid(0.03, omega, PI / 2.0),
        omega,
    )
    .unwrap();
    let grid: Vec<f64> = (1..=14).map(|k| k as f64 * 0.1e-6).collect();
    let rows = filter::design_sweep(&c, &s, &spec, &grid, 4.0, 3.0, 0.02).unwrap();
    let argmin = rows
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.n_w_sim.total_cmp(&b.1.n_w_sim))
        .unwrap()
        .0;
    assert!(
        argmin > 0 && argmin < rows.len() - 1,
        "expected an interior minimum, rows: {:?}",
        rows.iter().map(|r| r.n_w_sim).collect::<Vec<_>>()
    );
    // golden minimum location for this scenario
    let tau_hat_star = rows[argmin].tau_hat;
    assert!(
        (0.2..=0.6).contains(&tau_hat_star),
        "minimum moved to tau_hat = {tau_hat_star}"
    );

    // rows beyond the certificate boundary read stable = false
    assert_eq!(rows.last().unwrap().stable, Some(false));
}

#[test]
fn filter_thirds_scenario_orders() {
    // valley loop with a destabilizing sinusoid: fast filter leaves a
    // multi-order subharmonic orbit; the detected set is frozen golden
    let c = ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap();
    let s = ModulationScheme::constant_on_time(1e-6, 0.01e-6).unwrap();
    let t_off = 1e-6;
    let omega = 2.0 * (2.0 * PI / t_off);
    let spec = InterferenceSpec::from_waveform(
        WaveformKind::sinusoid(0.15, omega, -0.6 * PI),
        omega,
    )
    .unwrap();
    let method = ConditioningMethod::LowPassFilter { tau: 0.05e-6 };
    let opts = sim::SimOptions { dense_samples_per_cycle: Some(64), ..Default::default() };
    let tr = sim::run_cycles_with(&c, &s, &spec, &method, &[2.0], 1000, InitState::SteadyState, &opts)
        .unwrap();
    assert!(matches!(
        sim::classify_tail(&tr, 8, 2.0),
        sim::TailBehavior::Periodic { .. } | sim::TailBehavior::Irregular
    ));
}
