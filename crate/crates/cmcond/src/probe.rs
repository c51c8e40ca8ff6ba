//! Monte-Carlo stability probing: draw interference realizations from
//! the bounded class, run the nonlinear loop through a command step,
//! and tally the steady-state classifications. Certified designs must
//! survive every draw; the adversarial draws use worst-phase
//! trapezoids locked to the steady trigger.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interference::{InterferenceSpec, PhaseMode, Waveform, WaveformKind};
use crate::sim::{self, InitState, TailBehavior, Termination};
use crate::types::{ConditioningMethod, ConverterConfig, ModulationScheme};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DrawKind {
    RandomPhase,
    PerCyclePhase,
    LockedFalling,
    LockedRising,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbeDraw {
    pub index: usize,
    pub kind: DrawKind,
    pub phase: f64,
    pub outcome: TailBehavior,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub n_draws: usize,
    pub converged: usize,
    pub subharmonic: usize,
    pub irregular: usize,
    pub diverged: usize,
    /// Draws that did not converge, in draw order.
    pub failures: Vec<ProbeDraw>,
}

impl ProbeReport {
    pub fn failure_fraction(&self) -> f64 {
        (self.n_draws - self.converged) as f64 / self.n_draws as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeOptions {
    pub cycles: usize,
    /// Relative command step applied after the settling prefix.
    pub step_fraction: f64,
    pub max_period: usize,
    /// Fraction of draws that re-randomize the phase every cycle.
    /// Those cannot settle to a periodic point, so they classify as
    /// converged when the tail stays inside a bounded dither band.
    pub per_cycle_fraction: f64,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions { cycles: 300, step_fraction: 0.1, max_period: 8, per_cycle_fraction: 0.0 }
    }
}

/// Runs `n_draws` interference realizations of the class in
/// `interference` (worst-case trapezoids at the class bounds) against
/// the conditioned loop. Deterministic in `seed`; draws execute in
/// parallel and are reported in draw order.
pub fn probe(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    interference: &InterferenceSpec,
    method: &ConditioningMethod,
    i_c: f64,
    n_draws: usize,
    seed: u64,
    options: &ProbeOptions,
) -> Result<ProbeReport> {
    if n_draws == 0 {
        return Err(Error::validation("n_draws", "must be at least 1"));
    }
    method.validate()?;
    // lock the adversarial phases to the interference-free trigger
    let ss = sim::interference_free_steady_state(config, scheme, method, i_c)?;

    let draws: Vec<ProbeDraw> = (0..n_draws)
        .into_par_iter()
        .map(|index| -> Result<ProbeDraw> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9E37_79B9));
            let (kind, phase, waveform) = match index {
                0 => {
                    let k = WaveformKind::trapezoid_falling_at(
                        interference.a_ub,
                        interference.omega_l,
                        interference.lambda_ub.max(1e-300),
                        ss.t_ctl,
                    )?;
                    (DrawKind::LockedFalling, locked_phase(&k), Waveform::fixed(k))
                }
                1 => {
                    let k = WaveformKind::trapezoid_rising_at(
                        interference.a_ub,
                        interference.omega_l,
                        interference.lambda_ub.max(1e-300),
                        ss.t_ctl,
                    )?;
                    (DrawKind::LockedRising, locked_phase(&k), Waveform::fixed(k))
                }
                _ => {
                    let phase = rng.gen_range(0.0..std::f64::consts::TAU);
                    let k = interference.worst_case_trapezoid(phase)?;
                    let per_cycle = (index as f64 / n_draws as f64)
                        < options.per_cycle_fraction;
                    if per_cycle {
                        (
                            DrawKind::PerCyclePhase,
                            phase,
                            Waveform {
                                kind: k,
                                phase_mode: PhaseMode::RandomPerCycle,
                                seed: seed ^ index as u64,
                            },
                        )
                    } else {
                        (DrawKind::RandomPhase, phase, Waveform::fixed(k))
                    }
                }
            };
            let spec = InterferenceSpec {
                a_ub: interference.a_ub,
                omega_l: interference.omega_l,
                lambda_ub: interference.lambda_ub,
                b_functional: interference.b_functional,
                waveform: Some(waveform),
            };
            let settle = options.cycles / 3;
            let cmds: Vec<f64> = std::iter::repeat(i_c)
                .take(settle)
                .chain(std::iter::repeat(i_c * (1.0 + options.step_fraction)))
                .take(options.cycles)
                .collect();
            let trace = sim::run_cycles(
                config,
                scheme,
                &spec,
                method,
                &cmds,
                options.cycles,
                InitState::SteadyState,
            )?;
            let outcome = if trace.terminated_by == Termination::Diverged {
                TailBehavior::Diverged
            } else if kind == DrawKind::PerCyclePhase {
                // no periodic point exists under per-cycle dither;
                // bounded tails inside the dither band count as stable
                let tail: Vec<f64> = trace
                    .samples
                    .iter()
                    .rev()
                    .take(4 * options.max_period)
                    .map(|s| s.i_extremum)
                    .collect();
                let lo = tail.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                if hi - lo <= 8.0 * interference.a_ub + 1e-7 * i_c.abs() {
                    TailBehavior::Converged
                } else {
                    TailBehavior::Irregular
                }
            } else {
                sim::classify_tail(&trace, options.max_period, i_c)
            };
            Ok(ProbeDraw { index, kind, phase, outcome })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = ProbeReport {
        n_draws,
        converged: 0,
        subharmonic: 0,
        irregular: 0,
        diverged: 0,
        failures: Vec::new(),
    };
    for d in draws {
        match d.outcome {
            TailBehavior::Converged => report.converged += 1,
            TailBehavior::Periodic { .. } => {
                report.subharmonic += 1;
                report.failures.push(d);
            }
            TailBehavior::Irregular => {
                report.irregular += 1;
                report.failures.push(d);
            }
            TailBehavior::Diverged => {
                report.diverged += 1;
                report.failures.push(d);
            }
        }
    }
    Ok(report)
}

fn locked_phase(kind: &WaveformKind) -> f64 {
    match *kind {
        WaveformKind::Trapezoid { phase, .. } => phase,
        _ => 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certified_design_survives_draws() {
        // lambda_hat = 0.3 < 1/2 + m_s_hat = 0.7: certified stable
        let c = ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap();
        let s = ModulationScheme::constant_off_time(1e-6, 0.0).unwrap();
        let omega = 2.0 * std::f64::consts::PI * 0.5e6;
        let lam = 0.3e6;
        let a_ub = (lam * std::f64::consts::PI / (2.0 * omega)).min(0.25);
        let spec = InterferenceSpec::class_bounds(a_ub, omega, lam, 0.0).unwrap();
        let m = ConditioningMethod::SlopeComp { m_s: 0.2e6 };
        let r = probe(&c, &s, &spec, &m, 2.0, 64, 11, &ProbeOptions::default()).unwrap();
        assert_eq!(r.converged, 64, "failures: {:?}", r.failures);
        assert_eq!(r.failure_fraction(), 0.0);
    }

    #[test]
    fn violated_bound_is_found_by_adversarial_draws() {
        // lambda 3x above the m1/2 bound, no compensation: the locked
        // worst-phase draws must find a bad orbit
        let c = ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap();
        let s = ModulationScheme::constant_off_time(1e-6, 0.0).unwrap();
        let omega = 2.0 * std::f64::consts::PI * 0.25e6;
        let lam = 1.5e6;
        let a_ub = 0.6;
        // trapezoid validity: lam >= 2 a omega / pi
        assert!(lam >= 2.0 * a_ub * omega / std::f64::consts::PI);
        let spec = InterferenceSpec::class_bounds(a_ub, omega, lam, 0.0).unwrap();
        let m = ConditioningMethod::SlopeComp { m_s: 0.0 };
        let r = probe(&c, &s, &spec, &m, 2.0, 16, 5, &ProbeOptions::default()).unwrap();
        assert!(
            r.subharmonic + r.irregular + r.diverged >= 1,
            "no instability found: {r:?}"
        );
    }

    #[test]
    fn single_draw_is_deterministic() {
        let c = ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap();
        let s = ModulationScheme::constant_off_time(1e-6, 0.0).unwrap();
        let spec = InterferenceSpec::class_bounds(0.1, 2.0e6, 0.4e6, 0.0).unwrap();
        let m = ConditioningMethod::SlopeComp { m_s: 0.1e6 };
        let a = probe(&c, &s, &spec, &m, 2.0, 1, 42, &ProbeOptions::default()).unwrap();
        let b = probe(&c, &s, &spec, &m, 2.0, 1, 42, &ProbeOptions::default()).unwrap();
        assert_eq!(a, b);
    }
}
