//! Settling and overshoot metrics, both predicted from closed-loop pole
//! locations and measured from simulated traces.
//!
//! The settling convention everywhere is the 4-time-constant one:
//! `N_w = 4 / |ln|a||` cycles for a pole `a`, and the matching
//! measurement band is `e^{-4}` of the step.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sim::SimTrace;

/// Settling measurement band matching the 4-time-constant convention.
pub const SETTLING_BAND: f64 = 0.018315638888734179; // e^{-4}

/// Closed-loop pole interval on the real z-axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoleRange {
    pub a_min: f64,
    pub a_max: f64,
}

impl PoleRange {
    pub fn new(a_min: f64, a_max: f64) -> Result<Self> {
        if !a_min.is_finite() || !a_max.is_finite() {
            return Err(Error::Numerical("pole bounds must be finite".into()));
        }
        if a_min > a_max {
            return Err(Error::Numerical(format!(
                "pole range inverted: a_min {a_min} > a_max {a_max}"
            )));
        }
        Ok(PoleRange { a_min, a_max })
    }

    pub fn point(a: f64) -> Result<Self> {
        Self::new(a, a)
    }

    /// Both endpoints strictly inside the unit circle.
    pub fn is_stable(&self) -> bool {
        self.a_min.abs() < 1.0 && self.a_max.abs() < 1.0
    }
}

/// Worst-case settling cycles over a pole range:
/// `max(|4/ln|a_min||, |4/ln|a_max||)`, with `a = 0` extended
/// continuously to zero cycles.
pub fn settling_cycles(range: PoleRange) -> Result<f64> {
    Ok(settle_one(range.a_min)?.max(settle_one(range.a_max)?))
}

fn settle_one(a: f64) -> Result<f64> {
    let m = a.abs();
    if m >= 1.0 {
        return Err(Error::UnstablePole { pole_mag: m });
    }
    if m == 0.0 {
        return Ok(0.0);
    }
    Ok((4.0 / m.ln()).abs())
}

/// Worst-case overshoot fraction `max(-a_min, 0)` induced by the most
/// negative admissible pole.
pub fn overshoot(range: PoleRange) -> f64 {
    (-range.a_min).max(0.0)
}

/// Metrics measured from a simulated step response.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransientMetrics {
    /// Cycles from the command step until the extremum error stays
    /// inside the band.
    pub n_settle: usize,
    /// Max excursion beyond the final value, as a fraction of the step.
    pub overshoot: f64,
    /// True when the trace ran out before settling; `n_settle` then
    /// holds the available cycle budget.
    pub saturated: bool,
}

/// Measures settling and overshoot of the last command step in a trace.
/// `band` is the settling tolerance as a fraction of the step
/// (`SETTLING_BAND` reproduces the 4-time-constant convention).
pub fn measure_transient(trace: &SimTrace, band: f64) -> Result<TransientMetrics> {
    let s = &trace.samples;
    if s.len() < 3 {
        return Err(Error::Numerical("trace too short to hold a step".into()));
    }
    let step_idx = (1..s.len())
        .rev()
        .find(|&i| s[i].i_command != s[i - 1].i_command)
        .ok_or_else(|| Error::Numerical("trace contains no command step".into()))?;

    let initial = s[step_idx - 1].i_extremum;
    let last = s.len() - 1;
    let fin = s[last].i_extremum;
    let step = fin - initial;
    if step.abs() < 1e-30 {
        return Err(Error::Numerical("zero-size step".into()));
    }

    let tol = band * step.abs();
    // first index after which the error never leaves the band
    let mut settle_at = None;
    for n in (step_idx..=last).rev() {
        if (s[n].i_extremum - fin).abs() > tol {
            break;
        }
        settle_at = Some(n);
    }
    // the in-band stretch must cover a meaningful share of the trace,
    // otherwise the loop merely passed through the band
    let window = last - step_idx;
    let guard = 2.max(window / 4);
    let (n_settle, saturated) = match settle_at {
        Some(n) if last - n >= guard || n == step_idx => ((n - step_idx) + 1, false),
        _ => (window + 1, true),
    };

    let sign = step.signum();
    let over = s[step_idx..]
        .iter()
        .map(|c| (c.i_extremum - fin) * sign)
        .fold(0.0f64, f64::max)
        / step.abs();

    Ok(TransientMetrics { n_settle, overshoot: over.max(0.0), saturated })
}

/// Settling and overshoot of a discrete transfer function's exact
/// unit-step response, measured with the same band convention as the
/// trace metrics. The zero of a pole-zero pair is fully accounted for.
pub fn tf_step_metrics(
    tf: &crate::tf::DiscreteTF,
    band: f64,
    horizon: usize,
) -> Result<TransientMetrics> {
    for p in tf.poles() {
        if p.abs() >= 1.0 {
            return Err(Error::UnstablePole { pole_mag: p.abs() });
        }
    }
    let y = tf.step_response(horizon);
    let y_inf = tf.dc_gain();
    if y_inf.abs() < 1e-300 {
        return Err(Error::Numerical("zero dc gain: no step to measure".into()));
    }
    let tol = band * y_inf.abs();
    let mut settle_at = None;
    for k in (0..y.len()).rev() {
        if (y[k] - y_inf).abs() > tol {
            break;
        }
        settle_at = Some(k);
    }
    let (n_settle, saturated) = match settle_at {
        Some(k) => (k + 1, false),
        None => (horizon, true),
    };
    let sign = y_inf.signum();
    let over = y.iter().map(|v| (v - y_inf) * sign).fold(0.0f64, f64::max) / y_inf.abs();
    Ok(TransientMetrics { n_settle, overshoot: over.max(0.0), saturated })
}

/// Worst per-cycle contraction ratio `|e[n+1]| / |e[n]|` of the error
/// to the final value, measured over the step transient. For a pure
/// geometric response this equals the pole magnitude; `4/|ln r|`
/// converts it into fractional settling cycles.
pub fn measure_contraction_ratio(trace: &SimTrace) -> Option<f64> {
    let s = &trace.samples;
    let step_idx = (1..s.len()).rev().find(|&i| s[i].i_command != s[i - 1].i_command)?;
    let fin = s.last()?.i_extremum;
    let step = (fin - s[step_idx - 1].i_extremum).abs();
    if step < 1e-30 {
        return None;
    }
    let mut worst: Option<f64> = None;
    for n in step_idx..s.len() - 1 {
        let e0 = (s[n].i_extremum - fin).abs();
        let e1 = (s[n + 1].i_extremum - fin).abs();
        // stop once the error hits the numerical noise floor
        if e0 < 1e-9 * step {
            break;
        }
        let r = e1 / e0;
        worst = Some(worst.map_or(r, |w: f64| w.max(r)));
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{CycleSample, SimTrace, Termination};

    fn trace_from(commands: &[f64], peaks: &[f64]) -> SimTrace {
        let samples = commands
            .iter()
            .zip(peaks)
            .enumerate()
            .map(|(n, (&c, &p))| CycleSample {
                n,
                t_on: 1e-6,
                i_extremum: p,
                i_command: c,
                trigger_time_deviation: 0.0,
            })
            .collect();
        SimTrace {
            samples,
            dense_waveform: None,
            terminated_by: Termination::CycleBudget,
            saturated_cycles: 0,
        }
    }

    #[test]
    fn settling_formula_values() {
        // ln(e^{-1}) = -1 so 4/1 = 4
        let e1 = (-1.0f64).exp();
        let r = PoleRange::new(e1, e1).unwrap();
        assert!((settling_cycles(r).unwrap() - 4.0).abs() < 1e-12);

        let r = PoleRange::new(0.0, 0.0).unwrap();
        assert_eq!(settling_cycles(r).unwrap(), 0.0);

        let r = PoleRange::new(-0.5352, 0.5352).unwrap();
        let n = settling_cycles(r).unwrap();
        assert!((n - 4.0 / 0.5352f64.ln().abs()).abs() < 1e-12);
        assert!((n - 6.40).abs() < 0.01, "n = {n}");
    }

    #[test]
    fn settling_rejects_unit_circle() {
        let r = PoleRange::new(-0.2, 1.0).unwrap();
        assert!(matches!(settling_cycles(r), Err(Error::UnstablePole { .. })));
    }

    #[test]
    fn overshoot_formula() {
        assert_eq!(overshoot(PoleRange::new(-0.5, 0.1).unwrap()), 0.5);
        assert_eq!(overshoot(PoleRange::new(0.3, 0.4).unwrap()), 0.0);
        let o = overshoot(PoleRange::new(-0.2273, 0.1852).unwrap());
        assert!((o - 0.2273).abs() < 1e-12);
    }

    #[test]
    fn deadbeat_trace_measures_one_cycle_no_overshoot() {
        let commands = [1.0, 1.0, 2.0, 2.0, 2.0, 2.0];
        let peaks = [1.0, 1.0, 2.0, 2.0, 2.0, 2.0];
        let m = measure_transient(&trace_from(&commands, &peaks), SETTLING_BAND).unwrap();
        assert_eq!(m.n_settle, 1);
        assert_eq!(m.overshoot, 0.0);
        assert!(!m.saturated);
    }

    #[test]
    fn geometric_trace_ratio_e_inv_settles_in_about_four() {
        let a = (-1.0f64).exp();
        let mut commands = vec![1.0, 1.0];
        let mut peaks = vec![1.0, 1.0];
        let mut err = 1.0; // step from 1 to 2
        for _ in 0..30 {
            commands.push(2.0);
            err *= a;
            peaks.push(2.0 - err);
        }
        let m = measure_transient(&trace_from(&commands, &peaks), SETTLING_BAND).unwrap();
        assert!(
            (m.n_settle as i64 - 4).abs() <= 1,
            "expected 4 +/- 1 cycles, got {}",
            m.n_settle
        );
        let r = measure_contraction_ratio(&trace_from(&commands, &peaks)).unwrap();
        assert!((r - a).abs() < 1e-9, "ratio {r}");
    }

    #[test]
    fn alternating_pole_overshoot() {
        let a: f64 = -0.5;
        let mut commands = vec![1.0, 1.0];
        let mut peaks = vec![1.0, 1.0];
        let mut err = -1.0;
        for _ in 0..40 {
            commands.push(2.0);
            err *= a;
            peaks.push(2.0 + err);
        }
        let m = measure_transient(&trace_from(&commands, &peaks), SETTLING_BAND).unwrap();
        assert!((m.overshoot - 0.5).abs() < 0.02, "overshoot {}", m.overshoot);
    }

    #[test]
    fn never_settling_reports_saturated() {
        let mut commands = vec![1.0, 1.0];
        let mut peaks = vec![1.0, 1.0];
        for n in 0..20 {
            commands.push(2.0);
            peaks.push(if n % 2 == 0 { 2.5 } else { 1.5 });
        }
        let m = measure_transient(&trace_from(&commands, &peaks), SETTLING_BAND).unwrap();
        assert!(m.saturated);
        assert_eq!(m.n_settle, 20);
    }
}
