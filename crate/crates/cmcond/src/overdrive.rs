//! Comparator-overdrive-delay conditioning: the saturating-integrator
//! comparator model, stability and delay bounds, feedback-gain and pole
//! ranges, sizing for speed, and datasheet delay-curve fitting.
//!
//! Trigger thresholds enter the current-domain formulas sense-referred:
//! the charge budget is `v_trig * tau_c / r_sense` in ampere-seconds.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interference::InterferenceSpec;
use crate::metrics::{overshoot, settling_cycles, PoleRange};
use crate::sim::{self, CycleContext};
use crate::types::{ConditioningMethod, ConverterConfig, ModulationScheme};

/// Saturating-integrator comparator: time constant `tau_c = C_eff/G`,
/// trigger threshold `v_trig`, input-independent delay `t_d`, and a
/// blanking interval during which the integrator is held in reset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComparatorModel {
    pub tau_c: f64,
    pub v_trig: f64,
    pub t_d: f64,
    pub blanking: f64,
}

impl ComparatorModel {
    pub fn new(tau_c: f64, v_trig: f64, t_d: f64, blanking: f64) -> Result<Self> {
        if !(tau_c > 0.0) {
            return Err(Error::validation("tau_c", "must be positive"));
        }
        if !(v_trig > 0.0) {
            return Err(Error::validation("v_trig", "must be positive"));
        }
        if !(t_d >= 0.0) || !(blanking >= 0.0) {
            return Err(Error::validation("t_d", "delays must be non-negative"));
        }
        Ok(ComparatorModel { tau_c, v_trig, t_d, blanking })
    }

    pub fn method(&self) -> ConditioningMethod {
        ConditioningMethod::OverdriveDelay {
            tau_c: self.tau_c,
            v_trig: self.v_trig,
            t_d: self.t_d,
        }
    }

    /// Sense-referred charge budget (A·s).
    pub fn budget(&self, r_sense: f64) -> f64 {
        self.v_trig * self.tau_c / r_sense
    }

    /// Region boundaries of the input model for one cycle: blanking end
    /// `t_a`, upper-envelope command crossing `t_b`, and lower-envelope
    /// crossing `t_d` around the ideal crossing `t0`.
    pub fn region_boundaries(&self, t0: f64, m: f64, a_ub: f64) -> Result<(f64, f64, f64)> {
        let t_a = self.blanking;
        let t_b = t0 - a_ub / m;
        let t_d = t0 + a_ub / m;
        if t_a > t_b {
            return Err(Error::validation(
                "blanking",
                format!("blanking {t_a} runs past the upper-envelope crossing {t_b}"),
            ));
        }
        Ok((t_a, t_b, t_d))
    }
}

/// First instant the saturating integral of the current error reaches
/// the comparator budget, plus the constant delay. Shares the cycle
/// engine's comparator path.
pub fn overdrive_trigger_time(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    interference: &InterferenceSpec,
    model: &ComparatorModel,
    start_current: f64,
    i_command: f64,
    cycle_index: u64,
) -> Result<f64> {
    let method = model.method();
    let ctx = CycleContext {
        config,
        scheme,
        interference,
        method: &method,
        cycle_index,
        start_current,
        i_command,
        filter_state: 0.0,
        blanking: model.blanking,
        grid_refine: 1.0,
    };
    Ok(sim::find_trigger(&ctx)?.t_on)
}

/// Right-hand side of the stability bound: the loop is globally
/// asymptotically stable when the charge budget satisfies
/// `v_trig tau / r_sense >= 4 A_ub^2 / m1 + B` (A·s, current-referred).
pub fn stability_bound(m: f64, interference: &InterferenceSpec) -> Result<f64> {
    let b = interference.b_functional()?;
    Ok(4.0 * interference.a_ub * interference.a_ub / m + b)
}

/// Longest overdrive delay over the interference class:
/// `A/m + sqrt((A/m)^2 + 2 (Q + B)/m)` for budget `Q` (A·s).
pub fn max_overdrive_delay(m: f64, interference: &InterferenceSpec, budget: f64) -> Result<f64> {
    let b = interference.b_functional()?;
    let r = interference.a_ub / m;
    Ok(r + (r * r + 2.0 * (budget + b) / m).sqrt())
}

/// Feedback-gain bounds and the resulting pole range, from the
/// normalized interference amplitude, frequency, and comparator time
/// constant. Requires `tau_hat > a_hat / omega_hat`.
pub fn psi_and_pole_range(
    m: f64,
    a_hat: f64,
    omega_hat: f64,
    tau_hat: f64,
) -> Result<(f64, f64, PoleRange)> {
    if a_hat == 0.0 {
        return Ok((0.0, 0.0, PoleRange::point(0.0)?));
    }
    let excess = tau_hat - a_hat / omega_hat;
    if excess <= 0.0 {
        return Err(Error::Infeasible(format!(
            "insufficient overdrive: tau_hat {tau_hat} <= a_hat/omega_hat {}",
            a_hat / omega_hat
        )));
    }
    let root = (1.0 + excess / (a_hat * a_hat)).sqrt();
    let psi_min = -2.0 * m / (1.0 + root);
    let psi_max = 2.0 * m / (root - 1.0);
    let range = PoleRange::new(psi_min / (m + psi_min), psi_max / (m + psi_max))?;
    Ok((psi_min, psi_max, range))
}

/// Least-squares fit of datasheet overdrive-delay points
/// `(v_od, t_od)` to `t_od = p1 / v_od + p2`, returning the
/// trigger-voltage/time-constant product `p1` and the constant delay
/// `p2`.
pub fn fit_datasheet_delay(samples: &[(f64, f64)]) -> Result<(f64, f64)> {
    if samples.len() < 2 {
        return Err(Error::validation("samples", "need at least two points"));
    }
    let n = samples.len() as f64;
    let xs = samples.iter().map(|&(v, _)| 1.0 / v);
    let sx: f64 = xs.clone().sum();
    let sxx: f64 = xs.clone().map(|x| x * x).sum();
    let sy: f64 = samples.iter().map(|&(_, t)| t).sum();
    let sxy: f64 = samples.iter().map(|&(v, t)| t / v).sum();
    let det = n * sxx - sx * sx;
    if det.abs() <= 1e-12 * sxx.abs().max(1.0) * n {
        return Err(Error::Numerical(
            "rank-deficient fit: overdrive values are not distinct".into(),
        ));
    }
    let p1 = (n * sxy - sx * sy) / det;
    let p2 = (sy - p1 * sx) / n;
    Ok((p1, p2))
}

/// Sizing outcome for a comparator design.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OverdriveDesignReport {
    /// Comparator time constant (s).
    pub tau_c: f64,
    /// Trigger threshold used (V).
    pub v_trig: f64,
    /// Continuity certificate: not evaluable in this artifact (its
    /// spectral functional lives in an external reference); empirical
    /// grid-scan evidence stands in.
    pub continuous_certified: Option<bool>,
    pub gas_stable: bool,
    /// Longest overdrive delay over the class (s).
    pub t_od_max: f64,
    /// Minimum on time, sized equal to `t_od_max`.
    pub t_on_min: f64,
    pub psi_min: f64,
    pub psi_max: f64,
    pub pole_range: PoleRange,
    /// Worst-case settling (cycles), small-signal.
    pub n_w: f64,
    /// Worst-case overshoot fraction, small-signal.
    pub o_w: f64,
    /// Normalized comparator time constant `tau_c / tau_b`.
    pub tau_hat: f64,
}

/// Sizes the comparator for speed: pick the time constant at the
/// stability boundary plus margin, bound the overdrive delay, and set
/// the minimum on time equal to it.
pub fn size_for_speed(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    interference: &InterferenceSpec,
    v_trig: f64,
    margin: f64,
) -> Result<OverdriveDesignReport> {
    if !(v_trig > 0.0) {
        return Err(Error::validation("v_trig", "must be positive"));
    }
    if !(margin >= 0.0) {
        return Err(Error::validation("margin", "must be non-negative"));
    }
    let m = scheme.controlled_slope(config);
    let t_base = scheme.base_period(config);
    let budget = stability_bound(m, interference)? * (1.0 + margin);
    // a zero-interference class needs no averaging; keep a token budget
    let budget = budget.max(1e-9 * m * t_base * t_base);
    let tau_c = budget * config.r_sense / v_trig;
    let t_od_max = max_overdrive_delay(m, interference, budget)?;
    let t_on_min = t_od_max;
    if t_on_min >= t_base {
        return Err(Error::Infeasible(format!(
            "required minimum on time {t_on_min:.3e} s exceeds the base period {t_base:.3e} s"
        )));
    }
    let tau_b = m * t_base * t_base / (2.0 * v_trig / config.r_sense);
    let tau_hat = tau_c / tau_b;
    let a_hat = interference.a_ub / (m * t_base);
    let omega_hat = interference.omega_l * t_base / (2.0 * std::f64::consts::PI);
    let (psi_min, psi_max, pole_range) = psi_and_pole_range(m, a_hat, omega_hat, tau_hat)?;
    let n_w = if pole_range.is_stable() { settling_cycles(pole_range)? } else { f64::INFINITY };
    Ok(OverdriveDesignReport {
        tau_c,
        v_trig,
        continuous_certified: None,
        gas_stable: true,
        t_od_max,
        t_on_min,
        psi_min,
        psi_max,
        pole_range,
        n_w,
        o_w: overshoot(pole_range),
        tau_hat,
    })
}

/// Numeric feedback gain of the overdrive trigger map around the
/// steady state, by secant linearization: `psi = m a / (1 - a)` for
/// the measured one-cycle contraction `a`. The analytic
/// `[psi_min, psi_max]` bounds must contain it.
pub fn measured_feedback_gain(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    interference: &InterferenceSpec,
    model: &ComparatorModel,
    i_c: f64,
) -> Result<f64> {
    let method = model.method();
    let a = sim::measured_cycle_gain(config, scheme, interference, &method, i_c)?;
    if (1.0 - a).abs() < 1e-12 {
        return Err(Error::Numerical("unit cycle gain: feedback gain diverges".into()));
    }
    let m = scheme.controlled_slope(config);
    Ok(m * a / (1.0 - a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interference::WaveformKind;
    use crate::sim::{InitState, Termination};

    fn unit() -> (ConverterConfig, ModulationScheme) {
        (
            ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap(),
            ModulationScheme::constant_off_time(1e-6, 0.0).unwrap(),
        )
    }

    #[test]
    fn stability_bound_values() {
        let (c, _) = unit();
        // zero interference: bound is B = 0
        assert_eq!(stability_bound(c.m1, &InterferenceSpec::zero()).unwrap(), 0.0);

        // m1 = 1 A/us, A = 0.05 A, omega = 62.832 rad/us:
        // 4 A^2/m1 = 0.01 A us, B = A/omega = 7.958e-4 A us
        let spec = InterferenceSpec::from_waveform(
            WaveformKind::sinusoid(0.05, 62.832e6, 0.0),
            62.832e6,
        )
        .unwrap();
        let b = stability_bound(1e6, &spec).unwrap();
        assert!((b - (0.01e-6 + 0.05 / 62.832e6)).abs() < 1e-12, "b = {b}");
        assert!((b - 0.0108e-6).abs() < 1e-10);

        // doubling A quadruples the first term and doubles B
        let spec2 = InterferenceSpec::from_waveform(
            WaveformKind::sinusoid(0.1, 62.832e6, 0.0),
            62.832e6,
        )
        .unwrap();
        let b2 = stability_bound(1e6, &spec2).unwrap();
        assert!((b2 - (0.04e-6 + 2.0 * 0.05 / 62.832e6)).abs() < 1e-12);
    }

    #[test]
    fn max_delay_values() {
        // A = 0, B = 0 reduces to the pure quadratic delay
        let zero = InterferenceSpec::zero();
        let q = 0.01e-6;
        let t = max_overdrive_delay(1e6, &zero, q).unwrap();
        assert!((t - (2.0 * q / 1e6).sqrt()).abs() < 1e-18);

        // m1 = 1 A/us, A = 0.05 A, Q + B = 0.0116 A us
        let spec = InterferenceSpec::class_bounds(0.05, 1e6, 1e6, 0.0016e-6).unwrap();
        let t = max_overdrive_delay(1e6, &spec, 0.01e-6).unwrap();
        let expect = 0.05e-6 + (0.05e-6f64 * 0.05e-6 + 2.0 * 0.0116e-6 / 1e6).sqrt();
        assert!((t - expect).abs() < 1e-15, "t = {t}");
        assert!((t - 0.21031e-6).abs() < 1e-10);

        // monotone in the budget
        let t2 = max_overdrive_delay(1e6, &spec, 0.02e-6).unwrap();
        assert!(t2 > t);
    }

    #[test]
    fn psi_range_values_and_limits() {
        let (psi_min, psi_max, pr) = psi_and_pole_range(1e6, 0.1, 2.0, 1.0).unwrap();
        assert!((psi_min / 1e6 + 0.18522).abs() < 1e-4, "psi_min {psi_min}");
        assert!((psi_max / 1e6 - 0.22733).abs() < 1e-4, "psi_max {psi_max}");
        assert!((pr.a_min + 0.22733).abs() < 1e-4);
        assert!((pr.a_max - 0.18522).abs() < 1e-4);

        // tau_hat -> infinity: gains and poles collapse to deadbeat
        let (lo, hi, pr) = psi_and_pole_range(1e6, 0.1, 2.0, 1e9).unwrap();
        assert!(lo.abs() < 1e-4 * 1e6 && hi.abs() < 1e-4 * 1e6);
        assert!(pr.a_min.abs() < 1e-4 && pr.a_max.abs() < 1e-4);

        // the boundary tau_hat = a_hat/omega_hat is rejected
        assert!(matches!(
            psi_and_pole_range(1e6, 0.1, 2.0, 0.05),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn transients_improve_and_delay_grows_with_tau() {
        // settling and overshoot shrink monotonically with the
        // comparator time constant; the delay bound pays for it
        let spec = InterferenceSpec::class_bounds(0.08, 2.0 * std::f64::consts::PI * 2e6, 1e6, 1e-8)
            .unwrap();
        let m = 1e6;
        let (a_hat, omega_hat) = (0.08, 2.0);
        let mut prev: Option<(f64, f64, f64)> = None;
        for k in 1..=30 {
            let tau_hat = 0.2 * k as f64;
            let (_, _, pr) = psi_and_pole_range(m, a_hat, omega_hat, tau_hat).unwrap();
            if !pr.is_stable() {
                continue;
            }
            let n = crate::metrics::settling_cycles(pr).unwrap();
            let o = crate::metrics::overshoot(pr);
            let budget = tau_hat * m * 1e-6 * 1e-6 / 2.0;
            let t_od = max_overdrive_delay(m, &spec, budget).unwrap();
            if let Some((pn, po, pt)) = prev {
                assert!(n <= pn + 1e-12, "settling grew: {pn} -> {n}");
                assert!(o <= po + 1e-12, "overshoot grew: {po} -> {o}");
                assert!(t_od >= pt, "delay shrank: {pt} -> {t_od}");
            }
            prev = Some((n, o, t_od));
        }
        assert!(prev.is_some());
    }

    #[test]
    fn region_boundaries_ordering() {
        let model = ComparatorModel::new(20e-9, 0.05, 0.0, 50e-9).unwrap();
        let (t_a, t_b, t_d) = model.region_boundaries(1e-6, 1e6, 0.08).unwrap();
        assert!(t_a <= t_b && t_b <= t_d);
        assert!((t_b - (1e-6 - 0.08 / 1e6)).abs() < 1e-18);
        assert!((t_d - (1e-6 + 0.08 / 1e6)).abs() < 1e-18);
        // blanking running past the upper-envelope crossing is rejected
        let late = ComparatorModel::new(20e-9, 0.05, 0.0, 950e-9).unwrap();
        assert!(late.region_boundaries(1e-6, 1e6, 0.08).is_err());
    }

    #[test]
    fn datasheet_fit_recovers_known_comparators() {
        // synthetic curves from the two fitted commercial parts
        for (p1, p2) in [(6.102e-9 * 1e-3, 4.198e-9), (113.3e-9 * 1e-3, 24.75e-9)] {
            let samples: Vec<(f64, f64)> = (1..=20)
                .map(|k| {
                    let v = 1e-3 * k as f64; // 1..20 mV overdrive
                    (v, p1 / v + p2)
                })
                .collect();
            let (f1, f2) = fit_datasheet_delay(&samples).unwrap();
            assert!(((f1 - p1) / p1).abs() < 1e-9, "p1 {f1} vs {p1}");
            assert!(((f2 - p2) / p2).abs() < 1e-9, "p2 {f2} vs {p2}");
        }

        // two points interpolate exactly
        let (p1, p2) = (5e-12, 3e-9);
        let two = [(1e-3, p1 / 1e-3 + p2), (4e-3, p1 / 4e-3 + p2)];
        let (f1, f2) = fit_datasheet_delay(&two).unwrap();
        assert!(((f1 - p1) / p1).abs() < 1e-12 && ((f2 - p2) / p2).abs() < 1e-12);

        // repeated overdrive values are rank-deficient
        assert!(fit_datasheet_delay(&[(1e-3, 1e-9), (1e-3, 2e-9)]).is_err());
    }

    #[test]
    fn envelope_bounds_contain_simulated_triggers() {
        // triggers under bounded interference stay within +/- A/m of the
        // interference-free trigger
        let (c, s) = unit();
        let a_ub = 0.08;
        let omega = 2.0 * std::f64::consts::PI * 2e6;
        let lam = 4.0 * a_ub * omega / std::f64::consts::PI;
        let model = ComparatorModel::new(20e-9, 0.05, 0.0, 0.0).unwrap();
        let i_c = 2.0;
        let start = 1.0;
        let zero = InterferenceSpec::zero();
        let ideal = overdrive_trigger_time(&c, &s, &zero, &model, start, i_c, 0).unwrap();
        let slack = a_ub / c.m1;
        for k in 0..100 {
            let phase = k as f64 * 2.0 * std::f64::consts::PI / 100.0;
            let kind = WaveformKind::trapezoid(a_ub, omega, lam, phase).unwrap();
            let spec = InterferenceSpec::from_waveform(kind, omega).unwrap();
            let t = overdrive_trigger_time(&c, &s, &spec, &model, start, i_c, 0).unwrap();
            assert!(
                t >= ideal - slack - 1e-12 && t <= ideal + slack + 1e-12,
                "phase {phase}: trigger {t} outside [{}, {}]",
                ideal - slack,
                ideal + slack
            );
        }
    }

    #[test]
    fn measured_gain_within_analytic_psi_bounds() {
        let (c, s) = unit();
        let t_base = 1e-6;
        let a_hat = 0.06;
        let omega_hat = 2.0;
        let v_trig = 0.05;
        let tau_hat = 0.8;
        let tau_b = c.m1 * t_base * t_base / (2.0 * v_trig / c.r_sense);
        let model = ComparatorModel::new(tau_hat * tau_b, v_trig, 0.0, 0.0).unwrap();
        let omega = omega_hat * 2.0 * std::f64::consts::PI / t_base;
        let a = a_hat * c.m1 * t_base;
        let (psi_min, psi_max, _) =
            psi_and_pole_range(c.m1, a_hat, omega_hat, tau_hat).unwrap();
        for phase in [0.0, 0.9, 2.2, 4.4] {
            let kind = WaveformKind::sinusoid(a, omega, phase);
            let spec = InterferenceSpec::from_waveform(kind, omega).unwrap();
            let psi = measured_feedback_gain(&c, &s, &spec, &model, 2.0).unwrap();
            assert!(
                psi >= psi_min - 1e-6 * c.m1 && psi <= psi_max + 1e-6 * c.m1,
                "phase {phase}: psi {psi} outside [{psi_min}, {psi_max}]"
            );
        }
    }

    #[test]
    fn size_for_speed_reports_and_infeasibility() {
        let (c, s) = unit();
        // zero interference: minimal budget, quadratic minimum on time
        let r = size_for_speed(&c, &s, &InterferenceSpec::zero(), 0.05, 0.0).unwrap();
        let q = r.v_trig * r.tau_c / c.r_sense;
        assert!((r.t_on_min - (2.0 * q / c.m1).sqrt()).abs() < 1e-15);
        assert!(r.gas_stable && r.continuous_certified.is_none());

        // a normalized Table-I-like instance freezes as golden
        let omega = 2.5 * 2.0 * std::f64::consts::PI / 1e-6;
        let kind = WaveformKind::sinusoid(0.1, omega, 0.0);
        let spec = InterferenceSpec::from_waveform(kind, omega).unwrap();
        let r = size_for_speed(&c, &s, &spec, 0.05, 0.0).unwrap();
        // budget = 4 A^2/m1 + A/omega (independently recomputed)
        let q_expect = 4.0 * 0.01 / 1e6 + 0.1 / omega;
        assert!((r.v_trig * r.tau_c / c.r_sense - q_expect).abs() < 1e-18);
        let t_od = 0.1 / 1e6 + (1e-14f64 + 2.0 * (q_expect + 0.1 / omega) / 1e6).sqrt();
        assert!((r.t_od_max - t_od).abs() < 1e-15);
        assert!((r.t_on_min - r.t_od_max).abs() == 0.0);
        // frozen after the independent spot-checks above
        assert!((r.t_on_min - 0.439801e-6).abs() < 1e-11, "t_on_min {}", r.t_on_min);
        // exactly at the stability boundary the (conservative)
        // small-signal psi range still pokes outside the unit circle
        assert!(!r.pole_range.is_stable());
        assert!((r.pole_range.a_min + 1.32922).abs() < 1e-4);
        assert!(r.n_w.is_infinite());

        // a doubled budget brings the small-signal range inside
        let r2 = size_for_speed(&c, &s, &spec, 0.05, 1.0).unwrap();
        assert!((r2.t_on_min - 0.556286e-6).abs() < 1e-11, "t_on_min {}", r2.t_on_min);
        assert!(r2.pole_range.is_stable());
        assert!((r2.pole_range.a_min + 0.67960).abs() < 1e-4);
        assert!((r2.pole_range.a_max - 0.40462).abs() < 1e-4);
        assert!((r2.o_w - 0.67960).abs() < 1e-4);

        // scaling the amplitude up makes the required floor exceed the
        // base period
        let big = WaveformKind::sinusoid(0.45, omega, 0.0);
        let spec = InterferenceSpec::from_waveform(big, omega).unwrap();
        assert!(matches!(
            size_for_speed(&c, &s, &spec, 0.05, 0.0),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn certified_budget_keeps_monte_carlo_stable() {
        // quick 64-draw version of the acceptance bound check
        let (c, s) = unit();
        let omega = 2.0 * std::f64::consts::PI * 2e6;
        let a_ub = 0.08;
        let lam = 4.0 * a_ub * omega / std::f64::consts::PI;
        let class = InterferenceSpec::from_waveform(
            WaveformKind::trapezoid(a_ub, omega, lam, 0.0).unwrap(),
            omega,
        )
        .unwrap();
        let budget = stability_bound(c.m1, &class).unwrap() * 1.05;
        let v_trig = 0.05;
        let model = ComparatorModel::new(budget * c.r_sense / v_trig, v_trig, 0.0, 0.0).unwrap();
        let method = model.method();
        for k in 0..64 {
            let phase = k as f64 * 2.0 * std::f64::consts::PI / 64.0;
            let kind = WaveformKind::trapezoid(a_ub, omega, lam, phase).unwrap();
            let spec = InterferenceSpec::from_waveform(kind, omega).unwrap();
            let cmds: Vec<f64> =
                std::iter::once(2.0).chain(std::iter::repeat(2.2).take(199)).collect();
            let tr = sim::run_cycles(&c, &s, &spec, &method, &cmds, 200, InitState::SteadyState)
                .unwrap();
            assert_eq!(tr.terminated_by, Termination::CycleBudget);
            let tail = sim::classify_tail(&tr, 8, 2.2);
            assert_eq!(tail, sim::TailBehavior::Converged, "phase {phase}: {tail:?}");
        }
    }
}
