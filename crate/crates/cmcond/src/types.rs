//! Shared domain types: converter parameters, modulation schemes,
//! interference bounds, conditioning methods, and the normalization
//! conventions every analysis module consumes.
//!
//! All internal quantities are in SI base units and currents are in
//! amperes; the sense resistance converts to volts only at
//! comparator-facing boundaries (trigger-voltage budgets are divided by
//! `r_sense` before they meet current-domain formulas).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interference::InterferenceSpec;

/// Physical converter parameters with the derived ramp slopes.
///
/// `m1` is the on-time (rising) inductor-current slope and `m2` the
/// off-time (falling) slope, both strictly positive for a buck in CCM.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConverterConfig {
    /// Input voltage (V).
    pub v_in: f64,
    /// Output voltage (V).
    pub v_out: f64,
    /// Inductance (H).
    pub inductance: f64,
    /// Output capacitance (F).
    pub capacitance: f64,
    /// Load resistance (ohm).
    pub r_load: f64,
    /// Current-sense resistance (ohm).
    pub r_sense: f64,
    /// On-time current slope (A/s).
    pub m1: f64,
    /// Off-time current slope (A/s).
    pub m2: f64,
}

impl ConverterConfig {
    /// Builds a buck configuration, deriving `m1 = (v_in - v_out)/L` and
    /// `m2 = v_out/L`. Rejects non-positive inputs and `v_in <= v_out`,
    /// naming the offending field.
    pub fn buck(
        v_in: f64,
        v_out: f64,
        inductance: f64,
        capacitance: f64,
        r_load: f64,
        r_sense: f64,
    ) -> Result<Self> {
        for (name, value) in [
            ("v_in", v_in),
            ("v_out", v_out),
            ("inductance", inductance),
            ("capacitance", capacitance),
            ("r_load", r_load),
            ("r_sense", r_sense),
        ] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::validation(name, format!("must be positive, got {value}")));
            }
        }
        if v_in <= v_out {
            return Err(Error::validation(
                "v_in",
                format!("must exceed v_out ({v_in} V <= {v_out} V)"),
            ));
        }
        Ok(ConverterConfig {
            v_in,
            v_out,
            inductance,
            capacitance,
            r_load,
            r_sense,
            m1: (v_in - v_out) / inductance,
            m2: v_out / inductance,
        })
    }

    /// Builds a consistent buck configuration directly from the two ramp
    /// slopes. Handy for normalized studies where only `m1`, `m2`, and
    /// `r_sense` matter; the voltages and inductance are synthesized to
    /// satisfy the buck relations.
    pub fn from_slopes(m1: f64, m2: f64, r_sense: f64) -> Result<Self> {
        if !(m1 > 0.0) || !(m2 > 0.0) {
            return Err(Error::validation("m1", "slopes must be positive"));
        }
        let inductance = 1e-6;
        Self::buck(
            (m1 + m2) * inductance,
            m2 * inductance,
            inductance,
            100e-6,
            1.0,
            r_sense,
        )
    }

    /// Steady-state duty ratio implied by the buck voltages.
    pub fn duty(&self) -> f64 {
        self.v_out / self.v_in
    }
}

/// Which inductor-current extremum the comparator regulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Extremum {
    Peak,
    Valley,
}

/// Modulation variant. Constant off-time regulates the peak (the on
/// interval is controlled); constant on-time regulates the valley (the
/// off interval is controlled); fixed frequency can do either.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum Modulation {
    ConstantOnTime { t_on: f64 },
    ConstantOffTime { t_off: f64 },
    FixedFrequency { t_s: f64, extremum: Extremum },
}

/// Modulation scheme plus the floor on the controllable interval.
///
/// `t_on_min` bounds the controlled interval: the on time for
/// peak-regulating schemes and, mirrored, the off time for constant
/// on-time (valley) control.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModulationScheme {
    pub variant: Modulation,
    pub t_on_min: f64,
}

impl ModulationScheme {
    pub fn new(variant: Modulation, t_on_min: f64) -> Result<Self> {
        if !(t_on_min >= 0.0) {
            return Err(Error::validation("t_on_min", "must be non-negative"));
        }
        match variant {
            Modulation::ConstantOnTime { t_on } => {
                if !(t_on > 0.0) {
                    return Err(Error::validation("t_on", "must be positive"));
                }
                if t_on_min >= t_on {
                    return Err(Error::validation("t_on_min", "must be below t_on"));
                }
            }
            Modulation::ConstantOffTime { t_off } => {
                if !(t_off > 0.0) {
                    return Err(Error::validation("t_off", "must be positive"));
                }
            }
            Modulation::FixedFrequency { t_s, .. } => {
                if !(t_s > 0.0) {
                    return Err(Error::validation("t_s", "must be positive"));
                }
                if t_on_min >= t_s * MAX_DUTY {
                    return Err(Error::validation(
                        "t_on_min",
                        "must be below the duty-saturated on time",
                    ));
                }
            }
        }
        Ok(ModulationScheme { variant, t_on_min })
    }

    pub fn constant_off_time(t_off: f64, t_on_min: f64) -> Result<Self> {
        Self::new(Modulation::ConstantOffTime { t_off }, t_on_min)
    }

    pub fn constant_on_time(t_on: f64, t_on_min: f64) -> Result<Self> {
        Self::new(Modulation::ConstantOnTime { t_on }, t_on_min)
    }

    pub fn fixed_frequency(t_s: f64, extremum: Extremum, t_on_min: f64) -> Result<Self> {
        Self::new(Modulation::FixedFrequency { t_s, extremum }, t_on_min)
    }

    /// Extremum this scheme regulates.
    pub fn extremum(&self) -> Extremum {
        match self.variant {
            Modulation::ConstantOffTime { .. } => Extremum::Peak,
            Modulation::ConstantOnTime { .. } => Extremum::Valley,
            Modulation::FixedFrequency { extremum, .. } => extremum,
        }
    }

    /// Ramp slope of the controlled interval: `m1` when the on time is
    /// controlled, `m2` when the off time is.
    pub fn controlled_slope(&self, config: &ConverterConfig) -> f64 {
        match self.extremum() {
            Extremum::Peak => config.m1,
            Extremum::Valley => config.m2,
        }
    }

    /// Steady-state duration of the controlled interval, from
    /// volt-second (ripple) balance. This is the base period of every
    /// normalized quantity.
    pub fn base_period(&self, config: &ConverterConfig) -> f64 {
        match self.variant {
            Modulation::ConstantOffTime { t_off } => config.m2 * t_off / config.m1,
            Modulation::ConstantOnTime { t_on } => config.m1 * t_on / config.m2,
            Modulation::FixedFrequency { t_s, extremum } => match extremum {
                Extremum::Peak => config.duty() * t_s,
                Extremum::Valley => (1.0 - config.duty()) * t_s,
            },
        }
    }

    /// Steady-state switching period.
    pub fn switching_period(&self, config: &ConverterConfig) -> f64 {
        match self.variant {
            Modulation::ConstantOffTime { t_off } => t_off + self.base_period(config),
            Modulation::ConstantOnTime { t_on } => t_on + self.base_period(config),
            Modulation::FixedFrequency { t_s, .. } => t_s,
        }
    }
}

/// Duty-ratio ceiling enforced by the fixed-frequency modulator.
pub const MAX_DUTY: f64 = 0.95;

/// Conditioning method applied to the current control loop.
///
/// `SlopeComp { m_s: 0 }` is the unconditioned loop. The overdrive
/// variant models the comparator as a saturating integrator with time
/// constant `tau_c = C_eff/G`, trigger threshold `v_trig`, and an
/// input-independent delay `t_d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum ConditioningMethod {
    SlopeComp {
        /// Compensation slope (A/s), non-negative. Applied in the
        /// stabilizing direction of the scheme at hand.
        m_s: f64,
    },
    LowPassFilter {
        /// First-order filter time constant (s).
        tau: f64,
    },
    OverdriveDelay {
        /// Comparator time constant C_eff/G (s).
        tau_c: f64,
        /// Trigger threshold of the integrating stage (V).
        v_trig: f64,
        /// Input-independent propagation delay (s).
        t_d: f64,
    },
}

impl ConditioningMethod {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ConditioningMethod::SlopeComp { m_s } => {
                if !(m_s >= 0.0) {
                    return Err(Error::validation("m_s", "must be non-negative"));
                }
            }
            ConditioningMethod::LowPassFilter { tau } => {
                if !(tau > 0.0) {
                    return Err(Error::validation("tau", "must be positive"));
                }
            }
            ConditioningMethod::OverdriveDelay { tau_c, v_trig, t_d } => {
                if !(tau_c > 0.0) {
                    return Err(Error::validation("tau_c", "must be positive"));
                }
                if !(v_trig > 0.0) {
                    return Err(Error::validation("v_trig", "must be positive"));
                }
                if !(t_d >= 0.0) {
                    return Err(Error::validation("t_d", "must be non-negative"));
                }
            }
        }
        Ok(())
    }

    /// Sense-referred charge budget `v_trig * tau_c / r_sense` (A·s) for
    /// the overdrive variant: the saturating integral of the current
    /// error must reach this value to fire the comparator.
    pub fn overdrive_budget(&self, r_sense: f64) -> Option<f64> {
        match *self {
            ConditioningMethod::OverdriveDelay { tau_c, v_trig, .. } => {
                Some(v_trig * tau_c / r_sense)
            }
            _ => None,
        }
    }
}

/// Dimensionless design quantities. Entries that do not apply to the
/// method at hand are `None`; zero is a meaningful value everywhere, so
/// absence is explicit.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct NormalizedQuantities {
    /// Compensation slope over the controlled-interval ramp slope.
    pub m_s_hat: Option<f64>,
    /// Interference Lipschitz bound over the ramp slope.
    pub lambda_hat: Option<f64>,
    /// Filter: tau over the base period. Overdrive: tau_c over
    /// `tau_b = m T_base^2 / (2 v_trig / r_sense)`.
    pub tau_hat: Option<f64>,
    /// Interference amplitude over (ramp slope x base period).
    pub a_hat: Option<f64>,
    /// Interference frequency bound over the base rate: `omega_l T / (2 pi)`.
    pub omega_hat: Option<f64>,
    /// Minimum controllable interval over the base period.
    pub t_on_min_hat: Option<f64>,
}

/// Populates the normalized quantities for a (config, scheme,
/// interference, method) tuple. The scheme supplies the base slope and
/// base period; valley-regulating schemes substitute `m2` for `m1` and
/// the off time for the on time throughout.
pub fn normalize(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    interference: &InterferenceSpec,
    method: &ConditioningMethod,
) -> NormalizedQuantities {
    let m = scheme.controlled_slope(config);
    let t_base = scheme.base_period(config);
    let mut out = NormalizedQuantities {
        lambda_hat: Some(interference.lambda_ub / m),
        a_hat: Some(interference.a_ub / (m * t_base)),
        omega_hat: Some(interference.omega_l * t_base / (2.0 * std::f64::consts::PI)),
        t_on_min_hat: Some(scheme.t_on_min / t_base),
        ..Default::default()
    };
    match *method {
        ConditioningMethod::SlopeComp { m_s } => {
            out.m_s_hat = Some(m_s / m);
        }
        ConditioningMethod::LowPassFilter { tau } => {
            out.tau_hat = Some(tau / t_base);
        }
        ConditioningMethod::OverdriveDelay { tau_c, v_trig, .. } => {
            let tau_b = m * t_base * t_base / (2.0 * v_trig / config.r_sense);
            out.tau_hat = Some(tau_c / tau_b);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interference::{InterferenceSpec, WaveformKind};

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(a.abs()).max(1e-300)
    }

    #[test]
    fn table1_slopes() {
        // 12 V / 2 V / 240 nH / 100 uF / 0.2 ohm / 10 mohm
        let c = ConverterConfig::buck(12.0, 2.0, 240e-9, 100e-6, 0.2, 0.01).unwrap();
        // independent arithmetic: (12-2)/240e-9 and 2/240e-9
        assert!(close(c.m1, 41.6667e6, 1e-3), "m1 = {}", c.m1);
        assert!(close(c.m2, 8.3333e6, 1e-3), "m2 = {}", c.m2);
    }

    #[test]
    fn buck_rejects_inverted_voltages() {
        let err = ConverterConfig::buck(2.0, 2.0, 1e-6, 100e-6, 1.0, 0.01).unwrap_err();
        match err {
            Error::Validation { field, .. } => assert_eq!(field, "v_in"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn buck_symmetric_case() {
        let c = ConverterConfig::buck(12.0, 6.0, 1e-6, 100e-6, 1.0, 0.01).unwrap();
        assert!(close(c.m1, 6e6, 1e-12));
        assert!(close(c.m2, 6e6, 1e-12));
    }

    #[test]
    fn buck_names_offending_field() {
        let err = ConverterConfig::buck(12.0, 2.0, -1.0, 100e-6, 1.0, 0.01).unwrap_err();
        assert!(err.to_string().contains("inductance"));
    }

    #[test]
    fn normalize_ratio_definitions() {
        let c = ConverterConfig::buck(12.0, 2.0, 240e-9, 100e-6, 0.2, 0.01).unwrap();
        // constant on-time: controlled slope is m2, base period is the
        // steady off time m1*t_on/m2
        let scheme = ModulationScheme::constant_on_time(100e-9, 10e-9).unwrap();
        assert!(close(scheme.base_period(&c), 500e-9, 1e-9));

        // peak-side numbers from a constant off-time scheme sized so the
        // steady on time is 100 ns
        let scheme = ModulationScheme::constant_off_time(500e-9, 10e-9).unwrap();
        let t_base = scheme.base_period(&c);
        assert!(close(t_base, 100e-9, 1e-9));

        let spec = InterferenceSpec::from_waveform(
            WaveformKind::sinusoid(0.4167, 2.0 * std::f64::consts::PI * 10e6, 0.0),
            2.0 * std::f64::consts::PI * 10e6,
        )
        .unwrap();
        let nq = normalize(&c, &scheme, &spec, &ConditioningMethod::SlopeComp { m_s: c.m1 / 2.0 });
        assert!(close(nq.m_s_hat.unwrap(), 0.5, 1e-12));
        assert!(close(nq.a_hat.unwrap(), 0.1, 1e-3));
        assert!(close(nq.omega_hat.unwrap(), 1.0, 1e-9));
        assert!(nq.tau_hat.is_none());

        let nq = normalize(&c, &scheme, &spec, &ConditioningMethod::LowPassFilter { tau: 50e-9 });
        assert!(close(nq.tau_hat.unwrap(), 0.5, 1e-9));
        assert!(nq.m_s_hat.is_none());
    }

    #[test]
    fn overdrive_tau_hat_uses_sense_referred_threshold() {
        let c = ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap();
        let scheme = ModulationScheme::constant_off_time(1e-6, 0.0).unwrap();
        let t_base = scheme.base_period(&c);
        assert!(close(t_base, 1e-6, 1e-12));
        let spec = InterferenceSpec::class_bounds(0.1, 2.0e6, 1e5, 0.0).unwrap();
        let method = ConditioningMethod::OverdriveDelay {
            tau_c: 10e-9,
            v_trig: 0.05,
            t_d: 0.0,
        };
        let nq = normalize(&c, &scheme, &spec, &method);
        // tau_b = m1 T^2 / (2 v_trig/r_sense) = 1e6 * 1e-12 / (2*5) = 1e-7
        assert!(close(nq.tau_hat.unwrap(), 10e-9 / 1e-7, 1e-12));
    }

    #[test]
    fn normalization_is_scale_invariant() {
        let base = ConverterConfig::from_slopes(2e6, 1e6, 0.01).unwrap();
        let scaled = ConverterConfig::from_slopes(2e6 * 3.0, 1e6 * 3.0, 0.01).unwrap();
        let scheme = ModulationScheme::constant_off_time(1e-6, 1e-8).unwrap();
        let mk = |k: f64| {
            InterferenceSpec::from_waveform(
                WaveformKind::sinusoid(0.05 * k, 4.0e6, 0.3),
                4.0e6,
            )
            .unwrap()
        };
        let m = |k: f64| ConditioningMethod::SlopeComp { m_s: 0.5e6 * k };
        let a = normalize(&base, &scheme, &mk(1.0), &m(1.0));
        let b = normalize(&scaled, &scheme, &mk(3.0), &m(3.0));
        for (x, y) in [
            (a.m_s_hat, b.m_s_hat),
            (a.lambda_hat, b.lambda_hat),
            (a.a_hat, b.a_hat),
            (a.omega_hat, b.omega_hat),
        ] {
            let (x, y) = (x.unwrap(), y.unwrap());
            assert!(close(x, y, 1e-12), "{x} vs {y}");
        }
    }
}
