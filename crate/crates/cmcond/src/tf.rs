//! Discrete transfer functions in z^-1 and the sampled-data plant
//! models used when an outer voltage loop is designed around the
//! current control loop.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{ConverterConfig, Modulation, ModulationScheme};

/// Rational transfer function in powers of z^-1, at most second order.
/// The denominator leading coefficient is fixed at 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteTF {
    /// Numerator coefficients `[b0, b1, ...]` of `b0 + b1 z^-1 + ...`.
    pub num: Vec<f64>,
    /// Denominator coefficients `[1, a1, ...]`.
    pub den: Vec<f64>,
    /// Sample period (s); one switching cycle.
    pub sample_period: f64,
}

impl DiscreteTF {
    pub fn new(num: Vec<f64>, den: Vec<f64>, sample_period: f64) -> Result<Self> {
        if den.is_empty() || (den[0] - 1.0).abs() > 1e-12 {
            return Err(Error::Numerical("denominator must lead with 1".into()));
        }
        if num.len() > 3 || den.len() > 3 {
            return Err(Error::Numerical("orders above 2 are not supported".into()));
        }
        if num.iter().chain(den.iter()).any(|c| !c.is_finite()) {
            return Err(Error::Numerical("non-finite coefficient".into()));
        }
        Ok(DiscreteTF { num, den, sample_period })
    }

    /// `beta (1 - b z^-1) / (1 - a z^-1)`.
    pub fn pole_zero(beta: f64, zero: f64, pole: f64, sample_period: f64) -> Result<Self> {
        Self::new(vec![beta, -beta * zero], vec![1.0, -pole], sample_period)
    }

    /// `beta / (1 - a z^-1)`.
    pub fn single_pole(beta: f64, pole: f64, sample_period: f64) -> Result<Self> {
        Self::new(vec![beta], vec![1.0, -pole], sample_period)
    }

    pub fn dc_gain(&self) -> f64 {
        self.num.iter().sum::<f64>() / self.den.iter().sum::<f64>()
    }

    /// Poles in z (roots of the denominator).
    pub fn poles(&self) -> Vec<f64> {
        match self.den.len() {
            0 | 1 => vec![],
            2 => vec![-self.den[1]],
            _ => {
                // z^2 + a1 z + a2 = 0
                let (a1, a2) = (self.den[1], self.den[2]);
                let disc = a1 * a1 - 4.0 * a2;
                if disc >= 0.0 {
                    let s = disc.sqrt();
                    vec![(-a1 + s) / 2.0, (-a1 - s) / 2.0]
                } else {
                    let mag = a2.sqrt();
                    vec![mag, mag] // magnitude of the complex pair
                }
            }
        }
    }

    /// Unit-step response by direct recursion of the difference
    /// equation.
    pub fn step_response(&self, n: usize) -> Vec<f64> {
        let mut y = vec![0.0; n];
        for k in 0..n {
            let mut acc = 0.0;
            for (i, &b) in self.num.iter().enumerate() {
                if k >= i {
                    acc += b; // step input: u[k-i] = 1 for k >= i
                }
            }
            for (i, &a) in self.den.iter().enumerate().skip(1) {
                if k >= i {
                    acc -= a * y[k - i];
                }
            }
            y[k] = acc;
        }
        y
    }
}

fn operating_on_time(config: &ConverterConfig, scheme: &ModulationScheme) -> f64 {
    match scheme.variant {
        Modulation::ConstantOnTime { t_on } => t_on,
        Modulation::ConstantOffTime { t_off } => config.m2 * t_off / config.m1,
        Modulation::FixedFrequency { t_s, .. } => config.duty() * t_s,
    }
}

/// Small-signal model of the current control loop when the output
/// capacitor voltage couples back into the inductor current ramp:
/// off-time response to a valley-command perturbation,
/// `g (1 - b1 z^-1 - b2 z^-2) / (1 - a1 z^-1)`.
///
/// `lambda_param` is the load/duty parameter carried over from the
/// companion sampled-data framework; it has no default here.
pub fn appendix_a_tf(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    lambda_param: f64,
) -> DiscreteTF {
    let t_on = operating_on_time(config, scheme);
    let m = config.m1 / config.m2;
    let tau1 = config.r_load * config.capacitance / t_on;
    let tau2 = (config.inductance / config.r_load) / t_on;
    let a1 = 1.0 - (1.0 + m) / tau1 - (1.0 + m) / 2.0 / (tau1 * tau2);
    let b1 = 2.0
        - (1.0 + m) / tau1
        - ((1.0 + m) * (1.0 + m) / 2.0 + (1.0 + m) * lambda_param) / (tau1 * tau2);
    let b2 = -1.0 + (1.0 + m) / tau1
        - ((1.0 + m) * (1.0 + m) / 2.0 - (1.0 + m) * lambda_param) / (tau1 * tau2);
    let g = config.inductance / config.v_out;
    DiscreteTF::new(
        vec![g, -g * b1, -g * b2],
        vec![1.0, -a1],
        scheme.switching_period(config),
    )
    .expect("coefficients are finite by construction")
}

/// Purely digital plant model of the converter around the current
/// control loop: output-voltage response to a valley-command
/// perturbation, `g (1 - b1 z^-1) z^-1 / (1 - a1 z^-1)`.
pub fn appendix_b_plant(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    lambda_param: f64,
) -> DiscreteTF {
    let t_on = operating_on_time(config, scheme);
    let m = config.m1 / config.m2;
    let tau1 = config.r_load * config.capacitance / t_on;
    let tau2 = (config.inductance / config.r_load) / t_on;
    let a1 = 1.0 - (1.0 + m) / tau1 - (1.0 + m) / 2.0 / (tau1 * tau2);
    let g = config.r_load * (lambda_param + m / 2.0) / tau1;
    let b1 = -(1.0 - lambda_param + m / 2.0) / (lambda_param + m / 2.0);
    DiscreteTF::new(
        vec![0.0, g, -g * b1],
        vec![1.0, -a1],
        scheme.switching_period(config),
    )
    .expect("coefficients are finite by construction")
}

/// Normalized parameters of a boost converter under fixed-frequency
/// peak current-mode control, for the sampled-data plant model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoostSampledParams {
    /// Slope ratio m1/m2.
    pub m_ratio: f64,
    /// R C / T_s.
    pub tau1_hat: f64,
    /// (L/R) / T_s.
    pub tau2_hat: f64,
    /// Load resistance (ohm).
    pub r_load: f64,
    /// Switching period (s).
    pub t_s: f64,
}

/// Sampled-data plant of the fixed-frequency peak-current boost:
/// output-voltage response to a peak-command perturbation,
/// `g (1 - b1 z^-1) z^-1 / (1 - a1 z^-1)`.
pub fn appendix_c_boost_tf(p: &BoostSampledParams) -> DiscreteTF {
    let m = p.m_ratio;
    let (t1, t2) = (p.tau1_hat, p.tau2_hat);
    let g = p.r_load * (-t2 / t1 + (2.0 * m + 1.0) / (2.0 * (m + 1.0) * (m + 1.0)) / t1);
    let a1 = 1.0
        - (2.0 * m + 1.0) / (m + 1.0) / t1
        - (2.0 * m + 1.0) / ((m + 1.0) * (m + 1.0) * (m + 1.0)) / (t1 * t2);
    let b1 = (2.0 * (m + 1.0) * (m + 1.0) * t2 + (2.0 * m * m + 4.0 * m + 1.0))
        / (2.0 * (m + 1.0) * (m + 1.0) * t2 + (2.0 * m + 1.0));
    DiscreteTF::new(vec![0.0, g, -g * b1], vec![1.0, -a1], p.t_s)
        .expect("coefficients are finite by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::ModulationScheme;

    fn table1() -> (ConverterConfig, ModulationScheme) {
        let c = ConverterConfig::buck(12.0, 2.0, 240e-9, 100e-6, 0.2, 0.01).unwrap();
        let s = ModulationScheme::constant_on_time(100e-9, 10e-9).unwrap();
        (c, s)
    }

    /// Closed-form unit-step response of `(n0+n1 z^-1+n2 z^-2)/(1-a z^-1)`
    /// via geometric partial sums; the independent oracle for the
    /// recursion in `step_response`.
    fn step_closed_form(n0: f64, n1: f64, n2: f64, a: f64, k: usize) -> f64 {
        let geo = |j: i64| -> f64 {
            // sum_{i=0..j} a^i
            if j < 0 {
                0.0
            } else if (a - 1.0).abs() < 1e-15 {
                (j + 1) as f64
            } else {
                (1.0 - a.powi(j as i32 + 1)) / (1.0 - a)
            }
        };
        n0 * geo(k as i64) + n1 * geo(k as i64 - 1) + n2 * geo(k as i64 - 2)
    }

    #[test]
    fn appendix_a_integrator_limit() {
        // M_r -> 0 and tau1 -> infinity push a1 to 1
        let c = ConverterConfig::buck(2.0 + 1e-7, 2.0, 1e-6, 1.0, 1e3, 0.01).unwrap();
        let s = ModulationScheme::constant_on_time(100e-9, 1e-9).unwrap();
        let tf = appendix_a_tf(&c, &s, 0.5);
        let a1 = -tf.den[1];
        assert!((a1 - 1.0).abs() < 1e-4, "a1 = {a1}");
    }

    #[test]
    fn appendix_a_table1_golden() {
        let (c, s) = table1();
        let tf = appendix_a_tf(&c, &s, 0.5);
        // double entry: M=5, tau1=200, tau2=12 evaluated independently
        let (m, t1, t2) = (5.0f64, 200.0f64, 12.0f64);
        let a1_alt = 1.0 - (1.0 + m) * (1.0 / t1) * (1.0 + 0.5 / t2);
        let b1_alt = 2.0 - 6.0 / 200.0 - (18.0 + 3.0) / 2400.0;
        let b2_alt = -1.0 + 6.0 / 200.0 - (18.0 - 3.0) / 2400.0;
        let g = 240e-9 / 2.0;
        assert!((-tf.den[1] - a1_alt).abs() < 1e-12);
        assert!((-tf.den[1] - 0.96875).abs() < 1e-12);
        assert!((tf.num[0] - g).abs() < 1e-18);
        assert!((tf.num[1] + g * b1_alt).abs() < 1e-12 * g);
        assert!((tf.num[1] + g * 1.96125).abs() < 1e-12 * g);
        assert!((tf.num[2] + g * b2_alt).abs() < 1e-12 * g);
        assert!((tf.num[2] + g * -0.97625).abs() < 1e-12 * g);
    }

    #[test]
    fn appendix_a_b1_b2_sum_is_lambda_free() {
        let (c, s) = table1();
        let sum_at = |lam: f64| {
            let tf = appendix_a_tf(&c, &s, lam);
            let g = tf.num[0];
            (-tf.num[1] / g) + (-tf.num[2] / g)
        };
        let s1 = sum_at(0.3);
        let s2 = sum_at(0.9);
        assert!((s1 - s2).abs() < 1e-12);
        // identity: b1 + b2 = 1 - (1+M)^2 / (tau1 tau2)
        assert!((s1 - (1.0 - 36.0 / 2400.0)).abs() < 1e-12);
    }

    #[test]
    fn appendix_b_direct_substitution() {
        // lambda = 1/2, M_r = 1 gives b1 = -(1 - 1/2 + 1/2)/(1/2 + 1/2) = -1
        let c = ConverterConfig::buck(4.0, 2.0, 1e-6, 100e-6, 1.0, 0.01).unwrap();
        assert!((c.m1 / c.m2 - 1.0).abs() < 1e-12);
        let s = ModulationScheme::constant_on_time(100e-9, 1e-9).unwrap();
        let tf = appendix_b_plant(&c, &s, 0.5);
        let g = tf.num[1];
        let b1 = -tf.num[2] / g;
        assert!((b1 + 1.0).abs() < 1e-12, "b1 = {b1}");
    }

    #[test]
    fn appendix_b_gain_positive_and_table1_golden() {
        for (vin, vout, l, cc, r) in [
            (12.0, 2.0, 240e-9, 100e-6, 0.2),
            (5.0, 3.0, 1e-6, 47e-6, 0.5),
            (24.0, 12.0, 4.7e-6, 22e-6, 2.0),
        ] {
            let c = ConverterConfig::buck(vin, vout, l, cc, r, 0.01).unwrap();
            let s = ModulationScheme::constant_on_time(100e-9, 1e-9).unwrap();
            for lam in [0.1, 0.5, 1.0] {
                assert!(appendix_b_plant(&c, &s, lam).num[1] > 0.0);
            }
        }
        let (c, s) = table1();
        let tf = appendix_b_plant(&c, &s, 0.5);
        // g = R (lambda + M/2) / tau1 = 0.2 * 3 / 200
        assert!((tf.num[1] - 0.003).abs() < 1e-15);
        assert!((-tf.den[1] - 0.96875).abs() < 1e-12);
        assert!((-tf.num[2] / tf.num[1] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn appendix_c_limits_and_golden() {
        // M_r -> infinity: a1 -> 1 - 2/tau1 to leading order
        let p = BoostSampledParams {
            m_ratio: 1e3,
            tau1_hat: 10.0,
            tau2_hat: 2.0,
            r_load: 1.0,
            t_s: 0.2e-6,
        };
        let a1 = -appendix_c_boost_tf(&p).den[1];
        assert!((a1 - (1.0 - 2.0 / 10.0)).abs() < 1e-3, "a1 = {a1}");

        // a1 < 1 across positive parameters
        for m in [0.1, 1.0, 5.0] {
            for t1 in [2.0, 10.0, 100.0] {
                for t2 in [0.5, 2.0, 8.0] {
                    let p = BoostSampledParams {
                        m_ratio: m,
                        tau1_hat: t1,
                        tau2_hat: t2,
                        r_load: 1.0,
                        t_s: 1e-6,
                    };
                    assert!(-appendix_c_boost_tf(&p).den[1] < 1.0);
                }
            }
        }

        // golden tuple, double entry at (M=1, tau1=10, tau2=2)
        let p = BoostSampledParams {
            m_ratio: 1.0,
            tau1_hat: 10.0,
            tau2_hat: 2.0,
            r_load: 1.0,
            t_s: 0.2e-6,
        };
        let tf = appendix_c_boost_tf(&p);
        let g_alt = (-2.0 + 3.0 / 8.0) / 10.0;
        let a1_alt = 1.0 - 0.15 - 3.0 / (8.0 * 20.0);
        let b1_alt = 23.0 / 19.0;
        assert!((tf.num[1] - g_alt).abs() < 1e-15);
        assert!((tf.num[1] - -0.1625).abs() < 1e-15);
        assert!((-tf.den[1] - a1_alt).abs() < 1e-15);
        assert!((-tf.den[1] - 0.83125).abs() < 1e-15);
        assert!((-tf.num[2] / tf.num[1] - b1_alt).abs() < 1e-12);
    }

    #[test]
    fn step_response_recursion_matches_closed_form() {
        let (c, s) = table1();
        let cases = [
            appendix_a_tf(&c, &s, 0.5),
            appendix_b_plant(&c, &s, 0.5),
            appendix_c_boost_tf(&BoostSampledParams {
                m_ratio: 1.0,
                tau1_hat: 10.0,
                tau2_hat: 2.0,
                r_load: 1.0,
                t_s: 0.2e-6,
            }),
        ];
        for tf in cases {
            let n0 = tf.num[0];
            let n1 = tf.num.get(1).copied().unwrap_or(0.0);
            let n2 = tf.num.get(2).copied().unwrap_or(0.0);
            let a = -tf.den[1];
            let resp = tf.step_response(64);
            let scale = resp.iter().fold(1e-30f64, |m, y| m.max(y.abs()));
            for (k, y) in resp.iter().enumerate() {
                let exact = step_closed_form(n0, n1, n2, a, k);
                assert!(
                    (y - exact).abs() <= 1e-9 * scale,
                    "k={k}: {y} vs {exact}"
                );
            }
        }
    }
}
