//! Slope-compensation design: continuity and stability certificates,
//! closed-loop pole ranges, the optimal slope, and worst-case transient
//! predictions.
//!
//! All quantities here live on the controlled-interval ramp: for valley
//! control substitute the off-time slope for `m1` throughout (the
//! normalized forms are identical).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interference::InterferenceSpec;
use crate::metrics::{overshoot, settling_cycles, PoleRange};
use crate::tf::DiscreteTF;
use crate::types::{ConverterConfig, Modulation, ModulationScheme};

/// Certificate that the compensated sensor ramp is strictly increasing,
/// hence the static mapping continuous: `m1 + m_s > lambda_ub`.
pub fn continuity_check(m1: f64, m_s: f64, interference: &InterferenceSpec) -> bool {
    m1 + m_s > interference.lipschitz_bound()
}

/// Global asymptotic stability of the compensated loop:
/// `lambda_ub < m1/2 + m_s`, strict. Requires the continuity
/// certificate first; stability is meaningless on a discontinuous map.
pub fn stability_check(m1: f64, m_s: f64, interference: &InterferenceSpec) -> Result<bool> {
    if !continuity_check(m1, m_s, interference) {
        return Err(Error::TheoremScope(
            "stability requires the continuity certificate m1 + m_s > lambda_ub".into(),
        ));
    }
    Ok(interference.lipschitz_bound() < m1 / 2.0 + m_s)
}

/// Closed-loop pole interval under slope compensation:
/// `a_min = (m_s - L)/(m1 + m_s - L)`, `a_max = (m_s + L)/(m1 + m_s + L)`.
pub fn pole_range(m1: f64, m_s: f64, lambda_ub: f64) -> Result<PoleRange> {
    let den_min = m1 + m_s - lambda_ub;
    let den_max = m1 + m_s + lambda_ub;
    if den_min <= 0.0 || den_max <= 0.0 {
        return Err(Error::Numerical(format!(
            "degenerate pole denominator: m1 + m_s - lambda = {den_min}"
        )));
    }
    PoleRange::new((m_s - lambda_ub) / den_min, (m_s + lambda_ub) / den_max)
}

/// Normalized slope minimizing the worst-case settling, from the
/// balance `a_min = -a_max`: `sqrt(1/4 + lambda_hat^2) - 1/2`.
pub fn optimal_slope(lambda_hat: f64) -> f64 {
    (0.25 + lambda_hat * lambda_hat).sqrt() - 0.5
}

/// Minimum worst-case settling as printed in the source analysis:
/// `|4 / ln|1 - (1 + sqrt(1/4 + L^2) + L)^{-1}||`. Reported alongside
/// the value composed from `optimal_slope` + `pole_range` +
/// `settling_cycles`; the two disagree and the composed value is
/// primary.
pub fn optimal_settling_printed(lambda_hat: f64) -> f64 {
    let root = (0.25 + lambda_hat * lambda_hat).sqrt();
    (4.0 / (1.0 - 1.0 / (1.0 + root + lambda_hat)).abs().ln()).abs()
}

/// Worst-case settling at the optimal slope, composed from the pole
/// range. Primary value for design reports.
pub fn optimal_settling_composed(lambda_hat: f64) -> Result<f64> {
    let ms = optimal_slope(lambda_hat);
    settling_cycles(pole_range(1.0, ms, lambda_hat)?)
}

/// Current-loop plant seen by the feedback nonlinearity, per
/// modulation scheme.
pub fn plant_tf(config: &ConverterConfig, scheme: &ModulationScheme) -> DiscreteTF {
    let period = scheme.switching_period(config);
    match scheme.variant {
        Modulation::ConstantOffTime { .. } => {
            // (1 - z^-1)/m1
            DiscreteTF::new(vec![1.0 / config.m1, -1.0 / config.m1], vec![1.0], period)
        }
        Modulation::ConstantOnTime { .. } => {
            // (z^-1 - 1)/m2
            DiscreteTF::new(vec![-1.0 / config.m2, 1.0 / config.m2], vec![1.0], period)
        }
        Modulation::FixedFrequency { .. } => {
            // (1 - z^-1)/(m1 + m2 z^-1), denominator normalized
            DiscreteTF::new(
                vec![1.0 / config.m1, -1.0 / config.m1],
                vec![1.0, config.m2 / config.m1],
                period,
            )
        }
    }
    .expect("plant coefficients are finite")
}

/// Analytical design summary for one compensation slope.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlopeDesignReport {
    /// Compensation slope (A/s).
    pub m_s: f64,
    pub continuous: bool,
    pub gas_stable: bool,
    /// Pole interval; absent when the continuity certificate fails.
    pub pole_range: Option<PoleRange>,
    /// Worst-case settling (cycles) over the pole interval.
    pub n_w: Option<f64>,
    /// Worst-case overshoot fraction.
    pub o_w: Option<f64>,
    /// Optimal slope (A/s) for this interference level.
    pub m_s_star: f64,
    /// Worst-case settling at the optimal slope (composed value).
    pub n_w_star: f64,
    /// The same settling as printed in the source analysis, for
    /// side-by-side comparison.
    pub n_w_star_printed: f64,
}

/// Evaluates the full slope-design report at one slope value. `m`
/// is the controlled-interval ramp slope.
pub fn design_report(m: f64, m_s: f64, interference: &InterferenceSpec) -> Result<SlopeDesignReport> {
    if !(m_s >= 0.0) {
        return Err(Error::validation("m_s", "must be non-negative"));
    }
    let lambda = interference.lipschitz_bound();
    let continuous = continuity_check(m, m_s, interference);
    let gas_stable = continuous && lambda < m / 2.0 + m_s;
    let (pr, n_w, o_w) = if continuous {
        let pr = pole_range(m, m_s, lambda)?;
        let n_w = if pr.is_stable() { Some(settling_cycles(pr)?) } else { None };
        (Some(pr), n_w, Some(overshoot(pr)))
    } else {
        (None, None, None)
    };
    let lambda_hat = lambda / m;
    Ok(SlopeDesignReport {
        m_s,
        continuous,
        gas_stable,
        pole_range: pr,
        n_w,
        o_w,
        m_s_star: optimal_slope(lambda_hat) * m,
        n_w_star: optimal_settling_composed(lambda_hat)?,
        n_w_star_printed: optimal_settling_printed(lambda_hat),
    })
}

/// One row of the slope design diagram.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlopeSweepRow {
    pub m_s_hat: f64,
    pub n_w: f64,
    pub o_w: f64,
    pub gas_stable: bool,
}

/// Sweeps the normalized slope and tabulates worst-case settling and
/// overshoot for the design diagram. Grid points without the
/// continuity certificate report infinite metrics.
pub fn design_sweep(lambda_hat: f64, m_s_hat_grid: &[f64]) -> Result<Vec<SlopeSweepRow>> {
    m_s_hat_grid
        .iter()
        .map(|&ms| {
            let row = match pole_range(1.0, ms, lambda_hat) {
                Ok(pr) => SlopeSweepRow {
                    m_s_hat: ms,
                    n_w: if pr.is_stable() { settling_cycles(pr)? } else { f64::INFINITY },
                    o_w: overshoot(pr),
                    gas_stable: lambda_hat < 0.5 + ms,
                },
                Err(_) => SlopeSweepRow {
                    m_s_hat: ms,
                    n_w: f64::INFINITY,
                    o_w: f64::INFINITY,
                    gas_stable: false,
                },
            };
            Ok(row)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interference::WaveformKind;

    fn spec_with_lambda(lambda: f64) -> InterferenceSpec {
        InterferenceSpec::class_bounds(0.1, 1e6, lambda, 0.0).unwrap()
    }

    #[test]
    fn continuity_threshold() {
        assert!(continuity_check(1.0, 0.0, &spec_with_lambda(0.5)));
        assert!(!continuity_check(1.0, 0.0, &spec_with_lambda(1.5)));
        assert!(continuity_check(1.0, 1.0, &spec_with_lambda(1.5)));
    }

    #[test]
    fn stability_threshold_strict() {
        let m1 = 2e6;
        assert!(stability_check(m1, 1e6, &spec_with_lambda(1.9e6)).unwrap());
        assert!(!stability_check(m1, 1e6, &spec_with_lambda(2.1e6)).unwrap());
        // boundary equality is rejected
        assert!(!stability_check(m1, 1e6, &spec_with_lambda(2.0e6)).unwrap());
        // baseline m1/2 with no added slope
        assert!(stability_check(m1, 0.0, &spec_with_lambda(0.99e6)).unwrap());
        // stability claim without continuity is an error
        assert!(stability_check(1e6, 0.0, &spec_with_lambda(1.5e6)).is_err());
    }

    #[test]
    fn pole_range_values() {
        // normalized: m_s_hat = 0.5, lambda_hat = 0.25
        let pr = pole_range(1.0, 0.5, 0.25).unwrap();
        assert!((pr.a_min - 0.2).abs() < 1e-12);
        assert!((pr.a_max - 0.75 / 1.75).abs() < 1e-12);

        // interference-free point pole
        let pr = pole_range(1.0, 0.5, 0.0).unwrap();
        assert!((pr.a_min - pr.a_max).abs() < 1e-15);
        assert!((pr.a_min - 0.5 / 1.5).abs() < 1e-12);

        // uncompensated
        let pr = pole_range(1.0, 0.0, 0.25).unwrap();
        assert!((pr.a_min + 1.0 / 3.0).abs() < 1e-12);
        assert!((pr.a_max - 0.2).abs() < 1e-12);

        assert!(pole_range(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn optimal_slope_balances_the_pole_interval() {
        for lam in [0.0, 0.05, 0.15, 0.3, 0.75] {
            let ms = optimal_slope(lam);
            if lam == 0.0 {
                assert_eq!(ms, 0.0);
                continue;
            }
            let pr = pole_range(1.0, ms, lam).unwrap();
            assert!(
                (pr.a_min + pr.a_max).abs() < 1e-12,
                "lambda {lam}: a_min {} a_max {}",
                pr.a_min,
                pr.a_max
            );
        }
        assert!((optimal_slope(0.75) - 0.4013878).abs() < 1e-6);
        assert!((optimal_slope(0.15) - 0.0220153).abs() < 1e-6);
    }

    #[test]
    fn optimal_slope_matches_golden_section_oracle() {
        // independent oracle: golden-section minimization of the
        // composed worst-case settling over m_s_hat
        for lam in [0.05, 0.15, 0.3, 0.75] {
            let f = |ms: f64| {
                let pr = pole_range(1.0, ms, lam).unwrap();
                settling_cycles(pr).unwrap()
            };
            let (mut lo, mut hi) = (0.0f64, 2.0f64);
            let phi = (5.0f64.sqrt() - 1.0) / 2.0;
            for _ in 0..200 {
                let m1 = hi - phi * (hi - lo);
                let m2 = lo + phi * (hi - lo);
                if f(m1) < f(m2) {
                    hi = m2;
                } else {
                    lo = m1;
                }
            }
            let oracle = 0.5 * (lo + hi);
            assert!(
                (optimal_slope(lam) - oracle).abs() < 1e-6,
                "lambda {lam}: formula {} vs oracle {oracle}",
                optimal_slope(lam)
            );
        }
    }

    #[test]
    fn printed_and_composed_settling_disagree_as_documented() {
        // at lambda = 0 the composed settling is deadbeat-zero while
        // the printed formula gives about 3.64
        assert_eq!(optimal_settling_composed(0.0).unwrap(), 0.0);
        assert!((optimal_settling_printed(0.0) - 3.6409).abs() < 1e-3);
        // at lambda = 0.75: composed about 6.40, printed about 8.45
        assert!((optimal_settling_composed(0.75).unwrap() - 6.397).abs() < 0.01);
        assert!((optimal_settling_printed(0.75) - 8.448).abs() < 0.01);
    }

    #[test]
    fn sweep_overshoot_monotone_and_settling_convex() {
        for lam in [0.05, 0.15, 0.3, 0.75] {
            let grid: Vec<f64> = (0..200).map(|k| k as f64 * 0.01).collect();
            let rows = design_sweep(lam, &grid).unwrap();
            // overshoot never increases with the slope
            for w in rows.windows(2) {
                assert!(w[1].o_w <= w[0].o_w + 1e-12);
            }
            // settling dips then rises; argmin within one grid step of
            // the formula
            let argmin = rows
                .iter()
                .enumerate()
                .min_by(|a, b| a.1.n_w.total_cmp(&b.1.n_w))
                .unwrap()
                .0;
            let ms_star = optimal_slope(lam);
            assert!(
                (grid[argmin] - ms_star).abs() <= 0.01 + 1e-12,
                "lambda {lam}: grid argmin {} vs {ms_star}",
                grid[argmin]
            );
        }
    }

    #[test]
    fn plant_tf_variants() {
        let c = ConverterConfig::from_slopes(2e6, 4e6, 0.01).unwrap();
        let off = ModulationScheme::constant_off_time(1e-6, 0.0).unwrap();
        let tf = plant_tf(&c, &off);
        // zero at z = 1, gain 1/m1
        assert!((tf.num[0] - 0.5e-6).abs() < 1e-18);
        assert!((tf.num[0] + tf.num[1]).abs() < 1e-18);
        assert!(tf.den.len() == 1);

        let on = ModulationScheme::constant_on_time(1e-6, 0.0).unwrap();
        let tf = plant_tf(&c, &on);
        // gain -1/m2, zero at z = 1
        assert!((tf.num[0] + 0.25e-6).abs() < 1e-18);
        assert!((tf.num[0] + tf.num[1]).abs() < 1e-18);

        let c_eq = ConverterConfig::from_slopes(3e6, 3e6, 0.01).unwrap();
        let ff = ModulationScheme::fixed_frequency(1e-6, crate::types::Extremum::Peak, 1e-9).unwrap();
        let tf = plant_tf(&c_eq, &ff);
        // m1 = m2 puts the plant pole at z = -1
        assert!((tf.poles()[0] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn design_report_consistency() {
        let spec = InterferenceSpec::from_waveform(
            WaveformKind::sinusoid(0.05, 6e6, 0.0),
            6e6,
        )
        .unwrap();
        // lambda = 0.3e6 on m = 1e6
        let r = design_report(1e6, 0.2e6, &spec).unwrap();
        assert!(r.continuous);
        assert!(r.gas_stable);
        assert!(r.pole_range.unwrap().is_stable());
        assert!(r.gas_stable <= r.continuous);
        // a not-continuous case has no pole data
        let hot = InterferenceSpec::class_bounds(0.5, 1e6, 5e6, 0.0).unwrap();
        let r = design_report(1e6, 0.0, &hot).unwrap();
        assert!(!r.continuous && !r.gas_stable && r.pole_range.is_none());
    }
}
