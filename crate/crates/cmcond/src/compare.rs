//! Method comparison: overshoot-settling tradeoff clouds for the three
//! conditioning methods over a shared interference class, and Pareto
//! bookkeeping to rank them.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::filter;
use crate::interference::{InterferenceSpec, WaveformKind};
use crate::metrics::{overshoot, settling_cycles};
use crate::overdrive;
use crate::slope;
use crate::types::{ConverterConfig, ModulationScheme};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Slope,
    Filter,
    Overdrive,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Slope => "slope",
            Method::Filter => "filter",
            Method::Overdrive => "overdrive",
        }
    }
}

/// One point of the tradeoff cloud: the method's design parameter
/// (normalized) and its worst-case transient metrics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TradeoffPoint {
    pub method: Method,
    pub parameter: f64,
    pub n_w: f64,
    pub o_w: f64,
}

/// Parameter grids per method, all normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct TradeoffGrids {
    pub m_s_hat: Vec<f64>,
    pub filter_tau_hat: Vec<f64>,
    pub comparator_tau_hat: Vec<f64>,
    /// Interference phases the filter theory is worst-cased over.
    pub phases: usize,
}

impl Default for TradeoffGrids {
    fn default() -> Self {
        TradeoffGrids {
            m_s_hat: (0..=40).map(|k| k as f64 * 0.05).collect(),
            filter_tau_hat: (1..=60).map(|k| k as f64 * 0.05).collect(),
            comparator_tau_hat: (1..=30).map(|k| k as f64 * 0.2).collect(),
            phases: 8,
        }
    }
}

/// Builds the tradeoff cloud at a normalized interference class
/// `(a_hat, omega_hat)` on the canonical constant off-time loop.
/// Sinusoid-class worst case: the slope method sees the Lipschitz
/// bound `2 pi omega_hat a_hat`.
pub fn tradeoff_cloud(
    a_hat: f64,
    omega_hat: f64,
    i_c_hat: f64,
    grids: &TradeoffGrids,
) -> Result<Vec<TradeoffPoint>> {
    let mut out = Vec::new();
    let lambda_hat = 2.0 * std::f64::consts::PI * omega_hat * a_hat;

    for &ms in &grids.m_s_hat {
        if let Ok(pr) = slope::pole_range(1.0, ms, lambda_hat) {
            if pr.is_stable() {
                out.push(TradeoffPoint {
                    method: Method::Slope,
                    parameter: ms,
                    n_w: settling_cycles(pr)?,
                    o_w: overshoot(pr),
                });
            }
        }
    }

    for &th in &grids.comparator_tau_hat {
        if let Ok((_, _, pr)) = overdrive::psi_and_pole_range(1.0, a_hat, omega_hat, th) {
            if pr.is_stable() {
                out.push(TradeoffPoint {
                    method: Method::Overdrive,
                    parameter: th,
                    n_w: settling_cycles(pr)?,
                    o_w: overshoot(pr),
                });
            }
        }
    }

    // the filter theory needs a concrete loop: unit slopes, 1 us off
    // time, command at i_c_hat ripple units. The class worst case is
    // the trapezoid at the band edge slewing at the class bound; its
    // line spectrum drives psi1.
    let config = ConverterConfig::from_slopes(1e6, 1e6, 0.01)?;
    let scheme = ModulationScheme::constant_off_time(1e-6, 0.01e-6)?;
    let t_base = scheme.base_period(&config);
    let i_c = i_c_hat * config.m1 * t_base;
    let amp = a_hat * config.m1 * t_base;
    let omega = omega_hat * 2.0 * std::f64::consts::PI / t_base;
    let slew = lambda_hat * config.m1;
    let filter_points: Vec<Option<TradeoffPoint>> = grids
        .filter_tau_hat
        .par_iter()
        .map(|&th| {
            let tau = th * t_base;
            let mut poles: Vec<f64> = Vec::new();
            // the pole wanders with both the interference phase and the
            // operating point: psi2 grows with the command level while
            // psi1 flips sign with phase, so sweep both
            for ic_scale in [0.5, 1.0, 2.0] {
                let i_c_pt = i_c * ic_scale;
                for p in 0..grids.phases {
                    let phase = p as f64 * 2.0 * std::f64::consts::PI / grids.phases as f64;
                    let kind = match WaveformKind::trapezoid(amp, omega, slew, phase) {
                        Ok(k) => k,
                        Err(_) => WaveformKind::sinusoid(amp, omega, phase),
                    };
                    let spec = match InterferenceSpec::from_waveform(kind, omega) {
                        Ok(s) => s,
                        Err(_) => continue,
                    };
                    let op = match filter::operating_point(&config, &scheme, &spec, tau, i_c_pt) {
                        Ok(op) => op,
                        Err(_) => continue,
                    };
                    if let Ok(lin) = filter::linearize(&config, &scheme, &spec, tau, &op) {
                        poles.push(lin.pole);
                    }
                }
            }
            if poles.is_empty() {
                return None;
            }
            let a_min = poles.iter().copied().fold(f64::INFINITY, f64::min);
            let a_max = poles.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let range = match crate::metrics::PoleRange::new(a_min, a_max) {
                Ok(r) if r.is_stable() => r,
                _ => return None,
            };
            Some(TradeoffPoint {
                method: Method::Filter,
                parameter: th,
                n_w: settling_cycles(range).ok()?,
                o_w: overshoot(range),
            })
        })
        .collect();
    out.extend(filter_points.into_iter().flatten());
    Ok(out)
}

/// Pareto-front members of the pooled pair `{a, b}`: which of the two
/// tradeoff curves sits closer to the origin.
pub fn pairwise_front_counts(
    points: &[TradeoffPoint],
    a: Method,
    b: Method,
) -> (usize, usize) {
    let pool: Vec<&TradeoffPoint> =
        points.iter().filter(|p| p.method == a || p.method == b).collect();
    let mut ca = 0;
    let mut cb = 0;
    for (i, p) in pool.iter().enumerate() {
        let dominated = pool.iter().enumerate().any(|(j, q)| {
            j != i && q.n_w <= p.n_w && q.o_w <= p.o_w && (q.n_w < p.n_w || q.o_w < p.o_w)
        });
        if !dominated {
            if p.method == a {
                ca += 1;
            } else {
                cb += 1;
            }
        }
    }
    (ca, cb)
}

/// Fraction of a method's own Pareto front that survives pooling with a
/// competitor. A dominated curve loses most of its front members to the
/// other method; a dominating curve keeps them.
pub fn front_retention(points: &[TradeoffPoint], of: Method, against: Method) -> f64 {
    let (own, _) = pairwise_front_counts(points, of, of);
    if own == 0 {
        return 0.0;
    }
    let (kept, _) = pairwise_front_counts(points, of, against);
    kept as f64 / own as f64
}

/// Number of Pareto-front members (minimizing both settling and
/// overshoot) contributed by each method.
pub fn pareto_counts(points: &[TradeoffPoint]) -> [(Method, usize); 3] {
    let mut counts = [(Method::Slope, 0), (Method::Filter, 0), (Method::Overdrive, 0)];
    for (i, p) in points.iter().enumerate() {
        let dominated = points.iter().enumerate().any(|(j, q)| {
            j != i
                && q.n_w <= p.n_w
                && q.o_w <= p.o_w
                && (q.n_w < p.n_w || q.o_w < p.o_w)
        });
        if !dominated {
            for slot in counts.iter_mut() {
                if slot.0 == p.method {
                    slot.1 += 1;
                }
            }
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regime_high_frequency_small_amplitude() {
        // interference well above the switching rate: the filter and
        // the comparator overdrive both dominate slope compensation
        let cloud = tradeoff_cloud(0.01, 3.0, 3.0, &TradeoffGrids::default()).unwrap();
        let s_f = front_retention(&cloud, Method::Slope, Method::Filter);
        let f_s = front_retention(&cloud, Method::Filter, Method::Slope);
        assert!(s_f < f_s, "slope retains {s_f} vs filter {f_s}");
        let s_o = front_retention(&cloud, Method::Slope, Method::Overdrive);
        let o_s = front_retention(&cloud, Method::Overdrive, Method::Slope);
        assert!(s_o < o_s, "slope retains {s_o} vs overdrive {o_s}");
    }

    #[test]
    fn regime_near_switching_large_amplitude() {
        // interference at the switching rate: overdrive and slope both
        // dominate the filter
        let cloud = tradeoff_cloud(0.12, 1.0, 3.0, &TradeoffGrids::default()).unwrap();
        let f_s = front_retention(&cloud, Method::Filter, Method::Slope);
        let s_f = front_retention(&cloud, Method::Slope, Method::Filter);
        assert!(f_s < s_f, "filter retains {f_s} vs slope {s_f}");
        let f_o = front_retention(&cloud, Method::Filter, Method::Overdrive);
        let o_f = front_retention(&cloud, Method::Overdrive, Method::Filter);
        assert!(f_o < o_f, "filter retains {f_o} vs overdrive {o_f}");
    }

    #[test]
    fn zero_interference_degrades_from_deadbeat() {
        // with no interference every method's best point is the
        // unconditioned deadbeat; metrics grow with the parameter
        let cloud = tradeoff_cloud(0.0, 2.0, 3.0, &TradeoffGrids::default()).unwrap();
        for p in cloud.iter().filter(|p| p.method == Method::Slope) {
            let pr = slope::pole_range(1.0, p.parameter, 0.0).unwrap();
            assert!((p.n_w - settling_cycles(pr).unwrap()).abs() < 1e-9);
            assert_eq!(p.o_w, 0.0);
        }
        // slope settling grows monotonically from zero
        let slopes: Vec<&TradeoffPoint> =
            cloud.iter().filter(|p| p.method == Method::Slope).collect();
        for w in slopes.windows(2) {
            assert!(w[1].n_w >= w[0].n_w);
        }
    }
}
