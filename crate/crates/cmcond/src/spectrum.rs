//! FFT magnitude spectra of simulated inductor-current waveforms and
//! detection of subharmonic lines at rational fractions of the
//! switching frequency.

use rustfft::{num_complex::Complex, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sim::DenseWaveform;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumOptions {
    /// Largest subharmonic denominator searched.
    pub max_denominator: u32,
    /// A line must exceed this multiple of the local noise floor.
    pub threshold_ratio: f64,
    /// Minimum trace length in fundamental periods.
    pub min_periods: f64,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions { max_denominator: 8, threshold_ratio: 10.0, min_periods: 64.0 }
    }
}

/// Magnitude spectrum plus the set of detected subharmonic orders k/q.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    /// Bin frequencies (Hz), DC excluded, up to Nyquist.
    pub frequencies: Vec<f64>,
    /// Window-normalized magnitudes.
    pub magnitudes: Vec<f64>,
    /// Reduced fractions k/q with q >= 2 found above the floor.
    pub detected_orders: Vec<(u32, u32)>,
    pub fundamental_hz: f64,
}

impl SpectrumReport {
    pub fn has_order(&self, k: u32, q: u32) -> bool {
        let g = gcd(k, q);
        self.detected_orders.contains(&(k / g, q / g))
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Computes the Hann-windowed magnitude spectrum and flags subharmonic
/// orders whose bin exceeds `threshold_ratio` times the local median
/// floor. The trace must span at least `min_periods` fundamentals.
pub fn spectrum(
    dense: &DenseWaveform,
    fundamental_hz: f64,
    opts: &SpectrumOptions,
) -> Result<SpectrumReport> {
    let n = dense.current.len();
    if !(fundamental_hz > 0.0) {
        return Err(Error::validation("fundamental_hz", "must be positive"));
    }
    let periods = dense.duration() * fundamental_hz;
    if periods < opts.min_periods {
        return Err(Error::validation(
            "dense_waveform",
            format!("trace spans {periods:.1} periods, need {}", opts.min_periods),
        ));
    }

    let mean = dense.current.iter().sum::<f64>() / n as f64;
    let mut buf: Vec<Complex<f64>> = Vec::with_capacity(n);
    let mut wsum = 0.0;
    for (i, &x) in dense.current.iter().enumerate() {
        let w = 0.5 * (1.0 - (2.0 * std::f64::consts::PI * i as f64 / (n - 1) as f64).cos());
        wsum += w;
        buf.push(Complex::new((x - mean) * w, 0.0));
    }
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);

    let half = n / 2;
    let df = 1.0 / (dense.dt * n as f64);
    let magnitudes: Vec<f64> = buf[1..half].iter().map(|c| c.norm() * 2.0 / wsum).collect();
    let frequencies: Vec<f64> = (1..half).map(|k| k as f64 * df).collect();

    let b0 = fundamental_hz / df; // fundamental bin position (fractional)
    let peak = magnitudes.iter().copied().fold(0.0f64, f64::max);

    let mag_at = |bin: f64| -> f64 {
        // off-grid lines leak into the neighboring bins; take the best
        let c = bin.round() as i64;
        (c - 1..=c + 1)
            .filter_map(|i| magnitudes.get((i - 1).max(0) as usize))
            .copied()
            .fold(0.0f64, f64::max)
    };
    let near_harmonic = |i: f64| -> bool {
        let m = (i / b0).round();
        m >= 0.0 && (i - m * b0).abs() <= 2.0
    };

    let mut detected = Vec::new();
    for q in 2..=opts.max_denominator {
        for k in 1..q {
            if gcd(k, q) != 1 {
                continue;
            }
            let bin = k as f64 / q as f64 * b0;
            if bin < 3.0 || (bin.round() as usize) + 3 >= magnitudes.len() {
                continue;
            }
            let line = mag_at(bin);
            // local median floor, skipping the candidate and harmonics
            let w = (b0 / 4.0).ceil().max(8.0) as i64;
            let c = bin.round() as i64;
            let mut window: Vec<f64> = (c - w..=c + w)
                .filter(|&i| i >= 1 && ((i - 1) as usize) < magnitudes.len())
                .filter(|&i| (i - c).abs() > 2 && !near_harmonic(i as f64))
                .map(|i| magnitudes[(i - 1) as usize])
                .collect();
            if window.is_empty() {
                continue;
            }
            window.sort_by(f64::total_cmp);
            let floor = window[window.len() / 2].max(1e-12 * peak);
            if line > opts.threshold_ratio * floor {
                detected.push((k, q));
            }
        }
    }
    detected.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)).then(a.1.cmp(&b.1)));

    Ok(SpectrumReport { frequencies, magnitudes, detected_orders: detected, fundamental_hz })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Sawtooth current like the simulator emits: rise to a per-cycle
    /// peak, fall back. `peaks` cycles repeat for `reps` repetitions at
    /// `spc` samples per switching period.
    fn synthetic_orbit(peaks: &[f64], reps: usize, spc: usize) -> DenseWaveform {
        let t_period = 1e-6;
        let dt = t_period / spc as f64;
        let mut current = Vec::with_capacity(peaks.len() * reps * spc);
        for _ in 0..reps {
            for &p in peaks {
                for i in 0..spc {
                    let frac = i as f64 / spc as f64;
                    // symmetric triangle with the given peak
                    let x = if frac < 0.5 { 2.0 * frac } else { 2.0 * (1.0 - frac) };
                    current.push((p - 1.0) + x);
                }
            }
        }
        DenseWaveform { t0: 0.0, dt, current }
    }

    #[test]
    fn clean_period_one_has_no_orders() {
        let d = synthetic_orbit(&[2.0], 840, 64);
        let r = spectrum(&d, 1e6, &SpectrumOptions::default()).unwrap();
        assert!(r.detected_orders.is_empty(), "{:?}", r.detected_orders);
    }

    #[test]
    fn period_five_orbit_detects_fifths() {
        let d = synthetic_orbit(&[2.0, 2.13, 1.94, 2.06, 1.87], 168, 64);
        let r = spectrum(&d, 1e6, &SpectrumOptions::default()).unwrap();
        for k in 1..5 {
            assert!(r.has_order(k, 5), "missing {k}/5 in {:?}", r.detected_orders);
        }
    }

    #[test]
    fn period_two_orbit_detects_half_only() {
        let d = synthetic_orbit(&[2.1, 1.9], 420, 64);
        let r = spectrum(&d, 1e6, &SpectrumOptions::default()).unwrap();
        assert!(r.has_order(1, 2), "{:?}", r.detected_orders);
        // nothing outside multiples of 1/2
        for &(k, q) in &r.detected_orders {
            assert_eq!(q, 2, "unexpected order {k}/{q}");
        }
    }

    #[test]
    fn planted_line_at_minus_40db_with_no_false_positives() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let spc = 64;
        let reps = 840;
        for trial in 0..100 {
            let mut d = synthetic_orbit(&[2.0], reps, spc);
            let plant = trial % 2 == 1;
            if plant {
                // -40 dB relative to the ~0.5 A fundamental component
                let (k, q) = [(1u32, 5u32), (1, 2), (3, 7), (2, 3)][trial % 4];
                let amp = 0.5 * 1e-2;
                let f = k as f64 / q as f64 * 1e6;
                let phase = rng.gen_range(0.0..std::f64::consts::TAU);
                for (i, x) in d.current.iter_mut().enumerate() {
                    let t = i as f64 * d.dt;
                    *x += amp * (std::f64::consts::TAU * f * t + phase).cos();
                }
                let r = spectrum(&d, 1e6, &SpectrumOptions::default()).unwrap();
                assert!(r.has_order(k, q), "trial {trial}: missed {k}/{q}");
            } else {
                let r = spectrum(&d, 1e6, &SpectrumOptions::default()).unwrap();
                assert!(
                    r.detected_orders.is_empty(),
                    "trial {trial}: false positives {:?}",
                    r.detected_orders
                );
            }
        }
    }

    #[test]
    fn short_traces_are_rejected() {
        let d = synthetic_orbit(&[2.0], 10, 64);
        assert!(spectrum(&d, 1e6, &SpectrumOptions::default()).is_err());
    }
}
