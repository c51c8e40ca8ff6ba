//! Bounded interference waveforms and their characterizations.
//!
//! The admissible class is deterministic, band-limited-from-below
//! signals with amplitude bound `a_ub`, frequency lower bound
//! `omega_l`, and slew (Lipschitz) bound `lambda_ub`. The worst-case
//! member for comparator-overdrive analysis is the trapezoid whose
//! fundamental sits at `omega_l` and whose ramps slew at `lambda_ub`.
//!
//! Fourier convention: `w(t) = integral W(omega) e^{j omega t} d omega`,
//! so a sinusoid `A cos(omega0 t)` carries two lines of weight `A/2`
//! and its spectral functional is `B = A/omega0`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// One spectral line: a term `amplitude * cos(omega t + phase)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralLine {
    pub amplitude: f64,
    pub omega: f64,
    pub phase: f64,
}

/// Deterministic interference waveform shapes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WaveformKind {
    Sinusoid {
        amplitude: f64,
        omega: f64,
        phase: f64,
    },
    /// Symmetric trapezoid wave: ramps of slope `slew` joining plateaus
    /// at +/- amplitude, fundamental `omega`. `phase` shifts the wave
    /// left by `phase/omega` seconds; at phase zero the rising edge is
    /// centered on t = 0.
    Trapezoid {
        amplitude: f64,
        omega: f64,
        slew: f64,
        phase: f64,
    },
    /// Decaying ring `amplitude * e^{-decay (t-t0)} sin(omega (t-t0))`
    /// starting at `start_time`, zero before (continuous onset).
    /// Mimics parasitic ringing and power-ground resonance after the
    /// switching edge.
    DampedRing {
        amplitude: f64,
        omega: f64,
        decay: f64,
        start_time: f64,
    },
    Composite { parts: Vec<WaveformKind> },
}

impl WaveformKind {
    pub fn sinusoid(amplitude: f64, omega: f64, phase: f64) -> Self {
        WaveformKind::Sinusoid { amplitude, omega, phase }
    }

    /// Trapezoid with validation: the ramps must fit inside a half
    /// period, i.e. `slew >= 2 * amplitude * omega / pi`.
    pub fn trapezoid(amplitude: f64, omega: f64, slew: f64, phase: f64) -> Result<Self> {
        if !(amplitude >= 0.0) || !(omega > 0.0) || !(slew > 0.0) {
            return Err(Error::validation("trapezoid", "needs amplitude >= 0, omega > 0, slew > 0"));
        }
        if slew < 2.0 * amplitude * omega / PI * (1.0 - 1e-12) {
            return Err(Error::validation(
                "slew",
                format!(
                    "ramps do not fit in a half period: need slew >= 2 A omega / pi = {:.6e}",
                    2.0 * amplitude * omega / PI
                ),
            ));
        }
        Ok(WaveformKind::Trapezoid { amplitude, omega, slew, phase })
    }

    /// Trapezoid whose falling ramp is centered at cycle-local time
    /// `t_center` (the ramp holds slope `-slew` for `amplitude/slew`
    /// seconds either side of it).
    pub fn trapezoid_falling_at(
        amplitude: f64,
        omega: f64,
        slew: f64,
        t_center: f64,
    ) -> Result<Self> {
        let period = 2.0 * PI / omega;
        let phase = omega * (period / 2.0 - t_center);
        Self::trapezoid(amplitude, omega, slew, phase.rem_euclid(2.0 * PI))
    }

    /// Trapezoid whose rising ramp is centered at cycle-local time `t_center`.
    pub fn trapezoid_rising_at(
        amplitude: f64,
        omega: f64,
        slew: f64,
        t_center: f64,
    ) -> Result<Self> {
        let phase = -omega * t_center;
        Self::trapezoid(amplitude, omega, slew, phase.rem_euclid(2.0 * PI))
    }

    pub fn damped_ring(amplitude: f64, omega: f64, decay: f64, start_time: f64) -> Self {
        WaveformKind::DampedRing { amplitude, omega, decay, start_time }
    }

    /// Evaluates the waveform at cycle-local time `t` with an extra
    /// phase offset (radians of the component's own fundamental).
    pub fn eval(&self, t: f64, phase_offset: f64) -> f64 {
        match *self {
            WaveformKind::Sinusoid { amplitude, omega, phase } => {
                amplitude * (omega * t + phase + phase_offset).cos()
            }
            WaveformKind::Trapezoid { amplitude, omega, slew, phase } => {
                trapezoid_eval(amplitude, omega, slew, phase + phase_offset, t)
            }
            WaveformKind::DampedRing { amplitude, omega, decay, start_time } => {
                if t < start_time {
                    0.0
                } else {
                    let dt = t - start_time;
                    amplitude * (-decay * dt).exp() * (omega * dt).sin()
                }
            }
            WaveformKind::Composite { ref parts } => {
                parts.iter().map(|p| p.eval(t, phase_offset)).sum()
            }
        }
    }

    /// Conservative bound on `|w|`.
    pub fn amplitude_bound(&self) -> f64 {
        match *self {
            WaveformKind::Sinusoid { amplitude, .. } => amplitude.abs(),
            WaveformKind::Trapezoid { amplitude, .. } => amplitude.abs(),
            WaveformKind::DampedRing { amplitude, .. } => amplitude.abs(),
            WaveformKind::Composite { ref parts } => {
                parts.iter().map(|p| p.amplitude_bound()).sum()
            }
        }
    }

    /// Upper bound on `|dw/dt|`. Sinusoid: `A omega`; trapezoid: its
    /// slew; ring: the conservative `A sqrt(omega^2 + decay^2)`;
    /// composite: triangle-inequality sum.
    pub fn lipschitz_bound(&self) -> f64 {
        match *self {
            WaveformKind::Sinusoid { amplitude, omega, .. } => amplitude.abs() * omega,
            WaveformKind::Trapezoid { amplitude, slew, .. } => {
                if amplitude == 0.0 {
                    0.0
                } else {
                    slew
                }
            }
            WaveformKind::DampedRing { amplitude, omega, decay, .. } => {
                amplitude.abs() * (omega * omega + decay * decay).sqrt()
            }
            WaveformKind::Composite { ref parts } => {
                parts.iter().map(|p| p.lipschitz_bound()).sum()
            }
        }
    }

    /// Fundamental period of the fastest periodic component, used for
    /// grid sizing. `None` when the waveform has no oscillatory part.
    pub fn shortest_period(&self) -> Option<f64> {
        match *self {
            WaveformKind::Sinusoid { amplitude, omega, .. }
            | WaveformKind::Trapezoid { amplitude, omega, .. }
            | WaveformKind::DampedRing { amplitude, omega, .. } => {
                (amplitude != 0.0).then_some(2.0 * PI / omega)
            }
            WaveformKind::Composite { ref parts } => parts
                .iter()
                .filter_map(|p| p.shortest_period())
                .min_by(|a, b| a.total_cmp(b)),
        }
    }

    /// Discrete line spectrum, highest-amplitude lines of the Fourier
    /// series. Errors for waveforms without one (the damped ring).
    pub fn spectral_lines(&self) -> Result<Vec<SpectralLine>> {
        let mut out = Vec::new();
        self.push_lines(0.0, &mut out)?;
        Ok(out)
    }

    fn push_lines(&self, phase_offset: f64, out: &mut Vec<SpectralLine>) -> Result<()> {
        match *self {
            WaveformKind::Sinusoid { amplitude, omega, phase } => {
                if amplitude != 0.0 {
                    out.push(SpectralLine { amplitude, omega, phase: phase + phase_offset });
                }
                Ok(())
            }
            WaveformKind::Trapezoid { amplitude, omega, slew, phase } => {
                if amplitude == 0.0 {
                    return Ok(());
                }
                let t_rise = 2.0 * amplitude / slew;
                let mut k = 1u64;
                loop {
                    let w_k = k as f64 * omega;
                    let x = w_k * t_rise / 2.0;
                    let sinc = if x.abs() < 1e-12 { 1.0 } else { x.sin() / x };
                    let a_k = 4.0 * amplitude / (k as f64 * PI) * sinc;
                    if a_k.abs() > 1e-10 * amplitude {
                        out.push(SpectralLine {
                            amplitude: a_k,
                            omega: w_k,
                            phase: k as f64 * (phase + phase_offset) - PI / 2.0,
                        });
                    }
                    // 1/k^2 envelope: once the envelope is negligible, stop
                    if 8.0 * amplitude / (k as f64 * PI) * (1.0 / (1.0 + x)) < 1e-10 * amplitude
                        || k > 200_001
                    {
                        break;
                    }
                    k += 2;
                }
                Ok(())
            }
            WaveformKind::DampedRing { amplitude, .. } => {
                if amplitude == 0.0 {
                    Ok(())
                } else {
                    Err(Error::NonIntegrableSpectrum(
                        "damped ring has a continuous spectrum reaching omega = 0".into(),
                    ))
                }
            }
            WaveformKind::Composite { ref parts } => {
                for p in parts {
                    p.push_lines(phase_offset, out)?;
                }
                Ok(())
            }
        }
    }
}

/// One additive piece of a cycle's interference, valid on an interval
/// free of breakpoints. Filter responses and integrals have closed
/// forms for each shape, which keeps the cycle engine exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Atom {
    /// `p + q (t - t_ref)`.
    Affine { p: f64, q: f64, t_ref: f64 },
    /// `a cos(omega t + phase)` in cycle-local time.
    Cosine { a: f64, omega: f64, phase: f64 },
    /// `a e^{-sigma (t - t_start)} cos(omega (t - t_start) + phase)`,
    /// zero before `t_start`.
    DampedCosine { a: f64, sigma: f64, omega: f64, phase: f64, t_start: f64 },
}

impl WaveformKind {
    /// Appends every time in `(0, t_max)` where the atom decomposition
    /// changes (trapezoid segment joints, ring onsets).
    pub fn breakpoints_within(&self, phase_offset: f64, t_max: f64, out: &mut Vec<f64>) {
        match *self {
            WaveformKind::Sinusoid { .. } => {}
            WaveformKind::Trapezoid { amplitude, omega, slew, phase } => {
                if amplitude == 0.0 {
                    return;
                }
                let period = 2.0 * PI / omega;
                let half = period / 2.0;
                let t_rise = 2.0 * amplitude / slew;
                let shift = (phase + phase_offset) / omega;
                // joints of the base shape at u in {tr/2, half-tr/2, half+tr/2, period-tr/2}
                for base in [
                    t_rise / 2.0,
                    half - t_rise / 2.0,
                    half + t_rise / 2.0,
                    period - t_rise / 2.0,
                ] {
                    // u = t + shift (mod period) hits `base` at these t
                    let first = (base - shift).rem_euclid(period);
                    let mut t = first;
                    while t < t_max {
                        if t > 0.0 {
                            out.push(t);
                        }
                        t += period;
                    }
                }
            }
            WaveformKind::DampedRing { amplitude, start_time, .. } => {
                if amplitude != 0.0 && start_time > 0.0 && start_time < t_max {
                    out.push(start_time);
                }
            }
            WaveformKind::Composite { ref parts } => {
                for p in parts {
                    p.breakpoints_within(phase_offset, t_max, out);
                }
            }
        }
    }

    /// Appends the atoms active at time `t`, which stay valid on the
    /// whole breakpoint-free interval containing `t`.
    pub fn atoms_at(&self, phase_offset: f64, t: f64, out: &mut Vec<Atom>) {
        match *self {
            WaveformKind::Sinusoid { amplitude, omega, phase } => {
                if amplitude != 0.0 {
                    out.push(Atom::Cosine { a: amplitude, omega, phase: phase + phase_offset });
                }
            }
            WaveformKind::Trapezoid { amplitude, omega, slew, phase } => {
                if amplitude == 0.0 {
                    return;
                }
                let value = trapezoid_eval(amplitude, omega, slew, phase + phase_offset, t);
                let period = 2.0 * PI / omega;
                let half = period / 2.0;
                let t_rise = 2.0 * amplitude / slew;
                let u = (t + (phase + phase_offset) / omega).rem_euclid(period);
                let q = if u < t_rise / 2.0 {
                    slew
                } else if u < half - t_rise / 2.0 {
                    0.0
                } else if u < half + t_rise / 2.0 {
                    -slew
                } else if u < period - t_rise / 2.0 {
                    0.0
                } else {
                    slew
                };
                out.push(Atom::Affine { p: value, q, t_ref: t });
            }
            WaveformKind::DampedRing { amplitude, omega, decay, start_time } => {
                if amplitude != 0.0 && t >= start_time {
                    out.push(Atom::DampedCosine {
                        a: amplitude,
                        sigma: decay,
                        omega,
                        phase: -std::f64::consts::FRAC_PI_2,
                        t_start: start_time,
                    });
                }
            }
            WaveformKind::Composite { ref parts } => {
                for p in parts {
                    p.atoms_at(phase_offset, t, out);
                }
            }
        }
    }
}

fn trapezoid_eval(amplitude: f64, omega: f64, slew: f64, phase: f64, t: f64) -> f64 {
    if amplitude == 0.0 {
        return 0.0;
    }
    let period = 2.0 * PI / omega;
    let half = period / 2.0;
    let t_rise = 2.0 * amplitude / slew;
    let u = (t + phase / omega).rem_euclid(period);
    if u < t_rise / 2.0 {
        slew * u
    } else if u < half - t_rise / 2.0 {
        amplitude
    } else if u < half + t_rise / 2.0 {
        amplitude - slew * (u - (half - t_rise / 2.0))
    } else if u < period - t_rise / 2.0 {
        -amplitude
    } else {
        -amplitude + slew * (u - (period - t_rise / 2.0))
    }
}

/// How the waveform phase evolves from cycle to cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseMode {
    /// Identical waveform every cycle (cycle-locked).
    #[default]
    Fixed,
    /// A fresh uniform phase offset each cycle, derived from the seed.
    RandomPerCycle,
}

/// Concrete interference generator: a waveform shape, a per-cycle phase
/// policy, and the seed that makes randomized runs reproducible.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Waveform {
    pub kind: WaveformKind,
    #[serde(default)]
    pub phase_mode: PhaseMode,
    #[serde(default)]
    pub seed: u64,
}

impl Waveform {
    pub fn fixed(kind: WaveformKind) -> Self {
        Waveform { kind, phase_mode: PhaseMode::Fixed, seed: 0 }
    }

    /// Phase offset (radians) applied to every periodic component in
    /// the given cycle. Pure in (seed, cycle_index).
    pub fn cycle_phase_offset(&self, cycle_index: u64) -> f64 {
        match self.phase_mode {
            PhaseMode::Fixed => 0.0,
            PhaseMode::RandomPerCycle => {
                let key = self
                    .seed
                    .wrapping_mul(0x9E37_79B9_7F4A_7C15)
                    .wrapping_add(cycle_index.wrapping_mul(0xD1B5_4A32_D192_ED03));
                let mut rng = ChaCha8Rng::seed_from_u64(key);
                rng.gen_range(0.0..(2.0 * PI))
            }
        }
    }
}

/// Bounded interference class, optionally carrying a concrete waveform.
///
/// With `waveform: None` the value describes only the class bounds,
/// which is all the design certificates need. `b_functional` is the
/// spectral functional `B = integral |W(omega)/omega| d omega`; it is
/// `None` when the waveform's spectrum makes it non-integrable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterferenceSpec {
    /// Amplitude upper bound (A), referred to current.
    pub a_ub: f64,
    /// Frequency lower bound (rad/s). This single field stands in for
    /// the variously named band-edge frequencies (the class floor, the
    /// trapezoid fundamental, the "interference frequency band" of the
    /// method-comparison regimes): they are one quantity here.
    pub omega_l: f64,
    /// Slew-rate upper bound (A/s).
    pub lambda_ub: f64,
    /// Spectral functional B (A·s), when integrable.
    pub b_functional: Option<f64>,
    pub waveform: Option<Waveform>,
}

impl InterferenceSpec {
    /// Class bounds without a concrete waveform.
    pub fn class_bounds(a_ub: f64, omega_l: f64, lambda_ub: f64, b: f64) -> Result<Self> {
        validate_bounds(a_ub, omega_l, lambda_ub, b)?;
        Ok(InterferenceSpec {
            a_ub,
            omega_l,
            lambda_ub,
            b_functional: Some(b),
            waveform: None,
        })
    }

    /// The zero-interference spec.
    pub fn zero() -> Self {
        InterferenceSpec {
            a_ub: 0.0,
            omega_l: 1.0,
            lambda_ub: 0.0,
            b_functional: Some(0.0),
            waveform: None,
        }
    }

    /// Derives the class bounds from a concrete waveform. `omega_l`
    /// must be supplied (it is a property of the class, not of one
    /// member) and must not exceed any component fundamental.
    pub fn from_waveform(kind: WaveformKind, omega_l: f64) -> Result<Self> {
        Self::from_waveform_with(Waveform::fixed(kind), omega_l)
    }

    pub fn from_waveform_with(waveform: Waveform, omega_l: f64) -> Result<Self> {
        if !(omega_l > 0.0) {
            return Err(Error::validation("omega_l", "must be positive"));
        }
        let a_ub = waveform.kind.amplitude_bound();
        let lambda_ub = waveform.kind.lipschitz_bound();
        let b_functional = b_of_lines(&waveform.kind).ok();
        validate_bounds(a_ub, omega_l, lambda_ub, b_functional.unwrap_or(0.0))?;
        Ok(InterferenceSpec {
            a_ub,
            omega_l,
            lambda_ub,
            b_functional,
            waveform: Some(waveform),
        })
    }

    /// Attaches a waveform to explicit class bounds, checking the
    /// waveform stays inside them.
    pub fn with_waveform(mut self, waveform: Waveform) -> Result<Self> {
        let amp = waveform.kind.amplitude_bound();
        if amp > self.a_ub * (1.0 + 1e-12) {
            return Err(Error::validation(
                "waveform",
                format!("amplitude bound {amp} exceeds a_ub {}", self.a_ub),
            ));
        }
        let lip = waveform.kind.lipschitz_bound();
        if lip > self.lambda_ub * (1.0 + 1e-12) {
            return Err(Error::validation(
                "waveform",
                format!("slew bound {lip} exceeds lambda_ub {}", self.lambda_ub),
            ));
        }
        self.waveform = Some(waveform);
        Ok(self)
    }

    /// Sample the interference at cycle-local time `t` in the given
    /// cycle. Deterministic in (spec, t, cycle_index, seed).
    pub fn sample(&self, t: f64, cycle_index: u64) -> f64 {
        match &self.waveform {
            None => 0.0,
            Some(w) => w.kind.eval(t, w.cycle_phase_offset(cycle_index)),
        }
    }

    /// Slew-rate (Lipschitz) upper bound of the generator.
    pub fn lipschitz_bound(&self) -> f64 {
        self.lambda_ub
    }

    /// Spectral functional `B`; errors when the spectrum is not
    /// integrable against `1/omega`.
    pub fn b_functional(&self) -> Result<f64> {
        match self.b_functional {
            Some(b) => Ok(b),
            None => Err(Error::NonIntegrableSpectrum(
                "B undefined for this waveform; supply class bounds explicitly".into(),
            )),
        }
    }

    /// The worst-case class member: a trapezoid at the class frequency
    /// floor slewing at the class Lipschitz bound.
    pub fn worst_case_trapezoid(&self, phase: f64) -> Result<WaveformKind> {
        WaveformKind::trapezoid(self.a_ub, self.omega_l, self.lambda_ub.max(1e-300), phase)
    }
}

fn validate_bounds(a_ub: f64, omega_l: f64, lambda_ub: f64, b: f64) -> Result<()> {
    if !(a_ub >= 0.0) {
        return Err(Error::validation("a_ub", "must be non-negative"));
    }
    if !(omega_l > 0.0) {
        return Err(Error::validation("omega_l", "must be positive"));
    }
    if !(lambda_ub >= 0.0) {
        return Err(Error::validation("lambda_ub", "must be non-negative"));
    }
    if !(b >= 0.0) {
        return Err(Error::validation("b_functional", "must be non-negative"));
    }
    Ok(())
}

/// `B = sum_k |A_k| / omega_k` over the line spectrum. Under the stated
/// Fourier convention each cosine of amplitude `A` at `omega0`
/// contributes `A/omega0`.
pub fn b_of_lines(kind: &WaveformKind) -> Result<f64> {
    let lines = kind.spectral_lines()?;
    Ok(lines.iter().map(|l| l.amplitude.abs() / l.omega).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_PI: f64 = 2.0 * PI;

    #[test]
    fn zero_spec_samples_zero() {
        let spec = InterferenceSpec::zero();
        for i in 0..10 {
            assert_eq!(spec.sample(i as f64 * 1e-7, i), 0.0);
        }
    }

    #[test]
    fn sinusoid_quarter_period() {
        let spec = InterferenceSpec::from_waveform(
            WaveformKind::sinusoid(0.1, TWO_PI * 10e6, 0.0),
            TWO_PI * 10e6,
        )
        .unwrap();
        // quarter period of 100 ns is 25 ns: cos(pi/2) = 0
        assert!(spec.sample(25e-9, 0).abs() < 1e-12);
        assert!((spec.sample(0.0, 0) - 0.1).abs() < 1e-15);
    }

    #[test]
    fn trapezoid_plateau_is_exact() {
        let a = 0.1;
        let omega = TWO_PI * 1e6;
        let lam = 2e6; // A/s
        let kind = WaveformKind::trapezoid(a, omega, lam, 0.0).unwrap();
        let period = TWO_PI / omega;
        let t_rise = 2.0 * a / lam;
        // middle of the upper plateau
        let t_up = (t_rise / 2.0 + (period / 2.0 - t_rise / 2.0)) / 2.0;
        assert_eq!(kind.eval(t_up, 0.0), a);
        // dense-grid maximum agrees
        let max = (0..20_000)
            .map(|i| kind.eval(i as f64 * period / 20_000.0, 0.0))
            .fold(f64::NEG_INFINITY, f64::max);
        assert!((max - a).abs() < 1e-12);
    }

    #[test]
    fn trapezoid_requires_room_for_ramps() {
        // slew < 2 A omega / pi cannot complete the ramps
        assert!(WaveformKind::trapezoid(1.0, TWO_PI, 1.0, 0.0).is_err());
    }

    #[test]
    fn trapezoid_edge_placement() {
        let a = 0.2;
        let omega = TWO_PI * 1e6;
        let lam = 4.0 * a * omega / PI;
        let tc = 0.37e-6;
        let falling = WaveformKind::trapezoid_falling_at(a, omega, lam, tc).unwrap();
        assert!(falling.eval(tc, 0.0).abs() < 1e-12);
        let h = 1e-12;
        let slope = (falling.eval(tc + h, 0.0) - falling.eval(tc - h, 0.0)) / (2.0 * h);
        assert!((slope + lam).abs() < 1e-3 * lam, "slope {slope}");

        let rising = WaveformKind::trapezoid_rising_at(a, omega, lam, tc).unwrap();
        let slope = (rising.eval(tc + h, 0.0) - rising.eval(tc - h, 0.0)) / (2.0 * h);
        assert!((slope - lam).abs() < 1e-3 * lam, "slope {slope}");
    }

    #[test]
    fn lipschitz_bounds() {
        // A*omega for a sinusoid: 0.1 A * 10 rad/us = 1 A/us
        let s = WaveformKind::sinusoid(0.1, 10e6, 0.0);
        assert!((s.lipschitz_bound() - 1e6).abs() < 1e-6);
        let t = WaveformKind::trapezoid(0.1, 1e6, 2e6, 0.0).unwrap();
        assert!((t.lipschitz_bound() - 2e6).abs() < 1e-9);
        let c = WaveformKind::Composite { parts: vec![s, t] };
        assert!((c.lipschitz_bound() - 3e6).abs() < 1e-6);
    }

    #[test]
    fn lipschitz_bound_holds_on_dense_grid() {
        let kinds = [
            WaveformKind::sinusoid(0.07, TWO_PI * 3e6, 1.1),
            WaveformKind::trapezoid(0.05, TWO_PI * 2e6, 2.0e6, 0.4).unwrap(),
            WaveformKind::damped_ring(0.1, TWO_PI * 8e6, 4e6, 0.1e-6),
            WaveformKind::Composite {
                parts: vec![
                    WaveformKind::sinusoid(0.03, TWO_PI * 5e6, 0.0),
                    WaveformKind::trapezoid(0.02, TWO_PI * 1e6, 1e6, 2.2).unwrap(),
                ],
            },
        ];
        for kind in kinds {
            let a_ub = kind.amplitude_bound();
            let lam = kind.lipschitz_bound();
            let span = 3e-6;
            let n = 10_000;
            let h = span / n as f64;
            let mut prev = kind.eval(0.0, 0.0);
            for i in 1..=n {
                let t = i as f64 * h;
                let v = kind.eval(t, 0.0);
                assert!(v.abs() <= a_ub * (1.0 + 1e-9), "|w| bound violated");
                let fd = (v - prev).abs() / h;
                assert!(fd <= 1.01 * lam + 1e-12, "slope {fd} > {lam}");
                prev = v;
            }
        }
    }

    #[test]
    fn b_functional_examples() {
        // A/omega0 = 0.05 / 62.832 rad/us
        let s = WaveformKind::sinusoid(0.05, 62.832e6, 0.0);
        let b = b_of_lines(&s).unwrap();
        assert!((b - 0.05 / 62.832e6).abs() < 1e-18, "b = {b}");

        assert_eq!(b_of_lines(&WaveformKind::sinusoid(0.0, 1e6, 0.0)).unwrap(), 0.0);

        // two distinct lines add
        let c = WaveformKind::Composite {
            parts: vec![
                WaveformKind::sinusoid(0.05, 62.832e6, 0.0),
                WaveformKind::sinusoid(0.02, 10e6, 1.0),
            ],
        };
        let b2 = b_of_lines(&c).unwrap();
        assert!((b2 - (0.05 / 62.832e6 + 0.02 / 10e6)).abs() < 1e-18);
    }

    #[test]
    fn b_functional_is_homogeneous_in_amplitude() {
        let b1 = b_of_lines(&WaveformKind::trapezoid(0.04, TWO_PI * 1e6, 1e6, 0.7).unwrap()).unwrap();
        let b2 = b_of_lines(&WaveformKind::trapezoid(0.08, TWO_PI * 1e6, 2e6, 0.7).unwrap()).unwrap();
        assert!(((b2 - 2.0 * b1) / b2).abs() < 1e-12, "{b1} {b2}");
    }

    #[test]
    fn ring_spectrum_is_not_integrable() {
        let spec = InterferenceSpec::from_waveform(
            WaveformKind::damped_ring(0.1, TWO_PI * 8e6, 5e6, 0.0),
            TWO_PI * 5e6,
        )
        .unwrap();
        assert!(matches!(spec.b_functional(), Err(Error::NonIntegrableSpectrum(_))));
    }

    #[test]
    fn trapezoid_series_matches_piecewise_eval() {
        let a = 0.1;
        let omega = TWO_PI * 1e6;
        let lam = 1.5e6;
        let kind = WaveformKind::trapezoid(a, omega, lam, 0.8).unwrap();
        let lines = kind.spectral_lines().unwrap();
        assert!(lines.len() > 5);
        for i in 0..137 {
            let t = i as f64 * 17.3e-9;
            let series: f64 = lines
                .iter()
                .map(|l| l.amplitude * (l.omega * t + l.phase).cos())
                .sum();
            let exact = kind.eval(t, 0.0);
            assert!(
                (series - exact).abs() < 2e-6 * a,
                "t={t}: series {series} vs exact {exact}"
            );
        }
    }

    #[test]
    fn trapezoid_b_via_series_partial_sums() {
        // partial sums of |A_k|/omega_k must converge; compare the full
        // sum with a coarse truncation
        let kind = WaveformKind::trapezoid(0.1, TWO_PI * 1e6, 1.5e6, 0.0).unwrap();
        let lines = kind.spectral_lines().unwrap();
        let full: f64 = lines.iter().map(|l| l.amplitude.abs() / l.omega).sum();
        let coarse: f64 = lines.iter().take(20).map(|l| l.amplitude.abs() / l.omega).sum();
        assert!((full - coarse) / full < 1e-3);
    }

    #[test]
    fn per_cycle_phase_is_deterministic_and_varies() {
        let w = Waveform {
            kind: WaveformKind::sinusoid(0.1, 1e6, 0.0),
            phase_mode: PhaseMode::RandomPerCycle,
            seed: 42,
        };
        assert_eq!(w.cycle_phase_offset(7), w.cycle_phase_offset(7));
        assert_ne!(w.cycle_phase_offset(7), w.cycle_phase_offset(8));
        let w2 = Waveform { seed: 43, ..w.clone() };
        assert_ne!(w.cycle_phase_offset(7), w2.cycle_phase_offset(7));
    }

    #[test]
    fn waveform_outside_class_bounds_is_rejected() {
        let spec = InterferenceSpec::class_bounds(0.05, 1e6, 1e6, 0.0).unwrap();
        let too_big = Waveform::fixed(WaveformKind::sinusoid(0.1, 1e6, 0.0));
        assert!(spec.with_waveform(too_big).is_err());
    }
}
