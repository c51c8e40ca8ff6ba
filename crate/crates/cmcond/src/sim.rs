//! Switching-synchronized nonlinear simulation of the current control
//! loop: per cycle, integrate the sensed ramp plus interference, apply
//! the conditioning method, latch the first comparator event, and step
//! the inductor-current state.
//!
//! Within a cycle everything is piecewise analytic: ramps, sinusoid and
//! trapezoid interference, filter responses, and the comparator's
//! saturating integral all evaluate in closed form between waveform
//! breakpoints. Crossings are bracketed on a grid of at least 200
//! points per shortest interference period and refined by bisection,
//! so halving the grid moves trigger times by well under 1e-10 s.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interference::{Atom, InterferenceSpec, WaveformKind};
use crate::types::{
    ConditioningMethod, ConverterConfig, Extremum, Modulation, ModulationScheme, MAX_DUTY,
};

/// One switching cycle of the controlled loop. `t_on` is the duration
/// of the controlled interval (the off time under valley control).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CycleSample {
    pub n: usize,
    pub t_on: f64,
    /// Controlled current extremum (peak or valley) reached this cycle.
    pub i_extremum: f64,
    /// Unshifted current command; slope compensation is applied to the
    /// comparison, not to the logged command.
    pub i_command: f64,
    /// Trigger-time shift against the interference-free trigger from
    /// the same cycle state.
    pub trigger_time_deviation: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    Converged,
    CycleBudget,
    Diverged,
}

/// Uniformly sampled inductor current for spectral analysis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DenseWaveform {
    pub t0: f64,
    pub dt: f64,
    pub current: Vec<f64>,
}

impl DenseWaveform {
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.current
            .iter()
            .enumerate()
            .map(|(i, &y)| (self.t0 + i as f64 * self.dt, y))
    }

    pub fn duration(&self) -> f64 {
        self.dt * self.current.len() as f64
    }

    /// Last `samples` entries as their own waveform; spectra of the
    /// settled tail avoid leakage from the initial transient.
    pub fn tail(&self, samples: usize) -> DenseWaveform {
        let keep = samples.min(self.current.len());
        let skip = self.current.len() - keep;
        DenseWaveform {
            t0: self.t0 + skip as f64 * self.dt,
            dt: self.dt,
            current: self.current[skip..].to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimTrace {
    pub samples: Vec<CycleSample>,
    pub dense_waveform: Option<DenseWaveform>,
    pub terminated_by: Termination,
    /// Cycles in which the fixed-frequency duty limit clipped the
    /// controlled interval. Reported, never fatal.
    pub saturated_cycles: usize,
}

impl SimTrace {
    pub fn extrema(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.i_extremum)
    }
}

/// Additional simulation knobs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimOptions {
    /// Record the inductor current at this many samples per nominal
    /// switching period.
    pub dense_samples_per_cycle: Option<usize>,
    /// Stop early once the extremum sequence is stationary.
    pub stop_on_convergence: bool,
    pub convergence_tol: f64,
    /// Comparator blanking: the overdrive integrator is held in reset
    /// for this long after the controlled interval starts.
    pub blanking: f64,
    /// Starvation cap on the controlled interval, in base periods.
    pub span_cap_factor: f64,
    /// Multiplier on the crossing-search grid density (>= 1 refines).
    pub grid_refine: f64,
}

impl Default for SimOptions {
    fn default() -> Self {
        SimOptions {
            dense_samples_per_cycle: None,
            stop_on_convergence: false,
            convergence_tol: 1e-12,
            blanking: 0.0,
            span_cap_factor: 200.0,
            grid_refine: 1.0,
        }
    }
}

/// Initial condition of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitState {
    /// Interference-free periodic steady state at the first command.
    SteadyState,
    /// Explicit initial extremum; the filter state starts at the first
    /// command value (as if the previous cycle triggered there).
    Custom { i_extremum: f64 },
}

/// Everything the trigger solver needs for one controlled interval.
#[derive(Debug, Clone, Copy)]
pub struct CycleContext<'a> {
    pub config: &'a ConverterConfig,
    pub scheme: &'a ModulationScheme,
    pub interference: &'a InterferenceSpec,
    pub method: &'a ConditioningMethod,
    pub cycle_index: u64,
    /// Current at the start of the controlled interval: the valley for
    /// peak control, the peak for valley control.
    pub start_current: f64,
    pub i_command: f64,
    /// Filter output at the start of the controlled interval (only
    /// read by the low-pass method).
    pub filter_state: f64,
    pub blanking: f64,
    pub grid_refine: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriggerOutcome {
    /// First comparator event (latching: later re-crossings ignored).
    pub t_cross: f64,
    /// Switch instant after the input-independent delay and the
    /// minimum-on-time floor.
    pub t_on: f64,
    /// Filter output at `t_on`, to carry across the cycle boundary.
    pub filter_state: f64,
}

// ---------------------------------------------------------------------------
// cycle-local signal view
// ---------------------------------------------------------------------------

/// Interference as seen in one cycle: the owning spec's waveform plus
/// that cycle's phase offset.
#[derive(Clone, Copy)]
struct CycleW<'a> {
    kind: Option<&'a WaveformKind>,
    phase: f64,
}

impl<'a> CycleW<'a> {
    fn from_spec(spec: &'a InterferenceSpec, cycle_index: u64) -> Self {
        match &spec.waveform {
            Some(w) if w.kind.amplitude_bound() > 0.0 => CycleW {
                kind: Some(&w.kind),
                phase: w.cycle_phase_offset(cycle_index),
            },
            _ => CycleW { kind: None, phase: 0.0 },
        }
    }

    fn none() -> Self {
        CycleW { kind: None, phase: 0.0 }
    }

    fn eval(&self, t: f64) -> f64 {
        match self.kind {
            None => 0.0,
            Some(k) => k.eval(t, self.phase),
        }
    }

    fn is_zero(&self) -> bool {
        self.kind.is_none()
    }

    fn shortest_period(&self) -> Option<f64> {
        self.kind.and_then(|k| k.shortest_period())
    }

    /// Sorted, deduplicated atom breakpoints in `(0, t_max)`, with the
    /// endpoints appended.
    fn segments(&self, t_max: f64) -> Vec<f64> {
        let mut bp = vec![0.0, t_max];
        if let Some(k) = self.kind {
            k.breakpoints_within(self.phase, t_max, &mut bp);
        }
        bp.sort_by(f64::total_cmp);
        bp.dedup_by(|a, b| (*a - *b).abs() < 1e-18);
        bp
    }

    fn atoms_at(&self, t: f64, out: &mut Vec<Atom>) {
        if let Some(k) = self.kind {
            k.atoms_at(self.phase, t, out);
        }
    }
}

// closed-form pieces ---------------------------------------------------------

/// Particular (steady) solution of `tau y' = x - y` for one atom.
fn atom_filter_particular(a: &Atom, tau: f64, t: f64) -> f64 {
    match *a {
        Atom::Affine { p, q, t_ref } => p + q * (t - t_ref) - q * tau,
        Atom::Cosine { a, omega, phase } => {
            let den = 1.0 + omega * tau * omega * tau;
            a * ((omega * t + phase).cos() + omega * tau * (omega * t + phase).sin()) / den
        }
        Atom::DampedCosine { a, sigma, omega, phase, t_start } => {
            // response to Re{a e^{j phase} e^{s(t-t0)}} with
            // s = -sigma + j omega is the same divided by (1 + s tau)
            let re = 1.0 - sigma * tau;
            let im = omega * tau;
            let den = re * re + im * im;
            let dt = t - t_start;
            let env = a * (-sigma * dt).exp();
            let (c, s) = ((omega * dt + phase).cos(), (omega * dt + phase).sin());
            env * (c * re + s * im) / den.max(1e-300)
        }
    }
}

/// Fixed antiderivative of one atom.
fn atom_integral(a: &Atom, t: f64) -> f64 {
    match *a {
        Atom::Affine { p, q, t_ref } => {
            let dt = t - t_ref;
            p * dt + 0.5 * q * dt * dt
        }
        Atom::Cosine { a, omega, phase } => a * (omega * t + phase).sin() / omega,
        Atom::DampedCosine { a, sigma, omega, phase, t_start } => {
            // integral of Re{a e^{j phase} e^{s dt}}: real part of the
            // same over s = -sigma + j omega
            let den = sigma * sigma + omega * omega;
            let dt = t - t_start;
            let env = a * (-sigma * dt).exp();
            let (c, s) = ((omega * dt + phase).cos(), (omega * dt + phase).sin());
            env * (omega * s - sigma * c) / den
        }
    }
}

// ---------------------------------------------------------------------------
// crossing search
// ---------------------------------------------------------------------------

const BISECT_STEPS: usize = 80;

/// First `t` in `[t_lo, t_hi]` with `f(t) >= 0`, scanning `n` cells and
/// bisecting the bracketing cell. `None` when no crossing is seen.
fn first_crossing(f: &dyn Fn(f64) -> f64, t_lo: f64, t_hi: f64, n: usize) -> Option<f64> {
    if f(t_lo) >= 0.0 {
        return Some(t_lo);
    }
    let h = (t_hi - t_lo) / n as f64;
    let mut prev = t_lo;
    for k in 1..=n {
        let t = if k == n { t_hi } else { t_lo + k as f64 * h };
        if f(t) >= 0.0 {
            let (mut lo, mut hi) = (prev, t);
            for _ in 0..BISECT_STEPS {
                let mid = 0.5 * (lo + hi);
                if f(mid) >= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
                if hi - lo <= f64::EPSILON * hi.abs().max(1e-30) {
                    break;
                }
            }
            return Some(hi);
        }
        prev = t;
    }
    None
}

fn grid_cells(span: f64, shortest_period: Option<f64>, refine: f64) -> usize {
    let base = match shortest_period {
        Some(p) if p > 0.0 => (200.0 * span / p).ceil().max(64.0),
        _ => 64.0,
    };
    ((base * refine).ceil() as usize).clamp(16, 4_000_000)
}

// ---------------------------------------------------------------------------
// per-method trigger solvers
// ---------------------------------------------------------------------------

struct ControlledSetup {
    /// dir = +1 regulates a rising sensor (peak); -1 a falling one.
    dir: f64,
    /// Controlled-interval ramp slope (m1 or m2), positive.
    m_ctl: f64,
    base_period: f64,
    t_cap: f64,
    /// Fixed-frequency duty ceiling on the controlled interval.
    hard_cap: Option<f64>,
}

fn threshold_trigger(
    err0: f64,
    m_eff: f64,
    w: &CycleW,
    wsgn: f64,
    t_cap: f64,
    refine: f64,
) -> Option<f64> {
    if w.is_zero() {
        // e(t) = err0 + m_eff t
        return if err0 >= 0.0 {
            Some(0.0)
        } else {
            let t = -err0 / m_eff;
            (t <= t_cap).then_some(t)
        };
    }
    let f = |t: f64| err0 + m_eff * t + wsgn * w.eval(t);
    // expanding windows keep the common case cheap
    let mut lo = 0.0;
    for hi in window_ends(t_cap) {
        let n = grid_cells(hi - lo, w.shortest_period(), refine);
        if let Some(t) = first_crossing(&|t| f(t), lo, hi, n) {
            return Some(t);
        }
        lo = hi;
    }
    None
}

fn window_ends(t_cap: f64) -> Vec<f64> {
    let mut v = Vec::new();
    let mut hi = t_cap / 32.0;
    while hi < t_cap {
        v.push(hi);
        hi *= 4.0;
    }
    v.push(t_cap);
    v
}

/// Filter output at `t` inside a breakpoint-free segment starting at
/// `(t_a, y_a)`: sum of particular responses plus the decaying
/// homogeneous correction.
fn filter_y_in_segment(atoms: &[Atom], tau: f64, t_a: f64, y_a: f64, t: f64) -> f64 {
    let yp: f64 = atoms.iter().map(|a| atom_filter_particular(a, tau, t)).sum();
    let yp_a: f64 = atoms.iter().map(|a| atom_filter_particular(a, tau, t_a)).sum();
    yp + (y_a - yp_a) * (-(t - t_a) / tau).exp()
}

struct FilterTrigger {
    t_cross: f64,
    y_at: Box<dyn Fn(f64) -> f64>,
}

/// Propagates the first-order filter over the controlled interval and
/// finds the comparator event. The raw sensor
/// `start_current + dir m_ctl t + w(t)` is filtered and compared as
/// `g = dir (y - i_c)`.
///
/// The event is edge-qualified: the comparison must first be on the
/// "not yet" side (`g < 0`, arming) before the crossing fires. This
/// mirrors the latched hardware comparator and suppresses the
/// degenerate level at the interval start, where the filter state has
/// decayed through the gated-off sensor interval. A signal that never
/// reaches the arming side is already past the command: that fires at
/// t = 0. Armed but never crossing is starvation (`None`).
fn filter_trigger(
    start_current: f64,
    dir: f64,
    m_ctl: f64,
    i_c: f64,
    tau: f64,
    y0: f64,
    w: &CycleW,
    t_cap: f64,
    base_period: f64,
    refine: f64,
) -> Option<FilterTrigger> {
    let seg = w.segments(t_cap);
    let mut y_a = y0;
    let mut armed = false;
    let mut fire = None;
    let mut pieces: Vec<(f64, f64, Vec<Atom>)> = Vec::with_capacity(seg.len());
    'outer: for k in 0..seg.len() - 1 {
        let (a, b) = (seg[k], seg[k + 1]);
        if b - a <= 0.0 {
            continue;
        }
        let mut atoms = vec![Atom::Affine { p: start_current, q: dir * m_ctl, t_ref: 0.0 }];
        w.atoms_at(0.5 * (a + b), &mut atoms);
        pieces.push((a, y_a, atoms));
        let atoms = &pieces.last().unwrap().2;
        let g = |t: f64| dir * (filter_y_in_segment(atoms, tau, a, y_a, t) - i_c);
        // the arming window is set by the filter and ramp dynamics even
        // without interference; resolve tau and the base period too
        let n = grid_cells(b - a, w.shortest_period(), refine)
            .max((6.0 * (b - a) / tau).ceil() as usize)
            .max((16.0 * (b - a) / base_period).ceil() as usize)
            .min(400_000);
        let h = (b - a) / n as f64;
        let mut prev_t = a;
        let mut prev_g = g(a);
        for j in 1..=n {
            if prev_g < 0.0 {
                armed = true;
            }
            let t = if j == n { b } else { a + j as f64 * h };
            let gt = g(t);
            if armed && gt >= 0.0 && prev_g < 0.0 {
                let (mut lo, mut hi) = (prev_t, t);
                for _ in 0..BISECT_STEPS {
                    let mid = 0.5 * (lo + hi);
                    if g(mid) >= 0.0 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                    if hi - lo <= f64::EPSILON * hi.abs().max(1e-30) {
                        break;
                    }
                }
                fire = Some(hi);
                break 'outer;
            }
            prev_t = t;
            prev_g = gt;
        }
        y_a = filter_y_in_segment(atoms, tau, a, y_a, b);
    }
    let t_cross = match fire {
        Some(t) => t,
        None if !armed => 0.0,
        None => return None,
    };
    // closure evaluating y(t) up to (and a bit past) the crossing, used
    // to read the carried state at the actual switch-off instant
    let y_at = move |t: f64| -> f64 {
        let mut idx = 0;
        for (k, piece) in pieces.iter().enumerate() {
            if piece.0 <= t {
                idx = k;
            }
        }
        let (a, ya, ref atoms) = pieces[idx];
        filter_y_in_segment(atoms, tau, a, ya, t)
    };
    Some(FilterTrigger { t_cross, y_at: Box::new(y_at) })
}

/// Saturating-integrator trigger: first `t` where
/// `E(t) - min_{s<=t} E(s)` reaches the charge budget, `E` being the
/// running integral of the current error after blanking.
fn overdrive_trigger(
    err0: f64,
    m_ctl: f64,
    dir: f64,
    budget: f64,
    blanking: f64,
    w: &CycleW,
    t_cap: f64,
    refine: f64,
) -> Option<f64> {
    if w.is_zero() {
        // pure ramp: below threshold the clamp holds, above it the
        // integral is a quadratic
        let e0 = err0 + m_ctl * blanking;
        let t0 = if e0 >= 0.0 { blanking } else { blanking - e0 / m_ctl };
        if t0 >= t_cap {
            return None;
        }
        let ea = err0 + m_ctl * t0;
        // solve ea dt + m dt^2/2 = budget
        let dt = (-ea + (ea * ea + 2.0 * m_ctl * budget).sqrt()) / m_ctl;
        let t = t0 + dt;
        return (t <= t_cap).then_some(t);
    }

    let seg = w.segments(t_cap);
    let mut e_acc = 0.0; // E at segment start
    let mut run_min = 0.0f64;
    let mut atoms: Vec<Atom> = Vec::new();
    for k in 0..seg.len() - 1 {
        let (a, b) = (seg[k].max(blanking), seg[k + 1]);
        if b <= a {
            continue;
        }
        atoms.clear();
        atoms.push(Atom::Affine { p: err0, q: m_ctl, t_ref: 0.0 });
        w.atoms_at(0.5 * (a + b), &mut atoms);
        // scale interference atoms by dir
        if dir < 0.0 {
            for at in atoms.iter_mut().skip(1) {
                match at {
                    Atom::Affine { p, q, .. } => {
                        *p = -*p;
                        *q = -*q;
                    }
                    Atom::Cosine { a, .. } | Atom::DampedCosine { a, .. } => *a = -*a,
                }
            }
        }
        let f_int = |t: f64| -> f64 { atoms.iter().map(|at| atom_integral(at, t)).sum() };
        let base = f_int(a);
        let e_of = |t: f64| e_acc + f_int(t) - base;

        let n = grid_cells(b - a, w.shortest_period(), refine).min(400_000);
        let h = (b - a) / n as f64;
        let mut prev_e = e_of(a);
        let mut prev_t = a;
        run_min = run_min.min(prev_e);
        let mut prev2: Option<(f64, f64)> = None;
        for j in 1..=n {
            let t = if j == n { b } else { a + j as f64 * h };
            let e = e_of(t);
            // polish any local minimum of E to machine precision
            if let Some((_t2, e2)) = prev2 {
                if prev_e < e2 && prev_e < e {
                    let (mut lo, mut hi) = (prev_t - h, t);
                    for _ in 0..BISECT_STEPS {
                        let m1 = lo + (hi - lo) / 3.0;
                        let m2 = hi - (hi - lo) / 3.0;
                        if e_of(m1) < e_of(m2) {
                            hi = m2;
                        } else {
                            lo = m1;
                        }
                    }
                    run_min = run_min.min(e_of(0.5 * (lo + hi)));
                }
            }
            run_min = run_min.min(e);
            if e - run_min >= budget {
                // refine the crossing with the running minimum frozen
                let frozen = run_min;
                let g = |t: f64| e_of(t) - frozen - budget;
                let (mut lo, mut hi) = (prev_t, t);
                for _ in 0..BISECT_STEPS {
                    let mid = 0.5 * (lo + hi);
                    if g(mid) >= 0.0 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                return Some(hi);
            }
            prev2 = Some((prev_t, prev_e));
            prev_t = t;
            prev_e = e;
        }
        e_acc = e_of(b);
    }
    None
}

// ---------------------------------------------------------------------------
// trigger entry point
// ---------------------------------------------------------------------------

fn setup(config: &ConverterConfig, scheme: &ModulationScheme, span_cap: f64) -> ControlledSetup {
    let dir = match scheme.extremum() {
        Extremum::Peak => 1.0,
        Extremum::Valley => -1.0,
    };
    let base = scheme.base_period(config);
    let hard_cap = match scheme.variant {
        Modulation::FixedFrequency { t_s, extremum } => Some(match extremum {
            Extremum::Peak => MAX_DUTY * t_s,
            Extremum::Valley => MAX_DUTY * t_s,
        }),
        _ => None,
    };
    let t_cap = match hard_cap {
        Some(c) => c,
        None => span_cap * base,
    };
    ControlledSetup { dir, m_ctl: scheme.controlled_slope(config), base_period: base, t_cap, hard_cap }
}

/// Solves one controlled interval: first comparator event with
/// latching, minimum-on-time floor, and (fixed frequency) duty
/// saturation. Starvation is an error; duty saturation is not.
pub fn find_trigger(ctx: &CycleContext) -> Result<TriggerOutcome> {
    find_trigger_inner(ctx, CycleW::from_spec(ctx.interference, ctx.cycle_index))
}

fn find_trigger_inner(ctx: &CycleContext, w: CycleW) -> Result<TriggerOutcome> {
    let su = setup(ctx.config, ctx.scheme, 200.0);
    let err0 = su.dir * (ctx.start_current - ctx.i_command);
    let floor = ctx.scheme.t_on_min;

    let apply_caps = |t_event: f64, filter_state: f64, t_cross: f64| -> TriggerOutcome {
        let mut t_on = t_event.max(floor);
        if let Some(cap) = su.hard_cap {
            t_on = t_on.min(cap);
        }
        TriggerOutcome { t_cross, t_on, filter_state }
    };

    match *ctx.method {
        ConditioningMethod::SlopeComp { m_s } => {
            let t = threshold_trigger(err0, su.m_ctl + m_s, &w, su.dir, su.t_cap, ctx.grid_refine);
            match t {
                Some(t_cross) => Ok(apply_caps(t_cross, 0.0, t_cross)),
                None => {
                    if su.hard_cap.is_some() {
                        Ok(apply_caps(su.t_cap, 0.0, su.t_cap))
                    } else {
                        Err(Error::TriggerStarvation { cycle: ctx.cycle_index as usize, span_s: su.t_cap })
                    }
                }
            }
        }
        ConditioningMethod::LowPassFilter { tau } => {
            // the filter event is confined: once the sensor envelope has
            // passed the command, the lagging output can neither arm nor
            // fire later than a few time constants after it
            let ramp_to_cmd = (su.dir * (ctx.i_command - ctx.start_current)).max(0.0) / su.m_ctl;
            let t_hi = (ramp_to_cmd
                + ctx.interference.a_ub / su.m_ctl
                + 25.0 * tau
                + 2.0 * su.base_period)
                .min(su.t_cap);
            let ft = filter_trigger(
                ctx.start_current,
                su.dir,
                su.m_ctl,
                ctx.i_command,
                tau,
                ctx.filter_state,
                &w,
                t_hi,
                su.base_period,
                ctx.grid_refine,
            );
            match ft {
                Some(ft) => {
                    let mut out = apply_caps(ft.t_cross, 0.0, ft.t_cross);
                    out.filter_state = (ft.y_at)(out.t_on);
                    Ok(out)
                }
                None => {
                    if su.hard_cap.is_some() {
                        // saturated: carry the filter state at the cap
                        let seg_w = w;
                        let cap = su.t_cap;
                        let ft = filter_state_at(
                            ctx.start_current,
                            su.dir,
                            su.m_ctl,
                            tau,
                            ctx.filter_state,
                            &seg_w,
                            cap,
                        );
                        Ok(TriggerOutcome { t_cross: cap, t_on: cap, filter_state: ft })
                    } else {
                        Err(Error::TriggerStarvation { cycle: ctx.cycle_index as usize, span_s: su.t_cap })
                    }
                }
            }
        }
        ConditioningMethod::OverdriveDelay { t_d, .. } => {
            let budget = ctx
                .method
                .overdrive_budget(ctx.config.r_sense)
                .expect("overdrive method has a budget");
            let t = overdrive_trigger(
                err0,
                su.m_ctl,
                su.dir,
                budget,
                ctx.blanking,
                &w,
                su.t_cap,
                ctx.grid_refine,
            );
            match t {
                Some(t_cross) => Ok(apply_caps(t_cross + t_d, 0.0, t_cross)),
                None => {
                    if su.hard_cap.is_some() {
                        Ok(apply_caps(su.t_cap, 0.0, su.t_cap))
                    } else {
                        Err(Error::TriggerStarvation { cycle: ctx.cycle_index as usize, span_s: su.t_cap })
                    }
                }
            }
        }
    }
}

/// Filter output after running over `[0, t]` with no trigger.
fn filter_state_at(
    start_current: f64,
    dir: f64,
    m_ctl: f64,
    tau: f64,
    y0: f64,
    w: &CycleW,
    t: f64,
) -> f64 {
    let seg = w.segments(t);
    let mut y = y0;
    for k in 0..seg.len() - 1 {
        let (a, b) = (seg[k], seg[k + 1]);
        if b <= a {
            continue;
        }
        let mut atoms = vec![Atom::Affine { p: start_current, q: dir * m_ctl, t_ref: 0.0 }];
        w.atoms_at(0.5 * (a + b), &mut atoms);
        y = filter_y_in_segment(&atoms, tau, a, y, b);
    }
    y
}

// ---------------------------------------------------------------------------
// cycle engine
// ---------------------------------------------------------------------------

struct DenseRecorder {
    dt: f64,
    t_next: f64,
    t0: f64,
    data: Vec<f64>,
}

impl DenseRecorder {
    fn new(dt: f64) -> Self {
        DenseRecorder { dt, t_next: 0.0, t0: 0.0, data: Vec::new() }
    }

    /// Records the linear current segment `i0 + slope (t - t_a)` on
    /// `[t_a, t_b)` in global time.
    fn segment(&mut self, t_a: f64, t_b: f64, i0: f64, slope: f64) {
        while self.t_next < t_b {
            if self.t_next >= t_a {
                self.data.push(i0 + slope * (self.t_next - t_a));
            }
            self.t_next += self.dt;
        }
    }

    fn into_waveform(self) -> DenseWaveform {
        DenseWaveform { t0: self.t0, dt: self.dt, current: self.data }
    }
}

/// Runs `n_cycles` of the loop. `i_command` holds either one constant
/// command or one value per cycle.
pub fn run_cycles(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    interference: &InterferenceSpec,
    method: &ConditioningMethod,
    i_command: &[f64],
    n_cycles: usize,
    init: InitState,
) -> Result<SimTrace> {
    run_cycles_with(
        config,
        scheme,
        interference,
        method,
        i_command,
        n_cycles,
        init,
        &SimOptions::default(),
    )
}

#[allow(clippy::too_many_arguments)]
pub fn run_cycles_with(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    interference: &InterferenceSpec,
    method: &ConditioningMethod,
    i_command: &[f64],
    n_cycles: usize,
    init: InitState,
    options: &SimOptions,
) -> Result<SimTrace> {
    if n_cycles == 0 {
        return Err(Error::validation("n_cycles", "must be at least 1"));
    }
    if i_command.is_empty() || (i_command.len() != 1 && i_command.len() != n_cycles) {
        return Err(Error::validation(
            "i_command",
            format!("length must be 1 or n_cycles, got {}", i_command.len()),
        ));
    }
    method.validate()?;

    let cmd = |n: usize| -> f64 {
        if i_command.len() == 1 {
            i_command[0]
        } else {
            i_command[n]
        }
    };

    let (ext0, filter_y0) = match init {
        InitState::Custom { i_extremum } => (i_extremum, cmd(0)),
        InitState::SteadyState => {
            let ss = interference_free_steady_state(config, scheme, method, cmd(0))?;
            (ss.extremum, ss.filter_state)
        }
    };

    run_core(config, scheme, interference, method, &cmd, n_cycles, ext0, filter_y0, options)
}

#[allow(clippy::too_many_arguments)]
fn run_core(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    interference: &InterferenceSpec,
    method: &ConditioningMethod,
    cmd: &dyn Fn(usize) -> f64,
    n_cycles: usize,
    ext0: f64,
    filter_y0: f64,
    options: &SimOptions,
) -> Result<SimTrace> {
    let su = setup(config, scheme, options.span_cap_factor);
    let nominal_period = scheme.switching_period(config);
    let tau = match *method {
        ConditioningMethod::LowPassFilter { tau } => Some(tau),
        _ => None,
    };

    let cmd_scale = (0..n_cycles.min(1024))
        .map(|n| cmd(n).abs())
        .fold(0.0f64, f64::max)
        .max(su.m_ctl * su.base_period)
        .max(1e-12);

    let mut dense = options
        .dense_samples_per_cycle
        .map(|spc| DenseRecorder::new(nominal_period / spc as f64));

    let mut samples = Vec::with_capacity(n_cycles);
    // the carried state is the previous controlled extremum for the
    // variable-frequency schemes, but the start-of-period current for
    // fixed frequency; convert using nominal steady geometry
    let mut ext = match scheme.variant {
        Modulation::FixedFrequency { t_s, .. } => {
            let t_rest = t_s - su.base_period;
            match scheme.extremum() {
                Extremum::Peak => ext0 - config.m2 * t_rest,
                Extremum::Valley => ext0 + config.m1 * t_rest,
            }
        }
        _ => ext0,
    };
    // filter_y0 is the output at the previous trigger; fixed frequency
    // reaches the next controlled interval only after the period rest
    let mut filter_y = match (tau, scheme.variant) {
        (Some(tau), Modulation::FixedFrequency { t_s, .. }) => {
            filter_y0 * (-(t_s - su.base_period) / tau).exp()
        }
        _ => filter_y0,
    };
    let mut t_global = 0.0;
    let mut t_ctl_prev = su.base_period;
    let mut terminated = Termination::CycleBudget;
    let mut saturated = 0usize;
    let mut quiet_run = 0usize;

    for n in 0..n_cycles {
        let i_c = cmd(n);

        // fixed interval first for the variable-frequency schemes
        let start_current = match scheme.variant {
            Modulation::ConstantOffTime { t_off } => {
                let i_v = ext - config.m2 * t_off;
                if let Some(d) = dense.as_mut() {
                    d.segment(t_global, t_global + t_off, ext, -config.m2);
                }
                if let Some(tau) = tau {
                    filter_y *= (-t_off / tau).exp();
                }
                t_global += t_off;
                i_v
            }
            Modulation::ConstantOnTime { t_on } => {
                let i_p = ext + config.m1 * t_on;
                if let Some(d) = dense.as_mut() {
                    d.segment(t_global, t_global + t_on, ext, config.m1);
                }
                if let Some(tau) = tau {
                    filter_y *= (-t_on / tau).exp();
                }
                t_global += t_on;
                i_p
            }
            Modulation::FixedFrequency { .. } => ext,
        };

        let ctx = CycleContext {
            config,
            scheme,
            interference,
            method,
            cycle_index: n as u64,
            start_current,
            i_command: i_c,
            filter_state: filter_y,
            blanking: options.blanking,
            grid_refine: options.grid_refine,
        };
        let out = find_trigger(&ctx)?;
        let ideal = find_trigger_inner(&ctx, CycleW::none())?;

        if let Some(cap) = su.hard_cap {
            if out.t_on >= cap {
                saturated += 1;
            }
        }

        let extremum = start_current + su.dir * su.m_ctl * out.t_on;
        if let Some(d) = dense.as_mut() {
            d.segment(t_global, t_global + out.t_on, start_current, su.dir * su.m_ctl);
        }
        t_global += out.t_on;
        filter_y = if tau.is_some() { out.filter_state } else { filter_y };

        // fixed-frequency: remainder of the period after the trigger
        if let Modulation::FixedFrequency { t_s, .. } = scheme.variant {
            let rest = (t_s - out.t_on).max(0.0);
            let back_slope = -su.dir
                * match scheme.extremum() {
                    Extremum::Peak => config.m2,
                    Extremum::Valley => config.m1,
                };
            if let Some(d) = dense.as_mut() {
                d.segment(t_global, t_global + rest, extremum, back_slope);
            }
            if let (Some(tau), true) = (tau, rest > 0.0) {
                filter_y *= (-rest / tau).exp();
            }
            t_global += rest;
            ext = extremum + back_slope * rest;
        } else {
            ext = extremum;
        }

        samples.push(CycleSample {
            n,
            t_on: out.t_on,
            i_extremum: extremum,
            i_command: i_c,
            trigger_time_deviation: out.t_on - ideal.t_on,
        });

        if extremum.abs() > 1e3 * cmd_scale {
            terminated = Termination::Diverged;
            break;
        }

        if options.stop_on_convergence && n > 0 {
            let prev = samples[n - 1].i_extremum;
            if (extremum - prev).abs() <= options.convergence_tol * cmd_scale
                && (out.t_on - t_ctl_prev).abs() <= options.convergence_tol * nominal_period
            {
                quiet_run += 1;
                if quiet_run >= 8 {
                    terminated = Termination::Converged;
                    break;
                }
            } else {
                quiet_run = 0;
            }
        }
        t_ctl_prev = out.t_on;
    }

    Ok(SimTrace {
        samples,
        dense_waveform: dense.map(DenseRecorder::into_waveform),
        terminated_by: terminated,
        saturated_cycles: saturated,
    })
}

/// Interference-free periodic steady state for a constant command,
/// found by running the (cheap, closed-form) zero-interference loop to
/// convergence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    /// Controlled extremum at the trigger.
    pub extremum: f64,
    /// Controlled-interval duration.
    pub t_ctl: f64,
    /// Filter output at the trigger (equals the command when the
    /// minimum-on-time floor is inactive).
    pub filter_state: f64,
}

pub fn interference_free_steady_state(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    method: &ConditioningMethod,
    i_c: f64,
) -> Result<SteadyState> {
    let zero = InterferenceSpec::zero();
    let opts = SimOptions { stop_on_convergence: true, convergence_tol: 1e-13, ..Default::default() };
    let trace = run_core(
        config,
        scheme,
        &zero,
        method,
        &|_| i_c,
        512,
        i_c,
        i_c,
        &opts,
    )?;
    let last = trace.samples.last().expect("at least one cycle ran");
    // recover the filter state by replaying the final cycle
    let su = setup(config, scheme, 200.0);
    let start_current = last.i_extremum - su.dir * su.m_ctl * last.t_on;
    let filter_state = match *method {
        ConditioningMethod::LowPassFilter { tau } => {
            let t_fix = match scheme.variant {
                Modulation::ConstantOffTime { t_off } => t_off,
                Modulation::ConstantOnTime { t_on } => t_on,
                Modulation::FixedFrequency { t_s, .. } => t_s - last.t_on,
            };
            replay_filter_fixed_point(start_current, su.dir, su.m_ctl, tau, t_fix, last.t_on)
        }
        _ => i_c,
    };
    Ok(SteadyState { extremum: last.i_extremum, t_ctl: last.t_on, filter_state })
}

/// Periodic fixed point of the zero-interference filter recursion:
/// the state at the trigger satisfies
/// `y* = response(y* e^{-t_fix/tau}; ramp over t_ctl)`.
fn replay_filter_fixed_point(
    start_current: f64,
    dir: f64,
    m_ctl: f64,
    tau: f64,
    t_fix: f64,
    t_ctl: f64,
) -> f64 {
    // y(t_ctl) = yp(t_ctl) + (y0 d_fix - yp(0)) e^{-t_ctl/tau}, solve y0 = y(t_ctl)
    let atoms = [Atom::Affine { p: start_current, q: dir * m_ctl, t_ref: 0.0 }];
    let yp_end: f64 = atoms.iter().map(|a| atom_filter_particular(a, tau, t_ctl)).sum();
    let yp_0: f64 = atoms.iter().map(|a| atom_filter_particular(a, tau, 0.0)).sum();
    let d_fix = (-t_fix / tau).exp();
    let d_ctl = (-t_ctl / tau).exp();
    (yp_end - yp_0 * d_ctl) / (1.0 - d_fix * d_ctl)
}

/// Per-cycle small-signal gain of the full nonlinear map, by central
/// differences around the converged steady state: perturb the carried
/// extremum and measure the one-cycle contraction of the deviation.
pub fn measured_cycle_gain(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    interference: &InterferenceSpec,
    method: &ConditioningMethod,
    i_c: f64,
) -> Result<f64> {
    let opts = SimOptions { stop_on_convergence: true, convergence_tol: 1e-13, ..Default::default() };
    let base = run_cycles_with(
        config,
        scheme,
        interference,
        method,
        &[i_c],
        800,
        InitState::SteadyState,
        &opts,
    )?;
    if base.terminated_by != Termination::Converged {
        return Err(Error::Numerical(
            "steady state did not converge; cycle gain undefined".into(),
        ));
    }
    let e_star = base.samples.last().unwrap().i_extremum;
    let eps = 1e-6 * e_star.abs().max(scheme.base_period(config) * scheme.controlled_slope(config));
    let one = |e0: f64| -> Result<f64> {
        let t = run_cycles(
            config,
            scheme,
            interference,
            method,
            &[i_c],
            1,
            InitState::Custom { i_extremum: e0 },
        )?;
        Ok(t.samples[0].i_extremum)
    };
    Ok((one(e_star + eps)? - one(e_star - eps)?) / (2.0 * eps))
}

/// Static mapping from command to controlled-interval duration at a
/// frozen initial state (the interference-free steady state of the
/// median command). Exercises continuity of the within-cycle map.
pub fn static_mapping(
    config: &ConverterConfig,
    scheme: &ModulationScheme,
    interference: &InterferenceSpec,
    method: &ConditioningMethod,
    i_c_grid: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if i_c_grid.is_empty() {
        return Err(Error::validation("i_c_grid", "must be non-empty"));
    }
    let mid = i_c_grid[i_c_grid.len() / 2];
    let ss = interference_free_steady_state(config, scheme, method, mid)?;
    let su = setup(config, scheme, 200.0);
    let start_current = ss.extremum - su.dir * su.m_ctl * ss.t_ctl;
    let mut out = Vec::with_capacity(i_c_grid.len());
    for &i_c in i_c_grid {
        let ctx = CycleContext {
            config,
            scheme,
            interference,
            method,
            cycle_index: 0,
            start_current,
            i_command: i_c,
            filter_state: ss.filter_state,
            blanking: 0.0,
            grid_refine: 1.0,
        };
        let t = find_trigger(&ctx)?;
        out.push((i_c, t.t_on));
    }
    Ok(out)
}

/// Steady-state classification of a trace's tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TailBehavior {
    /// Period-1: the extremum settles to a fixed point.
    Converged,
    /// Period-q orbit (subharmonic at k/q of the switching rate).
    Periodic { q: usize },
    /// Bounded but no short period found.
    Irregular,
    Diverged,
}

/// Classifies the last `4*max_period` samples. `scale` sets the
/// absolute tolerance for "stationary" (typically the command).
pub fn classify_tail(trace: &SimTrace, max_period: usize, scale: f64) -> TailBehavior {
    if trace.terminated_by == Termination::Diverged {
        return TailBehavior::Diverged;
    }
    let xs: Vec<f64> = trace.samples.iter().map(|s| s.i_extremum).collect();
    let k = (4 * max_period).min(xs.len());
    let tail = &xs[xs.len() - k..];
    let lo = tail.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let range = hi - lo;
    let tol = 1e-7 * scale.abs().max(1e-12);
    if range <= tol {
        return TailBehavior::Converged;
    }
    for q in 2..=max_period {
        if tail.len() < 2 * q {
            break;
        }
        let err = (q..tail.len())
            .map(|i| (tail[i] - tail[i - q]).abs())
            .fold(0.0f64, f64::max);
        if err <= (1e-5 * range).max(tol) {
            return TailBehavior::Periodic { q };
        }
    }
    TailBehavior::Irregular
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interference::{PhaseMode, Waveform};
    use std::f64::consts::PI;

    fn unit_config() -> ConverterConfig {
        // m1 = m2 = 1 A/us
        ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap()
    }

    fn cot_peak() -> ModulationScheme {
        ModulationScheme::constant_off_time(1e-6, 0.0).unwrap()
    }

    #[test]
    fn deadbeat_step_without_conditioning() {
        let c = unit_config();
        let s = cot_peak();
        let zero = InterferenceSpec::zero();
        let m = ConditioningMethod::SlopeComp { m_s: 0.0 };
        // steady at 2 A, step to 3 A
        let cmds: Vec<f64> = std::iter::once(2.0).chain(std::iter::repeat(3.0).take(5)).collect();
        let trace = run_cycles(&c, &s, &zero, &m, &cmds, 6, InitState::SteadyState).unwrap();
        // one cycle after the step the peak lands exactly on the command
        assert!((trace.samples[1].i_extremum - 3.0).abs() < 1e-12);
        assert!((trace.samples[0].i_extremum - 2.0).abs() < 1e-12);
    }

    #[test]
    fn slope_comp_geometric_error_decay() {
        let c = unit_config();
        let s = cot_peak();
        let zero = InterferenceSpec::zero();
        let m_s = 0.5e6;
        let m = ConditioningMethod::SlopeComp { m_s };
        let cmds: Vec<f64> = std::iter::once(2.0).chain(std::iter::repeat(3.0).take(29)).collect();
        let trace = run_cycles(&c, &s, &zero, &m, &cmds, 30, InitState::SteadyState).unwrap();
        // closed-form oracle: deviation from the final value contracts
        // by exactly m_s/(m1+m_s) each cycle
        let a = m_s / (c.m1 + m_s);
        let fin = trace.samples.last().unwrap().i_extremum;
        for n in 2..12 {
            let e0 = trace.samples[n].i_extremum - fin;
            let e1 = trace.samples[n + 1].i_extremum - fin;
            if e0.abs() < 1e-4 {
                break;
            }
            assert!(
                (e1 / e0 - a).abs() < 1e-9,
                "cycle {n}: ratio {} vs {a}",
                e1 / e0
            );
        }
        // gain error: steady peak sits m_s * t_on below the command
        let t_on = trace.samples.last().unwrap().t_on;
        assert!((fin - (3.0 - m_s * t_on)).abs() < 1e-9);
    }

    #[test]
    fn find_trigger_monotone_ramp_is_analytic() {
        let c = unit_config();
        let s = cot_peak();
        let zero = InterferenceSpec::zero();
        let m = ConditioningMethod::SlopeComp { m_s: 0.0 };
        let ctx = CycleContext {
            config: &c,
            scheme: &s,
            interference: &zero,
            method: &m,
            cycle_index: 0,
            start_current: 1.0,
            i_command: 2.5,
            filter_state: 2.5,
            blanking: 0.0,
            grid_refine: 1.0,
        };
        let out = find_trigger(&ctx).unwrap();
        assert!((out.t_on - 1.5e-6).abs() < 1e-12);
    }

    #[test]
    fn find_trigger_takes_earliest_of_three_crossings() {
        let c = unit_config();
        let s = cot_peak();
        // strong fast sinusoid on a slow ramp: multiple crossings
        let kind = WaveformKind::sinusoid(0.4, 2.0 * PI * 4e6, 0.9);
        let spec = InterferenceSpec::from_waveform(kind.clone(), 2.0 * PI * 4e6).unwrap();
        let m = ConditioningMethod::SlopeComp { m_s: 0.0 };
        let ctx = CycleContext {
            config: &c,
            scheme: &s,
            interference: &spec,
            method: &m,
            cycle_index: 0,
            start_current: 1.0,
            i_command: 2.0,
            filter_state: 2.0,
            blanking: 0.0,
            grid_refine: 1.0,
        };
        let out = find_trigger(&ctx).unwrap();
        // dense-grid + bisection oracle, written independently
        let f = |t: f64| 1.0 + 1e6 * t + kind.eval(t, 0.0) - 2.0;
        let n = 2_000_000;
        let t_max = 4e-6;
        let mut oracle = None;
        assert!(f(0.0) < 0.0);
        for k in 1..=n {
            let t = k as f64 * t_max / n as f64;
            if f(t) >= 0.0 {
                let (mut lo, mut hi) = ((k - 1) as f64 * t_max / n as f64, t);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if f(mid) >= 0.0 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                oracle = Some(hi);
                break;
            }
        }
        let oracle = oracle.unwrap();
        assert!(
            (out.t_cross - oracle).abs() < 1e-12,
            "got {} vs oracle {}",
            out.t_cross,
            oracle
        );
        // verify multiple crossings actually exist after the first
        let mut crossings = 0;
        let mut prev = f(out.t_cross + 1e-9);
        for k in 0..200_000 {
            let t = out.t_cross + 1e-9 + k as f64 * 2e-6 / 200_000.0;
            let v = f(t);
            if (prev < 0.0) != (v < 0.0) {
                crossings += 1;
            }
            prev = v;
        }
        assert!(crossings >= 2, "expected re-crossings, saw {crossings}");
    }

    #[test]
    fn find_trigger_starves_above_cycle_maximum() {
        let c = unit_config();
        let s = cot_peak();
        let zero = InterferenceSpec::zero();
        let m = ConditioningMethod::SlopeComp { m_s: 0.0 };
        let ctx = CycleContext {
            config: &c,
            scheme: &s,
            interference: &zero,
            method: &m,
            cycle_index: 3,
            start_current: 1.0,
            // beyond the 200-base-period cap at slope 1 A/us
            i_command: 1.0 + 1e6 * 1e-6 * 500.0,
            filter_state: 0.0,
            blanking: 0.0,
            grid_refine: 1.0,
        };
        assert!(matches!(
            find_trigger(&ctx),
            Err(Error::TriggerStarvation { cycle: 3, .. })
        ));
    }

    #[test]
    fn trigger_refinement_under_grid_halving() {
        let c = unit_config();
        let s = cot_peak();
        let kind = WaveformKind::Composite {
            parts: vec![
                WaveformKind::sinusoid(0.15, 2.0 * PI * 3e6, 0.4),
                WaveformKind::trapezoid(0.1, 2.0 * PI * 1e6, 1.5e6, 1.1).unwrap(),
            ],
        };
        let spec = InterferenceSpec::from_waveform(kind, 2.0 * PI * 1e6).unwrap();
        for method in [
            ConditioningMethod::SlopeComp { m_s: 0.3e6 },
            ConditioningMethod::LowPassFilter { tau: 0.4e-6 },
            ConditioningMethod::OverdriveDelay { tau_c: 20e-9, v_trig: 0.05, t_d: 2e-9 },
        ] {
            let mut t = [0.0; 2];
            for (i, refine) in [1.0, 2.0].into_iter().enumerate() {
                let ctx = CycleContext {
                    config: &c,
                    scheme: &s,
                    interference: &spec,
                    method: &method,
                    cycle_index: 1,
                    start_current: 1.0,
                    i_command: 2.2,
                    filter_state: 2.2 * (-1.0f64).exp(),
                    blanking: 0.0,
                    grid_refine: refine,
                };
                t[i] = find_trigger(&ctx).unwrap().t_on;
            }
            assert!(
                (t[0] - t[1]).abs() < 1e-10,
                "{method:?}: {} vs {}",
                t[0],
                t[1]
            );
        }
    }

    #[test]
    fn overdrive_quadratic_delay_and_limits() {
        let c = unit_config();
        let s = cot_peak();
        let zero = InterferenceSpec::zero();
        let v_trig = 0.05;
        let tau_c = 20e-9;
        let t_d = 3e-9;
        let m = ConditioningMethod::OverdriveDelay { tau_c, v_trig, t_d };
        let budget = v_trig * tau_c / c.r_sense; // A*s
        let ctx = CycleContext {
            config: &c,
            scheme: &s,
            interference: &zero,
            method: &m,
            cycle_index: 0,
            start_current: 1.0,
            i_command: 2.0,
            filter_state: 0.0,
            blanking: 0.0,
            grid_refine: 1.0,
        };
        let out = find_trigger(&ctx).unwrap();
        let t0 = 1e-6; // threshold crossing of the bare ramp
        let expect = t0 + (2.0 * budget / c.m1).sqrt() + t_d;
        assert!((out.t_on - expect).abs() < 1e-12, "t_on {}", out.t_on);

        // budget -> 0 recovers the ideal comparator
        let m0 = ConditioningMethod::OverdriveDelay { tau_c: 1e-18, v_trig: 1e-9, t_d: 0.0 };
        let ctx0 = CycleContext { method: &m0, ..ctx };
        let out0 = find_trigger(&ctx0).unwrap();
        assert!((out0.t_on - t0).abs() < 1e-12);
    }

    #[test]
    fn overdrive_steady_offset_is_m1_tod() {
        let c = unit_config();
        let s = cot_peak();
        let zero = InterferenceSpec::zero();
        let v_trig = 0.05;
        let tau_c = 20e-9;
        let m = ConditioningMethod::OverdriveDelay { tau_c, v_trig, t_d: 0.0 };
        let budget = v_trig * tau_c / c.r_sense;
        let trace = run_cycles(&c, &s, &zero, &m, &[2.0], 4, InitState::SteadyState).unwrap();
        let t_od = (2.0 * budget / c.m1).sqrt();
        let i_p = trace.samples.last().unwrap().i_extremum;
        assert!(
            (i_p - (2.0 + c.m1 * t_od)).abs() < 1e-9,
            "i_p = {i_p}, expected offset {}",
            c.m1 * t_od
        );
    }

    #[test]
    fn filter_carry_matches_continuous_time_oracle() {
        let c = unit_config();
        let s = cot_peak();
        let tau = 0.5e-6;
        let m = ConditioningMethod::LowPassFilter { tau };
        let kind = WaveformKind::sinusoid(0.05, 2.0 * PI * 2e6, 0.7);
        let spec = InterferenceSpec::from_waveform(kind.clone(), 2.0 * PI * 2e6).unwrap();
        let cmds = [2.0];
        let trace = run_cycles(&c, &s, &spec, &m, &cmds, 12, InitState::SteadyState).unwrap();

        // brute-force continuous-time oracle: RK4 over the same cycles
        let ss = interference_free_steady_state(&c, &s, &m, 2.0).unwrap();
        let mut y = ss.filter_state;
        let mut ip = ss.extremum;
        let t_off = 1e-6;
        for n in 0..12 {
            // off interval: input 0
            let steps = 40_000;
            let h = t_off / steps as f64;
            for _ in 0..steps {
                // dy/dt = (0 - y)/tau, integrate exactly per step
                y += h * 0.0;
                y = y * (-h / tau).exp();
            }
            let i_v = ip - c.m2 * t_off;
            // on interval to the simulated trigger
            let t_on = trace.samples[n].t_on;
            let steps = 80_000;
            let h = t_on / steps as f64;
            let mut t = 0.0;
            for _ in 0..steps {
                let x = |tt: f64| i_v + c.m1 * tt + kind.eval(tt, 0.0);
                let fy = |tt: f64, yy: f64| (x(tt) - yy) / tau;
                let k1 = fy(t, y);
                let k2 = fy(t + h / 2.0, y + h / 2.0 * k1);
                let k3 = fy(t + h / 2.0, y + h / 2.0 * k2);
                let k4 = fy(t + h, y + h * k3);
                y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                t += h;
            }
            // at the trigger the filter output equals the command
            assert!(
                (y - 2.0).abs() < 1e-9,
                "cycle {n}: oracle filter output {y} != command"
            );
            ip = i_v + c.m1 * t_on;
            y = 2.0; // re-sync to kill accumulated RK4 drift
        }
    }

    #[test]
    fn filter_steady_trigger_matches_analytic_crossing() {
        let c = unit_config();
        let s = cot_peak();
        let tau = 0.5e-6;
        let m = ConditioningMethod::LowPassFilter { tau };
        let zero = InterferenceSpec::zero();
        let trace = run_cycles(&c, &s, &zero, &m, &[2.0], 40, InitState::SteadyState).unwrap();
        let last = trace.samples.last().unwrap();
        // ripple balance pins t_on* at m2 t_off / m1
        assert!((last.t_on - 1e-6).abs() < 1e-10);
        // analytic steady peak from the filtered-ramp crossing:
        // I_p = (1-b)I_c/(1-d) - d (m1 t*)/(1-d) + m1 tau
        let (t_on, t_off) = (1e-6f64, 1e-6f64);
        let d = (-t_on / tau).exp();
        let b = (-(t_on + t_off) / tau).exp();
        let i_p = (1.0 - b) * 2.0 / (1.0 - d) - d * c.m1 * t_on / (1.0 - d) + c.m1 * tau;
        assert!(
            (last.i_extremum - i_p).abs() < 1e-9,
            "sim {} vs analytic {}",
            last.i_extremum,
            i_p
        );
    }

    #[test]
    fn static_mapping_linear_and_jumpy() {
        let c = unit_config();
        let s = cot_peak();
        let zero = InterferenceSpec::zero();
        let none = ConditioningMethod::SlopeComp { m_s: 0.0 };
        let grid: Vec<f64> = (0..40).map(|k| 1.5 + 0.05 * k as f64).collect();
        let map = static_mapping(&c, &s, &zero, &none, &grid).unwrap();
        for w in map.windows(2) {
            let slope = (w[1].1 - w[0].1) / (w[1].0 - w[0].0);
            assert!((slope - 1.0 / c.m1).abs() < 1e-9 / c.m1);
        }

        // strong sinusoid, no conditioning: jump discontinuity
        let kind = WaveformKind::sinusoid(0.3, 2.0 * PI * 3e6, 0.2);
        let spec = InterferenceSpec::from_waveform(kind, 2.0 * PI * 3e6).unwrap();
        let fine: Vec<f64> = (0..4000).map(|k| 1.5 + 2.0 * k as f64 / 4000.0).collect();
        let map = static_mapping(&c, &s, &spec, &none, &fine).unwrap();
        let res = 2.0 / 4000.0;
        let max_gap = map.windows(2).map(|w| w[1].1 - w[0].1).fold(0.0f64, f64::max);
        assert!(
            max_gap > 10.0 * res / c.m1,
            "expected a jump, max gap {max_gap}"
        );

        // a slope meeting the continuity certificate rotates the map
        // continuous: max adjacent gap shrinks towards the grid resolution
        let ms = ConditioningMethod::SlopeComp { m_s: 6e6 }; // m1 + m_s > A*omega
        let map = static_mapping(&c, &s, &spec, &ms, &fine).unwrap();
        let max_gap = map.windows(2).map(|w| w[1].1 - w[0].1).fold(0.0f64, f64::max);
        assert!(
            max_gap < 3.0 * res / (c.m1),
            "conditioned map should be continuous, max gap {max_gap}"
        );
    }

    #[test]
    fn divergence_is_reported_not_fatal() {
        let c = unit_config();
        let s = cot_peak();
        // per-cycle phase-locked falling ramp with slew above m1+m_s
        // destabilizes the loop
        let kind = WaveformKind::trapezoid_falling_at(0.8, 2.0 * PI * 0.25e6, 2.5e6, 1e-6).unwrap();
        let spec = InterferenceSpec::from_waveform(kind, 2.0 * PI * 0.25e6).unwrap();
        let none = ConditioningMethod::SlopeComp { m_s: 0.0 };
        let cmds: Vec<f64> = std::iter::once(2.0).chain(std::iter::repeat(2.4).take(99)).collect();
        let trace = run_cycles(&c, &s, &spec, &none, &cmds, 100, InitState::SteadyState).unwrap();
        // either it diverges or it lands in a bounded non-period-1 orbit
        let cls = classify_tail(&trace, 8, 2.4);
        assert!(
            trace.terminated_by == Termination::Diverged || cls != TailBehavior::Converged,
            "expected instability, got {cls:?}"
        );
    }

    #[test]
    fn fixed_frequency_duty_saturation_reported() {
        let c = unit_config();
        let s = ModulationScheme::fixed_frequency(2e-6, Extremum::Peak, 10e-9).unwrap();
        let zero = InterferenceSpec::zero();
        let none = ConditioningMethod::SlopeComp { m_s: 0.0 };
        // command far above reachable peak: saturates at MAX_DUTY
        let trace = run_cycles(&c, &s, &zero, &none, &[50.0], 3, InitState::Custom { i_extremum: 0.0 })
            .unwrap();
        assert!(trace.saturated_cycles > 0);
        assert!(trace.samples.iter().all(|smp| smp.t_on <= MAX_DUTY * 2e-6 + 1e-18));
    }

    #[test]
    fn valley_control_mirror_deadbeat() {
        let c = unit_config();
        let s = ModulationScheme::constant_on_time(1e-6, 0.0).unwrap();
        let zero = InterferenceSpec::zero();
        let none = ConditioningMethod::SlopeComp { m_s: 0.0 };
        let cmds: Vec<f64> = std::iter::once(2.0).chain(std::iter::repeat(1.5).take(4)).collect();
        let trace = run_cycles(&c, &s, &zero, &none, &cmds, 5, InitState::SteadyState).unwrap();
        assert!((trace.samples[0].i_extremum - 2.0).abs() < 1e-12);
        assert!((trace.samples[1].i_extremum - 1.5).abs() < 1e-12);
    }

    #[test]
    fn random_per_cycle_phase_is_reproducible() {
        let c = unit_config();
        let s = cot_peak();
        let w = Waveform {
            kind: WaveformKind::sinusoid(0.1, 2.0 * PI * 2e6, 0.0),
            phase_mode: PhaseMode::RandomPerCycle,
            seed: 7,
        };
        let spec = InterferenceSpec::from_waveform_with(w, 2.0 * PI * 2e6).unwrap();
        let m = ConditioningMethod::SlopeComp { m_s: 0.5e6 };
        let run = || {
            run_cycles(&c, &s, &spec, &m, &[2.0], 50, InitState::SteadyState)
                .unwrap()
                .samples
                .iter()
                .map(|x| x.i_extremum)
                .collect::<Vec<_>>()
        };
        assert_eq!(run(), run());
    }
}
