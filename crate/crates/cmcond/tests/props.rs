//! Property tests over randomized parameters: the structural
//! invariants every module promises.

use proptest::prelude::*;
use std::f64::consts::PI;

use cmcond::config::parse_quantity;
use cmcond::interference::{b_of_lines, InterferenceSpec, WaveformKind};
use cmcond::types::{normalize, ConditioningMethod, ConverterConfig, ModulationScheme};

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Scaling every current-domain quantity by one factor leaves all
    /// normalized quantities unchanged.
    #[test]
    fn normalization_scale_invariance(
        k in 0.01f64..100.0,
        m1 in 0.5f64..5.0,
        m2 in 0.5f64..5.0,
        amp in 0.001f64..0.2,
        f in 0.2f64..5.0,
        ms in 0.0f64..3.0,
    ) {
        let base = ConverterConfig::from_slopes(m1 * 1e6, m2 * 1e6, 0.01).unwrap();
        let scaled = ConverterConfig::from_slopes(k * m1 * 1e6, k * m2 * 1e6, 0.01).unwrap();
        let scheme = ModulationScheme::constant_off_time(1e-6, 1e-8).unwrap();
        let omega = 2.0 * PI * f * 1e6;
        let spec = |kk: f64| InterferenceSpec::from_waveform(
            WaveformKind::sinusoid(kk * amp, omega, 0.4), omega).unwrap();
        let m = |kk: f64| ConditioningMethod::SlopeComp { m_s: kk * ms * 1e6 };
        let a = normalize(&base, &scheme, &spec(1.0), &m(1.0));
        let b = normalize(&scaled, &scheme, &spec(k), &m(k));
        prop_assert!(rel_close(a.m_s_hat.unwrap(), b.m_s_hat.unwrap(), 1e-12));
        prop_assert!(rel_close(a.lambda_hat.unwrap(), b.lambda_hat.unwrap(), 1e-12));
        prop_assert!(rel_close(a.a_hat.unwrap(), b.a_hat.unwrap(), 1e-12));
        prop_assert!(rel_close(a.omega_hat.unwrap(), b.omega_hat.unwrap(), 1e-12));
    }

    /// Generated samples respect the declared amplitude bound and the
    /// declared slew bound (finite differences, 1% headroom).
    #[test]
    fn waveform_class_bounds_hold(
        amp in 0.001f64..0.3,
        f in 0.3f64..8.0,
        slew_scale in 1.0f64..4.0,
        phase in 0.0f64..(2.0 * PI),
        pick in 0usize..3,
    ) {
        let omega = 2.0 * PI * f * 1e6;
        let kind = match pick {
            0 => WaveformKind::sinusoid(amp, omega, phase),
            1 => WaveformKind::trapezoid(amp, omega, slew_scale * 2.0 * amp * omega / PI, phase)
                .unwrap(),
            _ => WaveformKind::damped_ring(amp, omega, 0.4 * omega, 0.1e-6),
        };
        let a_ub = kind.amplitude_bound();
        let lam = kind.lipschitz_bound();
        let span = 3.0 / (f * 1e6);
        let n = 10_000;
        let h = span / n as f64;
        let mut prev = kind.eval(0.0, 0.0);
        for i in 1..=n {
            let v = kind.eval(i as f64 * h, 0.0);
            prop_assert!(v.abs() <= a_ub * (1.0 + 1e-9));
            prop_assert!(((v - prev) / h).abs() <= 1.01 * lam + 1e-9);
            prev = v;
        }
    }

    /// B is homogeneous of degree one in amplitude.
    #[test]
    fn b_functional_amplitude_homogeneity(
        amp in 0.001f64..0.2,
        f in 0.3f64..5.0,
        c in 1.5f64..10.0,
        phase in 0.0f64..(2.0 * PI),
    ) {
        let omega = 2.0 * PI * f * 1e6;
        let slew = 2.0 * amp * omega / PI * 2.0;
        let b1 = b_of_lines(&WaveformKind::trapezoid(amp, omega, slew, phase).unwrap()).unwrap();
        let b2 = b_of_lines(&WaveformKind::trapezoid(c * amp, omega, c * slew, phase).unwrap())
            .unwrap();
        prop_assert!(rel_close(b2, c * b1, 1e-12));
    }

    /// SI suffix parsing: value scaling is exact for the prefix table.
    #[test]
    fn quantity_prefix_scaling(x in 0.001f64..999.0) {
        let cases = [
            (format!("{x}nH"), x * 1e-9, "H"),
            (format!("{x}us"), x * 1e-6, "s"),
            (format!("{x}mV"), x * 1e-3, "V"),
            (format!("{x}kHz"), x * 1e3 * 2.0 * PI, "rad/s"),
            (format!("{x}"), x, "A"),
        ];
        for (s, want, dim) in cases {
            let got = parse_quantity(&s, dim).unwrap();
            prop_assert!(rel_close(got, want, 1e-12), "{s} -> {got} vs {want}");
        }
    }

    /// The first comparator event never precedes the floor and the
    /// extremum is consistent with the ramp geometry.
    #[test]
    fn trigger_respects_floor_and_geometry(
        ms in 0.0f64..2.0,
        amp in 0.0f64..0.2,
        phase in 0.0f64..(2.0 * PI),
        floor in 0.0f64..0.3,
    ) {
        let c = ConverterConfig::from_slopes(1e6, 1e6, 0.01).unwrap();
        let s = ModulationScheme::constant_off_time(1e-6, floor * 1e-6).unwrap();
        let omega = 2.0 * PI * 3e6;
        let spec = if amp == 0.0 {
            InterferenceSpec::zero()
        } else {
            InterferenceSpec::from_waveform(WaveformKind::sinusoid(amp, omega, phase), omega)
                .unwrap()
        };
        let method = ConditioningMethod::SlopeComp { m_s: ms * 1e6 };
        let tr = cmcond::sim::run_cycles(
            &c,
            &s,
            &spec,
            &method,
            &[2.0],
            20,
            cmcond::sim::InitState::SteadyState,
        )
        .unwrap();
        for smp in &tr.samples {
            prop_assert!(smp.t_on >= floor * 1e-6 - 1e-18);
            prop_assert!(smp.i_extremum.is_finite());
        }
    }
}
