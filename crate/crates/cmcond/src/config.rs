//! JSON run configuration: the converter, modulation scheme,
//! interference class, and conditioning method, with SI suffix strings
//! ("240nH", "100ns") parsed deterministically and schema errors
//! reported with JSON-pointer paths.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::interference::{InterferenceSpec, PhaseMode, Waveform, WaveformKind};
use crate::types::{ConditioningMethod, ConverterConfig, Extremum, Modulation, ModulationScheme};

/// Everything one run needs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub converter: ConverterConfig,
    pub scheme: ModulationScheme,
    pub interference: InterferenceSpec,
    pub method: ConditioningMethod,
}

/// The documented hardware preset: 12 V to 2 V constant on-time buck,
/// 240 nH / 100 uF / 0.2 ohm / 10 mohm sense, 100 ns on time. The
/// interference entry interprets the datasheet pair (f_lb = 5 MHz,
/// v_I = 4 mV) as the class frequency floor and sense-referred
/// amplitude, with a decaying switch-edge ring as the waveform.
pub fn table1_preset() -> RunConfig {
    let converter = ConverterConfig::buck(12.0, 2.0, 240e-9, 100e-6, 0.2, 0.01)
        .expect("preset values are valid");
    let scheme = ModulationScheme::constant_on_time(100e-9, 10e-9).expect("preset scheme");
    let a_ub = 0.004 / 0.01; // 4 mV over 10 mohm, in amperes
    let omega_l = 2.0 * std::f64::consts::PI * 5e6;
    let ring = WaveformKind::damped_ring(a_ub, 2.0 * std::f64::consts::PI * 8e6, 8e6, 0.0);
    let lambda = ring.lipschitz_bound();
    let mut interference = InterferenceSpec::class_bounds(a_ub, omega_l, lambda, 0.0)
        .and_then(|s| s.with_waveform(Waveform::fixed(ring)))
        .expect("preset interference");
    // the ring's spectrum is not integrable against 1/omega
    interference.b_functional = None;
    RunConfig {
        converter,
        scheme,
        interference,
        method: ConditioningMethod::SlopeComp { m_s: 0.0 },
    }
}

pub fn load_config_str(json: &str) -> Result<RunConfig> {
    let v: Value = serde_json::from_str(json)?;
    parse_config(&v)
}

pub fn load_config_file(path: &std::path::Path) -> Result<RunConfig> {
    load_config_str(&std::fs::read_to_string(path)?)
}

fn err_at(pointer: &str, reason: impl Into<String>) -> Error {
    Error::Config { pointer: pointer.to_string(), reason: reason.into() }
}

// SI suffix parsing --------------------------------------------------------

const PREFIXES: &[(&str, f64)] = &[
    ("p", 1e-12),
    ("n", 1e-9),
    ("u", 1e-6),
    ("µ", 1e-6),
    ("m", 1e-3),
    ("k", 1e3),
    ("M", 1e6),
    ("G", 1e9),
];

/// Accepted unit spellings per dimension, with the factor the unit word
/// itself contributes (handles A/us = 1e6 A/s).
fn unit_words(dim: &str) -> &'static [(&'static str, f64)] {
    match dim {
        "V" => &[("V", 1.0)],
        "A" => &[("A", 1.0)],
        "H" => &[("H", 1.0)],
        "F" => &[("F", 1.0)],
        "s" => &[("s", 1.0)],
        "Ohm" => &[("Ohm", 1.0), ("ohm", 1.0), ("R", 1.0)],
        "A/s" => &[("A/s", 1.0), ("A/us", 1e6), ("A/µs", 1e6)],
        "rad/s" => &[("rad/s", 1.0), ("Hz", 2.0 * std::f64::consts::PI)],
        _ => &[],
    }
}

/// Parses "240nH", "100ns", "10m", "0.2", or a bare number into base SI
/// units of the given dimension.
pub fn parse_quantity(raw: &str, dim: &str) -> std::result::Result<f64, String> {
    let s = raw.trim();
    // longest numeric head
    let mut head_len = 0;
    for i in (1..=s.len()).rev() {
        if s.is_char_boundary(i) && s[..i].parse::<f64>().is_ok() {
            head_len = i;
            break;
        }
    }
    if head_len == 0 {
        return Err(format!("`{raw}` has no leading number"));
    }
    let value: f64 = s[..head_len].parse().unwrap();
    let suffix = s[head_len..].trim();
    if suffix.is_empty() {
        return Ok(value);
    }
    // strip a unit word from the end, if present
    let mut best: Option<(&str, f64)> = None;
    for &(word, factor) in unit_words(dim) {
        if suffix.ends_with(word) {
            match best {
                Some((w, _)) if w.len() >= word.len() => {}
                _ => best = Some((word, factor)),
            }
        }
    }
    let (prefix_str, unit_factor) = match best {
        Some((word, factor)) => (&suffix[..suffix.len() - word.len()], factor),
        None => (suffix, 1.0),
    };
    if prefix_str.is_empty() {
        return Ok(value * unit_factor);
    }
    for &(p, f) in PREFIXES {
        if prefix_str == p {
            return Ok(value * f * unit_factor);
        }
    }
    Err(format!(
        "`{raw}` has unrecognized suffix `{suffix}` for a quantity in {dim}"
    ))
}

fn get_quantity(v: &Value, pointer: &str, dim: &str) -> Result<f64> {
    let field = v
        .pointer(pointer)
        .ok_or_else(|| err_at(pointer, "missing required field"))?;
    match field {
        Value::Number(n) => n
            .as_f64()
            .ok_or_else(|| err_at(pointer, "number out of f64 range")),
        Value::String(s) => parse_quantity(s, dim).map_err(|e| err_at(pointer, e)),
        other => Err(err_at(pointer, format!("expected number or string, got {other}"))),
    }
}

fn get_quantity_opt(v: &Value, pointer: &str, dim: &str) -> Result<Option<f64>> {
    if v.pointer(pointer).is_none() {
        return Ok(None);
    }
    get_quantity(v, pointer, dim).map(Some)
}

fn get_str<'a>(v: &'a Value, pointer: &str) -> Result<&'a str> {
    v.pointer(pointer)
        .and_then(Value::as_str)
        .ok_or_else(|| err_at(pointer, "missing or non-string field"))
}

// section parsers -----------------------------------------------------------

fn parse_config(v: &Value) -> Result<RunConfig> {
    let converter = ConverterConfig::buck(
        get_quantity(v, "/converter/v_in", "V")?,
        get_quantity(v, "/converter/v_out", "V")?,
        get_quantity(v, "/converter/inductance", "H")?,
        get_quantity(v, "/converter/capacitance", "F")?,
        get_quantity(v, "/converter/r_load", "Ohm")?,
        get_quantity(v, "/converter/r_sense", "Ohm")?,
    )?;
    let scheme = parse_scheme(v, &converter)?;
    let interference = parse_interference(v)?;
    let method = parse_method(v, "/method")?;
    method.validate()?;
    Ok(RunConfig { converter, scheme, interference, method })
}

fn parse_scheme(v: &Value, _c: &ConverterConfig) -> Result<ModulationScheme> {
    let variant = get_str(v, "/modulation/variant")?;
    let t_on_min = get_quantity_opt(v, "/modulation/t_on_min", "s")?.unwrap_or(0.0);
    let m = match variant {
        "constant_on_time" => Modulation::ConstantOnTime {
            t_on: get_quantity(v, "/modulation/t_on", "s")?,
        },
        "constant_off_time" => Modulation::ConstantOffTime {
            t_off: get_quantity(v, "/modulation/t_off", "s")?,
        },
        "fixed_frequency" => {
            let ext = match get_str(v, "/modulation/extremum")? {
                "peak" => Extremum::Peak,
                "valley" => Extremum::Valley,
                other => {
                    return Err(err_at(
                        "/modulation/extremum",
                        format!("expected peak|valley, got {other}"),
                    ))
                }
            };
            Modulation::FixedFrequency { t_s: get_quantity(v, "/modulation/t_s", "s")?, extremum: ext }
        }
        other => {
            return Err(err_at(
                "/modulation/variant",
                format!("unknown variant `{other}`"),
            ))
        }
    };
    ModulationScheme::new(m, t_on_min)
}

fn parse_waveform_kind(v: &Value, pointer: &str) -> Result<WaveformKind> {
    let kind = get_str(v, &format!("{pointer}/kind"))?;
    match kind {
        "sinusoid" => Ok(WaveformKind::sinusoid(
            get_quantity(v, &format!("{pointer}/amplitude"), "A")?,
            get_quantity(v, &format!("{pointer}/omega"), "rad/s")?,
            get_quantity_opt(v, &format!("{pointer}/phase"), "")?.unwrap_or(0.0),
        )),
        "trapezoid" => WaveformKind::trapezoid(
            get_quantity(v, &format!("{pointer}/amplitude"), "A")?,
            get_quantity(v, &format!("{pointer}/omega"), "rad/s")?,
            get_quantity(v, &format!("{pointer}/slew"), "A/s")?,
            get_quantity_opt(v, &format!("{pointer}/phase"), "")?.unwrap_or(0.0),
        ),
        "damped_ring" => Ok(WaveformKind::damped_ring(
            get_quantity(v, &format!("{pointer}/amplitude"), "A")?,
            get_quantity(v, &format!("{pointer}/omega"), "rad/s")?,
            get_quantity(v, &format!("{pointer}/decay"), "rad/s")?,
            get_quantity_opt(v, &format!("{pointer}/start_time"), "s")?.unwrap_or(0.0),
        )),
        "composite" => {
            let parts = v
                .pointer(&format!("{pointer}/parts"))
                .and_then(Value::as_array)
                .ok_or_else(|| err_at(&format!("{pointer}/parts"), "missing parts array"))?;
            let kinds = (0..parts.len())
                .map(|i| parse_waveform_kind(v, &format!("{pointer}/parts/{i}")))
                .collect::<Result<Vec<_>>>()?;
            Ok(WaveformKind::Composite { parts: kinds })
        }
        other => Err(err_at(
            &format!("{pointer}/kind"),
            format!("unknown waveform kind `{other}`"),
        )),
    }
}

fn parse_interference(v: &Value) -> Result<InterferenceSpec> {
    let omega_l = get_quantity(v, "/interference/omega_l", "rad/s")?;
    let waveform = if v.pointer("/interference/waveform").is_some() {
        let kind = parse_waveform_kind(v, "/interference/waveform")?;
        let phase_mode = match v
            .pointer("/interference/phase_mode")
            .and_then(Value::as_str)
            .unwrap_or("fixed")
        {
            "fixed" => PhaseMode::Fixed,
            "random_per_cycle" => PhaseMode::RandomPerCycle,
            other => {
                return Err(err_at(
                    "/interference/phase_mode",
                    format!("expected fixed|random_per_cycle, got {other}"),
                ))
            }
        };
        let seed = v
            .pointer("/interference/seed")
            .and_then(Value::as_u64)
            .unwrap_or(0);
        Some(Waveform { kind, phase_mode, seed })
    } else {
        None
    };

    // a_ub is required explicitly; the loader refuses to guess bounds
    let a_ub = get_quantity(v, "/interference/a_ub", "A")?;
    let lambda = match get_quantity_opt(v, "/interference/lambda_ub", "A/s")? {
        Some(l) => l,
        None => match &waveform {
            Some(w) => w.kind.lipschitz_bound(),
            None => {
                return Err(err_at(
                    "/interference/lambda_ub",
                    "required when no waveform is given",
                ))
            }
        },
    };
    let b = get_quantity_opt(v, "/interference/b_functional", "")?;
    let spec = InterferenceSpec::class_bounds(a_ub, omega_l, lambda, b.unwrap_or(0.0))?;
    let mut spec = match waveform {
        Some(w) => spec.with_waveform(w)?,
        None => spec,
    };
    if b.is_none() {
        // derive B from the waveform's line spectrum when possible;
        // otherwise leave it absent so bound computations fail loudly
        spec.b_functional = match &spec.waveform {
            Some(w) => crate::interference::b_of_lines(&w.kind).ok(),
            None if a_ub == 0.0 => Some(0.0),
            None => None,
        };
    }
    Ok(spec)
}

fn parse_method(v: &Value, pointer: &str) -> Result<ConditioningMethod> {
    let variant = get_str(v, &format!("{pointer}/variant"))?;
    match variant {
        "slope_comp" => Ok(ConditioningMethod::SlopeComp {
            m_s: get_quantity(v, &format!("{pointer}/m_s"), "A/s")?,
        }),
        "low_pass_filter" => Ok(ConditioningMethod::LowPassFilter {
            tau: get_quantity(v, &format!("{pointer}/tau"), "s")?,
        }),
        "overdrive_delay" => Ok(ConditioningMethod::OverdriveDelay {
            tau_c: get_quantity(v, &format!("{pointer}/tau_c"), "s")?,
            v_trig: get_quantity(v, &format!("{pointer}/v_trig"), "V")?,
            t_d: get_quantity_opt(v, &format!("{pointer}/t_d"), "s")?.unwrap_or(0.0),
        }),
        other => Err(err_at(
            &format!("{pointer}/variant"),
            format!("unknown method `{other}`"),
        )),
    }
}

/// Reproducibility record written next to every command's outputs:
/// identical manifests imply bit-identical outputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub config_path: Option<String>,
    pub seed: u64,
    pub out_dir: String,
    pub tool_version: String,
    /// FNV-1a hash of the effective configuration JSON.
    pub input_hash: String,
}

impl RunManifest {
    pub fn new(
        subcommand: &str,
        config_path: Option<&std::path::Path>,
        seed: u64,
        out_dir: &std::path::Path,
        config: &RunConfig,
    ) -> Self {
        let encoded = serde_json::to_string(config).unwrap_or_default();
        RunManifest {
            subcommand: subcommand.to_string(),
            config_path: config_path.map(|p| p.display().to_string()),
            seed,
            out_dir: out_dir.display().to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_hash: format!("{:016x}", fnv1a(encoded.as_bytes())),
        }
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantity_suffixes() {
        let close = |got: f64, want: f64| (got - want).abs() <= 1e-12 * want.abs();
        assert!(close(parse_quantity("240nH", "H").unwrap(), 240e-9));
        assert!(close(parse_quantity("100ns", "s").unwrap(), 100e-9));
        assert!(close(parse_quantity("0.2", "Ohm").unwrap(), 0.2));
        assert!(close(parse_quantity("10m", "Ohm").unwrap(), 0.01));
        assert!(close(parse_quantity("10mOhm", "Ohm").unwrap(), 0.01));
        assert!(close(parse_quantity("12V", "V").unwrap(), 12.0));
        assert!(close(parse_quantity("41.667A/us", "A/s").unwrap(), 41.667e6));
        assert!(close(
            parse_quantity("5MHz", "rad/s").unwrap(),
            2.0 * std::f64::consts::PI * 5e6
        ));
        assert!(close(parse_quantity("100uF", "F").unwrap(), 100e-6));
        assert!(close(parse_quantity("1e-7", "s").unwrap(), 1e-7));
        assert!(parse_quantity("abc", "s").is_err());
        assert!(parse_quantity("12X", "V").is_err());
    }

    #[test]
    fn loads_full_config() {
        let json = r#"{
            "converter": {"v_in": "12V", "v_out": "2V", "inductance": "240nH",
                          "capacitance": "100uF", "r_load": "0.2", "r_sense": "10m"},
            "modulation": {"variant": "constant_on_time", "t_on": "100ns", "t_on_min": "10ns"},
            "interference": {"a_ub": "0.4A", "omega_l": "5MHz",
                             "waveform": {"kind": "sinusoid", "amplitude": "0.4A",
                                          "omega": "10MHz", "phase": 0.0},
                             "seed": 7},
            "method": {"variant": "slope_comp", "m_s": "10A/us"}
        }"#;
        let cfg = load_config_str(json).unwrap();
        assert!((cfg.converter.m1 - 41.6667e6).abs() < 1e3);
        assert!((cfg.interference.a_ub - 0.4).abs() < 1e-12);
        assert!(cfg.interference.b_functional.is_some());
        match cfg.method {
            ConditioningMethod::SlopeComp { m_s } => assert_eq!(m_s, 10e6),
            other => panic!("wrong method {other:?}"),
        }
    }

    #[test]
    fn schema_errors_carry_json_pointers() {
        let json = r#"{"converter": {"v_in": "12V"}}"#;
        let err = load_config_str(json).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("/converter/v_out"), "{msg}");

        let json = r#"{
            "converter": {"v_in": "12V", "v_out": "2V", "inductance": "240nH",
                          "capacitance": "100uF", "r_load": "0.2", "r_sense": "10m"},
            "modulation": {"variant": "constant_on_time", "t_on": "100ns"},
            "interference": {"omega_l": "5MHz", "lambda_ub": 0.0, "a_ub": "0.1"},
            "method": {"variant": "mystery"}
        }"#;
        let msg = load_config_str(json).unwrap_err().to_string();
        assert!(msg.contains("/method/variant"), "{msg}");
    }

    #[test]
    fn preset_is_valid_and_documented() {
        let p = table1_preset();
        assert!((p.interference.a_ub - 0.4).abs() < 1e-12);
        assert!((p.interference.omega_l - 2.0 * std::f64::consts::PI * 5e6).abs() < 1.0);
        // the ring spectrum is not integrable, so B stays absent
        assert!(p.interference.b_functional().is_err());
    }

    #[test]
    fn manifest_hash_tracks_config_identity() {
        let a = table1_preset();
        let mut b = table1_preset();
        let out = std::path::Path::new("/tmp");
        let ma = RunManifest::new("simulate", None, 1, out, &a);
        let mb = RunManifest::new("simulate", None, 1, out, &b);
        assert_eq!(ma.input_hash, mb.input_hash);
        b.method = ConditioningMethod::SlopeComp { m_s: 1.0 };
        let mb = RunManifest::new("simulate", None, 1, out, &b);
        assert_ne!(ma.input_hash, mb.input_hash);
    }
}
