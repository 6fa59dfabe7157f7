use std::fmt;

use serde::{Deserialize, Serialize};

use crate::XpError;

/// What a scenario computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Experiment {
    /// Single-path gain against frequency.
    GainFrequency,
    /// Angular pattern of a center-frequency ULA beam.
    UlaPattern,
    /// Angular pattern of a center-frequency UCA beam.
    UcaPattern,
    /// Defocus hypergeometric curves against their argument.
    Hypergeometric,
    /// Band-averaged gains and their bounds against bandwidth.
    AverageGain,
    /// Spectrum efficiency over random channels.
    SpectralEfficiency,
}

impl Experiment {
    pub fn methods(self) -> &'static [&'static str] {
        match self {
            Self::GainFrequency => &["classic", "dpp", "lemma1", "lemma3", "corollary1"],
            Self::UlaPattern => &["exact"],
            Self::UcaPattern => &["exact", "lemma2"],
            Self::Hypergeometric => &["1f2", "2f3"],
            Self::AverageGain => &["ps_numeric", "ps_upper", "ps_upper_cs", "ps_lower", "dpp", "dpp_numeric"],
            Self::SpectralEfficiency => &["classic", "dpp", "optimal"],
        }
    }

    pub fn sweeps(self) -> &'static [SweepVariable] {
        use SweepVariable::*;
        match self {
            Self::GainFrequency => &[Frequency],
            Self::UlaPattern | Self::UcaPattern => &[Angle],
            Self::Hypergeometric => &[Argument],
            Self::AverageGain => &[Bandwidth],
            Self::SpectralEfficiency => &[SnrDb, KTtd, Bandwidth],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepVariable {
    /// Hertz.
    Frequency,
    /// Degrees.
    Angle,
    SnrDb,
    KTtd,
    /// Hertz.
    Bandwidth,
    /// Dimensionless hypergeometric argument.
    Argument,
}

impl fmt::Display for SweepVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Frequency => "frequency",
            Self::Angle => "angle",
            Self::SnrDb => "snr_db",
            Self::KTtd => "k_ttd",
            Self::Bandwidth => "bandwidth",
            Self::Argument => "argument",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemConfig {
    /// Transmit array size `N`.
    pub n_elements: usize,
    /// Receive ULA size `N_r`.
    #[serde(default = "default_n_receive")]
    pub n_receive: usize,
    pub fc_hz: f64,
    pub bandwidth_hz: f64,
    pub n_subcarriers: usize,
    /// Explicit UCA radius; when absent the array is half-wavelength spaced.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius_m: Option<f64>,
}

fn default_n_receive() -> usize {
    4
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrecodingConfig {
    pub methods: Vec<String>,
    #[serde(default = "one")]
    pub n_ttd: usize,
    #[serde(default = "one")]
    pub n_rf: usize,
    #[serde(default = "one")]
    pub n_streams: usize,
    /// `rho / sigma_n^2` in dB with unit total power.
    #[serde(default = "default_snr_db")]
    pub snr_db: f64,
    #[serde(default = "default_n_paths")]
    pub n_paths: usize,
    /// Beam direction in degrees for the single-path experiments.
    #[serde(default = "default_beam_deg")]
    pub beam_deg: f64,
    /// Frequencies drawn in the pattern experiments.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pattern_frequencies_hz: Vec<f64>,
}

fn one() -> usize {
    1
}

fn default_snr_db() -> f64 {
    10.0
}

fn default_n_paths() -> usize {
    4
}

fn default_beam_deg() -> f64 {
    30.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub variable: SweepVariable,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stop: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    /// Explicit sweep values; exclusive with `start`/`stop`/`points`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrialsConfig {
    #[serde(default = "one")]
    pub n_seeds: usize,
    #[serde(default)]
    pub base_seed: u64,
}

impl Default for TrialsConfig {
    fn default() -> Self {
        Self {
            n_seeds: 1,
            base_seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    pub path: String,
}

/// A declarative experiment: array, precoders, one swept variable, seeds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    #[serde(default)]
    pub description: String,
    #[serde(default)]
    pub figure: String,
    pub experiment: Experiment,
    pub system: SystemConfig,
    pub precoding: PrecodingConfig,
    pub sweep: SweepConfig,
    #[serde(default)]
    pub trials: TrialsConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputConfig>,
}

/// One violated rule, naming the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub field: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

fn positive(v: f64) -> bool {
    v > 0.0 && v.is_finite()
}

impl Scenario {
    pub fn from_toml_str(text: &str, origin: &str) -> Result<Self, XpError> {
        toml::from_str(text).map_err(|e| XpError::Parse {
            origin: origin.to_string(),
            message: e.to_string(),
        })
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("scenario serializes")
    }

    /// Every rule the scenario violates; empty when runnable.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let mut err = |field: &str, message: String| {
            out.push(Diagnostic {
                field: field.to_string(),
                message,
            })
        };
        if self.name.trim().is_empty() {
            err("name", "must not be empty".into());
        }

        let s = &self.system;
        if s.n_elements == 0 {
            err("system.n_elements", "must be at least 1".into());
        }
        if s.radius_m.is_none() && s.n_elements == 1 {
            err("system.n_elements", "a half-wavelength UCA needs at least 2 elements".into());
        }
        if let Some(r) = s.radius_m {
            if !positive(r) {
                err("system.radius_m", format!("must be positive, got {r}"));
            }
        }
        if s.n_receive == 0 {
            err("system.n_receive", "must be at least 1".into());
        }
        if !positive(s.fc_hz) {
            err("system.fc_hz", format!("must be positive, got {}", s.fc_hz));
        }
        if !positive(s.bandwidth_hz) {
            err("system.bandwidth_hz", format!("must be positive, got {}", s.bandwidth_hz));
        }
        if s.n_subcarriers == 0 {
            err("system.n_subcarriers", "M must be at least 1".into());
        } else if positive(s.fc_hz) && positive(s.bandwidth_hz) {
            let m = s.n_subcarriers as f64;
            if s.fc_hz - s.bandwidth_hz * (m - 1.0) / (2.0 * m) <= 0.0 {
                err("system.bandwidth_hz", "lowest subcarrier must stay above 0 Hz".into());
            }
        }

        let p = &self.precoding;
        let allowed = self.experiment.methods();
        if p.methods.is_empty() {
            err("precoding.methods", "list at least one method".into());
        }
        for m in &p.methods {
            if !allowed.contains(&m.as_str()) {
                err(
                    "precoding.methods",
                    format!("unknown method '{m}' for this experiment; expected one of {}", allowed.join(", ")),
                );
            }
        }
        let mut seen = p.methods.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != p.methods.len() {
            err("precoding.methods", "methods must not repeat".into());
        }
        let n = s.n_elements;
        let uses_ttd = self.experiment != Experiment::UlaPattern && self.experiment != Experiment::Hypergeometric;
        if uses_ttd && self.sweep.variable != SweepVariable::KTtd {
            check_k(n, p.n_ttd, "precoding.n_ttd", &mut err);
        }
        if self.experiment == Experiment::SpectralEfficiency {
            if p.n_streams == 0 || p.n_streams > p.n_rf || p.n_rf > n {
                err(
                    "precoding.n_rf",
                    format!(
                        "need 1 <= N_s <= N_RF <= N, got N_s = {}, N_RF = {}, N = {n}",
                        p.n_streams, p.n_rf
                    ),
                );
            }
            if p.n_streams > s.n_receive {
                err(
                    "precoding.n_streams",
                    format!("{} streams exceed the {} receive antennas", p.n_streams, s.n_receive),
                );
            }
            if p.n_paths < p.n_rf {
                err(
                    "precoding.n_paths",
                    format!("{} paths cannot feed {} RF chains", p.n_paths, p.n_rf),
                );
            }
            if !p.snr_db.is_finite() {
                err("precoding.snr_db", "must be finite".into());
            }
        }
        if !p.beam_deg.is_finite() {
            err("precoding.beam_deg", "must be finite".into());
        }
        if matches!(self.experiment, Experiment::UlaPattern | Experiment::UcaPattern) {
            if p.pattern_frequencies_hz.is_empty() {
                err("precoding.pattern_frequencies_hz", "list at least one frequency".into());
            }
            if p.pattern_frequencies_hz.iter().any(|f| !positive(*f)) {
                err("precoding.pattern_frequencies_hz", "frequencies must be positive".into());
            }
        }

        let w = &self.sweep;
        if !self.experiment.sweeps().contains(&w.variable) {
            let ok: Vec<String> = self.experiment.sweeps().iter().map(|v| v.to_string()).collect();
            err(
                "sweep.variable",
                format!("'{}' is not supported here; expected one of {}", w.variable, ok.join(", ")),
            );
        }
        match (&w.values, w.start, w.stop, w.points) {
            (Some(values), None, None, None) => {
                if values.is_empty() {
                    err("sweep.values", "must not be empty".into());
                }
                if values.iter().any(|v| !v.is_finite()) {
                    err("sweep.values", "must be finite".into());
                }
                if values.windows(2).any(|v| !(v[1] > v[0])) {
                    err("sweep.values", "must be strictly increasing".into());
                }
            }
            (Some(_), ..) => err("sweep.values", "cannot be combined with start/stop/points".into()),
            (None, Some(a), Some(b), Some(pts)) => {
                if pts < 2 {
                    err("sweep.points", format!("need at least 2 points, got {pts}"));
                }
                if !(a.is_finite() && b.is_finite() && a < b) {
                    err("sweep.start", format!("range [{a}, {b}] is degenerate"));
                }
            }
            _ => err("sweep", "give either values or all of start, stop and points".into()),
        }
        let points = self.sweep_values();
        match w.variable {
            SweepVariable::KTtd => {
                if w.values.is_none() {
                    err("sweep.values", "TTD counts must be listed explicitly".into());
                }
                for &k in &points {
                    if k.fract() != 0.0 || k < 1.0 {
                        err("sweep.values", format!("TTD count {k} is not a positive integer"));
                    } else {
                        check_k(n, k as usize, "sweep.values", &mut err);
                    }
                }
            }
            SweepVariable::Frequency | SweepVariable::Bandwidth => {
                if points.iter().any(|v| !positive(*v)) {
                    err("sweep", format!("{} values must be positive", w.variable));
                }
                if w.variable == SweepVariable::Bandwidth && positive(s.fc_hz) {
                    let m = s.n_subcarriers.max(1) as f64;
                    if points.iter().any(|b| s.fc_hz - b * (m - 1.0) / (2.0 * m) <= 0.0) {
                        err("sweep", "bandwidth pushes the lowest subcarrier below 0 Hz".into());
                    }
                }
            }
            SweepVariable::Argument => {
                if points.iter().any(|v| *v < 0.0) {
                    err("sweep", "arguments must be non-negative".into());
                }
            }
            SweepVariable::Angle | SweepVariable::SnrDb => {}
        }

        if self.trials.n_seeds == 0 {
            err("trials.n_seeds", "must be at least 1".into());
        }
        if let Some(o) = &self.output {
            if o.path.trim().is_empty() {
                err("output.path", "must not be empty".into());
            }
        }
        out
    }

    /// The swept coordinates, in the scenario's own units.
    pub fn sweep_values(&self) -> Vec<f64> {
        let w = &self.sweep;
        if let Some(v) = &w.values {
            return v.clone();
        }
        match (w.start, w.stop, w.points) {
            (Some(a), Some(b), Some(n)) if n >= 2 => (0..n)
                .map(|i| if i + 1 == n { b } else { a + (b - a) * i as f64 / (n - 1) as f64 })
                .collect(),
            (Some(a), _, Some(1)) => vec![a],
            _ => Vec::new(),
        }
    }

    /// Replaces the point count of a range sweep.
    pub fn override_points(&mut self, points: usize) -> Result<(), XpError> {
        if self.sweep.values.is_some() {
            return Err(XpError::Invalid(vec![Diagnostic {
                field: "sweep.points".into(),
                message: "--points applies to range sweeps only; this scenario lists explicit values".into(),
            }]));
        }
        self.sweep.points = Some(points);
        Ok(())
    }
}

fn check_k(n: usize, k: usize, field: &str, err: &mut impl FnMut(&str, String)) {
    if k == 0 {
        err(field, "K must be at least 1".into());
    } else if n > 0 && n % k != 0 {
        err(
            field,
            format!("K = {k} does not divide N = {n}; each TTD must feed P = N/K antennas, so P must be an integer"),
        );
    }
}
