use rayon::prelude::*;
use uca_defocus::analysis::{
    avg_gain_ps_lower, avg_gain_ps_numeric, avg_gain_ps_upper, avg_gain_ps_upper_cs, avg_gain_ttd,
    avg_gain_ttd_numeric, classic_gain, dpp_gain, exact_gain, gain_corollary1, gain_lemma1, gain_lemma2,
    gain_lemma3, spectrum_efficiency_optimal, spectrum_efficiency_precoded,
};
use uca_defocus::arraymodel::generate_channel;
use uca_defocus::cxlinalg::inner;
use uca_defocus::precoding::{build_classic_hybrid, build_dpp, SubarrayReference};
use uca_defocus::specfun::{defocus_1f2, defocus_2f3};
use uca_defocus::{ChannelCfg, Dpp, Grid, Series, Uca, Ula};

use crate::scenario::{Experiment, Scenario, SweepVariable};
use crate::table::{Row, Table};
use crate::XpError;

/// Command-line overrides applied before validation.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub seed: Option<u64>,
    pub points: Option<usize>,
}

/// Applies `opts` and validates, returning the scenario that will run.
pub fn prepare(mut scenario: Scenario, opts: RunOptions) -> Result<Scenario, XpError> {
    if let Some(seed) = opts.seed {
        scenario.trials.base_seed = seed;
    }
    if let Some(points) = opts.points {
        scenario.override_points(points)?;
    }
    let diags = scenario.validate();
    if diags.is_empty() {
        Ok(scenario)
    } else {
        Err(XpError::Invalid(diags))
    }
}

/// Runs a scenario. Sweep points and seeds are evaluated in parallel; the
/// result depends only on the scenario.
pub fn run(scenario: &Scenario) -> Result<Table, XpError> {
    let diags = scenario.validate();
    if !diags.is_empty() {
        return Err(XpError::Invalid(diags));
    }
    let rows = match scenario.experiment {
        Experiment::GainFrequency => gain_frequency(scenario)?,
        Experiment::UlaPattern => ula_pattern(scenario)?,
        Experiment::UcaPattern => uca_pattern(scenario)?,
        Experiment::Hypergeometric => hypergeometric(scenario)?,
        Experiment::AverageGain => average_gain(scenario)?,
        Experiment::SpectralEfficiency => spectral(scenario)?,
    };
    Ok(Table::new(rows))
}

fn tx_array(s: &Scenario) -> Result<Uca, XpError> {
    let sys = &s.system;
    Ok(match sys.radius_m {
        Some(r) => Uca::new(sys.n_elements, r)?,
        None => Uca::half_wavelength(sys.n_elements, sys.fc_hz)?,
    })
}

fn exact_row(x: f64, method: impl Into<String>, value: f64) -> Row {
    Row {
        x,
        method: method.into(),
        mean: value,
        std: 0.0,
    }
}

/// Evaluates deterministic curves: one value per (x, method).
fn curves(
    s: &Scenario,
    methods: &[String],
    eval: impl Fn(&str, f64) -> uca_defocus::Result<f64> + Sync,
) -> Result<Vec<Row>, XpError> {
    let xs = s.sweep_values();
    let per_x = xs
        .par_iter()
        .map(|&x| {
            methods
                .iter()
                .map(|m| Ok(exact_row(x, m.clone(), eval(m, x)?)))
                .collect::<Result<Vec<_>, XpError>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(per_x.into_iter().flatten().collect())
}

fn gain_frequency(s: &Scenario) -> Result<Vec<Row>, XpError> {
    let tx = tx_array(s)?;
    let fc = s.system.fc_hz;
    let r = tx.radius_m();
    let n = tx.n_elements();
    let k = s.precoding.n_ttd;
    let phi = s.precoding.beam_deg.to_radians();
    curves(s, &s.precoding.methods, |m, f| match m {
        "classic" => classic_gain(&tx, fc, f, phi),
        "dpp" => dpp_gain(&tx, fc, f, phi, k, SubarrayReference::Algorithm),
        "lemma1" => gain_lemma1(f, fc, r),
        "lemma3" => gain_lemma3(f, fc, r, n, k),
        "corollary1" => gain_corollary1(f, fc, r, k),
        _ => unreachable!("validated method"),
    })
}

fn pattern_label(method: &str, f_hz: f64) -> String {
    format!("{method}@{}GHz", f_hz / 1e9)
}

fn pattern_methods(s: &Scenario) -> Vec<(String, String, f64)> {
    let mut out = Vec::new();
    for m in &s.precoding.methods {
        for &f in &s.precoding.pattern_frequencies_hz {
            out.push((pattern_label(m, f), m.clone(), f));
        }
    }
    out
}

fn pattern(s: &Scenario, eval: impl Fn(&str, f64, f64) -> uca_defocus::Result<f64> + Sync) -> Result<Vec<Row>, XpError> {
    let specs = pattern_methods(s);
    let labels: Vec<String> = specs.iter().map(|p| p.0.clone()).collect();
    curves(s, &labels, |label, deg| {
        let (_, m, f) = specs.iter().find(|p| p.0 == label).expect("known label");
        eval(m, *f, deg.to_radians())
    })
}

fn ula_pattern(s: &Scenario) -> Result<Vec<Row>, XpError> {
    let sys = &s.system;
    let ula = Ula::half_wavelength(sys.n_elements, sys.fc_hz)?;
    let beam = ula.steering(sys.fc_hz, s.precoding.beam_deg.to_radians());
    pattern(s, |_, f, phi| Ok(inner(&ula.steering(f, phi), &beam).norm()))
}

fn uca_pattern(s: &Scenario) -> Result<Vec<Row>, XpError> {
    let tx = tx_array(s)?;
    let fc = s.system.fc_hz;
    let phi0 = s.precoding.beam_deg.to_radians();
    let beam = tx.steering(fc, phi0);
    pattern(s, |m, f, phi| match m {
        "exact" => exact_gain(&beam, &tx, f, phi),
        "lemma2" => gain_lemma2(f, fc, tx.radius_m(), phi, phi0),
        _ => unreachable!("validated method"),
    })
}

fn hypergeometric(s: &Scenario) -> Result<Vec<Row>, XpError> {
    let ctrl = Series::default();
    curves(s, &s.precoding.methods, |m, x| match m {
        "1f2" => defocus_1f2(x, &ctrl),
        "2f3" => defocus_2f3(x, &ctrl),
        _ => unreachable!("validated method"),
    })
}

fn average_gain(s: &Scenario) -> Result<Vec<Row>, XpError> {
    let r = tx_array(s)?.radius_m();
    let k = s.precoding.n_ttd;
    curves(s, &s.precoding.methods, |m, b| match m {
        "ps_numeric" => avg_gain_ps_numeric(r, b),
        "ps_upper" => avg_gain_ps_upper(r, b),
        "ps_upper_cs" => avg_gain_ps_upper_cs(r, b),
        "ps_lower" => avg_gain_ps_lower(r, b),
        "dpp" => avg_gain_ttd(r, b, k),
        "dpp_numeric" => avg_gain_ttd_numeric(r, b, k),
        _ => unreachable!("validated method"),
    })
}

fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Band-averaged spectrum efficiency of every method for one channel draw.
fn spectral_trial(s: &Scenario, x: f64, seed: u64) -> Result<Vec<f64>, XpError> {
    let sys = &s.system;
    let p = &s.precoding;
    let (mut snr_db, mut k, mut bandwidth) = (p.snr_db, p.n_ttd, sys.bandwidth_hz);
    match s.sweep.variable {
        SweepVariable::SnrDb => snr_db = x,
        SweepVariable::KTtd => k = x as usize,
        SweepVariable::Bandwidth => bandwidth = x,
        _ => unreachable!("validated sweep"),
    }
    let rho = db_to_linear(snr_db);
    let tx = tx_array(s)?;
    let rx = Ula::half_wavelength(sys.n_receive, sys.fc_hz)?;
    let grid = Grid::new(sys.fc_hz, bandwidth, sys.n_subcarriers)?;
    let cfg = ChannelCfg {
        n_paths: p.n_paths,
        ..ChannelCfg::default()
    };
    let ch = generate_channel(&cfg, &tx, &rx, &grid, seed)?;
    let dpp_cfg = Dpp::new(p.n_rf, k, p.n_streams).with_snr(rho);
    let wants = |m: &str| p.methods.iter().any(|x| x == m);
    let classic = if wants("classic") {
        Some(build_classic_hybrid(&ch, &dpp_cfg)?)
    } else {
        None
    };
    let dpp = if wants("dpp") { Some(build_dpp(&ch, &dpp_cfg)?.0) } else { None };
    let mut sums = vec![0.0; p.methods.len()];
    for m in 0..grid.n_subcarriers() {
        let h = ch.channel_matrix(m)?;
        for (slot, method) in sums.iter_mut().zip(&p.methods) {
            *slot += match method.as_str() {
                "classic" => spectrum_efficiency_precoded(&h, classic.as_ref().unwrap(), m, rho, 1.0, p.n_streams)?,
                "dpp" => spectrum_efficiency_precoded(&h, dpp.as_ref().unwrap(), m, rho, 1.0, p.n_streams)?,
                "optimal" => spectrum_efficiency_optimal(&h, rho, 1.0, p.n_streams, 1.0)?,
                _ => unreachable!("validated method"),
            };
        }
    }
    let m = grid.n_subcarriers() as f64;
    Ok(sums.into_iter().map(|v| v / m).collect())
}

/// Mean and sample standard deviation (zero for a single value).
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn spectral(s: &Scenario) -> Result<Vec<Row>, XpError> {
    let xs = s.sweep_values();
    let n_seeds = s.trials.n_seeds;
    let base = s.trials.base_seed;
    let tasks: Vec<(usize, u64)> = (0..xs.len())
        .flat_map(|i| (0..n_seeds as u64).map(move |j| (i, base.wrapping_add(j))))
        .collect();
    let results = tasks
        .par_iter()
        .map(|&(i, seed)| spectral_trial(s, xs[i], seed))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    for (i, &x) in xs.iter().enumerate() {
        let trials = &results[i * n_seeds..(i + 1) * n_seeds];
        for (j, method) in s.precoding.methods.iter().enumerate() {
            let vals: Vec<f64> = trials.iter().map(|t| t[j]).collect();
            let (mean, std) = mean_std(&vals);
            rows.push(Row {
                x,
                method: method.clone(),
                mean,
                std,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mean_and_spread() {
        assert_eq!(mean_std(&[2.0]), (2.0, 0.0));
        let (m, s) = mean_std(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(m, 2.5);
        assert!((s - (5.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn decibels() {
        assert_eq!(db_to_linear(10.0), 10.0);
        assert_eq!(db_to_linear(0.0), 1.0);
    }
}
