use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{FrequencyGrid, UcaGeometry, UlaGeometry};
use crate::cxlinalg::CxMatrix;
use crate::{Error, Real, Result};

/// One propagation path of the Saleh-Valenzuela model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathParams<T> {
    pub gain: Complex<T>,
    pub delay_s: T,
    /// Departure azimuth at the UCA, `[0, 2 pi)`.
    pub aod_rad: T,
    /// Arrival angle at the ULA, `[-pi/2, pi/2]`.
    pub aoa_rad: T,
}

/// Path statistics for [`generate_channel`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelConfig<T> {
    pub n_paths: usize,
    /// Delays are uniform on `[0, delay_max_s]`.
    pub delay_max_s: T,
}

impl<T: Real> Default for ChannelConfig<T> {
    fn default() -> Self {
        Self {
            n_paths: 4,
            delay_max_s: T::lit(20e-9),
        }
    }
}

/// A drawn channel: paths plus the arrays and subcarrier grid they act on.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelRealization<T> {
    paths: Vec<PathParams<T>>,
    tx: UcaGeometry<T>,
    rx: UlaGeometry<T>,
    grid: FrequencyGrid<T>,
}

impl<T: Real> ChannelRealization<T> {
    pub fn new(
        paths: Vec<PathParams<T>>,
        tx: UcaGeometry<T>,
        rx: UlaGeometry<T>,
        grid: FrequencyGrid<T>,
    ) -> Result<Self> {
        if paths.is_empty() {
            return Err(Error::Domain("channel needs at least one path".into()));
        }
        for (l, p) in paths.iter().enumerate() {
            let finite = p.gain.re.is_finite()
                && p.gain.im.is_finite()
                && p.delay_s.is_finite()
                && p.aod_rad.is_finite()
                && p.aoa_rad.is_finite();
            if !finite || p.delay_s < T::zero() {
                return Err(Error::Domain(format!("path {l} has invalid parameters")));
            }
        }
        Ok(Self {
            paths,
            tx,
            rx,
            grid,
        })
    }

    pub fn paths(&self) -> &[PathParams<T>] {
        &self.paths
    }

    pub fn tx(&self) -> &UcaGeometry<T> {
        &self.tx
    }

    pub fn rx(&self) -> &UlaGeometry<T> {
        &self.rx
    }

    pub fn grid(&self) -> &FrequencyGrid<T> {
        &self.grid
    }

    /// Same paths and arrays on a different subcarrier grid.
    pub fn with_grid(&self, grid: FrequencyGrid<T>) -> Self {
        Self {
            grid,
            ..self.clone()
        }
    }

    /// Path indices sorted by descending `|g_l|`; ties keep their order.
    pub fn strongest_paths(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.paths.len()).collect();
        order.sort_by(|&a, &b| self.paths[b].gain.norm().partial_cmp(&self.paths[a].gain.norm()).unwrap_or(std::cmp::Ordering::Equal));
        order
    }

    /// `H_m` (`N x N_r`) on subcarrier `index`.
    pub fn channel_matrix(&self, index: usize) -> Result<CxMatrix<T>> {
        let f = self.grid.freq(index)?;
        Ok(self.matrix_at(f))
    }

    /// `sqrt(N/L) sum_l g_l exp(-j 2 pi tau_l f) a(f, phi_l) abar(f, theta_l)^H`.
    pub fn matrix_at(&self, f_hz: T) -> CxMatrix<T> {
        let n = self.tx.n_elements();
        let nr = self.rx.n_elements();
        let scale = (T::count(n) / T::count(self.paths.len())).sqrt();
        let mut h = CxMatrix::zeros(n, nr);
        for p in &self.paths {
            let coef = p.gain * Complex::from_polar(scale, -T::TAU() * p.delay_s * f_hz);
            let a = self.tx.steering(f_hz, p.aod_rad);
            let b = self.rx.steering(f_hz, p.aoa_rad);
            for (i, ai) in a.iter().enumerate() {
                let ca = coef * ai;
                for (j, bj) in b.iter().enumerate() {
                    h[(i, j)] = h[(i, j)] + ca * bj.conj();
                }
            }
        }
        h
    }
}

/// Draws `cfg.n_paths` paths with `CN(0, 1)` gains, uniform angles and uniform
/// delays. The stream is a ChaCha8 generator seeded with `seed`, so a seed
/// reproduces the same channel on every platform and in either precision.
pub fn generate_channel<T: Real>(
    cfg: &ChannelConfig<T>,
    tx: &UcaGeometry<T>,
    rx: &UlaGeometry<T>,
    grid: &FrequencyGrid<T>,
    seed: u64,
) -> Result<ChannelRealization<T>> {
    if cfg.n_paths == 0 {
        return Err(Error::Config("channel needs at least one path".into()));
    }
    if !(cfg.delay_max_s >= T::zero()) {
        return Err(Error::Config("maximum delay must be non-negative".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let delay_max = cfg.delay_max_s.as_f64();
    let half_pi = std::f64::consts::FRAC_PI_2;
    let paths = (0..cfg.n_paths)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            let aod = rng.random_range(0.0..std::f64::consts::TAU);
            let aoa = rng.random_range(-half_pi..=half_pi);
            let delay = rng.random::<f64>() * delay_max;
            let s = std::f64::consts::FRAC_1_SQRT_2;
            PathParams {
                gain: Complex::new(T::lit(re * s), T::lit(im * s)),
                delay_s: T::lit(delay),
                aod_rad: T::lit(aod),
                aoa_rad: T::lit(aoa),
            }
        })
        .collect();
    ChannelRealization::new(paths, tx.clone(), rx.clone(), grid.clone())
}
