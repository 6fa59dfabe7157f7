//! Hybrid precoders: the phase-shifter-only baseline and delay-phase
//! precoding (DPP), where each RF chain drives `K` true-time-delay units and
//! each TTD unit feeds a subarray of `P = N / K` phase shifters.

use num_complex::Complex;

use crate::arraymodel::{ChannelRealization, UcaGeometry};
use crate::cxlinalg::{block_diag, hconcat, svd, water_filling, CxMatrix};
use crate::{Error, Real, Result};

/// Angle each subarray's TTD/PS correction is referenced to.
///
/// `Algorithm` uses `pi (2k + 1) / K` for subarray `k = 0..K`, the textbook
/// choice. `Centroid` shifts it by `-pi / N` onto the angular centre of the
/// subarray's elements (`psi` runs over `2 pi k / K .. 2 pi (k + 1) / K - 2 pi / N`),
/// which is where the per-subarray phase error is minimized; with `K = N` it
/// makes the DPP gain exactly one at every frequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SubarrayReference {
    #[default]
    Algorithm,
    Centroid,
}

impl SubarrayReference {
    /// Reference angle `theta_k` of subarray `k` out of `n_ttd` on an
    /// `n_elements` UCA.
    pub fn angle<T: Real>(self, k: usize, n_ttd: usize, n_elements: usize) -> T {
        let base = T::PI() * T::count(2 * k + 1) / T::count(n_ttd);
        match self {
            Self::Algorithm => base,
            Self::Centroid => base - T::PI() / T::count(n_elements),
        }
    }
}

/// Architecture and loading parameters shared by both precoders.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DppConfig<T> {
    pub n_rf: usize,
    /// TTD units per RF chain, `K`.
    pub n_ttd_per_rf: usize,
    pub n_streams: usize,
    /// Budget for `||F_A F_D||_F^2` on every subcarrier.
    pub total_power: T,
    /// Linear transmit SNR `rho / sigma_n^2` used by the water-filling stage.
    pub snr: T,
    pub reference: SubarrayReference,
}

impl<T: Real> DppConfig<T> {
    /// Unit power, 10 dB SNR, `Algorithm` subarray reference.
    pub fn new(n_rf: usize, n_ttd_per_rf: usize, n_streams: usize) -> Self {
        Self {
            n_rf,
            n_ttd_per_rf,
            n_streams,
            total_power: T::one(),
            snr: T::lit(10.0),
            reference: SubarrayReference::default(),
        }
    }

    pub fn with_snr(self, snr: T) -> Self {
        Self { snr, ..self }
    }

    pub fn with_total_power(self, total_power: T) -> Self {
        Self {
            total_power,
            ..self
        }
    }

    pub fn with_reference(self, reference: SubarrayReference) -> Self {
        Self { reference, ..self }
    }

    /// Checks `1 <= N_s <= N_RF <= N`, `K | N` and the loading parameters.
    pub fn validate(&self, n_elements: usize) -> Result<()> {
        self.validate_chains(n_elements)?;
        if self.n_ttd_per_rf == 0 || n_elements % self.n_ttd_per_rf != 0 {
            return Err(Error::Config(format!(
                "K = {} TTD units must divide N = {n_elements} so that P = N/K is an integer",
                self.n_ttd_per_rf
            )));
        }
        Ok(())
    }

    /// Antennas per TTD unit, `P = N / K`.
    pub fn subarray_size(&self, n_elements: usize) -> Result<usize> {
        self.validate(n_elements)?;
        Ok(n_elements / self.n_ttd_per_rf)
    }

    fn validate_chains(&self, n_elements: usize) -> Result<()> {
        if self.n_streams == 0 || self.n_streams > self.n_rf || self.n_rf > n_elements {
            return Err(Error::Config(format!(
                "need 1 <= N_s <= N_RF <= N, got N_s = {}, N_RF = {}, N = {n_elements}",
                self.n_streams, self.n_rf
            )));
        }
        if !(self.total_power > T::zero() && self.total_power.is_finite()) {
            return Err(Error::Config("total power must be positive".into()));
        }
        if !(self.snr > T::zero() && self.snr.is_finite()) {
            return Err(Error::Config("SNR must be positive".into()));
        }
        Ok(())
    }
}

/// TTD delays `t_{l,k}` in seconds, one row per RF chain.
#[derive(Debug, Clone, PartialEq)]
pub struct TtdSchedule<T> {
    n_ttd: usize,
    delays_s: Vec<T>,
}

impl<T: Real> TtdSchedule<T> {
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n_ttd = rows.first().map_or(0, Vec::len);
        if n_ttd == 0 || rows.iter().any(|r| r.len() != n_ttd) {
            return Err(Error::Dimension("TTD rows must be non-empty and equally long".into()));
        }
        if rows.iter().flatten().any(|d| !(*d >= T::zero() && d.is_finite())) {
            return Err(Error::Domain("TTD delays must be finite and non-negative".into()));
        }
        Ok(Self {
            n_ttd,
            delays_s: rows.concat(),
        })
    }

    pub fn n_rf(&self) -> usize {
        self.delays_s.len() / self.n_ttd
    }

    pub fn n_ttd(&self) -> usize {
        self.n_ttd
    }

    pub fn row(&self, l: usize) -> &[T] {
        &self.delays_s[l * self.n_ttd..(l + 1) * self.n_ttd]
    }

    pub fn delay(&self, l: usize, k: usize) -> T {
        self.delays_s[l * self.n_ttd + k]
    }

    pub fn max_delay(&self) -> T {
        self.delays_s.iter().copied().fold(T::zero(), T::max)
    }
}

/// `t_k = R/c (1 - cos(phi - theta_k))` for the `Algorithm` reference.
pub fn ttd_delays<T: Real>(phi_rad: T, n_ttd: usize, geom: &UcaGeometry<T>) -> Result<Vec<T>> {
    ttd_delays_with(phi_rad, n_ttd, geom, SubarrayReference::Algorithm)
}

/// TTD delays toward `phi_rad` for any subarray reference. The constant
/// `R/c` is the global offset that keeps every delay non-negative.
pub fn ttd_delays_with<T: Real>(
    phi_rad: T,
    n_ttd: usize,
    geom: &UcaGeometry<T>,
    reference: SubarrayReference,
) -> Result<Vec<T>> {
    if n_ttd == 0 {
        return Err(Error::Domain("need at least one TTD unit".into()));
    }
    let t0 = geom.radius_m() / T::light();
    Ok((0..n_ttd)
        .map(|k| {
            let theta: T = reference.angle(k, n_ttd, geom.n_elements());
            t0 * (T::one() - (phi_rad - theta).cos())
        })
        .collect())
}

/// PS weights `F_l` (`N x K`) toward `phi_rad`, column `k` nonzero only on
/// subarray `k`: `a_c(phi)_n * exp(-j eta_c cos(phi - theta_k))`.
fn ps_block<T: Real>(
    geom: &UcaGeometry<T>,
    fc_hz: T,
    phi_rad: T,
    n_ttd: usize,
    reference: SubarrayReference,
) -> CxMatrix<T> {
    let n = geom.n_elements();
    let p = n / n_ttd;
    let a_c = geom.steering(fc_hz, phi_rad);
    let eta_c = geom.eta(fc_hz);
    let mut f = CxMatrix::zeros(n, n_ttd);
    for k in 0..n_ttd {
        let theta: T = reference.angle(k, n_ttd, n);
        let corr = Complex::from_polar(T::one(), -eta_c * (phi_rad - theta).cos());
        for i in k * p..(k + 1) * p {
            f[(i, k)] = a_c[i] * corr;
        }
    }
    f
}

fn ttd_phases<T: Real>(delays: &[T], f_hz: T) -> CxMatrix<T> {
    let col: Vec<_> = delays
        .iter()
        .map(|&t| Complex::from_polar(T::one(), -T::TAU() * f_hz * t))
        .collect();
    CxMatrix::from_columns(&[col]).expect("non-empty column")
}

/// The DPP analog beam toward `phi_rad` at frequency `f_hz` for a single RF
/// chain: `F_l * p_l(f)`.
pub fn dpp_beam<T: Real>(
    geom: &UcaGeometry<T>,
    fc_hz: T,
    f_hz: T,
    phi_rad: T,
    n_ttd: usize,
    reference: SubarrayReference,
) -> Result<Vec<Complex<T>>> {
    if n_ttd == 0 || geom.n_elements() % n_ttd != 0 {
        return Err(Error::Config(format!(
            "K = {n_ttd} must divide N = {}",
            geom.n_elements()
        )));
    }
    let f = ps_block(geom, fc_hz, phi_rad, n_ttd, reference);
    let delays = ttd_delays_with(phi_rad, n_ttd, geom, reference)?;
    let p = ttd_phases(&delays, f_hz);
    Ok(f.matmul(&p)?.column(0))
}

/// Frequency-flat PS matrix, per-subcarrier TTD and digital precoders.
#[derive(Debug, Clone)]
pub struct PrecoderSet<T> {
    f_ps: CxMatrix<T>,
    f_ttd: Vec<CxMatrix<T>>,
    f_d: Vec<CxMatrix<T>>,
    path_order: Vec<usize>,
    beam_angles: Vec<T>,
    n_ttd: usize,
}

impl<T: Real> PrecoderSet<T> {
    /// `N x (N_RF K)`.
    pub fn f_ps(&self) -> &CxMatrix<T> {
        &self.f_ps
    }

    /// Block-diagonal `(N_RF K) x N_RF` TTD phases on subcarrier `m`.
    pub fn f_ttd(&self, m: usize) -> Result<&CxMatrix<T>> {
        self.f_ttd.get(m).ok_or(Error::IndexOutOfRange {
            index: m,
            len: self.f_ttd.len(),
        })
    }

    /// `N_RF x N_s` digital precoder on subcarrier `m`.
    pub fn f_d(&self, m: usize) -> Result<&CxMatrix<T>> {
        self.f_d.get(m).ok_or(Error::IndexOutOfRange {
            index: m,
            len: self.f_d.len(),
        })
    }

    pub fn n_subcarriers(&self) -> usize {
        self.f_d.len()
    }

    /// TTD units per RF chain; 1 for the PS-only precoder.
    pub fn n_ttd(&self) -> usize {
        self.n_ttd
    }

    /// Channel path served by each RF chain, strongest first.
    pub fn path_order(&self) -> &[usize] {
        &self.path_order
    }

    /// Departure angle each RF chain is steered to.
    pub fn beam_angles(&self) -> &[T] {
        &self.beam_angles
    }

    /// `F_PS F_TTD,m` (`N x N_RF`).
    pub fn analog_combined(&self, m: usize) -> Result<CxMatrix<T>> {
        self.f_ps.matmul(self.f_ttd(m)?)
    }

    /// `F_PS F_TTD,m F_D,m` (`N x N_s`).
    pub fn combined(&self, m: usize) -> Result<CxMatrix<T>> {
        self.analog_combined(m)?.matmul(self.f_d(m)?)
    }
}

fn served_paths<T: Real>(ch: &ChannelRealization<T>, n_rf: usize) -> Result<Vec<usize>> {
    let order = ch.strongest_paths();
    if order.len() < n_rf {
        return Err(Error::Config(format!(
            "{} paths cannot feed {n_rf} RF chains",
            order.len()
        )));
    }
    Ok(order[..n_rf].to_vec())
}

fn check_streams<T: Real>(ch: &ChannelRealization<T>, cfg: &DppConfig<T>) -> Result<()> {
    let nr = ch.rx().n_elements();
    if cfg.n_streams > nr {
        return Err(Error::Config(format!(
            "N_s = {} streams exceed the {nr} receive antennas",
            cfg.n_streams
        )));
    }
    Ok(())
}

/// `V_eq[:, :N_s] diag(sqrt(p))` with water-filled `p`, rescaled so that
/// `||F_A F_D||_F^2 = total_power`.
fn digital_precoder<T: Real>(
    h: &CxMatrix<T>,
    analog: &CxMatrix<T>,
    cfg: &DppConfig<T>,
) -> Result<CxMatrix<T>> {
    let heq = h.hermitian_matmul(analog)?;
    let dec = svd(&heq)?;
    let ns = cfg.n_streams;
    let scale = cfg.snr / T::count(ns);
    let top = dec.sigma.first().copied().unwrap_or_else(T::zero);
    let live: Vec<usize> = (0..ns)
        .filter(|&i| dec.sigma[i] > top * T::epsilon() * T::count(heq.rows().max(heq.cols())))
        .collect();
    let mut power = vec![T::zero(); ns];
    if live.is_empty() {
        power.fill(cfg.total_power / T::count(ns));
    } else {
        let gains: Vec<T> = live.iter().map(|&i| scale * dec.sigma[i] * dec.sigma[i]).collect();
        for (&i, p) in live.iter().zip(water_filling(&gains, cfg.total_power)?) {
            power[i] = p;
        }
    }
    let mut fd = CxMatrix::zeros(analog.cols(), ns);
    for (s, &p) in power.iter().enumerate() {
        let amp = p.sqrt();
        for r in 0..analog.cols() {
            fd[(r, s)] = dec.vh[(s, r)].conj() * amp;
        }
    }
    let norm = analog.matmul(&fd)?.frobenius_norm();
    if norm > T::zero() {
        fd = fd.scale(cfg.total_power.sqrt() / norm);
    }
    Ok(fd)
}

fn digital_all<T: Real>(
    ch: &ChannelRealization<T>,
    f_ps: &CxMatrix<T>,
    f_ttd: &[CxMatrix<T>],
    cfg: &DppConfig<T>,
) -> Result<Vec<CxMatrix<T>>> {
    f_ttd
        .iter()
        .enumerate()
        .map(|(m, t)| digital_precoder(&ch.channel_matrix(m)?, &f_ps.matmul(t)?, cfg))
        .collect()
}

/// PS-only hybrid precoder: RF chain `l` is steered to the `l`-th strongest
/// path with the center-frequency steering vector `a_c(phi_l)`.
pub fn build_classic_hybrid<T: Real>(
    ch: &ChannelRealization<T>,
    cfg: &DppConfig<T>,
) -> Result<PrecoderSet<T>> {
    let geom = ch.tx();
    cfg.validate_chains(geom.n_elements())?;
    check_streams(ch, cfg)?;
    let order = served_paths(ch, cfg.n_rf)?;
    let fc = ch.grid().fc_hz();
    let angles: Vec<T> = order.iter().map(|&l| ch.paths()[l].aod_rad).collect();
    let cols: Vec<_> = angles.iter().map(|&phi| geom.steering(fc, phi)).collect();
    let f_ps = CxMatrix::from_columns(&cols)?;
    let f_ttd = vec![CxMatrix::identity(cfg.n_rf); ch.grid().n_subcarriers()];
    let f_d = digital_all(ch, &f_ps, &f_ttd, cfg)?;
    Ok(PrecoderSet {
        f_ps,
        f_ttd,
        f_d,
        path_order: order,
        beam_angles: angles,
        n_ttd: 1,
    })
}

/// Delay-phase precoder.
///
/// Paths are ranked by `|g_l|`; RF chain `l` gets the PS block toward the
/// `l`-th strongest departure angle and TTD delays from [`ttd_delays_with`].
/// The analog stage is `[F_1, .., F_NRF] * blkdiag(p_1,m, .., p_NRF,m)` and
/// the digital stage follows from the SVD of the equivalent channel.
pub fn build_dpp<T: Real>(
    ch: &ChannelRealization<T>,
    cfg: &DppConfig<T>,
) -> Result<(PrecoderSet<T>, TtdSchedule<T>)> {
    let geom = ch.tx();
    cfg.validate(geom.n_elements())?;
    check_streams(ch, cfg)?;
    let order = served_paths(ch, cfg.n_rf)?;
    let fc = ch.grid().fc_hz();
    let k = cfg.n_ttd_per_rf;
    let angles: Vec<T> = order.iter().map(|&l| ch.paths()[l].aod_rad).collect();

    let blocks: Vec<_> = angles
        .iter()
        .map(|&phi| ps_block(geom, fc, phi, k, cfg.reference))
        .collect();
    let f_ps = hconcat(&blocks)?;
    let rows = angles
        .iter()
        .map(|&phi| ttd_delays_with(phi, k, geom, cfg.reference))
        .collect::<Result<Vec<_>>>()?;
    let schedule = TtdSchedule::from_rows(&rows)?;
    let f_ttd = ch
        .grid()
        .freqs_hz()
        .iter()
        .map(|&f| {
            let per_chain: Vec<_> = rows.iter().map(|d| ttd_phases(d, f)).collect();
            block_diag(&per_chain)
        })
        .collect::<Result<Vec<_>>>()?;
    let f_d = digital_all(ch, &f_ps, &f_ttd, cfg)?;
    Ok((
        PrecoderSet {
            f_ps,
            f_ttd,
            f_d,
            path_order: order,
            beam_angles: angles,
            n_ttd: k,
        },
        schedule,
    ))
}
