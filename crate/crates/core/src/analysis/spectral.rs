use super::positive;
use crate::cxlinalg::{svd, water_filling, CxMatrix};
use crate::precoding::PrecoderSet;
use crate::{Error, Real, Result};

fn se_sum<T: Real>(sigma: &[T], snr_per_stream: T, power: impl Fn(usize) -> T) -> T {
    sigma
        .iter()
        .enumerate()
        .map(|(i, &s)| (T::one() + snr_per_stream * s * s * power(i)).log2())
        .sum()
}

fn checked_snr<T: Real>(rho: T, sigma2: T, n_s: usize) -> Result<T> {
    positive("transmit power", rho)?;
    positive("noise power", sigma2)?;
    if n_s == 0 {
        return Err(Error::Domain("need at least one stream".into()));
    }
    Ok(rho / (T::count(n_s) * sigma2))
}

/// `log2 det(I + rho / (N_s sigma2) H^H F F^H H)` for channel `h` (`N x N_r`)
/// and full precoder `f` (`N x N_s`).
pub fn spectrum_efficiency<T: Real>(h: &CxMatrix<T>, f: &CxMatrix<T>, rho: T, sigma2: T, n_s: usize) -> Result<T> {
    let c = checked_snr(rho, sigma2, n_s)?;
    let g = h.hermitian_matmul(f)?;
    let dec = svd(&g)?;
    Ok(se_sum(&dec.sigma, c, |_| T::one()))
}

/// [`spectrum_efficiency`] with `F = F_PS F_TTD,m F_D,m` from a precoder set.
pub fn spectrum_efficiency_precoded<T: Real>(
    h: &CxMatrix<T>,
    ps: &PrecoderSet<T>,
    m: usize,
    rho: T,
    sigma2: T,
    n_s: usize,
) -> Result<T> {
    spectrum_efficiency(h, &ps.combined(m)?, rho, sigma2, n_s)
}

/// Fully digital capacity with `N_s` streams: water-filling `total_power` over
/// the top `N_s` singular values of `h`.
pub fn spectrum_efficiency_optimal<T: Real>(
    h: &CxMatrix<T>,
    rho: T,
    sigma2: T,
    n_s: usize,
    total_power: T,
) -> Result<T> {
    let c = checked_snr(rho, sigma2, n_s)?;
    positive("power budget", total_power)?;
    let dec = svd(h)?;
    let top: Vec<T> = dec.sigma.iter().take(n_s).copied().filter(|&s| s > T::zero()).collect();
    if top.is_empty() {
        return Ok(T::zero());
    }
    let gains: Vec<T> = top.iter().map(|&s| c * s * s).collect();
    let p = water_filling(&gains, total_power)?;
    Ok(se_sum(&top, c, |i| p[i]))
}

/// Largest off-diagonal magnitude of `A^H A` for an analog precoder with
/// unit-norm columns: the inter-beam leakage that vanishes only as `N -> inf`.
pub fn analog_leakage<T: Real>(analog: &CxMatrix<T>) -> Result<T> {
    let gram = analog.hermitian_matmul(analog)?;
    let mut worst = T::zero();
    for i in 0..gram.rows() {
        for j in 0..gram.cols() {
            if i != j {
                worst = worst.max(gram[(i, j)].norm());
            }
        }
    }
    Ok(worst)
}
