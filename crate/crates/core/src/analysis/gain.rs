use num_complex::Complex;

use super::positive;
use crate::arraymodel::UcaGeometry;
use crate::cxlinalg::{inner, vec_norm};
use crate::precoding::{dpp_beam, SubarrayReference};
use crate::specfun::{bessel_j, defocus_1f2, inverse_1f2_threshold, SeriesControl};
use crate::{Error, Real, Result};

/// `|a_f(phi)^H w|` for a beam `w` with `||w|| <= 1`.
pub fn exact_gain<T: Real>(w: &[Complex<T>], geom: &UcaGeometry<T>, f_hz: T, phi_rad: T) -> Result<T> {
    positive("frequency", f_hz)?;
    if w.len() != geom.n_elements() {
        return Err(Error::Dimension(format!(
            "beam has {} entries for a {}-element array",
            w.len(),
            geom.n_elements()
        )));
    }
    if vec_norm(w) > T::one() + T::lit(1e-9) {
        return Err(Error::Domain("beam norm exceeds one".into()));
    }
    Ok(inner(&geom.steering(f_hz, phi_rad), w).norm())
}

/// Gain of the center-frequency beam `a_c(phi)` at frequency `f_hz`.
pub fn classic_gain<T: Real>(geom: &UcaGeometry<T>, fc_hz: T, f_hz: T, phi_rad: T) -> Result<T> {
    positive("carrier frequency", fc_hz)?;
    exact_gain(&geom.steering(fc_hz, phi_rad), geom, f_hz, phi_rad)
}

/// Gain of the single-chain DPP beam toward `phi_rad` with `n_ttd` TTD units.
pub fn dpp_gain<T: Real>(
    geom: &UcaGeometry<T>,
    fc_hz: T,
    f_hz: T,
    phi_rad: T,
    n_ttd: usize,
    reference: SubarrayReference,
) -> Result<T> {
    positive("carrier frequency", fc_hz)?;
    positive("frequency", f_hz)?;
    let w = dpp_beam(geom, fc_hz, f_hz, phi_rad, n_ttd, reference)?;
    exact_gain(&w, geom, f_hz, phi_rad)
}

fn delta_eta<T: Real>(f_hz: T, fc_hz: T, radius_m: T) -> Result<T> {
    positive("frequency", f_hz)?;
    positive("carrier frequency", fc_hz)?;
    positive("radius", radius_m)?;
    Ok(T::TAU() * radius_m * (f_hz - fc_hz) / T::light())
}

/// Large-`N` gain of the center-frequency beam toward its own direction:
/// `|J0(2 pi R (f - fc) / c)|`.
pub fn gain_lemma1<T: Real>(f_hz: T, fc_hz: T, radius_m: T) -> Result<T> {
    Ok(bessel_j(0, delta_eta(f_hz, fc_hz, radius_m)?)?.abs())
}

/// Large-`N` gain at angle `phi` of the center-frequency beam toward `phi0`:
/// `|J0(xi)|`, `xi^2 = eta_m^2 + eta_c^2 - 2 eta_m eta_c cos(phi - phi0)`.
pub fn gain_lemma2<T: Real>(f_hz: T, fc_hz: T, radius_m: T, phi_rad: T, phi0_rad: T) -> Result<T> {
    positive("frequency", f_hz)?;
    positive("carrier frequency", fc_hz)?;
    positive("radius", radius_m)?;
    let k = T::TAU() * radius_m / T::light();
    let (em, ec) = (k * f_hz, k * fc_hz);
    let xi2 = em * em + ec * ec - T::lit(2.0) * em * ec * (phi_rad - phi0_rad).cos();
    Ok(bessel_j(0, xi2.max(T::zero()).sqrt())?.abs())
}

/// DPP gain as an average over one subarray:
/// `(1/P) sum_i J0(R_i)`, `R_i = 2 sqrt(2) pi R (f - fc) / c * sqrt(1 - cos((2i+1) pi/N - pi/K))`.
pub fn gain_lemma3<T: Real>(f_hz: T, fc_hz: T, radius_m: T, n_elements: usize, n_ttd: usize) -> Result<T> {
    if n_ttd == 0 || n_elements == 0 || n_elements % n_ttd != 0 {
        return Err(Error::Domain(format!(
            "K = {n_ttd} must divide N = {n_elements}"
        )));
    }
    let de = delta_eta(f_hz, fc_hz, radius_m)?;
    let p = n_elements / n_ttd;
    let scale = de * T::lit(2.0).sqrt();
    let off = T::PI() / T::count(n_ttd);
    let mut sum = T::zero();
    for i in 0..p {
        let ang = T::count(2 * i + 1) * T::PI() / T::count(n_elements) - off;
        let arg = scale * (T::one() - ang.cos()).max(T::zero()).sqrt();
        sum = sum + bessel_j(0, arg)?;
    }
    Ok(sum / T::count(p))
}

/// Continuum limit of [`gain_lemma3`]:
/// `|1F2(1/2; 1, 3/2; -a^2/4)|` with `a = 2 pi^2 R (f - fc) / (c K)`.
pub fn gain_corollary1<T: Real>(f_hz: T, fc_hz: T, radius_m: T, n_ttd: usize) -> Result<T> {
    if n_ttd == 0 {
        return Err(Error::Domain("need at least one TTD unit".into()));
    }
    let a = delta_eta(f_hz, fc_hz, radius_m)? * T::PI() / T::count(n_ttd);
    Ok(defocus_1f2(a, &SeriesControl::default())?.abs())
}

/// Smallest TTD count keeping the band-edge gain loss below `delta`:
/// `K_min = pi^2 R B / (c F^-1(1 - delta))`, returned unrounded.
pub fn min_ttd_count<T: Real>(delta: T, radius_m: T, bandwidth_hz: T) -> Result<T> {
    if !(delta > T::zero() && delta < T::one()) {
        return Err(Error::Domain(format!("loss threshold must lie in (0, 1), got {delta}")));
    }
    positive("radius", radius_m)?;
    if !(bandwidth_hz >= T::zero() && bandwidth_hz.is_finite()) {
        return Err(Error::Domain(format!("bandwidth must be non-negative, got {bandwidth_hz}")));
    }
    let x = inverse_1f2_threshold(T::one() - delta, &SeriesControl::default())?;
    Ok(T::PI() * T::PI() * radius_m * bandwidth_hz / (T::light() * x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uca() -> UcaGeometry<f64> {
        UcaGeometry::half_wavelength(256, 30e9).unwrap()
    }

    #[test]
    fn exact_gain_basics() {
        let g = uca();
        let a = g.steering(31e9, 0.4);
        assert!((exact_gain(&a, &g, 31e9, 0.4).unwrap() - 1.0).abs() < 1e-12);
        assert!((classic_gain(&g, 30e9, 30e9, 2.2).unwrap() - 1.0).abs() < 1e-12);
        let b = g.steering(30e9, 1.0);
        let proj = inner(&a, &b);
        let mut w: Vec<_> = b.iter().zip(&a).map(|(bi, ai)| bi - ai * proj).collect();
        let n = vec_norm(&w);
        w.iter_mut().for_each(|z| *z = *z / n);
        assert!(exact_gain(&w, &g, 31e9, 0.4).unwrap() < 1e-12);
        let double: Vec<_> = a.iter().map(|z| z * 2.0).collect();
        assert!(exact_gain(&double, &g, 31e9, 0.4).is_err());
        assert!(exact_gain(&a[..10], &g, 31e9, 0.4).is_err());
    }

    #[test]
    fn lemma1_values() {
        let r = uca().radius_m();
        assert_eq!(gain_lemma1(30e9, 30e9, r).unwrap(), 1.0);
        let first_zero = 2.404_825_557_695_773;
        let df = first_zero * 3e8 / (std::f64::consts::TAU * r);
        assert!((df - 563.6e6).abs() < 1e6, "{df}");
        assert!(gain_lemma1(30e9 + df, 30e9, r).unwrap() < 1e-12);
        assert!(gain_lemma1(-1.0, 30e9, r).is_err());
    }

    #[test]
    fn lemma2_reduces_to_lemma1() {
        let r = uca().radius_m();
        assert_eq!(gain_lemma2(30e9, 30e9, r, 1.0, 1.0).unwrap(), 1.0);
        for f in [28.7e9, 29.9e9, 31.1e9] {
            let a = gain_lemma2(f, 30e9, r, 0.3, 0.3).unwrap();
            let b = gain_lemma1(f, 30e9, r).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn lemma2_never_reaches_one_off_center() {
        let r = uca().radius_m();
        let best = (0..2048)
            .map(|i| gain_lemma2(31e9, 30e9, r, i as f64 * std::f64::consts::TAU / 2048.0, 0.0).unwrap())
            .fold(0.0, f64::max);
        assert!(best < 1.0 - 1e-3, "{best}");
    }

    #[test]
    fn lemma3_limits() {
        let r = uca().radius_m();
        assert_eq!(gain_lemma3(30e9, 30e9, r, 256, 8).unwrap(), 1.0);
        assert_eq!(gain_lemma3(31.3e9, 30e9, r, 256, 256).unwrap(), 1.0);
        assert!(gain_lemma3(31e9, 30e9, r, 256, 6).is_err());
    }

    #[test]
    fn corollary1_shape() {
        let r = uca().radius_m();
        assert_eq!(gain_corollary1(30e9, 30e9, r, 8).unwrap(), 1.0);
        let mut last = 1.0;
        for i in 1..=40 {
            let g = gain_corollary1(30e9 + i as f64 * 50e6, 30e9, r, 8).unwrap();
            assert!(g <= last + 1e-15);
            last = g;
        }
        for i in 0..=30 {
            let f = 28.5e9 + i as f64 * 0.1e9;
            let c = gain_corollary1(f, 30e9, r, 8).unwrap();
            let l = gain_lemma3(f, 30e9, r, 256, 8).unwrap();
            assert!((c - l).abs() < 0.02);
        }
    }

    #[test]
    fn ttd_count_scaling() {
        let r = uca().radius_m();
        let k = min_ttd_count(0.4, r, 3e9).unwrap();
        assert!((k - 8.2).abs() < 0.2, "{k}");
        let k2 = min_ttd_count(0.4, r, 6e9).unwrap();
        assert!((k2 - 2.0 * k).abs() < 1e-9);
        assert_eq!(min_ttd_count(0.4, r, 0.0).unwrap(), 0.0);
        assert!(min_ttd_count(0.0, r, 1e9).is_err());
        assert!(min_ttd_count(1.0, r, 1e9).is_err());
    }

    #[test]
    fn dpp_gain_center_and_guard() {
        let g = uca();
        let v = dpp_gain(&g, 30e9, 30e9, 1.0, 8, SubarrayReference::Algorithm).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
        assert!(dpp_gain(&g, 30e9, 30e9, 1.0, 7, SubarrayReference::Algorithm).is_err());
    }
}
