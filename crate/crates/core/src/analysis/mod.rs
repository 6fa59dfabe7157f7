//! Beamforming gains, TTD sizing, band-averaged gains and spectrum efficiency.
//!
//! Exact gains are inner products of steering vectors with a beam. The
//! closed forms replace them with Bessel/hypergeometric expressions that do
//! not depend on the beam angle.

mod average;
mod gain;
mod profile;
mod spectral;

pub use average::{
    avg_gain_ps_lower, avg_gain_ps_numeric, avg_gain_ps_upper, avg_gain_ps_upper_cs, avg_gain_ttd,
    avg_gain_ttd_numeric, gain_improvement,
};
pub use gain::{
    classic_gain, dpp_gain, exact_gain, gain_corollary1, gain_lemma1, gain_lemma2, gain_lemma3,
    min_ttd_count,
};
pub use profile::{angle_grid, GainAxis, GainProfile, SeProfile};
pub use spectral::{
    analog_leakage, spectrum_efficiency, spectrum_efficiency_optimal, spectrum_efficiency_precoded,
};

use crate::{Error, Real, Result};

pub(crate) fn positive<T: Real>(name: &str, v: T) -> Result<T> {
    if v > T::zero() && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!("{name} must be positive and finite, got {v}")))
    }
}
