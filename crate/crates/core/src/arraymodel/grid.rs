use crate::{Error, Real, Result};

/// OFDM subcarrier grid.
///
/// Subcarrier `i` (zero-based) sits at `fc + B (2i + 1 - M) / (2M)`, which is
/// the usual `f_m = fc + B(2m - 1 - M)/(2M)` with `m = i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid<T> {
    fc_hz: T,
    bandwidth_hz: T,
    freqs_hz: Vec<T>,
}

impl<T: Real> FrequencyGrid<T> {
    pub fn new(fc_hz: T, bandwidth_hz: T, n_subcarriers: usize) -> Result<Self> {
        if n_subcarriers == 0 {
            return Err(Error::Domain("grid needs at least one subcarrier".into()));
        }
        if !(fc_hz > T::zero() && fc_hz.is_finite()) {
            return Err(Error::Domain(format!("center frequency must be positive, got {fc_hz}")));
        }
        if !(bandwidth_hz >= T::zero() && bandwidth_hz.is_finite()) {
            return Err(Error::Domain(format!("bandwidth must be non-negative, got {bandwidth_hz}")));
        }
        let m = T::count(n_subcarriers);
        let freqs_hz: Vec<T> = (0..n_subcarriers)
            .map(|i| fc_hz + bandwidth_hz * (T::count(2 * i + 1) - m) / (T::lit(2.0) * m))
            .collect();
        if freqs_hz[0] <= T::zero() {
            return Err(Error::Domain("bandwidth pushes the lowest subcarrier to or below zero".into()));
        }
        Ok(Self {
            fc_hz,
            bandwidth_hz,
            freqs_hz,
        })
    }

    pub fn fc_hz(&self) -> T {
        self.fc_hz
    }

    pub fn bandwidth_hz(&self) -> T {
        self.bandwidth_hz
    }

    pub fn n_subcarriers(&self) -> usize {
        self.freqs_hz.len()
    }

    pub fn freqs_hz(&self) -> &[T] {
        &self.freqs_hz
    }

    pub fn freq(&self, index: usize) -> Result<T> {
        self.freqs_hz.get(index).copied().ok_or(Error::IndexOutOfRange {
            index,
            len: self.freqs_hz.len(),
        })
    }
}
