use num_complex::Complex;

use crate::{Error, Real, Result};

/// Uniform circular array in the azimuth plane.
///
/// Element `n` sits at angle `psi_n = 2 pi n / N` on a circle of radius `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct UcaGeometry<T> {
    n_elements: usize,
    radius_m: T,
    element_angles: Vec<T>,
}

impl<T: Real> UcaGeometry<T> {
    pub fn new(n_elements: usize, radius_m: T) -> Result<Self> {
        if n_elements == 0 {
            return Err(Error::Domain("UCA needs at least one element".into()));
        }
        if !(radius_m > T::zero() && radius_m.is_finite()) {
            return Err(Error::Domain(format!("UCA radius must be positive, got {radius_m}")));
        }
        let step = T::TAU() / T::count(n_elements);
        let element_angles = (0..n_elements).map(|n| step * T::count(n)).collect();
        Ok(Self {
            n_elements,
            radius_m,
            element_angles,
        })
    }

    /// UCA whose adjacent elements are half a carrier wavelength apart along
    /// the circle, i.e. `R = N * lambda_c / (4 pi)`.
    pub fn half_wavelength(n_elements: usize, fc_hz: T) -> Result<Self> {
        if n_elements < 2 {
            return Err(Error::Domain("half-wavelength UCA needs at least two elements".into()));
        }
        if !(fc_hz > T::zero()) {
            return Err(Error::Domain(format!("carrier frequency must be positive, got {fc_hz}")));
        }
        let r = T::count(n_elements) * T::light() / (T::lit(4.0) * T::PI() * fc_hz);
        Self::new(n_elements, r)
    }

    pub fn n_elements(&self) -> usize {
        self.n_elements
    }

    pub fn radius_m(&self) -> T {
        self.radius_m
    }

    pub fn element_angles(&self) -> &[T] {
        &self.element_angles
    }

    /// `eta = 2 pi R f / c`.
    pub fn eta(&self, f_hz: T) -> T {
        T::TAU() * self.radius_m * f_hz / T::light()
    }

    pub fn steering(&self, f_hz: T, phi_rad: T) -> Vec<Complex<T>> {
        let eta = self.eta(f_hz);
        let amp = T::count(self.n_elements).sqrt().recip();
        self.element_angles
            .iter()
            .map(|&psi| Complex::from_polar(amp, eta * (phi_rad - psi).cos()))
            .collect()
    }
}

/// Uniform linear array with element spacing `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct UlaGeometry<T> {
    n_elements: usize,
    spacing_m: T,
}

impl<T: Real> UlaGeometry<T> {
    pub fn new(n_elements: usize, spacing_m: T) -> Result<Self> {
        if n_elements == 0 {
            return Err(Error::Domain("ULA needs at least one element".into()));
        }
        if !(spacing_m > T::zero() && spacing_m.is_finite()) {
            return Err(Error::Domain(format!("ULA spacing must be positive, got {spacing_m}")));
        }
        Ok(Self {
            n_elements,
            spacing_m,
        })
    }

    /// ULA with `d = lambda_c / 2`.
    pub fn half_wavelength(n_elements: usize, fc_hz: T) -> Result<Self> {
        if !(fc_hz > T::zero()) {
            return Err(Error::Domain(format!("carrier frequency must be positive, got {fc_hz}")));
        }
        Self::new(n_elements, T::light() / (T::lit(2.0) * fc_hz))
    }

    pub fn n_elements(&self) -> usize {
        self.n_elements
    }

    pub fn spacing_m(&self) -> T {
        self.spacing_m
    }

    pub fn steering(&self, f_hz: T, phi_rad: T) -> Vec<Complex<T>> {
        let k = T::TAU() * self.spacing_m * f_hz / T::light() * phi_rad.sin();
        let amp = T::count(self.n_elements).sqrt().recip();
        (0..self.n_elements)
            .map(|n| Complex::from_polar(amp, k * T::count(n)))
            .collect()
    }
}

/// UCA steering vector `a(f, phi)`, entries `exp(j eta cos(phi - psi_n)) / sqrt(N)`.
pub fn steering_uca<T: Real>(geom: &UcaGeometry<T>, f_hz: T, phi_rad: T) -> Result<Vec<Complex<T>>> {
    check_frequency(f_hz)?;
    Ok(geom.steering(f_hz, phi_rad))
}

/// ULA steering vector, entries `exp(j 2 pi n d f sin(phi) / c) / sqrt(N_r)`.
pub fn steering_ula<T: Real>(geom: &UlaGeometry<T>, f_hz: T, phi_rad: T) -> Result<Vec<Complex<T>>> {
    check_frequency(f_hz)?;
    Ok(geom.steering(f_hz, phi_rad))
}

fn check_frequency<T: Real>(f_hz: T) -> Result<()> {
    if f_hz > T::zero() && f_hz.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("frequency must be positive, got {f_hz}")))
    }
}
