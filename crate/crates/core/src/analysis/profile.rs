use crate::{Error, Real, Result};

/// What a [`GainProfile`]'s coordinates measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GainAxis {
    /// Hertz.
    Frequency,
    /// Radians.
    Angle,
}

/// Gain sampled along one axis, with a label naming the curve.
#[derive(Debug, Clone, PartialEq)]
pub struct GainProfile<T> {
    axis: GainAxis,
    label: String,
    samples: Vec<(T, T)>,
}

fn check_increasing<T: Real>(samples: &[(T, T)]) -> Result<()> {
    if samples.windows(2).any(|w| !(w[1].0 > w[0].0)) {
        return Err(Error::Domain("profile coordinates must be strictly increasing".into()));
    }
    Ok(())
}

impl<T: Real> GainProfile<T> {
    pub fn new(axis: GainAxis, label: impl Into<String>, samples: Vec<(T, T)>) -> Result<Self> {
        check_increasing(&samples)?;
        if samples.iter().any(|s| !(s.1 >= T::zero() && s.1.is_finite())) {
            return Err(Error::Domain("gains must be finite and non-negative".into()));
        }
        Ok(Self {
            axis,
            label: label.into(),
            samples,
        })
    }

    /// Evaluates `gain` at every coordinate.
    pub fn sample(
        axis: GainAxis,
        label: impl Into<String>,
        coords: &[T],
        gain: impl Fn(T) -> Result<T>,
    ) -> Result<Self> {
        let samples = coords
            .iter()
            .map(|&x| gain(x).map(|g| (x, g)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(axis, label, samples)
    }

    pub fn axis(&self) -> GainAxis {
        self.axis
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn samples(&self) -> &[(T, T)] {
        &self.samples
    }

    pub fn min_gain(&self) -> Option<T> {
        self.samples.iter().map(|s| s.1).reduce(T::min)
    }

    pub fn max_gain(&self) -> Option<T> {
        self.samples.iter().map(|s| s.1).reduce(T::max)
    }
}

/// Spectrum efficiency in bits/s/Hz against a sweep coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct SeProfile<T> {
    method: String,
    samples: Vec<(T, T)>,
}

impl<T: Real> SeProfile<T> {
    pub fn new(method: impl Into<String>, samples: Vec<(T, T)>) -> Result<Self> {
        check_increasing(&samples)?;
        if samples.iter().any(|s| !(s.1 >= T::zero() && s.1.is_finite())) {
            return Err(Error::Domain("spectrum efficiency must be finite and non-negative".into()));
        }
        Ok(Self {
            method: method.into(),
            samples,
        })
    }

    pub fn method(&self) -> &str {
        &self.method
    }

    pub fn samples(&self) -> &[(T, T)] {
        &self.samples
    }
}

/// `points` equally spaced angles covering `[0, 2 pi)`.
pub fn angle_grid<T: Real>(points: usize) -> Vec<T> {
    let step = T::TAU() / T::count(points.max(1));
    (0..points).map(|i| step * T::count(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_invariants() {
        let p = GainProfile::sample(GainAxis::Angle, "flat", &angle_grid::<f64>(8), |_| Ok(0.5)).unwrap();
        assert_eq!(p.samples().len(), 8);
        assert_eq!(p.min_gain(), Some(0.5));
        assert_eq!(p.label(), "flat");
        assert!(GainProfile::new(GainAxis::Frequency, "x", vec![(1.0, 0.1), (1.0, 0.2)]).is_err());
        assert!(GainProfile::new(GainAxis::Frequency, "x", vec![(1.0, -0.1)]).is_err());
        assert!(SeProfile::new("dpp", vec![(0.0, 1.0), (1.0, 2.0)]).is_ok());
        assert!(SeProfile::new("dpp", vec![(0.0, f64::NAN)]).is_err());
    }

    #[test]
    fn grid_covers_circle() {
        let g = angle_grid::<f64>(1024);
        assert_eq!(g[0], 0.0);
        assert!(g[1023] < std::f64::consts::TAU);
        assert!((g[512] - std::f64::consts::PI).abs() < 1e-15);
    }
}
