//! Special functions needed by the closed-form gain expressions.
//!
//! Bessel functions of the first kind, generalized hypergeometric series,
//! a first-branch inverse of `1F2(1/2; 1, 3/2; -x^2/4)` and an adaptive
//! Simpson integrator that serves as an oracle for the closed forms.

mod bessel;
mod dword;
mod hypergeom;
mod quad;

pub use bessel::{bessel_j, j0};
pub use hypergeom::{
    defocus_1f2, defocus_2f3, hypergeom_1f2, hypergeom_2f3, hypergeom_pfq, inverse_1f2_threshold,
};
pub use quad::integrate;

use crate::{Error, Real, Result};

/// Truncation control for power series.
///
/// A series stops once two consecutive terms are no larger than
/// `max(abs_tol, rel_tol * |partial sum|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl<T> {
    max_terms: usize,
    abs_tol: T,
    rel_tol: T,
}

impl<T: Real> SeriesControl<T> {
    pub fn new(max_terms: usize, abs_tol: T, rel_tol: T) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::Domain("max_terms must be at least 1".into()));
        }
        if !(abs_tol >= T::zero() && rel_tol >= T::zero()) {
            return Err(Error::Domain("series tolerances must be non-negative".into()));
        }
        if abs_tol == T::zero() && rel_tol == T::zero() {
            return Err(Error::Domain("at least one series tolerance must be positive".into()));
        }
        Ok(Self {
            max_terms,
            abs_tol,
            rel_tol,
        })
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn abs_tol(&self) -> T {
        self.abs_tol
    }

    pub fn rel_tol(&self) -> T {
        self.rel_tol
    }

    pub(crate) fn is_negligible(&self, term: T, sum: T) -> bool {
        term.abs() <= self.abs_tol.max(self.rel_tol * sum.abs())
    }
}

impl<T: Real> Default for SeriesControl<T> {
    fn default() -> Self {
        Self {
            max_terms: 2000,
            abs_tol: T::min_positive_value(),
            rel_tol: T::epsilon() * T::lit(0.5),
        }
    }
}
