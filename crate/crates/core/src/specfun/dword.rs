//! Double-word ("double-double") accumulation.
//!
//! Hypergeometric series with large negative arguments have terms many orders
//! of magnitude above the result. Carrying each term and the running sum as
//! an unevaluated pair `hi + lo` keeps the cancellation exact to roughly twice
//! the working precision.

use crate::Real;

#[derive(Debug, Clone, Copy)]
pub(crate) struct DoubleWord<T> {
    pub hi: T,
    pub lo: T,
}

#[inline]
fn two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn fast_two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod<T: Real>(a: T, b: T) -> (T, T) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl<T: Real> DoubleWord<T> {
    pub fn new(v: T) -> Self {
        Self {
            hi: v,
            lo: T::zero(),
        }
    }

    fn norm(hi: T, lo: T) -> Self {
        let (hi, lo) = fast_two_sum(hi, lo);
        Self { hi, lo }
    }

    pub fn add(self, o: Self) -> Self {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = fast_two_sum(s, e + t);
        Self::norm(s, e + f)
    }

    pub fn mul(self, b: T) -> Self {
        let (p, e) = two_prod(self.hi, b);
        Self::norm(p, e + self.lo * b)
    }

    pub fn div(self, b: T) -> Self {
        let q = self.hi / b;
        let (p, e) = two_prod(q, b);
        let r = ((self.hi - p) - e + self.lo) / b;
        Self::norm(q, r)
    }

    pub fn value(self) -> T {
        self.hi + self.lo
    }
}
