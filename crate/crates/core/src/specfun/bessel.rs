use crate::{Error, Real, Result};

/// Arguments up to this magnitude use the power series.
const SERIES_LIMIT: f64 = 12.0;

/// Bessel function of the first kind `J_n(x)` for integer order `n >= 0`.
///
/// Small arguments are summed from the power series; larger ones use Miller's
/// downward recurrence normalized with `J_0 + 2 sum_k J_{2k} = 1`. Negative
/// arguments follow `J_n(-x) = (-1)^n J_n(x)`.
pub fn bessel_j<T: Real>(order: u32, x: T) -> Result<T> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("bessel_j argument must be finite, got {x}")));
    }
    let ax = x.abs();
    let v = if ax <= T::lit(SERIES_LIMIT) {
        power_series(order, ax)
    } else {
        downward_recurrence(order, ax)
    };
    Ok(if x < T::zero() && order % 2 == 1 { -v } else { v })
}

/// `J_0(x)`; NaN for non-finite input.
#[inline]
pub fn j0<T: Real>(x: T) -> T {
    bessel_j(0, x).unwrap_or_else(|_| T::nan())
}

fn power_series<T: Real>(order: u32, x: T) -> T {
    let half = x * T::lit(0.5);
    // (x/2)^n / n!
    let mut term = (1..=order).fold(T::one(), |acc, k| acc * half / T::count(k as usize));
    let mut sum = term;
    let q = -(half * half);
    let n = T::count(order as usize);
    for k in 1..400usize {
        let kt = T::count(k);
        term = term * q / (kt * (kt + n));
        sum = sum + term;
        if kt > half && term.abs() <= T::epsilon() * sum.abs() {
            break;
        }
    }
    sum
}

fn downward_recurrence<T: Real>(order: u32, x: T) -> T {
    let n = order as usize;
    let top = n.max(x.ceil().to_usize().unwrap_or(usize::MAX / 4));
    let mut start = top + 20 + (40.0 * top as f64).sqrt() as usize;
    if start % 2 == 1 {
        start += 1;
    }
    let big = T::max_value().sqrt();
    let small = big.recip();
    let two_over_x = T::lit(2.0) / x;

    // cur = J_k, next = J_{k+1}, both up to a common scale.
    let mut next = T::zero();
    let mut cur = T::min_positive_value().sqrt();
    let mut even_sum = if start % 2 == 0 { cur } else { T::zero() };
    let mut picked = if start == n { cur } else { T::zero() };
    for k in (1..=start).rev() {
        let prev = T::count(k) * two_over_x * cur - next;
        next = cur;
        cur = prev;
        if cur.abs() > big {
            cur = cur * small;
            next = next * small;
            even_sum = even_sum * small;
            picked = picked * small;
        }
        let idx = k - 1;
        if idx == n {
            picked = cur;
        }
        if idx > 0 && idx % 2 == 0 {
            even_sum = even_sum + cur;
        }
    }
    picked / (cur + T::lit(2.0) * even_sum)
}
