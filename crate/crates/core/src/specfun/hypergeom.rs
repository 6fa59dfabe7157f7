use super::dword::DoubleWord;
use super::SeriesControl;
use crate::{Error, Real, Result};

/// Generalized hypergeometric series `pFq(numer; denom; z)`.
///
/// Terms follow `t_{n+1} = t_n * prod(a_i + n) / prod(b_j + n) * z / (n + 1)`
/// and are accumulated in double-word arithmetic, so alternating series with
/// large intermediate terms keep full working precision in the result.
pub fn hypergeom_pfq<T: Real>(
    numer: &[T],
    denom: &[T],
    z: T,
    ctrl: &SeriesControl<T>,
) -> Result<T> {
    if !z.is_finite() {
        return Err(Error::Domain(format!("hypergeometric argument must be finite, got {z}")));
    }
    if numer.iter().chain(denom).any(|p| !p.is_finite()) {
        return Err(Error::Domain("hypergeometric parameters must be finite".into()));
    }
    if let Some(b) = denom.iter().find(|b| **b <= T::zero() && b.fract() == T::zero()) {
        return Err(Error::Domain(format!(
            "denominator parameter {b} is a non-positive integer"
        )));
    }

    let mut term = DoubleWord::new(T::one());
    let mut sum = term;
    let mut quiet = 0;
    for n in 0..ctrl.max_terms() {
        let nt = T::count(n);
        for a in numer {
            let f = *a + nt;
            if f == T::zero() {
                // Terminating polynomial.
                return Ok(sum.value());
            }
            term = term.mul(f);
        }
        for b in denom {
            term = term.div(*b + nt);
        }
        term = term.mul(z).div(nt + T::one());
        sum = sum.add(term);
        if ctrl.is_negligible(term.hi, sum.hi) {
            quiet += 1;
            if quiet >= 2 {
                return Ok(sum.value());
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::Convergence {
        partial_sum: sum.value().as_f64(),
        terms: ctrl.max_terms(),
    })
}

/// `1F2(a; b1, b2; z)`.
pub fn hypergeom_1f2<T: Real>(a: T, b1: T, b2: T, z: T, ctrl: &SeriesControl<T>) -> Result<T> {
    hypergeom_pfq(&[a], &[b1, b2], z, ctrl)
}

/// `2F3(a1, a2; b1, b2, b3; z)`.
pub fn hypergeom_2f3<T: Real>(
    a1: T,
    a2: T,
    b1: T,
    b2: T,
    b3: T,
    z: T,
    ctrl: &SeriesControl<T>,
) -> Result<T> {
    hypergeom_pfq(&[a1, a2], &[b1, b2, b3], z, ctrl)
}

/// `1F2(1/2; 1, 3/2; -x^2/4)`, the running mean `(1/x) int_0^x J_0`.
pub fn defocus_1f2<T: Real>(x: T, ctrl: &SeriesControl<T>) -> Result<T> {
    let h = T::lit(0.5);
    hypergeom_1f2(h, T::one(), T::lit(1.5), -(x * x) * T::lit(0.25), ctrl)
}

/// `2F3(1/2, 1/2; 1, 3/2, 3/2; -x^2/4)`, the mean of [`defocus_1f2`] over `[0, x]`.
pub fn defocus_2f3<T: Real>(x: T, ctrl: &SeriesControl<T>) -> Result<T> {
    let h = T::lit(0.5);
    let b = T::lit(1.5);
    hypergeom_2f3(h, h, T::one(), b, b, -(x * x) * T::lit(0.25), ctrl)
}

/// Smallest `x >= 0` with `1F2(1/2; 1, 3/2; -x^2/4) = target`.
///
/// The function starts at 1 and decreases until its first local minimum; the
/// root is bracketed on that branch by a forward scan and refined by
/// bisection. Targets below the branch minimum are reported as
/// [`Error::Unbracketable`].
pub fn inverse_1f2_threshold<T: Real>(target: T, ctrl: &SeriesControl<T>) -> Result<T> {
    if !(target > T::zero() && target <= T::one()) {
        return Err(Error::Domain(format!("threshold target must lie in (0, 1], got {target}")));
    }
    if target == T::one() {
        return Ok(T::zero());
    }
    let f = |x: T| defocus_1f2(x, ctrl);

    let step = T::lit(1.0 / 16.0);
    let (mut lo, mut f_lo) = (T::zero(), T::one());
    let hi = loop {
        let x = lo + step;
        let fx = f(x)?;
        if fx <= target {
            break x;
        }
        if fx >= f_lo {
            let minimum = branch_minimum(lo - step, x, &f)?;
            return Err(Error::Unbracketable {
                target: target.as_f64(),
                minimum: minimum.as_f64(),
            });
        }
        lo = x;
        f_lo = fx;
    };

    let mut hi = hi;
    for _ in 0..200 {
        let mid = (lo + hi) * T::lit(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid)? > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (r_lo, r_hi) = ((f(lo)? - target).abs(), (f(hi)? - target).abs());
    Ok(if r_lo < r_hi { lo } else { hi })
}

/// Golden-section refinement of the minimum value on `[a, b]`.
fn branch_minimum<T: Real>(mut a: T, mut b: T, f: &impl Fn(T) -> Result<T>) -> Result<T> {
    let g = T::lit(0.618_033_988_749_894_9);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    for _ in 0..100 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d)?;
        }
    }
    Ok(fc.min(fd))
}
