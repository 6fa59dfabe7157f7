use crate::{Error, Real, Result};

const PANELS: usize = 16;
const MAX_DEPTH: u32 = 50;
const MIN_DEPTH: u32 = 2;
/// Bisections allowed across all panels before giving up.
const MAX_SPLITS: usize = 1 << 20;

/// Adaptive Simpson quadrature of `f` over `[lo, hi]`.
///
/// The interval is split into fixed panels, each refined by bisection until
/// the Richardson error estimate is below its share of `tol`. Hitting the
/// depth limit anywhere yields [`Error::Quadrature`] with the best estimate.
pub fn integrate<T: Real, F: Fn(T) -> T>(f: F, lo: T, hi: T, tol: T) -> Result<T> {
    if !(lo.is_finite() && hi.is_finite()) || lo > hi {
        return Err(Error::Domain(format!("integration bounds must satisfy lo <= hi, got [{lo}, {hi}]")));
    }
    if !(tol > T::zero()) {
        return Err(Error::Domain("integration tolerance must be positive".into()));
    }
    if lo == hi {
        return Ok(T::zero());
    }
    let eval = |x: T| -> Result<T> {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Domain(format!("integrand is not finite at {x}")))
        }
    };

    let width = (hi - lo) / T::count(PANELS);
    let panel_tol = tol / T::count(PANELS);
    let mut total = T::zero();
    let mut state = State { ok: true, splits: 0 };
    for p in 0..PANELS {
        let a = lo + width * T::count(p);
        let b = if p + 1 == PANELS { hi } else { a + width };
        let m = (a + b) * T::lit(0.5);
        let (fa, fm, fb) = (eval(a)?, eval(m)?, eval(b)?);
        let whole = simpson(a, b, fa, fm, fb);
        total = total + refine(&eval, a, b, fa, fm, fb, whole, panel_tol, 0, &mut state)?;
    }
    if state.ok {
        Ok(total)
    } else {
        Err(Error::Quadrature {
            estimate: total.as_f64(),
        })
    }
}

struct State {
    ok: bool,
    splits: usize,
}

#[inline]
fn simpson<T: Real>(a: T, b: T, fa: T, fm: T, fb: T) -> T {
    (b - a) / T::lit(6.0) * (fa + T::lit(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<T: Real>(
    eval: &impl Fn(T) -> Result<T>,
    a: T,
    b: T,
    fa: T,
    fm: T,
    fb: T,
    whole: T,
    tol: T,
    depth: u32,
    state: &mut State,
) -> Result<T> {
    let m = (a + b) * T::lit(0.5);
    let lm = (a + m) * T::lit(0.5);
    let rm = (m + b) * T::lit(0.5);
    let (flm, frm) = (eval(lm)?, eval(rm)?);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    let fifteen = T::lit(15.0);
    let roundoff = T::lit(64.0) * T::epsilon() * (left.abs() + right.abs());
    if depth >= MIN_DEPTH && (delta.abs() <= fifteen * tol || delta.abs() <= roundoff) {
        return Ok(left + right + delta / fifteen);
    }
    if depth >= MAX_DEPTH || state.splits >= MAX_SPLITS || lm <= a || rm >= b {
        state.ok = false;
        return Ok(left + right + delta / fifteen);
    }
    state.splits += 1;
    let half = tol * T::lit(0.5);
    Ok(refine(eval, a, m, fa, flm, fm, left, half, depth + 1, state)?
        + refine(eval, m, b, fm, frm, fb, right, half, depth + 1, state)?)
}
