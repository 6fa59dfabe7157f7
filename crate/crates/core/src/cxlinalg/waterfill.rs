use crate::{Error, Real, Result};

/// Water-filling power allocation `p_i = max(0, mu - 1/g_i)` with
/// `sum p_i = total_power`.
///
/// The water level is found in closed form by sorting the gains and dropping
/// the weakest channels until every active channel gets positive power.
pub fn water_filling<T: Real>(gains: &[T], total_power: T) -> Result<Vec<T>> {
    if gains.is_empty() {
        return Err(Error::Domain("water_filling needs at least one channel".into()));
    }
    if let Some(g) = gains.iter().find(|g| !(**g > T::zero() && g.is_finite())) {
        return Err(Error::Domain(format!("channel gains must be positive and finite, got {g}")));
    }
    if !(total_power > T::zero() && total_power.is_finite()) {
        return Err(Error::Domain(format!("total power must be positive, got {total_power}")));
    }

    let mut order: Vec<usize> = (0..gains.len()).collect();
    order.sort_by(|&i, &j| gains[j].partial_cmp(&gains[i]).unwrap_or(std::cmp::Ordering::Equal));
    let mut inv_sum = T::zero();
    let mut level = T::zero();
    let mut active = 0;
    for (n, &i) in order.iter().enumerate() {
        let inv = gains[i].recip();
        let candidate = (total_power + inv_sum + inv) / T::count(n + 1);
        if candidate <= inv {
            break;
        }
        inv_sum = inv_sum + inv;
        level = candidate;
        active = n + 1;
    }

    let mut power = vec![T::zero(); gains.len()];
    for &i in &order[..active] {
        power[i] = level - gains[i].recip();
    }
    Ok(power)
}
