use num_complex::Complex;

use super::CxMatrix;
use crate::{Error, Real, Result};

const MAX_SWEEPS: usize = 80;

/// Thin singular value decomposition `a = u * diag(sigma) * vh`.
///
/// For an `m x n` input with `k = min(m, n)`: `u` is `m x k` with orthonormal
/// columns, `sigma` has `k` non-increasing entries and `vh` is `k x n` with
/// orthonormal rows.
#[derive(Debug, Clone)]
pub struct SvdResult<T> {
    pub u: CxMatrix<T>,
    pub sigma: Vec<T>,
    pub vh: CxMatrix<T>,
}

impl<T: Real> SvdResult<T> {
    /// `u * diag(sigma) * vh`.
    pub fn reconstruct(&self) -> CxMatrix<T> {
        let mut us = self.u.clone();
        for j in 0..us.cols() {
            for i in 0..us.rows() {
                us[(i, j)] = us[(i, j)] * self.sigma[j];
            }
        }
        us.matmul(&self.vh).expect("svd factors are conformant")
    }

    /// Number of singular values above `tol * sigma_max`.
    pub fn rank(&self, tol: T) -> usize {
        let top = self.sigma.first().copied().unwrap_or_else(T::zero);
        self.sigma.iter().filter(|&&s| s > tol * top).count()
    }
}

/// One-sided (Hestenes) Jacobi SVD.
///
/// Columns of a working copy are rotated pairwise until mutually orthogonal;
/// the right rotations accumulate into `V`. Wide inputs are handled through
/// their conjugate transpose.
pub fn svd<T: Real>(a: &CxMatrix<T>) -> Result<SvdResult<T>> {
    if a.rows() == 0 || a.cols() == 0 {
        return Err(Error::Dimension("svd of an empty matrix".into()));
    }
    if !a.is_finite() {
        return Err(Error::Domain("svd input must be finite".into()));
    }
    if a.rows() >= a.cols() {
        tall_svd(a)
    } else {
        let t = tall_svd(&a.hermitian())?;
        Ok(SvdResult {
            u: t.vh.hermitian(),
            sigma: t.sigma,
            vh: t.u.hermitian(),
        })
    }
}

fn tall_svd<T: Real>(a: &CxMatrix<T>) -> Result<SvdResult<T>> {
    let (m, n) = a.shape();
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let mut w: Vec<Vec<Complex<T>>> = (0..n).map(|j| a.column(j)).collect();
    let mut v: Vec<Vec<Complex<T>>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { one } else { zero }).collect())
        .collect();
    let tol = T::epsilon() * T::count(m);

    let mut converged = n == 1;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let alpha: T = w[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: T = w[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma = w[p]
                    .iter()
                    .zip(&w[q])
                    .fold(zero, |acc, (x, y)| acc + x.conj() * y);
                let g = gamma.norm();
                if g == T::zero() || g <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let zeta = (beta - alpha) / (T::lit(2.0) * g);
                let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = (T::one() + t * t).sqrt().recip();
                let s = c * t;
                rotate(&mut w, p, q, c, s, phase);
                rotate(&mut v, p, q, c, s, phase);
            }
        }
        converged = !rotated;
    }
    if !converged {
        return Err(Error::SvdNoConvergence {
            rows: m,
            cols: n,
            sweeps: MAX_SWEEPS,
        });
    }

    let norms: Vec<T> = w
        .iter()
        .map(|c| c.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap_or(std::cmp::Ordering::Equal));
    let top = norms[order[0]];
    let cutoff = top * T::epsilon() * T::count(m.max(n));

    let mut u_cols: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
    let mut deficient = Vec::new();
    for (slot, &j) in order.iter().enumerate() {
        if norms[j] > cutoff && norms[j] > T::zero() {
            let inv = norms[j].recip();
            u_cols.push(w[j].iter().map(|z| z * inv).collect());
        } else {
            u_cols.push(vec![zero; m]);
            deficient.push(slot);
        }
    }
    for slot in deficient {
        u_cols[slot] = complement(&u_cols, slot, m);
    }

    let sigma: Vec<T> = order.iter().map(|&j| norms[j]).collect();
    let u = CxMatrix::from_columns(&u_cols)?;
    let v_sorted: Vec<Vec<Complex<T>>> = order.iter().map(|&j| v[j].clone()).collect();
    let vh = CxMatrix::from_columns(&v_sorted)?.hermitian();
    Ok(SvdResult { u, sigma, vh })
}

/// Applies the unitary plane rotation that orthogonalizes columns `p` and `q`.
fn rotate<T: Real>(cols: &mut [Vec<Complex<T>>], p: usize, q: usize, c: T, s: T, phase: Complex<T>) {
    let (lo, hi) = cols.split_at_mut(q);
    let (cp, cq) = (&mut lo[p], &mut hi[0]);
    let sp = phase * s;
    let sq = phase.conj() * s;
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let (xp, yq) = (*x, *y);
        *x = xp * c - yq * sq;
        *y = xp * sp + yq * c;
    }
}

/// Unit vector orthogonal to every populated column except `skip`.
fn complement<T: Real>(cols: &[Vec<Complex<T>>], skip: usize, m: usize) -> Vec<Complex<T>> {
    let zero = Complex::new(T::zero(), T::zero());
    for e in 0..m {
        let mut cand = vec![zero; m];
        cand[e] = Complex::new(T::one(), T::zero());
        for _ in 0..2 {
            for (k, c) in cols.iter().enumerate() {
                if k == skip {
                    continue;
                }
                let proj = c.iter().zip(&cand).fold(zero, |acc, (a, b)| acc + a.conj() * b);
                for (x, a) in cand.iter_mut().zip(c) {
                    *x = *x - a * proj;
                }
            }
        }
        let norm = cand.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        if norm > T::lit(0.5) {
            let inv = norm.recip();
            return cand.into_iter().map(|z| z * inv).collect();
        }
    }
    unreachable!("an m-dimensional space always has a complement direction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_unit_singular_values() {
        let s = svd(&CxMatrix::<f64>::identity(3)).unwrap();
        assert_eq!(s.sigma, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn diagonal_sorted() {
        let a = CxMatrix::from_real(2, 2, &[3.0f64, 0.0, 0.0, 4.0]).unwrap();
        let s = svd(&a).unwrap();
        assert!((s.sigma[0] - 4.0).abs() < 1e-15 && (s.sigma[1] - 3.0).abs() < 1e-15);
    }

    #[test]
    fn zero_and_rank_one() {
        let z = svd(&CxMatrix::<f64>::zeros(3, 2)).unwrap();
        assert_eq!(z.sigma, vec![0.0, 0.0]);
        let uu = z.u.hermitian_matmul(&z.u).unwrap();
        assert!(uu.add(&CxMatrix::identity(2).scale(-1.0)).unwrap().frobenius_norm() < 1e-14);

        let r1 = CxMatrix::from_real(3, 3, &[1.0f64, 2.0, 3.0, 2.0, 4.0, 6.0, 3.0, 6.0, 9.0]).unwrap();
        let s = svd(&r1).unwrap();
        assert_eq!(s.rank(1e-12), 1);
        assert!((s.sigma[0] - 14.0).abs() < 1e-12);
        let err = s.reconstruct().add(&r1.scale(-1.0)).unwrap().frobenius_norm();
        assert!(err < 1e-12);
    }

    #[test]
    fn wide_matrix() {
        let a = CxMatrix::from_vec(
            1,
            3,
            vec![Complex::new(1.0, 1.0), Complex::new(0.0, 2.0), Complex::new(-1.0, 0.0)],
        )
        .unwrap();
        let s = svd(&a).unwrap();
        assert_eq!(s.u.shape(), (1, 1));
        assert_eq!(s.vh.shape(), (1, 3));
        assert!((s.sigma[0] - 7f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_finite() {
        let mut a = CxMatrix::<f64>::identity(2);
        a[(0, 1)] = Complex::new(f64::INFINITY, 0.0);
        assert!(svd(&a).is_err());
    }
}
