//! Dense complex linear algebra: the small set of operations needed to build
//! hybrid precoders and evaluate log-det rates.

mod svd;
mod waterfill;

pub use svd::{svd, SvdResult};
pub use waterfill::water_filling;

use std::ops::{Index, IndexMut};

use num_complex::Complex;

use crate::{Error, Real, Result};

/// Row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CxMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> CxMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension("matrix dimensions must be positive".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries given for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::Domain("matrix entries must be finite".into()));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_real(rows: usize, cols: usize, data: &[T]) -> Result<Self> {
        Self::from_vec(rows, cols, data.iter().map(|&r| Complex::new(r, T::zero())).collect())
    }

    pub fn from_diag(diag: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = *d;
        }
        m
    }

    /// Stacks equal-length vectors as columns.
    pub fn from_columns(columns: &[Vec<Complex<T>>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Dimension("columns must share a length".into()));
        }
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = *v;
            }
        }
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension("matrix dimensions must be positive".into()));
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[Complex<T>]) {
        debug_assert_eq!(v.len(), self.rows);
        for (i, z) in v.iter().enumerate() {
            self[(i, j)] = *z;
        }
    }

    /// Conjugate transpose.
    pub fn hermitian(&self) -> Self {
        let mut h = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                h[(j, i)] = self[(i, j)].conj();
            }
        }
        h
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        let zero = T::zero();
        for k in 0..self.cols {
            for j in 0..rhs.cols {
                let b = rhs[(k, j)];
                if b.re == zero && b.im == zero {
                    continue;
                }
                for i in 0..self.rows {
                    let a = self.data[i * self.cols + k];
                    out.data[i * rhs.cols + j] = out.data[i * rhs.cols + j] + a * b;
                }
            }
        }
        Ok(out)
    }

    /// `self^H * rhs` without materializing the conjugate transpose.
    pub fn hermitian_matmul(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot form ({}x{})^H * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.cols, rhs.cols);
        for k in 0..self.rows {
            for i in 0..self.cols {
                let a = self[(k, i)].conj();
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] = out.data[i * rhs.cols + j] + a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mat_vec(&self, v: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::Dimension("cannot add matrices of different shapes".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// Keeps the leading `n` columns.
    pub fn leading_columns(&self, n: usize) -> Self {
        let n = n.min(self.cols);
        let mut out = Self::zeros(self.rows, n);
        for i in 0..self.rows {
            for j in 0..n {
                out[(i, j)] = self[(i, j)];
            }
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl<T> Index<(usize, usize)> for CxMatrix<T> {
    type Output = Complex<T>;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for CxMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.cols + j]
    }
}

/// `blkdiag(blocks)`: blocks placed along the diagonal, zeros elsewhere.
pub fn block_diag<T: Real>(blocks: &[CxMatrix<T>]) -> Result<CxMatrix<T>> {
    if blocks.is_empty() {
        return Err(Error::Domain("block_diag needs at least one block".into()));
    }
    let rows = blocks.iter().map(CxMatrix::rows).sum();
    let cols = blocks.iter().map(CxMatrix::cols).sum();
    let mut out = CxMatrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for i in 0..b.rows {
            for j in 0..b.cols {
                out[(r0 + i, c0 + j)] = b[(i, j)];
            }
        }
        r0 += b.rows;
        c0 += b.cols;
    }
    Ok(out)
}

/// Horizontal concatenation `[A_1, A_2, ...]`.
pub fn hconcat<T: Real>(blocks: &[CxMatrix<T>]) -> Result<CxMatrix<T>> {
    let first = blocks
        .first()
        .ok_or_else(|| Error::Domain("hconcat needs at least one block".into()))?;
    if blocks.iter().any(|b| b.rows != first.rows) {
        return Err(Error::Dimension("hconcat blocks must share a row count".into()));
    }
    let cols = blocks.iter().map(CxMatrix::cols).sum();
    let mut out = CxMatrix::zeros(first.rows, cols);
    let mut c0 = 0;
    for b in blocks {
        for i in 0..b.rows {
            for j in 0..b.cols {
                out[(i, c0 + j)] = b[(i, j)];
            }
        }
        c0 += b.cols;
    }
    Ok(out)
}

/// Euclidean norm of a complex vector.
pub fn vec_norm<T: Real>(v: &[Complex<T>]) -> T {
    v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
}

/// `a^H b`.
pub fn inner<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Complex<T> {
    a.iter()
        .zip(b)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (x, y)| acc + x.conj() * y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn identity_product() {
        let a = CxMatrix::from_vec(2, 3, (0..6).map(|k| c(k as f64, -(k as f64))).collect()).unwrap();
        assert_eq!(CxMatrix::identity(2).matmul(&a).unwrap(), a);
        assert_eq!(a.matmul(&CxMatrix::identity(3)).unwrap(), a);
        assert!(a.matmul(&a).is_err());
    }

    #[test]
    fn zero_norm_and_hermitian() {
        assert_eq!(CxMatrix::<f64>::zeros(3, 4).frobenius_norm(), 0.0);
        let a = CxMatrix::from_vec(1, 2, vec![c(1.0, 2.0), c(3.0, -1.0)]).unwrap();
        let h = a.hermitian();
        assert_eq!(h.shape(), (2, 1));
        assert_eq!(h[(0, 0)], c(1.0, -2.0));
        assert_eq!(a.hermitian_matmul(&a).unwrap(), h.matmul(&a).unwrap());
        assert!((a.frobenius_norm() - 15f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn from_vec_validates() {
        assert!(CxMatrix::<f64>::from_vec(2, 2, vec![c(0.0, 0.0); 3]).is_err());
        assert!(CxMatrix::from_vec(1, 1, vec![c(f64::NAN, 0.0)]).is_err());
        assert!(CxMatrix::<f64>::from_vec(0, 1, vec![]).is_err());
    }

    #[test]
    fn block_diag_scalars() {
        let d = block_diag(&[
            CxMatrix::from_real(1, 1, &[2.0]).unwrap(),
            CxMatrix::from_real(1, 1, &[3.0]).unwrap(),
        ])
        .unwrap();
        assert_eq!(d, CxMatrix::from_diag(&[c(2.0, 0.0), c(3.0, 0.0)]));
        assert!(block_diag::<f64>(&[]).is_err());
    }

    #[test]
    fn block_diag_shape_law() {
        let col = CxMatrix::from_real(2, 1, &[1.0, 1.0]).unwrap();
        let d = block_diag(&[col.clone(), col]).unwrap();
        assert_eq!(d.shape(), (4, 2));
        assert_eq!(d[(2, 0)], c(0.0, 0.0));
        assert_eq!(d[(0, 1)], c(0.0, 0.0));
        assert_eq!(d[(3, 1)], c(1.0, 0.0));

        let blocks: Vec<_> = (0..8)
            .map(|_| CxMatrix::from_real(32, 1, &[1.0; 32]).unwrap())
            .collect();
        assert_eq!(block_diag(&blocks).unwrap().shape(), (256, 8));
    }

    #[test]
    fn block_products_stack() {
        // blkdiag(A1, A2) * blkdiag(v1, v2) == blkdiag(A1 v1, A2 v2)
        let a1 = CxMatrix::from_vec(2, 2, vec![c(1.0, 1.0), c(0.0, 2.0), c(-1.0, 0.0), c(0.5, 0.5)]).unwrap();
        let a2 = CxMatrix::from_vec(3, 1, vec![c(2.0, 0.0), c(0.0, -1.0), c(1.0, 1.0)]).unwrap();
        let v1 = CxMatrix::from_vec(2, 1, vec![c(0.0, 1.0), c(1.0, 0.0)]).unwrap();
        let v2 = CxMatrix::from_vec(1, 1, vec![c(-2.0, 1.0)]).unwrap();
        let lhs = block_diag(&[a1.clone(), a2.clone()])
            .unwrap()
            .matmul(&block_diag(&[v1.clone(), v2.clone()]).unwrap())
            .unwrap();
        let rhs = block_diag(&[a1.matmul(&v1).unwrap(), a2.matmul(&v2).unwrap()]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hconcat_columns() {
        let a = CxMatrix::from_real(2, 1, &[1.0, 2.0]).unwrap();
        let b = CxMatrix::from_real(2, 2, &[3.0, 4.0, 5.0, 6.0]).unwrap();
        let h = hconcat(&[a, b]).unwrap();
        assert_eq!(h.shape(), (2, 3));
        assert_eq!(h[(1, 2)], c(6.0, 0.0));
        assert!(hconcat(&[CxMatrix::<f64>::zeros(1, 1), CxMatrix::zeros(2, 1)]).is_err());
    }
}
