//! Dense matrix substrate.
//!
//! Everything here is desk scale (n ≤ a few hundred), so the storage is
//! a plain row-major `Vec` and the algorithms favour robustness over
//! asymptotics. Matrices are immutable after construction in all public
//! data types; the mutating helpers are build-time only.

mod commutant;
mod eigen;

pub use commutant::{commutant_basis, commutant_basis_masked, t_mask};
pub use eigen::{hermitian_eigenvalues, symmetric_eigen};

use crate::scalar::Real;
use num_complex::Complex;
use num_traits::{One, Zero};

/// Dense complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMat<T: Real> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

/// Dense real matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RMat<T: Real> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Real> CMat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat {
            rows,
            cols,
            data: vec![Complex::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        CMat { rows, cols, data }
    }

    pub fn diagonal(d: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, z) in d.iter().enumerate() {
            m[(i, i)] = *z;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Complex<T>] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &CMat<T>) -> CMat<T> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = CMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow.iter()) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn dagger(&self) -> CMat<T> {
        CMat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    /// Largest entry modulus of `self − other`.
    pub fn max_diff(&self, other: &CMat<T>) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    pub fn inf_norm(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    pub fn max_offdiag(&self) -> T {
        let mut m = T::zero();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if r != c {
                    m = m.max(self[(r, c)].norm());
                }
            }
        }
        m
    }

    /// `‖M·M† − I‖∞ ≤ tol`. Non-square matrices are never unitary.
    pub fn is_unitary(&self, tol: T) -> bool {
        if !self.is_square() {
            return false;
        }
        let prod = self.mul(&self.dagger());
        prod.max_diff(&CMat::identity(self.rows)) <= tol
    }

    /// True iff every entry is finite.
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Entry-wise check that `self` is a 0/1 permutation matrix within `tol`.
    pub fn is_permutation(&self, tol: T) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let mut row_count = vec![0usize; n];
        let mut col_count = vec![0usize; n];
        for r in 0..n {
            for c in 0..n {
                let z = self[(r, c)];
                if z.im.abs() > tol {
                    return false;
                }
                if (z.re - T::one()).abs() <= tol {
                    row_count[r] += 1;
                    col_count[c] += 1;
                } else if z.re.abs() > tol {
                    return false;
                }
            }
        }
        row_count.iter().all(|&c| c == 1) && col_count.iter().all(|&c| c == 1)
    }
}

impl<T: Real> std::ops::Index<(usize, usize)> for CMat<T> {
    type Output = Complex<T>;
    fn index(&self, (r, c): (usize, usize)) -> &Complex<T> {
        &self.data[r * self.cols + c]
    }
}

impl<T: Real> std::ops::IndexMut<(usize, usize)> for CMat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Real> RMat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RMat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn to_complex(&self) -> CMat<T> {
        CMat::from_fn(self.rows, self.cols, |r, c| Complex::new(self[(r, c)], T::zero()))
    }

    /// Frobenius inner product `Σ self_ij · other_ij`.
    pub fn frobenius_dot(&self, other: &RMat<T>) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |acc, (&a, &b)| acc + a * b)
    }

    pub fn inf_norm(&self) -> T {
        self.data.iter().map(|x| x.abs()).fold(T::zero(), T::max)
    }
}

impl<T: Real> std::ops::Index<(usize, usize)> for RMat<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T: Real> std::ops::IndexMut<(usize, usize)> for RMat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

/// `round(x)` if `|x − round(x)| ≤ tol`, otherwise `None`.
pub fn nearest_integer<T: Real>(x: T, tol: T) -> Option<i64> {
    assert!(tol > T::zero(), "tolerance must be positive");
    let r = x.round();
    if (x - r).abs() <= tol {
        num_traits::cast::<T, i64>(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    #[test]
    fn nearest_integer_cases() {
        assert_eq!(nearest_integer(3.000_000_000_2_f64, 1e-8), Some(3));
        assert_eq!(nearest_integer(0.5_f64, 1e-8), None);
        assert_eq!(nearest_integer(-0.999_999_999_9_f64, 1e-8), Some(-1));
    }

    #[test]
    fn identity_is_unitary() {
        let m: CMat<f64> = CMat::identity(5);
        assert!(m.is_unitary(1e-12));
    }

    #[test]
    fn all_ones_is_not_unitary() {
        let m: CMat<f64> = CMat::from_fn(2, 2, |_, _| Complex::new(1.0, 0.0));
        assert!(!m.is_unitary(1e-8));
    }

    #[test]
    fn non_square_is_not_unitary() {
        let m: CMat<f64> = CMat::zeros(2, 3);
        assert!(!m.is_unitary(1e-8));
    }

    #[test]
    fn permutation_check() {
        let mut p: CMat<f64> = CMat::zeros(3, 3);
        p[(0, 1)] = Complex::new(1.0, 0.0);
        p[(1, 0)] = Complex::new(1.0, 0.0);
        p[(2, 2)] = Complex::new(1.0, 0.0);
        assert!(p.is_permutation(1e-10));
        p[(2, 0)] = Complex::new(1.0, 0.0);
        assert!(!p.is_permutation(1e-10));
    }
}
