//! Cyclic Jacobi eigensolvers.
//!
//! Two variants: complex Hermitian (eigenvalues only — used for heat
//! traces and singular values via the Gram matrix) and real symmetric
//! with eigenvectors (used for the commutant kernel). Jacobi converges
//! unconditionally on Hermitian input and delivers eigenvalues to
//! ~n·eps·‖A‖, which is far below every tolerance in this crate at the
//! matrix sizes involved.

use super::{CMat, RMat};
use crate::scalar::Real;
use num_complex::Complex;

const MAX_SWEEPS: usize = 60;

/// Eigenvalues of a Hermitian matrix, ascending. The strictly lower
/// triangle is ignored; diagonals are taken as their real parts.
pub fn hermitian_eigenvalues<T: Real>(a: &CMat<T>) -> Vec<T> {
    assert!(a.is_square(), "eigensolver needs a square matrix");
    let n = a.rows();
    if n == 0 {
        return Vec::new();
    }
    let mut m = a.clone();
    // enforce exact Hermitian symmetry from the upper triangle
    for p in 0..n {
        m[(p, p)] = Complex::new(m[(p, p)].re, T::zero());
        for q in (p + 1)..n {
            let z = m[(p, q)];
            m[(q, p)] = z.conj();
        }
    }
    let scale = m.inf_norm().max(T::min_positive_value());
    let stop = T::epsilon() * scale * T::of_usize(n);

    for _ in 0..MAX_SWEEPS {
        if m.max_offdiag() <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha = m[(p, q)];
                let mag = alpha.norm();
                if mag <= stop {
                    continue;
                }
                let phase = alpha / mag; // e^{iφ}
                let tau = (m[(q, q)].re - m[(p, p)].re) / (T::of(2.0) * mag);
                let w = (tau * tau + T::one()).sqrt();
                let t = if tau >= T::zero() {
                    -(T::one() / (tau + w))
                } else {
                    T::one() / (w - tau)
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                let sp = phase * s; // s·e^{iφ}
                // columns: A ← A·U
                for i in 0..n {
                    let aip = m[(i, p)];
                    let aiq = m[(i, q)];
                    m[(i, p)] = aip * c + aiq * sp.conj();
                    m[(i, q)] = aiq * c - aip * sp;
                }
                // rows: A ← U†·A
                for i in 0..n {
                    let api = m[(p, i)];
                    let aqi = m[(q, i)];
                    m[(p, i)] = api * c + aqi * sp;
                    m[(q, i)] = aqi * c - api * sp.conj();
                }
            }
        }
    }

    let mut vals: Vec<T> = (0..n).map(|i| m[(i, i)].re).collect();
    vals.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    vals
}

/// Eigen-decomposition of a real symmetric matrix: ascending eigenvalues
/// and, if requested, the orthonormal eigenvector matrix (columns).
pub fn symmetric_eigen<T: Real>(a: &RMat<T>, want_vectors: bool) -> (Vec<T>, Option<RMat<T>>) {
    assert_eq!(a.rows(), a.cols(), "eigensolver needs a square matrix");
    let n = a.rows();
    if n == 0 {
        return (Vec::new(), want_vectors.then(|| RMat::zeros(0, 0)));
    }
    let mut m = a.clone();
    for p in 0..n {
        for q in (p + 1)..n {
            let avg = m[(p, q)];
            m[(q, p)] = avg;
        }
    }
    let mut v = want_vectors.then(|| RMat::identity(n));
    let scale = m.inf_norm().max(T::min_positive_value());
    let stop = T::epsilon() * scale * T::of_usize(n);

    for _ in 0..MAX_SWEEPS {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(m[(p, q)].abs());
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha = m[(p, q)];
                if alpha.abs() <= stop {
                    continue;
                }
                let tau = (m[(q, q)] - m[(p, p)]) / (T::of(2.0) * alpha);
                let w = (tau * tau + T::one()).sqrt();
                let t = if tau >= T::zero() {
                    -(T::one() / (tau + w))
                } else {
                    T::one() / (w - tau)
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = m[(i, p)];
                    let aiq = m[(i, q)];
                    m[(i, p)] = c * aip + s * aiq;
                    m[(i, q)] = c * aiq - s * aip;
                }
                for i in 0..n {
                    let api = m[(p, i)];
                    let aqi = m[(q, i)];
                    m[(p, i)] = c * api + s * aqi;
                    m[(q, i)] = c * aqi - s * api;
                }
                if let Some(vm) = v.as_mut() {
                    for i in 0..n {
                        let vip = vm[(i, p)];
                        let viq = vm[(i, q)];
                        vm[(i, p)] = c * vip + s * viq;
                        vm[(i, q)] = c * viq - s * vip;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].partial_cmp(&m[(j, j)]).expect("finite eigenvalues"));
    let vals: Vec<T> = order.iter().map(|&i| m[(i, i)]).collect();
    let vecs = v.map(|vm| RMat::from_fn(n, n, |r, c| vm[(r, order[c])]));
    (vals, vecs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn hermitian_2x2_known() {
        // [[1, i],[−i, 1]] has eigenvalues 0 and 2.
        let mut a: CMat<f64> = CMat::zeros(2, 2);
        a[(0, 0)] = c(1.0, 0.0);
        a[(0, 1)] = c(0.0, 1.0);
        a[(1, 0)] = c(0.0, -1.0);
        a[(1, 1)] = c(1.0, 0.0);
        let vals = hermitian_eigenvalues(&a);
        assert!((vals[0]).abs() < 1e-14);
        assert!((vals[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn hermitian_diagonal_passthrough() {
        let d = [c(-3.0, 0.0), c(0.5, 0.0), c(7.0, 0.0)];
        let a = CMat::diagonal(&d);
        let vals = hermitian_eigenvalues(&a);
        assert_eq!(vals.len(), 3);
        assert!((vals[0] + 3.0).abs() < 1e-15);
        assert!((vals[1] - 0.5).abs() < 1e-15);
        assert!((vals[2] - 7.0).abs() < 1e-15);
    }

    #[test]
    fn hermitian_trace_preserved_on_seeded_matrix() {
        // pseudo-random Hermitian from a fixed linear congruence
        let n = 17;
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let mut a: CMat<f64> = CMat::zeros(n, n);
        for p in 0..n {
            let d = next();
            a[(p, p)] = c(d, 0.0);
            for q in (p + 1)..n {
                let z = c(next(), next());
                a[(p, q)] = z;
                a[(q, p)] = z.conj();
            }
        }
        let trace: f64 = (0..n).map(|i| a[(i, i)].re).sum();
        let vals = hermitian_eigenvalues(&a);
        let sum: f64 = vals.iter().sum();
        assert!((trace - sum).abs() < 1e-10, "trace {trace} vs eig sum {sum}");
    }

    #[test]
    fn symmetric_eigen_reconstructs() {
        let n = 8;
        let mut a: RMat<f64> = RMat::zeros(n, n);
        for p in 0..n {
            for q in 0..n {
                let v = ((p * 31 + q * 17) % 13) as f64 / 13.0;
                a[(p, q)] = v;
            }
        }
        // symmetrize
        let sym = RMat::from_fn(n, n, |r, c| 0.5 * (a[(r, c)] + a[(c, r)]));
        let (vals, vecs) = symmetric_eigen(&sym, true);
        let v = vecs.unwrap();
        // V orthonormal
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = (0..n).map(|r| v[(r, i)] * v[(r, j)]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-12);
            }
        }
        // A v_i = λ_i v_i
        for i in 0..n {
            for r in 0..n {
                let av: f64 = (0..n).map(|k| sym[(r, k)] * v[(k, i)]).sum();
                assert!((av - vals[i] * v[(r, i)]).abs() < 1e-10);
            }
        }
        // ascending
        for i in 1..n {
            assert!(vals[i] >= vals[i - 1]);
        }
    }

    #[test]
    fn works_at_f32() {
        let a: RMat<f32> = RMat::from_fn(4, 4, |r, c| if r == c { 2.0 } else { 1.0 });
        let (vals, _) = symmetric_eigen(&a, false);
        // eigenvalues of I + ones(4): 1,1,1,5
        assert!((vals[3] - 5.0).abs() < 1e-4);
        assert!((vals[0] - 1.0).abs() < 1e-4);
    }
}
