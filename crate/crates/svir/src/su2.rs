//! Modular data of the SU(2) WZW models.
//!
//! Sectors at level k carry integer labels j = 0..k (twice the spin).
//! The S matrix is the sine kernel
//! `S_jl = sqrt(2/(k+2))·sin(π(j+1)(l+1)/(k+2))`, T is the diagonal of
//! phases `exp(2πi(h_j − c/24))` with `h_j = j(j+2)/(4(k+2))`, and
//! fusion comes out of S through the Verlinde sum.

use crate::linalg::{nearest_integer, CMat};
use crate::rational::{phase, rat, Rational};
use crate::scalar::Real;
use crate::{Error, Result};
use num_complex::Complex;
use num_traits::Zero;

/// Full modular data of SU(2) at one level.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelData<T: Real> {
    pub level: usize,
    /// (k+1)×(k+1), real-valued, symmetric, unitary.
    pub s: CMat<T>,
    /// Diagonal of the T matrix, unit modulus.
    pub t: Vec<Complex<T>>,
    /// Exact conformal weights h_j = j(j+2)/(4(k+2)).
    pub weights: Vec<Rational>,
    /// Quantum dimensions d_j = S_0j/S_00 ≥ 1.
    pub dims: Vec<T>,
}

/// Exact weight h_j at level k.
pub fn level_weight(k: usize, j: usize) -> Rational {
    rat((j * (j + 2)) as i64, (4 * (k + 2)) as i64)
}

/// Exact central charge 3k/(k+2) of SU(2)_k.
pub fn level_central_charge(k: usize) -> Rational {
    rat(3 * k as i64, (k + 2) as i64)
}

pub fn build_level_data<T: Real>(k: usize) -> LevelData<T> {
    let n = k + 1;
    let denom = T::of_usize(k + 2);
    let norm = (T::of(2.0) / denom).sqrt();
    let s = CMat::from_fn(n, n, |j, l| {
        let arg = T::PI() * T::of_usize((j + 1) * (l + 1)) / denom;
        Complex::new(norm * arg.sin(), T::zero())
    });
    // T_j = exp(2πi(h_j − c/24)); the exponent is exact, so equal phases
    // are bit-identical and the T-mask in the commutant is clean.
    let c24 = level_central_charge(k) / rat(24, 1);
    let t: Vec<Complex<T>> = (0..n)
        .map(|j| phase(&(level_weight(k, j) - &c24)))
        .collect();
    let weights = (0..n).map(|j| level_weight(k, j)).collect();
    let s00 = s[(0, 0)].re;
    let dims = (0..n).map(|j| s[(0, j)].re / s00).collect();
    LevelData {
        level: k,
        s,
        t,
        weights,
        dims,
    }
}

/// Verlinde sum `Σ_x S_ax·S_bx·conj(S_cx)/S_0x` for an arbitrary
/// modular S matrix with a positive first row.
pub fn verlinde_sum<T: Real>(s: &CMat<T>, a: usize, b: usize, c: usize) -> Complex<T> {
    let n = s.rows();
    let mut acc = Complex::zero();
    for x in 0..n {
        acc += s[(a, x)] * s[(b, x)] * s[(c, x)].conj() / s[(0, x)];
    }
    acc
}

/// Round a Verlinde sum to the fusion coefficient it must be; fails
/// loudly when the sum is not a nonnegative integer within `tol`.
pub fn fusion_from_verlinde<T: Real>(value: Complex<T>, tol: T) -> Result<u64> {
    let err = Error::NotAnInteger {
        context: "Verlinde sum",
        value: value.re.as_f64(),
        tol: tol.as_f64(),
    };
    if value.im.abs() > tol {
        return Err(err);
    }
    match nearest_integer(value.re, tol) {
        Some(n) if n >= 0 => Ok(n as u64),
        _ => Err(err),
    }
}

const VERLINDE_TOL: f64 = 1e-6;

/// Fusion coefficient N_ab^c of SU(2)_k from the Verlinde sum.
pub fn fusion_coefficient<T: Real>(
    data: &LevelData<T>,
    a: usize,
    b: usize,
    c: usize,
) -> Result<u64> {
    let n = data.level + 1;
    for &x in &[a, b, c] {
        if x >= n {
            return Err(Error::InvalidParameter(format!(
                "label {x} out of range for level {}",
                data.level
            )));
        }
    }
    fusion_from_verlinde(verlinde_sum(&data.s, a, b, c), T::of(VERLINDE_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    const SQRT1_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn level2_s_matrix_closed_form() {
        let ld = build_level_data::<f64>(2);
        let row0 = [0.5, SQRT1_2, 0.5];
        for (j, want) in row0.iter().enumerate() {
            assert!((ld.s[(0, j)].re - want).abs() < 1e-15);
        }
        assert!(ld.s[(1, 1)].re.abs() < 1e-15);
        assert!((ld.s[(1, 2)].re + SQRT1_2).abs() < 1e-15);
        let d = [1.0, std::f64::consts::SQRT_2, 1.0];
        for (j, want) in d.iter().enumerate() {
            assert!((ld.dims[j] - want).abs() < 1e-14);
        }
        assert!(ld.s.is_unitary(1e-14));
    }

    #[test]
    fn level0_is_trivial() {
        let ld = build_level_data::<f64>(0);
        assert_eq!(ld.s.rows(), 1);
        assert!((ld.s[(0, 0)].re - 1.0).abs() < 1e-15);
        assert_eq!(ld.dims, vec![1.0]);
        assert_eq!(ld.weights, vec![rat_int(0)]);
    }

    #[test]
    fn level2_exact_weights() {
        let ld = build_level_data::<f64>(2);
        assert_eq!(ld.weights, vec![rat_int(0), rat(3, 16), rat(1, 2)]);
    }

    #[test]
    fn level2_fusion_is_ising_like() {
        let ld = build_level_data::<f64>(2);
        assert_eq!(fusion_coefficient(&ld, 1, 1, 0).unwrap(), 1);
        assert_eq!(fusion_coefficient(&ld, 1, 1, 1).unwrap(), 0);
        assert_eq!(fusion_coefficient(&ld, 1, 1, 2).unwrap(), 1);
        for b in 0..3 {
            for c in 0..3 {
                let want = u64::from(b == c);
                assert_eq!(fusion_coefficient(&ld, 0, b, c).unwrap(), want);
            }
        }
    }

    #[test]
    fn modular_relations_and_t_phases() {
        for k in 0..=8usize {
            let ld = build_level_data::<f64>(k);
            let n = k + 1;
            assert!(ld.s.is_unitary(1e-12), "S unitary at k={k}");
            // symmetry
            for a in 0..n {
                for b in 0..n {
                    assert!((ld.s[(a, b)] - ld.s[(b, a)]).norm() < 1e-14);
                }
            }
            // S² is a permutation (the identity: self-conjugate sectors)
            let s2 = ld.s.mul(&ld.s);
            assert!(s2.is_permutation(1e-12));
            // (ST)³ = S²
            let t = CMat::diagonal(&ld.t);
            let st = ld.s.mul(&t);
            let st3 = st.mul(&st).mul(&st);
            assert!(st3.max_diff(&s2) < 1e-11, "(ST)^3 = S^2 at k={k}");
            // T unit modulus and arg(T_j/T_0) = 2π h_j
            for j in 0..n {
                assert!((ld.t[j].norm() - 1.0).abs() < 1e-14);
                let ratio = ld.t[j] / ld.t[0];
                let want = crate::rational::phase::<f64>(&ld.weights[j]);
                assert!((ratio - want).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn invalid_label_rejected() {
        let ld = build_level_data::<f64>(2);
        assert!(fusion_coefficient(&ld, 3, 0, 0).is_err());
    }

    #[test]
    fn f32_smoke() {
        let ld = build_level_data::<f32>(2);
        assert!(ld.s.is_unitary(1e-5));
        assert_eq!(fusion_coefficient(&ld, 1, 1, 0).unwrap(), 1);
    }
}
