//! Commutant of a modular pair (S, T).
//!
//! The search space for modular invariants is the real vector space of
//! matrices X with XS = SX and XT = TX. Since T is diagonal unitary,
//! the T-condition is the sparsity mask `X_ab = 0` unless `T_aa = T_bb`;
//! the S-condition is linear in the masked entries. The kernel of that
//! linear map is computed through its Gram matrix and a rank-revealing
//! symmetric eigendecomposition with a relative cutoff.

use super::eigen::symmetric_eigen;
use super::{CMat, RMat};
use crate::scalar::Real;
use crate::{Error, Result};
use num_complex::Complex;

/// Entry positions (a, b) allowed by the T-commutation mask.
pub fn t_mask<T: Real>(t: &CMat<T>, tol: T) -> Vec<(usize, usize)> {
    let n = t.rows();
    let mut mask = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if (t[(a, a)] - t[(b, b)]).norm() <= tol {
                mask.push((a, b));
            }
        }
    }
    mask
}

fn validate<T: Real>(s: &CMat<T>, t: &CMat<T>, tol: T) -> Result<()> {
    if !s.is_square() || !t.is_square() || s.rows() != t.rows() {
        return Err(Error::DimensionMismatch(format!(
            "commutant needs equal square S ({}x{}) and T ({}x{})",
            s.rows(),
            s.cols(),
            t.rows(),
            t.cols()
        )));
    }
    if t.max_offdiag() > tol || !t.is_unitary(tol) {
        return Err(Error::NotDiagonalUnitary);
    }
    Ok(())
}

/// Kernel of `X ↦ XS − SX` restricted to the T-mask, as coordinate
/// vectors over `mask`. Basis is orthonormal (Frobenius), deterministic:
/// vectors are re-extracted from the kernel projector by column-pivoted
/// Gram-Schmidt, largest residual first, sign fixed at the pivot entry.
pub fn commutant_basis_masked<T: Real>(
    s: &CMat<T>,
    t: &CMat<T>,
    tol: T,
) -> Result<(Vec<(usize, usize)>, Vec<Vec<T>>)> {
    validate(s, t, tol)?;
    let n = s.rows();
    let mask = t_mask(t, tol);
    let m = mask.len();

    // Gram matrix of the constraint map. With v_i(a,b) = [a==c_i]·S_{d_i b}
    // − [b==d_i]·S_{a c_i}, the inner product of columns i, j collapses to
    // four S-products; P = S·S† and Q_uv = Σ_a S_au·conj(S_av) carry the sums.
    let p = s.mul(&s.dagger());
    let mut q = CMat::zeros(n, n);
    for u in 0..n {
        for v in 0..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for a in 0..n {
                acc += s[(a, u)] * s[(a, v)].conj();
            }
            q[(u, v)] = acc;
        }
    }
    let mut gram = RMat::zeros(m, m);
    for i in 0..m {
        let (ci, di) = mask[i];
        for j in i..m {
            let (cj, dj) = mask[j];
            let mut acc = Complex::new(T::zero(), T::zero());
            if ci == cj {
                acc += p[(di, dj)];
            }
            if di == dj {
                acc += q[(ci, cj)];
            }
            acc -= s[(di, dj)] * s[(ci, cj)].conj();
            acc -= s[(cj, ci)] * s[(dj, di)].conj();
            gram[(i, j)] = acc.re;
            gram[(j, i)] = acc.re;
        }
    }

    let (vals, vecs) = symmetric_eigen(&gram, true);
    let vecs = vecs.expect("vectors requested");
    let lambda_max = vals.last().copied().unwrap_or(T::zero()).max(T::zero());
    // Relative cutoff tol² on the squared singular values, floored above
    // the eigensolver's own noise so true kernel directions survive the
    // squaring of the problem.
    let floor = T::epsilon() * T::of_usize(m.max(1)) * T::of(64.0);
    let cutoff = lambda_max * (tol * tol).max(floor);
    let kernel: Vec<usize> = (0..m).filter(|&i| vals[i] <= cutoff).collect();
    let rank = kernel.len();
    if rank == 0 {
        return Ok((mask, Vec::new()));
    }

    // Kernel projector, basis-independent.
    let mut proj = RMat::zeros(m, m);
    for &kcol in &kernel {
        for r in 0..m {
            let vr = vecs[(r, kcol)];
            for c in 0..m {
                proj[(r, c)] += vr * vecs[(c, kcol)];
            }
        }
    }

    // Column-pivoted Gram-Schmidt on the projector columns.
    let mut basis: Vec<Vec<T>> = Vec::with_capacity(rank);
    let mut residual: Vec<Vec<T>> = (0..m)
        .map(|c| (0..m).map(|r| proj[(r, c)]).collect())
        .collect();
    let mut used = vec![false; m];
    for _ in 0..rank {
        let mut best = None;
        let mut best_norm = T::zero();
        for c in 0..m {
            if used[c] {
                continue;
            }
            let nrm = norm(&residual[c]);
            if nrm > best_norm {
                best_norm = nrm;
                best = Some(c);
            }
        }
        let c = match best {
            Some(c) if best_norm > T::of(1e-6) => c,
            _ => break,
        };
        used[c] = true;
        let mut v = residual[c].clone();
        scale(&mut v, T::one() / best_norm);
        if v[c] < T::zero() {
            scale(&mut v, -T::one());
        }
        for other in residual.iter_mut() {
            let d = dot(other, &v);
            axpy(other, &v, -d);
        }
        basis.push(v);
    }
    debug_assert_eq!(basis.len(), rank);
    Ok((mask, basis))
}

/// Orthonormal basis (Frobenius inner product) of all real matrices X
/// with `‖XS − SX‖∞ ≤ tol` and `X_ab = 0` whenever `|T_aa − T_bb| > tol`.
pub fn commutant_basis<T: Real>(s: &CMat<T>, t: &CMat<T>, tol: T) -> Result<Vec<RMat<T>>> {
    let (mask, vecs) = commutant_basis_masked(s, t, tol)?;
    let n = s.rows();
    Ok(vecs
        .into_iter()
        .map(|v| {
            let mut x = RMat::zeros(n, n);
            for (i, &(a, b)) in mask.iter().enumerate() {
                x[(a, b)] = v[i];
            }
            x
        })
        .collect())
}

fn norm<T: Real>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt()
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

fn scale<T: Real>(v: &mut [T], s: T) {
    for x in v.iter_mut() {
        *x *= s;
    }
}

fn axpy<T: Real>(v: &mut [T], w: &[T], s: T) {
    for (x, &y) in v.iter_mut().zip(w) {
        *x += s * y;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su2::build_level_data;

    fn residual(x: &RMat<f64>, s: &CMat<f64>, t: &CMat<f64>) -> f64 {
        let xc = x.to_complex();
        let r1 = xc.mul(s).max_diff(&s.mul(&xc));
        let r2 = xc.mul(t).max_diff(&t.mul(&xc));
        r1.max(r2)
    }

    #[test]
    fn su2_level2_commutant_is_identity_line() {
        // T at level 2 has three distinct phases, so the commutant is
        // diagonal; S-commutation then forces multiples of the identity.
        let ld = build_level_data::<f64>(2);
        let t = CMat::diagonal(&ld.t);
        let basis = commutant_basis(&ld.s, &t, 1e-9).unwrap();
        assert_eq!(basis.len(), 1);
        let b = &basis[0];
        let c = b[(0, 0)];
        assert!(c.abs() > 0.5);
        for r in 0..3 {
            for s_ in 0..3 {
                let want = if r == s_ { c } else { 0.0 };
                assert!((b[(r, s_)] - want).abs() < 1e-9);
            }
        }
        assert!(residual(b, &ld.s, &t) < 1e-8);
    }

    #[test]
    fn scalar_case() {
        let s: CMat<f64> = CMat::identity(1);
        let t: CMat<f64> = CMat::identity(1);
        let basis = commutant_basis(&s, &t, 1e-9).unwrap();
        assert_eq!(basis.len(), 1);
        assert!((basis[0][(0, 0)] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn identity_lies_in_span() {
        for k in [2usize, 3, 4] {
            let ld = build_level_data::<f64>(k);
            let t = CMat::diagonal(&ld.t);
            let basis = commutant_basis(&ld.s, &t, 1e-9).unwrap();
            let id = RMat::identity(k + 1);
            let mut res = id.clone();
            for b in &basis {
                let c = id.frobenius_dot(b);
                for r in 0..=k {
                    for s_ in 0..=k {
                        res[(r, s_)] -= c * b[(r, s_)];
                    }
                }
            }
            assert!(res.inf_norm() <= 1e-9, "identity residual at k={k}");
        }
    }

    #[test]
    fn basis_is_orthonormal_and_commutes() {
        let ld = build_level_data::<f64>(4);
        let t = CMat::diagonal(&ld.t);
        let basis = commutant_basis(&ld.s, &t, 1e-9).unwrap();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let d = a.frobenius_dot(b);
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((d - want).abs() < 1e-10);
            }
            assert!(residual(a, &ld.s, &t) <= 1e-8); // 10·tol
        }
    }

    #[test]
    fn rejects_mismatched_sizes() {
        let s: CMat<f64> = CMat::identity(2);
        let t: CMat<f64> = CMat::identity(3);
        assert!(matches!(
            commutant_basis(&s, &t, 1e-9),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn rejects_non_unitary_t() {
        let s: CMat<f64> = CMat::identity(2);
        let mut t: CMat<f64> = CMat::identity(2);
        t[(0, 0)] = num_complex::Complex::new(2.0, 0.0);
        assert!(matches!(
            commutant_basis(&s, &t, 1e-9),
            Err(Error::NotDiagonalUnitary)
        ));
    }
}
