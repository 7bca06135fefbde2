//! Global index, quantum dimensions, the K matrix and the
//! supersymmetric Fredholm index.
//!
//! The global index is μ = Σ_ν d(ν)² = 1/S_00². K is recovered from the
//! S matrix through `K(ρ,ν) = √μ·S_ρν/(d(ρ)d(ν))` and has modulus ≤ 1
//! on irreducible pairs. For even m the Ramond sector with lowest
//! weight exactly c/24 (the plus branch of the split fixed point)
//! carries the supersymmetric structure, and the index of its
//! supercharge evaluates two algebraically equal ways:
//!
//!   index = 2 Σ_{ν Ramond} S_ρν · n(ν)
//!         = (d(ρ)/√(μ/4)) Σ_{ν Ramond} K(ρ,ν) d(ν) n(ν)
//!
//! with n(ν) = dim ker(L₀ − c/24) ∈ {0,1}, supported on the plus branch
//! alone. The companion identity Σ_{ν Ramond} S_ρν d(ν) = 0 holds for
//! both branches.

use crate::coset::{
    build_coset_data, central_charge, lowest_weight, validate_sector, Branch, CosetModularData,
    SectorLabel,
};
use crate::linalg::nearest_integer;
use crate::rational::{rat_int, Rational};
use crate::scalar::Real;
use crate::{Error, Result};
use num_complex::Complex;

/// Global index μ = Σ_ν d(ν)²; agrees with 1/S_00².
pub fn mu_index<T: Real>(data: &CosetModularData<T>) -> T {
    data.dims.iter().fold(T::zero(), |acc, &d| acc + d * d)
}

/// Quantum dimension d(s) = S_{s,0}/S_{0,0}.
pub fn quantum_dimension<T: Real>(data: &CosetModularData<T>, s: &SectorLabel) -> Result<T> {
    let i = data.sector_index(s)?;
    Ok(data.s[(i, 0)].re / data.s[(0, 0)].re)
}

/// K(ρ,ν) = √μ·S_ρν/(d(ρ)d(ν)); modulus ≤ 1 on irreducible pairs.
pub fn k_matrix_entry<T: Real>(
    data: &CosetModularData<T>,
    rho: &SectorLabel,
    nu: &SectorLabel,
) -> Result<Complex<T>> {
    let r = data.sector_index(rho)?;
    let n = data.sector_index(nu)?;
    let mu = mu_index(data);
    Ok(data.s[(r, n)] * (mu.sqrt() / (data.dims[r] * data.dims[n])))
}

/// Multiplicity of the eigenvalue c/24 of L₀ in a Ramond sector: 1 on
/// the plus branch of the fixed point (whose lowest weight is exactly
/// c/24), 0 everywhere else. Exact rational comparison.
pub fn ramond_kernel_dim(m: usize, nu: &SectorLabel) -> Result<u8> {
    validate_sector(m, nu)?;
    if nu.l != 1 {
        return Err(Error::NotRamond(nu.to_string()));
    }
    match nu.branch {
        Branch::Plus => Ok(1),
        Branch::Minus => Ok(0),
        Branch::None => {
            let c24: Rational = central_charge(m)? / rat_int(24);
            Ok(u8::from(lowest_weight(m, nu)? == Some(c24)))
        }
    }
}

/// Report of one supersymmetric index evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct IndexReport<T: Real> {
    pub m: usize,
    pub rho: SectorLabel,
    /// Global index of the underlying (Bose) sector set.
    pub mu_b: T,
    /// Global index of the graded net, μ_b/4.
    pub mu_a: T,
    pub d_rho: T,
    /// dim ker(L₀ − c/24) per Ramond sector.
    pub kernel_dims: Vec<(SectorLabel, u8)>,
    pub index_via_s: T,
    pub index_via_k: T,
    pub rounded_index: i64,
}

fn supersymmetric_rho<T: Real>(
    m: usize,
    rho: &SectorLabel,
) -> Result<(CosetModularData<T>, usize)> {
    if m % 2 != 0 {
        return Err(Error::NoSupersymmetricSector(m));
    }
    validate_sector(m, rho)?;
    if !matches!(rho.branch, Branch::Plus | Branch::Minus) {
        return Err(Error::NotFixedPointBranch(rho.to_string()));
    }
    let data = build_coset_data::<T>(m)?;
    let r = data.sector_index(rho)?;
    Ok((data, r))
}

/// Fredholm index of the supercharge in the graded sector built on φ±,
/// evaluated through S and through K (the two are algebraically equal;
/// the report records both wirings).
pub fn fredholm_index<T: Real>(m: usize, rho: &SectorLabel) -> Result<IndexReport<T>> {
    let (data, r) = supersymmetric_rho::<T>(m, rho)?;
    let mu_b = mu_index(&data);
    let mu_a = mu_b / T::of(4.0);
    let d_rho = data.dims[r];

    let mut kernel_dims = Vec::new();
    let mut via_s = T::zero();
    let mut via_k = Complex::new(T::zero(), T::zero());
    for nu in data.ramond_indices() {
        let sec = data.sectors[nu];
        let n = ramond_kernel_dim(m, &sec)?;
        kernel_dims.push((sec, n));
        if n > 0 {
            let nt = T::of(n as f64);
            via_s += T::of(2.0) * data.s[(r, nu)].re * nt;
            via_k += k_matrix_entry(&data, rho, &sec)? * (data.dims[nu] * nt);
        }
    }
    via_k *= d_rho / mu_a.sqrt();
    debug_assert!(via_k.im.abs() < T::of(1e-9));

    let tol = T::of(1e-6);
    let rounded_index = nearest_integer(via_s, tol).ok_or(Error::NotAnInteger {
        context: "Fredholm index",
        value: via_s.as_f64(),
        tol: 1e-6,
    })?;

    Ok(IndexReport {
        m,
        rho: *rho,
        mu_b,
        mu_a,
        d_rho,
        kernel_dims,
        index_via_s: via_s,
        index_via_k: via_k.re,
        rounded_index,
    })
}

/// Σ over Ramond sectors of S_ρν·d(ν); vanishes for ρ = φ±.
pub fn ramond_dim_sum<T: Real>(m: usize, rho: &SectorLabel) -> Result<T> {
    let (data, r) = supersymmetric_rho::<T>(m, rho)?;
    Ok(data
        .ramond_indices()
        .fold(T::zero(), |acc, nu| acc + data.s[(r, nu)].re * data.dims[nu]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::phi_label;
    use crate::su2::{fusion_from_verlinde, verlinde_sum};

    #[test]
    fn mu_matches_s00_both_routes() {
        for m in [3usize, 4] {
            let data = build_coset_data::<f64>(m).unwrap();
            let mu = mu_index(&data);
            let s00 = data.s[(0, 0)].re;
            assert!((mu - 1.0 / (s00 * s00)).abs() < 1e-9 * mu, "m={m}");
        }
    }

    #[test]
    fn trivial_one_sector_mu() {
        // SU(2) level 0 seen as a one-sector theory
        let ld = crate::su2::build_level_data::<f64>(0);
        let mu: f64 = ld.dims.iter().map(|d| d * d).sum();
        assert_eq!(mu, 1.0);
    }

    #[test]
    fn sigma_and_vacuum_have_dimension_one() {
        let data = build_coset_data::<f64>(5).unwrap();
        let vac = SectorLabel::new(0, 0, 0);
        assert!((quantum_dimension(&data, &vac).unwrap() - 1.0).abs() < 1e-12);
        let sig = crate::coset::sigma_label(5);
        assert!((quantum_dimension(&data, &sig).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn dimension_matches_fusion_matrix_growth() {
        // d((1,1,0)) at m=3 is the golden ratio 2cos(π/5); recompute it
        // as the largest eigenvalue of the integer fusion matrix by
        // power iteration.
        let data = build_coset_data::<f64>(3).unwrap();
        let rho = SectorLabel::new(1, 1, 0);
        let r = data.sector_index(&rho).unwrap();
        let n = data.len();
        let mut fusion = vec![vec![0.0f64; n]; n];
        for b in 0..n {
            for c in 0..n {
                let v = fusion_from_verlinde(verlinde_sum(&data.s, r, b, c), 1e-6).unwrap();
                fusion[b][c] = v as f64;
            }
        }
        let mut v = vec![1.0f64; n];
        let mut lambda = 0.0;
        for _ in 0..500 {
            let w: Vec<f64> = (0..n)
                .map(|i| (0..n).map(|j| fusion[i][j] * v[j]).sum())
                .collect();
            lambda = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            v = w.iter().map(|x| x / lambda).collect();
        }
        let d = quantum_dimension(&data, &rho).unwrap();
        assert!((d - lambda).abs() < 1e-9, "power iteration {lambda} vs {d}");
        assert!((d - 2.0 * (std::f64::consts::PI / 5.0).cos()).abs() < 1e-12);
        assert!(d > 1.0 && d < 2.0);
    }

    #[test]
    fn k_entries() {
        let data = build_coset_data::<f64>(4).unwrap();
        let vac = SectorLabel::new(0, 0, 0);
        let k = k_matrix_entry(&data, &vac, &vac).unwrap();
        assert!((k.re - 1.0).abs() < 1e-10 && k.im.abs() < 1e-12);
        // φ+ self-coupling: √μ·(1/2)/d²
        let phi = phi_label(4, Branch::Plus).unwrap();
        let k = k_matrix_entry(&data, &phi, &phi).unwrap();
        let p = data.phi_index(Branch::Plus).unwrap();
        let want = mu_index(&data).sqrt() * 0.5 / (data.dims[p] * data.dims[p]);
        assert!((k.re - want).abs() < 1e-12);
    }

    #[test]
    fn k_modulus_bounded_at_m3() {
        let data = build_coset_data::<f64>(3).unwrap();
        for a in &data.sectors {
            for b in &data.sectors {
                let k = k_matrix_entry(&data, a, b).unwrap();
                assert!(k.norm() <= 1.0 + 1e-8, "K({a},{b}) = {}", k.norm());
            }
        }
    }

    #[test]
    fn kernel_dims() {
        let plus = phi_label(4, Branch::Plus).unwrap();
        let minus = phi_label(4, Branch::Minus).unwrap();
        assert_eq!(ramond_kernel_dim(4, &plus).unwrap(), 1);
        assert_eq!(ramond_kernel_dim(4, &minus).unwrap(), 0);
        assert_eq!(ramond_kernel_dim(3, &SectorLabel::new(0, 3, 1)).unwrap(), 0);
        assert!(matches!(
            ramond_kernel_dim(3, &SectorLabel::new(0, 0, 0)),
            Err(Error::NotRamond(_))
        ));
    }

    #[test]
    fn index_at_m4_and_m6() {
        for m in [4usize, 6] {
            let plus = phi_label(m, Branch::Plus).unwrap();
            let minus = phi_label(m, Branch::Minus).unwrap();
            let rp = fredholm_index::<f64>(m, &plus).unwrap();
            assert_eq!(rp.rounded_index, 1, "m={m}");
            let rm = fredholm_index::<f64>(m, &minus).unwrap();
            assert_eq!(rm.rounded_index, -1, "m={m}");
            assert!((rp.index_via_s - rp.index_via_k).abs() <= 1e-9);
            assert!((rm.index_via_s - rm.index_via_k).abs() <= 1e-9);
            let total: u8 = rp.kernel_dims.iter().map(|&(_, n)| n).sum();
            assert_eq!(total, 1);
        }
    }

    #[test]
    fn index_rejects_bad_inputs() {
        assert!(matches!(
            fredholm_index::<f64>(5, &SectorLabel::new(0, 1, 1)),
            Err(Error::NoSupersymmetricSector(5))
        ));
        assert!(matches!(
            fredholm_index::<f64>(4, &SectorLabel::new(0, 0, 0)),
            Err(Error::NotFixedPointBranch(_))
        ));
    }

    #[test]
    fn ramond_sum_vanishes() {
        for m in [4usize, 6] {
            for br in [Branch::Plus, Branch::Minus] {
                let phi = phi_label(m, br).unwrap();
                let s = ramond_dim_sum::<f64>(m, &phi).unwrap();
                assert!(s.abs() <= 1e-9, "m={m} {br:?}: {s}");
            }
        }
    }
}
