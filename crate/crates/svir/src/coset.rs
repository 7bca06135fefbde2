//! Sector combinatorics and modular data of the coset of SU(2)_m inside
//! SU(2)_{m−2} ⊗ SU(2)_2.
//!
//! Irreducible sectors are labelled by triples (j,k,l) with
//! j ∈ [0,m−2], k ∈ [0,m], l ∈ {0,1,2} and j−k+l even, subject to the
//! identification (j,k,l) ↔ (m−2−j, m−k, 2−l). Every l ∈ {0,2} class
//! has a unique l = 0 representative; l = 1 classes are represented by
//! the lexicographically smaller of (j,k) and (m−2−j, m−k). For even m
//! the l = 1 identification has the fixed point (m/2−1, m/2, 1), which
//! resolves into two sectors φ₊, φ₋ carrying half the unresolved
//! dimension each. l = 0 sectors are Neveu-Schwarz, l = 1 are Ramond.
//!
//! The S matrix comes in three pieces: doubled triple products between
//! non-split sectors, an undoubled triple product between a non-split
//! sector and either branch, and a resolved 2×2 block on the branches
//! (`δ_{nn'} + (X−1)/2` where X is the triple product at the fixed
//! point; the middle SU(2)_2 factor makes X vanish, so that block is
//! `±1/2`). T is diagonal with exponent `ĥ_ν − c/24`, where
//! `ĥ_ν = h_j − h_k + h_l` sums the constituent weights.
//!
//! Lowest weights are exact rationals. The two-parameter family
//! `h_{p,q} = ([(m+2)p − mq]² − 4)/(8m(m+2))`, p = j+1, q = k+1, lists
//! each Neveu-Schwarz module twice (the grid involution
//! (p,q) ↔ (m−p, m+2−q) preserves it), and the two l ∈ {0,2} members of
//! a class are the even and odd halves of one module. Which half the
//! l = 0 representative is, is decided by j−k mod 4: at j ≡ k (mod 4)
//! the representative carries the module's lowest vector (weight
//! h_{p,q}); otherwise it is the odd half, whose lowest vector sits half
//! a level up (weight h_{p,q} + 1/2, or 3/2 above the vacuum module
//! whose ½-level odd vector vanishes — that is the simple current
//! σ = (m−2, m, 0), dimension 1, spin −1). Ramond weights are
//! h_{p,q} + 1/16 with no halving; the plus branch of the fixed point
//! sits exactly at c/24 and the minus branch strictly above it (exact
//! value not tracked, stored as unknown).

use crate::linalg::CMat;
use crate::rational::{is_integer, phase, rat, rat_int, Rational};
use crate::scalar::Real;
use crate::su2::{build_level_data, level_weight};
use crate::{Error, Result};
use num_complex::Complex;
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;

/// Branch tag of the split fixed point; `None` for every other sector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    None,
    Plus,
    Minus,
}

/// Canonical label of an irreducible coset sector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SectorLabel {
    pub j: usize,
    pub k: usize,
    pub l: u8,
    pub branch: Branch,
}

impl SectorLabel {
    pub fn new(j: usize, k: usize, l: u8) -> Self {
        SectorLabel {
            j,
            k,
            l,
            branch: Branch::None,
        }
    }

    pub fn branched(j: usize, k: usize, l: u8, branch: Branch) -> Self {
        SectorLabel { j, k, l, branch }
    }

    /// Deterministic sector order: l, then j, then k, plus before minus.
    fn key(&self) -> (u8, usize, usize, Branch) {
        (self.l, self.j, self.k, self.branch)
    }

    /// The other triple representing the same class (l = 1 only).
    pub fn partner(&self, m: usize) -> Option<(usize, usize, u8)> {
        (self.l == 1).then(|| (m - 2 - self.j, m - self.k, 1u8))
    }
}

impl PartialOrd for SectorLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SectorLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for SectorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.j, self.k, self.l)?;
        match self.branch {
            Branch::None => Ok(()),
            Branch::Plus => write!(f, "+"),
            Branch::Minus => write!(f, "-"),
        }
    }
}

/// σ-parity of a sector: trivial or sign monodromy with the grading
/// sector σ = (m−2, m, 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SigmaParity {
    Bose,
    Fermi,
}

/// Exact central charge `(3/2)(1 − 8/(m(m+2)))`.
pub fn central_charge(m: usize) -> Result<Rational> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "central charge needs m ≥ 2, got {m}"
        )));
    }
    let m = m as i64;
    Ok(rat(3, 2) * (rat_int(1) - rat(8, m * (m + 2))))
}

/// The grading simple current σ = (m−2, m, 0).
pub fn sigma_label(m: usize) -> SectorLabel {
    SectorLabel::new(m - 2, m, 0)
}

/// Fixed-point coordinates (m/2−1, m/2) for even m.
pub fn fixed_point(m: usize) -> Option<(usize, usize)> {
    (m % 2 == 0).then(|| (m / 2 - 1, m / 2))
}

pub fn phi_label(m: usize, branch: Branch) -> Result<SectorLabel> {
    let (fj, fk) = fixed_point(m).ok_or(Error::NoSupersymmetricSector(m))?;
    debug_assert!(matches!(branch, Branch::Plus | Branch::Minus));
    Ok(SectorLabel::branched(fj, fk, 1, branch))
}

fn check_triple(m: usize, j: usize, k: usize, l: u8) -> Result<()> {
    if m < 3 || j > m - 2 || k > m || l > 2 {
        return Err(Error::InvalidSector {
            m,
            j: j as i64,
            k: k as i64,
            l: l as i64,
            reason: "label out of range",
        });
    }
    if (j + l as usize) % 2 != k % 2 {
        return Err(Error::InvalidSector {
            m,
            j: j as i64,
            k: k as i64,
            l: l as i64,
            reason: "j - k + l must be even",
        });
    }
    Ok(())
}

/// Canonical representative of the class of (j,k,l), l ∈ {0,1,2}.
///
/// l = 2 folds onto its l = 0 partner; l = 1 folds onto the
/// lexicographic minimum. The unresolved fixed point is rejected with a
/// dedicated error: the caller must pick a branch.
pub fn canonicalize(m: usize, j: usize, k: usize, l: u8) -> Result<SectorLabel> {
    check_triple(m, j, k, l)?;
    match l {
        0 => Ok(SectorLabel::new(j, k, 0)),
        2 => Ok(SectorLabel::new(m - 2 - j, m - k, 0)),
        _ => {
            let (pj, pk) = (m - 2 - j, m - k);
            if (j, k) < (pj, pk) {
                Ok(SectorLabel::new(j, k, 1))
            } else if (j, k) > (pj, pk) {
                Ok(SectorLabel::new(pj, pk, 1))
            } else {
                Err(Error::FixedPointNeedsBranch { m, j, k })
            }
        }
    }
}

/// Check that `s` is a canonical sector label for this m.
pub fn validate_sector(m: usize, s: &SectorLabel) -> Result<()> {
    check_triple(m, s.j, s.k, s.l)?;
    let invalid = |reason| Error::InvalidSector {
        m,
        j: s.j as i64,
        k: s.k as i64,
        l: s.l as i64,
        reason,
    };
    match s.l {
        0 => (s.branch == Branch::None)
            .then_some(())
            .ok_or(invalid("l = 0 sectors carry no branch")),
        1 => {
            let (pj, pk) = (m - 2 - s.j, m - s.k);
            if (s.j, s.k) > (pj, pk) {
                Err(invalid("not the lexicographic class representative"))
            } else if (s.j, s.k) == (pj, pk) {
                matches!(s.branch, Branch::Plus | Branch::Minus)
                    .then_some(())
                    .ok_or(Error::FixedPointNeedsBranch { m, j: s.j, k: s.k })
            } else {
                (s.branch == Branch::None)
                    .then_some(())
                    .ok_or(invalid("only the fixed point carries a branch"))
            }
        }
        _ => Err(invalid("canonical labels have l ∈ {0, 1}")),
    }
}

/// All canonical sectors, deterministically ordered (l, j, k, branch).
pub fn enumerate_sectors(m: usize) -> Result<Vec<SectorLabel>> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "coset sectors need m ≥ 3, got {m}"
        )));
    }
    let mut out = Vec::new();
    for j in 0..=(m - 2) {
        for k in 0..=m {
            if (j % 2) == (k % 2) {
                out.push(SectorLabel::new(j, k, 0));
            }
        }
    }
    for j in 0..=(m - 2) {
        for k in 0..=m {
            if (j % 2) == (k % 2) {
                continue;
            }
            let (pj, pk) = (m - 2 - j, m - k);
            if (j, k) < (pj, pk) {
                out.push(SectorLabel::new(j, k, 1));
            } else if (j, k) == (pj, pk) {
                out.push(SectorLabel::branched(j, k, 1, Branch::Plus));
                out.push(SectorLabel::branched(j, k, 1, Branch::Minus));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Exact exponent e with conformal spin = exp(iπe/2):
/// `e = j(j+2)/m − k(k+2)/(m+2) + l(l+2)/4`.
pub fn spin_exponent(m: usize, s: &SectorLabel) -> Result<Rational> {
    validate_sector(m, s)?;
    let (j, k, l) = (s.j as i64, s.k as i64, s.l as i64);
    let m = m as i64;
    Ok(rat(j * (j + 2), m) - rat(k * (k + 2), m + 2) + rat(l * (l + 2), 4))
}

/// Conformal spin of a sector; both branches of the fixed point return
/// the unresolved triple's value.
pub fn conformal_spin<T: Real>(m: usize, s: &SectorLabel) -> Result<Complex<T>> {
    let e = spin_exponent(m, s)?;
    Ok(phase(&(e / rat_int(4))))
}

fn h_pq(m: usize, p: i64, q: i64) -> Rational {
    let m = m as i64;
    let num = (m + 2) * p - m * q;
    rat(num * num - 4, 8 * m * (m + 2))
}

/// Exact lowest weight of a sector; `None` for the minus branch of the
/// fixed point (strictly above c/24, exact value not tracked).
pub fn lowest_weight(m: usize, s: &SectorLabel) -> Result<Option<Rational>> {
    validate_sector(m, s)?;
    let h0 = h_pq(m, s.j as i64 + 1, s.k as i64 + 1);
    let h = match (s.l, s.branch) {
        (1, Branch::Minus) => return Ok(None),
        (1, _) => {
            let h = h0 + rat(1, 16);
            if s.branch == Branch::Plus {
                debug_assert_eq!(h, central_charge(m)? / rat_int(24));
            }
            h
        }
        _ => {
            // j − k ≡ 0 (mod 4): the representative is the even half of
            // its module; otherwise the odd half, half a level up (3/2
            // above the vacuum module, whose ½-level vector vanishes).
            if (s.j as i64 - s.k as i64).rem_euclid(4) == 0 {
                h0
            } else if h0.is_zero() {
                rat(3, 2)
            } else {
                h0 + rat(1, 2)
            }
        }
    };
    // The stored weight must reproduce the spin: h ≡ h_j − h_k + h_l (mod 1).
    let hat = level_weight(m - 2, s.j) - level_weight(m, s.k) + level_weight(2, s.l as usize);
    if !is_integer(&(&h - &hat)) {
        return Err(Error::WeightCongruence(s.to_string()));
    }
    Ok(Some(h))
}

/// Fusion action of the simple current σ: (j,k,l) ↦ the class of
/// (m−2−j, m−k, l); on the fixed point it swaps the two branches. An
/// involution; fixes every non-split Ramond class.
pub fn sigma_act(m: usize, s: &SectorLabel) -> Result<SectorLabel> {
    validate_sector(m, s)?;
    match s.branch {
        Branch::Plus => Ok(SectorLabel::branched(s.j, s.k, s.l, Branch::Minus)),
        Branch::Minus => Ok(SectorLabel::branched(s.j, s.k, s.l, Branch::Plus)),
        Branch::None => canonicalize(m, m - 2 - s.j, m - s.k, s.l),
    }
}

/// σ-parity from the statistics phases: the monodromy with σ is
/// `−ω(σ·s)/ω(s)` and must be ±1.
pub fn sigma_parity_of<T: Real>(m: usize, s: &SectorLabel) -> Result<SigmaParity> {
    let w: Complex<T> = conformal_spin(m, s)?;
    let ws: Complex<T> = conformal_spin(m, &sigma_act(m, s)?)?;
    let ratio = -(ws / w);
    // 1e-9 at f64; widened to the scalar's own resolution at f32
    let tol = T::of(1e-9).max(T::epsilon() * T::of(128.0));
    if (ratio - Complex::new(T::one(), T::zero())).norm() <= tol {
        Ok(SigmaParity::Bose)
    } else if (ratio + Complex::new(T::one(), T::zero())).norm() <= tol {
        Ok(SigmaParity::Fermi)
    } else {
        Err(Error::MonodromyNotSign {
            re: ratio.re.as_f64(),
            im: ratio.im.as_f64(),
        })
    }
}

/// Full modular data of the coset at one m. Immutable after build.
#[derive(Clone, Debug, PartialEq)]
pub struct CosetModularData<T: Real> {
    pub m: usize,
    pub sectors: Vec<SectorLabel>,
    pub s: CMat<T>,
    /// Diagonal of T, unit modulus.
    pub t: Vec<Complex<T>>,
    /// Exact lowest weights; unknown only for the minus branch.
    pub h: Vec<Option<Rational>>,
    pub dims: Vec<T>,
    pub is_ramond: Vec<bool>,
    pub sigma_parity: Vec<SigmaParity>,
    index: HashMap<SectorLabel, usize>,
}

impl<T: Real> CosetModularData<T> {
    /// Reassemble from parts (deserialization); only shape coherence is
    /// checked, the numbers are taken as stored.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        m: usize,
        sectors: Vec<SectorLabel>,
        s: CMat<T>,
        t: Vec<Complex<T>>,
        h: Vec<Option<Rational>>,
        dims: Vec<T>,
        is_ramond: Vec<bool>,
        sigma_parity: Vec<SigmaParity>,
    ) -> Result<Self> {
        let n = sectors.len();
        if s.rows() != n
            || s.cols() != n
            || t.len() != n
            || h.len() != n
            || dims.len() != n
            || is_ramond.len() != n
            || sigma_parity.len() != n
        {
            return Err(Error::DimensionMismatch(format!(
                "coset data with {n} sectors has inconsistent field lengths"
            )));
        }
        let index = sectors
            .iter()
            .enumerate()
            .map(|(i, sec)| (*sec, i))
            .collect();
        Ok(CosetModularData {
            m,
            sectors,
            s,
            t,
            h,
            dims,
            is_ramond,
            sigma_parity,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.sectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn sector_index(&self, s: &SectorLabel) -> Result<usize> {
        self.index
            .get(s)
            .copied()
            .ok_or_else(|| Error::UnknownSector(s.to_string()))
    }

    /// Index of the vacuum (0,0,0).
    pub fn vacuum(&self) -> usize {
        0
    }

    pub fn sigma_index(&self) -> usize {
        self.index[&sigma_label(self.m)]
    }

    pub fn phi_index(&self, branch: Branch) -> Result<usize> {
        self.sector_index(&phi_label(self.m, branch)?)
    }

    pub fn ramond_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.is_ramond[i])
    }

    pub fn t_matrix(&self) -> CMat<T> {
        CMat::diagonal(&self.t)
    }
}

/// Build the coset modular data: S from the three assembly cases, T from
/// exact phase exponents, weights, dimensions and parity flags.
pub fn build_coset_data<T: Real>(m: usize) -> Result<CosetModularData<T>> {
    let sectors = enumerate_sectors(m)?;
    let n = sectors.len();
    let ld1 = build_level_data::<T>(m - 2);
    let ld2 = build_level_data::<T>(m);
    let ld3 = build_level_data::<T>(2);
    let fp = fixed_point(m);

    let two = T::of(2.0);
    let half = T::of(0.5);
    let s1 = |a: usize, b: usize| ld1.s[(a, b)].re;
    let s2 = |a: usize, b: usize| ld2.s[(a, b)].re;
    let s3 = |a: usize, b: usize| ld3.s[(a, b)].re;

    let mut s = CMat::zeros(n, n);
    for (a, sa) in sectors.iter().enumerate() {
        for (b, sb) in sectors.iter().enumerate() {
            let v = match (sa.branch, sb.branch) {
                (Branch::None, Branch::None) => {
                    two * s1(sa.j, sb.j) * s2(sa.k, sb.k) * s3(sa.l as usize, sb.l as usize)
                }
                (Branch::None, _) | (_, Branch::None) => {
                    let t = if sa.branch == Branch::None { sa } else { sb };
                    let (fj, fk) = fp.expect("branch labels only exist for even m");
                    s1(t.j, fj) * s2(t.k, fk) * s3(t.l as usize, 1)
                }
                _ => {
                    let (fj, fk) = fp.expect("branch labels only exist for even m");
                    let x = s1(fj, fj) * s2(fk, fk) * s3(1, 1);
                    let delta = if sa.branch == sb.branch { T::one() } else { T::zero() };
                    delta + (x - T::one()) * half
                }
            };
            s[(a, b)] = Complex::new(v, T::zero());
        }
    }

    // T_ν = exp(2πi(ĥ_ν − c/24)) with exact exponent.
    let c24 = central_charge(m)? / rat_int(24);
    let t: Vec<Complex<T>> = sectors
        .iter()
        .map(|sec| {
            let hat = level_weight(m - 2, sec.j) - level_weight(m, sec.k)
                + level_weight(2, sec.l as usize);
            phase(&(hat - &c24))
        })
        .collect();

    let s00 = s[(0, 0)].re;
    let dims: Vec<T> = (0..n).map(|i| s[(0, i)].re / s00).collect();
    let h = sectors
        .iter()
        .map(|sec| lowest_weight(m, sec))
        .collect::<Result<Vec<_>>>()?;
    let is_ramond: Vec<bool> = sectors.iter().map(|sec| sec.l == 1).collect();
    let sigma_parity = sectors
        .iter()
        .map(|sec| sigma_parity_of::<T>(m, sec))
        .collect::<Result<Vec<_>>>()?;
    let index = sectors
        .iter()
        .enumerate()
        .map(|(i, sec)| (*sec, i))
        .collect();

    Ok(CosetModularData {
        m,
        sectors,
        s,
        t,
        h,
        dims,
        is_ramond,
        sigma_parity,
        index,
    })
}

/// Difference row `D_{ρ,ν} = S_{ρ,ν} − S_{σρ,ν}`: vanishes on σ-Bose ν
/// and doubles S on σ-Fermi ν.
pub fn d_matrix<T: Real>(data: &CosetModularData<T>, rho: &SectorLabel) -> Result<Vec<T>> {
    let r = data.sector_index(rho)?;
    let rs = data.sector_index(&sigma_act(data.m, rho)?)?;
    Ok((0..data.len())
        .map(|nu| data.s[(r, nu)].re - data.s[(rs, nu)].re)
        .collect())
}
