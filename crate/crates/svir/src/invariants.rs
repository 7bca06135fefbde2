//! Enumeration and classification of modular invariants of the coset.
//!
//! A modular invariant is a nonnegative integer matrix Z over the
//! canonical sector basis with Z_00 = 1, ZS = SZ and ZT = TZ. Full
//! enumeration expresses Z in the commutant basis, puts that basis in
//! reduced row echelon form over entry coordinates ordered by their
//! Frobenius–Perron bound `Z_ab ≤ d_a·d_b`, and depth-first searches
//! integer values of the pivot entries; every determined entry is
//! checked for integrality, nonnegativity and the bound as soon as its
//! pivots are assigned, and surviving candidates are re-verified
//! against S and T from scratch.
//!
//! Two arithmetic filters cut the vacuum row down before any search:
//! sectors coupling to the vacuum must have conformal spin 1, and must
//! satisfy the sign-balance parity rule
//! `ε_{2m}(n)ε_{2m+4}(n)ε_8(n) = ε_{2m}(n(j+1))ε_{2m+4}(n(k+1))ε_8(n(l+1))`
//! for every n coprime to 8m(m+2) (one full period of all three signs).
//!
//! Found invariants are lifted to the unidentified triple basis (no
//! parity restriction, no folding, the fixed point unsplit) where the
//! product S̃ = S ⊗ S̄ ⊗ S is plain; the lifted matrix must commute with
//! S̃ and T̃, which is a strong independent consistency check on the
//! whole assembly. Vacuum rows are matched against the nine A-D-E
//! candidate patterns.

use crate::coset::{
    build_coset_data, canonicalize, conformal_spin, enumerate_sectors, fixed_point, Branch,
    CosetModularData, SectorLabel,
};
use crate::linalg::{commutant_basis_masked, CMat};
use crate::scalar::Real;
use crate::su2::build_level_data;
use crate::{Error, Result};
use num_complex::Complex;
use num_traits::Zero;

/// Sign ε_{2n}(j): 0 on j ≡ 0, n (mod 2n), +1 on the first half-period,
/// −1 on the second. Negative j wrap through the true modulus.
pub fn parity_epsilon(n2: u64, j: i64) -> Result<i8> {
    if n2 < 2 || n2 % 2 != 0 {
        return Err(Error::OddParityModulus(n2));
    }
    let n = n2 / 2;
    let r = j.rem_euclid(n2 as i64) as u64;
    Ok(if r % n == 0 {
        0
    } else if r < n {
        1
    } else {
        -1
    })
}

fn parity_balance(m: usize, j: usize, k: usize, l: u8, n: u64) -> (i8, i8) {
    let m2 = 2 * m as u64;
    let n_i = n as i64;
    let lhs = parity_epsilon(m2, n_i).unwrap()
        * parity_epsilon(m2 + 4, n_i).unwrap()
        * parity_epsilon(8, n_i).unwrap();
    let rhs = parity_epsilon(m2, n_i * (j as i64 + 1)).unwrap()
        * parity_epsilon(m2 + 4, n_i * (k as i64 + 1)).unwrap()
        * parity_epsilon(8, n_i * (l as i64 + 1)).unwrap();
    (lhs, rhs)
}

/// Smallest n coprime to 8m(m+2) violating the sign balance for
/// (j,k,l), scanning one full period; `None` when the rule holds.
pub fn parity_first_failure(m: usize, j: usize, k: usize, l: u8) -> Option<u64> {
    let period = 8 * (m as u64) * (m as u64 + 2);
    (1..=period)
        .filter(|&n| num_integer::gcd(n, period) == 1)
        .find(|&n| {
            let (lhs, rhs) = parity_balance(m, j, k, l, n);
            lhs != rhs
        })
}

/// Sign-balance parity rule over one full period of all three signs.
pub fn parity_ok(m: usize, j: usize, k: usize, l: u8) -> bool {
    parity_first_failure(m, j, k, l).is_none()
}

/// Canonical sectors with conformal spin 1 (within 1e-9).
pub fn spin_one_sectors<T: Real>(m: usize) -> Result<Vec<SectorLabel>> {
    let one = Complex::new(T::one(), T::zero());
    let tol = T::of(1e-9);
    let mut out = Vec::new();
    for s in enumerate_sectors(m)? {
        let w: Complex<T> = conformal_spin(m, &s)?;
        if (w - one).norm() <= tol {
            out.push(s);
        }
    }
    Ok(out)
}

/// Small dense integer matrix (row-major).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    n: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(n: usize) -> Self {
        IntMat {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.n..(r + 1) * self.n]
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn to_complex<T: Real>(&self) -> CMat<T> {
        CMat::from_fn(self.n, self.n, |r, c| {
            Complex::new(T::of(self[(r, c)] as f64), T::zero())
        })
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i64;
    fn index(&self, (r, c): (usize, usize)) -> &i64 {
        &self.data[r * self.n + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut i64 {
        &mut self.data[r * self.n + c]
    }
}

/// A modular invariant (or a first-row stub) over the canonical sector
/// order at one m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMatrix {
    pub m: usize,
    pub z: IntMat,
    pub ade_label: Option<String>,
    /// First-row stubs carry only the vacuum row; they do not satisfy
    /// the full commutation invariants.
    pub row_only: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Full,
    FirstRow,
}

/// Resource guard for the full commutant search.
pub const FULL_SEARCH_MAX_M: usize = 12;

const COMMUTANT_TOL: f64 = 1e-9;
const DFS_INT_TOL: f64 = 1e-6;
const REVERIFY_TOL: f64 = 1e-8;

/// Search result with diagnostics.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub invariants: Vec<InvariantMatrix>,
    /// True if some integral candidate prefix was cut by the
    /// Frobenius–Perron entry bound; never observed at m ≤ 12.
    pub fp_bound_hit: bool,
}

/// All modular invariants (full mode) or all admissible vacuum rows
/// (firstrow mode), deterministically ordered.
pub fn enumerate_invariants<T: Real>(m: usize, mode: SearchMode) -> Result<Vec<InvariantMatrix>> {
    enumerate_invariants_report::<T>(m, mode, false).map(|r| r.invariants)
}

/// Like [`enumerate_invariants`] but overriding the m ≤ 12 guard.
pub fn enumerate_invariants_forced<T: Real>(
    m: usize,
    mode: SearchMode,
) -> Result<Vec<InvariantMatrix>> {
    enumerate_invariants_report::<T>(m, mode, true).map(|r| r.invariants)
}

pub fn enumerate_invariants_report<T: Real>(
    m: usize,
    mode: SearchMode,
    force: bool,
) -> Result<SearchReport> {
    match mode {
        SearchMode::Full => {
            if m > FULL_SEARCH_MAX_M && !force {
                return Err(Error::SearchTooLarge(m, FULL_SEARCH_MAX_M));
            }
            full_search::<T>(m)
        }
        SearchMode::FirstRow => first_row_search::<T>(m),
    }
}

struct Dfs<'a, T: Real> {
    rows: &'a [Vec<T>],
    pivots: &'a [usize],
    bounds: &'a [i64],
    coords: &'a [(usize, usize)],
    cols: usize,
    int_tol: T,
    fp_hit: bool,
    found: Vec<Vec<i64>>,
}

impl<T: Real> Dfs<'_, T> {
    /// Settled coordinates in [from, to) must already be admissible
    /// integers; pivot coordinates are skipped (assigned exactly).
    fn check_range(&mut self, x: &[T], from: usize, to: usize) -> bool {
        for q in from..to {
            if self.pivots.contains(&q) {
                continue;
            }
            let v = x[q];
            let r = v.round();
            if (v - r).abs() > self.int_tol {
                return false;
            }
            let ri = r.as_f64() as i64;
            if ri < 0 {
                return false;
            }
            if ri > self.bounds[q] {
                self.fp_hit = true;
                return false;
            }
        }
        true
    }

    fn run(&mut self, depth: usize, x: &mut Vec<T>, checked_to: usize) {
        if depth == self.pivots.len() {
            if self.check_range(x, checked_to, self.cols) {
                let z: Vec<i64> = x.iter().map(|v| v.round().as_f64() as i64).collect();
                self.found.push(z);
            }
            return;
        }
        let pcol = self.pivots[depth];
        let (vmin, vmax) = if self.coords[pcol] == (0, 0) {
            (1, 1)
        } else {
            (0, self.bounds[pcol])
        };
        let next_stop = self.pivots.get(depth + 1).copied().unwrap_or(self.cols);
        for v in vmin..=vmax {
            let vt = T::of(v as f64);
            let row = &self.rows[depth];
            for c in 0..self.cols {
                x[c] += vt * row[c];
            }
            // coordinates strictly before the next pivot are settled now
            if self.check_range(x, checked_to, next_stop) {
                self.run(depth + 1, x, next_stop);
            }
            let row = &self.rows[depth];
            for c in 0..self.cols {
                x[c] -= vt * row[c];
            }
        }
    }
}

fn full_search<T: Real>(m: usize) -> Result<SearchReport> {
    let data = build_coset_data::<T>(m)?;
    let n = data.len();
    let t = data.t_matrix();
    let (mask, basis) = commutant_basis_masked(&data.s, &t, T::of(COMMUTANT_TOL))?;
    let rank = basis.len();
    if rank == 0 {
        return Ok(SearchReport {
            invariants: Vec::new(),
            fp_bound_hit: false,
        });
    }

    // entry coordinates ordered by Frobenius–Perron bound, small first
    let bound_of: Vec<i64> = mask
        .iter()
        .map(|&(a, b)| (data.dims[a] * data.dims[b] + T::of(0.5)).ceil().as_f64() as i64)
        .collect();
    let mut order: Vec<usize> = (0..mask.len()).collect();
    order.sort_by_key(|&i| (bound_of[i], mask[i]));
    let bounds: Vec<i64> = order.iter().map(|&i| bound_of[i]).collect();
    let coords: Vec<(usize, usize)> = order.iter().map(|&i| mask[i]).collect();
    let cols = coords.len();

    // reduced row echelon form of the basis over the ordered coordinates
    let mut rows: Vec<Vec<T>> = basis
        .iter()
        .map(|v| order.iter().map(|&i| v[i]).collect())
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for col in 0..cols {
        if r >= rank {
            break;
        }
        let (best, best_val) = (r..rank).fold((r, T::zero()), |acc, i| {
            let v = rows[i][col].abs();
            if v > acc.1 {
                (i, v)
            } else {
                acc
            }
        });
        if best_val <= T::of(1e-7) {
            continue;
        }
        rows.swap(r, best);
        let inv = T::one() / rows[r][col];
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rank {
            if i == r {
                continue;
            }
            let f = rows[i][col];
            if f != T::zero() {
                for c in 0..cols {
                    let sub = f * rows[r][c];
                    rows[i][c] -= sub;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let rows = rows;

    let mut dfs = Dfs {
        rows: &rows,
        pivots: &pivots,
        bounds: &bounds,
        coords: &coords,
        cols,
        int_tol: T::of(DFS_INT_TOL),
        fp_hit: false,
        found: Vec::new(),
    };
    let mut x = vec![T::zero(); cols];
    dfs.run(0, &mut x, 0);

    // independent re-verification, then deterministic order and labels
    let tol_v = T::of(REVERIFY_TOL);
    let mut kept: Vec<IntMat> = dfs
        .found
        .iter()
        .map(|vals| {
            let mut z = IntMat::zeros(n);
            for (q, &(a, b)) in coords.iter().enumerate() {
                z[(a, b)] = vals[q];
            }
            z
        })
        .filter(|z| z[(0, 0)] == 1 && commutes_with(z, &data, tol_v))
        .collect();
    kept.sort_by(|a, b| a.data.cmp(&b.data));
    kept.dedup();
    let invariants = kept
        .into_iter()
        .map(|z| {
            let mut inv = InvariantMatrix {
                m,
                z,
                ade_label: None,
                row_only: false,
            };
            inv.ade_label = match_ade(m, &inv);
            inv
        })
        .collect();
    Ok(SearchReport {
        invariants,
        fp_bound_hit: dfs.fp_hit,
    })
}

/// ZS = SZ and ZT = TZ within tol, entries nonnegative.
pub fn commutes_with<T: Real>(z: &IntMat, data: &CosetModularData<T>, tol: T) -> bool {
    let n = data.len();
    if z.size() != n || z.entries().iter().any(|&v| v < 0) {
        return false;
    }
    let zc = z.to_complex::<T>();
    let zs = zc.mul(&data.s);
    let sz = data.s.mul(&zc);
    if zs.max_diff(&sz) > tol {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            if z[(a, b)] != 0 && (data.t[a] - data.t[b]).norm() > tol {
                return false;
            }
        }
    }
    true
}

/// Vacuum-row commutation constraint: every entry of zᵀS must be
/// nonnegative, since it equals Σ_μ S_0μ·Z_μν with S_0μ > 0, Z_μν ≥ 0.
pub fn row_commutation_ok<T: Real>(data: &CosetModularData<T>, row: &[i64], tol: T) -> bool {
    let n = data.len();
    (0..n).all(|nu| {
        let mut acc = T::zero();
        for mu in 0..n {
            acc += T::of(row[mu] as f64) * data.s[(mu, nu)].re;
        }
        acc >= -tol
    })
}

fn first_row_search<T: Real>(m: usize) -> Result<SearchReport> {
    let data = build_coset_data::<T>(m)?;
    let n = data.len();
    let allowed: Vec<usize> = {
        let mut v = Vec::new();
        for s in spin_one_sectors::<T>(m)? {
            if parity_ok(m, s.j, s.k, s.l) {
                v.push(data.sector_index(&s)?);
            }
        }
        v
    };

    // Global-index cap: the largest candidate endomorphism dimension
    // over the A-D-E patterns applicable at this m.
    let mut cap = T::zero();
    for (_, pattern) in table1_rows(m)? {
        let mut d = T::zero();
        for s in &pattern {
            d += data.dims[data.sector_index(s)?];
        }
        cap = cap.max(d);
    }
    let cap = cap + T::of(1e-6);

    fn dfs<T: Real>(
        dims: &[T],
        rest: &[usize],
        at: usize,
        used: T,
        cap: T,
        row: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if at == rest.len() {
            out.push(row.clone());
            return;
        }
        let idx = rest[at];
        let d = dims[idx];
        let mut mult = 0i64;
        loop {
            let total = used + T::of(mult as f64) * d;
            if total > cap {
                break;
            }
            row[idx] = mult;
            dfs(dims, rest, at + 1, total, cap, row, out);
            mult += 1;
        }
        row[idx] = 0;
    }

    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut row = vec![0i64; n];
    row[0] = 1;
    let rest: Vec<usize> = allowed.into_iter().filter(|&i| i != 0).collect();
    dfs(&data.dims, &rest, 0, data.dims[0], cap, &mut row, &mut rows);
    rows.sort();

    let invariants = rows
        .into_iter()
        .map(|r| {
            let mut z = IntMat::zeros(n);
            for (i, &v) in r.iter().enumerate() {
                z[(0, i)] = v;
            }
            let mut inv = InvariantMatrix {
                m,
                z,
                ade_label: None,
                row_only: true,
            };
            inv.ade_label = match_ade(m, &inv);
            inv
        })
        .collect();
    Ok(SearchReport {
        invariants,
        fp_bound_hit: false,
    })
}

/// Unidentified triple basis (j,k,l), l ∈ {0,1,2}, with the plain
/// product S̃ and diagonal T̃.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedData<T: Real> {
    pub m: usize,
    pub triples: Vec<(usize, usize, u8)>,
    pub s: CMat<T>,
    pub t: Vec<Complex<T>>,
}

impl<T: Real> ExtendedData<T> {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }
}

pub fn build_extended_data<T: Real>(m: usize) -> Result<ExtendedData<T>> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "extended data needs m ≥ 3, got {m}"
        )));
    }
    let ld1 = build_level_data::<T>(m - 2);
    let ld2 = build_level_data::<T>(m);
    let ld3 = build_level_data::<T>(2);
    let mut triples = Vec::with_capacity(3 * (m - 1) * (m + 1));
    for l in 0..=2u8 {
        for j in 0..=(m - 2) {
            for k in 0..=m {
                triples.push((j, k, l));
            }
        }
    }
    let s = CMat::from_fn(triples.len(), triples.len(), |a, b| {
        let (j, k, l) = triples[a];
        let (j2, k2, l2) = triples[b];
        ld1.s[(j, j2)] * ld2.s[(k, k2)].conj() * ld3.s[(l as usize, l2 as usize)]
    });
    let t: Vec<Complex<T>> = triples
        .iter()
        .map(|&(j, k, l)| ld1.t[j] * ld2.t[k].conj() * ld3.t[l as usize])
        .collect();
    Ok(ExtendedData { m, triples, s, t })
}

/// Lift an invariant over canonical sectors to the unidentified triple
/// basis: entries copy through the class folding, φ rows/columns sum
/// over the two branches, and odd-parity triples are zero.
pub fn lift_invariant<T: Real>(m: usize, inv: &InvariantMatrix) -> Result<IntMat> {
    if inv.row_only {
        return Err(Error::RowStubOnly);
    }
    let sectors = enumerate_sectors(m)?;
    if inv.z.size() != sectors.len() {
        return Err(Error::DimensionMismatch(format!(
            "invariant has {} sectors, m={} has {}",
            inv.z.size(),
            m,
            sectors.len()
        )));
    }
    let index_of = |s: &SectorLabel| sectors.iter().position(|x| x == s).expect("canonical label");
    let fp = fixed_point(m);
    let phi_idx = fp.map(|(fj, fk)| {
        (
            index_of(&SectorLabel::branched(fj, fk, 1, Branch::Plus)),
            index_of(&SectorLabel::branched(fj, fk, 1, Branch::Minus)),
        )
    });

    let ext = build_extended_data::<T>(m)?;
    let nt = ext.len();
    let mut out = IntMat::zeros(nt);
    let even = |(j, k, l): (usize, usize, u8)| (j + l as usize) % 2 == k % 2;
    let is_phi = |t: (usize, usize, u8)| fp.map_or(false, |(fj, fk)| t == (fj, fk, 1));

    for a in 0..nt {
        let ta = ext.triples[a];
        if !even(ta) {
            continue;
        }
        for b in 0..nt {
            let tb = ext.triples[b];
            if !even(tb) {
                continue;
            }
            let v = match (is_phi(ta), is_phi(tb)) {
                (false, false) => {
                    let ca = canonicalize(m, ta.0, ta.1, ta.2)?;
                    let cb = canonicalize(m, tb.0, tb.1, tb.2)?;
                    inv.z[(index_of(&ca), index_of(&cb))]
                }
                (false, true) => {
                    let ca = canonicalize(m, ta.0, ta.1, ta.2)?;
                    let (p, q) = phi_idx.expect("phi triple implies even m");
                    inv.z[(index_of(&ca), p)] + inv.z[(index_of(&ca), q)]
                }
                (true, false) => {
                    let cb = canonicalize(m, tb.0, tb.1, tb.2)?;
                    let (p, q) = phi_idx.expect("phi triple implies even m");
                    inv.z[(p, index_of(&cb))] + inv.z[(q, index_of(&cb))]
                }
                (true, true) => {
                    let (p, q) = phi_idx.expect("phi triple implies even m");
                    inv.z[(p, p)] + inv.z[(p, q)] + inv.z[(q, p)] + inv.z[(q, q)]
                }
            };
            out[(a, b)] = v;
        }
    }
    Ok(out)
}

/// Residual `max(‖Z̃S̃ − S̃Z̃‖∞, ‖Z̃T̃ − T̃Z̃‖∞)` of a lifted invariant.
pub fn lift_residual<T: Real>(ext: &ExtendedData<T>, lifted: &IntMat) -> T {
    let zc = lifted.to_complex::<T>();
    let r1 = zc.mul(&ext.s).max_diff(&ext.s.mul(&zc));
    let t = CMat::diagonal(&ext.t);
    let r2 = zc.mul(&t).max_diff(&t.mul(&zc));
    r1.max(r2)
}

/// The A-D-E candidate vacuum rows instantiated at m (only the rows
/// whose congruence class matches). Labels pair the type at level m−2
/// with the type at level m.
pub fn table1_rows(m: usize) -> Result<Vec<(String, Vec<SectorLabel>)>> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("need m ≥ 3, got {m}")));
    }
    let vac = SectorLabel::new(0, 0, 0);
    let mut rows = vec![(format!("(A_{}, A_{})", m - 1, m + 1), vec![vac])];
    if m % 4 == 0 {
        let mp = m / 4;
        rows.push((
            format!("(A_{}, D_{})", 4 * mp - 1, 2 * mp + 2),
            vec![vac, SectorLabel::new(0, m, 0)],
        ));
    }
    if m % 4 == 2 && m >= 6 {
        let mp = (m - 2) / 4;
        rows.push((
            format!("(D_{}, A_{})", 2 * mp + 2, 4 * mp + 3),
            vec![vac, SectorLabel::new(m - 2, 0, 0)],
        ));
    }
    if m == 10 {
        rows.push((
            "(A_9, E_6)".to_string(),
            vec![vac, SectorLabel::new(0, 6, 0)],
        ));
        rows.push((
            "(D_6, E_6)".to_string(),
            vec![
                vac,
                SectorLabel::new(0, 6, 0),
                SectorLabel::new(8, 0, 0),
                SectorLabel::new(8, 6, 0),
            ],
        ));
    }
    if m == 12 {
        rows.push((
            "(E_6, A_13)".to_string(),
            vec![vac, SectorLabel::new(6, 0, 0)],
        ));
        rows.push((
            "(E_6, D_8)".to_string(),
            vec![
                vac,
                SectorLabel::new(6, 0, 0),
                SectorLabel::new(0, 12, 0),
                SectorLabel::new(6, 12, 0),
            ],
        ));
    }
    if m == 28 {
        rows.push((
            "(A_27, E_8)".to_string(),
            vec![
                vac,
                SectorLabel::new(0, 10, 0),
                SectorLabel::new(0, 18, 0),
                SectorLabel::new(0, 28, 0),
            ],
        ));
    }
    if m == 30 {
        rows.push((
            "(E_8, A_31)".to_string(),
            vec![
                vac,
                SectorLabel::new(10, 0, 0),
                SectorLabel::new(18, 0, 0),
                SectorLabel::new(28, 0, 0),
            ],
        ));
    }
    Ok(rows)
}

/// Match the vacuum row of an invariant against the A-D-E candidate
/// patterns at its m; multiplicity-1 support equality.
pub fn match_ade(m: usize, inv: &InvariantMatrix) -> Option<String> {
    let sectors = enumerate_sectors(m).ok()?;
    if inv.z.size() != sectors.len() {
        return None;
    }
    let row = inv.z.row(0);
    for (label, pattern) in table1_rows(m).ok()? {
        let matches = sectors
            .iter()
            .enumerate()
            .all(|(i, s)| row[i] == i64::from(pattern.contains(s)));
        if matches {
            return Some(label);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{phi_label, sigma_label};

    #[test]
    fn epsilon_definition() {
        assert_eq!(parity_epsilon(8, 4).unwrap(), 0);
        assert_eq!(parity_epsilon(8, 3).unwrap(), 1);
        assert_eq!(parity_epsilon(8, 7).unwrap(), -1);
        assert_eq!(parity_epsilon(8, 0).unwrap(), 0);
        assert_eq!(parity_epsilon(8, -1).unwrap(), -1);
        assert_eq!(parity_epsilon(8, -3).unwrap(), -1);
        assert_eq!(parity_epsilon(6, 14).unwrap(), 1);
        assert!(parity_epsilon(7, 1).is_err());
    }

    #[test]
    fn parity_rule_at_m30() {
        assert_eq!(parity_first_failure(30, 3, 12, 1), Some(13));
        assert_eq!(parity_first_failure(30, 13, 18, 1), Some(7));
        assert!(parity_ok(30, 0, 0, 0));
    }

    #[test]
    fn spin_one_at_m10() {
        let s1 = spin_one_sectors::<f64>(10).unwrap();
        for (j, k) in [(0, 0), (0, 6), (8, 0), (8, 6)] {
            assert!(s1.contains(&SectorLabel::new(j, k, 0)), "({j},{k},0)");
        }
        // the simple current has spin −1, not 1
        assert!(!s1.contains(&sigma_label(10)));
    }

    #[test]
    fn spin_one_at_m3_is_vacuum_only_among_ns() {
        let s1 = spin_one_sectors::<f64>(3).unwrap();
        let ns: Vec<_> = s1.iter().filter(|s| s.l == 0).collect();
        assert_eq!(ns, vec![&SectorLabel::new(0, 0, 0)]);
    }

    #[test]
    fn extended_sizes_and_unitarity() {
        let e3 = build_extended_data::<f64>(3).unwrap();
        assert_eq!(e3.len(), 24);
        assert!(e3.s.is_unitary(1e-12));
        let e4 = build_extended_data::<f64>(4).unwrap();
        assert_eq!(e4.len(), 45);
        for z in &e4.t {
            assert!((z.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn identity_lift_structure_at_m3() {
        // no fixed point at odd m: the lift of the identity is the class
        // indicator on even-parity triple pairs
        let inv = InvariantMatrix {
            m: 3,
            z: IntMat::identity(6),
            ade_label: None,
            row_only: false,
        };
        let lifted = lift_invariant::<f64>(3, &inv).unwrap();
        let ext = build_extended_data::<f64>(3).unwrap();
        let even = |(j, k, l): (usize, usize, u8)| (j + l as usize) % 2 == k % 2;
        for a in 0..ext.len() {
            for b in 0..ext.len() {
                let (ta, tb) = (ext.triples[a], ext.triples[b]);
                let want = if even(ta) && even(tb) {
                    let ca = canonicalize(3, ta.0, ta.1, ta.2).unwrap();
                    let cb = canonicalize(3, tb.0, tb.1, tb.2).unwrap();
                    i64::from(ca == cb)
                } else {
                    0
                };
                assert_eq!(lifted[(a, b)], want, "at {ta:?},{tb:?}");
            }
        }
        assert!(lift_residual(&ext, &lifted) < 1e-7);
    }

    #[test]
    fn full_search_m3_identity_only() {
        let invs = enumerate_invariants::<f64>(3, SearchMode::Full).unwrap();
        assert_eq!(invs.len(), 1);
        assert_eq!(invs[0].z, IntMat::identity(6));
        assert_eq!(invs[0].ade_label.as_deref(), Some("(A_2, A_4)"));
    }

    #[test]
    fn full_search_m4_contains_d_type() {
        let invs = enumerate_invariants::<f64>(4, SearchMode::Full).unwrap();
        let data = build_coset_data::<f64>(4).unwrap();
        assert!(invs.iter().any(|i| i.z == IntMat::identity(13)));
        let d_idx = data.sector_index(&SectorLabel::new(0, 4, 0)).unwrap();
        let dtype: Vec<_> = invs
            .iter()
            .filter(|i| {
                let row = i.z.row(0);
                row[0] == 1 && row[d_idx] == 1 && row.iter().sum::<i64>() == 2
            })
            .collect();
        assert!(!dtype.is_empty());
        assert!(dtype
            .iter()
            .all(|i| i.ade_label.as_deref() == Some("(A_3, D_4)")));
        for inv in &invs {
            assert!(commutes_with(&inv.z, &data, 1e-8));
        }
    }

    #[test]
    fn guard_rejects_large_m() {
        assert!(matches!(
            enumerate_invariants::<f64>(13, SearchMode::Full),
            Err(Error::SearchTooLarge(13, _))
        ));
    }

    #[test]
    fn first_row_mode_m4() {
        let rows = enumerate_invariants::<f64>(4, SearchMode::FirstRow).unwrap();
        assert!(rows.iter().all(|r| r.row_only));
        let labels: Vec<_> = rows.iter().filter_map(|r| r.ade_label.clone()).collect();
        assert!(labels.contains(&"(A_3, A_5)".to_string()));
        assert!(labels.contains(&"(A_3, D_4)".to_string()));
        assert!(lift_invariant::<f64>(4, &rows[0]).is_err());
    }

    #[test]
    fn table1_instantiation() {
        let rows = table1_rows(10).unwrap();
        let labels: Vec<&str> = rows.iter().map(|(l, _)| l.as_str()).collect();
        assert_eq!(
            labels,
            vec!["(A_9, A_11)", "(D_6, A_11)", "(A_9, E_6)", "(D_6, E_6)"]
        );
        let rows = table1_rows(28).unwrap();
        assert!(rows.iter().any(|(l, _)| l == "(A_27, E_8)"));
        let rows = table1_rows(5).unwrap();
        assert_eq!(rows.len(), 1);
    }

    #[test]
    fn match_ade_examples() {
        let data = build_coset_data::<f64>(10).unwrap();
        let n = data.len();
        let mut z = IntMat::zeros(n);
        z[(0, 0)] = 1;
        z[(0, data.sector_index(&SectorLabel::new(0, 6, 0)).unwrap())] = 1;
        let inv = InvariantMatrix {
            m: 10,
            z,
            ade_label: None,
            row_only: true,
        };
        assert_eq!(match_ade(10, &inv).as_deref(), Some("(A_9, E_6)"));
        let mut z = IntMat::zeros(n);
        z[(0, 0)] = 1;
        let inv = InvariantMatrix {
            m: 10,
            z,
            ade_label: None,
            row_only: true,
        };
        assert_eq!(match_ade(10, &inv).as_deref(), Some("(A_9, A_11)"));
    }

    #[test]
    fn phi_branches_never_have_spin_one() {
        for m in [4usize, 6, 8, 10, 12] {
            let s1 = spin_one_sectors::<f64>(m).unwrap();
            assert!(!s1.contains(&phi_label(m, Branch::Plus).unwrap()));
            assert!(!s1.contains(&phi_label(m, Branch::Minus).unwrap()));
        }
    }
}
