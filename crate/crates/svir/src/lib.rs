//! Modular data of the `c < 3/2` superconformal coset models.
//!
//! The Bose part of the super-Virasoro net at
//! `c = (3/2)(1 − 8/(m(m+2)))` is the coset of `SU(2)_m` inside
//! `SU(2)_{m−2} ⊗ SU(2)_2`. This crate computes its full modular data
//! (sector list with fixed-point resolution, S and T matrices, exact
//! lowest weights, quantum dimensions, Neveu-Schwarz/Ramond and
//! σ-parity structure), enumerates and classifies the nonnegative
//! integer modular invariants against the A-D-E candidate list, and
//! evaluates the supersymmetric Fredholm index of the distinguished
//! Ramond sector with lowest weight `c/24`. A finite-dimensional
//! graded-operator laboratory validates the heat-supertrace identity
//! `Str(e^{−tQ²}) = ind(Q₊)` that the index formula rests on.
//!
//! Floating-point work is generic over [`scalar::Real`] (`f32`/`f64`);
//! exact quantities (central charges, lowest weights, weight
//! congruences) use arbitrary-precision [`rational::Rational`]. The
//! concrete `f64` aliases below are what the CLI and the verification
//! suite use.

pub mod acceptance;
pub mod coset;
pub mod invariants;
pub mod json;
pub mod linalg;
pub mod mckean;
pub mod rational;
pub mod scalar;
pub mod su2;
pub mod susy;

pub use coset::{Branch, CosetModularData, SectorLabel, SigmaParity};
pub use invariants::{ExtendedData, InvariantMatrix, IntMat, SearchMode};
pub use linalg::{CMat, RMat};
pub use mckean::GradedOperator;
pub use rational::Rational;
pub use scalar::Real;
pub use susy::IndexReport;

/// Concrete `f64` instantiations used by the CLI and the acceptance suite.
pub type CMat64 = CMat<f64>;
pub type RMat64 = RMat<f64>;
pub type LevelData64 = su2::LevelData<f64>;
pub type CosetData64 = CosetModularData<f64>;
pub type ExtendedData64 = ExtendedData<f64>;
pub type IndexReport64 = IndexReport<f64>;
pub type GradedOperator64 = GradedOperator<f64>;

/// Errors across the crate. Numerical checks that are expected to hold
/// for well-formed modular data fail loudly through these variants
/// rather than returning garbage.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not a diagonal unitary within tolerance")]
    NotDiagonalUnitary,
    #[error("invalid level or rank parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid sector (j={j}, k={k}, l={l}) for m={m}: {reason}")]
    InvalidSector {
        m: usize,
        j: i64,
        k: i64,
        l: i64,
        reason: &'static str,
    },
    #[error("(j={j}, k={k}, l=1) is the fixed point at m={m}: a branch (plus/minus) is required")]
    FixedPointNeedsBranch { m: usize, j: usize, k: usize },
    #[error("sector {0} is not registered in the modular data")]
    UnknownSector(String),
    #[error("{context} = {value} is not an admissible integer within {tol} (corrupted S matrix?)")]
    NotAnInteger {
        context: &'static str,
        value: f64,
        tol: f64,
    },
    #[error("sector {0} is not a Ramond sector")]
    NotRamond(String),
    #[error("m={0} is odd: no supersymmetric sector exists")]
    NoSupersymmetricSector(usize),
    #[error("sector {0} is not a branch of the supersymmetric fixed point")]
    NotFixedPointBranch(String),
    #[error("monodromy with the grading sector is {re}+{im}i, not ±1 within tolerance")]
    MonodromyNotSign { re: f64, im: f64 },
    #[error("parity sign modulus {0} must be even and ≥ 2")]
    OddParityModulus(u64),
    #[error("full invariant search at m={0} exceeds the resource guard (m ≤ {1}); use the forced variant")]
    SearchTooLarge(usize, usize),
    #[error("operation requires a full invariant, got a first-row stub")]
    RowStubOnly,
    #[error("weight bookkeeping failed for sector {0}: stored weight violates the spin congruence")]
    WeightCongruence(String),
    #[error("json: at {path}: expected {expected}")]
    Json { path: String, expected: String },
    #[error("json: unsupported schema version {0:?}")]
    SchemaVersion(String),
    #[error("json: unknown document kind {0:?}")]
    UnknownKind(String),
}

pub type Result<T> = std::result::Result<T, Error>;
