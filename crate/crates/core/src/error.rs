use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("band-limit must be at least 1")]
    InvalidBandLimit,

    #[error("spin {spin} is invalid for band-limit {band_limit} (need |s| < L)")]
    InvalidSpin { spin: i32, band_limit: usize },

    #[error("dimension mismatch: expected {expected} values, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("previous plane has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree {ell} exceeds the supported maximum {max}")]
    UnsupportedDegree { ell: usize, max: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("Newton iteration for Legendre root {index} did not converge (L = {band_limit})")]
    NonConvergence { index: usize, band_limit: usize },

    #[error(
        "band-limit {band_limit} exceeds the stability limit {limit} of the three-term recursion"
    )]
    UnstableBandLimit { band_limit: usize, limit: usize },

    #[error("coefficient ({ell}, {m}) is nonzero but ell < |spin| = {spin}")]
    NonzeroBelowSpin { ell: usize, m: i32, spin: i32 },

    #[error("real transforms require spin 0, got {0}")]
    UnsupportedSpin(i32),

    #[error("input violates the reality condition by {deviation:e}")]
    SymmetryViolation { deviation: f64 },

    #[error("malformed file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
