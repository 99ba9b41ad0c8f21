use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("class with degree-0 coefficient {found} is not the character of a rank-{rank} sheaf")]
    RankMismatch { rank: u32, found: String },

    #[error("recovered Chern class c{index} = {value} is not an integer")]
    NonIntegralChernClass { index: usize, value: String },

    #[error("Euler characteristic {value} is not an integer")]
    NonIntegralChi { value: String },

    #[error("operation is only defined for rank 3, got rank {rank}")]
    RankUnsupported { rank: u32 },

    #[error("c3 - c1*c2 = {discrepancy} is odd")]
    ParityViolation { discrepancy: i64 },

    #[error("{0}")]
    DomainError(String),

    #[error("spectrum must be nondecreasing: {0:?}")]
    InvalidSpectrum(Vec<i64>),

    #[error("twist l = {l} is outside the range {range} where the spectrum formula applies")]
    OutOfValidityRange { l: i64, range: String },

    #[error("monad O(-1)^{a} -> O^{b} -> O(1)^{c} has nonpositive rank")]
    InvalidMonad { a: u32, b: u32, c: u32 },

    #[error("no natural-cohomology table exists{}: {reason}", twist.map(|t| format!(" at twist t = {t}")).unwrap_or_default())]
    NotNaturalizable { twist: Option<i64>, reason: String },

    #[error("row {t}: alternating sum {alternating} does not match chi = {chi}")]
    InconsistentRow { t: i64, alternating: i64, chi: i64 },

    #[error("table is missing rows for twists {0:?}")]
    MissingRows(Vec<i64>),

    #[error("hypothesis `{0}` was not supplied")]
    MissingHypothesis(&'static str),

    #[error("closed form gives {closed} but the Chow-ring computation gives {ring}")]
    ClosedFormMismatch { ring: i64, closed: i64 },

    #[error("dimension chain ends at {chain} but the Ext difference is {ext_diff}")]
    ChainMismatch { chain: i64, ext_diff: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
