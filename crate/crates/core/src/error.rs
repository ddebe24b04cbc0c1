use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("k = {k} out of range for n = {n}: expected {lo} <= k <= {hi}")]
    KOutOfRange {
        n: usize,
        k: usize,
        lo: usize,
        hi: i64,
    },
    #[error("unsupported size n = {n}: {reason}")]
    SizeOutOfRange { n: usize, reason: &'static str },
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("chain {0} is not maximal")]
    NotMaximal(String),
    #[error("cannot compare chains of different shapes")]
    IncomparableChains,
    #[error("ambient sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cannot combine series in different bases")]
    MixedBasis,
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenberg(String),
    #[error("diagonal entries must be pairwise distinct")]
    RepeatedEigenvalue,
    #[error("Krylov vectors are dependent: rank {rank} < depth {depth}")]
    RankDeficient { rank: usize, depth: usize },
    #[error("flag of length {len} cannot be checked at V_{needed}")]
    FlagTooShort { len: usize, needed: usize },
}
