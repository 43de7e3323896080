use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("distribution is empty")]
    EmptyDistribution,
    #[error("probability at index {index} is not positive ({value})")]
    NonPositive { index: usize, value: String },
    #[error("probabilities sum to {sum}, expected 1")]
    BadSum { sum: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("tree covers {tree} outcomes but distribution has {dist}")]
    AlphabetMismatch { tree: usize, dist: usize },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("alphabet of size {n} exceeds the limit of {max} for this operation")]
    TooLarge { n: usize, max: usize },
    #[error("candidate set {0:?} admits no realizable split")]
    Unsolvable(Vec<usize>),
    #[error("no realizable split of candidate set {0:?}")]
    Stuck(Vec<usize>),
    #[error("no feasible merge sequence")]
    NoFeasibleMergeSequence,
    #[error("merge search budget exhausted after {explored} merge attempts")]
    BudgetExhausted { explored: u64 },
    #[error("outcome sets overlap")]
    Overlap,
    #[error("empty outcome set")]
    EmptySet,
    #[error("impossible board configuration: {0}")]
    ImpossibleConfig(String),
    #[error("hypothesis set is empty")]
    EmptyBoardSet,
    #[error("every unasked cell is already determined")]
    AlreadyDetermined,
    #[error("target board is not in the hypothesis space")]
    TargetNotInSpace,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Errors that mean "the problem instance has no feasible answer", as
    /// opposed to bad input or I/O.
    pub fn is_infeasible(&self) -> bool {
        matches!(
            self,
            Error::Unsolvable(_) | Error::Stuck(_) | Error::NoFeasibleMergeSequence | Error::BudgetExhausted { .. }
        )
    }
}
