use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rows are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("the subspace L is zero")]
    EmptyL,
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("ground set of size {n} exceeds the enumeration limit {limit}")]
    GroundTooLarge { n: usize, limit: usize },
    #[error("matroid has a loop at `{0}`")]
    LoopPresent(String),
    #[error("differential operator of order {order} applied in degree {degree}")]
    DegreeUnderflow { order: usize, degree: usize },
    #[error("k = {k} outside the admissible range [{min}, 0]")]
    KOutOfRange { k: i64, min: i64 },
    #[error("random audit failed: {0}")]
    AuditFailure(String),
    #[error("requested degree {requested} exceeds the cost guard {limit}")]
    CostGuard { requested: usize, limit: usize },
    #[error("map does not preserve L")]
    NotAutomorphism,
    #[error("degree {0} outside the computed range")]
    DegreeOutOfRange(usize),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
