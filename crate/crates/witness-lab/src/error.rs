use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Library-wide error type.
///
/// Variants are grouped by how the CLI maps them to exit codes: input/shape
/// problems exit 2, precondition failures exit 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("local dimension {0} is smaller than 2")]
    BadLocalDimension(usize),
    #[error("dimension profile has no parties")]
    EmptyProfile,
    #[error("profile ({dims:?}) exceeds the desk-scale guard (at most 4 parties, total dimension at most 64)")]
    ProfileTooLarge { dims: Vec<usize> },
    #[error("matrix is {rows}x{cols}, expected {dim}x{dim}")]
    ShapeMismatch { rows: usize, cols: usize, dim: usize },
    #[error("operator is not Hermitian (asymmetry {0:.3e} exceeds 1e-9)")]
    NotHermitian(f64),
    #[error("non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
    #[error("dimension profiles differ: {0:?} vs {1:?}")]
    ProfileMismatch(Vec<usize>, Vec<usize>),
    #[error("party index {index} out of range for {parties} parties")]
    InvalidParty { index: usize, parties: usize },
    #[error("cannot trace out the only party of a single-party operator")]
    NothingLeft,
    #[error("trace {0:.3e} is too close to zero to normalize")]
    ZeroTrace(f64),
    #[error("zero vector cannot be normalized to a state")]
    ZeroVector,
    #[error("not an entanglement witness: {0}")]
    NotAWitness(String),
    #[error("operator is not positive semidefinite (minimum eigenvalue {0:.3e})")]
    NotPsd(f64),
    #[error("density matrix trace {0:.6} is not 1")]
    NotUnitTrace(f64),
    #[error("reference operator must be full rank (minimum eigenvalue {0:.3e})")]
    RankDeficient(f64),
    #[error("reference operator must be positive definite (minimum eigenvalue {0:.3e})")]
    NotPositiveDefinite(f64),
    #[error("no finite negative-fraction weight: largest eigenvalue {lambda_max:.6} does not exceed the reference level {level:.6}")]
    NoFiniteNegativeWeight { lambda_max: f64, level: f64 },
    #[error("family is constant along its parameter; no threshold crossing")]
    ConstantFamily,
    #[error("parameter {0} outside [0, 1]")]
    ParameterRange(f64),
    #[error("angle-grid parameter budget exceeded: {0} real parameters > 8")]
    ParameterBudget(usize),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("expected a bipartite operator, got {0} parties")]
    NotBipartite(usize),
    #[error("expected a three-qubit operator, got profile {0:?}")]
    NotThreeQubits(Vec<usize>),
    #[error("unknown builtin name `{0}`")]
    UnknownName(String),
    #[error("invalid argument: {0}")]
    BadArgument(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// CLI exit-code class: 2 for unresolvable/malformed input, 3 for
    /// precondition failures on otherwise well-formed input.
    pub fn exit_code(&self) -> u8 {
        use Error::*;
        match self {
            BadLocalDimension(_) | EmptyProfile | ProfileTooLarge { .. } | ShapeMismatch { .. }
            | NotHermitian(_) | NonFinite(..) | UnknownName(_) | BadArgument(_) | Io(_)
            | Json(_) | ZeroVector => 2,
            _ => 3,
        }
    }
}
