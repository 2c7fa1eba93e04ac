use thiserror::Error;

/// Crate-wide error type for construction, precondition, and I/O failures.
///
/// Theorem and predicate outcomes are never errors; they are reported through
/// [`crate::CheckResult`]. An `Error` means the question itself was malformed
/// (bad field, mismatched carriers, unmet hypothesis, unreadable file).
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("prime {0} exceeds the supported bound {1}")]
    PrimeTooLarge(u32, u32),
    #[error("dimension {0} outside supported range 1..={1}")]
    DimOutOfRange(usize, usize),
    #[error("structure constant table is not {0}x{0}x{0}")]
    BadTableShape(usize),
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("element has {got} coordinates, algebra has dimension {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("carrier size {size} exceeds enumeration budget {budget}")]
    BudgetExceeded { size: u64, budget: u64 },
    #[error("unknown catalog algebra {0:?}")]
    UnknownCatalogName(String),
    #[error("catalog algebra {name:?} requires {requirement}")]
    IncompatibleCharacteristic { name: String, requirement: String },
    #[error("source and target live over different prime fields ({0} vs {1})")]
    FieldMismatch(u32, u32),
    #[error("matrix is not {rows}x{cols}")]
    BadMatrixShape { rows: usize, cols: usize },
    #[error("membership out of range: {0}")]
    MembershipOutOfRange(String),
    #[error("cannot parse rational {0:?} (expected \"num/den\")")]
    BadRational(String),
    #[error("fuzzy set is not total on the carrier: {0}")]
    NotTotal(String),
    #[error("operands live on different carriers")]
    CarrierMismatch,
    #[error("empty family")]
    EmptyFamily,
    #[error("set has incomparable membership values; operation needs a homogeneous set")]
    NotHomogeneous,
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("hypothesis not met for {theorem}: {hypothesis}")]
    HypothesisNotMet { theorem: String, hypothesis: String },
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("hypothesis {hypothesis:?} is not droppable for theorem {theorem:?}")]
    HypothesisNotDroppable { theorem: String, hypothesis: String },
    #[error("invalid generator config: {0}")]
    BadConfig(String),
    #[error("scenario error in {context}: {message}")]
    Scenario { context: String, message: String },
    #[error("unresolved name {0:?} in scenario")]
    UnresolvedName(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("JSON parse error: {0}")]
    Json(#[from] serde_json::Error),
}
