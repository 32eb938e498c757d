use thiserror::Error;

/// Errors shared by every layer of the crate.
///
/// Guard and budget violations get their own variants because the CLI maps
/// them to a distinct exit code (3) from ordinary input errors (2).
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("ring level must be at least 1 (got {0})")]
    InvalidLevel(u32),

    #[error("p^k = {p}^{k} does not fit in 63 bits")]
    ModulusTooLarge { p: u64, k: u32 },

    #[error("cannot reduce below residue field")]
    CannotReduceResidue,

    #[error("element is not in pi^{power}·R (value {value})")]
    NotDivisible { power: u32, value: String },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("structure tensor has {got} entries, expected {expected} (rank {rank})")]
    TensorShape { got: usize, expected: usize, rank: usize },

    #[error("not alternating at ({i},{j})")]
    NotAlternating { i: usize, j: usize },

    #[error("Jacobi identity fails on basis triple ({i},{j},{l})")]
    JacobiFails { i: usize, j: usize, l: usize },

    #[error("coordinate vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    #[error("{operation} is computed over the residue field only (input has level {level})")]
    ResidueFieldOnly { operation: &'static str, level: u32 },

    #[error("degree {degree} out of range for rank {rank}")]
    DegreeOutOfRange { degree: usize, rank: usize },

    #[error("form takes {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("guard exceeded for {what}: {actual} > {bound}")]
    GuardExceeded {
        what: &'static str,
        bound: u64,
        actual: String,
    },

    #[error("enumeration budget exceeded: need {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },

    #[error("unknown catalog entry '{0}'")]
    UnknownCatalog(String),

    #[error("catalog entry '{name}' requires a rank argument")]
    CatalogNeedsRank { name: String },

    #[error("center is trivial; psl = sl (p = {p} does not divide n = {n})")]
    PslTrivialCenter { p: u64, n: usize },

    #[error("the two algebras are not lifts of a common base")]
    DifferentBases,

    #[error("broken lift: {0}")]
    BrokenLift(String),

    #[error("invalid algebra document: {0}")]
    Document(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
