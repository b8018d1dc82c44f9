use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("assignment has no value for x_{0}")]
    UnresolvedIndex(usize),
    #[error("duplicate letter {0} in permutation word")]
    DuplicateLetter(u32),
    #[error("permutation word is empty")]
    EmptyWord,
    #[error("word {word:?} is not a valid {kind} permutation: {reason}")]
    InvalidWord {
        word: Vec<u32>,
        kind: &'static str,
        reason: &'static str,
    },
    #[error("n = {n} exceeds the brute-force ceiling {ceiling} for {kind} permutations; use the polynomial route instead")]
    CeilingExceeded {
        kind: &'static str,
        n: usize,
        ceiling: usize,
    },
    #[error("need {needed} atomic polynomials, got {got}")]
    InsufficientAtoms { needed: usize, got: usize },
    #[error("{0}")]
    Precondition(String),
    #[error("circular polynomial has a monomial of odd degree {0}")]
    OddDegree(usize),
    #[error("polynomial is not homogeneous of weight {expected}: found weight {found}")]
    WeightMismatch { expected: u64, found: u64 },
    #[error("closed form is within {margin} of a pole of tan (argument {argument})")]
    NearPole { argument: f64, margin: f64 },
    #[error("closed form requires kappa > 1, got {0}")]
    UnsupportedBranch(f64),
    #[error("n = {n} exceeds the configured compute budget {budget}")]
    BudgetExceeded { n: usize, budget: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
