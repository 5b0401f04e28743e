use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("grid and line variables cannot be mixed in one monomial, ideal or polynomial")]
    MixedFamilies,
    #[error("variable indices start at 1, got {0}")]
    ZeroIndex(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("ideal is not squarefree: generator {0}")]
    NotSquarefree(String),
    #[error("generator {0} is not supported on the vertex set")]
    OutsideVertexSet(String),
    #[error("vertex sets are not nested: {0}")]
    VerticesNotNested(String),
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("complex has {0} ambient vertices; at most 128 are supported")]
    TooManyVertices(usize),
    #[error("face enumeration exceeds the cap of {cap} faces; use facet-based operations or raise the cap")]
    FaceCapExceeded { cap: usize },
    #[error("the complex is not pure")]
    NotPure,
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("{0} rows exceed the row-subset enumeration cap of {1}")]
    RowCapExceeded(usize, usize),
    #[error("the linear forms are not good for the complex")]
    NotGood,
    #[error("{0} is not a full subcomplex of the target")]
    NotFull(String),
    #[error("sampling budget of {0} attempts exhausted; try a larger field")]
    BudgetExhausted(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("monomial {0} is outside the variables of the restricted order")]
    OutsideRestriction(String),
    #[error("order and monomial use different index families")]
    IncomparableFamily,
    #[error("generators are not a Groebner basis")]
    NotGroebner,
    #[error("Buchberger completion exceeded the pair budget of {0}")]
    PairBudgetExceeded(usize),
    #[error("graded quotient did not vanish by degree {0}: the forms are not a system of parameters")]
    QuotientDoesNotVanish(usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("level {level}: {source}")]
    ChainLevel { level: usize, source: Box<Error> },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
