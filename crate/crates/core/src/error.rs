use thiserror::Error;

use crate::report::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a partial order: {0}")]
    NotAPoset(String),
    #[error("not a lattice: {a} and {b} have no {which}")]
    NotALattice { a: String, b: String, which: &'static str },
    #[error("the order has no {0} element")]
    NotBounded(&'static str),
    #[error("not distributive: {a} ∧ ({b} ∨ {c}) ≠ ({a} ∧ {b}) ∨ ({a} ∧ {c})")]
    NotDistributive { a: String, b: String, c: String },
    #[error("{what} has {size} elements, limit is {limit}")]
    TooLarge { what: &'static str, size: usize, limit: usize },
    #[error("{tt} and {ff} are not complementary")]
    NotComplementaryPair { tt: String, ff: String },
    #[error("degenerate complementary pair: {{tt, ff}} = {{1, 0}}")]
    DegeneratePair,
    #[error("invalid d-lattice: {0}")]
    InvalidDLattice(Violation),
    #[error("not a d-Boolean algebra: {side} element {element} is not d-complemented")]
    NotDBoolean { side: &'static str, element: String },
    #[error("dagger is not an order-reversing bijection: {0}")]
    DaggerNotOrderReversing(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(Violation),
    #[error("invalid map into B: {0}")]
    InvalidMap(Violation),
    #[error("covering condition fails at ({a},{b})")]
    CoveringViolation { a: String, b: String },
    #[error("not an ideal or filter: {0}")]
    NotAnIdeal(String),
    #[error("no prime d-ideal between the given d-filter and d-ideal")]
    NoSandwich,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("d-frame is not zero-dimensional: {0}")]
    NotZeroDimensional(String),
    #[error("bitopological space is not Stone")]
    NotStone,
    #[error("the two Stone characterizations disagree: T0+compact+zero-dim = {first}, compact+totally order-separated = {second}")]
    CharacterizationMismatch { first: bool, second: bool },
    #[error("factorization failed: {0}")]
    FactorizationFailure(String),
    #[error("invalid topology: {0}")]
    InvalidTopology(String),
    #[error("search bounds too large: {0}")]
    BoundsTooLarge(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("unknown kind {0:?}")]
    UnknownKind(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
