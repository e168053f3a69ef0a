use thiserror::Error;

/// Errors shared across the library. Operations refuse bad input loudly
/// instead of clamping or silently swapping arguments.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("n = {n} exceeds the cap {cap} for {what}")]
    TooLarge {
        n: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("bias {0} outside the allowed range {1}")]
    BiasOutOfRange(f64, &'static str),

    #[error("coordinate {k} out of range for n = {n}")]
    CoordinateOutOfRange { k: usize, n: usize },

    #[error("input index {x} out of range for n = {n}")]
    PointOutOfRange { x: u64, n: usize },

    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),

    #[error("operation requires a monotone function")]
    NotMonotone,

    #[error("operation undefined for a constant function")]
    ConstantFunction,

    #[error("rule is not odd: some input and its complement get the same value")]
    NotOddRule,

    #[error("payoff of the empty coalition must be 0, got {0}")]
    NonzeroEmptyPayoff(f64),

    #[error("quadrature with {nodes} nodes cannot integrate a degree-{degree} polynomial exactly; need at least {required}")]
    QuadratureTooCoarse {
        nodes: usize,
        degree: usize,
        required: usize,
    },

    #[error("function has degree {degree}, above the requested level {d}")]
    DegreeAboveLevel { degree: usize, d: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("tied pair ({a}, {b}): no strict pairwise winner")]
    TiedPair { a: usize, b: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
