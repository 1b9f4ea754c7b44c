use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("images do not form a bijection on 0..{degree}")]
    NotABijection { degree: usize },

    #[error("permutation degree {found} does not match expected degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    /// Enumeration abort: the closure would exceed the configured element cap.
    #[error("group too large: closure exceeds the element cap of {cap}")]
    TooLarge { cap: usize },

    #[error("{0} is not contained in the ambient group")]
    NotContained(&'static str),

    #[error("{0}")]
    NotNormal(&'static str),

    #[error("expected a p-group, got a group of order {order}")]
    NotAPGroup { order: u64 },

    #[error("expected a {p}-subgroup, got a subgroup of order {order}")]
    NotAPSubgroup { p: u64, order: u64 },

    #[error("{0} must be prime")]
    NotPrime(u64),

    #[error("p and q must be distinct primes, got p={p} and q={q}")]
    SamePrime { p: u64, q: u64 },

    #[error("trivial action: {0}")]
    TrivialAction(&'static str),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code mandated for the error class: 2 for size-cap
    /// aborts, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TooLarge { .. } => 2,
            _ => 1,
        }
    }
}
