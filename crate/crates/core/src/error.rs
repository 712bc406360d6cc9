use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input (bad file, element outside the universe, bad parameter).
    #[error("input error: {0}")]
    Input(String),

    /// A coloring expected to be transitive for `color` is not; `x < y < z` is a witness.
    #[error("coloring is not transitive for color {color}: witness triple ({x}, {y}, {z})")]
    NotTransitive { color: u8, x: usize, y: usize, z: usize },

    /// The "no 1-homogeneous set of size L" hypothesis failed; `witness` is such a set.
    #[error("hypothesis violated: {{{}}} is 1-homogeneous of size {}", join(witness), witness.len())]
    HypothesisViolated { witness: Vec<usize> },

    /// An approximation schedule breaks one of its monotonicity or domination constraints.
    #[error("schedule invariant violated at (i = {index}, s = {stage}): {reason}")]
    Schedule { index: usize, stage: usize, reason: String },

    /// An exhaustive search was asked to exceed its configured limit.
    #[error("resource limit exceeded: {what} = {requested} exceeds limit {limit}")]
    ResourceLimit { what: String, requested: u128, limit: u128 },

    /// A construction invariant that should be impossible to break was broken.
    #[error("internal error: {0}")]
    Internal(String),
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// Process exit status for the CLI: 1 validation/hypothesis, 2 usage/input, 3 resource.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Schedule { .. } => 2,
            Error::NotTransitive { .. } | Error::HypothesisViolated { .. } => 1,
            Error::ResourceLimit { .. } => 3,
            Error::Internal(_) => 1,
        }
    }
}
