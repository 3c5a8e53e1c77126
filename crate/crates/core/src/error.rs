use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown group descriptor `{0}`")]
    UnknownSpec(String),
    #[error("group order {order} exceeds the configured cap of {cap}")]
    OrderCap { order: u128, cap: usize },
    #[error("subgroup lattice has more than {cap} nodes")]
    LatticeCap { cap: usize },
    #[error("generator {index} is not a bijection on 0..{degree}")]
    NotBijective { index: usize, degree: usize },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("subgroup is not contained in the ambient subgroup")]
    NotSubset,
    #[error("{0} is not a subgroup")]
    NotSubgroup(String),
    #[error("{0} is not normal")]
    NotNormal(String),
    #[error("the trivial group has no maximal subgroups")]
    TrivialGroup,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
