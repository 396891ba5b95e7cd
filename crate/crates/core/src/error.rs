use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation contains a directed cycle through element {0}")]
    Cycle(usize),
    #[error("element label {label} outside 1..={m}")]
    Range { label: usize, m: usize },
    #[error("value {value} outside allowed range {allowed}")]
    OutOfRange { value: i64, allowed: String },
    #[error("size limit exceeded: {0}")]
    Size(String),
    #[error("linear-extension budget of {0} exceeded")]
    Budget(u64),
    #[error("permutation has no descents")]
    EmptyDescent,
    #[error("no linear extension satisfies the restriction")]
    EmptySet,
    #[error("poset is not naturally labeled: {0} <_P {1} but {0} > {1}")]
    NotNaturallyLabeled(usize, usize),
    #[error("q-binomial [{n} choose {k}] undefined")]
    Domain { n: i64, k: i64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("duplicate interpolation node")]
    DuplicateNode,
    #[error("invalid polygon shape: {0}")]
    Spec(String),
    #[error("invalid poset input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
