use thiserror::Error;

/// Errors raised by precondition checks and rejected inputs.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("composition must have at least one part")]
    EmptyComposition,

    #[error("height {y} is outside 0..={m}")]
    HeightOutOfRange { y: i64, m: usize },

    #[error("point ({x},{y}) is outside the shift domain (0..{n}) x (1..={m})")]
    PointOutOfDomain { x: i64, y: i64, n: u64, m: usize },

    #[error("path has {ups} up steps but the boundary has only {m} parts")]
    TooManyUpSteps { ups: usize, m: usize },

    #[error("path must originate at ({x},{y})")]
    WrongOrigin { x: i64, y: i64 },

    #[error("terminus ({x},{y}) is outside the (0..={n}) x (0..={m}) grid")]
    TerminusOutsideGrid { x: i64, y: i64, n: u64, m: usize },

    #[error("column index {i} is outside 0..{n}")]
    ColumnOutOfRange { i: u64, n: u64 },

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("pair is good where a bad pair is required")]
    NotBad,

    #[error("pair is bad where a good pair is required")]
    NotGood,

    #[error("path is not in the map's image: {0}")]
    NotInImage(String),

    #[error("malformed word: {0}")]
    MalformedWord(String),

    #[error("enumeration would exceed the cap of {cap} paths")]
    EnumerationCapExceeded { cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
