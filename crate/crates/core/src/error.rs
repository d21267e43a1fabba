use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank {rank} is out of range for type {family} (minimum {min}, maximum {max})")]
    RankOutOfRange {
        family: char,
        rank: usize,
        min: usize,
        max: usize,
    },
    #[error("unknown Lie type `{0}` (expected B, C or D)")]
    UnknownFamily(String),
    #[error("weight {0} is not a simple root")]
    NotSimple(String),
    #[error("index pair ({0}, {1}) is not a simple pair")]
    NotSimplePair(usize, usize),
    #[error("index {0} is outside 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("element mixes the f- and e-sectors")]
    MixedSector,
    #[error("element is not weight-homogeneous")]
    Inhomogeneous,
    #[error("graded component has dimension {dim}, above the cap {cap}; use sampled mode")]
    TooLarge { dim: usize, cap: usize },
    #[error("denominator vanishes at the sample point")]
    Pole,
    #[error("exponent {0} needs a square root of a non-square rational")]
    IrrationalPower(String),
    #[error("exponent {0} is not a half-integer")]
    NonHalfIntegerExponent(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("intertwining recursion has no solvable instance for weight {weight}: {detail}")]
    Unsolvable { weight: String, detail: String },
    #[error("no pole-free sample point found after {0} attempts")]
    SamplingExhausted(usize),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
