use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("expected a point with 3 coordinates, got {0}")]
    DimensionMismatch(usize),
    #[error("empty point set")]
    EmptyPointSet,
    #[error("halfspace system has a non-integral vertex")]
    NonIntegralVertex,
    #[error("halfspace system is empty or unbounded")]
    EmptyOrUnbounded,
    #[error("map is not unimodular (determinant {0})")]
    NotUnimodular(i64),
    #[error("subdivision has no lifting function")]
    MissingLift,
    #[error("unknown block `{0}`")]
    UnknownBlock(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unsupported degree d = {0}: {1}")]
    UnsupportedDegree(i64, &'static str),
    #[error("no packing found: {0}")]
    Packing(String),
    #[error("matrix ceiling exceeded: {cols} columns > {ceiling}")]
    CeilingExceeded { cols: usize, ceiling: usize },
    #[error("degenerate samples exceeded the resampling cap")]
    DegenerateSamples,
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
