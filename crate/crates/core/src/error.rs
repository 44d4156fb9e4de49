use thiserror::Error;

/// Errors produced by graph construction, labeling and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter {param} = {value} out of range (allowed: {allowed})")]
    ParameterOutOfRange { param: &'static str, value: i64, allowed: &'static str },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("missing parameter `{0}`")]
    MissingParameter(&'static str),

    #[error("unexpected parameter `{0}` for this family")]
    UnexpectedParameter(String),

    #[error("unsupported cycle length {0} (only 3 and 4)")]
    UnsupportedLength(usize),

    #[error("cycle {0} uses a pair of vertices that is not an edge")]
    ForeignCycle(String),

    #[error("edge sums are not consecutive: {0:?}")]
    NotConsecutive(Vec<u64>),

    #[error("labeling does not match the graph: {0}")]
    DomainMismatch(String),

    #[error("no covering: edge {0} lies in no cycle of the requested length")]
    NoCovering(String),

    #[error("{what}: {numerator} is not divisible by {denominator}")]
    Indivisible { what: &'static str, numerator: i64, denominator: i64 },

    #[error("label formula produced {value} for {element}, outside 1..={max}")]
    LabelOutOfRange { element: String, value: i64, max: i64 },

    #[error("arithmetic overflow while summing weights")]
    Overflow,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
