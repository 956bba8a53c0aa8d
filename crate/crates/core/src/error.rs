use std::io;

use crate::weights::Counterexample;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("pair ({a}, {b}) is not an edge of the instance")]
    UnknownEdge { a: usize, b: usize },

    #[error("vertex conflict: pair ({a}, {b}) shares a vertex with another pair")]
    VertexConflict { a: usize, b: usize },

    #[error("profile length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("matching is not perfect on the balanced instance (vertex {side}{index} unmatched)")]
    NotPerfect { side: char, index: usize },

    #[error("instance is not balanced ({a_count} x {b_count})")]
    NotBalanced { a_count: usize, b_count: usize },

    #[error("pair ({a}, {b}) is not an improving pair")]
    NotImproving { a: usize, b: usize },

    #[error("at least two ranks are required, got {0}")]
    RTooSmall(usize),

    #[error("rank {rank} of pair ({a}, {b}) is outside 1..={max}")]
    RankOutOfBounds {
        a: usize,
        b: usize,
        rank: u32,
        max: u32,
    },

    #[error("pair ({a}, {b}) has no distance")]
    MissingDistance { a: usize, b: usize },

    #[error(
        "closed-form weight of pair ({a}, {b}) is negative ({value}); \
         use the mixed-radix construction over rank indicators and D - d(e) instead"
    )]
    NegativeWeight { a: usize, b: usize, value: i128 },

    #[error("weight condition violated: {0}")]
    ConditionViolated(Counterexample),

    #[error("weights do not reduce to a rank-maximal instance")]
    NotReducible,

    #[error("instance too large for enumeration: {edges} edges (limit {limit})")]
    TooLarge { edges: usize, limit: usize },

    #[error("weight table does not fit the instance: {0}")]
    WeightShape(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("student {student} left unassigned while {school} has free seats")]
    InfeasibleAssignment { student: String, school: String },

    #[error("reports describe different instances")]
    MixedInstances,

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    /// Stable short name, used for machine-readable error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInstance(_) => "InvalidInstance",
            Error::UnknownEdge { .. } => "UnknownEdge",
            Error::VertexConflict { .. } => "VertexConflict",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotPerfect { .. } => "NotPerfect",
            Error::NotBalanced { .. } => "NotBalanced",
            Error::NotImproving { .. } => "NotImproving",
            Error::RTooSmall(_) => "RTooSmall",
            Error::RankOutOfBounds { .. } => "RankOutOfBounds",
            Error::MissingDistance { .. } => "MissingDistance",
            Error::NegativeWeight { .. } => "NegativeWeight",
            Error::ConditionViolated(_) => "ConditionViolated",
            Error::NotReducible => "NotReducible",
            Error::TooLarge { .. } => "TooLarge",
            Error::WeightShape(_) => "WeightShape",
            Error::Parse { .. } => "ParseError",
            Error::Validation(_) => "ValidationError",
            Error::InfeasibleAssignment { .. } => "InfeasibleAssignment",
            Error::MixedInstances => "MixedInstances",
            Error::Config(_) => "ConfigError",
            Error::Csv(_) => "CsvError",
            Error::Json(_) => "JsonError",
            Error::Io(_) => "IoError",
        }
    }
}
