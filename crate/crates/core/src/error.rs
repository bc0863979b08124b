use thiserror::Error;

/// Errors raised while reading one of the three edge-list formats.
///
/// `line` is 1-based and points at the offending input line.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected 3 whitespace-separated fields, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: self-loop on vertex '{vertex}'")]
    SelfLoop { line: usize, vertex: String },
    #[error("line {line}: timestamp '{token}' is not a non-negative integer")]
    BadTimestamp { line: usize, token: String },
    #[error("line {line}: sign '{token}' is not one of +1, -1, +, -")]
    BadSign { line: usize, token: String },
    #[error("edge {{{u}, {v}}} appears with both signs")]
    SignConflict { u: String, v: String },
    #[error("timestamp range {span} is too wide to materialize (limit {limit})")]
    TimeRangeTooWide { span: u64, limit: u64 },
}

/// Errors raised by the mining operations themselves.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} is not a member of the queried set")]
    NotInSet { vertex: u32 },
    #[error("unknown vertex '{label}'")]
    UnknownVertex { label: String },
    #[error("result would exceed the configured cap of {cap} records")]
    CapExceeded { cap: usize },
    #[error("{what} is limited to {limit} {unit}, got {actual}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        unit: &'static str,
        actual: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph has no edges, so no dense subgraph exists")]
    NoEdges,
    #[error("no core contains the whole query within one connected component")]
    NoCommunity,
    #[error("assignment has no nonzero entry")]
    AllZeroAssignment,
    #[error("power iteration did not reach residual {tol:e} within {iterations} iterations (last residual {residual:e})")]
    NotConverged {
        tol: f64,
        iterations: usize,
        residual: f64,
    },
    #[error("spectrum is degenerate and the graph has no edge to fall back on")]
    NoSolution,
}
