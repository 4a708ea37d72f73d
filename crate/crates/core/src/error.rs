use thiserror::Error;

/// Errors produced by graph construction, numeric routines, and IO.
#[derive(Debug, Error)]
pub enum Error {
    /// An operation that needs at least one vertex was given the empty graph.
    #[error("operation undefined on the empty graph")]
    EmptyGraph,

    /// A family or operation parameter fell outside its domain.
    #[error("parameter out of domain for {what}: {constraint}")]
    ParameterDomain {
        what: &'static str,
        constraint: String,
    },

    /// Malformed graph6 input. `offset` is the byte offset within the line.
    #[error("graph6 format error at byte {offset}: {reason}")]
    Graph6Format { offset: usize, reason: String },

    /// Graph too large for the short graph6 form (or another hard size limit).
    #[error("{what}: n = {n} exceeds supported maximum {max}")]
    UnsupportedSize {
        what: &'static str,
        n: usize,
        max: usize,
    },

    /// An exhaustive enumeration would exceed the configured work cap.
    #[error("{what} exceeds enumeration cap ({detail}); raise the cap to force it")]
    Capacity { what: &'static str, detail: String },

    /// An iterative numeric routine failed to converge or lost its bracket.
    #[error("numerical failure in {what}: {reason}")]
    Numerical { what: &'static str, reason: String },

    /// The proposed cells do not form a partition of the vertex set.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// A caller-supplied argument is inconsistent with the graph.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A real-valued bound was evaluated outside its domain.
    #[error("domain error in {what}: {reason}")]
    Domain { what: &'static str, reason: String },

    /// A graph stream line failed to decode.
    #[error("stream error on line {line}: {source}")]
    Stream {
        line: u64,
        #[source]
        source: Box<Error>,
    },

    /// Underlying IO failure while reading a stream.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
