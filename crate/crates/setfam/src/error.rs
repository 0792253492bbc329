//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Ground-set size outside the supported `1..=62` range.
    #[error("ground-set size {n} out of range (must be 1..=62)")]
    GroundSize { n: usize },

    /// An element label outside `1..=n`.
    #[error("element {elem} out of range for ground set [{n}]")]
    ElementOutOfRange { elem: usize, n: usize },

    /// A colex rank outside `0..binom(n, k)`.
    #[error("rank {rank} out of range (must be < {count} for these parameters)")]
    RankOutOfRange { rank: u64, count: u64 },

    /// Two objects over different ground sets were combined.
    #[error("mismatched ground sets: [{left}] vs [{right}]")]
    MismatchedGround { left: usize, right: usize },

    /// A strict order comparison was asked to compare a set with itself.
    #[error("lex/colex comparisons are strict: the two sets are equal")]
    EqualSets,

    /// Malformed argument that is not covered by a more specific variant.
    #[error("invalid input: {0}")]
    Input(String),

    /// A family-file line failed to parse.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A desk-scale capacity limit was exceeded.
    #[error("capacity exceeded: {what} is {requested}, limit {limit}. {hint}")]
    Capacity {
        what: String,
        requested: u64,
        limit: u64,
        hint: String,
    },

    /// An internal invariant failed (e.g. a termination guard tripped).
    #[error("internal error: {0}")]
    Internal(String),

    /// A checked lemma found no witness; the inputs falsify the claimed statement.
    #[error("{lemma} violated: {details}")]
    LemmaViolation {
        lemma: &'static str,
        details: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
