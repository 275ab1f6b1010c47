//! Analysis pipeline, corpus and serialization behind the `milnor` binary.

pub mod candidates;
pub mod corpus;
pub mod report;

pub use report::{analyze, analyze_in, AnalyzeError, CurveReport};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 1;
    pub const NOT_REDUCED: i32 = 2;
    pub const INCONSISTENT: i32 = 3;
    pub const REJECTED: i32 = 4;
    pub const CORPUS_MISMATCH: i32 = 5;
}
