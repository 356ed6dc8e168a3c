use thiserror::Error;

use crate::datasets::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("{what} of size {size} exceeds the supported maximum {max}")]
    Capacity {
        what: &'static str,
        size: usize,
        max: usize,
    },

    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u64, modulus: u64 },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid cyclic data set: {}", fmt_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("genus {0} is outside the supported range")]
    GenusOutOfScope(i64),

    #[error("operation requires a spherical data set (orbifold genus 0), got g0 = {0}")]
    NotSpherical(u64),

    #[error("expected {expected} branch points, found {found}")]
    BranchCount { expected: usize, found: usize },

    #[error("subgroup is not contained in the image of the generators")]
    NotASubgroup,

    #[error("missing lift data: {0}")]
    MissingLiftData(String),

    #[error("presentation carries symbolic relations: {0}")]
    Symbolic(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.label()).collect::<Vec<_>>().join(", ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
