use thiserror::Error;

/// Errors raised by diamond construction and the algebra built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("duplicate entry at bidegree ({p},{q})")]
    DuplicateEntry { p: u32, q: u32 },

    #[error("negative value {value} at bidegree ({p},{q})")]
    NegativeValue { p: i64, q: i64, value: i64 },

    #[error("negative multiplicity {mult} at bidegree ({p},{q})")]
    NegativeMultiplicity { p: u32, q: u32, mult: i64 },

    #[error("multiplicity overflow")]
    Overflow,

    #[error("odd-weight class at ({p},{q}); Schur functors need an even-concentrated input")]
    OddClassesUnsupported { p: u32, q: u32 },

    #[error("support reaches ({p},{q}), outside the surface box 0 <= p,q <= 2")]
    NotASurface { p: u32, q: u32 },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("two constructions of {0} disagree")]
    ConstructionMismatch(&'static str),

    #[error("unknown engine `{0}`")]
    UnknownEngine(String),
}

pub type Result<T, E = HodgeError> = std::result::Result<T, E>;
