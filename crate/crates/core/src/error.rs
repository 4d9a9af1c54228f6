use thiserror::Error;

use crate::construct::ParamError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least {min}, got {q}")]
    InvalidModulus { q: u32, min: u32 },

    #[error("exponent {value} at position {index} is not a residue modulo {q}")]
    ExponentOutOfRange { index: usize, value: u32, q: u32 },

    #[error("sequence must have at least one entry")]
    EmptySequence,

    #[error("coefficient vector has length {len}, expected {q}")]
    CoefficientLength { len: usize, q: u32 },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("shift {u} is outside the aperiodic range for length {len}")]
    ShiftOutOfRange { u: isize, len: usize },

    #[error("cyclic shift {u} is outside 0..={len}")]
    RotationOutOfRange { u: isize, len: usize },

    #[error("truncation length {len} is outside 1..={max}")]
    TruncationOutOfRange { len: usize, max: usize },

    #[error("variable domain b={b} is invalid for modulus q={q} (need 2 <= b <= q)")]
    InvalidDomain { b: u32, q: u32 },

    #[error("evaluation domain {b}^{n_vars} is too large")]
    DomainTooLarge { b: u32, n_vars: usize },

    #[error("variable index {index} is outside 1..={n_vars}")]
    VariableOutOfRange { index: usize, n_vars: usize },

    #[error("variable {0} repeated in a monomial")]
    RepeatedVariable(usize),

    #[error("functions are defined over different domains")]
    DomainMismatch,

    #[error("a flock needs at least one sequence")]
    EmptyFlock,

    #[error("a family needs at least one flock")]
    EmptyFamily,

    #[error("inconsistent family shape: {0}")]
    ShapeMismatch(String),

    #[error("ZCZ width {z} is outside 1..={len}")]
    WidthOutOfRange { z: usize, len: usize },

    #[error("bound inputs need N >= 1, L >= 1 and 1 <= Z <= L (got N={n}, L={l}, Z={z})")]
    InvalidBoundInputs { n: usize, l: usize, z: usize },

    #[error("family is not a ZCS at width {z}")]
    NotAZcs { z: usize },

    #[error("sequences are not orthogonal")]
    NotOrthogonal,

    #[error("position {alpha} is outside 0..{len}")]
    PositionOutOfRange { alpha: usize, len: usize },

    #[error("offset {p} is outside 0..{count}")]
    OffsetOutOfRange { p: usize, count: usize },

    #[error("length {l} does not divide modulus {q}")]
    LengthDoesNotDivide { l: usize, q: u32 },

    #[error("ramp slopes must differ by a nonzero multiple of q/L")]
    RampNotOrthogonal,

    #[error("{0} admissible flocks is too many for the clique search")]
    SearchGraphTooLarge(usize),

    #[error(transparent)]
    Params(#[from] ParamError),
}
