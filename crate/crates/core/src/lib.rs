//! Aperiodic Z-complementary sets over `q`-th roots of unity.
//!
//! - [`sequence`] and [`cyclo`]: q-ary sequences and exact aperiodic
//!   correlation in `Z[ξ_q]`
//! - [`boolean`]: GBF/EGBF evaluation into sequences
//! - [`family`], [`verify`], [`bounds`], [`welch`]: the ZCS data model, exact
//!   verification, set-size bounds and the shift-matrix consistency checks
//! - [`construct`]: optimal `(b^n, 2^k, b^n, 2^k)`-ZCSs from EGBFs
//! - [`search`]: brute-force oracles at desk scale
//! - [`format`]: text and JSON persistence

pub mod boolean;
pub mod bounds;
pub mod construct;
pub mod cyclo;
pub mod error;
pub mod family;
pub mod format;
pub mod search;
pub mod sequence;
pub mod verify;
pub mod welch;

pub use boolean::{sequence_of, truncate, PolyFunction};
pub use bounds::{bounds, BoundReport};
pub use construct::{
    build_offset_egbf, build_quadratic_gbf, build_zcs, ConstructionParams, ParamError,
};
pub use cyclo::{complex_estimate, cyclotomic_polynomial, is_zero, CycloValue};
pub use error::{Error, Result};
pub use family::{Flock, ZcsFamily};
pub use format::{from_json, parse_v1, render_v1, to_json, FormatError};
pub use search::{
    exhaustive_max_set_size, lemma2_check, random_orthogonal_pair, ramp_pair, SearchResult,
    SearchSpec,
};
pub use sequence::{aacf, accf, cyclic_shift, QarySequence};
pub use verify::{
    classify_optimality, max_zcz_width, set_correlation, verify_zcs, Classification,
    Optimality, VerificationReport, Witness,
};
pub use welch::{welch_matrix, welch_matrix_check, WelchMatrixReport};
