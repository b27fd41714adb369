//! Z2Z4-additive Reed-Muller codes: construction and exhaustive verification.
//!
//! The crate builds additive codes over Z2^alpha x Z4^beta from Plotkin-style
//! generator-matrix constructions, applies the Gray map, and checks every
//! parameter claim (types, sizes, minimum Lee distances, nesting, and
//! Reed-Muller equivalence of the binary images at small lengths) by direct
//! enumeration. Enumerations run on the rayon pool when the default
//! `parallel` feature is enabled and fall back to sequential loops otherwise;
//! results are identical either way.

pub mod analysis;
pub mod arm;
pub mod binary;
pub mod code;
pub mod construct;
pub mod error;
mod exec;
pub mod gray;
pub mod matrix;
pub mod textio;
pub mod types;
pub mod vector;

pub use analysis::{
    gray_image, is_binary_linear, is_subcode, min_lee_distance, verify_arm, weight_distribution,
    ClaimStatus, VerificationReport,
};
pub use arm::{edge_code, ArmBuilder, ArmIndex, EdgeCode};
pub use binary::{binary_rm, perm_equivalent, BinaryCodeSet};
pub use code::AdditiveCode;
pub use construct::{ba_plotkin, plotkin, predict_ba_plotkin, predict_plotkin, q2_switch};
pub use error::Error;
pub use gray::{gray_symbol, gray_vector, hamming_distance, lee_distance, lee_weight, BinaryVector};
pub use matrix::{CanonicalForm, GeneratorMatrix};
pub use types::{CodeType, Distance};
pub use vector::MixedVector;

/// Default bound on enumeration sizes (log2 of the element count).
pub const DEFAULT_CAP_LOG2: u32 = 24;

/// Hard ceiling on enumeration sizes; caps above this are clamped.
pub const MAX_CAP_LOG2: u32 = 40;

pub(crate) fn effective_cap(cap_log2: u32) -> u32 {
    cap_log2.min(MAX_CAP_LOG2)
}
