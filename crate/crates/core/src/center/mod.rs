//! The center: central characters, the trace `tr_V`, block idempotents and
//! the translation scalar.

pub mod element;
pub mod idempotent;
pub mod jet;
pub mod trace;
pub mod translation;

pub use element::{
    central_character, central_function_from_invariant, membership_order, point_coordinates, CentralElement,
    CentralFunction,
};
pub use idempotent::{build_block_idempotent, BlockIdempotent, IdempotentSpec};
pub use jet::{on_curve, Jet, TruncPoly};
pub use trace::{bernstein_trace, bernstein_trace_multiset, quantum_trace_oracle};
pub use translation::{
    alcove_sum_at_block, translation_trace_at, translation_trace_scalar, TraceReport, TraceScalar,
    DEFAULT_MULTIPLICITY, MULTIPLICITY_CAP,
};
