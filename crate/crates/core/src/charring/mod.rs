//! The character ring of the maximal torus and its coefficient rings.

pub mod character;
pub mod cyclotomic;
pub mod invariant;
pub mod laurent;
pub mod ring;
pub mod torus;

pub use character::{
    alternating_sum, decompose_character, evaluate_at, factorize_denominator, fundamental_character, quantum_dimension,
    specialize, tau_twist, weight_multiset, weyl_character, weyl_denominator,
};
pub use cyclotomic::{CycScalar, CyclotomicRing};
pub use invariant::{to_fundamental_basis, InvariantPoly};
pub use laurent::{LaurentRing, QLaurent};
pub use ring::{rat, rat_frac, rat_string, CoeffRing, Rational, RationalField};
pub use torus::{exact_divide, TorusChar};
