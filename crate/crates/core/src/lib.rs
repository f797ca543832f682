//! Exact computations with root data, affine Weyl groups, blocks at a root
//! of unity, the character ring of a torus, central elements and
//! fixed-point models of equivariant cohomology.

pub mod center;
pub mod charring;
pub mod error;
pub mod gkm;
pub mod linkage;
pub mod root_datum;
pub mod weight;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use root_datum::{build_root_datum, root_datum_from_str, Coroot, RootDatum, Series};
pub use weight::Weight;
pub use weyl::{AffineElement, FiniteWeylElement, GradedSeries, LatticeTag, ParabolicType};
