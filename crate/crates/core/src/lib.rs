//! Computational witnesses for relations among the minors of a generic matrix.

pub mod birep;
pub mod bott;
pub mod equivariant;
pub mod groebner;
pub mod error;
pub mod kernel;
pub mod koszul;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod rees;
pub mod relations;
pub mod scalar;
pub mod subspace;
pub mod symfunc;
pub mod veronese;
pub mod weights;

pub use birep::BiRep;
pub use equivariant::{TheoremId, Variant};
pub use error::{Error, Result};
pub use partition::Partition;
pub use scalar::{Fp, Rational, Scalar};

/// Symmetric functions with exact rational coefficients.
pub type QSymFunc = symfunc::SymFunc<Rational>;
pub type QPoly = poly::Poly<Rational>;
