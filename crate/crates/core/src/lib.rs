//! Exact computations on Jacobian algebras of reduced plane curves.

pub mod error;
pub mod field;
pub mod hilbert;
pub mod invariants;
pub mod linalg;
pub mod monomial;
pub mod parser;
pub mod poly;
pub mod resolution;

pub use error::{FieldError, InvariantError, PolyError, ResolutionError};
pub use field::{Field, FieldDescriptor, PrimeField, Rationals, DEFAULT_PRIME};
pub use invariants::{BettiData, Bounds, Candidate, Classification, Partition, Verdict};
pub use hilbert::{hilbert_dim_direct, JacobianAlgebra};
pub use monomial::{monomial_basis, Monomial, Var};
pub use parser::parse_poly;
pub use poly::HomogPoly;
pub use resolution::{
    hilbert_dim, is_reduced, minimal_resolution, resolution_consistency_check, syzygy_basis,
    tjurina_oracle, Curve, ResolutionData, SyzygyVector,
};
