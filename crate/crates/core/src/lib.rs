//! Exact computations on tensor products of nearly simple algebras.
//!
//! The concrete model throughout is `A = K_s·1 + F(V)`: a number field `K_s`
//! embedded as block-diagonal companion operators, plus finite-rank matrices
//! with entries in a number field `K_e` on a countable basis. For such an
//! algebra the residue field `A/I_A` is `K_s` and the extended centroid is
//! `K_e`, so the questions about `A ⊗ B` reduce to factorization over number
//! fields and exact linear algebra over `Q`.
//!
//! Layout:
//!
//! * [`exact`]: rationals, polynomials, number fields, factorization.
//! * [`field_tensor`]: `K ⊗ L` as `L[x]/(m_K)`, field tests, idempotents.
//! * [`operator`]: descriptors, finite-rank operators, elementary operators.
//! * [`tensor`]: elements of `A ⊗ B`, rank normalization, quotient maps.
//! * [`ideal`]: classification, admissibility, witnesses, rank reduction.
//! * [`json`]: the on-disk formats.

pub mod config;
pub mod error;
pub mod exact;
pub mod field_tensor;
pub mod ideal;
pub mod json;
pub mod operator;
pub mod tensor;

pub use config::EngineConfig;
pub use error::{Error, Result};
pub use exact::field::{Field, PrimeField, Rationals};
pub use exact::number_field::{NFElement, NumberField};
pub use exact::poly::Poly;
pub use exact::rational::Rational;
pub use field_tensor::{Decomposition, FieldTensorRing, RingElement};
pub use ideal::{
    AdmissibilityVerdict, AdmissibleTag, Classification, ProductSlot, ReductionCertificate,
    Witness,
};
pub use operator::{AlgElement, ElementaryOperator, FinOp, NearlySimpleDescriptor};
pub use tensor::{FactorSpace, IdealKind, QuotientImage, QuotientKind, Side, Tensor, TensorElement};
