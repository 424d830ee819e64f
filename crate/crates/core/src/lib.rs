//! Graded commutative algebra over `k[x_1..x_n]/I`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: rationals or
//! prime fields of odd characteristic, homogeneous inputs only.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod complex;
pub mod error;
pub mod functors;
pub mod groebner;
pub mod invariants;
pub mod module;
pub mod monomial;
pub mod polynomial;
pub mod quasi;
pub mod resolution;
pub mod ring;
pub mod scalar;
pub mod value;
pub mod vector;

pub use complex::{ChainComplex, ComplexProfile};
pub use error::{AlgebraError, Result};
pub use functors::{biduality, canonical_module, dual, hom, tensor, Biduality};
pub use groebner::{GroebnerBasis, Ideal, Limits};
pub use invariants::{Analyzer, Budgets, CertifiedValue, Grounds, ModuleId, Status, Tri};
pub use module::{GModule, GradedFreeModule, GradedMap, ModuleOrigin};
pub use monomial::{ModuleOrder, Monomial, MonomialOrder, TermStrategy};
pub use polynomial::Polynomial;
pub use quasi::{certify_quasi_projective_resolution, QuasiResolutionCertificate, QuasiVerdict};
pub use resolution::{Resolution, ResolutionStatus};
pub use ring::QuotientRing;
pub use scalar::{FieldSpec, Scalar};
pub use value::ExtInt;
pub use vector::{FreeElement, Term};
