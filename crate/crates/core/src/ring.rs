//! Standard graded quotient rings `R = S/I`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::groebner::{Ambient, Ideal, Limits};
use crate::polynomial::Polynomial;
use crate::scalar::FieldSpec;
use crate::value::ExtInt;
use crate::vector::FreeElement;

/// `k[x_1..x_n] / I` with `I` homogeneous and proper.
#[derive(Debug)]
pub struct QuotientRing {
    field: FieldSpec,
    variables: Vec<String>,
    ideal: Ideal,
    dim: ExtInt,
    limits: Limits,
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.variables == other.variables && self.ideal == other.ideal
    }
}

impl Eq for QuotientRing {}

impl QuotientRing {
    pub fn new(field: FieldSpec, variables: Vec<String>, gens: Vec<Polynomial>) -> Result<Arc<Self>> {
        Self::with_limits(field, variables, gens, Limits::default())
    }

    pub fn with_limits(
        field: FieldSpec,
        variables: Vec<String>,
        gens: Vec<Polynomial>,
        limits: Limits,
    ) -> Result<Arc<Self>> {
        let n = variables.len();
        for (k, g) in gens.iter().enumerate() {
            if g.nvars() != n || g.field() != field {
                return Err(AlgebraError::Structural(alloc::format!(
                    "generator {} of the defining ideal lives in another ring",
                    k
                )));
            }
            if !g.is_homogeneous() {
                return Err(AlgebraError::Inhomogeneous(alloc::format!("defining generator {}", k)));
            }
        }
        let ideal = Ideal::with_limits(n, field, gens, limits)?;
        if ideal.is_unit() {
            return Err(AlgebraError::Contract("defining ideal is the whole ring".into()));
        }
        let dim = ideal.quotient_dimension();
        Ok(Arc::new(QuotientRing { field, variables, ideal, dim, limits }))
    }

    pub fn polynomial_ring(field: FieldSpec, variables: Vec<String>) -> Arc<Self> {
        Self::new(field, variables, Vec::new()).expect("zero ideal is fine")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn krull_dim(&self) -> ExtInt {
        self.dim
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.ideal.is_zero()
    }

    pub(crate) fn ambient(&self) -> Ambient<'_> {
        Ambient { nvars: self.nvars(), field: self.field, ideal: self.ideal.basis(), limits: self.limits }
    }

    /// `S` itself, same variables and limits.
    pub fn cover(&self) -> Arc<QuotientRing> {
        Self::with_limits(self.field, self.variables.clone(), Vec::new(), self.limits).expect("polynomial ring")
    }

    /// `S/(I + J)`. Fails if `I + J` is the unit ideal.
    pub fn quotient(&self, extra: &[Polynomial]) -> Result<Arc<QuotientRing>> {
        let mut gens = self.ideal.generators().to_vec();
        gens.extend(extra.iter().cloned());
        Self::with_limits(self.field, self.variables.clone(), gens, self.limits)
    }

    pub fn variable(&self, i: usize) -> Polynomial {
        Polynomial::variable(i, self.nvars(), self.field)
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        self.ideal.reduce(p)
    }

    /// Images of the variables that are nonzero in `R`; they generate the
    /// homogeneous maximal ideal.
    pub fn maximal_ideal_generators(&self) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        for i in 0..self.nvars() {
            let v = self.reduce(&self.variable(i))?;
            if !v.is_zero() {
                out.push(v);
            }
        }
        Ok(out)
    }

    /// Reduce every entry of a free-module element modulo `I`.
    pub fn reduce_element(&self, v: &FreeElement, twists: &[i32]) -> Result<FreeElement> {
        crate::groebner::reduce_with(&self.ambient(), v, &[], twists)
    }
}
