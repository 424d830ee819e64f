//! Homological invariants with an explicit certification status.
//!
//! Several of these quantities are only semi-decidable (a supremum over
//! infinitely many Ext or Tor modules), so every value records whether it
//! is exact, a bound, or unknown, and on what grounds.

mod analyzer;

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

pub use analyzer::{Analyzer, Budgets, ModuleId, ModuleReport, PairReport, Tri};

use crate::complex::ChainComplex;
use crate::error::{AlgebraError, Result};
use crate::groebner::{self, Ideal};
use crate::module::GModule;
use crate::polynomial::Polynomial;
use crate::ring::QuotientRing;
use crate::value::ExtInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Exact,
    LowerBound,
    UpperBound,
    Unknown,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::LowerBound => "lower-bound",
            Status::UpperBound => "upper-bound",
            Status::Unknown => "unknown",
        }
    }
}

/// What a value rests on. Only `Proof` and `Construction` values may ever
/// be used to declare a formula violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grounds {
    /// A finite computation plus a theorem.
    Proof,
    /// A vanishing scan that stopped at the given budget.
    Budget(u32),
    /// Known from how the module was built.
    Construction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedValue {
    /// For `Unknown`, the best proven lower bound (`-inf` if none).
    pub value: ExtInt,
    pub status: Status,
    pub grounds: Grounds,
    /// Short tag shown next to the status, e.g. "Koszul certificate".
    pub label: Option<String>,
    pub evidence: String,
}

impl CertifiedValue {
    pub fn exact(value: ExtInt, evidence: impl Into<String>) -> Self {
        CertifiedValue { value, status: Status::Exact, grounds: Grounds::Proof, label: None, evidence: evidence.into() }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn with_grounds(mut self, grounds: Grounds) -> Self {
        self.grounds = grounds;
        self
    }

    pub fn lower_bound(value: ExtInt, budget: u32, evidence: impl Into<String>) -> Self {
        CertifiedValue {
            value,
            status: Status::LowerBound,
            grounds: Grounds::Budget(budget),
            label: None,
            evidence: evidence.into(),
        }
    }

    pub fn unknown(lower: ExtInt, evidence: impl Into<String>) -> Self {
        CertifiedValue {
            value: lower,
            status: Status::Unknown,
            grounds: Grounds::Proof,
            label: None,
            evidence: evidence.into(),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    /// Exact and finite.
    pub fn exact_finite(&self) -> Option<i64> {
        if self.is_exact() {
            self.value.finite()
        } else {
            None
        }
    }

    /// Exact, with proof or construction grounds.
    pub fn is_firm(&self) -> bool {
        self.is_exact() && !matches!(self.grounds, Grounds::Budget(_))
    }

    /// The range of values consistent with what is known.
    pub fn interval(&self) -> (ExtInt, ExtInt) {
        match self.status {
            Status::Exact => (self.value, self.value),
            Status::LowerBound | Status::Unknown => (self.value, ExtInt::PosInf),
            Status::UpperBound => (ExtInt::NegInf, self.value),
        }
    }
}

impl fmt::Display for CertifiedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::Exact => write!(f, "{}", self.value)?,
            Status::LowerBound => write!(f, "≥ {}", self.value)?,
            Status::UpperBound => write!(f, "≤ {}", self.value)?,
            Status::Unknown if self.value == ExtInt::NegInf => write!(f, "?")?,
            Status::Unknown => write!(f, "≥ {}", self.value)?,
        }
        write!(f, " ({}", self.status.name())?;
        if let Some(l) = &self.label {
            write!(f, "; {}", l)?;
        } else if let Grounds::Budget(b) = self.grounds {
            write!(f, "; budget {}", b)?;
        }
        write!(f, ")")
    }
}

/// Minimal generators of the image of `J` in `R`.
pub fn minimal_generators_in(ring: &Arc<QuotientRing>, j: &Ideal) -> Result<Vec<Polynomial>> {
    let els: Vec<_> = j.generators().iter().map(|g| g.to_element(0)).collect();
    let min = groebner::minimize_modulo(&ring.ambient(), &els, &[], &[0])?;
    Ok(min.iter().map(|v| Polynomial::from_component(v, 0, ring.nvars(), ring.field())).collect())
}

/// `depth(J, N) = t - hsup K(f_1..f_t; N)` for generators `f` of `J`
/// (images in `R`). Requires `N ≠ 0` and `J ⊆ m`.
pub fn koszul_depth_on(gens: &[Polynomial], n: &GModule) -> Result<i64> {
    if n.is_zero()? {
        return Err(AlgebraError::Contract("depth of the zero module".into()));
    }
    let k = ChainComplex::koszul(n.ring().clone(), gens)?.tensor(n)?;
    let t = gens.len() as i64;
    for i in (0..=t).rev() {
        if !k.homology_is_zero(i)? {
            return Ok(t - i);
        }
    }
    Err(AlgebraError::Contract("ideal does not lie in the maximal ideal".into()))
}

/// `depth R`, from the Koszul complex on the variables.
pub fn ring_depth(ring: &Arc<QuotientRing>) -> Result<i64> {
    let gens = ring.maximal_ideal_generators()?;
    koszul_depth_on(&gens, &GModule::free(ring.clone(), alloc::vec![0]))
}
