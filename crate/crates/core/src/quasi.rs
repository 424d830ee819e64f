//! Recognizing quasi-projective resolutions of cyclic modules: complexes of
//! free modules whose homology modules are all finite direct sums of copies
//! of `M = R/J`.

use alloc::collections::BTreeMap;
use alloc::string::String;

use crate::complex::ChainComplex;
use crate::error::{AlgebraError, Result};
use crate::module::GModule;
use crate::polynomial::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuasiVerdict {
    Certified,
    Refuted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiResolutionCertificate {
    pub verdict: QuasiVerdict,
    /// `a_i` for every index carrying nonzero homology.
    pub multiplicities: BTreeMap<i64, usize>,
    pub evidence: String,
}

/// Checks that every `H_i(C)` is a free `R/J`-module where `M ≅ R/J` up to
/// twist: `J H_i = 0` and the base change to `R/J` has no relations.
pub fn certify_quasi_projective_resolution(c: &ChainComplex, m: &GModule) -> Result<QuasiResolutionCertificate> {
    let Some((j, _)) = m.cyclic_ideal()? else {
        return Err(AlgebraError::Unsupported("quasi-resolution test needs a cyclic module".into()));
    };
    let ring = c.ring();
    let extra: alloc::vec::Vec<Polynomial> = j
        .generators()
        .iter()
        .map(|g| ring.reduce(g))
        .collect::<Result<alloc::vec::Vec<_>>>()?
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    let mut mult = BTreeMap::new();
    for i in c.low()..=c.high() {
        if c.homology_is_zero(i)? {
            continue;
        }
        let h = c.homology(i)?;
        let restricted = match h.base_change(&extra, true) {
            Ok(r) => r,
            Err(AlgebraError::Contract(_)) => {
                return Ok(refuted(mult, alloc::format!("H_{} is not annihilated by the ideal of M", i)));
            }
            Err(e) => return Err(e),
        };
        let p = restricted.minimal_presentation()?;
        if !p.relations().is_empty() {
            return Ok(refuted(mult, alloc::format!("H_{} is not free over R/ann M", i)));
        }
        mult.insert(i, p.rank());
    }
    if mult.is_empty() {
        return Ok(refuted(mult, "all homology vanishes".into()));
    }
    let evidence = alloc::format!(
        "H_i ≅ M^a_i with {}",
        mult.iter().map(|(i, a)| alloc::format!("a_{} = {}", i, a)).collect::<alloc::vec::Vec<_>>().join(", ")
    );
    Ok(QuasiResolutionCertificate { verdict: QuasiVerdict::Certified, multiplicities: mult, evidence })
}

fn refuted(multiplicities: BTreeMap<i64, usize>, evidence: String) -> QuasiResolutionCertificate {
    QuasiResolutionCertificate { verdict: QuasiVerdict::Refuted, multiplicities, evidence }
}
