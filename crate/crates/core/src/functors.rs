//! Hom, tensor product and duals of presented modules, plus the natural
//! map `T -> T**` used for total reflexivity.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::complex::ChainComplex;
use crate::error::{AlgebraError, Result};
use crate::module::GModule;
use crate::monomial::ModuleOrder;
use crate::polynomial::Polynomial;
use crate::ring::QuotientRing;
use crate::vector::{FreeElement, Term};

fn same_ring(m: &GModule, n: &GModule) -> Result<()> {
    if m.ring() != n.ring() && **m.ring() != **n.ring() {
        return Err(AlgebraError::Structural("modules over different rings".into()));
    }
    Ok(())
}

/// `F_1 -> F_0` from a minimal presentation, as a free complex in degrees 0, 1.
fn presentation_complex(m: &GModule) -> Result<(GModule, ChainComplex)> {
    let p = m.minimal_presentation()?;
    let ring = p.ring().clone();
    let c = ChainComplex::free(
        ring,
        0,
        alloc::vec![p.twists().to_vec(), p.relation_degrees()],
        alloc::vec![p.relations().to_vec()],
    )?;
    Ok((p, c))
}

/// `Hom_R(M, N)`.
pub fn hom(m: &GModule, n: &GModule) -> Result<GModule> {
    same_ring(m, n)?;
    presentation_complex(m)?.1.hom_into(n)?.homology(0)
}

/// `M ⊗_R N`.
pub fn tensor(m: &GModule, n: &GModule) -> Result<GModule> {
    same_ring(m, n)?;
    presentation_complex(m)?.1.tensor(n)?.homology(0)
}

/// `M* = Hom_R(M, R)`.
pub fn dual(m: &GModule) -> Result<GModule> {
    Ok(dual_with_embedding(m)?.0)
}

/// `M*` together with its generators as elements of `Hom(F_0, R) = R^b`,
/// where `F_0` is the cover of the minimal presentation of `M` (returned too).
pub fn dual_with_embedding(m: &GModule) -> Result<(GModule, Vec<FreeElement>, GModule)> {
    let (p, c) = presentation_complex(m)?;
    let r = GModule::free(p.ring().clone(), alloc::vec![0]);
    let (d, gens) = c.hom_into(&r)?.homology_with_generators(0)?;
    Ok((d, gens, p))
}

/// Outcome of testing the natural map `T -> T**`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Biduality {
    pub injective: bool,
    pub surjective: bool,
}

impl Biduality {
    pub fn is_iso(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Decides injectivity and surjectivity of `T -> T**` by Groebner membership.
pub fn biduality(t: &GModule) -> Result<Biduality> {
    let (tstar, ys, p) = dual_with_embedding(t)?;
    let ring = p.ring().clone();
    let ord = ModuleOrder::DEFAULT;
    let delta = tstar.twists().to_vec();
    let neg: Vec<i32> = delta.iter().map(|d| -d).collect();
    // θ(e_j) = sum_l y_l[j] ε_l
    let b = p.rank();
    let mut cols: Vec<Vec<Term>> = alloc::vec![Vec::new(); b];
    for (l, y) in ys.iter().enumerate() {
        for tm in y.terms() {
            cols[tm.comp as usize].push(Term { mon: tm.mon.clone(), comp: l as u32, coef: tm.coef.clone() });
        }
    }
    let theta: Vec<FreeElement> = cols.into_iter().map(|ts| FreeElement::from_terms(ts, &ord)).collect();

    let amb = ring.ambient();
    let ker = crate::groebner::kernel(&amb, &theta, p.twists(), &neg, &[])?;
    let mut injective = true;
    for v in &ker {
        if !p.contains(v)? {
            injective = false;
            break;
        }
    }

    let (_, ws, _) = dual_with_embedding(&tstar)?;
    let image = GModule::present(ring, neg, theta)?;
    let mut surjective = true;
    for w in &ws {
        if !image.contains(w)? {
            surjective = false;
            break;
        }
    }
    Ok(Biduality { injective, surjective })
}

/// The canonical module `ω_R = Ext_S^{n-d}(R, S(-n))` of a Cohen-Macaulay
/// ring, computed over the polynomial cover and read back over `R`. The
/// result is tagged as canonical, which certifies `id_R ω = depth R`.
pub fn canonical_module(ring: &Arc<QuotientRing>) -> Result<GModule> {
    let depth = crate::invariants::ring_depth(ring)?;
    let dim = ring.krull_dim();
    if crate::value::ExtInt::Finite(depth) != dim {
        return Err(AlgebraError::Unsupported(alloc::format!(
            "ring is not Cohen-Macaulay (depth {}, dimension {})",
            depth,
            dim
        )));
    }
    let n = ring.nvars();
    let d = depth as usize;
    let s = ring.cover();
    let gens: Vec<Polynomial> = ring.defining_ideal().generators().to_vec();
    let r_over_s = GModule::cyclic(s.clone(), &gens)?;
    let mut res = crate::resolution::Resolution::compute(&r_over_s, n + 1)?;
    let target = GModule::free(s, alloc::vec![n as i32]);
    let w = res.ext(&target, n - d)?;
    let w = w.over_ring(ring.clone())?.minimal_presentation()?;
    Ok(w.with_origin(crate::module::ModuleOrigin::Canonical))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::scalar::FieldSpec;
    use alloc::string::ToString;
    use alloc::vec;

    fn ring(gens: &[&[u32]]) -> Arc<QuotientRing> {
        let q = FieldSpec::Rationals;
        let g = gens
            .iter()
            .map(|e| Polynomial::from_terms(2, q, vec![(Monomial::from_exponents(e), q.one())]).unwrap())
            .collect();
        QuotientRing::new(q, vec!["x".to_string(), "y".to_string()], g).unwrap()
    }

    fn hilbert(m: &GModule, range: core::ops::Range<i32>) -> Vec<u64> {
        range.map(|d| m.hilbert_function(d).unwrap()).collect()
    }

    #[test]
    fn hom_into_ring_over_node() {
        let r = ring(&[&[1, 1]]);
        let m = GModule::cyclic(r.clone(), &[r.variable(0)]).unwrap();
        let h = dual(&m).unwrap();
        // (0 : x) = (y), generated in degree 1
        assert_eq!(h.twists(), &[1]);
        assert_eq!(hilbert(&h, 0..6), vec![0, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn tensor_with_ring_and_dual_of_torsion() {
        let r = ring(&[&[2, 0]]);
        let m = GModule::cyclic(r.clone(), &[r.variable(1)]).unwrap();
        let t = tensor(&GModule::free(r.clone(), vec![0]), &m).unwrap();
        assert_eq!(hilbert(&t, 0..6), hilbert(&m, 0..6));
        let s = ring(&[]);
        assert!(dual(&GModule::residue_field(s)).unwrap().is_zero().unwrap());
    }

    #[test]
    fn reflexive_and_non_reflexive() {
        let r = ring(&[&[1, 1]]);
        let m = GModule::cyclic(r.clone(), &[r.variable(0)]).unwrap();
        assert!(biduality(&m).unwrap().is_iso());
        let k = GModule::residue_field(r);
        let b = biduality(&k).unwrap();
        assert!(!b.injective);
    }

    #[test]
    fn canonical_modules() {
        let s = ring(&[]);
        let w = canonical_module(&s).unwrap();
        assert_eq!(w.twists(), &[2]);
        assert!(w.is_free().unwrap());
        let r = ring(&[&[2, 0], &[1, 1], &[0, 2]]);
        let w = canonical_module(&r).unwrap();
        assert_eq!(w.rank(), 2);
        let h = ring(&[&[2, 0]]);
        let w = canonical_module(&h).unwrap();
        assert!(w.is_free().unwrap());
        assert_eq!(w.rank(), 1);
        let non_cm = ring(&[&[2, 0], &[1, 1]]);
        assert!(matches!(canonical_module(&non_cm), Err(AlgebraError::Unsupported(_))));
    }
}
