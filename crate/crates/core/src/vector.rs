//! Sparse elements of free modules `S^r`.
//!
//! Terms are kept sorted in decreasing order for a [`ModuleOrder`] supplied by
//! the caller. Every function that produces a new element from existing ones
//! takes the same order that sorted its inputs.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::monomial::{ModuleOrder, Monomial};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mon: Monomial,
    pub comp: u32,
    pub coef: Scalar,
}

/// An element of a free module, as a sorted list of nonzero terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeElement {
    terms: Vec<Term>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement { terms: Vec::new() }
    }

    /// Sorts, merges equal terms and drops zeros.
    pub fn from_terms(mut terms: Vec<Term>, ord: &ModuleOrder) -> Self {
        terms.sort_by(|a, b| ord.compare(&b.mon, b.comp, &a.mon, a.comp));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.comp == t.comp && last.mon == t.mon {
                    last.coef = last.coef.add(&t.coef);
                    if last.coef.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !t.coef.is_zero() {
                out.push(t);
            }
        }
        FreeElement { terms: out }
    }

    /// Caller guarantees sortedness and nonzero coefficients.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        FreeElement { terms }
    }

    /// The element `c * m * e_comp`.
    pub fn monomial(c: Scalar, mon: Monomial, comp: u32) -> Self {
        if c.is_zero() {
            return FreeElement::zero();
        }
        FreeElement { terms: alloc::vec![Term { mon, comp, coef: c }] }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Degree of the leading term under the given generator degrees.
    pub fn degree(&self, twists: &[i32]) -> Option<i32> {
        self.lead().map(|t| t.mon.degree() as i32 + twists[t.comp as usize])
    }

    pub fn is_homogeneous(&self, twists: &[i32]) -> bool {
        match self.degree(twists) {
            None => true,
            Some(d) => self.terms.iter().all(|t| t.mon.degree() as i32 + twists[t.comp as usize] == d),
        }
    }

    pub fn max_component(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }

    pub fn min_component(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).min()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return FreeElement::zero();
        }
        FreeElement {
            terms: self.terms.iter().map(|t| Term { mon: t.mon.clone(), comp: t.comp, coef: t.coef.mul(c) }).collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Self {
        if c.is_zero() {
            return FreeElement::zero();
        }
        FreeElement {
            terms: self.terms.iter().map(|t| Term { mon: t.mon.mul(m), comp: t.comp, coef: t.coef.mul(c) }).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        FreeElement {
            terms: self.terms.iter().map(|t| Term { mon: t.mon.clone(), comp: t.comp, coef: t.coef.neg() }).collect(),
        }
    }

    pub fn add(&self, other: &FreeElement, ord: &ModuleOrder) -> Self {
        FreeElement { terms: merge(&self.terms, None, &other.terms, ord) }
    }

    pub fn sub(&self, other: &FreeElement, ord: &ModuleOrder) -> Self {
        let neg_one = match other.lead().or(self.lead()) {
            Some(t) => t.coef.field().from_i64(-1),
            None => return FreeElement::zero(),
        };
        FreeElement { terms: merge(&self.terms, Some((&neg_one, None)), &other.terms, ord) }
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, c: &Scalar, m: &Monomial, other: &FreeElement, ord: &ModuleOrder) -> Self {
        FreeElement { terms: merge(&self.terms, Some((c, Some(m))), &other.terms, ord) }
    }

    /// Divide by the leading coefficient.
    pub fn make_monic(&mut self) {
        if let Some(t) = self.terms.first() {
            if t.coef.is_one() {
                return;
            }
            let inv = t.coef.inv();
            for t in self.terms.iter_mut() {
                t.coef = t.coef.mul(&inv);
            }
        }
    }

    /// The polynomial sitting in component `comp`, as (monomial, coefficient) pairs
    /// in the order they appear.
    pub fn component(&self, comp: u32) -> Vec<(Monomial, Scalar)> {
        self.terms.iter().filter(|t| t.comp == comp).map(|t| (t.mon.clone(), t.coef.clone())).collect()
    }

    /// Relabel components and re-sort.
    pub fn map_components(&self, f: impl Fn(u32) -> u32, ord: &ModuleOrder) -> Self {
        let terms =
            self.terms.iter().map(|t| Term { mon: t.mon.clone(), comp: f(t.comp), coef: t.coef.clone() }).collect();
        FreeElement::from_terms(terms, ord)
    }

    /// Multiply every entry by the polynomial `p` (given as terms).
    pub fn mul_poly(&self, p: &[(Monomial, Scalar)], ord: &ModuleOrder) -> Self {
        let mut acc = FreeElement::zero();
        for (m, c) in p {
            acc = acc.add_scaled(c, m, self, ord);
        }
        acc
    }
}

/// Merge `a + c*m*b` where both inputs are sorted decreasingly.
pub(crate) fn merge(
    a: &[Term],
    scale: Option<(&Scalar, Option<&Monomial>)>,
    b: &[Term],
    ord: &ModuleOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let scaled = |t: &Term| -> Term {
        match scale {
            None => t.clone(),
            Some((c, None)) => Term { mon: t.mon.clone(), comp: t.comp, coef: t.coef.mul(c) },
            Some((c, Some(m))) => Term { mon: t.mon.mul(m), comp: t.comp, coef: t.coef.mul(c) },
        }
    };
    if let Some((c, _)) = scale {
        if c.is_zero() {
            return a.to_vec();
        }
    }
    let mut pending: Option<Term> = if j < b.len() { Some(scaled(&b[j])) } else { None };
    while i < a.len() {
        let Some(tb) = pending.as_ref() else { break };
        match ord.compare(&a[i].mon, a[i].comp, &tb.mon, tb.comp) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(pending.take().unwrap());
                j += 1;
                pending = if j < b.len() { Some(scaled(&b[j])) } else { None };
            }
            Ordering::Equal => {
                let c = a[i].coef.add(&tb.coef);
                if !c.is_zero() {
                    out.push(Term { mon: a[i].mon.clone(), comp: a[i].comp, coef: c });
                }
                i += 1;
                j += 1;
                pending = if j < b.len() { Some(scaled(&b[j])) } else { None };
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    if let Some(t) = pending {
        out.push(t);
        j += 1;
        while j < b.len() {
            out.push(scaled(&b[j]));
            j += 1;
        }
    }
    out
}
