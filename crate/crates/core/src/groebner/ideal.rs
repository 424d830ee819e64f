//! Homogeneous ideals of the polynomial ring `S`.

use alloc::vec::Vec;

use super::engine::{Engine, Partner};
use super::{kernel, Ambient, GroebnerBasis, Limits};
use crate::error::{AlgebraError, Result};
use crate::monomial::{ModuleOrder, Monomial, MonomialOrder};
use crate::polynomial::Polynomial;
use crate::scalar::FieldSpec;
use crate::value::ExtInt;
use crate::vector::{FreeElement, Term};

/// An ideal together with its reduced grevlex Groebner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    field: FieldSpec,
    gens: Vec<Polynomial>,
    basis: Vec<FreeElement>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.field == other.field && self.basis == other.basis
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn new(nvars: usize, field: FieldSpec, gens: Vec<Polynomial>) -> Result<Self> {
        Self::with_limits(nvars, field, gens, Limits::default())
    }

    pub fn with_limits(nvars: usize, field: FieldSpec, gens: Vec<Polynomial>, limits: Limits) -> Result<Self> {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let els: Vec<FreeElement> = gens.iter().map(|g| g.to_element(0)).collect();
        let gb = GroebnerBasis::submodule(nvars, field, &els, &[0], ModuleOrder::DEFAULT, limits)?;
        Ok(Ideal { nvars, field, gens, basis: gb.elements().to_vec() })
    }

    pub fn zero(nvars: usize, field: FieldSpec) -> Self {
        Ideal { nvars, field, gens: Vec::new(), basis: Vec::new() }
    }

    pub fn unit(nvars: usize, field: FieldSpec) -> Self {
        let one = Polynomial::constant(field.one(), nvars);
        Ideal { nvars, field, basis: alloc::vec![one.to_element(0)], gens: alloc::vec![one] }
    }

    /// The ideal generated by all variables.
    pub fn maximal(nvars: usize, field: FieldSpec) -> Self {
        let gens: Vec<Polynomial> = (0..nvars).map(|i| Polynomial::variable(i, nvars, field)).collect();
        Ideal::new(nvars, field, gens).expect("variables are homogeneous")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Groebner basis as monic elements of component 0.
    pub fn basis(&self) -> &[FreeElement] {
        &self.basis
    }

    pub fn basis_polynomials(&self) -> Vec<Polynomial> {
        self.basis.iter().map(|e| Polynomial::from_component(e, 0, self.nvars, self.field)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|e| e.lead().unwrap().mon.is_one())
    }

    pub(crate) fn ambient(&self) -> Ambient<'_> {
        Ambient { nvars: self.nvars, field: self.field, ideal: &[], limits: Limits::default() }
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        let mut e = Engine::new(ModuleOrder::DEFAULT, &[0], &[], Limits::default());
        e.load_basis(&self.basis);
        let r = e.reduce(p.to_element(0))?;
        Ok(Polynomial::from_component(&r, 0, self.nvars, self.field))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        for g in self.basis_polynomials() {
            if !other.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.nvars, self.field, gens)
    }

    /// `I ∩ J` as the kernel of `S -> S/I ⊕ S/J`, `1 ↦ (1, 1)`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        let one = Monomial::one(self.nvars);
        let col = FreeElement::from_sorted(alloc::vec![
            Term { mon: one.clone(), comp: 0, coef: self.field.one() },
            Term { mon: one, comp: 1, coef: self.field.one() },
        ]);
        let mut rels: Vec<FreeElement> = self.basis.clone();
        for b in &other.basis {
            rels.push(b.map_components(|_| 1, &ModuleOrder::DEFAULT));
        }
        let k = kernel(&self.ambient(), &[col], &[0], &[0, 0], &rels)?;
        let gens = k.iter().map(|e| Polynomial::from_component(e, 0, self.nvars, self.field)).collect();
        Ideal::new(self.nvars, self.field, gens)
    }

    /// `I : (g) = (I ∩ (g)) / g`.
    pub fn quotient_by_element(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() {
            return Ok(Ideal::unit(self.nvars, self.field));
        }
        let principal = Ideal::new(self.nvars, self.field, alloc::vec![g.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::new();
        for h in meet.basis_polynomials() {
            gens.push(exact_division(&h, g)?);
        }
        Ideal::new(self.nvars, self.field, gens)
    }

    /// `I : J`, intersecting the colons by the generators of `J`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        let mut acc = Ideal::unit(self.nvars, self.field);
        for g in other.basis_polynomials() {
            let c = self.quotient_by_element(&g)?;
            acc = if acc.is_unit() { c } else { acc.intersect(&c)? };
        }
        Ok(acc)
    }

    /// `I : g^∞`.
    pub fn saturation(&self, g: &Polynomial) -> Result<Ideal> {
        let mut cur = self.clone();
        for _ in 0..256 {
            let next = cur.quotient_by_element(g)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
        Err(AlgebraError::Resource("saturation did not stabilise".into()))
    }

    /// Whether `g ∈ √I`, decided by `I : g^∞ = (1)`.
    pub fn radical_contains(&self, g: &Polynomial) -> Result<bool> {
        if g.is_zero() {
            return Ok(true);
        }
        Ok(self.saturation(g)?.is_unit())
    }

    /// Whether `self ⊆ √other`.
    pub fn contained_in_radical_of(&self, other: &Ideal) -> Result<bool> {
        for g in self.basis_polynomials() {
            if !other.radical_contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Krull dimension of `S/I`: the largest set of variables that supports
    /// no leading monomial. `-∞` for the unit ideal.
    pub fn quotient_dimension(&self) -> ExtInt {
        let leads: Vec<Monomial> = self.basis.iter().map(|e| e.lead().unwrap().mon.clone()).collect();
        leading_dimension(self.nvars, &leads)
    }

    /// Ideal generated by the given Groebner basis under a different order.
    pub fn groebner(&self, order: MonomialOrder) -> Result<GroebnerBasis> {
        GroebnerBasis::ideal(self.nvars, self.field, &self.basis_polynomials(), order)
    }
}

/// Dimension of `S/in` for a monomial ideal given by its generators.
pub(crate) fn leading_dimension(nvars: usize, leads: &[Monomial]) -> ExtInt {
    if leads.iter().any(|m| m.is_one()) {
        return ExtInt::NegInf;
    }
    let masks: Vec<u64> = leads.iter().map(|m| m.support().fold(0u64, |a, i| a | (1 << i))).collect();
    let mut best = 0;
    for set in 0u64..(1u64 << nvars) {
        let size = set.count_ones() as i64;
        if size <= best {
            continue;
        }
        if masks.iter().all(|&m| m & !set != 0) {
            best = size;
        }
    }
    ExtInt::Finite(best)
}

/// `h / g` for `g` dividing `h`.
pub(crate) fn exact_division(h: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let gm = g.monic();
    let lc = g.lead().unwrap().1.clone();
    let basis = [gm.to_element(0)];
    let mut e = Engine::new(ModuleOrder::DEFAULT, &[0], &[], Limits::default());
    e.load_basis(&basis);
    let (r, quots) = e.reduce_tracking(h.to_element(0))?;
    if !r.is_zero() {
        return Err(AlgebraError::Consistency("inexact polynomial division".into()));
    }
    let inv = lc.inv();
    let terms = quots
        .into_iter()
        .map(|(p, c, m)| {
            debug_assert!(matches!(p, Partner::Basis(0)));
            (m, c.mul(&inv))
        })
        .collect();
    Polynomial::from_terms(h.nvars(), h.field(), terms)
}
