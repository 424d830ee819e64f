//! Graded free modules, homogeneous maps and finitely presented graded
//! modules `M = coker(F_1 -> F_0)` over a quotient ring.
//!
//! Twists are generator degrees: the free module `R(-a)` has its generator in
//! degree `a`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{AlgebraError, Result};
use crate::groebner::{self, Ideal};
use crate::monomial::{monomials_of_degree, ModuleOrder, Monomial};
use crate::polynomial::Polynomial;
use crate::ring::QuotientRing;
use crate::vector::{FreeElement, Term};

const ORD: ModuleOrder = ModuleOrder::DEFAULT;

/// `R(-a_1) ⊕ ... ⊕ R(-a_r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule {
    ring: Arc<QuotientRing>,
    twists: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(ring: Arc<QuotientRing>, twists: Vec<i32>) -> Self {
        GradedFreeModule { ring, twists }
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn basis_element(&self, j: usize) -> FreeElement {
        FreeElement::monomial(self.ring.field().one(), Monomial::one(self.ring.nvars()), j as u32)
    }

    /// Builds `sum p_j e_j`, rejecting out-of-range components.
    pub fn element(&self, entries: &[(usize, Polynomial)]) -> Result<FreeElement> {
        let mut terms = Vec::new();
        for (j, p) in entries {
            if *j >= self.rank() {
                return Err(AlgebraError::Structural(alloc::format!("component {} outside rank {}", j, self.rank())));
            }
            if p.nvars() != self.ring.nvars() || p.field() != self.ring.field() {
                return Err(AlgebraError::Structural("entry from another ring".into()));
            }
            for (m, c) in p.terms() {
                terms.push(Term { mon: m.clone(), comp: *j as u32, coef: c.clone() });
            }
        }
        Ok(FreeElement::from_terms(terms, &ORD))
    }
}

/// A degree-preserving map between graded free modules, stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    source: GradedFreeModule,
    target: GradedFreeModule,
    columns: Vec<FreeElement>,
}

impl GradedMap {
    /// Column `j` must be homogeneous of degree `source.twists[j]` (or zero).
    /// Entries are reduced modulo the defining ideal.
    pub fn new(source: GradedFreeModule, target: GradedFreeModule, columns: Vec<FreeElement>) -> Result<Self> {
        if source.ring != target.ring {
            return Err(AlgebraError::Structural("source and target over different rings".into()));
        }
        if columns.len() != source.rank() {
            return Err(AlgebraError::Structural("column count differs from source rank".into()));
        }
        let mut cols = Vec::with_capacity(columns.len());
        for (j, c) in columns.into_iter().enumerate() {
            check_vector(&c, target.twists(), Some(source.twists[j]))?;
            cols.push(target.ring.reduce_element(&c, target.twists())?);
        }
        Ok(GradedMap { source, target, columns: cols })
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn columns(&self) -> &[FreeElement] {
        &self.columns
    }

    /// Entry in row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        let r = &self.target.ring;
        Polynomial::from_component(&self.columns[j], i as u32, r.nvars(), r.field())
    }

    pub fn apply(&self, v: &FreeElement) -> Result<FreeElement> {
        let r = &self.target.ring;
        let img = apply_columns(&self.columns, v);
        r.reduce_element(&img, self.target.twists())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        if other.target != self.source {
            return Err(AlgebraError::Structural("maps are not composable".into()));
        }
        let cols = other.columns.iter().map(|c| apply_columns(&self.columns, c)).collect();
        GradedMap::new(other.source.clone(), self.target.clone(), cols)
    }

    /// The cokernel as a presented module.
    pub fn cokernel(&self) -> Result<GModule> {
        GModule::present(self.target.ring.clone(), self.target.twists.clone(), self.columns.clone())
    }

    /// Generators of the kernel (over `R`), as a map onto them.
    pub fn kernel(&self) -> Result<GradedMap> {
        let r = &self.target.ring;
        let k = groebner::kernel(&r.ambient(), &self.columns, &self.source.twists, &self.target.twists, &[])?;
        let k = groebner::minimize_modulo(&r.ambient(), &k, &[], &self.source.twists)?;
        let tw = k.iter().map(|v| v.degree(&self.source.twists).unwrap()).collect();
        Ok(GradedMap { source: GradedFreeModule::new(r.clone(), tw), target: self.source.clone(), columns: k })
    }
}

/// `sum_j v_j * cols[j]`, without reduction.
pub(crate) fn apply_columns(cols: &[FreeElement], v: &FreeElement) -> FreeElement {
    let mut acc = FreeElement::zero();
    for t in v.terms() {
        acc = acc.add_scaled(&t.coef, &t.mon, &cols[t.comp as usize], &ORD);
    }
    acc
}

fn check_vector(v: &FreeElement, twists: &[i32], degree: Option<i32>) -> Result<()> {
    if let Some(c) = v.max_component() {
        if c as usize >= twists.len() {
            return Err(AlgebraError::Structural(alloc::format!("component {} outside rank {}", c, twists.len())));
        }
    }
    if !v.is_homogeneous(twists) {
        return Err(AlgebraError::Inhomogeneous("vector mixes degrees".into()));
    }
    if let (Some(want), Some(got)) = (degree, v.degree(twists)) {
        if want != got {
            return Err(AlgebraError::Inhomogeneous(alloc::format!(
                "column of degree {} where degree {} is required",
                got,
                want
            )));
        }
    }
    Ok(())
}

/// Where a module came from, as far as certificates are concerned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrigin {
    Presented,
    /// Built as the canonical module of a Cohen-Macaulay ring; its injective
    /// dimension is known to equal the depth of the ring.
    Canonical,
}

/// `coker(relations) = R^r(twists) / <relations>`.
pub struct GModule {
    ring: Arc<QuotientRing>,
    twists: Vec<i32>,
    relations: Vec<FreeElement>,
    origin: ModuleOrigin,
    basis: OnceBox<Vec<FreeElement>>,
}

impl Clone for GModule {
    fn clone(&self) -> Self {
        GModule {
            ring: self.ring.clone(),
            twists: self.twists.clone(),
            relations: self.relations.clone(),
            origin: self.origin,
            basis: self.basis.clone(),
        }
    }
}

impl PartialEq for GModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.twists == other.twists
            && self.relations == other.relations
            && self.origin == other.origin
    }
}

impl Eq for GModule {}

impl fmt::Debug for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GModule")
            .field("twists", &self.twists)
            .field("relations", &self.relations.len())
            .field("origin", &self.origin)
            .finish()
    }
}

impl GModule {
    /// Validates homogeneity and reduces the relations modulo the ring's ideal.
    pub fn present(ring: Arc<QuotientRing>, twists: Vec<i32>, relations: Vec<FreeElement>) -> Result<Self> {
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            check_vector(&r, &twists, None)?;
            if r.terms().iter().any(|t| t.mon.nvars() != ring.nvars() || t.coef.field() != ring.field()) {
                return Err(AlgebraError::Structural("relation from another ring".into()));
            }
            let r = ring.reduce_element(&r, &twists)?;
            if !r.is_zero() {
                rels.push(r);
            }
        }
        Ok(GModule::raw(ring, twists, rels, ModuleOrigin::Presented))
    }

    pub(crate) fn raw(
        ring: Arc<QuotientRing>,
        twists: Vec<i32>,
        relations: Vec<FreeElement>,
        origin: ModuleOrigin,
    ) -> Self {
        GModule { ring, twists, relations, origin, basis: OnceBox::new() }
    }

    /// Cokernel of a matrix given by rows, with the generator degrees of the
    /// rows. Column degrees are inferred and must be consistent.
    pub fn from_rows(ring: Arc<QuotientRing>, rows: &[Vec<Polynomial>], twists: Vec<i32>) -> Result<Self> {
        if rows.len() != twists.len() {
            return Err(AlgebraError::Structural("one twist per matrix row is required".into()));
        }
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(AlgebraError::Structural("ragged matrix".into()));
        }
        let free = GradedFreeModule::new(ring.clone(), twists.clone());
        let mut cols = Vec::with_capacity(ncols);
        for j in 0..ncols {
            let entries: Vec<(usize, Polynomial)> = rows.iter().enumerate().map(|(i, r)| (i, r[j].clone())).collect();
            cols.push(free.element(&entries)?);
        }
        GModule::present(ring, twists, cols)
    }

    pub fn free(ring: Arc<QuotientRing>, twists: Vec<i32>) -> Self {
        GModule::raw(ring, twists, Vec::new(), ModuleOrigin::Presented)
    }

    /// `R/J` with its generator in degree 0.
    pub fn cyclic(ring: Arc<QuotientRing>, gens: &[Polynomial]) -> Result<Self> {
        let rels = gens.iter().map(|g| g.to_element(0)).collect();
        GModule::present(ring, alloc::vec![0], rels)
    }

    /// The residue field `k = R/m`.
    pub fn residue_field(ring: Arc<QuotientRing>) -> Self {
        let vars: Vec<Polynomial> = (0..ring.nvars()).map(|i| ring.variable(i)).collect();
        GModule::cyclic(ring, &vars).expect("variables are homogeneous")
    }

    pub(crate) fn with_origin(mut self, origin: ModuleOrigin) -> Self {
        self.origin = origin;
        self
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    /// Number of generators of this presentation (not necessarily minimal).
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn relations(&self) -> &[FreeElement] {
        &self.relations
    }

    pub fn origin(&self) -> ModuleOrigin {
        self.origin
    }

    pub fn cover(&self) -> GradedFreeModule {
        GradedFreeModule::new(self.ring.clone(), self.twists.clone())
    }

    /// Degrees of the relations, in order.
    pub fn relation_degrees(&self) -> Vec<i32> {
        self.relations.iter().map(|r| r.degree(&self.twists).unwrap()).collect()
    }

    /// Entry `(i, j)` of the presentation matrix.
    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        Polynomial::from_component(&self.relations[j], i as u32, self.ring.nvars(), self.ring.field())
    }

    /// Groebner basis (POT grevlex) of the relations; `I e_j` stays implicit.
    pub fn basis(&self) -> Result<&[FreeElement]> {
        let b = self.basis.get_or_try_init(|| {
            groebner::module_basis(&self.ring.ambient(), &self.relations, &self.twists).map(alloc::boxed::Box::new)
        })?;
        Ok(b.as_slice())
    }

    pub fn reduce(&self, v: &FreeElement) -> Result<FreeElement> {
        let b = self.basis()?;
        groebner::reduce_with(&self.ring.ambient(), v, b, &self.twists)
    }

    pub fn contains(&self, v: &FreeElement) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn is_zero(&self) -> Result<bool> {
        let one = self.ring.field().one();
        for j in 0..self.rank() {
            let e = FreeElement::monomial(one.clone(), Monomial::one(self.ring.nvars()), j as u32);
            if !self.contains(&e)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn leads_by_component(&self) -> Result<Vec<Vec<Monomial>>> {
        let mut leads = alloc::vec![Vec::new(); self.rank()];
        for b in self.basis()? {
            let t = b.lead().unwrap();
            leads[t.comp as usize].push(t.mon.clone());
        }
        for g in self.ring.defining_ideal().basis() {
            let m = &g.lead().unwrap().mon;
            for l in leads.iter_mut() {
                l.push(m.clone());
            }
        }
        Ok(leads)
    }

    /// `dim_k M_d`, counting standard monomials of the Groebner basis.
    pub fn hilbert_function(&self, d: i32) -> Result<u64> {
        let leads = self.leads_by_component()?;
        let n = self.ring.nvars();
        let mut total = 0u64;
        for (j, l) in leads.iter().enumerate() {
            let e = d - self.twists[j];
            if e < 0 {
                continue;
            }
            total += monomials_of_degree(n, e as u32).iter().filter(|m| !l.iter().any(|g| g.divides(m))).count() as u64;
        }
        Ok(total)
    }

    /// Whether `M` has finite length, i.e. every component of the initial
    /// module contains a power of every variable.
    pub fn is_finite_length(&self) -> Result<bool> {
        let leads = self.leads_by_component()?;
        let n = self.ring.nvars();
        Ok(leads.iter().all(|l| (0..n).all(|i| l.iter().any(|m| m.support().all(|k| k == i)))))
    }

    /// `dim_k M` for modules of finite length.
    pub fn length(&self) -> Result<u64> {
        if !self.is_finite_length()? {
            return Err(AlgebraError::Contract("module does not have finite length".into()));
        }
        if self.rank() == 0 {
            return Ok(0);
        }
        let leads = self.leads_by_component()?;
        let n = self.ring.nvars();
        let mut total = 0u64;
        for l in &leads {
            let mut e = 0u32;
            loop {
                let c = monomials_of_degree(n, e).iter().filter(|m| !l.iter().any(|g| g.divides(m))).count();
                if c == 0 {
                    break;
                }
                total += c as u64;
                e += 1;
            }
        }
        Ok(total)
    }

    /// `M(-a)`: every generator degree goes up by `a`.
    pub fn shift(&self, a: i32) -> GModule {
        let m = GModule::raw(
            self.ring.clone(),
            self.twists.iter().map(|t| t + a).collect(),
            self.relations.clone(),
            self.origin,
        );
        if let Some(b) = self.basis.get() {
            let _ = m.basis.set(alloc::boxed::Box::new(b.clone()));
        }
        m
    }

    /// `⊕_l M(-s_l)`; generator `(l, k)` sits in component `l * rank + k`.
    pub fn power(&self, shifts: &[i32]) -> Result<GModule> {
        let r = self.rank() as u32;
        let mut twists = Vec::with_capacity(shifts.len() * self.rank());
        let mut rels = Vec::with_capacity(shifts.len() * self.relations.len());
        let base = self.basis()?;
        let mut gb = Vec::with_capacity(shifts.len() * base.len());
        for (l, s) in shifts.iter().enumerate() {
            twists.extend(self.twists.iter().map(|t| t + s));
            let off = l as u32 * r;
            for v in &self.relations {
                rels.push(v.map_components(|c| c + off, &ORD));
            }
            for v in base {
                gb.push(v.map_components(|c| c + off, &ORD));
            }
        }
        let m = GModule::raw(self.ring.clone(), twists, rels, ModuleOrigin::Presented);
        // blocks never interact, so the shifted bases form a basis of the sum
        let _ = m.basis.set(alloc::boxed::Box::new(gb));
        Ok(m)
    }

    pub fn direct_sum(&self, other: &GModule) -> Result<GModule> {
        if self.ring != other.ring {
            return Err(AlgebraError::Structural("direct sum over different rings".into()));
        }
        let off = self.rank() as u32;
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        let mut rels = self.relations.clone();
        rels.extend(other.relations.iter().map(|v| v.map_components(|c| c + off, &ORD)));
        Ok(GModule::raw(self.ring.clone(), twists, rels, ModuleOrigin::Presented))
    }

    /// Minimal presentation: no unit entries, minimal generators and minimal
    /// relations. The origin tag survives since the result is isomorphic.
    pub fn minimal_presentation(&self) -> Result<GModule> {
        Ok(self.minimal_presentation_with_map()?.0)
    }

    /// Also returns, for each surviving generator, its index in `self`.
    /// Surviving generators are unchanged elements of `M`.
    pub fn minimal_presentation_with_map(&self) -> Result<(GModule, Vec<usize>)> {
        let mut twists = self.twists.clone();
        let mut kept: Vec<usize> = (0..self.rank()).collect();
        let mut rels: Vec<FreeElement> = self.relations.clone();
        loop {
            let pick = rels
                .iter()
                .enumerate()
                .find_map(|(ri, r)| r.terms().iter().find(|t| t.mon.is_one()).map(|t| (ri, t.comp, t.coef.clone())));
            let Some((ri, j, c)) = pick else { break };
            let r = rels.remove(ri);
            let cinv = c.inv();
            twists.remove(j as usize);
            kept.remove(j as usize);
            let mut next = Vec::with_capacity(rels.len());
            for s in rels {
                let p = s.component(j);
                let s = if p.is_empty() {
                    s
                } else {
                    let scaled: Vec<(Monomial, crate::scalar::Scalar)> =
                        p.into_iter().map(|(m, a)| (m, a.mul(&cinv).neg())).collect();
                    s.add(&r.mul_poly(&scaled, &ORD), &ORD)
                };
                debug_assert!(s.terms().iter().all(|t| t.comp != j));
                let s = s.map_components(|k| if k > j { k - 1 } else { k }, &ORD);
                let s = self.ring.reduce_element(&s, &twists)?;
                if !s.is_zero() {
                    next.push(s);
                }
            }
            rels = next;
        }
        let rels = groebner::minimize_modulo(&self.ring.ambient(), &rels, &[], &twists)?;
        let m = GModule::raw(self.ring.clone(), twists, rels, self.origin);
        Ok((m, kept))
    }

    /// Whether `M` is free; decided on the minimal presentation.
    pub fn is_free(&self) -> Result<bool> {
        Ok(self.minimal_presentation()?.relations.is_empty())
    }

    /// For a module with one minimal generator, the ideal `J` in `S` with
    /// `M ≅ (S/J)(-a)`; `J` contains the defining ideal of `R`.
    pub fn cyclic_ideal(&self) -> Result<Option<(Ideal, i32)>> {
        let m = self.minimal_presentation()?;
        if m.rank() != 1 {
            return Ok(None);
        }
        let n = self.ring.nvars();
        let f = self.ring.field();
        let mut gens: Vec<Polynomial> = m.relations.iter().map(|v| Polynomial::from_component(v, 0, n, f)).collect();
        gens.extend(self.ring.defining_ideal().generators().iter().cloned());
        Ok(Some((Ideal::new(n, f, gens)?, m.twists[0])))
    }

    /// `ann M` as an ideal of `S` containing the defining ideal.
    pub fn annihilator(&self) -> Result<Ideal> {
        let m = self.minimal_presentation()?;
        let n = self.ring.nvars();
        let f = self.ring.field();
        let mut acc: Option<Ideal> = None;
        for j in 0..m.rank() {
            let e = FreeElement::monomial(f.one(), Monomial::one(n), j as u32);
            let k = groebner::kernel(&self.ring.ambient(), &[e], &[m.twists[j]], &m.twists, &m.relations)?;
            let mut gens: Vec<Polynomial> = k.iter().map(|v| Polynomial::from_component(v, 0, n, f)).collect();
            gens.extend(self.ring.defining_ideal().generators().iter().cloned());
            let colon = Ideal::new(n, f, gens)?;
            acc = Some(match acc {
                None => colon,
                Some(a) => a.intersect(&colon)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(n, f)))
    }

    /// The same presentation read over `ring`, whose defining ideal must
    /// contain this one's.
    pub fn over_ring(&self, ring: Arc<QuotientRing>) -> Result<GModule> {
        if ring.nvars() != self.ring.nvars() || ring.field() != self.ring.field() {
            return Err(AlgebraError::Structural("rings do not share a polynomial cover".into()));
        }
        if !self.ring.defining_ideal().is_subset_of(ring.defining_ideal())? {
            return Err(AlgebraError::Contract("target ring is not a quotient of the source ring".into()));
        }
        let m = GModule::present(ring, self.twists.clone(), self.relations.clone())?;
        Ok(m.with_origin(self.origin))
    }

    /// `M ⊗_R R/J`. With `require_annihilated`, fails unless `J M = 0`, in
    /// which case this is `M` viewed as an `R/J`-module.
    pub fn base_change(&self, j: &[Polynomial], require_annihilated: bool) -> Result<GModule> {
        if require_annihilated {
            for g in j {
                for k in 0..self.rank() {
                    let v = g.to_element(k as u32);
                    if !self.contains(&v)? {
                        return Err(AlgebraError::Contract(alloc::format!(
                            "generator {} of the ideal does not annihilate the module",
                            g.format(self.ring.variables())
                        )));
                    }
                }
            }
        }
        let ring = self.ring.quotient(j)?;
        let m = GModule::present(ring, self.twists.clone(), self.relations.clone())?;
        Ok(m.with_origin(ModuleOrigin::Presented))
    }

    /// Presentation matrix rows, for printing.
    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rank()).map(|i| (0..self.relations.len()).map(|j| self.entry(i, j)).collect()).collect()
    }

    pub fn describe(&self) -> String {
        alloc::format!("coker of a {}x{} matrix, twists {:?}", self.rank(), self.relations.len(), self.twists)
    }
}
