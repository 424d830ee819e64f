//! Degree-by-degree Buchberger for homogeneous submodules of `S^r`.
//!
//! The engine optionally works modulo an ideal `I` acting on every component:
//! the elements `g e_j` for `g` in a Groebner basis of `I` are never
//! materialised, they take part in reductions and pairs implicitly.
//!
//! Inputs come in two kinds. *Base* elements just join the submodule.
//! *Candidates* are processed after everything of the same degree; a candidate
//! that does not reduce to zero is a minimal generator modulo all base
//! elements and earlier candidates, and is reported back.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{AlgebraError, Result};
use crate::monomial::{ModuleOrder, Monomial};
use crate::scalar::Scalar;
use crate::vector::{FreeElement, Term};

/// Hard caps on one Groebner computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest polynomial degree of an S-pair lcm.
    pub max_degree: u32,
    /// Largest number of single reduction steps.
    pub max_reductions: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_degree: 32, max_reductions: 1_000_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Partner {
    Basis(usize),
    Ideal(usize),
}

pub(crate) struct Engine<'a> {
    ord: ModuleOrder,
    twists: &'a [i32],
    ideal: &'a [FreeElement],
    basis: Vec<FreeElement>,
    by_comp: Vec<Vec<usize>>,
    queue: BTreeSet<(i32, usize, Partner)>,
    open: BTreeSet<(usize, usize)>,
    boundary: Option<u32>,
    kernel: Vec<FreeElement>,
    limits: Limits,
    reductions: u64,
    rank_one: bool,
}

impl<'a> Engine<'a> {
    /// `ideal` holds a monic Groebner basis of `I` as elements of component 0.
    pub fn new(ord: ModuleOrder, twists: &'a [i32], ideal: &'a [FreeElement], limits: Limits) -> Self {
        Engine {
            ord,
            twists,
            ideal,
            basis: Vec::new(),
            by_comp: alloc::vec![Vec::new(); twists.len()],
            queue: BTreeSet::new(),
            open: BTreeSet::new(),
            boundary: None,
            kernel: Vec::new(),
            limits,
            reductions: 0,
            rank_one: twists.len() == 1,
        }
    }

    /// Elements whose leading component is `>= boundary` are set aside as
    /// kernel elements; pairs among them are never formed.
    pub fn eliminate_below(&mut self, boundary: u32) {
        self.boundary = Some(boundary);
    }

    /// Seed with a known Groebner basis (used for reductions only).
    pub fn load_basis(&mut self, elements: &[FreeElement]) {
        for e in elements {
            let idx = self.basis.len();
            let c = e.lead().expect("nonzero basis element").comp as usize;
            self.by_comp[c].push(idx);
            self.basis.push(e.clone());
        }
    }

    pub fn take_kernel(&mut self) -> Vec<FreeElement> {
        core::mem::take(&mut self.kernel)
    }

    fn degree_of(&self, v: &FreeElement) -> i32 {
        v.degree(self.twists).expect("nonzero")
    }

    /// Runs to completion and returns the candidates that were minimal.
    pub fn run(&mut self, base: Vec<FreeElement>, candidates: Vec<FreeElement>) -> Result<Vec<FreeElement>> {
        let mut base: Vec<(i32, FreeElement)> =
            base.into_iter().filter(|v| !v.is_zero()).map(|v| (self.degree_of(&v), v)).collect();
        let mut cands: Vec<(i32, FreeElement)> =
            candidates.into_iter().filter(|v| !v.is_zero()).map(|v| (self.degree_of(&v), v)).collect();
        base.sort_by_key(|x| x.0);
        cands.sort_by_key(|x| x.0);
        let mut base = base.into_iter().peekable();
        let mut cands = cands.into_iter().peekable();
        let mut minimal = Vec::new();
        loop {
            let d = [self.queue.first().map(|p| p.0), base.peek().map(|x| x.0), cands.peek().map(|x| x.0)]
                .into_iter()
                .flatten()
                .min();
            let Some(d) = d else { break };
            while let Some(&(pd, i, partner)) = self.queue.first() {
                if pd != d {
                    break;
                }
                self.queue.pop_first();
                if let Partner::Basis(j) = partner {
                    self.open.remove(&(j, i));
                    if self.chain_criterion(i, j) {
                        continue;
                    }
                }
                let s = self.spoly(i, partner);
                let r = self.reduce(s)?;
                if !r.is_zero() {
                    self.insert(r)?;
                }
            }
            while base.peek().map(|x| x.0) == Some(d) {
                let (_, v) = base.next().unwrap();
                let r = self.reduce(v)?;
                if !r.is_zero() {
                    self.insert(r)?;
                }
            }
            while cands.peek().map(|x| x.0) == Some(d) {
                let (_, v) = cands.next().unwrap();
                let mut r = self.reduce(v)?;
                if !r.is_zero() {
                    r.make_monic();
                    minimal.push(r.clone());
                    self.insert(r)?;
                }
            }
        }
        Ok(minimal)
    }

    fn chain_criterion(&self, i: usize, j: usize) -> bool {
        let li = &self.basis[i].lead().unwrap().mon;
        let lj = &self.basis[j].lead().unwrap().mon;
        let c = self.basis[i].lead().unwrap().comp as usize;
        let l = li.lcm(lj);
        self.by_comp[c].iter().any(|&k| {
            k != i
                && k != j
                && self.basis[k].lead().unwrap().mon.divides(&l)
                && !self.open.contains(&(i.min(k), i.max(k)))
                && !self.open.contains(&(j.min(k), j.max(k)))
        })
    }

    fn insert(&mut self, mut r: FreeElement) -> Result<()> {
        r.make_monic();
        let lead = r.lead().unwrap().clone();
        if let Some(b) = self.boundary {
            if lead.comp >= b {
                self.kernel.push(r);
                return Ok(());
            }
        }
        let idx = self.basis.len();
        let tw = self.twists[lead.comp as usize];
        for &k in &self.by_comp[lead.comp as usize] {
            let lk = &self.basis[k].lead().unwrap().mon;
            if self.rank_one && lk.is_coprime(&lead.mon) {
                continue;
            }
            let l = lk.lcm(&lead.mon);
            self.check_degree(&l)?;
            self.queue.insert((l.degree() as i32 + tw, idx, Partner::Basis(k)));
            self.open.insert((k, idx));
        }
        for (g, el) in self.ideal.iter().enumerate() {
            let lg = &el.lead().unwrap().mon;
            if lg.is_coprime(&lead.mon) {
                continue;
            }
            let l = lg.lcm(&lead.mon);
            self.check_degree(&l)?;
            self.queue.insert((l.degree() as i32 + tw, idx, Partner::Ideal(g)));
        }
        self.by_comp[lead.comp as usize].push(idx);
        self.basis.push(r);
        Ok(())
    }

    fn check_degree(&self, l: &Monomial) -> Result<()> {
        if l.degree() > self.limits.max_degree {
            return Err(AlgebraError::Resource(alloc::format!(
                "S-pair of degree {} exceeds the cap {}",
                l.degree(),
                self.limits.max_degree
            )));
        }
        Ok(())
    }

    fn spoly(&self, i: usize, partner: Partner) -> FreeElement {
        let f = &self.basis[i];
        let lf = f.lead().unwrap();
        let (g_terms, comp_override, lg) = match partner {
            Partner::Basis(j) => (self.basis[j].terms(), None, &self.basis[j].lead().unwrap().mon),
            Partner::Ideal(g) => (self.ideal[g].terms(), Some(lf.comp), &self.ideal[g].lead().unwrap().mon),
        };
        let l = lf.mon.lcm(lg);
        let mf = lf.mon.quotient_of(&l).unwrap();
        let mg = lg.quotient_of(&l).unwrap();
        let one = lf.coef.field().one();
        let a = f.mul_term(&one, &mf);
        FreeElement::from_sorted(sub_mul(a.terms(), &one, &mg, g_terms, comp_override, &self.ord))
    }

    fn find_reducer(&self, t: &Term) -> Option<(Partner, &FreeElement)> {
        if let Some(list) = self.by_comp.get(t.comp as usize) {
            for &k in list {
                if self.basis[k].lead().unwrap().mon.divides(&t.mon) {
                    return Some((Partner::Basis(k), &self.basis[k]));
                }
            }
        }
        for (g, el) in self.ideal.iter().enumerate() {
            if el.lead().unwrap().mon.divides(&t.mon) {
                return Some((Partner::Ideal(g), el));
            }
        }
        None
    }

    fn tick(&mut self) -> Result<()> {
        self.reductions += 1;
        if self.reductions > self.limits.max_reductions {
            return Err(AlgebraError::Resource(alloc::format!(
                "more than {} reduction steps",
                self.limits.max_reductions
            )));
        }
        Ok(())
    }

    /// Full normal form with respect to the current basis and the ideal.
    pub fn reduce(&mut self, v: FreeElement) -> Result<FreeElement> {
        self.reduce_inner(v, None)
    }

    /// Normal form together with the quotients used, as (partner, c, m) with
    /// `v = remainder + sum c*m*partner`.
    pub fn reduce_tracking(&mut self, v: FreeElement) -> Result<(FreeElement, Vec<(Partner, Scalar, Monomial)>)> {
        let mut q = Vec::new();
        let r = self.reduce_inner(v, Some(&mut q))?;
        Ok((r, q))
    }

    fn reduce_inner(
        &mut self,
        v: FreeElement,
        mut track: Option<&mut Vec<(Partner, Scalar, Monomial)>>,
    ) -> Result<FreeElement> {
        let mut rest = v.into_terms();
        let mut pos = 0;
        let mut out: Vec<Term> = Vec::new();
        while pos < rest.len() {
            let found = {
                let t = &rest[pos];
                self.find_reducer(t).map(|(p, g)| {
                    let lg = g.lead().unwrap();
                    let m = lg.mon.quotient_of(&t.mon).unwrap();
                    let c = t.coef.div(&lg.coef);
                    (p, m, c)
                })
            };
            match found {
                None => {
                    out.push(rest[pos].clone());
                    pos += 1;
                }
                Some((p, m, c)) => {
                    self.tick()?;
                    let comp = rest[pos].comp;
                    let (g_terms, over) = match p {
                        Partner::Basis(k) => (self.basis[k].terms(), None),
                        Partner::Ideal(g) => (self.ideal[g].terms(), Some(comp)),
                    };
                    rest = sub_mul(&rest[pos..], &c, &m, g_terms, over, &self.ord);
                    pos = 0;
                    if let Some(tr) = track.as_deref_mut() {
                        tr.push((p, c, m));
                    }
                }
            }
        }
        Ok(FreeElement::from_sorted(out))
    }

    /// Interreduce and sort decreasingly by leading term.
    pub fn into_reduced_basis(mut self) -> Result<Vec<FreeElement>> {
        for _ in 0..64 {
            let mut changed = false;
            for i in 0..self.basis.len() {
                let el = self.basis[i].clone();
                let lead = el.terms()[0].clone();
                let tail = FreeElement::from_sorted(el.terms()[1..].to_vec());
                let r = self.reduce(tail.clone())?;
                if r != tail {
                    let mut terms = alloc::vec![lead];
                    terms.extend(r.into_terms());
                    self.basis[i] = FreeElement::from_sorted(terms);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let ord = self.ord;
        let mut b = self.basis;
        b.sort_by(|x, y| {
            let (a, c) = (x.lead().unwrap(), y.lead().unwrap());
            ord.compare(&c.mon, c.comp, &a.mon, a.comp)
        });
        Ok(b)
    }
}

/// `a - c*m*b`, where `b` is optionally relabelled into a single component.
fn sub_mul(a: &[Term], c: &Scalar, m: &Monomial, b: &[Term], comp: Option<u32>, ord: &ModuleOrder) -> Vec<Term> {
    let negc = c.neg();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let make = |t: &Term| Term { mon: t.mon.mul(m), comp: comp.unwrap_or(t.comp), coef: t.coef.mul(&negc) };
    while i < a.len() && j < b.len() {
        let tb = make(&b[j]);
        match ord.compare(&a[i].mon, a[i].comp, &tb.mon, tb.comp) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(tb);
                j += 1;
            }
            Ordering::Equal => {
                let s = a[i].coef.add(&tb.coef);
                if !s.is_zero() {
                    out.push(Term { mon: tb.mon, comp: tb.comp, coef: s });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push(make(&b[j]));
        j += 1;
    }
    out
}

/// Homogeneity check shared by the public entry points.
pub(crate) fn require_homogeneous(v: &[FreeElement], twists: &[i32]) -> Result<()> {
    for (k, e) in v.iter().enumerate() {
        if let Some(c) = e.max_component() {
            if c as usize >= twists.len() {
                return Err(AlgebraError::Structural(alloc::format!(
                    "element {} has component {} outside rank {}",
                    k,
                    c,
                    twists.len()
                )));
            }
        }
        if !e.is_homogeneous(twists) {
            return Err(AlgebraError::Inhomogeneous(alloc::format!("element {}", k).to_string()));
        }
    }
    Ok(())
}
