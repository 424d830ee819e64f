//! Bounded chain complexes of presented graded modules, their homology, and
//! the standard constructions: Koszul complexes, `F ⊗ N` and `Hom(F, N)`.
//!
//! Homological indexing throughout: `∂_i : C_i -> C_{i-1}`. `Hom(F, N)` is
//! reindexed so that `Hom(F_i, N)` sits in degree `-i`, hence
//! `Ext^i = H_{-i}`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::groebner;
use crate::module::{apply_columns, GModule, ModuleOrigin};
use crate::monomial::{ModuleOrder, Monomial};
use crate::polynomial::Polynomial;
use crate::ring::QuotientRing;
use crate::value::ExtInt;
use crate::vector::{FreeElement, Term};

const ORD: ModuleOrder = ModuleOrder::DEFAULT;

#[derive(Clone, Debug)]
pub struct ChainComplex {
    ring: Arc<QuotientRing>,
    low: i64,
    terms: Vec<GModule>,
    /// `maps[k] = ∂_{low+k+1}`, columns indexed by generators of `terms[k+1]`.
    maps: Vec<Vec<FreeElement>>,
}

/// Extent of a complex and of its homology; `-inf` when empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexProfile {
    pub inf: ExtInt,
    pub sup: ExtInt,
    pub hinf: ExtInt,
    pub hsup: ExtInt,
}

impl ChainComplex {
    /// Checks shapes, degrees, that every map is well defined on the
    /// presentations and that `∂∘∂ = 0`.
    pub fn new(ring: Arc<QuotientRing>, low: i64, terms: Vec<GModule>, maps: Vec<Vec<FreeElement>>) -> Result<Self> {
        if terms.iter().any(|t| **t.ring() != *ring) {
            return Err(AlgebraError::Structural("complex term over another ring".into()));
        }
        if maps.len() + 1 != terms.len().max(1) {
            return Err(AlgebraError::Structural("need exactly one map between consecutive terms".into()));
        }
        let mut reduced = Vec::with_capacity(maps.len());
        for (k, cols) in maps.into_iter().enumerate() {
            let (src, tgt) = (&terms[k + 1], &terms[k]);
            if cols.len() != src.rank() {
                return Err(AlgebraError::Structural(alloc::format!(
                    "differential {} has {} columns for {} generators",
                    low + k as i64 + 1,
                    cols.len(),
                    src.rank()
                )));
            }
            let mut out = Vec::with_capacity(cols.len());
            for (j, c) in cols.into_iter().enumerate() {
                if c.max_component().is_some_and(|m| m as usize >= tgt.rank()) {
                    return Err(AlgebraError::Structural("differential column outside its target".into()));
                }
                if !c.is_homogeneous(tgt.twists()) || c.degree(tgt.twists()).is_some_and(|d| d != src.twists()[j]) {
                    return Err(AlgebraError::Inhomogeneous(alloc::format!(
                        "differential {} is not degree preserving",
                        low + k as i64 + 1
                    )));
                }
                out.push(ring.reduce_element(&c, tgt.twists())?);
            }
            for r in src.relations() {
                if !tgt.contains(&apply_columns(&out, r))? {
                    return Err(AlgebraError::Contract(alloc::format!(
                        "differential {} is not well defined on the presentation",
                        low + k as i64 + 1
                    )));
                }
            }
            reduced.push(out);
        }
        for k in 1..reduced.len() {
            for c in &reduced[k] {
                if !terms[k - 1].contains(&apply_columns(&reduced[k - 1], c))? {
                    return Err(AlgebraError::Contract(alloc::format!(
                        "composite of differentials {} and {} is not zero",
                        low + k as i64 + 1,
                        low + k as i64
                    )));
                }
            }
        }
        Ok(ChainComplex { ring, low, terms, maps: reduced })
    }

    /// A free complex from generator degrees and columns.
    pub fn free(ring: Arc<QuotientRing>, low: i64, twists: Vec<Vec<i32>>, maps: Vec<Vec<FreeElement>>) -> Result<Self> {
        let terms = twists.into_iter().map(|t| GModule::free(ring.clone(), t)).collect();
        ChainComplex::new(ring, low, terms, maps)
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest index carrying a term; `low - 1` when there are none.
    pub fn high(&self) -> i64 {
        self.low + self.terms.len() as i64 - 1
    }

    pub fn term(&self, i: i64) -> Option<&GModule> {
        if i < self.low {
            return None;
        }
        self.terms.get((i - self.low) as usize)
    }

    /// `∂_i : C_i -> C_{i-1}`, when both ends exist.
    pub fn differential(&self, i: i64) -> Option<&[FreeElement]> {
        if i <= self.low {
            return None;
        }
        self.maps.get((i - self.low - 1) as usize).map(|v| v.as_slice())
    }

    fn is_free(&self) -> bool {
        self.terms.iter().all(|t| t.relations().is_empty())
    }

    /// Cycles at `i`, minimized modulo the boundaries and the relations of `C_i`.
    fn cycles_mod_boundaries(&self, i: i64) -> Result<(Vec<FreeElement>, Vec<FreeElement>)> {
        let Some(mid) = self.term(i) else { return Ok((Vec::new(), Vec::new())) };
        let amb = self.ring.ambient();
        let tw = mid.twists();
        let mut b = mid.relations().to_vec();
        if let Some(inc) = self.differential(i + 1) {
            b.extend(inc.iter().filter(|c| !c.is_zero()).cloned());
        }
        let z = match (self.term(i - 1), self.differential(i)) {
            (Some(t), Some(d)) if t.rank() > 0 => groebner::kernel(&amb, d, tw, t.twists(), t.relations())?,
            _ => (0..mid.rank())
                .map(|j| FreeElement::monomial(self.ring.field().one(), Monomial::one(self.ring.nvars()), j as u32))
                .collect(),
        };
        let z = groebner::minimize_modulo(&amb, &z, &b, tw)?;
        Ok((z, b))
    }

    pub fn homology_is_zero(&self, i: i64) -> Result<bool> {
        Ok(self.cycles_mod_boundaries(i)?.0.is_empty())
    }

    /// `H_i`, minimally presented.
    pub fn homology(&self, i: i64) -> Result<GModule> {
        Ok(self.homology_with_generators(i)?.0)
    }

    /// `H_i` together with a cycle in `C_i` representing each of its generators.
    pub fn homology_with_generators(&self, i: i64) -> Result<(GModule, Vec<FreeElement>)> {
        let (z, b) = self.cycles_mod_boundaries(i)?;
        if z.is_empty() {
            return Ok((GModule::free(self.ring.clone(), Vec::new()), Vec::new()));
        }
        let tw = self.term(i).unwrap().twists();
        let zdeg: Vec<i32> = z.iter().map(|v| v.degree(tw).unwrap()).collect();
        let rel = groebner::kernel(&self.ring.ambient(), &z, &zdeg, tw, &b)?;
        let h = GModule::present(self.ring.clone(), zdeg, rel)?;
        let (h, kept) = h.minimal_presentation_with_map()?;
        let gens = kept.into_iter().map(|k| z[k].clone()).collect();
        Ok((h.with_origin(ModuleOrigin::Presented), gens))
    }

    pub fn profile(&self) -> Result<ComplexProfile> {
        let mut p =
            ComplexProfile { inf: ExtInt::NegInf, sup: ExtInt::NegInf, hinf: ExtInt::NegInf, hsup: ExtInt::NegInf };
        let mut nonzero = Vec::new();
        for i in self.low..=self.high() {
            if !self.term(i).unwrap().is_zero()? {
                nonzero.push(i);
            }
        }
        if let (Some(a), Some(b)) = (nonzero.first(), nonzero.last()) {
            p.inf = ExtInt::Finite(*a);
            p.sup = ExtInt::Finite(*b);
        }
        for i in (self.low..=self.high()).rev() {
            if !self.homology_is_zero(i)? {
                p.hsup = ExtInt::Finite(i);
                break;
            }
        }
        for i in self.low..=self.high() {
            if !self.homology_is_zero(i)? {
                p.hinf = ExtInt::Finite(i);
                break;
            }
        }
        Ok(p)
    }

    /// The Koszul complex `K(f_1..f_t; R)`, terms in degrees `0..=t`.
    /// Basis of `K_p` is the `p`-subsets in lexicographic order.
    pub fn koszul(ring: Arc<QuotientRing>, seq: &[Polynomial]) -> Result<Self> {
        let t = seq.len();
        let mut degs = Vec::with_capacity(t);
        for f in seq {
            if !f.is_homogeneous() {
                return Err(AlgebraError::Inhomogeneous("Koszul sequence element".into()));
            }
            match f.degree() {
                Some(d) => degs.push(d as i32),
                None => return Err(AlgebraError::Contract("zero element in a Koszul sequence".into())),
            }
        }
        let subsets: Vec<Vec<Vec<usize>>> = (0..=t).map(|p| combinations(t, p)).collect();
        let index: Vec<BTreeMap<Vec<usize>, usize>> =
            subsets.iter().map(|s| s.iter().enumerate().map(|(k, v)| (v.clone(), k)).collect()).collect();
        let twists: Vec<Vec<i32>> =
            subsets.iter().map(|s| s.iter().map(|v| v.iter().map(|&k| degs[k]).sum()).collect()).collect();
        let mut maps = Vec::with_capacity(t);
        for p in 1..=t {
            let mut cols = Vec::with_capacity(subsets[p].len());
            for s in &subsets[p] {
                let mut terms = Vec::new();
                for (j, &k) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(j);
                    let comp = index[p - 1][&rest] as u32;
                    for (m, c) in seq[k].terms() {
                        let c = if j % 2 == 0 { c.clone() } else { c.neg() };
                        terms.push(Term { mon: m.clone(), comp, coef: c });
                    }
                }
                cols.push(FreeElement::from_terms(terms, &ORD));
            }
            maps.push(cols);
        }
        ChainComplex::free(ring, 0, twists, maps)
    }

    /// `C ⊗_R N` for a free complex `C`. Generator `(l, k)` of `C_i ⊗ N`
    /// pairs basis vector `l` with generator `k` of `N`.
    pub fn tensor(&self, n: &GModule) -> Result<Self> {
        if !self.is_free() {
            return Err(AlgebraError::Unsupported("tensor of a complex with non-free terms".into()));
        }
        if **n.ring() != *self.ring {
            return Err(AlgebraError::Structural("module over another ring".into()));
        }
        let rn = n.rank() as u32;
        let terms = self.terms.iter().map(|t| n.power(t.twists())).collect::<Result<Vec<_>>>()?;
        let mut maps = Vec::with_capacity(self.maps.len());
        for cols in &self.maps {
            let mut out = Vec::with_capacity(cols.len() * n.rank());
            for c in cols {
                for k in 0..rn {
                    let terms = c.terms().iter().map(|t| Term {
                        mon: t.mon.clone(),
                        comp: t.comp * rn + k,
                        coef: t.coef.clone(),
                    });
                    out.push(FreeElement::from_terms(terms.collect(), &ORD));
                }
            }
            maps.push(out);
        }
        ChainComplex::new(self.ring.clone(), self.low, terms, maps)
    }

    /// `Hom_R(C, N)` for a free complex `C`, with `Hom(C_i, N)` in degree `-i`.
    pub fn hom_into(&self, n: &GModule) -> Result<Self> {
        if !self.is_free() {
            return Err(AlgebraError::Unsupported("Hom out of a complex with non-free terms".into()));
        }
        if **n.ring() != *self.ring {
            return Err(AlgebraError::Structural("module over another ring".into()));
        }
        let rn = n.rank() as u32;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in self.terms.iter().rev() {
            let neg: Vec<i32> = t.twists().iter().map(|a| -a).collect();
            terms.push(n.power(&neg)?);
        }
        // Hom(C_{i-1}, N) -> Hom(C_i, N): generator (l, k) goes to
        // sum_m ∂_i[l][m] (m, k).
        let mut built = Vec::with_capacity(self.maps.len());
        for (pos, cols) in self.maps.iter().enumerate().rev() {
            let rows = self.terms[pos].rank();
            let mut by_row: Vec<Vec<Term>> = Vec::new();
            by_row.resize_with(rows, Vec::new);
            for (m, c) in cols.iter().enumerate() {
                for t in c.terms() {
                    by_row[t.comp as usize].push(Term { mon: t.mon.clone(), comp: m as u32, coef: t.coef.clone() });
                }
            }
            let mut out = Vec::with_capacity(rows * n.rank());
            for row in &by_row {
                for k in 0..rn {
                    let ts =
                        row.iter().map(|t| Term { mon: t.mon.clone(), comp: t.comp * rn + k, coef: t.coef.clone() });
                    out.push(FreeElement::from_terms(ts.collect(), &ORD));
                }
            }
            built.push(out);
        }
        ChainComplex::new(self.ring.clone(), -self.high(), terms, built)
    }
}

pub(crate) fn combinations(t: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn go(start: usize, t: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for k in start..t {
            cur.push(k);
            go(k + 1, t, p, cur, out);
            cur.pop();
        }
    }
    go(0, t, p, &mut cur, &mut out);
    out
}
