//! Minimal graded free resolutions, computed lazily one step at a time, and
//! the Ext and Tor modules read off them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::complex::ChainComplex;
use crate::error::Result;
use crate::groebner;
use crate::module::GModule;
use crate::value::ExtInt;
use crate::vector::FreeElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionStatus {
    /// The next syzygy module is zero: the resolution is complete.
    Terminated,
    /// Computation stopped at the step cap.
    Truncated,
}

/// `... -> F_2 -> F_1 -> F_0 -> M -> 0`, minimal.
#[derive(Clone, Debug)]
pub struct Resolution {
    module: GModule,
    twists: Vec<Vec<i32>>,
    /// `diffs[i] = d_{i+1} : F_{i+1} -> F_i`.
    diffs: Vec<Vec<FreeElement>>,
    /// Minimal generators of `ker d_n` for the last computed `F_n`
    /// (for `n = 0`, of `ker(F_0 -> M)`).
    next: Vec<FreeElement>,
}

impl Resolution {
    /// Starts from a minimal presentation; no syzygies yet beyond it.
    pub fn new(m: &GModule) -> Result<Self> {
        let p = m.minimal_presentation()?;
        let next = p.relations().to_vec();
        Ok(Resolution { twists: alloc::vec![p.twists().to_vec()], diffs: Vec::new(), next, module: p })
    }

    /// Resolves until `F_steps` is known (or the resolution ends) and the
    /// status is decided.
    pub fn compute(m: &GModule, steps: usize) -> Result<Self> {
        let mut r = Resolution::new(m)?;
        r.extend_to(steps)?;
        Ok(r)
    }

    pub fn extend_to(&mut self, steps: usize) -> Result<()> {
        while self.steps() < steps && !self.next.is_empty() {
            self.step()?;
        }
        Ok(())
    }

    fn step(&mut self) -> Result<()> {
        let ring = self.module.ring().clone();
        let amb = ring.ambient();
        let gens = core::mem::take(&mut self.next);
        let src = self.twists.last().unwrap().clone();
        let tw: Vec<i32> = gens.iter().map(|g| g.degree(&src).unwrap()).collect();
        let ker = groebner::kernel(&amb, &gens, &tw, &src, &[])?;
        self.next = groebner::minimize_modulo(&amb, &ker, &[], &tw)?;
        self.twists.push(tw);
        self.diffs.push(gens);
        Ok(())
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    /// Index of the last free module computed.
    pub fn steps(&self) -> usize {
        self.diffs.len()
    }

    pub fn status(&self) -> ResolutionStatus {
        if self.next.is_empty() {
            ResolutionStatus::Terminated
        } else {
            ResolutionStatus::Truncated
        }
    }

    /// `pd M` when the resolution has terminated; `-inf` for `M = 0`.
    pub fn length(&self) -> Option<ExtInt> {
        if self.status() == ResolutionStatus::Truncated {
            return None;
        }
        match self.twists.iter().rposition(|t| !t.is_empty()) {
            None => Some(ExtInt::NegInf),
            Some(i) => Some(ExtInt::Finite(i as i64)),
        }
    }

    /// Twists of `F_i`; empty past a terminated end. Panics if `F_i` has not
    /// been computed yet on a truncated resolution.
    pub fn twists(&self, i: usize) -> &[i32] {
        if i < self.twists.len() {
            return &self.twists[i];
        }
        if self.status() == ResolutionStatus::Terminated {
            return &[];
        }
        panic!("F_{} not computed", i);
    }

    pub fn rank(&self, i: usize) -> usize {
        self.twists(i).len()
    }

    /// Ranks of `F_0 .. F_steps`.
    pub fn betti(&self) -> Vec<usize> {
        self.twists.iter().map(|t| t.len()).collect()
    }

    /// `β_{i,j}` as a map `j -> count`.
    pub fn graded_betti(&self, i: usize) -> BTreeMap<i32, usize> {
        let mut out = BTreeMap::new();
        for &t in self.twists(i) {
            *out.entry(t).or_insert(0) += 1;
        }
        out
    }

    /// `d_i : F_i -> F_{i-1}` for `1 <= i <= steps + 1`; the last one maps
    /// onto the syzygies found so far.
    pub fn differential(&self, i: usize) -> &[FreeElement] {
        assert!(i >= 1);
        if i - 1 < self.diffs.len() {
            &self.diffs[i - 1]
        } else if i - 1 == self.diffs.len() {
            &self.next
        } else {
            &[]
        }
    }

    /// The `i`-th syzygy module `Ω^i M = coker(d_{i+1})`, for `i <= steps`.
    pub fn syzygy(&self, i: usize) -> Result<GModule> {
        assert!(i <= self.steps(), "syzygy {} needs F_{}", i, i);
        let ring = self.module.ring().clone();
        GModule::present(ring, self.twists[i].clone(), self.differential(i + 1).to_vec())
    }

    /// `F_lo -> ... -> F_hi` as a free complex (indices past the end are 0).
    pub fn segment(&mut self, lo: usize, hi: usize) -> Result<ChainComplex> {
        self.extend_to(hi)?;
        let ring = self.module.ring().clone();
        let mut twists = Vec::with_capacity(hi - lo + 1);
        let mut maps = Vec::with_capacity(hi - lo);
        for i in lo..=hi {
            twists.push(self.twists(i).to_vec());
            if i > lo {
                let d = if self.rank(i) == 0 { Vec::new() } else { self.differential(i).to_vec() };
                maps.push(d);
            }
        }
        ChainComplex::free(ring, lo as i64, twists, maps)
    }

    /// The whole computed resolution `F_0 .. F_steps`.
    pub fn to_complex(&mut self) -> Result<ChainComplex> {
        let s = self.steps();
        self.segment(0, s)
    }

    fn window(i: usize) -> (usize, usize) {
        (i.saturating_sub(1), i + 1)
    }

    /// `Ext^i_R(M, N)`.
    pub fn ext(&mut self, n: &GModule, i: usize) -> Result<GModule> {
        let (lo, hi) = Self::window(i);
        self.segment(lo, hi)?.hom_into(n)?.homology(-(i as i64))
    }

    pub fn ext_vanishes(&mut self, n: &GModule, i: usize) -> Result<bool> {
        let (lo, hi) = Self::window(i);
        self.segment(lo, hi)?.hom_into(n)?.homology_is_zero(-(i as i64))
    }

    /// `Tor_i^R(M, N)`.
    pub fn tor(&mut self, n: &GModule, i: usize) -> Result<GModule> {
        let (lo, hi) = Self::window(i);
        self.segment(lo, hi)?.tensor(n)?.homology(i as i64)
    }

    pub fn tor_vanishes(&mut self, n: &GModule, i: usize) -> Result<bool> {
        let (lo, hi) = Self::window(i);
        self.segment(lo, hi)?.tensor(n)?.homology_is_zero(i as i64)
    }
}
