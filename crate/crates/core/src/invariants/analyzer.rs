//! Per-ring memoizing evaluator for all invariants.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::{koszul_depth_on, minimal_generators_in, ring_depth, CertifiedValue, Grounds, Status};
use crate::complex::ChainComplex;
use crate::error::{AlgebraError, Result};
use crate::functors;
use crate::groebner::Ideal;
use crate::module::{GModule, ModuleOrigin};
use crate::quasi::{certify_quasi_projective_resolution, QuasiVerdict};
use crate::resolution::{Resolution, ResolutionStatus};
use crate::ring::QuotientRing;
use crate::value::ExtInt;

pub type ModuleId = usize;

/// Scan lengths for the semi-decidable invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Ext/Tor vanishing scans.
    pub ext: u32,
    /// Tail length for total reflexivity tests.
    pub gdim: u32,
    /// Bass numbers are checked up to `depth R + bass`.
    pub bass: u32,
    /// Resolution steps for pd; `None` means `depth R + 2`.
    pub res_cap: Option<u32>,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { ext: 10, gdim: 10, bass: 5, res_cap: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tri {
    Yes,
    No,
    Inconclusive,
}

/// Largest number of Koszul generators tried for the qpd certificate.
const KOSZUL_LIMIT: usize = 8;

#[derive(Default)]
struct Memo {
    depth: BTreeMap<ModuleId, CertifiedValue>,
    depth_ext: BTreeMap<ModuleId, i64>,
    dim: BTreeMap<ModuleId, CertifiedValue>,
    ann: BTreeMap<ModuleId, Ideal>,
    pd: BTreeMap<ModuleId, CertifiedValue>,
    gdim: BTreeMap<ModuleId, CertifiedValue>,
    qpd: BTreeMap<ModuleId, CertifiedValue>,
    qid: BTreeMap<ModuleId, CertifiedValue>,
    bass: BTreeMap<ModuleId, Vec<u64>>,
    grade: BTreeMap<(ModuleId, ModuleId), CertifiedValue>,
    ext_sup: BTreeMap<(ModuleId, ModuleId), CertifiedValue>,
    tor_sup: BTreeMap<(ModuleId, ModuleId), CertifiedValue>,
    ext_zero: BTreeMap<(ModuleId, ModuleId, usize), bool>,
    tor_zero: BTreeMap<(ModuleId, ModuleId, usize), bool>,
    tensor: BTreeMap<(ModuleId, ModuleId), ModuleId>,
    hom: BTreeMap<(ModuleId, ModuleId), ModuleId>,
    dual: BTreeMap<ModuleId, ModuleId>,
}

struct Entry {
    module: GModule,
    zero: bool,
}

/// Computes and caches invariants of modules over one ring. Module 0 is
/// `R` itself and module 1 is the residue field.
pub struct Analyzer {
    ring: Arc<QuotientRing>,
    budgets: Budgets,
    depth_ring: i64,
    modules: RefCell<Vec<Entry>>,
    resolutions: RefCell<BTreeMap<ModuleId, Resolution>>,
    memo: RefCell<Memo>,
}

/// All module-level invariants, errors kept per entry.
#[derive(Clone, Debug)]
pub struct ModuleReport {
    pub entries: Vec<(&'static str, Result<CertifiedValue>)>,
}

#[derive(Clone, Debug)]
pub struct PairReport {
    pub entries: Vec<(&'static str, Result<CertifiedValue>)>,
}

fn fin(v: i64) -> ExtInt {
    ExtInt::Finite(v)
}

impl Analyzer {
    pub fn new(ring: Arc<QuotientRing>, budgets: Budgets) -> Result<Self> {
        let depth_ring = ring_depth(&ring)?;
        let a = Analyzer {
            depth_ring,
            budgets,
            modules: RefCell::new(Vec::new()),
            resolutions: RefCell::new(BTreeMap::new()),
            memo: RefCell::new(Memo::default()),
            ring: ring.clone(),
        };
        a.add(&GModule::free(ring.clone(), alloc::vec![0]))?;
        a.add(&GModule::residue_field(ring))?;
        Ok(a)
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn budgets(&self) -> Budgets {
        self.budgets
    }

    pub fn ring_module(&self) -> ModuleId {
        0
    }

    pub fn residue_field(&self) -> ModuleId {
        1
    }

    /// Registers a module (stored minimally presented).
    pub fn add(&self, m: &GModule) -> Result<ModuleId> {
        if **m.ring() != *self.ring {
            return Err(AlgebraError::Structural("module over another ring".into()));
        }
        let p = m.minimal_presentation()?;
        let zero = p.rank() == 0;
        let mut mods = self.modules.borrow_mut();
        mods.push(Entry { module: p, zero });
        Ok(mods.len() - 1)
    }

    pub fn module(&self, id: ModuleId) -> GModule {
        self.modules.borrow()[id].module.clone()
    }

    pub fn is_zero(&self, id: ModuleId) -> bool {
        self.modules.borrow()[id].zero
    }

    fn nonzero(&self, id: ModuleId, what: &str) -> Result<()> {
        if self.is_zero(id) {
            return Err(AlgebraError::Contract(alloc::format!("{} of the zero module", what)));
        }
        Ok(())
    }

    pub fn depth_ring(&self) -> i64 {
        self.depth_ring
    }

    fn memo<K: Ord, V: Clone>(
        &self,
        sel: fn(&mut Memo) -> &mut BTreeMap<K, V>,
        key: K,
        f: impl FnOnce() -> Result<V>,
    ) -> Result<V> {
        let hit = sel(&mut self.memo.borrow_mut()).get(&key).cloned();
        if let Some(v) = hit {
            return Ok(v);
        }
        let v = f()?;
        sel(&mut self.memo.borrow_mut()).insert(key, v.clone());
        Ok(v)
    }

    /// Runs `f` on the resolution of `id`, extended to `steps` first.
    fn with_resolution<T>(
        &self,
        id: ModuleId,
        steps: usize,
        f: impl FnOnce(&mut Resolution) -> Result<T>,
    ) -> Result<T> {
        let taken = self.resolutions.borrow_mut().remove(&id);
        let mut res = match taken {
            Some(r) => r,
            None => Resolution::new(&self.module(id))?,
        };
        let out = res.extend_to(steps).and_then(|_| f(&mut res));
        self.resolutions.borrow_mut().insert(id, res);
        out
    }

    /// Betti numbers `β_0 .. β_steps` (fewer if the resolution ends).
    pub fn betti(&self, id: ModuleId, steps: usize) -> Result<Vec<usize>> {
        self.with_resolution(id, steps, |r| Ok(r.betti().into_iter().take(steps + 1).collect()))
    }

    pub fn resolution_status(&self, id: ModuleId, steps: usize) -> Result<ResolutionStatus> {
        self.with_resolution(id, steps, |r| Ok(r.status()))
    }

    pub fn ext_vanishes(&self, m: ModuleId, n: ModuleId, i: usize) -> Result<bool> {
        self.memo(
            |x| &mut x.ext_zero,
            (m, n, i),
            || {
                let nm = self.module(n);
                self.with_resolution(m, i + 1, |r| r.ext_vanishes(&nm, i))
            },
        )
    }

    pub fn ext_module(&self, m: ModuleId, n: ModuleId, i: usize) -> Result<GModule> {
        let nm = self.module(n);
        self.with_resolution(m, i + 1, |r| r.ext(&nm, i))
    }

    pub fn tor_vanishes(&self, m: ModuleId, n: ModuleId, i: usize) -> Result<bool> {
        self.memo(
            |x| &mut x.tor_zero,
            (m, n, i),
            || {
                let nm = self.module(n);
                self.with_resolution(m, i + 1, |r| r.tor_vanishes(&nm, i))
            },
        )
    }

    pub fn tor_module(&self, m: ModuleId, n: ModuleId, i: usize) -> Result<GModule> {
        let nm = self.module(n);
        self.with_resolution(m, i + 1, |r| r.tor(&nm, i))
    }

    pub fn annihilator(&self, id: ModuleId) -> Result<Ideal> {
        self.memo(|x| &mut x.ann, id, || self.module(id).annihilator())
    }

    pub fn dim(&self, id: ModuleId) -> Result<CertifiedValue> {
        self.memo(
            |x| &mut x.dim,
            id,
            || {
                if self.is_zero(id) {
                    return Ok(CertifiedValue::exact(ExtInt::NegInf, "zero module"));
                }
                let d = self.annihilator(id)?.quotient_dimension();
                Ok(CertifiedValue::exact(d, "dimension of S/ann M from leading monomials"))
            },
        )
    }

    /// `depth M` via Koszul homology on the variables.
    pub fn depth_koszul(&self, id: ModuleId) -> Result<i64> {
        self.nonzero(id, "depth")?;
        let gens = self.ring.maximal_ideal_generators()?;
        koszul_depth_on(&gens, &self.module(id))
    }

    /// `depth M = min {i : Ext^i(k, M) ≠ 0}`.
    pub fn depth_ext(&self, id: ModuleId) -> Result<i64> {
        self.nonzero(id, "depth")?;
        self.memo(
            |x| &mut x.depth_ext,
            id,
            || {
                let bound = self.dim(id)?.value.finite().unwrap_or(0);
                for i in 0..=bound as usize {
                    if !self.ext_vanishes(self.residue_field(), id, i)? {
                        return Ok(i as i64);
                    }
                }
                Err(AlgebraError::Consistency("Ext(k, M) vanishes up to dim M".into()))
            },
        )
    }

    /// Koszul depth, cross-checked against the Ext scan.
    pub fn depth(&self, id: ModuleId) -> Result<CertifiedValue> {
        self.memo(
            |x| &mut x.depth,
            id,
            || {
                let a = self.depth_koszul(id)?;
                let b = self.depth_ext(id)?;
                if a != b {
                    return Err(AlgebraError::Consistency(alloc::format!(
                        "Koszul depth {} differs from Ext depth {}",
                        a,
                        b
                    )));
                }
                Ok(CertifiedValue::exact(fin(a), alloc::format!("Koszul hsup and first nonzero Ext^{}(k, M) agree", a)))
            },
        )
    }

    /// `grade(M, N) = min {i : Ext^i(M, N) ≠ 0}`, checked against
    /// `depth(ann M, N)` from the Koszul complex.
    pub fn grade_pair(&self, m: ModuleId, n: ModuleId) -> Result<CertifiedValue> {
        self.nonzero(m, "grade")?;
        self.nonzero(n, "grade")?;
        self.memo(
            |x| &mut x.grade,
            (m, n),
            || {
                let bound = self.ring.krull_dim().finite().unwrap_or(0) as usize + 1;
                let mut g = None;
                for i in 0..=bound {
                    if !self.ext_vanishes(m, n, i)? {
                        g = Some(i as i64);
                        break;
                    }
                }
                let Some(g) = g else {
                    return Err(AlgebraError::Consistency("Ext(M, N) vanishes up to dim R".into()));
                };
                let k = self.grade_koszul(m, n)?;
                if k != g {
                    return Err(AlgebraError::Consistency(alloc::format!(
                        "Ext grade {} differs from depth(ann M, N) = {}",
                        g,
                        k
                    )));
                }
                Ok(CertifiedValue::exact(fin(g), alloc::format!("first nonzero Ext^{}; depth(ann M, N) = {}", g, k)))
            },
        )
    }

    /// `depth(ann M, N)` from the Koszul complex on generators of `ann M`.
    pub fn grade_koszul(&self, m: ModuleId, n: ModuleId) -> Result<i64> {
        let gens = minimal_generators_in(&self.ring, &self.annihilator(m)?)?;
        koszul_depth_on(&gens, &self.module(n))
    }

    pub fn grade(&self, m: ModuleId) -> Result<CertifiedValue> {
        self.grade_pair(m, self.ring_module())
    }

    /// `pd M`, decided by resolving to step `depth R + 1`.
    pub fn pd(&self, id: ModuleId) -> Result<CertifiedValue> {
        self.memo(
            |x| &mut x.pd,
            id,
            || {
                if self.is_zero(id) {
                    return Ok(CertifiedValue::exact(ExtInt::NegInf, "zero module"));
                }
                let d = self.depth_ring as usize;
                let cap = self.budgets.res_cap.map(|c| c as usize).unwrap_or(d + 2);
                let steps = cap.min(d + 1);
                let (status, len, top) =
                    self.with_resolution(id, steps, |r| Ok((r.status(), r.length(), r.rank(r.steps()))))?;
                match (status, len) {
                    (ResolutionStatus::Terminated, Some(ExtInt::Finite(l))) if l as usize <= d => {
                        Ok(CertifiedValue::exact(fin(l), alloc::format!("resolution terminated at step {}", l)))
                    }
                    (ResolutionStatus::Terminated, _) => {
                        Err(AlgebraError::Consistency("finite projective dimension exceeds depth R".into()))
                    }
                    (ResolutionStatus::Truncated, _) if steps == d + 1 => Ok(CertifiedValue::exact(
                        ExtInt::PosInf,
                        alloc::format!("F_{} has rank {} > 0 beyond depth R = {}", d + 1, top, d),
                    )),
                    (ResolutionStatus::Truncated, _) => Ok(CertifiedValue::lower_bound(
                        fin(steps as i64 + 1),
                        steps as u32,
                        alloc::format!("resolution still running after {} steps", steps),
                    )),
                }
            },
        )
    }

    /// `P_R(M, N) = sup {i : Ext^i(M, N) ≠ 0}`.
    pub fn ext_sup(&self, m: ModuleId, n: ModuleId) -> Result<CertifiedValue> {
        self.nonzero(m, "P")?;
        self.nonzero(n, "P")?;
        self.memo(
            |x| &mut x.ext_sup,
            (m, n),
            || {
                let top_nonzero = |upto: i64| -> Result<Option<i64>> {
                    for i in (0..=upto).rev() {
                        if !self.ext_vanishes(m, n, i as usize)? {
                            return Ok(Some(i));
                        }
                    }
                    Ok(None)
                };
                for route in 0..3 {
                    let (bound, label) = match route {
                        0 => (self.pd(m)?, "finite projective dimension"),
                        1 => (self.qid(n)?, "injective-dimension certificate"),
                        _ if self.module(n).relations().is_empty() => (self.gdim(m)?, "G-dimension certificate"),
                        _ => continue,
                    };
                    let Some(top) = bound.exact_finite() else { continue };
                    let Some(p) = top_nonzero(top)? else {
                        return Err(AlgebraError::Consistency("every Ext below a finite bound vanishes".into()));
                    };
                    return Ok(CertifiedValue::exact(
                        fin(p),
                        alloc::format!("Ext^{} ≠ 0 and Ext^i = 0 for i > {} ({})", p, top, label),
                    )
                    .with_grounds(bound.grounds)
                    .with_label(label));
                }
                let budget = self.budgets.ext;
                let mut last = None;
                for i in 0..=budget as usize {
                    if !self.ext_vanishes(m, n, i)? {
                        last = Some(i as i64);
                    }
                }
                Ok(match last {
                    Some(l) => CertifiedValue::lower_bound(
                        fin(l),
                        budget,
                        alloc::format!("last nonzero Ext^{} within budget {}", l, budget),
                    ),
                    None => CertifiedValue::unknown(ExtInt::NegInf, "no nonzero Ext within budget"),
                })
            },
        )
    }

    /// `q^R(M, N) = sup {i : Tor_i(M, N) ≠ 0}`.
    pub fn tor_sup(&self, m: ModuleId, n: ModuleId) -> Result<CertifiedValue> {
        self.nonzero(m, "q")?;
        self.nonzero(n, "q")?;
        self.memo(
            |x| &mut x.tor_sup,
            (m, n),
            || {
                // Tor is symmetric, so either side may be resolved
                for (a, b) in [(m, n), (n, m)] {
                    if let Some(p) = self.pd(a)?.exact_finite() {
                        for i in (0..=p).rev() {
                            if !self.tor_vanishes(a, b, i as usize)? {
                                return Ok(CertifiedValue::exact(
                                    fin(i),
                                    alloc::format!("Tor_{} ≠ 0 and pd = {} bounds the rest", i, p),
                                ));
                            }
                        }
                        return Err(AlgebraError::Consistency("M ⊗ N vanishes for nonzero modules".into()));
                    }
                }
                let budget = self.budgets.ext;
                let mut last = 0;
                for i in 0..=budget as usize {
                    if !self.tor_vanishes(m, n, i)? {
                        last = i as i64;
                    }
                }
                Ok(CertifiedValue::lower_bound(
                    fin(last),
                    budget,
                    alloc::format!("last nonzero Tor_{} within budget {}", last, budget),
                ))
            },
        )
    }

    /// G-dimension. Finite G-dimension must equal `depth R - depth M`, so a
    /// nonvanishing Ext past that index, or a syzygy that fails to be
    /// reflexive, proves it infinite.
    pub fn gdim(&self, id: ModuleId) -> Result<CertifiedValue> {
        self.nonzero(id, "G-dimension")?;
        self.memo(
            |x| &mut x.gdim,
            id,
            || {
                let pd = self.pd(id)?;
                if let Some(p) = pd.exact_finite() {
                    return Ok(CertifiedValue::exact(fin(p), "equals pd when pd is finite").with_label("finite pd"));
                }
                let g = self.depth_ring - self.depth(id)?.value.finite().unwrap();
                let b = self.budgets.gdim as usize;
                for i in g as usize + 1..=g as usize + b {
                    if !self.ext_vanishes(id, self.ring_module(), i)? {
                        return Ok(CertifiedValue::exact(
                            ExtInt::PosInf,
                            alloc::format!("Ext^{}(M, R) ≠ 0 beyond depth R - depth M = {}", i, g),
                        ));
                    }
                }
                let t = self.with_resolution(id, g as usize, |r| r.syzygy(g as usize))?;
                let bd = functors::biduality(&t)?;
                if !bd.is_iso() {
                    return Ok(CertifiedValue::exact(
                        ExtInt::PosInf,
                        alloc::format!(
                            "syzygy {} is not reflexive (T -> T** injective: {}, surjective: {})",
                            g,
                            bd.injective,
                            bd.surjective
                        ),
                    ));
                }
                let tstar = self.add(&functors::dual(&t)?)?;
                if !self.is_zero(tstar) {
                    for i in 1..=b {
                        if !self.ext_vanishes(tstar, self.ring_module(), i)? {
                            return Ok(CertifiedValue::exact(
                                ExtInt::PosInf,
                                alloc::format!("Ext^{}(T*, R) ≠ 0 for the syzygy T = Ω^{} M", i, g),
                            ));
                        }
                    }
                }
                Ok(CertifiedValue::exact(
                    fin(g),
                    alloc::format!(
                        "Ext^i(M, R) = 0 for {} < i ≤ {}; Ω^{} M reflexive with Ext^i(T*, R) = 0 for i ≤ {}",
                        g,
                        g + b as i64,
                        g,
                        b
                    ),
                )
                .with_grounds(Grounds::Budget(self.budgets.gdim))
                .with_label(alloc::format!("total reflexivity to budget {}", b)))
            },
        )
    }

    /// Quasi-projective dimension.
    pub fn qpd(&self, id: ModuleId) -> Result<CertifiedValue> {
        self.nonzero(id, "qpd")?;
        self.memo(|x| &mut x.qpd, id, || {
            if let Some(p) = self.pd(id)?.exact_finite() {
                return Ok(CertifiedValue::exact(fin(p), "qpd = pd when pd is finite").with_label("finite pd"));
            }
            let m = self.module(id);
            if let Some((j, _)) = m.cyclic_ideal()? {
                let gens = minimal_generators_in(&self.ring, &j)?;
                if !gens.is_empty() && gens.len() <= KOSZUL_LIMIT {
                    let k = ChainComplex::koszul(self.ring.clone(), &gens)?;
                    let cert = certify_quasi_projective_resolution(&k, &m)?;
                    if cert.verdict == QuasiVerdict::Certified {
                        let value = self.depth_ring - self.depth(id)?.value.finite().unwrap();
                        let hsup = *cert.multiplicities.keys().last().unwrap();
                        let gap = gens.len() as i64 - hsup;
                        if value > gap {
                            return Err(AlgebraError::Consistency(alloc::format!(
                                "depth R - depth M = {} exceeds sup - hsup = {} of a quasi-resolution",
                                value,
                                gap
                            )));
                        }
                        return Ok(CertifiedValue::exact(
                            fin(value),
                            alloc::format!(
                                "Koszul complex on {} generators is a quasi-projective resolution ({}); value depth R - depth M",
                                gens.len(),
                                cert.evidence
                            ),
                        )
                        .with_label("Koszul certificate"));
                    }
                }
            }
            let g = self.grade(id)?;
            Ok(CertifiedValue::unknown(g.value, "no certificate; grade M is a lower bound").with_label("lower bound from grade"))
        })
    }

    /// `μ^i(M) = dim_k Ext^i(k, M)` for `0 <= i <= upto`.
    pub fn bass_numbers(&self, id: ModuleId, upto: usize) -> Result<Vec<u64>> {
        let have = self.memo.borrow().bass.get(&id).cloned().unwrap_or_default();
        if have.len() > upto {
            return Ok(have[..=upto].to_vec());
        }
        let mut out = have;
        for i in out.len()..=upto {
            let e = self.ext_module(self.residue_field(), id, i)?;
            out.push(e.rank() as u64);
        }
        self.memo.borrow_mut().bass.insert(id, out.clone());
        Ok(out)
    }

    /// Certificate for finite quasi-injective dimension, through finite
    /// injective dimension: `qid = id = depth R` when `id` is finite.
    pub fn qid(&self, id: ModuleId) -> Result<CertifiedValue> {
        self.nonzero(id, "qid")?;
        self.memo(
            |x| &mut x.qid,
            id,
            || {
                let d = self.depth_ring;
                if self.module(id).origin() == ModuleOrigin::Canonical {
                    return Ok(CertifiedValue::exact(fin(d), "canonical module of a Cohen-Macaulay ring")
                        .with_grounds(Grounds::Construction)
                        .with_label("canonical module"));
                }
                let b = self.budgets.bass;
                let mu = self.bass_numbers(id, d as usize + b as usize)?;
                let tail_zero = mu[d as usize + 1..].iter().all(|&x| x == 0);
                let listing = mu.iter().map(|x| alloc::format!("{}", x)).collect::<Vec<_>>().join(", ");
                if tail_zero && mu.iter().any(|&x| x != 0) {
                    return Ok(CertifiedValue::exact(fin(d), alloc::format!("Bass numbers {}", listing))
                        .with_grounds(Grounds::Budget(b))
                        .with_label("Bass certificate"));
                }
                Ok(CertifiedValue::unknown(ExtInt::NegInf, alloc::format!("Bass numbers {}", listing)))
            },
        )
    }

    pub fn cmd(&self, id: ModuleId) -> Result<CertifiedValue> {
        self.nonzero(id, "cmd")?;
        let dim = self.dim(id)?.value;
        let depth = self.depth(id)?.value;
        Ok(CertifiedValue::exact(dim.sub(depth), alloc::format!("dim {} - depth {}", dim, depth)))
    }

    pub fn is_cohen_macaulay(&self, id: ModuleId) -> Result<bool> {
        Ok(self.cmd(id)?.value == fin(0))
    }

    pub fn is_cm_ring(&self) -> bool {
        self.ring.krull_dim() == fin(self.depth_ring)
    }

    fn compare(&self, q: &CertifiedValue, g: &CertifiedValue) -> Tri {
        match (q.status, g.status) {
            (Status::Exact, Status::Exact) if q.value == g.value => Tri::Yes,
            (Status::Exact, Status::Exact) => Tri::No,
            _ => Tri::Inconclusive,
        }
    }

    /// `qpd M = grade M`.
    pub fn quasi_perfect(&self, id: ModuleId) -> Result<Tri> {
        Ok(self.compare(&self.qpd(id)?, &self.grade(id)?))
    }

    /// `qpd M = grade(M, N)`.
    pub fn n_quasi_perfect(&self, m: ModuleId, n: ModuleId) -> Result<Tri> {
        Ok(self.compare(&self.qpd(m)?, &self.grade_pair(m, n)?))
    }

    /// `Supp M ⊆ Supp L`, i.e. `ann L ⊆ √(ann M)`.
    pub fn supp_contained(&self, m: ModuleId, l: ModuleId) -> Result<bool> {
        self.annihilator(l)?.contained_in_radical_of(&self.annihilator(m)?)
    }

    pub fn tensor(&self, m: ModuleId, n: ModuleId) -> Result<ModuleId> {
        self.memo(|x| &mut x.tensor, (m, n), || self.add(&functors::tensor(&self.module(m), &self.module(n))?))
    }

    pub fn hom(&self, m: ModuleId, n: ModuleId) -> Result<ModuleId> {
        self.memo(|x| &mut x.hom, (m, n), || self.add(&functors::hom(&self.module(m), &self.module(n))?))
    }

    pub fn dual(&self, m: ModuleId) -> Result<ModuleId> {
        self.memo(|x| &mut x.dual, m, || self.add(&functors::dual(&self.module(m))?))
    }

    pub fn module_report(&self, id: ModuleId) -> ModuleReport {
        let entries = alloc::vec![
            ("depth", self.depth(id)),
            ("dim", self.dim(id)),
            ("grade", self.grade(id)),
            ("cmd", self.cmd(id)),
            ("pd", self.pd(id)),
            ("gdim", self.gdim(id)),
            ("qpd", self.qpd(id)),
            ("qid", self.qid(id)),
        ];
        ModuleReport { entries }
    }

    pub fn pair_report(&self, m: ModuleId, n: ModuleId) -> PairReport {
        let entries =
            alloc::vec![("grade", self.grade_pair(m, n)), ("P", self.ext_sup(m, n)), ("q", self.tor_sup(m, n)),];
        PairReport { entries }
    }

    /// Human-readable name of an invariant's evidence source, for reports.
    pub fn describe(&self, id: ModuleId) -> String {
        self.module(id).describe()
    }
}
