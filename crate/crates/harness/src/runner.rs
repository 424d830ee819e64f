//! Runs checks and expectations over a corpus of instances.

use rayon::prelude::*;

use homograde_core::{AlgebraError, Analyzer, Budgets, CertifiedValue, ExtInt, ModuleId, Status};

use crate::checks::{evaluate, CheckId, Context, Subject};
use crate::instance::{Expectation, Expected, Instance, Invariant};
use crate::verdict::Verdict;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub budgets: Budgets,
    /// Checks to run, in this order.
    pub checks: Vec<CheckId>,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { budgets: Budgets::default(), checks: CheckId::ALL.to_vec(), jobs: 0 }
    }
}

/// One row: a check applied to one module or pair.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check: CheckId,
    pub subject: String,
    pub verdict: Verdict,
    pub lhs: Option<CertifiedValue>,
    pub rhs: Option<CertifiedValue>,
    pub evidence: String,
    /// Set when the engine failed; the verdict is then inconclusive.
    pub error: Option<String>,
    /// Verdict annotated in the definition file, if any.
    pub expected: Option<Verdict>,
}

impl CheckResult {
    pub fn matches_expectation(&self) -> bool {
        self.expected.is_none_or(|e| e == self.verdict)
    }
}

#[derive(Clone, Debug)]
pub struct ExpectationResult {
    /// E.g. `qpd(k) = 1` or `check tensor_cm P1 = verified`.
    pub description: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub id: String,
    pub results: Vec<CheckResult>,
    pub expectations: Vec<ExpectationResult>,
    /// The instance could not be set up at all.
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Totals {
    pub rows: usize,
    pub verified: usize,
    pub violated: usize,
    pub inconclusive: usize,
    pub hypotheses_not_met: usize,
    /// Hypotheses-not-met rows that carry a matching annotation.
    pub hypotheses_not_met_expected: usize,
    /// Rows whose verdict came from an engine error (also counted as
    /// inconclusive).
    pub errors: usize,
    pub expectation_failures: usize,
    pub instance_errors: usize,
}

impl Totals {
    pub fn count(&self, v: Verdict) -> usize {
        match v {
            Verdict::Verified => self.verified,
            Verdict::Violated => self.violated,
            Verdict::Inconclusive => self.inconclusive,
            Verdict::HypothesesNotMet => self.hypotheses_not_met,
        }
    }

    /// No violation, no engine error and every expectation met.
    pub fn clean(&self) -> bool {
        self.violated == 0 && self.errors == 0 && self.expectation_failures == 0 && self.instance_errors == 0
    }
}

#[derive(Clone, Debug)]
pub struct CorpusReport {
    pub instances: Vec<InstanceReport>,
    pub totals: Totals,
}

impl CorpusReport {
    pub fn new(instances: Vec<InstanceReport>) -> CorpusReport {
        let mut t = Totals::default();
        for inst in &instances {
            if inst.error.is_some() {
                t.instance_errors += 1;
            }
            for r in &inst.results {
                t.rows += 1;
                match r.verdict {
                    Verdict::Verified => t.verified += 1,
                    Verdict::Violated => t.violated += 1,
                    Verdict::Inconclusive => t.inconclusive += 1,
                    Verdict::HypothesesNotMet => t.hypotheses_not_met += 1,
                }
                if r.verdict == Verdict::HypothesesNotMet && r.expected == Some(Verdict::HypothesesNotMet) {
                    t.hypotheses_not_met_expected += 1;
                }
                if r.error.is_some() {
                    t.errors += 1;
                }
                if !r.matches_expectation() {
                    t.expectation_failures += 1;
                }
            }
            t.expectation_failures += inst.expectations.iter().filter(|e| !e.ok).count();
        }
        CorpusReport { instances, totals: t }
    }
}

/// Whether `v` is what `expected` describes.
pub fn expected_matches(expected: &Expected, v: &CertifiedValue) -> bool {
    match expected {
        Expected::Exact(x) => v.status == Status::Exact && v.value == *x,
        Expected::AtLeast(x) => matches!(v.status, Status::LowerBound | Status::Unknown) && v.value == *x,
        Expected::Unknown => v.status == Status::Unknown && v.value == ExtInt::NegInf,
    }
}

/// Computes `invariant(args)` for modules already registered in `a`.
pub fn evaluate_invariant(
    a: &Analyzer,
    invariant: Invariant,
    args: &[ModuleId],
) -> Result<CertifiedValue, AlgebraError> {
    if !invariant.arities().contains(&args.len()) {
        return Err(AlgebraError::Contract(format!("{} takes {:?} arguments", invariant.name(), invariant.arities())));
    }
    let m = args[0];
    match invariant {
        Invariant::Depth => a.depth(m),
        Invariant::Dim => a.dim(m),
        Invariant::Grade if args.len() == 2 => a.grade_pair(m, args[1]),
        Invariant::Grade => a.grade(m),
        Invariant::Cmd => a.cmd(m),
        Invariant::Pd => a.pd(m),
        Invariant::Gdim => a.gdim(m),
        Invariant::Qpd => a.qpd(m),
        Invariant::Qid => a.qid(m),
        Invariant::ExtSup => a.ext_sup(m, args[1]),
        Invariant::TorSup => a.tor_sup(m, args[1]),
    }
}

/// Registers the modules of `inst` in a fresh analyzer.
pub fn prepare(inst: &Instance, budgets: Budgets) -> Result<(Analyzer, Vec<(String, ModuleId)>), AlgebraError> {
    let a = Analyzer::new(inst.ring.clone(), budgets)?;
    let mut ids = Vec::with_capacity(inst.modules.len());
    for m in &inst.modules {
        ids.push((m.name.clone(), a.add(&m.module)?));
    }
    Ok((a, ids))
}

fn row(check: CheckId, ctx: &Context<'_>, subject: Subject<'_>, name: &str, expected: Option<Verdict>) -> CheckResult {
    match evaluate(check, ctx, subject) {
        Ok(ev) => {
            let (lhs, rhs) = match ev.headline() {
                Some((l, r)) => (Some(l.to_certified()), Some(r.to_certified())),
                None => (None, None),
            };
            CheckResult {
                check,
                subject: name.to_string(),
                verdict: ev.verdict,
                lhs,
                rhs,
                evidence: ev.evidence(),
                error: None,
                expected,
            }
        }
        Err(e) => CheckResult {
            check,
            subject: name.to_string(),
            verdict: Verdict::Inconclusive,
            lhs: None,
            rhs: None,
            evidence: String::new(),
            error: Some(e.to_string()),
            expected,
        },
    }
}

pub fn run_instance(inst: &Instance, cfg: &RunConfig) -> InstanceReport {
    let (a, ids) = match prepare(inst, cfg.budgets) {
        Ok(x) => x,
        Err(e) => {
            return InstanceReport {
                id: inst.id.clone(),
                results: Vec::new(),
                expectations: Vec::new(),
                error: Some(e.to_string()),
            }
        }
    };
    let id_of = |name: &str| ids.iter().find(|(n, _)| n == name).map(|(_, id)| *id);
    let ctx = Context { analyzer: &a, modules: ids.clone() };
    let mut results = Vec::new();
    for &check in &cfg.checks {
        if check.applies_to_modules() {
            for (name, id) in &ids {
                if inst.in_scope(name, check) {
                    let s = Subject::Module { id: *id, name };
                    results.push(row(check, &ctx, s, name, inst.expected_verdict(check, name)));
                }
            }
        }
        if check.applies_to_pairs() {
            for p in &inst.pairs {
                if inst.in_scope(&p.name, check) {
                    let (m, n) = (id_of(&p.m).expect("validated pair"), id_of(&p.n).expect("validated pair"));
                    let s = Subject::Pair { m, n, m_name: &p.m, n_name: &p.n };
                    results.push(row(check, &ctx, s, &p.name, inst.expected_verdict(check, &p.name)));
                }
            }
        }
    }

    let mut expectations = Vec::new();
    for e in &inst.expectations {
        if let Expectation::Value { invariant, args, expected } = e {
            let description = format!("{}({}) {}", invariant.name(), args.join(", "), expected);
            let arg_ids: Vec<ModuleId> = args.iter().map(|n| id_of(n).expect("validated argument")).collect();
            let (actual, ok) = match evaluate_invariant(&a, *invariant, &arg_ids) {
                Ok(v) => (v.to_string(), expected_matches(expected, &v)),
                Err(err) => (format!("error: {}", err), false),
            };
            expectations.push(ExpectationResult { description, actual, ok });
        }
    }
    InstanceReport { id: inst.id.clone(), results, expectations, error: None }
}

/// Runs every instance, in parallel across instances. Output order follows
/// input order regardless of scheduling.
pub fn run_corpus(instances: &[Instance], cfg: &RunConfig) -> CorpusReport {
    let go = || instances.par_iter().map(|i| run_instance(i, cfg)).collect::<Vec<_>>();
    let reports = if cfg.jobs > 0 {
        match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build() {
            Ok(pool) => pool.install(go),
            Err(_) => go(),
        }
    } else {
        go()
    };
    CorpusReport::new(reports)
}
