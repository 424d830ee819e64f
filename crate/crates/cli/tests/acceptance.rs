//! Acceptance criteria over the shipped corpus. Prints one PASS/FAIL line
//! per criterion (run with `--nocapture` to see them on success).

#[path = "../../core/tests/support/dense.rs"]
mod dense;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use homograde::{load_corpus, parse_definition, shipped_corpus, to_json, ReportConfig};
use homograde_core::{Analyzer, Budgets, CertifiedValue, ExtInt, ModuleId, ResolutionStatus, Status};
use homograde_harness::{prepare, run_corpus, CheckId, CorpusReport, Instance, ModuleSource, RunConfig, Verdict};

const RUNTIME_LIMIT: Duration = Duration::from_secs(60);
const HNM_LIMIT: f64 = 0.05;
const EXT_RANGE: usize = 10;
const HILBERT_DEGREES: i32 = 8;

/// Rings every corpus must contain, by their presentation.
const RINGS: [(&str, &str); 6] = [
    ("R0", "poly[x, y]"),
    ("R1", "poly[x] / (x^2)"),
    ("R2", "poly[x, y] / (x^2)"),
    ("R3", "poly[x, y] / (x*y)"),
    ("R4", "poly[x, y, z] / (x^2, y^2)"),
    ("R5", "poly[x, y] / (x^2, x*y, y^2)"),
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Suite) -> Outcome);

struct Suite {
    instances: Vec<Instance>,
    report: CorpusReport,
    json: String,
    elapsed: Duration,
}

impl Suite {
    fn load() -> Suite {
        let instances = load_corpus(&shipped_corpus()).expect("shipped corpus parses");
        let cfg = RunConfig::default();
        let start = Instant::now();
        let report = run_corpus(&instances, &cfg);
        let elapsed = start.elapsed();
        let json = to_json(&report, &report_config(&cfg));
        Suite { instances, report, json, elapsed }
    }

    /// The corpus instance over the ring `poly[..] / (..)`.
    fn ring(&self, label: &str) -> Result<&Instance, String> {
        let text = RINGS.iter().find(|(l, _)| *l == label).unwrap().1;
        let wanted = parse_definition(&format!("field Q\nring R = {}\n", text), label).unwrap().ring;
        self.instances
            .iter()
            .find(|i| *i.ring == *wanted)
            .ok_or_else(|| format!("no corpus instance over {} = {}", label, text))
    }

    fn verdict(&self, inst: &Instance, check: CheckId, subject: &str) -> Option<Verdict> {
        let ir = self.report.instances.iter().find(|r| r.id == inst.id)?;
        ir.results.iter().find(|r| r.check == check && r.subject == subject).map(|r| r.verdict)
    }
}

fn report_config(cfg: &RunConfig) -> ReportConfig {
    ReportConfig { budgets: cfg.budgets, checks: cfg.checks.clone() }
}

struct Prepared {
    analyzer: Analyzer,
    modules: Vec<(String, ModuleId)>,
}

impl Prepared {
    fn new(inst: &Instance) -> Prepared {
        let (analyzer, modules) = prepare(inst, Budgets::default()).expect("instance builds");
        Prepared { analyzer, modules }
    }

    fn id(&self, name: &str) -> ModuleId {
        self.modules.iter().find(|(n, _)| n == name).unwrap().1
    }

    fn nonzero(&self) -> Vec<(String, ModuleId)> {
        self.modules.iter().filter(|(_, id)| !self.analyzer.is_zero(*id)).cloned().collect()
    }

    fn by_source(&self, inst: &Instance, pick: impl Fn(&ModuleSource) -> bool) -> Option<ModuleId> {
        inst.modules.iter().find(|m| pick(&m.source)).map(|m| self.id(&m.name))
    }

    fn canonical(&self, inst: &Instance) -> Option<ModuleId> {
        self.by_source(inst, |s| matches!(s, ModuleSource::Canonical))
    }
}

fn exact(v: &CertifiedValue, what: &str) -> Result<ExtInt, String> {
    if v.status == Status::Exact {
        Ok(v.value)
    } else {
        Err(format!("{} is not exact: {}", what, v))
    }
}

fn finite(v: &CertifiedValue, what: &str) -> Result<i64, String> {
    v.exact_finite().ok_or_else(|| format!("{} is not exact and finite: {}", what, v))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn coverage(s: &Suite) -> Outcome {
    for (label, _) in RINGS {
        let inst = s.ring(label)?;
        let p = Prepared::new(inst);
        let has = |pick: &dyn Fn(&ModuleSource) -> bool| inst.modules.iter().any(|m| pick(&m.source));
        ensure(has(&|m| matches!(m, ModuleSource::Free(t) if t == &vec![0])), || format!("{}: no R", label))?;
        ensure(has(&|m| matches!(m, ModuleSource::Residue)), || format!("{}: no k", label))?;
        ensure(has(&|m| matches!(m, ModuleSource::Canonical)), || format!("{}: no canonical module", label))?;
        let cyclic_non_free = inst.modules.iter().any(|m| {
            matches!(m.source, ModuleSource::Quotient(_) | ModuleSource::Residue)
                && !m.module.is_free().unwrap()
                && !p.analyzer.is_zero(p.id(&m.name))
        });
        ensure(cyclic_non_free, || format!("{}: no cyclic non-free module", label))?;
    }
    let t = &s.report.totals;
    ensure(t.violated == 0, || format!("{} violated rows", t.violated))?;
    ensure(t.errors == 0 && t.instance_errors == 0, || format!("{} engine errors", t.errors + t.instance_errors))?;
    ensure(t.expectation_failures == 0, || format!("{} expectation failures", t.expectation_failures))?;
    let share = t.hypotheses_not_met as f64 / t.rows as f64;
    ensure(share <= HNM_LIMIT, || format!("hypotheses-not-met share {:.1}%", 100.0 * share))?;
    ensure(t.hypotheses_not_met_expected == t.hypotheses_not_met, || {
        format!(
            "{} of {} hypotheses-not-met rows unannotated",
            t.hypotheses_not_met - t.hypotheses_not_met_expected,
            t.hypotheses_not_met
        )
    })?;
    ensure(s.elapsed < RUNTIME_LIMIT, || format!("full run took {:.1?}", s.elapsed))?;
    Ok(format!(
        "{} instances, {} rows, 0 violated, {} hypotheses-not-met ({:.1}%, all annotated), {:.2?}",
        s.instances.len(),
        t.rows,
        t.hypotheses_not_met,
        100.0 * share,
        s.elapsed
    ))
}

fn ischebeck_on_qpd(s: &Suite) -> Outcome {
    let mut pairs = 0;
    for inst in &s.instances {
        let p = Prepared::new(inst);
        let a = &p.analyzer;
        let depth_r = a.depth_ring();
        for (mn, m) in p.nonzero() {
            let Some(qpd) = e(a.qpd(m))?.exact_finite() else { continue };
            let depth_m = finite(&e(a.depth(m))?, "depth")?;
            for (nn, n) in p.nonzero() {
                let pv = e(a.ext_sup(m, n))?;
                if pv.status != Status::Exact {
                    continue;
                }
                ensure(pv.value == ExtInt::Finite(qpd) && qpd == depth_r - depth_m, || {
                    format!(
                        "{}: P({}, {}) = {}, qpd = {}, depth R - depth M = {}",
                        inst.id,
                        mn,
                        nn,
                        pv,
                        qpd,
                        depth_r - depth_m
                    )
                })?;
                pairs += 1;
            }
        }
    }
    ensure(pairs > 0, || "no pair with exact P and finite qpd".into())?;
    Ok(format!("P = qpd = depth R - depth M on {} pairs", pairs))
}

fn canonical_module_formula(s: &Suite) -> Outcome {
    let mut rows = 0;
    for inst in &s.instances {
        let p = Prepared::new(inst);
        let a = &p.analyzer;
        if !a.is_cm_ring() {
            continue;
        }
        let w =
            p.canonical(inst).ok_or_else(|| format!("{}: Cohen-Macaulay ring without a canonical module", inst.id))?;
        for (mn, m) in p.nonzero() {
            let pv = exact(&e(a.ext_sup(m, w))?, "P(M, W)")?;
            let want = a.depth_ring() - finite(&e(a.depth(m))?, "depth")?;
            ensure(pv == ExtInt::Finite(want), || format!("{}: P({}, W) = {}, expected {}", inst.id, mn, pv, want))?;
            rows += 1;
        }
    }
    let mut named = Vec::new();
    for label in ["R0", "R2", "R4", "R5"] {
        let inst = s.ring(label)?;
        let p = Prepared::new(inst);
        let a = &p.analyzer;
        let w = p.canonical(inst).unwrap();
        let pv = exact(&e(a.ext_sup(a.residue_field(), w))?, "P(k, W)")?;
        ensure(pv == ExtInt::Finite(a.depth_ring()), || format!("{}: P(k, W) = {}", label, pv))?;
        named.push(format!("{}:{}", label, pv));
    }
    Ok(format!("{} modules over Cohen-Macaulay rings; P(k, W) = depth R on {}", rows, named.join(" ")))
}

fn grade_and_depth_formula(s: &Suite) -> Outcome {
    let mut modules = 0;
    for inst in &s.instances {
        let p = Prepared::new(inst);
        let a = &p.analyzer;
        for (mn, m) in p.nonzero() {
            let Some(qpd) = e(a.qpd(m))?.exact_finite() else { continue };
            let grade = exact(&e(a.grade(m))?, "grade")?;
            let depth = finite(&e(a.depth(m))?, "depth")?;
            ensure(grade <= ExtInt::Finite(qpd), || format!("{}: grade {} = {} > qpd {}", inst.id, mn, grade, qpd))?;
            ensure(qpd == a.depth_ring() - depth, || format!("{}: qpd {} = {}, depth {}", inst.id, mn, qpd, depth))?;
            modules += 1;
        }
    }
    ensure(modules > 0, || "no module with finite qpd".into())?;
    Ok(format!("grade <= qpd = depth R - depth M on {} modules", modules))
}

fn canonical_dimension(s: &Suite) -> Outcome {
    let mut rings = Vec::new();
    for inst in &s.instances {
        let p = Prepared::new(inst);
        let a = &p.analyzer;
        if !a.is_cm_ring() {
            continue;
        }
        let w = p.canonical(inst).unwrap();
        let dim = finite(&e(a.dim(w))?, "dim W")?;
        let grade = finite(&e(a.grade(w))?, "grade W")?;
        ensure(dim == a.depth_ring() - grade, || format!("{}: dim W = {}, grade W = {}", inst.id, dim, grade))?;
        rings.push(inst.id.clone());
    }
    Ok(format!("dim W = depth R - grade W on {} rings", rings.len()))
}

fn dual_numbers(s: &Suite) -> Outcome {
    let inst = s.ring("R1")?;
    let p = Prepared::new(inst);
    let a = &p.analyzer;
    let k = a.residue_field();
    for i in 0..=EXT_RANGE {
        let ext = e(a.ext_module(k, k, i))?;
        let len = e(ext.length())?;
        ensure(len == 1, || format!("Ext^{}(k, k) has length {}", i, len))?;
    }
    let ones = vec![1usize; EXT_RANGE + 1];
    ensure(e(a.betti(k, EXT_RANGE))? == ones, || "Betti numbers of k are not all 1".into())?;
    let bass: Vec<usize> = e(a.bass_numbers(k, EXT_RANGE))?.into_iter().map(|b| b as usize).collect();
    ensure(bass == ones, || format!("Bass numbers of k: {:?}", bass))?;
    for ext in [4u32, 10, 12] {
        let (b, ids) = e(prepare(inst, Budgets { ext, ..Budgets::default() }))?;
        let kk = ids.iter().find(|(n, _)| n == "k").map(|x| x.1).unwrap_or(b.residue_field());
        let pv = e(b.ext_sup(kk, kk))?;
        ensure(pv.status == Status::LowerBound && pv.value == ExtInt::Finite(ext as i64), || {
            format!("budget {}: P(k, k) = {}", ext, pv)
        })?;
    }
    let pair = inst.pairs.iter().find(|q| q.m == "k" && q.n == "k").ok_or("no pair (k, k)")?;
    let v = s.verdict(inst, CheckId::IschebeckQpd, &pair.name);
    ensure(v == Some(Verdict::HypothesesNotMet), || format!("ischebeck_qpd on (k, k): {:?}", v))?;
    Ok(format!(
        "Ext^i(k, k) = k for i <= {}; P(k, k) >= budget at 4, 10, 12; ischebeck_qpd hypotheses-not-met",
        EXT_RANGE
    ))
}

fn two_oracles(s: &Suite) -> Outcome {
    let (mut depths, mut grades, mut hilbert) = (0, 0, 0);
    for inst in &s.instances {
        let p = Prepared::new(inst);
        let a = &p.analyzer;
        for (mn, m) in p.nonzero() {
            let (kz, ex) = (e(a.depth_koszul(m))?, e(a.depth_ext(m))?);
            ensure(kz == ex, || format!("{}: depth {} Koszul {} vs Ext {}", inst.id, mn, kz, ex))?;
            depths += 1;
            for (nn, n) in p.nonzero() {
                let scan = finite(&e(a.grade_pair(m, n))?, "grade")?;
                let kz = e(a.grade_koszul(m, n))?;
                ensure(scan == kz, || format!("{}: grade({}, {}) Ext {} vs Koszul {}", inst.id, mn, nn, scan, kz))?;
                grades += 1;
            }
        }
        for m in &inst.modules {
            for d in 0..=HILBERT_DEGREES {
                let gb = e(m.module.hilbert_function(d))?;
                let dense = dense::hilbert(&m.module, d);
                ensure(gb == dense, || {
                    format!("{}: H({}, {}) = {} by counting, {} by ranks", inst.id, m.name, d, gb, dense)
                })?;
                hilbert += 1;
            }
        }
    }
    Ok(format!("{} depths, {} grades, {} Hilbert values agree", depths, grades, hilbert))
}

fn depth_formula_instance(s: &Suite) -> Outcome {
    let inst = s.ring("R2")?;
    let p = Prepared::new(inst);
    let a = &p.analyzer;
    let var = |i: usize| inst.ring.variable(i);
    let find = |i: usize| p.by_source(inst, |src| matches!(src, ModuleSource::Quotient(g) if g == &vec![var(i)]));
    let (m, n) = (find(1).ok_or("no R/(y)")?, find(0).ok_or("no R/(x)")?);
    let q = exact(&e(a.tor_sup(m, n))?, "q")?;
    ensure(q == ExtInt::Finite(0), || format!("q(R/(y), R/(x)) = {}", q))?;
    let t = e(a.tensor(m, n))?;
    let d = |id| finite(&a.depth(id).unwrap(), "depth");
    let (dm, dn, dt) = (d(m)?, d(n)?, d(t)?);
    ensure((dm, dn, a.depth_ring(), dt) == (0, 1, 1, 0), || {
        format!("depths M {} N {} R {} M(x)N {}", dm, dn, a.depth_ring(), dt)
    })?;
    let names = |id| p.modules.iter().find(|(_, x)| *x == id).unwrap().0.clone();
    let pair =
        inst.pairs.iter().find(|q| q.m == names(m) && q.n == names(n)).ok_or("pair (R/(y), R/(x)) not declared")?;
    let v = s.verdict(inst, CheckId::TensorCm, &pair.name);
    ensure(v == Some(Verdict::Verified), || format!("tensor_cm: {:?}", v))?;
    Ok(format!("q = 0, {} + {} = {} + {}, tensor_cm verified", dm, dn, a.depth_ring(), dt))
}

fn resolutions(s: &Suite) -> Outcome {
    // fresh analyzers, so no longer cached resolution answers for them
    let fresh =
        |label| -> Result<Analyzer, String> { e(Analyzer::new(s.ring(label)?.ring.clone(), Budgets::default())) };
    let a = fresh("R0")?;
    let k = a.residue_field();
    let betti = e(a.betti(k, 4))?;
    ensure(betti == [1, 2, 1], || format!("Betti numbers of k over R0: {:?}", betti))?;
    ensure(e(a.resolution_status(k, 4))? == ResolutionStatus::Terminated, || {
        "R0: resolution of k does not end".into()
    })?;
    for label in ["R1", "R2"] {
        let a = fresh(label)?;
        let k = a.residue_field();
        let step = a.depth_ring() as usize + 1;
        let status = e(a.resolution_status(k, step))?;
        let betti = e(a.betti(k, step))?;
        ensure(status == ResolutionStatus::Truncated && betti.len() == step + 1 && betti[step] > 0, || {
            format!("{}: {:?} with Betti {:?} at step {}", label, status, betti, step)
        })?;
        let pd = exact(&e(a.pd(k))?, "pd k")?;
        ensure(pd == ExtInt::PosInf, || format!("{}: pd k = {}", label, pd))?;
    }
    Ok("k over R0: (1, 2, 1), terminated; R1, R2: F_{depth R + 1} != 0 and pd k = inf (exact)".into())
}

fn determinism(s: &Suite) -> Outcome {
    let cfg = RunConfig::default();
    let again = to_json(&run_corpus(&s.instances, &cfg), &report_config(&cfg));
    ensure(again == s.json, || "second full run differs".into())?;
    let serial = RunConfig { jobs: 1, ..RunConfig::default() };
    let third = to_json(&run_corpus(&s.instances, &serial), &report_config(&serial));
    ensure(third == s.json, || "single-threaded run differs".into())?;
    Ok(format!("{} bytes, identical across runs and thread counts", s.json.len()))
}

#[test]
fn acceptance() {
    let suite = Suite::load();
    let criteria: [Criterion; 10] = [
        ("corpus coverage and full verification", coverage),
        ("P = qpd = depth R - depth M", ischebeck_on_qpd),
        ("P(M, W) = depth R - depth M on Cohen-Macaulay rings", canonical_module_formula),
        ("grade <= qpd and qpd = depth R - depth M", grade_and_depth_formula),
        ("dim W = depth R - grade W", canonical_dimension),
        ("dual numbers: Ext(k, k) never stops", dual_numbers),
        ("two oracles agree", two_oracles),
        ("depth formula on R/(y), R/(x)", depth_formula_instance),
        ("resolution engine", resolutions),
        ("deterministic JSON", determinism),
    ];
    println!();
    let mut failed = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&suite))).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {}: {}", i + 1, title, detail),
            Err(why) => {
                println!("FAIL {:>2} {}: {}", i + 1, title, why);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
