use homograde_core::{FieldSpec, Polynomial, QuotientRing};
use homograde_harness::{run_instance, CheckId, CorpusReport, Instance, ModuleSource, RunConfig, Verdict};

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

#[test]
fn hypersurface_rows() {
    let q = FieldSpec::Rationals;
    let x = Polynomial::variable(0, 2, q);
    let y = Polynomial::variable(1, 2, q);
    let ring = QuotientRing::new(q, names(&["x", "y"]), vec![x.pow(2)]).unwrap();
    let mut inst = Instance::new("r2", "R", ring);
    inst.add_module("R", ModuleSource::Free(vec![0])).unwrap();
    inst.add_module("k", ModuleSource::Residue).unwrap();
    inst.add_module("W", ModuleSource::Canonical).unwrap();
    inst.add_module("Ry", ModuleSource::Quotient(vec![y.clone()])).unwrap();
    inst.add_module("Rx", ModuleSource::Quotient(vec![x.clone()])).unwrap();
    inst.add_pair("p1", "Ry", "R").unwrap();
    inst.add_pair("p2", "Rx", "k").unwrap();
    inst.add_pair("p3", "Ry", "Rx").unwrap();
    let rep = run_instance(&inst, &RunConfig::default());
    assert!(rep.error.is_none());
    assert!(rep.results.iter().all(|r| r.verdict != Verdict::Violated && r.error.is_none()));
    let verdict = |c: CheckId, s: &str| rep.results.iter().find(|r| r.check == c && r.subject == s).unwrap().verdict;
    assert_eq!(verdict(CheckId::IschebeckQpd, "p3"), Verdict::Verified);
    // Ext^i(R/(x), k) never vanishes over this ring, so the budget scan cannot certify P
    assert_eq!(verdict(CheckId::IschebeckQpd, "p2"), Verdict::HypothesesNotMet);
    assert_eq!(verdict(CheckId::DimGradeQid, "k"), Verdict::HypothesesNotMet);
    assert_eq!(verdict(CheckId::TensorCm, "p1"), Verdict::Verified);
    assert_eq!(verdict(CheckId::GradeInequalities, "p1"), Verdict::Verified);
    let totals = CorpusReport::new(vec![rep]).totals;
    assert_eq!(totals.rows, 6 * 5 + 9 * 3);
    assert!(totals.clean());
}
