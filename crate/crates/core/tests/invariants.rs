//! Small rings whose invariants are known by hand.

use std::sync::Arc;

use homograde_core::{
    canonical_module, Analyzer, Budgets, CertifiedValue, ExtInt, FieldSpec, GModule, ModuleId, Polynomial,
    QuotientRing, Status,
};
use ExtInt::{Finite, PosInf};

const Q: FieldSpec = FieldSpec::Rationals;

fn ring(n: usize, gens: impl Fn(&dyn Fn(usize) -> Polynomial) -> Vec<Polynomial>) -> Arc<QuotientRing> {
    let v = |i| Polynomial::variable(i, n, Q);
    let names = ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect();
    QuotientRing::new(Q, names, gens(&v)).unwrap()
}

fn exact(c: CertifiedValue) -> ExtInt {
    assert_eq!(c.status, Status::Exact, "{}", c);
    c.value
}

fn cyclic(a: &Analyzer, gens: &[Polynomial]) -> ModuleId {
    a.add(&GModule::cyclic(a.ring().clone(), gens).unwrap()).unwrap()
}

#[test]
fn plane() {
    let a = Analyzer::new(ring(2, |_| vec![]), Budgets::default()).unwrap();
    let (r, k) = (a.ring_module(), a.residue_field());
    assert_eq!(a.depth_ring(), 2);
    assert_eq!(exact(a.pd(k).unwrap()), Finite(2));
    assert_eq!(exact(a.gdim(k).unwrap()), Finite(2));
    assert_eq!(exact(a.qpd(k).unwrap()), Finite(2));
    assert_eq!(exact(a.ext_sup(k, r).unwrap()), Finite(2));
    assert_eq!(exact(a.grade(k).unwrap()), Finite(2));
    assert_eq!(a.betti(k, 4).unwrap(), vec![1, 2, 1]);
    assert!(a.is_cm_ring());
}

#[test]
fn double_line() {
    let a = Analyzer::new(ring(2, |v| vec![v(0).pow(2)]), Budgets::default()).unwrap();
    let (r, k) = (a.ring_module(), a.residue_field());
    let x = Polynomial::variable(0, 2, Q);
    let y = Polynomial::variable(1, 2, Q);
    let ry = cyclic(&a, std::slice::from_ref(&y));
    let rx = cyclic(&a, std::slice::from_ref(&x));
    assert_eq!(a.depth_ring(), 1);
    assert_eq!(exact(a.depth(k).unwrap()), Finite(0));
    assert_eq!(exact(a.depth(ry).unwrap()), Finite(0));
    assert_eq!(exact(a.depth(rx).unwrap()), Finite(1));
    assert_eq!(exact(a.pd(k).unwrap()), PosInf);
    assert_eq!(exact(a.pd(ry).unwrap()), Finite(1));
    assert_eq!(exact(a.pd(rx).unwrap()), PosInf);
    // the Koszul complex on x resolves R/(x) quasi-projectively
    assert_eq!(exact(a.qpd(rx).unwrap()), Finite(0));
    assert_eq!(exact(a.qpd(k).unwrap()), Finite(1));
    assert_eq!(exact(a.gdim(k).unwrap()), Finite(1));
    assert_eq!(exact(a.grade(k).unwrap()), Finite(1));
    assert_eq!(exact(a.ext_sup(ry, r).unwrap()), Finite(1));
    assert_eq!(exact(a.tor_sup(ry, rx).unwrap()), Finite(0));
    // y is regular on R/(x) = k[y]
    assert_eq!(exact(a.grade_pair(ry, rx).unwrap()), Finite(1));
    assert_eq!(a.grade_koszul(rx, r).unwrap(), 0);
    assert_eq!(a.betti(k, 4).unwrap(), vec![1, 2, 2, 2, 2]);
}

#[test]
fn dual_numbers() {
    let a = Analyzer::new(ring(1, |v| vec![v(0).pow(2)]), Budgets::default()).unwrap();
    let k = a.residue_field();
    for i in 0..=6 {
        let e = a.ext_module(k, k, i).unwrap();
        assert_eq!(e.length().unwrap(), 1, "Ext^{}", i);
    }
    assert_eq!(a.bass_numbers(k, 6).unwrap(), vec![1; 7]);
    assert_eq!(exact(a.qpd(k).unwrap()), Finite(0));
    let p = a.ext_sup(k, k).unwrap();
    assert_eq!((p.status, p.value), (Status::LowerBound, Finite(10)));
    assert!(!p.is_firm());
}

#[test]
fn fat_point() {
    let a = Analyzer::new(ring(2, |v| vec![v(0).pow(2), v(0).mul(&v(1)).unwrap(), v(1).pow(2)]), Budgets::default())
        .unwrap();
    let k = a.residue_field();
    // not Gorenstein, so k is not totally reflexive and has no finite G-dimension
    assert_eq!(exact(a.gdim(k).unwrap()), PosInf);
    let w = a.add(&canonical_module(a.ring()).unwrap()).unwrap();
    assert_eq!(exact(a.qid(w).unwrap()), Finite(0));
    assert_eq!(exact(a.ext_sup(k, w).unwrap()), Finite(0));
    assert_eq!(a.module(w).hilbert_function(-1).unwrap() + a.module(w).hilbert_function(0).unwrap(), 3);
}

#[test]
fn cohen_macaulay_detection() {
    let cross = Analyzer::new(ring(2, |v| vec![v(0).mul(&v(1)).unwrap()]), Budgets::default()).unwrap();
    assert!(cross.is_cm_ring());
    assert_eq!(exact(cross.cmd(cross.residue_field()).unwrap()), Finite(0));
    let embedded = Analyzer::new(ring(2, |v| vec![v(0).pow(2), v(0).mul(&v(1)).unwrap()]), Budgets::default()).unwrap();
    assert!(!embedded.is_cm_ring());
    assert_eq!(embedded.depth_ring(), 0);
    assert_eq!(exact(embedded.dim(embedded.ring_module()).unwrap()), Finite(1));
    assert_eq!(exact(embedded.cmd(embedded.ring_module()).unwrap()), Finite(1));
}

#[test]
fn cone_over_a_prime_field() {
    let f = FieldSpec::prime(32003).unwrap();
    let v = |i| Polynomial::variable(i, 3, f);
    let cone = v(0).mul(&v(1)).unwrap().sub(&v(2).pow(2)).unwrap();
    let ring = QuotientRing::new(f, vec!["x".into(), "y".into(), "z".into()], vec![cone]).unwrap();
    let a = Analyzer::new(ring, Budgets::default()).unwrap();
    let p = a.add(&GModule::cyclic(a.ring().clone(), &[v(0), v(2)]).unwrap()).unwrap();
    assert_eq!(a.depth_ring(), 2);
    assert_eq!(exact(a.depth(p).unwrap()), Finite(1));
    assert_eq!(exact(a.pd(p).unwrap()), PosInf);
    assert_eq!(exact(a.qpd(p).unwrap()), Finite(1));
    assert_eq!(exact(a.gdim(p).unwrap()), Finite(1));
}
