#[path = "support/dense.rs"]
mod dense;

use std::sync::Arc;

use homograde_core::{FieldSpec, GModule, Monomial, Polynomial, QuotientRing};
use proptest::prelude::*;

fn names(n: usize) -> Vec<String> {
    ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
}

fn form(f: FieldSpec, n: usize, deg: u32, coefs: &[i64]) -> Polynomial {
    let monos = dense::exponents(n, deg as i32);
    let terms =
        monos.iter().zip(coefs.iter().cycle()).map(|(e, c)| (Monomial::from_exponents(e), f.from_i64(*c))).collect();
    Polynomial::from_terms(n, f, terms).unwrap()
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn polynomial_ring_and_residue_field() {
    let s = QuotientRing::polynomial_ring(FieldSpec::Rationals, names(3));
    let free = GModule::free(s.clone(), vec![0, 2]);
    let k = GModule::residue_field(s.clone());
    for d in 0..=8 {
        let expect = binom(d as u64 + 2, 2) + if d >= 2 { binom(d as u64, 2) } else { 0 };
        assert_eq!(free.hilbert_function(d).unwrap(), expect);
        assert_eq!(dense::hilbert(&free, d), expect);
        assert_eq!(k.hilbert_function(d).unwrap(), u64::from(d == 0));
    }
}

#[test]
fn hypersurface_hilbert_function() {
    // S/(f) with deg f = 2 in three variables: H(d) = 2d + 1
    let f = FieldSpec::prime(32003).unwrap();
    let v = |i| Polynomial::variable(i, 3, f);
    let cone = v(0).mul(&v(1)).unwrap().sub(&v(2).pow(2)).unwrap();
    let r = QuotientRing::new(f, names(3), vec![cone]).unwrap();
    let m = GModule::free(r, vec![0]);
    for d in 0..=8 {
        assert_eq!(m.hilbert_function(d).unwrap(), 2 * d as u64 + 1);
        assert_eq!(dense::hilbert(&m, d), 2 * d as u64 + 1);
    }
}

fn ring(f: FieldSpec, quadrics: &[Vec<i64>]) -> Arc<QuotientRing> {
    let gens = quadrics.iter().map(|c| form(f, 3, 2, c)).filter(|p| !p.is_zero()).collect();
    QuotientRing::new(f, names(3), gens).unwrap()
}

fn coefs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop::sample::select(vec![-2i64, -1, 0, 0, 0, 1, 1, 3]), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn groebner_counting_matches_dense_ranks(
        f in prop::sample::select(vec![FieldSpec::Rationals, FieldSpec::Prime(5), FieldSpec::Prime(32003)]),
        quadrics in prop::collection::vec(coefs(6), 0..3),
        cols in prop::collection::vec(prop::collection::vec(coefs(3), 2), 1..4),
    ) {
        let r = ring(f, &quadrics);
        // two generators in degree 0, relations of linear forms
        let rows: Vec<Vec<Polynomial>> = (0..2)
            .map(|i| cols.iter().map(|c| form(f, 3, 1, &c[i])).collect())
            .collect();
        let m = GModule::from_rows(r, &rows, vec![0, 0]).unwrap();
        for d in 0..=6 {
            prop_assert_eq!(m.hilbert_function(d).unwrap(), dense::hilbert(&m, d), "degree {}", d);
        }
    }

    #[test]
    fn cyclic_modules_match_dense_ranks(
        quadrics in prop::collection::vec(coefs(6), 1..3),
        extra in prop::collection::vec(coefs(3), 1..3),
    ) {
        let r = ring(FieldSpec::Rationals, &quadrics);
        let gens: Vec<Polynomial> = extra.iter().map(|c| form(FieldSpec::Rationals, 3, 1, c)).collect();
        let m = GModule::cyclic(r, &gens).unwrap();
        for d in 0..=8 {
            prop_assert_eq!(m.hilbert_function(d).unwrap(), dense::hilbert(&m, d), "degree {}", d);
        }
    }
}
