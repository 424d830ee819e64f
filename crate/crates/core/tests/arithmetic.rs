use std::cmp::Ordering;

use homograde_core::{AlgebraError, FieldSpec, Monomial, MonomialOrder, Polynomial, QuotientRing, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Scalar {
    FieldSpec::Rationals.fraction(&BigInt::from(n), &BigInt::from(d)).unwrap()
}

fn as_ratio(s: &Scalar) -> BigRational {
    let (n, d) = s.to_fraction();
    BigRational::new_raw(n, d)
}

fn big_ratio() -> impl Strategy<Value = (i64, i64)> {
    (any::<i64>(), any::<i64>()).prop_filter("nonzero denominator", |(_, d)| *d != 0)
}

proptest! {
    #[test]
    fn rationals_match_bigrational((an, ad) in big_ratio(), (bn, bd) in big_ratio()) {
        let (a, b) = (q(an, ad), q(bn, bd));
        let (ra, rb) = (BigRational::new(an.into(), ad.into()), BigRational::new(bn.into(), bd.into()));
        // stored fractions are already reduced with a positive denominator
        prop_assert_eq!(as_ratio(&a), ra.clone());
        prop_assert_eq!(as_ratio(&a.add(&b)), &ra + &rb);
        prop_assert_eq!(as_ratio(&a.sub(&b)), &ra - &rb);
        prop_assert_eq!(as_ratio(&a.mul(&b)), &ra * &rb);
        prop_assert_eq!(as_ratio(&a.neg()), -ra.clone());
        if !rb.is_zero() {
            prop_assert_eq!(as_ratio(&a.div(&b)), &ra / &rb);
            prop_assert_eq!(as_ratio(&b.inv()), rb.recip());
        }
        prop_assert_eq!(a.is_zero(), ra.is_zero());
    }

    #[test]
    fn prime_fields_match_modular_arithmetic(
        p in prop::sample::select(vec![3u64, 5, 7, 101, 32003, 65521, 2147483647]),
        a in any::<i64>(),
        b in any::<i64>(),
    ) {
        let f = FieldSpec::prime(p).unwrap();
        let m = |x: i128| -> BigInt { BigInt::from(x.rem_euclid(p as i128)) };
        let (sa, sb) = (f.from_i64(a), f.from_i64(b));
        let one = BigInt::from(1);
        prop_assert_eq!(sa.to_fraction(), (m(a as i128), one.clone()));
        prop_assert_eq!(sa.add(&sb).to_fraction().0, m(a as i128 + b as i128));
        prop_assert_eq!(sa.sub(&sb).to_fraction().0, m(a as i128 - b as i128));
        prop_assert_eq!(sa.mul(&sb).to_fraction().0, m((a as i128).rem_euclid(p as i128) * (b as i128).rem_euclid(p as i128)));
        if !sb.is_zero() {
            prop_assert!(sb.mul(&sb.inv()).is_one());
            prop_assert_eq!(sa.div(&sb).mul(&sb), sa);
        }
    }
}

#[test]
fn fractions_in_prime_fields() {
    let f = FieldSpec::prime(7).unwrap();
    let half = f.fraction(&BigInt::from(1), &BigInt::from(2)).unwrap();
    assert_eq!(half.to_fraction().0, BigInt::from(4));
    assert!(f.fraction(&BigInt::from(1), &BigInt::from(14)).is_err());
}

#[test]
fn characteristic_two_and_composites_are_rejected() {
    assert!(matches!(FieldSpec::prime(2), Err(AlgebraError::CharacteristicTwo)));
    for bad in [0u64, 1, 9, 32001, 4294967291, 1 << 40] {
        assert!(FieldSpec::prime(bad).is_err(), "{}", bad);
    }
}

const NVARS: usize = 3;

fn poly(field: FieldSpec) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0u32..3, NVARS), -6i64..=6);
    prop::collection::vec(term, 0..5).prop_map(move |ts| {
        let terms = ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), field.from_i64(c))).collect();
        Polynomial::from_terms(NVARS, field, terms).unwrap()
    })
}

fn field() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(vec![FieldSpec::Rationals, FieldSpec::Prime(7), FieldSpec::Prime(32003)])
}

fn triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    field().prop_flat_map(|f| (poly(f), poly(f), poly(f)))
}

proptest! {
    #[test]
    fn polynomial_ring_axioms((a, b, c) in triple()) {
        let zero = Polynomial::zero(NVARS, a.field());
        let one = Polynomial::constant(a.field().one(), NVARS);
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.add(&zero).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
        prop_assert!(a.add(&a.neg()).unwrap().is_zero());
        prop_assert_eq!(a.sub(&b).unwrap(), a.add(&b.neg()).unwrap());
        prop_assert_eq!(a.pow(3), a.mul(&a).unwrap().mul(&a).unwrap());
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!(a.mul(&b).unwrap().degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }
    }

    #[test]
    fn quotient_reduction_is_a_ring_map((a, b, _) in triple()) {
        let f = a.field();
        let v = |i| Polynomial::variable(i, NVARS, f);
        let ring = QuotientRing::new(
            f,
            vec!["x".into(), "y".into(), "z".into()],
            vec![v(0).pow(2), v(1).pow(2).sub(&v(0).mul(&v(2)).unwrap()).unwrap()],
        )
        .unwrap();
        let r = |p: &Polynomial| ring.reduce(p).unwrap();
        prop_assert_eq!(r(&a.mul(&b).unwrap()), r(&r(&a).mul(&r(&b)).unwrap()));
        prop_assert_eq!(r(&a.add(&b).unwrap()), r(&r(&a).add(&r(&b)).unwrap()));
        prop_assert_eq!(r(&r(&a)), r(&a));
    }
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, NVARS).prop_map(|e| Monomial::from_exponents(&e))
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop::sample::select(vec![MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::GradedLex])
}

proptest! {
    #[test]
    fn monomial_orders_are_admissible(o in order(), a in monomial(), b in monomial(), c in monomial()) {
        let one = Monomial::one(NVARS);
        prop_assert_eq!(o.compare(&a, &b), o.compare(&b, &a).reverse());
        prop_assert_eq!(o.compare(&a, &b) == Ordering::Equal, a == b);
        prop_assert_ne!(o.compare(&one, &a), Ordering::Greater);
        prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), o.compare(&a, &b));
        if o.compare(&a, &b) == Ordering::Less && o.compare(&b, &c) == Ordering::Less {
            prop_assert_eq!(o.compare(&a, &c), Ordering::Less);
        }
        if a.divides(&b) {
            prop_assert_ne!(o.compare(&a, &b), Ordering::Greater);
        }
    }
}

#[test]
fn grevlex_on_small_cases() {
    let m = |e: [u32; 3]| Monomial::from_exponents(&e);
    let g = MonomialOrder::Grevlex;
    assert_eq!(g.compare(&m([1, 0, 0]), &m([0, 1, 0])), Ordering::Greater);
    assert_eq!(g.compare(&m([0, 1, 0]), &m([0, 0, 1])), Ordering::Greater);
    // same degree: the smaller power of the last variable wins
    assert_eq!(g.compare(&m([0, 2, 0]), &m([1, 0, 1])), Ordering::Greater);
    assert_eq!(MonomialOrder::Lex.compare(&m([0, 2, 0]), &m([1, 0, 1])), Ordering::Less);
    assert_eq!(g.compare(&m([0, 0, 2]), &m([1, 0, 0])), Ordering::Greater);
}
