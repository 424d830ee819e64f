//! Exact coefficients over Q and over prime fields of odd characteristic.
//!
//! Rationals stay in a pair of `i64`s while they fit and spill into
//! `BigRational` otherwise. The representation is canonical (a value that
//! fits is always small), so derived equality is value equality.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};

/// Coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// Prime field of characteristic `p`. Characteristic 2 is rejected.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(AlgebraError::CharacteristicTwo);
        }
        if !(3..(1u64 << 31)).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::InvalidCharacteristic(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Small(n, 1),
            FieldSpec::Prime(p) => {
                let v = n.rem_euclid(*p as i64) as u32;
                Scalar::Modular { value: v, modulus: *p }
            }
        }
    }

    /// The fraction `num/den`; `den` must be nonzero in the field.
    pub fn fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => {
                if den.is_zero() {
                    return Err(AlgebraError::Contract("zero denominator".into()));
                }
                Ok(Scalar::from_big(BigRational::new(num.clone(), den.clone())))
            }
            FieldSpec::Prime(p) => {
                let m = BigInt::from(*p);
                let n = num.mod_floor(&m).to_u32().unwrap_or(0);
                let d = den.mod_floor(&m).to_u32().unwrap_or(0);
                if d == 0 {
                    return Err(AlgebraError::Contract("denominator vanishes mod p".into()));
                }
                let n = Scalar::Modular { value: n, modulus: *p };
                let d = Scalar::Modular { value: d, modulus: *p };
                Ok(n.mul(&d.inv()))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp {}", p),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. All operands of one operation must share a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Reduced fraction with positive denominator.
    Small(i64, i64),
    /// Only used when the value does not fit `Small`.
    Big(BigRational),
    Modular {
        value: u32,
        modulus: u32,
    },
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Scalar {
    fn from_i128_pair(num: i128, den: i128) -> Scalar {
        debug_assert!(den != 0);
        let g = gcd_i128(num, den);
        let (mut n, mut d) = if g > 1 { (num / g, den / g) } else { (num, den) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Scalar::Small(n, d),
            _ => Scalar::Big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Scalar {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar::Small(n, d),
            _ => Scalar::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Scalar::Big(r) => r.clone(),
            Scalar::Modular { .. } => unreachable!("modular value used as rational"),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Modular { modulus, .. } => FieldSpec::Prime(*modulus),
            _ => FieldSpec::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(n, _) => *n == 0,
            Scalar::Big(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Small(n, d) => *n == 1 && *d == 1,
            Scalar::Big(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    if let Some(n) = a.checked_add(c) {
                        return Scalar::from_i128_pair(n, b);
                    }
                }
                match (a * d).checked_add(c * b) {
                    Some(n) => Scalar::from_i128_pair(n, b * d),
                    None => Scalar::from_big(self.to_big() + other.to_big()),
                }
            }
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => {
                debug_assert_eq!(p, q, "mixed fields");
                let s = (*a as u64 + *b as u64) % *p as u64;
                Scalar::Modular { value: s as u32, modulus: *p }
            }
            _ => Scalar::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Small(n, d) => match n.checked_neg() {
                Some(m) => Scalar::Small(m, *d),
                None => Scalar::from_big(-self.to_big()),
            },
            Scalar::Big(r) => Scalar::from_big(-r.clone()),
            Scalar::Modular { value, modulus } => {
                let v = if *value == 0 { 0 } else { modulus - value };
                Scalar::Modular { value: v, modulus: *modulus }
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                let n = *a as i128 * *c as i128;
                let m = *b as i128 * *d as i128;
                Scalar::from_i128_pair(n, m)
            }
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => {
                debug_assert_eq!(p, q, "mixed fields");
                let s = (*a as u64 * *b as u64) % *p as u64;
                Scalar::Modular { value: s as u32, modulus: *p }
            }
            _ => Scalar::from_big(self.to_big() * other.to_big()),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Small(n, d) => Scalar::from_i128_pair(*d as i128, *n as i128),
            Scalar::Big(r) => Scalar::from_big(r.recip()),
            Scalar::Modular { value, modulus } => {
                // Fermat: a^(p-2)
                let p = *modulus as u64;
                let mut base = *value as u64;
                let mut e = p - 2;
                let mut acc = 1u64;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    e >>= 1;
                }
                Scalar::Modular { value: acc as u32, modulus: *modulus }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Sign for printing: rationals compare with zero, residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Small(n, _) => *n < 0,
            Scalar::Big(r) => r.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    /// Numerator and denominator as big integers (residues have denominator 1).
    pub fn to_fraction(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Small(n, d) => (BigInt::from(*n), BigInt::from(*d)),
            Scalar::Big(r) => (r.numer().clone(), r.denom().clone()),
            Scalar::Modular { value, .. } => (BigInt::from(*value), BigInt::one()),
        }
    }

    /// Total order used only to make output deterministic.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Modular { value: a, .. }, Scalar::Modular { value: b, .. }) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(n, 1) => write!(f, "{}", n),
            Scalar::Small(n, d) => write!(f, "{}/{}", n, d),
            Scalar::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Modular { value, .. } => write!(f, "{}", value),
        }
    }
}
