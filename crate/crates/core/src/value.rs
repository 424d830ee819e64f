//! Extended integers `Z ∪ {-∞, +∞}`.

use core::cmp::Ordering;
use core::fmt;

/// An integer or one of the two infinities. `sup ∅ = -∞`, `inf ∅ = +∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtInt {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    pub fn finite(&self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(*v),
            _ => None,
        }
    }

    /// Sum where `-∞` absorbs everything (used for dimensions of zero modules)
    /// and otherwise `+∞` absorbs finite values.
    pub fn add(self, other: ExtInt) -> ExtInt {
        match (self, other) {
            (ExtInt::NegInf, _) | (_, ExtInt::NegInf) => ExtInt::NegInf,
            (ExtInt::PosInf, _) | (_, ExtInt::PosInf) => ExtInt::PosInf,
            (ExtInt::Finite(a), ExtInt::Finite(b)) => ExtInt::Finite(a + b),
        }
    }

    pub fn neg(self) -> ExtInt {
        match self {
            ExtInt::NegInf => ExtInt::PosInf,
            ExtInt::PosInf => ExtInt::NegInf,
            ExtInt::Finite(a) => ExtInt::Finite(-a),
        }
    }

    pub fn sub(self, other: ExtInt) -> ExtInt {
        self.add(other.neg())
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtInt::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::PosInf => write!(f, "inf"),
            ExtInt::Finite(v) => write!(f, "{}", v),
        }
    }
}
