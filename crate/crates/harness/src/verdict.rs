//! Three-valued evaluation of equalities, inequalities and implications
//! between certified quantities.
//!
//! A quantity is an interval of values consistent with what the engine
//! proved, plus a flag saying whether the point value (if any) is firm. A
//! relation that holds for every value in the intervals is true; one that
//! fails for every value is false, and it only counts as a refutation when
//! both sides are firm points.

use std::fmt;

use homograde_core::{CertifiedValue, ExtInt, Grounds, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Verified,
    Violated,
    Inconclusive,
    HypothesesNotMet,
}

impl Verdict {
    pub const ALL: [Verdict; 4] =
        [Verdict::Verified, Verdict::Violated, Verdict::Inconclusive, Verdict::HypothesesNotMet];

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Violated => "violated",
            Verdict::Inconclusive => "inconclusive",
            Verdict::HypothesesNotMet => "hypotheses-not-met",
        }
    }

    pub fn from_name(s: &str) -> Option<Verdict> {
        Verdict::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An interval `[lo, hi]` of possible values with a firmness flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quantity {
    pub expr: String,
    pub lo: ExtInt,
    pub hi: ExtInt,
    /// Every ingredient is an exact value with proof or construction grounds.
    pub firm: bool,
    /// Largest budget any ingredient depended on.
    pub budget: Option<u32>,
}

fn add_lo(a: ExtInt, b: ExtInt) -> ExtInt {
    match (a, b) {
        (ExtInt::NegInf, _) | (_, ExtInt::NegInf) => ExtInt::NegInf,
        (ExtInt::PosInf, _) | (_, ExtInt::PosInf) => ExtInt::PosInf,
        (ExtInt::Finite(x), ExtInt::Finite(y)) => ExtInt::Finite(x + y),
    }
}

fn add_hi(a: ExtInt, b: ExtInt) -> ExtInt {
    match (a, b) {
        (ExtInt::PosInf, _) | (_, ExtInt::PosInf) => ExtInt::PosInf,
        (ExtInt::NegInf, _) | (_, ExtInt::NegInf) => ExtInt::NegInf,
        (ExtInt::Finite(x), ExtInt::Finite(y)) => ExtInt::Finite(x + y),
    }
}

fn max_budget(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Quantity {
    pub fn of(expr: impl Into<String>, v: &CertifiedValue) -> Quantity {
        let (lo, hi) = v.interval();
        let budget = match v.grounds {
            Grounds::Budget(b) => Some(b),
            _ => None,
        };
        Quantity { expr: expr.into(), lo, hi, firm: v.is_firm(), budget }
    }

    pub fn constant(v: i64) -> Quantity {
        Quantity::point(v.to_string(), ExtInt::Finite(v))
    }

    pub fn point(expr: impl Into<String>, v: ExtInt) -> Quantity {
        Quantity { expr: expr.into(), lo: v, hi: v, firm: true, budget: None }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn plus(&self, other: &Quantity) -> Quantity {
        let clash = |a: ExtInt, b: ExtInt| {
            matches!((a, b), (ExtInt::NegInf, ExtInt::PosInf) | (ExtInt::PosInf, ExtInt::NegInf))
        };
        // -inf + inf has no value; widen to everything
        let undefined = clash(self.lo, other.lo) || clash(self.hi, other.hi);
        let (lo, hi) = if undefined {
            (ExtInt::NegInf, ExtInt::PosInf)
        } else {
            (add_lo(self.lo, other.lo), add_hi(self.hi, other.hi))
        };
        Quantity {
            expr: format!("{} + {}", self.expr, other.expr),
            lo,
            hi,
            firm: self.firm && other.firm && !undefined,
            budget: max_budget(self.budget, other.budget),
        }
    }

    pub fn negated(&self) -> Quantity {
        Quantity {
            expr: format!("-({})", self.expr),
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            firm: self.firm,
            budget: self.budget,
        }
    }

    pub fn minus(&self, other: &Quantity) -> Quantity {
        let mut q = self.plus(&other.negated());
        q.expr = if other.expr.contains(' ') {
            format!("{} - ({})", self.expr, other.expr)
        } else {
            format!("{} - {}", self.expr, other.expr)
        };
        q
    }

    pub fn named(mut self, expr: impl Into<String>) -> Quantity {
        self.expr = expr.into();
        self
    }

    /// Rendered back as a certified value for reports.
    pub fn to_certified(&self) -> CertifiedValue {
        let grounds = match self.budget {
            Some(b) if !self.firm => Grounds::Budget(b),
            _ => Grounds::Proof,
        };
        let (value, status) = if self.is_point() {
            (self.lo, Status::Exact)
        } else if self.hi == ExtInt::PosInf {
            (self.lo, if self.lo == ExtInt::NegInf { Status::Unknown } else { Status::LowerBound })
        } else {
            (self.hi, Status::UpperBound)
        };
        CertifiedValue { value, status, grounds, label: None, evidence: self.expr.clone() }
    }

    pub fn render(&self) -> String {
        if self.is_point() {
            format!("{}", self.lo)
        } else {
            format!("[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Truth value of a claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truth {
    True { firm: bool },
    False { firm: bool },
    Unknown,
}

impl Truth {
    pub fn from_bool(b: bool) -> Truth {
        if b {
            Truth::True { firm: true }
        } else {
            Truth::False { firm: true }
        }
    }

    pub fn not(self) -> Truth {
        match self {
            Truth::True { firm } => Truth::False { firm },
            Truth::False { firm } => Truth::True { firm },
            Truth::Unknown => Truth::Unknown,
        }
    }

    pub fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False { firm: a }, Truth::False { firm: b }) => Truth::False { firm: a || b },
            (Truth::False { firm }, _) | (_, Truth::False { firm }) => Truth::False { firm },
            (Truth::True { firm: a }, Truth::True { firm: b }) => Truth::True { firm: a && b },
            _ => Truth::Unknown,
        }
    }

    pub fn implies(self, other: Truth) -> Truth {
        self.not().or(other)
    }

    pub fn or(self, other: Truth) -> Truth {
        self.not().and(other.not()).not()
    }

    pub fn iff(self, other: Truth) -> Truth {
        self.implies(other).and(other.implies(self))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Eq,
    Le,
}

impl Rel {
    pub fn symbol(&self) -> &'static str {
        match self {
            Rel::Eq => "=",
            Rel::Le => "≤",
        }
    }
}

/// `a ≤ b` or `a = b` over intervals.
pub fn compare(a: &Quantity, rel: Rel, b: &Quantity) -> Truth {
    let firm = a.firm && b.firm;
    match rel {
        Rel::Le => {
            if a.hi <= b.lo {
                Truth::True { firm }
            } else if a.lo > b.hi {
                Truth::False { firm }
            } else {
                Truth::Unknown
            }
        }
        Rel::Eq => {
            if a.is_point() && b.is_point() && a.lo == b.lo {
                Truth::True { firm }
            } else if a.lo > b.hi || b.lo > a.hi {
                Truth::False { firm }
            } else {
                Truth::Unknown
            }
        }
    }
}

/// One evaluated statement inside a check.
#[derive(Clone, Debug)]
pub struct Clause {
    pub label: String,
    pub truth: Truth,
    pub lhs: Option<Quantity>,
    pub rhs: Option<Quantity>,
    pub rel: Option<Rel>,
}

impl Clause {
    pub fn relation(label: impl Into<String>, lhs: Quantity, rel: Rel, rhs: Quantity) -> Clause {
        let truth = compare(&lhs, rel, &rhs);
        Clause { label: label.into(), truth, lhs: Some(lhs), rhs: Some(rhs), rel: Some(rel) }
    }

    pub fn logical(label: impl Into<String>, truth: Truth) -> Clause {
        Clause { label: label.into(), truth, lhs: None, rhs: None, rel: None }
    }

    pub fn describe(&self) -> String {
        let mark = match self.truth {
            Truth::True { .. } => "holds",
            Truth::False { firm: true } => "FAILS",
            Truth::False { firm: false } => "fails on budget-limited values",
            Truth::Unknown => "undecided",
        };
        match (&self.lhs, &self.rhs, self.rel) {
            (Some(l), Some(r), Some(rel)) => format!(
                "{}: {} = {} {} {} = {} ({})",
                self.label,
                l.expr,
                l.render(),
                rel.symbol(),
                r.expr,
                r.render(),
                mark
            ),
            _ => format!("{} ({})", self.label, mark),
        }
    }
}

/// Verdict of a list of clauses whose hypotheses already hold.
pub fn judge(clauses: &[Clause]) -> Verdict {
    let mut verdict = Verdict::Verified;
    for c in clauses {
        match c.truth {
            Truth::True { .. } => {}
            Truth::False { firm: true } => return Verdict::Violated,
            Truth::False { firm: false } | Truth::Unknown => verdict = Verdict::Inconclusive,
        }
    }
    verdict
}
