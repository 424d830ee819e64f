//! Monomials, monomial orders and module term orders.

use core::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector with cached total degree. Variable 0 is the largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 6]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn variable(i: usize, nvars: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    /// Panics if an exponent exceeds `u16::MAX`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        let exps: SmallVec<[u16; 6]> = exps.iter().map(|&e| u16::try_from(e).expect("exponent overflow")).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&e| e as u32)
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(self.exps.iter()).map(|(b, a)| b - a).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 6]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }
}

/// Order on monomials. The default matches the engine's internal order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    GradedLex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GradedLex => a.degree.cmp(&b.degree).then_with(|| lex(a, b)),
            MonomialOrder::Grevlex => a.degree.cmp(&b.degree).then_with(|| {
                for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::GradedLex => "grlex",
        }
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(b.exps.iter()) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

/// How module terms `m e_i` are compared.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TermStrategy {
    /// Position first; a smaller component index is larger.
    #[default]
    PositionOverTerm,
    /// Monomial first, position breaks ties.
    TermOverPosition,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub monomial: MonomialOrder,
    pub strategy: TermStrategy,
}

impl ModuleOrder {
    pub const DEFAULT: ModuleOrder =
        ModuleOrder { monomial: MonomialOrder::Grevlex, strategy: TermStrategy::PositionOverTerm };

    #[inline]
    pub fn compare(&self, ma: &Monomial, ca: u32, mb: &Monomial, cb: u32) -> Ordering {
        match self.strategy {
            TermStrategy::PositionOverTerm => cb.cmp(&ca).then_with(|| self.monomial.compare(ma, mb)),
            TermStrategy::TermOverPosition => self.monomial.compare(ma, mb).then_with(|| cb.cmp(&ca)),
        }
    }
}

/// All monomials of total degree `d` in `nvars` variables, largest first in lex.
pub fn monomials_of_degree(nvars: usize, d: u32) -> alloc::vec::Vec<Monomial> {
    let mut out = alloc::vec::Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut exps = alloc::vec![0u32; nvars];
    fill(&mut exps, 0, d, &mut out);
    out
}

fn fill(exps: &mut [u32], i: usize, left: u32, out: &mut alloc::vec::Vec<Monomial>) {
    if i + 1 == exps.len() {
        exps[i] = left;
        out.push(Monomial::from_exponents(exps));
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e;
        fill(exps, i + 1, left - e, out);
    }
    exps[i] = 0;
}
