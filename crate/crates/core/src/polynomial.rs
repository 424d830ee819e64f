//! Polynomials in `S = k[x_1..x_n]`, stored sparsely in grevlex order.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{AlgebraError, Result};
use crate::monomial::{ModuleOrder, Monomial};
use crate::scalar::{FieldSpec, Scalar};
use crate::vector::{FreeElement, Term};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    field: FieldSpec,
    body: FreeElement,
}

const ORD: ModuleOrder = ModuleOrder::DEFAULT;

impl Polynomial {
    pub fn zero(nvars: usize, field: FieldSpec) -> Self {
        Polynomial { nvars, field, body: FreeElement::zero() }
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        let field = c.field();
        Polynomial { nvars, field, body: FreeElement::monomial(c, Monomial::one(nvars), 0) }
    }

    pub fn variable(i: usize, nvars: usize, field: FieldSpec) -> Self {
        Polynomial { nvars, field, body: FreeElement::monomial(field.one(), Monomial::variable(i, nvars), 0) }
    }

    pub fn from_terms(nvars: usize, field: FieldSpec, terms: Vec<(Monomial, Scalar)>) -> Result<Self> {
        let mut ts = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(AlgebraError::Structural("monomial has wrong number of variables".into()));
            }
            if c.field() != field {
                return Err(AlgebraError::Structural("coefficient from a different field".into()));
            }
            ts.push(Term { mon: m, comp: 0, coef: c });
        }
        Ok(Polynomial { nvars, field, body: FreeElement::from_terms(ts, &ORD) })
    }

    /// Reads component `comp` of a free-module element as a polynomial.
    pub fn from_component(el: &FreeElement, comp: u32, nvars: usize, field: FieldSpec) -> Self {
        let terms = el
            .terms()
            .iter()
            .filter(|t| t.comp == comp)
            .map(|t| Term { mon: t.mon.clone(), comp: 0, coef: t.coef.clone() })
            .collect();
        Polynomial { nvars, field, body: FreeElement::from_sorted(terms) }
    }

    /// This polynomial placed in component `comp`.
    pub fn to_element(&self, comp: u32) -> FreeElement {
        FreeElement::from_sorted(
            self.body.terms().iter().map(|t| Term { mon: t.mon.clone(), comp, coef: t.coef.clone() }).collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.body.terms().iter().map(|t| (&t.mon, &t.coef))
    }

    pub fn term_pairs(&self) -> Vec<(Monomial, Scalar)> {
        self.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
    }

    pub fn num_terms(&self) -> usize {
        self.body.len()
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.body.terms().iter().all(|t| t.mon.is_one())
    }

    /// Grevlex leading term.
    pub fn lead(&self) -> Option<(&Monomial, &Scalar)> {
        self.body.lead().map(|t| (&t.mon, &t.coef))
    }

    /// Total degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.body.terms().iter().map(|t| t.mon.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.body.terms().iter().map(|t| t.mon.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    fn compatible(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(AlgebraError::Structural("polynomials in different numbers of variables".into()));
        }
        if self.field != other.field {
            return Err(AlgebraError::Structural("polynomials over different fields".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.compatible(other)?;
        Ok(Polynomial { nvars: self.nvars, field: self.field, body: self.body.add(&other.body, &ORD) })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.compatible(other)?;
        Ok(Polynomial { nvars: self.nvars, field: self.field, body: self.body.sub(&other.body, &ORD) })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.compatible(other)?;
        let mut acc = FreeElement::zero();
        for t in other.body.terms() {
            acc = acc.add_scaled(&t.coef, &t.mon, &self.body, &ORD);
        }
        Ok(Polynomial { nvars: self.nvars, field: self.field, body: acc })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { nvars: self.nvars, field: self.field, body: self.body.neg() }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        Polynomial { nvars: self.nvars, field: self.field, body: self.body.scale(c) }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.field.one(), self.nvars);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    pub fn monic(&self) -> Polynomial {
        let mut b = self.body.clone();
        b.make_monic();
        Polynomial { nvars: self.nvars, field: self.field, body: b }
    }

    /// Human-readable form such as `x^2 - 3/2*x*y + 1`.
    pub fn format(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = format_monomial(m, names);
            if mono.is_empty() {
                let _ = write!(s, "{}", abs);
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{}*{}", abs, mono);
            }
        }
        s
    }
}

pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut s = String::new();
    for (i, e) in m.exponents().enumerate() {
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&names[i]);
        if e > 1 {
            let _ = write!(s, "^{}", e);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn names() -> Vec<String> {
        vec!["x".to_string(), "y".to_string()]
    }

    #[test]
    fn arithmetic_and_format() {
        let q = FieldSpec::Rationals;
        let x = Polynomial::variable(0, 2, q);
        let y = Polynomial::variable(1, 2, q);
        let f = x.add(&y).unwrap();
        let g = f.mul(&f.sub(&y.scale(&q.from_i64(3))).unwrap()).unwrap();
        assert_eq!(g.format(&names()), "x^2 - x*y - 2*y^2");
        assert!(g.is_homogeneous());
        assert_eq!(g.degree(), Some(2));
        let h = g.add(&Polynomial::constant(q.from_i64(1), 2)).unwrap();
        assert!(!h.is_homogeneous());
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let q = FieldSpec::Rationals;
        let p = FieldSpec::prime(5).unwrap();
        let a = Polynomial::variable(0, 2, q);
        assert!(a.add(&Polynomial::variable(0, 2, p)).is_err());
        assert!(a.mul(&Polynomial::variable(0, 3, q)).is_err());
    }
}
