//! Groebner bases of homogeneous ideals and submodules, normal forms,
//! Schreyer syzygies and the elimination kernel that the module layer is
//! built on.

pub(crate) mod engine;
mod ideal;

use alloc::vec::Vec;

pub use engine::Limits;
pub use ideal::Ideal;

use crate::error::{AlgebraError, Result};
use crate::monomial::{ModuleOrder, Monomial, MonomialOrder, TermStrategy};
use crate::polynomial::Polynomial;
use crate::scalar::FieldSpec;
use crate::vector::{FreeElement, Term};
use engine::{require_homogeneous, Engine, Partner};

/// A reduced Groebner basis, sorted decreasingly by leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    field: FieldSpec,
    order: ModuleOrder,
    twists: Vec<i32>,
    elements: Vec<FreeElement>,
}

impl GroebnerBasis {
    /// Groebner basis of the ideal generated by `gens` in `k[x_1..x_nvars]`.
    pub fn ideal(nvars: usize, field: FieldSpec, gens: &[Polynomial], order: MonomialOrder) -> Result<Self> {
        let ord = ModuleOrder { monomial: order, strategy: TermStrategy::PositionOverTerm };
        let mut els = Vec::with_capacity(gens.len());
        for g in gens {
            if g.nvars() != nvars || g.field() != field {
                return Err(AlgebraError::Structural("generator from a different ring".into()));
            }
            let terms = g.terms().map(|(m, c)| Term { mon: m.clone(), comp: 0, coef: c.clone() }).collect();
            els.push(FreeElement::from_terms(terms, &ord));
        }
        Self::submodule(nvars, field, &els, &[0], ord, Limits::default())
    }

    /// Groebner basis of the submodule of `S^r` generated by `gens`, where
    /// `twists[j]` is the degree of the basis vector `e_j`.
    pub fn submodule(
        nvars: usize,
        field: FieldSpec,
        gens: &[FreeElement],
        twists: &[i32],
        order: ModuleOrder,
        limits: Limits,
    ) -> Result<Self> {
        require_homogeneous(gens, twists)?;
        for g in gens {
            if g.terms().iter().any(|t| t.mon.nvars() != nvars || t.coef.field() != field) {
                return Err(AlgebraError::Structural("generator from a different ring".into()));
            }
        }
        let sorted: Vec<FreeElement> =
            gens.iter().map(|g| FreeElement::from_terms(g.terms().to_vec(), &order)).collect();
        let mut e = Engine::new(order, twists, &[], limits);
        e.run(sorted, Vec::new())?;
        let elements = e.into_reduced_basis()?;
        Ok(GroebnerBasis { nvars, field, order, twists: twists.to_vec(), elements })
    }

    pub fn elements(&self) -> &[FreeElement] {
        &self.elements
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    /// Basis elements read as polynomials (rank-one case).
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements
            .iter()
            .map(|e| {
                let terms = e.terms().iter().map(|t| (t.mon.clone(), t.coef.clone())).collect();
                Polynomial::from_terms(self.nvars, self.field, terms).expect("same ring")
            })
            .collect()
    }

    pub fn leading_monomials(&self, comp: u32) -> Vec<Monomial> {
        self.elements.iter().filter_map(|e| e.lead()).filter(|t| t.comp == comp).map(|t| t.mon.clone()).collect()
    }

    pub fn normal_form(&self, v: &FreeElement) -> Result<FreeElement> {
        let v = FreeElement::from_terms(v.terms().to_vec(), &self.order);
        let mut e = Engine::new(self.order, &self.twists, &[], Limits::default());
        e.load_basis(&self.elements);
        e.reduce(v)
    }

    pub fn reduce_polynomial(&self, p: &Polynomial) -> Result<Polynomial> {
        let r = self.normal_form(&p.to_element(0))?;
        let terms = r.terms().iter().map(|t| (t.mon.clone(), t.coef.clone())).collect();
        Polynomial::from_terms(self.nvars, self.field, terms)
    }

    pub fn contains(&self, v: &FreeElement) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Generators of the syzygy module of the basis elements, obtained from
    /// reductions of S-pairs. Elements live in `S^s` with `e_k` of the degree
    /// of the k-th basis element; redundant ones are dropped.
    pub fn syzygies(&self) -> Result<Vec<FreeElement>> {
        let s = self.elements.len();
        let degs: Vec<i32> = self.elements.iter().map(|e| e.degree(&self.twists).unwrap()).collect();
        let ord = ModuleOrder::DEFAULT;
        let mut e = Engine::new(self.order, &self.twists, &[], Limits::default());
        e.load_basis(&self.elements);
        let mut syz = Vec::new();
        for j in 0..s {
            for i in 0..j {
                let (li, lj) = (self.elements[i].lead().unwrap(), self.elements[j].lead().unwrap());
                if li.comp != lj.comp {
                    continue;
                }
                let l = li.mon.lcm(&lj.mon);
                let mi = li.mon.quotient_of(&l).unwrap();
                let mj = lj.mon.quotient_of(&l).unwrap();
                let one = li.coef.field().one();
                let sp =
                    self.elements[i].mul_term(&one, &mi).add_scaled(&one.neg(), &mj, &self.elements[j], &self.order);
                let (r, quots) = e.reduce_tracking(sp)?;
                if !r.is_zero() {
                    return Err(AlgebraError::Consistency("S-pair of a Groebner basis did not reduce to zero".into()));
                }
                let mut terms = alloc::vec![
                    Term { mon: mi, comp: i as u32, coef: one.clone() },
                    Term { mon: mj, comp: j as u32, coef: one.neg() },
                ];
                for (p, c, m) in quots {
                    let Partner::Basis(k) = p else { unreachable!() };
                    terms.push(Term { mon: m, comp: k as u32, coef: c.neg() });
                }
                syz.push(FreeElement::from_terms(terms, &ord));
            }
        }
        let amb = Ambient { nvars: self.nvars, field: self.field, ideal: &[], limits: Limits::default() };
        minimize_modulo(&amb, &syz, &[], &degs)
    }
}

/// The polynomial ring and ideal `I` that module computations run over.
#[derive(Clone, Copy)]
pub(crate) struct Ambient<'a> {
    pub nvars: usize,
    pub field: FieldSpec,
    /// Monic Groebner basis of `I`, as elements of component 0.
    pub ideal: &'a [FreeElement],
    pub limits: Limits,
}

/// Generators of `{a in S^m : sum a_i cols_i lies in <relations> + I S^r}`.
/// Output elements live in `S^m` with `e_i` of degree `source[i]`.
pub(crate) fn kernel(
    amb: &Ambient<'_>,
    cols: &[FreeElement],
    source: &[i32],
    target: &[i32],
    relations: &[FreeElement],
) -> Result<Vec<FreeElement>> {
    let r = target.len() as u32;
    let mut twists = target.to_vec();
    twists.extend_from_slice(source);
    let ord = ModuleOrder::DEFAULT;
    let mut base = Vec::with_capacity(cols.len() + relations.len());
    for (i, c) in cols.iter().enumerate() {
        if let Some(d) = c.degree(target) {
            if d != source[i] || !c.is_homogeneous(target) {
                return Err(AlgebraError::Inhomogeneous(alloc::format!(
                    "column {} has degree {} but its source generator has degree {}",
                    i,
                    d,
                    source[i]
                )));
            }
        }
        let unit = FreeElement::monomial(amb.field.one(), Monomial::one(amb.nvars), r + i as u32);
        base.push(c.add(&unit, &ord));
    }
    base.extend(relations.iter().cloned());
    let mut e = Engine::new(ord, &twists, amb.ideal, amb.limits);
    e.eliminate_below(r);
    e.run(base, Vec::new())?;
    let ker = e.take_kernel();
    Ok(ker.into_iter().map(|v| v.map_components(|c| c - r, &ord)).collect())
}

/// Minimal generators of `<gens> + <base> + I S^r` modulo `<base> + I S^r`.
pub(crate) fn minimize_modulo(
    amb: &Ambient<'_>,
    gens: &[FreeElement],
    base: &[FreeElement],
    twists: &[i32],
) -> Result<Vec<FreeElement>> {
    let mut e = Engine::new(ModuleOrder::DEFAULT, twists, amb.ideal, amb.limits);
    e.run(base.to_vec(), gens.to_vec())
}

/// Groebner basis (POT grevlex) of `<gens> + I S^r`, explicit part only.
pub(crate) fn module_basis(amb: &Ambient<'_>, gens: &[FreeElement], twists: &[i32]) -> Result<Vec<FreeElement>> {
    let mut e = Engine::new(ModuleOrder::DEFAULT, twists, amb.ideal, amb.limits);
    e.run(gens.to_vec(), Vec::new())?;
    e.into_reduced_basis()
}

/// Normal form against an explicit basis plus the ideal.
pub(crate) fn reduce_with(
    amb: &Ambient<'_>,
    v: &FreeElement,
    basis: &[FreeElement],
    twists: &[i32],
) -> Result<FreeElement> {
    let mut e = Engine::new(ModuleOrder::DEFAULT, twists, amb.ideal, amb.limits);
    e.load_basis(basis);
    e.reduce(v.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn var(i: usize, n: usize) -> Polynomial {
        Polynomial::variable(i, n, q())
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let (x, y) = (var(0, 2), var(1, 2));
        let gb =
            GroebnerBasis::ideal(2, q(), &[x.mul(&x).unwrap(), x.mul(&y).unwrap()], MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb.polynomials(), vec![x.mul(&x).unwrap(), x.mul(&y).unwrap()]);
        let syz = gb.syzygies().unwrap();
        assert_eq!(syz.len(), 1);
        // y e_1 - x e_2
        let t = syz[0].terms();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].comp, 0);
        assert_eq!(t[0].mon, Monomial::from_exponents(&[0, 1]));
    }

    #[test]
    fn twisted_cubic_has_three_quadrics() {
        // ideal of 2x2 minors of [[a,b,c],[b,c,d]]
        let n = 4;
        let (a, b, c, d) = (var(0, n), var(1, n), var(2, n), var(3, n));
        let m = |p: &Polynomial, r: &Polynomial| p.mul(r).unwrap();
        let gens = vec![
            m(&a, &c).sub(&m(&b, &b)).unwrap(),
            m(&a, &d).sub(&m(&b, &c)).unwrap(),
            m(&b, &d).sub(&m(&c, &c)).unwrap(),
        ];
        let gb = GroebnerBasis::ideal(n, q(), &gens, MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb.elements().len(), 3);
        for g in &gens {
            assert!(gb.contains(&g.to_element(0)).unwrap());
        }
        assert!(!gb.contains(&m(&a, &a).to_element(0)).unwrap());
        let lex = GroebnerBasis::ideal(n, q(), &gens, MonomialOrder::Lex).unwrap();
        assert!(lex.elements().len() >= 3);
    }

    #[test]
    fn inhomogeneous_input_is_rejected() {
        let x = var(0, 1);
        let f = x.mul(&x).unwrap().add(&x).unwrap();
        assert!(matches!(
            GroebnerBasis::ideal(1, q(), &[f], MonomialOrder::Grevlex),
            Err(AlgebraError::Inhomogeneous(_))
        ));
    }

    #[test]
    fn degree_cap_is_enforced() {
        let (x, y) = (var(0, 2), var(1, 2));
        let gens = [x.pow(20).mul(&y).unwrap(), y.pow(20).mul(&x).unwrap().add(&x.pow(21)).unwrap()];
        let els: Vec<FreeElement> = gens.iter().map(|g| g.to_element(0)).collect();
        let r = GroebnerBasis::submodule(
            2,
            q(),
            &els,
            &[0],
            ModuleOrder::DEFAULT,
            Limits { max_degree: 32, max_reductions: 1_000_000 },
        );
        assert!(matches!(r, Err(AlgebraError::Resource(_))));
    }

    #[test]
    fn kernel_of_two_variables_is_koszul_syzygy() {
        let (x, y) = (var(0, 2), var(1, 2));
        let cols = [x.to_element(0), y.to_element(0)];
        let amb = Ambient { nvars: 2, field: q(), ideal: &[], limits: Limits::default() };
        let k = kernel(&amb, &cols, &[1, 1], &[0], &[]).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].degree(&[1, 1]), Some(2));
    }
}
