//! The formulas under test, as predicates over modules and pairs of an
//! instance. Each check first gates on its hypotheses (only exact values
//! satisfy a finiteness hypothesis) and then evaluates its clauses.

use std::fmt;

use homograde_core::{AlgebraError, Analyzer, CertifiedValue, ExtInt, ModuleId, Status};

use crate::verdict::{compare, judge, Clause, Quantity, Rel, Truth, Verdict};

type R<T> = Result<T, AlgebraError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    IschebeckQpd,
    GdimFormula,
    IschebeckQid,
    GradeLeQpd,
    QpdGradeBound,
    QuasiPerfectCm,
    TensorCm,
    DimGradeQid,
    QuasiPerfectQidCm,
    AbDepthFormulas,
    Intersection,
    GradeInequalities,
    GradeFacts,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::IschebeckQpd,
        CheckId::GdimFormula,
        CheckId::IschebeckQid,
        CheckId::GradeLeQpd,
        CheckId::QpdGradeBound,
        CheckId::QuasiPerfectCm,
        CheckId::TensorCm,
        CheckId::DimGradeQid,
        CheckId::QuasiPerfectQidCm,
        CheckId::AbDepthFormulas,
        CheckId::Intersection,
        CheckId::GradeInequalities,
        CheckId::GradeFacts,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckId::IschebeckQpd => "ischebeck_qpd",
            CheckId::GdimFormula => "gdim_formula",
            CheckId::IschebeckQid => "ischebeck_qid",
            CheckId::GradeLeQpd => "grade_le_qpd",
            CheckId::QpdGradeBound => "qpd_grade_bound",
            CheckId::QuasiPerfectCm => "quasi_perfect_cm",
            CheckId::TensorCm => "tensor_cm",
            CheckId::DimGradeQid => "dim_grade_qid",
            CheckId::QuasiPerfectQidCm => "quasi_perfect_qid_cm",
            CheckId::AbDepthFormulas => "ab_depth_formulas",
            CheckId::Intersection => "intersection",
            CheckId::GradeInequalities => "grade_inequalities",
            CheckId::GradeFacts => "grade_facts",
        }
    }

    pub fn from_name(s: &str) -> Option<CheckId> {
        CheckId::ALL.into_iter().find(|c| c.name() == s)
    }

    pub fn statement(&self) -> &'static str {
        match self {
            CheckId::IschebeckQpd => "P(M,N) < inf and qpd M < inf imply P(M,N) = qpd M = depth R - depth M",
            CheckId::GdimFormula => {
                "P(M,N) < inf, G-dim M < inf and qpd N < inf imply P(M,N) = G-dim M = depth R - depth M"
            }
            CheckId::IschebeckQid => "P(M,N) < inf and qid N < inf imply P(M,N) = depth R - depth M",
            CheckId::GradeLeQpd => "grade M <= qpd M (and qpd M <= pd M, grade M <= G-dim M)",
            CheckId::QpdGradeBound => "qpd M, qpd N < inf imply qpd M - grade(M,N) <= qpd N + cmd M",
            CheckId::QuasiPerfectCm => {
                "for qpd M < inf: M CM implies quasi-perfect; R CM and M quasi-perfect imply M CM"
            }
            CheckId::TensorCm => "N CM, qpd M < inf, q(M,N) = 0: M (x) N is CM iff M is N-quasi-perfect",
            CheckId::DimGradeQid => "qid M < inf implies dim M = depth R - grade M",
            CheckId::QuasiPerfectQidCm => "M quasi-perfect with qid M < inf implies M CM",
            CheckId::AbDepthFormulas => {
                "qpd M = depth R - depth M; Tor-independence gives depth M + depth N = depth R + depth(M (x) N)"
            }
            CheckId::Intersection => {
                "P(M,N) < inf implies dim Ext^i(M,N) + i <= qpd M + dim(M (x) N) and depth N <= qpd M + dim(M (x) N)"
            }
            CheckId::GradeInequalities => "grade inequalities for modules of finite quasi-projective dimension",
            CheckId::GradeFacts => "0 <= grade(M,N) <= P(M,N) and the standard grade/dimension bounds",
        }
    }

    pub fn applies_to_modules(&self) -> bool {
        matches!(
            self,
            CheckId::GradeLeQpd
                | CheckId::QuasiPerfectCm
                | CheckId::DimGradeQid
                | CheckId::QuasiPerfectQidCm
                | CheckId::AbDepthFormulas
                | CheckId::GradeFacts
        )
    }

    pub fn applies_to_pairs(&self) -> bool {
        matches!(
            self,
            CheckId::IschebeckQpd
                | CheckId::GdimFormula
                | CheckId::IschebeckQid
                | CheckId::QpdGradeBound
                | CheckId::TensorCm
                | CheckId::AbDepthFormulas
                | CheckId::Intersection
                | CheckId::GradeInequalities
                | CheckId::GradeFacts
        )
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one check on one subject.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub verdict: Verdict,
    pub clauses: Vec<Clause>,
    /// Why the hypotheses failed, if they did.
    pub reason: Option<String>,
    /// Values to show as lhs/rhs when no clause is a plain relation.
    pub shown: Option<(Quantity, Quantity)>,
}

impl Evaluation {
    fn not_met(reason: impl Into<String>) -> Evaluation {
        Evaluation { verdict: Verdict::HypothesesNotMet, clauses: Vec::new(), reason: Some(reason.into()), shown: None }
    }

    fn judged(clauses: Vec<Clause>) -> Evaluation {
        if clauses.is_empty() {
            return Evaluation::not_met("no statement applies");
        }
        Evaluation { verdict: judge(&clauses), clauses, reason: None, shown: None }
    }

    fn showing(mut self, lhs: Quantity, rhs: Quantity) -> Evaluation {
        self.shown = Some((lhs, rhs));
        self
    }

    /// The sides shown as lhs/rhs: the first relation that did not hold,
    /// else the explicit pair, else the first relation.
    pub fn headline(&self) -> Option<(&Quantity, &Quantity)> {
        self.clauses
            .iter()
            .filter(|c| !matches!(c.truth, Truth::True { .. }))
            .find_map(sides)
            .or_else(|| self.shown.as_ref().map(|(l, r)| (l, r)))
            .or_else(|| self.clauses.iter().find_map(sides))
    }

    pub fn evidence(&self) -> String {
        match &self.reason {
            Some(r) => format!("hypotheses not met: {}", r),
            None => self.clauses.iter().map(|c| c.describe()).collect::<Vec<_>>().join("; "),
        }
    }
}

/// What a check is evaluated on.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    Module { id: ModuleId, name: &'a str },
    Pair { m: ModuleId, n: ModuleId, m_name: &'a str, n_name: &'a str },
}

/// Modules of the instance as registered in an analyzer, used when a check
/// quantifies over an auxiliary module `L`.
pub struct Context<'a> {
    pub analyzer: &'a Analyzer,
    pub modules: Vec<(String, ModuleId)>,
}

fn pt(v: i64) -> ExtInt {
    ExtInt::Finite(v)
}

/// Applies `check` to `subject`. Engine failures are returned as errors.
pub fn evaluate(check: CheckId, ctx: &Context<'_>, subject: Subject<'_>) -> R<Evaluation> {
    let a = ctx.analyzer;
    let nonzero = match subject {
        Subject::Module { id, .. } => !a.is_zero(id),
        Subject::Pair { m, n, .. } => !a.is_zero(m) && !a.is_zero(n),
    };
    if !nonzero {
        return Ok(Evaluation::not_met("zero module"));
    }
    let ev = Eval { a, ctx };
    match (check, subject) {
        (CheckId::GradeLeQpd, Subject::Module { id, name }) => ev.grade_le_qpd(id, name),
        (CheckId::QuasiPerfectCm, Subject::Module { id, name }) => ev.quasi_perfect_cm(id, name),
        (CheckId::DimGradeQid, Subject::Module { id, name }) => ev.dim_grade_qid(id, name),
        (CheckId::QuasiPerfectQidCm, Subject::Module { id, name }) => ev.quasi_perfect_qid_cm(id, name),
        (CheckId::AbDepthFormulas, Subject::Module { id, name }) => ev.ab_formula(id, name),
        (CheckId::GradeFacts, Subject::Module { id, name }) => ev.module_grade_facts(id, name),
        (CheckId::IschebeckQpd, Subject::Pair { m, n, m_name, n_name }) => ev.ischebeck_qpd(m, n, m_name, n_name),
        (CheckId::GdimFormula, Subject::Pair { m, n, m_name, n_name }) => ev.gdim_formula(m, n, m_name, n_name),
        (CheckId::IschebeckQid, Subject::Pair { m, n, m_name, n_name }) => ev.ischebeck_qid(m, n, m_name, n_name),
        (CheckId::QpdGradeBound, Subject::Pair { m, n, m_name, n_name }) => ev.qpd_grade_bound(m, n, m_name, n_name),
        (CheckId::TensorCm, Subject::Pair { m, n, m_name, n_name }) => ev.tensor_cm(m, n, m_name, n_name),
        (CheckId::AbDepthFormulas, Subject::Pair { m, n, m_name, n_name }) => ev.depth_formula(m, n, m_name, n_name),
        (CheckId::Intersection, Subject::Pair { m, n, m_name, n_name }) => ev.intersection(m, n, m_name, n_name),
        (CheckId::GradeInequalities, Subject::Pair { m, n, m_name, n_name }) => {
            ev.grade_inequalities(m, n, m_name, n_name)
        }
        (CheckId::GradeFacts, Subject::Pair { m, n, m_name, n_name }) => ev.pair_grade_facts(m, n, m_name, n_name),
        (c, _) => Err(AlgebraError::Contract(format!("check {} does not apply to this subject", c.name()))),
    }
}

struct Eval<'a> {
    a: &'a Analyzer,
    ctx: &'a Context<'a>,
}

/// `Some(v)` when `v` is exact and finite.
fn finite(v: &CertifiedValue) -> Option<i64> {
    v.exact_finite()
}

impl Eval<'_> {
    fn depth_r(&self) -> Quantity {
        Quantity::point("depth R", pt(self.a.depth_ring()))
    }

    fn dim_r(&self) -> Quantity {
        Quantity::point("dim R", self.a.ring().krull_dim())
    }

    fn q(&self, expr: String, v: R<CertifiedValue>) -> R<Quantity> {
        Ok(Quantity::of(expr, &v?))
    }

    fn depth(&self, id: ModuleId, name: &str) -> R<Quantity> {
        self.q(format!("depth {}", name), self.a.depth(id))
    }

    fn dim(&self, id: ModuleId, name: &str) -> R<Quantity> {
        self.q(format!("dim {}", name), self.a.dim(id))
    }

    fn grade(&self, id: ModuleId, name: &str) -> R<Quantity> {
        self.q(format!("grade {}", name), self.a.grade(id))
    }

    fn grade2(&self, m: ModuleId, n: ModuleId, mn: &str, nn: &str) -> R<Quantity> {
        self.q(format!("grade({}, {})", mn, nn), self.a.grade_pair(m, n))
    }

    fn qpd(&self, id: ModuleId, name: &str) -> R<Quantity> {
        self.q(format!("qpd {}", name), self.a.qpd(id))
    }

    fn cm(&self, id: ModuleId) -> R<Truth> {
        let cmd = Quantity::of("cmd", &self.a.cmd(id)?);
        Ok(compare(&cmd, Rel::Eq, &Quantity::constant(0)))
    }

    fn ring_cm(&self) -> Truth {
        Truth::from_bool(self.a.is_cm_ring())
    }

    fn ischebeck_qpd(&self, m: ModuleId, n: ModuleId, mn: &str, nn: &str) -> R<Evaluation> {
        let p = self.a.ext_sup(m, n)?;
        if finite(&p).is_none() {
            return Ok(Evaluation::not_met(format!("P({}, {}) is {}, not certified finite", mn, nn, p)));
        }
        let qpd = self.a.qpd(m)?;
        if finite(&qpd).is_none() {
            return Ok(Evaluation::not_met(format!("qpd {} is {}, not certified finite", mn, qpd)));
        }
        let pq = Quantity::of(format!("P({}, {})", mn, nn), &p);
        let qq = Quantity::of(format!("qpd {}", mn), &qpd);
        let diff = self.depth_r().minus(&self.depth(m, mn)?);
        Ok(Evaluation::judged(vec![
            Clause::relation("P = qpd", pq.clone(), Rel::Eq, qq.clone()),
            Clause::relation("qpd = depth R - depth M", qq.clone(), Rel::Eq, diff),
            Clause::relation("P <= qpd", pq, Rel::Le, qq),
        ]))
    }

    fn gdim_formula(&self, m: ModuleId, n: ModuleId, mn: &str, nn: &str) -> R<Evaluation> {
        let p = self.a.ext_sup(m, n)?;
        if finite(&p).is_none() {
            return Ok(Evaluation::not_met(format!("P({}, {}) is {}, not certified finite", mn, nn, p)));
        }
        let g = self.a.gdim(m)?;
        if finite(&g).is_none() {
            return Ok(Evaluation::not_met(format!("G-dim {} is {}, not certified finite", mn, g)));
        }
        let qn = self.a.qpd(n)?;
        if finite(&qn).is_none() {
            return Ok(Evaluation::not_met(format!("qpd {} is {}, not certified finite", nn, qn)));
        }
        let pq = Quantity::of(format!("P({}, {})", mn, nn), &p);
        let gq = Quantity::of(format!("G-dim {}", mn), &g);
        let diff = self.depth_r().minus(&self.depth(m, mn)?);
        Ok(Evaluation::judged(vec![
            Clause::relation("P = G-dim", pq.clone(), Rel::Eq, gq.clone()),
            Clause::relation("G-dim = depth R - depth M", gq.clone(), Rel::Eq, diff),
            Clause::relation("P <= G-dim", pq, Rel::Le, gq),
        ]))
    }

    fn ischebeck_qid(&self, m: ModuleId, n: ModuleId, mn: &str, nn: &str) -> R<Evaluation> {
        let qid = self.a.qid(n)?;
        if finite(&qid).is_none() {
            return Ok(Evaluation::not_met(format!("qid {} is {}, not certified finite", nn, qid)));
        }
        let p = self.a.ext_sup(m, n)?;
        if finite(&p).is_none() {
            return Ok(Evaluation::not_met(format!("P({}, {}) is {}, not certified finite", mn, nn, p)));
        }
        let pq = Quantity::of(format!("P({}, {})", mn, nn), &p);
        let depth_m = self.depth(m, mn)?;
        let diff = self.depth_r().minus(&depth_m);
        Ok(Evaluation::judged(vec![
            Clause::relation("P = depth R - depth M", pq, Rel::Eq, diff),
            Clause::relation("depth M <= depth R", depth_m, Rel::Le, self.depth_r()),
            Clause::relation("qid N = depth R", Quantity::of(format!("qid {}", nn), &qid), Rel::Eq, self.depth_r()),
        ]))
    }

    fn grade_le_qpd(&self, id: ModuleId, name: &str) -> R<Evaluation> {
        let qpd = self.a.qpd(id)?;
        if qpd.status != Status::Exact {
            return Ok(Evaluation::not_met(format!("qpd {} is {}, not certified", name, qpd)));
        }
        let qq = Quantity::of(format!("qpd {}", name), &qpd);
        let g = self.grade(id, name)?;
        let pd = self.q(format!("pd {}", name), self.a.pd(id))?;
        let mut clauses = vec![
            Clause::relation("grade M <= qpd M", g.clone(), Rel::Le, qq.clone()),
            Clause::relation("qpd M <= pd M", qq, Rel::Le, pd.clone()),
        ];
        let gd = self.a.gdim(id)?;
        if gd.is_exact() {
            let gq = Quantity::of(format!("G-dim {}", name), &gd);
            clauses.push(Clause::relation("grade M <= G-dim M", g, Rel::Le, gq.clone()));
            clauses.push(Clause::relation("G-dim M <= pd M", gq, Rel::Le, pd));
        }
        Ok(Evaluation::judged(clauses))
    }

    fn qpd_grade_bound(&self, m: ModuleId, n: ModuleId, mn: &str, nn: &str) -> R<Evaluation> {
        for (id, name) in [(m, mn), (n, nn)] {
            let v = self.a.qpd(id)?;
            if finite(&v).is_none() {
                return Ok(Evaluation::not_met(format!("qpd {} is {}, not certified finite", name, v)));
            }
        }
        let lhs = self.qpd(m, mn)?.minus(&self.grade2(m, n, mn, nn)?);
        let rhs = self.qpd(n, nn)?.plus(&self.q(format!("cmd {}", mn), self.a.cmd(m))?);
        Ok(Evaluation::judged(vec![Clause::relation("qpd M - grade(M,N) <= qpd N + cmd M", lhs, Rel::Le, rhs)]))
    }

    fn quasi_perfect_cm(&self, id: ModuleId, name: &str) -> R<Evaluation> {
        let qpd = self.a.qpd(id)?;
        if finite(&qpd).is_none() {
            return Ok(Evaluation::not_met(format!("qpd {} is {}, not certified finite", name, qpd)));
        }
        let qq = Quantity::of(format!("qpd {}", name), &qpd);
        let g = self.grade(id, name)?;
        let qp = compare(&qq, Rel::Eq, &g);
        let cm = self.cm(id)?;
        let dim_eq = compare(&self.dim(id, name)?, Rel::Eq, &self.dim_r().minus(&g));
        Ok(Evaluation::judged(vec![
            Clause::logical(
                format!("M CM ({}) implies M quasi-perfect ({})", truth_word(cm), truth_word(qp)),
                cm.implies(qp),
            ),
            Clause::logical("R CM and M quasi-perfect imply M CM", self.ring_cm().and(qp).implies(cm)),
            Clause::logical("M CM and dim M = dim R - grade M imply R CM", cm.and(dim_eq).implies(self.ring_cm())),
        ])
        .showing(qq, g))
    }

    fn tensor_cm(&self, m: ModuleId, n: ModuleId, mn: &str, nn: &str) -> R<Evaluation> {
        if !matches!(self.cm(n)?, Truth::True { .. }) {
            return Ok(Evaluation::not_met(format!("{} is not Cohen-Macaulay", nn)));
        }
        let qpd = self.a.qpd(m)?;
        if finite(&qpd).is_none() {
            return Ok(Evaluation::not_met(format!("qpd {} is {}, not certified finite", mn, qpd)));
        }
        let tor = self.a.tor_sup(m, n)?;
        if finite(&tor) != Some(0) {
            return Ok(Evaluation::not_met(format!("q({}, {}) is {}, not certified 0", mn, nn, tor)));
        }
        let t = self.a.tensor(m, n)?;
        let tname = format!("{} ⊗ {}", mn, nn);
        let cmd_t = self.q(format!("cmd({})", tname), self.a.cmd(t))?;
        let qq = Quantity::of(format!("qpd {}", mn), &qpd);
        let g = self.grade2(m, n, mn, nn)?;
        let t_cm = compare(&cmd_t, Rel::Eq, &Quantity::constant(0));
        let nqp = compare(&qq, Rel::Eq, &g);
        Ok(Evaluation::judged(vec![
            Clause::relation("cmd(M ⊗ N) = qpd M - grade(M,N)", cmd_t, Rel::Eq, qq.minus(&g)),
            Clause::logical(
                format!("M ⊗ N CM ({}) iff M is N-quasi-perfect ({})", truth_word(t_cm), truth_word(nqp)),
                t_cm.iff(nqp),
            ),
        ]))
    }

    fn dim_grade_qid(&self, id: ModuleId, name: &str) -> R<Evaluation> {
        let qid = self.a.qid(id)?;
        if finite(&qid).is_none() {
            return Ok(Evaluation::not_met(format!("qid {} is {}, not certified finite", name, qid)));
        }
        let dim = self.dim(id, name)?;
        let g = self.grade(id, name)?;
        let qq = Quantity::of(format!("qid {}", name), &qid);
        let crit = compare(&self.dim_r(), Rel::Eq, &dim.plus(&g));
        Ok(Evaluation::judged(vec![
            Clause::relation("dim M = depth R - grade M", dim.clone(), Rel::Eq, self.depth_r().minus(&g)),
            Clause::relation("qid M = dim M + grade M", qq, Rel::Eq, dim.plus(&g)),
            Clause::logical("dim R = dim M + grade M implies R CM", crit.implies(self.ring_cm())),
        ]))
    }

    fn quasi_perfect_qid_cm(&self, id: ModuleId, name: &str) -> R<Evaluation> {
        let qid = self.a.qid(id)?;
        if finite(&qid).is_none() {
            return Ok(Evaluation::not_met(format!("qid {} is {}, not certified finite", name, qid)));
        }
        let qpd = self.a.qpd(id)?;
        if finite(&qpd).is_none() {
            return Ok(Evaluation::not_met(format!("qpd {} is {}, not certified finite", name, qpd)));
        }
        let qq = Quantity::of(format!("qpd {}", name), &qpd);
        let g = self.grade(id, name)?;
        if !matches!(compare(&qq, Rel::Eq, &g), Truth::True { .. }) {
            return Ok(Evaluation::not_met(format!("{} is not quasi-perfect", name)));
        }
        Ok(Evaluation::judged(vec![Clause::relation(
            "depth M = dim M",
            self.depth(id, name)?,
            Rel::Eq,
            self.dim(id, name)?,
        )]))
    }

    fn ab_formula(&self, id: ModuleId, name: &str) -> R<Evaluation> {
        let qpd = self.a.qpd(id)?;
        let gd = self.a.gdim(id)?;
        let depth = self.depth(id, name)?;
        let diff = self.depth_r().minus(&depth);
        let mut clauses = Vec::new();
        if finite(&qpd).is_some() {
            let qq = Quantity::of(format!("qpd {}", name), &qpd);
            clauses.push(Clause::relation("qpd M = depth R - depth M", qq.clone(), Rel::Eq, diff.clone()));
            clauses.push(Clause::relation("qpd M <= depth R", qq, Rel::Le, self.depth_r()));
            clauses.push(Clause::relation("depth M <= depth R", depth, Rel::Le, self.depth_r()));
        }
        if finite(&gd).is_some() {
            let gq = Quantity::of(format!("G-dim {}", name), &gd);
            clauses.push(Clause::relation("G-dim M = depth R - depth M", gq, Rel::Eq, diff));
        }
        if clauses.is_empty() {
            return Ok(Evaluation::not_met(format!(
                "neither qpd {} ({}) nor G-dim ({}) is certified finite",
                name, qpd, gd
            )));
        }
        Ok(Evaluation::judged(clauses))
    }

    fn depth_formula(&self, m: ModuleId, n: ModuleId, mn: &str, nn: &str) -> R<Evaluation> {
        // M ⊗ N is symmetric, so either module may carry the finite qpd
        let fname = if finite(&self.a.qpd(m)?).is_some() {
            mn
        } else if finite(&self.a.qpd(n)?).is_some() {
            nn
        } else {
            return Ok(Evaluation::not_met(format!("neither qpd {} nor qpd {} is certified finite", mn, nn)));
        };
        let tor = self.a.tor_sup(m, n)?;
        if finite(&tor) != Some(0) {
            return Ok(Evaluation::not_met(format!("q({}, {}) is {}, not certified 0", mn, nn, tor)));
        }
        let t = self.a.tensor(m, n)?;
        let lhs = self.depth(m, mn)?.plus(&self.depth(n, nn)?);
        let rhs = self.depth_r().plus(&self.depth(t, &format!("({} ⊗ {})", mn, nn))?);
        Ok(Evaluation::judged(vec![Clause::relation(
            format!("depth formula (qpd {} finite, Tor_i = 0 for i > 0)", fname),
            lhs,
            Rel::Eq,
            rhs,
        )]))
    }

    fn intersection(&self, m: ModuleId, n: ModuleId, mn: &str, nn: &str) -> R<Evaluation> {
        let p = self.a.ext_sup(m, n)?;
        let Some(top) = finite(&p) else {
            return Ok(Evaluation::not_met(format!("P({}, {}) is {}, not certified finite", mn, nn, p)));
        };
        let t = self.a.tensor(m, n)?;
        let dim_t = self.q(format!("dim({} ⊗ {})", mn, nn), self.a.dim(t))?;
        let qpd_m = self.qpd(m, mn)?;
        let bound = qpd_m.plus(&dim_t);
        let qn = self.a.qpd(n)?;
        let gd = if finite(&qn).is_some() { Some(self.q(format!("G-dim {}", mn), self.a.gdim(m))?) } else { None };
        let mut clauses = Vec::new();
        for i in 0..=top {
            let e = self.a.add(&self.a.ext_module(m, n, i as usize)?)?;
            let lhs = self.q(format!("dim Ext^{}({}, {})", i, mn, nn), self.a.dim(e))?.plus(&Quantity::constant(i));
            clauses.push(Clause::relation(
                format!("dim Ext^{} + {} <= qpd M + dim(M ⊗ N)", i, i),
                lhs.clone(),
                Rel::Le,
                bound.clone(),
            ));
            if let Some(g) = &gd {
                clauses.push(Clause::relation(
                    format!("dim Ext^{} + {} <= G-dim M + dim(M ⊗ N)", i, i),
                    lhs,
                    Rel::Le,
                    g.plus(&dim_t),
                ));
            }
        }
        clauses.push(Clause::relation("depth N <= qpd M + dim(M ⊗ N)", self.depth(n, nn)?, Rel::Le, bound.clone()));
        let n_cm = self.cm(n)?;
        let dim_ok = compare(&self.dim(n, nn)?, Rel::Le, &bound);
        clauses.push(Clause::logical("N CM implies dim N <= qpd M + dim(M ⊗ N)", n_cm.implies(dim_ok)));
        Ok(Evaluation::judged(clauses))
    }

    fn grade_inequalities(&self, m: ModuleId, n: ModuleId, mn: &str, nn: &str) -> R<Evaluation> {
        let a = self.a;
        let qn_v = a.qpd(n)?;
        if finite(&qn_v).is_none() {
            return Ok(Evaluation::not_met(format!("qpd {} is {}, not certified finite", nn, qn_v)));
        }
        let qn = Quantity::of(format!("qpd {}", nn), &qn_v);
        let g_mn = self.grade2(m, n, mn, nn)?;
        let g_m = self.grade(m, mn)?;
        let g_n = self.grade(n, nn)?;
        let n_qp = compare(&qn, Rel::Eq, &g_n);
        let mut clauses = Vec::new();

        clauses.push(Clause::relation("grade M <= grade(M,N) + qpd N", g_m.clone(), Rel::Le, g_mn.plus(&qn)));
        if a.supp_contained(m, n)? {
            clauses.push(Clause::relation(
                "Supp M ⊆ Supp N: grade(M,N) + grade N <= grade M",
                g_mn.plus(&g_n),
                Rel::Le,
                g_m.clone(),
            ));
            if matches!(n_qp, Truth::True { .. }) {
                clauses.push(Clause::relation(
                    "N quasi-perfect: grade(M,N) = grade M - grade N",
                    g_mn.clone(),
                    Rel::Eq,
                    g_m.minus(&g_n),
                ));
            }
        }

        let ls: Vec<(String, ModuleId)> = self.ctx.modules.iter().filter(|(_, id)| !a.is_zero(*id)).cloned().collect();
        for (ln, l) in &ls {
            let (l, ln) = (*l, ln.as_str());
            let g_l = self.grade(l, ln)?;
            if finite(&a.qpd(l)?).is_some() && a.supp_contained(m, l)? {
                let g_ml = self.grade2(m, l, mn, ln)?;
                clauses.push(Clause::relation(
                    format!("L = {}: grade L + grade(M,L) <= grade(M,N) + qpd N", ln),
                    g_l.plus(&g_ml),
                    Rel::Le,
                    g_mn.plus(&qn),
                ));
                clauses.push(Clause::relation(
                    format!("L = {}: grade(M,L) + grade L <= grade M", ln),
                    g_ml.plus(&g_l),
                    Rel::Le,
                    g_m.clone(),
                ));
            }
        }

        let p = a.ext_sup(m, n)?;
        if finite(&p) == Some(0) {
            let h = a.hom(m, n)?;
            let hname = format!("Hom({}, {})", mn, nn);
            for (ln, l) in &ls {
                let (l, ln) = (*l, ln.as_str());
                let g_l = self.grade(l, ln)?;
                let g_lh = self.grade2(l, h, ln, &hname)?;
                clauses.push(Clause::relation(
                    format!("L = {}: grade L <= grade(L, Hom(M,N)) + qpd N", ln),
                    g_l.clone(),
                    Rel::Le,
                    g_lh.plus(&qn),
                ));
                if a.supp_contained(l, h)? {
                    clauses.push(Clause::relation(
                        format!("L = {}: grade(L, Hom(M,N)) + grade N <= grade L", ln),
                        g_lh.plus(&g_n),
                        Rel::Le,
                        g_l,
                    ));
                }
            }
        }

        let q = a.tor_sup(m, n)?;
        if finite(&q) == Some(0) {
            let t = a.tensor(m, n)?;
            let tname = format!("{} ⊗ {}", mn, nn);
            for (ln, l) in &ls {
                let (l, ln) = (*l, ln.as_str());
                let g_lm = self.grade2(l, m, ln, mn)?;
                let g_lt = self.grade2(l, t, ln, &tname)?;
                clauses.push(Clause::relation(
                    format!("L = {}: grade(L,M) <= grade(L, M ⊗ N) + qpd N", ln),
                    g_lm.clone(),
                    Rel::Le,
                    g_lt.plus(&qn),
                ));
                if a.supp_contained(l, n)? {
                    clauses.push(Clause::relation(
                        format!("L = {}: grade(L, M ⊗ N) + grade N <= grade(L,M)", ln),
                        g_lt.plus(&g_n),
                        Rel::Le,
                        g_lm,
                    ));
                }
            }
        }
        Ok(Evaluation::judged(clauses))
    }

    fn module_grade_facts(&self, id: ModuleId, name: &str) -> R<Evaluation> {
        let s = self.grade(id, name)?.plus(&self.dim(id, name)?);
        Ok(Evaluation::judged(vec![
            Clause::relation("depth R <= grade M + dim M", self.depth_r(), Rel::Le, s.clone()),
            Clause::relation("grade M + dim M <= dim R", s, Rel::Le, self.dim_r()),
        ]))
    }

    fn pair_grade_facts(&self, m: ModuleId, n: ModuleId, mn: &str, nn: &str) -> R<Evaluation> {
        let a = self.a;
        let g = self.grade2(m, n, mn, nn)?;
        let koszul = Quantity::point(format!("depth(ann {}, {})", mn, nn), pt(a.grade_koszul(m, n)?));
        let p = self.q(format!("P({}, {})", mn, nn), a.ext_sup(m, n))?;
        let dim_m = self.dim(m, mn)?;
        let dim_n = self.dim(n, nn)?;
        let mut clauses = vec![
            Clause::relation("grade(M,N) = depth(ann M, N)", g.clone(), Rel::Eq, koszul),
            Clause::relation("0 <= grade(M,N)", Quantity::constant(0), Rel::Le, g.clone()),
            Clause::relation("grade(M,N) <= P(M,N)", g.clone(), Rel::Le, p),
            Clause::relation("depth N - dim M <= grade(M,N)", self.depth(n, nn)?.minus(&dim_m), Rel::Le, g.clone()),
        ];
        if a.supp_contained(m, n)? {
            clauses.push(Clause::relation(
                "Supp M ⊆ Supp N: grade(M,N) <= dim N - dim M",
                g,
                Rel::Le,
                dim_n.minus(&dim_m),
            ));
        }
        Ok(Evaluation::judged(clauses))
    }
}

fn sides(c: &Clause) -> Option<(&Quantity, &Quantity)> {
    match (&c.lhs, &c.rhs) {
        (Some(l), Some(r)) => Some((l, r)),
        _ => None,
    }
}

fn truth_word(t: Truth) -> &'static str {
    match t {
        Truth::True { .. } => "yes",
        Truth::False { .. } => "no",
        Truth::Unknown => "undecided",
    }
}
