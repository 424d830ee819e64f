//! A ring with named modules, pairs, check scopes and expected values.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use homograde_core::{canonical_module, AlgebraError, ExtInt, GModule, Polynomial, QuotientRing};

use crate::checks::CheckId;
use crate::verdict::Verdict;

/// How a module was declared. Kept so instances can be printed back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSource {
    /// Cokernel of a matrix: rows are generators, columns are relations.
    Coker {
        rows: Vec<Vec<Polynomial>>,
        twists: Vec<i32>,
    },
    /// `R/(f_1, ..., f_r)`.
    Quotient(Vec<Polynomial>),
    Free(Vec<i32>),
    Residue,
    Canonical,
}

impl ModuleSource {
    pub fn build(&self, ring: &Arc<QuotientRing>) -> Result<GModule, AlgebraError> {
        match self {
            ModuleSource::Coker { rows, twists } => GModule::from_rows(ring.clone(), rows, twists.clone()),
            ModuleSource::Quotient(gens) => GModule::cyclic(ring.clone(), gens),
            ModuleSource::Free(twists) => Ok(GModule::free(ring.clone(), twists.clone())),
            ModuleSource::Residue => Ok(GModule::residue_field(ring.clone())),
            ModuleSource::Canonical => canonical_module(ring),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedModule {
    pub name: String,
    pub source: ModuleSource,
    pub module: GModule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPair {
    pub name: String,
    pub m: String,
    pub n: String,
}

/// Invariants addressable from definition files and the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    Depth,
    Dim,
    Grade,
    Cmd,
    Pd,
    Gdim,
    Qpd,
    Qid,
    /// `P_R(M, N)`.
    ExtSup,
    /// `q^R(M, N)`.
    TorSup,
}

impl Invariant {
    pub const ALL: [Invariant; 10] = [
        Invariant::Depth,
        Invariant::Dim,
        Invariant::Grade,
        Invariant::Cmd,
        Invariant::Pd,
        Invariant::Gdim,
        Invariant::Qpd,
        Invariant::Qid,
        Invariant::ExtSup,
        Invariant::TorSup,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Invariant::Depth => "depth",
            Invariant::Dim => "dim",
            Invariant::Grade => "grade",
            Invariant::Cmd => "cmd",
            Invariant::Pd => "pd",
            Invariant::Gdim => "gdim",
            Invariant::Qpd => "qpd",
            Invariant::Qid => "qid",
            Invariant::ExtSup => "P",
            Invariant::TorSup => "q",
        }
    }

    pub fn from_name(s: &str) -> Option<Invariant> {
        Invariant::ALL.into_iter().find(|i| i.name() == s)
    }

    /// Number of module arguments accepted. `grade` takes one or two.
    pub fn arities(&self) -> &'static [usize] {
        match self {
            Invariant::Grade => &[1, 2],
            Invariant::ExtSup | Invariant::TorSup => &[2],
            _ => &[1],
        }
    }
}

/// An expected value as written in a definition file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    /// `= v`: exact with value `v`.
    Exact(ExtInt),
    /// `>= v`: a lower bound `v` (budget-limited or unknown).
    AtLeast(ExtInt),
    /// `= ?`: unknown with no lower bound.
    Unknown,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Exact(v) => write!(f, "= {}", v),
            Expected::AtLeast(v) => write!(f, ">= {}", v),
            Expected::Unknown => write!(f, "= ?"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    Value { invariant: Invariant, args: Vec<String>, expected: Expected },
    Verdict { check: CheckId, subject: String, verdict: Verdict },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    /// Name the ring was declared under.
    pub ring_name: String,
    pub ring: Arc<QuotientRing>,
    pub modules: Vec<NamedModule>,
    pub pairs: Vec<NamedPair>,
    /// Checks to run on a subject; subjects without an entry get every
    /// check of the matching kind.
    pub scopes: BTreeMap<String, Vec<CheckId>>,
    pub expectations: Vec<Expectation>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceError {
    Algebra(String, AlgebraError),
    Duplicate(String),
    Unknown(String),
    Arity(String),
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::Algebra(what, e) => write!(f, "{}: {}", what, e),
            InstanceError::Duplicate(n) => write!(f, "name {} is declared twice", n),
            InstanceError::Unknown(n) => write!(f, "unknown name {}", n),
            InstanceError::Arity(s) => write!(f, "{}", s),
        }
    }
}

impl std::error::Error for InstanceError {}

impl Instance {
    pub fn new(id: impl Into<String>, ring_name: impl Into<String>, ring: Arc<QuotientRing>) -> Instance {
        Instance {
            id: id.into(),
            ring_name: ring_name.into(),
            ring,
            modules: Vec::new(),
            pairs: Vec::new(),
            scopes: BTreeMap::new(),
            expectations: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn fresh(&self, name: &str) -> Result<(), InstanceError> {
        if self.module_index(name).is_some() || self.pair(name).is_some() {
            return Err(InstanceError::Duplicate(name.to_string()));
        }
        Ok(())
    }

    pub fn add_module(&mut self, name: impl Into<String>, source: ModuleSource) -> Result<(), InstanceError> {
        let name = name.into();
        self.fresh(&name)?;
        let module = source.build(&self.ring).map_err(|e| InstanceError::Algebra(format!("module {}", name), e))?;
        self.modules.push(NamedModule { name, source, module });
        Ok(())
    }

    pub fn add_pair(&mut self, name: impl Into<String>, m: &str, n: &str) -> Result<(), InstanceError> {
        let name = name.into();
        self.fresh(&name)?;
        for x in [m, n] {
            if self.module_index(x).is_none() {
                return Err(InstanceError::Unknown(x.to_string()));
            }
        }
        self.pairs.push(NamedPair { name, m: m.to_string(), n: n.to_string() });
        Ok(())
    }

    pub fn set_scope(&mut self, subject: &str, checks: Vec<CheckId>) -> Result<(), InstanceError> {
        let kind_ok = if self.module_index(subject).is_some() {
            checks.iter().all(|c| c.applies_to_modules())
        } else if self.pair(subject).is_some() {
            checks.iter().all(|c| c.applies_to_pairs())
        } else {
            return Err(InstanceError::Unknown(subject.to_string()));
        };
        if !kind_ok {
            return Err(InstanceError::Arity(format!("a check listed for {} does not apply to it", subject)));
        }
        if self.scopes.insert(subject.to_string(), checks).is_some() {
            return Err(InstanceError::Duplicate(format!("checks for {}", subject)));
        }
        Ok(())
    }

    pub fn add_expectation(&mut self, e: Expectation) -> Result<(), InstanceError> {
        match &e {
            Expectation::Value { invariant, args, .. } => {
                if !invariant.arities().contains(&args.len()) {
                    return Err(InstanceError::Arity(format!(
                        "{} takes {:?} module arguments, got {}",
                        invariant.name(),
                        invariant.arities(),
                        args.len()
                    )));
                }
                for a in args {
                    if self.module_index(a).is_none() {
                        return Err(InstanceError::Unknown(a.clone()));
                    }
                }
            }
            Expectation::Verdict { check, subject, .. } => {
                let ok = (self.module_index(subject).is_some() && check.applies_to_modules())
                    || (self.pair(subject).is_some() && check.applies_to_pairs());
                if !ok {
                    return Err(InstanceError::Unknown(format!("{} for check {}", subject, check.name())));
                }
            }
        }
        self.expectations.push(e);
        Ok(())
    }

    pub fn module_index(&self, name: &str) -> Option<usize> {
        self.modules.iter().position(|m| m.name == name)
    }

    pub fn pair(&self, name: &str) -> Option<&NamedPair> {
        self.pairs.iter().find(|p| p.name == name)
    }

    /// Whether `check` should run on `subject`.
    pub fn in_scope(&self, subject: &str, check: CheckId) -> bool {
        match self.scopes.get(subject) {
            Some(list) => list.contains(&check),
            None => true,
        }
    }

    pub fn expected_verdict(&self, check: CheckId, subject: &str) -> Option<Verdict> {
        self.expectations.iter().find_map(|e| match e {
            Expectation::Verdict { check: c, subject: s, verdict } if *c == check && s == subject => Some(*verdict),
            _ => None,
        })
    }
}
