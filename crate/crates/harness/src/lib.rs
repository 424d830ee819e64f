//! Theorem-verification harness: evaluates formulas relating depth, grade,
//! qpd, qid and G-dimension on concrete modules, and reports a verdict per
//! formula and subject.

pub mod checks;
pub mod instance;
pub mod runner;
pub mod verdict;

pub use checks::{evaluate, CheckId, Context, Evaluation, Subject};
pub use instance::{Expectation, Expected, Instance, InstanceError, Invariant, ModuleSource, NamedModule, NamedPair};
pub use runner::{
    evaluate_invariant, expected_matches, prepare, run_corpus, run_instance, CheckResult, CorpusReport,
    ExpectationResult, InstanceReport, RunConfig, Totals,
};
pub use verdict::{compare, judge, Clause, Quantity, Rel, Truth, Verdict};
