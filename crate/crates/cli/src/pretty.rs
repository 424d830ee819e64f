//! Prints an instance back in definition-file form.

use std::fmt::Write;

use homograde_core::{FieldSpec, Polynomial};
use homograde_harness::{Expectation, Instance, ModuleSource};

fn join<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(", ")
}

pub fn print_definition(inst: &Instance) -> String {
    let ring = &inst.ring;
    let names = ring.variables();
    let poly = |p: &Polynomial| p.format(names);
    let mut s = String::new();
    match ring.field() {
        FieldSpec::Rationals => s.push_str("field Q\n"),
        FieldSpec::Prime(p) => {
            let _ = writeln!(s, "field Fp {}", p);
        }
    }
    let gens = ring.defining_ideal().generators();
    let _ = write!(s, "ring {} = poly[{}]", inst.ring_name, names.join(", "));
    if !gens.is_empty() {
        let _ = write!(s, " / ({})", join(gens, poly));
    }
    s.push('\n');
    for m in &inst.modules {
        let body = match &m.source {
            ModuleSource::Coker { rows, twists } => format!(
                "coker [{}] twists ({})",
                join(rows, |r| format!("[{}]", join(r, poly))),
                join(twists, |t| t.to_string())
            ),
            ModuleSource::Quotient(g) => format!("quotient ({})", join(g, poly)),
            ModuleSource::Free(t) => format!("free ({})", join(t, |t| t.to_string())),
            ModuleSource::Residue => "residue".into(),
            ModuleSource::Canonical => "canonical".into(),
        };
        let _ = writeln!(s, "module {} over {} = {}", m.name, inst.ring_name, body);
    }
    for p in &inst.pairs {
        let _ = writeln!(s, "pair {} = ({}, {})", p.name, p.m, p.n);
    }
    for (subject, checks) in &inst.scopes {
        let _ = writeln!(s, "checks {}: {}", subject, join(checks, |c| c.name().to_string()));
    }
    for e in &inst.expectations {
        match e {
            Expectation::Value { invariant, args, expected } => {
                let _ = writeln!(s, "expect {}({}) {}", invariant.name(), args.join(", "), expected);
            }
            Expectation::Verdict { check, subject, verdict } => {
                let _ = writeln!(s, "expect check {} {} = {}", check.name(), subject, verdict.name());
            }
        }
    }
    for n in &inst.notes {
        let _ = writeln!(s, "note {}", n);
    }
    s
}
