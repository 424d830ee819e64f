//! Report rendering. JSON keys are sorted and nothing time-dependent is
//! written, so equal inputs give byte-identical output.

use std::fmt::Write;

use serde_json::{json, Value};

use homograde_core::{Budgets, CertifiedValue, ExtInt};
use homograde_harness::{CheckId, CheckResult, CorpusReport, Totals, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
    Plain,
}

impl Format {
    pub fn from_name(s: &str) -> Option<Format> {
        match s {
            "json" => Some(Format::Json),
            "md" | "markdown" => Some(Format::Markdown),
            "plain" => Some(Format::Plain),
            _ => None,
        }
    }
}

/// What the report records about the run that produced it.
#[derive(Clone, Debug)]
pub struct ReportConfig {
    pub budgets: Budgets,
    pub checks: Vec<CheckId>,
}

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

fn ext_json(v: ExtInt) -> Value {
    match v {
        ExtInt::Finite(x) => json!(x),
        ExtInt::PosInf => json!("inf"),
        ExtInt::NegInf => json!("-inf"),
    }
}

pub fn certified_json(v: &CertifiedValue) -> Value {
    json!({
        "value": ext_json(v.value),
        "status": v.status.name(),
        "evidence": v.evidence,
    })
}

fn opt_json(v: &Option<CertifiedValue>) -> Value {
    v.as_ref().map_or(Value::Null, certified_json)
}

fn row_json(r: &CheckResult) -> Value {
    json!({
        "check-id": r.check.name(),
        "subject": r.subject,
        "verdict": r.verdict.name(),
        "lhs": opt_json(&r.lhs),
        "rhs": opt_json(&r.rhs),
        "evidence": r.evidence,
        "error": r.error,
        "expected-verdict": r.expected.map(|v| v.name()),
    })
}

fn res_cap(b: &Budgets) -> String {
    match b.res_cap {
        Some(c) => c.to_string(),
        None => "depth+2".into(),
    }
}

fn totals_json(t: &Totals) -> Value {
    json!({
        "rows": t.rows,
        "verified": t.verified,
        "violated": t.violated,
        "inconclusive": t.inconclusive,
        "hypotheses-not-met": t.hypotheses_not_met,
        "hypotheses-not-met-annotated": t.hypotheses_not_met_expected,
        "engine-errors": t.errors,
        "expectation-failures": t.expectation_failures,
        "instance-errors": t.instance_errors,
    })
}

pub fn to_json(report: &CorpusReport, cfg: &ReportConfig) -> String {
    let instances: Vec<Value> = report
        .instances
        .iter()
        .map(|i| {
            json!({
                "id": i.id,
                "error": i.error,
                "checks": i.results.iter().map(row_json).collect::<Vec<_>>(),
                "expectations": i.expectations.iter().map(|e| json!({
                    "expect": e.description,
                    "actual": e.actual,
                    "ok": e.ok,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let doc = json!({
        "engine-version": ENGINE_VERSION,
        "config": {
            "budget-ext": cfg.budgets.ext,
            "budget-gdim": cfg.budgets.gdim,
            "budget-bass": format!("depth+{}", cfg.budgets.bass),
            "res-cap": res_cap(&cfg.budgets),
            "checks": cfg.checks.iter().map(|c| c.name()).collect::<Vec<_>>(),
        },
        "instances": instances,
        "totals": totals_json(&report.totals),
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("plain JSON values");
    s.push('\n');
    s
}

fn side(v: &Option<CertifiedValue>) -> String {
    match v {
        Some(v) => format!("{} = {}", v.evidence, v),
        None => String::new(),
    }
}

/// Rows and expectations that did not come out as annotated, plus engine
/// and setup errors.
pub fn failures(report: &CorpusReport) -> Vec<String> {
    let mut out = Vec::new();
    for i in &report.instances {
        if let Some(e) = &i.error {
            out.push(format!("{}: instance could not be set up: {}", i.id, e));
        }
        for r in &i.results {
            if let Some(exp) = r.expected {
                if exp != r.verdict {
                    out.push(format!(
                        "{}: check {} on {}: expected {}, got {}",
                        i.id, r.check, r.subject, exp, r.verdict
                    ));
                }
            }
            if r.verdict == Verdict::Violated {
                out.push(format!("{}: check {} on {} VIOLATED: {}", i.id, r.check, r.subject, r.evidence));
            }
            if let Some(e) = &r.error {
                out.push(format!("{}: check {} on {}: engine error: {}", i.id, r.check, r.subject, e));
            }
        }
        for e in i.expectations.iter().filter(|e| !e.ok) {
            out.push(format!("{}: expected {}, got {}", i.id, e.description, e.actual));
        }
    }
    out
}

fn totals_lines(t: &Totals) -> Vec<(String, usize)> {
    let mut v: Vec<(String, usize)> = Verdict::ALL.iter().map(|v| (v.name().to_string(), t.count(*v))).collect();
    v.push(("  of which annotated".into(), t.hypotheses_not_met_expected));
    v.push(("engine errors".into(), t.errors));
    v.push(("expectation failures".into(), t.expectation_failures));
    v.push(("rows".into(), t.rows));
    v
}

fn config_line(cfg: &ReportConfig) -> String {
    format!(
        "engine {}; budgets: ext {}, gdim {}, bass depth+{}, res-cap {}",
        ENGINE_VERSION,
        cfg.budgets.ext,
        cfg.budgets.gdim,
        cfg.budgets.bass,
        res_cap(&cfg.budgets)
    )
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn to_markdown(report: &CorpusReport, cfg: &ReportConfig) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# Verification report\n\n{}\n", config_line(cfg));
    for i in &report.instances {
        let _ = writeln!(s, "## {}\n", i.id);
        if let Some(e) = &i.error {
            let _ = writeln!(s, "setup failed: {}\n", e);
            continue;
        }
        s.push_str("| check | subject | verdict | lhs | rhs |\n|---|---|---|---|---|\n");
        for r in &i.results {
            let verdict = match (&r.error, r.expected) {
                (Some(_), _) => format!("{} (engine error)", r.verdict),
                (None, Some(e)) if e == r.verdict => format!("{} (as annotated)", r.verdict),
                _ => r.verdict.to_string(),
            };
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} |",
                r.check,
                cell(&r.subject),
                verdict,
                cell(&side(&r.lhs)),
                cell(&side(&r.rhs))
            );
        }
        let met = i.expectations.iter().filter(|e| e.ok).count();
        let _ = writeln!(s, "\nExpected values: {} of {} met.\n", met, i.expectations.len());
    }
    s.push_str("## Totals\n\n| verdict | rows |\n|---|---|\n");
    for (k, v) in totals_lines(&report.totals) {
        let _ = writeln!(s, "| {} | {} |", k.trim(), v);
    }
    let f = failures(report);
    if !f.is_empty() {
        s.push_str("\n## Failures\n\n");
        for line in f {
            let _ = writeln!(s, "- {}", line);
        }
    }
    s
}

pub fn to_plain(report: &CorpusReport, cfg: &ReportConfig, verbose: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", config_line(cfg));
    for i in &report.instances {
        let _ = writeln!(s, "\n[{}]", i.id);
        if let Some(e) = &i.error {
            let _ = writeln!(s, "  setup failed: {}", e);
            continue;
        }
        for r in &i.results {
            let _ = writeln!(s, "  {:<22} {:<10} {}", r.check.name(), r.subject, r.verdict);
            if verbose {
                if let Some(e) = &r.error {
                    let _ = writeln!(s, "      error: {}", e);
                } else {
                    let _ = writeln!(s, "      {}", r.evidence);
                }
            }
        }
        let met = i.expectations.iter().filter(|e| e.ok).count();
        let _ = writeln!(s, "  expected values: {}/{} met", met, i.expectations.len());
    }
    s.push_str("\ntotals\n");
    for (k, v) in totals_lines(&report.totals) {
        let _ = writeln!(s, "  {:<22} {}", k, v);
    }
    let f = failures(report);
    if !f.is_empty() {
        s.push_str("\nfailures\n");
        for line in f {
            let _ = writeln!(s, "  {}", line);
        }
    }
    s
}

pub fn render(report: &CorpusReport, cfg: &ReportConfig, format: Format, verbose: bool) -> String {
    match format {
        Format::Json => to_json(report, cfg),
        Format::Markdown => to_markdown(report, cfg),
        Format::Plain => to_plain(report, cfg, verbose),
    }
}
