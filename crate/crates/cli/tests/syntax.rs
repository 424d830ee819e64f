use homograde::{load_corpus, parse_definition, print_definition, shipped_corpus, ErrorKind};
use homograde_core::{ExtInt, FieldSpec};
use homograde_harness::{CheckId, Expectation, Expected, Invariant, ModuleSource, Verdict};
use proptest::prelude::*;

const MINIMAL: &str = "\
field Q
ring R = poly[x,y] / (x^2)
module M over R = coker [[x, y], [0, x]] twists (0,0)
module k over R = residue
module W over R = canonical
pair P1 = (M, k)
";

fn err(text: &str) -> homograde::ParseError {
    parse_definition(text, "t").expect_err("should not parse")
}

#[test]
fn minimal_file() {
    let inst = parse_definition(MINIMAL, "minimal").unwrap();
    assert_eq!(inst.id, "minimal");
    assert_eq!(inst.ring.field(), FieldSpec::Rationals);
    assert_eq!(inst.ring.variables(), ["x", "y"]);
    assert_eq!(inst.ring.krull_dim(), ExtInt::Finite(1));
    assert_eq!(inst.modules.len(), 3);
    assert_eq!(inst.pairs[0].m, "M");
    match &inst.modules[0].source {
        ModuleSource::Coker { rows, twists } => {
            assert_eq!(rows.len(), 2);
            assert_eq!(twists, &vec![0, 0]);
        }
        other => panic!("unexpected source {:?}", other),
    }
}

#[test]
fn whitespace_and_comments_are_ignored() {
    let spaced = "  field   Q  # rationals\n\n# a comment line\nring R=poly[ x , y ]/( x ^ 2 )\n";
    let a = parse_definition(spaced, "a").unwrap();
    let b = parse_definition("field Q\nring R = poly[x,y] / (x^2)\n", "a").unwrap();
    assert_eq!(a, b);
}

#[test]
fn inhomogeneous_generator() {
    let e = err("ring R = poly[x,y] / (x^2 + y)\n");
    assert_eq!(e.kind, ErrorKind::Semantic);
    assert_eq!((e.line, e.col), (1, 23));
    assert!(e.message.contains("inhomogeneous"), "{}", e);
}

#[test]
fn undeclared_ring() {
    let e = err("module M over R = residue\n");
    assert_eq!(e.kind, ErrorKind::Semantic);
    assert_eq!((e.line, e.col), (1, 15));
    assert!(e.message.contains("not declared"), "{}", e);
}

#[test]
fn module_over_another_ring() {
    let e = err("ring R = poly[x]\nmodule M over S = residue\n");
    assert_eq!(e.kind, ErrorKind::Semantic);
    assert_eq!(e.line, 2);
    assert!(e.message.contains("S"), "{}", e);
}

#[test]
fn unknown_variable() {
    let e = err("ring R = poly[x,y]\nmodule M over R = quotient (x, z)\n");
    assert_eq!((e.kind, e.line, e.col), (ErrorKind::Semantic, 2, 32));
    assert!(e.message.contains("unknown variable z"));
}

#[test]
fn syntax_errors_carry_positions() {
    let e = err("ring R = poly[x,y] / (x^2\n");
    assert_eq!((e.kind, e.line, e.col), (ErrorKind::Syntax, 1, 26));
    let e = err("field Q\nring R = poly[x]\npair P = (k k)\n");
    assert_eq!((e.kind, e.line, e.col), (ErrorKind::Syntax, 3, 13));
    let e = err("ring R = poly[x] $\n");
    assert_eq!((e.kind, e.col), (ErrorKind::Syntax, 18));
    assert_eq!(e.to_string(), "1:18: syntax error: unexpected character '$'");
}

#[test]
fn inhomogeneous_presentation_for_twists() {
    let e = err("ring R = poly[x,y]\nmodule M over R = coker [[x], [y]] twists (0, 1)\n");
    assert_eq!(e.kind, ErrorKind::Semantic);
    assert!(e.message.contains("inhomogeneous"), "{}", e);
}

#[test]
fn mixed_twists_make_this_matrix_inhomogeneous() {
    // every entry has degree 1, so both generators must sit in the same degree
    let e = err("ring R = poly[x,y] / (x^2)\nmodule M over R = coker [[x, y], [0, x]] twists (0,1)\n");
    assert_eq!((e.kind, e.line), (ErrorKind::Semantic, 2));
    assert!(e.message.contains("inhomogeneous"), "{}", e);
}

#[test]
fn semantic_checks_on_declarations() {
    assert!(err("ring R = poly[x]\nring S = poly[y]\n").message.contains("one ring"));
    assert!(err("ring R = poly[x]\nfield Q\n").message.contains("before"));
    assert!(err("field Fp 2\nring R = poly[x]\n").message.contains("characteristic 2"));
    assert!(err("ring R = poly[x]\nmodule k over R = residue\nmodule k over R = residue\n").message.contains("twice"));
    assert!(err("ring R = poly[x]\nmodule k over R = residue\nchecks k: nonsense\n")
        .message
        .contains("unknown check id"));
    assert!(err("ring R = poly[x]\nmodule k over R = residue\nchecks k: tensor_cm\n")
        .message
        .contains("does not apply"));
    assert!(err("ring R = poly[x]\nmodule k over R = residue\nexpect P(k) = 1\n").message.contains("takes"));
    assert!(err("ring R = poly[x, y] / (x^2, x*y)\nmodule W over R = canonical\n").kind == ErrorKind::Semantic);
    assert!(err("# nothing\n").message.contains("no ring"));
}

#[test]
fn expectations_and_scopes() {
    let text = format!(
        "{}checks P1: ischebeck_qpd, grade_facts\nexpect qpd(k) = 1\nexpect P(k, k) >= 10\nexpect pd(k) = inf\nexpect qid(k) = ?\nexpect grade(M, k) = 0\nexpect check ischebeck_qpd P1 = hypotheses-not-met\nnote k has an infinite # resolution\n",
        MINIMAL
    );
    let inst = parse_definition(&text, "t").unwrap();
    assert_eq!(inst.scopes["P1"], vec![CheckId::IschebeckQpd, CheckId::GradeFacts]);
    assert!(inst.in_scope("k", CheckId::GradeFacts));
    assert!(!inst.in_scope("P1", CheckId::TensorCm));
    assert_eq!(
        inst.expectations[1],
        Expectation::Value {
            invariant: Invariant::ExtSup,
            args: vec!["k".into(), "k".into()],
            expected: Expected::AtLeast(ExtInt::Finite(10))
        }
    );
    assert_eq!(
        inst.expectations[2],
        Expectation::Value {
            invariant: Invariant::Pd,
            args: vec!["k".into()],
            expected: Expected::Exact(ExtInt::PosInf)
        }
    );
    assert_eq!(
        inst.expectations[3],
        Expectation::Value { invariant: Invariant::Qid, args: vec!["k".into()], expected: Expected::Unknown }
    );
    assert_eq!(inst.expected_verdict(CheckId::IschebeckQpd, "P1"), Some(Verdict::HypothesesNotMet));
    assert_eq!(inst.notes, vec!["k has an infinite # resolution".to_string()]);
}

#[test]
fn prime_fields_and_fractions() {
    let inst = parse_definition("field Fp 7\nring R = poly[x,y] / (3/2*x^2 - 8*y^2)\n", "p").unwrap();
    assert_eq!(inst.ring.field(), FieldSpec::Prime(7));
    let printed = print_definition(&inst);
    assert!(printed.starts_with("field Fp 7\nring R = poly[x, y] / ("), "{}", printed);
    assert!(err("field Fp 7\nring R = poly[x] / (1/7*x)\n").message.contains("coefficient"));
}

#[test]
fn shipped_corpus_round_trips() {
    let instances = load_corpus(&shipped_corpus()).unwrap();
    assert!(instances.len() >= 6);
    for inst in instances {
        let printed = print_definition(&inst);
        let again = parse_definition(&printed, &inst.id).unwrap_or_else(|e| panic!("{}: {}\n{}", inst.id, e, printed));
        assert_eq!(inst, again, "{}", inst.id);
        assert_eq!(print_definition(&again), printed);
    }
}

fn poly_text() -> impl Strategy<Value = String> {
    // homogeneous of degree 2 in x, y, z with small rational coefficients
    let mono = prop::sample::select(vec!["x^2", "x*y", "y^2", "x*z", "y*z", "z^2", "(x - y)*z", "(2*x + 3/4*y)^2"]);
    let coef = (-5i64..=5, 1i64..=4).prop_filter("nonzero", |(n, _)| *n != 0);
    prop::collection::vec((coef, mono), 1..4)
        .prop_map(|ts| ts.iter().map(|((n, d), m)| format!("({}/{})*{}", n, d, m)).collect::<Vec<_>>().join(" + "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_definitions_round_trip(gens in prop::collection::vec(poly_text(), 0..3), q in poly_text(), twist in -2i32..3) {
        let ideal = if gens.is_empty() { String::new() } else { format!(" / ({})", gens.join(", ")) };
        let text = format!(
            "field Q\nring R = poly[x, y, z]{}\nmodule M over R = quotient ({})\nmodule F over R = free ({}, 0)\nmodule k over R = residue\npair p = (M, k)\nexpect depth(M) >= 0\n",
            ideal, q, twist
        );
        let inst = parse_definition(&text, "r").map_err(|e| TestCaseError::fail(format!("{}\n{}", e, text)))?;
        let printed = print_definition(&inst);
        let again = parse_definition(&printed, "r").map_err(|e| TestCaseError::fail(format!("{}\n{}", e, printed)))?;
        prop_assert_eq!(inst, again);
    }
}
