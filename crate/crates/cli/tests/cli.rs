//! End-to-end tests of the binary: subcommand output, exit codes, and
//! print/parse round-trips for every literal grammar.

use std::process::{Command, Output};

use num_rational::BigRational;

use cayley_plane::algebra::Octonion;
use cayley_plane::geometry::{HPoint, ProjLine, ProjPoint};
use cayley_plane::iwasawa::GroupElement;
use cayley_plane::triality::SpinWord;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley-plane"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn table_matches_generating_relations() {
    let output = run(&["table"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let rows: Vec<Vec<&str>> = text
        .lines()
        .map(|line| line.split_whitespace().collect())
        .collect();
    assert_eq!(rows.len(), 9, "header plus eight rows");
    let cell = |i: usize, j: usize| rows[1 + i][1 + j];
    assert_eq!(cell(2, 6), "e1");
    assert_eq!(cell(3, 4), "e1");
    assert_eq!(cell(5, 7), "e1");
    assert_eq!(cell(1, 2), "e6");
    assert_eq!(cell(6, 1), "e2");
    assert_eq!(cell(2, 1), "-e6");
    for i in 1..8 {
        assert_eq!(cell(i, i), "-1");
        assert_eq!(cell(0, i), format!("e{i}"));
        assert_eq!(cell(i, 0), format!("e{i}"));
    }
}

#[test]
fn act_frozen_translation() {
    let output = run(&["act", "--element", "u(e1;0)", "--point", "(1/2,0)"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output).trim(), "(3/5 + 1/5 e1, 0)");
}

#[test]
fn act_identity_dilation() {
    let output = run(&["act", "--element", "a(1)", "--point", "(0,0)"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output).trim(), "(0, 0)");
}

#[test]
fn act_product_applies_right_to_left() {
    let staged = run(&["act", "--element", "u(e1; 0)", "--point", "(0, 0)"]);
    assert!(staged.status.success());
    let intermediate = stdout(&staged).trim().to_string();
    let then_dilated = run(&["act", "--element", "a(2)", "--point", &intermediate]);
    assert!(then_dilated.status.success());

    let product = run(&["act", "--element", "a(2) * u(e1; 0)", "--point", "(0, 0)"]);
    assert!(product.status.success());
    assert_eq!(stdout(&product), stdout(&then_dilated));
}

#[test]
fn coords_frozen_values() {
    let output = run(&["coords", "--point", "(1/3, 2/3 e2)"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output).trim(), "a(1) * u(0; e2)");

    let output = run(&["coords", "--point", "(5/13, 0)"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output).trim(), "a(3/2) * u(0; 0)");
}

#[test]
fn coords_output_acts_back_to_the_point() {
    let point = "(1/3, 2/3 e2)";
    let decomposition = run(&["coords", "--point", point]);
    assert!(decomposition.status.success());
    let element = stdout(&decomposition).trim().to_string();
    let rebuilt = run(&["act", "--element", &element, "--point", "(0, 0)"]);
    assert!(rebuilt.status.success());
    assert_eq!(stdout(&rebuilt).trim(), point);
}

#[test]
fn coords_needs_float_backend_for_irrational_scale() {
    let exact = run(&["coords", "--point", "(1/2, 0)"]);
    assert_eq!(exact.status.code(), Some(1));
    assert!(
        stderr(&exact).contains("float backend"),
        "{}",
        stderr(&exact)
    );

    let float = run(&["coords", "--point", "(1/2, 0)", "--backend", "float"]);
    assert!(float.status.success());
    assert!(stdout(&float).starts_with("a(1.7320508075688772"));
}

#[test]
fn triality_reports_the_relation() {
    let output = run(&[
        "triality",
        "--word",
        "e1; e2",
        "--x",
        "e3",
        "--y",
        "1/2 + 1/2 e1 + 1/2 e4 + 1/2 e7",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("R(xy)"), "{text}");
    assert!(text.trim_end().ends_with("holds"), "{text}");
}

#[test]
fn triality_rejects_non_unit_factor() {
    let output = run(&["triality", "--word", "2 e1", "--x", "e3", "--y", "e5"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("norm 1"), "{}", stderr(&output));
}

#[test]
fn verify_is_deterministic_and_passes() {
    let args = [
        "verify", "--suite", "algebra", "--seed", "11", "--trials", "30",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(stdout(&first), stdout(&second));
    assert!(stdout(&first).contains("[PASS]"));
}

#[test]
fn verify_unknown_suite_is_a_domain_error() {
    let output = run(&["verify", "--suite", "nope"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(
        stderr(&output).contains("unknown suite"),
        "{}",
        stderr(&output)
    );
}

#[test]
fn verify_json_reports_parse() {
    let output = run(&[
        "verify", "--suite", "geometry", "--seed", "4", "--trials", "10", "--json",
    ]);
    assert!(output.status.success());
    let reports: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid JSON");
    let list = reports.as_array().expect("array of reports");
    assert_eq!(list.len(), 1);
    assert_eq!(list[0]["suite"], "geometry");
    assert_eq!(list[0]["trials"], 10);
    assert_eq!(list[0]["failures"], serde_json::json!([]));
}

#[test]
fn usage_errors_exit_with_two() {
    let output = run(&["act", "--bogus"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["no-such-subcommand"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn help_documents_every_literal_grammar() {
    let output = run(&["--help"]);
    assert!(output.status.success());
    let text = stdout(&output);
    for needle in ["octonion", "point", "line", "word", "element", "EXAMPLES"] {
        assert!(text.contains(needle), "help lacks {needle}");
    }
}

fn round_trip<T>(text: &str)
where
    T: std::str::FromStr + std::fmt::Display + PartialEq + std::fmt::Debug,
    T::Err: std::fmt::Debug,
{
    let parsed: T = text.parse().expect("parses");
    let reparsed: T = parsed.to_string().parse().expect("round-trips");
    assert_eq!(parsed, reparsed, "literal {text}");
}

#[test]
fn literals_round_trip_exactly() {
    round_trip::<Octonion<BigRational>>("1/2 + 3 e1 - e7");
    round_trip::<Octonion<BigRational>>("-2/7, 0, 1, 0, 0, 5/3, 0, -1");
    round_trip::<Octonion<f64>>("0.125 + 0.3333333333333333 e2");
    round_trip::<HPoint<BigRational>>("(1/3, 2/3 e2)");
    round_trip::<ProjPoint<BigRational>>("(1/2 + e4)");
    round_trip::<ProjPoint<BigRational>>("(inf)");
    round_trip::<ProjLine<BigRational>>("[e1, 1/2 - e3]");
    round_trip::<ProjLine<BigRational>>("[inf]");
    round_trip::<SpinWord<BigRational>>("e1; 3/5 + 4/5 e2");
    round_trip::<GroupElement<BigRational>>("a(5/2)");
    round_trip::<GroupElement<BigRational>>("u(e1 - e3; 1/2 + e4)");
    round_trip::<GroupElement<BigRational>>("z(2 e7)");
    round_trip::<GroupElement<BigRational>>("m(e1; e2)");
}

#[test]
fn float_scalars_round_trip_through_displayed_digits() {
    let x: Octonion<f64> = "0.1 + 0.2 e1 - 0.30000000000000004 e5".parse().unwrap();
    let reparsed: Octonion<f64> = x.to_string().parse().unwrap();
    for i in 0..8 {
        assert_eq!(x.coeff(i), reparsed.coeff(i), "coefficient {i}");
    }
}
