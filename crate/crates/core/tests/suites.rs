use parity_descents::verify::{run_identity_suite, Status, SuiteOptions, SUITES};

fn run(id: &str, max_n: Option<usize>) {
    let opts = SuiteOptions {
        max_n,
        ..SuiteOptions::default()
    };
    let report = run_identity_suite(id, &opts).unwrap();
    assert!(!report.records.is_empty(), "{id} recorded nothing");
    let failures: Vec<_> = report
        .failures()
        .map(|r| format!("{}: {} vs {}", r.identity, r.left, r.right))
        .collect();
    assert!(failures.is_empty(), "{id}:\n{}", failures.join("\n"));
}

#[test]
fn brute_force_suites_to_seven() {
    for id in ["recursion_vs_brute", "closed_form_vs_brute", "eulerian"] {
        run(id, Some(7));
    }
}

#[test]
fn algebraic_suites_at_default_bounds() {
    for id in [
        "closed_form_vs_recursion",
        "boundary_values",
        "odd_r",
        "symmetry",
        "r_eq_p_at_z1",
        "r_split_relation",
        "p_complement_symmetry",
        "q_values",
        "m_values",
        "xi_transfer",
        "coefficient_recursions",
        "differential_forms",
    ] {
        run(id, None);
    }
}

#[test]
fn genocchi_suite_to_eight() {
    run("genocchi", Some(8));
}

#[test]
fn bijection_suite_to_six() {
    run("bijections", Some(6));
}

#[test]
fn printed_tables_flag_exactly_the_two_transpositions() {
    let report = run_identity_suite("paper_tables", &SuiteOptions::default()).unwrap();
    assert!(report.passed());
    let flagged: Vec<_> = report
        .records
        .iter()
        .filter(|r| r.status == Status::ExpectedDeviation)
        .map(|r| (r.left.as_str(), r.right.as_str()))
        .collect();
    assert_eq!(flagged, [("6912", "6192"), ("6912", "6192")]);
}

#[test]
fn catalog_ids_are_unique_and_runnable_names() {
    let mut ids: Vec<_> = SUITES.iter().map(|(id, _)| *id).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), SUITES.len());
}
