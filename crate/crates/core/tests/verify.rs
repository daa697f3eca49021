use operad_hopf::verify::{run_suite, Suite, VerifyOptions};

#[test]
fn every_suite_passes_at_default_sizes() {
    for suite in Suite::ALL {
        let report = run_suite(suite, &VerifyOptions::default()).unwrap();
        assert!(report.passed, "{report}");
        assert!(report.checks.iter().all(|c| c.cases > 0), "{report}");
    }
}

#[test]
fn single_operad_selection() {
    let opts = VerifyOptions { operad: Some("arb".into()), max_size: Some(5), ..Default::default() };
    let report = run_suite(Suite::AntipodeAgreement, &opts).unwrap();
    assert!(report.passed);
    assert_eq!(report.checks.len(), 1);
    assert!(report.checks[0].name.contains("recursive = schroeder = colorings"));
    let bad = VerifyOptions { operad: Some("lie".into()), ..Default::default() };
    assert!(run_suite(Suite::Axioms, &bad).is_err());
}
