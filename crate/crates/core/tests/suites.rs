use seb_core::suites::{run_suite, Suite};

#[test]
fn every_suite_passes_at_default_limits() {
    let reports = run_suite(Suite::All, None, true).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert!(r.passed(), "{r}: {:?}", r.first_failure());
    }
}

#[test]
fn parallel_and_sequential_reports_agree() {
    for suite in [Suite::Oracle, Suite::Worpitzky, Suite::Lex] {
        let seq = run_suite(suite, Some(5), false).unwrap();
        let par = run_suite(suite, Some(5), true).unwrap();
        assert_eq!(seq, par, "{suite}");
    }
}
