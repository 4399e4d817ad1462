use modlie::pipeline::{verify_ermolaev_standalone, verify_theorem, Status, VerificationConfig};
use serde_json::json;

#[test]
fn default_run_passes() {
    let report = verify_theorem(&VerificationConfig::default()).unwrap();
    let failed: Vec<_> = report.failures().iter().map(|c| c.id.clone()).collect();
    assert!(report.verdict, "failed checks: {failed:?}");
    assert!(report.checks.len() > 60);
}

#[test]
fn reports_are_byte_identical() {
    let a = verify_theorem(&VerificationConfig::default())
        .unwrap()
        .to_json();
    let b = verify_theorem(&VerificationConfig::default())
        .unwrap()
        .to_json();
    assert_eq!(a, b);
    let text = verify_theorem(&VerificationConfig::default())
        .unwrap()
        .to_text();
    assert!(text.contains("verdict: PASS"));
}

#[test]
fn one_wrong_expectation_fails_one_check() {
    let mut config = VerificationConfig::default();
    config
        .expected_overrides
        .insert("V.dimension".into(), json!(9));
    let report = verify_theorem(&config).unwrap();
    assert!(!report.verdict);
    let failed: Vec<_> = report.failures().iter().map(|c| c.id.as_str()).collect();
    assert_eq!(failed, ["V.dimension"]);
    let baseline = verify_theorem(&VerificationConfig::default()).unwrap();
    assert_eq!(report.checks.len(), baseline.checks.len());
}

#[test]
fn other_characteristic_diverges_at_l() {
    let config = VerificationConfig {
        p: 5,
        ..VerificationConfig::default()
    };
    let report = verify_theorem(&config).unwrap();
    assert!(!report.verdict);
    assert_eq!(report.check("L.dimension").unwrap().status, Status::Fail);
    assert!(report.passed("g.dimension"));
}

#[test]
fn highest_root_partner_is_a_negative_control() {
    let config = VerificationConfig {
        f_label: "f2342".into(),
        ..VerificationConfig::default()
    };
    let report = verify_theorem(&config).unwrap();
    assert!(!report.verdict);
    assert_eq!(report.check("tau.f_degree").unwrap().computed, json!(-14));
    assert!(!report.passed("L.dimension"));
}

#[test]
fn sign_choices_are_recorded() {
    let report = verify_theorem(&VerificationConfig::default()).unwrap();
    let elements: Vec<_> = report
        .sign_choices
        .iter()
        .map(|s| s.element.as_str())
        .collect();
    for e in ["f'", "V(4)", "e_1", "f_1"] {
        assert!(elements.contains(&e), "{elements:?}");
    }
}

#[test]
fn bad_configuration_is_an_error() {
    let config = VerificationConfig {
        p: 4,
        ..VerificationConfig::default()
    };
    assert!(verify_theorem(&config).is_err());
    let config = VerificationConfig {
        sign_convention: "other".into(),
        ..VerificationConfig::default()
    };
    assert!(verify_theorem(&config).is_err());
}

#[test]
fn ermolaev_reports() {
    let r = verify_ermolaev_standalone(1, 1, 3, 1).unwrap();
    assert!(r.verdict, "{}", r.to_text());
    assert!(r.passed("er.recognition"));
    let r = verify_ermolaev_standalone(1, 1, 5, 1).unwrap();
    assert!(r.verdict);
    assert_eq!(r.check("er.jacobi").unwrap().computed, json!(false));
}
