use invcayley::verifier::{enumerate_rings, run_suite, run_suite_with, SuiteOptions, TheoremId};
use invcayley::GenusClass;

#[test]
fn catalog_to_sixteen_has_49_rings() {
    assert_eq!(enumerate_rings(16).len(), 49);
    let report = run_suite(16, 1_000_000_000);
    assert_eq!(report.rings, 49);
    assert_eq!(report.failure_count(), 0);
    assert_eq!(report.skip_count(), 0);
    let json = report.to_json();
    assert!(json.contains("\"catalog_version\": \"1\""));
    assert!(json.contains("\"KMN_FORMULA\""));
}

#[test]
fn toroidal_rings_to_forty() {
    let mut opts = SuiteOptions::new(40, 1_000_000_000);
    opts.theorems = vec![TheoremId::Main];
    let report = run_suite_with(&opts);
    let main = report.theorem(TheoremId::Main).unwrap();
    let toroidal: Vec<&str> =
        main.evidence.iter().filter(|e| e.verdict == GenusClass::Toroidal).map(|e| e.spec.as_str()).collect();
    assert_eq!(
        toroidal,
        [
            "Z8", "Z2[x,y]/(x^2,xy,y^2)", "Z4[x]/(x^2,2x)", "Z3 x Z3", "Z3 x Z4", "Z3 x Z2[x]/(x^2)", "Z3 x Z5", "Z16",
            "Z2 x Z3 x Z3", "Z4 x Z5", "Z2[x]/(x^2) x Z5", "Z3 x Z7", "Z5 x Z5", "Z3 x Z9", "Z4 x Z7",
            "Z2[x]/(x^2) x Z7", "Z2 x Z3 x Z5", "Z32", "Z3 x Z11", "Z5 x Z7", "Z4 x Z9", "Z2[x]/(x^2) x Z9",
            "Z3 x Z13",
        ]
    );
    for e in main.evidence.iter().filter(|e| e.verdict == GenusClass::Toroidal) {
        assert!(e.nonplanarity.is_some(), "{}", e.spec);
        assert_eq!(e.certificate.as_ref().map(|c| c.embedding.genus), Some(1), "{}", e.spec);
    }
}
