//! The JSON files under fixtures/ must stay in lockstep with the in-crate
//! builders and with canonical serialization.

use quadset::qset::QuadraticSet;
use quadset::{fixtures, solfile};

fn read(name: &str) -> (String, QuadraticSet) {
    let path = format!("{}/../../fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    let qs = solfile::read_qset(&text).unwrap_or_else(|e| panic!("{path}: {e}"));
    (text, qs)
}

#[test]
fn fixture_tables_match_builders() {
    let expected: Vec<(&str, QuadraticSet)> = vec![
        ("perm3", fixtures::perm3()),
        ("nonbraided3", fixtures::nonbraided3()),
        ("q5", fixtures::quandle5()),
        ("quandle4", fixtures::quandle4()),
        ("quandle9", fixtures::quandle9()),
        ("skew3", fixtures::skew3()),
        ("triv3a", QuadraticSet::trivial(3)),
        ("triv3b", QuadraticSet::trivial(3)),
    ];
    for (name, qs) in expected {
        let (_, parsed) = read(name);
        assert_eq!(parsed, qs, "{name}");
    }
}

#[test]
fn fixture_files_are_canonical() {
    for name in [
        "perm3",
        "nonbraided3",
        "q5",
        "quandle4",
        "quandle9",
        "skew3",
        "triv3a",
        "triv3b",
    ] {
        let (text, _) = read(name);
        let doc = solfile::SolutionFile::parse(&text).unwrap();
        assert_eq!(doc.to_canonical_json(), text.trim_end(), "{name}");
        let meta = doc.metadata.expect("fixtures carry provenance");
        assert!(meta.provenance.unwrap_or_default().len() > 10, "{name}");
    }
}
