mod common;

use std::sync::Arc;

use dtring_core::theorems::{build_corpus, verify_all, ComputeSets, TheoremVerdict};
use dtring_core::DEFAULT_SIZE_CAP;

#[test]
fn default_corpus_has_no_failures() {
    let corpus = build_corpus(&common::default_corpus(), DEFAULT_SIZE_CAP, Arc::new(ComputeSets)).unwrap();
    let summary = verify_all(&corpus).unwrap();
    for r in &summary.reports {
        if r.verdict == TheoremVerdict::Fail {
            eprintln!("{} on {}: {:?} {}", r.theorem_id, r.subject, r.witness_names, r.detail);
        }
    }
    eprintln!("{:?}", summary.counts);
    assert_eq!(summary.counts.fail, 0);
    assert_eq!(summary.counts.skipped, 0);
}

#[test]
fn every_statement_is_exercised() {
    let corpus = build_corpus(&common::default_corpus(), DEFAULT_SIZE_CAP, Arc::new(ComputeSets)).unwrap();
    let summary = verify_all(&corpus).unwrap();
    for id in dtring_core::theorems::theorem_ids() {
        let passes: Vec<&str> = summary
            .reports
            .iter()
            .filter(|r| r.theorem_id == id && r.verdict == TheoremVerdict::Pass)
            .map(|r| r.subject.as_str())
            .collect();
        eprintln!("{id}: {passes:?}");
        assert!(!passes.is_empty(), "{id} never has its hypothesis met");
    }
}
