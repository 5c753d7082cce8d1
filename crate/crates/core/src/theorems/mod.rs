//! Registry binding each structural statement to an exhaustive check over a
//! corpus of finite rings.
//!
//! Implications whose hypothesis fails on a corpus ring report
//! [`TheoremVerdict::HypothesisNotMet`] rather than a vacuous pass, so gaps in
//! corpus coverage stay visible. Equivalences evaluate every condition on
//! every ring.

mod basic;
mod group;
mod structure;
mod subject;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, RingError};
use crate::ring::RingTable;

pub use subject::{build_corpus, ComputeSets, CorpusEntry, GroupRingParts, SetsProvider, Subject};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremVerdict {
    Pass,
    Fail,
    HypothesisNotMet,
    SkippedSize,
}

/// Elements exhibiting a failure, with printable names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub elements: Vec<usize>,
    pub names: Vec<String>,
}

impl Witness {
    pub fn in_ring(r: &RingTable, elements: &[usize]) -> Self {
        Self {
            elements: elements.to_vec(),
            names: elements.iter().map(|&x| r.name(x).to_string()).collect(),
        }
    }
}

/// Result of one check on one subject.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: TheoremVerdict,
    pub witness: Option<Witness>,
    pub detail: String,
}

impl Outcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        Self {
            verdict: TheoremVerdict::Pass,
            witness: None,
            detail: detail.into(),
        }
    }

    /// A failure always names the elements that exhibit it.
    pub fn fail(witness: Witness, detail: impl Into<String>) -> Self {
        Self {
            verdict: TheoremVerdict::Fail,
            witness: Some(witness),
            detail: detail.into(),
        }
    }

    pub fn not_met(detail: impl Into<String>) -> Self {
        Self {
            verdict: TheoremVerdict::HypothesisNotMet,
            witness: None,
            detail: detail.into(),
        }
    }
}

type Check = fn(&Subject) -> Result<Outcome>;

/// A registered statement.
pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    check: Check,
}

macro_rules! theorem {
    ($id:literal, $statement:literal, $check:path) => {
        Theorem {
            id: $id,
            statement: $statement,
            check: $check,
        }
    };
}

static REGISTRY: &[Theorem] = &[
    theorem!("delta-basics", "three forms of Delta agree; J in Delta; Delta closed under sums and unit multiples; Delta meets U trivially and Id in 0; image of Delta in R/I lies in Delta(R/I) for I in J", basic::delta_basics),
    theorem!("lem-2.2", "product is DT iff factors are; R/I is DT for DT R and I in J", basic::lem_2_2),
    theorem!("lem-2.3", "(f +- f^2)d, d(f +- f^2), 2ed, 2de, 2fd, 2df lie in Delta", basic::lem_2_3),
    theorem!("lem-2.4", "in a DT ring, a^2 in Delta implies a in Delta", basic::lem_2_4),
    theorem!("cor-nil", "in a DT ring, Nil is contained in Delta", basic::cor_nil),
    theorem!("lem-2.6", "in a DT ring, er - re and fd +- df lie in Delta", basic::lem_2_6),
    theorem!("prop-2.7", "in a DT ring, 6 lies in Delta", basic::prop_2_7),
    theorem!("cor-2.8", "in a DT ring, 6 lies in J", basic::cor_2_8),
    theorem!("cor-2.9", "in a DT ring, 2 in U iff 3 in J, and 3 in U iff 2 in J", basic::cor_2_9),
    theorem!("cor-2.10", "in a DT ring, no prime other than 2 and 3 lies in Delta", basic::cor_2_10),
    theorem!("thm-3.1", "if 1 - g lies in Delta(RG) for every g != 1, G is a p-group with p in Delta(R)", group::thm_3_1),
    theorem!("lem-3.2", "augmentation maps Delta(RG) into Delta(R)", group::lem_3_2),
    theorem!("lem-3.3", "Delta(RG) intersected with RH lies in Delta(RH) for every subgroup H", group::lem_3_3),
    theorem!("lem-3.4", "if the augmentation ideal lies in J(RG), u is a unit whenever its augmentation is", group::lem_3_4),
    theorem!("lem-3.5", "if p lies in J(R) and G is a p-group, Delta(R)G lies in Delta(RG)", group::lem_3_5),
    theorem!("lem-3.6", "RG DT implies R DT", group::lem_3_6),
    theorem!("lem-3.8", "RG DT implies 1 - g^2 in Delta(RG) for all g", group::lem_3_8),
    theorem!("lem-3.9", "RG DT implies G torsion", group::lem_3_9),
    theorem!("thm-3.10", "RG DT with 2, 3 not in Delta(R) implies G elementary 2-group", group::thm_3_10),
    theorem!("thm-3.11", "RG DT with 2 in Delta(R) implies G a 2-group", group::thm_3_11),
    theorem!("thm-3.12", "RG DT with 3 in Delta(R) and G a p-group implies G a 3-group or elementary 2-group", group::thm_3_12),
    theorem!("thm-3.13", "R DT with 2 in Delta(R) and G a 2-group implies RG DT", group::thm_3_13),
    theorem!("cor-3.14", "R DT with 3 in Delta(R) and G a 3-group implies RG DT", group::cor_3_14),
    theorem!("lem-4.1", "DT rings are clean", structure::lem_4_1),
    theorem!("lem-4.2", "DT implies R/J reduced", structure::lem_4_2),
    theorem!("prop-4.3", "DT with 2 a unit implies Delta is an ideal equal to J", structure::prop_4_3),
    theorem!("prop-4.4", "DT with 3 a unit implies DI", structure::prop_4_4),
    theorem!("lem-4.5", "DI implies Delta-U", structure::lem_4_5),
    theorem!("lem-4.6", "Delta-U iff U + U in Delta iff U + U = Delta", structure::lem_4_6),
    theorem!("cor-4.7", "uniquely clean iff DI with central idempotents", structure::cor_4_7),
    theorem!("thm-4.8", "DT implies R/J = R1 x R2 with R1 zero or Boolean and R2 zero or Yaqub", structure::thm_4_8),
    theorem!("cor-4.9", "DT iff semi-tripotent", structure::cor_4_9),
    theorem!("thm-4.10", "DT iff semi-tripotent iff e+f+j iff e-f+j (commuting) iff e-f+j (orthogonal)", structure::thm_4_10),
    theorem!("thm-4.11", "DT iff semi-tripotent iff every a^2 = e + j", structure::thm_4_11),
    theorem!("thm-4.12", "DT iff semi-tripotent iff every a = e + v + j", structure::thm_4_12),
    theorem!("remark-4", "Z7 (cubes near tripotents) and Z5 (fourth powers near idempotents) are not DT", structure::remark_4),
];

pub fn registry() -> &'static [Theorem] {
    REGISTRY
}

pub fn theorem_ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|t| t.id)
}

pub fn lookup(id: &str) -> Result<&'static Theorem> {
    REGISTRY
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| RingError::UnknownTheorem(id.to_string()))
}

/// One statement evaluated on one corpus ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub subject: String,
    pub verdict: TheoremVerdict,
    pub witness: Option<Vec<usize>>,
    pub witness_names: Option<Vec<String>>,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn run(theorem: &Theorem, entry: &CorpusEntry) -> Result<TheoremReport> {
    let start = Instant::now();
    let outcome = match entry {
        CorpusEntry::Built(subject) => (theorem.check)(subject)?,
        CorpusEntry::Skipped { reason, .. } => Outcome {
            verdict: TheoremVerdict::SkippedSize,
            witness: None,
            detail: reason.clone(),
        },
    };
    let (witness, witness_names) = match outcome.witness {
        Some(w) => (Some(w.elements), Some(w.names)),
        None => (None, None),
    };
    Ok(TheoremReport {
        theorem_id: theorem.id.to_string(),
        subject: entry.label().to_string(),
        verdict: outcome.verdict,
        witness,
        witness_names,
        detail: outcome.detail,
        elapsed: start.elapsed(),
    })
}

/// Evaluates one statement on every corpus entry, in corpus order.
pub fn verify(theorem_id: &str, corpus: &[CorpusEntry]) -> Result<Vec<TheoremReport>> {
    let theorem = lookup(theorem_id)?;
    corpus.par_iter().map(|e| run(theorem, e)).collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub hypothesis_not_met: usize,
    pub skipped: usize,
}

impl Counts {
    pub fn tally<'a>(reports: impl IntoIterator<Item = &'a TheoremReport>) -> Self {
        let mut c = Counts::default();
        for r in reports {
            match r.verdict {
                TheoremVerdict::Pass => c.pass += 1,
                TheoremVerdict::Fail => c.fail += 1,
                TheoremVerdict::HypothesisNotMet => c.hypothesis_not_met += 1,
                TheoremVerdict::SkippedSize => c.skipped += 1,
            }
        }
        c
    }
}

#[derive(Debug, Clone)]
pub struct Summary {
    /// Ordered by registry position, then corpus position.
    pub reports: Vec<TheoremReport>,
    pub counts: Counts,
}

/// Every registered statement on every corpus entry. Entries are processed
/// in parallel; the report order is deterministic.
pub fn verify_all(corpus: &[CorpusEntry]) -> Result<Summary> {
    let per_entry: Vec<Vec<TheoremReport>> = corpus
        .par_iter()
        .map(|e| REGISTRY.iter().map(|t| run(t, e)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut reports = Vec::with_capacity(REGISTRY.len() * corpus.len());
    for t in 0..REGISTRY.len() {
        for entry_reports in &per_entry {
            reports.push(entry_reports[t].clone());
        }
    }
    let counts = Counts::tally(&reports);
    Ok(Summary { reports, counts })
}
