use std::sync::{Arc, OnceLock};

use crate::classify::{is_dt, CoverVerdict};
use crate::error::{Result, RingError};
use crate::expr::RingExpr;
use crate::group_ring::GroupRing;
use crate::ring::RingTable;
use crate::sets::{Analysis, StructuralSets};

/// Source of structural sets for a ring, e.g. direct computation or a cache.
pub trait SetsProvider: Send + Sync {
    fn structural_sets(&self, r: &RingTable) -> Result<StructuralSets>;
}

/// Computes the sets from scratch every time.
#[derive(Debug, Default, Clone, Copy)]
pub struct ComputeSets;

impl SetsProvider for ComputeSets {
    fn structural_sets(&self, r: &RingTable) -> Result<StructuralSets> {
        StructuralSets::compute(r)
    }
}

/// The pieces of a group-ring subject.
#[derive(Debug)]
pub struct GroupRingParts {
    pub gr: GroupRing,
    pub base: Analysis,
    base_dt: OnceLock<bool>,
}

impl GroupRingParts {
    pub fn base_is_dt(&self) -> bool {
        *self.base_dt.get_or_init(|| is_dt(&self.base).holds())
    }
}

/// One built corpus ring, with whatever structure its expression exposes.
pub struct Subject {
    pub expr: RingExpr,
    pub analysis: Analysis,
    /// Present when the expression is `GR(R,G)`.
    pub group_ring: Option<GroupRingParts>,
    /// Present when the expression is `Prod(A,B)`.
    pub factors: Option<(Analysis, Analysis)>,
    pub cap: usize,
    provider: Arc<dyn SetsProvider>,
    dt: OnceLock<CoverVerdict>,
}

impl std::fmt::Debug for Subject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Subject").field("expr", &self.expr.to_string()).finish_non_exhaustive()
    }
}

impl Subject {
    pub fn build(expr: RingExpr, cap: usize, provider: Arc<dyn SetsProvider>) -> Result<Self> {
        let analyse = |r: RingTable| -> Result<Analysis> {
            let sets = provider.structural_sets(&r)?;
            Ok(Analysis::from_parts(r, sets))
        };
        let (ring, group_ring) = match expr.build_group_ring(cap)? {
            Some(gr) => {
                let base = analyse(gr.base.clone())?;
                let ring = gr.ring.clone();
                let parts = GroupRingParts {
                    gr,
                    base,
                    base_dt: OnceLock::new(),
                };
                (ring, Some(parts))
            }
            None => (expr.build(cap)?, None),
        };
        let factors = match &expr {
            RingExpr::Prod(a, b) => Some((analyse(a.build(cap)?)?, analyse(b.build(cap)?)?)),
            _ => None,
        };
        let analysis = analyse(ring)?;
        Ok(Self {
            expr,
            analysis,
            group_ring,
            factors,
            cap,
            provider,
            dt: OnceLock::new(),
        })
    }

    pub fn label(&self) -> &str {
        self.analysis.ring.label()
    }

    pub fn ring(&self) -> &RingTable {
        &self.analysis.ring
    }

    pub fn sets(&self) -> &StructuralSets {
        &self.analysis.sets
    }

    pub fn dt(&self) -> &CoverVerdict {
        self.dt.get_or_init(|| is_dt(&self.analysis))
    }

    pub fn is_dt(&self) -> bool {
        self.dt().holds()
    }

    /// Analyses a derived ring (quotient, subgroup ring) with the same
    /// provider as the subject.
    pub fn analyse(&self, ring: RingTable) -> Result<Analysis> {
        let sets = self.provider.structural_sets(&ring)?;
        Ok(Analysis::from_parts(ring, sets))
    }
}

/// A corpus entry: either built, or skipped because it exceeds the size cap.
#[derive(Debug)]
pub enum CorpusEntry {
    Built(Box<Subject>),
    Skipped { label: String, reason: String },
}

impl CorpusEntry {
    pub fn label(&self) -> &str {
        match self {
            CorpusEntry::Built(s) => s.label(),
            CorpusEntry::Skipped { label, .. } => label,
        }
    }
}

/// Builds every expression. Size-cap violations become skipped entries;
/// any other construction error is returned.
pub fn build_corpus(
    exprs: &[RingExpr],
    cap: usize,
    provider: Arc<dyn SetsProvider>,
) -> Result<Vec<CorpusEntry>> {
    use rayon::prelude::*;
    exprs
        .par_iter()
        .map(|e| match Subject::build(e.clone(), cap, provider.clone()) {
            Ok(s) => Ok(CorpusEntry::Built(Box::new(s))),
            Err(err @ RingError::SizeCap { .. }) => Ok(CorpusEntry::Skipped {
                label: e.to_string(),
                reason: err.to_string(),
            }),
            Err(err) => Err(err),
        })
        .collect()
}
