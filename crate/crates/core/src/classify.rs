//! Ring-class membership tests and per-element decomposition certificates.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::construct::{ideal_generated, quotient_with_projection, Quotient};
use crate::error::{Result, RingError};
use crate::ring::RingTable;
use crate::sets::{in_delta_direct, in_jacobson_direct, is_central, Analysis, StructuralSets};
use crate::set::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DecompositionKind {
    /// `a = e + d`, `e³ = e`, `d ∈ Δ`.
    TripotentDelta,
    /// `a = e + f + j`, commuting idempotents, `j ∈ J`.
    SumIdem,
    /// `a = e - f + j`, commuting idempotents, `j ∈ J`.
    DiffIdemCommuting,
    /// `a = e - f + j`, orthogonal idempotents, `j ∈ J`.
    DiffIdemOrth,
    /// `a² = e + j`, `e` idempotent, `j ∈ J`.
    SquareIdem,
    /// `a = e + v + j`, `e` idempotent, `v² = 1`, `ev = ve`, `j ∈ J`.
    IdemInvolution,
}

impl DecompositionKind {
    pub const ALL: [DecompositionKind; 6] = [
        DecompositionKind::TripotentDelta,
        DecompositionKind::SumIdem,
        DecompositionKind::DiffIdemCommuting,
        DecompositionKind::DiffIdemOrth,
        DecompositionKind::SquareIdem,
        DecompositionKind::IdemInvolution,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DecompositionKind::TripotentDelta => "TripotentDelta",
            DecompositionKind::SumIdem => "SumIdem",
            DecompositionKind::DiffIdemCommuting => "DiffIdemCommuting",
            DecompositionKind::DiffIdemOrth => "DiffIdemOrth",
            DecompositionKind::SquareIdem => "SquareIdem",
            DecompositionKind::IdemInvolution => "IdemInvolution",
        }
    }
}

impl fmt::Display for DecompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DecompositionKind {
    type Err = RingError;

    /// Accepts the variant name in any case, with or without `-`/`_`.
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .collect::<String>()
            .to_ascii_lowercase();
        DecompositionKind::ALL
            .into_iter()
            .find(|k| k.as_str().to_ascii_lowercase() == norm)
            .ok_or_else(|| RingError::UnknownKind(s.to_string()))
    }
}

/// A certificate that `target` decomposes as described by `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub parts: Vec<usize>,
    pub target: usize,
}

impl Decomposition {
    /// Re-checks the defining equations straight from the ring tables,
    /// recomputing J and Δ membership without the precomputed sets.
    pub fn verify(&self, r: &RingTable) -> bool {
        let n = r.order();
        if self.target >= n || self.parts.iter().any(|&p| p >= n) {
            return false;
        }
        let idem = |x: usize| r.mul(x, x) == x;
        let p = &self.parts;
        match (self.kind, p.as_slice()) {
            (DecompositionKind::TripotentDelta, &[e, d]) => {
                r.mul(e, r.mul(e, e)) == e && in_delta_direct(r, d) && r.add(e, d) == self.target
            }
            (DecompositionKind::SumIdem, &[e, f, j]) => {
                idem(e)
                    && idem(f)
                    && r.mul(e, f) == r.mul(f, e)
                    && in_jacobson_direct(r, j)
                    && r.add(r.add(e, f), j) == self.target
            }
            (DecompositionKind::DiffIdemCommuting, &[e, f, j]) => {
                idem(e)
                    && idem(f)
                    && r.mul(e, f) == r.mul(f, e)
                    && in_jacobson_direct(r, j)
                    && r.add(r.sub(e, f), j) == self.target
            }
            (DecompositionKind::DiffIdemOrth, &[e, f, j]) => {
                idem(e)
                    && idem(f)
                    && r.mul(e, f) == r.zero()
                    && r.mul(f, e) == r.zero()
                    && in_jacobson_direct(r, j)
                    && r.add(r.sub(e, f), j) == self.target
            }
            (DecompositionKind::SquareIdem, &[e, j]) => {
                idem(e)
                    && in_jacobson_direct(r, j)
                    && r.add(e, j) == r.mul(self.target, self.target)
            }
            (DecompositionKind::IdemInvolution, &[e, v, j]) => {
                idem(e)
                    && r.mul(v, v) == r.one()
                    && r.mul(e, v) == r.mul(v, e)
                    && in_jacobson_direct(r, j)
                    && r.add(r.add(e, v), j) == self.target
            }
            _ => false,
        }
    }
}

/// For every element, the lexicographically smallest certificate of `kind`,
/// or `None` when the element has no such decomposition.
pub fn cover(a: &Analysis, kind: DecompositionKind) -> Vec<Option<Decomposition>> {
    let r = &a.ring;
    let s = &a.sets;
    let mut out: Vec<Option<Decomposition>> = vec![None; r.order()];
    let record = |target: usize, parts: &[usize], out: &mut Vec<Option<Decomposition>>| {
        if out[target].is_none() {
            out[target] = Some(Decomposition {
                kind,
                parts: parts.to_vec(),
                target,
            });
        }
    };
    let idem = s.idempotents.to_vec();
    let jac = s.jacobson.to_vec();
    match kind {
        DecompositionKind::TripotentDelta => {
            for t in s.tripotents.iter() {
                for d in s.delta.iter() {
                    record(r.add(t, d), &[t, d], &mut out);
                }
            }
        }
        DecompositionKind::SumIdem
        | DecompositionKind::DiffIdemCommuting
        | DecompositionKind::DiffIdemOrth => {
            for &e in &idem {
                for &f in &idem {
                    let (ef, fe) = (r.mul(e, f), r.mul(f, e));
                    let ok = match kind {
                        DecompositionKind::DiffIdemOrth => ef == r.zero() && fe == r.zero(),
                        _ => ef == fe,
                    };
                    if !ok {
                        continue;
                    }
                    let base = match kind {
                        DecompositionKind::SumIdem => r.add(e, f),
                        _ => r.sub(e, f),
                    };
                    for &j in &jac {
                        record(r.add(base, j), &[e, f, j], &mut out);
                    }
                }
            }
        }
        DecompositionKind::SquareIdem => {
            let mut preimages: Vec<Vec<usize>> = vec![Vec::new(); r.order()];
            for x in r.elements() {
                preimages[r.mul(x, x)].push(x);
            }
            for &e in &idem {
                for &j in &jac {
                    for &x in &preimages[r.add(e, j)] {
                        record(x, &[e, j], &mut out);
                    }
                }
            }
        }
        DecompositionKind::IdemInvolution => {
            let involutions: Vec<usize> = r.elements().filter(|&v| r.mul(v, v) == r.one()).collect();
            for &e in &idem {
                for &v in &involutions {
                    if r.mul(e, v) != r.mul(v, e) {
                        continue;
                    }
                    let base = r.add(e, v);
                    for &j in &jac {
                        record(r.add(base, j), &[e, v, j], &mut out);
                    }
                }
            }
        }
    }
    out
}

/// Smallest certificate of `kind` for the element `x`.
pub fn decompose(a: &Analysis, x: usize, kind: DecompositionKind) -> Result<Option<Decomposition>> {
    if x >= a.ring.order() {
        return Err(RingError::ElementOutOfRange {
            element: x,
            order: a.ring.order(),
        });
    }
    Ok(cover(a, kind).swap_remove(x))
}

/// Outcome of a class test, with the first counterexample element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<usize>,
}

impl Verdict {
    fn from_counterexample(witness: Option<usize>) -> Self {
        Self {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Result of a cover test together with the certificate for every covered
/// element.
#[derive(Debug, Clone)]
pub struct CoverVerdict {
    pub verdict: Verdict,
    pub certificates: Vec<Option<Decomposition>>,
}

impl CoverVerdict {
    pub fn holds(&self) -> bool {
        self.verdict.holds
    }
}

pub fn is_coverable(a: &Analysis, kind: DecompositionKind) -> CoverVerdict {
    let certificates = cover(a, kind);
    let witness = certificates.iter().position(Option::is_none);
    CoverVerdict {
        verdict: Verdict::from_counterexample(witness),
        certificates,
    }
}

/// `R = Tr(R) + Δ(R)`.
pub fn is_dt(a: &Analysis) -> CoverVerdict {
    is_coverable(a, DecompositionKind::TripotentDelta)
}

fn sum_cover(r: &RingTable, left: &ElementSet, right: &ElementSet) -> ElementSet {
    let mut covered = ElementSet::empty(r.order());
    for x in left.iter() {
        for y in right.iter() {
            covered.insert(r.add(x, y));
        }
    }
    covered
}

fn first_uncovered(covered: &ElementSet) -> Option<usize> {
    (0..covered.order()).find(|&x| !covered.contains(x))
}

/// `R = Tr(R) + J(R)`.
pub fn is_semi_tripotent(a: &Analysis) -> Verdict {
    let c = sum_cover(&a.ring, &a.sets.tripotents, &a.sets.jacobson);
    Verdict::from_counterexample(first_uncovered(&c))
}

/// `R = Id(R) + U(R)`.
pub fn is_clean(a: &Analysis) -> Verdict {
    let c = sum_cover(&a.ring, &a.sets.idempotents, &a.sets.units);
    Verdict::from_counterexample(first_uncovered(&c))
}

/// Number of ordered pairs `(e, u) ∈ Id × U` with `e + u = x`, per `x`.
pub fn clean_representation_counts(a: &Analysis) -> Vec<usize> {
    let r = &a.ring;
    let mut counts = vec![0; r.order()];
    for e in a.sets.idempotents.iter() {
        for u in a.sets.units.iter() {
            counts[r.add(e, u)] += 1;
        }
    }
    counts
}

/// Every element has exactly one `(e, u) ∈ Id × U` with `e + u = x`.
pub fn is_uniquely_clean(a: &Analysis) -> Verdict {
    let counts = clean_representation_counts(a);
    Verdict::from_counterexample(counts.iter().position(|&c| c != 1))
}

/// The ΔU test plus the three-way comparison with `U + U` and Δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeltaUVerdict {
    /// `1 + Δ = U`
    pub holds: bool,
    pub witness: Option<usize>,
    /// `U + U ⊆ Δ`
    pub unit_sums_in_delta: bool,
    /// `U + U = Δ`
    pub unit_sums_equal_delta: bool,
}

impl DeltaUVerdict {
    /// The three conditions are either all true or all false.
    pub fn conditions_agree(&self) -> bool {
        self.holds == self.unit_sums_in_delta && self.holds == self.unit_sums_equal_delta
    }
}

pub fn is_delta_u(a: &Analysis) -> DeltaUVerdict {
    let r = &a.ring;
    let shifted = ElementSet::from_indices(r.order(), a.sets.delta.iter().map(|d| r.add(r.one(), d)));
    let witness = a
        .sets
        .units
        .first_outside(&shifted)
        .or_else(|| shifted.first_outside(&a.sets.units));
    let unit_sums = sum_cover(r, &a.sets.units, &a.sets.units);
    DeltaUVerdict {
        holds: witness.is_none(),
        witness,
        unit_sums_in_delta: unit_sums.is_subset(&a.sets.delta),
        unit_sums_equal_delta: unit_sums == a.sets.delta,
    }
}

/// `R = Id(R) + Δ(R)`.
pub fn is_di(a: &Analysis) -> Verdict {
    let c = sum_cover(&a.ring, &a.sets.idempotents, &a.sets.delta);
    Verdict::from_counterexample(first_uncovered(&c))
}

pub fn is_boolean(r: &RingTable) -> Verdict {
    Verdict::from_counterexample(r.elements().find(|&x| r.mul(x, x) != x))
}

/// Every element is tripotent and `3·1` is nilpotent.
pub fn is_yaqub(r: &RingTable) -> Verdict {
    if let Some(x) = r.elements().find(|&x| r.pow(x, 3) != x) {
        return Verdict::from_counterexample(Some(x));
    }
    let three = r.from_int(3);
    let nilpotent = (1..=r.order() as u32).any(|k| r.pow(three, k) == r.zero());
    Verdict::from_counterexample((!nilpotent).then_some(three))
}

/// The square of every unit is an idempotent plus an element of J.
pub fn is_two_uj(a: &Analysis) -> Verdict {
    let r = &a.ring;
    let witness = a.sets.units.iter().find(|&u| {
        let sq = r.mul(u, u);
        !a.sets
            .idempotents
            .iter()
            .any(|e| a.sets.jacobson.contains(r.sub(sq, e)))
    });
    Verdict::from_counterexample(witness)
}

/// No nonzero element squares to zero.
pub fn is_reduced(r: &RingTable) -> Verdict {
    Verdict::from_counterexample(
        r.elements()
            .find(|&x| x != r.zero() && r.mul(x, x) == r.zero()),
    )
}

/// `R / J(R)` with its projection.
pub fn quotient_by_radical(a: &Analysis) -> Result<Quotient> {
    quotient_with_projection(&a.ring, &a.sets.jacobson)
}

/// Class membership flags for one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub label: String,
    pub dt: bool,
    pub semi_tripotent: bool,
    pub clean: bool,
    pub uniquely_clean: bool,
    pub delta_u: bool,
    pub di: bool,
    pub boolean: bool,
    pub yaqub: bool,
    pub two_uj: bool,
    pub reduced_mod_j: bool,
    /// First element of the DT cover that fails, if any.
    pub witness: Option<usize>,
    /// Counterexample element per failed class.
    pub witnesses: BTreeMap<String, usize>,
}

pub fn classify(a: &Analysis) -> Result<ClassVerdict> {
    let rj = quotient_by_radical(a)?;
    let reduced = is_reduced(&rj.ring);
    let dt = is_dt(a).verdict;
    let delta_u = is_delta_u(a);
    let flags: [(&str, Verdict); 10] = [
        ("dt", dt),
        ("semi_tripotent", is_semi_tripotent(a)),
        ("clean", is_clean(a)),
        ("uniquely_clean", is_uniquely_clean(a)),
        (
            "delta_u",
            Verdict {
                holds: delta_u.holds,
                witness: delta_u.witness,
            },
        ),
        ("di", is_di(a)),
        ("boolean", is_boolean(&a.ring)),
        ("yaqub", is_yaqub(&a.ring)),
        ("two_uj", is_two_uj(a)),
        (
            "reduced_mod_j",
            Verdict {
                holds: reduced.holds,
                witness: reduced.witness.map(|c| rj.representatives[c]),
            },
        ),
    ];
    let witnesses = flags
        .iter()
        .filter_map(|(name, v)| v.witness.map(|w| (name.to_string(), w)))
        .collect();
    let get = |i: usize| flags[i].1.holds;
    Ok(ClassVerdict {
        label: a.ring.label().to_string(),
        dt: get(0),
        semi_tripotent: get(1),
        clean: get(2),
        uniquely_clean: get(3),
        delta_u: get(4),
        di: get(5),
        boolean: get(6),
        yaqub: get(7),
        two_uj: get(8),
        reduced_mod_j: get(9),
        witness: dt.witness,
        witnesses,
    })
}

/// Every idempotent is central.
pub fn idempotents_central(r: &RingTable, sets: &StructuralSets) -> Verdict {
    Verdict::from_counterexample(sets.idempotents.iter().find(|&e| !is_central(r, e)))
}

/// A factor of `R/J(R)` that may be the zero ring.
#[derive(Debug, Clone)]
pub enum Factor {
    Zero,
    Ring(Quotient),
}

impl Factor {
    pub fn order(&self) -> usize {
        match self {
            Factor::Zero => 1,
            Factor::Ring(q) => q.ring.order(),
        }
    }

    pub fn ring(&self) -> Option<&RingTable> {
        match self {
            Factor::Zero => None,
            Factor::Ring(q) => Some(&q.ring),
        }
    }

    fn project(&self, x: usize) -> usize {
        match self {
            Factor::Zero => 0,
            Factor::Ring(q) => q.projection[x],
        }
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.ring().map_or(0, |r| r.add(a, b))
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.ring().map_or(0, |r| r.mul(a, b))
    }

    fn one(&self) -> usize {
        self.ring().map_or(0, RingTable::one)
    }
}

/// Why the natural map `R/J → R/J/2 × R/J/3` is not a ring isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismFailure {
    pub reason: String,
    /// Elements of `R/J` (as coset indices) exhibiting the failure.
    pub witness: Vec<usize>,
}

/// `R/J(R)` split along `2` and `3`.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub reduced: Quotient,
    /// `R₁ = R̄ / 2R̄`
    pub boolean_part: Factor,
    /// `R₂ = R̄ / 3R̄`
    pub yaqub_part: Factor,
    pub isomorphism: std::result::Result<(), IsomorphismFailure>,
    /// `R₁` is zero or Boolean.
    pub boolean_ok: Verdict,
    /// `R₂` is zero or Yaqub.
    pub yaqub_ok: Verdict,
    pub input_is_dt: bool,
}

impl Factorization {
    pub fn holds(&self) -> bool {
        self.isomorphism.is_ok() && self.boolean_ok.holds && self.yaqub_ok.holds
    }
}

fn split_off(rbar: &RingTable, k: i64) -> Result<Factor> {
    let gen = rbar.from_int(k);
    let ideal = ideal_generated(rbar, &[gen]);
    match quotient_with_projection(rbar, &ideal) {
        Ok(q) => Ok(Factor::Ring(q)),
        Err(RingError::TrivialQuotient) => Ok(Factor::Zero),
        Err(e) => Err(e),
    }
}

/// Builds `R̄ = R/J(R)`, `R₁ = R̄/2R̄`, `R₂ = R̄/3R̄`, checks that the natural
/// map `R̄ → R₁ × R₂` is a ring isomorphism, and tests `R₁` for Boolean and
/// `R₂` for Yaqub. Runs on any ring; for non-DT input the failures are
/// reported rather than raised.
pub fn rj_factorization(a: &Analysis) -> Result<Factorization> {
    let reduced = quotient_by_radical(a)?;
    let rbar = &reduced.ring;
    let r1 = split_off(rbar, 2)?;
    let r2 = split_off(rbar, 3)?;

    let image = |x: usize| (r1.project(x), r2.project(x));
    let isomorphism = (|| {
        let fail = |reason: &str, witness: Vec<usize>| {
            Err(IsomorphismFailure {
                reason: reason.to_string(),
                witness,
            })
        };
        let mut preimage: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for x in rbar.elements() {
            if let Some(&y) = preimage.get(&image(x)) {
                return fail("natural map is not injective", vec![y, x]);
            }
            preimage.insert(image(x), x);
        }
        if rbar.order() != r1.order() * r2.order() {
            return fail("natural map is not surjective", vec![]);
        }
        if image(rbar.one()) != (r1.one(), r2.one()) {
            return fail("natural map does not preserve one", vec![rbar.one()]);
        }
        for x in rbar.elements() {
            for y in rbar.elements() {
                let (ix, iy) = (image(x), image(y));
                let sum = (r1.add(ix.0, iy.0), r2.add(ix.1, iy.1));
                let prod = (r1.mul(ix.0, iy.0), r2.mul(ix.1, iy.1));
                if image(rbar.add(x, y)) != sum {
                    return fail("natural map does not preserve addition", vec![x, y]);
                }
                if image(rbar.mul(x, y)) != prod {
                    return fail("natural map does not preserve multiplication", vec![x, y]);
                }
            }
        }
        Ok(())
    })();

    let boolean_ok = r1.ring().map_or(
        Verdict {
            holds: true,
            witness: None,
        },
        is_boolean,
    );
    let yaqub_ok = r2.ring().map_or(
        Verdict {
            holds: true,
            witness: None,
        },
        is_yaqub,
    );
    Ok(Factorization {
        input_is_dt: is_dt(a).holds(),
        reduced,
        boolean_part: r1,
        yaqub_part: r2,
        isomorphism,
        boolean_ok,
        yaqub_ok,
    })
}
