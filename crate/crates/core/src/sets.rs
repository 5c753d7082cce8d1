//! The named structural subsets of a finite ring: units, idempotents,
//! tripotents, nilpotents, the Jacobson radical and Δ.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Result, RingError};
use crate::ring::RingTable;
use crate::set::ElementSet;

/// Every structural set of one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralSets {
    pub units: ElementSet,
    pub idempotents: ElementSet,
    pub tripotents: ElementSet,
    pub nilpotents: ElementSet,
    pub jacobson: ElementSet,
    pub delta: ElementSet,
    /// Smallest `k` with `x^k = 0`, for each nilpotent `x`.
    pub nilpotency_index: BTreeMap<usize, u32>,
}

impl StructuralSets {
    pub fn compute(r: &RingTable) -> Result<Self> {
        let units = units(r);
        let (nilpotents, nilpotency_index) = nilpotents_with_index(r);
        let jacobson = jacobson(r, &units);
        let delta = delta(r, &units)?;
        Ok(Self {
            idempotents: idempotents(r),
            tripotents: tripotents(r),
            nilpotents,
            nilpotency_index,
            jacobson,
            delta,
            units,
        })
    }

    /// Checks that the sets have the shape of `r`: right order, and the
    /// elementwise defining equations of Id and Tr. Used when loading sets
    /// computed elsewhere.
    pub fn matches(&self, r: &RingTable) -> bool {
        let n = r.order();
        let all = [
            &self.units,
            &self.idempotents,
            &self.tripotents,
            &self.nilpotents,
            &self.jacobson,
            &self.delta,
        ];
        all.iter().all(|s| s.order() == n)
            && r.elements().all(|x| self.idempotents.contains(x) == (r.mul(x, x) == x))
            && r.elements().all(|x| self.tripotents.contains(x) == (r.pow(x, 3) == x))
            && self.nilpotency_index.keys().copied().eq(self.nilpotents.iter())
    }
}

/// A ring bundled with its structural sets.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub ring: RingTable,
    pub sets: StructuralSets,
}

impl Analysis {
    pub fn new(ring: RingTable) -> Result<Self> {
        let sets = StructuralSets::compute(&ring)?;
        Ok(Self { ring, sets })
    }

    pub fn from_parts(ring: RingTable, sets: StructuralSets) -> Self {
        Self { ring, sets }
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.sets.units.contains(x)
    }

    pub fn in_delta(&self, x: usize) -> bool {
        self.sets.delta.contains(x)
    }

    pub fn in_jacobson(&self, x: usize) -> bool {
        self.sets.jacobson.contains(x)
    }
}

/// Units: elements with a two-sided inverse.
pub fn units(r: &RingTable) -> ElementSet {
    ElementSet::from_predicate(r.order(), |x| is_unit_direct(r, x))
}

/// Direct invertibility test by scanning for a two-sided inverse.
pub fn is_unit_direct(r: &RingTable, x: usize) -> bool {
    r.elements()
        .any(|y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one())
}

pub fn idempotents(r: &RingTable) -> ElementSet {
    ElementSet::from_predicate(r.order(), |x| r.mul(x, x) == x)
}

/// Elements with `x³ = x`.
pub fn tripotents(r: &RingTable) -> ElementSet {
    ElementSet::from_predicate(r.order(), |x| r.mul(x, r.mul(x, x)) == x)
}

pub fn nilpotents(r: &RingTable) -> ElementSet {
    nilpotents_with_index(r).0
}

/// Nilpotent elements and their nilpotency indices. Powers are tried up to
/// the ring order, which bounds the index in a finite ring.
pub fn nilpotents_with_index(r: &RingTable) -> (ElementSet, BTreeMap<usize, u32>) {
    let mut set = ElementSet::empty(r.order());
    let mut index = BTreeMap::new();
    for x in r.elements() {
        let mut p = x;
        for k in 1..=r.order() as u32 {
            if p == r.zero() {
                set.insert(x);
                index.insert(x, k);
                break;
            }
            p = r.mul(p, x);
        }
    }
    (set, index)
}

/// Jacobson radical via quasi-regularity: `x ∈ J` iff `1 - ax` is a unit for
/// every `a`.
pub fn jacobson(r: &RingTable, units: &ElementSet) -> ElementSet {
    let mask: Vec<bool> = r
        .elements()
        .into_par_iter()
        .map(|x| {
            r.elements()
                .all(|a| units.contains(r.sub(r.one(), r.mul(a, x))))
        })
        .collect();
    ElementSet::from_predicate(r.order(), |x| mask[x])
}

/// The three defining forms of Δ, computed independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaForms {
    /// `{x : x + u ∈ U for all u ∈ U}`
    pub translate: ElementSet,
    /// `{x : 1 - xu ∈ U for all u ∈ U}`
    pub right: ElementSet,
    /// `{x : 1 - ux ∈ U for all u ∈ U}`
    pub left: ElementSet,
}

impl DeltaForms {
    pub fn agree(&self) -> bool {
        self.translate == self.right && self.right == self.left
    }
}

pub fn delta_forms(r: &RingTable, units: &ElementSet) -> DeltaForms {
    let u: Vec<usize> = units.to_vec();
    let one = r.one();
    DeltaForms {
        translate: ElementSet::from_predicate(r.order(), |x| {
            u.iter().all(|&v| units.contains(r.add(x, v)))
        }),
        right: ElementSet::from_predicate(r.order(), |x| {
            u.iter().all(|&v| units.contains(r.sub(one, r.mul(x, v))))
        }),
        left: ElementSet::from_predicate(r.order(), |x| {
            u.iter().all(|&v| units.contains(r.sub(one, r.mul(v, x))))
        }),
    }
}

/// Δ(R), after asserting that all three defining forms coincide.
pub fn delta(r: &RingTable, units: &ElementSet) -> Result<ElementSet> {
    let forms = delta_forms(r, units);
    if !forms.agree() {
        let witness = forms
            .translate
            .first_outside(&forms.right)
            .or_else(|| forms.right.first_outside(&forms.translate))
            .or_else(|| forms.translate.first_outside(&forms.left))
            .or_else(|| forms.left.first_outside(&forms.translate));
        return Err(RingError::Inconsistent(format!(
            "{}: the three forms of Delta disagree at element {:?}",
            r.label(),
            witness
        )));
    }
    Ok(forms.translate)
}

/// Direct Jacobson membership test that recomputes unit membership on the
/// fly instead of consulting precomputed sets.
pub fn in_jacobson_direct(r: &RingTable, x: usize) -> bool {
    r.elements()
        .all(|a| is_unit_direct(r, r.sub(r.one(), r.mul(a, x))))
}

/// Direct Δ membership test (translation form) with on-the-fly unit checks.
pub fn in_delta_direct(r: &RingTable, x: usize) -> bool {
    r.elements()
        .filter(|&u| is_unit_direct(r, u))
        .all(|u| is_unit_direct(r, r.add(x, u)))
}

/// First failing closure property of Δ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureViolation {
    pub property: &'static str,
    pub witness: Vec<usize>,
}

/// Audits that Δ is closed under addition, negation, and left and right
/// multiplication by units, and that `1 + Δ ⊆ U`.
pub fn audit_delta_closure(r: &RingTable, sets: &StructuralSets) -> std::result::Result<(), ClosureViolation> {
    let delta = sets.delta.to_vec();
    let units = sets.units.to_vec();
    let fail = |property, witness| Err(ClosureViolation { property, witness });
    for &d in &delta {
        if !sets.delta.contains(r.neg(d)) {
            return fail("negation", vec![d]);
        }
        if !sets.units.contains(r.add(r.one(), d)) {
            return fail("one_plus_delta_in_units", vec![d]);
        }
        for &e in &delta {
            if !sets.delta.contains(r.add(d, e)) {
                return fail("addition", vec![d, e]);
            }
        }
        for &u in &units {
            if !sets.delta.contains(r.mul(d, u)) {
                return fail("right_unit_multiple", vec![d, u]);
            }
            if !sets.delta.contains(r.mul(u, d)) {
                return fail("left_unit_multiple", vec![u, d]);
            }
        }
    }
    Ok(())
}

pub fn is_central(r: &RingTable, x: usize) -> bool {
    r.elements().all(|a| r.mul(x, a) == r.mul(a, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_matrix, make_upper_triangular, make_zn};
    use crate::ring::DEFAULT_SIZE_CAP;

    fn sets_of(n: usize) -> (RingTable, StructuralSets) {
        let r = make_zn(n).unwrap();
        let s = StructuralSets::compute(&r).unwrap();
        (r, s)
    }

    #[test]
    fn zn_examples() {
        let (_, s6) = sets_of(6);
        assert_eq!(s6.units.to_vec(), vec![1, 5]);
        assert_eq!(s6.jacobson.to_vec(), vec![0]);
        let (_, s2) = sets_of(2);
        assert_eq!(s2.units.to_vec(), vec![1]);
        assert_eq!(s2.delta.to_vec(), vec![0]);
        let (_, s4) = sets_of(4);
        assert_eq!(s4.tripotents.to_vec(), vec![0, 1, 3]);
        assert_eq!(s4.nilpotents.to_vec(), vec![0, 2]);
        assert_eq!(s4.jacobson.to_vec(), vec![0, 2]);
        assert_eq!(s4.delta.to_vec(), vec![0, 2]);
        assert_eq!(s4.nilpotency_index.get(&2), Some(&2));
        assert_eq!(s4.nilpotency_index.get(&0), Some(&1));
        let (_, s5) = sets_of(5);
        assert_eq!(s5.tripotents.to_vec(), vec![0, 1, 4]);
        let (_, s3) = sets_of(3);
        assert_eq!(s3.delta.to_vec(), vec![0]);
    }

    #[test]
    fn matrix_ring_is_semisimple() {
        let m2 = make_matrix(2, &make_zn(2).unwrap(), DEFAULT_SIZE_CAP).unwrap();
        let s = StructuralSets::compute(&m2).unwrap();
        assert_eq!(s.jacobson.to_vec(), vec![0]);
        assert_eq!(s.delta.to_vec(), vec![0]);
        assert_eq!(s.units.len(), 6);
        audit_delta_closure(&m2, &s).unwrap();
        // e11 = index 1 and e12 = index 2 do not commute
        assert!(!is_central(&m2, 1));
        assert!(is_central(&m2, m2.one()));
    }

    #[test]
    fn upper_triangular_radical() {
        let ut = make_upper_triangular(2, &make_zn(2).unwrap(), DEFAULT_SIZE_CAP).unwrap();
        let s = StructuralSets::compute(&ut).unwrap();
        assert_eq!(s.jacobson.to_vec(), vec![0, 2]);
        assert!(is_central(&ut, ut.one()));
    }

    #[test]
    fn delta_forms_agree_and_closure_holds() {
        for n in 2..=16 {
            let (r, s) = sets_of(n);
            assert!(delta_forms(&r, &s.units).agree());
            audit_delta_closure(&r, &s).unwrap();
            assert!(s.jacobson.is_subset(&s.delta));
            assert!(s.delta.intersection(&s.units).is_empty());
            assert_eq!(s.delta.intersection(&s.idempotents).to_vec(), vec![0]);
            assert!(s.idempotents.is_subset(&s.tripotents));
            assert!(s.matches(&r));
        }
    }

    #[test]
    fn direct_membership_matches_sets() {
        let (r, s) = sets_of(12);
        for x in r.elements() {
            assert_eq!(in_jacobson_direct(&r, x), s.jacobson.contains(x));
            assert_eq!(in_delta_direct(&r, x), s.delta.contains(x));
        }
    }

    #[test]
    fn central_in_commutative_ring() {
        let (r, _) = sets_of(6);
        assert!(is_central(&r, 3));
    }
}
