//! Worked examples, checked against independent mod-n arithmetic where the
//! ring is a residue ring.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use dtring_core::classify::{
    clean_representation_counts, decompose, is_boolean, is_clean, is_delta_u, is_di, is_dt,
    is_semi_tripotent, is_uniquely_clean, is_yaqub, rj_factorization, DecompositionKind, Factor,
};
use dtring_core::construct::{
    ideal_generated, make_matrix, make_product, make_quotient, make_upper_triangular, make_zn,
};
use dtring_core::group::{
    element_order, is_elementary_2group, is_p_group, make_cyclic, make_elementary_abelian,
    make_group_product, subgroup_from_elements, subgroup_generated,
};
use dtring_core::group_ring::{augmentation_ideal, embed_subgroup_ring, make_group_ring};
use dtring_core::sets::{self, audit_delta_closure, delta_forms, is_central};
use dtring_core::theorems::{build_corpus, verify, verify_all, ComputeSets, TheoremVerdict};
use dtring_core::{verify_ring_axioms, Analysis, RingTable, DEFAULT_SIZE_CAP as CAP};

fn zn(n: usize) -> RingTable {
    make_zn(n).unwrap()
}

fn an(r: RingTable) -> Analysis {
    Analysis::new(r).unwrap()
}

fn set(r: &RingTable, f: impl Fn(usize) -> bool) -> Vec<usize> {
    r.elements().filter(|&x| f(x)).collect()
}

// Independent residue arithmetic.
fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn oracle_units(n: usize) -> Vec<usize> {
    (0..n).filter(|&x| gcd(x, n) == 1 && (n > 1)).collect()
}

fn oracle_delta(n: usize) -> Vec<usize> {
    let u = oracle_units(n);
    (0..n).filter(|&x| u.iter().all(|&v| u.contains(&((x + v) % n)))).collect()
}

fn oracle_jacobson(n: usize) -> Vec<usize> {
    let u = oracle_units(n);
    (0..n).filter(|&x| (0..n).all(|a| u.contains(&((1 + n * n - a * x % n) % n)))).collect()
}

#[test]
fn residue_rings_match_modular_arithmetic() {
    for n in 2..=30 {
        let r = zn(n);
        for a in 0..n {
            for b in 0..n {
                assert_eq!(r.add(a, b), (a + b) % n);
                assert_eq!(r.mul(a, b), a * b % n);
            }
        }
        let s = sets::StructuralSets::compute(&r).unwrap();
        assert_eq!(s.units.to_vec(), oracle_units(n), "units of Z({n})");
        assert_eq!(s.delta.to_vec(), oracle_delta(n), "delta of Z({n})");
        assert_eq!(s.jacobson.to_vec(), oracle_jacobson(n), "J of Z({n})");
        assert_eq!(s.tripotents.to_vec(), (0..n).filter(|&x| x * x % n * x % n == x).collect::<Vec<_>>());
        assert_eq!(s.idempotents.to_vec(), (0..n).filter(|&x| x * x % n == x).collect::<Vec<_>>());
    }
}

#[test]
fn constructors() {
    let z2 = zn(2);
    assert_eq!((z2.add(1, 1), z2.mul(1, 1)), (0, 1));
    assert_eq!(zn(4).mul(2, 2), 0);
    let z6 = zn(6);
    assert!(z6.elements().all(|x| z6.pow(x, 3) == x));

    let p23 = make_product(&zn(2), &zn(3), CAP).unwrap();
    assert_eq!(p23.order(), 6);
    assert!(p23.elements().all(|x| p23.pow(x, 3) == x));
    assert_eq!(is_dt(&an(p23)).holds(), is_dt(&an(zn(6))).holds());
    let p22 = make_product(&z2, &z2, CAP).unwrap();
    assert!(is_boolean(&p22).holds);
    let p27 = make_product(&z2, &zn(7), CAP).unwrap();
    assert_eq!(p27.order(), 14);
    assert!(!is_dt(&an(p27)).holds());

    let m2 = make_matrix(2, &z2, CAP).unwrap();
    assert_eq!(m2.order(), 16);
    let m1 = make_matrix(1, &zn(4), CAP).unwrap();
    assert_eq!(m1.order(), 4);
    assert_eq!(m1.mul(2, 2), 0);
    assert_eq!(m1.mul(3, 3), 1);
    assert!(!is_semi_tripotent(&an(m2.clone())).holds);

    let ut = make_upper_triangular(2, &z2, CAP).unwrap();
    assert_eq!(ut.order(), 8);
    let uta = an(ut.clone());
    assert_eq!(uta.sets.jacobson.len(), 2);
    assert!(is_dt(&uta).holds());
    let q = make_quotient(&ut, &uta.sets.jacobson).unwrap();
    assert_eq!(q.order(), 4);
    assert!(is_boolean(&q).holds);
}

#[test]
fn ideals_and_quotients() {
    assert_eq!(ideal_generated(&zn(6), &[2]).to_vec(), vec![0, 2, 4]);
    assert_eq!(ideal_generated(&zn(4), &[]).to_vec(), vec![0]);
    let m2 = make_matrix(2, &zn(2), CAP).unwrap();
    assert_eq!(ideal_generated(&m2, &[2]).len(), 16);

    let q = make_quotient(&zn(6), &ideal_generated(&zn(6), &[2])).unwrap();
    assert_eq!(q.order(), 2);
    assert_eq!((q.add(1, 1), q.mul(1, 1)), (0, 1));
    assert_eq!(make_quotient(&zn(4), &ideal_generated(&zn(4), &[2])).unwrap().order(), 2);
}

#[test]
fn axioms() {
    assert!(verify_ring_axioms(&zn(5)).is_ok());
    let gr = make_group_ring(&zn(2), &make_cyclic(4, CAP).unwrap(), CAP).unwrap();
    assert!(verify_ring_axioms(&gr.ring).is_ok());
    let z5 = zn(5);
    let mut mul = z5.mul_table().to_vec();
    mul[2 * 5 + 3] = 4;
    let bad = RingTable::from_tables(
        "bad",
        5,
        z5.add_table().to_vec(),
        mul,
        0,
        1,
        z5.names().to_vec(),
    )
    .unwrap();
    let v = verify_ring_axioms(&bad).unwrap_err();
    assert_eq!(v.witness.len(), 3);
}

#[test]
fn structural_sets() {
    assert_eq!(sets::units(&zn(6)).to_vec(), vec![1, 5]);
    assert_eq!(sets::units(&zn(2)).to_vec(), vec![1]);
    let z2c2 = make_group_ring(&zn(2), &make_cyclic(2, CAP).unwrap(), CAP).unwrap();
    // 1 = index 1, g = index 2
    assert_eq!(sets::units(&z2c2.ring).to_vec(), vec![1, 2]);
    assert_eq!(sets::tripotents(&zn(4)).to_vec(), vec![0, 1, 3]);
    assert_eq!(sets::tripotents(&zn(5)).to_vec(), vec![0, 1, 4]);
    assert_eq!(sets::nilpotents(&zn(4)).to_vec(), vec![0, 2]);

    for (r, j) in [(zn(4), vec![0, 2]), (zn(6), vec![0]), (make_matrix(2, &zn(2), CAP).unwrap(), vec![0])] {
        let u = sets::units(&r);
        assert_eq!(sets::jacobson(&r, &u).to_vec(), j);
    }
    for (n, d) in [(4, vec![0, 2]), (3, vec![0]), (2, vec![0])] {
        let r = zn(n);
        assert_eq!(sets::delta(&r, &sets::units(&r)).unwrap().to_vec(), d);
    }

    for r in [
        zn(4),
        make_group_ring(&zn(2), &make_cyclic(4, CAP).unwrap(), CAP).unwrap().ring,
        make_matrix(2, &zn(2), CAP).unwrap(),
    ] {
        let a = an(r);
        assert!(audit_delta_closure(&a.ring, &a.sets).is_ok(), "{}", a.ring.label());
        assert!(delta_forms(&a.ring, &a.sets.units).agree());
    }

    assert!(is_central(&zn(6), 3));
    let m2 = make_matrix(2, &zn(2), CAP).unwrap();
    assert!(!is_central(&m2, 1)); // e11
    let ut = make_upper_triangular(2, &zn(2), CAP).unwrap();
    assert!(is_central(&ut, ut.one()));
}

#[test]
fn set_relations_on_corpus() {
    for e in common::default_corpus() {
        let r = e.build(CAP).unwrap();
        let a = an(r);
        let (r, s) = (&a.ring, &a.sets);
        assert!(s.jacobson.is_subset(&s.delta));
        assert!(s.idempotents.is_subset(&s.tripotents));
        for x in [r.zero(), r.one(), r.neg(r.one())] {
            assert!(s.tripotents.contains(x));
        }
        assert!(s.delta.intersection(&s.units).is_empty());
        assert_eq!(s.delta.intersection(&s.idempotents).to_vec(), vec![r.zero()]);
        assert_eq!(s.units.to_vec(), set(r, |x| r.elements().any(|y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one())));
    }
}

#[test]
fn classification_examples() {
    let z4 = an(zn(4));
    assert!(is_dt(&z4).holds());
    let z5 = an(zn(5));
    assert_eq!(is_dt(&z5).verdict.witness, Some(2));
    assert!(!is_dt(&an(zn(7))).holds());
    assert!(is_semi_tripotent(&an(zn(9))).holds);
    assert!(!is_semi_tripotent(&z5).holds);
    assert!(is_clean(&z4).holds);
    assert!(is_uniquely_clean(&an(zn(2))).holds);
    let z3 = an(zn(3));
    assert_eq!(clean_representation_counts(&z3), vec![1, 1, 2]);
    assert!(!is_uniquely_clean(&z3).holds);
    assert!(is_delta_u(&an(zn(2))).holds);
    assert!(is_delta_u(&z4).holds);
    assert!(!is_delta_u(&z5).holds);
    assert!(is_di(&z4).holds);
    assert!(!is_di(&z3).holds);
    assert!(is_di(&an(zn(2))).holds);
    assert!(is_yaqub(&zn(3)).holds);
    assert!(!is_yaqub(&zn(9)).holds);
}

#[test]
fn decomposition_examples() {
    let z4 = an(zn(4));
    // lexicographically first certificate; (3, 0) is also valid
    let d = decompose(&z4, 3, DecompositionKind::TripotentDelta).unwrap().unwrap();
    assert_eq!(d.parts, vec![1, 2]);
    let alt = dtring_core::classify::Decomposition { kind: DecompositionKind::TripotentDelta, parts: vec![3, 0], target: 3 };
    assert!(alt.verify(&z4.ring));

    let z2 = an(zn(2));
    assert_eq!(decompose(&z2, 0, DecompositionKind::SumIdem).unwrap().unwrap().parts, vec![0, 0, 0]);

    let z9 = an(zn(9));
    let d = decompose(&z9, 5, DecompositionKind::IdemInvolution).unwrap().unwrap();
    assert!(d.verify(&z9.ring));
    let v = d.parts[1];
    assert_eq!(v * v % 9, 1);

    assert!(decompose(&an(zn(5)), 2, DecompositionKind::TripotentDelta).unwrap().is_none());
    assert!(decompose(&z4, 7, DecompositionKind::TripotentDelta).is_err());
}

#[test]
fn factorization_examples() {
    let f = rj_factorization(&an(zn(6))).unwrap();
    assert!(f.holds());
    assert_eq!((f.boolean_part.order(), f.yaqub_part.order()), (2, 3));
    let f = rj_factorization(&an(zn(4))).unwrap();
    assert!(f.holds());
    assert_eq!(f.boolean_part.order(), 2);
    assert!(matches!(f.yaqub_part, Factor::Zero));
    let f = rj_factorization(&an(zn(9))).unwrap();
    assert!(f.holds());
    assert!(matches!(f.boolean_part, Factor::Zero));
    assert_eq!(f.yaqub_part.order(), 3);
}

#[test]
fn groups() {
    let c4 = make_cyclic(4, CAP).unwrap();
    let orders: Vec<usize> = c4.elements().map(|x| element_order(&c4, x)).collect();
    assert_eq!(orders, vec![1, 4, 2, 4]);
    let v4 = make_elementary_abelian(2, 2, CAP).unwrap();
    assert!(is_elementary_2group(&v4));
    let c6 = make_group_product(&make_cyclic(2, CAP).unwrap(), &make_cyclic(3, CAP).unwrap(), CAP).unwrap();
    let mut orders: Vec<usize> = c6.elements().map(|x| element_order(&c6, x)).collect();
    orders.sort();
    assert_eq!(orders, vec![1, 2, 3, 3, 6, 6]);
    assert!(is_p_group(&c4, 2));
    assert!(!is_p_group(&make_cyclic(6, CAP).unwrap(), 2));
    assert_eq!(subgroup_generated(&c4, 2).unwrap().order(), 2);
    assert_eq!(subgroup_generated(&make_cyclic(6, CAP).unwrap(), 2).unwrap().order(), 3);
    assert!(subgroup_from_elements(&c4, &BTreeSet::from([0, 1])).is_err());
}

#[test]
fn group_rings() {
    let z2c2 = make_group_ring(&zn(2), &make_cyclic(2, CAP).unwrap(), CAP).unwrap();
    assert_eq!(z2c2.ring.order(), 4);
    let one_plus_g = z2c2.ring.add(z2c2.embed_scalar(1), z2c2.embed_group(1));
    assert_eq!(z2c2.ring.mul(one_plus_g, one_plus_g), 0);
    assert_eq!(z2c2.augmentation(one_plus_g), 0);
    assert_eq!(augmentation_ideal(&z2c2).unwrap().to_vec(), vec![0, one_plus_g]);

    let z2c1 = make_group_ring(&zn(2), &make_cyclic(1, CAP).unwrap(), CAP).unwrap();
    assert_eq!(z2c1.ring.order(), 2);
    assert_eq!(augmentation_ideal(&z2c1).unwrap().to_vec(), vec![0]);

    let z3c3 = make_group_ring(&zn(3), &make_cyclic(3, CAP).unwrap(), CAP).unwrap();
    assert_eq!(z3c3.ring.order(), 27);
    assert!(is_dt(&an(z3c3.ring.clone())).holds());
    assert_eq!(z3c3.augmentation(z3c3.encode(&[1, 1, 1])), 0);
    assert_eq!(augmentation_ideal(&z3c3).unwrap().len(), 9);

    let z4c2 = make_group_ring(&zn(4), &make_cyclic(2, CAP).unwrap(), CAP).unwrap();
    assert_eq!(z4c2.augmentation(z4c2.encode(&[3, 2])), 1);

    let c4 = make_cyclic(4, CAP).unwrap();
    let z2c4 = make_group_ring(&zn(2), &c4, CAP).unwrap();
    let h = subgroup_generated(&c4, 2).unwrap();
    let sub = embed_subgroup_ring(&z2c4, &h, CAP).unwrap();
    assert_eq!(z2c4.ring.order(), 16);
    assert_eq!(sub.support.len(), 4);
    assert!(z2c4.check_augmentation_homomorphism().is_ok());
}

fn corpus(exprs: Vec<dtring_core::RingExpr>) -> Vec<dtring_core::theorems::CorpusEntry> {
    build_corpus(&exprs, CAP, Arc::new(ComputeSets)).unwrap()
}

#[test]
fn theorem_examples() {
    use common::*;
    let rings = corpus(vec![z(4), z(9), z(6), ut(2, z(2))]);
    assert!(verify("cor-2.8", &rings).unwrap().iter().all(|r| r.verdict == TheoremVerdict::Pass));

    let rings = corpus(vec![z(7)]);
    assert_eq!(verify("remark-4", &rings).unwrap()[0].verdict, TheoremVerdict::Pass);

    let rings = corpus(vec![gr(z(4), c(2)), gr(z(4), c(4))]);
    assert!(verify("thm-3.11", &rings).unwrap().iter().all(|r| r.verdict == TheoremVerdict::Pass));

    let empty = verify_all(&[]).unwrap();
    assert!(empty.reports.is_empty());
    assert_eq!(empty.counts, Default::default());

    let m2 = corpus(vec![mat(2, z(2))]);
    let summary = verify_all(&m2).unwrap();
    assert_eq!(summary.counts.fail, 0);
    for id in ["lem-2.4", "cor-nil", "lem-2.6", "prop-2.7", "cor-2.8", "cor-2.9", "cor-2.10", "lem-4.1", "lem-4.2", "prop-4.3", "prop-4.4", "thm-4.8"] {
        let r = summary.reports.iter().find(|r| r.theorem_id == id).unwrap();
        assert_eq!(r.verdict, TheoremVerdict::HypothesisNotMet, "{id}");
    }

    assert!(verify("no-such-id", &m2).is_err());
}

#[test]
fn oversized_entries_are_skipped() {
    use common::*;
    let rings = build_corpus(&[z(2), gr(z(3), c(9))], CAP, Arc::new(ComputeSets)).unwrap();
    let reports = verify("cor-2.8", &rings).unwrap();
    assert_eq!(reports[1].verdict, TheoremVerdict::SkippedSize);
    assert_eq!(reports[1].subject, "GR(Z(3),C(9))");
}
