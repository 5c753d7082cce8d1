//! Checks on group rings `RG`.

use crate::classify::is_dt;
use crate::error::Result;
use crate::group::{
    all_subgroups, element_order, is_elementary_2group, is_p_group, is_power_of, is_torsion,
    prime_divisors,
};
use crate::group_ring::augmentation_ideal;

use super::{GroupRingParts, Outcome, Subject, Witness};

fn parts(s: &Subject) -> std::result::Result<&GroupRingParts, Outcome> {
    s.group_ring
        .as_ref()
        .ok_or_else(|| Outcome::not_met("not a group ring"))
}

macro_rules! group_ring_or_not_met {
    ($s:expr) => {
        match parts($s) {
            Ok(p) => p,
            Err(o) => return Ok(o),
        }
    };
}

/// The prime `p` with `G` a `p`-group, if there is one. The trivial group
/// has none.
fn group_prime(p: &GroupRingParts) -> Option<u64> {
    match prime_divisors(p.gr.group.order() as u64).as_slice() {
        &[q] if is_p_group(&p.gr.group, q) => Some(q),
        _ => None,
    }
}

/// A group element with order outside the allowed set, as a ring witness.
fn group_witness(s: &Subject, p: &GroupRingParts, ok: impl Fn(usize) -> bool) -> Option<Witness> {
    p.gr
        .group
        .elements()
        .find(|&g| !ok(element_order(&p.gr.group, g)))
        .map(|g| Witness::in_ring(s.ring(), &[p.gr.embed_group(g)]))
}

fn base_scalar_in_delta(p: &GroupRingParts, k: i64) -> bool {
    p.base.sets.delta.contains(p.base.ring.from_int(k))
}

fn rg_dt_required(s: &Subject) -> Option<Outcome> {
    (!s.is_dt()).then(|| Outcome::not_met("RG is not DT"))
}

pub(super) fn thm_3_1(s: &Subject) -> Result<Outcome> {
    let p = group_ring_or_not_met!(s);
    let g = &p.gr.group;
    if g.order() == 1 {
        return Ok(Outcome::not_met("trivial group"));
    }
    let one = s.ring().one();
    if let Some(x) = g
        .elements()
        .filter(|&x| x != g.identity())
        .find(|&x| !s.sets().delta.contains(s.ring().sub(one, p.gr.embed_group(x))))
    {
        return Ok(Outcome::not_met(format!(
            "1 - {} is not in Delta(RG)",
            g.name(x)
        )));
    }
    let Some(q) = group_prime(p) else {
        let w = group_witness(s, p, |o| is_power_of(o, prime_divisors(g.order() as u64)[0] as usize))
            .unwrap_or_else(|| Witness::in_ring(s.ring(), &[one]));
        return Ok(Outcome::fail(w, "G is not a p-group"));
    };
    if !base_scalar_in_delta(p, q as i64) {
        return Ok(Outcome::fail(
            Witness::in_ring(s.ring(), &[p.gr.embed_scalar(p.base.ring.from_int(q as i64))]),
            format!("G is a {q}-group but {q} is not in Delta(R)"),
        ));
    }
    Ok(Outcome::pass(format!("G is a {q}-group and {q} lies in Delta(R)")))
}

pub(super) fn lem_3_2(s: &Subject) -> Result<Outcome> {
    let p = group_ring_or_not_met!(s);
    match s
        .sets()
        .delta
        .iter()
        .find(|&d| !p.base.sets.delta.contains(p.gr.augmentation(d)))
    {
        Some(d) => Ok(Outcome::fail(
            Witness::in_ring(s.ring(), &[d]),
            "augmentation leaves Delta(R)",
        )),
        None => Ok(Outcome::pass(format!(
            "{} elements of Delta(RG) map into Delta(R)",
            s.sets().delta.len()
        ))),
    }
}

pub(super) fn lem_3_3(s: &Subject) -> Result<Outcome> {
    let p = group_ring_or_not_met!(s);
    let subgroups = all_subgroups(&p.gr.group);
    for h in &subgroups {
        let sub = p.gr.subgroup_ring(h, s.cap)?;
        let rh = s.analyse(sub.rh.ring.clone())?;
        let bad = s
            .sets()
            .delta
            .intersection(&sub.support)
            .iter()
            .find(|&x| sub.from_parent(x).is_none_or(|y| !rh.sets.delta.contains(y)));
        if let Some(x) = bad {
            return Ok(Outcome::fail(
                Witness::in_ring(s.ring(), &[x]),
                format!("in Delta(RG) and RH but not Delta(RH) for |H| = {}", h.order()),
            ));
        }
    }
    Ok(Outcome::pass(format!("{} subgroup(s) checked", subgroups.len())))
}

pub(super) fn lem_3_4(s: &Subject) -> Result<Outcome> {
    let p = group_ring_or_not_met!(s);
    let aug = augmentation_ideal(&p.gr)?;
    if let Some(x) = aug.first_outside(&s.sets().jacobson) {
        return Ok(Outcome::not_met(format!(
            "augmentation ideal not inside J(RG): {}",
            s.ring().name(x)
        )));
    }
    match s.ring().elements().find(|&x| {
        p.base.sets.units.contains(p.gr.augmentation(x)) && !s.sets().units.contains(x)
    }) {
        Some(x) => Ok(Outcome::fail(
            Witness::in_ring(s.ring(), &[x]),
            "augmentation is a unit but the element is not",
        )),
        None => Ok(Outcome::pass("unit augmentation implies unit")),
    }
}

pub(super) fn lem_3_5(s: &Subject) -> Result<Outcome> {
    let p = group_ring_or_not_met!(s);
    let base = &p.base;
    let primes: Vec<u64> = prime_divisors(base.ring.characteristic() as u64)
        .into_iter()
        .filter(|&q| base.sets.jacobson.contains(base.ring.from_int(q as i64)))
        .filter(|&q| is_p_group(&p.gr.group, q))
        .collect();
    if primes.is_empty() {
        return Ok(Outcome::not_met("no prime p with p in J(R) and G a p-group"));
    }
    let lifted = p.gr.with_coefficients_in(&base.sets.delta);
    match lifted.first_outside(&s.sets().delta) {
        Some(x) => Ok(Outcome::fail(
            Witness::in_ring(s.ring(), &[x]),
            "coefficients in Delta(R) but not in Delta(RG)",
        )),
        None => Ok(Outcome::pass(format!(
            "p = {primes:?}: {} elements of Delta(R)G lie in Delta(RG)",
            lifted.len()
        ))),
    }
}

pub(super) fn lem_3_6(s: &Subject) -> Result<Outcome> {
    let p = group_ring_or_not_met!(s);
    if let Some(o) = rg_dt_required(s) {
        return Ok(o);
    }
    if p.base_is_dt() {
        return Ok(Outcome::pass("R is DT"));
    }
    let x = is_dt(&p.base).verdict.witness.expect("non-DT has a witness");
    Ok(Outcome::fail(
        Witness::in_ring(s.ring(), &[p.gr.embed_scalar(x)]),
        "RG is DT but R is not",
    ))
}

pub(super) fn lem_3_8(s: &Subject) -> Result<Outcome> {
    let p = group_ring_or_not_met!(s);
    if let Some(o) = rg_dt_required(s) {
        return Ok(o);
    }
    let r = s.ring();
    let g = &p.gr.group;
    match g
        .elements()
        .map(|x| p.gr.embed_group(x))
        .find(|&x| !s.sets().delta.contains(r.sub(r.one(), r.mul(x, x))))
    {
        Some(x) => Ok(Outcome::fail(Witness::in_ring(r, &[x]), "1 - g^2 not in Delta(RG)")),
        None => Ok(Outcome::pass(format!("1 - g^2 in Delta(RG) for all {} g", g.order()))),
    }
}

pub(super) fn lem_3_9(s: &Subject) -> Result<Outcome> {
    let p = group_ring_or_not_met!(s);
    if let Some(o) = rg_dt_required(s) {
        return Ok(o);
    }
    let g = &p.gr.group;
    let exponent = g.elements().map(|x| element_order(g, x)).max().unwrap_or(1);
    debug_assert!(is_torsion(g));
    Ok(Outcome::pass(format!(
        "finite group of order {}, largest element order {exponent}",
        g.order()
    )))
}

pub(super) fn thm_3_10(s: &Subject) -> Result<Outcome> {
    let p = group_ring_or_not_met!(s);
    if let Some(o) = rg_dt_required(s) {
        return Ok(o);
    }
    if base_scalar_in_delta(p, 2) || base_scalar_in_delta(p, 3) {
        return Ok(Outcome::not_met("2 or 3 lies in Delta(R)"));
    }
    if is_elementary_2group(&p.gr.group) {
        return Ok(Outcome::pass("G is an elementary 2-group"));
    }
    let w = group_witness(s, p, |o| o <= 2).expect("non-elementary group has an element of order > 2");
    Ok(Outcome::fail(w, "G is not an elementary 2-group"))
}

pub(super) fn thm_3_11(s: &Subject) -> Result<Outcome> {
    let p = group_ring_or_not_met!(s);
    if let Some(o) = rg_dt_required(s) {
        return Ok(o);
    }
    if !base_scalar_in_delta(p, 2) {
        return Ok(Outcome::not_met("2 is not in Delta(R)"));
    }
    if is_p_group(&p.gr.group, 2) {
        return Ok(Outcome::pass("G is a 2-group"));
    }
    let w = group_witness(s, p, |o| is_power_of(o, 2)).expect("non-2-group has a witness");
    Ok(Outcome::fail(w, "G is not a 2-group"))
}

pub(super) fn thm_3_12(s: &Subject) -> Result<Outcome> {
    let p = group_ring_or_not_met!(s);
    if let Some(o) = rg_dt_required(s) {
        return Ok(o);
    }
    if !base_scalar_in_delta(p, 3) {
        return Ok(Outcome::not_met("3 is not in Delta(R)"));
    }
    let g = &p.gr.group;
    if g.order() == 1 {
        return Ok(Outcome::pass("G is trivial"));
    }
    let Some(q) = group_prime(p) else {
        return Ok(Outcome::not_met("G is not a p-group"));
    };
    if is_p_group(g, 3) || is_elementary_2group(g) {
        return Ok(Outcome::pass("G is a 3-group or an elementary 2-group"));
    }
    let w = if q == 2 {
        group_witness(s, p, |o| o <= 2)
    } else {
        group_witness(s, p, |o| is_power_of(o, 3))
    }
    .expect("a p-group that is neither kind has a witness");
    Ok(Outcome::fail(w, "G is neither a 3-group nor an elementary 2-group"))
}

fn lift_theorem(s: &Subject, k: i64) -> Result<Outcome> {
    let p = group_ring_or_not_met!(s);
    if !p.base_is_dt() {
        return Ok(Outcome::not_met("R is not DT"));
    }
    if !base_scalar_in_delta(p, k) {
        return Ok(Outcome::not_met(format!("{k} is not in Delta(R)")));
    }
    if !is_p_group(&p.gr.group, k as u64) {
        return Ok(Outcome::not_met(format!("G is not a {k}-group")));
    }
    match s.dt().verdict.witness {
        None => Ok(Outcome::pass("RG is DT")),
        Some(x) => Ok(Outcome::fail(
            Witness::in_ring(s.ring(), &[x]),
            "RG is not DT: element has no tripotent + Delta decomposition",
        )),
    }
}

pub(super) fn thm_3_13(s: &Subject) -> Result<Outcome> {
    lift_theorem(s, 2)
}

pub(super) fn cor_3_14(s: &Subject) -> Result<Outcome> {
    lift_theorem(s, 3)
}
