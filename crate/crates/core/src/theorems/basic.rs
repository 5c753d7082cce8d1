//! Checks for Δ itself and the elementary consequences of the DT property.

use crate::classify::is_dt;
use crate::construct::{ideal_generated, quotient_with_projection};
use crate::error::Result;
use crate::group::is_prime;
use crate::set::ElementSet;
use crate::sets::{audit_delta_closure, delta_forms};

use super::{Outcome, Subject, Witness};

/// Ideals contained in J: J itself and the ideal generated by each of its
/// nonzero elements, deduplicated.
pub(super) fn ideals_in_radical(s: &Subject) -> Vec<ElementSet> {
    let r = s.ring();
    let mut ideals = vec![s.sets().jacobson.clone()];
    for j in s.sets().jacobson.iter().filter(|&j| j != r.zero()) {
        let ideal = ideal_generated(r, &[j]);
        if !ideals.contains(&ideal) {
            ideals.push(ideal);
        }
    }
    ideals
}

fn dt_required(s: &Subject) -> Option<Outcome> {
    (!s.is_dt()).then(|| {
        Outcome::not_met(format!(
            "not DT: {} has no tripotent + Delta decomposition",
            s.ring().name(s.dt().verdict.witness.unwrap_or(0))
        ))
    })
}

pub(super) fn delta_basics(s: &Subject) -> Result<Outcome> {
    let r = s.ring();
    let sets = s.sets();
    let w = |xs: &[usize]| Witness::in_ring(r, xs);

    let forms = delta_forms(r, &sets.units);
    for (name, form) in [("x+u", &forms.translate), ("1-xu", &forms.right), ("1-ux", &forms.left)] {
        if let Some(x) = form
            .first_outside(&sets.delta)
            .or_else(|| sets.delta.first_outside(form))
        {
            return Ok(Outcome::fail(w(&[x]), format!("Delta form {name} disagrees at this element")));
        }
    }
    if let Some(x) = sets.jacobson.first_outside(&sets.delta) {
        return Ok(Outcome::fail(w(&[x]), "element of J outside Delta"));
    }
    if let Some(x) = sets.delta.intersection(&sets.units).iter().next() {
        return Ok(Outcome::fail(w(&[x]), "unit inside Delta"));
    }
    if let Some(x) = sets
        .delta
        .intersection(&sets.idempotents)
        .iter()
        .find(|&x| x != r.zero())
    {
        return Ok(Outcome::fail(w(&[x]), "nonzero idempotent inside Delta"));
    }
    if let Some(x) = sets.idempotents.first_outside(&sets.tripotents) {
        return Ok(Outcome::fail(w(&[x]), "idempotent that is not tripotent"));
    }
    for x in [r.zero(), r.one(), r.neg(r.one())] {
        if !sets.tripotents.contains(x) {
            return Ok(Outcome::fail(w(&[x]), "0, 1 or -1 is not tripotent"));
        }
    }
    if let Err(v) = audit_delta_closure(r, sets) {
        return Ok(Outcome::fail(w(&v.witness), format!("Delta not closed: {}", v.property)));
    }
    let ideals = ideals_in_radical(s);
    for ideal in &ideals {
        let q = quotient_with_projection(r, ideal)?;
        let qa = s.analyse(q.ring.clone())?;
        if let Some(d) = sets.delta.iter().find(|&d| !qa.sets.delta.contains(q.projection[d])) {
            return Ok(Outcome::fail(
                w(&[d]),
                format!("image in the quotient by an ideal of size {} leaves Delta", ideal.len()),
            ));
        }
    }
    Ok(Outcome::pass(format!(
        "|Delta| = {}, |J| = {}, {} ideal(s) inside J checked",
        sets.delta.len(),
        sets.jacobson.len(),
        ideals.len()
    )))
}

pub(super) fn lem_2_2(s: &Subject) -> Result<Outcome> {
    let r = s.ring();
    let mut checked = Vec::new();
    if let Some((a, b)) = &s.factors {
        let (da, db) = (is_dt(a), is_dt(b));
        let whole = s.is_dt();
        if whole != (da.holds() && db.holds()) {
            let witness = if !whole {
                Witness::in_ring(r, &[s.dt().verdict.witness.unwrap()])
            } else if !da.holds() {
                Witness::in_ring(&a.ring, &[da.verdict.witness.unwrap()])
            } else {
                Witness::in_ring(&b.ring, &[db.verdict.witness.unwrap()])
            };
            return Ok(Outcome::fail(
                witness,
                format!(
                    "product DT = {whole}, factors DT = ({}, {})",
                    da.holds(),
                    db.holds()
                ),
            ));
        }
        checked.push(format!("product DT = {whole} matches factors"));
    }
    if s.is_dt() {
        let ideals = ideals_in_radical(s);
        for ideal in &ideals {
            let q = quotient_with_projection(r, ideal)?;
            let qa = s.analyse(q.ring.clone())?;
            let qdt = is_dt(&qa);
            if let Some(c) = qdt.verdict.witness {
                return Ok(Outcome::fail(
                    Witness::in_ring(r, &[q.representatives[c]]),
                    format!("quotient by an ideal of size {} inside J is not DT", ideal.len()),
                ));
            }
        }
        checked.push(format!("{} quotient(s) by ideals inside J are DT", ideals.len()));
    }
    if checked.is_empty() {
        return Ok(dt_required(s).expect("non-DT here"));
    }
    Ok(Outcome::pass(checked.join("; ")))
}

pub(super) fn lem_2_3(s: &Subject) -> Result<Outcome> {
    let r = s.ring();
    let sets = s.sets();
    let two = r.from_int(2);
    let in_delta = |x: usize| sets.delta.contains(x);
    for f in sets.tripotents.iter() {
        let f2 = r.mul(f, f);
        let plus = r.add(f, f2);
        let minus = r.sub(f, f2);
        let two_f = r.mul(two, f);
        let idem = sets.idempotents.contains(f);
        for d in sets.delta.iter() {
            let mut products = vec![
                r.mul(plus, d),
                r.mul(minus, d),
                r.mul(d, plus),
                r.mul(d, minus),
                r.mul(two_f, d),
                r.mul(d, r.mul(two, f)),
            ];
            if idem {
                products.push(r.mul(r.mul(two, f), d));
                products.push(r.mul(r.mul(two, d), f));
            }
            if let Some(p) = products.into_iter().find(|&p| !in_delta(p)) {
                return Ok(Outcome::fail(
                    Witness::in_ring(r, &[f, d]),
                    format!("product {} leaves Delta", r.name(p)),
                ));
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{} tripotent x {} Delta pairs",
        sets.tripotents.len(),
        sets.delta.len()
    )))
}

pub(super) fn lem_2_4(s: &Subject) -> Result<Outcome> {
    if let Some(o) = dt_required(s) {
        return Ok(o);
    }
    let r = s.ring();
    let sets = s.sets();
    match r
        .elements()
        .find(|&a| sets.delta.contains(r.mul(a, a)) && !sets.delta.contains(a))
    {
        Some(a) => Ok(Outcome::fail(Witness::in_ring(r, &[a]), "a^2 in Delta but a is not")),
        None => Ok(Outcome::pass("square roots of Delta stay in Delta")),
    }
}

pub(super) fn cor_nil(s: &Subject) -> Result<Outcome> {
    if let Some(o) = dt_required(s) {
        return Ok(o);
    }
    let sets = s.sets();
    match sets.nilpotents.first_outside(&sets.delta) {
        Some(x) => Ok(Outcome::fail(Witness::in_ring(s.ring(), &[x]), "nilpotent outside Delta")),
        None => Ok(Outcome::pass(format!("{} nilpotents, all in Delta", sets.nilpotents.len()))),
    }
}

pub(super) fn lem_2_6(s: &Subject) -> Result<Outcome> {
    if let Some(o) = dt_required(s) {
        return Ok(o);
    }
    let r = s.ring();
    let sets = s.sets();
    for e in sets.idempotents.iter() {
        if let Some(x) = r
            .elements()
            .find(|&x| !sets.delta.contains(r.sub(r.mul(e, x), r.mul(x, e))))
        {
            return Ok(Outcome::fail(Witness::in_ring(r, &[e, x]), "er - re leaves Delta"));
        }
    }
    for f in sets.tripotents.iter() {
        for d in sets.delta.iter() {
            let (fd, df) = (r.mul(f, d), r.mul(d, f));
            if !sets.delta.contains(r.add(fd, df)) || !sets.delta.contains(r.sub(fd, df)) {
                return Ok(Outcome::fail(Witness::in_ring(r, &[f, d]), "fd +- df leaves Delta"));
            }
        }
    }
    Ok(Outcome::pass("commutators with idempotents and tripotents stay in Delta"))
}

pub(super) fn prop_2_7(s: &Subject) -> Result<Outcome> {
    if let Some(o) = dt_required(s) {
        return Ok(o);
    }
    let six = s.ring().from_int(6);
    if s.sets().delta.contains(six) {
        Ok(Outcome::pass(format!("6 = {} in Delta", s.ring().name(six))))
    } else {
        Ok(Outcome::fail(Witness::in_ring(s.ring(), &[six]), "6 not in Delta"))
    }
}

pub(super) fn cor_2_8(s: &Subject) -> Result<Outcome> {
    if let Some(o) = dt_required(s) {
        return Ok(o);
    }
    let six = s.ring().from_int(6);
    if s.sets().jacobson.contains(six) {
        Ok(Outcome::pass(format!("6 = {} in J", s.ring().name(six))))
    } else {
        Ok(Outcome::fail(Witness::in_ring(s.ring(), &[six]), "6 not in J"))
    }
}

pub(super) fn cor_2_9(s: &Subject) -> Result<Outcome> {
    if let Some(o) = dt_required(s) {
        return Ok(o);
    }
    let r = s.ring();
    let sets = s.sets();
    let (two, three) = (r.from_int(2), r.from_int(3));
    let first = sets.units.contains(two) == sets.jacobson.contains(three);
    let second = sets.units.contains(three) == sets.jacobson.contains(two);
    if !first || !second {
        return Ok(Outcome::fail(
            Witness::in_ring(r, &[two, three]),
            format!(
                "2 in U: {}, 3 in J: {}, 3 in U: {}, 2 in J: {}",
                sets.units.contains(two),
                sets.jacobson.contains(three),
                sets.units.contains(three),
                sets.jacobson.contains(two)
            ),
        ));
    }
    Ok(Outcome::pass(format!(
        "2 in U = 3 in J = {}; 3 in U = 2 in J = {}",
        sets.units.contains(two),
        sets.units.contains(three)
    )))
}

pub(super) fn cor_2_10(s: &Subject) -> Result<Outcome> {
    if let Some(o) = dt_required(s) {
        return Ok(o);
    }
    let r = s.ring();
    let bad = (5..=r.order() as u64)
        .filter(|&p| is_prime(p))
        .find(|&p| s.sets().delta.contains(r.from_int(p as i64)));
    match bad {
        Some(p) => Ok(Outcome::fail(
            Witness::in_ring(r, &[r.from_int(p as i64)]),
            format!("prime {p} lies in Delta"),
        )),
        None => Ok(Outcome::pass(format!(
            "no prime in 5..={} lies in Delta",
            r.order()
        ))),
    }
}
