//! Structure theory: cleanness, R/J, and the elementwise characterisations.

use crate::classify::{
    idempotents_central, is_clean, is_coverable, is_delta_u, is_di, is_reduced,
    is_semi_tripotent, is_uniquely_clean, quotient_by_radical, rj_factorization, DecompositionKind,
    Verdict,
};
use crate::construct::check_ideal;
use crate::error::Result;
use crate::sets::Analysis;

use super::{Outcome, Subject, Witness};

fn dt_required(s: &Subject) -> Option<Outcome> {
    (!s.is_dt()).then(|| Outcome::not_met("not DT"))
}

fn verdict_outcome(s: &Subject, v: Verdict, pass: &str, fail: &str) -> Outcome {
    match v.witness {
        None if v.holds => Outcome::pass(pass),
        w => Outcome::fail(Witness::in_ring(s.ring(), &[w.unwrap_or(s.ring().zero())]), fail),
    }
}

pub(super) fn lem_4_1(s: &Subject) -> Result<Outcome> {
    if let Some(o) = dt_required(s) {
        return Ok(o);
    }
    Ok(verdict_outcome(s, is_clean(&s.analysis), "clean", "not idempotent + unit"))
}

pub(super) fn lem_4_2(s: &Subject) -> Result<Outcome> {
    if let Some(o) = dt_required(s) {
        return Ok(o);
    }
    let q = quotient_by_radical(&s.analysis)?;
    match is_reduced(&q.ring).witness {
        None => Ok(Outcome::pass(format!("R/J of order {} is reduced", q.ring.order()))),
        Some(c) => Ok(Outcome::fail(
            Witness::in_ring(s.ring(), &[q.representatives[c]]),
            "nonzero nilpotent coset in R/J",
        )),
    }
}

pub(super) fn prop_4_3(s: &Subject) -> Result<Outcome> {
    if let Some(o) = dt_required(s) {
        return Ok(o);
    }
    let r = s.ring();
    let sets = s.sets();
    if !sets.units.contains(r.from_int(2)) {
        return Ok(Outcome::not_met("2 is not a unit"));
    }
    if let Err(why) = check_ideal(r, &sets.delta) {
        let w = sets
            .delta
            .iter()
            .flat_map(|d| r.elements().map(move |x| (d, x)))
            .find(|&(d, x)| !sets.delta.contains(r.mul(x, d)) || !sets.delta.contains(r.mul(d, x)))
            .map_or_else(|| vec![r.zero()], |(d, x)| vec![d, x]);
        return Ok(Outcome::fail(Witness::in_ring(r, &w), format!("Delta is not an ideal: {why}")));
    }
    if let Some(x) = sets
        .delta
        .first_outside(&sets.jacobson)
        .or_else(|| sets.jacobson.first_outside(&sets.delta))
    {
        return Ok(Outcome::fail(Witness::in_ring(r, &[x]), "Delta differs from J"));
    }
    Ok(Outcome::pass("Delta is an ideal equal to J"))
}

pub(super) fn prop_4_4(s: &Subject) -> Result<Outcome> {
    if let Some(o) = dt_required(s) {
        return Ok(o);
    }
    if !s.sets().units.contains(s.ring().from_int(3)) {
        return Ok(Outcome::not_met("3 is not a unit"));
    }
    Ok(verdict_outcome(s, is_di(&s.analysis), "every a = f + b with f idempotent, b in Delta", "not idempotent + Delta"))
}

pub(super) fn lem_4_5(s: &Subject) -> Result<Outcome> {
    if !is_di(&s.analysis).holds {
        return Ok(Outcome::not_met("not DI"));
    }
    let v = is_delta_u(&s.analysis);
    Ok(verdict_outcome(
        s,
        Verdict {
            holds: v.holds,
            witness: v.witness,
        },
        "1 + Delta = U",
        "1 + Delta differs from U",
    ))
}

pub(super) fn lem_4_6(s: &Subject) -> Result<Outcome> {
    let v = is_delta_u(&s.analysis);
    let detail = format!(
        "1 + Delta = U: {}, U + U in Delta: {}, U + U = Delta: {}",
        v.holds, v.unit_sums_in_delta, v.unit_sums_equal_delta
    );
    if v.conditions_agree() {
        return Ok(Outcome::pass(detail));
    }
    let r = s.ring();
    let units = &s.sets().units;
    // a sum of units witnessing the disagreement, else the ΔU witness
    let w = units
        .iter()
        .flat_map(|u| units.iter().map(move |v| (u, v)))
        .find(|&(u, v)| !s.sets().delta.contains(r.add(u, v)))
        .map_or_else(|| vec![v.witness.unwrap_or(r.zero())], |(u, v)| vec![u, v]);
    Ok(Outcome::fail(Witness::in_ring(r, &w), detail))
}

pub(super) fn cor_4_7(s: &Subject) -> Result<Outcome> {
    let a = &s.analysis;
    let uc = is_uniquely_clean(a);
    let di = is_di(a);
    let central = idempotents_central(s.ring(), s.sets());
    let rhs = di.holds && central.holds;
    let detail = format!(
        "uniquely clean: {}, DI: {}, central idempotents: {}",
        uc.holds, di.holds, central.holds
    );
    if uc.holds == rhs {
        return Ok(Outcome::pass(detail));
    }
    let w = uc.witness.or(di.witness).or(central.witness).unwrap_or(s.ring().zero());
    Ok(Outcome::fail(Witness::in_ring(s.ring(), &[w]), detail))
}

pub(super) fn thm_4_8(s: &Subject) -> Result<Outcome> {
    if let Some(o) = dt_required(s) {
        return Ok(o);
    }
    let f = rj_factorization(&s.analysis)?;
    let rep = |c: usize| f.reduced.representatives[c];
    let detail = format!(
        "|R/J| = {} = {} x {}",
        f.reduced.ring.order(),
        f.boolean_part.order(),
        f.yaqub_part.order()
    );
    if let Err(e) = &f.isomorphism {
        let w: Vec<usize> = e.witness.iter().map(|&c| rep(c)).collect();
        let w = if w.is_empty() { vec![s.ring().zero()] } else { w };
        return Ok(Outcome::fail(Witness::in_ring(s.ring(), &w), format!("{detail}: {}", e.reason)));
    }
    for (ok, part, class) in [
        (&f.boolean_ok, &f.boolean_part, "Boolean"),
        (&f.yaqub_ok, &f.yaqub_part, "Yaqub"),
    ] {
        if !ok.holds {
            let coset = ok.witness.unwrap_or(0);
            let name = part.ring().map_or("0", |r| r.name(coset)).to_string();
            return Ok(Outcome::fail(
                Witness::in_ring(s.ring(), &[s.ring().zero()]),
                format!("{detail}: factor is not {class} at {name}"),
            ));
        }
    }
    Ok(Outcome::pass(detail))
}

/// Runs every cover in `kinds` plus semi-tripotency, verifies each
/// certificate from scratch, and requires all verdicts to agree with DT.
fn equivalence(s: &Subject, kinds: &[DecompositionKind]) -> Result<Outcome> {
    let a: &Analysis = &s.analysis;
    let r = s.ring();
    let mut flags = vec![("DT", s.dt().verdict)];
    flags.push(("semi-tripotent", is_semi_tripotent(a)));
    let mut certified = 0;
    for &kind in kinds {
        let cv = if kind == DecompositionKind::TripotentDelta {
            s.dt().clone()
        } else {
            is_coverable(a, kind)
        };
        for c in cv.certificates.iter().flatten() {
            if !c.verify(r) {
                return Ok(Outcome::fail(
                    Witness::in_ring(r, &[c.target]),
                    format!("{kind} certificate fails re-verification"),
                ));
            }
            certified += 1;
        }
        if kind != DecompositionKind::TripotentDelta {
            flags.push((kind.as_str(), cv.verdict));
        }
    }
    let detail = flags
        .iter()
        .map(|(n, v)| format!("{n}: {}", v.holds))
        .collect::<Vec<_>>()
        .join(", ");
    if flags.iter().all(|(_, v)| v.holds == flags[0].1.holds) {
        return Ok(Outcome::pass(format!("{detail} ({certified} certificates verified)")));
    }
    let w = flags
        .iter()
        .find_map(|(_, v)| v.witness)
        .unwrap_or(r.zero());
    Ok(Outcome::fail(Witness::in_ring(r, &[w]), detail))
}

pub(super) fn cor_4_9(s: &Subject) -> Result<Outcome> {
    equivalence(s, &[])
}

pub(super) fn thm_4_10(s: &Subject) -> Result<Outcome> {
    equivalence(
        s,
        &[
            DecompositionKind::TripotentDelta,
            DecompositionKind::SumIdem,
            DecompositionKind::DiffIdemCommuting,
            DecompositionKind::DiffIdemOrth,
        ],
    )
}

pub(super) fn thm_4_11(s: &Subject) -> Result<Outcome> {
    equivalence(s, &[DecompositionKind::TripotentDelta, DecompositionKind::SquareIdem])
}

pub(super) fn thm_4_12(s: &Subject) -> Result<Outcome> {
    equivalence(s, &[DecompositionKind::TripotentDelta, DecompositionKind::IdemInvolution])
}

/// `∀a ∃e ∈ Tr: a³ − e ∈ J`
fn cube_premise(s: &Subject) -> Option<usize> {
    let r = s.ring();
    let sets = s.sets();
    r.elements().find(|&a| {
        let c = r.pow(a, 3);
        !sets.tripotents.iter().any(|e| sets.jacobson.contains(r.sub(c, e)))
    })
}

/// `∀a ∃e ∈ Id: a⁴ − e ∈ J`
fn fourth_power_premise(s: &Subject) -> Option<usize> {
    let r = s.ring();
    let sets = s.sets();
    r.elements().find(|&a| {
        let c = r.pow(a, 4);
        !sets.idempotents.iter().any(|e| sets.jacobson.contains(r.sub(c, e)))
    })
}

/// The two weakened premises do not imply DT: Z7 and Z5 satisfy one each
/// without being DT. Every DT ring satisfies both.
pub(super) fn remark_4(s: &Subject) -> Result<Outcome> {
    let r = s.ring();
    let label = s.label();
    let (name, premise) = match label {
        "Z(7)" => ("cube", cube_premise(s)),
        "Z(5)" => ("fourth-power", fourth_power_premise(s)),
        _ if s.is_dt() => {
            return Ok(match cube_premise(s).or_else(|| fourth_power_premise(s)) {
                None => Outcome::pass("DT ring satisfies both weakened premises"),
                Some(a) => Outcome::fail(Witness::in_ring(r, &[a]), "DT ring violates a weakened premise"),
            });
        }
        _ => return Ok(Outcome::not_met("not Z(5), Z(7), or a DT ring")),
    };
    if let Some(a) = premise {
        return Ok(Outcome::fail(Witness::in_ring(r, &[a]), format!("{name} premise fails")));
    }
    match s.dt().verdict.witness {
        Some(a) => Ok(Outcome::pass(format!(
            "{name} premise holds, yet {} has no tripotent + Delta decomposition",
            r.name(a)
        ))),
        None => Ok(Outcome::fail(
            Witness::in_ring(r, &[r.zero()]),
            format!("{name} premise holds and the ring is DT"),
        )),
    }
}
