//! Constructors for ℤₙ, products, matrix rings, ideals and quotients.

use std::collections::VecDeque;

use crate::error::{Result, RingError};
use crate::ring::RingTable;
use crate::set::ElementSet;

pub(crate) fn check_cap(what: impl FnOnce() -> String, order: Option<u128>, cap: usize) -> Result<usize> {
    match order {
        Some(o) if o <= cap as u128 => Ok(o as usize),
        Some(o) => Err(RingError::SizeCap {
            what: what(),
            order: o,
            cap,
        }),
        None => Err(RingError::SizeCap {
            what: what(),
            order: u128::MAX,
            cap,
        }),
    }
}

/// `base^exp` without overflow, or `None`.
pub(crate) fn checked_power(base: usize, exp: usize) -> Option<u128> {
    (base as u128).checked_pow(u32::try_from(exp).ok()?)
}

/// Little-endian mixed-radix digits of `index` in base `radix`.
pub(crate) fn decode_digits(mut index: usize, radix: usize, len: usize) -> Vec<usize> {
    let mut digits = Vec::with_capacity(len);
    for _ in 0..len {
        digits.push(index % radix);
        index /= radix;
    }
    digits
}

pub(crate) fn encode_digits(digits: &[usize], radix: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * radix + d)
}

/// The ring ℤ/nℤ with residues as element indices.
pub fn make_zn(n: usize) -> Result<RingTable> {
    if n < 2 {
        return Err(RingError::InvalidOrder {
            order: n,
            reason: "Z(n) needs n >= 2",
        });
    }
    RingTable::from_fns(
        format!("Z({n})"),
        n,
        0,
        1,
        (0..n).map(|x| x.to_string()).collect(),
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
    )
}

/// Direct product `a × b`; the pair `(x, y)` has index `x * |b| + y`.
pub fn make_product(a: &RingTable, b: &RingTable, cap: usize) -> Result<RingTable> {
    let label = format!("Prod({},{})", a.label(), b.label());
    let order = check_cap(
        || label.clone(),
        (a.order() as u128).checked_mul(b.order() as u128),
        cap,
    )?;
    let m = b.order();
    let names = (0..order)
        .map(|i| format!("({},{})", a.name(i / m), b.name(i % m)))
        .collect();
    RingTable::from_fns(
        label,
        order,
        a.zero() * m + b.zero(),
        a.one() * m + b.one(),
        names,
        |x, y| a.add(x / m, y / m) * m + b.add(x % m, y % m),
        |x, y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m),
    )
}

/// Projections of a product index onto its two factors.
pub fn product_projections(b_order: usize, x: usize) -> (usize, usize) {
    (x / b_order, x % b_order)
}

fn format_matrix(k: usize, entry: impl Fn(usize, usize) -> String) -> String {
    let rows: Vec<String> = (0..k)
        .map(|i| {
            let cols: Vec<String> = (0..k).map(|j| entry(i, j)).collect();
            format!("[{}]", cols.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// Full matrix ring `M_k(r)`; entries are little-endian mixed-radix digits
/// in row-major order.
pub fn make_matrix(k: usize, r: &RingTable, cap: usize) -> Result<RingTable> {
    if k == 0 {
        return Err(RingError::InvalidOrder {
            order: 0,
            reason: "matrix size must be at least 1",
        });
    }
    let label = format!("M({k},{})", r.label());
    let order = check_cap(|| label.clone(), checked_power(r.order(), k * k), cap)?;
    let q = r.order();
    let cells = k * k;
    let names = (0..order)
        .map(|i| {
            let d = decode_digits(i, q, cells);
            format_matrix(k, |row, col| r.name(d[row * k + col]).to_string())
        })
        .collect();
    let identity: Vec<usize> = (0..cells)
        .map(|c| if c / k == c % k { r.one() } else { r.zero() })
        .collect();
    let zero = encode_digits(&vec![r.zero(); cells], q);
    RingTable::from_fns(
        label,
        order,
        zero,
        encode_digits(&identity, q),
        names,
        |x, y| {
            let (dx, dy) = (decode_digits(x, q, cells), decode_digits(y, q, cells));
            let sum: Vec<usize> = dx.iter().zip(&dy).map(|(&a, &b)| r.add(a, b)).collect();
            encode_digits(&sum, q)
        },
        |x, y| {
            let (dx, dy) = (decode_digits(x, q, cells), decode_digits(y, q, cells));
            let mut prod = vec![r.zero(); cells];
            for i in 0..k {
                for j in 0..k {
                    let mut acc = r.zero();
                    for l in 0..k {
                        acc = r.add(acc, r.mul(dx[i * k + l], dy[l * k + j]));
                    }
                    prod[i * k + j] = acc;
                }
            }
            encode_digits(&prod, q)
        },
    )
}

/// Upper-triangular matrix ring `UT_k(r)`; the upper-triangle entries are
/// little-endian mixed-radix digits in row-major order.
pub fn make_upper_triangular(k: usize, r: &RingTable, cap: usize) -> Result<RingTable> {
    if k == 0 {
        return Err(RingError::InvalidOrder {
            order: 0,
            reason: "matrix size must be at least 1",
        });
    }
    let label = format!("UT({k},{})", r.label());
    let slots: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let order = check_cap(|| label.clone(), checked_power(r.order(), slots.len()), cap)?;
    let q = r.order();
    let s = slots.len();
    let slot_of = |i: usize, j: usize| slots.iter().position(|&p| p == (i, j));

    let names = (0..order)
        .map(|x| {
            let d = decode_digits(x, q, s);
            format_matrix(k, |i, j| match slot_of(i, j) {
                Some(pos) => r.name(d[pos]).to_string(),
                None => r.name(r.zero()).to_string(),
            })
        })
        .collect();
    let identity: Vec<usize> = slots
        .iter()
        .map(|&(i, j)| if i == j { r.one() } else { r.zero() })
        .collect();
    let zero = encode_digits(&vec![r.zero(); s], q);
    RingTable::from_fns(
        label,
        order,
        zero,
        encode_digits(&identity, q),
        names,
        |x, y| {
            let (dx, dy) = (decode_digits(x, q, s), decode_digits(y, q, s));
            let sum: Vec<usize> = dx.iter().zip(&dy).map(|(&a, &b)| r.add(a, b)).collect();
            encode_digits(&sum, q)
        },
        |x, y| {
            let (dx, dy) = (decode_digits(x, q, s), decode_digits(y, q, s));
            let prod: Vec<usize> = slots
                .iter()
                .map(|&(i, j)| {
                    (i..=j).fold(r.zero(), |acc, l| {
                        let a = dx[slot_of(i, l).unwrap()];
                        let b = dy[slot_of(l, j).unwrap()];
                        r.add(acc, r.mul(a, b))
                    })
                })
                .collect();
            encode_digits(&prod, q)
        },
    )
}

/// Smallest two-sided ideal containing `gens`, by worklist closure.
///
/// Each element popped from the worklist is multiplied on both sides by every
/// ring element and added to every member already present, so the result is
/// closed under addition and two-sided multiplication (additive inverses
/// follow because the additive group is finite).
pub fn ideal_generated(r: &RingTable, gens: &[usize]) -> ElementSet {
    closure(r, gens, true)
}

/// Additive subgroup generated by `gens`.
pub fn additive_span(r: &RingTable, gens: &[usize]) -> ElementSet {
    closure(r, gens, false)
}

fn closure(r: &RingTable, gens: &[usize], two_sided: bool) -> ElementSet {
    let mut members = ElementSet::empty(r.order());
    let mut order_added = Vec::new();
    let mut queue = VecDeque::new();
    let push = |x: usize, members: &mut ElementSet, order_added: &mut Vec<usize>, queue: &mut VecDeque<usize>| {
        if members.insert(x) {
            order_added.push(x);
            queue.push_back(x);
        }
    };
    push(r.zero(), &mut members, &mut order_added, &mut queue);
    for &g in gens {
        push(g, &mut members, &mut order_added, &mut queue);
    }
    while let Some(x) = queue.pop_front() {
        if two_sided {
            for a in r.elements() {
                push(r.mul(a, x), &mut members, &mut order_added, &mut queue);
                push(r.mul(x, a), &mut members, &mut order_added, &mut queue);
            }
        }
        let snapshot = order_added.len();
        for i in 0..snapshot {
            let s = order_added[i];
            push(r.add(s, x), &mut members, &mut order_added, &mut queue);
        }
    }
    members
}

/// Checks that `set` is a two-sided ideal, returning a description of the
/// first violation.
pub fn check_ideal(r: &RingTable, set: &ElementSet) -> std::result::Result<(), String> {
    if set.order() != r.order() {
        return Err(format!(
            "set lives in a ring of order {}, not {}",
            set.order(),
            r.order()
        ));
    }
    if !set.contains(r.zero()) {
        return Err("does not contain zero".into());
    }
    let members = set.to_vec();
    for &x in &members {
        if !set.contains(r.neg(x)) {
            return Err(format!("not closed under negation at {}", r.name(x)));
        }
        for &y in &members {
            if !set.contains(r.add(x, y)) {
                return Err(format!(
                    "not closed under addition at ({}, {})",
                    r.name(x),
                    r.name(y)
                ));
            }
        }
        for a in r.elements() {
            if !set.contains(r.mul(a, x)) || !set.contains(r.mul(x, a)) {
                return Err(format!(
                    "not closed under multiplication by {} at {}",
                    r.name(a),
                    r.name(x)
                ));
            }
        }
    }
    Ok(())
}

/// A quotient ring together with the canonical surjection onto it.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: RingTable,
    /// `projection[x]` is the coset of `x` in `ring`.
    pub projection: Vec<usize>,
    /// `representatives[c]` is the smallest element index in coset `c`.
    pub representatives: Vec<usize>,
}

/// Quotient `r / ideal`; cosets are indexed in increasing order of their
/// smallest member.
pub fn make_quotient(r: &RingTable, ideal: &ElementSet) -> Result<RingTable> {
    quotient_with_projection(r, ideal).map(|q| q.ring)
}

pub fn quotient_with_projection(r: &RingTable, ideal: &ElementSet) -> Result<Quotient> {
    check_ideal(r, ideal).map_err(RingError::NotAnIdeal)?;
    if ideal.len() == r.order() {
        return Err(RingError::TrivialQuotient);
    }
    let members = ideal.to_vec();
    let n = r.order();
    let rep_of: Vec<usize> = (0..n)
        .map(|x| members.iter().map(|&i| r.add(x, i)).min().unwrap())
        .collect();
    let mut representatives: Vec<usize> = rep_of.clone();
    representatives.sort_unstable();
    representatives.dedup();
    let m = representatives.len();
    let mut coset_index = vec![usize::MAX; n];
    for (c, &rep) in representatives.iter().enumerate() {
        coset_index[rep] = c;
    }
    let projection: Vec<usize> = rep_of.iter().map(|&rep| coset_index[rep]).collect();

    let label = format!("{}/({})", r.label(), ideal_label(r, ideal));
    let names = representatives
        .iter()
        .map(|&rep| format!("[{}]", r.name(rep)))
        .collect();
    let ring = RingTable::from_fns(
        label,
        m,
        projection[r.zero()],
        projection[r.one()],
        names,
        |a, b| projection[r.add(representatives[a], representatives[b])],
        |a, b| projection[r.mul(representatives[a], representatives[b])],
    )?;
    Ok(Quotient {
        ring,
        projection,
        representatives,
    })
}

fn ideal_label(r: &RingTable, ideal: &ElementSet) -> String {
    if ideal.len() <= 8 {
        ideal
            .iter()
            .map(|x| r.name(x).to_string())
            .collect::<Vec<_>>()
            .join(",")
    } else {
        format!("{} elements", ideal.len())
    }
}
