//! Finite unital rings stored as explicit addition and multiplication tables.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, RingError};

/// Default maximum ring order accepted by the constructors.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// A finite unital ring on the element indices `0..order`.
///
/// Tables are row-major: `add[a * order + b]` is the index of `a + b`.
/// The value is immutable once built, so it can be shared freely across
/// threads.
#[derive(Clone, PartialEq, Eq)]
pub struct RingTable {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    label: String,
    names: Vec<String>,
}

impl RingTable {
    /// Builds a ring from raw tables.
    ///
    /// Only the cheap structural checks run here (shape, index range, the
    /// additive and multiplicative identities, existence of negatives, and
    /// `zero != one`). The full axiom check is [`verify_ring_axioms`].
    pub fn from_tables(
        label: impl Into<String>,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        names: Vec<String>,
    ) -> Result<Self> {
        let label = label.into();
        if order < 2 {
            return Err(RingError::InvalidOrder {
                order,
                reason: "a unital ring with 0 != 1 has at least two elements",
            });
        }
        let cells = order * order;
        if add.len() != cells || mul.len() != cells {
            return Err(RingError::MalformedTable(format!(
                "{label}: expected {cells} cells per table"
            )));
        }
        if names.len() != order {
            return Err(RingError::MalformedTable(format!(
                "{label}: expected {order} element names, got {}",
                names.len()
            )));
        }
        if let Some(bad) = add.iter().chain(&mul).find(|&&v| v as usize >= order) {
            return Err(RingError::MalformedTable(format!(
                "{label}: table entry {bad} out of range"
            )));
        }
        if zero >= order || one >= order {
            return Err(RingError::MalformedTable(format!(
                "{label}: identity index out of range"
            )));
        }
        if zero == one {
            return Err(RingError::MalformedTable(format!("{label}: zero equals one")));
        }
        for x in 0..order {
            if add[zero * order + x] as usize != x || add[x * order + zero] as usize != x {
                return Err(RingError::MalformedTable(format!(
                    "{label}: {zero} is not an additive identity at {x}"
                )));
            }
            if mul[one * order + x] as usize != x || mul[x * order + one] as usize != x {
                return Err(RingError::MalformedTable(format!(
                    "{label}: {one} is not a multiplicative identity at {x}"
                )));
            }
        }
        let mut neg = Vec::with_capacity(order);
        for x in 0..order {
            let row = &add[x * order..(x + 1) * order];
            match row.iter().position(|&s| s as usize == zero) {
                Some(y) => neg.push(y as u32),
                None => {
                    return Err(RingError::MalformedTable(format!(
                        "{label}: element {x} has no additive inverse"
                    )))
                }
            }
        }
        Ok(Self {
            order,
            add,
            mul,
            neg,
            zero,
            one,
            label,
            names,
        })
    }

    /// Builds a ring from closures over element indices.
    pub(crate) fn from_fns(
        label: impl Into<String>,
        order: usize,
        zero: usize,
        one: usize,
        names: Vec<String>,
        add: impl Fn(usize, usize) -> usize + Sync,
        mul: impl Fn(usize, usize) -> usize + Sync,
    ) -> Result<Self> {
        let build = |f: &(dyn Fn(usize, usize) -> usize + Sync)| -> Vec<u32> {
            (0..order * order)
                .into_par_iter()
                .map(|cell| f(cell / order, cell % order) as u32)
                .collect()
        };
        let add_table = build(&add);
        let mul_table = build(&mul);
        Self::from_tables(label, order, add_table, mul_table, zero, one, names)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// Construction expression this ring was built from, e.g. `UT(2,Z(2))`.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// The element `k·1`, for any integer `k`.
    pub fn from_int(&self, k: i64) -> usize {
        let unit = if k < 0 { self.neg(self.one) } else { self.one };
        let mut acc = self.zero;
        for _ in 0..k.unsigned_abs() {
            acc = self.add(acc, unit);
        }
        acc
    }

    /// `k·x` for a non-negative integer `k`.
    pub fn scale(&self, k: u64, x: usize) -> usize {
        let mut acc = self.zero;
        for _ in 0..k {
            acc = self.add(acc, x);
        }
        acc
    }

    pub fn pow(&self, x: usize, k: u32) -> usize {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Additive order of the identity, i.e. the characteristic.
    pub fn characteristic(&self) -> usize {
        let mut acc = self.one;
        let mut n = 1;
        while acc != self.zero {
            acc = self.add(acc, self.one);
            n += 1;
        }
        n
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub(crate) fn with_label(mut self, label: String) -> Self {
        self.label = label;
        self
    }
}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingTable")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// Ring axiom that failed in [`verify_ring_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    AdditiveIdentity,
    AdditiveInverse,
    AdditiveCommutativity,
    AdditiveAssociativity,
    MultiplicativeIdentity,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
    ZeroIsOne,
}

/// First failing instance of a ring axiom, with the elements involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

/// Exhaustively checks every ring axiom.
///
/// Associativity and distributivity are `O(order^3)`; the outer element is
/// split across worker threads and the lowest failing triple is reported.
pub fn verify_ring_axioms(r: &RingTable) -> std::result::Result<(), AxiomViolation> {
    let n = r.order();
    let fail = |axiom, witness: Vec<usize>| Err(AxiomViolation { axiom, witness });

    if r.zero() == r.one() {
        return fail(Axiom::ZeroIsOne, vec![r.zero()]);
    }
    for x in 0..n {
        if r.add(r.zero(), x) != x || r.add(x, r.zero()) != x {
            return fail(Axiom::AdditiveIdentity, vec![x]);
        }
        if r.add(x, r.neg(x)) != r.zero() || r.add(r.neg(x), x) != r.zero() {
            return fail(Axiom::AdditiveInverse, vec![x]);
        }
        if r.mul(r.one(), x) != x || r.mul(x, r.one()) != x {
            return fail(Axiom::MultiplicativeIdentity, vec![x]);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if r.add(a, b) != r.add(b, a) {
                return fail(Axiom::AdditiveCommutativity, vec![a, b]);
            }
        }
    }

    let found = (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            let ab_sum = r.add(a, b);
            let ab_prod = r.mul(a, b);
            for c in 0..n {
                if r.add(ab_sum, c) != r.add(a, r.add(b, c)) {
                    return Some((Axiom::AdditiveAssociativity, [a, b, c]));
                }
                if r.mul(ab_prod, c) != r.mul(a, r.mul(b, c)) {
                    return Some((Axiom::MultiplicativeAssociativity, [a, b, c]));
                }
                if r.mul(a, r.add(b, c)) != r.add(ab_prod, r.mul(a, c)) {
                    return Some((Axiom::LeftDistributivity, [a, b, c]));
                }
                if r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)) {
                    return Some((Axiom::RightDistributivity, [a, b, c]));
                }
            }
        }
        None
    });
    match found {
        Some((axiom, triple)) => fail(axiom, triple.to_vec()),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::make_zn;

    #[test]
    fn from_tables_rejects_missing_identity() {
        let z3 = make_zn(3).unwrap();
        let mut mul = z3.mul_table().to_vec();
        mul[3 + 2] = 0; // 1*2 := 0
        let err = RingTable::from_tables(
            "bad",
            3,
            z3.add_table().to_vec(),
            mul,
            0,
            1,
            z3.names().to_vec(),
        )
        .unwrap_err();
        assert!(matches!(err, RingError::MalformedTable(_)));
    }

    #[test]
    fn from_tables_rejects_single_element() {
        let err = RingTable::from_tables("zero", 1, vec![0], vec![0], 0, 0, vec!["0".into()])
            .unwrap_err();
        assert!(matches!(err, RingError::InvalidOrder { .. }));
    }

    #[test]
    fn corrupted_cell_fails_with_triple() {
        let z5 = make_zn(5).unwrap();
        let mut mul = z5.mul_table().to_vec();
        mul[2 * 5 + 3] = 4; // 2*3 := 4 instead of 1
        let bad = RingTable::from_tables(
            "corrupt",
            5,
            z5.add_table().to_vec(),
            mul,
            0,
            1,
            z5.names().to_vec(),
        )
        .unwrap();
        let violation = verify_ring_axioms(&bad).unwrap_err();
        assert_eq!(violation.witness.len(), 3);
        let [a, b, c] = [violation.witness[0], violation.witness[1], violation.witness[2]];
        let holds = match violation.axiom {
            Axiom::MultiplicativeAssociativity => bad.mul(bad.mul(a, b), c) == bad.mul(a, bad.mul(b, c)),
            Axiom::LeftDistributivity => bad.mul(a, bad.add(b, c)) == bad.add(bad.mul(a, b), bad.mul(a, c)),
            Axiom::RightDistributivity => bad.mul(bad.add(a, b), c) == bad.add(bad.mul(a, c), bad.mul(b, c)),
            other => panic!("unexpected axiom {other:?}"),
        };
        assert!(!holds, "witness must reproduce the failure");
    }

    #[test]
    fn integer_multiples() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(z6.from_int(6), 0);
        assert_eq!(z6.from_int(-1), 5);
        assert_eq!(z6.from_int(9), 3);
        assert_eq!(z6.characteristic(), 6);
        assert_eq!(z6.pow(5, 2), 1);
    }
}
