//! Finite groups as Cayley tables.

use std::collections::BTreeSet;
use std::fmt;

use crate::construct::check_cap;
use crate::error::{Result, RingError};

#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    op: Vec<u32>,
    identity: usize,
    inv: Vec<u32>,
    element_orders: Vec<usize>,
    label: String,
    names: Vec<String>,
}

impl GroupTable {
    /// Builds a group from a Cayley table, checking every group axiom.
    pub fn from_cayley(
        label: impl Into<String>,
        order: usize,
        op: Vec<u32>,
        names: Vec<String>,
    ) -> Result<Self> {
        let label = label.into();
        let bad = |msg: String| RingError::MalformedTable(format!("{label}: {msg}"));
        if order == 0 {
            return Err(RingError::InvalidOrder {
                order,
                reason: "a group has at least one element",
            });
        }
        if op.len() != order * order || names.len() != order {
            return Err(bad("table shape does not match the order".into()));
        }
        if op.iter().any(|&v| v as usize >= order) {
            return Err(bad("table entry out of range".into()));
        }
        let at = |a: usize, b: usize| op[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| bad("no identity element".into()))?;
        let mut inv = Vec::with_capacity(order);
        for x in 0..order {
            let y = (0..order)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or_else(|| bad(format!("element {x} has no inverse")))?;
            inv.push(y as u32);
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(bad(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        let element_orders = (0..order)
            .map(|x| {
                let mut p = x;
                let mut k = 1;
                while p != identity {
                    p = at(p, x);
                    k += 1;
                }
                k
            })
            .collect();
        Ok(Self {
            order,
            op,
            identity,
            inv,
            element_orders,
            label,
            names,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.op(acc, g))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.op(a, b) == self.op(b, a)))
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Cyclic group `C_n`; element `i` is `g^i`.
pub fn make_cyclic(n: usize, cap: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(RingError::InvalidOrder {
            order: 0,
            reason: "C(n) needs n >= 1",
        });
    }
    check_cap(|| format!("C({n})"), Some(n as u128), cap)?;
    let op = (0..n * n).map(|c| ((c / n + c % n) % n) as u32).collect();
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    GroupTable::from_cayley(format!("C({n})"), n, op, names)
}

/// Direct product; `(a, b)` has index `a * |g2| + b`.
pub fn make_group_product(g1: &GroupTable, g2: &GroupTable, cap: usize) -> Result<GroupTable> {
    let label = format!("GProd({},{})", g1.label(), g2.label());
    let order = check_cap(
        || label.clone(),
        (g1.order() as u128).checked_mul(g2.order() as u128),
        cap,
    )?;
    let m = g2.order();
    let op = (0..order * order)
        .map(|c| {
            let (x, y) = (c / order, c % order);
            (g1.op(x / m, y / m) * m + g2.op(x % m, y % m)) as u32
        })
        .collect();
    let names = (0..order)
        .map(|i| format!("({},{})", g1.name(i / m), g2.name(i % m)))
        .collect();
    GroupTable::from_cayley(label, order, op, names)
}

/// Elementary abelian group `(C_p)^k`, built as an iterated product of
/// `k >= 1` copies of `C_p`.
pub fn make_elementary_abelian(p: u64, k: usize, cap: usize) -> Result<GroupTable> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    if k == 0 {
        return Err(RingError::InvalidOrder {
            order: 0,
            reason: "E(p,k) needs k >= 1",
        });
    }
    let label = format!("E({p},{k})");
    check_cap(
        || label.clone(),
        (p as u128).checked_pow(u32::try_from(k).unwrap_or(u32::MAX)),
        cap,
    )?;
    let cp = make_cyclic(p as usize, cap)?;
    let mut acc = cp.clone();
    for _ in 1..k {
        acc = make_group_product(&acc, &cp, cap)?;
    }
    Ok(acc.relabel(label))
}

impl GroupTable {
    fn relabel(mut self, label: String) -> Self {
        self.label = label;
        self
    }
}

pub fn element_order(g: &GroupTable, x: usize) -> usize {
    g.element_orders[x]
}

pub(crate) fn is_power_of(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Every element order is a power of `p`.
pub fn is_p_group(g: &GroupTable, p: u64) -> bool {
    g.elements()
        .all(|x| is_power_of(element_order(g, x), p as usize))
}

/// Every non-identity element has order 2.
pub fn is_elementary_2group(g: &GroupTable) -> bool {
    g.elements().all(|x| element_order(g, x) <= 2)
}

/// Finite groups are torsion; kept as a named predicate for reporting.
pub fn is_torsion(_g: &GroupTable) -> bool {
    true
}

/// A subgroup as a standalone table plus its embedding into the parent.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub table: GroupTable,
    /// `embedding[h]` is the parent index of subgroup element `h`.
    pub embedding: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.table.order()
    }
}

/// Builds the subgroup on `members`, failing if they are not closed.
pub fn subgroup_from_elements(g: &GroupTable, members: &BTreeSet<usize>) -> Result<Subgroup> {
    if let Some(&x) = members.iter().find(|&&x| x >= g.order()) {
        return Err(RingError::NotASubgroup(format!("{x} is not an element of {}", g.label())));
    }
    if !members.contains(&g.identity()) {
        return Err(RingError::NotASubgroup("missing the identity".into()));
    }
    for &a in members {
        for &b in members {
            if !members.contains(&g.op(a, b)) {
                return Err(RingError::NotASubgroup(format!(
                    "{} * {} leaves the subset",
                    g.name(a),
                    g.name(b)
                )));
            }
        }
    }
    let embedding: Vec<usize> = members.iter().copied().collect();
    let m = embedding.len();
    let local = |x: usize| embedding.iter().position(|&e| e == x).unwrap();
    let op = (0..m * m)
        .map(|c| local(g.op(embedding[c / m], embedding[c % m])) as u32)
        .collect();
    let names = embedding.iter().map(|&x| g.name(x).to_string()).collect();
    let gens: Vec<&str> = embedding.iter().map(|&x| g.name(x)).collect();
    let table = GroupTable::from_cayley(format!("{}<{}>", g.label(), gens.join(",")), m, op, names)?;
    Ok(Subgroup { table, embedding })
}

/// Cyclic subgroup generated by `x`.
pub fn subgroup_generated(g: &GroupTable, x: usize) -> Result<Subgroup> {
    if x >= g.order() {
        return Err(RingError::NotASubgroup(format!("{x} is not an element of {}", g.label())));
    }
    subgroup_closure(g, &[x])
}

/// Subgroup generated by a set of elements.
pub fn subgroup_closure(g: &GroupTable, gens: &[usize]) -> Result<Subgroup> {
    subgroup_from_elements(g, &closure_members(g, gens))
}

fn closure_members(g: &GroupTable, gens: &[usize]) -> BTreeSet<usize> {
    let mut members: BTreeSet<usize> = BTreeSet::from([g.identity()]);
    let mut frontier: Vec<usize> = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.op(x, s);
            if members.insert(y) {
                frontier.push(y);
            }
        }
    }
    members
}

/// All subgroups of `g`, ordered by (size, member list).
pub fn all_subgroups(g: &GroupTable) -> Vec<Subgroup> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = vec![vec![g.identity()]];
    seen.insert(vec![g.identity()]);
    while let Some(current) = frontier.pop() {
        for x in g.elements() {
            if current.contains(&x) {
                continue;
            }
            let mut gens = current.clone();
            gens.push(x);
            let next: Vec<usize> = closure_members(g, &gens).into_iter().collect();
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    let mut all: Vec<Vec<usize>> = seen.into_iter().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all.into_iter()
        .map(|m| subgroup_from_elements(g, &m.into_iter().collect()).expect("closure is a subgroup"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 4096;

    fn order_profile(g: &GroupTable) -> Vec<usize> {
        let mut v: Vec<usize> = g.elements().map(|x| element_order(g, x)).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn cyclic_orders() {
        let c4 = make_cyclic(4, CAP).unwrap();
        assert_eq!(order_profile(&c4), vec![1, 2, 4, 4]);
        assert!(is_p_group(&c4, 2));
        assert!(!is_elementary_2group(&c4));
        let c1 = make_cyclic(1, CAP).unwrap();
        assert_eq!(c1.order(), 1);
        assert!(is_p_group(&c1, 5));
        assert!(make_cyclic(0, CAP).is_err());
    }

    #[test]
    fn products() {
        let c2 = make_cyclic(2, CAP).unwrap();
        let c3 = make_cyclic(3, CAP).unwrap();
        let c6 = make_group_product(&c2, &c3, CAP).unwrap();
        assert_eq!(order_profile(&c6), vec![1, 2, 3, 3, 6, 6]);
        assert!(!is_p_group(&c6, 2));
        assert!(!is_p_group(&c6, 3));
        let v4 = make_elementary_abelian(2, 2, CAP).unwrap();
        assert_eq!(v4.label(), "E(2,2)");
        assert_eq!(order_profile(&v4), vec![1, 2, 2, 2]);
        assert!(is_elementary_2group(&v4));
        assert!(matches!(make_elementary_abelian(4, 2, CAP), Err(RingError::NotPrime(4))));
        assert!(matches!(make_elementary_abelian(2, 13, CAP), Err(RingError::SizeCap { .. })));
    }

    #[test]
    fn subgroups() {
        let c4 = make_cyclic(4, CAP).unwrap();
        let h = subgroup_generated(&c4, 2).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(h.embedding, vec![0, 2]);
        let c6 = make_cyclic(6, CAP).unwrap();
        assert_eq!(subgroup_generated(&c6, 2).unwrap().order(), 3);
        let bad = BTreeSet::from([0, 1]);
        assert!(matches!(subgroup_from_elements(&c4, &bad), Err(RingError::NotASubgroup(_))));
        let v4 = make_elementary_abelian(2, 2, CAP).unwrap();
        let sizes: Vec<usize> = all_subgroups(&v4).iter().map(Subgroup::order).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 4]);
        let sizes: Vec<usize> = all_subgroups(&c6).iter().map(Subgroup::order).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);
    }

    #[test]
    fn primes() {
        assert_eq!(prime_divisors(12), vec![2, 3]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert!(is_prime(7) && !is_prime(9) && !is_prime(1));
    }
}
