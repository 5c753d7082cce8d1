//! Construction expressions for rings and groups, e.g. `GR(Z(2),C(4))`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::construct::{
    ideal_generated, make_matrix, make_product, make_quotient, make_upper_triangular, make_zn,
};
use crate::error::{Result, RingError};
use crate::group::{make_cyclic, make_elementary_abelian, make_group_product, GroupTable};
use crate::group_ring::{make_group_ring, GroupRing};
use crate::ring::RingTable;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Zn(usize),
    Prod(Box<RingExpr>, Box<RingExpr>),
    Matrix(usize, Box<RingExpr>),
    UpperTriangular(usize, Box<RingExpr>),
    GroupRing(Box<RingExpr>, GroupExpr),
    /// Quotient by the two-sided ideal generated by the listed elements.
    Quot(Box<RingExpr>, Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Cyclic(usize),
    Elementary(u64, usize),
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Z({n})"),
            RingExpr::Prod(a, b) => write!(f, "Prod({a},{b})"),
            RingExpr::Matrix(k, r) => write!(f, "M({k},{r})"),
            RingExpr::UpperTriangular(k, r) => write!(f, "UT({k},{r})"),
            RingExpr::GroupRing(r, g) => write!(f, "GR({r},{g})"),
            RingExpr::Quot(r, gens) => {
                let gens: Vec<String> = gens.iter().map(usize::to_string).collect();
                write!(f, "Quot({r},[{}])", gens.join(","))
            }
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C({n})"),
            GroupExpr::Elementary(p, k) => write!(f, "E({p},{k})"),
            GroupExpr::Product(a, b) => write!(f, "GProd({a},{b})"),
        }
    }
}

impl Serialize for RingExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn pow(base: u128, exp: usize) -> Option<u128> {
    base.checked_pow(u32::try_from(exp).ok()?)
}

impl GroupExpr {
    pub fn static_order(&self) -> Option<u128> {
        match self {
            GroupExpr::Cyclic(n) => Some(*n as u128),
            GroupExpr::Elementary(p, k) => pow(*p as u128, *k),
            GroupExpr::Product(a, b) => a.static_order()?.checked_mul(b.static_order()?),
        }
    }

    pub fn build(&self, cap: usize) -> Result<GroupTable> {
        match self {
            GroupExpr::Cyclic(n) => make_cyclic(*n, cap),
            GroupExpr::Elementary(p, k) => make_elementary_abelian(*p, *k, cap),
            GroupExpr::Product(a, b) => make_group_product(&a.build(cap)?, &b.build(cap)?, cap),
        }
    }
}

impl RingExpr {
    /// Exact order when it follows from the expression alone. Quotients
    /// depend on the ideal and return `None`; `Err` means overflow.
    pub fn static_order(&self) -> std::result::Result<Option<u128>, ()> {
        let inner = |e: &RingExpr| e.static_order();
        Ok(match self {
            RingExpr::Zn(n) => Some(*n as u128),
            RingExpr::Prod(a, b) => match (inner(a)?, inner(b)?) {
                (Some(x), Some(y)) => Some(x.checked_mul(y).ok_or(())?),
                _ => None,
            },
            RingExpr::Matrix(k, r) => match inner(r)? {
                Some(q) => Some(pow(q, k * k).ok_or(())?),
                None => None,
            },
            RingExpr::UpperTriangular(k, r) => match inner(r)? {
                Some(q) => Some(pow(q, k * (k + 1) / 2).ok_or(())?),
                None => None,
            },
            RingExpr::GroupRing(r, g) => match (inner(r)?, g.static_order()) {
                (Some(q), Some(m)) => Some(pow(q, usize::try_from(m).map_err(|_| ())?).ok_or(())?),
                (_, None) => return Err(()),
                _ => None,
            },
            RingExpr::Quot(..) => None,
        })
    }

    /// Reports the first subexpression whose statically known order exceeds
    /// `cap`.
    pub fn check_static_cap(&self, cap: usize) -> Result<()> {
        let over = |what: String, order: u128| RingError::SizeCap { what, order, cap };
        match self.static_order() {
            Err(()) => return Err(over(self.to_string(), u128::MAX)),
            Ok(Some(o)) if o > cap as u128 => return Err(over(self.to_string(), o)),
            _ => {}
        }
        match self {
            RingExpr::Zn(_) => Ok(()),
            RingExpr::Prod(a, b) => {
                a.check_static_cap(cap)?;
                b.check_static_cap(cap)
            }
            RingExpr::Matrix(_, r) | RingExpr::UpperTriangular(_, r) | RingExpr::Quot(r, _) => {
                r.check_static_cap(cap)
            }
            RingExpr::GroupRing(r, g) => {
                if let Some(o) = g.static_order().filter(|&o| o > cap as u128) {
                    return Err(over(g.to_string(), o));
                }
                r.check_static_cap(cap)
            }
        }
    }

    pub fn build(&self, cap: usize) -> Result<RingTable> {
        match self {
            RingExpr::Zn(n) => {
                crate::construct::check_cap(|| self.to_string(), Some(*n as u128), cap)?;
                make_zn(*n)
            }
            RingExpr::Prod(a, b) => make_product(&a.build(cap)?, &b.build(cap)?, cap),
            RingExpr::Matrix(k, r) => make_matrix(*k, &r.build(cap)?, cap),
            RingExpr::UpperTriangular(k, r) => make_upper_triangular(*k, &r.build(cap)?, cap),
            RingExpr::GroupRing(..) => Ok(self.build_group_ring(cap)?.expect("group ring").ring),
            RingExpr::Quot(r, gens) => {
                let base = r.build(cap)?;
                if let Some(&g) = gens.iter().find(|&&g| g >= base.order()) {
                    return Err(RingError::ElementOutOfRange {
                        element: g,
                        order: base.order(),
                    });
                }
                let ideal = ideal_generated(&base, gens);
                Ok(make_quotient(&base, &ideal)?.with_label(self.to_string()))
            }
        }
    }

    /// The group ring with its base ring and group, when the outermost
    /// constructor is `GR`.
    pub fn build_group_ring(&self, cap: usize) -> Result<Option<GroupRing>> {
        match self {
            RingExpr::GroupRing(r, g) => {
                if let Some(o) = self.static_order().ok().flatten() {
                    crate::construct::check_cap(|| self.to_string(), Some(o), cap)?;
                }
                Ok(Some(make_group_ring(&r.build(cap)?, &g.build(cap)?, cap)?))
            }
            _ => Ok(None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::DEFAULT_SIZE_CAP as CAP;

    fn gr(r: RingExpr, g: GroupExpr) -> RingExpr {
        RingExpr::GroupRing(Box::new(r), g)
    }

    #[test]
    fn labels_match_constructors() {
        let exprs = [
            RingExpr::Zn(4),
            RingExpr::Prod(Box::new(RingExpr::Zn(2)), Box::new(RingExpr::Zn(7))),
            RingExpr::Matrix(2, Box::new(RingExpr::Zn(2))),
            RingExpr::UpperTriangular(2, Box::new(RingExpr::Zn(3))),
            gr(RingExpr::Zn(2), GroupExpr::Elementary(2, 2)),
            gr(
                RingExpr::Zn(2),
                GroupExpr::Product(Box::new(GroupExpr::Cyclic(2)), Box::new(GroupExpr::Cyclic(2))),
            ),
            RingExpr::Quot(Box::new(RingExpr::Zn(6)), vec![2]),
        ];
        for e in exprs {
            assert_eq!(e.build(CAP).unwrap().label(), e.to_string());
        }
    }

    #[test]
    fn static_orders() {
        let e = gr(RingExpr::Zn(3), GroupExpr::Cyclic(9));
        assert_eq!(e.static_order(), Ok(Some(19683)));
        assert!(matches!(e.check_static_cap(CAP), Err(RingError::SizeCap { order: 19683, .. })));
        let q = RingExpr::Quot(Box::new(RingExpr::Zn(6)), vec![2]);
        assert_eq!(q.static_order(), Ok(None));
        assert_eq!(q.build(CAP).unwrap().order(), 2);
        let huge = RingExpr::Matrix(40, Box::new(RingExpr::Zn(1000)));
        assert!(huge.static_order().is_err());
    }

    #[test]
    fn quotient_generator_out_of_range() {
        let q = RingExpr::Quot(Box::new(RingExpr::Zn(6)), vec![7]);
        assert!(matches!(q.build(CAP), Err(RingError::ElementOutOfRange { .. })));
    }
}
