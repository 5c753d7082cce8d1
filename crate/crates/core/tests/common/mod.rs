#![allow(dead_code)]

use dtring_core::{GroupExpr, RingExpr};

pub fn z(n: usize) -> RingExpr {
    RingExpr::Zn(n)
}

pub fn prod(a: RingExpr, b: RingExpr) -> RingExpr {
    RingExpr::Prod(Box::new(a), Box::new(b))
}

pub fn mat(k: usize, r: RingExpr) -> RingExpr {
    RingExpr::Matrix(k, Box::new(r))
}

pub fn ut(k: usize, r: RingExpr) -> RingExpr {
    RingExpr::UpperTriangular(k, Box::new(r))
}

pub fn gr(r: RingExpr, g: GroupExpr) -> RingExpr {
    RingExpr::GroupRing(Box::new(r), g)
}

pub fn quot(r: RingExpr, gens: &[usize]) -> RingExpr {
    RingExpr::Quot(Box::new(r), gens.to_vec())
}

pub fn c(n: usize) -> GroupExpr {
    GroupExpr::Cyclic(n)
}

pub fn gprod(a: GroupExpr, b: GroupExpr) -> GroupExpr {
    GroupExpr::Product(Box::new(a), Box::new(b))
}

/// The shipped default corpus, built by hand.
pub fn default_corpus() -> Vec<RingExpr> {
    let mut v: Vec<RingExpr> = [2, 3, 4, 5, 6, 7, 8, 9, 12, 16].into_iter().map(z).collect();
    v.extend([
        prod(z(2), z(2)),
        prod(z(2), z(7)),
        ut(2, z(2)),
        ut(2, z(3)),
        mat(2, z(2)),
        gr(z(2), c(2)),
        gr(z(2), c(4)),
        gr(z(2), gprod(c(2), c(2))),
        gr(z(3), c(3)),
        gr(z(4), c(2)),
        gr(z(2), c(3)),
        gr(z(4), c(4)),
        gr(z(3), c(2)),
        gr(z(6), c(2)),
        quot(z(9), &[3]),
        quot(z(9), &[0]),
        quot(z(12), &[6]),
        quot(ut(2, z(2)), &[2]),
    ]);
    v
}
